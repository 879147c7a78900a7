//! Words in free groups and the three ways to combine presentations:
//! free products, direct products, and amalgamated products.

use fpgroups::parse::{format_word, parse_generator_map, parse_presentation, parse_word};

fn main() -> fpgroups::Result<()> {
    // Words are written in the generators of a presentation and kept freely
    // reduced: adjacent inverse pairs cancel automatically.
    let f2 = parse_presentation("<a, b |>")?;
    let u = parse_word("a b b^-1 a", &f2)?;
    let v = parse_word("a^-2 b", &f2)?;
    println!("u            = {}", format_word(&u, f2.generator_names()));
    println!("v            = {}", format_word(&v, f2.generator_names()));
    println!(
        "u v          = {}",
        format_word(&u.product(&v)?, f2.generator_names())
    );
    println!(
        "u^-1         = {}",
        format_word(&u.inverse(), f2.generator_names())
    );
    println!("(u v) v^-1   = {}", {
        let w = u.product(&v)?.product(&v.inverse())?;
        format_word(&w, f2.generator_names())
    });

    // Conjugates cyclically reduce to their core.
    let conjugate = parse_word("b a b a^-1 b^-1", &f2)?;
    println!(
        "cyclic core of {} is {}",
        format_word(&conjugate, f2.generator_names()),
        format_word(&conjugate.cyclic_reduce(), f2.generator_names()),
    );

    // Free product: disjoint generators, all relators kept.
    let z2 = parse_presentation("<a | a^2>")?;
    let z3 = parse_presentation("<b | b^3>")?;
    println!("\nZ2 * Z3      = {}", z2.free_product(&z3));

    // Direct product: additionally every generator of one factor commutes
    // with every generator of the other.
    println!("Z2 x Z3      = {}", z2.direct_product(&z3));

    // Amalgamated product: glue two groups along a common subgroup. Gluing
    // two infinite cyclic groups along a^2 = b^3 produces the trefoil knot
    // group.
    let za = parse_presentation("<a |>")?;
    let zb = parse_presentation("<b |>")?;
    let axis = parse_presentation("<h |>")?;
    let f1 = parse_generator_map("h = a^2", &axis, &za)?;
    let f2 = parse_generator_map("h = b^3", &axis, &zb)?;
    let trefoil = za.amalgamated_product(&zb, &axis, &f1, &f2)?;
    println!("Z *_(a^2=b^3) Z = {trefoil}");
    Ok(())
}
