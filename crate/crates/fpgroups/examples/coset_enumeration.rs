//! Coset enumeration: the right action of a group on the cosets of a
//! subgroup, computed from a presentation by the Todd-Coxeter procedure.

use fpgroups::cosets::{todd_coxeter, CosetTable, SubgroupSpec};
use fpgroups::error::Error;
use fpgroups::parse::{parse_presentation, parse_word, parse_words};
use fpgroups::words::Presentation;

fn print_table(p: &Presentation, t: &CosetTable) {
    let mut header = String::from("        ");
    for name in p.generator_names() {
        header.push_str(&format!("{name:>6}{:>6}", format!("{name}^-1")));
    }
    println!("{header}");
    for (c, row) in t.rows().iter().enumerate() {
        let cells: String = row.iter().map(|x| format!("{x:>6}")).collect();
        println!("  {c:>4}  {cells}");
    }
}

fn main() -> fpgroups::Result<()> {
    // Enumerating the cosets of the trivial subgroup lists the whole group:
    // the table is the multiplication-by-generator action on all 6 elements
    // of S3.
    let s3 = parse_presentation("<a, b | a^2, b^2, (a b)^3>")?;
    let regular = todd_coxeter(&s3, &SubgroupSpec::empty(), 1000)?;
    println!("S3 acting on itself ({} cosets):", regular.coset_count());
    print_table(&s3, &regular);

    // The subgroup generated by a has index 3; cosets are numbered in the
    // order they are first reached, coset 0 is the subgroup itself.
    let subgroup = SubgroupSpec::new(parse_words("a", &s3)?);
    let table = todd_coxeter(&s3, &subgroup, 1000)?;
    println!("\nCosets of <a> in S3 ({} of them):", table.coset_count());
    print_table(&s3, &table);

    // Words act on cosets by tracing the table letter by letter.
    let w = parse_word("b a b", &s3)?;
    println!(
        "\nthe word b a b sends coset 0 to coset {}",
        table.trace(0, &w)?
    );

    // Every relator fixes every coset, and the subgroup words fix coset 0;
    // validate re-checks all of that plus canonical numbering.
    table.validate(&s3)?;
    println!("table validates");

    // Enumerations that cannot finish within the coset limit report it
    // instead of running forever: the subgroup <a> of the free group on a, b
    // has infinitely many cosets.
    let f2 = parse_presentation("<a, b |>")?;
    let infinite = SubgroupSpec::new(parse_words("a", &f2)?);
    match todd_coxeter(&f2, &infinite, 100) {
        Err(Error::CosetLimitExceeded { limit }) => {
            println!("\nenumeration over the free group stopped at the limit of {limit} cosets");
        }
        other => panic!("expected the limit to trip, got {other:?}"),
    }
    Ok(())
}
