//! Presenting a subgroup from a covering complex.
//!
//! Reading the covering complex along a spanning tree presents the subgroup
//! the cover was built from. For free groups this exhibits the
//! Nielsen-Schreier theorem: an index-n subgroup of a free group of rank g
//! is free of rank n(g-1)+1.

use fpgroups::cosets::{todd_coxeter, SubgroupSpec};
use fpgroups::covers::{build_cover, simplify, subgroup_presentation};
use fpgroups::homology::abelianization;
use fpgroups::parse::{parse_presentation, parse_words};

fn main() -> fpgroups::Result<()> {
    // Index-2 subgroup of the free group on a, b: free of rank 3.
    let f2 = parse_presentation("<a, b |>")?;
    let spec = SubgroupSpec::new(parse_words("b; a b a^-1; a^2", &f2)?);
    let table = todd_coxeter(&f2, &spec, 1000)?;
    let cover = build_cover(&f2, &table)?;
    let subgroup = subgroup_presentation(&cover)?;
    println!("index-2 subgroup of the rank-2 free group: {subgroup}");

    // The tower of index-n subgroups <b, a b a^-1, ..., a^n>: rank n+1.
    println!("\nNielsen-Schreier ranks over the rank-2 free group:");
    for n in 2..=5usize {
        let conjugates: Vec<String> = (0..n).map(|i| format!("a^{i} b a^-{i}")).collect();
        let words = format!("{}; a^{n}", conjugates.join("; "));
        let spec = SubgroupSpec::new(parse_words(&words, &f2)?);
        let table = todd_coxeter(&f2, &spec, 1000)?;
        let subgroup = subgroup_presentation(&build_cover(&f2, &table)?)?;
        println!(
            "  index {n}: free of rank {} = {n}*(2-1)+1",
            subgroup.generator_count()
        );
        assert_eq!(subgroup.generator_count(), n + 1);
        assert_eq!(subgroup.relator_count(), 0);
    }

    // A finite example: the subgroup generated by a^2 in the cyclic group of
    // order 6. The raw reading has redundant relators; simplification by
    // elementary moves tidies it to a presentation of Z/3.
    let z6 = parse_presentation("<a | a^6>")?;
    let spec = SubgroupSpec::new(parse_words("a^2", &z6)?);
    let table = todd_coxeter(&z6, &spec, 1000)?;
    let raw = subgroup_presentation(&build_cover(&z6, &table)?)?;
    let tidy = simplify(&raw);
    println!("\nsubgroup <a^2> of Z6:");
    println!("  raw reading:  {raw}");
    println!("  simplified:   {tidy}");
    println!("  abelianized:  {}", abelianization(&tidy));
    Ok(())
}
