//! Covering complexes built from coset tables.
//!
//! A coset table of index n turns the presentation complex into an n-sheeted
//! cover: one vertex per coset, one edge per (coset, generator), one face per
//! (coset, relator). Cell counts scale exactly by n, and so does the Euler
//! characteristic.

use fpgroups::cosets::{todd_coxeter, SubgroupSpec};
use fpgroups::covers::{build_cover, fiber_size};
use fpgroups::parse::{parse_presentation, parse_words};

fn main() -> fpgroups::Result<()> {
    // The double cover of the torus determined by the subgroup <a^2, b>.
    let torus = parse_presentation("<a, b | [a, b]>")?;
    let subgroup = SubgroupSpec::new(parse_words("a^2; b", &torus)?);
    let table = todd_coxeter(&torus, &subgroup, 1000)?;
    let cover = build_cover(&torus, &table)?;

    let base = cover.base();
    let total = cover.total();
    println!("double cover of the torus:");
    println!(
        "  base:  {} vertex, {} edges, {} faces (Euler characteristic {})",
        base.vertex_count(),
        base.edge_count(),
        base.face_count(),
        base.euler_characteristic()
    );
    println!(
        "  total: {} vertices, {} edges, {} faces (Euler characteristic {})",
        total.vertex_count(),
        total.edge_count(),
        total.face_count(),
        total.euler_characteristic()
    );
    println!(
        "  degree {} = fiber size {}",
        cover.degree(),
        fiber_size(&cover)
    );

    // Each cell of the total complex projects to a base cell; fibers all have
    // exactly `degree` elements.
    println!("  edge projection: {:?}", cover.edge_projection());
    cover.validate()?;
    println!("  projections commute with attaching maps: validated");

    // A tower of covers of the circle: index n gives an n-gon.
    let circle = parse_presentation("<a |>")?;
    println!("\ncyclic covers of the circle:");
    for n in 1..=5u32 {
        let word = format!("a^{n}");
        let subgroup = SubgroupSpec::new(parse_words(&word, &circle)?);
        let table = todd_coxeter(&circle, &subgroup, 1000)?;
        let cover = build_cover(&circle, &table)?;
        println!(
            "  subgroup <{word}>: {} vertices in a cycle of {} edges",
            cover.total().vertex_count(),
            cover.total().edge_count()
        );
    }
    Ok(())
}
