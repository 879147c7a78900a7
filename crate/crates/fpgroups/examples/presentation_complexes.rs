//! From a presentation to a 2-complex and back.
//!
//! The presentation complex has one vertex, a loop per generator, and a
//! 2-cell per relator; reading the cells back along a spanning tree recovers
//! a presentation of the same group.

use fpgroups::complexes::{edge_path_presentation, presentation_complex};
use fpgroups::parse::parse_presentation;

fn main() -> fpgroups::Result<()> {
    for text in [
        "<a, b | [a, b]>",            // torus
        "<a, b | a b a b^-1>",        // klein bottle
        "<a, b | a^2, b^2, (a b)^3>", // symmetric group S3
        "<a, b, c |>",                // rose with three petals
    ] {
        let p = parse_presentation(text)?;
        let k = presentation_complex(&p);
        println!("{p}");
        println!(
            "  cells: {} vertex, {} edges, {} faces; Euler characteristic {}",
            k.vertex_count(),
            k.edge_count(),
            k.face_count(),
            k.euler_characteristic()
        );

        // With a single vertex the spanning tree is empty and the edge-path
        // presentation is the original one with generators renamed.
        let tree = k.spanning_tree()?;
        let read_back = edge_path_presentation(&k, &tree)?;
        println!(
            "  read back along a spanning tree: {}",
            read_back.presentation
        );
        assert!(read_back.presentation.equivalent_up_to_rotation(&p));
        println!();
    }

    // Wedges and products of complexes mirror free and direct products of
    // groups. Their cell counts follow exact formulas.
    let torus = presentation_complex(&parse_presentation("<a, b | [a, b]>")?);
    let circle = presentation_complex(&parse_presentation("<c |>")?);

    let wedge = torus.wedge(&circle);
    println!(
        "torus wedge circle: {} vertex, {} edges, {} faces",
        wedge.vertex_count(),
        wedge.edge_count(),
        wedge.face_count()
    );

    let product = torus.product_2skeleton(&circle);
    println!(
        "2-skeleton of torus x circle: {} vertex, {} edges, {} faces",
        product.vertex_count(),
        product.edge_count(),
        product.face_count()
    );
    Ok(())
}
