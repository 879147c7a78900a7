//! Integral homology of 2-complexes via Smith normal form.
//!
//! The cellular chain complex of a 2-complex is a pair of integer matrices
//! d1 (edges to vertices) and d2 (faces to edges) with d1*d2 = 0; homology
//! falls out of their Smith normal forms.

use fpgroups::complexes::presentation_complex;
use fpgroups::homology::{
    abelianization, boundary_matrices, homology, smith_normal_form, IntMatrix,
};
use fpgroups::parse::parse_presentation;

fn main() -> fpgroups::Result<()> {
    for (name, text) in [
        ("torus", "<a, b | [a, b]>"),
        ("klein bottle", "<a, b | a b a b^-1>"),
        ("genus-2 surface", "<a, b, c, d | [a, b] [c, d]>"),
        ("projective plane", "<a | a^2>"),
        (
            "sphere (as a disk with collapsed rim)",
            "<a | a a^-1 a a^-1>",
        ),
    ] {
        let p = match parse_presentation(text) {
            Ok(p) => p,
            Err(_) => {
                // The sphere relator reduces to the empty word, which a
                // presentation rejects; skip gracefully.
                println!("{name:>38}: relator collapses, skipped");
                continue;
            }
        };
        let k = presentation_complex(&p);
        let h = homology(&k);
        println!("{name:>38}: H0 = {}, H1 = {}, H2 = {}", h.h0, h.h1, h.h2);
    }

    // The boundary matrices of the Klein bottle: d2 records that the relator
    // a b a b^-1 crosses a twice and b zero times (signed).
    let klein = presentation_complex(&parse_presentation("<a, b | a b a b^-1>")?);
    let (d1, d2) = boundary_matrices(&klein);
    println!("\nklein bottle d1 is the zero map on {} edge(s)", d1.cols());
    println!(
        "klein bottle d2 column: [{}, {}]",
        d2.get(0, 0),
        d2.get(1, 0)
    );
    assert!(d1.multiply(&d2)?.is_zero());

    // Smith normal form with change-of-basis matrices: U*A*V = D with
    // unimodular U and V.
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]])?;
    let snf = smith_normal_form(&a, true);
    let factor_list: Vec<String> = snf.factors().iter().map(|f| f.to_string()).collect();
    println!(
        "\ninvariant factors of a sample 3x3 matrix: [{}]",
        factor_list.join(", ")
    );
    let u = snf.row_transform().unwrap();
    let v = snf.col_transform().unwrap();
    println!(
        "U*A*V reconstructs the diagonal: {} (det U = {}, det V = {})",
        u.multiply(&a)?.multiply(v)? == snf.diagonal(),
        u.determinant()?,
        v.determinant()?
    );

    // Abelianization reads the group invariants straight off a presentation.
    println!("\nabelianizations:");
    for text in [
        "<a, b | a^2 b^-3>",          // trefoil knot group
        "<a, b | a b a^-1 b^-2>",     // Baumslag-Solitar BS(1,2)
        "<a, b | a^2, b^2, (a b)^3>", // S3
        "<a, b, c | a^2 b^2 c^2>",    // non-orientable genus-3 surface
    ] {
        let p = parse_presentation(text)?;
        println!("  {text:>28} abelianizes to {}", abelianization(&p));
    }
    Ok(())
}
