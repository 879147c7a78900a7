//! Low-index subgroup enumeration: one canonical coset table per conjugacy
//! class of subgroups up to an index bound, found by backtracking search.

use fpgroups::cosets::low_index_subgroups;
use fpgroups::covers::{build_cover, subgroup_presentation};
use fpgroups::homology::abelianization;
use fpgroups::parse::parse_presentation;

fn main() -> fpgroups::Result<()> {
    // The free group on two generators: 1, 3, 7, 26, 97 classes at indices
    // 1 through 5.
    let f2 = parse_presentation("<a, b |>")?;
    let tables = low_index_subgroups(&f2, 5);
    let mut per_index = [0usize; 6];
    for t in &tables {
        per_index[t.coset_count()] += 1;
    }
    println!("subgroup classes of the rank-2 free group:");
    for (n, classes) in per_index.iter().enumerate().skip(1) {
        println!("  index {n}: {classes} classes");
    }

    // The three index-2 classes, as actions of a and b on the two cosets.
    println!("\nindex-2 actions (rows are cosets, columns a, a^-1, b, b^-1):");
    for t in tables.iter().filter(|t| t.coset_count() == 2) {
        println!("  {:?}", t.rows());
    }

    // For a group with relators the search prunes as it fills tables. The
    // trefoil knot group has one class of each index up to 5 except index 4,
    // which splits further.
    let trefoil = parse_presentation("<a, b | a^2 b^-3>")?;
    println!("\nsubgroup classes of the trefoil knot group, with subgroup invariants:");
    for t in low_index_subgroups(&trefoil, 5) {
        let cover = build_cover(&trefoil, &t)?;
        let subgroup = subgroup_presentation(&cover)?;
        println!(
            "  index {}: abelianization {}",
            t.coset_count(),
            abelianization(&subgroup)
        );
    }
    Ok(())
}
