//! Finite-sheeted covers of presentation complexes.
//!
//! A complete coset table over a presentation determines a covering complex
//! of the presentation complex: one vertex per coset, one lifted edge per
//! (coset, generator), one lifted face per (coset, relator). Reading the
//! edge-path presentation of the total complex off a spanning tree then
//! yields a presentation of the subgroup the table enumerates.

use crate::complexes::{
    edge_path_presentation, presentation_complex, AttachingLoop, Edge, Step, TwoComplex,
};
use crate::cosets::CosetTable;
use crate::error::{invalid, Result};
use crate::words::{Letter, Presentation, Word};

/// A finite-sheeted covering of a presentation complex, together with the
/// cell projections onto the base.
#[derive(Clone, Debug)]
pub struct Covering {
    base: TwoComplex,
    total: TwoComplex,
    degree: usize,
    vertex_projection: Vec<usize>,
    edge_projection: Vec<usize>,
    face_projection: Vec<usize>,
}

impl Covering {
    pub fn base(&self) -> &TwoComplex {
        &self.base
    }

    pub fn total(&self) -> &TwoComplex {
        &self.total
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vertex_projection(&self) -> &[usize] {
        &self.vertex_projection
    }

    pub fn edge_projection(&self) -> &[usize] {
        &self.edge_projection
    }

    pub fn face_projection(&self) -> &[usize] {
        &self.face_projection
    }

    /// Checks the covering invariants: projections are well formed, every
    /// base cell has exactly `degree` preimages, projections commute with
    /// incidence (edge endpoints and attaching loops project step by step),
    /// and the total complex is connected.
    pub fn validate(&self) -> Result<()> {
        let n = self.degree;
        if self.total.vertex_count() != self.vertex_projection.len()
            || self.total.edge_count() != self.edge_projection.len()
            || self.total.face_count() != self.face_projection.len()
        {
            return Err(invalid("projection lengths do not match the total complex"));
        }
        for (name, proj, base_count) in [
            ("vertex", &self.vertex_projection, self.base.vertex_count()),
            ("edge", &self.edge_projection, self.base.edge_count()),
            ("face", &self.face_projection, self.base.face_count()),
        ] {
            let mut fibers = vec![0usize; base_count];
            for &b in proj.iter() {
                if b >= base_count {
                    return Err(invalid(format!("{name} projection out of range")));
                }
                fibers[b] += 1;
            }
            if fibers.iter().any(|&f| f != n) {
                return Err(invalid(format!(
                    "a base {name} does not have {n} preimages"
                )));
            }
        }
        for (e, edge) in self.total.edges().iter().enumerate() {
            let down = &self.base.edges()[self.edge_projection[e]];
            if self.vertex_projection[edge.tail] != down.tail
                || self.vertex_projection[edge.head] != down.head
            {
                return Err(invalid("edge projection does not commute with incidence"));
            }
        }
        for (f, face) in self.total.faces().iter().enumerate() {
            let down = &self.base.faces()[self.face_projection[f]];
            if face.steps.len() != down.steps.len() {
                return Err(invalid("a lifted face has the wrong length"));
            }
            for (up, base_step) in face.steps.iter().zip(&down.steps) {
                if self.edge_projection[up.edge] != base_step.edge || up.dir != base_step.dir {
                    return Err(invalid("face projection does not commute step by step"));
                }
            }
        }
        if self.total.component_count() != 1 {
            return Err(invalid("total complex is not connected"));
        }
        Ok(())
    }
}

/// Builds the covering of the presentation complex of `p` determined by a
/// complete coset table.
///
/// The total complex has one vertex per coset, the edge `(c, x_j)` running
/// from `c` to its image under `x_j` (ids are coset-major), and for each
/// coset `c` and relator `r` the lift of `r` starting at vertex `c`.
pub fn build_cover(p: &Presentation, t: &CosetTable) -> Result<Covering> {
    let g = p.generator_count();
    let m = p.relator_count();
    if t.generator_count() != g {
        return Err(invalid(format!(
            "table has {} generators but the presentation has {g}",
            t.generator_count()
        )));
    }
    let n = t.coset_count();
    for r in p.relators() {
        for c in 0..n {
            if t.trace(c, r)? != c {
                return Err(invalid("table does not satisfy the relators"));
            }
        }
    }
    let mut edges = Vec::with_capacity(n * g);
    for c in 0..n {
        for j in 0..g {
            edges.push(Edge {
                tail: c,
                head: t.apply(c, Letter::positive(j)),
            });
        }
    }
    let mut faces = Vec::with_capacity(n * m);
    for c in 0..n {
        for r in p.relators() {
            let mut at = c;
            let steps = r
                .letters()
                .iter()
                .map(|&l| {
                    let j = l.generator();
                    if l.is_inverse() {
                        // the lift crosses, backwards, the x_j edge that
                        // ends at the current vertex
                        at = t.apply(at, l);
                        Step::backward(at * g + j)
                    } else {
                        let step = Step::forward(at * g + j);
                        at = t.apply(at, l);
                        step
                    }
                })
                .collect();
            faces.push(AttachingLoop { steps });
        }
    }
    let total = TwoComplex::new(n, edges, faces)?;
    Ok(Covering {
        base: presentation_complex(p),
        total,
        degree: n,
        vertex_projection: vec![0; n],
        edge_projection: (0..n * g).map(|id| id % g.max(1)).collect(),
        face_projection: (0..n * m).map(|id| id % m.max(1)).collect(),
    })
}

/// The size of the fiber over the base vertex, which equals the degree and
/// the coset-table index.
pub fn fiber_size(c: &Covering) -> usize {
    c.degree()
}

/// A presentation of the subgroup the cover belongs to: the edge-path
/// presentation of the total complex relative to its spanning tree.
///
/// For a degree-`n` cover of a `g`-generator, `m`-relator presentation this
/// has exactly `n·g − (n−1)` generators and at most `n·m` relators (lifted
/// relators that die in the tree are dropped).
pub fn subgroup_presentation(c: &Covering) -> Result<Presentation> {
    let tree = c.total().spanning_tree()?;
    Ok(edge_path_presentation(c.total(), &tree)?.presentation)
}

/// Simplifies a presentation by elementary moves only: dropping relators
/// that reduce to nothing, deduplicating relators equal up to cyclic
/// rotation and inversion, and eliminating generators that occur exactly
/// once in some relator (substituting the rest of that relator for them).
/// Each move removes a relator or a generator, so the process terminates;
/// the presented group is unchanged up to isomorphism.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut names: Vec<String> = p.generator_names().to_vec();
    let mut relators: Vec<Word> = p.relators().to_vec();
    loop {
        relators = relators
            .iter()
            .map(Word::cyclic_reduce)
            .filter(|w| !w.is_empty())
            .collect();
        let mut kept: Vec<Word> = Vec::with_capacity(relators.len());
        for r in relators {
            let dup = kept
                .iter()
                .any(|k| k.cyclically_equal(&r) || k.cyclically_equal(&r.inverse()));
            if !dup {
                kept.push(r);
            }
        }
        relators = kept;
        let Some((k, x)) = find_eliminable(&relators, names.len()) else {
            break;
        };
        let rank = names.len();
        let letters = relators[k].letters();
        let pos = letters.iter().position(|l| l.generator() == x).unwrap();
        // rotate so the single occurrence of x comes first: x^ε · w is a
        // relator, so x = w⁻¹ when ε = +1 and x = w when ε = −1
        let rest: Vec<Letter> = letters[pos + 1..]
            .iter()
            .chain(&letters[..pos])
            .copied()
            .collect();
        let tail = Word::from_letters(rank, rest).unwrap();
        let image = if letters[pos].is_inverse() {
            tail
        } else {
            tail.inverse()
        };
        relators.remove(k);
        relators = relators
            .iter()
            .map(|r| {
                let mut out: Vec<Letter> = Vec::with_capacity(r.len());
                for &l in r.letters() {
                    if l.generator() == x {
                        let piece = if l.is_inverse() {
                            image.inverse()
                        } else {
                            image.clone()
                        };
                        out.extend_from_slice(piece.letters());
                    } else {
                        out.push(l);
                    }
                }
                // strip the eliminated generator from the alphabet
                let shifted = out
                    .into_iter()
                    .map(|l| {
                        let j = l.generator();
                        debug_assert_ne!(j, x);
                        let j = if j > x { j - 1 } else { j };
                        if l.is_inverse() {
                            Letter::negative(j)
                        } else {
                            Letter::positive(j)
                        }
                    })
                    .collect();
                Word::from_letters(rank - 1, shifted).unwrap().free_reduce()
            })
            .collect();
        names.remove(x);
    }
    Presentation::new(names, relators).expect("elementary moves keep the presentation well formed")
}

/// First `(relator, generator)` pair, in relator-then-generator order, where
/// the generator occurs exactly once in the relator.
fn find_eliminable(relators: &[Word], rank: usize) -> Option<(usize, usize)> {
    for (k, r) in relators.iter().enumerate() {
        let mut counts = vec![0usize; rank];
        for l in r.letters() {
            counts[l.generator()] += 1;
        }
        if let Some(x) = (0..rank).find(|&x| counts[x] == 1) {
            return Some((k, x));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::{low_index_subgroups, todd_coxeter, SubgroupSpec};
    use crate::testutil::{pres, word};

    #[test]
    fn index_two_cover_of_the_torus() {
        let p = pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, -1), (1, -1)]]);
        let h = SubgroupSpec::new(vec![word(2, &[(0, 1), (0, 1)]), word(2, &[(1, 1)])]);
        let t = todd_coxeter(&p, &h, 100).unwrap();
        assert_eq!(t.coset_count(), 2);
        let c = build_cover(&p, &t).unwrap();
        assert_eq!(c.total().vertex_count(), 2);
        assert_eq!(c.total().edge_count(), 4);
        assert_eq!(c.total().face_count(), 2);
        assert_eq!(fiber_size(&c), 2);
        assert_eq!(
            c.total().euler_characteristic(),
            2 * c.base().euler_characteristic()
        );
        c.validate().unwrap();
    }

    #[test]
    fn identity_cover_reproduces_the_base() {
        let p = pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, -1), (1, -1)]]);
        let t = todd_coxeter(
            &p,
            &SubgroupSpec::new(vec![word(2, &[(0, 1)]), word(2, &[(1, 1)])]),
            100,
        )
        .unwrap();
        assert_eq!(t.coset_count(), 1);
        let c = build_cover(&p, &t).unwrap();
        assert_eq!(c.total(), c.base());
        assert_eq!(fiber_size(&c), 1);
        c.validate().unwrap();
    }

    #[test]
    fn double_cover_of_z6_by_its_even_part() {
        // cosets of <a^2> = {0, 2, 4} in Z6
        let p = pres(&["a"], &[&[(0, 1); 6]]);
        let h = SubgroupSpec::new(vec![word(1, &[(0, 1), (0, 1)])]);
        let t = todd_coxeter(&p, &h, 100).unwrap();
        assert_eq!(t.coset_count(), 2);
        let c = build_cover(&p, &t).unwrap();
        assert_eq!(c.total().vertex_count(), 2);
        assert_eq!(c.total().edge_count(), 2);
        assert_eq!(c.total().face_count(), 2);
        c.validate().unwrap();

        // the subgroup is Z3: one generator, both lifted relators read x^3
        let s = subgroup_presentation(&c).unwrap();
        assert_eq!(s.generator_count(), 1);
        let cube = word(1, &[(0, 1); 3]);
        for r in s.relators() {
            assert!(r.cyclically_equal(&cube) || r.cyclically_equal(&cube.inverse()));
        }
    }

    #[test]
    fn index_two_subgroup_of_a_free_group_is_free_of_rank_three() {
        let p = Presentation::free(vec!["a".into(), "b".into()]).unwrap();
        let h = SubgroupSpec::new(vec![
            word(2, &[(1, 1)]),
            word(2, &[(0, 1), (1, 1), (0, -1)]),
            word(2, &[(0, 1), (0, 1)]),
        ]);
        let t = todd_coxeter(&p, &h, 100).unwrap();
        assert_eq!(t.coset_count(), 2);
        let c = build_cover(&p, &t).unwrap();
        let s = subgroup_presentation(&c).unwrap();
        assert_eq!(s.generator_count(), 3);
        assert_eq!(s.relator_count(), 0);
    }

    #[test]
    fn free_covers_satisfy_the_rank_formula() {
        for g in [2usize, 3] {
            let names: Vec<String> = (0..g).map(|i| format!("x{}", i + 1)).collect();
            let p = Presentation::free(names).unwrap();
            for t in low_index_subgroups(&p, 3) {
                let n = t.coset_count();
                let c = build_cover(&p, &t).unwrap();
                c.validate().unwrap();
                let s = subgroup_presentation(&c).unwrap();
                assert_eq!(s.relator_count(), 0);
                assert_eq!(s.generator_count(), n * (g - 1) + 1);
            }
        }
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let z = pres(&["a"], &[]);
        let t = todd_coxeter(
            &z,
            &SubgroupSpec::new(vec![word(1, &[(0, 1), (0, 1)])]),
            100,
        )
        .unwrap();
        // wrong generator count
        let two = Presentation::free(vec!["a".into(), "b".into()]).unwrap();
        assert!(build_cover(&two, &t).is_err());
        // table does not satisfy a^3
        let p3 = pres(&["a"], &[&[(0, 1); 3]]);
        assert!(build_cover(&p3, &t).is_err());
    }

    #[test]
    fn simplify_drops_trivial_generators_and_duplicates() {
        // <x, y | y> -> <x |>
        let p = pres(&["x", "y"], &[&[(1, 1)]]);
        let s = simplify(&p);
        assert_eq!(s.generator_names(), &["x".to_string()]);
        assert_eq!(s.relator_count(), 0);

        // <x | x^3, x^3> -> <x | x^3>
        let p = pres(&["x"], &[&[(0, 1); 3], &[(0, 1); 3]]);
        let s = simplify(&p);
        assert_eq!(s.relator_count(), 1);

        // duplicates up to inversion also collapse
        let p = pres(&["x"], &[&[(0, 1); 3], &[(0, -1); 3]]);
        let s = simplify(&p);
        assert_eq!(s.relator_count(), 1);
    }

    #[test]
    fn simplify_substitutes_eliminated_generators() {
        // <x, y | x y, y^5>: x = y^-1, so the group is <y | y^5>
        let p = pres(&["x", "y"], &[&[(0, 1), (1, 1)], &[(1, 1); 5]]);
        let s = simplify(&p);
        assert_eq!(s.generator_names(), &["y".to_string()]);
        assert_eq!(s.relator_count(), 1);
        assert_eq!(s.relators()[0].len(), 5);
    }

    #[test]
    fn simplify_cleans_the_z6_subgroup_presentation() {
        let p = pres(&["a"], &[&[(0, 1); 6]]);
        let h = SubgroupSpec::new(vec![word(1, &[(0, 1), (0, 1)])]);
        let t = todd_coxeter(&p, &h, 100).unwrap();
        let s = subgroup_presentation(&build_cover(&p, &t).unwrap()).unwrap();
        let tidy = simplify(&s);
        assert_eq!(tidy.generator_count(), 1);
        assert_eq!(tidy.relator_count(), 1);
        assert_eq!(tidy.relators()[0].len(), 3);
    }
}
