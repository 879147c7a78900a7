//! Exact integer linear algebra and cellular homology.
//!
//! Everything here reduces to the Smith normal form: homology of a
//! 2-complex, abelianizations of presentations, and the Schur multiplier of
//! a finite group, which is computed from the action of left translations on
//! the cycle space of the Cayley graph. A brute-force bar-resolution
//! computation of H₂ is included as an independent cross-check for small
//! groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complexes::TwoComplex;
use crate::cosets::{todd_coxeter, CosetTable, SubgroupSpec};
use crate::covers::build_cover;
use crate::error::{invalid, Error, Result};
use crate::words::{Letter, Presentation, Word};

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from machine-integer rows; all rows must have equal
    /// length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(invalid("matrix rows have unequal lengths"));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
                .collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn bump(&mut self, i: usize, j: usize, by: i64) {
        let idx = i * self.cols + j;
        let old = std::mem::take(&mut self.data[idx]);
        self.data[idx] = old + BigInt::from(by);
    }

    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    let old = std::mem::take(&mut out.data[idx]);
                    out.data[idx] = old + a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(invalid("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = num / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let det = a[n * n - 1].clone();
        Ok(if negated { -det } else { det })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`; `target != source`.
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self.data[source * self.cols + j];
            if delta.is_zero() {
                continue;
            }
            let idx = target * self.cols + j;
            let old = std::mem::take(&mut self.data[idx]);
            self.data[idx] = old + delta;
        }
    }

    /// `col[target] += factor * col[source]`; `target != source`.
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self.data[i * self.cols + source];
            if delta.is_zero() {
                continue;
            }
            let idx = i * self.cols + target;
            let old = std::mem::take(&mut self.data[idx]);
            self.data[idx] = old + delta;
        }
    }

    fn negate_row(&mut self, row: usize) {
        for j in 0..self.cols {
            let idx = row * self.cols + j;
            let old = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -old;
        }
    }
}

/// The result of a Smith normal form computation: the invariant factors
/// (positive, each dividing the next, including any leading ones) and,
/// optionally, unimodular matrices `U`, `V` with `U·A·V` diagonal.
pub struct SmithNormalForm {
    rows: usize,
    cols: usize,
    factors: Vec<BigInt>,
    row_transform: Option<IntMatrix>,
    col_transform: Option<IntMatrix>,
}

impl SmithNormalForm {
    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn row_transform(&self) -> Option<&IntMatrix> {
        self.row_transform.as_ref()
    }

    pub fn col_transform(&self) -> Option<&IntMatrix> {
        self.col_transform.as_ref()
    }

    /// The diagonal matrix `U·A·V`, in the shape of the original input.
    pub fn diagonal(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (k, f) in self.factors.iter().enumerate() {
            d.set(k, k, f.clone());
        }
        d
    }
}

/// Computes the Smith normal form of `a`.
///
/// Pivots are chosen as the entry of least absolute value in the working
/// submatrix, ties broken by row-then-column order, which makes the
/// computation deterministic. When `with_transforms` is set the unimodular
/// row and column transforms are accumulated and returned.
pub fn smith_normal_form(a: &IntMatrix, with_transforms: bool) -> SmithNormalForm {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut u = with_transforms.then(|| IntMatrix::identity(rows));
    let mut v = with_transforms.then(|| IntMatrix::identity(cols));
    let limit = rows.min(cols);
    loop {
        // diagonalize
        for k in 0..limit {
            while let Some((pi, pj)) = min_abs_entry(&m, k) {
                m.swap_rows(k, pi);
                m.swap_cols(k, pj);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(k, pi);
                }
                if let Some(v) = v.as_mut() {
                    v.swap_cols(k, pj);
                }
                let mut clean = true;
                for i in k + 1..rows {
                    if m.get(i, k).is_zero() {
                        continue;
                    }
                    let q = -(m.get(i, k) / m.get(k, k));
                    if !q.is_zero() {
                        m.add_row_multiple(i, k, &q);
                        if let Some(u) = u.as_mut() {
                            u.add_row_multiple(i, k, &q);
                        }
                    }
                    if !m.get(i, k).is_zero() {
                        clean = false;
                    }
                }
                for j in k + 1..cols {
                    if m.get(k, j).is_zero() {
                        continue;
                    }
                    let q = -(m.get(k, j) / m.get(k, k));
                    if !q.is_zero() {
                        m.add_col_multiple(j, k, &q);
                        if let Some(v) = v.as_mut() {
                            v.add_col_multiple(j, k, &q);
                        }
                    }
                    if !m.get(k, j).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if m.get(k, k).is_zero() {
                break; // the remaining submatrix is zero
            }
        }
        // normalize signs
        for k in 0..limit {
            if m.get(k, k).is_negative() {
                m.negate_row(k);
                if let Some(u) = u.as_mut() {
                    u.negate_row(k);
                }
            }
        }
        // enforce the divisibility chain: fold an offending column into an
        // earlier one and rediagonalize
        let mut offender = None;
        'chain: for i in 0..limit {
            if m.get(i, i).is_zero() {
                break;
            }
            for j in i + 1..limit {
                if m.get(j, j).is_zero() {
                    break;
                }
                if !(m.get(j, j) % m.get(i, i)).is_zero() {
                    offender = Some((i, j));
                    break 'chain;
                }
            }
        }
        let Some((i, j)) = offender else {
            break;
        };
        m.add_col_multiple(i, j, &BigInt::one());
        if let Some(v) = v.as_mut() {
            v.add_col_multiple(i, j, &BigInt::one());
        }
    }
    let factors = (0..limit)
        .map(|k| m.get(k, k).clone())
        .take_while(|d| !d.is_zero())
        .collect();
    SmithNormalForm {
        rows,
        cols,
        factors,
        row_transform: u,
        col_transform: v,
    }
}

/// Position of the nonzero entry of least absolute value in the submatrix
/// starting at `(k, k)`, row-then-column order breaking ties.
fn min_abs_entry(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..m.rows {
        for j in k..m.cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// A finitely generated abelian group in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> AbelianGroup {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from explicit parts, checking that every torsion
    /// coefficient exceeds 1 and that each divides the next.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<AbelianGroup> {
        if torsion.iter().any(|d| *d <= BigInt::one()) {
            return Err(invalid("torsion coefficients must be greater than 1"));
        }
        if torsion.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(invalid(
                "torsion coefficients must form a divisibility chain",
            ));
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    /// Internal constructor from SNF output: invariant factors in
    /// divisibility order, with any leading ones dropped.
    fn from_invariant_factors<I>(free_rank: usize, factors: I) -> AbelianGroup
    where
        I: IntoIterator<Item = BigInt>,
    {
        AbelianGroup {
            free_rank,
            torsion: factors.into_iter().filter(|d| *d > BigInt::one()).collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, renormalized to invariant-factor form.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let both: Vec<&BigInt> = self.torsion.iter().chain(&other.torsion).collect();
        let mut m = IntMatrix::zeros(both.len(), both.len());
        for (k, d) in both.iter().enumerate() {
            m.set(k, k, (*d).clone());
        }
        let snf = smith_normal_form(&m, false);
        AbelianGroup::from_invariant_factors(
            self.free_rank + other.free_rank,
            snf.factors().iter().cloned(),
        )
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The cellular boundary maps of a 2-complex: `d1` has one column per edge
/// (head indicator minus tail indicator) and `d2` one column per face
/// (signed counts of edge crossings along the attaching loop). Their
/// product is always zero.
pub fn boundary_matrices(k: &TwoComplex) -> (IntMatrix, IntMatrix) {
    let mut d1 = IntMatrix::zeros(k.vertex_count(), k.edge_count());
    for (e, edge) in k.edges().iter().enumerate() {
        d1.bump(edge.head, e, 1);
        d1.bump(edge.tail, e, -1);
    }
    let mut d2 = IntMatrix::zeros(k.edge_count(), k.face_count());
    for (f, face) in k.faces().iter().enumerate() {
        for s in &face.steps {
            d2.bump(s.edge, f, s.dir.sign() as i64);
        }
    }
    (d1, d2)
}

/// The integral homology of a 2-complex in degrees 0, 1, 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
}

/// Computes cellular homology: `H0` is free on the components, `H1` is
/// `ker d1 / im d2`, and `H2 = ker d2` is free because there are no
/// 3-cells. The torsion of `H1` is exactly the nontrivial invariant-factor
/// part of `d2`, since torsion classes of `C1 / im d2` are automatically
/// cycles.
pub fn homology(k: &TwoComplex) -> Homology {
    let (d1, d2) = boundary_matrices(k);
    let s1 = smith_normal_form(&d1, false);
    let s2 = smith_normal_form(&d2, false);
    Homology {
        h0: AbelianGroup::free(k.component_count()),
        h1: AbelianGroup::from_invariant_factors(
            k.edge_count() - s1.rank() - s2.rank(),
            s2.factors().iter().cloned(),
        ),
        h2: AbelianGroup::free(k.face_count() - s2.rank()),
    }
}

/// The abelianization of a presented group: the cokernel of the
/// generator-by-relator exponent matrix.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let g = p.generator_count();
    let mut m = IntMatrix::zeros(g, p.relator_count());
    for (j, r) in p.relators().iter().enumerate() {
        for (i, &e) in r.abelianized_vector().iter().enumerate() {
            m.set(i, j, BigInt::from(e));
        }
    }
    let snf = smith_normal_form(&m, false);
    AbelianGroup::from_invariant_factors(g - snf.rank(), snf.factors().iter().cloned())
}

/// A validated multiplication table of a finite group: `table[a][b]` is the
/// product `a·b`. Construction checks closure, identity, inverses, and
/// associativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl MultiplicationTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<MultiplicationTable> {
        let n = table.len();
        if n == 0 {
            return Err(invalid("a multiplication table needs at least one element"));
        }
        for row in &table {
            if row.len() != n {
                return Err(invalid("multiplication table is not square"));
            }
            if row.iter().any(|&x| x >= n) {
                return Err(invalid("multiplication table entry out of range"));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| invalid("multiplication table has no identity"))?;
        for (x, row) in table.iter().enumerate() {
            if !(0..n).any(|y| row[y] == identity && table[y][x] == identity) {
                return Err(invalid(format!("element {x} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(invalid(format!(
                            "multiplication is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(MultiplicationTable { table, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

/// Brute-force H₂ of a small finite group from the normalized bar
/// resolution.
///
/// Chains are generated by tuples of non-identity elements; the boundary of
/// `[g|h]` is `[g] + [h] − [gh]` and the boundary of `[g|h|k]` is
/// `[h|k] − [gh|k] + [g|hk] − [g|h]`, where tuples containing the identity
/// are zero. Groups of order greater than 12 are rejected, since the
/// three-chains grow cubically.
pub fn bar_h2_oracle(g: &MultiplicationTable) -> Result<AbelianGroup> {
    let n = g.order();
    if n > 12 {
        return Err(Error::InputTooLarge(format!(
            "the bar-resolution computation accepts groups of order at most 12, got {n}"
        )));
    }
    let e = g.identity();
    let elems: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let q = elems.len();
    let mut pos = vec![usize::MAX; n];
    for (p, &x) in elems.iter().enumerate() {
        pos[x] = p;
    }
    let mut d2 = IntMatrix::zeros(q, q * q);
    let mut d3 = IntMatrix::zeros(q * q, q * q * q);
    for (pa, &a) in elems.iter().enumerate() {
        for (pb, &b) in elems.iter().enumerate() {
            let col = pa * q + pb;
            let ab = g.mul(a, b);
            d2.bump(pa, col, 1);
            d2.bump(pb, col, 1);
            if ab != e {
                d2.bump(pos[ab], col, -1);
            }
            for (pc, &c) in elems.iter().enumerate() {
                let col = (pa * q + pb) * q + pc;
                let bc = g.mul(b, c);
                d3.bump(pb * q + pc, col, 1);
                if ab != e {
                    d3.bump(pos[ab] * q + pc, col, -1);
                }
                if bc != e {
                    d3.bump(pa * q + pos[bc], col, 1);
                }
                d3.bump(pa * q + pb, col, -1);
            }
        }
    }
    let s2 = smith_normal_form(&d2, false);
    let s3 = smith_normal_form(&d3, false);
    Ok(AbelianGroup::from_invariant_factors(
        q * q - s2.rank() - s3.rank(),
        s3.factors().iter().cloned(),
    ))
}

/// The Schur multiplier of the finite group presented by `p`.
///
/// The regular coset table realizes the Cayley graph as a cover of the
/// rose on the generators. Left translation by each generator permutes the
/// graph's cells; expressing the translated cycle basis in cycle
/// coordinates and quotienting `Z^N` by all rows `x_j·b_i − b_i` yields the
/// coinvariants of the relator subgroup's abelianization, which decompose
/// as the multiplier plus a free part of rank `g`. The free part is checked
/// and the torsion returned.
pub fn schur_multiplier_finite(p: &Presentation, max_cosets: usize) -> Result<AbelianGroup> {
    let t = todd_coxeter(p, &SubgroupSpec::empty(), max_cosets)?;
    let g = p.generator_count();
    let m = coinvariant_matrix(p, &t)?;
    let cycles = m.cols();
    let snf = smith_normal_form(&m, false);
    let free = cycles - snf.rank();
    if free != g {
        return Err(Error::FreeRankMismatch {
            expected: g,
            found: free,
        });
    }
    Ok(AbelianGroup::from_invariant_factors(
        0,
        snf.factors().iter().cloned(),
    ))
}

/// Rows `x_j·b_i − b_i` in cycle-basis coordinates, for `b_i` the spanning
/// tree cycle basis of the Cayley graph of the regular table `t` and `x_j`
/// acting by left translation.
fn coinvariant_matrix(p: &Presentation, t: &CosetTable) -> Result<IntMatrix> {
    let g = p.generator_count();
    let n = t.coset_count();
    let rose = Presentation::free(p.generator_names().to_vec())?;
    let cover = build_cover(&rose, t)?;
    let graph = cover.total();
    let tree = graph.spanning_tree()?;
    let edge_total = graph.edge_count();

    // a representative word for each vertex, read along its tree path
    let mut reps = Vec::with_capacity(n);
    for vtx in 0..n {
        let letters = tree
            .path_from_root(graph, vtx)
            .iter()
            .map(|s| {
                let j = s.edge % g.max(1);
                match s.dir.sign() {
                    1 => Letter::positive(j),
                    _ => Letter::negative(j),
                }
            })
            .collect();
        reps.push(Word::from_letters(g, letters)?);
    }

    let non_tree: Vec<usize> = (0..edge_total).filter(|&e| !tree.contains(e)).collect();
    let cycles = non_tree.len();

    // cycle basis as full signed edge vectors: tree path to the tail, the
    // edge itself, then the reversed tree path from the head
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(cycles);
    for &e in &non_tree {
        let mut vec = vec![0i64; edge_total];
        let edge = graph.edges()[e];
        for s in tree.path_from_root(graph, edge.tail) {
            vec[s.edge] += s.dir.sign() as i64;
        }
        vec[e] += 1;
        for s in tree.path_from_root(graph, edge.head) {
            vec[s.edge] -= s.dir.sign() as i64;
        }
        basis.push(vec);
    }

    let mut rows = IntMatrix::zeros(g * cycles, cycles);
    for j in 0..g {
        // left translation by x_j as a vertex permutation: c = g_c maps to
        // the coset of x_j · g_c
        let start = t.apply(0, Letter::positive(j));
        let mut vperm = vec![0usize; n];
        for (c, rep) in reps.iter().enumerate() {
            vperm[c] = t.trace(start, rep)?;
        }
        for (i, b) in basis.iter().enumerate() {
            // translate the cycle: the edge (c, x_k) maps to (vperm[c], x_k)
            let mut translated = vec![0i64; edge_total];
            for (e, &coeff) in b.iter().enumerate() {
                if coeff != 0 {
                    translated[vperm[e / g] * g + e % g] += coeff;
                }
            }
            for (k, &e) in non_tree.iter().enumerate() {
                let mut val = translated[e];
                if k == i {
                    val -= 1;
                }
                rows.set(j * cycles + i, k, BigInt::from(val));
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{presentation_complex, Edge};
    use crate::covers::{simplify, subgroup_presentation};
    use crate::testutil::{pres, word};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn factors_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows).unwrap();
        smith_normal_form(&m, false)
            .factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn smith_normal_form_small_examples() {
        assert_eq!(factors_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors_of(&[vec![2, -3]]), vec![1]);
        assert_eq!(
            factors_of(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(
            factors_of(&[vec![0, 0, 0], vec![0, 0, 0]]),
            Vec::<i64>::new()
        );
        // 2Z + 2Z with a dependent column
        assert_eq!(factors_of(&[vec![2, 4], vec![0, 0]]), vec![2]);
        // classic torsion example
        assert_eq!(factors_of(&[vec![2, 0], vec![0, 2]]), vec![2, 2]);
    }

    #[test]
    fn smith_normal_form_reconstructs_the_input() {
        let samples = [
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]],
            vec![vec![1, 2], vec![3, 4], vec![5, 6]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![7]],
        ];
        for rows in &samples {
            let a = IntMatrix::from_rows(rows).unwrap();
            let snf = smith_normal_form(&a, true);
            let u = snf.row_transform().unwrap();
            let v = snf.col_transform().unwrap();
            assert_eq!(u.multiply(&a).unwrap().multiply(v).unwrap(), snf.diagonal());
            assert_eq!(u.determinant().unwrap().abs(), BigInt::one());
            assert_eq!(v.determinant().unwrap().abs(), BigInt::one());
        }
    }

    #[test]
    fn determinant_examples() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
        assert_eq!(IntMatrix::identity(4).determinant().unwrap(), BigInt::one());
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
    }

    proptest! {
        #[test]
        fn snf_transforms_reconstruct_random_matrices(
            rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 1..5), 1..5)
        ) {
            let width = rows[0].len();
            let square: Vec<Vec<i64>> =
                rows.iter().map(|r| r.iter().copied().take(width).chain(std::iter::repeat(0)).take(width).collect()).collect();
            let a = IntMatrix::from_rows(&square).unwrap();
            let snf = smith_normal_form(&a, true);
            let u = snf.row_transform().unwrap();
            let v = snf.col_transform().unwrap();
            prop_assert_eq!(u.multiply(&a).unwrap().multiply(v).unwrap(), snf.diagonal());
            prop_assert_eq!(u.determinant().unwrap().abs(), BigInt::one());
            prop_assert_eq!(v.determinant().unwrap().abs(), BigInt::one());
            // the divisibility chain holds
            let f = snf.factors();
            for w in f.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }

        #[test]
        fn snf_factors_are_invariant_under_shuffles(
            rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3),
            seed in 0u64..1024
        ) {
            let a = IntMatrix::from_rows(&rows).unwrap();
            let baseline = smith_normal_form(&a, false);
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..3).collect();
            order.shuffle(&mut rng);
            let mut corder: Vec<usize> = (0..3).collect();
            corder.shuffle(&mut rng);
            let shuffled: Vec<Vec<i64>> = order
                .iter()
                .map(|&i| corder.iter().map(|&j| rows[i][j]).collect())
                .collect();
            let b = IntMatrix::from_rows(&shuffled).unwrap();
            let reshuffled = smith_normal_form(&b, false);
            prop_assert_eq!(baseline.factors(), reshuffled.factors());
        }
    }

    #[test]
    fn abelian_groups_validate_and_print() {
        assert!(AbelianGroup::new(1, vec![BigInt::from(2), BigInt::from(6)]).is_ok());
        assert!(AbelianGroup::new(0, vec![BigInt::from(1)]).is_err());
        assert!(AbelianGroup::new(0, vec![BigInt::from(4), BigInt::from(6)]).is_err());
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        let g = AbelianGroup::new(2, vec![BigInt::from(2)]).unwrap();
        assert_eq!(g.to_string(), "Z^2 + Z/2");
    }

    #[test]
    fn direct_sums_renormalize() {
        let z2 = AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap();
        let z3 = AbelianGroup::new(0, vec![BigInt::from(3)]).unwrap();
        let z6 = AbelianGroup::new(0, vec![BigInt::from(6)]).unwrap();
        assert_eq!(z2.direct_sum(&z3), z6);
        let v4 = AbelianGroup::new(0, vec![BigInt::from(2), BigInt::from(2)]).unwrap();
        assert_eq!(z2.direct_sum(&z2), v4);
        assert_eq!(
            AbelianGroup::free(1).direct_sum(&AbelianGroup::free(2)),
            AbelianGroup::free(3)
        );
    }

    fn torus() -> Presentation {
        pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, -1), (1, -1)]])
    }

    #[test]
    fn boundary_matrix_examples() {
        let (d1, d2) = boundary_matrices(&presentation_complex(&torus()));
        assert!(d1.is_zero());
        assert!(d2.is_zero());

        let disk = presentation_complex(&pres(&["a"], &[&[(0, 1)]]));
        let (d1, d2) = boundary_matrices(&disk);
        assert!(d1.is_zero());
        assert_eq!(d2, IntMatrix::from_rows(&[vec![1]]).unwrap());

        let triangle = TwoComplex::new(
            3,
            vec![
                Edge { tail: 0, head: 1 },
                Edge { tail: 1, head: 2 },
                Edge { tail: 2, head: 0 },
            ],
            vec![],
        )
        .unwrap();
        let (d1, _) = boundary_matrices(&triangle);
        let expected =
            IntMatrix::from_rows(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]).unwrap();
        assert_eq!(d1, expected);
    }

    #[test]
    fn boundaries_compose_to_zero() {
        for p in [
            torus(),
            pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, 1), (1, -1)]]),
            pres(&["a"], &[&[(0, 1); 6]]),
        ] {
            let k = presentation_complex(&p);
            let (d1, d2) = boundary_matrices(&k);
            assert!(d1.multiply(&d2).unwrap().is_zero());
        }
    }

    #[test]
    fn homology_of_standard_complexes() {
        let h = homology(&presentation_complex(&torus()));
        assert_eq!(h.h0, AbelianGroup::free(1));
        assert_eq!(h.h1, AbelianGroup::free(2));
        assert_eq!(h.h2, AbelianGroup::free(1));

        let rose = presentation_complex(&Presentation::free(vec!["a".into(), "b".into()]).unwrap());
        let h = homology(&rose);
        assert_eq!(h.h0, AbelianGroup::free(1));
        assert_eq!(h.h1, AbelianGroup::free(2));
        assert!(h.h2.is_trivial());

        let disk = presentation_complex(&pres(&["a"], &[&[(0, 1)]]));
        let h = homology(&disk);
        assert_eq!(h.h0, AbelianGroup::free(1));
        assert!(h.h1.is_trivial());
        assert!(h.h2.is_trivial());

        // Klein bottle: H1 = Z + Z/2, H2 = 0
        let klein = presentation_complex(&pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, 1), (1, -1)]]));
        let h = homology(&klein);
        assert_eq!(h.h1, AbelianGroup::new(1, vec![BigInt::from(2)]).unwrap());
        assert!(h.h2.is_trivial());

        // orientable genus-2 surface
        let genus2 = presentation_complex(&pres(
            &["a", "b", "c", "d"],
            &[&[
                (0, 1),
                (1, 1),
                (0, -1),
                (1, -1),
                (2, 1),
                (3, 1),
                (2, -1),
                (3, -1),
            ]],
        ));
        let h = homology(&genus2);
        assert_eq!(h.h1, AbelianGroup::free(4));
        assert_eq!(h.h2, AbelianGroup::free(1));
    }

    #[test]
    fn disconnected_complexes_have_larger_h0() {
        let two_points = TwoComplex::new(2, vec![], vec![]).unwrap();
        assert_eq!(homology(&two_points).h0, AbelianGroup::free(2));
    }

    #[test]
    fn abelianization_examples() {
        let z6 = abelianization(&pres(&["a"], &[&[(0, 1); 6]]));
        assert_eq!(z6, AbelianGroup::new(0, vec![BigInt::from(6)]).unwrap());

        assert_eq!(abelianization(&torus()), AbelianGroup::free(2));

        // trefoil group
        let trefoil = abelianization(&pres(
            &["a", "b"],
            &[&[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)]],
        ));
        assert_eq!(trefoil, AbelianGroup::free(1));

        let v4 = abelianization(&pres(
            &["a", "b"],
            &[
                &[(0, 1), (0, 1)],
                &[(1, 1), (1, 1)],
                &[(0, 1), (1, 1), (0, -1), (1, -1)],
            ],
        ));
        assert_eq!(
            v4,
            AbelianGroup::new(0, vec![BigInt::from(2), BigInt::from(2)]).unwrap()
        );
    }

    #[test]
    fn abelianization_equals_h1_of_the_presentation_complex() {
        for p in [
            torus(),
            pres(&["a"], &[&[(0, 1); 6]]),
            pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, 1), (1, -1)]]),
            pres(&["a", "b"], &[&[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)]]),
            Presentation::free(vec!["x".into(), "y".into(), "z".into()]).unwrap(),
        ] {
            assert_eq!(abelianization(&p), homology(&presentation_complex(&p)).h1);
        }
    }

    #[test]
    fn simplify_preserves_the_abelianization() {
        let p = pres(&["a"], &[&[(0, 1); 6]]);
        let h = crate::cosets::SubgroupSpec::new(vec![word(1, &[(0, 1), (0, 1)])]);
        let t = todd_coxeter(&p, &h, 100).unwrap();
        let s = subgroup_presentation(&build_cover(&p, &t).unwrap()).unwrap();
        assert_eq!(abelianization(&simplify(&s)), abelianization(&s));
        assert_eq!(
            abelianization(&s),
            AbelianGroup::new(0, vec![BigInt::from(3)]).unwrap()
        );

        let messy = pres(
            &["x", "y", "z"],
            &[&[(0, 1), (1, 1)], &[(1, 1); 4], &[(2, 1), (2, 1)]],
        );
        assert_eq!(abelianization(&simplify(&messy)), abelianization(&messy));
    }

    fn cyclic_table(n: usize) -> MultiplicationTable {
        MultiplicationTable::new(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
        .unwrap()
    }

    fn klein_table() -> MultiplicationTable {
        MultiplicationTable::new((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()).unwrap()
    }

    #[test]
    fn multiplication_tables_are_validated() {
        assert!(MultiplicationTable::new(vec![]).is_err());
        assert!(MultiplicationTable::new(vec![vec![0, 1]]).is_err());
        assert!(MultiplicationTable::new(vec![vec![0, 5], vec![1, 0]]).is_err());
        // no inverse for element 1
        assert!(MultiplicationTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        // an order-5 loop with identity and two-sided inverses that is not
        // associative (every element is an involution, which no group of
        // order 5 allows)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = MultiplicationTable::new(loop5).unwrap_err();
        assert!(err.to_string().contains("associative"));
        // a genuine group passes
        let t = cyclic_table(6);
        assert_eq!(t.order(), 6);
        assert_eq!(t.identity(), 0);
        assert_eq!(t.mul(4, 5), 3);
    }

    #[test]
    fn bar_oracle_on_small_groups() {
        assert!(bar_h2_oracle(&cyclic_table(1)).unwrap().is_trivial());
        assert!(bar_h2_oracle(&cyclic_table(4)).unwrap().is_trivial());
        assert_eq!(
            bar_h2_oracle(&klein_table()).unwrap(),
            AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap()
        );
    }

    #[test]
    fn bar_oracle_rejects_large_groups() {
        let err = bar_h2_oracle(&cyclic_table(13)).unwrap_err();
        assert!(matches!(err, Error::InputTooLarge(_)));
    }

    #[test]
    fn multiplier_of_small_groups() {
        let z5 = pres(&["a"], &[&[(0, 1); 5]]);
        assert!(schur_multiplier_finite(&z5, 1000).unwrap().is_trivial());

        let v4 = pres(
            &["a", "b"],
            &[
                &[(0, 1), (0, 1)],
                &[(1, 1), (1, 1)],
                &[(0, 1), (1, 1), (0, -1), (1, -1)],
            ],
        );
        assert_eq!(
            schur_multiplier_finite(&v4, 1000).unwrap(),
            AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap()
        );
    }

    #[test]
    fn multiplier_is_presentation_independent_for_s3() {
        let first = pres(
            &["a", "b"],
            &[
                &[(0, 1), (0, 1)],
                &[(1, 1), (1, 1)],
                &[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)],
            ],
        );
        let second = pres(
            &["r", "s"],
            &[
                &[(0, 1), (0, 1), (0, 1)],
                &[(1, 1), (1, 1)],
                &[(1, 1), (0, 1), (1, 1), (0, 1)],
            ],
        );
        let m1 = schur_multiplier_finite(&first, 1000).unwrap();
        let m2 = schur_multiplier_finite(&second, 1000).unwrap();
        assert_eq!(m1, m2);
        assert!(m1.is_trivial());
    }

    #[test]
    fn multiplier_propagates_the_coset_limit() {
        let z = pres(&["a"], &[]);
        assert!(matches!(
            schur_multiplier_finite(&z, 20),
            Err(Error::CosetLimitExceeded { .. })
        ));
    }

    /// Pins the translation convention: for Z₂ the translated basis cycle
    /// equals the basis cycle, so the coinvariant matrix must vanish.
    #[test]
    fn z2_coinvariant_matrix_is_zero() {
        let p = pres(&["a"], &[&[(0, 1), (0, 1)]]);
        let t = todd_coxeter(&p, &SubgroupSpec::empty(), 100).unwrap();
        let m = coinvariant_matrix(&p, &t).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.cols(), 1);
        assert!(m.is_zero());
    }
}
