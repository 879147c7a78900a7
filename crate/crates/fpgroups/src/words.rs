//! Free-group words, finite presentations, and presentation-level products
//! (free, direct, and amalgamated).
//!
//! A [`Word`] is a sequence of [`Letter`]s over a fixed rank (the number of
//! generators of the ambient free group). Words remember their rank so that
//! mixing words over different alphabets is a checked error rather than a
//! silent index bug. Relators stored in a [`Presentation`] are always freely
//! and cyclically reduced; an empty relator is rejected at construction.

use crate::error::{invalid, Result};

/// One symbol of a word: a generator index with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: usize,
    inv: bool,
}

impl Letter {
    /// The generator `gen` itself.
    pub fn positive(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    /// The inverse of generator `gen`.
    pub fn negative(gen: usize) -> Self {
        Letter { gen, inv: true }
    }

    pub fn generator(&self) -> usize {
        self.gen
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(&self) -> i8 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(&self) -> bool {
        self.inv
    }

    pub fn inverse(&self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    /// Column of this letter in coset-table layout: the columns are ordered
    /// `x1, x1^-1, x2, x2^-1, ...`.
    pub fn table_column(&self) -> usize {
        2 * self.gen + usize::from(self.inv)
    }

    fn shifted(&self, offset: usize) -> Self {
        Letter {
            gen: self.gen + offset,
            inv: self.inv,
        }
    }
}

/// A word in the free group of a fixed rank.
///
/// The letter sequence is not forced to be reduced (so that reduction itself
/// is observable); `reduced` records whether it is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
    reduced: bool,
}

fn letters_are_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[0] != w[1].inverse())
}

impl Word {
    /// The empty word over `rank` generators.
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
            reduced: true,
        }
    }

    /// Builds a word, checking every letter against `rank`.
    pub fn from_letters(rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.gen >= rank) {
            return Err(invalid(format!(
                "letter refers to generator {} but the word has rank {}",
                l.gen, rank
            )));
        }
        let reduced = letters_are_reduced(&letters);
        Ok(Word {
            rank,
            letters,
            reduced,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the stored letter sequence is freely reduced.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The inverse word (letters reversed, signs flipped).
    pub fn inverse(&self) -> Self {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
            reduced: self.reduced,
        }
    }

    /// Freely reduces the word by cancelling adjacent `x x^-1` pairs until
    /// none remain. Idempotent; never lengthens the word.
    pub fn free_reduce(&self) -> Self {
        if self.reduced {
            return self.clone();
        }
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word {
            rank: self.rank,
            letters: out,
            reduced: true,
        }
    }

    /// Freely reduces, then strips matching first/last inverse pairs so the
    /// result is the canonical representative of the cyclic word.
    pub fn cyclic_reduce(&self) -> Self {
        let w = self.free_reduce();
        let mut lo = 0;
        let mut hi = w.letters.len();
        while hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word {
            rank: w.rank,
            letters: w.letters[lo..hi].to_vec(),
            reduced: true,
        }
    }

    /// Concatenates `self` and `other` and freely reduces the result.
    ///
    /// Both words must share the same rank.
    pub fn product(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(invalid(format!(
                "cannot multiply words of rank {} and {}",
                self.rank, other.rank
            )));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
            reduced: false,
        }
        .free_reduce())
    }

    /// Exponent sum of each generator, as a vector of length `rank`.
    pub fn abelianized_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.gen] += i64::from(l.sign());
        }
        v
    }

    /// Re-reads the word over a larger alphabet, with its generators shifted
    /// up by `offset`. Used to glue alphabets together in products.
    pub fn embed(&self, new_rank: usize, offset: usize) -> Result<Word> {
        if offset + self.rank > new_rank {
            return Err(invalid(format!(
                "cannot embed a rank-{} word at offset {} into rank {}",
                self.rank, offset, new_rank
            )));
        }
        Ok(Word {
            rank: new_rank,
            letters: self.letters.iter().map(|l| l.shifted(offset)).collect(),
            reduced: self.reduced,
        })
    }

    /// Whether `self` and `other` are equal up to a cyclic rotation of their
    /// letters. Intended for cyclically reduced words (relators).
    pub fn cyclically_equal(&self, other: &Word) -> bool {
        if self.rank != other.rank || self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let n = self.len();
        (0..n).any(|r| (0..n).all(|i| self.letters[(r + i) % n] == other.letters[i]))
    }
}

/// A map sending each generator of a source presentation to a word over a
/// target presentation's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    target_rank: usize,
    images: Vec<Word>,
}

impl GeneratorMap {
    /// `images[i]` is the image of source generator `i`; every image must be
    /// a word over `target_rank` generators.
    pub fn new(target_rank: usize, images: Vec<Word>) -> Result<Self> {
        for (i, w) in images.iter().enumerate() {
            if w.rank() != target_rank {
                return Err(invalid(format!(
                    "image of generator {} has rank {}, expected {}",
                    i,
                    w.rank(),
                    target_rank
                )));
            }
        }
        Ok(GeneratorMap {
            target_rank,
            images,
        })
    }

    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Applies the map to a word over the source generators by substituting
    /// each letter with its image (or the image's inverse); the result is
    /// freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.source_rank() {
            return Err(invalid(format!(
                "word has rank {} but the map has source rank {}",
                w.rank(),
                self.source_rank()
            )));
        }
        let mut letters = Vec::new();
        for l in w.letters() {
            let image = &self.images[l.generator()];
            if l.is_inverse() {
                letters.extend(image.letters().iter().rev().map(Letter::inverse));
            } else {
                letters.extend_from_slice(image.letters());
            }
        }
        Ok(Word {
            rank: self.target_rank,
            letters,
            reduced: false,
        }
        .free_reduce())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Extends `taken` with the names in `incoming`, suffixing any clash
/// deterministically (`b` becomes `b_2`, then `b_3`, ...).
fn merged_generator_names(taken: &[String], incoming: &[String]) -> Vec<String> {
    let mut out: Vec<String> = taken.to_vec();
    for name in incoming {
        let mut candidate = name.clone();
        let mut k = 2usize;
        while out.contains(&candidate) {
            candidate = format!("{name}_{k}");
            k += 1;
        }
        out.push(candidate);
    }
    out
}

/// A finite group presentation: named generators and a list of relators.
///
/// Relators are freely and cyclically reduced on construction. A relator
/// that reduces to the empty word is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for name in &generator_names {
            if !is_identifier(name) {
                return Err(invalid(format!("invalid generator name {name:?}")));
            }
        }
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(invalid(format!("duplicate generator name {name:?}")));
            }
        }
        let rank = generator_names.len();
        let mut reduced = Vec::with_capacity(relators.len());
        for r in &relators {
            if r.rank() != rank {
                return Err(invalid(format!(
                    "relator has rank {} but the presentation has {} generators",
                    r.rank(),
                    rank
                )));
            }
            let r = r.cyclic_reduce();
            if r.is_empty() {
                return Err(invalid("relator reduces to the empty word"));
            }
            reduced.push(r);
        }
        Ok(Presentation {
            generator_names,
            relators: reduced,
        })
    }

    /// Presentation of a free group: generators, no relators.
    pub fn free(generator_names: Vec<String>) -> Result<Self> {
        Presentation::new(generator_names, Vec::new())
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Index of the generator with the given name, if any.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Free product: disjoint union of generators and relators. Clashing
    /// names from `other` are suffixed (`b` becomes `b_2`).
    pub fn free_product(&self, other: &Presentation) -> Presentation {
        let g1 = self.generator_count();
        let rank = g1 + other.generator_count();
        let names = merged_generator_names(&self.generator_names, &other.generator_names);
        let mut relators = Vec::with_capacity(self.relator_count() + other.relator_count());
        for r in &self.relators {
            relators.push(r.embed(rank, 0).expect("rank only widens"));
        }
        for r in &other.relators {
            relators.push(r.embed(rank, g1).expect("rank only widens"));
        }
        Presentation::new(names, relators).expect("factors are valid presentations")
    }

    /// Direct product: the free product plus a commutator relator
    /// `[x_i, y_j]` for every pair of generators across the factors.
    pub fn direct_product(&self, other: &Presentation) -> Presentation {
        let g1 = self.generator_count();
        let g2 = other.generator_count();
        let rank = g1 + g2;
        let mut product = self.free_product(other);
        for i in 0..g1 {
            for j in 0..g2 {
                let x = Letter::positive(i);
                let y = Letter::positive(g1 + j);
                let commutator = Word::from_letters(rank, vec![x, y, x.inverse(), y.inverse()])
                    .expect("letters are in range");
                product.relators.push(commutator);
            }
        }
        product
    }

    /// Amalgamated free product over `ph`: the free product of `self` and
    /// `other` plus one relator `f1(h) * f2(h)^-1` per generator `h` of `ph`.
    ///
    /// `f1` must map `ph`'s generators into `self`, `f2` into `other`. With a
    /// zero-generator `ph` this degenerates to the plain free product.
    pub fn amalgamated_product(
        &self,
        other: &Presentation,
        ph: &Presentation,
        f1: &GeneratorMap,
        f2: &GeneratorMap,
    ) -> Result<Presentation> {
        if f1.source_rank() != ph.generator_count() || f2.source_rank() != ph.generator_count() {
            return Err(invalid(format!(
                "amalgamating maps must have one image per generator of the \
                 amalgamated presentation ({} expected, got {} and {})",
                ph.generator_count(),
                f1.source_rank(),
                f2.source_rank()
            )));
        }
        if f1.target_rank() != self.generator_count() {
            return Err(invalid("first map does not land in the first factor"));
        }
        if f2.target_rank() != other.generator_count() {
            return Err(invalid("second map does not land in the second factor"));
        }
        let g1 = self.generator_count();
        let rank = g1 + other.generator_count();
        let mut result = self.free_product(other);
        for h in 0..ph.generator_count() {
            let w1 = f1.images()[h].embed(rank, 0).expect("rank only widens");
            let w2 = f2.images()[h].embed(rank, g1).expect("rank only widens");
            let relator = w1.product(&w2.inverse())?.cyclic_reduce();
            if relator.is_empty() {
                return Err(invalid(format!(
                    "amalgamating relator for generator {:?} reduces to the empty word",
                    ph.generator_names()[h]
                )));
            }
            result.relators.push(relator);
        }
        Ok(result)
    }

    /// Structural comparison ignoring generator names: same generator count
    /// and the same relator sequence, where relators are compared up to
    /// cyclic rotation.
    pub fn equivalent_up_to_rotation(&self, other: &Presentation) -> bool {
        self.generator_count() == other.generator_count()
            && self.relator_count() == other.relator_count()
            && self
                .relators
                .iter()
                .zip(&other.relators)
                .all(|(a, b)| a.cyclically_equal(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(rank: usize, spec: &[(usize, i8)]) -> Word {
        let letters = spec
            .iter()
            .map(|&(g, s)| {
                if s >= 0 {
                    Letter::positive(g)
                } else {
                    Letter::negative(g)
                }
            })
            .collect();
        Word::from_letters(rank, letters).unwrap()
    }

    #[test]
    fn free_reduce_cancels_adjacent_inverses() {
        assert!(word(1, &[(0, 1), (0, -1)]).free_reduce().is_empty());
        assert!(word(2, &[(0, 1), (1, 1), (1, -1), (0, -1)])
            .free_reduce()
            .is_empty());
        let commutator = word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert_eq!(commutator.free_reduce(), commutator);
    }

    #[test]
    fn cyclic_reduce_strips_conjugation() {
        // a b a^-1 -> b
        let w = word(2, &[(0, 1), (1, 1), (0, -1)]);
        assert_eq!(w.cyclic_reduce(), word(2, &[(1, 1)]));
        // abab is already cyclically reduced
        let w = word(2, &[(0, 1), (1, 1), (0, 1), (1, 1)]);
        assert_eq!(w.cyclic_reduce(), w);
        assert!(Word::identity(3).cyclic_reduce().is_empty());
    }

    #[test]
    fn product_reduces_and_checks_rank() {
        let ab = word(2, &[(0, 1), (1, 1)]);
        assert!(ab.product(&ab.inverse()).unwrap().is_empty());
        let a = word(2, &[(0, 1)]);
        assert_eq!(a.product(&a).unwrap(), word(2, &[(0, 1), (0, 1)]));
        assert!(word(1, &[(0, 1)]).product(&word(2, &[(0, 1)])).is_err());
    }

    #[test]
    fn abelianized_vector_counts_exponents() {
        let commutator = word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert_eq!(commutator.abelianized_vector(), vec![0, 0]);
        let w = word(2, &[(0, 1), (0, 1), (0, 1), (1, -1)]);
        assert_eq!(w.abelianized_vector(), vec![3, -1]);
        assert_eq!(Word::identity(3).abelianized_vector(), vec![0, 0, 0]);
    }

    #[test]
    fn out_of_range_letters_are_rejected() {
        assert!(Word::from_letters(1, vec![Letter::positive(1)]).is_err());
        assert!(Word::from_letters(0, vec![]).is_ok());
    }

    fn cyclic(n: usize, name: &str, order: usize) -> Presentation {
        let letters = vec![Letter::positive(0); order];
        let w = Word::from_letters(n, letters).unwrap();
        Presentation::new(vec![name.to_string()], vec![w]).unwrap()
    }

    #[test]
    fn free_product_takes_disjoint_union() {
        let p1 = cyclic(1, "a", 2);
        let p2 = cyclic(1, "b", 3);
        let fp = p1.free_product(&p2);
        assert_eq!(fp.generator_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(fp.relator_count(), 2);
        assert_eq!(fp.relators()[0], word(2, &[(0, 1), (0, 1)]));
        assert_eq!(fp.relators()[1], word(2, &[(1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn free_product_suffixes_clashing_names() {
        let p1 = Presentation::free(vec!["b".into()]).unwrap();
        let p2 = Presentation::free(vec!["b".into()]).unwrap();
        let fp = p1.free_product(&p2);
        assert_eq!(fp.generator_names(), &["b".to_string(), "b_2".to_string()]);
    }

    #[test]
    fn direct_product_adds_commutators() {
        let p1 = Presentation::free(vec!["a".into()]).unwrap();
        let p2 = Presentation::free(vec!["b".into()]).unwrap();
        let dp = p1.direct_product(&p2);
        assert_eq!(dp.relator_count(), 1);
        assert_eq!(
            dp.relators()[0],
            word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)])
        );

        let p3 = Presentation::free(vec!["x".into(), "y".into()]).unwrap();
        let dp = p1.direct_product(&p3);
        assert_eq!(dp.generator_count(), 3);
        assert_eq!(dp.relator_count(), 2);
    }

    #[test]
    fn amalgamated_product_glues_along_images() {
        // Z *_Z Z with h -> a^2 and h -> b^3 presents the trefoil knot group.
        let p1 = Presentation::free(vec!["a".into()]).unwrap();
        let p2 = Presentation::free(vec!["b".into()]).unwrap();
        let ph = Presentation::free(vec!["h".into()]).unwrap();
        let f1 = GeneratorMap::new(1, vec![word(1, &[(0, 1), (0, 1)])]).unwrap();
        let f2 = GeneratorMap::new(1, vec![word(1, &[(0, 1), (0, 1), (0, 1)])]).unwrap();
        let amalgam = p1.amalgamated_product(&p2, &ph, &f1, &f2).unwrap();
        assert_eq!(amalgam.generator_count(), 2);
        assert_eq!(amalgam.relator_count(), 1);
        assert_eq!(
            amalgam.relators()[0],
            word(2, &[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)])
        );
    }

    #[test]
    fn empty_amalgam_is_the_free_product() {
        let p1 = cyclic(1, "a", 2);
        let p2 = cyclic(1, "b", 3);
        let ph = Presentation::new(vec![], vec![]).unwrap();
        let f1 = GeneratorMap::new(1, vec![]).unwrap();
        let f2 = GeneratorMap::new(1, vec![]).unwrap();
        let amalgam = p1.amalgamated_product(&p2, &ph, &f1, &f2).unwrap();
        assert_eq!(amalgam, p1.free_product(&p2));
    }

    #[test]
    fn amalgamated_product_rejects_arity_mismatch() {
        let p1 = Presentation::free(vec!["a".into()]).unwrap();
        let p2 = Presentation::free(vec!["b".into()]).unwrap();
        let ph = Presentation::free(vec!["h".into()]).unwrap();
        let empty = GeneratorMap::new(1, vec![]).unwrap();
        assert!(p1.amalgamated_product(&p2, &ph, &empty, &empty).is_err());
    }

    #[test]
    fn generator_map_substitutes_images() {
        // h -> ab, applied to h^-1 h^-1
        let f = GeneratorMap::new(2, vec![word(2, &[(0, 1), (1, 1)])]).unwrap();
        let w = word(1, &[(0, -1), (0, -1)]);
        assert_eq!(
            f.apply(&w).unwrap(),
            word(2, &[(1, -1), (0, -1), (1, -1), (0, -1)])
        );
    }

    #[test]
    fn presentation_rejects_bad_input() {
        assert!(Presentation::new(vec!["a".into(), "a".into()], vec![]).is_err());
        assert!(Presentation::new(vec!["1a".into()], vec![]).is_err());
        // relator that reduces to nothing
        let w = word(1, &[(0, 1), (0, -1)]);
        assert!(Presentation::new(vec!["a".into()], vec![w]).is_err());
        // relator over the wrong rank
        let w = word(2, &[(0, 1)]);
        assert!(Presentation::new(vec!["a".into()], vec![w]).is_err());
    }

    #[test]
    fn relators_are_cyclically_reduced_on_construction() {
        // b a b^-1 is stored as a
        let w = word(2, &[(1, 1), (0, 1), (1, -1)]);
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![w]).unwrap();
        assert_eq!(p.relators()[0], word(2, &[(0, 1)]));
    }

    #[test]
    fn cyclic_equality_sees_rotations_only() {
        let abab = word(2, &[(0, 1), (1, 1), (0, 1), (1, 1)]);
        let baba = word(2, &[(1, 1), (0, 1), (1, 1), (0, 1)]);
        assert!(abab.cyclically_equal(&baba));
        assert!(!abab.cyclically_equal(&abab.inverse()));
    }

    fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..rank, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(g, neg)| {
                    if neg {
                        Letter::negative(g)
                    } else {
                        Letter::positive(g)
                    }
                })
                .collect();
            Word::from_letters(rank, letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent_and_never_lengthens(w in arb_word(3, 16)) {
            let r = w.free_reduce();
            prop_assert!(r.len() <= w.len());
            prop_assert_eq!(r.free_reduce(), r.clone());
            prop_assert!(r.is_reduced());
        }

        #[test]
        fn abelianization_is_additive_over_products(u in arb_word(3, 12), v in arb_word(3, 12)) {
            let sum: Vec<i64> = u
                .abelianized_vector()
                .iter()
                .zip(v.abelianized_vector())
                .map(|(a, b)| a + b)
                .collect();
            prop_assert_eq!(u.product(&v).unwrap().abelianized_vector(), sum);
        }

        #[test]
        fn inverse_product_is_trivial(w in arb_word(3, 16)) {
            prop_assert!(w.product(&w.inverse()).unwrap().is_empty());
        }

        #[test]
        fn cyclic_reduce_is_a_rotation_invariant_fixpoint(w in arb_word(2, 12)) {
            let c = w.cyclic_reduce();
            prop_assert_eq!(c.cyclic_reduce(), c.clone());
            // conjugating by a generator never changes the cyclic reduction's length
            let a = Word::from_letters(2, vec![Letter::positive(0)]).unwrap();
            let conjugated = a.product(&w).unwrap().product(&a.inverse()).unwrap();
            prop_assert_eq!(conjugated.cyclic_reduce().len(), c.len());
        }
    }

    #[test]
    fn product_count_formulas_hold() {
        let p1 = cyclic(1, "a", 2);
        let p2 = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)])],
        )
        .unwrap();
        let fp = p1.free_product(&p2);
        assert_eq!(fp.generator_count(), 3);
        assert_eq!(fp.relator_count(), 2);
        let dp = p1.direct_product(&p2);
        assert_eq!(dp.generator_count(), 3);
        // the two factor relators plus one commutator per generator pair
        assert_eq!(
            dp.relator_count(),
            fp.relator_count() + p1.generator_count() * p2.generator_count()
        );
    }
}
