//! Coset enumeration and low-index subgroup search.
//!
//! [`todd_coxeter`] runs a deduction-based (Felsch-style) enumeration: it
//! always defines the smallest missing table entry, immediately pushes the
//! consequences of every new entry through all cyclic rotations of the
//! relators (and their inverses), and handles coincidences eagerly with a
//! union-find in which the smaller coset id survives. Completed tables are
//! put into a canonical form in which cosets are numbered by first appearance
//! when the table is read row by row, columns in the order
//! `x1, x1^-1, x2, x2^-1, ...`; re-running the enumeration on the same input
//! reproduces the table exactly.
//!
//! [`low_index_subgroups`] backtracks over partial tables in that same
//! canonical form and keeps exactly one representative per conjugacy class
//! using the minimal-table test (a completed table is emitted only if no
//! change of base coset relabels it to something lexicographically smaller).

use std::collections::{BTreeSet, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::words::{Letter, Presentation, Word};

/// A finitely generated subgroup, given by words over the ambient
/// presentation's generators. Words are freely reduced on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubgroupSpec {
    words: Vec<Word>,
}

impl SubgroupSpec {
    /// The trivial subgroup specification (no words). Enumerating against it
    /// produces the regular representation.
    pub fn empty() -> Self {
        SubgroupSpec { words: Vec::new() }
    }

    pub fn new(words: Vec<Word>) -> Self {
        SubgroupSpec {
            words: words.iter().map(Word::free_reduce).collect(),
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// A complete coset table: the action of every generator (and inverse) on
/// the cosets `0..n` of a subgroup, with coset 0 the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generator_count: usize,
    // rows[c][col] with columns x1, x1^-1, x2, x2^-1, ...
    rows: Vec<Vec<usize>>,
    subgroup: SubgroupSpec,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn subgroup(&self) -> &SubgroupSpec {
        &self.subgroup
    }

    /// Row-major table entries; row `c`, column layout `x1, x1^-1, x2, ...`.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Image of coset `c` under a single letter.
    pub fn apply(&self, c: usize, letter: Letter) -> usize {
        self.rows[c][letter.table_column()]
    }

    /// Image of coset `start` under a word, applied letter by letter.
    pub fn trace(&self, start: usize, word: &Word) -> Result<usize> {
        if start >= self.coset_count() {
            return Err(invalid(format!(
                "coset {start} out of range (table has {})",
                self.coset_count()
            )));
        }
        if word.rank() != self.generator_count {
            return Err(invalid(format!(
                "word has rank {} but the table has {} generators",
                word.rank(),
                self.generator_count
            )));
        }
        Ok(word.letters().iter().fold(start, |c, &l| self.apply(c, l)))
    }

    /// Checks the table invariants against its presentation: entries in
    /// range, generator/inverse columns mutually inverse, every relator
    /// fixing every coset, every subgroup word fixing coset 0, and the
    /// canonical first-appearance numbering.
    pub fn validate(&self, p: &Presentation) -> Result<()> {
        if p.generator_count() != self.generator_count {
            return Err(invalid("table and presentation generator counts differ"));
        }
        let n = self.coset_count();
        let cols = 2 * self.generator_count;
        for (c, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(invalid(format!("row {c} has the wrong width")));
            }
            for (col, &t) in row.iter().enumerate() {
                if t >= n {
                    return Err(invalid(format!("entry ({c}, {col}) out of range")));
                }
                if self.rows[t][col ^ 1] != c {
                    return Err(invalid(format!(
                        "columns {col} and {} are not mutually inverse at coset {c}",
                        col ^ 1
                    )));
                }
            }
        }
        for r in p.relators() {
            for c in 0..n {
                if self.trace(c, r)? != c {
                    return Err(invalid(format!("a relator moves coset {c}")));
                }
            }
        }
        for w in self.subgroup.words() {
            if self.trace(0, w)? != 0 {
                return Err(invalid("a subgroup word moves coset 0"));
            }
        }
        // canonical numbering: reading rows in order, cosets first appear in
        // increasing order
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut next = 1;
        for row in &self.rows {
            for &t in row {
                if !seen[t] {
                    if t != next {
                        return Err(invalid("table is not in canonical form"));
                    }
                    seen[t] = true;
                    next += 1;
                }
            }
        }
        if next != n {
            return Err(invalid("table is not transitive"));
        }
        Ok(())
    }
}

/// All cyclic rotations of every relator and of every inverted relator, as
/// column sequences, grouped by first column. Deduplicated and deterministic.
fn relator_rotations(p: &Presentation) -> Vec<Vec<Vec<usize>>> {
    let cols = 2 * p.generator_count();
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    for r in p.relators() {
        let forward: Vec<usize> = r.letters().iter().map(Letter::table_column).collect();
        let backward: Vec<usize> = r
            .inverse()
            .letters()
            .iter()
            .map(Letter::table_column)
            .collect();
        for base in [forward, backward] {
            let n = base.len();
            for s in 0..n {
                set.insert((0..n).map(|i| base[(s + i) % n]).collect());
            }
        }
    }
    let mut by_first = vec![Vec::new(); cols];
    for rot in set {
        by_first[rot[0]].push(rot);
    }
    by_first
}

/// Working state of a Felsch enumeration. Cosets keep their definition-time
/// ids throughout; dead cosets are redirected through `parent`.
struct Enumerator {
    cols: usize,
    max_live: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
    deductions: Vec<(usize, usize)>,
}

impl Enumerator {
    fn start(cols: usize, max_live: usize) -> Result<Self> {
        if max_live < 1 {
            return Err(Error::CosetLimitExceeded { limit: max_live });
        }
        Ok(Enumerator {
            cols,
            max_live,
            table: vec![vec![None; cols]],
            parent: vec![0],
            live: 1,
            deductions: Vec::new(),
        })
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            self.parent[c] = self.parent[self.parent[c]];
            c = self.parent[c];
        }
        c
    }

    /// Defines a fresh coset as the image of `a` under column `col`.
    fn define(&mut self, a: usize, col: usize) -> Result<()> {
        let b = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(b);
        self.table[a][col] = Some(b);
        self.table[b][col ^ 1] = Some(a);
        self.live += 1;
        if self.live > self.max_live {
            return Err(Error::CosetLimitExceeded {
                limit: self.max_live,
            });
        }
        self.deductions.push((a, col));
        self.deductions.push((b, col ^ 1));
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        // the smaller id survives
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        self.live -= 1;
        queue.push_back(hi);
    }

    /// Identifies two cosets and transfers every table entry of the dying
    /// coset to its survivor, queueing any further coincidences discovered
    /// along the way.
    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..self.cols {
                if let Some(target) = self.table[dead][col].take() {
                    // drop the mirror entry pointing back at the dead coset
                    if self.table[target][col ^ 1] == Some(dead) {
                        self.table[target][col ^ 1] = None;
                    }
                    let mu = self.find(dead);
                    let nu = self.find(target);
                    if let Some(existing) = self.table[mu][col] {
                        self.merge(nu, existing, &mut queue);
                    } else if let Some(existing) = self.table[nu][col ^ 1] {
                        self.merge(mu, existing, &mut queue);
                    } else {
                        self.table[mu][col] = Some(nu);
                        self.table[nu][col ^ 1] = Some(mu);
                        self.deductions.push((mu, col));
                        self.deductions.push((nu, col ^ 1));
                    }
                }
            }
        }
    }

    /// Traces `word` around `start`: a completed trace that does not return
    /// to its start is a coincidence; a gap of exactly one entry is filled as
    /// a deduction; longer gaps yield nothing.
    fn scan(&mut self, start: usize, word: &[usize]) {
        let s = self.find(start);
        let n = word.len();
        let mut f = s;
        let mut i = 0;
        while i < n {
            match self.table[f][word[i]] {
                Some(d) => {
                    f = self.find(d);
                    i += 1;
                }
                None => break,
            }
        }
        if i == n {
            if f != s {
                self.coincidence(f, s);
            }
            return;
        }
        let mut b = s;
        let mut j = n; // unconsumed positions are i..j
        while j > i {
            match self.table[b][word[j - 1] ^ 1] {
                Some(d) => {
                    b = self.find(d);
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i {
            // both scans met: f and b name the same coset
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            // gap of one: deduce f . word[i] = b
            self.table[f][word[i]] = Some(b);
            self.table[b][word[i] ^ 1] = Some(f);
            self.deductions.push((f, word[i]));
            self.deductions.push((b, word[i] ^ 1));
        }
    }

    /// Drains the deduction stack, scanning every relator rotation that
    /// begins with the letter of each new entry at that entry's coset.
    fn process_deductions(&mut self, rotations: &[Vec<Vec<usize>>]) {
        while let Some((c, col)) = self.deductions.pop() {
            let c = self.find(c);
            for rotation in &rotations[col] {
                self.scan(c, rotation);
            }
        }
    }

    /// Like `scan` at coset 0, but closes long gaps by defining new cosets;
    /// used to seed the enumeration with the subgroup words.
    fn scan_and_fill(&mut self, word: &[usize], rotations: &[Vec<Vec<usize>>]) -> Result<()> {
        loop {
            let n = word.len();
            let mut f = 0; // coset 0 is always its own representative
            let mut i = 0;
            while i < n {
                match self.table[f][word[i]] {
                    Some(d) => {
                        f = self.find(d);
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == n {
                if f != 0 {
                    self.coincidence(f, 0);
                    self.process_deductions(rotations);
                }
                return Ok(());
            }
            let mut b = 0;
            let mut j = n;
            while j > i {
                match self.table[b][word[j - 1] ^ 1] {
                    Some(d) => {
                        b = self.find(d);
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                    self.process_deductions(rotations);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.table[f][word[i]] = Some(b);
                self.table[b][word[i] ^ 1] = Some(f);
                self.deductions.push((f, word[i]));
                self.deductions.push((b, word[i] ^ 1));
                self.process_deductions(rotations);
                return Ok(());
            }
            // gap of two or more: define the next entry and try again
            self.define(f, word[i])?;
            self.process_deductions(rotations);
        }
    }

    /// Smallest `(live coset, column)` with no entry, in id-then-column order.
    fn first_undefined(&mut self) -> Option<(usize, usize)> {
        for c in 0..self.table.len() {
            if self.find(c) != c {
                continue;
            }
            for col in 0..self.cols {
                if self.table[c][col].is_none() {
                    return Some((c, col));
                }
            }
        }
        None
    }

    /// Compacts the completed table to its live cosets and renumbers them by
    /// first appearance (row by row, columns in order, starting from coset 0).
    fn into_table(mut self, generator_count: usize, subgroup: SubgroupSpec) -> CosetTable {
        let mut live = Vec::with_capacity(self.live);
        for c in 0..self.table.len() {
            if self.find(c) == c {
                live.push(c);
            }
        }
        let mut ordinal = vec![usize::MAX; self.table.len()];
        for (i, &c) in live.iter().enumerate() {
            ordinal[c] = i;
        }
        let n = live.len();
        // resolve every entry through the union-find
        let mut resolved = vec![vec![0usize; self.cols]; n];
        for (i, &c) in live.iter().enumerate() {
            for (col, slot) in resolved[i].iter_mut().enumerate() {
                let t = self.table[c][col].expect("enumeration left the table incomplete");
                *slot = ordinal[self.find(t)];
            }
        }
        // first-appearance renumbering (coset 0 is live[0] = 0)
        let mut new_of = vec![usize::MAX; n];
        let mut old_of = Vec::with_capacity(n);
        new_of[0] = 0;
        old_of.push(0);
        let mut at = 0;
        while at < old_of.len() {
            let old = old_of[at];
            for &t in &resolved[old] {
                if new_of[t] == usize::MAX {
                    new_of[t] = old_of.len();
                    old_of.push(t);
                }
            }
            at += 1;
        }
        let rows = (0..n)
            .map(|c| {
                (0..self.cols)
                    .map(|col| new_of[resolved[old_of[c]][col]])
                    .collect()
            })
            .collect();
        CosetTable {
            generator_count,
            rows,
            subgroup,
        }
    }
}

/// Enumerates the cosets of the subgroup `h` in the group presented by `p`.
///
/// `max_cosets` bounds the number of *live* cosets at any moment (not the
/// total ever defined); exceeding it aborts with
/// [`Error::CosetLimitExceeded`]. For a finite index the result is the
/// canonical complete table; for an infinite index the enumeration always
/// runs into the limit.
pub fn todd_coxeter(p: &Presentation, h: &SubgroupSpec, max_cosets: usize) -> Result<CosetTable> {
    for w in h.words() {
        if w.rank() != p.generator_count() {
            return Err(invalid(format!(
                "subgroup word has rank {} but the presentation has {} generators",
                w.rank(),
                p.generator_count()
            )));
        }
    }
    let rotations = relator_rotations(p);
    let mut e = Enumerator::start(2 * p.generator_count(), max_cosets)?;
    for w in h.words() {
        let cols: Vec<usize> = w.letters().iter().map(Letter::table_column).collect();
        e.scan_and_fill(&cols, &rotations)?;
    }
    while let Some((c, col)) = e.first_undefined() {
        e.define(c, col)?;
        e.process_deductions(&rotations);
    }
    Ok(e.into_table(p.generator_count(), h.clone()))
}

/// Backtracking state for the low-index search: a partial table over at most
/// `max` cosets with an undo trail.
struct Search<'a> {
    cols: usize,
    max: usize,
    rotations: &'a [Vec<Vec<usize>>],
    table: Vec<Vec<Option<usize>>>,
    count: usize,
    trail: Vec<(usize, usize)>,
    results: Vec<Vec<Vec<usize>>>,
}

impl<'a> Search<'a> {
    fn assign(&mut self, a: usize, col: usize, b: usize, queue: &mut Vec<(usize, usize)>) {
        self.table[a][col] = Some(b);
        self.table[b][col ^ 1] = Some(a);
        self.trail.push((a, col));
        self.trail.push((b, col ^ 1));
        queue.push((a, col));
        queue.push((b, col ^ 1));
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (c, col) = self.trail.pop().unwrap();
            self.table[c][col] = None;
        }
    }

    /// Scans one relator rotation at one coset. Returns false on a
    /// contradiction; fills gaps of one as forced assignments.
    fn scan(&mut self, start: usize, word: &[usize], queue: &mut Vec<(usize, usize)>) -> bool {
        let n = word.len();
        let mut f = start;
        let mut i = 0;
        while i < n {
            match self.table[f][word[i]] {
                Some(d) => {
                    f = d;
                    i += 1;
                }
                None => break,
            }
        }
        if i == n {
            return f == start;
        }
        let mut b = start;
        let mut j = n;
        while j > i {
            match self.table[b][word[j - 1] ^ 1] {
                Some(d) => {
                    b = d;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i {
            return f == b;
        }
        if j == i + 1 {
            // forced: f . word[i] = b, possible only if the mirror is free
            if self.table[b][word[i] ^ 1].is_some() {
                return false;
            }
            self.assign(f, word[i], b, queue);
        }
        true
    }

    fn propagate(&mut self, mut queue: Vec<(usize, usize)>) -> bool {
        let rotations = self.rotations;
        while let Some((c, col)) = queue.pop() {
            for word in &rotations[col] {
                if !self.scan(c, word, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn first_undefined(&self) -> Option<(usize, usize)> {
        for c in 0..self.count {
            for col in 0..self.cols {
                if self.table[c][col].is_none() {
                    return Some((c, col));
                }
            }
        }
        None
    }

    fn search(&mut self) {
        let Some((a, col)) = self.first_undefined() else {
            if self.is_canonical() {
                let rows: Vec<Vec<usize>> = self.table[..self.count]
                    .iter()
                    .map(|r| r.iter().map(|e| e.unwrap()).collect())
                    .collect();
                self.results.push(rows);
            }
            return;
        };
        let mut candidates: Vec<usize> = (0..self.count)
            .filter(|&b| self.table[b][col ^ 1].is_none())
            .collect();
        let introduces_new = self.count < self.max;
        if introduces_new {
            candidates.push(self.count);
        }
        for b in candidates {
            let is_new = b == self.count;
            if is_new {
                self.count += 1;
            }
            let mark = self.trail.len();
            let mut queue = Vec::new();
            self.assign(a, col, b, &mut queue);
            if self.propagate(queue) {
                self.search();
            }
            self.undo_to(mark);
            if is_new {
                self.count -= 1;
            }
        }
    }

    /// Minimal-table test: the completed table is canonical iff no
    /// relabeling by first appearance from another base coset is
    /// lexicographically smaller.
    fn is_canonical(&self) -> bool {
        let k = self.count;
        let flat: Vec<usize> = self.table[..k]
            .iter()
            .flat_map(|r| r.iter().map(|e| e.unwrap()))
            .collect();
        for base in 1..k {
            let mut new_of = vec![usize::MAX; k];
            let mut old_of = Vec::with_capacity(k);
            new_of[base] = 0;
            old_of.push(base);
            let mut at = 0;
            while at < old_of.len() {
                let old = old_of[at];
                for col in 0..self.cols {
                    let t = self.table[old][col].unwrap();
                    if new_of[t] == usize::MAX {
                        new_of[t] = old_of.len();
                        old_of.push(t);
                    }
                }
                at += 1;
            }
            let relabeled: Vec<usize> = (0..k)
                .flat_map(|c| {
                    let old = old_of[c];
                    (0..self.cols).map(move |col| (old, col))
                })
                .map(|(old, col)| new_of[self.table[old][col].unwrap()])
                .collect();
            if relabeled < flat {
                return false;
            }
        }
        true
    }
}

/// One canonical coset table per conjugacy class of subgroups of index at
/// most `max_index`, sorted by index and then by lexicographic table order.
pub fn low_index_subgroups(p: &Presentation, max_index: usize) -> Vec<CosetTable> {
    if max_index == 0 {
        return Vec::new();
    }
    let cols = 2 * p.generator_count();
    let rotations = relator_rotations(p);
    let mut search = Search {
        cols,
        max: max_index,
        rotations: &rotations,
        table: vec![vec![None; cols]; max_index],
        count: 1,
        trail: Vec::new(),
        results: Vec::new(),
    };
    search.search();
    let mut results = search.results;
    results.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    results
        .into_iter()
        .map(|rows| CosetTable {
            generator_count: p.generator_count(),
            rows,
            subgroup: SubgroupSpec::empty(),
        })
        .collect()
}
