//! Finite combinatorial 2-complexes.
//!
//! A [`TwoComplex`] has numbered vertices, directed edges, and faces attached
//! along closed edge paths. The constructions here realize the standard
//! dictionary between presentations and 2-complexes: every presentation has a
//! one-vertex presentation complex, and conversely every connected complex
//! with a chosen spanning tree reads off a presentation of its fundamental
//! group (generators are the non-tree edges, relators are the face loops with
//! tree edges deleted).

use crate::error::{invalid, Error, Result};
use crate::words::{Letter, Presentation, Word};

/// Traversal direction of an edge inside an attaching loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    /// `+1` for forward, `-1` for backward.
    pub fn sign(&self) -> i8 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub fn reversed(&self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// A directed edge between two vertices. Loops (`tail == head`) are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

/// One step of an attaching loop: an edge traversed in a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub dir: Direction,
}

impl Step {
    pub fn forward(edge: usize) -> Step {
        Step {
            edge,
            dir: Direction::Forward,
        }
    }

    pub fn backward(edge: usize) -> Step {
        Step {
            edge,
            dir: Direction::Backward,
        }
    }
}

/// The closed edge path along which a face is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachingLoop {
    pub steps: Vec<Step>,
}

/// A finite 2-complex: `vertex_count` vertices, directed edges, and faces
/// attached along closed edge paths.
///
/// Invariants (checked at construction): at least one vertex, edge endpoints
/// in range, every attaching loop nonempty, consecutive steps chained
/// head-to-tail, and the loop closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    vertex_count: usize,
    edges: Vec<Edge>,
    faces: Vec<AttachingLoop>,
}

impl TwoComplex {
    pub fn new(vertex_count: usize, edges: Vec<Edge>, faces: Vec<AttachingLoop>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(invalid("a complex needs at least one vertex"));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= vertex_count || e.head >= vertex_count {
                return Err(invalid(format!("edge {i} has an endpoint out of range")));
            }
        }
        let complex = TwoComplex {
            vertex_count,
            edges,
            faces: Vec::new(),
        };
        for (i, f) in faces.iter().enumerate() {
            if f.steps.is_empty() {
                return Err(invalid(format!("face {i} has an empty attaching loop")));
            }
            for (j, s) in f.steps.iter().enumerate() {
                if s.edge >= complex.edges.len() {
                    return Err(invalid(format!("face {i} step {j} uses an unknown edge")));
                }
            }
            for j in 0..f.steps.len() {
                let next = (j + 1) % f.steps.len();
                if complex.step_end(f.steps[j]) != complex.step_start(f.steps[next]) {
                    return Err(invalid(format!(
                        "face {i} attaching loop breaks between steps {j} and {next}"
                    )));
                }
            }
        }
        Ok(TwoComplex { faces, ..complex })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[AttachingLoop] {
        &self.faces
    }

    /// Vertex a step departs from.
    pub fn step_start(&self, s: Step) -> usize {
        match s.dir {
            Direction::Forward => self.edges[s.edge].tail,
            Direction::Backward => self.edges[s.edge].head,
        }
    }

    /// Vertex a step arrives at.
    pub fn step_end(&self, s: Step) -> usize {
        match s.dir {
            Direction::Forward => self.edges[s.edge].head,
            Direction::Backward => self.edges[s.edge].tail,
        }
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..self.vertex_count)
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    /// Deterministic spanning tree rooted at vertex 0.
    ///
    /// The tree is grown by repeatedly scanning the edge list in id order and
    /// attaching any edge with exactly one endpoint already reached, checking
    /// the forward direction (tail reached, head new) before the reverse;
    /// newly reached vertices take effect immediately within the scan. The
    /// scan repeats until a full pass adds nothing.
    pub fn spanning_tree(&self) -> Result<SpanningTree> {
        let mut reached = vec![false; self.vertex_count];
        let mut in_tree = vec![false; self.edges.len()];
        let mut parents: Vec<Option<Step>> = vec![None; self.vertex_count];
        reached[0] = true;
        let mut reached_count = 1;
        loop {
            let mut changed = false;
            for (id, e) in self.edges.iter().enumerate() {
                if reached[e.tail] && !reached[e.head] {
                    reached[e.head] = true;
                    in_tree[id] = true;
                    parents[e.head] = Some(Step::forward(id));
                    reached_count += 1;
                    changed = true;
                } else if reached[e.head] && !reached[e.tail] {
                    reached[e.tail] = true;
                    in_tree[id] = true;
                    parents[e.tail] = Some(Step::backward(id));
                    reached_count += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if reached_count < self.vertex_count {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree { in_tree, parents })
    }

    /// One-point union: vertex 0 of `self` is identified with vertex 0 of
    /// `other`; all other cells are kept disjoint, `self`'s cells first.
    pub fn wedge(&self, other: &TwoComplex) -> TwoComplex {
        let v1 = self.vertex_count;
        let e1 = self.edges.len();
        // other's vertex 0 maps to 0; its vertex w >= 1 maps to v1 + w - 1
        let map_vertex = |w: usize| if w == 0 { 0 } else { v1 + w - 1 };
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            tail: map_vertex(e.tail),
            head: map_vertex(e.head),
        }));
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|f| {
            AttachingLoop {
                steps: f
                    .steps
                    .iter()
                    .map(|s| Step {
                        edge: s.edge + e1,
                        dir: s.dir,
                    })
                    .collect(),
            }
        }));
        TwoComplex::new(v1 + other.vertex_count - 1, edges, faces)
            .expect("wedge of valid complexes is valid")
    }

    /// 2-skeleton of the cartesian product.
    ///
    /// Vertices are pairs `(v1, v2)` (numbered `v1 * V2 + v2`). Edges come in
    /// two blocks: `(e1, v2)` slices of the first factor, then `(v1, e2)`
    /// slices of the second. Faces are the `(f1, v2)` slices, the `(v1, f2)`
    /// slices, and one commutator square per edge pair `(e1, e2)` attached
    /// along `(e1, tail2) (head1, e2) (e1, head2)^-1 (tail1, e2)^-1`.
    pub fn product_2skeleton(&self, other: &TwoComplex) -> TwoComplex {
        let (v1, v2) = (self.vertex_count, other.vertex_count);
        let (en1, en2) = (self.edges.len(), other.edges.len());
        let vertex = |a: usize, b: usize| a * v2 + b;
        let a_edge = |e: usize, b: usize| e * v2 + b;
        let b_edge = |a: usize, e: usize| en1 * v2 + a * en2 + e;

        let mut edges = Vec::with_capacity(en1 * v2 + v1 * en2);
        for e in &self.edges {
            for b in 0..v2 {
                edges.push(Edge {
                    tail: vertex(e.tail, b),
                    head: vertex(e.head, b),
                });
            }
        }
        for a in 0..v1 {
            for e in &other.edges {
                edges.push(Edge {
                    tail: vertex(a, e.tail),
                    head: vertex(a, e.head),
                });
            }
        }

        let mut faces = Vec::new();
        for f in &self.faces {
            for b in 0..v2 {
                faces.push(AttachingLoop {
                    steps: f
                        .steps
                        .iter()
                        .map(|s| Step {
                            edge: a_edge(s.edge, b),
                            dir: s.dir,
                        })
                        .collect(),
                });
            }
        }
        for a in 0..v1 {
            for f in &other.faces {
                faces.push(AttachingLoop {
                    steps: f
                        .steps
                        .iter()
                        .map(|s| Step {
                            edge: b_edge(a, s.edge),
                            dir: s.dir,
                        })
                        .collect(),
                });
            }
        }
        for (i, e1) in self.edges.iter().enumerate() {
            for (j, e2) in other.edges.iter().enumerate() {
                faces.push(AttachingLoop {
                    steps: vec![
                        Step::forward(a_edge(i, e2.tail)),
                        Step::forward(b_edge(e1.head, j)),
                        Step::backward(a_edge(i, e2.head)),
                        Step::backward(b_edge(e1.tail, j)),
                    ],
                });
            }
        }
        TwoComplex::new(v1 * v2, edges, faces).expect("product of valid complexes is valid")
    }
}

/// Presentation complex: one vertex, a loop edge per generator, and one face
/// per relator attached along the relator word.
pub fn presentation_complex(p: &Presentation) -> TwoComplex {
    let edges = vec![Edge { tail: 0, head: 0 }; p.generator_count()];
    let faces = p
        .relators()
        .iter()
        .map(|r| AttachingLoop {
            steps: r
                .letters()
                .iter()
                .map(|l| Step {
                    edge: l.generator(),
                    dir: if l.is_inverse() {
                        Direction::Backward
                    } else {
                        Direction::Forward
                    },
                })
                .collect(),
        })
        .collect();
    TwoComplex::new(1, edges, faces).expect("presentation complexes are always valid")
}

/// A spanning tree of a connected complex, rooted at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    in_tree: Vec<bool>,
    // parents[v] = step taking the parent of v to v; None exactly for the root
    parents: Vec<Option<Step>>,
}

impl SpanningTree {
    pub fn contains(&self, edge: usize) -> bool {
        self.in_tree[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.in_tree.iter().filter(|&&b| b).count()
    }

    /// Ids of the tree edges, ascending.
    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len())
            .filter(|&e| self.in_tree[e])
            .collect()
    }

    /// The step taking `v`'s parent to `v`; `None` for the root.
    pub fn parent_step(&self, v: usize) -> Option<Step> {
        self.parents[v]
    }

    /// The unique tree path from the root to `v`, as a list of steps.
    pub fn path_from_root(&self, complex: &TwoComplex, v: usize) -> Vec<Step> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(step) = self.parents[cur] {
            path.push(step);
            cur = complex.step_start(step);
        }
        path.reverse();
        path
    }

    fn matches(&self, complex: &TwoComplex) -> bool {
        if self.in_tree.len() != complex.edge_count()
            || self.parents.len() != complex.vertex_count()
        {
            return false;
        }
        if self.edge_count() + 1 != complex.vertex_count() {
            return false;
        }
        // every vertex must walk up to the root through tree edges
        for v in 0..complex.vertex_count() {
            let mut cur = v;
            let mut hops = 0;
            while let Some(step) = self.parents[cur] {
                if step.edge >= complex.edge_count()
                    || !self.in_tree[step.edge]
                    || complex.step_end(step) != cur
                {
                    return false;
                }
                cur = complex.step_start(step);
                hops += 1;
                if hops > complex.vertex_count() {
                    return false;
                }
            }
            if cur != 0 {
                return false;
            }
        }
        true
    }
}

/// A presentation read off a complex along a spanning tree, together with the
/// number of relators that reduced to the empty word and were dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePathPresentation {
    pub presentation: Presentation,
    pub dropped_relators: usize,
}

/// Reads a presentation of the fundamental group of `complex` relative to the
/// spanning tree `tree`.
///
/// Generators are the non-tree edges (named `x1, x2, ...` in edge-id order);
/// each face contributes the relator obtained by reading its attaching loop
/// and deleting tree edges. Relators that reduce to the empty word are
/// dropped and counted.
pub fn edge_path_presentation(
    complex: &TwoComplex,
    tree: &SpanningTree,
) -> Result<EdgePathPresentation> {
    if !tree.matches(complex) {
        return Err(invalid("spanning tree does not fit the complex"));
    }
    let mut generator_of_edge: Vec<Option<usize>> = vec![None; complex.edge_count()];
    let mut names = Vec::new();
    for (e, slot) in generator_of_edge.iter_mut().enumerate() {
        if !tree.contains(e) {
            *slot = Some(names.len());
            names.push(format!("x{}", names.len() + 1));
        }
    }
    let rank = names.len();
    let mut relators = Vec::new();
    let mut dropped = 0;
    for face in complex.faces() {
        let letters: Vec<Letter> = face
            .steps
            .iter()
            .filter_map(|s| {
                generator_of_edge[s.edge].map(|g| match s.dir {
                    Direction::Forward => Letter::positive(g),
                    Direction::Backward => Letter::negative(g),
                })
            })
            .collect();
        let w = Word::from_letters(rank, letters)
            .expect("generator indices are in range")
            .cyclic_reduce();
        if w.is_empty() {
            dropped += 1;
        } else {
            relators.push(w);
        }
    }
    Ok(EdgePathPresentation {
        presentation: Presentation::new(names, relators)
            .expect("nonempty reduced relators over fresh names"),
        dropped_relators: dropped,
    })
}
