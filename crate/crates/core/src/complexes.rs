//! Simplicial complexes: the band cycle, matching complexes of cycle
//! graphs, cyclic-polytope boundaries via Gale's evenness condition, the
//! Stanley-Reisner translation in both directions, and the face-count
//! invariants used by the verification pipeline.
//!
//! Faces are vertex bitmasks (ground sets stay below 64 vertices at desk
//! scale); facet families are stored as antichains.

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::variable::Variable;
use itertools::Itertools;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Display;

/// A simplicial complex given by its facets over a labeled vertex set.
/// Vertices are indices into `labels`; faces are bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex<L> {
    labels: Vec<L>,
    facets: Vec<u64>,
}

impl<L> SimplicialComplex<L> {
    /// Builds the complex, deduplicating facets and dropping any facet
    /// contained in another.
    pub fn from_facets(labels: Vec<L>, facets: impl IntoIterator<Item = u64>) -> Self {
        assert!(labels.len() <= 64, "ground set too large for bitmask faces");
        let ground: u64 = if labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << labels.len()) - 1
        };
        let distinct: BTreeSet<u64> = facets.into_iter().collect();
        for &f in &distinct {
            assert_eq!(f & !ground, 0, "facet uses vertices outside the ground set");
        }
        let facets: Vec<u64> = distinct
            .iter()
            .filter(|&&f| !distinct.iter().any(|&g| g != f && f & g == f))
            .copied()
            .collect();
        SimplicialComplex { labels, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Largest face cardinality; 0 for the complex whose only face is empty.
    pub fn max_face_card(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Dimension, or `None` for the void complex (no faces at all).
    pub fn dim(&self) -> Option<i32> {
        if self.facets.is_empty() {
            None
        } else {
            Some(self.max_face_card() as i32 - 1)
        }
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .all(|f| f.count_ones() as usize == self.max_face_card())
    }

    pub fn is_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    /// Vertices contained in every facet.
    pub fn cone_vertices(&self) -> Vec<usize> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let common = self.facets.iter().fold(u64::MAX, |acc, &f| acc & f);
        (0..self.vertex_count())
            .filter(|&v| common >> v & 1 == 1)
            .collect()
    }

    /// All faces grouped by cardinality: `result[k]` lists the k-element
    /// faces as sorted masks; `result[0]` is the empty face for any
    /// non-void complex.
    pub fn faces_by_card(&self) -> Vec<Vec<u64>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &facet in &self.facets {
            // Enumerate all submasks of the facet.
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut by_card = vec![Vec::new(); self.max_face_card() + 1];
        for mask in seen {
            by_card[mask.count_ones() as usize].push(mask);
        }
        for bucket in &mut by_card {
            bucket.sort_unstable();
        }
        by_card
    }

    /// Sorted facet lines, vertices comma-separated by label.
    pub fn facet_lines(&self) -> Vec<String>
    where
        L: Display,
    {
        let mut lines: Vec<String> = self
            .facets
            .iter()
            .map(|&f| {
                (0..self.vertex_count())
                    .filter(|&v| f >> v & 1 == 1)
                    .map(|v| self.labels[v].to_string())
                    .join(",")
            })
            .collect();
        lines.sort();
        lines
    }
}

/// The cycle on the 2n diagonal and band variables: `x[i][i]` is joined to
/// the band variables sharing its index. Construction verifies the graph
/// really is a single 2n-cycle alternating between the two families, and
/// fixes the traversal labeling 1..2n starting `x[1][1]`, `x[1][2]`, `x[2][2]`, …
#[derive(Debug, Clone)]
pub struct BandCycle {
    n: usize,
    cycle: Vec<Variable>,
}

impl BandCycle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::MatrixTooSmall(n, 4));
        }
        let order = TermOrder::standard(n)?;
        let diag = order.diagonal_vars();
        let band = order.band_vars();
        let mut adjacency: HashMap<Variable, Vec<Variable>> = HashMap::new();
        for &d in &diag {
            for &u in &band {
                if u.row() == d.row() || u.col() == d.row() {
                    adjacency.entry(d).or_default().push(u);
                    adjacency.entry(u).or_default().push(d);
                }
            }
        }
        for (v, neighbors) in &adjacency {
            assert_eq!(neighbors.len(), 2, "vertex {v} does not have degree 2");
        }
        assert_eq!(adjacency.len(), 2 * n);

        let start = Variable::new(1, 1);
        let mut cycle = vec![start, Variable::new(1, 2)];
        while cycle.len() < 2 * n {
            let current = cycle[cycle.len() - 1];
            let previous = cycle[cycle.len() - 2];
            let next = *adjacency[&current]
                .iter()
                .find(|&&w| w != previous)
                .expect("degree-2 vertex has a second neighbor");
            assert!(!cycle.contains(&next), "traversal revisited {next}");
            cycle.push(next);
        }
        let last = cycle[2 * n - 1];
        assert!(
            adjacency[&last].contains(&start),
            "traversal does not close into a cycle"
        );
        assert!(cycle
            .iter()
            .enumerate()
            .all(|(i, v)| v.is_diagonal() == (i % 2 == 0)));
        Ok(BandCycle { n, cycle })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The variable at cycle position `p` (1-based labels 1..2n).
    pub fn var_at(&self, p: usize) -> Variable {
        self.cycle[p - 1]
    }

    /// Cycle position (1-based) of a diagonal or band variable.
    pub fn position_of(&self, v: Variable) -> Option<usize> {
        self.cycle.iter().position(|&w| w == v).map(|i| i + 1)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.cycle
    }
}

/// Edges of the m-cycle on vertices 0..m-1.
fn cycle_edges(m: usize) -> Vec<(usize, usize)> {
    (0..m).map(|i| (i, (i + 1) % m)).collect()
}

/// The matching complex of the m-cycle with parameter r: facets are the
/// vertex sets of the partial matchings with exactly r edges. Pure of
/// dimension 2r-1; labels are the cycle vertices 1..m.
pub fn matching_complex_facets(m: usize, r: usize) -> Result<SimplicialComplex<usize>> {
    if r < 1 || 2 * r >= m {
        return Err(Error::MatchingSizeOutOfRange { m, r });
    }
    let edges = cycle_edges(m);
    let mut facets = BTreeSet::new();
    let mut stack: Vec<(usize, u64, usize)> = vec![(0, 0, 0)];
    while let Some((next_edge, used, count)) = stack.pop() {
        if count == r {
            facets.insert(used);
            continue;
        }
        if next_edge >= edges.len() {
            continue;
        }
        for (idx, &(a, b)) in edges.iter().enumerate().skip(next_edge) {
            let mask = (1u64 << a) | (1u64 << b);
            if used & mask == 0 {
                stack.push((idx + 1, used | mask, count + 1));
            }
        }
    }
    let labels = (1..=m).collect();
    Ok(SimplicialComplex::from_facets(labels, facets))
}

/// Boundary complex of the even-dimensional cyclic polytope C(m, d):
/// facets are the d-subsets M of `[m]` such that between any two elements
/// outside M the number of elements of M is even.
pub fn cyclic_polytope_facets(m: usize, d: usize) -> Result<SimplicialComplex<usize>> {
    if d == 0 || d >= m || !d.is_multiple_of(2) {
        return Err(Error::CyclicDimensionInvalid { m, d });
    }
    let mut facets = Vec::new();
    for subset in (0..m).combinations(d) {
        let mask: u64 = subset.iter().fold(0, |acc, &v| acc | 1 << v);
        if gale_even(m, &subset) {
            facets.push(mask);
        }
    }
    let labels = (1..=m).collect();
    Ok(SimplicialComplex::from_facets(labels, facets))
}

/// Gale evenness: for consecutive outside elements i < j, the count of
/// chosen elements strictly between them must be even (this implies the
/// condition for every outside pair).
fn gale_even(m: usize, subset: &[usize]) -> bool {
    let chosen: HashSet<usize> = subset.iter().copied().collect();
    let outside: Vec<usize> = (0..m).filter(|v| !chosen.contains(v)).collect();
    outside.windows(2).all(|w| {
        let between = subset.iter().filter(|&&v| w[0] < v && v < w[1]).count();
        between % 2 == 0
    })
}

/// All inclusion-minimal nonfaces, by brute force. Vertices lying in every
/// facet can never occur in a minimal nonface, so enumeration is restricted
/// to the rest of the ground set.
pub fn minimal_nonfaces<L>(c: &SimplicialComplex<L>) -> Vec<u64> {
    let cone: u64 = c.cone_vertices().iter().fold(0u64, |acc, &v| acc | 1 << v);
    let free: Vec<usize> = (0..c.vertex_count())
        .filter(|&v| cone >> v & 1 == 0)
        .collect();
    assert!(
        free.len() <= 26,
        "nonface enumeration over {} vertices is beyond desk scale",
        free.len()
    );
    let mut result = Vec::new();
    for bits in 0..1u64 << free.len() {
        let mask: u64 = free
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .fold(0, |acc, (_, &v)| acc | 1 << v);
        if mask == 0 || c.is_face(mask) {
            continue;
        }
        let minimal = (0..c.vertex_count())
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| c.is_face(mask & !(1 << v)));
        if minimal {
            result.push(mask);
        }
    }
    result.sort_unstable();
    result
}

/// Stanley-Reisner ideal: generators are the minimal nonfaces, with each
/// vertex mapped to a variable rank by `var_of`.
pub fn stanley_reisner<L>(
    c: &SimplicialComplex<L>,
    num_vars: usize,
    var_of: impl Fn(usize) -> usize,
) -> MonomialIdeal {
    let gens = minimal_nonfaces(c).into_iter().map(|mask| {
        Monomial::from_exps(
            (0..c.vertex_count())
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| (var_of(v), 1)),
        )
    });
    MonomialIdeal::new(num_vars, gens)
}

/// Guard for exhaustive enumeration over the support of an ideal.
const SUPPORT_ENUMERATION_LIMIT: usize = 22;

/// The simplicial complex whose Stanley-Reisner ideal is the given
/// square-free ideal; vertices are the variable ranks 0..num_vars-1.
/// Variables absent from every generator lie in every facet (cone points).
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex<usize>> {
    if !ideal.is_squarefree_ideal() {
        return Err(Error::NotSquareFree);
    }
    let support = ideal.support_ranks();
    if support.len() > SUPPORT_ENUMERATION_LIMIT {
        return Err(Error::SupportTooLarge {
            support: support.len(),
            limit: SUPPORT_ENUMERATION_LIMIT,
        });
    }
    let gen_masks: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| {
            g.support()
                .map(|r| support.binary_search(&r).expect("generator in support"))
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();

    // Faces over the support: subsets containing no generator.
    let mut faces: Vec<u64> = Vec::new();
    for mask in 0..1u64 << support.len() {
        if gen_masks.iter().all(|&g| g & mask != g) {
            faces.push(mask);
        }
    }
    let face_set: HashSet<u64> = faces.iter().copied().collect();
    let maximal: Vec<u64> = faces
        .iter()
        .filter(|&&f| {
            (0..support.len()).all(|v| f >> v & 1 == 1 || !face_set.contains(&(f | 1 << v)))
        })
        .copied()
        .collect();

    let cone_mask: u64 = ideal.cone_ranks().iter().fold(0u64, |acc, &r| acc | 1 << r);
    let facets = maximal.into_iter().map(|f| {
        let mut full = cone_mask;
        for (i, &r) in support.iter().enumerate() {
            if f >> i & 1 == 1 {
                full |= 1 << r;
            }
        }
        full
    });
    Ok(SimplicialComplex::from_facets(
        (0..ideal.num_vars()).collect(),
        facets,
    ))
}

/// Krull dimension and multiplicity of the quotient by a square-free
/// monomial ideal: the largest face cardinality of the associated complex
/// (cone points included) and the number of faces of that cardinality.
pub fn dimension_and_multiplicity(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    let complex = complex_of_ideal(ideal)?;
    let dim = complex.max_face_card();
    let mult = complex
        .facets()
        .iter()
        .filter(|f| f.count_ones() as usize == dim)
        .count();
    Ok((dim, mult))
}

/// Face-count vectors: `f` starts at the empty face (`f[0] = 1`) and `h` is
/// the standard binomial transform, of length dim + 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FHVectors {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
}

impl FHVectors {
    /// Sum of the h-entries equals the number of top-dimensional faces.
    pub fn h_sum(&self) -> i64 {
        self.h.iter().sum()
    }

    pub fn h_is_symmetric(&self) -> bool {
        let h = &self.h;
        (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
    }
}

pub fn f_h_vectors<L>(c: &SimplicialComplex<L>) -> FHVectors {
    let by_card = c.faces_by_card();
    let f: Vec<i64> = by_card.iter().map(|bucket| bucket.len() as i64).collect();
    let d = f.len() as i64 - 2; // dimension of the complex
    let mut h = Vec::with_capacity(f.len());
    for j in 0..f.len() as i64 {
        let mut acc: i128 = 0;
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial_i128(d + 1 - i, j - i) * f[i as usize] as i128;
        }
        h.push(i64::try_from(acc).expect("h entry fits in i64"));
    }
    FHVectors { f, h }
}

fn binomial_i128(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Sphere evidence for a pure complex: pseudomanifold (every ridge in
/// exactly two facets), reduced homology of a sphere of the facet
/// dimension, and a symmetric h-vector.
#[derive(Debug, Clone)]
pub struct SphereReport {
    pub pure: bool,
    pub dim: i32,
    pub pseudomanifold: bool,
    pub homology_ranks: Vec<usize>,
    pub homology_is_sphere: bool,
    pub h_symmetric: bool,
}

impl SphereReport {
    pub fn passed(&self) -> bool {
        self.pure && self.pseudomanifold && self.homology_is_sphere && self.h_symmetric
    }
}

pub fn sphere_checks<L>(c: &SimplicialComplex<L>) -> SphereReport {
    let pure = c.is_pure();
    let dim = c.dim().unwrap_or(-1);

    let mut ridge_counts: HashMap<u64, usize> = HashMap::new();
    for &facet in c.facets() {
        for v in 0..c.vertex_count() {
            if facet >> v & 1 == 1 {
                *ridge_counts.entry(facet & !(1 << v)).or_insert(0) += 1;
            }
        }
    }
    let pseudomanifold = !ridge_counts.is_empty() && ridge_counts.values().all(|&k| k == 2);

    let homology = crate::homology::reduced_homology_ranks(c);
    let ranks = homology.ranks().to_vec();
    let homology_is_sphere = dim >= 0
        && homology.reduced(dim) == 1
        && (-1..=dim)
            .filter(|&k| k != dim)
            .all(|k| homology.reduced(k) == 0);

    let h_symmetric = f_h_vectors(c).h_is_symmetric();

    SphereReport {
        pure,
        dim,
        pseudomanifold,
        homology_ranks: ranks,
        homology_is_sphere,
        h_symmetric,
    }
}
