//! Closed-form invariants of the determinantal quotients and graded Betti
//! tables of square-free monomial ideals via restriction homology.
//!
//! Betti numbers follow the quotient convention: the table of S/I starts
//! with a 1 in position (0, 0).

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
pub use crate::homology::reduced_homology_ranks;
use crate::homology::{homology_of_faces, HomologyRanks};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Exact binomial coefficient.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Numerical invariants of the quotient by the ideal of t-minors of the
/// generic symmetric n x n matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub t: usize,
    pub dim: i64,
    pub multiplicity: BigInt,
    pub regularity: i64,
    pub a_invariant: i64,
    pub gorenstein: bool,
}

/// Evaluates the closed forms for dimension, multiplicity, regularity and
/// a-invariant of the t-minor quotient, branching on the parity of n-t.
pub fn determinantal_invariants(n: usize, t: usize) -> Result<InvariantReport> {
    if t < 2 || t > n {
        return Err(Error::MinorSizeOutOfRange { n, t });
    }
    let (ni, ti) = (n as i64, t as i64);
    let even = (n - t).is_multiple_of(2);

    let dim = (2 * ni + 2 - ti) * (ti - 1) / 2;

    let mut e = BigRational::one();
    for a in 0..=ni - ti {
        let numer = binomial(ni + a, ti + 2 * a - 1);
        let denom = binomial(2 * a + 1, a);
        e *= BigRational::new(numer, denom);
    }
    assert!(e.is_integer(), "multiplicity formula must be integral");
    let multiplicity = e.to_integer();

    let regularity = if even {
        (ni + 2 - ti) * (ti - 1) / 2
    } else {
        (ni + 1 - ti) * (ti - 1) / 2
    };
    let a_invariant = if even {
        -(ni * (ti - 1)) / 2
    } else {
        -((ni + 1) * (ti - 1)) / 2
    };

    Ok(InvariantReport {
        n,
        t,
        dim,
        multiplicity,
        regularity,
        a_invariant,
        gorenstein: even,
    })
}

/// The h-vector and multiplicity bound of a compressed Gorenstein algebra
/// of codimension c and regularity 2s: h_i = C(c-1+i, c-1) up to the middle,
/// mirrored down again; the bound is C(c-1+s, c) + C(c+s, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedProfile {
    pub h: Vec<i64>,
    pub bound: i64,
}

pub fn compressed_profile(c: usize, s: usize) -> CompressedProfile {
    assert!(c >= 1);
    let (ci, si) = (c as i64, s as i64);
    let mut h = vec![0i64; 2 * s + 1];
    for i in 0..=si {
        let value = binomial(ci - 1 + i, ci - 1)
            .to_i64()
            .expect("h entry fits in i64");
        h[i as usize] = value;
        h[(2 * si - i) as usize] = value;
    }
    let bound = (binomial(ci - 1 + si, ci) + binomial(ci + si, ci))
        .to_i64()
        .expect("bound fits in i64");
    CompressedProfile { h, bound }
}

/// Graded Betti ranks indexed by (homological index, internal degree);
/// zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn add(&mut self, i: u32, j: u32, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &u64)> {
        self.entries.iter()
    }

    pub fn merge(mut self, other: BettiTable) -> BettiTable {
        for (&(i, j), &rank) in other.entries.iter() {
            self.add(i, j, rank);
        }
        self
    }

    /// max(j - i) over the nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Exactly one internal degree per homological index.
    pub fn is_pure_resolution(&self) -> bool {
        let mut degrees: BTreeMap<u32, usize> = BTreeMap::new();
        for &(i, _) in self.entries.keys() {
            *degrees.entry(i).or_insert(0) += 1;
        }
        degrees.values().all(|&k| k == 1)
    }

    /// Duality of a Gorenstein table with socle corner (c, sigma):
    /// entry (i, j) equals entry (c-i, sigma-j) everywhere.
    pub fn is_selfdual(&self, c: u32, sigma: u32) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), &rank)| i <= c && j <= sigma && self.get(c - i, sigma - j) == rank)
    }

    /// JSON object mapping "i,j" to the rank.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &rank)| (format!("{i},{j}"), serde_json::json!(rank)))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Text table with homological index as columns and j-i as rows.
    pub fn staircase(&self) -> String {
        if self.entries.is_empty() {
            return "(empty table)\n".to_string();
        }
        let pd = self.projective_dimension();
        let shifts: Vec<i64> = {
            let mut s: Vec<i64> = self
                .entries
                .keys()
                .map(|&(i, j)| j as i64 - i as i64)
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let mut out = String::new();
        let _ = write!(out, "{:>6}", "");
        for i in 0..=pd {
            let _ = write!(out, "{i:>8}");
        }
        out.push('\n');
        for &shift in &shifts {
            let _ = write!(out, "{shift:>6}");
            for i in 0..=pd {
                let j = shift + i as i64;
                let rank = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if rank == 0 {
                    let _ = write!(out, "{:>8}", ".");
                } else {
                    let _ = write!(out, "{rank:>8}");
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Closed-form Betti table of the quotient by the (n-2)-minor ideal: a pure
/// self-dual resolution of length 6 determined by n alone.
pub fn closed_form_betti(n: usize) -> BettiTable {
    assert!(n >= 5, "closed-form table needs n >= 5");
    let ni = n as i64;
    let b1 = (ni + 1) * ni * ni * (ni - 1) / 12;
    let b2 = (ni + 2) * ni * ni * (ni - 2) / 3;
    let b3 = (ni + 2) * (ni + 1) * (ni - 1) * (ni - 2) / 2;
    assert_eq!((ni + 1) * ni * ni * (ni - 1) % 12, 0);
    assert_eq!((ni + 2) * ni * ni * (ni - 2) % 3, 0);
    assert_eq!((ni + 2) * (ni + 1) * (ni - 1) * (ni - 2) % 2, 0);

    let mut table = BettiTable::new();
    let j = |i: i64| (ni - 3 + i) as u32;
    table.add(0, 0, 1);
    table.add(1, j(1), b1 as u64);
    table.add(2, j(2), b2 as u64);
    table.add(3, j(3), b3 as u64);
    table.add(4, (ni + 3 - 2) as u32, b2 as u64);
    table.add(5, (ni + 3 - 1) as u32, b1 as u64);
    table.add(6, 2 * n as u32, 1);
    table
}

/// Support guard for the restriction-homology enumeration.
const HOCHSTER_SUPPORT_LIMIT: usize = 14;

/// Graded Betti table of the quotient by a square-free monomial ideal:
/// entry (j - 1 - k, j) accumulates the reduced homology of dimension k of
/// the restriction of the associated complex to each j-subset of the
/// support. Cone variables contribute nothing and are discarded up front.
pub fn hochster_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_squarefree_ideal() {
        return Err(Error::NotSquareFree);
    }
    let support = ideal.support_ranks();
    let s = support.len();
    if s > HOCHSTER_SUPPORT_LIMIT {
        return Err(Error::SupportTooLarge {
            support: s,
            limit: HOCHSTER_SUPPORT_LIMIT,
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
    let mut is_face = vec![false; 1usize << s];
    for mask in 0..1u64 << s {
        is_face[mask as usize] = gen_masks.iter().all(|&g| g & mask != g);
    }

    let table = (0..1u64 << s)
        .into_par_iter()
        .map(|w| {
            let j = w.count_ones();
            let hom = restriction_homology(&is_face, w);
            let mut partial = BettiTable::new();
            for (idx, &rank) in hom.ranks().iter().enumerate() {
                if rank > 0 {
                    let k = idx as i64 - 1;
                    let i = j as i64 - 1 - k;
                    debug_assert!(i >= 0);
                    partial.add(i as u32, j, rank as u64);
                }
            }
            partial
        })
        .reduce(BettiTable::new, BettiTable::merge);
    Ok(table)
}

fn restriction_homology(is_face: &[bool], w: u64) -> HomologyRanks {
    let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); w.count_ones() as usize + 1];
    let mut sub = w;
    loop {
        if is_face[sub as usize] {
            by_card[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    while by_card.len() > 1 && by_card.last().unwrap().is_empty() {
        by_card.pop();
    }
    for bucket in &mut by_card {
        bucket.sort_unstable();
    }
    homology_of_faces(&by_card)
}

/// Convenience: restriction-homology table of a complex given directly
/// (vertices are the ring variables, in order).
pub fn hochster_betti_of_complex<L>(c: &SimplicialComplex<L>) -> Result<BettiTable> {
    let ideal = crate::complexes::stanley_reisner(c, c.vertex_count(), |v| v);
    hochster_betti(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::cyclic_polytope_facets;
    use crate::monomial::Monomial;

    #[test]
    fn invariants_for_three_minors_of_five() {
        let report = determinantal_invariants(5, 3).unwrap();
        assert_eq!(report.dim, 9);
        assert_eq!(report.multiplicity, BigInt::from(35));
        assert_eq!(report.regularity, 4);
        assert_eq!(report.a_invariant, -5);
        assert!(report.gorenstein);
    }

    #[test]
    fn invariants_for_four_minors_of_six() {
        let report = determinantal_invariants(6, 4).unwrap();
        assert_eq!(report.dim, 15);
        assert_eq!(report.multiplicity, BigInt::from(112));
        assert_eq!(report.regularity, 6);
        assert_eq!(report.a_invariant, -9);
        assert!(report.gorenstein);
    }

    #[test]
    fn invariants_at_the_hypersurface_boundary() {
        // t = n is the determinant hypersurface: degree-n equation, so the
        // product formula gives multiplicity n and regularity n-1.
        for n in 4..=8 {
            let report = determinantal_invariants(n, n).unwrap();
            assert_eq!(report.dim, ((n as i64 + 2) * (n as i64 - 1)) / 2);
            assert_eq!(report.multiplicity, BigInt::from(n));
            assert_eq!(report.regularity, n as i64 - 1);
            assert!(report.gorenstein);
        }
    }

    #[test]
    fn rejects_bad_minor_size() {
        assert!(determinantal_invariants(5, 1).is_err());
        assert!(determinantal_invariants(5, 6).is_err());
    }

    #[test]
    fn compressed_profiles() {
        let p = compressed_profile(6, 2);
        assert_eq!(p.h, vec![1, 6, 21, 6, 1]);
        assert_eq!(p.bound, 35);
        let p = compressed_profile(6, 3);
        assert_eq!(p.h, vec![1, 6, 21, 56, 21, 6, 1]);
        assert_eq!(p.bound, 112);
        // Codimension-1 regularity-2 case: a cubic hypersurface quotient has
        // h-vector (1,1,1) and multiplicity 3, meeting the bound.
        let p = compressed_profile(1, 1);
        assert_eq!(p.h, vec![1, 1, 1]);
        assert_eq!(p.bound, 3);
    }

    #[test]
    fn closed_form_tables() {
        let t5 = closed_form_betti(5);
        assert_eq!(t5.get(0, 0), 1);
        assert_eq!(t5.get(1, 3), 50);
        assert_eq!(t5.get(2, 4), 175);
        assert_eq!(t5.get(3, 5), 252);
        assert_eq!(t5.get(4, 6), 175);
        assert_eq!(t5.get(5, 7), 50);
        assert_eq!(t5.get(6, 10), 1);
        assert_eq!(t5.entries().count(), 7);
        assert_eq!(t5.regularity(), 4);
        assert!(t5.is_pure_resolution());
        assert!(t5.is_selfdual(6, 10));

        let t6 = closed_form_betti(6);
        assert_eq!(t6.get(1, 4), 105);
        assert_eq!(t6.get(2, 5), 384);
        assert_eq!(t6.get(3, 6), 560);
        assert_eq!(t6.get(4, 7), 384);
        assert_eq!(t6.get(5, 8), 105);
        assert_eq!(t6.get(6, 12), 1);
        assert_eq!(t6.regularity(), 6);
    }

    #[test]
    fn closed_forms_are_integral_up_to_forty() {
        for n in 5..=40usize {
            let table = closed_form_betti(n);
            assert_eq!(table.entries().count(), 7, "n={n}");
        }
    }

    #[test]
    fn hochster_principal_quadric() {
        let ideal = MonomialIdeal::new(2, [Monomial::from_exps([(0, 1), (1, 1)])]);
        let table = hochster_betti(&ideal).unwrap();
        assert_eq!(table.get(0, 0), 1);
        assert_eq!(table.get(1, 2), 1);
        assert_eq!(table.entries().count(), 2);
    }

    #[test]
    fn hochster_complete_intersection_of_two_quadrics() {
        let ideal = MonomialIdeal::new(
            4,
            [
                Monomial::from_exps([(0, 1), (2, 1)]),
                Monomial::from_exps([(1, 1), (3, 1)]),
            ],
        );
        let table = hochster_betti(&ideal).unwrap();
        assert_eq!(table.get(0, 0), 1);
        assert_eq!(table.get(1, 2), 2);
        assert_eq!(table.get(2, 4), 1);
        assert_eq!(table.entries().count(), 3);
    }

    #[test]
    fn cone_points_do_not_change_the_table() {
        // Same generators in a larger ring: the Betti table is unchanged.
        let gens = [
            Monomial::from_exps([(0, 1), (2, 1)]),
            Monomial::from_exps([(1, 1), (3, 1)]),
        ];
        let small = hochster_betti(&MonomialIdeal::new(4, gens.clone())).unwrap();
        let coned = hochster_betti(&MonomialIdeal::new(7, gens)).unwrap();
        assert_eq!(small, coned);
    }

    #[test]
    fn hochster_of_quadrilateral_boundary() {
        let quad = cyclic_polytope_facets(4, 2).unwrap();
        let table = hochster_betti_of_complex(&quad).unwrap();
        assert_eq!(table.get(0, 0), 1);
        assert_eq!(table.get(1, 2), 2);
        assert_eq!(table.get(2, 4), 1);
        assert!(table.is_selfdual(2, 4));
    }

    #[test]
    fn compressed_profile_ties_to_the_matching_complex() {
        // The h-vector of M(2n, n-3) is the codimension-6 compressed
        // profile, and the closed-form multiplicity is its facet count.
        for n in 5..=7usize {
            let complex = crate::complexes::matching_complex_facets(2 * n, n - 3).unwrap();
            let fh = crate::complexes::f_h_vectors(&complex);
            let profile = compressed_profile(6, n - 3);
            assert_eq!(fh.h, profile.h, "n={n}");
            assert_eq!(profile.bound as usize, complex.facet_count(), "n={n}");
            let invariants = determinantal_invariants(n, n - 2).unwrap();
            assert_eq!(
                invariants.multiplicity,
                BigInt::from(complex.facet_count()),
                "n={n}"
            );
        }
    }

    #[test]
    fn refuses_non_squarefree_ideal() {
        let ideal = MonomialIdeal::new(2, [Monomial::from_exps([(0, 2)])]);
        assert!(matches!(hochster_betti(&ideal), Err(Error::NotSquareFree)));
    }
}
