//! Reduced simplicial homology over the rationals, computed exactly from
//! boundary-matrix ranks.
//!
//! Chain groups include the empty face, so the ranks follow the reduced
//! convention: the complex whose only face is empty has one unit of
//! homology in dimension -1.

use crate::complexes::SimplicialComplex;
use num::{BigRational, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// Reduced homology ranks; index 0 holds dimension -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn reduced(&self, k: i32) -> usize {
        let idx = k + 1;
        if idx < 0 {
            return 0;
        }
        self.ranks.get(idx as usize).copied().unwrap_or(0)
    }

    /// Ranks from dimension -1 upward.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Exact rank over the rationals of a sparse matrix given by columns of
/// (row, coefficient) entries, via left-to-right column reduction.
pub fn rational_rank(columns: Vec<Vec<(usize, BigRational)>>) -> usize {
    // Finalized columns are stored as normalized tails: the entries above a
    // pivot row, divided by the pivot coefficient.
    let mut finalized: HashMap<usize, Vec<(usize, BigRational)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut work: BTreeMap<usize, BigRational> =
            col.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        while let Some((low, coeff)) = work.pop_last() {
            match finalized.get(&low) {
                Some(pivot_tail) => {
                    // Popping the entry is the cancellation at the pivot row.
                    for (row, c) in pivot_tail {
                        let entry = work.entry(*row).or_insert_with(BigRational::zero);
                        *entry -= &coeff * c;
                        if entry.is_zero() {
                            work.remove(row);
                        }
                    }
                }
                None => {
                    let inv = coeff.recip();
                    let tail: Vec<(usize, BigRational)> =
                        work.iter().map(|(&row, c)| (row, c * &inv)).collect();
                    finalized.insert(low, tail);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Boundary of a face under the orientation induced by ascending vertex
/// order: removing the t-th smallest vertex carries the sign (-1)^t.
fn boundary_column(mask: u64, lower_faces: &[u64]) -> Vec<(usize, BigRational)> {
    let mut column = Vec::new();
    let mut t = 0;
    for v in 0..64 {
        if mask >> v & 1 == 1 {
            let sub = mask & !(1 << v);
            let row = lower_faces
                .binary_search(&sub)
                .expect("boundary face present");
            let sign: i64 = if t % 2 == 0 { 1 } else { -1 };
            column.push((row, BigRational::from_integer(sign.into())));
            t += 1;
        }
    }
    column
}

/// Reduced homology ranks from faces grouped by cardinality (as produced by
/// `SimplicialComplex::faces_by_card`). An empty slice is the void complex.
pub(crate) fn homology_of_faces(by_card: &[Vec<u64>]) -> HomologyRanks {
    if by_card.is_empty() {
        return HomologyRanks { ranks: Vec::new() };
    }
    let top = by_card.len() - 1; // largest face cardinality
                                 // boundary_rank[k] = rank of the map from k-faces to (k-1)-faces,
                                 // where cardinality k+1 faces have dimension k; index 0 is the
                                 // augmentation onto the empty face.
    let mut boundary_rank = vec![0usize; top + 1];
    for k in 1..=top {
        let columns: Vec<Vec<(usize, BigRational)>> = by_card[k]
            .iter()
            .map(|&mask| boundary_column(mask, &by_card[k - 1]))
            .collect();
        boundary_rank[k] = rational_rank(columns);
    }
    let mut ranks = Vec::with_capacity(top + 1);
    for card in 0..=top {
        let faces = by_card[card].len();
        let img_out = boundary_rank[card];
        let img_in = if card < top {
            boundary_rank[card + 1]
        } else {
            0
        };
        ranks.push(faces - img_out - img_in);
    }
    HomologyRanks { ranks }
}

/// Reduced rational homology of a simplicial complex.
pub fn reduced_homology_ranks<L>(c: &SimplicialComplex<L>) -> HomologyRanks {
    homology_of_faces(&c.faces_by_card())
}

/// Rank of the same sparse matrix over the prime field Z/p. Agreement with
/// the rational rank is a cross-check, not a replacement: a prime dividing
/// some minor of the matrix can only lower the modular rank.
pub fn modular_rank(columns: Vec<Vec<(usize, i64)>>, p: u64) -> usize {
    assert!(p > 2 && p < 1 << 31, "modulus out of range");
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut finalized: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut work: BTreeMap<usize, u64> = col
            .into_iter()
            .map(|(row, c)| (row, reduce(c)))
            .filter(|&(_, c)| c != 0)
            .collect();
        while let Some((low, coeff)) = work.pop_last() {
            match finalized.get(&low) {
                Some(pivot_tail) => {
                    for &(row, c) in pivot_tail {
                        let entry = work.entry(row).or_insert(0);
                        *entry = (*entry + p - coeff * c % p) % p;
                        if *entry == 0 {
                            work.remove(&row);
                        }
                    }
                }
                None => {
                    let inv = mod_inverse(coeff, p);
                    let tail: Vec<(usize, u64)> =
                        work.iter().map(|(&row, &c)| (row, c * inv % p)).collect();
                    finalized.insert(low, tail);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced homology ranks over Z/p; the optional modular cross-check for
/// the exact rational computation.
pub fn reduced_homology_ranks_modular<L>(c: &SimplicialComplex<L>, p: u64) -> HomologyRanks {
    let by_card = c.faces_by_card();
    if by_card.is_empty() {
        return HomologyRanks { ranks: Vec::new() };
    }
    let top = by_card.len() - 1;
    let mut boundary_rank = vec![0usize; top + 1];
    for k in 1..=top {
        let columns: Vec<Vec<(usize, i64)>> = by_card[k]
            .iter()
            .map(|&mask| {
                boundary_column(mask, &by_card[k - 1])
                    .into_iter()
                    .map(|(row, c)| (row, if c.is_negative() { -1 } else { 1 }))
                    .collect()
            })
            .collect();
        boundary_rank[k] = modular_rank(columns, p);
    }
    let mut ranks = Vec::with_capacity(top + 1);
    for card in 0..=top {
        let img_in = if card < top {
            boundary_rank[card + 1]
        } else {
            0
        };
        ranks.push(by_card[card].len() - boundary_rank[card] - img_in);
    }
    HomologyRanks { ranks }
}
