//! Minors of the generic symmetric matrix and their leading terms.
//!
//! Minor evaluation is a memoized Laplace expansion over (row-set, col-set)
//! pairs; the cache is keyed on the canonical orientation, so the symmetry
//! [R|C] = [C|R] is shared. Beyond plain evaluation the module builds the
//! special index sequences whose minors realize band-monomial leading terms,
//! enumerates the square-free candidate monomials on the diagonal-band
//! region, and matches every candidate to a witnessing minor.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::variable::{VarClass, Variable};
use itertools::Itertools;
use num::{BigRational, One};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// A canonical minor selection: strictly increasing rows and columns with
/// rows <= cols lexicographically. The symmetric identification [R|C]=[C|R]
/// makes this the unique representative per unordered pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorSpec {
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(n: usize, rows: &[usize], cols: &[usize]) -> Result<Self> {
        validate_selection(n, rows, cols)?;
        let mut rows = rows.to_vec();
        let mut cols = cols.to_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        if rows > cols {
            std::mem::swap(&mut rows, &mut cols);
        }
        Ok(MinorSpec { n, rows, cols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows={}; cols={}",
            self.rows.iter().join(","),
            self.cols.iter().join(",")
        )
    }
}

fn validate_selection(n: usize, rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::LengthMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    if rows.is_empty() {
        return Err(Error::EmptySelection);
    }
    for (axis, seq) in [("row", rows), ("column", cols)] {
        let mut seen = BTreeSet::new();
        for &i in seq {
            if i < 1 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if !seen.insert(i) {
                return Err(Error::RepeatedIndex { axis, index: i });
            }
        }
    }
    Ok(())
}

/// Parity of the permutation sorting `seq` ascending: +1 or -1.
fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Shared determinant cache over sorted (row-set, col-set) pairs.
pub struct MinorCache<'o> {
    order: &'o TermOrder,
    memo: HashMap<(u32, u32), Polynomial>,
}

impl<'o> MinorCache<'o> {
    pub fn new(order: &'o TermOrder) -> Self {
        MinorCache {
            order,
            memo: HashMap::new(),
        }
    }

    fn det_sorted(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let rmask = mask_of(rows);
        let cmask = mask_of(cols);
        let key = (rmask.min(cmask), rmask.max(cmask));
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let result = if rows.len() == 1 {
            Polynomial::monomial(self.order.var_monomial(Variable::new(rows[0], cols[0])))
        } else {
            // Expand along the last column.
            let s = rows.len();
            let last_col = cols[s - 1];
            let inner_cols = &cols[..s - 1];
            let mut acc = Polynomial::zero();
            for (i, &row) in rows.iter().enumerate() {
                let sub_rows: Vec<usize> = rows
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, &r)| r)
                    .collect();
                let sub = self.det_sorted(&sub_rows, inner_cols);
                let sign: i64 = if (i + s - 1).is_multiple_of(2) { 1 } else { -1 };
                let entry = self.order.var_monomial(Variable::new(row, last_col));
                acc = &acc + &sub.mul_term(&entry, &BigRational::from_integer(sign.into()));
            }
            acc
        };
        self.memo.insert(key, result.clone());
        result
    }

    /// Determinant of the selected submatrix, rows/columns in any order;
    /// the sign of the two permutations is applied.
    pub fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        validate_selection(self.order.n(), rows, cols)?;
        let sign = permutation_sign(rows) * permutation_sign(cols);
        let mut sorted_rows = rows.to_vec();
        let mut sorted_cols = cols.to_vec();
        sorted_rows.sort_unstable();
        sorted_cols.sort_unstable();
        let det = self.det_sorted(&sorted_rows, &sorted_cols);
        Ok(if sign == 1 {
            det
        } else {
            det.scale(&BigRational::from_integer((-1).into()))
        })
    }
}

fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0u32, |m, &i| m | 1 << i)
}

/// Determinant of the submatrix selected by `rows` and `cols` (any order,
/// signs applied).
pub fn minor_polynomial(order: &TermOrder, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
    MinorCache::new(order).minor(rows, cols)
}

/// All canonical t-minor selections, lexicographically sorted.
pub fn minor_specs(n: usize, t: usize) -> Vec<MinorSpec> {
    let subsets: Vec<Vec<usize>> = (1..=n).combinations(t).collect();
    let mut specs = Vec::new();
    for a in 0..subsets.len() {
        for b in a..subsets.len() {
            specs.push(MinorSpec {
                n,
                rows: subsets[a].clone(),
                cols: subsets[b].clone(),
            });
        }
    }
    specs.sort();
    specs
}

/// All canonical t-minors with their polynomials.
pub fn all_minors(order: &TermOrder, t: usize) -> Result<Vec<(MinorSpec, Polynomial)>> {
    let n = order.n();
    if t < 2 || t > n {
        return Err(Error::MinorSizeOutOfRange { n, t });
    }
    let mut cache = MinorCache::new(order);
    minor_specs(n, t)
        .into_iter()
        .map(|spec| {
            let poly = cache.minor(spec.rows(), spec.cols())?;
            Ok((spec, poly))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Index sequences whose minor realizes the low band chain
/// x12·x13·x24·…; `parity` selects size 2l+1 (odd) or 2l (even).
pub fn special_indices_low(l: usize, parity: Parity) -> (Vec<usize>, Vec<usize>) {
    assert!(l >= 1);
    let size = match parity {
        Parity::Odd => 2 * l + 1,
        Parity::Even => 2 * l,
    };
    let mut rows = Vec::with_capacity(size);
    let mut cols = Vec::with_capacity(size);
    for p in 1..=size {
        if p == 1 {
            rows.push(1);
            cols.push(2);
        } else if p % 2 == 0 {
            rows.push(p + 1);
            cols.push(p - 1);
        } else {
            rows.push(p - 1);
            cols.push(p + 1);
        }
    }
    (rows, cols)
}

/// Expected leading monomial of the low special minor.
pub fn special_low_product(order: &TermOrder, l: usize, parity: Parity) -> Monomial {
    let top = match parity {
        Parity::Odd => 2 * l,
        Parity::Even => 2 * l - 1,
    };
    let mut vars = vec![Variable::new(1, 2)];
    vars.extend((1..=top).map(|k| Variable::new(k, k + 2)));
    order.squarefree_monomial(vars)
}

/// Mirror sequences at the high end realizing …·`x[n-2][n]`·`x[n-1][n]`.
pub fn special_indices_high(l: usize, parity: Parity, n: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(l >= 1);
    let size = match parity {
        Parity::Odd => 2 * l + 1,
        Parity::Even => 2 * l,
    };
    // Build from the last position backwards; offset o counts from the end.
    let mut rows = vec![0; size];
    let mut cols = vec![0; size];
    for o in 0..size {
        let (a, b) = if o == 0 {
            (n - 1, n)
        } else if o % 2 == 1 {
            let i = o.div_ceil(2);
            (n - (2 * i - 2), n - 2 * i)
        } else {
            let i = o / 2;
            (n - (2 * i + 1), n - (2 * i - 1))
        };
        rows[size - 1 - o] = a;
        cols[size - 1 - o] = b;
    }
    (rows, cols)
}

/// Expected leading monomial of the high special minor.
pub fn special_high_product(order: &TermOrder, l: usize, parity: Parity, n: usize) -> Monomial {
    let low = match parity {
        Parity::Odd => n - 2 * l - 1,
        Parity::Even => n - 2 * l,
    };
    let mut vars = vec![Variable::new(n - 1, n), Variable::new(n - 2, n)];
    vars.extend((low..=n - 3).map(|k| Variable::new(k, k + 2)));
    order.squarefree_monomial(vars)
}

/// Square-free degree-s monomials on the diagonal-band region such that no
/// diagonal factor `x[i][i]` shares its index with any band factor.
pub fn initmon_candidates(order: &TermOrder, s: usize) -> BTreeSet<Monomial> {
    let n = order.n();
    assert!(s >= 1 && s <= n - 2, "candidate degree s={s} out of range");
    let region = order.band_region_vars();
    let mut out = BTreeSet::new();
    'subset: for subset in region.iter().combinations(s) {
        let diag: Vec<usize> = subset
            .iter()
            .filter(|v| v.is_diagonal())
            .map(|v| v.row())
            .collect();
        for v in &subset {
            if order.class_of(**v) == VarClass::Band
                && (diag.contains(&v.row()) || diag.contains(&v.col()))
            {
                continue 'subset;
            }
        }
        out.insert(order.squarefree_monomial(subset.into_iter().copied()));
    }
    out
}

/// A candidate monomial together with a minor whose leading term equals it.
#[derive(Debug, Clone)]
pub struct BandMonomialWitness {
    monomial: Monomial,
    minor: MinorSpec,
}

impl BandMonomialWitness {
    /// Checks the leading-term equality before accepting the pair.
    pub fn checked(order: &TermOrder, monomial: Monomial, minor: MinorSpec) -> Option<Self> {
        let poly = minor_polynomial(order, minor.rows(), minor.cols()).ok()?;
        let (lt, lc) = poly.leading_term()?;
        if lt == &monomial && num::Signed::abs(lc).is_one() {
            Some(BandMonomialWitness { monomial, minor })
        } else {
            None
        }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn minor(&self) -> &MinorSpec {
        &self.minor
    }
}

/// Matches every candidate monomial of degree s to an s-minor whose leading
/// term equals it, by exhaustive scan over all s-minors. A candidate with no
/// witness is a counterexample and aborts the scan.
pub fn witness_leading_terms(order: &TermOrder, s: usize) -> Result<Vec<BandMonomialWitness>> {
    let candidates = initmon_candidates(order, s);
    let mut cache = MinorCache::new(order);
    let mut lt_to_spec: BTreeMap<Monomial, MinorSpec> = BTreeMap::new();
    for spec in minor_specs(order.n(), s) {
        let poly = cache.minor(spec.rows(), spec.cols())?;
        if let Some(lt) = poly.leading_monomial() {
            lt_to_spec.entry(lt.clone()).or_insert(spec);
        }
    }
    let mut witnesses = Vec::with_capacity(candidates.len());
    let mut missing = Vec::new();
    for m in candidates {
        match lt_to_spec.get(&m) {
            Some(spec) => match BandMonomialWitness::checked(order, m.clone(), spec.clone()) {
                Some(w) => witnesses.push(w),
                None => missing.push(m),
            },
            None => missing.push(m),
        }
    }
    if let Some(first) = missing.first() {
        return Err(Error::MissingWitness {
            count: missing.len(),
            first: order.monomial_string(first),
        });
    }
    Ok(witnesses)
}

/// Constructive witness for a candidate monomial, verified before being
/// returned. Band factors are tried in every orientation that keeps both
/// index sequences strictly increasing (a corner factor next to a matching
/// diagonal index may need its transposed realization); monomials divisible
/// by a full low or high chain fall back to the special-chain selection.
pub fn construct_witness(order: &TermOrder, m: &Monomial) -> Option<(Vec<usize>, Vec<usize>)> {
    if !m.is_squarefree() || m.is_one() {
        return None;
    }
    let mut diag = Vec::new();
    let mut band = Vec::new();
    for (rank, e) in m.iter() {
        debug_assert_eq!(e, 1);
        let v = order.var_at(rank);
        match order.class_of(v) {
            VarClass::Diagonal => diag.push(v.row()),
            VarClass::Band => band.push(v),
            VarClass::Other => return None,
        }
    }
    diag.sort_unstable();
    // Factors sorted by (row, col): x12 before x13, then the off-band chain.
    band.sort_unstable_by_key(|v| (v.row(), v.col()));

    let p = band.len();
    for bits in 0..1u32 << p {
        let mut pairs: Vec<(usize, usize)> = band
            .iter()
            .enumerate()
            .map(|(t, v)| {
                if bits >> t & 1 == 0 {
                    (v.row(), v.col())
                } else {
                    (v.col(), v.row())
                }
            })
            .collect();
        pairs.sort_unstable();
        let a: Vec<usize> = pairs.iter().map(|&(a, _)| a).collect();
        let b: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
        if !all_distinct(&a) || !all_distinct(&b) {
            continue;
        }
        if let Some(selection) = verified_extension(order, &diag, a, b, m) {
            return Some(selection);
        }
    }
    None
}

fn all_distinct(seq: &[usize]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn verified_extension(
    order: &TermOrder,
    diag: &[usize],
    band_rows: Vec<usize>,
    band_cols: Vec<usize>,
    expected: &Monomial,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut rows = diag.to_vec();
    rows.extend(band_rows);
    let mut cols = diag.to_vec();
    cols.extend(band_cols);
    let poly = minor_polynomial(order, &rows, &cols).ok()?;
    (poly.leading_monomial() == Some(expected)).then_some((rows, cols))
}

/// Leading coefficient of every minor in the list is +1 or -1.
pub fn all_unit_leading_coeffs(minors: &[(MinorSpec, Polynomial)]) -> bool {
    minors
        .iter()
        .all(|(_, p)| crate::polynomial::has_unit_leading_coeff(p))
}

/// Number of independent k-subsets of an m-cycle: (m/(m-k))·C(m-k, k).
pub fn cycle_independent_count(m: usize, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    if m < 2 * k {
        return 0;
    }
    let c: u128 = binomial_u128(m - k, k);
    (c * m as u128 / (m - k) as u128) as usize
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Coeff;
    use num::Signed;

    fn order(n: usize) -> TermOrder {
        TermOrder::standard(n).unwrap()
    }

    fn rat(n: i64) -> Coeff {
        Coeff::from_integer(n.into())
    }

    fn v(i: usize, j: usize) -> Variable {
        Variable::new(i, j)
    }

    #[test]
    fn one_by_one_minor() {
        let o = order(5);
        let p = minor_polynomial(&o, &[1], &[2]).unwrap();
        assert_eq!(p, Polynomial::monomial(o.var_monomial(v(1, 2))));
    }

    #[test]
    fn two_by_two_minor() {
        let o = order(5);
        let p = minor_polynomial(&o, &[1, 2], &[1, 2]).unwrap();
        let expected = Polynomial::from_terms([
            (o.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]), rat(1)),
            (o.monomial(&[(v(1, 2), 2)]), rat(-1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn permuted_selection_changes_sign() {
        let o = order(5);
        let sorted = minor_polynomial(&o, &[1, 2], &[1, 2]).unwrap();
        let swapped = minor_polynomial(&o, &[2, 1], &[1, 2]).unwrap();
        assert_eq!(&sorted + &swapped, Polynomial::zero());
    }

    #[test]
    fn rejects_repeated_indices() {
        let o = order(5);
        assert!(matches!(
            minor_polynomial(&o, &[1, 1], &[1, 2]),
            Err(Error::RepeatedIndex { .. })
        ));
    }

    #[test]
    fn odd_special_minor_leading_term() {
        // The size-3 low chain selection has leading term x12·x13·x24.
        let o = order(6);
        let (rows, cols) = special_indices_low(1, Parity::Odd);
        assert_eq!(rows, vec![1, 3, 2]);
        assert_eq!(cols, vec![2, 1, 4]);
        let p = minor_polynomial(&o, &rows, &cols).unwrap();
        let (lt, lc) = p.leading_term().unwrap();
        assert_eq!(lt, &special_low_product(&o, 1, Parity::Odd));
        assert_eq!(lt, &o.squarefree_monomial([v(1, 2), v(1, 3), v(2, 4)]));
        assert!(lc.abs().is_one());
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn even_special_minor_leading_term() {
        let o = order(5);
        let (rows, cols) = special_indices_low(1, Parity::Even);
        assert_eq!(
            (rows.as_slice(), cols.as_slice()),
            (&[1, 3][..], &[2, 1][..])
        );
        let p = minor_polynomial(&o, &rows, &cols).unwrap();
        assert_eq!(
            p.leading_monomial().unwrap(),
            &o.squarefree_monomial([v(1, 2), v(1, 3)])
        );
    }

    #[test]
    fn low_special_l2() {
        let (rows, cols) = special_indices_low(2, Parity::Odd);
        assert_eq!(rows, vec![1, 3, 2, 5, 4]);
        assert_eq!(cols, vec![2, 1, 4, 3, 6]);
        // Size-5 chain minor at n=6.
        let o = order(6);
        let p = minor_polynomial(&o, &rows, &cols).unwrap();
        assert_eq!(
            p.leading_monomial().unwrap(),
            &o.squarefree_monomial([v(1, 2), v(1, 3), v(2, 4), v(3, 5), v(4, 6)])
        );
    }

    #[test]
    fn high_special_sequences() {
        let (rows, cols) = special_indices_high(1, Parity::Odd, 5);
        assert_eq!(rows, vec![2, 5, 4]);
        assert_eq!(cols, vec![4, 3, 5]);
        let o = order(5);
        let p = minor_polynomial(&o, &rows, &cols).unwrap();
        assert_eq!(
            p.leading_monomial().unwrap(),
            &o.squarefree_monomial([v(2, 4), v(3, 5), v(4, 5)])
        );
        assert_eq!(
            p.leading_monomial().unwrap(),
            &special_high_product(&o, 1, Parity::Odd, 5)
        );

        let (rows, cols) = special_indices_high(1, Parity::Even, 5);
        assert_eq!(rows, vec![5, 4]);
        assert_eq!(cols, vec![3, 5]);
        let p = minor_polynomial(&o, &rows, &cols).unwrap();
        assert_eq!(
            p.leading_monomial().unwrap(),
            &o.squarefree_monomial([v(3, 5), v(4, 5)])
        );

        let o6 = order(6);
        let (rows, cols) = special_indices_high(1, Parity::Odd, 6);
        assert_eq!(rows, vec![3, 6, 5]);
        assert_eq!(cols, vec![5, 4, 6]);
        let p = minor_polynomial(&o6, &rows, &cols).unwrap();
        assert_eq!(
            p.leading_monomial().unwrap(),
            &o6.squarefree_monomial([v(3, 5), v(4, 6), v(5, 6)])
        );
    }

    #[test]
    fn minor_counts() {
        assert_eq!(minor_specs(5, 3).len(), 55);
        assert_eq!(minor_specs(6, 4).len(), 120);
        assert_eq!(minor_specs(4, 4).len(), 1);
        let o = order(5);
        assert_eq!(all_minors(&o, 3).unwrap().len(), 55);
        assert!(all_minors(&o, 1).is_err());
        assert!(all_minors(&o, 6).is_err());
    }

    #[test]
    fn candidate_counts() {
        let o5 = order(5);
        assert_eq!(initmon_candidates(&o5, 3).len(), 50);
        assert_eq!(cycle_independent_count(10, 3), 50);
        assert_eq!(initmon_candidates(&o5, 1).len(), 10);
        let o6 = order(6);
        assert_eq!(initmon_candidates(&o6, 4).len(), 105);
        assert_eq!(cycle_independent_count(12, 4), 105);
    }

    #[test]
    fn witnesses_at_n5() {
        let o = order(5);
        let witnesses = witness_leading_terms(&o, 3).unwrap();
        assert_eq!(witnesses.len(), 50);
        let witnesses = witness_leading_terms(&o, 1).unwrap();
        assert_eq!(witnesses.len(), 10);
        for w in &witnesses {
            assert_eq!(w.minor().size(), 1);
        }
    }

    #[test]
    fn witnesses_at_n6() {
        let o = order(6);
        assert_eq!(witness_leading_terms(&o, 4).unwrap().len(), 105);
    }

    #[test]
    fn constructive_witnesses_match_scan() {
        for n in [4, 5, 6] {
            let o = order(n);
            for s in 1..=n - 2 {
                for m in initmon_candidates(&o, s) {
                    let (rows, cols) = construct_witness(&o, &m)
                        .unwrap_or_else(|| panic!("no construction for {}", o.monomial_string(&m)));
                    let p = minor_polynomial(&o, &rows, &cols).unwrap();
                    assert_eq!(
                        p.leading_monomial().unwrap(),
                        &m,
                        "n={n} s={s} candidate {}",
                        o.monomial_string(&m)
                    );
                }
            }
        }
    }

    #[test]
    fn minor_symmetry_small() {
        let o = order(4);
        let mut cache = MinorCache::new(&o);
        for s in 1..=4usize {
            let subsets: Vec<Vec<usize>> = (1..=4).combinations(s).collect();
            for r in &subsets {
                for c in &subsets {
                    let rc = cache.minor(r, c).unwrap();
                    let cr = cache.minor(c, r).unwrap();
                    assert_eq!(rc, cr);
                }
            }
        }
    }
}
