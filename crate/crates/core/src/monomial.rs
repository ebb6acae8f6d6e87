//! Sparse monomials over a ranked variable set.
//!
//! A monomial stores (rank, exponent) pairs sorted by rank, where the rank is
//! the position of a variable in the priority list of a
//! [`TermOrder`](crate::order::TermOrder) (rank 0 = highest priority). The
//! derived `Ord` is the graded reverse-lexicographic order on that layout:
//! higher total degree wins, and ties are broken by the last differing
//! exponent in priority order, smaller exponent winning.

use smallvec::SmallVec;
use std::cmp::Ordering;

type Exps = SmallVec<[(u8, u16); 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// A single variable given by its rank.
    pub fn variable(rank: usize) -> Self {
        Self::from_exps([(rank, 1)])
    }

    /// Builds a monomial from (rank, exponent) pairs; duplicate ranks are
    /// merged and zero exponents dropped.
    pub fn from_exps(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Exps = SmallVec::new();
        for (rank, e) in pairs {
            assert!(
                rank <= u8::MAX as usize,
                "variable rank {rank} out of range"
            );
            if e == 0 {
                continue;
            }
            assert!(e <= u16::MAX as u32, "exponent {e} out of range");
            exps.push((rank as u8, e as u16));
        }
        exps.sort_unstable_by_key(|&(r, _)| r);
        let mut merged: Exps = SmallVec::new();
        for (r, e) in exps {
            match merged.last_mut() {
                Some((lr, le)) if *lr == r => *le = le.checked_add(e).expect("exponent overflow"),
                _ => merged.push((r, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e as u32).sum();
        Monomial {
            exps: merged,
            degree,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, rank: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(r, _)| r as usize == rank)
            .map_or(0, |&(_, e)| e as u32)
    }

    /// (rank, exponent) pairs in ascending rank order, i.e. descending
    /// variable priority.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(r, e)| (r as usize, e as u32))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(r, _)| r as usize)
    }

    pub fn support_len(&self) -> usize {
        self.exps.len()
    }

    /// Bitmask of the support ranks; requires all ranks < 64.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for &(r, _) in &self.exps {
            assert!(r < 64, "rank {r} too large for a support mask");
            mask |= 1 << r;
        }
        mask
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps: Exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let a = self.exps.get(i);
            let b = other.exps.get(j);
            match (a, b) {
                (Some(&(ra, ea)), Some(&(rb, eb))) => match ra.cmp(&rb) {
                    Ordering::Less => {
                        exps.push((ra, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push((rb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((ra, ea.checked_add(eb).expect("exponent overflow")));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&(ra, ea)), None) => {
                    exps.push((ra, ea));
                    i += 1;
                }
                (None, Some(&(rb, eb))) => {
                    exps.push((rb, eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        'outer: for &(r, e) in &self.exps {
            while j < other.exps.len() {
                let (ro, eo) = other.exps[j];
                match ro.cmp(&r) {
                    Ordering::Less => j += 1,
                    Ordering::Equal => {
                        if eo < e {
                            return false;
                        }
                        j += 1;
                        continue 'outer;
                    }
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps: Exps = SmallVec::new();
        for &(r, e) in &self.exps {
            let rem = e - other.exp(r as usize) as u16;
            if rem > 0 {
                exps.push((r, rem));
            }
        }
        let degree = self.degree - other.degree;
        Some(Monomial { exps, degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps: Exps = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(ra, ea)), Some(&(rb, eb))) => match ra.cmp(&rb) {
                    Ordering::Less => {
                        exps.push((ra, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push((rb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((ra, ea.max(eb)));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    exps.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    exps.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let degree = exps.iter().map(|&(_, e)| e as u32).sum();
        Monomial { exps, degree }
    }

    /// True when the supports are disjoint.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal degree: walk the exponents from the lowest-priority end.
        // At the first rank where they differ the smaller exponent wins.
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Greater,
                (_, 0) => return Ordering::Less,
                _ => {
                    let (ra, ea) = self.exps[i - 1];
                    let (rb, eb) = other.exps[j - 1];
                    match ra.cmp(&rb) {
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Equal => {
                                i -= 1;
                                j -= 1;
                            }
                        },
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
