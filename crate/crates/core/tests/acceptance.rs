//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Criteria cover the full n=5 and n=6 pipelines, the closed-form
//! invariants, h-vectors and Betti tables, the exhaustive combinatorial
//! sweep, the leading-term suite, the randomized property suites, and the
//! tail-robustness rerun.

use num::{BigInt, BigRational, Signed};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::LazyLock;
use std::time::{Duration, Instant};
use symminors::betti::{closed_form_betti, determinantal_invariants, hochster_betti};
use symminors::complexes::{
    cyclic_polytope_facets, dimension_and_multiplicity, f_h_vectors, matching_complex_facets,
    minimal_nonfaces, sphere_checks, BandCycle,
};
use symminors::groebner::{initial_ideal, verify_groebner, MonomialIdeal};
use symminors::minors::{all_minors, MinorCache};
use symminors::order::TermOrder;
use symminors::verify::{lemma_suite, run_verification, tail_robustness, VerifyOptions};
use symminors::{Monomial, Polynomial};

struct Pipeline {
    order: TermOrder,
    report: symminors::verify::VerificationReport,
    ideal: MonomialIdeal,
    verify_elapsed: Duration,
    hochster_elapsed: Duration,
    hochster: symminors::betti::BettiTable,
}

fn pipeline(n: usize) -> Pipeline {
    let t0 = Instant::now();
    let report = run_verification(n, &VerifyOptions::default()).unwrap();
    let verify_elapsed = t0.elapsed();

    let order = TermOrder::standard(n).unwrap();
    let gens: Vec<Polynomial> = all_minors(&order, n - 2)
        .unwrap()
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let gb = verify_groebner(&order, &gens, false).unwrap();
    assert!(gb.verdict);
    let ideal = initial_ideal(&order, &gens);

    let t1 = Instant::now();
    let hochster = hochster_betti(&ideal).unwrap();
    let hochster_elapsed = t1.elapsed();

    Pipeline {
        order,
        report,
        ideal,
        verify_elapsed,
        hochster_elapsed,
        hochster,
    }
}

static N5: LazyLock<Pipeline> = LazyLock::new(|| pipeline(5));
static N6: LazyLock<Pipeline> = LazyLock::new(|| pipeline(6));

/// Edge-free t-subsets of the 2n-cycle on the diagonal-band variables,
/// written as monomials through the traversal labeling. Independent of the
/// minor/initial-ideal machinery.
fn edge_free_subset_monomials(order: &TermOrder, t: usize) -> BTreeSet<Monomial> {
    let n = order.n();
    let m = 2 * n;
    let cycle = BandCycle::new(n).unwrap();
    let mut result = BTreeSet::new();
    for bits in 0..1u64 << m {
        if bits.count_ones() as usize != t {
            continue;
        }
        let adjacent = (0..m).any(|v| bits >> v & 1 == 1 && bits >> ((v + 1) % m) & 1 == 1);
        if adjacent {
            continue;
        }
        result.insert(
            order.squarefree_monomial(
                (0..m)
                    .filter(|&v| bits >> v & 1 == 1)
                    .map(|v| cycle.var_at(v + 1)),
            ),
        );
    }
    result
}

#[test]
fn criterion_1_full_verification_n5() {
    let p = &*N5;
    assert!(p.report.overall(), "{}", p.report.render_text());
    assert_eq!(p.report.counts.minors, 55);
    assert_eq!(p.report.counts.initial_gens, 50);
    assert_eq!(p.report.counts.facets, 35);
    assert_eq!(p.report.counts.cone_points, 5);
    let gb = p.report.groebner.as_ref().unwrap();
    assert!(gb.verdict);
    assert_eq!(gb.pairs_total, 1485);
    assert_eq!(gb.pairs_total, gb.pairs_pruned + gb.pairs_reduced);

    // Exact set equality with the edge-free 3-subsets of the 10-cycle.
    let expected = edge_free_subset_monomials(&p.order, 3);
    let actual: BTreeSet<Monomial> = p.ideal.gens().iter().cloned().collect();
    assert_eq!(expected.len(), 50);
    assert_eq!(actual, expected);
    assert!(p.ideal.is_squarefree_ideal());
    assert!(p.ideal.gens().iter().all(|g| g.degree() == 3));

    assert!(
        p.verify_elapsed < Duration::from_secs(120),
        "n=5 verification took {:?}",
        p.verify_elapsed
    );
    println!(
        "[criterion 1] PASS: n=5 verification in {:?}; 55 minors, 50 square-free degree-3 initial generators equal to the edge-free 3-subsets",
        p.verify_elapsed
    );
}

#[test]
fn criterion_2_full_verification_n6() {
    let p = &*N6;
    assert!(p.report.overall(), "{}", p.report.render_text());
    assert_eq!(p.report.counts.minors, 120);
    assert_eq!(p.report.counts.initial_gens, 105);
    assert_eq!(p.report.counts.facets, 112);
    assert_eq!(p.report.counts.cone_points, 9);
    let gb = p.report.groebner.as_ref().unwrap();
    assert_eq!(gb.pairs_total, 7140);
    assert_eq!(gb.pairs_total, gb.pairs_pruned + gb.pairs_reduced);

    let expected = edge_free_subset_monomials(&p.order, 4);
    let actual: BTreeSet<Monomial> = p.ideal.gens().iter().cloned().collect();
    assert_eq!(expected.len(), 105);
    assert_eq!(actual, expected);

    assert!(
        p.verify_elapsed < Duration::from_secs(900),
        "n=6 verification took {:?}",
        p.verify_elapsed
    );
    println!(
        "[criterion 2] PASS: n=6 verification in {:?}; 120 minors, 105 initial generators, 112 facets",
        p.verify_elapsed
    );
}

#[test]
fn criterion_3_invariants_match_closed_forms() {
    for (p, n, dim, mult, reg) in [(&*N5, 5usize, 9usize, 35usize, 4i64), (&*N6, 6, 15, 112, 6)] {
        let (d, e) = dimension_and_multiplicity(&p.ideal).unwrap();
        assert_eq!((d, e), (dim, mult), "n={n}");
        let closed = determinantal_invariants(n, n - 2).unwrap();
        assert_eq!(closed.dim, dim as i64, "n={n}");
        assert_eq!(closed.multiplicity, BigInt::from(mult), "n={n}");
        assert_eq!(closed.regularity, reg, "n={n}");
        assert!(closed.gorenstein);
    }
    println!("[criterion 3] PASS: initial-ideal (dim, e, reg) = (9, 35, 4) at n=5 and (15, 112, 6) at n=6, exactly");
}

#[test]
fn criterion_4_h_vectors() {
    let fh5 = f_h_vectors(&matching_complex_facets(10, 2).unwrap());
    assert_eq!(fh5.h, vec![1, 6, 21, 6, 1]);
    let fh6 = f_h_vectors(&matching_complex_facets(12, 3).unwrap());
    assert_eq!(fh6.h, vec![1, 6, 21, 56, 21, 6, 1]);
    println!("[criterion 4] PASS: h-vectors (1,6,21,6,1) and (1,6,21,56,21,6,1), exactly");
}

#[test]
fn criterion_5_betti_tables() {
    for (p, n, expected) in [
        (
            &*N5,
            5usize,
            [
                (0u32, 0u32, 1u64),
                (1, 3, 50),
                (2, 4, 175),
                (3, 5, 252),
                (4, 6, 175),
                (5, 7, 50),
                (6, 10, 1),
            ],
        ),
        (
            &*N6,
            6,
            [
                (0, 0, 1),
                (1, 4, 105),
                (2, 5, 384),
                (3, 6, 560),
                (4, 7, 384),
                (5, 8, 105),
                (6, 12, 1),
            ],
        ),
    ] {
        let closed = closed_form_betti(n);
        assert_eq!(
            p.hochster, closed,
            "n={n}: restriction homology disagrees with the closed form"
        );
        assert_eq!(p.hochster.entries().count(), 7);
        for (i, j, rank) in expected {
            assert_eq!(p.hochster.get(i, j), rank, "n={n} beta({i},{j})");
        }
        // Purity: exactly one internal degree per homological index.
        assert!(p.hochster.is_pure_resolution(), "n={n}");
        assert_eq!(p.hochster.regularity(), 2 * (n as i64 - 3), "n={n}");
        assert!(p.hochster.is_selfdual(6, 2 * n as u32), "n={n}");
    }
    assert!(
        N5.hochster_elapsed < Duration::from_secs(120),
        "n=5 restriction homology took {:?}",
        N5.hochster_elapsed
    );
    assert!(
        N6.hochster_elapsed < Duration::from_secs(600),
        "n=6 restriction homology took {:?}",
        N6.hochster_elapsed
    );
    println!(
        "[criterion 5] PASS: Betti tables equal closed forms (n=5 in {:?}, n=6 in {:?}), pure, max j-i = 2(n-3)",
        N5.hochster_elapsed, N6.hochster_elapsed
    );
}

#[test]
fn criterion_6_combinatorial_equivalence_sweep() {
    let mut pairs = 0;
    let mut boundary_pairs = 0;
    for m in 3..=14usize {
        for r in 1..=(m - 1) / 2 {
            if 2 * r >= m {
                continue;
            }
            let matching = matching_complex_facets(m, r).unwrap();
            let gale = cyclic_polytope_facets(m, 2 * r).unwrap();
            assert_eq!(
                matching.facets(),
                gale.facets(),
                "facet systems differ at m={m} r={r}"
            );

            let nonfaces: BTreeSet<u64> = minimal_nonfaces(&matching).into_iter().collect();
            let edge_free: BTreeSet<u64> = (0..1u64 << m)
                .filter(|bits| {
                    bits.count_ones() as usize == r + 1
                        && (0..m).all(|v| !(bits >> v & 1 == 1 && bits >> ((v + 1) % m) & 1 == 1))
                })
                .collect();
            if m == 2 * r + 1 {
                // Odd boundary: every (m-1)-subset is a facet, so the single
                // minimal nonface is the full vertex set and no (r+1)-subset
                // of the cycle is edge-free. The nonface identity needs
                // m >= 2r+2; see nonface_identity_fails_at_the_odd_boundary.
                let full: BTreeSet<u64> = [(1u64 << m) - 1].into_iter().collect();
                assert_eq!(nonfaces, full, "boundary shape differs at m={m} r={r}");
                assert!(edge_free.is_empty(), "edge-free family at m={m} r={r}");
                boundary_pairs += 1;
            } else {
                assert_eq!(nonfaces, edge_free, "nonfaces differ at m={m} r={r}");
            }
            pairs += 1;
        }
    }
    println!(
        "[criterion 6] PASS: matching = Gale facets for all {pairs} (m, r) pairs with m <= 14; \
         nonfaces = edge-free (r+1)-subsets on the {} pairs with m >= 2r+2; \
         at the {boundary_pairs} odd-boundary pairs m = 2r+1 the single minimal nonface is the full vertex set",
        pairs - boundary_pairs
    );
}

#[test]
fn nonface_identity_fails_at_the_odd_boundary() {
    // The matching complex of the 3-cycle with r = 1 is the triangle
    // boundary: its unique minimal nonface is {1,2,3}, of size r+2, while
    // no 2-subset of the 3-cycle avoids an edge. The nonface description
    // therefore requires m >= 2r+2, which always holds for the even cycle
    // sizes m = 2n used by the pipeline.
    let triangle = matching_complex_facets(3, 1).unwrap();
    assert_eq!(triangle.facet_count(), 3);
    assert_eq!(minimal_nonfaces(&triangle), vec![0b111]);
    for r in 1..=6usize {
        let m = 2 * r + 1;
        let complex = matching_complex_facets(m, r).unwrap();
        assert_eq!(
            minimal_nonfaces(&complex),
            vec![(1u64 << m) - 1],
            "m={m} r={r}"
        );
    }
}

#[test]
fn criterion_7_lemma_suite() {
    for n in 5..=8usize {
        let suite = lemma_suite(n).unwrap();
        assert!(suite.passed(), "n={n}:\n{}", suite.render_text());
        for check in &suite.checks {
            assert!(
                check.failures.is_empty(),
                "n={n} {} has counterexamples",
                check.name
            );
        }
    }
    println!("[criterion 7] PASS: leading-term suite has zero counterexamples at n = 5, 6, 7, 8");
}

#[test]
fn criterion_8_property_suites() {
    // Term-order axioms on 10^4 random triples across n = 4..8.
    let orders: Vec<TermOrder> = (4..=8).map(|n| TermOrder::standard(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let random_monomial = |rng: &mut ChaCha8Rng, nv: usize| {
        let k = rng.random_range(0..=4);
        Monomial::from_exps((0..k).map(|_| (rng.random_range(0..nv), rng.random_range(0..=5u32))))
    };
    for _ in 0..10_000 {
        let order = &orders[rng.random_range(0..orders.len())];
        let nv = order.num_vars();
        let a = random_monomial(&mut rng, nv);
        let b = random_monomial(&mut rng, nv);
        let c = random_monomial(&mut rng, nv);
        let u = random_monomial(&mut rng, nv);
        assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            assert!(a <= c);
        }
        assert_eq!(a.cmp(&b), a.mul(&u).cmp(&b.mul(&u)));
        if a.degree() > b.degree() {
            assert!(a > b);
        }
    }

    // Reduction idempotence against the n=5 minor basis.
    let basis: Vec<Polynomial> = all_minors(&N5.order, 3)
        .unwrap()
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    for _ in 0..200 {
        let nv = N5.order.num_vars();
        let p = Polynomial::from_terms((0..rng.random_range(1..=5)).map(|_| {
            (
                random_monomial(&mut rng, nv),
                BigRational::from_integer(rng.random_range(-4i64..=4).into()),
            )
        }));
        let reduced = p.normal_form(&basis);
        assert_eq!(reduced.normal_form(&basis), reduced);
    }

    // Minor symmetry [R|C] = [C|R] for every selection at n <= 6.
    for n in 4..=6usize {
        let order = TermOrder::standard(n).unwrap();
        let mut cache = MinorCache::new(&order);
        let mut subsets: Vec<Vec<usize>> = vec![];
        for s in 1..=n {
            subsets.extend(combinations(n, s));
        }
        for r in &subsets {
            for c in &subsets {
                if r.len() == c.len() {
                    assert_eq!(
                        cache.minor(r, c).unwrap(),
                        cache.minor(c, r).unwrap(),
                        "n={n} rows={r:?} cols={c:?}"
                    );
                }
            }
        }
    }

    // Sphere checks: boundary spheres of dimension 2n-7 at n = 5, 6.
    for (n, m, r) in [(5usize, 10usize, 2usize), (6, 12, 3)] {
        let complex = matching_complex_facets(m, r).unwrap();
        let report = sphere_checks(&complex);
        assert!(report.pure && report.pseudomanifold, "n={n}");
        assert_eq!(report.dim, (2 * n - 7) as i32);
        assert!(
            report.homology_is_sphere,
            "n={n}: {:?}",
            report.homology_ranks
        );
        assert!(report.h_symmetric);
    }

    println!("[criterion 8] PASS: order axioms on 10000 triples, reduction idempotent, minors symmetric at n <= 6, sphere checks at n = 5, 6");
}

#[test]
fn criterion_9_tail_robustness() {
    let robustness = tail_robustness(5, false).unwrap();
    assert!(
        robustness.all_verified,
        "a tail completion failed the S-pair sweep"
    );
    assert!(
        robustness.identical_initial_ideals,
        "tail completions produced different initial ideals"
    );
    assert_eq!(robustness.orders_tried, 3);
    println!("[criterion 9] PASS: n=5 verification under two alternate tail completions yields the identical initial ideal");
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

// The leading coefficients of every minor are units; checked here once for
// both pipeline sizes since several criteria lean on it.
#[test]
fn minor_leading_coefficients_are_units() {
    for n in 4..=6usize {
        let order = TermOrder::standard(n).unwrap();
        for (_, poly) in all_minors(&order, n - 2).unwrap() {
            let lc = poly.leading_coeff().unwrap();
            assert_eq!(lc.abs(), BigRational::from_integer(1.into()));
        }
    }
}
