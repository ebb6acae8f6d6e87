//! End-to-end verification per matrix size, the leading-term lemma suite,
//! and the tail-robustness sweep.
//!
//! The default check matrix scales with n: the full S-pair verification and
//! the restriction-homology Betti comparison run through n = 6, size 7 gets
//! the inclusion certificate instead of the quadratic S-pair sweep, and
//! larger sizes keep the closed-form and combinatorial checks only.

use crate::betti::{
    closed_form_betti, compressed_profile, determinantal_invariants, hochster_betti,
};
use crate::complexes::{
    cyclic_polytope_facets, dimension_and_multiplicity, f_h_vectors, matching_complex_facets,
    minimal_nonfaces, sphere_checks, BandCycle,
};
use crate::error::{Error, Result};
use crate::groebner::{
    ideal_contains_monomials, initial_ideal, verify_groebner, GroebnerReport, MonomialIdeal,
};
use crate::minors::{
    all_minors, construct_witness, cycle_independent_count, initmon_candidates, minor_polynomial,
    minor_specs, special_high_product, special_indices_high, special_indices_low,
    special_low_product, witness_leading_terms, Parity,
};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use itertools::Itertools;
use num::{BigInt, One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Run the full S-pair sweep regardless of n.
    pub force_gb: bool,
    /// Skip the restriction-homology Betti comparison.
    pub skip_betti: bool,
    /// Enable the chain criterion in the S-pair sweep.
    pub chain_criterion: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Counts {
    pub minors: usize,
    pub initial_gens: usize,
    pub facets: usize,
    pub cone_points: usize,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n: usize,
    pub counts: Counts,
    pub checks: Vec<CheckResult>,
    pub groebner: Option<GroebnerReport>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    /// Pass iff every enabled (non-skipped) check passed.
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// JSON report; `stable` drops the timing fields so identical inputs
    /// produce byte-identical output.
    pub fn to_json(&self, stable: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut obj = json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "detail": c.detail,
                });
                if !stable {
                    obj["elapsed_ms"] = json!(c.elapsed_ms);
                }
                obj
            })
            .collect();
        let mut report = json!({
            "schema": 1,
            "n": self.n,
            "overall": if self.overall() { "pass" } else { "fail" },
            "counts": {
                "minors": self.counts.minors,
                "initial_gens": self.counts.initial_gens,
                "facets": self.counts.facets,
                "cone_points": self.counts.cone_points,
            },
            "checks": checks,
        });
        if let Some(g) = &self.groebner {
            let mut gj = json!({
                "generators": g.generators,
                "pairs_total": g.pairs_total,
                "pairs_pruned": g.pairs_pruned,
                "pairs_reduced": g.pairs_reduced,
                "verdict": g.verdict,
            });
            if !stable {
                gj["elapsed_ms"] = json!(g.elapsed_ms);
            }
            if let Some(f) = &g.failure {
                gj["failure"] = json!({
                    "pair": [f.pair.0, f.pair.1],
                    "normal_form": f.normal_form,
                    "normal_form_terms": f.normal_form_terms,
                });
            }
            report["groebner"] = gj;
        }
        if !stable {
            report["elapsed_ms"] = json!(self.elapsed_ms);
        }
        report
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verification n={} — {}\n",
            self.n,
            if self.overall() { "PASS" } else { "FAIL" }
        ));
        out.push_str(&format!(
            "counts: minors={} initial_gens={} facets={} cone_points={}\n",
            self.counts.minors,
            self.counts.initial_gens,
            self.counts.facets,
            self.counts.cone_points
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{:<7}] {:<32} {}\n",
                c.status.as_str(),
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}

fn timed_check(
    checks: &mut Vec<CheckResult>,
    name: &'static str,
    body: impl FnOnce() -> (bool, String),
) {
    let t0 = Instant::now();
    let (ok, detail) = body();
    checks.push(CheckResult {
        name,
        status: CheckStatus::from_bool(ok),
        detail,
        elapsed_ms: t0.elapsed().as_millis(),
    });
}

fn skipped_check(checks: &mut Vec<CheckResult>, name: &'static str, why: &str) {
    checks.push(CheckResult {
        name,
        status: CheckStatus::Skipped,
        detail: why.to_string(),
        elapsed_ms: 0,
    });
}

/// Monomials of the minimal nonfaces of a complex on the band cycle,
/// translated through the traversal labeling.
fn nonface_monomials(
    order: &TermOrder,
    cycle: &BandCycle,
    nonface_masks: &[u64],
) -> BTreeSet<Monomial> {
    nonface_masks
        .iter()
        .map(|&mask| {
            order.squarefree_monomial(
                (0..cycle.len())
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| cycle.var_at(v + 1)),
            )
        })
        .collect()
}

/// Runs the end-to-end verification for one matrix size.
pub fn run_verification(n: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    if n < 5 {
        return Err(Error::VerificationSizeTooSmall(n));
    }
    let start = Instant::now();
    let order = TermOrder::standard(n)?;
    let t = n - 2;
    let m = 2 * n;
    let r = n - 3;
    let full_gb = n <= 6 || options.force_gb;
    let inclusion_route = !full_gb && n == 7;

    let mut checks: Vec<CheckResult> = Vec::new();
    let mut groebner_report: Option<GroebnerReport> = None;

    // Shared combinatorial artifacts.
    let cycle = BandCycle::new(n)?;
    let matching = matching_complex_facets(m, r)?;
    let nonface_masks = minimal_nonfaces(&matching);
    let sr_gens = nonface_monomials(&order, &cycle, &nonface_masks);
    let sr_ideal = MonomialIdeal::new(order.num_vars(), sr_gens.iter().cloned());
    let candidates = initmon_candidates(&order, t);
    let invariants = determinantal_invariants(n, t)?;

    // S-pair sweep, or the inclusion certificate route.
    let minors_count: usize;
    let mut ideal: Option<MonomialIdeal> = None;
    if full_gb {
        let t0 = Instant::now();
        let gens: Vec<Polynomial> = all_minors(&order, t)?.into_iter().map(|(_, p)| p).collect();
        minors_count = gens.len();
        let report = verify_groebner(&order, &gens, options.chain_criterion)?;
        let ok = report.verdict;
        let detail = format!(
            "route=buchberger generators={} pairs={} pruned={} reduced={}{}",
            report.generators,
            report.pairs_total,
            report.pairs_pruned,
            report.pairs_reduced,
            report
                .failure
                .as_ref()
                .map(|f| format!(" first_failure=({},{})", f.pair.0, f.pair.1))
                .unwrap_or_default()
        );
        checks.push(CheckResult {
            name: "groebner",
            status: CheckStatus::from_bool(ok),
            detail,
            elapsed_ms: t0.elapsed().as_millis(),
        });
        groebner_report = Some(report);
        ideal = Some(initial_ideal(&order, &gens));
    } else if inclusion_route {
        let t0 = Instant::now();
        let gens: Vec<Polynomial> = all_minors(&order, t)?.into_iter().map(|(_, p)| p).collect();
        minors_count = gens.len();
        let inclusion = ideal_contains_monomials(&gens, sr_gens.iter());
        let (dim, mult) = dimension_and_multiplicity(&sr_ideal)?;
        let dims_match =
            dim as i64 == invariants.dim && BigInt::from(mult) == invariants.multiplicity;
        let ok = inclusion && dims_match;
        checks.push(CheckResult {
            name: "groebner",
            status: CheckStatus::from_bool(ok),
            detail: format!(
                "route=inclusion nonface_gens={} inclusion={} dim={} mult={} closed_forms_match={}",
                sr_gens.len(),
                inclusion,
                dim,
                mult,
                dims_match
            ),
            elapsed_ms: t0.elapsed().as_millis(),
        });
        ideal = Some(MonomialIdeal::new(
            order.num_vars(),
            candidates.iter().cloned(),
        ));
    } else {
        minors_count = minor_specs(n, t).len();
        skipped_check(
            &mut checks,
            "groebner",
            "combinatorial checks only at this size (use --force-gb to override)",
        );
    }

    match &ideal {
        Some(ideal) => {
            timed_check(&mut checks, "square_free", || {
                let ok = ideal.is_squarefree_ideal();
                let degrees: BTreeSet<u32> = ideal.gens().iter().map(Monomial::degree).collect();
                (
                    ok,
                    format!(
                        "generators={} degrees={:?}",
                        ideal.len(),
                        degrees.iter().collect::<Vec<_>>()
                    ),
                )
            });
        }
        None => skipped_check(&mut checks, "square_free", "no initial ideal computed"),
    }

    match &ideal {
        Some(ideal) => {
            timed_check(&mut checks, "initial_equals_stanley_reisner", || {
                let gens: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
                let eq_sr = gens == sr_gens;
                let eq_candidates = gens == candidates;
                (
                    eq_sr && eq_candidates,
                    format!(
                        "initial={} nonfaces={} candidates={} equals_nonfaces={} equals_candidates={}",
                        gens.len(),
                        sr_gens.len(),
                        candidates.len(),
                        eq_sr,
                        eq_candidates
                    ),
                )
            });
        }
        None => skipped_check(
            &mut checks,
            "initial_equals_stanley_reisner",
            "no initial ideal computed",
        ),
    }

    timed_check(&mut checks, "gale_matching", || {
        let gale = match cyclic_polytope_facets(m, 2 * r) {
            Ok(c) => c,
            Err(e) => return (false, e.to_string()),
        };
        let ok = gale.facets() == matching.facets();
        (
            ok,
            format!(
                "matching_facets={} gale_facets={} equal={}",
                matching.facet_count(),
                gale.facet_count(),
                ok
            ),
        )
    });

    timed_check(&mut checks, "nonfaces", || {
        let independent: BTreeSet<u64> = (0..m)
            .combinations(t)
            .filter(|subset| subset.iter().all(|&v| !subset.contains(&((v + 1) % m))))
            .map(|subset| subset.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let found: BTreeSet<u64> = nonface_masks.iter().copied().collect();
        let ok = independent == found
            && found.len() == cycle_independent_count(m, t)
            && nonface_masks.iter().all(|f| f.count_ones() as usize == t);
        (
            ok,
            format!(
                "minimal_nonfaces={} independent_subsets={} expected={}",
                found.len(),
                independent.len(),
                cycle_independent_count(m, t)
            ),
        )
    });

    let measured_ideal = ideal.as_ref().unwrap_or(&sr_ideal);
    timed_check(
        &mut checks,
        "invariants",
        || match dimension_and_multiplicity(measured_ideal) {
            Ok((dim, mult)) => {
                let reg = 2 * (n as i64 - 3);
                let ok = dim as i64 == invariants.dim
                    && BigInt::from(mult) == invariants.multiplicity
                    && invariants.regularity == reg
                    && invariants.gorenstein;
                (
                    ok,
                    format!(
                        "dim={dim} mult={mult} expected_dim={} expected_mult={} reg={}",
                        invariants.dim, invariants.multiplicity, invariants.regularity
                    ),
                )
            }
            Err(e) => (false, e.to_string()),
        },
    );

    timed_check(&mut checks, "h_vector", || {
        let fh = f_h_vectors(&matching);
        let profile = compressed_profile(6, r);
        let ok = fh.h == profile.h
            && fh.h_sum() == matching.facet_count() as i64
            && fh.h_is_symmetric()
            && profile.bound == matching.facet_count() as i64;
        (
            ok,
            format!(
                "h={:?} expected={:?} facets={}",
                fh.h,
                profile.h,
                matching.facet_count()
            ),
        )
    });

    if n <= 6 && !options.skip_betti {
        if let Some(ideal) = &ideal {
            let closed = closed_form_betti(n);
            let ideal = ideal.clone();
            timed_check(&mut checks, "betti", || match hochster_betti(&ideal) {
                Ok(table) => {
                    let reg = 2 * (n as i64 - 3);
                    let ok = table == closed
                        && table.is_pure_resolution()
                        && table.is_selfdual(6, 2 * n as u32)
                        && table.regularity() == reg;
                    (
                        ok,
                        format!(
                            "entries={} regularity={} pure={} selfdual={} equals_closed_form={}",
                            table.entries().count(),
                            table.regularity(),
                            table.is_pure_resolution(),
                            table.is_selfdual(6, 2 * n as u32),
                            table == closed
                        ),
                    )
                }
                Err(e) => (false, e.to_string()),
            });
        } else {
            skipped_check(&mut checks, "betti", "no initial ideal computed");
        }
    } else {
        skipped_check(
            &mut checks,
            "betti",
            if options.skip_betti {
                "disabled by flag"
            } else {
                "restriction enumeration too large at this size"
            },
        );
    }

    if n <= 7 {
        let t0 = Instant::now();
        let suite = lemma_suite(n)?;
        checks.push(CheckResult {
            name: "lemma_suite",
            status: CheckStatus::from_bool(suite.passed()),
            detail: suite.summary(),
            elapsed_ms: t0.elapsed().as_millis(),
        });
    } else {
        skipped_check(
            &mut checks,
            "lemma_suite",
            "run the lemmas subcommand for large sizes",
        );
    }

    // Sphere evidence feeds the Gorenstein story; the exact homology ranks
    // get expensive past desk scale.
    if n <= 9 {
        timed_check(&mut checks, "sphere", || {
            let report = sphere_checks(&matching);
            (
                report.passed(),
                format!(
                    "dim={} pseudomanifold={} sphere_homology={} h_symmetric={}",
                    report.dim,
                    report.pseudomanifold,
                    report.homology_is_sphere,
                    report.h_symmetric
                ),
            )
        });
    } else {
        skipped_check(
            &mut checks,
            "sphere",
            "homology ranks too large at this size",
        );
    }

    let counts = Counts {
        minors: minors_count,
        initial_gens: ideal.as_ref().map(|i| i.len()).unwrap_or(sr_ideal.len()),
        facets: matching.facet_count(),
        cone_points: sr_ideal.cone_ranks().len(),
    };

    Ok(VerificationReport {
        n,
        counts,
        checks,
        groebner: groebner_report,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// One exhaustively instantiated leading-term claim.
#[derive(Debug, Clone)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct LemmaSuiteReport {
    pub n: usize,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }

    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "{}={}#{}",
                    c.name,
                    if c.passed() { "ok" } else { "FAIL" },
                    c.instances
                )
            })
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "n": self.n,
            "overall": if self.passed() { "pass" } else { "fail" },
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "instances": c.instances,
                "status": if c.passed() { "pass" } else { "fail" },
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "leading-term suite n={} — {}\n",
            self.n,
            if self.passed() { "PASS" } else { "FAIL" }
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  [{:<4}] {:<30} instances={}\n",
                if c.passed() { "pass" } else { "fail" },
                c.name,
                c.instances
            ));
            for f in &c.failures {
                out.push_str(&format!("         counterexample: {f}\n"));
            }
        }
        out
    }
}

/// Exhaustively instantiates the leading-term claims at the given size:
/// band products over strictly increasing sequence pairs, the low and high
/// special chains over every admissible length, and the witness scan plus
/// constructive witnesses for every candidate degree.
pub fn lemma_suite(n: usize) -> Result<LemmaSuiteReport> {
    if n < 4 {
        return Err(Error::MatrixTooSmall(n, 4));
    }
    let order = TermOrder::standard(n)?;
    let mut checks = Vec::new();

    // Band products: every subset of the band variables with pairwise
    // distinct rows and columns, ordered by row.
    {
        let band = order.band_vars();
        let mut instances = 0;
        let mut failures = Vec::new();
        for size in 1..=n - 2 {
            for subset in band.iter().combinations(size) {
                let rows: BTreeSet<usize> = subset.iter().map(|v| v.row()).collect();
                let cols: BTreeSet<usize> = subset.iter().map(|v| v.col()).collect();
                if rows.len() != size || cols.len() != size {
                    continue;
                }
                let mut sorted = subset.clone();
                sorted.sort_by_key(|v| v.row());
                let row_seq: Vec<usize> = sorted.iter().map(|v| v.row()).collect();
                let col_seq: Vec<usize> = sorted.iter().map(|v| v.col()).collect();
                debug_assert!(col_seq.windows(2).all(|w| w[0] < w[1]));
                instances += 1;
                let expected = order.squarefree_monomial(sorted.iter().map(|v| **v));
                if !leading_term_matches(&order, &row_seq, &col_seq, &expected) {
                    failures.push(format!(
                        "rows={row_seq:?} cols={col_seq:?} expected {}",
                        order.monomial_string(&expected)
                    ));
                }
            }
        }
        checks.push(LemmaCheck {
            name: "band_products",
            instances,
            failures,
        });
    }

    // Low special chains.
    {
        let mut instances = 0;
        let mut failures = Vec::new();
        for l in 1..=(n - 2) / 2 {
            let (rows, cols) = special_indices_low(l, Parity::Odd);
            let expected = special_low_product(&order, l, Parity::Odd);
            instances += 1;
            if !leading_term_matches(&order, &rows, &cols, &expected) {
                failures.push(format!("odd l={l}"));
            }
        }
        for l in 1..=(n.saturating_sub(3)) / 2 {
            let (rows, cols) = special_indices_low(l, Parity::Even);
            let expected = special_low_product(&order, l, Parity::Even);
            instances += 1;
            if !leading_term_matches(&order, &rows, &cols, &expected) {
                failures.push(format!("even l={l}"));
            }
        }
        checks.push(LemmaCheck {
            name: "low_chains",
            instances,
            failures,
        });
    }

    // High special chains (mirrored).
    {
        let mut instances = 0;
        let mut failures = Vec::new();
        for l in 1..=(n.saturating_sub(3)) / 2 {
            let (rows, cols) = special_indices_high(l, Parity::Odd, n);
            let expected = special_high_product(&order, l, Parity::Odd, n);
            instances += 1;
            if !leading_term_matches(&order, &rows, &cols, &expected) {
                failures.push(format!("odd l={l}"));
            }
        }
        for l in 1..=(n - 2) / 2 {
            let (rows, cols) = special_indices_high(l, Parity::Even, n);
            let expected = special_high_product(&order, l, Parity::Even, n);
            instances += 1;
            if !leading_term_matches(&order, &rows, &cols, &expected) {
                failures.push(format!("even l={l}"));
            }
        }
        checks.push(LemmaCheck {
            name: "high_chains",
            instances,
            failures,
        });
    }

    // Witness scan per degree, in parallel.
    {
        let results: Vec<(usize, usize, Option<String>)> = (1..=n - 2)
            .into_par_iter()
            .map(|s| match witness_leading_terms(&order, s) {
                Ok(witnesses) => {
                    let expected = initmon_candidates(&order, s).len();
                    if witnesses.len() == expected {
                        (s, witnesses.len(), None)
                    } else {
                        (
                            s,
                            witnesses.len(),
                            Some(format!(
                                "s={s}: {} of {expected} witnessed",
                                witnesses.len()
                            )),
                        )
                    }
                }
                Err(e) => (s, 0, Some(format!("s={s}: {e}"))),
            })
            .collect();
        checks.push(LemmaCheck {
            name: "witness_coverage",
            instances: results.iter().map(|(_, k, _)| k).sum(),
            failures: results.into_iter().filter_map(|(_, _, f)| f).collect(),
        });
    }

    // Constructive witnesses agree with the scan.
    {
        let results: Vec<(usize, Vec<String>)> = (1..=n - 2)
            .into_par_iter()
            .map(|s| {
                let candidates = initmon_candidates(&order, s);
                let failures: Vec<String> = candidates
                    .iter()
                    .filter(|m| construct_witness(&order, m).is_none())
                    .map(|m| format!("s={s}: {}", order.monomial_string(m)))
                    .collect();
                (candidates.len(), failures)
            })
            .collect();
        checks.push(LemmaCheck {
            name: "constructive_witnesses",
            instances: results.iter().map(|(k, _)| k).sum(),
            failures: results.into_iter().flat_map(|(_, f)| f).collect(),
        });
    }

    Ok(LemmaSuiteReport { n, checks })
}

fn leading_term_matches(
    order: &TermOrder,
    rows: &[usize],
    cols: &[usize],
    expected: &Monomial,
) -> bool {
    match minor_polynomial(order, rows, cols) {
        Ok(p) => match p.leading_term() {
            Some((m, c)) => m == expected && c.abs().is_one(),
            None => false,
        },
        Err(_) => false,
    }
}

/// Re-runs the S-pair verification under the standard and the alternate
/// tail completions, and compares the initial ideals variable-by-variable.
#[derive(Debug, Clone)]
pub struct TailRobustness {
    pub n: usize,
    pub orders_tried: usize,
    pub all_verified: bool,
    pub identical_initial_ideals: bool,
}

impl TailRobustness {
    pub fn passed(&self) -> bool {
        self.all_verified && self.identical_initial_ideals
    }
}

pub fn tail_robustness(n: usize, chain_criterion: bool) -> Result<TailRobustness> {
    let standard = TermOrder::standard(n)?;
    let [alt_a, alt_b] = TermOrder::alternates(n)?;
    let orders = [standard, alt_a, alt_b];
    let mut all_verified = true;
    let mut externalized: Vec<BTreeSet<Vec<(usize, usize, u32)>>> = Vec::new();
    for order in &orders {
        let gens: Vec<Polynomial> = all_minors(order, n - 2)?
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        let report = verify_groebner(order, &gens, chain_criterion)?;
        all_verified &= report.verdict;
        let ideal = initial_ideal(order, &gens);
        externalized.push(
            ideal
                .gens()
                .iter()
                .map(|m| {
                    order
                        .externalize(m)
                        .into_iter()
                        .map(|(v, e)| (v.row(), v.col(), e))
                        .sorted()
                        .collect::<Vec<_>>()
                })
                .collect(),
        );
    }
    let identical = externalized.windows(2).all(|w| w[0] == w[1]);
    Ok(TailRobustness {
        n,
        orders_tried: orders.len(),
        all_verified,
        identical_initial_ideals: identical,
    })
}
