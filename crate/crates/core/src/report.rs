//! Batch verification suites and their reports. Every report is a pure
//! function of its parameters and seed.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bstower::{self, GammaConvention, PairingTable};
use crate::cycles::{self, CycleClass};
use crate::isogeom::{self, Family, GeometryError, QuadraticSpace};
use crate::liftconfig::{self, LiftError, MembershipVector};
use crate::spinor;

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_PRIME: u64 = 101;
pub const DEFAULT_TRIALS: usize = 1000;
pub const CLASS_DEGREES: std::ops::RangeInclusive<i64> = 3..=14;
/// Largest prime accepted for sampling.
pub const MAX_SAMPLING_PRIME: u64 = 1 << 16;
/// Largest share of draws that may fail the genericity precondition.
pub const MAX_NON_GENERIC_RATE: f64 = 0.05;
/// Retries allowed for drawing marked data in general position.
pub const LEMMA_ATTEMPTS: usize = 50;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub type Result<T, E = ReportError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Summary {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        Summary { passed: checks.iter().all(|c| c.passed), checks }
    }
}

/// What every command returns. `text` is the human rendering and is not
/// serialized.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub command: &'static str,
    pub parameters: BTreeMap<&'static str, Value>,
    pub seed: Option<u64>,
    pub findings: Value,
    pub summary: Summary,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl ReportEnvelope {
    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Per-trial generator: the seed picks the key, `(stream, index)` the stream.
pub fn trial_rng(seed: u64, stream: u32, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((stream as u64) << 40) | index);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableFindings {
    pub convention: GammaConvention,
    pub computed: Vec<Vec<i64>>,
    pub golden: Vec<Vec<i64>>,
    /// 1-based `(k, i)` positions that differ.
    pub mismatches: Vec<(usize, usize)>,
    pub mismatch_count: usize,
    #[serde(rename = "match")]
    pub verdict: String,
}

pub fn table_findings(convention: GammaConvention, golden: &PairingTable) -> TableFindings {
    let computed = spinor::table_with(convention);
    let mismatches: Vec<(usize, usize)> =
        if computed.len() == golden.len() { computed.diff(golden) } else { vec![(0, 0)] };
    let verdict = match mismatches.len() {
        0 => "exact".to_string(),
        n => format!("{n} mismatches"),
    };
    TableFindings {
        convention,
        mismatch_count: mismatches.len(),
        computed: computed.rows().to_vec(),
        golden: golden.rows().to_vec(),
        mismatches,
        verdict,
    }
}

pub fn table_report(convention: GammaConvention, golden: &PairingTable) -> ReportEnvelope {
    let f = table_findings(convention, golden);
    let computed = PairingTable::from_rows(f.computed.clone()).expect("square table");
    let mut text = vec![format!("pairing table ({} convention)", convention_name(convention))];
    text.extend(computed.render(false).lines().map(str::to_string));
    text.push(format!("match: {}", f.verdict));
    for (k, i) in &f.mismatches {
        if *k > 0 {
            text.push(format!(
                "  ({k},{i}): computed {}, golden {}",
                computed.entry(*k, *i),
                golden.entry(*k, *i)
            ));
        }
    }
    let check =
        Check::new("table matches golden copy", f.mismatch_count == 0, format!("match: {}", f.verdict));
    ReportEnvelope {
        command: "table",
        parameters: BTreeMap::from([("gamma_convention", json!(convention_name(convention)))]),
        seed: None,
        findings: to_value(&f),
        summary: Summary::from_checks(vec![check]),
        text,
    }
}

fn convention_name(c: GammaConvention) -> &'static str {
    match c {
        GammaConvention::Prefix => "prefix",
        GammaConvention::Suffix => "suffix",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeFindings {
    pub degree: i64,
    pub count: usize,
    pub argmax: CycleClass,
    pub max_dimension: i64,
    pub unique: bool,
    pub runner_up: Option<i64>,
    pub gap_to_8d: i64,
    pub extremal: bool,
}

pub fn classes_report(d_min: i64, d_max: i64) -> Result<ReportEnvelope> {
    if !(CLASS_DEGREES.contains(&d_min) && CLASS_DEGREES.contains(&d_max) && d_min <= d_max) {
        return Err(ReportError::InvalidParameter(format!(
            "degree range must satisfy {} <= min <= max <= {}, got {d_min}..{d_max}",
            CLASS_DEGREES.start(),
            CLASS_DEGREES.end()
        )));
    }
    let t = spinor::standard_table();
    let rows: Vec<DegreeFindings> = cycles::max_dimension_by_degree(d_min..=d_max, &t)
        .expect("degrees ≥ 3 have classes")
        .into_iter()
        .map(|m| DegreeFindings {
            degree: m.degree,
            count: m.count,
            extremal: m.class == CycleClass::extremal(m.degree, t.len()),
            argmax: m.class,
            max_dimension: m.dimension,
            unique: m.unique,
            runner_up: m.runner_up,
            gap_to_8d: 8 * m.degree - m.dimension,
        })
        .collect();
    let mut text =
        vec![format!("{:>3} {:>8} {:>5} {:>6} {:>4}  argmax", "d", "classes", "dim", "unique", "gap")];
    for r in &rows {
        text.push(format!(
            "{:>3} {:>8} {:>5} {:>6} {:>4}  {}",
            r.degree, r.count, r.max_dimension, r.unique, r.gap_to_8d, r.argmax
        ));
    }
    let checks = rows
        .iter()
        .map(|r| {
            let ok = r.extremal && r.unique && r.max_dimension == 8 * r.degree - 3;
            Check::new(
                format!("degree {}", r.degree),
                ok,
                format!("argmax {} dim {} unique {}", r.argmax, r.max_dimension, r.unique),
            )
        })
        .collect();
    Ok(ReportEnvelope {
        command: "classes",
        parameters: BTreeMap::from([("degree_min", json!(d_min)), ("degree_max", json!(d_max))]),
        seed: None,
        findings: json!({ "degrees": rows }),
        summary: Summary::from_checks(checks),
        text,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusFindings {
    pub q: u32,
    pub points: usize,
    pub expected_points: u128,
    /// Number of points `V` by `dim(V ∩ W5)`, against the reference `W5`.
    pub orbit_counts: BTreeMap<usize, usize>,
}

pub fn census(q: u32) -> Result<CensusFindings> {
    let qs = QuadraticSpace::new(q as u64)?;
    let pts = isogeom::enumerate_spinor_points(q)?;
    let w5 = qs.reference();
    let types: Vec<usize> = pts.par_iter().map(|v| qs.orbit_type(v, &w5).expect("family one")).collect();
    let mut orbit_counts = BTreeMap::new();
    for t in types {
        *orbit_counts.entry(t).or_insert(0) += 1;
    }
    Ok(CensusFindings {
        q,
        points: pts.len(),
        expected_points: isogeom::family_size(q as u64, 5),
        orbit_counts,
    })
}

fn census_checks(c: &CensusFindings) -> Vec<Check> {
    vec![
        Check::new(
            "point count",
            c.points as u128 == c.expected_points,
            format!("{} points, product formula {}", c.points, c.expected_points),
        ),
        Check::new(
            "one closed-orbit point",
            c.orbit_counts.get(&5) == Some(&1),
            format!("{} points with dim(V∩W5)=5", c.orbit_counts.get(&5).copied().unwrap_or(0)),
        ),
        Check::new(
            "intersection dimensions odd",
            c.orbit_counts.keys().all(|d| d % 2 == 1),
            format!("{:?}", c.orbit_counts),
        ),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftFindings {
    pub prime: u64,
    pub trials: usize,
    pub generic: usize,
    pub non_generic: usize,
    /// Non-generic draws by the first failing lift step.
    pub non_generic_steps: BTreeMap<String, usize>,
    pub validated: usize,
    pub round_trips: usize,
    pub containment_ok: usize,
    /// Lifts that avoid every section whenever `V` avoids every Schubert image.
    pub schubert_free_consistent: usize,
    pub failed_trials: Vec<u64>,
}

enum LiftOutcome {
    NonGeneric(&'static str),
    Lifted { valid: bool, round_trip: bool, containment: bool, empty: bool },
}

pub fn lift_trials(prime: u64, trials: usize, seed: u64) -> Result<LiftFindings> {
    let qs = QuadraticSpace::new(prime)?;
    let outcomes: Vec<LiftOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, 1, i);
            let flag = liftconfig::random_flag(&qs, &mut rng);
            let v = qs.random_maximal_isotropic(Family::One, &mut rng);
            match liftconfig::lift_point(&v, &flag) {
                Ok(c) => {
                    let sec = liftconfig::section_membership(&c, &flag);
                    let sch = liftconfig::schubert_membership(&v, &flag).expect("same ambient");
                    LiftOutcome::Lifted {
                        valid: liftconfig::validate_configuration(&c, &flag).is_ok_and(|r| r.holds()),
                        round_trip: c.v5p == v,
                        containment: sec.is_subset(&sch),
                        empty: !sch.is_empty() || sec.is_empty(),
                    }
                }
                Err(LiftError::NotGeneric { step, .. }) => LiftOutcome::NonGeneric(step),
                Err(e) => panic!("lift of a sampled point failed unexpectedly: {e}"),
            }
        })
        .collect();
    let mut f = LiftFindings {
        prime,
        trials,
        generic: 0,
        non_generic: 0,
        non_generic_steps: BTreeMap::new(),
        validated: 0,
        round_trips: 0,
        containment_ok: 0,
        schubert_free_consistent: 0,
        failed_trials: Vec::new(),
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            LiftOutcome::NonGeneric(step) => {
                f.non_generic += 1;
                *f.non_generic_steps.entry(step.to_string()).or_insert(0) += 1;
            }
            LiftOutcome::Lifted { valid, round_trip, containment, empty } => {
                f.generic += 1;
                f.validated += valid as usize;
                f.round_trips += round_trip as usize;
                f.containment_ok += containment as usize;
                f.schubert_free_consistent += empty as usize;
                if !(valid && round_trip && containment && empty) {
                    f.failed_trials.push(i as u64);
                }
            }
        }
    }
    Ok(f)
}

fn lift_checks(f: &LiftFindings) -> Vec<Check> {
    let rate = f.non_generic as f64 / f.trials.max(1) as f64;
    vec![
        Check::new(
            "lifts satisfy all ten incidence conditions",
            f.validated == f.generic,
            format!("{}/{}", f.validated, f.generic),
        ),
        Check::new(
            "lifts return V5' = V",
            f.round_trips == f.generic,
            format!("{}/{}", f.round_trips, f.generic),
        ),
        Check::new(
            "sections lie over Schubert images",
            f.containment_ok == f.generic && f.schubert_free_consistent == f.generic,
            format!("{}/{}", f.containment_ok, f.generic),
        ),
        Check::new(
            "genericity failure rate below 5%",
            rate < MAX_NON_GENERIC_RATE && f.generic > 0,
            format!("{}/{} draws not generic", f.non_generic, f.trials),
        ),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointTally {
    pub label: &'static str,
    pub expected_sections: MembershipVector,
    pub expected_schubert: MembershipVector,
    pub matched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaFindings {
    pub prime: u64,
    pub trials: usize,
    pub constructed: usize,
    /// Marked-data draws rejected by a general-position hypothesis.
    pub rejected_draws: usize,
    pub flags_adapted: usize,
    pub points: Vec<PointTally>,
    pub failed_trials: Vec<u64>,
}

pub fn lemma_trials(prime: u64, trials: usize, seed: u64) -> Result<LemmaFindings> {
    let qs = QuadraticSpace::new(prime)?;
    type Trial = Option<(usize, bool, Vec<bool>)>;
    let results: Vec<Trial> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, 2, i);
            let (sc, attempts) = liftconfig::random_lemma_scenario(&qs, LEMMA_ATTEMPTS, &mut rng).ok()?;
            let adapted = liftconfig::adapted_flag_properties(&sc.flag, &sc.marked).iter().all(|(_, ok)| *ok);
            let matched = match sc.outcomes() {
                Ok(out) => out
                    .iter()
                    .zip(liftconfig::LEMMA_EXPECTATIONS)
                    .map(|(o, (_, sec, sch))| {
                        o.section == MembershipVector::from_indices(sec)
                            && o.schubert == MembershipVector::from_indices(sch)
                    })
                    .collect(),
                Err(_) => vec![false; 4],
            };
            Some((attempts - 1, adapted, matched))
        })
        .collect();
    let mut points: Vec<PointTally> = liftconfig::LEMMA_EXPECTATIONS
        .iter()
        .map(|&(label, sec, sch)| PointTally {
            label,
            expected_sections: MembershipVector::from_indices(sec),
            expected_schubert: MembershipVector::from_indices(sch),
            matched: 0,
        })
        .collect();
    let mut f = LemmaFindings {
        prime,
        trials,
        constructed: 0,
        rejected_draws: 0,
        flags_adapted: 0,
        points: Vec::new(),
        failed_trials: Vec::new(),
    };
    for (i, r) in results.into_iter().enumerate() {
        let Some((rejected, adapted, matched)) = r else {
            f.failed_trials.push(i as u64);
            continue;
        };
        f.constructed += 1;
        f.rejected_draws += rejected;
        f.flags_adapted += adapted as usize;
        for (p, m) in points.iter_mut().zip(&matched) {
            p.matched += *m as usize;
        }
        if !(adapted && matched.iter().all(|&m| m)) {
            f.failed_trials.push(i as u64);
        }
    }
    f.points = points;
    Ok(f)
}

fn lemma_checks(f: &LemmaFindings) -> Vec<Check> {
    let mut out = vec![
        Check::new(
            "scenarios constructed",
            f.constructed == f.trials,
            format!("{}/{}", f.constructed, f.trials),
        ),
        Check::new(
            "flags satisfy the adapted non-incidences",
            f.flags_adapted == f.constructed,
            format!("{}/{}", f.flags_adapted, f.constructed),
        ),
    ];
    for p in &f.points {
        out.push(Check::new(
            format!("{} lies on exactly {}", p.label, p.expected_sections),
            p.matched == f.trials,
            format!("{}/{} (Schubert images {})", p.matched, f.trials, p.expected_schubert),
        ));
    }
    out
}

pub fn geom_report(prime: u64, trials: usize, seed: u64) -> Result<ReportEnvelope> {
    isogeom::PrimeField::new(prime)?;
    if trials == 0 {
        return Err(ReportError::InvalidParameter("trials must be positive".into()));
    }
    let parameters = BTreeMap::from([("prime", json!(prime)), ("trials", json!(trials))]);
    if prime <= 3 {
        let c = census(prime as u32)?;
        let checks = census_checks(&c);
        let text = vec![
            format!("exhaustive census over F_{prime}"),
            format!("family-1 maximal isotropics: {} (product formula {})", c.points, c.expected_points),
            format!("dim(V∩W5) counts: {:?}", c.orbit_counts),
        ];
        return Ok(ReportEnvelope {
            command: "geom",
            parameters,
            seed: None,
            findings: json!({ "mode": "exhaustive", "census": c }),
            summary: Summary::from_checks(checks),
            text,
        });
    }
    if prime > MAX_SAMPLING_PRIME {
        return Err(ReportError::InvalidParameter(format!(
            "sampling mode supports primes up to {MAX_SAMPLING_PRIME}, got {prime}"
        )));
    }
    let lifts = lift_trials(prime, trials, seed)?;
    let lemma = lemma_trials(prime, trials, seed)?;
    let mut checks = lift_checks(&lifts);
    checks.extend(lemma_checks(&lemma));
    let pct = 100.0 * lifts.generic as f64 / trials as f64;
    let mut text = vec![
        format!("sampling over F_{prime}, {trials} trials, seed {seed}"),
        format!("generic draws: {}/{trials} ({pct:.1}%)", lifts.generic),
        format!("round trips: {}/{}", lifts.round_trips, lifts.generic),
        format!("valid configurations: {}/{}", lifts.validated, lifts.generic),
    ];
    for p in &lemma.points {
        text.push(format!("{} on {}: {}/{}", p.label, p.expected_sections, p.matched, lemma.trials));
    }
    Ok(ReportEnvelope {
        command: "geom",
        parameters,
        seed: Some(seed),
        findings: json!({ "mode": "sampling", "lifts": lifts, "lemma": lemma }),
        summary: Summary::from_checks(checks),
        text,
    })
}

/// One acceptance suite of `verify-all`.
#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub findings: Value,
}

impl Suite {
    fn new(criterion: u8, name: &'static str, checks: Vec<Check>, findings: Value) -> Self {
        Suite { criterion, name, passed: checks.iter().all(|c| c.passed), checks, findings }
    }
}

/// Trial counts used by `verify-all`.
pub const VERIFY_LIFT_TRIALS: usize = 1000;
pub const VERIFY_LEMMA_TRIALS: usize = 100;

fn suite_table(golden: &PairingTable) -> Suite {
    let f = table_findings(GammaConvention::Prefix, golden);
    let computed = PairingTable::from_rows(f.computed.clone()).expect("square table");
    let checks = vec![
        Check::new(
            "computed table equals golden copy",
            f.mismatch_count == 0,
            format!("match: {}", f.verdict),
        ),
        Check::new("table is symmetric", computed.is_symmetric(), ""),
    ];
    Suite::new(1, "pairing-table", checks, json!({ "mismatches": f.mismatches }))
}

fn suite_tangent() -> Suite {
    let c = bstower::tangent_sum(&spinor::standard_table());
    let expected = [8, 7, 6, 6, 5, 5, 4, 4, 3, 2];
    let checks = vec![Check::new("Σ T_i", c.coeffs() == expected, c.to_string())];
    Suite::new(2, "tangent-sum", checks, json!({ "coefficients": c.coeffs() }))
}

fn suite_extremal(t: &PairingTable) -> Suite {
    let rows = cycles::max_dimension_by_degree(3..=12, t).expect("degrees ≥ 3 have classes");
    let checks = rows
        .iter()
        .map(|m| {
            let d = m.degree;
            let below = m.runner_up.is_none_or(|r| r < 8 * d - 3 && (d < 4 || r + 3 < 8 * d));
            let ok =
                m.class == CycleClass::extremal(d, t.len()) && m.dimension == 8 * d - 3 && m.unique && below;
            Check::new(
                format!("degree {d}"),
                ok,
                format!("argmax {} dim {} runner-up {:?}", m.class, m.dimension, m.runner_up),
            )
        })
        .collect();
    Suite::new(3, "extremal-dimension", checks, to_value(&rows))
}

fn suite_total() -> Suite {
    let rows: Vec<_> = (4..=12).map(|d| cycles::total_space_dimension(d).expect("stable range")).collect();
    let checks = rows
        .iter()
        .map(|r| {
            Check::new(
                format!("degree {}", r.degree),
                r.total == 8 * r.degree && r.flag_variety == 10 && r.fiber_of_p == 7,
                format!("{} + {} - {} = {}", r.lifted_maximum, r.flag_variety, r.fiber_of_p, r.total),
            )
        })
        .collect();
    Suite::new(4, "total-dimension", checks, to_value(&rows))
}

fn suite_planar() -> Suite {
    let rows: Vec<_> = (2..=30).map(|d| cycles::planar_locus_bound(d).expect("d ≥ 2")).collect();
    let checks = rows
        .iter()
        .map(|b| {
            let d = b.degree;
            let ok = b.bound == 6 * d + 7
                && b.planar_image_family == 3 * d + 6
                && b.line_image_family == 2 * d + 6
                && b.plane_fiber == 3 * d + 1
                && b.line_fiber == 3 * d + 3
                && b.below_main_component == (d >= 4);
            Check::new(format!("degree {d}"), ok, format!("bound {}", b.bound))
        })
        .collect();
    Suite::new(5, "planar-bound", checks, to_value(&rows))
}

fn suite_hypotheses(t: &PairingTable) -> Suite {
    let per_degree: Vec<(i64, usize, usize)> = (3..=12i64)
        .into_par_iter()
        .map(|d| {
            let mut count = 0;
            let mut bad = 0;
            for a in cycles::enumerate_classes_len(d, t.len()) {
                count += 1;
                if !cycles::level_checks(&a, t).expect("length matches").iter().all(|c| c.holds) {
                    bad += 1;
                }
            }
            (d, count, bad)
        })
        .collect();
    let checks = per_degree
        .iter()
        .map(|&(d, n, bad)| Check::new(format!("degree {d}"), bad == 0, format!("{bad} of {n} classes fail")))
        .collect();
    let findings: Vec<Value> =
        per_degree.iter().map(|&(d, n, bad)| json!({ "degree": d, "classes": n, "failures": bad })).collect();
    Suite::new(6, "fibration-hypotheses", checks, Value::Array(findings))
}

fn suite_census() -> Suite {
    match census(2) {
        Ok(c) => Suite::new(7, "census-q2", census_checks(&c), to_value(&c)),
        Err(e) => {
            Suite::new(7, "census-q2", vec![Check::new("enumeration", false, e.to_string())], Value::Null)
        }
    }
}

fn suite_lifts(seed: u64) -> Suite {
    let f = lift_trials(DEFAULT_PRIME, VERIFY_LIFT_TRIALS, seed).expect("101 is prime");
    Suite::new(8, "lift-round-trip", lift_checks(&f), to_value(&f))
}

fn suite_lemma(seed: u64) -> Suite {
    let f = lemma_trials(DEFAULT_PRIME, VERIFY_LEMMA_TRIALS, seed).expect("101 is prime");
    Suite::new(9, "lemma-scenario", lemma_checks(&f), to_value(&f))
}

/// Runs every suite. `golden` is the reference table the computed one is
/// compared against; it only affects the pairing-table suite.
pub fn verify_all(seed: u64, golden: &PairingTable) -> ReportEnvelope {
    let t = spinor::standard_table();
    let suites = vec![
        suite_table(golden),
        suite_tangent(),
        suite_extremal(&t),
        suite_total(),
        suite_planar(),
        suite_hypotheses(&t),
        suite_census(),
        suite_lifts(seed),
        suite_lemma(seed),
    ];
    let checks: Vec<Check> = suites
        .iter()
        .map(|s| {
            let failed: Vec<&str> = s.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            let detail = if failed.is_empty() {
                format!("{} checks", s.checks.len())
            } else {
                format!("failed: {}", failed.join("; "))
            };
            Check::new(s.name, s.passed, detail)
        })
        .collect();
    let text = checks
        .iter()
        .zip(&suites)
        .map(|(c, s)| {
            format!(
                "[{}] {} {:<22} {}",
                if c.passed { "PASS" } else { "FAIL" },
                s.criterion,
                c.name,
                c.detail
            )
        })
        .collect();
    ReportEnvelope {
        command: "verify-all",
        parameters: BTreeMap::new(),
        seed: Some(seed),
        findings: json!({ "suites": suites }),
        summary: Summary::from_checks(checks),
        text,
    }
}
