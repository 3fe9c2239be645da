//! Mechanical checks of the structural results for the code families.
//!
//! Each criterion returns the individual checks it made, with expected and
//! measured values, so a failure can be read off the report directly.

use std::collections::BTreeSet;
use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cli::{cmd_survey_prime, CodeRecord, SurveyConfig};
use crate::code::LinearCode;
use crate::cyclic;
use crate::error::{Error, Result};
use crate::families::{self, CodeFamily, WreathShape};
use crate::gf2::BitVector;
use crate::perm::{
    automorphism_group_with, brute_force_order, conjugate_code, cycle_relabeling,
    expected_group_shape, find_regular_cycle, regular_cycle_witness, wreath_generators, GroupShape,
    PermGroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Full,
    Extended,
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Tier::Fast),
            "full" => Ok(Tier::Full),
            "extended" => Ok(Tier::Extended),
            other => Err(Error::Parse(format!("unknown tier {other:?}"))),
        }
    }
}

impl Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Fast => "fast",
            Tier::Full => "full",
            Tier::Extended => "extended",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub measured: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
    pub budget_ms: f64,
}

impl CriterionResult {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `PASS [id] title (n checks, t s)` followed by one line per failed check.
    pub fn summary_line(&self) -> String {
        let mut s = format!(
            "{} [{:>2}] {} ({} checks, {:.2} s / budget {:.0} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.len(),
            self.elapsed_ms / 1e3,
            self.budget_ms / 1e3
        );
        for c in self.failures() {
            s.push_str(&format!(
                "\n       {}: expected {}, measured {}",
                c.label, c.expected, c.measured
            ));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tier: Tier,
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

/// Criteria run at each tier; higher tiers also run the heavier parts of 7 and 10.
pub fn criteria_for(tier: Tier) -> Vec<u8> {
    match tier {
        Tier::Fast => (1..=6).collect(),
        Tier::Full => (1..=12).filter(|&i| i != 9).collect(),
        Tier::Extended => (1..=12).collect(),
    }
}

pub fn run(tier: Tier, cfg: &SurveyConfig) -> VerificationReport {
    let criteria: Vec<CriterionResult> = criteria_for(tier)
        .into_iter()
        .map(|id| run_criterion(id, tier, cfg))
        .collect();
    VerificationReport {
        tier,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(
        &mut self,
        label: impl Into<String>,
        expected: impl Display,
        measured: impl Display,
        passed: bool,
    ) {
        self.0.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            measured: measured.to_string(),
            passed,
        });
    }

    fn eq<T: PartialEq + Display>(&mut self, label: impl Into<String>, expected: T, measured: T) {
        let passed = expected == measured;
        self.push(label, expected, measured, passed);
    }

    fn truth(&mut self, label: impl Into<String>, measured: bool) {
        self.push(label, true, measured, measured);
    }

    fn within(&mut self, label: impl Into<String>, elapsed: Duration, budget: Duration) {
        self.push(
            format!("{} time", label.into()),
            format!("< {:.0} s", budget.as_secs_f64()),
            format!("{:.3} s", elapsed.as_secs_f64()),
            elapsed < budget,
        );
    }

    fn error(&mut self, label: impl Into<String>, e: &Error) {
        self.push(label, "a value", e, false);
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "C0 dimension, distance and weight spectrum grid",
        2 => "C1 equality, dimension and distance grid",
        3 => "C0 automorphism group orders",
        4 => "C1 automorphism group orders",
        5 => "C0 regular cycles: found for (3,4), certified absent for (3,3)",
        6 => "K codes: parameters, co-distance, automorphism orders",
        7 => "K(3,3,3): wreath generators, order and regular witness",
        8 => "Hamming [7,4] and [15,11] automorphism orders",
        9 => "Golay [23,12,7] automorphism order",
        10 => "Cyclic code counts and prime-length survey",
        11 => "No odd cyclic or alternating automorphism groups of cyclic codes",
        12 => "Automorphism search agrees with brute force for N <= 8",
        _ => "unknown",
    }
}

pub fn budget(id: u8) -> Duration {
    match id {
        1 | 2 | 5 => secs(10),
        3 => secs(7 * 60),
        4 => secs(5 * 60),
        6 => secs(4 * 300),
        7 => secs(60 + 600),
        8 => secs(120),
        9 => secs(600),
        10 => secs(300 + 600),
        11 => secs(600),
        12 => secs(300),
        _ => Duration::ZERO,
    }
}

pub fn run_criterion(id: u8, tier: Tier, cfg: &SurveyConfig) -> CriterionResult {
    let start = Instant::now();
    let mut checks = Checks::default();
    match id {
        1 => c0_grid(&mut checks),
        2 => c1_grid(&mut checks),
        3 => c0_orders(&mut checks, cfg),
        4 => c1_orders(&mut checks, cfg),
        5 => c0_cycles(&mut checks, cfg),
        6 => k_family(&mut checks, cfg),
        7 => k333(&mut checks, tier, cfg),
        8 => hamming_orders(&mut checks, cfg),
        9 => golay(&mut checks, cfg),
        10 => cyclic_counts(&mut checks, tier, cfg),
        11 => nonexistence(&mut checks, cfg),
        12 => brute_force_agreement(&mut checks, cfg),
        _ => checks.push("criterion id", "1..=12", id, false),
    }
    let elapsed = start.elapsed();
    let budget = budget(id);
    let checks = checks.0;
    CriterionResult {
        id,
        title: title(id),
        passed: !checks.is_empty() && checks.iter().all(|c| c.passed) && elapsed < budget,
        checks,
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
        budget_ms: budget.as_secs_f64() * 1e3,
    }
}

fn grid_weights(a: usize, b: usize, parity: Option<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for x in 0..=a {
        for y in 0..=b {
            if parity.is_none_or(|p| (x + y) % 2 == p) {
                out.insert((a - x) * y + (b - y) * x);
            }
        }
    }
    out
}

fn grid_points() -> impl Iterator<Item = (usize, usize)> {
    (1..=36usize).flat_map(|a| (a..=36).filter(move |b| a * b <= 36).map(move |b| (a, b)))
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    format!("{s:?}")
}

fn c0_grid(checks: &mut Checks) {
    for (a, b) in grid_points() {
        let code = match families::c0(a, b) {
            Ok(c) => c,
            Err(e) => return checks.error(format!("c0({a},{b})"), &e),
        };
        checks.eq(format!("dim c0({a},{b})"), a + b - 1, code.dimension());
        match code.min_distance() {
            Ok(d) => checks.eq(format!("d c0({a},{b})"), a, d),
            Err(e) => checks.error(format!("d c0({a},{b})"), &e),
        }
        match code.weight_spectrum() {
            Ok(s) => checks.eq(
                format!("spectrum c0({a},{b})"),
                fmt_set(&grid_weights(a, b, None)),
                fmt_set(&s.weights),
            ),
            Err(e) => checks.error(format!("spectrum c0({a},{b})"), &e),
        }
    }
}

fn c1_grid(checks: &mut Checks) {
    for (a, b) in grid_points() {
        let (c0, c1) = match (families::c0(a, b), families::c1(a, b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return checks.error(format!("c1({a},{b})"), &e),
        };
        if (a + b) % 2 == 1 {
            checks.truth(format!("c1({a},{b}) = c0({a},{b})"), c0 == c1);
            continue;
        }
        checks.eq(format!("dim c1({a},{b})"), a + b - 2, c1.dimension());
        let expected_d = if a < b {
            Some(2 * a)
        } else if a > 1 {
            Some(2 * a - 2)
        } else {
            None
        };
        if let Some(ed) = expected_d {
            match c1.min_distance() {
                Ok(d) => checks.eq(format!("d c1({a},{b})"), ed, d),
                Err(e) => checks.error(format!("d c1({a},{b})"), &e),
            }
        }
        match c1.weight_spectrum() {
            Ok(s) => checks.eq(
                format!("spectrum c1({a},{b})"),
                fmt_set(&grid_weights(a, b, Some(0))),
                fmt_set(&s.weights),
            ),
            Err(e) => checks.error(format!("spectrum c1({a},{b})"), &e),
        }
    }
}

/// Compute the automorphism group, record order, containment and time checks.
fn aut_order_check(
    checks: &mut Checks,
    family: &CodeFamily,
    expected: u64,
    per_case: Duration,
    cfg: &SurveyConfig,
) -> Option<PermGroup> {
    let start = Instant::now();
    let label = family.to_string();
    let code = match family.build() {
        Ok(c) => c,
        Err(e) => {
            checks.error(&label, &e);
            return None;
        }
    };
    let group = match automorphism_group_with(&code, &cfg.aut_config()) {
        Ok(r) => r.group,
        Err(e) => {
            checks.error(format!("|Aut({label})|"), &e);
            return None;
        }
    };
    checks.eq(
        format!("|Aut({label})|"),
        BigUint::from(expected),
        group.order(),
    );
    if let Some(gens) = expected_group_shape(family).and_then(|s| s.generators()) {
        let missing = gens.iter().filter(|g| !group.contains(g)).count();
        checks.eq(
            format!("family generators outside Aut({label})"),
            0,
            missing,
        );
    }
    checks.within(label, start.elapsed(), per_case);
    Some(group)
}

fn c0_orders(checks: &mut Checks, cfg: &SurveyConfig) {
    for (a, b, order) in [
        (1, 4, 24),
        (2, 2, 24),
        (2, 5, 3840),
        (3, 3, 72),
        (3, 4, 144),
        (3, 5, 720),
        (4, 5, 2880),
    ] {
        aut_order_check(checks, &CodeFamily::C0 { a, b }, order, secs(60), cfg);
    }
}

fn c1_orders(checks: &mut Checks, cfg: &SurveyConfig) {
    for (a, b, order) in [
        (2, 2, 8),
        (2, 4, 192),
        (3, 3, 72),
        (3, 5, 720),
        (4, 4, 1152),
    ] {
        aut_order_check(checks, &CodeFamily::C1 { a, b }, order, secs(60), cfg);
    }
}

fn c0_cycles(checks: &mut Checks, cfg: &SurveyConfig) {
    let aut = |a, b| -> Result<(LinearCode, PermGroup)> {
        let code = families::c0(a, b)?;
        let group = automorphism_group_with(&code, &cfg.aut_config())?.group;
        Ok((code, group))
    };
    match aut(3, 4) {
        Ok((code, group)) => match find_regular_cycle(&group, cfg.element_cap) {
            Ok(Some(z)) => {
                checks.truth(
                    "regular cycle in Aut(c0(3,4)) is a 12-cycle",
                    z.is_full_cycle(),
                );
                let relabeled = cycle_relabeling(&z).map(|rho| conjugate_code(&code, &rho));
                checks.truth(
                    "relabeled c0(3,4) is shift-invariant",
                    relabeled.is_ok_and(|c| cyclic::is_shift_invariant(&c)),
                );
            }
            Ok(None) => checks.push("regular cycle in Aut(c0(3,4))", "found", "none", false),
            Err(e) => checks.error("regular cycle in Aut(c0(3,4))", &e),
        },
        Err(e) => checks.error("Aut(c0(3,4))", &e),
    }
    match aut(3, 3) {
        Ok((_, group)) => {
            checks.eq("|Aut(c0(3,3))|", BigUint::from(72u32), group.order());
            match find_regular_cycle(&group, cfg.element_cap) {
                Ok(found) => {
                    let none = found.is_none();
                    checks.push(
                        "regular cycle in Aut(c0(3,3))",
                        "none",
                        found.map_or("none".to_string(), |z| z.to_string()),
                        none,
                    )
                }
                Err(e) => checks.error("regular cycle in Aut(c0(3,3))", &e),
            }
        }
        Err(e) => checks.error("Aut(c0(3,3))", &e),
    }
}

fn params_check(
    checks: &mut Checks,
    label: &str,
    code: &LinearCode,
    expected: (usize, usize, usize),
) {
    let d = code
        .min_distance()
        .map_or_else(|e| e.to_string(), |d| d.to_string());
    checks.eq(
        format!("parameters of {label}"),
        format!("[{},{},{}]", expected.0, expected.1, expected.2),
        format!("[{},{},{}]", code.length(), code.dimension(), d),
    );
}

fn k_family(checks: &mut Checks, cfg: &SurveyConfig) {
    for (degrees, params, order) in [
        (vec![3], (3, 2, 2), 6u64),
        (vec![3, 3], (9, 6, 2), 1296),
        (vec![3, 5], (15, 10, 2), 933_120),
        (vec![5, 3], (15, 12, 2), 10_368_000),
    ] {
        let family = CodeFamily::K {
            degrees: degrees.clone(),
        };
        let shape = WreathShape::new(degrees).expect("valid shape");
        match family.build() {
            Ok(code) => {
                params_check(checks, &family.to_string(), &code, params);
                match code.min_codistance() {
                    Ok(cd) => checks.eq(
                        format!("co-distance of {family}"),
                        shape.expected_codistance(),
                        cd,
                    ),
                    Err(e) => checks.error(format!("co-distance of {family}"), &e),
                }
            }
            Err(e) => checks.error(family.to_string(), &e),
        }
        checks.eq(
            format!("wreath order formula for {family}"),
            BigUint::from(order),
            GroupShape::IteratedWreath {
                degrees: shape.degrees().to_vec(),
            }
            .expected_order(),
        );
        aut_order_check(checks, &family, order, secs(300), cfg);
    }
}

fn k333(checks: &mut Checks, tier: Tier, cfg: &SurveyConfig) {
    let start = Instant::now();
    let shape = WreathShape::new(vec![3, 3, 3]).expect("valid shape");
    let family = CodeFamily::K {
        degrees: vec![3, 3, 3],
    };
    let code = match families::k_code(&shape) {
        Ok(c) => c,
        Err(e) => return checks.error("k 3,3,3", &e),
    };
    params_check(checks, "k 3,3,3", &code, (27, 20, 2));
    let gens = wreath_generators(&shape);
    checks.truth(
        "wreath generators leave K(3,3,3) invariant",
        gens.iter().all(|g| code.is_invariant(g)),
    );
    let expected = BigUint::from(13_060_694_016u64);
    match PermGroup::from_generators(27, &gens) {
        Ok(g) => checks.eq(
            "order of the wreath generators' group",
            expected.clone(),
            g.order(),
        ),
        Err(e) => checks.error("order of the wreath generators' group", &e),
    }
    match regular_cycle_witness(&family) {
        Ok(w) => {
            checks.eq("witness order", BigUint::from(27u32), w.order());
            checks.truth("witness is a regular 27-cycle", w.is_full_cycle());
        }
        Err(e) => checks.error("regular witness", &e),
    }
    checks.within("generator phase", start.elapsed(), secs(60));
    if tier == Tier::Extended {
        let t = Instant::now();
        match automorphism_group_with(&code, &cfg.aut_config()) {
            Ok(r) => checks.eq("|Aut(k 3,3,3)| by search", expected, r.group.order()),
            Err(e) => checks.error("|Aut(k 3,3,3)| by search", &e),
        }
        checks.within("full search", t.elapsed(), secs(600));
    }
}

fn hamming_orders(checks: &mut Checks, cfg: &SurveyConfig) {
    for (r, params, order) in [(3, (7, 4, 3), 168u64), (4, (15, 11, 3), 20160)] {
        let family = CodeFamily::Hamming { r };
        match family.build() {
            Ok(code) => params_check(checks, &family.to_string(), &code, params),
            Err(e) => checks.error(family.to_string(), &e),
        }
        aut_order_check(checks, &family, order, secs(120), cfg);
    }
}

fn golay(checks: &mut Checks, cfg: &SurveyConfig) {
    match families::golay23() {
        Ok(code) => params_check(checks, "golay", &code, (23, 12, 7)),
        Err(e) => checks.error("golay", &e),
    }
    aut_order_check(checks, &CodeFamily::Golay, 10_200_960, secs(600), cfg);
}

fn affine_multiplier(r: &CodeRecord) -> Option<usize> {
    let order: usize = r.aut_order.as_ref()?.parse().ok()?;
    (r.aut_classification == "affine-type").then(|| order / r.n)
}

fn cyclic_counts(checks: &mut Checks, tier: Tier, cfg: &SurveyConfig) {
    for (n, count) in [(7usize, 8usize), (15, 32), (17, 8)] {
        match cyclic::enumerate_cyclic_codes(n) {
            Ok(codes) => {
                checks.eq(format!("cyclic codes of length {n}"), count, codes.len());
                if n == 17 {
                    let mut dims: Vec<usize> = codes.iter().map(|c| c.code.dimension()).collect();
                    dims.sort_unstable();
                    checks.eq(
                        "dimensions at length 17",
                        format!("{:?}", [0, 1, 8, 8, 9, 9, 16, 17]),
                        format!("{dims:?}"),
                    );
                }
            }
            Err(e) => checks.error(format!("cyclic codes of length {n}"), &e),
        }
    }
    let start = Instant::now();
    match cmd_survey_prime(17, cfg) {
        Ok(records) => {
            let others: Vec<&CodeRecord> = records
                .iter()
                .filter(|r| r.aut_classification != "elementary")
                .collect();
            let mut params: Vec<String> = others.iter().map(|r| r.parameters()).collect();
            params.sort();
            checks.eq(
                "non-elementary codes of length 17",
                "[17,8,6] [17,8,6] [17,9,5] [17,9,5]".to_string(),
                params.join(" "),
            );
            for r in &others {
                checks.eq(
                    format!("|Aut| of {} {}", r.parameters(), r.source),
                    "136".to_string(),
                    r.aut_order.clone().unwrap_or_else(|| "undecided".into()),
                );
                checks.eq(
                    format!("class of {}", r.source),
                    "affine-type".to_string(),
                    r.aut_classification.clone(),
                );
            }
        }
        Err(e) => checks.error("survey of length 17", &e),
    }
    checks.within("survey 17", start.elapsed(), secs(300));

    if tier == Tier::Extended {
        let start = Instant::now();
        match cmd_survey_prime(31, cfg) {
            Ok(records) => {
                let found: BTreeSet<(usize, usize, usize)> = records
                    .iter()
                    .filter(|r| r.k == 15 || r.k == 16)
                    .filter_map(|r| Some((r.k, r.d?, affine_multiplier(r)?)))
                    .collect();
                let expected: BTreeSet<(usize, usize, usize)> = [
                    (15, 6, 5),
                    (16, 5, 5),
                    (15, 8, 5),
                    (16, 6, 5),
                    (15, 8, 15),
                    (16, 7, 15),
                ]
                .into_iter()
                .collect();
                checks.eq(
                    "affine-type (k, d, m) at length 31, k in {15,16}",
                    format!("{expected:?}"),
                    format!("{found:?}"),
                );
            }
            Err(e) => checks.error("survey of length 31", &e),
        }
        checks.within("survey 31", start.elapsed(), secs(600));
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// True if some element has order `|G|`.
fn is_cyclic_group(group: &PermGroup) -> bool {
    let order = group.order();
    let mut cyclic = false;
    group.for_each_element(|g| {
        cyclic = g.order() == order;
        !cyclic
    });
    cyclic
}

fn nonexistence(checks: &mut Checks, cfg: &SurveyConfig) {
    let mut odd_cyclic = Vec::new();
    let mut alternating = Vec::new();
    let mut codes_checked = 0usize;
    let mut odd_orders_enumerated = 0usize;
    for n in (3..=21).step_by(2) {
        let codes = match cyclic::enumerate_cyclic_codes(n) {
            Ok(c) => c,
            Err(e) => return checks.error(format!("cyclic codes of length {n}"), &e),
        };
        let half_sym = factorial(n) / BigUint::from(2u32);
        for c in &codes {
            let label = format!("cyclic {n} {}", c.generator);
            let group = match automorphism_group_with(&c.code, &cfg.aut_config()) {
                Ok(r) => r.group,
                Err(e) => {
                    checks.error(format!("Aut({label})"), &e);
                    continue;
                }
            };
            codes_checked += 1;
            let order = group.order();
            if order == half_sym {
                alternating.push(label.clone());
            }
            if (&order % BigUint::from(2u32)).is_zero() || order.is_one() {
                continue;
            }
            if order > BigUint::from(cfg.element_cap) {
                checks.push(
                    format!("odd |Aut({label})| enumerable"),
                    "<= element cap",
                    &order,
                    false,
                );
                continue;
            }
            odd_orders_enumerated += 1;
            if is_cyclic_group(&group) {
                odd_cyclic.push(label);
            }
        }
        if [3, 5, 11, 13, 19].contains(&n) {
            let non_elem = codes
                .iter()
                .filter(|c| families::elementary_kind(&c.code).is_none())
                .count();
            checks.eq(
                format!("non-elementary cyclic codes of length {n}"),
                0,
                non_elem,
            );
        }
    }
    checks.push(
        "cyclic codes analyzed",
        "> 0",
        codes_checked,
        codes_checked > 0,
    );
    checks.push(
        "odd-order groups certified non-cyclic by enumeration",
        "all",
        odd_orders_enumerated,
        odd_cyclic.is_empty(),
    );
    checks.eq(
        "codes whose Aut is cyclic of odd order",
        "[]".to_string(),
        format!("{odd_cyclic:?}"),
    );
    checks.eq(
        "codes with |Aut| = N!/2",
        "[]".to_string(),
        format!("{alternating:?}"),
    );
}

/// A fixed sample of random codes of length at most 8.
pub fn random_small_codes(count: usize, seed: u64) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=8usize);
            let k = rng.gen_range(0..=n);
            let rows = (0..k)
                .map(|_| {
                    BitVector::from_bools(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
                })
                .collect();
            LinearCode::span(n, rows).expect("rows have length n")
        })
        .collect()
}

/// Every family instance of length at most 8.
pub fn small_family_instances() -> Vec<CodeFamily> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for kind in 0..4 {
            out.push(CodeFamily::Elementary { kind, n });
        }
    }
    for a in 1..=8usize {
        for b in a..=8 / a {
            out.push(CodeFamily::C0 { a, b });
            out.push(CodeFamily::C1 { a, b });
        }
    }
    for degrees in [
        vec![2],
        vec![3],
        vec![4],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 2],
        vec![2, 3],
        vec![3, 2],
        vec![2, 4],
        vec![4, 2],
        vec![2, 2, 2],
    ] {
        out.push(CodeFamily::K { degrees });
    }
    out.push(CodeFamily::Hamming { r: 3 });
    out
}

/// Seed of the random sample compared against brute force.
pub const BRUTE_FORCE_SAMPLE_SEED: u64 = 2024;

fn brute_force_agreement(checks: &mut Checks, cfg: &SurveyConfig) {
    let mut cases: Vec<(String, LinearCode)> = random_small_codes(50, BRUTE_FORCE_SAMPLE_SEED)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("random #{i} [{},{}]", c.length(), c.dimension()), c))
        .collect();
    for f in small_family_instances() {
        match f.build() {
            Ok(c) => cases.push((f.to_string(), c)),
            Err(e) => checks.error(f.to_string(), &e),
        }
    }
    let mut mismatches = Vec::new();
    for (label, code) in &cases {
        let searched = automorphism_group_with(code, &cfg.aut_config()).map(|r| r.group.order());
        let brute = brute_force_order(code).map(BigUint::from);
        match (searched, brute) {
            (Ok(s), Ok(b)) if s == b => {}
            (Ok(s), Ok(b)) => mismatches.push(format!("{label}: search {s}, brute force {b}")),
            (Err(e), _) | (_, Err(e)) => checks.error(label.clone(), &e),
        }
    }
    checks.push("codes compared", ">= 50", cases.len(), cases.len() >= 50);
    checks.eq(
        "order mismatches",
        "[]".to_string(),
        format!("{mismatches:?}"),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiers() {
        assert_eq!(criteria_for(Tier::Fast), vec![1, 2, 3, 4, 5, 6]);
        assert!(!criteria_for(Tier::Full).contains(&9));
        assert_eq!(criteria_for(Tier::Extended).len(), 12);
        assert_eq!("full".parse::<Tier>().unwrap(), Tier::Full);
        assert!("quick".parse::<Tier>().is_err());
    }

    #[test]
    fn closed_form_weights() {
        let w = grid_weights(3, 4, None);
        assert_eq!(
            w.into_iter().collect::<Vec<_>>(),
            vec![0, 3, 4, 5, 6, 7, 8, 9, 12]
        );
    }

    #[test]
    fn sample_is_reproducible() {
        assert_eq!(random_small_codes(5, 1), random_small_codes(5, 1));
        assert!(small_family_instances()
            .iter()
            .all(|f| f.build().unwrap().length() <= 8));
    }

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(99, Tier::Fast, &SurveyConfig::default());
        assert!(!r.passed);
    }
}
