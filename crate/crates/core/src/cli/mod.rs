//! Command implementations behind the `codeaut` binary.
//!
//! Each command returns plain data; the binary only parses arguments and
//! prints JSON.

mod config;
mod record;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

pub use config::SurveyConfig;
pub use record::{summary_table, CodeRecord, Cyclicity, Timing};

use crate::code::{CodeJson, LinearCode};
use crate::cyclic::{self, Poly2};
use crate::error::{Error, Result};
use crate::families::{self, CodeFamily};
use crate::perm::{
    affine_generators, automorphism_group_with, expected_group_shape, find_regular_cycle_with,
    regular_cycle_witness, PermGroup,
};
use crate::verify::{self, Tier, VerificationReport};

/// What to analyze: a named family or a bare code.
#[derive(Clone, Debug)]
pub enum CodeSource {
    Family(CodeFamily),
    Code { label: String, code: LinearCode },
}

impl CodeSource {
    pub fn label(&self) -> String {
        match self {
            CodeSource::Family(f) => f.to_string(),
            CodeSource::Code { label, .. } => label.clone(),
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        match self {
            CodeSource::Family(f) => f.build(),
            CodeSource::Code { code, .. } => Ok(code.clone()),
        }
    }

    fn family(&self) -> Option<&CodeFamily> {
        match self {
            CodeSource::Family(f) => Some(f),
            CodeSource::Code { .. } => None,
        }
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Classification tag for a computed automorphism group.
pub fn classify(code: &LinearCode, family: Option<&CodeFamily>, group: &PermGroup) -> &'static str {
    if families::elementary_kind(code).is_some() {
        return "elementary";
    }
    let order = group.order();
    if let Some(shape) = family.and_then(expected_group_shape) {
        if let Some(gens) = shape.generators() {
            if shape.expected_order() == order && gens.iter().all(|g| group.contains(g)) {
                return shape.tag();
            }
        }
    }
    let n = code.length();
    if is_prime(n) && n >= 3 {
        for m in (1..n).filter(|m| (n - 1).is_multiple_of(*m)) {
            if order == BigUint::from(m * n) {
                let gens = affine_generators(m, n).expect("m divides p - 1");
                if gens.iter().all(|g| group.contains(g)) {
                    return "affine-type";
                }
            }
        }
    }
    "other"
}

/// Parameters, automorphism group and cyclicity of one code. Failures become
/// record fields.
pub fn cmd_analyze(source: &CodeSource, cfg: &SurveyConfig) -> Result<CodeRecord> {
    let start = Instant::now();
    let code = source.build()?;
    let mut errors = BTreeMap::new();
    let mut timing = Timing::default();
    let mut note = |field: &str, e: &Error| {
        let msg = e.to_string();
        let msg = if msg.starts_with(e.tag()) {
            msg
        } else {
            format!("{}: {msg}", e.tag())
        };
        errors.insert(field.to_string(), msg);
    };

    let t = Instant::now();
    let d = match code.min_distance_capped(cfg.enumeration_cap) {
        Ok(d) => Some(d),
        Err(e) => {
            note("d", &e);
            None
        }
    };
    let weight_spectrum = match code.weight_spectrum_capped(cfg.enumeration_cap) {
        Ok(s) => Some(s.to_vec()),
        Err(e) => {
            note("weight_spectrum", &e);
            None
        }
    };
    timing.distance_ms = ms(t);

    let t = Instant::now();
    let aut = match automorphism_group_with(&code, &cfg.aut_config()) {
        Ok(r) => Some(r),
        Err(e) => {
            note("aut_order", &e);
            None
        }
    };
    timing.aut_ms = ms(t);

    let t = Instant::now();
    let family = source.family();
    let (cyclic, witness) = if cyclic::is_shift_invariant(&code) {
        (
            Cyclicity::Yes,
            Some(crate::perm::Permutation::shift(code.length())),
        )
    } else if let Some(w) = family.and_then(|f| regular_cycle_witness(f).ok()) {
        (Cyclicity::Yes, Some(w))
    } else if let Some(r) = &aut {
        match find_regular_cycle_with(&r.group, cfg.element_cap, &[]) {
            Ok(Some(w)) => (Cyclicity::Yes, Some(w)),
            Ok(None) => (Cyclicity::No, None),
            Err(e) => {
                note("cyclic", &e);
                (Cyclicity::Undecided, None)
            }
        }
    } else {
        (Cyclicity::Undecided, None)
    };
    timing.cyclic_ms = ms(t);

    let aut_classification = match &aut {
        Some(r) => classify(&code, family, &r.group).to_string(),
        None => "undecided".to_string(),
    };
    timing.total_ms = ms(start);
    Ok(CodeRecord {
        source: source.label(),
        n: code.length(),
        k: code.dimension(),
        d,
        weight_spectrum,
        aut_order: aut.as_ref().map(|r| r.group.order().to_string()),
        aut_classification,
        aut_search_nodes: aut.as_ref().map(|r| r.nodes),
        cyclic,
        cyclic_witness: witness.map(|w| w.one_line()),
        beyond_theorem: family
            .and_then(CodeFamily::wreath_shape)
            .map(|s| s.beyond_theorem()),
        errors,
        timing,
    })
}

/// Analyze every cyclic code of prime length `p`, in enumeration order.
pub fn cmd_survey_prime(p: usize, cfg: &SurveyConfig) -> Result<Vec<CodeRecord>> {
    cfg.validate()?;
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    let codes = cyclic::enumerate_cyclic_codes(p)?;
    let sources: Vec<CodeSource> = codes
        .iter()
        .map(|c| {
            CodeSource::Family(CodeFamily::Cyclic {
                n: p,
                generator: c.generator.to_string(),
            })
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| sources.par_iter().map(|s| cmd_analyze(s, cfg)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub poly: Poly2,
    pub coefficients: String,
    pub degree: usize,
    pub coset: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub n: usize,
    pub field_degree: usize,
    pub cosets: Vec<Vec<usize>>,
    pub factors: Vec<FactorEntry>,
}

pub fn cmd_factor(n: usize, seed: u64) -> Result<FactorReport> {
    let cosets = cyclic::cyclotomic_cosets(n)?;
    let fac = cyclic::factor_cyclotomic_seeded(n, seed)?;
    Ok(FactorReport {
        n,
        field_degree: fac.field_degree,
        cosets: cosets.cosets,
        factors: fac
            .factors
            .into_iter()
            .map(|f| FactorEntry {
                coefficients: f.poly.coefficient_string(),
                degree: f.poly.degree().unwrap_or(0),
                poly: f.poly,
                coset: f.coset,
            })
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumeratedCode {
    pub subset: u64,
    pub generator: Poly2,
    pub code: CodeJson,
}

pub fn cmd_enumerate(n: usize) -> Result<Vec<EnumeratedCode>> {
    Ok(cyclic::enumerate_cyclic_codes(n)?
        .into_iter()
        .map(|c| EnumeratedCode {
            subset: c.subset,
            generator: c.generator,
            code: c.code.to_json(),
        })
        .collect())
}

pub fn cmd_construct(family: &CodeFamily) -> Result<CodeJson> {
    Ok(family.build()?.to_json())
}

pub fn cmd_verify_paper(tier: Tier, cfg: &SurveyConfig) -> VerificationReport {
    verify::run(tier, cfg)
}
