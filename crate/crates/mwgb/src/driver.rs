//! High-level entry points behind the command-line tool: strategy selection,
//! basis computation with verification, statistics reports, and the analyze
//! subcommands.

use crate::algebra::{buchberger_oracle, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::f5::{run_matrix_f5, F5Config, F5Result, RunStats};
use crate::grading::MDeg;
use crate::hilbert::{
    classify_sequence, hs_algebra, hs_quotient_oracle, hs_regular, hs_semiregular, random_system,
    RegularityReport, TruncatedMultiseries,
};
use crate::steps::{algosteps_mwh, algosteps_w1_default, StepPlan};
use crate::system::SystemFile;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Which schedule (and step filter) drives the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Degree-by-degree steps with the gcd step filter.
    MwhGcd,
    /// Degree-by-degree steps, no step filter.
    MwhNoFilter,
    /// One step per first-row degree (the baseline).
    DefaultW1,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::MwhGcd, Strategy::MwhNoFilter, Strategy::DefaultW1];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::MwhGcd => "mwh-gcd",
            Strategy::MwhNoFilter => "mwh-nofilter",
            Strategy::DefaultW1 => "default-w1",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mwh-gcd" => Ok(Strategy::MwhGcd),
            "mwh-nofilter" => Ok(Strategy::MwhNoFilter),
            "default-w1" => Ok(Strategy::DefaultW1),
            other => Err(Error::Validation(format!(
                "unknown strategy '{other}' (expected mwh-gcd, mwh-nofilter or default-w1)"
            ))),
        }
    }
}

/// Statistics of one run, printable as an aligned table and as key=value
/// lines. All fields except the elapsed time are deterministic.
#[derive(Debug, Clone)]
pub struct StatsReport {
    pub strategy: Strategy,
    pub d_max: i64,
    pub basis_size: usize,
    /// Largest first-row degree of a printed basis element.
    pub max_basis_w1_degree: i64,
    pub run: RunStats,
    pub elapsed_seconds: f64,
}

impl StatsReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("strategy", self.strategy.name().to_string()),
            ("d_max", self.d_max.to_string()),
            ("basis_size", self.basis_size.to_string()),
            ("max_basis_w1_degree", self.max_basis_w1_degree.to_string()),
            ("steps_planned", self.run.steps_planned.to_string()),
            ("batches", self.run.batches.to_string()),
            ("matrices_total", self.run.matrices_total.to_string()),
            ("max_matrix_rows", self.run.max_matrix_rows.to_string()),
            ("max_matrix_cols", self.run.max_matrix_cols.to_string()),
            (
                "max_matrix_entries",
                self.run.max_matrix_entries.to_string(),
            ),
            (
                "reductions_to_zero",
                self.run.reductions_to_zero_total.to_string(),
            ),
            ("rank_defects", self.run.rank_defects.to_string()),
            ("f5_hits", self.run.criteria_hits.f5.to_string()),
            ("syzygy_hits", self.run.criteria_hits.syzygy.to_string()),
            (
                "gcd_skipped_steps",
                self.run.criteria_hits.gcd_steps.to_string(),
            ),
            (
                "max_w1_degree_reached",
                self.run.max_w1_degree_reached.to_string(),
            ),
            ("elapsed_seconds", format!("{:.3}", self.elapsed_seconds)),
        ]
    }

    pub fn table(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        fields
            .iter()
            .map(|(k, v)| format!("  {k:width$}  {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn kv_lines(&self) -> String {
        self.fields()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }
}

#[derive(Debug, Clone)]
pub struct GbOutcome {
    /// The interreduced monic basis, ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    /// The basis serialized as a system file (byte-deterministic).
    pub basis_text: String,
    pub report: StatsReport,
}

/// Builds the schedule for a strategy.
pub fn build_plan(sys: &SystemFile, strategy: Strategy, d_max: i64) -> Result<StepPlan> {
    let degrees = generator_degrees(sys)?;
    match strategy {
        Strategy::MwhGcd | Strategy::MwhNoFilter => algosteps_mwh(&sys.weights, &degrees, d_max),
        Strategy::DefaultW1 => algosteps_w1_default(&sys.weights, &degrees, d_max),
    }
}

pub fn generator_degrees(sys: &SystemFile) -> Result<Vec<MDeg>> {
    let mut degrees = Vec::with_capacity(sys.generators.len());
    for (i, g) in sys.generators.iter().enumerate() {
        match sys.weights.homogeneous_mdeg(g, i)? {
            Some(d) => degrees.push(d),
            None => return Err(Error::Validation(format!("generator {} is zero", i + 1))),
        }
    }
    Ok(degrees)
}

fn resolve_d_max(sys: &SystemFile, d_max: Option<i64>) -> Result<i64> {
    d_max.or(sys.d_max).ok_or_else(|| {
        Error::Validation(
            "no degree bound: pass --dmax or add a dmax line to the system file".into(),
        )
    })
}

/// The leading monomials of `basis` whose first-row degree is at most
/// `d_max`.
pub fn truncated_lm_set(basis: &[Polynomial], sys: &SystemFile, d_max: i64) -> BTreeSet<Monomial> {
    basis
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .filter(|lm| sys.weights.w1_degree(lm) <= d_max)
        .collect()
}

/// Computes the truncated basis with the requested strategy and thread cap.
/// With `verify` on, the truncated leading-monomial set is cross-checked
/// against a Buchberger computation (intended for small inputs).
pub fn compute_gb(
    sys: &SystemFile,
    strategy: Strategy,
    d_max: Option<i64>,
    threads: Option<usize>,
    verify: bool,
) -> Result<GbOutcome> {
    compute_gb_with(sys, strategy, d_max, threads, verify, F5Config::default())
}

/// As [`compute_gb`] but with explicit engine switches. The gcd filter flag
/// is forced by the strategy.
pub fn compute_gb_with(
    sys: &SystemFile,
    strategy: Strategy,
    d_max: Option<i64>,
    threads: Option<usize>,
    verify: bool,
    mut config: F5Config,
) -> Result<GbOutcome> {
    if sys.generators.is_empty() {
        return Err(Error::Validation("the system has no generators".into()));
    }
    let d_max = resolve_d_max(sys, d_max)?;
    let plan = build_plan(sys, strategy, d_max)?;
    config.use_gcd_filter = matches!(strategy, Strategy::MwhGcd);

    let start = Instant::now();
    let result = run_with_threads(sys, &plan, config, threads)?;
    let elapsed = start.elapsed().as_secs_f64();

    let basis = result.basis.reduced(&sys.field, &sys.weights);
    let basis_text =
        SystemFile::new(sys.field, sys.weights.clone(), basis.clone(), Some(d_max)).emit();
    let max_basis_w1_degree = basis
        .iter()
        .filter_map(|g| g.leading_monomial())
        .map(|lm| sys.weights.w1_degree(lm))
        .max()
        .unwrap_or(0);
    let report = StatsReport {
        strategy,
        d_max,
        basis_size: basis.len(),
        max_basis_w1_degree,
        run: result.stats,
        elapsed_seconds: elapsed,
    };

    if verify {
        let oracle = buchberger_oracle(&sys.generators, &sys.field, &sys.weights);
        let expected = truncated_lm_set(&oracle, sys, d_max);
        let got = truncated_lm_set(&basis, sys, d_max);
        if expected != got {
            let missing = expected.difference(&got).map(|m| m.to_string()).collect();
            let extra = got.difference(&expected).map(|m| m.to_string()).collect();
            return Err(Error::VerifyMismatch { missing, extra });
        }
    }

    Ok(GbOutcome {
        basis,
        basis_text,
        report,
    })
}

fn run_with_threads(
    sys: &SystemFile,
    plan: &StepPlan,
    config: F5Config,
    threads: Option<usize>,
) -> Result<F5Result> {
    match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Validation(format!("thread pool: {e}")))?;
            pool.install(|| run_matrix_f5(&sys.field, &sys.weights, &sys.generators, plan, config))
        }
        None => run_matrix_f5(&sys.field, &sys.weights, &sys.generators, plan, config),
    }
}

fn series_block(title: &str, hs: &TruncatedMultiseries) -> String {
    let mut out = format!("{title} (degree: coefficient, zero entries omitted)\n");
    if hs.coefficients().is_empty() {
        out.push_str("  (all zero)\n");
    }
    for (d, c) in hs.coefficients() {
        out.push_str(&format!("  {d}: {c}\n"));
    }
    out
}

/// The four series tables: algebra, regular and semi-regular predictions,
/// and the dimension count against a computed basis.
pub fn analyze_hilbert(sys: &SystemFile, bound: i64) -> Result<String> {
    let degrees = generator_degrees(sys)?;
    let algebra = hs_algebra(&sys.weights, bound)?;
    let regular = hs_regular(&sys.weights, &degrees, bound)?;
    let semi = hs_semiregular(&sys.weights, &degrees, bound)?;
    let plan = algosteps_mwh(&sys.weights, &degrees, bound)?;
    let result = run_matrix_f5(
        &sys.field,
        &sys.weights,
        &sys.generators,
        &plan,
        F5Config::default(),
    )?;
    let gb = result.basis.reduced(&sys.field, &sys.weights);
    let quotient = hs_quotient_oracle(&sys.weights, &gb, bound)?;

    let mut out = String::new();
    out.push_str(&series_block("ambient algebra", &algebra));
    out.push_str(&series_block("regular prediction", &regular));
    out.push_str(&series_block("semi-regular prediction", &semi));
    out.push_str(&series_block("quotient (dimension count)", &quotient));
    out.push_str(&format!(
        "regular prediction matches quotient: {}\n",
        regular == quotient
    ));
    out.push_str(&format!(
        "semi-regular prediction matches quotient: {}\n",
        semi == quotient
    ));
    Ok(out)
}

/// Classifies the sequence and renders the report.
pub fn analyze_classify(sys: &SystemFile, bound: i64) -> Result<(RegularityReport, String)> {
    let report = classify_sequence(&sys.field, &sys.weights, &sys.generators, bound)?;
    let mut out = format!(
        "verdict: {} (up to first-row degree {})\n",
        report.verdict, report.bound
    );
    let inspected = report.witnesses.len();
    let non_injective: Vec<_> = report.witnesses.iter().filter(|w| !w.injective).collect();
    out.push_str(&format!(
        "inspected {} degree slices, {} with nonzero kernels\n",
        inspected,
        non_injective.len()
    ));
    for w in non_injective {
        out.push_str(&format!(
            "  generator {} at degree {}: dim {} -> {}, rank {}, kernel {}{}\n",
            w.index + 1,
            w.degree,
            w.source_dim,
            w.target_dim,
            w.rank,
            w.kernel_dim,
            if w.surjective { ", surjective" } else { "" },
        ));
        for (lm, class) in &w.kernel_classes {
            out.push_str(&format!("    kernel leading monomial {lm}: {class}\n"));
        }
    }
    Ok((report, out))
}

/// Draws a seeded random system at the given degrees, reusing the modulus,
/// variables, and weights of `template`.
pub fn generate_random(template: &SystemFile, degrees: &[MDeg], seed: u64) -> Result<SystemFile> {
    let gens = random_system(&template.field, &template.weights, degrees, seed)?;
    Ok(SystemFile::new(
        template.field,
        template.weights.clone(),
        gens,
        template.d_max,
    ))
}
