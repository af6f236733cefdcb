//! The structured signature-based matrix engine.
//!
//! The engine consumes a precomputed list of steps (degree slices with their
//! monomials and signatures), builds one signature-labeled Macaulay matrix
//! per step, reduces it without row permutations, and collects new pivot
//! polynomials into a truncated Gröbner basis. Steps sharing a first-row
//! degree are independent and run concurrently against a frozen snapshot of
//! the shared state; their results merge deterministically at batch
//! boundaries.

pub mod criteria;
pub mod matrix;
pub mod signature;
pub mod span;
pub mod stats;

pub use criteria::{gcd_step_filter, CriteriaState};
pub use matrix::{MacaulayMatrix, RowFate};
pub use signature::{signature_cmp, Signature};
pub use span::{poly_row_space, signature_span_oracle};
pub use stats::{CriteriaHits, RunStats};

use crate::algebra::{interreduce, Monomial, MonomialOrder, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::grading::{MDeg, WeightMatrix};
use crate::steps::StepPlan;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// One unit of work: a degree, the monomials spanning that slice (strictly
/// decreasing under the ambient order), and the signatures whose rows fill it
/// (ascending by generator index, then monomial).
///
/// The degree has either the full grading length, or length one for plans
/// that follow only the first row of weights.
#[derive(Debug, Clone)]
pub struct Step {
    pub degree: MDeg,
    pub monomials: Vec<Monomial>,
    pub signatures: Vec<Signature>,
}

/// Engine switches. The default enables signature tracking and all three
/// criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F5Config {
    pub use_f5: bool,
    pub use_syzygy: bool,
    pub use_gcd_filter: bool,
    /// With tracking off, every row is the plain multiple `m·f_i`, the
    /// syzygy criterion is unavailable, and basis elements carry no
    /// signatures.
    pub signature_tracking: bool,
    /// Execute the steps of one batch on the rayon pool.
    pub parallel: bool,
    /// Record every inserted row (before reduction) with its signature.
    pub collect_row_trace: bool,
}

impl Default for F5Config {
    fn default() -> Self {
        F5Config {
            use_f5: true,
            use_syzygy: true,
            use_gcd_filter: true,
            signature_tracking: true,
            parallel: true,
            collect_row_trace: false,
        }
    }
}

/// A basis element: a monic polynomial, labeled with the signature of the row
/// it came from when tracking is on.
#[derive(Debug, Clone)]
pub struct GBElement {
    pub poly: Polynomial,
    pub signature: Option<Signature>,
}

/// The (truncated) basis accumulated by a run: the inputs first, then every
/// new pivot whose leading monomial was not already reducible.
#[derive(Debug, Clone)]
pub struct GBasis {
    pub elements: Vec<GBElement>,
}

impl GBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|e| e.poly.leading_monomial().cloned())
            .collect()
    }

    /// The canonical interreduced, monic form, sorted by ascending leading
    /// monomial.
    pub fn reduced(&self, field: &PrimeField, ord: &impl MonomialOrder) -> Vec<Polynomial> {
        interreduce(self.polynomials(), field, ord)
    }
}

#[derive(Debug, Clone)]
pub struct F5Result {
    pub basis: GBasis,
    pub stats: RunStats,
    /// Inserted rows in global signature order, when requested.
    pub row_trace: Vec<(Signature, Polynomial)>,
}

/// Groups step indices by the first coordinate of their degree. Batches come
/// out in increasing first-coordinate order; inside a batch the steps keep
/// their plan order. Steps of one batch never interact: no monomial or
/// signature of one can divide one of another, because the quotient would
/// need first-row degree zero.
pub fn batch_by_d1(plan: &StepPlan) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, step) in plan.steps.iter().enumerate() {
        groups.entry(step.degree.first()).or_default().push(i);
    }
    groups.into_values().collect()
}

struct StepCtx<'a> {
    field: PrimeField,
    w: &'a WeightMatrix,
    basis: &'a [GBElement],
    state: &'a CriteriaState,
    config: F5Config,
}

struct StepOutcome {
    degree: MDeg,
    new_elements: Vec<GBElement>,
    zero_sigs: Vec<Signature>,
    pivot_lms: Vec<(usize, Monomial)>,
    stats: RunStats,
    row_trace: Vec<(Signature, Polynomial)>,
}

/// Runs the engine on `gens` over the given schedule.
///
/// Every generator must be nonzero and homogeneous for `w`. The returned
/// basis contains all leading monomials of the ideal up to the schedule's
/// degree bound; with all criteria toggled off the output is unchanged, only
/// the statistics differ.
pub fn run_matrix_f5(
    field: &PrimeField,
    w: &WeightMatrix,
    gens: &[Polynomial],
    plan: &StepPlan,
    config: F5Config,
) -> Result<F5Result> {
    let r = gens.len();
    let mut gen_degrees = Vec::with_capacity(r);
    for (i, f) in gens.iter().enumerate() {
        match w.homogeneous_mdeg(f, i)? {
            Some(d) => gen_degrees.push(d),
            None => {
                return Err(Error::Validation(format!("generator {} is zero", i + 1)));
            }
        }
    }
    validate_plan(w, plan, &gen_degrees)?;

    let mut basis: Vec<GBElement> = gens
        .iter()
        .enumerate()
        .map(|(i, f)| GBElement {
            poly: f.make_monic(field),
            signature: config
                .signature_tracking
                .then(|| Signature::generator(w.n(), i)),
        })
        .collect();

    let mut state = CriteriaState::new(r);
    for (i, e) in basis.iter().enumerate() {
        state.prior_lms[i].push(e.poly.leading_monomial().unwrap().clone());
    }

    let mut stats = RunStats {
        steps_planned: plan.steps.len() as u64,
        ..RunStats::default()
    };
    let mut row_trace = Vec::new();

    for batch in batch_by_d1(plan) {
        stats.batches += 1;
        stats.max_w1_degree_reached = stats
            .max_w1_degree_reached
            .max(plan.steps[batch[0]].degree.first());
        let ctx = StepCtx {
            field: *field,
            w,
            basis: &basis,
            state: &state,
            config,
        };
        let mut outcomes: Vec<StepOutcome> = if config.parallel && batch.len() > 1 {
            batch
                .par_iter()
                .map(|&i| execute_step(&ctx, &plan.steps[i]))
                .collect::<Result<_>>()?
        } else {
            batch
                .iter()
                .map(|&i| execute_step(&ctx, &plan.steps[i]))
                .collect::<Result<_>>()?
        };
        // Deterministic merge order regardless of how the batch was listed
        // or scheduled.
        outcomes.sort_by(|a, b| a.degree.cmp(&b.degree));
        for out in outcomes {
            stats.merge(&out.stats);
            for (i, lm) in out.pivot_lms {
                state.prior_lms[i].push(lm);
            }
            for sig in out.zero_sigs {
                state.zero_sigs[sig.index].push(sig.monomial);
            }
            for e in out.new_elements {
                debug_assert!(
                    !is_reducible(e.poly.leading_monomial().unwrap(), basis.iter()),
                    "cross-step reduction inside a batch should be impossible"
                );
                basis.push(e);
            }
            row_trace.extend(out.row_trace);
        }
    }

    Ok(F5Result {
        basis: GBasis { elements: basis },
        stats,
        row_trace,
    })
}

fn is_reducible<'a>(lm: &Monomial, basis: impl Iterator<Item = &'a GBElement>) -> bool {
    basis
        .into_iter()
        .filter_map(|e| e.poly.leading_monomial())
        .any(|g| g.divides(lm))
}

fn execute_step(ctx: &StepCtx<'_>, step: &Step) -> Result<StepOutcome> {
    let mut out = StepOutcome {
        degree: step.degree.clone(),
        new_elements: Vec::new(),
        zero_sigs: Vec::new(),
        pivot_lms: Vec::new(),
        stats: RunStats::default(),
        row_trace: Vec::new(),
    };
    if ctx.config.use_gcd_filter && gcd_step_filter(step) {
        out.stats.criteria_hits.gcd_steps += 1;
        return Ok(out);
    }

    let mut mac = MacaulayMatrix::new(ctx.field, step.monomials.clone());
    let mut local_new: Vec<GBElement> = Vec::new();
    let sigs = &step.signatures;
    let mut pos = 0;
    while pos < sigs.len() {
        let index = sigs[pos].index;
        while pos < sigs.len() && sigs[pos].index == index {
            let sig = &sigs[pos];
            pos += 1;
            if ctx.config.use_f5 && ctx.state.f5_eliminates(sig) {
                out.stats.criteria_hits.f5 += 1;
                continue;
            }
            if ctx.config.signature_tracking
                && ctx.config.use_syzygy
                && ctx.state.syzygy_eliminates(sig)
            {
                out.stats.criteria_hits.syzygy += 1;
                continue;
            }
            let row = if ctx.config.signature_tracking {
                build_row(ctx.w, sig, ctx.basis)
            } else {
                ctx.basis[sig.index].poly.mono_mul(&sig.monomial)
            };
            if ctx.config.collect_row_trace {
                out.row_trace.push((sig.clone(), row.clone()));
            }
            mac.append_row(&row, sig.clone())?;
        }
        // Echelonize the rows of this index block against everything above.
        for (r, fate) in mac.reduce_pending() {
            match fate {
                RowFate::Zero { forced } => {
                    out.stats.reductions_to_zero_total += 1;
                    if !forced {
                        out.stats.rank_defects += 1;
                    }
                    if ctx.config.signature_tracking {
                        out.zero_sigs.push(mac.row_signature(r).clone());
                    }
                }
                RowFate::Pivot { col } => {
                    let lm = mac.columns()[col].clone();
                    out.pivot_lms.push((index, lm.clone()));
                    let reducible =
                        is_reducible(&lm, ctx.basis.iter()) || is_reducible(&lm, local_new.iter());
                    if !reducible {
                        local_new.push(GBElement {
                            poly: mac.row_polynomial(r),
                            signature: ctx
                                .config
                                .signature_tracking
                                .then(|| mac.row_signature(r).clone()),
                        });
                    }
                }
            }
        }
    }
    out.stats.observe_matrix(mac.nrows(), mac.ncols());
    out.new_elements = local_new;
    Ok(out)
}

/// Picks the basis element `g` with signature `(m', i)` such that `m'`
/// divides the signature monomial, preferring the largest `m'`, and returns
/// `(m/m')·g`. The input generator `(1, i)` always qualifies, and the result
/// does not depend on the choice.
fn build_row(w: &WeightMatrix, sig: &Signature, basis: &[GBElement]) -> Polynomial {
    let mut best: Option<(&Monomial, &Polynomial)> = None;
    for e in basis {
        let Some(s) = &e.signature else { continue };
        if s.index != sig.index || !s.monomial.divides(&sig.monomial) {
            continue;
        }
        let better = match best {
            None => true,
            Some((cur, _)) => w.mono_cmp(&s.monomial, cur) == std::cmp::Ordering::Greater,
        };
        if better {
            best = Some((&s.monomial, &e.poly));
        }
    }
    let (mp, g) = best.expect("the input generator always matches its own index");
    g.mono_mul(&sig.monomial.quotient(mp).unwrap())
}

fn validate_plan(w: &WeightMatrix, plan: &StepPlan, gen_degrees: &[MDeg]) -> Result<()> {
    for step in &plan.steps {
        if step.degree.len() == w.k() {
            for m in &step.monomials {
                if w.mdeg_unchecked(m) != step.degree {
                    return Err(Error::MalformedStep(format!(
                        "monomial {m} does not have degree {}",
                        step.degree
                    )));
                }
            }
            for s in &step.signatures {
                if s.index >= gen_degrees.len() {
                    return Err(Error::MalformedStep(format!(
                        "signature index {} out of range",
                        s.index + 1
                    )));
                }
                if w.mdeg_unchecked(&s.monomial).add(&gen_degrees[s.index]) != step.degree {
                    return Err(Error::MalformedStep(format!(
                        "signature {s} does not land in degree {}",
                        step.degree
                    )));
                }
            }
        } else if step.degree.len() == 1 {
            let d = step.degree.first();
            for m in &step.monomials {
                if w.w1_degree(m) != d {
                    return Err(Error::MalformedStep(format!(
                        "monomial {m} does not have first-row degree {d}"
                    )));
                }
            }
            for s in &step.signatures {
                if s.index >= gen_degrees.len() {
                    return Err(Error::MalformedStep(format!(
                        "signature index {} out of range",
                        s.index + 1
                    )));
                }
                if w.w1_degree(&s.monomial) + gen_degrees[s.index].first() != d {
                    return Err(Error::MalformedStep(format!(
                        "signature {s} does not land in first-row degree {d}"
                    )));
                }
            }
        } else {
            return Err(Error::MalformedStep(format!(
                "step degree {} has unexpected length",
                step.degree
            )));
        }
        if step
            .monomials
            .windows(2)
            .any(|p| w.mono_cmp(&p[0], &p[1]) != std::cmp::Ordering::Greater)
        {
            return Err(Error::MalformedStep(format!(
                "monomials of step {} are not strictly decreasing",
                step.degree
            )));
        }
        if step.signatures.windows(2).any(|p| {
            p[0].index
                .cmp(&p[1].index)
                .then_with(|| w.mono_cmp(&p[0].monomial, &p[1].monomial))
                != std::cmp::Ordering::Less
        }) {
            return Err(Error::MalformedStep(format!(
                "signatures of step {} are not ascending",
                step.degree
            )));
        }
    }
    Ok(())
}
