//! Job dispatch.

use semica_core::analysis::{
    estimate_entropy, find_mutually_erasable, myhill_audit, window_image, Certificate, EntropySource, Enumeration,
    GoeCertificate, ImageRecord, PreInjectiveUpTo, SurjectiveUpTo,
};
use semica_core::automaton::CellularAutomaton;
use semica_core::geometry::{region_calculus, verify_folner_prefix, FolnerTrace, RegionReport};
use semica_core::tiling::{greedy_tiling, tiling_density, verify_tiling, DensityReport, Tiling, TilingCheck};
use semica_core::{Error, Semigroup, Window};

use crate::catalog::examples_catalog;
use crate::error::{CliError, Result};
use crate::spec::{Job, JobSpec, Source, WindowPlan};

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Cert(Certificate),
    Regions {
        omega: Window,
        k: Window,
        report: RegionReport,
    },
    Folner(FolnerTrace),
    /// The semigroup has no Følner sequence to walk.
    NoFolner(String),
    Tiling {
        tiling: Tiling,
        check: TilingCheck,
        /// `(index, report)` for each density window.
        density: Vec<(usize, DensityReport)>,
    },
    Example {
        name: &'static str,
        summary: &'static str,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub items: Vec<Item>,
    /// Why the job stopped early, when it did.
    pub partial: Option<String>,
}

impl Outcome {
    fn complete(items: Vec<Item>) -> Self {
        Outcome { items, partial: None }
    }
}

/// Plan windows paired with their 1-based (or schedule) index.
fn indexed_windows(sg: &Semigroup, plan: &WindowPlan) -> Result<Vec<(usize, Window)>> {
    let ws = plan.windows(sg)?;
    let first = match plan {
        WindowPlan::Schedule { first, .. } => *first,
        WindowPlan::Explicit(_) => 1,
    };
    Ok(ws.into_iter().enumerate().map(|(i, w)| (first + i, w)).collect())
}

fn automaton(spec: &JobSpec) -> Result<&CellularAutomaton> {
    spec.automaton
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("job kind `{}` needs an automaton", spec.job.kind())))
}

/// Runs the job and replays every certificate it produced.
pub fn run_job(spec: &JobSpec) -> Result<Outcome> {
    let sg = spec.semigroup();
    if let Some(ca) = &spec.automaton {
        ca.check_against(&sg)?;
    }
    let cfg = Enumeration::with_budget(spec.budget).workers(spec.workers);
    let outcome = match &spec.job {
        Job::Regions { omega, k } => Outcome::complete(vec![Item::Regions {
            omega: omega.clone(),
            k: k.clone(),
            report: region_calculus(&sg, omega, k)?,
        }]),
        Job::Folner { k, n_max, epsilon } => {
            let k = k.clone().unwrap_or_else(|| sg.default_generators());
            match verify_folner_prefix(&sg, &k, *n_max, *epsilon) {
                Ok(trace) => Outcome::complete(vec![Item::Folner(trace)]),
                Err(Error::NoFolnerSequence(s)) => Outcome::complete(vec![Item::NoFolner(s)]),
                Err(e) => return Err(e.into()),
            }
        }
        Job::Tiling { shape, arena, density } => {
            let tiling = greedy_tiling(&sg, shape, arena)?;
            let check = verify_tiling(&sg, &tiling)?;
            let mut reports = Vec::new();
            if let Some(plan) = density {
                for (n, f) in indexed_windows(&sg, plan)? {
                    reports.push((n, tiling_density(&sg, shape, &tiling.tiles, &f)?));
                }
            }
            Outcome::complete(vec![Item::Tiling {
                tiling,
                check,
                density: reports,
            }])
        }
        Job::Goe { windows } => goe_job(&sg, automaton(spec)?, windows, &cfg)?,
        Job::Mep { windows } => mep_job(&sg, automaton(spec)?, windows, spec, &cfg)?,
        Job::Audit { windows } => {
            let ca = automaton(spec)?;
            let ws = windows.windows(&sg)?;
            let v = myhill_audit(&sg, ca, &ws, spec.background, &cfg)?;
            let mut items = Vec::new();
            items.extend(v.goe.clone().map(|c| Item::Cert(Certificate::GoePattern(c))));
            items.extend(v.erasable.clone().map(|c| Item::Cert(Certificate::MutuallyErasablePair(c))));
            if !v.surjective_up_to.windows.is_empty() {
                items.push(Item::Cert(Certificate::SurjectiveUpTo(v.surjective_up_to.clone())));
            }
            if !v.pre_injective_up_to.supports.is_empty() {
                items.push(Item::Cert(Certificate::PreInjectiveUpTo(v.pre_injective_up_to.clone())));
            }
            let partial = v.truncated.clone();
            items.push(Item::Cert(Certificate::AuditVerdict(v)));
            Outcome { items, partial }
        }
        Job::Entropy { source, windows } => {
            let WindowPlan::Schedule {
                schedule,
                first,
                last,
            } = windows
            else {
                return Err(CliError::Usage("entropy jobs walk a window schedule, not listed windows".into()));
            };
            let src = match source {
                Source::Full => EntropySource::FullShift {
                    alphabet: spec.alphabet,
                },
                Source::Image => EntropySource::Image(automaton(spec)?),
            };
            match estimate_entropy(&sg, src, *schedule, *first..=*last, &cfg) {
                Ok(trace) => {
                    let partial = trace
                        .truncated
                        .as_ref()
                        .map(|t| format!("stopped at n = {}: {}", t.n, t.reason));
                    Outcome {
                        items: vec![Item::Cert(Certificate::EntropyTrace(trace))],
                        partial,
                    }
                }
                Err(Error::NoFolnerSequence(s)) => Outcome::complete(vec![Item::NoFolner(s)]),
                Err(e) => return Err(e.into()),
            }
        }
        Job::Examples => Outcome::complete(
            examples_catalog()
                .iter()
                .map(|e| Item::Example {
                    name: e.name,
                    summary: e.summary,
                })
                .collect(),
        ),
    };
    replay_all(&sg, spec, &outcome)?;
    Ok(outcome)
}

fn goe_job(sg: &Semigroup, ca: &CellularAutomaton, plan: &WindowPlan, cfg: &Enumeration) -> Result<Outcome> {
    let mut seen = SurjectiveUpTo::default();
    let mut found = None;
    let mut partial = None;
    for w in plan.windows(sg)? {
        let image = match window_image(sg, ca, &w, cfg) {
            Ok(image) => image,
            Err(e) if e.is_budget() => {
                partial = Some(format!("window of size {}: {e}", w.len()));
                break;
            }
            Err(e) => return Err(e.into()),
        };
        match image.smallest_missing() {
            Some(missing) => {
                found = Some(GoeCertificate {
                    missing,
                    dependence: image.dependence.clone(),
                    image_count: image.count,
                    full_count: image.full,
                });
                break;
            }
            None => seen.windows.push(ImageRecord {
                window: w,
                count: image.count,
            }),
        }
    }
    let mut items: Vec<Item> = found.map(|c| Item::Cert(Certificate::GoePattern(c))).into_iter().collect();
    if !seen.windows.is_empty() {
        items.push(Item::Cert(Certificate::SurjectiveUpTo(seen)));
    }
    Ok(Outcome { items, partial })
}

fn mep_job(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    plan: &WindowPlan,
    spec: &JobSpec,
    cfg: &Enumeration,
) -> Result<Outcome> {
    let mut seen = PreInjectiveUpTo {
        background: spec.background,
        supports: Vec::new(),
    };
    let mut found = None;
    let mut partial = None;
    for w in plan.windows(sg)? {
        match find_mutually_erasable(sg, ca, &w, spec.background, cfg) {
            Ok(Some(pair)) => {
                found = Some(pair);
                break;
            }
            Ok(None) => seen.supports.push(w),
            Err(e) if e.is_budget() => {
                partial = Some(format!("support of size {}: {e}", w.len()));
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut items: Vec<Item> =
        found.map(|p| Item::Cert(Certificate::MutuallyErasablePair(p))).into_iter().collect();
    if !seen.supports.is_empty() {
        items.push(Item::Cert(Certificate::PreInjectiveUpTo(seen)));
    }
    Ok(Outcome { items, partial })
}

/// A stand-in automaton for replaying full-shift traces, which never consult it.
fn placeholder(sg: &Semigroup, q: usize) -> Result<CellularAutomaton> {
    let anchor = sg
        .default_generators()
        .iter()
        .next()
        .cloned()
        .ok_or_else(|| CliError::Usage(format!("{sg} has no generators")))?;
    Ok(CellularAutomaton::from_local_rule(q, vec![anchor], |t| t[0])?)
}

fn replay_all(sg: &Semigroup, spec: &JobSpec, outcome: &Outcome) -> Result<()> {
    let fallback;
    let ca = match &spec.automaton {
        Some(ca) => ca,
        None => {
            fallback = placeholder(sg, spec.alphabet)?;
            &fallback
        }
    };
    for item in &outcome.items {
        let Item::Cert(cert) = item else { continue };
        // a verdict is the sum of the certificates listed beside it
        if matches!(cert, Certificate::AuditVerdict(_)) {
            continue;
        }
        if !cert.replay(sg, ca, spec.budget.max(1 << 20))? {
            return Err(CliError::ReplayFailed(cert.kind()));
        }
    }
    Ok(())
}
