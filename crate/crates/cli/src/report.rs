//! Report rendering.
//!
//! The machine format is one record per line, `TAG key=value ...`. Windows are
//! element literals joined by `;` (`-` when empty), pattern values are joined
//! by `,`, rationals are exact and floats carry 12 decimals. Records follow the
//! order of the outcome, so equal outcomes give identical bytes.

use std::fmt::Write as _;

use semica_core::analysis::{Certificate, Consistency};
use semica_core::automaton::Pattern;
use semica_core::geometry::CrossCheck;
use semica_core::tiling::TilingViolation;
use semica_core::{Window, WindowSchedule};

use crate::literal::format_list;
use crate::run::{Item, Outcome};
use crate::spec::JobSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

fn win(w: &Window) -> String {
    if w.is_empty() {
        return "-".into();
    }
    w.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";")
}

fn values(p: &Pattern) -> String {
    p.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn schedule(s: WindowSchedule) -> &'static str {
    match s {
        WindowSchedule::Folner => "folner",
        WindowSchedule::Anchored => "anchored",
        WindowSchedule::Ball => "ball",
    }
}

fn consistency(c: Consistency) -> &'static str {
    match c {
        Consistency::Consistent => "consistent",
        Consistency::MyhillTension => "myhill_tension",
    }
}

pub fn emit_report(spec: &JobSpec, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Machine => machine(spec, outcome),
        Format::Human => human(spec, outcome),
    }
}

fn machine(spec: &JobSpec, outcome: &Outcome) -> String {
    let mut out = String::new();
    let o = &mut out;
    let family = spec.family.to_string().replace(' ', "_");
    let _ = write!(o, "JOB kind={} family={family} alphabet={}", spec.job.kind(), spec.alphabet);
    if let Some(ca) = &spec.automaton {
        let memory: Vec<String> = ca.memory().iter().map(|m| m.to_string()).collect();
        let rule: Vec<String> = ca.rule().iter().map(|b| b.to_string()).collect();
        let _ = write!(o, " memory={} rule={}", memory.join(";"), rule.join(","));
    }
    let _ = writeln!(o, " background={} budget={}", spec.background, spec.budget);
    for item in &outcome.items {
        match item {
            Item::Cert(c) => cert_records(o, c),
            Item::Regions { omega, k, report: r } => {
                let check = match &r.cross_check {
                    CrossCheck::Verified(f) => format!("verified formulas_hold={}", f.all_hold()),
                    CrossCheck::Skipped { non_cancellable } => {
                        format!("skipped non_cancellable={non_cancellable}")
                    }
                };
                let _ = writeln!(
                    o,
                    "REGIONS omega={} k={} interior={} adherence={} boundary={} boundary_star={} alpha={} alpha_star={} cross_check={check}",
                    win(omega),
                    win(k),
                    win(&r.interior),
                    win(&r.adherence),
                    win(&r.boundary),
                    win(&r.boundary_star),
                    r.alpha,
                    r.alpha_star
                );
            }
            Item::Folner(t) => {
                for s in &t.steps {
                    let _ = writeln!(
                        o,
                        "FOLNER n={} size={} max_ratio={} alpha={} alpha_star={}",
                        s.n, s.size, s.max_ratio, s.alpha, s.alpha_star
                    );
                }
                let first = t.first_within.map_or("none".to_string(), |n| n.to_string());
                let _ = writeln!(o, "FOLNER k={} epsilon={} first_within={first}", win(&t.shape), t.epsilon);
            }
            Item::NoFolner(s) => {
                let _ = writeln!(o, "FOLNER unavailable family={}", s.replace(' ', "_"));
            }
            Item::Tiling { tiling, check, density } => {
                let _ = write!(
                    o,
                    "TILING k={} arena_size={} tiles={} holds={}",
                    win(&tiling.shape),
                    tiling.arena.len(),
                    tiling.tiles.len(),
                    check.holds()
                );
                match &check.violation {
                    None => {}
                    Some(TilingViolation::Overlap { first, second, shared }) => {
                        let _ = write!(o, " overlap={first};{second} shared={shared}");
                    }
                    Some(TilingViolation::Uncovered { element }) => {
                        let _ = write!(o, " uncovered={element}");
                    }
                }
                o.push('\n');
                for (n, d) in density {
                    let _ = writeln!(
                        o,
                        "DENSITY n={n} window_size={} tiles_inside={} delta={} threshold={} passes={}",
                        d.window_size, d.tiles_inside, d.delta, d.threshold, d.passes
                    );
                }
            }
            Item::Example { name, summary } => {
                let _ = writeln!(o, "EXAMPLE name={name} summary={summary}");
            }
        }
    }
    if outcome.items.is_empty() {
        o.push_str("NONE\n");
    }
    if let Some(p) = &outcome.partial {
        let _ = writeln!(o, "PARTIAL reason={p}");
    }
    out
}

fn cert_records(o: &mut String, c: &Certificate) {
    let kind = c.kind();
    match c {
        Certificate::GoePattern(g) => {
            let _ = writeln!(
                o,
                "CERT {kind} window={} dependence={} missing={} image={}/{}",
                win(g.window()),
                win(&g.dependence),
                values(&g.missing),
                g.image_count,
                g.full_count
            );
        }
        Certificate::MutuallyErasablePair(p) => {
            let _ = writeln!(
                o,
                "CERT {kind} support={} background={} first={} second={} adherence={}",
                win(&p.support),
                p.background,
                values(&p.first),
                values(&p.second),
                win(&p.adherence)
            );
        }
        Certificate::SurjectiveUpTo(s) => {
            for r in &s.windows {
                let _ = writeln!(o, "CERT {kind} window={} count={}", win(&r.window), r.count);
            }
        }
        Certificate::PreInjectiveUpTo(p) => {
            for s in &p.supports {
                let _ = writeln!(o, "CERT {kind} background={} support={}", p.background, win(s));
            }
        }
        Certificate::EntropyTrace(t) => {
            for s in &t.steps {
                let _ = writeln!(
                    o,
                    "CERT {kind} source={} alphabet={} schedule={} n={} size={} count={} value={:.12} running_max={:.12}",
                    t.source,
                    t.alphabet,
                    schedule(t.schedule),
                    s.n,
                    s.window_size,
                    s.count,
                    s.value,
                    s.running_max
                );
            }
        }
        Certificate::AuditVerdict(v) => {
            let _ = writeln!(
                o,
                "CERT {kind} goe={} mep={} cancellative={} folner={} consistency={}",
                if v.goe.is_some() { "found" } else { "none" },
                if v.erasable.is_some() { "found" } else { "none" },
                v.cancellative,
                v.folner_available,
                consistency(v.consistency)
            );
        }
    }
}

fn human(spec: &JobSpec, outcome: &Outcome) -> String {
    let f = &spec.family;
    let list = |w: &Window| if w.is_empty() { "{}".to_string() } else { format!("{{{}}}", format_list(f, w)) };
    let mut out = String::new();
    let o = &mut out;
    let _ = writeln!(o, "job: {} on {} (alphabet {})", spec.job.kind(), f, spec.alphabet);
    if let Some(ca) = &spec.automaton {
        let _ = writeln!(o, "memory: {}", list(&ca.memory_window()));
    }
    for item in &outcome.items {
        o.push('\n');
        match item {
            Item::Cert(Certificate::GoePattern(g)) => {
                let _ = writeln!(o, "== Garden-of-Eden pattern ==");
                let _ = writeln!(o, "window      {}", list(g.window()));
                let _ = writeln!(o, "missing     {}", g.missing);
                let _ = writeln!(o, "depends on  {}", list(&g.dependence));
                let _ = writeln!(o, "image       {} of {} patterns", g.image_count, g.full_count);
            }
            Item::Cert(Certificate::MutuallyErasablePair(p)) => {
                let _ = writeln!(o, "== Mutually erasable pair ==");
                let _ = writeln!(o, "support     {} on background {}", list(&p.support), p.background);
                let _ = writeln!(o, "first       {}", p.first);
                let _ = writeln!(o, "second      {}", p.second);
                let _ = writeln!(o, "images may differ only on {}", list(&p.adherence));
            }
            Item::Cert(Certificate::SurjectiveUpTo(s)) => {
                let _ = writeln!(o, "== Full image on {} window(s) ==", s.windows.len());
                for r in &s.windows {
                    let _ = writeln!(o, "{:>8} patterns on {}", r.count, list(&r.window));
                }
            }
            Item::Cert(Certificate::PreInjectiveUpTo(p)) => {
                let _ = writeln!(o, "== Distinct images on {} support(s), background {} ==", p.supports.len(), p.background);
                for s in &p.supports {
                    let _ = writeln!(o, "  {}", list(s));
                }
            }
            Item::Cert(Certificate::EntropyTrace(t)) => {
                let _ = writeln!(o, "== Entropy ({} source, {} windows) ==", t.source, schedule(t.schedule));
                let _ = writeln!(o, "{:>4} {:>6} {:>40} {:>16} {:>16}", "n", "|F|", "count", "log(count)/|F|", "max so far");
                for s in &t.steps {
                    let _ = writeln!(
                        o,
                        "{:>4} {:>6} {:>40} {:>16.12} {:>16.12}",
                        s.n, s.window_size, s.count, s.value, s.running_max
                    );
                }
                let _ = writeln!(o, "log {} = {:.12}", t.alphabet, (t.alphabet as f64).ln());
            }
            Item::Cert(Certificate::AuditVerdict(v)) => {
                let _ = writeln!(o, "== Verdict ==");
                let _ = writeln!(
                    o,
                    "surjective        {}",
                    if v.goe.is_some() { "no (Garden-of-Eden pattern above)" } else { "not refuted" }
                );
                let _ = writeln!(
                    o,
                    "pre-injective     {}",
                    if v.erasable.is_some() { "no (erasable pair above)" } else { "not refuted" }
                );
                let _ = writeln!(o, "cancellative      {}", v.cancellative);
                let _ = writeln!(o, "Folner sequence   {}", v.folner_available);
                let _ = writeln!(o, "consistency       {}", consistency(v.consistency));
            }
            Item::Regions { omega, k, report: r } => {
                let _ = writeln!(o, "== Regions of {} for K = {} ==", list(omega), list(k));
                let _ = writeln!(o, "interior        {}", list(&r.interior));
                let _ = writeln!(o, "adherence       {}", list(&r.adherence));
                let _ = writeln!(o, "boundary        {}", list(&r.boundary));
                let _ = writeln!(o, "outer boundary  {}", list(&r.boundary_star));
                let _ = writeln!(o, "alpha = {}, alpha* = {}", r.alpha, r.alpha_star);
                match &r.cross_check {
                    CrossCheck::Verified(b) => {
                        let _ = writeln!(o, "preimage formulas {}", if b.all_hold() { "agree" } else { "DISAGREE" });
                    }
                    CrossCheck::Skipped { non_cancellable } => {
                        let _ = writeln!(o, "preimage formulas skipped: {non_cancellable} not left-cancellable");
                    }
                }
            }
            Item::Folner(t) => {
                let _ = writeln!(o, "== Folner windows for K = {} ==", list(&t.shape));
                let _ = writeln!(o, "{:>4} {:>8} {:>14} {:>14} {:>14}", "n", "|F|", "max |kF\\F|/|F|", "alpha", "alpha*");
                for s in &t.steps {
                    let _ = writeln!(
                        o,
                        "{:>4} {:>8} {:>14} {:>14} {:>14}",
                        s.n,
                        s.size,
                        s.max_ratio.to_string(),
                        s.alpha.to_string(),
                        s.alpha_star.to_string()
                    );
                }
                match t.first_within {
                    Some(n) => {
                        let _ = writeln!(o, "ratio <= {} from n = {n}", t.epsilon);
                    }
                    None => {
                        let _ = writeln!(o, "ratio never <= {}", t.epsilon);
                    }
                }
            }
            Item::NoFolner(s) => {
                let _ = writeln!(o, "{s} has no Folner sequence");
            }
            Item::Tiling { tiling, check, density } => {
                let _ = writeln!(o, "== Tiling by K = {} ==", list(&tiling.shape));
                let _ = writeln!(o, "arena of {} elements, {} tiles", tiling.arena.len(), tiling.tiles.len());
                match &check.violation {
                    None => {
                        let _ = writeln!(o, "disjoint and maximal in the arena");
                    }
                    Some(v) => {
                        let _ = writeln!(o, "INVALID: {v:?}");
                    }
                }
                for (n, d) in density {
                    let _ = writeln!(
                        o,
                        "n = {n:>4}: {} tiles inside |F| = {}, need {} ({})",
                        d.tiles_inside,
                        d.window_size,
                        d.threshold,
                        if d.passes { "ok" } else { "short" }
                    );
                }
            }
            Item::Example { name, summary } => {
                let _ = writeln!(o, "{name:<26} {summary}");
            }
        }
    }
    if outcome.items.is_empty() {
        o.push_str("\nnothing to report\n");
    }
    if let Some(p) = &outcome.partial {
        let _ = writeln!(o, "\nstopped early: {p}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example;
    use crate::run::run_job;

    fn machine_for(name: &str) -> String {
        let spec = example(name).unwrap().spec();
        emit_report(&spec, &run_job(&spec).unwrap(), Format::Machine)
    }

    #[test]
    fn bicyclic_goe_record() {
        let r = machine_for("bicyclic");
        assert!(
            r.lines().any(|l| l == "CERT goe_pattern window=(0,0);(1,1) dependence=(0,1) missing=0,1 image=2/4"),
            "{r}"
        );
    }

    #[test]
    fn empty_outcome_is_none() {
        let spec = example("identity").unwrap().spec();
        let r = emit_report(&spec, &Outcome { items: vec![], partial: None }, Format::Machine);
        assert_eq!(r.lines().last(), Some("NONE"));
    }

    #[test]
    fn entropy_records_carry_exact_counts() {
        let r = machine_for("z-and-entropy");
        let counts: Vec<&str> = r
            .lines()
            .filter(|l| l.starts_with("CERT entropy_trace"))
            .map(|l| l.split(' ').find(|f| f.starts_with("count=")).unwrap())
            .collect();
        assert_eq!(counts.len(), 12);
        assert_eq!(&counts[..3], &["count=2", "count=4", "count=7"]);
    }

    #[test]
    fn human_report_mentions_sections() {
        let spec = example("z-and").unwrap().spec();
        let r = emit_report(&spec, &run_job(&spec).unwrap(), Format::Human);
        assert!(r.contains("== Garden-of-Eden pattern =="));
        assert!(r.contains("== Mutually erasable pair =="));
        assert!(r.contains("== Verdict =="));
    }
}
