//! The job spec format.
//!
//! ```text
//! # comments run to the end of the line
//! [semigroup]
//! family = bicyclic          # nat | nat d | int d | free k | bicyclic | finite
//! [alphabet]
//! size = 2
//! [automaton]
//! memory = (0,1)
//! 0 -> 0                     # one rule line per memory tuple
//! 1 -> 1
//! [job]
//! kind = audit               # regions folner tiling goe mep entropy audit examples
//! window = (0,0)             # repeatable; or `windows = folner 1..8`
//! window = (0,0) (1,1)
//! ```
//!
//! A finite family takes its table from `row = ...` lines (one per element)
//! or from `table-file = path`. See [`crate::literal`] for element syntax.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use semica_core::analysis::DEFAULT_BUDGET;
use semica_core::automaton::{CellularAutomaton, Symbol, MAX_RULE_ENTRIES};
use semica_core::semigroup::CayleyTable;
use semica_core::{Element, Family, Semigroup, Window, WindowSchedule};

use crate::error::{CliError, Result};
use crate::literal::{format_list, parse_list, parse_window};

/// Which windows a search walks through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowPlan {
    /// Windows `first..=last` of a schedule.
    Schedule {
        schedule: WindowSchedule,
        first: usize,
        last: usize,
    },
    Explicit(Vec<Window>),
}

impl WindowPlan {
    pub fn windows(&self, sg: &Semigroup) -> semica_core::Result<Vec<Window>> {
        match self {
            WindowPlan::Schedule {
                schedule,
                first,
                last,
            } => (*first..=*last).map(|n| sg.scheduled_window(*schedule, n)).collect(),
            WindowPlan::Explicit(ws) => Ok(ws.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Image,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Regions {
        omega: Window,
        k: Window,
    },
    /// `k = None` uses the family's default generators.
    Folner {
        k: Option<Window>,
        n_max: usize,
        epsilon: Ratio<u64>,
    },
    Tiling {
        shape: Window,
        arena: Window,
        density: Option<WindowPlan>,
    },
    Goe {
        windows: WindowPlan,
    },
    Mep {
        windows: WindowPlan,
    },
    Entropy {
        source: Source,
        windows: WindowPlan,
    },
    Audit {
        windows: WindowPlan,
    },
    Examples,
}

impl Job {
    pub fn kind(&self) -> &'static str {
        match self {
            Job::Regions { .. } => "regions",
            Job::Folner { .. } => "folner",
            Job::Tiling { .. } => "tiling",
            Job::Goe { .. } => "goe",
            Job::Mep { .. } => "mep",
            Job::Entropy { .. } => "entropy",
            Job::Audit { .. } => "audit",
            Job::Examples => "examples",
        }
    }

    fn needs_automaton(&self) -> bool {
        matches!(
            self,
            Job::Goe { .. }
                | Job::Mep { .. }
                | Job::Audit { .. }
                | Job::Entropy {
                    source: Source::Image,
                    ..
                }
        )
    }

    fn plan_mut(&mut self) -> Option<&mut WindowPlan> {
        match self {
            Job::Goe { windows } | Job::Mep { windows } | Job::Audit { windows } | Job::Entropy { windows, .. } => {
                Some(windows)
            }
            Job::Tiling { density, .. } => density.as_mut(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub family: Family,
    pub alphabet: usize,
    pub automaton: Option<CellularAutomaton>,
    pub job: Job,
    pub background: Symbol,
    pub budget: u64,
    pub workers: usize,
    pub output: Option<PathBuf>,
}

/// Command-line adjustments applied after parsing.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub budget: Option<u64>,
    pub windows: Option<(usize, usize)>,
    pub background: Option<Symbol>,
    pub workers: Option<usize>,
}

impl JobSpec {
    pub fn semigroup(&self) -> Semigroup {
        Semigroup::new(self.family.clone()).expect("family validated at parse time")
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if let Some(b) = o.budget {
            self.budget = b;
        }
        if let Some(w) = o.workers {
            self.workers = w.max(1);
        }
        if let Some(b) = o.background {
            if b as usize >= self.alphabet {
                return Err(CliError::Usage(format!(
                    "background {b} outside alphabet of size {}",
                    self.alphabet
                )));
            }
            self.background = b;
        }
        if let Some((lo, hi)) = o.windows {
            if lo > hi {
                return Err(CliError::Usage(format!("empty window range {lo}..{hi}")));
            }
            match self.job.plan_mut() {
                Some(WindowPlan::Schedule { first, last, .. }) => {
                    *first = lo;
                    *last = hi;
                }
                Some(WindowPlan::Explicit(ws)) => {
                    if lo == 0 || hi > ws.len() {
                        return Err(CliError::Usage(format!(
                            "window range {lo}..{hi} outside the {} listed windows",
                            ws.len()
                        )));
                    }
                    *ws = ws[lo - 1..hi].to_vec();
                }
                None => {
                    return Err(CliError::Usage(format!(
                        "job kind `{}` takes no window range",
                        self.job.kind()
                    )))
                }
            }
        }
        Ok(())
    }
}

/// `a..b`, inclusive.
pub fn parse_range(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.trim().split_once("..")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

struct Entry {
    line: usize,
    key: String,
    value: String,
}

#[derive(Default)]
struct Section {
    line: usize,
    entries: Vec<Entry>,
    rules: Vec<(usize, String, String)>,
}

impl Section {
    fn one(&self, key: &str) -> Result<Option<&Entry>> {
        let mut found = self.entries.iter().filter(|e| e.key == key);
        let first = found.next();
        if let Some(dup) = found.next() {
            return Err(CliError::spec(dup.line, key, "given more than once"));
        }
        Ok(first)
    }

    fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.key == key)
    }

    fn required(&self, key: &str, section: &str) -> Result<&Entry> {
        self.one(key)?
            .ok_or_else(|| CliError::spec(self.line, key, format!("missing in [{section}]")))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for e in &self.entries {
            if !allowed.contains(&e.key.as_str()) {
                return Err(CliError::spec(e.line, &e.key, "unknown key"));
            }
        }
        Ok(())
    }
}

fn number<T: std::str::FromStr>(e: &Entry, what: &str) -> Result<T> {
    e.value
        .parse()
        .map_err(|_| CliError::spec(e.line, &e.key, format!("`{}` is not {what}", e.value)))
}

/// Parses a spec; relative `table-file` paths resolve against the working directory.
pub fn parse_spec(text: &str) -> Result<JobSpec> {
    parse_spec_in(text, Path::new("."))
}

/// Parses a spec whose relative paths resolve against `base`.
pub fn parse_spec_in(text: &str, base: &Path) -> Result<JobSpec> {
    let mut sections: HashMap<String, Section> = HashMap::new();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[').and_then(|c| c.strip_suffix(']')) {
            let name = name.trim().to_string();
            if !["semigroup", "alphabet", "automaton", "job"].contains(&name.as_str()) {
                return Err(CliError::spec(line, &name, "unknown section"));
            }
            if sections.contains_key(&name) {
                return Err(CliError::spec(line, &name, "section given more than once"));
            }
            sections.insert(
                name.clone(),
                Section {
                    line,
                    ..Section::default()
                },
            );
            current = Some(name);
            continue;
        }
        let Some(name) = &current else {
            return Err(CliError::spec(line, "", "text before the first section"));
        };
        let section = sections.get_mut(name).expect("section registered");
        if let Some((lhs, rhs)) = content.split_once("->") {
            if name != "automaton" {
                return Err(CliError::spec(line, "rule", "rule lines belong in [automaton]"));
            }
            section.rules.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
        } else if let Some((key, value)) = content.split_once('=') {
            section.entries.push(Entry {
                line,
                key: key.trim().to_string(),
                value: value.trim().to_string(),
            });
        } else {
            return Err(CliError::spec(line, content, "expected `key = value`"));
        }
    }

    let empty = Section::default();
    let semigroup = sections
        .get("semigroup")
        .ok_or_else(|| CliError::spec(1, "semigroup", "missing [semigroup] section"))?;
    let family = parse_family(semigroup, base)?;

    let alphabet_sec = sections.get("alphabet").unwrap_or(&empty);
    alphabet_sec.check_keys(&["size"])?;
    let alphabet = match alphabet_sec.one("size")? {
        Some(e) => {
            let q: usize = number(e, "an alphabet size")?;
            if !(1..=256).contains(&q) {
                return Err(CliError::spec(e.line, "size", "alphabet size must be between 1 and 256"));
            }
            q
        }
        None => 2,
    };

    let automaton = match sections.get("automaton") {
        Some(sec) => Some(parse_automaton(sec, &family, alphabet)?),
        None => None,
    };

    let job_sec = sections
        .get("job")
        .ok_or_else(|| CliError::spec(1, "job", "missing [job] section"))?;
    let (job, settings) = parse_job(job_sec, &family)?;
    if job.needs_automaton() && automaton.is_none() {
        return Err(CliError::spec(
            job_sec.line,
            "kind",
            format!("job kind `{}` needs an [automaton] section", job.kind()),
        ));
    }
    if let Some(e) = &settings.background_line {
        if settings.background as usize >= alphabet {
            return Err(CliError::spec(*e, "background", "outside the alphabet"));
        }
    }
    Ok(JobSpec {
        family,
        alphabet,
        automaton,
        job,
        background: settings.background,
        budget: settings.budget,
        workers: settings.workers,
        output: settings.output,
    })
}

fn parse_family(sec: &Section, base: &Path) -> Result<Family> {
    sec.check_keys(&["family", "row", "table-file"])?;
    let e = sec.required("family", "semigroup")?;
    let words: Vec<&str> = e.value.split_whitespace().collect();
    let dim = |i: usize| -> Result<usize> {
        words
            .get(i)
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| CliError::spec(e.line, "family", format!("`{}` needs a size", words[0])))
    };
    let family = match words.first().copied() {
        Some("nat") if words.len() == 1 => Family::Nat,
        Some("nat") => Family::NatPow(dim(1)?),
        Some("int") => Family::IntPow(dim(1)?),
        Some("free") => Family::FreeMonoid(dim(1)?),
        Some("bicyclic") => Family::Bicyclic,
        Some("finite") => Family::Finite(parse_table(sec, base, words.get(1).copied(), e.line)?),
        _ => return Err(CliError::spec(e.line, "family", format!("unknown family `{}`", e.value))),
    };
    if !matches!(family, Family::Finite(_)) {
        if let Some(r) = sec.all("row").chain(sec.all("table-file")).next() {
            return Err(CliError::spec(r.line, &r.key, "only a finite family takes a table"));
        }
    }
    if words.len() > 2 || (words.len() == 2 && matches!(family, Family::Bicyclic)) {
        return Err(CliError::spec(e.line, "family", format!("unexpected `{}`", e.value)));
    }
    Semigroup::new(family.clone()).map_err(|err| CliError::spec(e.line, "family", err.to_string()))?;
    Ok(family)
}

fn parse_table(sec: &Section, base: &Path, declared: Option<&str>, line: usize) -> Result<CayleyTable> {
    let rows: Vec<&Entry> = sec.all("row").collect();
    let table = match (sec.one("table-file")?, rows.is_empty()) {
        (Some(f), true) => {
            let path = base.join(&f.value);
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
            CayleyTable::parse(&text).map_err(|err| CliError::spec(f.line, "table-file", err.to_string()))?
        }
        (None, false) => {
            let mut parsed = Vec::new();
            for r in &rows {
                let row: Vec<usize> = r
                    .value
                    .split_whitespace()
                    .map(|x| x.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CliError::spec(r.line, "row", "rows hold element indices"))?;
                parsed.push(row);
            }
            CayleyTable::from_rows(parsed)
                .map_err(|err| CliError::spec(rows[0].line, "row", err.to_string()))?
        }
        (Some(f), false) => return Err(CliError::spec(f.line, "table-file", "give rows or a table file, not both")),
        (None, true) => return Err(CliError::spec(line, "row", "a finite family needs `row` lines or `table-file`")),
    };
    if let Some(n) = declared {
        if n.parse::<usize>().ok() != Some(table.size()) {
            return Err(CliError::spec(line, "family", format!("declared size {n}, table has {}", table.size())));
        }
    }
    Ok(table)
}

fn parse_automaton(sec: &Section, family: &Family, q: usize) -> Result<CellularAutomaton> {
    sec.check_keys(&["memory"])?;
    let m = sec.required("memory", "automaton")?;
    let memory = parse_list(family, &m.value).map_err(|err| CliError::spec(m.line, "memory", err))?;
    if memory.is_empty() {
        return Err(CliError::spec(m.line, "memory", "memory set must be non-empty"));
    }
    for (i, x) in memory.iter().enumerate() {
        if memory[..i].contains(x) {
            return Err(CliError::spec(m.line, "memory", format!("{x} listed twice")));
        }
    }
    let entries = (q as u128).pow(memory.len() as u32);
    if entries > MAX_RULE_ENTRIES as u128 {
        return Err(CliError::spec(m.line, "memory", format!("rule table would need {entries} entries")));
    }
    let entries = entries as usize;
    let symbol = |line: usize, t: &str| -> Result<Symbol> {
        match t.parse::<usize>() {
            Ok(v) if v < q => Ok(v as Symbol),
            _ => Err(CliError::spec(line, "rule", format!("`{t}` is not a symbol below {q}"))),
        }
    };
    let mut table: Vec<Option<Symbol>> = vec![None; entries];
    for (line, lhs, rhs) in &sec.rules {
        let tuple: Vec<Symbol> = lhs.split_whitespace().map(|t| symbol(*line, t)).collect::<Result<_>>()?;
        if tuple.len() != memory.len() {
            return Err(CliError::spec(
                *line,
                "rule",
                format!("expected {} input symbols, found {}", memory.len(), tuple.len()),
            ));
        }
        let out = symbol(*line, rhs)?;
        let idx = tuple.iter().fold(0usize, |acc, &v| acc * q + v as usize);
        if table[idx].replace(out).is_some() {
            return Err(CliError::spec(*line, "rule", format!("tuple `{lhs}` given twice")));
        }
    }
    if let Some(missing) = table.iter().position(Option::is_none) {
        let mut tuple = vec![0usize; memory.len()];
        let mut i = missing;
        for slot in tuple.iter_mut().rev() {
            *slot = i % q;
            i /= q;
        }
        let shown: Vec<String> = tuple.iter().map(|v| v.to_string()).collect();
        return Err(CliError::spec(
            sec.line,
            "rule",
            format!("rule table is not total: no line for `{}`", shown.join(" ")),
        ));
    }
    let rule = table.into_iter().map(|v| v.expect("checked total")).collect();
    CellularAutomaton::new(q, memory, rule).map_err(|err| CliError::spec(m.line, "memory", err.to_string()))
}

struct Settings {
    background: Symbol,
    background_line: Option<usize>,
    budget: u64,
    workers: usize,
    output: Option<PathBuf>,
}

fn parse_plan(sec: &Section, family: &Family, required: bool) -> Result<Option<WindowPlan>> {
    let explicit: Vec<&Entry> = sec.all("window").collect();
    match (sec.one("windows")?, explicit.is_empty()) {
        (Some(e), true) => {
            let (name, range) = e
                .value
                .split_once(char::is_whitespace)
                .ok_or_else(|| CliError::spec(e.line, "windows", "expected `<schedule> a..b`"))?;
            let schedule = match name {
                "folner" => WindowSchedule::Folner,
                "anchored" => WindowSchedule::Anchored,
                "ball" => WindowSchedule::Ball,
                _ => return Err(CliError::spec(e.line, "windows", format!("unknown schedule `{name}`"))),
            };
            let (first, last) = parse_range(range)
                .filter(|(a, b)| a <= b)
                .ok_or_else(|| CliError::spec(e.line, "windows", format!("`{range}` is not a range a..b")))?;
            Ok(Some(WindowPlan::Schedule {
                schedule,
                first,
                last,
            }))
        }
        (None, false) => {
            let mut ws = Vec::new();
            for e in explicit {
                let w = parse_window(family, &e.value).map_err(|err| CliError::spec(e.line, "window", err))?;
                if w.is_empty() {
                    return Err(CliError::spec(e.line, "window", "window must be non-empty"));
                }
                ws.push(w);
            }
            Ok(Some(WindowPlan::Explicit(ws)))
        }
        (Some(e), false) => Err(CliError::spec(e.line, "windows", "give `windows` or `window` lines, not both")),
        (None, true) if required => Err(CliError::spec(sec.line, "windows", "missing in [job]")),
        (None, true) => Ok(None),
    }
}

fn parse_job(sec: &Section, family: &Family) -> Result<(Job, Settings)> {
    let kind = sec.required("kind", "job")?;
    let window_of = |key: &str| -> Result<Window> {
        let e = sec.required(key, "job")?;
        let w = parse_window(family, &e.value).map_err(|err| CliError::spec(e.line, key, err))?;
        if w.is_empty() {
            return Err(CliError::spec(e.line, key, "must be non-empty"));
        }
        Ok(w)
    };
    let common = ["kind", "background", "budget", "workers", "output"];
    let allow = |extra: &[&str]| sec.check_keys(&[&common[..], extra].concat());
    let job = match kind.value.as_str() {
        "regions" => {
            allow(&["omega", "k"])?;
            Job::Regions {
                omega: window_of("omega")?,
                k: window_of("k")?,
            }
        }
        "folner" => {
            allow(&["k", "n-max", "epsilon"])?;
            let n_max: usize = number(sec.required("n-max", "job")?, "a window count")?;
            let epsilon = match sec.one("epsilon")? {
                Some(e) => parse_ratio(&e.value)
                    .ok_or_else(|| CliError::spec(e.line, "epsilon", format!("`{}` is not a fraction", e.value)))?,
                None => Ratio::new(1, 20),
            };
            let k = match sec.one("k")? {
                Some(_) => Some(window_of("k")?),
                None => None,
            };
            Job::Folner { k, n_max, epsilon }
        }
        "tiling" => {
            allow(&["k", "arena", "windows", "window"])?;
            Job::Tiling {
                shape: window_of("k")?,
                arena: window_of("arena")?,
                density: parse_plan(sec, family, false)?,
            }
        }
        "goe" | "mep" | "audit" => {
            allow(&["windows", "window"])?;
            let windows = parse_plan(sec, family, true)?.expect("required");
            match kind.value.as_str() {
                "goe" => Job::Goe { windows },
                "mep" => Job::Mep { windows },
                _ => Job::Audit { windows },
            }
        }
        "entropy" => {
            allow(&["windows", "source"])?;
            let source = match sec.one("source")? {
                None => Source::Image,
                Some(e) => match e.value.as_str() {
                    "image" => Source::Image,
                    "full" => Source::Full,
                    other => return Err(CliError::spec(e.line, "source", format!("`{other}` is not image or full"))),
                },
            };
            let windows = parse_plan(sec, family, true)?.expect("required");
            Job::Entropy { source, windows }
        }
        "examples" => {
            allow(&[])?;
            Job::Examples
        }
        other => return Err(CliError::spec(kind.line, "kind", format!("unknown job kind `{other}`"))),
    };
    let background = sec.one("background")?;
    let settings = Settings {
        background: background.map(|e| number(e, "a symbol")).transpose()?.unwrap_or(0),
        background_line: background.map(|e| e.line),
        budget: sec.one("budget")?.map(|e| number(e, "a budget")).transpose()?.unwrap_or(DEFAULT_BUDGET),
        workers: sec
            .one("workers")?
            .map(|e| number::<usize>(e, "a worker count"))
            .transpose()?
            .unwrap_or(1)
            .max(1),
        output: sec.one("output")?.map(|e| PathBuf::from(&e.value)),
    };
    Ok((job, settings))
}

/// `a/b` or an integer.
pub fn parse_ratio(text: &str) -> Option<Ratio<u64>> {
    match text.split_once('/') {
        Some((a, b)) => {
            let n: u64 = a.trim().parse().ok()?;
            let d: u64 = b.trim().parse().ok()?;
            (d != 0).then(|| Ratio::new(n, d))
        }
        None => text.trim().parse().ok().map(Ratio::from_integer),
    }
}

fn schedule_name(s: WindowSchedule) -> &'static str {
    match s {
        WindowSchedule::Folner => "folner",
        WindowSchedule::Anchored => "anchored",
        WindowSchedule::Ball => "ball",
    }
}

fn emit_plan(out: &mut String, family: &Family, plan: &WindowPlan) {
    match plan {
        WindowPlan::Schedule {
            schedule,
            first,
            last,
        } => {
            let _ = writeln!(out, "windows = {} {first}..{last}", schedule_name(*schedule));
        }
        WindowPlan::Explicit(ws) => {
            for w in ws {
                let _ = writeln!(out, "window = {}", format_list(family, w));
            }
        }
    }
}

/// Canonical text for a spec; `parse_spec(&emit_spec(s))` reproduces `s`.
pub fn emit_spec(spec: &JobSpec) -> String {
    let f = &spec.family;
    let mut out = String::new();
    out.push_str("[semigroup]\n");
    match f {
        Family::Finite(t) => {
            let _ = writeln!(out, "family = finite {}", t.size());
            for row in t.rows() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "row = {}", cells.join(" "));
            }
        }
        _ => {
            let _ = writeln!(out, "family = {f}");
        }
    }
    let _ = writeln!(out, "\n[alphabet]\nsize = {}", spec.alphabet);
    if let Some(ca) = &spec.automaton {
        let _ = writeln!(out, "\n[automaton]\nmemory = {}", format_list_plain(ca.memory()));
        for (i, b) in ca.rule().iter().enumerate() {
            let tuple: Vec<String> = ca.tuple(i).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{} -> {b}", tuple.join(" "));
        }
    }
    let _ = writeln!(out, "\n[job]\nkind = {}", spec.job.kind());
    match &spec.job {
        Job::Regions { omega, k } => {
            let _ = writeln!(out, "omega = {}\nk = {}", format_list(f, omega), format_list(f, k));
        }
        Job::Folner { k, n_max, epsilon } => {
            if let Some(k) = k {
                let _ = writeln!(out, "k = {}", format_list(f, k));
            }
            let _ = writeln!(out, "n-max = {n_max}\nepsilon = {epsilon}");
        }
        Job::Tiling { shape, arena, density } => {
            let _ = writeln!(out, "k = {}\narena = {}", format_list(f, shape), format_list(f, arena));
            if let Some(plan) = density {
                emit_plan(&mut out, f, plan);
            }
        }
        Job::Goe { windows } | Job::Mep { windows } | Job::Audit { windows } => emit_plan(&mut out, f, windows),
        Job::Entropy { source, windows } => {
            let _ = writeln!(out, "source = {}", if *source == Source::Full { "full" } else { "image" });
            emit_plan(&mut out, f, windows);
        }
        Job::Examples => {}
    }
    let _ = writeln!(out, "background = {}\nbudget = {}", spec.background, spec.budget);
    if spec.workers != 1 {
        let _ = writeln!(out, "workers = {}", spec.workers);
    }
    if let Some(p) = &spec.output {
        let _ = writeln!(out, "output = {}", p.display());
    }
    out
}

/// Memory sets keep their declared order, so no range compression.
fn format_list_plain(elements: &[Element]) -> String {
    elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}
