//! Running a classification and serializing it as JSON, an aligned text
//! table or one-line ASCII diagrams.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{all_selectors, normalize_selector, RootSystem};
use crate::classifier::{self, Mode, PolytopeRecord, Violation};
use crate::rational::pretty;
use crate::{Error, Q};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeSel {
    Genuine,
    Hamiltonian,
    Both,
}

impl ModeSel {
    fn admits(self, sys: &RootSystem) -> bool {
        match self {
            ModeSel::Genuine => sys.is_affine(),
            ModeSel::Hamiltonian => !sys.is_affine(),
            ModeSel::Both => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    AsciiDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// One system, e.g. `D5~1`.
    System(String),
    /// Every system in the table whose rank is at most the bound.
    All { max_rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportConfig {
    pub target: Target,
    pub mode: ModeSel,
    pub format: Format,
    /// Keep one record per automorphism orbit.
    pub dedupe: bool,
    /// Run the invariant checks and report violations.
    pub check: bool,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl ReportConfig {
    pub fn new(target: Target) -> Self {
        ReportConfig {
            target,
            mode: ModeSel::Both,
            format: Format::Json,
            dedupe: false,
            check: false,
            output: None,
        }
    }

    /// The systems to classify, in report order.
    pub fn systems(&self) -> Result<Vec<RootSystem>, Error> {
        let mut out = match &self.target {
            Target::System(s) => {
                let sys = RootSystem::load(s)?;
                if !self.mode.admits(&sys) {
                    let m = if sys.is_affine() {
                        "hamiltonian"
                    } else {
                        "genuine"
                    };
                    return Err(Error::BadSelector(format!(
                        "{s} (mode {m} needs a {} system)",
                        if sys.is_affine() { "finite" } else { "affine" }
                    )));
                }
                vec![sys]
            }
            Target::All { max_rank } => {
                if *max_rank < 1 {
                    return Err(Error::BadSelector(format!("all:{max_rank}")));
                }
                all_selectors()
                    .iter()
                    .map(|s| RootSystem::load(s))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .filter(|s| s.rank() <= *max_rank && self.mode.admits(s))
                    .collect()
            }
        };
        out.sort_by_key(system_order);
        Ok(out)
    }

    fn selector(&self) -> String {
        match &self.target {
            Target::System(s) => normalize_selector(s).unwrap_or_else(|_| s.clone()),
            Target::All { max_rank } => format!("all:{max_rank}"),
        }
    }
}

/// Sort key: family, the rank in the name, then the twist (finite first).
fn system_order(sys: &RootSystem) -> (char, usize, u8) {
    let id = sys.id();
    let fam = id.chars().next().unwrap_or('?');
    let (name, twist) = match id.split_once('~') {
        Some((n, t)) => (n, t.parse().unwrap_or(0)),
        None => (id, 0),
    };
    (fam, name[1..].parse().unwrap_or(0), twist)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    pub system: String,
    pub mode: Mode,
    pub twisted: bool,
    /// Present when the system has no published table to compare against.
    pub ground_truth: Option<String>,
    pub orbits: usize,
    pub records: Vec<PolytopeRecord>,
    /// `None` when checks were not requested.
    pub violations: Option<Vec<Violation>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub selector: String,
    pub mode: ModeSel,
    pub dedupe: bool,
    pub systems: Vec<SystemReport>,
}

impl Report {
    pub fn violation_count(&self) -> usize {
        self.systems
            .iter()
            .map(|s| s.violations.as_ref().map_or(0, Vec::len))
            .sum()
    }
}

fn is_twisted(sys: &RootSystem) -> bool {
    matches!(sys.id().split_once('~'), Some((_, t)) if t != "1")
}

/// Classifies the configured systems.
pub fn build(cfg: &ReportConfig) -> Result<Report, Error> {
    let mut systems = Vec::new();
    for sys in cfg.systems()? {
        let cl = classifier::classify(&sys)?;
        let mode = if sys.is_affine() {
            Mode::Genuine
        } else {
            Mode::Hamiltonian
        };
        let violations = cfg
            .check
            .then(|| classifier::check(&sys, mode, &cl.records));
        let orbits = cl.canonical().count();
        let mut records: Vec<PolytopeRecord> = if cfg.dedupe {
            cl.canonical().cloned().collect()
        } else {
            cl.records
        };
        sort_records(&mut records);
        let twisted = is_twisted(&sys);
        systems.push(SystemReport {
            system: sys.id().to_string(),
            mode,
            twisted,
            ground_truth: twisted.then(|| "no in-paper ground truth".to_string()),
            orbits,
            records,
            violations,
        });
    }
    Ok(Report {
        tool: "rankone".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        selector: cfg.selector(),
        mode: cfg.mode,
        dedupe: cfg.dedupe,
        systems,
    })
}

/// Orders records by kind, then by their JSON serialization.
pub fn sort_records(records: &mut [PolytopeRecord]) {
    records.sort_by_cached_key(|r| (r.kind, serde_json::to_string(r).unwrap_or_default()));
}

pub fn to_json(report: &Report) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Report, Error> {
    Ok(serde_json::from_str(s)?)
}

/// A weight as a sum of simple roots, e.g. `1/2a1+a3`.
pub fn weight_string(labels: &[usize], w: &[Q]) -> String {
    let mut out = String::new();
    for (&l, c) in labels.iter().zip(w) {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let a = c.abs();
        let coef = if a == Q::from_integer(1) {
            String::new()
        } else {
            pretty(&a)
        };
        let _ = write!(out, "{sign}{coef}a{l}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn face_string(sys: &RootSystem, s: &[usize]) -> String {
    let missing: Vec<String> = sys
        .labels()
        .iter()
        .filter(|l| !s.contains(l))
        .map(|l| l.to_string())
        .collect();
    format!("S\\{{{}}}", missing.join(","))
}

const TABLE_HEADER: [&str; 11] = [
    "kind",
    "S(X1)",
    "omega",
    "model 1",
    "S(X2)",
    "far weight",
    "model 2",
    "c",
    "t",
    "N",
    "orbit",
];

/// One table row per record, in the column order of [`TABLE_HEADER`].
pub fn table_row(sys: &RootSystem, r: &PolytopeRecord) -> Vec<String> {
    let centers = |v: &[Q]| v.iter().map(pretty).collect::<Vec<_>>().join(",");
    let n = if r.model1.center.is_empty() && r.model2.center.is_empty() {
        "-".to_string()
    } else {
        format!(
            "{};{}",
            centers(&r.model1.center),
            centers(&r.model2.center)
        )
    };
    vec![
        r.kind.to_string(),
        face_string(sys, &r.s1),
        weight_string(sys.labels(), &r.omega),
        format!("{} {}", r.model1.designation, r.model1.triple),
        face_string(sys, &r.s2),
        weight_string(sys.labels(), &r.model2.weight),
        format!("{} {}", r.model2.designation, r.model2.triple),
        pretty(&r.c),
        r.t.map(|t| pretty(&t)).unwrap_or_else(|| "-".into()),
        n,
        r.orbit_size.to_string(),
    ]
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = width[c]))
            .collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

pub fn to_table(report: &Report) -> Result<String, Error> {
    let mut out = String::new();
    for sr in &report.systems {
        let sys = RootSystem::load(&sr.system)?;
        let _ = writeln!(
            out,
            "# {} {} ({} records, {} orbits){}",
            sr.system,
            if sr.mode == Mode::Genuine {
                "genuine"
            } else {
                "hamiltonian"
            },
            sr.records.len(),
            sr.orbits,
            sr.ground_truth
                .as_ref()
                .map(|g| format!(" [{g}]"))
                .unwrap_or_default()
        );
        let mut rows = vec![TABLE_HEADER
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        rows.extend(sr.records.iter().map(|r| table_row(&sys, r)));
        out.push_str(&align(&rows));
        write_violations(&mut out, sr);
        out.push('\n');
    }
    Ok(out)
}

fn write_violations(out: &mut String, sr: &SystemReport) {
    for v in sr.violations.iter().flatten() {
        let at = v.record.map(|i| format!(" record {i}")).unwrap_or_default();
        let _ = writeln!(out, "violation {}{at}: {}", v.system, v.message);
    }
}

fn edge_string(sys: &RootSystem, i: usize, j: usize) -> String {
    let (a, b) = (sys.a(i, j), sys.a(j, i));
    let (li, lj) = (sys.label(i), sys.label(j));
    // a(i,j) = <alpha_j, alpha_i^vee>; |a(i,j)| > 1 means alpha_i is shorter
    match (-a, -b) {
        (1, 1) => format!("{li}-{lj}"),
        (2, 2) => format!("{li}<=>{lj}"),
        (m, 1) => format!("{li}<{m}-{lj}"),
        (1, m) => format!("{li}-{m}>{lj}"),
        (m, r) => format!("{li}({m},{r}){lj}"),
    }
}

/// One-line diagram of a record.
///
/// Node markers: `^` the distinguished node of an inhomogeneous model, `*` a
/// node of a homogeneous model's support where the weight pairs nonzero.
/// Nodes missing at an end are listed after the designation.
pub fn emit_diagram(sys: &RootSystem, r: &PolytopeRecord) -> String {
    let mut nodes = Vec::new();
    for (pos, &l) in sys.labels().iter().enumerate() {
        let mut mark = String::new();
        for (m, w) in [(&r.model1, &r.omega), (&r.model2, &r.model2.weight)] {
            if m.homogeneous {
                if m.support.contains(&l) && !sys.pairing(w, pos).is_zero() && !mark.contains('*') {
                    mark.push('*');
                }
            } else if m.node == Some(l) && !mark.contains('^') {
                mark.push('^');
            }
        }
        nodes.push(format!("{l}{mark}"));
    }
    let mut edges = Vec::new();
    for i in 0..sys.len() {
        for j in i + 1..sys.len() {
            if sys.adjacent(i, j) {
                edges.push(edge_string(sys, i, j));
            }
        }
    }
    let factor = if r.factor == Q::from_integer(1) {
        String::new()
    } else {
        format!(" [{}]", pretty(&r.factor))
    };
    format!(
        "{}: {} ({}) {} -> {}{factor}  omega={}",
        r.system,
        nodes.join(" "),
        edges.join(" "),
        r.model1.designation,
        r.model2.designation,
        weight_string(sys.labels(), &r.omega)
    )
}

pub fn to_diagrams(report: &Report) -> Result<String, Error> {
    let mut out = String::new();
    for sr in &report.systems {
        let sys = RootSystem::load(&sr.system)?;
        for r in &sr.records {
            out.push_str(&emit_diagram(&sys, r));
            out.push('\n');
        }
        write_violations(&mut out, sr);
    }
    Ok(out)
}

pub fn render(report: &Report, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => to_json(report),
        Format::Table => to_table(report),
        Format::AsciiDiagram => to_diagrams(report),
    }
}

/// Runs the configured report. Returns the exit status and the rendered
/// text; the text is also written to the output file when one is set.
pub fn run(cfg: &ReportConfig) -> (i32, String) {
    let report = match build(cfg) {
        Ok(r) => r,
        Err(e @ (Error::BadSelector(_) | Error::UnknownSystem(_))) => {
            return (EXIT_USAGE, format!("{e}\n"))
        }
        Err(e) => return (EXIT_IO, format!("{e}\n")),
    };
    let text = match render(&report, cfg.format) {
        Ok(t) => t,
        Err(e) => return (EXIT_IO, format!("{e}\n")),
    };
    if let Some(path) = &cfg.output {
        if let Err(e) = std::fs::write(path, &text) {
            return (EXIT_IO, format!("cannot write {}: {e}\n", path.display()));
        }
    }
    let code = if report.violation_count() > 0 {
        EXIT_VIOLATIONS
    } else {
        EXIT_OK
    };
    (code, text)
}
