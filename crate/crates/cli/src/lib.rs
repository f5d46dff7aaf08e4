//! Records, rendering and command logic behind the `m0nr` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use m0nr_core::charformula::{character_of, euler_character};
use m0nr_core::cycleindex::{chr_index, complex_index, z_extended, z_lambda_prime};
use m0nr_core::verify::{self, CheckReport, OracleSettings};
use m0nr_core::{BigInt, CycleType, Error, GradedCharacter, Partition, SymFunc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest accepted truncation order.
pub const MAX_PBOUND: usize = 20;
pub const DEFAULT_PBOUND: usize = 10;
pub const PBOUND_ENV: &str = "M0NR_PBOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Failure of a command, carrying its process exit code.
#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Verification(String),
    ResourceCap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
            CliError::ResourceCap(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Verification(m) | CliError::ResourceCap(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => CliError::ResourceCap(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exact integers as bare JSON numbers.
mod json_int {
    use super::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(D::Error::custom)
    }

    pub mod map {
        use super::*;
        use std::collections::BTreeMap;

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] BigInt);

        pub fn serialize<S: Serializer>(m: &BTreeMap<usize, BigInt>, s: S) -> Result<S::Ok, S::Error> {
            s.collect_map(m.iter().map(|(k, v)| (k, Wrap(v.clone()))))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, BigInt>, D::Error> {
            let m = BTreeMap::<usize, Wrap>::deserialize(d)?;
            Ok(m.into_iter().map(|(k, w)| (k, w.0)).collect())
        }
    }
}

/// Graded character of one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharRecord {
    pub n: u32,
    pub cycle_type: Vec<u32>,
    /// Cohomological degree to `Tr(π | H^k)`.
    #[serde(with = "json_int::map")]
    pub traces: BTreeMap<usize, BigInt>,
    pub signed_polynomial: String,
}

impl CharRecord {
    pub fn new(ct: &CycleType) -> CliResult<Self> {
        let chi = character_of(ct)?;
        Ok(Self {
            n: ct.n(),
            cycle_type: ct.to_partition().parts().to_vec(),
            traces: chi.traces().into_iter().enumerate().collect(),
            signed_polynomial: chi.to_string(),
        })
    }

    pub fn character(&self) -> GradedCharacter {
        let traces: Vec<BigInt> = self.traces.values().cloned().collect();
        GradedCharacter::from_traces(&traces)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerRecord {
    pub n: u32,
    pub cycle_type: Vec<u32>,
    #[serde(with = "json_int")]
    pub euler: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexTerm {
    pub partition: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failure: Option<String>,
    pub note: Option<String>,
    pub elapsed_ms: u64,
}

impl From<&CheckReport> for CheckRecord {
    fn from(r: &CheckReport) -> Self {
        Self {
            name: r.name.clone(),
            passed: r.passed(),
            cases: r.cases,
            failure: r.failure.clone(),
            note: r.note.clone(),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

/// Run-level facts echoed ahead of the records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub pbound: usize,
    pub pbound_source: String,
}

impl Metadata {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::json!({ "metadata": self })),
            _ => format!("# pbound = {} ({})\n", self.pbound, self.pbound_source),
        }
    }
}

/// Which classes a `char` or `euler` invocation asks for.
#[derive(Clone, Debug, Default)]
pub struct ClassSelection {
    pub n: Option<u32>,
    pub cycle_type: Option<String>,
    pub all: bool,
}

impl ClassSelection {
    /// Requested classes; all classes of `S_n` come in ascending
    /// lexicographic order of their part lists. Without `--cycle-type` or
    /// `--all` the identity is used.
    pub fn classes(&self) -> CliResult<Vec<CycleType>> {
        match (&self.cycle_type, self.all) {
            (Some(_), true) => Err(CliError::Usage("--cycle-type and --all are exclusive".into())),
            (Some(s), false) => {
                let p = Partition::parse(s)?;
                if let Some(n) = self.n {
                    if p.size() != n as usize {
                        return Err(CliError::Usage(format!("{p} is not a partition of {n}")));
                    }
                }
                if p.is_empty() {
                    return Err(CliError::Usage("empty cycle type".into()));
                }
                Ok(vec![CycleType::from_partition(&p)])
            }
            (None, all) => {
                let n = self.n.ok_or_else(|| CliError::Usage("--n is required".into()))?;
                if n == 0 {
                    return Err(CliError::Usage("--n must be positive".into()));
                }
                if all {
                    Ok(Partition::all_of(n as usize).iter().map(CycleType::from_partition).collect())
                } else {
                    Ok(vec![CycleType::identity(n)])
                }
            }
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().flexible(false).from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv")
}

fn join_parts(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn json_lines<T: Serialize>(records: &[T]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("serializable") + "\n").collect()
}

pub fn char_records(sel: &ClassSelection) -> CliResult<Vec<CharRecord>> {
    sel.classes()?.par_iter().map(CharRecord::new).collect()
}

/// Character table. CSV has one row per class and one column per degree.
pub fn render_chars(records: &[CharRecord], format: Format) -> String {
    match format {
        Format::Plain => records
            .iter()
            .map(|r| format!("{}: {}\n", Partition::new(r.cycle_type.clone()).unwrap(), r.signed_polynomial))
            .collect(),
        Format::Json => json_lines(records),
        Format::Csv => {
            let top = records.iter().filter_map(|r| r.traces.keys().last().copied()).max().unwrap_or(0);
            let mut w = csv_writer();
            let mut header = vec!["n".to_string(), "cycle_type".to_string()];
            header.extend((0..=top).map(|k| format!("H{k}")));
            w.write_record(&header).unwrap();
            for r in records {
                let mut row = vec![r.n.to_string(), join_parts(&r.cycle_type)];
                row.extend((0..=top).map(|k| r.traces.get(&k).cloned().unwrap_or_default().to_string()));
                w.write_record(&row).unwrap();
            }
            csv_finish(w)
        }
    }
}

pub fn euler_records(sel: &ClassSelection) -> CliResult<Vec<EulerRecord>> {
    Ok(sel
        .classes()?
        .par_iter()
        .map(|ct| EulerRecord {
            n: ct.n(),
            cycle_type: ct.to_partition().parts().to_vec(),
            euler: euler_character(ct),
        })
        .collect())
}

pub fn render_euler(records: &[EulerRecord], format: Format) -> String {
    match format {
        Format::Plain => records
            .iter()
            .map(|r| format!("{}: {}\n", Partition::new(r.cycle_type.clone()).unwrap(), r.euler))
            .collect(),
        Format::Json => json_lines(records),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "cycle_type", "euler"]).unwrap();
            for r in records {
                w.write_record([r.n.to_string(), join_parts(&r.cycle_type), r.euler.to_string()]).unwrap();
            }
            csv_finish(w)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    LambdaPrime,
    Extended,
    Chr,
    Complex,
}

pub fn check_pbound(pbound: usize) -> CliResult<()> {
    if pbound > MAX_PBOUND {
        return Err(CliError::Usage(format!("pbound {pbound} exceeds the maximum {MAX_PBOUND}")));
    }
    Ok(())
}

pub fn cycle_index(which: Which, pbound: usize) -> CliResult<SymFunc> {
    check_pbound(pbound)?;
    Ok(match which {
        Which::LambdaPrime => z_lambda_prime(pbound),
        Which::Extended => z_extended(pbound),
        Which::Chr => chr_index(pbound),
        Which::Complex => complex_index(pbound),
    })
}

/// Nonzero terms by size, then lexicographically.
pub fn index_terms(z: &SymFunc) -> Vec<IndexTerm> {
    let mut terms: Vec<(&Partition, String)> = z.iter().map(|(p, c)| (p, c.to_string())).collect();
    terms.sort_by(|a, b| (a.0.size(), a.0).cmp(&(b.0.size(), b.0)));
    terms
        .into_iter()
        .map(|(p, c)| IndexTerm { partition: p.parts().to_vec(), coefficient: c })
        .collect()
}

pub fn render_index(terms: &[IndexTerm], meta: &Metadata, format: Format) -> String {
    let mut out = meta.render(format);
    match format {
        Format::Plain => {
            for t in terms {
                let label = if t.partition.is_empty() { "1".to_string() } else { p_monomial(&t.partition) };
                writeln!(out, "{label}: {}", t.coefficient).unwrap();
            }
        }
        Format::Json => out += &json_lines(terms),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["partition", "coefficient"]).unwrap();
            for t in terms {
                w.write_record([join_parts(&t.partition), t.coefficient.clone()]).unwrap();
            }
            out += &csv_finish(w);
        }
    }
    out
}

fn p_monomial(parts: &[u32]) -> String {
    let p = Partition::new(parts.to_vec()).unwrap();
    p.multiplicities()
        .into_iter()
        .rev()
        .map(|(k, m)| if m == 1 { format!("p{k}") } else { format!("p{k}^{m}") })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    Poset,
    Cycleindex,
    Euler,
    Recurrence,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub pbound: usize,
    pub max_ambient: usize,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_n: None, pbound: DEFAULT_PBOUND, max_ambient: 100_000, cache_dir: None, seed: 0x5eed }
    }
}

/// Run one suite (or all). Errors only on invalid input or a resource cap;
/// failing checks are reported in the returned list.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> CliResult<Vec<CheckReport>> {
    check_pbound(opts.pbound)?;
    let settings = OracleSettings { max_ambient: opts.max_ambient, cache_dir: opts.cache_dir.as_deref() };
    let pb = opts.pbound;
    let reports = match suite {
        Suite::Oracle => {
            let n = opts.max_n.unwrap_or(6);
            let ms: Vec<usize> = (1..=n).collect();
            let ns: Vec<usize> = (1..=n).collect();
            vec![
                verify::formula_vs_lambda_prime(&ms, &[], &settings)?,
                verify::formula_vs_lambda(&ns, &settings)?,
                verify::oracle_dimensions(n, n, &settings)?,
                verify::functoriality(n.min(5), 2, 40, opts.seed, &settings)?,
                verify::decomposition_consistency(n, &settings)?,
            ]
        }
        Suite::Poset => {
            let n = opts.max_n.unwrap_or(7);
            let sizes: Vec<usize> = (1..=n).step_by(2).collect();
            check_pbound(n)?;
            vec![verify::chr_vs_poset(&sizes)?, verify::chr_restriction(pb.max(n))?]
        }
        Suite::Cycleindex => vec![
            verify::cycle_index_route(pb)?,
            verify::extended_index(pb)?,
            verify::reconstruction(pb)?,
            verify::plethystic_round_trips(pb)?,
            verify::complex_checks(pb)?,
        ],
        Suite::Euler => {
            let n = opts.max_n.unwrap_or(10);
            vec![verify::euler(n)?, verify::poincare_identity(3..=30)?]
        }
        Suite::Recurrence => {
            let n = opts.max_n.unwrap_or(8);
            vec![verify::recurrences(200, opts.seed)?, verify::integrality(n)?]
        }
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Oracle, Suite::Poset, Suite::Cycleindex, Suite::Euler, Suite::Recurrence] {
                all.extend(run_suite(s, opts)?);
            }
            all
        }
    };
    Ok(reports)
}

pub fn render_reports(reports: &[CheckReport], meta: &Metadata, format: Format) -> String {
    let mut out = meta.render(format);
    let records: Vec<CheckRecord> = reports.iter().map(CheckRecord::from).collect();
    match format {
        Format::Plain => {
            for r in reports {
                writeln!(out, "{r}").unwrap();
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed == 0 {
                writeln!(out, "all {} checks passed", reports.len()).unwrap();
            } else {
                writeln!(out, "{failed} of {} checks failed", reports.len()).unwrap();
            }
        }
        Format::Json => out += &json_lines(&records),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["name", "passed", "cases", "failure", "note", "elapsed_ms"]).unwrap();
            for r in &records {
                w.write_record([
                    r.name.clone(),
                    r.passed.to_string(),
                    r.cases.to_string(),
                    r.failure.clone().unwrap_or_default(),
                    r.note.clone().unwrap_or_default(),
                    r.elapsed_ms.to_string(),
                ])
                .unwrap();
            }
            out += &csv_finish(w);
        }
    }
    out
}
