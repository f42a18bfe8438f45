//! Field selections, WR scans over primitive ideals, and their serialized reports.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{self, CrossCheck, Fault};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{enumerate_primitive_ideals, IdealLattice};
use crate::lattice::wr_report;
use crate::numtheory::enumerate_conductors;
use crate::quartic::parameter_violations;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::InvalidArgument(format!("unknown output format `{s}`"))),
        }
    }
}

/// Settings shared by scans, cross-checks and conjecture runs. Every key may come from a
/// TOML file; command-line flags override it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    /// Field selector, see [`parse_fields`].
    pub fields: String,
    pub norm_bound: u64,
    pub prime_bound: u64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Worker threads; 0 picks the number of cores.
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            fields: String::new(),
            norm_bound: 1000,
            prime_bound: 50,
            format: OutputFormat::Json,
            out: None,
            jobs: 0,
        }
    }
}

impl ScanConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ScanConfig =
            toml::from_str(text).map_err(|e| Error::InvalidArgument(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.norm_bound == 0 || self.prime_bound == 0 {
            return Err(Error::InvalidArgument("bounds must be positive".into()));
        }
        parse_fields(&self.fields).map(|_| ())
    }
}

/// Parses a `;`-separated list of selectors:
///
/// * `cubic:m` and `quartic:a,b,c,d` name one field,
/// * `cubic:lo..hi` takes every conductor in the closed range,
/// * `quartic-box:A,D` takes every valid parameter set with `|a| <= A` and `d <= D`.
///
/// An empty string selects nothing. Duplicates are dropped, first occurrence wins.
pub fn parse_fields(spec: &str) -> Result<Vec<Arc<Field>>> {
    let bad = |s: &str| Error::InvalidArgument(format!("cannot parse field selector `{s}`"));
    let mut out: Vec<Arc<Field>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |f: Field, out: &mut Vec<Arc<Field>>| {
        if seen.insert(f.id()) {
            out.push(Arc::new(f));
        }
    };
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some(rest) = item.strip_prefix("quartic-box:") {
            let (amax, dmax) = rest.split_once(',').ok_or_else(|| bad(item))?;
            let amax: i64 = amax.trim().parse().map_err(|_| bad(item))?;
            let dmax: i64 = dmax.trim().parse().map_err(|_| bad(item))?;
            for (a, b, c, d) in quartic_corpus(amax, dmax) {
                push(Field::quartic(a, b, c, d)?, &mut out);
            }
        } else if let Some((lo, hi)) = item.strip_prefix("cubic:").and_then(|r| r.split_once("..")) {
            let lo: u64 = lo.trim().parse().map_err(|_| bad(item))?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad(item))?;
            for m in enumerate_conductors(hi).into_iter().filter(|&m| m >= lo) {
                push(Field::cubic(m)?, &mut out);
            }
        } else {
            push(Field::parse(item)?, &mut out);
        }
    }
    Ok(out)
}

/// Valid quartic parameters with `|a| <= amax` and `d <= dmax`, ordered by `(d, b, c, a)`.
pub fn quartic_corpus(amax: i64, dmax: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for b in (1..).take_while(|b| b * b < dmax) {
        for c in (1..).take_while(|c| b * b + c * c <= dmax) {
            let d = b * b + c * c;
            for a in -amax..=amax {
                if parameter_violations(a, b, c, d).is_empty() {
                    out.push((a, b, c, d));
                }
            }
        }
    }
    out.sort_by_key(|&(a, b, c, d)| (d, b, c, a));
    out
}

/// One primitive ideal of one field with its WR verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrRecord {
    pub field_id: String,
    pub ideal_norm: u64,
    /// HNF rows, row-major.
    pub hnf: Vec<i64>,
    /// Minimum squared length as `num/den`.
    pub minimum: String,
    pub wr: bool,
    pub strongly_wr: bool,
    pub orthogonal: bool,
    /// Closed-form verdict when the ideal is one the predicates cover.
    pub predicate: Option<bool>,
    pub divides_disc: bool,
}

impl fmt::Display for WrRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "{} N={} min={} wr={} strong={} orth={} predicate={} divides_disc={} hnf=[{}]",
            self.field_id,
            self.ideal_norm,
            self.minimum,
            flag(self.wr),
            flag(self.strongly_wr),
            flag(self.orthogonal),
            self.predicate.map_or("-", flag),
            flag(self.divides_disc),
            join(&self.hnf),
        )
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub const CSV_HEADER: [&str; 9] = [
    "field_id",
    "ideal_norm",
    "hnf",
    "minimum",
    "wr",
    "strongly_wr",
    "orthogonal",
    "predicate",
    "divides_disc",
];

pub fn records_to_csv(records: &[WrRecord]) -> Result<String> {
    let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record([
            r.field_id.clone(),
            r.ideal_norm.to_string(),
            join(&r.hnf),
            r.minimum.clone(),
            r.wr.to_string(),
            r.strongly_wr.to_string(),
            r.orthogonal.to_string(),
            r.predicate.map_or(String::new(), |b| b.to_string()),
            r.divides_disc.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

pub fn records_from_csv(text: &str) -> Result<Vec<WrRecord>> {
    let bad = |what: &str| Error::InvalidArgument(format!("csv: bad {what}"));
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(bad("header"));
    }
    let flag = |s: &str| s.parse::<bool>().map_err(|_| bad("flag"));
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
        let hnf = row[2]
            .split_whitespace()
            .map(|x| x.parse::<i64>().map_err(|_| bad("hnf")))
            .collect::<Result<Vec<_>>>()?;
        out.push(WrRecord {
            field_id: row[0].to_string(),
            ideal_norm: row[1].parse().map_err(|_| bad("norm"))?,
            hnf,
            minimum: row[3].to_string(),
            wr: flag(&row[4])?,
            strongly_wr: flag(&row[5])?,
            orthogonal: flag(&row[6])?,
            predicate: if row[7].is_empty() { None } else { Some(flag(&row[7])?) },
            divides_disc: flag(&row[8])?,
        });
    }
    Ok(out)
}

/// HNF (row-major) of every ideal a closed-form predicate covers, with its verdict.
fn predicted_verdicts(field: &Arc<Field>) -> Result<HashMap<Vec<i64>, bool>> {
    let mut map = HashMap::new();
    match field.as_ref() {
        Field::Cubic(_) => {
            for c in certify::cubic_cases(field, Fault::None)? {
                map.insert(c.ideal.hnf_row_major(), c.predicted);
            }
        }
        Field::Quartic(_) => {
            for c in certify::quartic_cases(field)? {
                map.insert(c.ideal.hnf_row_major(), c.predicted);
            }
        }
    }
    Ok(map)
}

fn record(ideal: &IdealLattice, disc: u64, predicate: Option<bool>) -> WrRecord {
    let rep = wr_report(ideal);
    WrRecord {
        field_id: ideal.field().id(),
        ideal_norm: ideal.norm(),
        hnf: ideal.hnf_row_major(),
        minimum: rep.minimum,
        wr: rep.is_wr,
        strongly_wr: rep.is_strongly_wr,
        orthogonal: rep.is_orthogonal,
        predicate,
        divides_disc: disc.is_multiple_of(ideal.norm()),
    }
}

/// Records for every primitive ideal of norm at most `bound`, sorted by norm then HNF.
pub fn scan_field(field: &Arc<Field>, bound: u64) -> Result<Vec<WrRecord>> {
    let verdicts = predicted_verdicts(field)?;
    let disc = field.disc_abs();
    let ideals = enumerate_primitive_ideals(field, bound)?;
    Ok(ideals
        .iter()
        .map(|a| record(a, disc, verdicts.get(&a.hnf_row_major()).copied()))
        .collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub fields: usize,
    pub ideals: usize,
    pub wr: usize,
    /// Records whose closed-form verdict disagrees with enumeration.
    pub predicate_mismatches: usize,
    /// `(field id, error)` for fields that could not be scanned.
    pub failed_fields: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutput {
    pub config: ScanConfig,
    pub records: Vec<WrRecord>,
    pub summary: ScanSummary,
}

impl ScanOutput {
    pub fn is_clean(&self) -> bool {
        self.summary.failed_fields.is_empty() && self.summary.predicate_mismatches == 0
    }
}

/// Runs `job` on every field, in parallel, keeping the input order.
pub fn per_field<T, F>(fields: &[Arc<Field>], jobs: usize, job: F) -> Vec<(String, Result<T>)>
where
    T: Send,
    F: Fn(&Arc<Field>) -> Result<T> + Sync,
{
    let run = || fields.par_iter().map(|f| (f.id(), job(f))).collect::<Vec<_>>();
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

pub fn scan(config: &ScanConfig) -> Result<ScanOutput> {
    config.validate()?;
    let fields = parse_fields(&config.fields)?;
    let results = per_field(&fields, config.jobs, |f| scan_field(f, config.norm_bound));
    let mut summary = ScanSummary { fields: fields.len(), ..Default::default() };
    let mut records = Vec::new();
    for (id, res) in results {
        match res {
            Ok(rs) => records.extend(rs),
            Err(e) => summary.failed_fields.push((id, e.to_string())),
        }
    }
    summary.ideals = records.len();
    summary.wr = records.iter().filter(|r| r.wr).count();
    summary.predicate_mismatches = records.iter().filter(|r| r.predicate.is_some_and(|p| p != r.wr)).count();
    Ok(ScanOutput { config: config.clone(), records, summary })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureSummary {
    pub odd_fields: usize,
    pub even_fields: usize,
    pub wr_ideals: usize,
    pub counterexamples: usize,
    pub expected_nonconforming: usize,
    pub failed_fields: Vec<(String, String)>,
}

/// WR primitive ideals, split by whether their norm divides the discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub config: ScanConfig,
    /// Every WR primitive ideal found.
    pub records: Vec<WrRecord>,
    /// Odd discriminant, norm not dividing it.
    pub counterexamples: Vec<WrRecord>,
    /// Even discriminant, norm not dividing it.
    pub expected_nonconforming: Vec<WrRecord>,
    pub summary: ConjectureSummary,
}

pub fn conjecture(config: &ScanConfig) -> Result<ConjectureReport> {
    config.validate()?;
    let fields = parse_fields(&config.fields)?;
    let results = per_field(&fields, config.jobs, |f| scan_field(f, config.norm_bound));
    let odd: HashMap<String, bool> = fields.iter().map(|f| (f.id(), f.disc_abs() % 2 == 1)).collect();
    let mut summary = ConjectureSummary::default();
    summary.odd_fields = odd.values().filter(|&&o| o).count();
    summary.even_fields = fields.len() - summary.odd_fields;
    let mut records = Vec::new();
    for (id, res) in results {
        match res {
            Ok(rs) => records.extend(rs.into_iter().filter(|r| r.wr)),
            Err(e) => summary.failed_fields.push((id, e.to_string())),
        }
    }
    let (counterexamples, expected_nonconforming): (Vec<WrRecord>, Vec<WrRecord>) = records
        .iter()
        .filter(|r| !r.divides_disc)
        .cloned()
        .partition(|r| odd[&r.field_id]);
    summary.wr_ideals = records.len();
    summary.counterexamples = counterexamples.len();
    summary.expected_nonconforming = expected_nonconforming.len();
    Ok(ConjectureReport { config: config.clone(), records, counterexamples, expected_nonconforming, summary })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub config: ScanConfig,
    pub checks: Vec<CrossCheck>,
    pub failed_fields: Vec<(String, String)>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.failed_fields.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

pub fn crosscheck(config: &ScanConfig, fault: Fault) -> Result<CrossCheckReport> {
    config.validate()?;
    let fields = parse_fields(&config.fields)?;
    let mut checks = Vec::new();
    let mut failed_fields = Vec::new();
    for (id, res) in per_field(&fields, config.jobs, |f| certify::crosscheck_field(f, fault)) {
        match res {
            Ok(c) => checks.extend(c),
            Err(e) => failed_fields.push((id, e.to_string())),
        }
    }
    Ok(CrossCheckReport { config: config.clone(), checks, failed_fields })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        let f = parse_fields("cubic:7; cubic:1..20; quartic:1,2,1,5").unwrap();
        let ids: Vec<String> = f.iter().map(|f| f.id()).collect();
        assert_eq!(ids, ["cubic:7", "cubic:9", "cubic:13", "cubic:19", "quartic:1,2,1,5"]);
        assert!(parse_fields("").unwrap().is_empty());
        assert!(parse_fields("cubic:12").is_err());
        assert!(parse_fields("sextic:5").is_err());
    }

    #[test]
    fn corpus_is_valid_and_ordered() {
        let c = quartic_corpus(1, 10);
        assert_eq!(c, vec![(-1, 1, 1, 2), (1, 1, 1, 2), (-1, 1, 2, 5), (1, 1, 2, 5), (-1, 2, 1, 5), (1, 2, 1, 5), (-1, 1, 3, 10), (1, 1, 3, 10), (-1, 3, 1, 10), (1, 3, 1, 10)]);
    }

    #[test]
    fn config_from_toml() {
        let cfg = ScanConfig::from_toml("fields = \"cubic:7\"\nnorm_bound = 49\nformat = \"csv\"\n").unwrap();
        assert_eq!(cfg.norm_bound, 49);
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert_eq!(cfg.prime_bound, 50);
        assert!(ScanConfig::from_toml("norm_bound = 0").is_err());
        assert!(ScanConfig::from_toml("colour = 1").is_err());
    }

    #[test]
    fn cubic_seven_scan() {
        let f = Arc::new(Field::cubic(7).unwrap());
        let rs = scan_field(&f, 49).unwrap();
        let wr: Vec<u64> = rs.iter().filter(|r| r.wr).map(|r| r.ideal_norm).collect();
        assert!(wr.contains(&49));
        let sq = rs.iter().find(|r| r.ideal_norm == 49).unwrap();
        assert!(sq.orthogonal && sq.predicate == Some(true) && sq.divides_disc);
    }
}
