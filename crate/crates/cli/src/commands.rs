use altext::polyz;
use altext::rewrite::{normal_form, FormalCombo, RuleTable};
use altext::series::{dimension_matrix, verify_gf_identity, GfIdentity};
use altext::ucal::{
    central_check, ucal_relations, verify_ucal_relation, zvee_central, zvee_expression, CentralReport, TensorElement,
};
use altext::uqp::{instances, verify_uqp_relation, Relation};
use altext::Bidegree;
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Config, OutputFormat};
use crate::CliError;

/// Rule tables are always built to at least this index.
pub const RULE_INDEX: u32 = 8;
/// Largest rule table the CLI will extract on demand.
pub const RULE_INDEX_LIMIT: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Uqp,
    Ucal,
    Appendix,
    All,
}

/// The text written to stdout and whether every check passed.
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub id: String,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub pass: bool,
    pub residual: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub config: Config,
    pub total: usize,
    pub failed: usize,
    pub pass: bool,
    pub results: Vec<CheckRow>,
}

fn relation_rows(suite: &'static str, relations: &[Relation], config: &Config) -> Result<Vec<CheckRow>, CliError> {
    let tasks: Vec<(Relation, u32, u32)> = relations
        .iter()
        .flat_map(|&r| {
            instances(r, config.max_index, config.max_degree_sum / 2).into_iter().map(move |(k, l)| (r, k, l))
        })
        .collect();
    tasks
        .into_par_iter()
        .map(|(rel, k, l)| {
            let r = if suite == "uqp" { verify_uqp_relation(rel, k, l) } else { verify_ucal_relation(rel, k, l)? };
            Ok(CheckRow { suite, id: r.relation, k: Some(r.k), l: r.l, pass: r.pass, residual: r.residual })
        })
        .collect()
}

fn appendix_rows(config: &Config) -> Vec<CheckRow> {
    GfIdentity::ALL
        .par_iter()
        .map(|&id| {
            let r = verify_gf_identity(id, config.truncation);
            CheckRow { suite: "appendix", id: r.identity, k: None, l: None, pass: r.pass, residual: r.residual }
        })
        .collect()
}

pub fn verify(scope: Scope, config: &Config) -> Result<VerifyReport, CliError> {
    let mut results = Vec::new();
    if matches!(scope, Scope::Uqp | Scope::All) {
        results.extend(relation_rows("uqp", Relation::ALL, config)?);
    }
    if matches!(scope, Scope::Ucal | Scope::All) {
        results.extend(relation_rows("ucal", &ucal_relations(), config)?);
    }
    if matches!(scope, Scope::Appendix | Scope::All) {
        results.extend(appendix_rows(config));
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    Ok(VerifyReport { scope, config: config.clone(), total: results.len(), failed, pass: failed == 0, results })
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
}

fn json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

fn opt(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn render_verify(r: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["suite", "id", "k", "l", "pass", "residual"])?;
            for row in &r.results {
                w.write_record([row.suite, &row.id, &opt(row.k), &opt(row.l), &row.pass.to_string(), &row.residual])?;
            }
            Ok(())
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            for row in &r.results {
                let mut line = format!("{} {} {}", if row.pass { "PASS" } else { "FAIL" }, row.suite, row.id);
                if let Some(k) = row.k {
                    line += &format!(" k={k}");
                }
                if let Some(l) = row.l {
                    line += &format!(" l={l}");
                }
                if !row.pass {
                    line += &format!(" residual: {}", row.residual);
                }
                out += &line;
                out.push('\n');
            }
            out += &format!("{} checks, {} failed\n", r.total, r.failed);
            out
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DimsReport {
    pub max: u32,
    pub matrix: Vec<Vec<u64>>,
}

pub fn dims(max: u32) -> DimsReport {
    DimsReport { max, matrix: dimension_matrix(max) }
}

pub fn render_dims(r: &DimsReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_string(|w| {
            let mut header = vec!["i".to_string()];
            header.extend((0..=r.max).map(|j| j.to_string()));
            w.write_record(&header)?;
            for (i, row) in r.matrix.iter().enumerate() {
                let mut rec = vec![i.to_string()];
                rec.extend(row.iter().map(|v| v.to_string()));
                w.write_record(&rec)?;
            }
            Ok(())
        }),
        OutputFormat::Text => {
            let width = r.matrix.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
            let mut out = String::new();
            for row in &r.matrix {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                out += &cells.join(" ");
                out.push('\n');
            }
            out
        }
    }
}

/// Smallest index bound that covers every generator reachable from `c`:
/// a generator of index `k` has degree at least `(k, k)`.
fn needed_index(c: &FormalCombo) -> u32 {
    c.terms()
        .keys()
        .map(|w| {
            let Bidegree(i, j) = w.degree();
            i.min(j)
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Serialize)]
pub struct NormalFormReport {
    pub input: String,
    pub normal_form: String,
    pub terms: FormalCombo,
}

pub fn normal_form_cmd(expr: &str) -> Result<NormalFormReport, CliError> {
    let c: FormalCombo = expr.parse()?;
    let bound = needed_index(&c).max(c.max_index()).max(RULE_INDEX);
    if bound > RULE_INDEX_LIMIT {
        return Err(altext::Error::IndexOutOfTable { index: bound, bound: RULE_INDEX_LIMIT }.into());
    }
    let rules = RuleTable::load_or_extract(bound, &altext::rewrite::default_cache_dir())?;
    let nf = normal_form(&c, &rules)?;
    Ok(NormalFormReport { input: expr.to_string(), normal_form: nf.to_string(), terms: nf })
}

pub fn render_normal_form(r: &NormalFormReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["word", "coefficient"])?;
            for (word, c) in r.terms.terms() {
                w.write_record([word.to_string(), c.to_string()])?;
            }
            Ok(())
        }),
        OutputFormat::Text => format!("{}\n", r.normal_form),
    }
}

#[derive(Debug, Serialize)]
pub struct CentralCmdReport {
    pub n: u32,
    pub formal: String,
    pub image: String,
    pub expected: String,
    pub image_matches: bool,
    pub central: CentralReport,
    pub pass: bool,
}

pub fn central(n: u32, config: &Config) -> Result<CentralCmdReport, CliError> {
    if n > config.max_degree_sum {
        return Err(CliError::Usage(format!("n = {n} exceeds --max-degree {}", config.max_degree_sum)));
    }
    let formal = zvee_expression::<FormalCombo>(n);
    let image = zvee_central(n);
    let expected = TensorElement::from_zpoly(&polyz::zvee(n));
    let check = central_check(&image, config.max_index);
    let image_matches = image == expected;
    Ok(CentralCmdReport {
        n,
        formal: formal.to_string(),
        image: image.to_string(),
        expected: expected.to_string(),
        image_matches,
        pass: image_matches && check.pass,
        central: check,
    })
}

pub fn render_central(r: &CentralCmdReport, format: OutputFormat) -> String {
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["n", "formal", "image", "expected", "image_matches", "central"])?;
            w.write_record([
                r.n.to_string(),
                r.formal.clone(),
                r.image.clone(),
                r.expected.clone(),
                r.image_matches.to_string(),
                r.central.pass.to_string(),
            ])
        }),
        OutputFormat::Text => {
            let mut out = format!("Zvee{}: {}\n", r.n, r.formal);
            out += &format!("image: {}\n", r.image);
            out += &format!("1⊗zvee{}: {} [{}]\n", r.n, r.expected, verdict(r.image_matches));
            out += &format!("central up to index {}: {}\n", r.central.bound, verdict(r.central.pass));
            for (g, c) in &r.central.failures {
                out += &format!("  [{g}, Zvee{}] = {c}\n", r.n);
            }
            out
        }
    }
}

pub fn rules_json(max_index: u32) -> Result<String, CliError> {
    if max_index > RULE_INDEX_LIMIT {
        return Err(altext::Error::IndexOutOfTable { index: max_index, bound: RULE_INDEX_LIMIT }.into());
    }
    let t = RuleTable::load_or_extract(max_index, &altext::rewrite::default_cache_dir())?;
    let mut s = t.to_json();
    s.push('\n');
    Ok(s)
}
