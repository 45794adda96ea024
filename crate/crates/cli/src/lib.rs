//! Command-line surface over the curvenbhd library: input parsing, JSON and
//! DOT serialization, and the formula-vs-oracle comparison harness. Every
//! subcommand is a thin shell over library operations.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use curvenbhd::affine_weyl::{eval_word, AffinePerm};
use curvenbhd::neighborhoods::{
    gamma_id, gamma_w, NbhdResult, Provenance, Regime, TranslationForm,
};
use curvenbhd::oracle::{moment_graph_slice, neighborhood_bfs, Chain, SearchConfig};
use curvenbhd::roots::{degrees_with_sum_at_most, Degree};
use curvenbhd::z_elem::z_factorization;
use curvenbhd::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Exit codes: 0 success/PASS, 1 usage error, 2 verification FAIL,
/// 3 resource cap.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let exit_code = match err {
            Error::BudgetCap { .. } | Error::LowerIntervalCap { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        CliError {
            message: err.to_string(),
            exit_code,
        }
    }
}

fn usage_error(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        exit_code: EXIT_USAGE,
    }
}

// ---------------------------------------------------------------------------
// parsing

/// Parse `d0,d1,...,dn-1`, checking the length against `n`.
pub fn parse_degree(text: &str, n: usize) -> Result<Degree, CliError> {
    let degree: Degree = text.parse().map_err(CliError::from)?;
    if degree.n() != n {
        return Err(usage_error(format!(
            "degree `{text}` has {} entries, expected {n}",
            degree.n()
        )));
    }
    Ok(degree)
}

/// Parse an element from an `s0 s1`-style word or a `[w1,...,wn]` window.
pub fn parse_element(text: &str, n: usize) -> Result<AffinePerm, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "id" || text == "e" {
        return Ok(AffinePerm::identity(n));
    }
    if text.starts_with('[') {
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| usage_error(format!("window `{text}` is missing a bracket")))?;
        let entries: Vec<i64> = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| usage_error(format!("bad window entry `{t}`: {e}")))
            })
            .collect::<Result<_, _>>()?;
        if entries.len() != n {
            return Err(usage_error(format!(
                "window `{text}` has {} entries, expected {n}",
                entries.len()
            )));
        }
        return AffinePerm::from_window(entries).map_err(CliError::from);
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let digits = token.strip_prefix('s').unwrap_or(token);
        let letter: usize = digits
            .parse()
            .map_err(|_| usage_error(format!("bad word letter `{token}`")))?;
        if letter >= n {
            return Err(usage_error(format!(
                "letter `{token}` out of range for n={n}"
            )));
        }
        letters.push(letter);
    }
    Ok(eval_word(&letters, n))
}

/// Parse a full element JSON object, accepting either the window or the word
/// form; when both are present they must agree.
pub fn element_from_json(value: &serde_json::Value, n: usize) -> Result<AffinePerm, CliError> {
    let window = value.get("window").and_then(|v| v.as_array());
    let word = value.get("word").and_then(|v| v.as_array());
    let from_window = window
        .map(|entries| {
            let entries: Vec<i64> = entries
                .iter()
                .map(|e| {
                    e.as_i64()
                        .ok_or_else(|| usage_error(format!("bad window entry {e}")))
                })
                .collect::<Result<_, _>>()?;
            AffinePerm::from_window(entries).map_err(CliError::from)
        })
        .transpose()?;
    let from_word = word
        .map(|letters| {
            let letters: Vec<usize> = letters
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|l| l as usize)
                        .filter(|&l| l < n)
                        .ok_or_else(|| usage_error(format!("bad word letter {e}")))
                })
                .collect::<Result<_, _>>()?;
            Ok::<_, CliError>(eval_word(&letters, n))
        })
        .transpose()?;
    match (from_window, from_word) {
        (Some(a), Some(b)) if a != b => {
            Err(usage_error("window and word denote different elements"))
        }
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(usage_error("element JSON needs a window or a word")),
    }
}

// ---------------------------------------------------------------------------
// report schema

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub window: Vec<i64>,
    pub word: Vec<usize>,
}

impl ElementJson {
    pub fn of(perm: &AffinePerm) -> Self {
        ElementJson {
            window: perm.window().to_vec(),
            word: perm.reduced_word().letters().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub beta_prime: String,
    pub m: i64,
    pub form: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NbhdElementJson {
    pub window: Vec<i64>,
    pub word: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeighborhoodJson {
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_part: Option<ElementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_factors: Option<Vec<String>>,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub common_length: Option<usize>,
    pub elements: Vec<NbhdElementJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZJson {
    pub window: Vec<i64>,
    pub word: Vec<usize>,
    pub factors: Vec<String>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: usize,
    pub dot_file: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainJson {
    pub start: ElementJson,
    pub steps: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckFailureJson {
    pub degree: String,
    pub formula_only: Vec<ElementJson>,
    pub oracle_only: Vec<ElementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample_chain: Option<ChainJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub max_degree_sum: i64,
    pub degrees_checked: usize,
    pub degrees_passed: usize,
    pub failures: Vec<CheckFailureJson>,
}

/// The one record every subcommand produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<ElementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborhood: Option<NeighborhoodJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<ZJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<String>,
    pub duration_ms: u64,
}

impl RunReport {
    fn new(command: &str, n: usize) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            n,
            degree: None,
            budget: None,
            start: None,
            neighborhood: None,
            z: None,
            graph: None,
            check: None,
            oracle_check: None,
            duration_ms: 0,
        }
    }

    pub fn exit_code(&self) -> i32 {
        let check_failed = self
            .check
            .as_ref()
            .is_some_and(|c| !c.failures.is_empty());
        let oracle_failed = self.oracle_check.as_deref() == Some("fail");
        if check_failed || oracle_failed {
            EXIT_VERIFICATION
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn witness_form(form: TranslationForm) -> &'static str {
    match form {
        TranslationForm::MBetaPrime => "t(m*beta')",
        TranslationForm::MBetaPrimeMinusC => "t(m*(beta'-c))",
    }
}

fn regime_name(regime: Regime) -> &'static str {
    match regime {
        Regime::Finite => "finite",
        Regime::Translation => "translation",
        Regime::General => "general",
    }
}

fn neighborhood_json(result: &NbhdResult) -> NeighborhoodJson {
    let elements: Vec<NbhdElementJson> = result
        .elements
        .iter()
        .map(|e| NbhdElementJson {
            window: e.perm.window().to_vec(),
            word: e.perm.reduced_word().letters().to_vec(),
            witness: e.witness.as_ref().map(|w| WitnessJson {
                beta_prime: w.beta_prime.to_string(),
                m: w.m,
                form: witness_form(w.form).to_string(),
            }),
        })
        .collect();
    let (provenance, regime, m, z_part, z_factors) = match &result.provenance {
        Provenance::Formula {
            regime,
            m,
            z_part,
            z_factors,
        } => (
            "formula".to_string(),
            Some(regime_name(*regime).to_string()),
            Some(*m),
            Some(ElementJson::of(z_part)),
            Some(z_factors.iter().map(|f| f.to_string()).collect()),
        ),
        Provenance::MaxOfFormula { regime } => (
            "max_of_formula".to_string(),
            Some(regime_name(*regime).to_string()),
            None,
            None,
            None,
        ),
        Provenance::Oracle { level_zero_only } => (
            if *level_zero_only {
                "oracle_level_zero".to_string()
            } else {
                "oracle".to_string()
            },
            None,
            None,
            None,
            None,
        ),
    };
    NeighborhoodJson {
        provenance,
        regime,
        m,
        z_part,
        z_factors,
        count: result.elements.len(),
        common_length: result.common_length,
        elements,
    }
}

fn chain_json(chain: &Chain) -> ChainJson {
    ChainJson {
        start: ElementJson::of(&chain.start),
        steps: chain.steps.iter().map(|s| s.to_string()).collect(),
    }
}

// ---------------------------------------------------------------------------
// subcommands

pub fn run_gamma(
    n: usize,
    degree_text: &str,
    start_text: Option<&str>,
    check_oracle: bool,
    threads: usize,
) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let degree = parse_degree(degree_text, n)?;
    let start = start_text
        .map(|t| parse_element(t, n))
        .transpose()?
        .unwrap_or_else(|| AffinePerm::identity(n));
    let result = if start.is_identity() {
        gamma_id(&degree)?
    } else {
        gamma_w(&start, &degree)?
    };
    let mut report = RunReport::new("gamma", n);
    report.degree = Some(degree.to_string());
    if !start.is_identity() {
        report.start = Some(ElementJson::of(&start));
    }
    report.neighborhood = Some(neighborhood_json(&result));
    if check_oracle {
        let config = SearchConfig {
            threads,
            ..SearchConfig::default()
        };
        let run = neighborhood_bfs(&start, &degree, &config)?;
        let agree = run
            .result
            .elements
            .iter()
            .map(|e| &e.perm)
            .eq(result.elements.iter().map(|e| &e.perm));
        report.oracle_check = Some(if agree { "pass" } else { "fail" }.to_string());
    }
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn run_zd(n: usize, degree_text: &str) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let degree = parse_degree(degree_text, n)?;
    let zf = z_factorization(&degree)?;
    let mut report = RunReport::new("zd", n);
    report.degree = Some(degree.to_string());
    report.z = Some(ZJson {
        window: zf.element.window().to_vec(),
        word: zf.element.reduced_word().letters().to_vec(),
        factors: zf.factors.iter().map(|f| f.to_string()).collect(),
        length: zf.length,
    });
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn run_oracle(
    n: usize,
    degree_text: &str,
    start_text: Option<&str>,
    fast: bool,
    threads: usize,
) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let degree = parse_degree(degree_text, n)?;
    let start = start_text
        .map(|t| parse_element(t, n))
        .transpose()?
        .unwrap_or_else(|| AffinePerm::identity(n));
    let config = SearchConfig {
        level_zero_only: fast,
        threads,
        ..SearchConfig::default()
    };
    let run = neighborhood_bfs(&start, &degree, &config)?;
    let mut report = RunReport::new("oracle", n);
    report.degree = Some(degree.to_string());
    if !start.is_identity() {
        report.start = Some(ElementJson::of(&start));
    }
    report.neighborhood = Some(neighborhood_json(&run.result));
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn run_graph(n: usize, budget_text: &str, dot_path: &str) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let budget = parse_degree(budget_text, n)?;
    let slice = moment_graph_slice(n, &budget, &SearchConfig::default())?;
    let dot = render_dot(&slice);
    std::fs::write(dot_path, dot).map_err(|e| CliError {
        message: format!("cannot write {dot_path}: {e}"),
        exit_code: EXIT_USAGE,
    })?;
    let mut report = RunReport::new("graph", n);
    report.budget = Some(budget.to_string());
    report.graph = Some(GraphJson {
        vertices: slice.vertices.len(),
        edges: slice.edges.len(),
        dot_file: dot_path.to_string(),
    });
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Vertices carry their window as the node id and the reduced word as the
/// label; edges are labeled by their root.
pub fn render_dot(slice: &curvenbhd::oracle::MomentGraphSlice) -> String {
    let mut out = String::from("graph moment_graph {\n  node [shape=box];\n");
    for v in &slice.vertices {
        let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", v, v.reduced_word());
    }
    for (u, v, label) in &slice.edges {
        let _ = writeln!(out, "  \"{u}\" -- \"{v}\" [label=\"{label}\"];");
    }
    out.push_str("}\n");
    out
}

/// Sweep every degree with entry sum at most `max_degree_sum`, comparing the
/// closed form against the search; collects the failures with the first
/// counterexample chain each.
pub fn run_check(n: usize, max_degree_sum: i64, threads: usize) -> Result<RunReport, CliError> {
    let started = Instant::now();
    if max_degree_sum > curvenbhd::oracle::DEFAULT_BUDGET_SUM_CAP {
        return Err(CliError {
            message: format!(
                "sweep up to degree sum {max_degree_sum} exceeds the search cap {}",
                curvenbhd::oracle::DEFAULT_BUDGET_SUM_CAP
            ),
            exit_code: EXIT_RESOURCE,
        });
    }
    let config = SearchConfig {
        budget_sum_cap: max_degree_sum,
        threads,
        ..SearchConfig::default()
    };
    let id = AffinePerm::identity(n);
    let mut failures = Vec::new();
    let degrees = degrees_with_sum_at_most(n, max_degree_sum);
    for degree in &degrees {
        let formula = gamma_id(degree)?;
        let run = neighborhood_bfs(&id, degree, &config)?;
        let formula_set: Vec<&AffinePerm> = formula.elements.iter().map(|e| &e.perm).collect();
        let oracle_set: Vec<&AffinePerm> = run.result.elements.iter().map(|e| &e.perm).collect();
        if formula_set == oracle_set {
            continue;
        }
        let formula_only: Vec<ElementJson> = formula_set
            .iter()
            .filter(|p| !oracle_set.contains(*p))
            .map(|p| ElementJson::of(p))
            .collect();
        let oracle_only: Vec<&AffinePerm> = oracle_set
            .iter()
            .filter(|p| !formula_set.contains(*p))
            .copied()
            .collect();
        let counterexample_chain = oracle_only
            .first()
            .and_then(|p| run.chains.get(*p))
            .map(chain_json);
        failures.push(CheckFailureJson {
            degree: degree.to_string(),
            formula_only,
            oracle_only: oracle_only.iter().map(|p| ElementJson::of(p)).collect(),
            counterexample_chain,
        });
    }
    let mut report = RunReport::new("check", n);
    report.check = Some(CheckJson {
        max_degree_sum,
        degrees_checked: degrees.len(),
        degrees_passed: degrees.len() - failures.len(),
        failures,
    });
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// human-readable rendering

pub fn render_human(report: &RunReport) -> String {
    let mut out = String::new();
    if let Some(nbhd) = &report.neighborhood {
        let _ = writeln!(
            out,
            "n={} degree={} provenance={}{}",
            report.n,
            report.degree.as_deref().unwrap_or("-"),
            nbhd.provenance,
            nbhd.regime
                .as_deref()
                .map(|r| format!(" regime={r}"))
                .unwrap_or_default(),
        );
        if let Some(m) = nbhd.m {
            let _ = writeln!(out, "m={m}");
        }
        if let Some(z) = &nbhd.z_part {
            let _ = writeln!(
                out,
                "z-part: {} = {}",
                render_window(&z.window),
                render_word(&z.word)
            );
        }
        if let Some(factors) = &nbhd.z_factors {
            let _ = writeln!(out, "z-factors: [{}]", factors.join(", "));
        }
        let _ = writeln!(
            out,
            "count={} common_length={}",
            nbhd.count,
            nbhd.common_length
                .map(|l| l.to_string())
                .unwrap_or_else(|| "-".into())
        );
        for e in &nbhd.elements {
            let witness = e
                .witness
                .as_ref()
                .map(|w| format!("  via beta'={} {}", w.beta_prime, w.form))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} = {}{}",
                render_window(&e.window),
                render_word(&e.word),
                witness
            );
        }
    }
    if let Some(z) = &report.z {
        let _ = writeln!(
            out,
            "z_d for degree {}: {} = {}",
            report.degree.as_deref().unwrap_or("-"),
            render_window(&z.window),
            render_word(&z.word)
        );
        let _ = writeln!(out, "factors: [{}]", z.factors.join(", "));
        let _ = writeln!(out, "length: {}", z.length);
    }
    if let Some(graph) = &report.graph {
        let _ = writeln!(
            out,
            "moment graph slice: {} vertices, {} edges -> {}",
            graph.vertices, graph.edges, graph.dot_file
        );
    }
    if let Some(check) = &report.check {
        let failed: Vec<&str> = check.failures.iter().map(|f| f.degree.as_str()).collect();
        for degree in degrees_with_sum_at_most(report.n, check.max_degree_sum) {
            let text = degree.to_string();
            let verdict = if failed.contains(&text.as_str()) {
                "FAIL"
            } else {
                "PASS"
            };
            let _ = writeln!(out, "degree {text}: {verdict}");
        }
        for failure in &check.failures {
            let _ = writeln!(out, "counterexample at degree {}:", failure.degree);
            for e in &failure.formula_only {
                let _ = writeln!(out, "  formula only: {}", render_window(&e.window));
            }
            for e in &failure.oracle_only {
                let _ = writeln!(out, "  oracle only: {}", render_window(&e.window));
            }
            if let Some(chain) = &failure.counterexample_chain {
                let _ = writeln!(
                    out,
                    "  chain: start {} steps [{}]",
                    render_window(&chain.start.window),
                    chain.steps.join(", ")
                );
            }
        }
        let _ = writeln!(
            out,
            "checked {} degrees, {} passed, {} failed",
            check.degrees_checked,
            check.degrees_passed,
            check.failures.len()
        );
        let _ = writeln!(
            out,
            "{}",
            if check.failures.is_empty() {
                "PASS"
            } else {
                "FAIL"
            }
        );
    }
    if let Some(verdict) = &report.oracle_check {
        let _ = writeln!(out, "oracle check: {verdict}");
    }
    let _ = writeln!(out, "duration: {} ms", report.duration_ms);
    out
}

fn render_window(window: &[i64]) -> String {
    let parts: Vec<String> = window.iter().map(|w| w.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let parts: Vec<String> = word.iter().map(|l| format!("s{l}")).collect();
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_parsing() {
        assert_eq!(
            parse_degree("1,1,1", 3).unwrap(),
            Degree::new(vec![1, 1, 1]).unwrap()
        );
        assert!(parse_degree("1,1", 3).is_err());
        assert!(parse_degree("1,x,1", 3).is_err());
        assert!(parse_degree("1,-1,1", 3).is_err());
    }

    #[test]
    fn element_parsing() {
        let n = 3;
        assert_eq!(parse_element("id", n).unwrap(), AffinePerm::identity(n));
        let s0s1 = AffinePerm::simple(0, n).multiply(&AffinePerm::simple(1, n));
        assert_eq!(parse_element("s0 s1", n).unwrap(), s0s1);
        assert_eq!(
            parse_element("[2,1,3]", n).unwrap(),
            AffinePerm::simple(1, n)
        );
        assert!(parse_element("[2,1]", n).is_err());
        assert!(parse_element("[1,1,4]", n).is_err());
        assert!(parse_element("s3", n).is_err());
    }

    #[test]
    fn element_json_accepts_both_forms() {
        let n = 3;
        let window_form = serde_json::json!({"window": [2, 1, 3]});
        let word_form = serde_json::json!({"word": [1]});
        let both = serde_json::json!({"window": [2, 1, 3], "word": [1]});
        let mismatch = serde_json::json!({"window": [2, 1, 3], "word": [2]});
        let s1 = AffinePerm::simple(1, n);
        assert_eq!(element_from_json(&window_form, n).unwrap(), s1);
        assert_eq!(element_from_json(&word_form, n).unwrap(), s1);
        assert_eq!(element_from_json(&both, n).unwrap(), s1);
        assert!(element_from_json(&mismatch, n).is_err());
    }

    #[test]
    fn report_round_trips() {
        let report = run_gamma(3, "1,1,1", None, true, 1).unwrap();
        let json = report.to_json();
        let parsed: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(report.exit_code(), EXIT_OK);
        assert_eq!(report.oracle_check.as_deref(), Some("pass"));
    }

    #[test]
    fn exit_codes() {
        let err = CliError::from(Error::BudgetCap { sum: 30, cap: 8 });
        assert_eq!(err.exit_code, EXIT_RESOURCE);
        let err = CliError::from(Error::RankTooSmall(2));
        assert_eq!(err.exit_code, EXIT_USAGE);
    }
}
