//! Command-line front end. `run` parses arguments, executes one subcommand and
//! returns the exit code with the rendered output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};
use serde_json::{json, Value};

use crate::algebra::{Generator, Irrep};
use crate::coupling::{self, AlphaTable};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::report::{Report, Status};
use crate::scalar::json::{encode_hpoly, encode_matrix};
use crate::scalar::{HPoly, PolyMatrix};
use crate::suite;
use crate::tensor_ops::{self, OpSpaceContext, TensorOpFamily};
use crate::wigner_eckart;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Realization {
    Fermion,
    Boson,
    Rank1,
    Identity,
}

#[derive(Debug, Parser)]
#[command(name = "uhsl2", version, about = "Exact representation theory of the Jordanian quantum algebra U_h(sl(2))")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "UHSL2_FORMAT", value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Evaluate every polynomial in h at this rational value ("1/2", "0.25", "3").
    #[arg(long, global = true, value_parser = parse_rational)]
    pub h_eval: Option<BigRational>,

    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrices of the generators on W(j).
    Irrep {
        #[arg(long)]
        j: HalfInt,
        /// X, Y, H, expHX, expmHX, Zp, Zm or C; all of X, Y, H when omitted.
        #[arg(long)]
        gen: Option<String>,
    },
    /// Transition coefficients alpha_{k1,k2}^{m1,m2}.
    Alpha {
        #[arg(long)]
        j1: HalfInt,
        #[arg(long)]
        j2: HalfInt,
        #[arg(long, requires = "m2", allow_hyphen_values = true)]
        m1: Option<HalfInt>,
        #[arg(long, requires = "m1", allow_hyphen_values = true)]
        m2: Option<HalfInt>,
    },
    /// Clebsch-Gordan coefficients of U_h(sl(2)) next to those of sl(2).
    Cgc {
        #[arg(long)]
        j1: HalfInt,
        #[arg(long)]
        j2: HalfInt,
        #[arg(long)]
        j: Option<HalfInt>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<HalfInt>,
    },
    /// Decomposition of W(j1) (x) W(j2) into irreducibles, certified.
    Decompose {
        #[arg(long)]
        j1: HalfInt,
        #[arg(long)]
        j2: HalfInt,
    },
    /// Components and verification of a concrete tensor operator family.
    Tensorop {
        #[arg(long, value_enum)]
        realization: Realization,
        #[arg(long)]
        j: Option<HalfInt>,
    },
    /// Reduced matrix element and the matrix-element table of a family.
    WignerEckart {
        #[arg(long, value_enum)]
        realization: Realization,
        #[arg(long)]
        j2: HalfInt,
        #[arg(long)]
        j: Option<HalfInt>,
    },
    /// Run every verification suite for highest weights up to MAX_J.
    Verify {
        #[arg(long, default_value = "2")]
        max_j: HalfInt,
    },
}

/// `"a/b"`, an integer, or a finite decimal.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("expected a rational like 1/2, 3 or 0.25, got {s:?}");
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str_radix(n.trim(), 10).map_err(|_| bad())?;
        let d = BigInt::from_str_radix(d.trim(), 10).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let whole = BigInt::from_str_radix(if int.is_empty() || int == "-" { "0" } else { int }, 10).map_err(|_| bad())?;
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let f = BigInt::from_str_radix(frac, 10).map_err(|_| bad())?;
        let f = if neg { -f } else { f };
        return Ok(BigRational::new(whole * &scale + f, scale));
    }
    BigInt::from_str_radix(s, 10).map(BigRational::from_integer).map_err(|_| bad())
}

/// Rendered output of a command.
struct Doc {
    pretty: String,
    json: Value,
    rows: Vec<Vec<String>>,
    ok: bool,
}

impl Doc {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for r in &self.rows {
                    w.write_record(r).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
            }
        }
    }
}

struct Ctx {
    h_eval: Option<BigRational>,
}

impl Ctx {
    fn poly(&self, p: &HPoly) -> HPoly {
        match &self.h_eval {
            Some(v) => HPoly::constant(p.eval(v)),
            None => p.clone(),
        }
    }

    fn matrix(&self, m: &PolyMatrix) -> PolyMatrix {
        match &self.h_eval {
            Some(v) => m.eval_h(v),
            None => m.clone(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let ctx = Ctx { h_eval: cli.h_eval.clone() };
    let doc = match execute(&cli.command, &ctx) {
        Ok(d) => d,
        Err(e) => return (EXIT_USAGE, format!("error: {e}\n")),
    };
    let text = doc.render(cli.format);
    let code = if doc.ok { EXIT_OK } else { EXIT_FAILURE };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => (code, String::new()),
            Err(e) => (EXIT_USAGE, format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => (code, text),
    }
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<Doc> {
    match cmd {
        Command::Irrep { j, gen } => irrep_doc(*j, gen.as_deref(), ctx),
        Command::Alpha { j1, j2, m1, m2 } => alpha_doc(*j1, *j2, m1.zip(*m2), ctx),
        Command::Cgc { j1, j2, j, m } => cgc_doc(*j1, *j2, *j, *m, ctx),
        Command::Decompose { j1, j2 } => decompose_doc(*j1, *j2),
        Command::Tensorop { realization, j } => tensorop_doc(*realization, *j, ctx),
        Command::WignerEckart { realization, j2, j } => wigner_eckart_doc(*realization, *j2, *j, ctx),
        Command::Verify { max_j } => verify_doc(*max_j),
    }
}

fn check_j(label: &str, j: HalfInt) -> Result<()> {
    if j.twice() < 0 {
        return Err(Error::Domain(format!("{label} must be non-negative, got {j}")));
    }
    Ok(())
}

fn irrep_matrix(irrep: &Irrep, name: &str) -> Result<PolyMatrix> {
    Ok(match name {
        "Zp" | "zp" | "Z+" => irrep.sl2.zp.clone(),
        "Zm" | "zm" | "Z-" => irrep.sl2.zm.clone(),
        "C" | "casimir" => irrep.rep.casimir()?,
        other => irrep.rep.generator(other.parse::<Generator>()?).into_owned(),
    })
}

fn matrix_rows(label: &str, m: &PolyMatrix, rows: &mut Vec<Vec<String>>) {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            rows.push(vec![label.to_string(), r.to_string(), c.to_string(), m.get(r, c).to_string()]);
        }
    }
}

fn irrep_doc(j: HalfInt, gen: Option<&str>, ctx: &Ctx) -> Result<Doc> {
    check_j("j", j)?;
    let irrep = Irrep::new(j)?;
    let names: Vec<&str> = match gen {
        Some(g) => vec![g],
        None => vec!["X", "Y", "H"],
    };
    let mut pretty = String::new();
    let mut gens = serde_json::Map::new();
    let mut rows = vec![vec!["generator".into(), "row".into(), "col".into(), "value".into()]];
    for name in names {
        let m = ctx.matrix(&irrep_matrix(&irrep, name)?);
        pretty.push_str(&format!("{name} on W({j}):\n{m}\n"));
        gens.insert(name.to_string(), serde_json::to_value(encode_matrix(&m)).expect("serializable"));
        matrix_rows(name, &m, &mut rows);
    }
    Ok(Doc { pretty, json: json!({ "j": j, "generators": gens }), rows, ok: true })
}

fn poly_json(p: &HPoly) -> Value {
    json!({ "text": p.to_string(), "terms": encode_hpoly(p) })
}

fn align(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows.iter().map(Vec::len).max().unwrap_or(0))
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(i, s)| format!("{s:<w$}", w = widths[i])).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn alpha_doc(j1: HalfInt, j2: HalfInt, fixed: Option<(HalfInt, HalfInt)>, ctx: &Ctx) -> Result<Doc> {
    check_j("j1", j1)?;
    check_j("j2", j2)?;
    if let Some((m1, m2)) = fixed {
        if !m1.is_weight_of(j1) || !m2.is_weight_of(j2) {
            return Err(Error::Domain(format!("({m1}, {m2}) is not a weight pair of ({j1}, {j2})")));
        }
    }
    let table = AlphaTable::cached(j1, j2)?;
    let mut rows = vec![vec!["k1".into(), "k2".into(), "m1".into(), "m2".into(), "alpha".into()]];
    let mut items = Vec::new();
    for m1 in j1.weights() {
        for m2 in j2.weights() {
            if fixed.is_some_and(|f| f != (m1, m2)) {
                continue;
            }
            for k1 in j1.weights() {
                for k2 in j2.weights() {
                    let a = ctx.poly(table.get(k1, k2, m1, m2));
                    if a.is_zero() {
                        continue;
                    }
                    rows.push(vec![k1.to_string(), k2.to_string(), m1.to_string(), m2.to_string(), a.to_string()]);
                    items.push(json!({ "k1": k1, "k2": k2, "m1": m1, "m2": m2, "value": poly_json(&a) }));
                }
            }
        }
    }
    let pretty = format!("alpha for W({j1}) (x) W({j2}), nonzero entries:\n{}", align(&rows));
    Ok(Doc { pretty, json: json!({ "j1": j1, "j2": j2, "alpha": items }), rows, ok: true })
}

fn cgc_doc(j1: HalfInt, j2: HalfInt, j: Option<HalfInt>, m: Option<HalfInt>, ctx: &Ctx) -> Result<Doc> {
    check_j("j1", j1)?;
    check_j("j2", j2)?;
    let js: Vec<HalfInt> = match j {
        Some(j) if !HalfInt::triangle(j1, j2, j) => return Err(Error::SelectionRule { j1, j2, j }),
        Some(j) => vec![j],
        None => HalfInt::coupled_range(j1, j2).collect(),
    };
    let mut rows = vec![vec!["j".into(), "m".into(), "k1".into(), "k2".into(), "uh_cgc".into(), "sl2_cgc".into()]];
    let mut items = Vec::new();
    for j in js {
        if let Some(m) = m {
            if !m.is_weight_of(j) {
                return Err(Error::Domain(format!("m = {m} is not a weight of j = {j}")));
            }
        }
        for mm in j.weights().filter(|w| m.is_none_or(|x| x == *w)) {
            for k1 in j1.weights() {
                for k2 in j2.weights() {
                    let u = ctx.poly(&coupling::uh_cgc(j1, j2, j, k1, k2, mm)?);
                    if u.is_zero() {
                        continue;
                    }
                    let s = if k1 + k2 == mm { coupling::sl2_cgc(j1, j2, j, k1, k2) } else { Default::default() };
                    rows.push(vec![j.to_string(), mm.to_string(), k1.to_string(), k2.to_string(), u.to_string(), s.to_string()]);
                    items.push(json!({
                        "j": j, "m": mm, "k1": k1, "k2": k2,
                        "uh_cgc": poly_json(&u),
                        "sl2_cgc": poly_json(&HPoly::constant(s)),
                    }));
                }
            }
        }
    }
    let pretty = format!("Clebsch-Gordan coefficients for W({j1}) (x) W({j2}), nonzero entries:\n{}", align(&rows));
    Ok(Doc { pretty, json: json!({ "j1": j1, "j2": j2, "coefficients": items }), rows, ok: true })
}

fn report_rows(stage: &str, r: &Report, rows: &mut Vec<Vec<String>>) {
    for c in &r.checks {
        rows.push(vec![stage.to_string(), r.suite.clone(), c.name.clone(), c.status.to_string(), c.detail.clone()]);
    }
}

fn report_header() -> Vec<String> {
    ["stage", "suite", "check", "status", "detail"].iter().map(|s| s.to_string()).collect()
}

fn decompose_doc(j1: HalfInt, j2: HalfInt) -> Result<Doc> {
    check_j("j1", j1)?;
    check_j("j2", j2)?;
    let basis = coupling::coupled_basis(j1, j2)?;
    let report = coupling::verify_decomposition(j1, j2)?;
    let summary = basis.summary();
    let mut rows = vec![report_header()];
    report_rows("decompose", &report, &mut rows);
    let parts: Vec<Value> = basis.blocks.iter().map(|b| json!({ "j": b.j, "multiplicity": 1 })).collect();
    let pretty = format!("{summary}\n\n{report}");
    Ok(Doc {
        pretty,
        json: json!({ "j1": j1, "j2": j2, "summary": summary, "decomposition": parts, "report": report }),
        rows,
        ok: report.passed(),
    })
}

fn families_for(realization: Realization, j: Option<HalfInt>) -> Result<Vec<TensorOpFamily>> {
    let need_j = |default: HalfInt| -> Result<HalfInt> {
        let j = j.unwrap_or(default);
        check_j("j", j)?;
        Ok(j)
    };
    Ok(match realization {
        Realization::Fermion => {
            let f = tensor_ops::fermion_realization()?;
            vec![f.first, f.second]
        }
        Realization::Boson => {
            let j = need_j(HalfInt::HALF)?;
            let mut v = vec![tensor_ops::boson_raising(j)?];
            if j.twice() > 0 {
                v.push(tensor_ops::boson_lowering(j)?);
            }
            v
        }
        Realization::Rank1 => vec![tensor_ops::rank1_generators(need_j(HalfInt::ONE)?)?],
        Realization::Identity => {
            let j = need_j(HalfInt::ZERO)?;
            vec![tensor_ops::identity_family(OpSpaceContext::endo(Arc::new(Irrep::new(j)?.rep)))]
        }
    })
}

fn tensorop_doc(realization: Realization, j: Option<HalfInt>, ctx: &Ctx) -> Result<Doc> {
    let fams = families_for(realization, j)?;
    let mut reports = Vec::new();
    if realization == Realization::Fermion {
        reports.push(tensor_ops::verify_fermion_structure(&tensor_ops::fermion_realization()?));
    }
    if realization == Realization::Boson {
        reports.push(tensor_ops::verify_boson_actions(fams[0].context.source.blocks[0].j)?);
    }
    let mut pretty = String::new();
    let mut fam_json = Vec::new();
    let mut rows = vec![vec!["family".into(), "m".into(), "row".into(), "col".into(), "value".into()]];
    for fam in &fams {
        reports.push(tensor_ops::verify_tensor_operator(fam)?);
        reports.push(tensor_ops::verify_classical_limit(fam)?);
        pretty
            .push_str(&format!("{} (rank {}): {} -> {}\n", fam.name, fam.rank, fam.context.source.name, fam.context.target.name));
        let mut comps = Vec::new();
        for (m, c) in fam.rank.weights().zip(&fam.components) {
            let c = ctx.matrix(c);
            pretty.push_str(&format!("t_{{{},{m}}} =\n{c}\n", fam.rank));
            for r in 0..c.rows() {
                for k in 0..c.cols() {
                    rows.push(vec![fam.name.clone(), m.to_string(), r.to_string(), k.to_string(), c.get(r, k).to_string()]);
                }
            }
            comps.push(json!({ "m": m, "matrix": encode_matrix(&c) }));
        }
        fam_json.push(json!({ "name": fam.name, "rank": fam.rank, "components": comps }));
    }
    let ok = reports.iter().all(Report::passed);
    rows.push(Vec::new());
    rows.push(report_header());
    for r in &reports {
        report_rows("tensorop", r, &mut rows);
        pretty.push_str(&format!("{r}\n"));
    }
    Ok(Doc { pretty, json: json!({ "families": fam_json, "reports": reports }), rows, ok })
}

/// Families mapping `W(j2)` into `W(j)` for the chosen realization.
fn we_families(realization: Realization, j2: HalfInt, j: Option<HalfInt>) -> Result<Vec<(TensorOpFamily, HalfInt)>> {
    check_j("j2", j2)?;
    let half = HalfInt::HALF;
    Ok(match realization {
        Realization::Fermion => {
            let target = j.unwrap_or(if j2 == half { HalfInt::ZERO } else { half });
            let f = tensor_ops::fermion_realization()?;
            let b = &f.fock.blocks;
            let mut out = Vec::new();
            for fam in [&f.first, &f.second] {
                for zero in &b[1..] {
                    match (j2.twice(), target.twice()) {
                        (1, 0) => out.push((fam.restrict(&b[0], zero), target)),
                        (0, 1) => out.push((fam.restrict(zero, &b[0]), target)),
                        _ => {
                            return Err(Error::Domain(format!(
                                "fermion families map W(1/2) and W(0) into each other, not W({j2}) -> W({target})"
                            )))
                        }
                    }
                }
            }
            out
        }
        Realization::Boson => {
            let target = j.unwrap_or(j2 + half);
            if target == j2 + half {
                vec![(tensor_ops::boson_raising(j2)?, target)]
            } else if target.twice() >= 0 && target == j2 - half {
                vec![(tensor_ops::boson_lowering(j2)?, target)]
            } else {
                return Err(Error::Domain(format!("boson families map W({j2}) to W({j2} +- 1/2), not W({target})")));
            }
        }
        Realization::Rank1 | Realization::Identity => {
            let target = j.unwrap_or(j2);
            if target != j2 {
                return Err(Error::Domain(format!("this family maps W({j2}) to itself, not to W({target})")));
            }
            families_for(realization, Some(j2))?.into_iter().map(|f| (f, target)).collect()
        }
    })
}

fn wigner_eckart_doc(realization: Realization, j2: HalfInt, j: Option<HalfInt>, ctx: &Ctx) -> Result<Doc> {
    let fams = we_families(realization, j2, j)?;
    let mut pretty = String::new();
    let mut rows =
        vec![vec!["family".into(), "m".into(), "m1".into(), "m2".into(), "element".into(), "I*bra_cgc".into(), "match".into()]];
    let mut items = Vec::new();
    let mut ok = true;
    for (fam, j) in &fams {
        let j = *j;
        let j1 = fam.rank;
        let report = wigner_eckart::verify_wigner_eckart(fam, j2, j)?;
        ok &= report.passed();
        let reduced = match wigner_eckart::reduced_matrix_element(fam, j2, j) {
            Ok(red) => red,
            Err(Error::SelectionRule { .. }) => {
                pretty.push_str(&format!("{}: selection rule forbids ({j1}, {j2}) -> {j}; I is undefined\n\n", fam.name));
                items.push(json!({ "family": fam.name, "j1": j1, "j2": j2, "j": j, "outcome": "selection rule" }));
                continue;
            }
            Err(e) => {
                ok = false;
                pretty.push_str(&format!("{}: {e}\n\n", fam.name));
                items.push(
                    json!({ "family": fam.name, "j1": j1, "j2": j2, "j": j, "outcome": "inconsistent", "error": e.to_string() }),
                );
                continue;
            }
        };
        let table = AlphaTable::cached(j1, j2)?;
        let i = &reduced.value;
        let mut elements = Vec::new();
        for m in j.weights() {
            for m1 in j1.weights() {
                for m2 in j2.weights() {
                    let e = wigner_eckart::matrix_element(fam, j, m, m1, j2, m2)?;
                    let rhs = i * &wigner_eckart::bra_cgc(&table, j, m, m1, m2);
                    if e.is_zero() && rhs.is_zero() {
                        continue;
                    }
                    let matches = e == rhs;
                    let (e, rhs) = (ctx.poly(&e), ctx.poly(&rhs));
                    rows.push(vec![
                        fam.name.clone(),
                        m.to_string(),
                        m1.to_string(),
                        m2.to_string(),
                        e.to_string(),
                        rhs.to_string(),
                        matches.to_string(),
                    ]);
                    elements.push(json!({ "m": m, "m1": m1, "m2": m2, "element": poly_json(&e), "match": matches }));
                }
            }
        }
        let shown = ctx.poly(i);
        pretty.push_str(&format!(
            "{}: I({j1} {j2} {j}) = {shown}  (h-degree {}, {} channels agree)\n{report}\n",
            fam.name,
            reduced.h_degree().map_or("-".into(), |d| d.to_string()),
            reduced.channels.len()
        ));
        items.push(json!({
            "family": fam.name, "j1": j1, "j2": j2, "j": j, "outcome": "ok",
            "reduced": poly_json(&shown),
            "h_degree": reduced.h_degree(),
            "elements": elements,
            "report": report,
        }));
    }
    pretty.push_str("nonzero matrix elements:\n");
    pretty.push_str(&align(&rows));
    Ok(Doc { pretty, json: json!({ "results": items }), rows, ok })
}

fn verify_doc(max_j: HalfInt) -> Result<Doc> {
    check_j("max-j", max_j)?;
    let start = std::time::Instant::now();
    let run = suite::verify_all(max_j);
    let elapsed = start.elapsed().as_millis() as u64;
    let mut pretty = String::new();
    let mut rows = vec![report_header()];
    let mut stages = Vec::new();
    for (name, reports) in &run.stages {
        pretty.push_str(&format!("#### {name}\n\n"));
        for r in reports {
            pretty.push_str(&format!("{r}\n"));
            report_rows(name, r, &mut rows);
        }
        stages.push(json!({ "name": name, "reports": reports }));
    }
    let counts = json!({
        "pass": run.count(Status::Pass),
        "fail": run.count(Status::Fail),
        "flagged": run.count(Status::Flagged),
        "skip": run.count(Status::Skip),
    });
    let verdict = if run.passed() { "ALL PASS" } else { "FAILURES" };
    pretty.push_str(&format!(
        "{verdict}: {} pass, {} fail, {} flagged, {} skip (max j = {max_j}, {elapsed} ms)\n",
        run.count(Status::Pass),
        run.count(Status::Fail),
        run.count(Status::Flagged),
        run.count(Status::Skip)
    ));
    Ok(Doc {
        pretty,
        json: json!({ "max_j": max_j, "passed": run.passed(), "counts": counts, "stages": stages, "wall_time_ms": elapsed }),
        rows,
        ok: run.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        run(std::iter::once("uhsl2").chain(args.iter().copied()))
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("0.25").unwrap(), BigRational::new(1.into(), 4.into()));
        assert_eq!(parse_rational("-1.5").unwrap(), BigRational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decompose_two_halves() {
        let (code, out) = run_args(&["decompose", "--j1", "1/2", "--j2", "1/2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("1 ⊕ 0\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["irrep", "--j", "abc"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["irrep", "--j", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["tensorop", "--realization", "boson", "--j", "0"]).0, EXIT_OK);
        assert_eq!(run_args(&["wigner-eckart", "--realization", "boson", "--j2", "1", "--j", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn classical_y_at_h_zero() {
        let (code, out) = run_args(&["irrep", "--j", "1", "--gen", "Y", "--h-eval", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("Y,1,0,1*sqrt(2)"));
        assert!(out.contains("Y,0,1,0\n"));
    }

    #[test]
    fn alpha_csv_value() {
        let (code, out) = run_args(&["alpha", "--j1", "1/2", "--j2", "1/2", "--m1", "1/2", "--m2", "-1/2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("1/2,1/2,1/2,-1/2,-(1/2)*h"), "{out}");
    }

    #[test]
    fn selection_rule_outcome() {
        let (code, out) = run_args(&["wigner-eckart", "--realization", "rank1", "--j2", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("selection rule"));
    }
}
