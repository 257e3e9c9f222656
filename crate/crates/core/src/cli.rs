//! Batch front end. [`run`] parses arguments, dispatches, and returns the
//! exit code with the full report so that output is deterministic and
//! testable; the binary only prints it.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage, parse or input error.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::action::{invariant_space, is_unipotent_invariant, torus_weight, TorusWeight, DEFAULT_MONOMIAL_CAP};
use crate::format::{parse_quiver_file, write_quiver_file, QuiverFile};
use crate::poly::Polynomial;
use crate::quiver::{Quiver, DEFAULT_PATHWAY_CAP};
use crate::reflect::{are_isomorphic, gr, induced_filtration_plus, reflect_minus, reflect_plus, FilteredConcreteRep, Isomorphism};
use crate::repspace::GeneralRep;
use crate::semiinv::{
    bideterminant, dw_generators, dz_example, dz_generators, is_block_standard, tag_products, Bitableau, DwProblem,
    DzProblem, Generators, VSpec,
};
use crate::springer::lab_report;

#[derive(Parser, Debug)]
#[command(name = "quiverlab", version, about = "Exact computations with filtered quiver representations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Degree bound for invariant searches.
    #[arg(long, global = true, default_value_t = 2)]
    degree: u32,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials for isomorphism searches.
    #[arg(long, global = true, default_value_t = crate::reflect::DEFAULT_TRIALS)]
    trials: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on monomials (invariant searches) or paths (pathway enumeration).
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List pathways between every pair of vertices.
    Pathways { file: String },
    /// Euler form, its symmetrization and the dimension-vector reflections.
    Euler { file: String },
    /// Apply a reflection functor to the representation given by `map` lines.
    Reflect {
        file: String,
        #[arg(long, conflicts_with = "source")]
        sink: Option<usize>,
        #[arg(long)]
        source: Option<usize>,
    },
    /// Associated graded of a filtered representation.
    Gr {
        file: String,
        /// Also compare reflection of gr with gr of the reflection at this sink.
        #[arg(long)]
        sink: Option<usize>,
    },
    /// Derksen-Weyman determinant and generators (needs `alpha` lines).
    Dw { file: String },
    /// Domokos-Zubkov determinant and generators.
    Dz {
        /// Quiver file for the automatic block matrix over all vertices.
        file: Option<String>,
        /// A built-in block matrix: jordan1, jordan2 or single.
        #[arg(long)]
        example: Option<String>,
        /// Matrix size for built-in examples.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Longest pathway used by the automatic block matrix.
        #[arg(long, default_value_t = 2)]
        length: usize,
    },
    /// Evaluate a bitableau on products of general matrices, e.g. "2|1@0; 1 2|1 2@1,0".
    Bidet {
        file: String,
        #[arg(long)]
        tableau: String,
    },
    /// Test a polynomial for unipotent invariance.
    InvariantCheck {
        file: String,
        #[arg(long)]
        poly: String,
    },
    /// Dimension of the invariants of degree at most `--degree`.
    InvariantDim { file: String },
    /// Randomized and symbolic checks of the spectral projectors.
    SpringerLab {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Run the built-in checks of the worked examples.
    Verify,
}

/// Failure with an exit code.
struct Failure(i32, String);

type Outcome = std::result::Result<(i32, Value, String), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(2, format!("error: {e}\n"))
}

fn load(path: &str) -> std::result::Result<QuiverFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    parse_quiver_file(&text).map_err(|e| usage(format!("{path}: {e}")))
}

fn vertex(q: &Quiver, v: usize) -> std::result::Result<usize, Failure> {
    if v == 0 || v > q.vertex_count() {
        Err(usage(format!("vertex {v} does not exist")))
    } else {
        Ok(v - 1)
    }
}

fn weight_text(w: &TorusWeight) -> String {
    match w {
        TorusWeight::Character(c) => format!("character {c:?}"),
        TorusWeight::PerIndex(m) => {
            let parts: Vec<String> = m.iter().map(|((v, i), e)| format!("({},{i}):{e}", v + 1)).collect();
            format!("per-index [{}]", parts.join(" "))
        }
        TorusWeight::Heterogeneous => "not homogeneous".into(),
    }
}

fn generators_report(g: &Generators, q: &Quiver, beta: &[usize]) -> (Value, String) {
    let mut text = format!("determinant: {}\n{} generators:\n", g.determinant, g.generators.len());
    let mut items = Vec::new();
    for p in &g.generators {
        let w = torus_weight(p, q, beta).map(|w| weight_text(&w)).unwrap_or_else(|e| e.to_string());
        let d = p.degree().unwrap_or(0);
        let _ = writeln!(text, "  {p}    [degree {d}, {w}]");
        items.push(json!({"polynomial": p.to_string(), "degree": d, "weight": w}));
    }
    (json!({"determinant": g.determinant.to_string(), "generators": items}), text)
}

fn pathways(c: &Common, file: &str) -> Outcome {
    let f = load(file)?;
    let q = &f.quiver;
    let cap = c.cap.unwrap_or(DEFAULT_PATHWAY_CAP);
    let ways = q.enumerate_pathways(cap).map_err(usage)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for ((t, h), ps) in &ways {
        let names: Vec<String> = ps.iter().map(|p| q.path_name(p)).collect();
        let plural = if ps.len() == 1 { "pathway" } else { "pathways" };
        let _ = writeln!(text, "{} {plural} ({},{}): {}", ps.len(), q.label(*t), q.label(*h), names.join(", "));
        items.push(json!({"tail": q.label(*t), "head": q.label(*h), "count": ps.len(), "pathways": names}));
    }
    let two = ways.values().all(|ps| ps.len() <= 2);
    let _ = writeln!(text, "at most two pathways: {two}");
    Ok((0, json!({"pathways": items, "at_most_two": two}), text))
}

fn euler(file: &str) -> Outcome {
    let f = load(file)?;
    let q = &f.quiver;
    let beta: Vec<i64> = f.beta.iter().map(|&b| b as i64).collect();
    let alpha: Vec<i64> = f.alpha.as_ref().map_or(beta.clone(), |a| a.iter().map(|&x| x as i64).collect());
    let ab = q.euler_form(&alpha, &beta).map_err(usage)?;
    let ba = q.euler_form(&beta, &alpha).map_err(usage)?;
    let sym = q.symmetrized_form(&alpha, &beta).map_err(usage)?;
    let mut text = format!("alpha = {alpha:?}\nbeta = {beta:?}\n<alpha,beta> = {ab}\n<beta,alpha> = {ba}\n(alpha,beta) = {sym}\n");
    let mut sigmas = Vec::new();
    for v in 0..q.vertex_count() {
        if let Ok(s) = q.sigma(v, &beta) {
            let _ = writeln!(text, "sigma_{}(beta) = {s:?}", q.label(v));
            sigmas.push(json!({"vertex": q.label(v), "image": s}));
        }
    }
    Ok((0, json!({"alpha": alpha, "beta": beta, "euler": ab, "euler_reversed": ba, "symmetrized": sym, "sigma": sigmas}), text))
}

fn iso_text(i: &Isomorphism) -> &'static str {
    match i {
        Isomorphism::Yes(_) => "yes",
        Isomorphism::No(_) => "no",
        Isomorphism::Inconclusive => "inconclusive",
    }
}

fn reflect(c: &Common, file: &str, sink: Option<usize>, source: Option<usize>) -> Outcome {
    let f = load(file)?;
    let w = f.rep().ok_or_else(|| usage("the file needs a `map` line for every arrow"))?;
    let (out, back) = match (sink, source) {
        (Some(v), None) => {
            let i = vertex(&f.quiver, v)?;
            let out = reflect_plus(&w, i).map_err(usage)?;
            let back = reflect_minus(&out, i).map_err(usage)?;
            (out, back)
        }
        (None, Some(v)) => {
            let i = vertex(&f.quiver, v)?;
            let out = reflect_minus(&w, i).map_err(usage)?;
            let back = reflect_plus(&out, i).map_err(usage)?;
            (out, back)
        }
        _ => return Err(usage("give exactly one of --sink or --source")),
    };
    let iso = are_isomorphic(&back, &w, c.seed, c.trials);
    let result = QuiverFile {
        quiver: out.quiver.clone(),
        beta: out.beta.clone(),
        filtration: None,
        alpha: None,
        maps: Some(out.maps.clone()),
        vmaps: None,
    };
    let body = write_quiver_file(&result);
    let text = format!("{body}# reflecting back gives an isomorphic representation: {}\n", iso_text(&iso));
    Ok((0, json!({"result": body, "beta": out.beta, "round_trip_isomorphic": iso_text(&iso)}), text))
}

fn graded(file: &str, sink: Option<usize>) -> Outcome {
    let f = load(file)?;
    let w = f.rep().ok_or_else(|| usage("the file needs a `map` line for every arrow"))?;
    let x = FilteredConcreteRep::new(w, f.filtration_or_trivial()).map_err(usage)?;
    let g = gr(&x).map_err(usage)?;
    let mut text = String::new();
    let mut levels = Vec::new();
    for (l, rep) in g.levels.iter().enumerate() {
        let _ = writeln!(text, "level {}: dims {:?}", l + 1, rep.beta);
        let maps: Vec<String> = rep.maps.iter().map(ToString::to_string).collect();
        for (a, m) in f.quiver.arrows().iter().zip(&maps) {
            let _ = writeln!(text, "  {}: {m}", a.id);
        }
        levels.push(json!({"dims": rep.beta, "maps": maps}));
    }
    let mut value = json!({"levels": levels});
    if let Some(v) = sink {
        let i = vertex(&f.quiver, v)?;
        let lhs = g.reflect_plus(i).map_err(usage)?.dims();
        let rhs = gr(&induced_filtration_plus(&x, i).map_err(usage)?).map_err(usage)?.dims();
        let _ = writeln!(text, "reflection of gr: {lhs:?}\ngr of reflection: {rhs:?}\nsame dimension data: {}", lhs == rhs);
        value["reflection_of_gr"] = json!(lhs);
        value["gr_of_reflection"] = json!(rhs);
    }
    Ok((0, value, text))
}

fn dw(file: &str) -> Outcome {
    let f = load(file)?;
    let alpha = f.alpha.clone().ok_or_else(|| usage("the file needs `alpha` lines"))?;
    let v = f.vmaps.clone().map_or(VSpec::Generic, VSpec::Specialized);
    let p = DwProblem::new(&f.quiver, &f.beta, &alpha, v).map_err(usage)?;
    let g = dw_generators(&p).map_err(usage)?;
    let (value, text) = generators_report(&g, &f.quiver, &f.beta);
    Ok((0, value, text))
}

fn dz(c: &Common, file: Option<&str>, example: Option<&str>, n: usize, length: usize) -> Outcome {
    let p: DzProblem = match (file, example) {
        (None, Some(name)) => dz_example(name, n).map_err(usage)?,
        (Some(path), None) => {
            let f = load(path)?;
            let all: Vec<usize> = (0..f.quiver.vertex_count()).collect();
            DzProblem::auto(&f.quiver, &f.beta, &all, length, c.cap.unwrap_or(DEFAULT_PATHWAY_CAP)).map_err(usage)?
        }
        _ => return Err(usage("give either a quiver file or --example")),
    };
    let g = dz_generators(&p).map_err(usage)?;
    let (value, text) = generators_report(&g, &p.quiver, &p.beta);
    Ok((0, value, text))
}

fn space(f: &QuiverFile) -> std::result::Result<GeneralRep, Failure> {
    GeneralRep::new(&f.quiver, &f.beta, f.filtration.as_ref()).map_err(usage)
}

fn bidet(file: &str, tableau: &str) -> Outcome {
    let f = load(file)?;
    let t = Bitableau::parse(tableau).map_err(usage)?;
    let rep = space(&f)?;
    let products = tag_products(&t, &rep).map_err(usage)?;
    let value = bideterminant(&t, &products).map_err(usage)?;
    let standard = is_block_standard(&t);
    let mut text = format!("value: {value}\nblock standard: {standard}\n");
    let mut out = json!({"value": value.to_string(), "block_standard": standard});
    if let Some(filt) = &f.filtration {
        let inv = is_unipotent_invariant(&value, &f.quiver, &f.beta, Some(filt)).map_err(usage)?;
        let _ = writeln!(text, "unipotent invariant: {}", inv.invariant);
        out["invariant"] = json!(inv.invariant);
    }
    Ok((0, out, text))
}

fn invariant_check(file: &str, expr: &str) -> Outcome {
    let f = load(file)?;
    let p = Polynomial::parse(expr).map_err(usage)?;
    let rep = space(&f)?;
    let known: BTreeSet<_> = rep.variable_set();
    if let Some(v) = p.variables().into_iter().find(|v| !known.contains(v)) {
        return Err(usage(format!("{v} is not a coordinate of this representation space")));
    }
    let report = is_unipotent_invariant(&p, &f.quiver, &f.beta, f.filtration.as_ref()).map_err(usage)?;
    let weight = torus_weight(&p, &f.quiver, &f.beta).map_err(usage)?;
    let mut text = format!(
        "polynomial: {p}\nunipotent invariant: {}\nroots checked: {}\ntorus weight: {}\n",
        report.invariant,
        report.roots_checked,
        weight_text(&weight)
    );
    let mut value = json!({
        "polynomial": p.to_string(),
        "invariant": report.invariant,
        "roots_checked": report.roots_checked,
        "weight": weight_text(&weight),
    });
    if let Some((root, image)) = &report.witness {
        let _ = writeln!(text, "witness: root ({}, {}, {}) moves it to {image}", f.quiver.label(root.vertex), root.i, root.j);
        value["witness"] = json!({"vertex": f.quiver.label(root.vertex), "i": root.i, "j": root.j, "image": image.to_string()});
    }
    Ok((i32::from(!report.invariant), value, text))
}

fn invariant_dim(c: &Common, file: &str) -> Outcome {
    let f = load(file)?;
    let cap = c.cap.unwrap_or(DEFAULT_MONOMIAL_CAP);
    let s = invariant_space(&f.quiver, &f.beta, f.filtration.as_ref(), c.degree, cap).map_err(usage)?;
    let rep = space(&f)?;
    let diag = crate::action::monomial_count(rep.diagonal_variables().len(), c.degree);
    let mut text = format!(
        "degree <= {}: invariant dimension {} ({} monomials considered)\ndiagonal-only polynomials: {diag}\n",
        c.degree,
        s.dim(),
        s.monomials_considered
    );
    for b in &s.basis {
        let _ = writeln!(text, "  {b}");
    }
    let basis: Vec<String> = s.basis.iter().map(ToString::to_string).collect();
    Ok((0, json!({"degree": c.degree, "dimension": s.dim(), "diagonal_count": diag, "basis": basis}), text))
}

fn springer_lab(c: &Common, n: usize, samples: usize) -> Outcome {
    if !(1..=8).contains(&n) {
        return Err(usage("--n must be between 1 and 8"));
    }
    let r = lab_report(n, samples, c.seed).map_err(usage)?;
    let mut text = format!("n = {n}, {samples} samples, seed {}\n", c.seed);
    for p in &r.properties {
        let _ = writeln!(text, "  {:<34} {}/{}", p.property, p.passed, p.total);
    }
    for line in &r.sample_invariants {
        let _ = writeln!(text, "  {line}");
    }
    for line in &r.l_determinants {
        let _ = writeln!(text, "  {line}");
    }
    if !r.solver_residuals.is_empty() {
        let nonzero = r.solver_residuals.iter().filter(|s| *s != "0").count();
        let _ = writeln!(text, "  symbolic solver residuals: {} entries, {nonzero} nonzero", r.solver_residuals.len());
    }
    let value = serde_json::to_value(&r).map_err(usage)?;
    Ok((i32::from(!r.all_pass()), value, text))
}

fn verify() -> Outcome {
    let results = crate::verify::run_all();
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "[{}] {:>2}. {}: {}", if r.passed { "pass" } else { "FAIL" }, r.id, r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(text, "{} of {} checks passed", results.len() - failed, results.len());
    let value = serde_json::to_value(&results).map_err(usage)?;
    Ok((i32::from(failed > 0), value, text))
}

/// Runs one command line (including the program name) and returns the exit
/// code and everything that should be printed.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let c = &cli.common;
    let outcome = match &cli.command {
        Command::Pathways { file } => pathways(c, file),
        Command::Euler { file } => euler(file),
        Command::Reflect { file, sink, source } => reflect(c, file, *sink, *source),
        Command::Gr { file, sink } => graded(file, *sink),
        Command::Dw { file } => dw(file),
        Command::Dz { file, example, n, length } => dz(c, file.as_deref(), example.as_deref(), *n, *length),
        Command::Bidet { file, tableau } => bidet(file, tableau),
        Command::InvariantCheck { file, poly } => invariant_check(file, poly),
        Command::InvariantDim { file } => invariant_dim(c, file),
        Command::SpringerLab { n, samples } => springer_lab(c, *n, *samples),
        Command::Verify => verify(),
    };
    match outcome {
        Ok((code, value, text)) => {
            if c.json {
                let mut s = serde_json::to_string_pretty(&value).unwrap_or_default();
                s.push('\n');
                (code, s)
            } else {
                (code, text)
            }
        }
        Err(Failure(code, message)) => (code, message),
    }
}
