//! Batch command-line front end.
//!
//! Every command reads a ring file, runs one computation and prints either
//! plain text or a JSON object. Exit codes: 0 on success, 1 on input errors,
//! 2 when a Gröbner budget is exhausted (partial results are still printed).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Budget};
use crate::jet::{JetPoint, JetRing, RingDocument, RingPresentation};
use crate::liealg::{
    center_isomorphism_check_with_budget, fiber_ideal, make_sl2, regular_slice_sl2, FiberSpec,
    LieAlgebraData,
};
use crate::poly::{factorial, parse_polynomial, parse_rational, parse_var, Polynomial, VarId};
use crate::stratify::{build_rank_matrix, stratum};
use crate::vpa::{
    apply_mode, bracket_on_jet_vars, chiral_core_upto, graded_dims, is_chiral_ideal,
    pva_axiom_suite, vp_center_upto, ChiralCheck, ChiralOperator, Grading, PoissonStructure,
};

#[derive(Debug, Parser)]
#[command(
    name = "jetpoisson",
    version,
    about = "Jet schemes of Poisson schemes and their vertex Poisson structure"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Ring presentation in JSON.
    pub input: PathBuf,
    /// Jet level n.
    #[arg(long, default_value_t = 0)]
    pub level: u32,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of S-pairs per Gröbner computation.
    #[arg(long)]
    pub budget_spairs: Option<u64>,
    /// Maximum degree of polynomials during Gröbner computations.
    #[arg(long)]
    pub budget_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
}

impl Common {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_spairs: self.budget_spairs.unwrap_or(d.max_spairs),
            max_degree: self.budget_degree.unwrap_or(d.max_degree),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Variables and relations of J_n R.
    JetRing(Common),
    /// Modes x_(k) y on jet polynomials, or the table on jet variables.
    Bracket {
        #[command(flatten)]
        common: Common,
        /// Source polynomial a in a_(k) b.
        #[arg(long, requires_all = ["mode", "target"])]
        source: Option<String>,
        #[arg(long)]
        mode: Option<u32>,
        /// Target polynomial b in a_(k) b.
        #[arg(long)]
        target: Option<String>,
    },
    /// Randomized vertex Poisson axiom checks.
    Axioms {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Whether an ideal of J_n R is stable under all x_(k).
    ChiralCheck {
        #[command(flatten)]
        common: Common,
        /// Generators, separated by ';'.
        #[arg(long, required = true, value_delimiter = ';')]
        generators: Vec<String>,
        /// Use the jet ideal J_n(I) of the generators.
        #[arg(long)]
        jet: bool,
    },
    /// Degree-truncated chiral Poisson core of an ideal.
    Core {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true, value_delimiter = ';')]
        generators: Vec<String>,
        #[arg(long)]
        degree_bound: u64,
        #[arg(long, default_value_t = 20)]
        max_iter: usize,
    },
    /// Degree-truncated vertex Poisson center of J_n R.
    Center {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree_bound: u64,
        /// Ignore the relations of the ring file.
        #[arg(long)]
        ambient: bool,
    },
    /// Rank of the rank matrix at a jet point.
    Rank {
        #[command(flatten)]
        common: Common,
        /// Coordinates k=v,... of every jet variable.
        #[arg(long)]
        point: String,
    },
    /// Rank strata {rank M_0 <= j} and chirality of their jet ideals.
    Strata(Common),
    /// Fiber ideal of the jet adjoint quotient over a point xi, in the
    /// ambient ring (relations of the file are ignored).
    Fibers {
        #[command(flatten)]
        common: Common,
        /// Coordinates i,j=v,... of xi; i counts invariants from 1.
        #[arg(long, default_value = "")]
        xi: String,
    },
    /// Compares the invariants, the center of J_n g and the center of the
    /// jet regular slice up to a degree bound.
    CenterIso {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree_bound: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::JetRing(_) => "jet-ring",
            Command::Bracket { .. } => "bracket",
            Command::Axioms { .. } => "axioms",
            Command::ChiralCheck { .. } => "chiral-check",
            Command::Core { .. } => "core",
            Command::Center { .. } => "center",
            Command::Rank { .. } => "rank",
            Command::Strata(_) => "strata",
            Command::Fibers { .. } => "fibers",
            Command::CenterIso { .. } => "center-iso",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::JetRing(c) | Command::Strata(c) => c,
            Command::Bracket { common, .. }
            | Command::Axioms { common, .. }
            | Command::ChiralCheck { common, .. }
            | Command::Core { common, .. }
            | Command::Center { common, .. }
            | Command::Rank { common, .. }
            | Command::Fibers { common, .. }
            | Command::CenterIso { common, .. } => common,
        }
    }
}

/// Output collected in both formats; printed once the command ends.
struct Out {
    text: String,
    json: Map<String, Value>,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.json.insert(key.to_string(), v.into());
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

fn dims_json(dims: &BTreeMap<u64, usize>) -> Value {
    Value::Object(
        dims.iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect(),
    )
}

fn dims_text(dims: &BTreeMap<u64, usize>) -> String {
    dims.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn poly_arg(field: &str, src: &str) -> Result<Polynomial> {
    parse_polynomial(src)
        .map_err(|e| Error::InvalidInput(format!("{field}: cannot parse '{src}': {e}")))
}

fn polys_arg(field: &str, srcs: &[String]) -> Result<Vec<Polynomial>> {
    srcs.iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| poly_arg(field, s))
        .collect()
}

fn load(common: &Common) -> Result<RingDocument> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", common.input.display())))?;
    let doc = RingDocument::from_json(&text)?;
    doc.presentation.validate_poisson()?;
    Ok(doc)
}

fn bracket_of(pres: &RingPresentation) -> Result<PoissonStructure> {
    pres.poisson()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("poisson: this command needs a bracket".into()))
}

fn check_in_ring(jr: &JetRing, field: &str, p: &Polynomial) -> Result<()> {
    match p.vars().into_iter().find(|v| !jr.contains_var(v)) {
        Some(v) => Err(Error::InvalidInput(format!(
            "{field}: variable {v} is not in the level-{} jet ring",
            jr.level()
        ))),
        None => Ok(()),
    }
}

fn parse_point(jr: &JetRing, text: &str) -> Result<JetPoint> {
    let mut coords = BTreeMap::new();
    for entry in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || {
            Error::InvalidInput(format!(
                "point: entry '{entry}' is not of the form var=value"
            ))
        };
        let (k, v) = entry.split_once('=').ok_or_else(bad)?;
        let var = parse_var(k.trim()).map_err(|_| bad())?;
        let val = parse_rational(v.trim()).map_err(|_| bad())?;
        if coords.insert(var.clone(), val).is_some() {
            return Err(Error::InvalidInput(format!("point: {var} given twice")));
        }
    }
    JetPoint::new(jr, coords)
}

fn run_command(cmd: &Command, out: &mut Out) -> Result<()> {
    let common = cmd.common();
    let n = common.level;
    out.set("command", cmd.name());
    out.set("level", n);
    let doc = load(common)?;
    let pres = &doc.presentation;
    let jr = JetRing::new(pres, n).with_budget(common.budget());
    match cmd {
        Command::JetRing(_) => {
            let vars: Vec<String> = jr.vars().iter().map(VarId::to_string).collect();
            out.line(format!("level {n}"));
            out.line(format!("variables ({}): {}", vars.len(), vars.join(" ")));
            out.line(format!("relations ({}):", jr.relations().len()));
            for r in jr.relations() {
                out.line(format!("  {r}"));
            }
            out.set("variables", vars);
            out.set("relations", strings(jr.relations()));
        }
        Command::Bracket {
            source,
            mode,
            target,
            ..
        } => {
            let ps = bracket_of(pres)?;
            if let (Some(a), Some(k), Some(b)) = (source, mode, target) {
                let a = poly_arg("source", a)?;
                let b = poly_arg("target", b)?;
                check_in_ring(&jr, "source", &a)?;
                check_in_ring(&jr, "target", &b)?;
                let value = jr.normal_form(&apply_mode(
                    &ps,
                    &ChiralOperator::new(a.clone(), *k, n),
                    &b,
                )?)?;
                out.line(format!("({a})_({k}) ({b}) = {value}"));
                out.set("source", a.to_string());
                out.set("mode", *k);
                out.set("target", b.to_string());
                out.set("value", value.to_string());
            } else {
                let mut table = Vec::new();
                for (i, x) in ps.vars().iter().enumerate() {
                    for k in 0..=n {
                        for (j, y) in ps.vars().iter().enumerate() {
                            for q in 0..=n {
                                let v = bracket_on_jet_vars(&ps, &jr, i, k, j, q)?
                                    .scale(&factorial(q).recip());
                                let y = y.at_level(q);
                                out.line(format!("{x}_({k}) {y} = {v}"));
                                table.push(json!({"source": x.to_string(), "mode": k, "target": y.to_string(), "value": v.to_string()}));
                            }
                        }
                    }
                }
                out.set("table", table);
            }
        }
        Command::Axioms { samples, .. } => {
            let ps = bracket_of(pres)?;
            let report = pva_axiom_suite(&jr, &ps, *samples, common.seed)?;
            for r in &report.results {
                let ok = r.samples - r.failures.len();
                out.line(format!("{}: {ok}/{} passed", r.axiom, r.samples));
                for f in &r.failures {
                    out.line(format!(
                        "  a = {}, b = {}, c = {}, modes {:?}: {} != {}",
                        f.a,
                        f.b,
                        f.c.as_deref().unwrap_or("-"),
                        f.modes,
                        f.lhs,
                        f.rhs
                    ));
                }
            }
            out.line(if report.passed() {
                "all axioms passed"
            } else {
                "axiom failures found"
            });
            out.set("seed", common.seed);
            out.set("passed", report.passed());
            out.set(
                "results",
                serde_json::to_value(&report.results).expect("report serializes"),
            );
        }
        Command::ChiralCheck {
            generators, jet, ..
        } => {
            let ps = bracket_of(pres)?;
            let mut gens = polys_arg("generators", generators)?;
            for g in &gens {
                check_in_ring(&jr, "generators", g)?;
            }
            if *jet {
                gens = jr.jet_ideal(&gens).generators().to_vec();
            }
            out.set("generators", strings(&gens));
            match is_chiral_ideal(&jr, &ps, &gens)? {
                ChiralCheck::Chiral => {
                    out.line("chiral");
                    out.set("chiral", true);
                }
                ChiralCheck::Counterexample {
                    source,
                    mode,
                    generator,
                    image,
                } => {
                    out.line("not chiral");
                    out.line(format!(
                        "  {source}_({mode}) ({generator}) = {image} is not in the ideal"
                    ));
                    out.set("chiral", false);
                    out.set(
                        "counterexample",
                        json!({"source": source.to_string(), "mode": mode, "generator": generator.to_string(), "image": image.to_string()}),
                    );
                }
            }
        }
        Command::Core {
            generators,
            degree_bound,
            max_iter,
            ..
        } => {
            let ps = bracket_of(pres)?;
            let gens = polys_arg("generators", generators)?;
            for g in &gens {
                check_in_ring(&jr, "generators", g)?;
            }
            out.set("degree_bound", *degree_bound);
            match chiral_core_upto(&jr, &ps, &gens, *degree_bound, *max_iter, &Grading::Total) {
                Ok(r) => {
                    let dims: Vec<String> = r.dims.iter().map(usize::to_string).collect();
                    out.line(format!("dimensions: {}", dims.join(" -> ")));
                    out.line(format!("core basis ({}):", r.basis.len()));
                    for b in &r.basis {
                        out.line(format!("  {b}"));
                    }
                    out.set("dims", r.dims.clone());
                    out.set("basis", strings(&r.basis));
                }
                Err(Error::NotConverged { iterations, last }) => {
                    out.line(format!(
                        "no fixed point after {iterations} iterations; last iterate ({}):",
                        last.len()
                    ));
                    for b in &last {
                        out.line(format!("  {b}"));
                    }
                    out.set("last", strings(&last));
                    return Err(Error::NotConverged { iterations, last });
                }
                Err(e) => return Err(e),
            }
        }
        Command::Center {
            degree_bound,
            ambient,
            ..
        } => {
            let ps = bracket_of(pres)?;
            let jr = if *ambient {
                JetRing::new(&pres.with_relations(Vec::new())?, n).with_budget(common.budget())
            } else {
                jr
            };
            let basis = vp_center_upto(&jr, &ps, &[], *degree_bound, &Grading::Total)?;
            out.line(format!("center basis ({}):", basis.len()));
            for b in &basis {
                out.line(format!("  {b}"));
            }
            out.set("degree_bound", *degree_bound);
            out.set("basis", strings(&basis));
            if let Some(w) = jr.jet_weights() {
                let deg = |m: &crate::poly::Monomial| crate::groebner::weighted_degree(m, &w);
                if let Some(dims) = graded_dims(&basis, deg) {
                    out.line(format!("dimensions by weight: {}", dims_text(&dims)));
                    out.set("weight_dims", dims_json(&dims));
                }
            }
        }
        Command::Rank { point, .. } => {
            let ps = bracket_of(pres)?;
            let x = parse_point(&jr, point)?;
            let m = build_rank_matrix(&jr, &ps)?;
            let rank = m.rank_at(&x)?;
            out.line(format!("rank {rank}"));
            out.set("rank", rank);
            match m.rk_at(&x) {
                Ok(rk) => {
                    out.line(format!("rk {rk}"));
                    out.set("rk", rk);
                }
                Err(e @ Error::DivisibilityViolation { .. }) => {
                    out.line(format!("rk undefined: {e}"));
                    out.set("rk", Value::Null);
                }
                Err(e) => return Err(e),
            }
        }
        Command::Strata(_) => {
            let ps = bracket_of(pres)?;
            let mut strata = Vec::new();
            for j in 0..ps.dim() {
                let s = stratum(&jr, &ps, j);
                let base = s.base_ideal.groebner_basis()?.to_vec();
                let chiral = is_chiral_ideal(&jr, &ps, s.jet_ideal.generators())?.is_chiral();
                out.line(format!("stratum {j}: chiral {chiral}"));
                for g in &base {
                    out.line(format!("  {g}"));
                }
                strata.push(json!({"j": j, "base_ideal": strings(&base), "chiral": chiral}));
                out.set("strata", strata.clone());
            }
        }
        Command::Fibers { xi, .. } => {
            let l = LieAlgebraData::from_document(&doc)?;
            if l.invariants().is_empty() {
                return Err(Error::InvalidInput(
                    "invariants: fibers need invariant polynomials".into(),
                ));
            }
            let jr = JetRing::new(&l.presentation(), n).with_budget(common.budget());
            let spec = FiberSpec::parse(n, xi)?;
            let ideal = fiber_ideal(&l, &jr, &spec)?;
            let zero = fiber_ideal(&l, &jr, &FiberSpec::zero(n))?;
            let gb = ideal.groebner_basis()?.to_vec();
            out.line("generators:");
            for g in ideal.generators() {
                out.line(format!("  {g}"));
            }
            out.line("groebner basis:");
            for g in &gb {
                out.line(format!("  {g}"));
            }
            out.set("generators", strings(ideal.generators()));
            out.set("groebner_basis", strings(&gb));
            let standard: BTreeMap<VarId, u32> = jr.vars().iter().map(|v| (v.clone(), 1)).collect();
            let gr = ideal_equal(&ideal.initial_ideal(&standard)?, &zero)?;
            out.line(format!("initial ideal equals the zero fiber: {gr}"));
            out.set("gr_equals_zero_fiber", gr);
            let chiral = is_chiral_ideal(&jr, l.structure(), ideal.generators())?.is_chiral();
            out.line(format!("chiral: {chiral}"));
            out.set("chiral", chiral);
        }
        Command::CenterIso { degree_bound, .. } => {
            let l = LieAlgebraData::from_document(&doc)?;
            let sl2 = make_sl2();
            if !l.structure().is_trivial() && l.structure() != sl2.structure() {
                return Err(Error::InvalidInput(
                    "poisson: center-iso supports the sl2 bracket on (e, h, f) with the regular slice".into(),
                ));
            }
            if l.invariants().is_empty() {
                return Err(Error::InvalidInput(
                    "invariants: center-iso needs invariant polynomials".into(),
                ));
            }
            let l = if l.slodowy_weights().is_some() {
                l
            } else {
                LieAlgebraData::new(
                    l.structure().clone(),
                    l.invariants().to_vec(),
                    None,
                    sl2.slodowy_weights().cloned(),
                )?
            };
            let r = center_isomorphism_check_with_budget(
                &l,
                &regular_slice_sl2(),
                n,
                *degree_bound,
                &common.budget(),
            )?;
            out.line(format!("applicable: {}", r.applicable));
            if r.applicable {
                out.line(format!("slice center: {}", dims_text(&r.slice_center)));
                out.line(format!(
                    "restricted invariants: {}",
                    dims_text(&r.restricted_invariants)
                ));
                out.line(format!("lie algebra center: {}", dims_text(&r.lie_center)));
                out.line(format!("invariants central: {}", r.invariants_central));
                out.line(format!(
                    "restriction injective: {}",
                    r.restriction_injective
                ));
                out.line(format!("equal: {}", r.equal));
            }
            let v = serde_json::to_value(&r).expect("report serializes");
            if let Value::Object(m) = v {
                out.json.extend(m);
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let mut out = Out {
        text: String::new(),
        json: Map::new(),
    };
    let result = run_command(&cli.command, &mut out);
    let code = match &result {
        Ok(()) => 0,
        Err(Error::ResourceLimit { .. }) => 2,
        Err(_) => 1,
    };
    if let Err(e) = &result {
        if code == 2 {
            out.line(format!("stopped: {e}"));
        }
        out.set("error", e.to_string());
        out.set("status", if code == 2 { "resource_limit" } else { "error" });
        let _ = writeln!(stderr, "error: {e}");
    }
    let printed = match cli.command.common().output {
        OutputFormat::Text => out.text,
        OutputFormat::Json => {
            let mut s =
                serde_json::to_string_pretty(&Value::Object(out.json)).expect("json output");
            s.push('\n');
            s
        }
    };
    if code != 1 || matches!(result, Err(Error::NotConverged { .. })) {
        let _ = stdout.write_all(printed.as_bytes());
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> String {
        format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("jetpoisson").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn jet_ring_sizes() {
        let (code, out, _) = call(&["jet-ring", &data("sl2.json"), "--level", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("variables (6)"), "{out}");
        assert!(out.contains("relations (2)"), "{out}");
    }

    #[test]
    fn bad_flags_are_input_errors() {
        let (code, out, err) = call(&["rank", &data("sl2.json")]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("--point"));
        let (code, _, err) = call(&["jet-ring", "/nonexistent.json"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read"));
        let (code, _, _) = call(&["--help"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn budget_exhaustion_exits_two() {
        let (code, out, err) = call(&[
            "strata",
            &data("sl2.json"),
            "--level",
            "1",
            "--budget-spairs",
            "1",
            "--output",
            "json",
        ]);
        assert_eq!(code, 2, "{out}{err}");
        assert!(out.contains("resource_limit"));
    }
}
