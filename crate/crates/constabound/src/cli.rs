//! Command-line front end: analyze polynomials and codes, reproduce the
//! nine-row bounds table, and list coset factorizations, with human-readable
//! tables by default and a structured JSON document behind `--json`.
//!
//! Exit codes: 0 success, 2 precondition violations, 3 budget refusal.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{bound_report, irreducible_bounds, irreducible_coincide};
use crate::codes::{
    build_code, code_bound_report, CodeAnalysis, DistanceStatus, DEFAULT_DISTANCE_BUDGET,
};
use crate::cyclotomic::{all_cosets, binomial_fields, coset_med, is_equal_difference, omega,
    sigma_gamma, Coset};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::medrep::{all_med_representations, stabilizer};
use crate::poly::{
    cyclotomic_polynomial, defining_set, is_simple_rooted, parse_element, poly_order, Poly,
    SplittingField,
};
use crate::report::{
    AnalysisSection, BinomialFactorization, BinomialSpec, BoundsSection, CodeSection,
    CosetSection, DistanceSection, FactorSection, GammaEntry, MedRepSection, ReportDocument,
    StabilizerSection, TableRow, TightnessEntry,
};

#[derive(Parser, Debug)]
#[command(
    name = "constabound",
    version,
    about = "Singleton-type distance bounds for simple-rooted constacyclic codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the structured JSON document instead of the human-readable table.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze a generator polynomial: order, defining set, stabilizer,
    /// equal-difference partitions and the bound family.
    Analyze(AnalyzeArgs),
    /// Analyze a constacyclic code, including the exact minimum distance when
    /// the exhaustive search fits the budget.
    Code(CodeArgs),
    /// The nine-row bounds comparison for irreducible cyclic codes over GF(7)
    /// with lengths dividing 225, via both the closed form and the generic
    /// stabilizer path.
    Table1,
    /// List the cyclotomic cosets mod n over GF(q) with their
    /// equal-difference structure and binomial factorizations.
    Factor(FactorArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Base field size (a prime power).
    #[arg(long)]
    pub q: u64,
    /// Generator polynomial, comma-separated coefficients low-to-high.
    #[arg(long)]
    pub poly: Option<String>,
    /// Take the generator from the n-th cyclotomic polynomial instead.
    #[arg(long)]
    pub cyclotomic: Option<u64>,
    /// Which irreducible factor of the cyclotomic polynomial to use,
    /// counting cosets by ascending representative.
    #[arg(long, default_value_t = 0)]
    pub factor_index: usize,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    /// Base field size (a prime power).
    #[arg(long)]
    pub q: u64,
    /// Code length; must be coprime to the field characteristic.
    #[arg(long)]
    pub m: u64,
    /// The constacyclic unit, e.g. `1`, `-1` or `[0,1]`.
    #[arg(long)]
    pub lambda: String,
    /// Generator polynomial, comma-separated coefficients low-to-high.
    #[arg(long)]
    pub poly: Option<String>,
    /// Take the generator from the n-th cyclotomic polynomial instead.
    #[arg(long)]
    pub cyclotomic: Option<u64>,
    /// Which irreducible factor of the cyclotomic polynomial to use.
    #[arg(long, default_value_t = 0)]
    pub factor_index: usize,
    /// Maximum codeword evaluations for the exhaustive distance search.
    #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET as u64)]
    pub distance_budget: u64,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    /// Base field size (a prime power).
    #[arg(long)]
    pub q: u64,
    /// Modulus of the cosets; must be coprime to q.
    #[arg(long)]
    pub n: u64,
}

/// Runs a parsed invocation and produces the report document.
pub fn run(cli: &Cli) -> Result<ReportDocument> {
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Code(args) => cmd_code(args),
        Command::Table1 => cmd_table1(),
        Command::Factor(args) => cmd_factor(args),
    }
}

/// 0 for success, 3 when a distance search was refused for budget reasons.
pub fn exit_code(doc: &ReportDocument) -> i32 {
    let budget_refused = doc
        .code
        .as_ref()
        .and_then(|c| c.distance.as_ref())
        .is_some_and(|d| d.status == "budget-exceeded");
    if budget_refused {
        3
    } else {
        0
    }
}

pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// Selects the generator: an explicit coefficient string, or the i-th
/// irreducible factor of a cyclotomic polynomial in ascending-coset order.
fn resolve_generator(
    ctx: &Arc<FieldCtx>,
    poly: Option<&str>,
    cyclotomic: Option<u64>,
    factor_index: usize,
    warnings: &mut Vec<String>,
) -> Result<Poly> {
    match (poly, cyclotomic) {
        (Some(text), None) => {
            let raw = Poly::parse(ctx, text)?;
            if raw.is_zero() {
                return Err(Error::Parse("generator must be nonzero".into()));
            }
            let (f, changed) = raw.monic_normalized()?;
            if changed {
                warnings.push(format!(
                    "generator was not monic; normalized to {f} by dividing by the leading coefficient"
                ));
            }
            Ok(f)
        }
        (None, Some(n)) => {
            let sf = SplittingField::over(Arc::clone(ctx), n)?;
            let primitive: Vec<Coset> = all_cosets(n, ctx.cardinality())?
                .into_iter()
                .filter(|c| c.n_gamma() == n)
                .collect();
            let Some(coset) = primitive.get(factor_index) else {
                return Err(Error::Parse(format!(
                    "factor index {factor_index} out of range: the {n}-th cyclotomic polynomial has {} irreducible factors",
                    primitive.len()
                )));
            };
            let f = sf.minimal_polynomial_base(coset);
            let phi = cyclotomic_polynomial(n, ctx)?;
            assert!(
                f.divides(&phi).expect("nonzero factor"),
                "selected factor must divide the cyclotomic polynomial"
            );
            Ok(f)
        }
        _ => Err(Error::Parse(
            "exactly one of --poly and --cyclotomic must be given".into(),
        )),
    }
}

/// The full analysis pipeline for one simple-rooted generator.
fn build_analysis(f: &Poly) -> Result<AnalysisSection> {
    if !is_simple_rooted(f)? {
        return Err(Error::NotSimpleRooted(
            "the generator must be monic with simple roots and a nonzero constant term \
             (repeated roots arise when the characteristic divides the order)",
        ));
    }
    let n = poly_order(f)?;
    let sf = SplittingField::over(Arc::clone(f.ctx()), n)?;
    let t = sf.defining_set(f)?;
    let stab = stabilizer(&t);
    let reps = all_med_representations(&t);
    let report = bound_report(&t);
    Ok(AnalysisSection {
        q: f.ctx().cardinality(),
        poly: f.to_string(),
        n,
        tau: report.tau,
        defining_set: t.elems().to_vec(),
        stabilizer: StabilizerSection {
            d0: stab.d0,
            sigma_f: stab.sigma_f.clone(),
            group_order: stab.group_order,
        },
        med_representations: reps
            .iter()
            .map(|r| MedRepSection {
                d: r.d(),
                classes: r.classes().to_vec(),
            })
            .collect(),
        bounds: BoundsSection {
            singleton: report.singleton,
            arithmetic: report.arithmetic,
            gamma_family: report
                .gamma_family
                .iter()
                .map(|&(d, bound)| GammaEntry { d, bound })
                .collect(),
            coincide: report.coincide,
            sigma_f_order: report.sigma_f_order,
            omega: report.omega,
        },
    })
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<ReportDocument> {
    let command = match (&args.poly, args.cyclotomic) {
        (Some(p), None) => format!("analyze --q {} --poly {}", args.q, p),
        (None, Some(n)) => format!(
            "analyze --q {} --cyclotomic {} --factor-index {}",
            args.q, n, args.factor_index
        ),
        _ => format!("analyze --q {}", args.q),
    };
    let mut doc = ReportDocument::new(command);
    let ctx = FieldCtx::from_prime_power(args.q)?;
    let f = resolve_generator(
        &ctx,
        args.poly.as_deref(),
        args.cyclotomic,
        args.factor_index,
        &mut doc.warnings,
    )?;
    doc.analysis = Some(build_analysis(&f)?);
    Ok(doc)
}

fn cmd_code(args: &CodeArgs) -> Result<ReportDocument> {
    let generator_echo = match (&args.poly, args.cyclotomic) {
        (Some(p), None) => format!("--poly {p}"),
        (None, Some(n)) => format!("--cyclotomic {n} --factor-index {}", args.factor_index),
        _ => String::new(),
    };
    let mut doc = ReportDocument::new(format!(
        "code --q {} --m {} --lambda {} {} --distance-budget {}",
        args.q, args.m, args.lambda, generator_echo, args.distance_budget
    ));
    let ctx = FieldCtx::from_prime_power(args.q)?;
    let lambda = parse_element(&ctx, &args.lambda)?;
    let f = resolve_generator(
        &ctx,
        args.poly.as_deref(),
        args.cyclotomic,
        args.factor_index,
        &mut doc.warnings,
    )?;
    let code = build_code(args.m, &lambda, &f)?;
    let analysis = code_bound_report(&code, args.distance_budget as u128)?;
    let mut section = CodeSection {
        q: args.q,
        m: args.m,
        lambda: lambda.to_string(),
        generator: f.to_string(),
        dimension: code.dimension(),
        status: "ok".into(),
        analysis: None,
        distance: None,
    };
    match analysis {
        CodeAnalysis::ZeroCode => {
            section.status = "zero-code".into();
        }
        CodeAnalysis::FullSpace { distance } => {
            section.status = "full-space".into();
            section.distance = Some(DistanceSection {
                status: "computed".into(),
                distance: Some(distance.distance),
                exhaustive: Some(distance.exhaustive),
                witness: Some(word_to_string(&distance.witness)),
                required_evaluations: None,
                budget: None,
                tightness: None,
            });
        }
        CodeAnalysis::Proper {
            report, distance, ..
        } => {
            section.analysis = Some(build_analysis(&f)?);
            section.distance = Some(match distance {
                DistanceStatus::Computed(res) => DistanceSection {
                    status: "computed".into(),
                    distance: Some(res.distance),
                    exhaustive: Some(res.exhaustive),
                    witness: Some(word_to_string(&res.witness)),
                    required_evaluations: None,
                    budget: None,
                    tightness: Some(
                        report
                            .gamma_family
                            .iter()
                            .map(|&(d, bound)| TightnessEntry {
                                d,
                                bound,
                                tight: res.distance == bound,
                            })
                            .collect(),
                    ),
                },
                DistanceStatus::BudgetExceeded { required, budget } => DistanceSection {
                    status: "budget-exceeded".into(),
                    distance: None,
                    exhaustive: None,
                    witness: None,
                    required_evaluations: Some(required.to_string()),
                    budget: Some(budget.to_string()),
                    tightness: None,
                },
            });
        }
    }
    doc.code = Some(section);
    Ok(doc)
}

fn cmd_table1() -> Result<ReportDocument> {
    let mut doc = ReportDocument::new("table1".into());
    let ctx = FieldCtx::new(7, 1)?;
    let mut rows = Vec::new();
    for j in 0..3u32 {
        for i in 0..3u32 {
            let n = 3u64.pow(i) * 5u64.pow(j);
            // closed form
            let closed = irreducible_bounds(7, n)?;
            let coincide = irreducible_coincide(7, n)?;
            // generic path on an actual irreducible factor of Phi_n
            let sf = SplittingField::over(Arc::clone(&ctx), n)?;
            let coset = Coset::new(n, 7, 1 % n)?;
            let f = sf.minimal_polynomial_base(&coset);
            let phi = cyclotomic_polynomial(n, &ctx)?;
            assert!(f.divides(&phi)?, "factor must divide Phi_{n}");
            assert_eq!(poly_order(&f)?, n, "factor of Phi_{n} has order {n}");
            let generic = bound_report(&defining_set(&f)?);
            assert_eq!(
                (generic.singleton, generic.arithmetic, generic.coincide),
                (closed.singleton, closed.arithmetic, coincide),
                "closed form and stabilizer path disagree at n = {n}"
            );
            rows.push(TableRow {
                n,
                singleton: closed.singleton,
                arithmetic: closed.arithmetic,
                coincide,
            });
        }
    }
    doc.table = Some(rows);
    Ok(doc)
}

fn cmd_factor(args: &FactorArgs) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new(format!("factor --q {} --n {}", args.q, args.n));
    let ctx = FieldCtx::from_prime_power(args.q)?;
    let sf = SplittingField::over(Arc::clone(&ctx), args.n)?;
    let mut sections = Vec::new();
    for coset in all_cosets(args.n, args.q)? {
        let idx = sigma_gamma(&coset);
        let mut factorizations = Vec::new();
        for &d in &idx.sigma {
            // checks the product identity against the minimal polynomial
            let polys = sf.binomial_factorization(&coset, d)?;
            let rep = coset_med(&coset, d)?;
            let binomials = rep
                .classes()
                .iter()
                .map(|class| BinomialSpec {
                    degree: args.n / d,
                    zeta_exponent: (class[0] as u128 * (args.n / d) as u128 % args.n as u128)
                        as u64,
                })
                .collect();
            assert_eq!(polys.len(), rep.classes().len());
            factorizations.push(BinomialFactorization {
                t: d * coset.tau() as u64 / args.n,
                d,
                binomials,
            });
        }
        sections.push(CosetSection {
            rep: coset.rep(),
            elems: coset.elems().to_vec(),
            tau: coset.tau() as u64,
            n_gamma: coset.n_gamma(),
            equal_difference: is_equal_difference(&coset),
            omega: omega(&coset),
            sigma: idx.sigma.clone(),
            binomial_degrees: binomial_fields(&coset),
            minimal_polynomial: sf.minimal_polynomial_base(&coset).to_string(),
            factorizations,
        });
    }
    doc.factor = Some(FactorSection {
        q: args.q,
        n: args.n,
        cosets: sections,
    });
    Ok(doc)
}

fn word_to_string(word: &[crate::field::FieldElement]) -> String {
    word.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn set_to_string(elems: &[u64]) -> String {
    let inner = elems
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

/// Renders the human-readable view of a document.
pub fn render_human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(a) = &doc.analysis {
        render_analysis(&mut out, a, "");
    }
    if let Some(c) = &doc.code {
        let _ = writeln!(
            out,
            "constacyclic code over GF({}): length {}, lambda = {}, dimension {}",
            c.q, c.m, c.lambda, c.dimension
        );
        let _ = writeln!(out, "  generator: {}", c.generator);
        match c.status.as_str() {
            "zero-code" => {
                let _ = writeln!(out, "  status: zero code (no nonzero codewords)");
            }
            "full-space" => {
                let _ = writeln!(out, "  status: full space (unit generator)");
            }
            _ => {}
        }
        if let Some(a) = &c.analysis {
            render_analysis(&mut out, a, "  ");
        }
        if let Some(d) = &c.distance {
            match d.status.as_str() {
                "computed" => {
                    let _ = writeln!(
                        out,
                        "  exact minimum distance: {} (exhaustive search)",
                        d.distance.unwrap_or(0)
                    );
                    if let Some(w) = &d.witness {
                        let _ = writeln!(out, "  witness codeword: {w}");
                    }
                    if let Some(ts) = &d.tightness {
                        for t in ts {
                            let _ = writeln!(
                                out,
                                "    bound at d = {}: {} -> {}",
                                t.d,
                                t.bound,
                                if t.tight { "tight" } else { "not tight" }
                            );
                        }
                    }
                }
                "budget-exceeded" => {
                    let _ = writeln!(
                        out,
                        "  distance not computed: needs {} codeword evaluations, budget {}",
                        d.required_evaluations.as_deref().unwrap_or("?"),
                        d.budget.as_deref().unwrap_or("?")
                    );
                }
                _ => {}
            }
        }
    }
    if let Some(rows) = &doc.table {
        let _ = writeln!(
            out,
            "irreducible cyclic codes over GF(7), generator order n | 225"
        );
        let _ = writeln!(out, "  {:>5}  {:>9} {:>10}  coincide", "n", "singleton", "arithmetic");
        for r in rows {
            let _ = writeln!(
                out,
                "  {:>5}  {:>9} {:>10}  {}",
                r.n,
                r.singleton,
                r.arithmetic,
                if r.coincide { "yes" } else { "no" }
            );
        }
    }
    if let Some(f) = &doc.factor {
        let _ = writeln!(
            out,
            "cyclotomic cosets mod {} over GF({}): {} cosets",
            f.n,
            f.q,
            f.cosets.len()
        );
        for c in &f.cosets {
            let _ = writeln!(
                out,
                "  coset {}: {} (tau = {}, n_gamma = {}, equal-difference: {}, omega = {})",
                c.rep,
                set_to_string(&c.elems),
                c.tau,
                c.n_gamma,
                if c.equal_difference { "yes" } else { "no" },
                c.omega
            );
            let _ = writeln!(out, "    minimal polynomial: {}", c.minimal_polynomial);
            let _ = writeln!(
                out,
                "    admissible differences: {}",
                set_to_string(&c.sigma)
            );
            for fz in &c.factorizations {
                let body = fz
                    .binomials
                    .iter()
                    .map(|b| format!("(X^{} - z^{})", b.degree, b.zeta_exponent))
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(
                    out,
                    "    over GF({}^{}), d = {}: {}",
                    f.q, fz.t, fz.d, body
                );
            }
        }
    }
    out
}

fn render_analysis(out: &mut String, a: &AnalysisSection, pad: &str) {
    let _ = writeln!(out, "{pad}generator analysis over GF({})", a.q);
    let _ = writeln!(out, "{pad}  polynomial: {}", a.poly);
    let _ = writeln!(out, "{pad}  order n: {}, degree tau: {}", a.n, a.tau);
    let _ = writeln!(
        out,
        "{pad}  defining set (mod {}): {}",
        a.n,
        set_to_string(&a.defining_set)
    );
    let _ = writeln!(
        out,
        "{pad}  stabilizer: d0 = {}, divisors {}, group order {}",
        a.stabilizer.d0,
        set_to_string(&a.stabilizer.sigma_f),
        a.stabilizer.group_order
    );
    let _ = writeln!(out, "{pad}  equal-difference partitions:");
    for rep in &a.med_representations {
        let classes = rep
            .classes
            .iter()
            .map(|cl| set_to_string(cl))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "{pad}    d = {}: {}", rep.d, classes);
    }
    let _ = writeln!(out, "{pad}  bounds by common difference:");
    for g in &a.bounds.gamma_family {
        let note = if g.d == a.n { "  (Singleton)" } else { "" };
        let _ = writeln!(out, "{pad}    d = {} -> {}{}", g.d, g.bound, note);
    }
    let _ = writeln!(out, "{pad}  singleton bound: {}", a.bounds.singleton);
    let _ = writeln!(out, "{pad}  arithmetic bound: {}", a.bounds.arithmetic);
    if let Some(om) = a.bounds.omega {
        let _ = writeln!(out, "{pad}  omega: {om}");
    }
    let _ = writeln!(
        out,
        "{pad}  bounds coincide: {}",
        if a.bounds.coincide { "yes" } else { "no" }
    );
}
