
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use plesken_core::algebra::{induce_algebra_hom, verify_algebra_hom};
use plesken_core::group::DEFAULT_ELEMENT_CAP;
use plesken_core::io::{self, format_matrix, format_vector, HomSpec};
use plesken_core::linalg::DEFAULT_MAX_FACTOR_DEGREE;
use plesken_core::plesken::{
    closed_form_bracket_check, induce_plesken_hom, lie_analysis, plesken_basis, structure_constants, PleskenElement,
};
use plesken_core::rep::{
    induce_plesken_rep, irreducibility, module_axioms_check, schur_check, submodule_check, Classification,
    IrreducibilityConfig, ModuleCounterexample, SchurVerdict,
};
use plesken_core::{Error, FiniteGroup, QSubspace, Rational};
use serde::Serialize;

use plesken_cli::report::*;

const EXIT_INVALID: u8 = 2;
const EXIT_UNDETERMINED: u8 = 3;

/// Plesken Lie algebras of finite permutation groups over the rationals.
#[derive(Debug, Parser)]
#[command(name = "plie", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the pseudo-random probes of the irreducibility search.
    #[arg(long, global = true, default_value_t = IrreducibilityConfig::default().seed)]
    seed: u64,
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_elements: usize,
    /// Largest degree of a polynomial factor searched for.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FACTOR_DEGREE,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_factor_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Acting {
    /// The group representation itself (all group element images).
    Fg,
    /// The induced Plesken representation (hat images).
    Plesken,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group-level facts.
    #[command(subcommand)]
    Group(GroupCmd),
    /// The Plesken Lie algebra of a group.
    #[command(subcommand)]
    Plesken(PleskenCmd),
    /// Group representations and their induced Plesken representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Module axioms for an explicit action table.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Homomorphisms between groups, group algebras and Plesken algebras.
    #[command(subcommand)]
    Hom(HomCmd),
}

#[derive(Debug, Subcommand)]
enum GroupCmd {
    /// Order, commutativity and involution count.
    Analyze { group: PathBuf },
}

#[derive(Debug, Subcommand)]
enum PleskenCmd {
    /// Hat basis representatives.
    Basis { group: PathBuf },
    /// Nonzero structure constants.
    Constants { group: PathBuf },
    /// Center, derived algebra and law checks.
    Analyze { group: PathBuf },
}

#[derive(Debug, Subcommand)]
enum RepCmd {
    /// Hat images of the induced Plesken representation.
    Induce { group: PathBuf, rep: PathBuf },
    /// Irreducibility report.
    Check {
        group: PathBuf,
        rep: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = Acting::Fg)]
        acting: Acting,
    },
}

#[derive(Debug, Subcommand)]
enum ModuleCmd {
    /// FG- and L(G)-module axioms, optionally a submodule test.
    Check {
        group: PathBuf,
        table: PathBuf,
        #[arg(long)]
        subspace: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct HomArgs {
    source: PathBuf,
    target: PathBuf,
    map: PathBuf,
}

#[derive(Debug, Subcommand)]
enum HomCmd {
    /// Extend generator images to a group homomorphism and induce its maps.
    Induce(HomArgs),
    /// Check a given map for multiplicativity.
    Verify(HomArgs),
}

struct Output {
    json: String,
    text: String,
    undetermined: bool,
}

impl Output {
    fn new<R: Serialize>(report: &R, text: String) -> Result<Self> {
        Ok(Self {
            json: serde_json::to_string_pretty(report)?,
            text,
            undetermined: false,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))
}

fn load_group(path: &Path, cap: usize) -> Result<Arc<FiniteGroup>> {
    io::parse_group(&read(path)?, cap).with_context(|| format!("in `{}`", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = match cli.format {
                Format::Json => writeln!(stdout, "{}", out.json),
                Format::Text => write!(stdout, "{}", out.text),
            };
            if out.undetermined {
                ExitCode::from(EXIT_UNDETERMINED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let cap = cli.max_elements;
    match &cli.command {
        Command::Group(GroupCmd::Analyze { group }) => group_analyze(&load_group(group, cap)?),
        Command::Plesken(cmd) => match cmd {
            PleskenCmd::Basis { group } => plesken_basis_cmd(&load_group(group, cap)?),
            PleskenCmd::Constants { group } => plesken_constants(&load_group(group, cap)?),
            PleskenCmd::Analyze { group } => plesken_analyze(&load_group(group, cap)?),
        },
        Command::Rep(cmd) => match cmd {
            RepCmd::Induce { group, rep } => {
                let g = load_group(group, cap)?;
                let rho = io::parse_rep(&g, &read(rep)?).with_context(|| format!("in `{}`", rep.display()))?;
                rep_induce(&rho)
            }
            RepCmd::Check { group, rep, acting } => {
                let g = load_group(group, cap)?;
                let rho = io::parse_rep(&g, &read(rep)?).with_context(|| format!("in `{}`", rep.display()))?;
                let config = IrreducibilityConfig {
                    seed: cli.seed,
                    max_factor_degree: cli.max_factor_degree,
                    ..Default::default()
                };
                rep_check(&rho, *acting, &config)
            }
        },
        Command::Module(ModuleCmd::Check { group, table, subspace }) => {
            let g = load_group(group, cap)?;
            let t = io::parse_table(&g, &read(table)?).with_context(|| format!("in `{}`", table.display()))?;
            let u = match subspace {
                Some(p) => Some(io::parse_subspace(t.dim(), &read(p)?).with_context(|| format!("in `{}`", p.display()))?),
                None => None,
            };
            module_check(&t, u.as_ref())
        }
        Command::Hom(cmd) => {
            let (args, verify) = match cmd {
                HomCmd::Induce(a) => (a, false),
                HomCmd::Verify(a) => (a, true),
            };
            let g = load_group(&args.source, cap)?;
            let h = load_group(&args.target, cap)?;
            let text = read(&args.map)?;
            if verify {
                hom_verify(&g, &h, &text).with_context(|| format!("in `{}`", args.map.display()))
            } else {
                hom_induce(&g, &h, &text).with_context(|| format!("in `{}`", args.map.display()))
            }
        }
    }
}

fn group_analyze(g: &Arc<FiniteGroup>) -> Result<Output> {
    let report = GroupReport {
        order: g.order(),
        points: g.points(),
        abelian: g.is_abelian(),
        involutions: g.involution_type_count(),
        generators: g.generators().iter().map(|&x| g.label(x)).collect(),
        plesken_dim: plesken_basis(g).dim(),
    };
    let text = format!(
        "order: {}\nabelian: {}\ninvolutions (with identity): {}\nplesken dim: {}\n",
        report.order, report.abelian, report.involutions, report.plesken_dim
    );
    Output::new(&report, text)
}

fn plesken_basis_cmd(g: &Arc<FiniteGroup>) -> Result<Output> {
    let basis = plesken_basis(g);
    let elements: Vec<String> = (0..basis.dim())
        .map(|i| PleskenElement::<Rational>::unit(&basis, i).embed().to_string())
        .collect();
    let report = BasisReport {
        group_order: g.order(),
        dim: basis.dim(),
        basis: basis.labels(),
        elements,
    };
    let mut text = format!("dim: {}\n", report.dim);
    for (label, e) in report.basis.iter().zip(&report.elements) {
        let _ = writeln!(text, "  {label}^ = {e}");
    }
    Output::new(&report, text)
}

fn plesken_constants(g: &Arc<FiniteGroup>) -> Result<Output> {
    let basis = plesken_basis(g);
    let sc = structure_constants::<Rational>(&basis)?;
    let labels = basis.labels();
    let entries: Vec<ConstantEntry> = sc
        .nonzero_entries()
        .into_iter()
        .map(|(i, j, k, c)| ConstantEntry { i, j, k, c: c.to_string() })
        .collect();
    let mut text = format!("dim: {}\nnonzero constants: {}\n", basis.dim(), entries.len());
    for e in &entries {
        let _ = writeln!(text, "  [{}^, {}^] has {} * {}^", labels[e.i], labels[e.j], e.c, labels[e.k]);
    }
    let report = ConstantsReport {
        dim: basis.dim(),
        labels,
        entries,
    };
    Output::new(&report, text)
}

fn plesken_analyze(g: &Arc<FiniteGroup>) -> Result<Output> {
    let basis = plesken_basis(g);
    let sc = structure_constants::<Rational>(&basis)?;
    let a = lie_analysis(&sc);
    let report = LieReport {
        dim: a.dim,
        abelian: a.abelian,
        center_dim: a.center_dim,
        derived_dim: a.derived_dim,
        antisymmetric: sc.antisymmetry_violation().is_none(),
        jacobi: sc.jacobi_violation().is_none(),
        closed_form: closed_form_bracket_check::<Rational>(&basis),
    };
    let text = format!(
        "dim: {}\nabelian: {}\ncenter dim: {}\nderived dim: {}\nantisymmetry: {}\njacobi: {}\nclosed-form bracket: {}\n",
        report.dim,
        report.abelian,
        report.center_dim,
        report.derived_dim,
        ok(report.antisymmetric),
        ok(report.jacobi),
        ok(report.closed_form)
    );
    Output::new(&report, text)
}

fn ok(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

fn grid_text(g: &Grid) -> String {
    let rows: Vec<String> = g.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn rep_induce(rho: &plesken_core::QGroupRepresentation) -> Result<Output> {
    let psi = induce_plesken_rep(rho);
    let labels = psi.basis().labels();
    let report = InduceReport {
        degree: psi.degree(),
        dim: psi.basis().dim(),
        hat_images: labels
            .iter()
            .zip(psi.hat_images())
            .map(|(l, m)| HatImage {
                basis: l.clone(),
                matrix: format_matrix(m),
            })
            .collect(),
        zero_map: psi.is_zero(),
        bracket_preserved: psi.bracket_violation()?.is_none(),
    };
    let mut text = format!("degree: {}\nplesken dim: {}\n", report.degree, report.dim);
    for h in &report.hat_images {
        let _ = writeln!(text, "  psi({}^) = {}", h.basis, grid_text(&h.matrix));
    }
    if report.zero_map {
        text.push_str("psi is the zero map\n");
    }
    let _ = writeln!(text, "bracket preservation: {}", ok(report.bracket_preserved));
    Output::new(&report, text)
}

fn rep_check(rho: &plesken_core::QGroupRepresentation, acting: Acting, config: &IrreducibilityConfig) -> Result<Output> {
    let mats = match acting {
        Acting::Fg => rho.images().to_vec(),
        Acting::Plesken => induce_plesken_rep(rho).hat_images().to_vec(),
    };
    let r = irreducibility(&mats, rho.degree(), config)?;
    let schur = match schur_check(&mats, &r)? {
        SchurVerdict::Scalars => "scalars",
        SchurVerdict::NotScalars => "violated",
        SchurVerdict::NotApplicable => "not_applicable",
    };
    let reason = match &r.classification {
        Classification::Undetermined { reason } => Some(reason.clone()),
        _ => None,
    };
    let report = IrreducibilityJson {
        acting: match acting {
            Acting::Fg => "fg",
            Acting::Plesken => "plesken",
        }
        .into(),
        degree: r.degree,
        commutant_dim: r.commutant_dim,
        commutant_basis: r.commutant_basis.iter().map(format_matrix).collect(),
        envelope_dim: r.envelope_dim,
        classification: r.classification.name().into(),
        reason,
        witness: r
            .witness
            .as_ref()
            .map(|w| w.basis().iter().map(|v| format_vector(v)).collect()),
        real_status: r.real_status.name().into(),
        schur: schur.into(),
    };
    let mut text = format!(
        "acting: {}\ndegree: {}\nclassification: {}\nreal status: {}\nenvelope dim: {}\ncommutant dim: {}\nschur: {}\n",
        report.acting,
        report.degree,
        report.classification,
        report.real_status,
        report.envelope_dim,
        report.commutant_dim,
        report.schur
    );
    if let Some(w) = &report.witness {
        let _ = writeln!(text, "witness (invariant subspace basis): {}", grid_text(w));
    }
    if let Some(reason) = &report.reason {
        let _ = writeln!(text, "reason: {reason}");
    }
    let mut out = Output::new(&report, text)?;
    out.undetermined = matches!(r.classification, Classification::Undetermined { .. });
    Ok(out)
}

fn module_check(t: &plesken_core::rep::ModuleActionTable<Rational>, u: Option<&QSubspace>) -> Result<Output> {
    let g = t.group();
    let basis = plesken_basis(g);
    let labels = basis.labels();
    let r = module_axioms_check(t, &basis)?;
    let counterexamples: Vec<CounterexampleJson> = r
        .counterexamples
        .iter()
        .map(|c| match c {
            ModuleCounterexample::Identity { column, image } => CounterexampleJson::Identity {
                column: *column,
                image: format_vector(image),
            },
            ModuleCounterexample::Multiplicativity { g: x, h, column, nested, product } => {
                CounterexampleJson::Multiplicativity {
                    g: g.label(*x),
                    h: g.label(*h),
                    column: *column,
                    nested: format_vector(nested),
                    product: format_vector(product),
                }
            }
            ModuleCounterexample::Bracket { i, j } => CounterexampleJson::Bracket {
                i: labels[*i].clone(),
                j: labels[*j].clone(),
            },
        })
        .collect();
    let submodule = match u {
        Some(u) => {
            let s = submodule_check(t, &basis, u)?;
            let escape = |e: &Option<(usize, Vec<Rational>, Vec<Rational>)>, hat: bool| {
                e.as_ref().map(|(k, v, image)| EscapeJson {
                    action: if hat { format!("{}^", labels[*k]) } else { g.label(*k) },
                    vector: format_vector(v),
                    image: format_vector(image),
                })
            };
            Some(SubmoduleJson {
                fg_submodule: s.fg_submodule,
                lg_submodule: s.lg_submodule,
                fg_counterexample: escape(&s.fg_counterexample, false),
                lg_counterexample: escape(&s.lg_counterexample, true),
            })
        }
        None => None,
    };
    let report = ModuleCheckReport {
        dim: t.dim(),
        fg_module: r.fg_module,
        lg_module: r.lg_module,
        counterexamples,
        submodule,
    };

    let mut text = format!("FG-module: {}\nL(G)-module: {}\n", report.fg_module, report.lg_module);
    for c in &report.counterexamples {
        let line = match c {
            CounterexampleJson::Identity { column, image } => {
                format!("identity moves v{} to [{}]", column + 1, image.join(", "))
            }
            CounterexampleJson::Multiplicativity { g, h, column, nested, product } => format!(
                "{g}·({h}·v{c}) = [{}] but ({g}{h})·v{c} = [{}]",
                nested.join(", "),
                product.join(", "),
                c = column + 1
            ),
            CounterexampleJson::Bracket { i, j } => format!("bracket axiom fails for ({i}^, {j}^)"),
        };
        let _ = writeln!(text, "  counterexample: {line}");
    }
    if let Some(s) = &report.submodule {
        let _ = writeln!(text, "FG-submodule: {}\nL(G)-submodule: {}", s.fg_submodule, s.lg_submodule);
        for e in [&s.fg_counterexample, &s.lg_counterexample].into_iter().flatten() {
            let _ = writeln!(
                text,
                "  {} maps [{}] to [{}], outside the subspace",
                e.action,
                e.vector.join(", "),
                e.image.join(", ")
            );
        }
    }
    Output::new(&report, text)
}

fn hom_induce(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, text: &str) -> Result<Output> {
    let f = match io::parse_hom::<Rational>(g, h, text)? {
        HomSpec::Group(f) => f,
        _ => anyhow::bail!("`hom induce` needs a `generators` map"),
    };
    let hat_f = induce_plesken_hom::<Rational>(&f);
    let bar_f = induce_algebra_hom::<Rational>(&f);
    let report = HomInduceReport {
        map: (0..g.order())
            .map(|x| MapEntry {
                from: g.label(x),
                to: h.label(f.apply(x)),
            })
            .collect(),
        plesken_matrix: format_matrix(hat_f.matrix()),
        restriction_agrees: hat_f.agrees_with(&bar_f)?,
        preserves_bracket: hat_f.preserves_bracket()?,
    };
    let mut out = String::from("group homomorphism:\n");
    for e in &report.map {
        let _ = writeln!(out, "  {} -> {}", e.from, e.to);
    }
    let _ = writeln!(
        out,
        "plesken matrix: {}\nrestriction of the algebra map: {}\nbracket preservation: {}",
        grid_text(&report.plesken_matrix),
        ok(report.restriction_agrees),
        ok(report.preserves_bracket)
    );
    Output::new(&report, out)
}

fn hom_verify(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, text: &str) -> Result<Output> {
    let report = match io::parse_hom::<Rational>(g, h, text) {
        Ok(HomSpec::Group(_)) => HomVerifyReport {
            map_kind: "group".into(),
            homomorphism: true,
            counterexample: None,
            induced_from_group_hom: Some(true),
        },
        Err(Error::NotHomomorphism { left, right }) => HomVerifyReport {
            map_kind: "group".into(),
            homomorphism: false,
            counterexample: Some((left, right)),
            induced_from_group_hom: None,
        },
        Ok(HomSpec::Algebra(phi)) => {
            let check = verify_algebra_hom(&phi);
            HomVerifyReport {
                map_kind: "algebra".into(),
                homomorphism: check.holds,
                counterexample: check.counterexample.map(|(x, y)| (g.label(x), g.label(y))),
                induced_from_group_hom: Some(phi.is_induced_from_group_hom()),
            }
        }
        Ok(HomSpec::Plesken(m)) => {
            let labels = m.source().labels();
            let violation = m.bracket_violation()?;
            HomVerifyReport {
                map_kind: "plesken".into(),
                homomorphism: violation.is_none(),
                counterexample: violation.map(|(i, j)| (format!("{}^", labels[i]), format!("{}^", labels[j]))),
                induced_from_group_hom: None,
            }
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = format!("map kind: {}\nhomomorphism: {}\n", report.map_kind, report.homomorphism);
    if let Some((a, b)) = &report.counterexample {
        let _ = writeln!(out, "counterexample: ({a}, {b})");
    }
    if let Some(induced) = report.induced_from_group_hom {
        let _ = writeln!(out, "induced from a group homomorphism: {induced}");
    }
    Output::new(&report, out)
}
