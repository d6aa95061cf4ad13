//! Batch verifier for finite quadratic Jordan algebras.
//!
//! Exit codes are uniform across subcommands: 0 when every requested check
//! passes, 1 when some check is verified false, 2 for unusable input. All
//! reports are pure functions of the input file and flags.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qjordan::constructions::{field_algebra, from_linear, matrix_plus_algebra, LinearJordanAlgebra};
use qjordan::deriv::{
    derivation_space, generalized_derivation_space, inverse_compatible_space, Epsilon,
};
use qjordan::gf::Fe;
use qjordan::identities::{self, IdentityId, Status, Suite};
use qjordan::moufang::{
    build_moufang, is_proper, little_projective_group_order, recover_structure,
    verify_moufang_axioms, DEFAULT_GROUP_BOUND,
};
use qjordan::qjcore::QuadraticAlgebra;
use qjordan::search::{
    classify_candidates, classify_sampled, render_census, strictness_agreement_sweep,
    supports_full_enumeration,
};

#[derive(Parser)]
#[command(
    name = "qjordan",
    version,
    about = "Exact workbench for finite quadratic Jordan algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an algebra and emit it in the qja file format.
    Make(MakeArgs),
    /// Run a verification suite on an algebra file.
    Verify(VerifyArgs),
    /// Construct the isotope at an invertible element.
    Isotope(IsotopeArgs),
    /// Extend the scalars of a prime-field algebra.
    Extend(ExtendArgs),
    /// Compute ε-derivation spaces.
    Derivations(DerivationsArgs),
    /// Build the Moufang set of a division algebra and run its checks.
    Moufang(MoufangArgs),
    /// Enumerate candidate algebras and report the classification census.
    Search(SearchArgs),
    /// Check the Hua identity, reporting skipped pairs.
    Hua(HuaArgs),
}

#[derive(Args)]
struct MakeArgs {
    /// Field algebra F_{p^m} over F_p: two values, p and m.
    #[arg(long, num_args = 2, value_names = ["P", "M"], conflicts_with_all = ["matrix", "from_linear"])]
    field: Option<Vec<u64>>,
    /// Matrix algebra M_r(F_p) with the sandwich operator: p and r.
    #[arg(long, num_args = 2, value_names = ["P", "R"], conflicts_with = "from_linear")]
    matrix: Option<Vec<u64>>,
    /// Build the quadratic algebra of a linear Jordan algebra file (lja format).
    #[arg(long, value_name = "FILE")]
    from_linear: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Algebra file in the qja format.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Emit key=value records instead of human-readable lines.
    #[arg(long)]
    machine: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Weak,
    Strict,
    Lemmas,
    Division,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Weak => Suite::Weak,
            SuiteArg::Strict => Suite::Strict,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Division => Suite::Division,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args)]
struct IsotopeArgs {
    file: PathBuf,
    /// Coordinates of the invertible element, space-separated field elements
    /// in the file serialization (quote the argument).
    #[arg(long, value_name = "COORDS")]
    at: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtendArgs {
    file: PathBuf,
    /// Extension degree m >= 2.
    #[arg(long)]
    degree: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DerivationsArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    epsilon: EpsilonArg,
    #[arg(long)]
    machine: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EpsilonArg {
    Plus,
    Minus,
    All,
}

#[derive(Args)]
struct MoufangArgs {
    file: PathBuf,
    /// Compute the order of the little projective group.
    #[arg(long)]
    order: bool,
    /// Report the proper/improper verdict (computes the group order).
    #[arg(long)]
    proper: bool,
    /// Run the Hua-map recovery round-trip at the given base point.
    #[arg(long, value_name = "COORDS")]
    recover: Option<String>,
    #[arg(long)]
    machine: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: usize,
    /// Sample size for spaces too large to enumerate fully.
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    /// Seed for the deterministic sampling generator.
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    /// Directory for weak-but-not-strict algebra files.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Also run the strictness agreement sweep (full enumeration only).
    #[arg(long)]
    agreement: bool,
}

#[derive(Args)]
struct HuaArgs {
    file: PathBuf,
    #[arg(long)]
    machine: bool,
}

/// Uniform exit codes: 0 pass, 1 verified false, 2 invalid input.
const EXIT_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Make(args) => cmd_make(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Isotope(args) => cmd_isotope(args),
        Command::Extend(args) => cmd_extend(args),
        Command::Derivations(args) => cmd_derivations(args),
        Command::Moufang(args) => cmd_moufang(args),
        Command::Search(args) => cmd_search(args),
        Command::Hua(args) => cmd_hua(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn load_algebra(path: &Path) -> qjordan::Result<QuadraticAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| qjordan::Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    QuadraticAlgebra::parse(&text)
}

fn parse_coords(alg: &QuadraticAlgebra, s: &str) -> qjordan::Result<Vec<Fe>> {
    let coords: Vec<Fe> = s
        .split_whitespace()
        .map(|w| alg.field().parse_element(w))
        .collect::<qjordan::Result<_>>()?;
    if coords.len() != alg.dim() {
        return Err(qjordan::Error::Invalid(format!(
            "expected {} coordinates, got {}",
            alg.dim(),
            coords.len()
        )));
    }
    Ok(coords)
}

fn emit(text: &str, out: Option<&Path>) -> qjordan::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| qjordan::Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_make(args: MakeArgs) -> qjordan::Result<u8> {
    let alg = if let Some(pm) = args.field {
        field_algebra(pm[0], pm[1] as usize)?
    } else if let Some(pr) = args.matrix {
        matrix_plus_algebra(pr[0], pr[1] as usize)?
    } else if let Some(path) = args.from_linear {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| qjordan::Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        let linear = LinearJordanAlgebra::parse(&text)?;
        from_linear(&linear)?
    } else {
        return Err(qjordan::Error::Invalid(
            "choose one of --field, --matrix, --from-linear".into(),
        ));
    };
    emit(&alg.to_text(), args.out.as_deref())?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let lines = identities::run_suite(&alg, args.suite.into())?;
    print!("{}", identities::render_lines(&lines, args.machine));
    Ok(if identities::all_pass(&lines) { 0 } else { EXIT_FAIL })
}

fn cmd_isotope(args: IsotopeArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let at = parse_coords(&alg, &args.at)?;
    let iso = alg.isotope(&at)?;
    emit(&iso.to_text(), args.out.as_deref())?;
    Ok(0)
}

fn cmd_extend(args: ExtendArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let ext = alg.scalar_extension(args.degree)?;
    emit(&ext.to_text(), args.out.as_deref())?;
    Ok(0)
}

fn cmd_derivations(args: DerivationsArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let f = alg.field();
    let epsilons: &[Epsilon] = match args.epsilon {
        EpsilonArg::Plus => &[Epsilon::Plus],
        EpsilonArg::Minus => &[Epsilon::Minus],
        EpsilonArg::All => &[Epsilon::Plus, Epsilon::Minus],
    };
    let division = identities::is_division(&alg)?;
    let mut out = String::new();
    for &eps in epsilons {
        let space = derivation_space(&alg, eps);
        if args.machine {
            out.push_str(&format!("epsilon={} dim={}\n", eps.label(), space.dim()));
        } else {
            out.push_str(&format!("epsilon {}: dim={}\n", eps.label(), space.dim()));
        }
        for (i, d) in space.basis.iter().enumerate() {
            out.push_str(&format!("# basis {}\n{}\n", i + 1, d.render(f)));
        }
        if division {
            let inv_space = inverse_compatible_space(&alg, eps)?;
            let equal = inv_space.same_span(&space);
            if args.machine {
                out.push_str(&format!(
                    "inverse_compatible_dim={} equals_derivations={}\n",
                    inv_space.dim(),
                    if equal { "yes" } else { "no" }
                ));
            } else {
                out.push_str(&format!(
                    "inverse-compatible space: dim={} equals derivation space: {}\n",
                    inv_space.dim(),
                    if equal { "yes" } else { "no" }
                ));
            }
        }
    }
    if args.epsilon == EpsilonArg::All {
        let g = generalized_derivation_space(&alg)?;
        if f.p() == 2 {
            out.push_str(&format!(
                "generalized dim={} (characteristic 2: plus and minus spaces coincide)\n",
                g.dim()
            ));
        } else {
            out.push_str(&format!(
                "generalized dim={} (direct sum: {} + {})\n",
                g.dim(),
                g.plus.dim(),
                g.minus.dim()
            ));
        }
    }
    print!("{out}");
    Ok(0)
}

fn cmd_moufang(args: MoufangArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let ms = build_moufang(&alg)?;
    let mut failed = false;
    let mut out = String::new();
    let axioms = verify_moufang_axioms(&ms);
    failed |= !axioms;
    if args.machine {
        out.push_str(&format!("points={}\n", ms.n_points()));
        out.push_str(&format!("root_group_size={}\n", ms.root_group(0).len()));
        out.push_str(&format!("axioms={}\n", if axioms { "PASS" } else { "FAIL" }));
    } else {
        out.push_str(&format!("|X| = {}\n", ms.n_points()));
        out.push_str(&format!("|U_x| = {} for every point\n", ms.root_group(0).len()));
        out.push_str(&format!(
            "Moufang axioms: {}\n",
            if axioms { "PASS" } else { "FAIL" }
        ));
    }
    if args.order || args.proper {
        let order = little_projective_group_order(&ms, DEFAULT_GROUP_BOUND)?;
        if args.machine {
            out.push_str(&format!("order={order}\n"));
        } else {
            out.push_str(&format!("|G| = {order}\n"));
        }
        if args.proper {
            let proper = is_proper(&ms, DEFAULT_GROUP_BOUND)?;
            if args.machine {
                out.push_str(&format!("proper={}\n", if proper { "yes" } else { "no" }));
            } else {
                out.push_str(&format!(
                    "verdict: {}\n",
                    if proper { "proper" } else { "improper" }
                ));
            }
        }
    }
    if let Some(coords) = &args.recover {
        let e = parse_coords(&alg, coords)?;
        let e_idx = ms.table().index_of(&e);
        let report = recover_structure(&ms, e_idx)?;
        let all = report.all_pass();
        failed |= !all;
        let yesno = |b: bool| if b { "PASS" } else { "FAIL" };
        out.push_str(&format!("h-linear {}\n", yesno(report.linear)));
        out.push_str(&format!("h-QJ1 {}\n", yesno(report.qj1)));
        out.push_str(&format!("h-QJ2 {}\n", yesno(report.qj2)));
        out.push_str(&format!("h-QJ3 {}\n", yesno(report.qj3)));
        out.push_str(&format!("h-tau-inverse {}\n", yesno(report.tau_inverse)));
        out.push_str(&format!("h-biadditive {}\n", yesno(report.biadditive)));
        out.push_str(&format!("h-homogeneous {}\n", yesno(report.homogeneous)));
        out.push_str(&format!("h-quadratic {}\n", yesno(report.quadratic)));
        out.push_str(&format!("h-weak {}\n", yesno(report.weak)));
        let identical = report.reconstruction.as_ref() == Some(&alg);
        failed |= !identical;
        out.push_str(&format!(
            "reconstruction {}\n",
            if identical { "identical" } else { "different" }
        ));
    }
    print!("{out}");
    Ok(if failed { EXIT_FAIL } else { 0 })
}

fn cmd_search(args: SearchArgs) -> qjordan::Result<u8> {
    let census = match (args.sample, args.seed) {
        (Some(k), Some(seed)) => classify_sampled(args.p, args.n, k, seed)?,
        _ => {
            if !supports_full_enumeration(args.p, args.n) {
                return Err(qjordan::Error::Invalid(format!(
                    "space (p={}, n={}) needs --sample and --seed",
                    args.p, args.n
                )));
            }
            classify_candidates(args.p, args.n)?
        }
    };
    print!("{}", render_census(&census));
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(|e| {
            qjordan::Error::Invalid(format!("cannot create {}: {e}", dir.display()))
        })?;
        for (i, text) in census.weak_not_strict.iter().enumerate() {
            let path = dir.join(format!("weak_not_strict_{:04}.qja", i + 1));
            std::fs::write(&path, text).map_err(|e| {
                qjordan::Error::Invalid(format!("cannot write {}: {e}", path.display()))
            })?;
        }
    }
    if args.agreement {
        let ok = strictness_agreement_sweep(args.p, args.n)?;
        println!("agreement={}", if ok { "yes" } else { "no" });
        if !ok {
            return Ok(EXIT_FAIL);
        }
    }
    // A weak division candidate that is not strict is a verified-false
    // outcome, never silent.
    Ok(if census.weak_division_not_strict.is_empty() {
        0
    } else {
        EXIT_FAIL
    })
}

fn cmd_hua(args: HuaArgs) -> qjordan::Result<u8> {
    let alg = load_algebra(&args.file)?;
    let report = identities::check_identity(&alg, IdentityId::Hua)?;
    let line = identities::CheckLine {
        tag: "HUA".to_string(),
        status: if report.holds { Status::Pass } else { Status::Fail },
        witness: report
            .witness
            .as_ref()
            .map(|w| identities::witness_string(&alg, w)),
        skipped: Some(report.skipped),
    };
    print!("{}", identities::render_lines(&[line], args.machine));
    Ok(if report.holds { 0 } else { EXIT_FAIL })
}
