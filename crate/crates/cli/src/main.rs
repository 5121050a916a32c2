//! Command-line driver: reads a problem file describing a bound quiver
//! algebra with named modules, runs one analysis command, and prints a
//! deterministic report as JSON or plain text.
//!
//! Exit codes: 0 when the command passes (or has no verdict), 1 when a
//! check fails or a computation cannot finish, 2 when the input is
//! rejected.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tiltkit_cli::problem::{parse_problem, InputError, Problem};
use tiltkit_cli::report::{
    Body, CheckCtBody, CotorsionBody, ExtTableBody, FailureInfo, FunctorBody, MResolveBody,
    ModuleInfo, MorphismInfo, ObjectInfo, Report, ResolutionInfo, SearchCtBody, SequenceBody,
    ValidateBody,
};
use tiltkit::approx::{
    d_cokernel, d_kernel, m_resolution, verify_half_exact, DSequence, ExactSide, Subcategory,
};
use tiltkit::decompose::is_indecomposable;
use tiltkit::functorcat::{build_auslander_algebra, quotient_equivalence_report, MultSide};
use tiltkit::module::Module;
use tiltkit::resolve::{is_injective_module, is_projective_module};
use tiltkit::tilting::{
    certify_atlas, check_cotorsion_pair, ext_table, is_d_cluster_tilting, search_d_ct, IndecAtlas,
};

#[derive(Parser)]
#[command(
    name = "tiltkit",
    version,
    about = "Exact homological computations for modules over bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct Common {
    /// Problem file path.
    file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Overrides the seed declared in the problem file.
    #[arg(long)]
    seed: Option<u64>,
    /// Includes elapsed wall-clock time in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse the problem file and describe every declared object.
    Validate(Common),
    /// Tabulate extension dimensions between the subcategory members.
    ExtTable {
        #[command(flatten)]
        common: Common,
        /// Highest extension degree to tabulate.
        #[arg(long, default_value_t = 2)]
        max_ext: usize,
    },
    /// Decide whether the subcategory is d-cluster-tilting in the atlas.
    CheckCt(Common),
    /// Enumerate every d-cluster-tilting subcategory inside the atlas.
    SearchCt(Common),
    /// Construct the higher kernel of a named morphism.
    Dkernel {
        #[command(flatten)]
        common: Common,
        /// Name of a morphism declared in the problem file.
        #[arg(long)]
        morphism: String,
    },
    /// Construct the higher cokernel of a named morphism.
    Dcokernel {
        #[command(flatten)]
        common: Common,
        /// Name of a morphism declared in the problem file.
        #[arg(long)]
        morphism: String,
    },
    /// Resolve modules by right approximations from the subcategory.
    MResolve {
        #[command(flatten)]
        common: Common,
        /// Resolve only this module (default: every atlas member).
        #[arg(long)]
        module: Option<String>,
        /// Give up after this many resolution steps.
        #[arg(long, default_value_t = 8)]
        max_steps: usize,
    },
    /// Analyze the subcategory's endomorphism algebra and functor category.
    FunctorReport(Common),
    /// Test the cotorsion-pair conditions for the subcategory.
    CotorsionCheck(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Validate(c)
            | Command::CheckCt(c)
            | Command::SearchCt(c)
            | Command::FunctorReport(c)
            | Command::CotorsionCheck(c) => c,
            Command::ExtTable { common, .. }
            | Command::Dkernel { common, .. }
            | Command::Dcokernel { common, .. }
            | Command::MResolve { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::ExtTable { .. } => "ext-table",
            Command::CheckCt(_) => "check-ct",
            Command::SearchCt(_) => "search-ct",
            Command::Dkernel { .. } => "dkernel",
            Command::Dcokernel { .. } => "dcokernel",
            Command::MResolve { .. } => "m-resolve",
            Command::FunctorReport(_) => "functor-report",
            Command::CotorsionCheck(_) => "cotorsion-check",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: &Command) -> Result<bool> {
    let common = command.common();
    let text = std::fs::read_to_string(&common.file).map_err(|e| {
        InputError(format!("cannot read `{}`: {e}", common.file.display()))
    })?;
    let problem = parse_problem(&text)?;
    let seed = common.seed.unwrap_or(problem.seed);

    let start = Instant::now();
    let (body, verdict) = match command {
        Command::Validate(_) => cmd_validate(&problem)?,
        Command::ExtTable { max_ext, .. } => cmd_ext_table(&problem, *max_ext)?,
        Command::CheckCt(_) => cmd_check_ct(&problem, seed)?,
        Command::SearchCt(_) => cmd_search_ct(&problem, seed)?,
        Command::Dkernel { morphism, .. } => cmd_sequence(&problem, morphism, seed, true)?,
        Command::Dcokernel { morphism, .. } => cmd_sequence(&problem, morphism, seed, false)?,
        Command::MResolve {
            module, max_steps, ..
        } => cmd_m_resolve(&problem, module.as_deref(), *max_steps)?,
        Command::FunctorReport(_) => cmd_functor_report(&problem, seed)?,
        Command::CotorsionCheck(_) => cmd_cotorsion(&problem, seed)?,
    };
    let elapsed_ms = common
        .timings
        .then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX));

    let report = Report {
        command: command.name().to_string(),
        seed,
        verdict,
        elapsed_ms,
        body,
    };
    let rendered = match common.format {
        Format::Json => tiltkit_cli::report::render_json(&report),
        Format::Human => tiltkit_cli::report::render_human(&report),
    };
    print!("{rendered}");
    Ok(verdict.unwrap_or(true))
}

/// The subcategory named in the problem file, as resolved modules.
fn subcategory_of(problem: &Problem) -> Result<(Vec<String>, Subcategory)> {
    let names = problem.subcategory.clone().ok_or_else(|| {
        InputError("the problem file declares no `subcategory`".to_string())
    })?;
    if names.is_empty() {
        return Err(InputError("the `subcategory` list is empty".to_string()).into());
    }
    let modules = problem.modules_named(&names)?;
    Ok((names, Subcategory::new(modules)?))
}

/// The atlas named in the problem file, certified.
fn atlas_of(problem: &Problem, seed: u64) -> Result<(Vec<String>, IndecAtlas)> {
    let names = problem
        .atlas
        .clone()
        .ok_or_else(|| InputError("the problem file declares no `atlas`".to_string()))?;
    if names.is_empty() {
        return Err(InputError("the `atlas` list is empty".to_string()).into());
    }
    let modules = problem.modules_named(&names)?;
    let mut atlas = IndecAtlas::new(problem.algebra.clone(), modules)?;
    let diagnostics = certify_atlas(&mut atlas, seed)?;
    if !diagnostics.is_empty() {
        return Err(InputError(format!(
            "the declared atlas fails certification: {}",
            diagnostics.join("; ")
        ))
        .into());
    }
    Ok((names, atlas))
}

fn object_info(m: &Module) -> ObjectInfo {
    ObjectInfo {
        name: m.name().to_string(),
        dims: m.dims().to_vec(),
        total_dim: m.total_dim(),
    }
}

fn cmd_validate(problem: &Problem) -> Result<(Body, Option<bool>)> {
    let pres = problem.algebra.presentation()?;
    let mut modules = Vec::new();
    for m in &problem.modules {
        modules.push(ModuleInfo {
            name: m.name().to_string(),
            dims: m.dims().to_vec(),
            total_dim: m.total_dim(),
            projective: is_projective_module(m)?,
            injective: is_injective_module(m)?,
            indecomposable: is_indecomposable(m)?,
        });
    }
    let morphisms = problem
        .morphisms
        .iter()
        .map(|(name, f)| MorphismInfo {
            name: name.clone(),
            source: f.source().name().to_string(),
            target: f.target().name().to_string(),
            rank: f.rank(),
            injective: f.is_injective(),
            surjective: f.is_surjective(),
        })
        .collect();
    let body = ValidateBody {
        vertices: pres.quiver.n_vertices(),
        arrows: pres.quiver.arrows().len(),
        algebra_dim: problem.algebra.dim(),
        d: problem.d,
        modules,
        morphisms,
        subcategory: problem.subcategory.clone(),
        atlas: problem.atlas.clone(),
    };
    Ok((Body::Validate(body), Some(true)))
}

fn cmd_ext_table(problem: &Problem, max_ext: usize) -> Result<(Body, Option<bool>)> {
    if max_ext == 0 {
        return Err(InputError("--max-ext must be at least 1".to_string()).into());
    }
    let (members, sub) = subcategory_of(problem)?;
    let entries = ext_table(&sub, max_ext)?;
    Ok((
        Body::ExtTable(ExtTableBody {
            members,
            max_degree: max_ext,
            entries,
        }),
        None,
    ))
}

fn cmd_check_ct(problem: &Problem, seed: u64) -> Result<(Body, Option<bool>)> {
    let (members, sub) = subcategory_of(problem)?;
    let (_, atlas) = atlas_of(problem, seed)?;
    let ct = is_d_cluster_tilting(&sub, &atlas, problem.d, seed)?;
    let failures = ct
        .failures
        .iter()
        .map(|f| FailureInfo {
            condition: f.condition.clone(),
            left: f.left.clone(),
            right: f.right.clone(),
            degree: f.ext_index,
            dimension: f.dimension,
        })
        .collect();
    Ok((
        Body::CheckCt(CheckCtBody {
            d: problem.d,
            members,
            failures,
        }),
        Some(ct.verdict),
    ))
}

fn cmd_search_ct(problem: &Problem, seed: u64) -> Result<(Body, Option<bool>)> {
    let (atlas_names, atlas) = atlas_of(problem, seed)?;
    let solutions: Vec<Vec<String>> = search_d_ct(&atlas, problem.d)?
        .into_iter()
        .map(|indices| indices.into_iter().map(|i| atlas_names[i].clone()).collect())
        .collect();
    Ok((
        Body::SearchCt(SearchCtBody {
            d: problem.d,
            atlas: atlas_names,
            count: solutions.len(),
            solutions,
        }),
        None,
    ))
}

fn sequence_body(
    seq: &DSequence,
    sub: &Subcategory,
    morphism: &str,
    d: usize,
) -> Result<SequenceBody> {
    let exact_into_members =
        verify_half_exact(seq, sub, ExactSide::IntoMembers)?.is_none();
    let exact_from_members =
        verify_half_exact(seq, sub, ExactSide::FromMembers)?.is_none();
    Ok(SequenceBody {
        morphism: morphism.to_string(),
        d,
        objects: seq.objects.iter().map(object_info).collect(),
        exact_into_members,
        exact_from_members,
    })
}

fn cmd_sequence(
    problem: &Problem,
    morphism: &str,
    seed: u64,
    kernel: bool,
) -> Result<(Body, Option<bool>)> {
    let (_, sub) = subcategory_of(problem)?;
    let f = problem.morphism(morphism)?;
    let seq = if kernel {
        d_kernel(f, &sub, problem.d, seed)?
    } else {
        d_cokernel(f, &sub, problem.d, seed)?
    };
    let body = sequence_body(&seq, &sub, morphism, problem.d)?;
    // The construction guarantees one exactness direction; report it as the
    // verdict (kernels the covariant one, cokernels the contravariant one).
    let verdict = if kernel {
        body.exact_from_members
    } else {
        body.exact_into_members
    };
    Ok((Body::Sequence(body), Some(verdict)))
}

fn cmd_m_resolve(
    problem: &Problem,
    module: Option<&str>,
    max_steps: usize,
) -> Result<(Body, Option<bool>)> {
    let (_, sub) = subcategory_of(problem)?;
    let targets: Vec<Module> = match module {
        Some(name) => vec![problem.module(name)?.clone()],
        None => {
            let names = problem.atlas.clone().ok_or_else(|| {
                InputError(
                    "pass --module NAME or declare an `atlas` to resolve".to_string(),
                )
            })?;
            problem.modules_named(&names)?
        }
    };
    let mut resolutions = Vec::new();
    for target in &targets {
        let res = m_resolution(target, &sub, max_steps)?;
        resolutions.push(ResolutionInfo {
            target: target.name().to_string(),
            length: res.objects.len().saturating_sub(1),
            terms: res.objects.iter().map(object_info).collect(),
        });
    }
    Ok((Body::MResolve(MResolveBody { resolutions }), Some(true)))
}

fn cmd_functor_report(problem: &Problem, seed: u64) -> Result<(Body, Option<bool>)> {
    let (members, sub) = subcategory_of(problem)?;
    let (_, atlas) = atlas_of(problem, seed)?;
    let report = quotient_equivalence_report(&sub, &atlas, problem.d, seed)?;
    let gamma = build_auslander_algebra(&sub)?;
    let marked_members = members
        .iter()
        .enumerate()
        .filter(|(i, _)| gamma.is_marked(*i))
        .map(|(_, n)| n.clone())
        .collect();
    let body = FunctorBody {
        members,
        marked_members,
        dim_endomorphism_algebra: report.dim_gamma,
        dim_corner: report.dim_corner,
        dim_base_algebra: report.dim_algebra,
        corner_matches: report.corner_matches,
        matched_side: report.matched_side.map(|s| {
            match s {
                MultSide::Direct => "direct",
                MultSide::Opposite => "opposite",
            }
            .to_string()
        }),
        hom_dims_match: report.hom_dims_match,
        restriction_identity: report.restriction_identity,
    };
    Ok((Body::Functor(body), Some(report.verdict)))
}

fn cmd_cotorsion(problem: &Problem, seed: u64) -> Result<(Body, Option<bool>)> {
    let (members, sub) = subcategory_of(problem)?;
    let (_, atlas) = atlas_of(problem, seed)?;
    let report = check_cotorsion_pair(&sub, &atlas, seed)?;
    Ok((
        Body::Cotorsion(CotorsionBody {
            members,
            failures: report.failures,
        }),
        Some(report.verdict),
    ))
}
