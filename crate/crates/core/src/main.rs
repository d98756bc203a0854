use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sscode::closedform::{
    hierarchy_p1, hierarchy_p2, hierarchy_simplex, lifted_weight_enumerator, projective_transform,
    swd_p1, swd_p2, swd_simplex, SupportWeightDistribution, WeightEnumerator, WeightHierarchy,
};
use sscode::construct::{
    default_punctures, simplex_generator, ss_generator_ordered, CodeInstance, ColumnOrder,
    SolomonStifflerSpec,
};
use sscode::field::{make_field, FieldSpec};
use sscode::matrix::{parse_field_token, MatrixGF, Subspace};
use sscode::oracle::{
    direct_lifted_distribution, griesmer_slack, min_distance, swd_by_subcode_enumeration,
    swd_by_subspace_counting, EnumLimits,
};
use sscode::render;

#[derive(Parser)]
#[command(
    name = "sscode",
    version,
    about = "Solomon-Stiffler and simplex codes: construction, support weight distributions, lifting, weight hierarchies"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CodeArgs {
    /// Field size as p or p^m, e.g. 3 or 2^3
    #[arg(long, default_value = "2")]
    q: String,
    /// Code dimension
    #[arg(long)]
    k: usize,
    /// Puncture subspace dimensions, comma separated (e.g. 2,3)
    #[arg(long, value_delimiter = ',')]
    punctures: Vec<usize>,
    /// File with explicit puncture bases, one matrix block per blank-line-
    /// separated section ("p^m rows cols" header, then rows)
    #[arg(long)]
    basis_file: Option<PathBuf>,
    /// Use the projective construction (one column per projective point)
    #[arg(long)]
    projective: bool,
    /// Require pairwise distinct puncture dimensions
    #[arg(long)]
    strict_ss: bool,
    /// Lay columns out block-wise ([P, aP, ...]) instead of lexicographically
    #[arg(long)]
    block_layout: bool,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Method {
    Closed,
    OracleSubspace,
    OracleSubcode,
    OracleDirect,
}

#[derive(Copy, Clone, ValueEnum)]
enum Output {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the generator matrix and the promised parameters
    Construct {
        #[command(flatten)]
        args: CodeArgs,
    },
    /// Support weight distribution
    Swd {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Weight enumerator of the code lifted to GF(q^l)
    Lift {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Weight hierarchy d_1 < ... < d_k
    Hierarchy {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Cross-check closed forms against every oracle; nonzero exit on mismatch
    Verify {
        #[command(flatten)]
        args: CodeArgs,
        /// Also check the lifted enumerator for this degree
        #[arg(long)]
        l: Option<usize>,
    },
    /// The [ (q^k-1)/(q-1), k ] simplex code
    Simplex {
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
}

fn limits() -> EnumLimits {
    let mut l = EnumLimits::default();
    if let Ok(s) = std::env::var("SSW_ENUM_LIMIT") {
        if let Ok(v) = s.parse::<u128>() {
            l.max_subspaces = v;
            l.max_codewords = v;
        }
    }
    l
}

fn build_field(tok: &str) -> anyhow::Result<Arc<FieldSpec>> {
    let (p, m) = parse_field_token(tok)?;
    Ok(make_field(p, m, None)?)
}

fn load_basis_file(
    path: &PathBuf,
    field: &Arc<FieldSpec>,
    k: usize,
) -> anyhow::Result<Vec<Subspace>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = vec![];
    for block in text.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let m = MatrixGF::parse_text(block)?;
        if m.field() != field {
            bail!("basis block field does not match --q");
        }
        if m.cols() != k {
            bail!("basis block has {} columns, expected k = {k}", m.cols());
        }
        out.push(Subspace::from_generators(&m));
    }
    Ok(out)
}

struct Job {
    field: Arc<FieldSpec>,
    spec: SolomonStifflerSpec,
    /// Puncture dimensions, sorted; drives the closed-form dispatch.
    dims: Vec<usize>,
}

fn build_job(args: &CodeArgs) -> anyhow::Result<Job> {
    let field = build_field(&args.q)?;
    let punctures = match &args.basis_file {
        Some(path) => {
            if !args.punctures.is_empty() {
                bail!("--punctures and --basis-file are mutually exclusive");
            }
            load_basis_file(path, &field, args.k)?
        }
        None => default_punctures(&field, args.k, &args.punctures)?,
    };
    let mut dims: Vec<usize> = punctures.iter().map(|s| s.dim()).collect();
    dims.sort_unstable();
    let spec = SolomonStifflerSpec::new(
        field.clone(),
        args.k,
        punctures,
        args.projective,
        args.strict_ss,
    )?;
    Ok(Job { field, spec, dims })
}

fn build_instance(job: &Job, args: &CodeArgs) -> anyhow::Result<CodeInstance> {
    let order = if args.block_layout {
        ColumnOrder::Block
    } else {
        ColumnOrder::Lex
    };
    Ok(ss_generator_ordered(&job.spec, order)?)
}

/// Full-construction simplex table: every nonzero vector as a column, so
/// support weights are q - 1 times the projective ones.
fn full_simplex_swd(q: u64, k: usize) -> anyhow::Result<SupportWeightDistribution> {
    let qk = q.pow(k as u32);
    let mut swd = SupportWeightDistribution::new(q, k, (qk - 1) as usize);
    for j in 1..=k {
        let i = (qk - q.pow((k - j) as u32)) as usize;
        swd.add_mass(
            j,
            i,
            sscode::qcombin::gaussian_binomial(k as i64, j as i64, q)?,
        );
    }
    Ok(swd)
}

/// Closed-form support weight distribution of the FULL construction.
fn closed_full_swd(q: u64, k: usize, dims: &[usize]) -> anyhow::Result<SupportWeightDistribution> {
    Ok(match dims {
        [] => full_simplex_swd(q, k)?,
        [u] => swd_p1(q, k, *u)?,
        [u1, u2] => swd_p2(q, k, *u1, *u2)?,
        _ => bail!("closed forms cover at most two punctures; rerun with --method oracle-subspace"),
    })
}

fn compute_swd(
    job: &Job,
    args: &CodeArgs,
    method: Method,
) -> anyhow::Result<SupportWeightDistribution> {
    match method {
        Method::Closed => {
            let full = closed_full_swd(job.field.q(), job.spec.k, &job.dims)?;
            if args.projective {
                Ok(full.divide_weights(job.field.q() - 1)?)
            } else {
                Ok(full)
            }
        }
        Method::OracleSubspace | Method::OracleSubcode => {
            let inst = build_instance(job, args)?;
            let swd = if method == Method::OracleSubspace {
                swd_by_subspace_counting(&inst.generator, &limits())?
            } else {
                swd_by_subcode_enumeration(&inst.generator, &limits())?
            };
            Ok(swd)
        }
        Method::OracleDirect => {
            bail!("oracle-direct yields a weight enumerator; use the lift command")
        }
    }
}

fn print_swd(swd: &SupportWeightDistribution, output: Output) {
    match output {
        Output::Table => print!("{}", render::swd_table(swd)),
        Output::Csv => print!("{}", render::swd_csv(swd)),
        Output::Json => println!(
            "{}",
            render::report_json(swd.q, swd.k, swd.n, Some(swd), None, None)
        ),
    }
}

fn print_enumerator(we: &WeightEnumerator, q: u64, k: usize, n: usize, output: Output) {
    match output {
        Output::Table => println!("{we}"),
        Output::Csv => print!("{}", render::enumerator_csv(we)),
        Output::Json => println!("{}", render::report_json(q, k, n, None, None, Some(we))),
    }
}

fn diff_swd(label: &str, a: &SupportWeightDistribution, b: &SupportWeightDistribution) -> bool {
    if a == b {
        eprintln!("ok: {label}");
        return true;
    }
    eprintln!("MISMATCH: {label}");
    for j in 1..=a.k.max(b.k) {
        let empty = std::collections::BTreeMap::new();
        let ra = a.row(j).unwrap_or(&empty);
        let rb = b.row(j).unwrap_or(&empty);
        for i in ra
            .keys()
            .chain(rb.keys())
            .collect::<std::collections::BTreeSet<_>>()
        {
            let va = a.get(j, *i);
            let vb = b.get(j, *i);
            if va != vb {
                eprintln!("  j={j} i={i}: {va} vs {vb}");
            }
        }
    }
    false
}

fn run_verify(job: &Job, args: &CodeArgs, l: Option<usize>) -> anyhow::Result<bool> {
    let inst = build_instance(job, args)?;
    let lim = limits();
    println!(
        "[{}, {}] code over GF({}), expected d = {}",
        inst.n,
        inst.k,
        job.field.q(),
        inst.expected_min_distance
    );
    let mut ok = true;

    let by_subspace = swd_by_subspace_counting(&inst.generator, &lim)?;
    let by_subcode = swd_by_subcode_enumeration(&inst.generator, &lim)?;
    ok &= diff_swd(
        "subspace-counting vs subcode-enumeration",
        &by_subspace,
        &by_subcode,
    );

    if job.dims.len() <= 2 {
        let closed = compute_swd(job, args, Method::Closed)?;
        ok &= diff_swd("closed form vs subspace-counting", &closed, &by_subspace);
    } else {
        eprintln!("skip: no closed form for {} punctures", job.dims.len());
    }

    let d = min_distance(&inst.generator, &lim)?;
    if d == inst.expected_min_distance {
        eprintln!("ok: minimum distance {d}");
    } else {
        eprintln!(
            "MISMATCH: minimum distance {d}, expected {}",
            inst.expected_min_distance
        );
        ok = false;
    }
    let slack = griesmer_slack(inst.n as u64, inst.k, d, job.field.q());
    eprintln!("griesmer slack: {slack}");

    if let Some(l) = l {
        let direct = direct_lifted_distribution(&inst.generator, l, &lim)?;
        let via_swd = lifted_weight_enumerator(&by_subspace, l)?;
        if direct == via_swd {
            eprintln!("ok: lifted enumerator (l = {l})");
        } else {
            eprintln!("MISMATCH: lifted enumerator (l = {l})");
            eprintln!("  direct: {direct}");
            eprintln!("  via swd: {via_swd}");
            ok = false;
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Construct { args } => {
            let job = build_job(&args)?;
            let inst = build_instance(&job, &args)?;
            println!(
                "[{}, {}] code over GF({}), expected d = {}",
                inst.n,
                inst.k,
                job.field.q(),
                inst.expected_min_distance
            );
            print!("{}", inst.generator.to_text());
            Ok(true)
        }
        Cmd::Swd {
            args,
            method,
            output,
        } => {
            let job = build_job(&args)?;
            let swd = compute_swd(&job, &args, method)?;
            print_swd(&swd, output);
            Ok(true)
        }
        Cmd::Lift {
            args,
            l,
            method,
            output,
        } => {
            let job = build_job(&args)?;
            let q = job.field.q();
            let (we, n) = match method {
                Method::OracleDirect => {
                    let inst = build_instance(&job, &args)?;
                    (
                        direct_lifted_distribution(&inst.generator, l, &limits())?,
                        inst.n,
                    )
                }
                Method::Closed => {
                    let full = closed_full_swd(q, job.spec.k, &job.dims)?;
                    let we = lifted_weight_enumerator(&full, l)?;
                    if args.projective {
                        (projective_transform(&we, q)?, full.n / (q as usize - 1))
                    } else {
                        (we, full.n)
                    }
                }
                _ => {
                    let inst = build_instance(&job, &args)?;
                    let swd = swd_by_subspace_counting(&inst.generator, &limits())?;
                    (lifted_weight_enumerator(&swd, l)?, inst.n)
                }
            };
            print_enumerator(&we, q, job.spec.k, n, output);
            Ok(true)
        }
        Cmd::Hierarchy { args, output } => {
            let job = build_job(&args)?;
            let q = job.field.q();
            let full = match job.dims.as_slice() {
                [] => WeightHierarchy {
                    values: hierarchy_simplex(q, job.spec.k)?
                        .values
                        .iter()
                        .map(|v| v * (q - 1))
                        .collect(),
                },
                [u] => hierarchy_p1(q, job.spec.k, *u)?,
                [u1, u2] => hierarchy_p2(q, job.spec.k, *u1, *u2)?,
                _ => {
                    // Fall back to min support weights of the oracle table.
                    let inst = build_instance(&job, &args)?;
                    let swd = swd_by_subspace_counting(&inst.generator, &limits())?;
                    let values = (1..=job.spec.k)
                        .map(|j| swd.min_support_weight(j).unwrap() as u64)
                        .collect();
                    print_hierarchy(&WeightHierarchy { values }, output);
                    return Ok(true);
                }
            };
            let h = if args.projective {
                full.divide(q - 1)?
            } else {
                full
            };
            print_hierarchy(&h, output);
            Ok(true)
        }
        Cmd::Verify { args, l } => {
            let job = build_job(&args)?;
            let ok = run_verify(&job, &args, l)?;
            if ok {
                println!("verify: PASS");
            } else {
                println!("verify: FAIL");
            }
            Ok(ok)
        }
        Cmd::Simplex { q, k, output } => {
            let field = build_field(&q)?;
            let inst = simplex_generator(&field, k)?;
            println!(
                "[{}, {}] code over GF({}), expected d = {}",
                inst.n,
                inst.k,
                field.q(),
                inst.expected_min_distance
            );
            print!("{}", inst.generator.to_text());
            let swd = swd_simplex(field.q(), k)?;
            print_swd(&swd, output);
            Ok(true)
        }
    }
}

fn print_hierarchy(h: &WeightHierarchy, output: Output) {
    match output {
        Output::Table => println!("{h}"),
        Output::Csv => print!("{}", render::hierarchy_csv(h)),
        Output::Json => {
            let mut root = serde_json::Map::new();
            root.insert("hierarchy".into(), serde_json::json!(h.values));
            println!("{}", serde_json::Value::Object(root));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
