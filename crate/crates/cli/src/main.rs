use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use affquandle::affinity::DEFAULT_SEARCH_LIMIT;
use affquandle::corpus::small_meshes_up_to_symmetry;
use affquandle::cover::{build_cover, is_homim_of_affine, verify_cover, Multitransversal};
use affquandle::format::{
    parse_affine_spec, parse_mesh, parse_partition, parse_table, write_cover_sidecar, write_mesh,
    write_quandle, AutomorphismSpec,
};
use affquandle::iso::{is_isomorphic, IsoClasses};
use affquandle::mesh::generate_max_mesh;
use affquandle::{AffineMesh, CoverError, GroupAutomorphism, MeshError, Partition, Quandle};

mod report;

use report::AnalysisReport;

#[derive(Parser)]
#[command(name = "affquandle", version, about = "Finite quandles, affine meshes and affine covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and affine verdicts of a quandle table
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Kv)]
        format: Format,
        /// Largest order for which affinity is decided by exhaustive search
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        search_limit: usize,
    },
    /// Build an affine quandle mapping onto the input
    Cover {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Transversal::Optimized)]
        transversal: Transversal,
        /// Directory receiving cover.txt and cover.sidecar.txt
        #[arg(long)]
        out: PathBuf,
    },
    /// Affine mesh utilities
    #[command(subcommand)]
    Mesh(MeshCommand),
    /// Quotient of a quandle by a congruence given as a partition file
    Quotient {
        path: PathBuf,
        partition: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism between two quandles
    Iso { first: PathBuf, second: PathBuf },
    /// Table of Aff(A, f) from a spec such as `8:mul:5` or `2x2:map:0,2,1,3`
    Affine {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One mesh per isomorphism class of sums over small groups
    Corpus {
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        max_indices: usize,
        /// Directory receiving mesh_NNNN.txt and sum_NNNN.txt
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MeshCommand {
    /// Check the mesh axioms
    Validate { path: PathBuf },
    /// Write the multiplication table of the sum
    Sum {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether the row set is a coset of a subgroup
    Coset { path: PathBuf },
    /// Whether the mesh has the shape of a semiregular extension
    Semireg { path: PathBuf },
    /// The mesh A_{n,k} with 2^k rows of constants
    Genmax {
        n: usize,
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Kv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Transversal {
    Simple,
    Optimized,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Invalid(String),
    Negative(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Negative(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Invalid(m) | Failure::Negative(m) | Failure::Internal(m) => m,
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_quandle(path: &Path) -> Result<Quandle> {
    let rows = parse_table(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Quandle::from_rows(&rows).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_mesh(path: &Path) -> Result<AffineMesh> {
    let raw = parse_mesh(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    AffineMesh::validate(raw).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(path: &Path, format: Format, search_limit: usize) -> Result<()> {
    let q = load_quandle(path)?;
    let report = AnalysisReport::compute(&q, search_limit);
    match format {
        Format::Kv => print!("{}", report.to_kv()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(())
}

fn cover(path: &Path, transversal: Transversal, out: &Path) -> Result<()> {
    let q = load_quandle(path)?;
    let t = match transversal {
        Transversal::Simple => Multitransversal::simple(&q),
        Transversal::Optimized => Multitransversal::optimized(&q),
    };
    let t = match t {
        Ok(t) => t,
        Err(CoverError::NotHomImage) => {
            return Err(Failure::Negative(format!(
                "{}: not a homomorphic image of an affine quandle",
                path.display()
            )))
        }
        Err(e) => return Err(Failure::Internal(e.to_string())),
    };
    let r = build_cover(&q, &t).map_err(|e| Failure::Internal(e.to_string()))?;
    let report = verify_cover(&r, &q);
    if let Some(f) = report.failure {
        return Err(Failure::Internal(format!("cover verification failed: {f}")));
    }
    fs::create_dir_all(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    let table = out.join("cover.txt");
    let sidecar = out.join("cover.sidecar.txt");
    write_or_print(Some(&table), &write_quandle(&r.affine.quandle))?;
    write_or_print(Some(&sidecar), &write_cover_sidecar(&r))?;
    println!("cover_order={}", r.order());
    println!("dis_order={}", r.displacements.len());
    println!("transversal_size={}", t.len());
    println!("kappa={}", t.kappa());
    println!("psi=surjective");
    println!("psi_bijective={}", yes(r.psi_is_bijective()));
    println!("verified=yes");
    println!("files=cover.txt cover.sidecar.txt");
    Ok(())
}

fn mesh(cmd: MeshCommand) -> Result<()> {
    match cmd {
        MeshCommand::Validate { path } => {
            let m = load_mesh(&path)?;
            println!("valid=yes");
            println!("indices={}", m.index_count());
            println!("sum_size={}", m.sum_size());
            println!("indecomposable={}", yes(m.is_indecomposable()));
            Ok(())
        }
        MeshCommand::Sum { path, out } => {
            let m = load_mesh(&path)?;
            write_or_print(out.as_deref(), &write_quandle(&m.sum()))
        }
        MeshCommand::Coset { path } => {
            let m = load_mesh(&path)?;
            match m.coset_failure() {
                None => println!("coset=true"),
                Some((y, z)) => {
                    println!("coset=false");
                    println!("witness={y:?} + {z:?}");
                }
            }
            Ok(())
        }
        MeshCommand::Semireg { path } => {
            let m = load_mesh(&path)?;
            println!("semiregular_form={}", m.semiregular_extension_form());
            Ok(())
        }
        MeshCommand::Genmax { n, k, out } => {
            let m = generate_max_mesh(n, k).map_err(|e| match e {
                MeshError::InvalidParams(_) => Failure::Input(e.to_string()),
                other => Failure::Internal(other.to_string()),
            })?;
            write_or_print(out.as_deref(), &write_mesh(&m))
        }
    }
}

fn quotient(path: &Path, partition: &Path, out: Option<&Path>) -> Result<()> {
    let q = load_quandle(path)?;
    let blocks =
        parse_partition(&read(partition)?).map_err(|e| Failure::Input(format!("{}: {e}", partition.display())))?;
    let p = Partition::new(q.size(), blocks).map_err(|e| Failure::Invalid(e.to_string()))?;
    let quo = q.quotient(&p).map_err(|e| Failure::Invalid(e.to_string()))?;
    write_or_print(out, &write_quandle(&quo))
}

fn iso(first: &Path, second: &Path) -> Result<()> {
    let a = load_quandle(first)?;
    let b = load_quandle(second)?;
    match is_isomorphic(&a, &b) {
        Some(map) => {
            println!("isomorphic");
            let images: Vec<String> = map.images().iter().map(|x| x.to_string()).collect();
            println!("map={}", images.join(" "));
        }
        None => println!("not isomorphic"),
    }
    Ok(())
}

fn affine(spec: &str, out: Option<&Path>) -> Result<()> {
    let (group, auto) = parse_affine_spec(spec).map_err(|e| Failure::Input(e.to_string()))?;
    let f = match auto {
        AutomorphismSpec::Multiply(u) => GroupAutomorphism::multiplication(&group, u),
        AutomorphismSpec::Images(images) => GroupAutomorphism::validate(&group, images),
    }
    .map_err(|e| Failure::Invalid(format!("automorphism: {e}")))?;
    let aff = affquandle::affine::make_affine(group, f);
    write_or_print(out, &write_quandle(&aff.quandle))
}

fn corpus(max_order: usize, max_indices: usize, out: Option<&Path>) -> Result<()> {
    let mut classes = IsoClasses::new();
    let mut meshes = 0usize;
    let mut kept: Vec<AffineMesh> = Vec::new();
    small_meshes_up_to_symmetry(max_order, max_indices, &mut |m| {
        meshes += 1;
        if classes.insert(m.sum()) {
            kept.push(m);
        }
    });
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for (i, m) in kept.iter().enumerate() {
            write_or_print(Some(&dir.join(format!("mesh_{i:04}.txt"))), &write_mesh(m))?;
            write_or_print(Some(&dir.join(format!("sum_{i:04}.txt"))), &write_quandle(&m.sum()))?;
        }
    }
    let positive = kept.iter().filter(|m| is_homim_of_affine(&m.sum())).count();
    println!("meshes={meshes}");
    println!("classes={}", kept.len());
    println!("homim_of_affine={positive}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { path, format, search_limit } => analyze(&path, format, search_limit),
        Command::Cover { path, transversal, out } => cover(&path, transversal, &out),
        Command::Mesh(cmd) => mesh(cmd),
        Command::Quotient { path, partition, out } => quotient(&path, &partition, out.as_deref()),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Affine { spec, out } => affine(&spec, out.as_deref()),
        Command::Corpus { max_order, max_indices, out } => corpus(max_order, max_indices, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
