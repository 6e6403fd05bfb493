use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use k3lat::checks::{self, Options};
use k3lat::commands;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "k3lat", version, about = "Exact checks for degree-2 K3 surfaces with four D4 points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the registered checks; exit 0 if all pass, 1 otherwise.
    Verify(VerifyArgs),
    #[command(subcommand)]
    Lattice(LatticeCmd),
    #[command(subcommand)]
    Sextic(SexticCmd),
    #[command(subcommand)]
    Modulimap(ModulimapCmd),
    #[command(subcommand)]
    Weierstrass(WeierstrassCmd),
    #[command(subcommand)]
    Gradedring(GradedringCmd),
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated check names (default: all).
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    #[arg(long)]
    json: bool,
    /// Truncation degree for the Hilbert series checks.
    #[arg(long, default_value_t = 100)]
    upto: usize,
    /// List the registered checks and exit.
    #[arg(long)]
    list: bool,
}

/// Lattices are given as expressions such as `sum=[span(2),E8,E8]` or
/// `I(2,3);scale=2`, or as a JSON Gram matrix.
#[derive(Subcommand)]
enum LatticeCmd {
    /// Rank, Gram matrix, determinant, signature and discriminant data.
    Info { lattice: String },
    Gram { lattice: String },
    /// All vectors of norm −2 (negative definite lattices of rank ≤ 10).
    Roots { lattice: String },
    /// Compare two even indefinite 2-elementary lattices.
    Isometric { left: String, right: String },
    /// Orthogonal complement of a vector or list of vectors (JSON).
    Complement {
        lattice: String,
        #[arg(long)]
        vectors: String,
    },
}

#[derive(Subcommand)]
enum SexticCmd {
    /// Dimension of sextics with D4 singularities at the given points.
    SbDim {
        /// JSON list of integer points, e.g. `[[1,0,0],[0,1,0]]`.
        #[arg(long)]
        points: String,
    },
    /// Whether all second partials of a sextic vanish at a point.
    D4Check {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        point: String,
    },
    GeneralPosition,
    /// Product of three conics `a1*yz + a2*xz + a3*xy` with `a1 + a2 + a3 = 0`.
    ConicProduct {
        #[arg(long, allow_hyphen_values = true)]
        q1: String,
        #[arg(long, allow_hyphen_values = true)]
        q2: String,
        #[arg(long, allow_hyphen_values = true)]
        q3: String,
    },
}

#[derive(Subcommand)]
enum ModulimapCmd {
    /// Image of three points of P^1, given as `s1,t1;s2,t2;s3,t3`.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
    },
    /// Contraction identities and the quadric factorization.
    Verify,
}

#[derive(Subcommand)]
enum WeierstrassCmd {
    /// Kodaira types of the family member with the given rational parameters.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        t4: String,
        #[arg(long, allow_hyphen_values = true)]
        t6: String,
        #[arg(long, allow_hyphen_values = true)]
        t10: String,
        #[arg(long, allow_hyphen_values = true)]
        t12: String,
    },
    FamilyInvariants {
        /// Include the discriminant polynomials in the output.
        #[arg(long)]
        emit_polys: bool,
    },
}

#[derive(Subcommand)]
enum GradedringCmd {
    /// Hilbert series coefficients of a weighted complete intersection.
    Hilbert {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        relations: Vec<u32>,
        #[arg(long, default_value_t = 30)]
        upto: usize,
    },
    /// Degree of the branch divisor from canonical bundle data.
    BranchDegree {
        #[arg(long, allow_negative_numbers = true)]
        orb: i64,
        #[arg(long, allow_negative_numbers = true)]
        coarse: i64,
        #[arg(long, allow_negative_numbers = true)]
        scale: i64,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn verify(args: &VerifyArgs) -> ExitCode {
    if args.list {
        let list: String = checks::REGISTRY.iter().map(|c| format!("{:<23} {}\n", c.name, c.claim)).collect();
        emit(&list);
        return ExitCode::SUCCESS;
    }
    let selected = match checks::select(args.only.as_deref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let results = checks::run_checks(&selected, &Options { upto: args.upto });
    if args.json {
        emit(&pretty(&checks::render_json(&results)));
    } else {
        emit(&checks::render_text(&results));
    }
    ExitCode::from(checks::exit_code(&results) as u8)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn dispatch(command: &Command) -> k3lat::Result<Value> {
    match command {
        Command::Verify(_) => unreachable!("handled separately"),
        Command::Lattice(c) => match c {
            LatticeCmd::Info { lattice } => commands::lattice_info(lattice),
            LatticeCmd::Gram { lattice } => commands::lattice_gram(lattice),
            LatticeCmd::Roots { lattice } => commands::lattice_roots(lattice),
            LatticeCmd::Isometric { left, right } => commands::lattice_isometric(left, right),
            LatticeCmd::Complement { lattice, vectors } => commands::lattice_complement(lattice, vectors),
        },
        Command::Sextic(c) => match c {
            SexticCmd::SbDim { points } => commands::sextic_sb_dim(points),
            SexticCmd::D4Check { poly, point } => commands::sextic_d4_check(poly, point),
            SexticCmd::GeneralPosition => commands::sextic_general_position(),
            SexticCmd::ConicProduct { q1, q2, q3 } => commands::sextic_conic_product(q1, q2, q3),
        },
        Command::Modulimap(c) => match c {
            ModulimapCmd::Eval { triple } => commands::modulimap_eval(triple),
            ModulimapCmd::Verify => commands::modulimap_verify(),
        },
        Command::Weierstrass(c) => match c {
            WeierstrassCmd::Classify { t4, t6, t10, t12 } => commands::weierstrass_classify([t4, t6, t10, t12]),
            WeierstrassCmd::FamilyInvariants { emit_polys } => commands::weierstrass_family_invariants(*emit_polys),
        },
        Command::Gradedring(c) => match c {
            GradedringCmd::Hilbert { weights, relations, upto } => commands::gradedring_hilbert(weights, relations, *upto),
            GradedringCmd::BranchDegree { orb, coarse, scale } => commands::gradedring_branch_degree(*orb, *coarse, *scale),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Verify(args) = &cli.command {
        return verify(args);
    }
    match dispatch(&cli.command) {
        Ok(v) => {
            emit(&pretty(&v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
