mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "autfn", version, about = "Exact checks for Aut(F_n), its finite quotients, and Smith theory")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the relation suite.
    Relations {
        /// Largest free rank for the Nielsen and signed-permutation checks.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Largest number of pairs for the order-3 checks.
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Only run checks whose id matches this glob.
        #[arg(long)]
        check: Option<String>,
    },
    /// Enumerate the subgroup of Aut(F_n) generated by generator words.
    Subgroup {
        #[arg(long)]
        rank: usize,
        /// Element cap (default 10^6, or AUTFN_CAP).
        #[arg(long)]
        cap: Option<usize>,
        /// Print generators as a1 b1 a2 b2 ... (even rank only).
        #[arg(long)]
        paired: bool,
        /// Generator words such as `EPS12`, `R1`, `PERM(1 2) E1`.
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Enumerate a matrix group over F_p.
    MatrixGroup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Use all elementary matrices, giving SL(n, F_p).
        #[arg(long)]
        sl: bool,
        /// Generator word, abelianized and reduced mod p.
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// Raw matrix: rows separated by `;`, entries by spaces.
        #[arg(long = "matrix")]
        matrices: Vec<String>,
        /// Test simplicity.
        #[arg(long)]
        simple: bool,
        /// Test simplicity against every element instead of class representatives.
        #[arg(long)]
        exhaustive: bool,
        /// Normal closure of this element (matrix text or generator word).
        #[arg(long)]
        normal_closure: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Betti numbers of a complex over F_p.
    Homology {
        #[arg(long)]
        input: String,
        #[arg(long)]
        p: u32,
    },
    /// Smith theory checks for a simplicial action.
    Smith {
        #[arg(long)]
        input: String,
        #[arg(long)]
        action: String,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        check: SmithCheck,
        /// Restrict `fixed` to one named map.
        #[arg(long)]
        map: Option<String>,
    },
    /// Which rigidity theorem covers an action.
    Oracle {
        /// saut, aut, sl or gl.
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        space: Space,
        /// Dimension of the sphere or of the acyclic manifold.
        #[arg(long, allow_hyphen_values = true)]
        dim: isize,
        #[arg(long)]
        p: u32,
    },
    /// Automorphism induced by a graph symmetry.
    GraphAut {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        symmetry: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SmithCheck {
    Fixed,
    Borel,
    Pairs,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Sphere,
    Acyclic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
