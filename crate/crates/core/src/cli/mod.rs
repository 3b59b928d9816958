mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

use koszulkit::homotopy::DegreeWindow;

pub use report::Report;

#[derive(Parser)]
#[command(
    name = "koszulkit",
    version,
    about = "Exact Harrison / Chevalley-Eilenberg computations on finite coalgebras and curved Lie algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct Opts {
    /// Truncation weight for free algebras and symmetric powers [default: 6]
    #[arg(long, global = true)]
    pub max_weight: Option<u32>,
    /// Degree window LO..HI for homology checks [default: -2..4]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub degrees: Option<DegreeWindow>,
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,
    /// Coaugmentation (true or fake) as an element literal, e.g. "(g1+g2)/2"
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub coaug: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the axioms of any object or morphism
    Validate { file: String },
    /// Rational group-like elements of a coalgebra
    Gplikes { file: String },
    /// Split a coalgebra into conilpotent components
    Decompose { file: String },
    /// Reduced coalgebra along the coaugmentation
    Reduce { file: String },
    /// Curved Harrison algebra of a coalgebra
    Harr { file: String },
    /// Extended Chevalley-Eilenberg coalgebra of a finite curved Lie algebra
    Ce {
        file: String,
        /// MC witnesses (default: the complete list when it can be solved for)
        #[arg(long = "witness", allow_hyphen_values = true)]
        witnesses: Vec<String>,
    },
    /// Convolution Lie algebra Hom(C̄, g)
    Conv { coalgebra: String, lie: String },
    /// Maurer-Cartan elements
    Mc {
        #[command(subcommand)]
        action: McAction,
    },
    /// Twist a curved Lie algebra by a degree-1 element
    Twist {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Compose two morphisms: OUTER ∘ INNER
    Compose { outer: String, inner: String },
    /// Curved coproduct of two free curved Lie algebras
    Coprod {
        g: String,
        h: String,
        /// Morphisms out of g and h into a common target; prints the mediating morphism
        #[arg(long, num_args = 2, value_names = ["FG", "FH"])]
        mediate: Option<Vec<String>>,
    },
    /// Homology of a dg Lie algebra or a dg coalgebra on the degree window
    Homology { file: String },
    /// Is a strict morphism or coalgebra map a quasi-isomorphism on the window
    Qiso { file: String },
    /// Weak equivalence of coalgebras
    WeqCog { file: String },
    /// Weak equivalence of curved Lie algebras
    WeqCula {
        file: String,
        #[arg(long = "source-mc", allow_hyphen_values = true)]
        source_mc: Vec<String>,
        #[arg(long = "target-mc", allow_hyphen_values = true)]
        target_mc: Vec<String>,
    },
    /// The Harrison / Chevalley-Eilenberg adjunction
    Adjoint {
        #[command(subcommand)]
        direction: AdjointDirection,
    },
    /// Unit map C → ČE Harr C and its weak-equivalence check
    Unit { file: String },
    /// Contraction of A ∐ 0 twisted by x, and its homology
    Lemma410 { file: String },
}

#[derive(Subcommand)]
pub enum McAction {
    /// Residual ω + dx + ½[x,x] of an element
    Verify {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Complete MC set when the equation is linear or a single scalar quadratic
    SolveLinear { file: String },
    /// The MC equations in coordinates on degree 1
    Equations { file: String },
}

#[derive(Args)]
pub struct AdjointArgs {
    pub coalgebra: String,
    pub lie: String,
    /// Image of a basis vector: NAME=EXPR (unlisted vectors map to 0)
    #[arg(long = "image", allow_hyphen_values = true)]
    pub images: Vec<String>,
    /// Change of curvature `a` of the curved morphism (to-cog only)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// MC witnesses of g indexing ČE(g) (default: the solved list)
    #[arg(long = "witness", allow_hyphen_values = true)]
    pub witnesses: Vec<String>,
}

#[derive(Subcommand)]
pub enum AdjointDirection {
    /// From a curved morphism Harr(C) → g, given by the images of y_c
    ToCog(AdjointArgs),
    /// From a coalgebra map C → ČE(g), given by the images of the basis of C
    ToLie(AdjointArgs),
}

/// Runs the driver and returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    run(cli)
}

pub fn run(cli: Cli) -> i32 {
    match commands::dispatch(&cli) {
        Ok((report, output)) => {
            match output {
                Output::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json")
                ),
                Output::Text => print!("{}", report.text),
            }
            match report.passed {
                Some(false) => 1,
                _ => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
