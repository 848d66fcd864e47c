use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "symlab",
    version,
    about = "Exact symbolic powers, Groebner bases and multiplier ideals"
)]
pub struct Cli {
    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Reduction-step budget per Groebner computation.
    #[arg(long, global = true, env = "SYMLAB_BUDGET")]
    pub budget: Option<u64>,

    /// Worker threads for the parallel verifiers. Output order does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Read ring, ideals, families and the command from a JSON session file.
    #[arg(long, global = true)]
    pub session: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    /// Comma-separated variable names, e.g. `x,y,z`.
    #[arg(long)]
    pub ring: String,

    /// lex, grlex, grevlex or block(k,<inner>).
    #[arg(long, default_value = "grevlex")]
    pub order: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Powers,
    DiffPowers,
    SymbolicMonomial,
    SymbolicPoints,
    SymbolicCone,
    Valuation,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,

    /// Defining ideal for powers, diff-powers and symbolic-monomial.
    #[arg(long)]
    pub ideal: Option<String>,

    /// Points such as `(0,0);(1,2)` for symbolic-points and symbolic-cone.
    #[arg(long)]
    pub points: Option<String>,
}

/// Where a radical ideal with known components comes from.
#[derive(Args, Debug, Clone)]
pub struct RadicalArgs {
    /// Square-free monomial ideal.
    #[arg(long, conflicts_with_all = ["points", "cone"])]
    pub ideal: Option<String>,

    /// Affine points, `(a,b,..);(c,d,..)`.
    #[arg(long, conflicts_with = "cone")]
    pub points: Option<String>,

    /// Projective points; the ideal is that of the lines through them.
    #[arg(long)]
    pub cone: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership of a polynomial.
    Member {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// Whether `--ideal` contains `--other`.
    Contains {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// The colon ideal (ideal : other).
    Quotient {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// The saturation (ideal : other^inf).
    Saturate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// Intersection with the subring of the variables not listed in `--vars`.
    Eliminate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        vars: String,
    },
    /// Dimension of the quotient ring.
    Colength {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Symbolic power of a radical ideal with known components.
    SymbolicPower {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        radical: RadicalArgs,
        #[arg(long)]
        m: u32,
    },
    /// Uniform containment of symbolic powers in ordinary powers.
    VerifyTheoremA {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        radical: RadicalArgs,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
    },
    /// Multiplier ideal of a monomial ideal.
    Multiplier {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Asymptotic multiplier ideal of a monomial graded family.
    AsymptoticMultiplier {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 64)]
        max_p: u32,
    },
    /// Log canonical threshold of a monomial ideal.
    Lct {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Checks J(a^c b^d) in J(a^c) J(b^d) for every listed c and d.
    VerifySubadditivity {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
        /// Comma-separated exponents for `--ideal`.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        c: Vec<String>,
        /// Comma-separated exponents for `--other`.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        d: Vec<String>,
    },
    /// Asymptotic multiplier ideals of a family against its members and powers.
    VerifyProp15 {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
    },
    /// From J(||a_l||) in b, conclude a_(ml) in b^m.
    VerifyTheoremB {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
    },
    /// Restriction to the coordinate subspace of the `--keep` variables.
    VerifyRestriction {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        c: Vec<String>,
        #[arg(long)]
        keep: String,
    },
    /// Checks a_k a_l in a_(k+l) for k + l <= n.
    FamilyCheck {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
    /// Order of vanishing of f(t, e^t - 1) at t = 0.
    ValuationOrder {
        #[arg(long, default_value = "x,y")]
        ring: String,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 32)]
        truncation: u32,
    },
    /// Colengths of a family and their growth class.
    ColengthGrowth {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
}
