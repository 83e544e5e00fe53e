use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug, Clone)]
#[command(name = "borderline", version, about = "Exact multigraded apolarity and border-rank certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Ring descriptor: `P2`, `P1xP1`, `blocks=[3,3,3]`. Inferred from variable names when omitted.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Term order: `grevlex`, `lex:y0<y1<y2`, `weight:[1,2,3]`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Degree range `a..b`, or `(0,0)..(2,3)` for several blocks.
    #[arg(long, global = true)]
    pub range: Option<String>,
    /// Degree cap for enumeration.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Use `r` as the enumeration cap.
    #[arg(long, global = true)]
    pub legacy_cap: bool,
    /// Seed for randomized genericity checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Variables, grading and irrelevant ideal of a ring.
    Ring,
    /// Annihilator of a form.
    Ann {
        form: String,
        /// Only the generators of degree at most this.
        #[arg(long)]
        up_to: Option<i32>,
    },
    /// Hilbert function of `S/I` (or of `S/Ann(F)` with `--form`).
    Hf {
        #[arg(long, conflicts_with = "form")]
        ideal: Option<String>,
        #[arg(long)]
        form: Option<String>,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long)]
        ideal: String,
    },
    /// Saturation by the irrelevant ideal.
    Sat {
        #[arg(long)]
        ideal: String,
    },
    /// `dim Hom(I, S/I)_0`.
    Hom0 {
        #[arg(long)]
        ideal: String,
    },
    /// `dim Ext¹(J/I, S/J)_0`, with `J` the saturation of `I` unless given.
    Ext1 {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        over: Option<String>,
        /// Also evaluate the complete-intersection formula in this degree.
        #[arg(long)]
        ci: Option<i32>,
    },
    /// Ideals `J0 + (monomials)` with generic Hilbert function `h_r`.
    Enumerate {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        form: Option<String>,
        /// Base ideal `J0`; defaults to `(Ann(F)_{≤ base-degree})` or the zero ideal.
        #[arg(long, conflicts_with = "base_degree")]
        base: Option<String>,
        #[arg(long)]
        base_degree: Option<i32>,
        /// Only add monomials annihilating the form.
        #[arg(long)]
        apolar: bool,
        /// Split the output by the `Ext¹` obstruction and report tangent dimensions.
        #[arg(long)]
        ext_filter: bool,
    },
    /// Border rank of a monomial.
    #[command(name = "monomial-br")]
    MonomialBr {
        form: String,
        /// Skip the `r − 1` search.
        #[arg(long)]
        no_search: bool,
    },
    /// Wildness of a concise 3-tensor of minimal border rank.
    Wild3 {
        #[arg(long, required_unless_present = "replay")]
        m: Option<u64>,
        /// Dense nested JSON array, inline or `@file`.
        #[arg(long, required_unless_present = "replay")]
        tensor: Option<String>,
        /// Replay the certificates of the wild `P^3` family.
        #[arg(long, conflicts_with_all = ["m", "tensor"])]
        replay: bool,
    },
    /// Border identifiability through a Hilbert function plateau, or the derivative-rank genericity checks.
    Identifiable {
        #[arg(required_unless_present = "omega")]
        form: Option<String>,
        #[arg(long, required_unless_present = "omega")]
        r: Option<u64>,
        /// `a,e,target` or `all`.
        #[arg(long, conflicts_with_all = ["form", "r"])]
        omega: Option<String>,
    },
    /// Shape of the border variety of sums of powers.
    Vspbar {
        form: Option<String>,
        /// Complete intersection `J` apolar to the form.
        #[arg(long)]
        ci: Option<String>,
        /// Reducible cubic `A3`, `B4`, `C2`, …
        #[arg(long, conflicts_with_all = ["form", "ci", "vps"])]
        cw: Option<String>,
        /// Monomial exponents `a,b,c`.
        #[arg(long, conflicts_with_all = ["form", "ci"])]
        vps: Option<String>,
    },
    /// Replays the golden corpus and diffs against stored expectations.
    Corpus {
        #[arg(long)]
        dir: Option<std::path::PathBuf>,
        /// Rewrite the expectations instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ring => "ring",
            Command::Ann { .. } => "ann",
            Command::Hf { .. } => "hf",
            Command::Gb { .. } => "gb",
            Command::Sat { .. } => "sat",
            Command::Hom0 { .. } => "hom0",
            Command::Ext1 { .. } => "ext1",
            Command::Enumerate { .. } => "enumerate",
            Command::MonomialBr { .. } => "monomial-br",
            Command::Wild3 { .. } => "wild3",
            Command::Identifiable { .. } => "identifiable",
            Command::Vspbar { .. } => "vspbar",
            Command::Corpus { .. } => "corpus",
        }
    }
}
