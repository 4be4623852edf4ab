use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use goldflag::constructions::{
    verify_angle_configuration, verify_layout_identities, verify_layout_structure, Builtin, ConstructionError,
    FlagLayout, VerificationReport,
};
use goldflag::exactnum::{ConstructibleExpr, ExactError};
use goldflag::flagspec::{self, Bindings, SpecError};
use goldflag::render::{json_emit, svg_emit, RenderError, RenderOptions};

const EXIT_ERROR: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "goldflag", version, about = "Exact golden-ratio flag constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a flag and write it as SVG or JSON.
    Build {
        /// Builtin name (see `list`) or path to a .flag file.
        flag: String,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Output units per canvas unit. Any expression; `width` and `height`
        /// are bound to the canvas size, so `2.4/width` renders 2.4 wide.
        #[arg(long, value_name = "EXPR", default_value = "1")]
        scale: String,
        /// Significant digits per coordinate (rounded half to even).
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(3..=1000))]
        digits: u32,
        /// Output format; defaults to json for a .json path, svg otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check every stated identity of a flag; exit 0 iff all hold.
    Verify {
        /// Builtin name or path to a .flag file.
        flag: String,
    },
    /// Evaluate an expression such as "sqrt(10-2*sqrt(5))/(1+sqrt(5))".
    ///
    /// The value is printed to DIGITS significant digits, rounded half to
    /// even. Digits are never truncated, so the last one may differ from a
    /// truncated expansion.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=1000))]
        digits: u32,
        /// Working precision to start from; raised automatically until the
        /// rounding is certified.
        #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u32).range(1..=65536))]
        precision_bits: u32,
    },
    /// Print a flag's width/height ratio.
    Ratio {
        /// Builtin name or path to a .flag file.
        flag: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=1000))]
        digits: u32,
    },
    /// List the builtin flags.
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn error(message: impl Display) -> Self {
        Failure { code: EXIT_ERROR, message: message.to_string() }
    }

    fn from_exact(e: &ExactError, message: impl Display) -> Self {
        let code = match e {
            ExactError::PrecisionExhausted { .. } => EXIT_INCONCLUSIVE,
            _ => EXIT_ERROR,
        };
        Failure { code, message: message.to_string() }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        Failure::from_exact(&e, &e)
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match &e {
            ConstructionError::Exact(inner) => Failure::from_exact(inner, &e),
            _ => Failure::error(e),
        }
    }
}

impl From<RenderError> for Failure {
    fn from(e: RenderError) -> Self {
        match &e {
            RenderError::Exact(inner) => Failure::from_exact(inner, &e),
            _ => Failure::error(e),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        let exhausted = matches!(&e, SpecError::Certification(c) if c.message.starts_with("could not certify"));
        Failure { code: if exhausted { EXIT_INCONCLUSIVE } else { EXIT_ERROR }, message: e.to_string() }
    }
}

/// A flag argument resolved to a layout, plus the builtin it claims to be.
struct Loaded {
    layout: FlagLayout,
    builtin: Option<Builtin>,
    from_file: bool,
}

fn load(arg: &str) -> Result<Loaded, Failure> {
    if let Ok(b) = arg.parse::<Builtin>() {
        return Ok(Loaded { layout: b.layout()?, builtin: Some(b), from_file: false });
    }
    let path = Path::new(arg);
    if !path.is_file() && path.extension().is_none_or(|e| e != "flag") {
        return Err(ConstructionError::UnknownFlag(arg.to_string()).into());
    }
    let source =
        fs::read_to_string(path).map_err(|e| Failure::error(format!("cannot read {}: {e}", path.display())))?;
    let layout = flagspec::load(&source).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    let builtin = layout.name.parse().ok();
    Ok(Loaded { layout, builtin, from_file: true })
}

fn scale_for(layout: &FlagLayout, source: &str) -> Result<ConstructibleExpr, Failure> {
    let ast = flagspec::parse_expression(&flagspec::tokenize(source).map_err(SpecError::from)?)
        .map_err(SpecError::from)?;
    let mut bindings = Bindings::new();
    bindings.insert("width".into(), layout.canvas.width.clone());
    bindings.insert("height".into(), layout.canvas.height.clone());
    let scale = flagspec::lower_expr(&ast, &bindings).map_err(|e| Failure::error(format!("--scale: {e}")))?;
    Ok(scale)
}

fn build(flag: &str, out: &Path, scale: &str, digits: u32, format: Option<Format>) -> Result<(), Failure> {
    let loaded = load(flag)?;
    let layout = &loaded.layout;
    let mut opts = RenderOptions::new(scale_for(layout, scale)?);
    opts.digits = digits;
    let format = format.unwrap_or(match out.extension() {
        Some(e) if e == "json" => Format::Json,
        _ => Format::Svg,
    });
    let bytes = match format {
        Format::Svg => svg_emit(layout, &opts)?,
        Format::Json => json_emit(layout, &opts)?,
    };
    fs::write(out, &bytes).map_err(|e| Failure::error(format!("cannot write {}: {e}", out.display())))?;
    let size = |e: &ConstructibleExpr| -> Result<String, Failure> {
        Ok(e.to_decimal(6)?.to_trimmed_string())
    };
    let width = size(&(&layout.canvas.width * &opts.scale))?;
    let height = size(&(&layout.canvas.height * &opts.scale))?;
    let kind = if format == Format::Svg { "svg" } else { "json" };
    println!("wrote {} ({kind}, {}, {width} x {height}, {} bytes)", out.display(), layout.name, bytes.len());
    Ok(())
}

fn verify(flag: &str) -> Result<u8, Failure> {
    let loaded = load(flag)?;
    let layout = &loaded.layout;
    let mut report = VerificationReport::default();
    if let Some(b) = loaded.builtin {
        report.extend(verify_layout_identities(b, layout)?);
        if b == Builtin::Chile1818 {
            report.extend(verify_angle_configuration(layout)?);
        }
    }
    if loaded.from_file {
        report.extend(verify_layout_structure(layout)?);
    }
    print!("{report}");
    let passed = report.checks.iter().filter(|c| c.status.is_success()).count();
    println!("{}: {passed}/{} checks passed", layout.name, report.checks.len());
    Ok(if report.all_passed() {
        0
    } else if report.inconclusive() {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_ERROR
    })
}

fn eval(expr: &str, digits: u32, precision_bits: u32) -> Result<(), Failure> {
    let e = flagspec::eval_source(expr)?;
    println!("{}", e.to_decimal_from(digits, precision_bits)?.to_fixed_string());
    Ok(())
}

fn ratio(flag: &str, digits: u32) -> Result<(), Failure> {
    let loaded = load(flag)?;
    println!("{}", loaded.layout.ratio()?.to_decimal(digits)?.to_fixed_string());
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { flag, out, scale, digits, format } => build(&flag, &out, &scale, digits, format).map(|_| 0),
        Command::Verify { flag } => verify(&flag),
        Command::Eval { expr, digits, precision_bits } => eval(&expr, digits, precision_bits).map(|_| 0),
        Command::Ratio { flag, digits } => ratio(&flag, digits).map(|_| 0),
        Command::List => {
            for b in Builtin::ALL {
                println!("{b}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
