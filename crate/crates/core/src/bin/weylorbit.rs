use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weylorbit::io::{self, SampleFile, SpectrumFile, Values};
use weylorbit::orbitfn::FunctionType;
use weylorbit::transforms::{DiscreteTransform, Kernel, DEFAULT_BUDGET};
use weylorbit::{Error, System};

#[derive(Parser)]
#[command(name = "weylorbit", version, about = "Orbit functions and discrete Weyl-orbit transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Complex,
    Hartley,
}

impl From<KernelArg> for Kernel {
    fn from(k: KernelArg) -> Self {
        match k {
            KernelArg::Complex => Kernel::Complex,
            KernelArg::Hartley => Kernel::Hartley,
        }
    }
}

#[derive(clap::Args)]
struct GridArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long = "M")]
    m: i64,
    #[arg(long = "type", allow_hyphen_values = true)]
    ftype: String,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, marks and related data of an algebra.
    Rootinfo {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Grid points of F_M with their weights.
    Points {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Labels of Λ_M with their weights.
    Labels {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Number of grid points, optionally checked against the closed form.
    Count {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        closed_form: bool,
    },
    /// Samples of one orbit function on the grid, as a sample file.
    Sample {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        label: Vec<i64>,
        #[arg(long, value_enum, default_value = "complex")]
        kernel: KernelArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Forward transform of a sample file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Interpolant of a spectrum file, on the grid or at given points.
    Synthesize {
        #[arg(long)]
        input: PathBuf,
        /// JSON array of points in ω^∨-coordinates ("p/q" strings).
        #[arg(long)]
        at: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Orthogonality, cardinality and Parseval checks.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "complex")]
        kernel: KernelArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Values of one orbit function over the domain of a rank-2 algebra, as CSV.
    Raster {
        #[arg(long)]
        algebra: String,
        #[arg(long = "type", allow_hyphen_values = true)]
        ftype: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        label: Vec<i64>,
        #[arg(long, value_enum, default_value = "hartley")]
        kernel: KernelArg,
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn open_grid(g: &GridArgs) -> Result<(System, FunctionType), Error> {
    if g.m <= 0 {
        return Err(Error::ZeroResolution);
    }
    let sys = System::from_name(&g.algebra)?;
    let ftype: FunctionType = g.ftype.parse()?;
    ftype.check(sys.data())?;
    Ok((sys, ftype))
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Rootinfo { algebra, output } => {
            let sys = System::from_name(&algebra)?;
            emit(&output, &json(&io::root_info(&sys))?)?;
        }
        Command::Points { grid, format, output } => {
            let (sys, ft) = open_grid(&grid)?;
            let f = io::points_file(&sys, ft, grid.m)?;
            let text = match format {
                Format::Json => json(&f)?,
                Format::Csv => io::points_csv(&f)?,
            };
            emit(&output, &text)?;
        }
        Command::Labels { grid, format, output } => {
            let (sys, ft) = open_grid(&grid)?;
            let f = io::labels_file(&sys, ft, grid.m)?;
            let text = match format {
                Format::Json => json(&f)?,
                Format::Csv => io::labels_csv(&f)?,
            };
            emit(&output, &text)?;
        }
        Command::Count { grid, closed_form } => {
            let (sys, ft) = open_grid(&grid)?;
            let rep = io::count(&sys, ft, grid.m, closed_form)?;
            emit(&None, &json(&rep)?)?;
            if !rep.consistent {
                return Ok(Outcome::VerificationFailed);
            }
        }
        Command::Sample { grid, label, kernel, output } => {
            let (sys, ft) = open_grid(&grid)?;
            let orbit = sys.label_orbit(ft, &label)?;
            let t = DiscreteTransform::new(&sys, ft, grid.m)?;
            let pts: Vec<_> = t.points.points.iter().map(|p| p.coords(grid.m)).collect();
            let kernel = Kernel::from(kernel);
            let values = match kernel {
                Kernel::Complex => Values::from_complex(&pts.iter().map(|y| orbit.psi(y)).collect::<Vec<_>>()),
                Kernel::Hartley => Values::Real(pts.iter().map(|y| orbit.zeta(y)).collect()),
            };
            emit(&output, &json(&io::sample_file(&t, kernel, values))?)?;
        }
        Command::Analyze { input, output } => {
            let samples: SampleFile = serde_json::from_str(&fs::read_to_string(input)?)?;
            emit(&output, &json(&io::analyze(&samples)?)?)?;
        }
        Command::Synthesize { input, at, output } => {
            let spectrum: SpectrumFile = serde_json::from_str(&fs::read_to_string(input)?)?;
            let text = match at {
                Some(p) => {
                    let points: Vec<Vec<String>> = serde_json::from_str(&fs::read_to_string(p)?)?;
                    json(&io::synthesize_at(&spectrum, &points)?)?
                }
                None => json(&io::synthesize(&spectrum)?)?,
            };
            emit(&output, &text)?;
        }
        Command::Verify { grid, kernel, budget } => {
            let (sys, ft) = open_grid(&grid)?;
            let rep = io::verify(&sys, ft, grid.m, kernel.into(), budget)?;
            emit(&None, &json(&rep)?)?;
            if !rep.pass {
                return Ok(Outcome::VerificationFailed);
            }
        }
        Command::Raster { algebra, ftype, label, kernel, resolution, output } => {
            if resolution == 0 {
                return Err(Error::Invalid("raster resolution must be positive".into()));
            }
            let sys = System::from_name(&algebra)?;
            let ft: FunctionType = ftype.parse()?;
            let rows = io::raster(&sys, ft, &label, kernel.into(), resolution)?;
            emit(&output, &io::raster_csv(&rows)?)?;
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
