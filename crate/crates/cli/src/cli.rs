//! Command-line surface.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "rmprop",
    version,
    about = "Trigonometric Rosen-Morse potential on the hypersphere: tables, spectra, and momentum-space propagators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Position-space samples of the potential and its two terms
    Potential(PotentialArgs),
    /// Closed-form momentum-space propagator, optionally verified by
    /// hemisphere quadrature
    Propagator(PropagatorArgs),
    /// Long-format propagator surface over a curvature sweep
    Fig1(Fig1Args),
    /// S-equation spectra aligned by principal quantum number, with
    /// degeneracy spreads
    Spectrum(SpectrumArgs),
    /// Harmonicity residual of cot chi under grid refinement
    Harmonic(HarmonicArgs),
}

/// Options shared by every subcommand. Flags override the config file,
/// which overrides built-in natural-unit defaults.
#[derive(Args)]
pub struct CommonArgs {
    /// Key = value config file (lowest precedence)
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Coupling G (energy·length); default 1
    #[arg(long = "G", value_name = "V")]
    pub g: Option<f64>,

    /// Curvature kappa (1/length²); default 1
    #[arg(long, value_name = "V")]
    pub kappa: Option<f64>,

    /// Reduced Planck constant; default 1
    #[arg(long, value_name = "V")]
    pub hbar: Option<f64>,

    /// Reduced mass mu; default 0.5 (so 2mu = 1)
    #[arg(long, value_name = "V")]
    pub mu: Option<f64>,

    /// Angular momentum l; default 0
    #[arg(long, value_name = "N")]
    pub l: Option<u32>,

    /// Output format: csv or json; default csv
    #[arg(long, value_name = "FMT")]
    pub format: Option<String>,

    /// Write the table to PATH instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Smallest sampled chi; default pi/64
    #[arg(long, value_name = "V")]
    pub chi_min: Option<f64>,

    /// Largest sampled chi; default 63*pi/64
    #[arg(long, value_name = "V")]
    pub chi_max: Option<f64>,

    /// Number of chi samples; default 63
    #[arg(long, value_name = "N")]
    pub chi_steps: Option<usize>,
}

#[derive(Args)]
pub struct PropagatorArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Smallest momentum; default 0
    #[arg(long, value_name = "V")]
    pub q_min: Option<f64>,

    /// Largest momentum; default 8*pi
    #[arg(long, value_name = "V")]
    pub q_max: Option<f64>,

    /// Number of momentum samples; default 101
    #[arg(long, value_name = "N")]
    pub q_steps: Option<usize>,

    /// Cross-check the closed form against hemisphere quadrature; adds
    /// the Pi_north, Pi_south and abs_err columns and exits 4 on any
    /// tolerance violation
    #[arg(long)]
    pub verify: bool,

    /// Hemisphere tag echoed into the config: north or south. The
    /// verification always covers both hemispheres.
    #[arg(long, value_name = "H")]
    pub hemisphere: Option<String>,

    /// Minimum quadrature panels; default 16
    #[arg(long, value_name = "N")]
    pub base_panels: Option<usize>,

    /// Panels per kernel oscillation; default 16
    #[arg(long, value_name = "N")]
    pub panels_per_wavelength: Option<usize>,

    /// Absolute verification tolerance; default 1e-8
    #[arg(long, value_name = "V")]
    pub abs_tol: Option<f64>,

    /// Relative verification tolerance; default 1e-7
    #[arg(long, value_name = "V")]
    pub rel_tol: Option<f64>,
}

#[derive(Args)]
pub struct Fig1Args {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Comma-separated curvature sweep; default 0.25,0.5,1,2,4
    #[arg(long, value_name = "LIST")]
    pub kappa_list: Option<String>,

    /// Smallest momentum; default 0
    #[arg(long, value_name = "V")]
    pub q_min: Option<f64>,

    /// Largest momentum; default 8*pi
    #[arg(long, value_name = "V")]
    pub q_max: Option<f64>,

    /// Number of momentum samples per curvature; default 101
    #[arg(long, value_name = "N")]
    pub q_steps: Option<usize>,

    /// Surface hemisphere: north (default) or south (mirrored sign)
    #[arg(long, value_name = "H")]
    pub hemisphere: Option<String>,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Largest four-dimensional angular momentum K; default 3
    #[arg(long, value_name = "N")]
    pub k_max: Option<u32>,

    /// Interior grid points (the extrapolation pairs this with 2N);
    /// default 800
    #[arg(long, value_name = "N")]
    pub n_points: Option<usize>,

    /// Levels of the l = 0 problem (alignment depth); default k_max + 1
    #[arg(long, value_name = "N")]
    pub n_levels: Option<usize>,

    /// Exit 4 if any relative degeneracy spread reaches this; default 1e-3
    #[arg(long, value_name = "V")]
    pub spread_tol: Option<f64>,
}

#[derive(Args)]
pub struct HarmonicArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Comma-separated grid sizes, at least two; default 200,400,800
    #[arg(long, value_name = "LIST")]
    pub grids: Option<String>,

    /// Residual window lower edge; default 0.1
    #[arg(long, value_name = "V")]
    pub window_lo: Option<f64>,

    /// Residual window upper edge; default pi - 0.1
    #[arg(long, value_name = "V")]
    pub window_hi: Option<f64>,
}
