use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semival::basis::{Basis, ReduceMode, Setting};
use semival::deform::{deform, deform_free, DeformationSet};
use semival::global_basis::{global_basis, minimal_global_basis, reduce_degree};
use semival::local_basis::{local_basis, minimal_basis, reduce_order};
use semival::parse::{parse_bipoly, parse_generators, parse_poly_list, parse_univariate, ParseError};
use semival::plane::{gamma_at_infinity, gamma_curve_infinity, plane_local};
use semival::report::{basis_entries, DeformationReport, ReductionReport, Report};
use semival::{Error, Field, NumSgp};

#[derive(Parser)]
#[command(name = "semival", version, about = "Value semigroups of curve algebras")]
struct Cli {
    /// Coefficient field: 0 for the rationals or a prime p.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "P")]
    characteristic: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Basis,
    Reduced,
    Semigroup,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Local,
    Global,
}

impl From<Kind> for Setting {
    fn from(k: Kind) -> Setting {
        match k {
            Kind::Local => Setting::Local,
            Kind::Global => Setting::Global,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Algorithmic,
    Division,
    Expression,
}

#[derive(Subcommand)]
enum Command {
    /// Basis and semigroup of orders of K[[p1, p2, ...]].
    Local {
        #[arg(allow_hyphen_values = true)]
        polys: String,
        #[arg(long, value_enum, default_value = "all")]
        show: Show,
    },
    /// Basis and semigroup of degrees of K[p1, p2, ...].
    Global {
        #[arg(allow_hyphen_values = true)]
        polys: String,
        #[arg(long, value_enum, default_value = "all")]
        show: Show,
    },
    /// Characteristic sequence and approximate roots of K[[f, g]].
    PlaneLocal {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Degree semigroup of K[f, g] through approximate roots.
    PlaneInfinity {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Semigroup at infinity of a curve F(x, y) monic in y.
    CurveInfinity {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Deformation of the curve onto its monomial curve.
    Deform {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        polys: String,
        /// Use the inputs verbatim, in the given order, with the
        /// complete-intersection relations of their values.
        #[arg(long)]
        free: bool,
    },
    /// Reduce f against a list of monic elements.
    Reduce {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        against: String,
        #[arg(long, value_enum, default_value = "division")]
        mode: Mode,
        /// Order bound for expression mode.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Invariants of the monoid generated by a1, a2, ...
    Semigroup { gens: String },
}

enum Failure {
    Parse(String, ParseError),
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

fn parsed<T>(what: &str, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Parse(what.to_string(), e))
}

fn basis_for(setting: Setting, gens: &[semival::Poly]) -> Result<Basis, Error> {
    match setting {
        Setting::Local => local_basis(gens),
        Setting::Global => global_basis(gens),
    }
}

fn minimal_for(b: &Basis) -> Result<Basis, Error> {
    match b.setting {
        Setting::Local => minimal_basis(b),
        Setting::Global => minimal_global_basis(b),
    }
}

fn basis_report(field: Field, setting: Setting, text: &str, show: Show) -> Result<Report, Failure> {
    let gens = parsed("generators", parse_poly_list(text, field))?;
    let b = basis_for(setting, &gens)?;
    let m = minimal_for(&b)?;
    let mut r = Report::from_semigroup(field, &m.semigroup);
    r.setting = Some(setting);
    if matches!(show, Show::Basis | Show::All) {
        r.basis = Some(basis_entries(&b));
    }
    if matches!(show, Show::Reduced | Show::All) {
        r.reduced_basis = Some(basis_entries(&m));
    }
    if show == Show::All {
        r.presentation = Some(m.presentation.clone());
    }
    Ok(r)
}

fn deformation_report(field: Field, d: &DeformationSet) -> Result<Report, Failure> {
    let mut r = Report::from_semigroup(field, &NumSgp::from_generators(&d.values)?);
    r.setting = Some(d.setting);
    r.basis = Some(
        d.elements
            .iter()
            .zip(&d.values)
            .map(|(p, &v)| semival::report::BasisEntry {
                poly: semival::report::poly_json(p),
                value: v,
                text: p.to_string(),
            })
            .collect(),
    );
    let truncated = d.complete().iter().filter(|c| !**c).count();
    if truncated > 0 {
        r.warnings.push(format!(
            "{} relator(s) truncated at the order bound; their corrections are partial",
            truncated
        ));
    }
    for (i, c) in d.check()?.iter().enumerate() {
        if !c.all_hold() {
            r.warnings.push(format!("relator {} failed its consistency checks", i + 1));
        }
    }
    r.deformation = Some(DeformationReport::new(d));
    Ok(r)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let field = Field::from_characteristic(cli.characteristic)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let plane_only = |field: Field| -> Result<(), Failure> {
        if field != Field::Rational {
            return Err(Error::UnsupportedCharacteristic(field.characteristic()).into());
        }
        Ok(())
    };
    match &cli.command {
        Command::Local { polys, show } => basis_report(field, Setting::Local, polys, *show),
        Command::Global { polys, show } => basis_report(field, Setting::Global, polys, *show),
        Command::PlaneLocal { f, g } => {
            plane_only(field)?;
            let f = parsed("f", parse_univariate(f, field))?;
            let g = parsed("g", parse_univariate(g, field))?;
            Ok(Report::from_local_plane(&plane_local(&f, &g)?))
        }
        Command::PlaneInfinity { f, g } => {
            plane_only(field)?;
            let f = parsed("f", parse_univariate(f, field))?;
            let g = parsed("g", parse_univariate(g, field))?;
            Ok(Report::from_at_infinity(&gamma_at_infinity(&f, &g)?))
        }
        Command::CurveInfinity { curve } => {
            plane_only(field)?;
            let c = parsed("curve", parse_bipoly(curve, field))?;
            Ok(Report::from_curve_infinity(&gamma_curve_infinity(&c)?))
        }
        Command::Deform { kind, polys, free } => {
            let gens = parsed("generators", parse_poly_list(polys, field))?;
            let setting = Setting::from(*kind);
            let d = if *free {
                deform_free(setting, &gens)?
            } else {
                deform(&minimal_for(&basis_for(setting, &gens)?)?)?
            };
            let mut r = deformation_report(field, &d)?;
            if !*free {
                let values = d.values.clone();
                r.presentation = Some(semival::numsgp::presentation(&values)?);
            }
            Ok(r)
        }
        Command::Reduce {
            kind,
            f,
            against,
            mode,
            bound,
        } => {
            let f = parsed("f", parse_univariate(f, field))?;
            let elems = parsed("against", parse_poly_list(against, field))?;
            let mode = match (mode, bound) {
                (Mode::Algorithmic, _) => ReduceMode::Algorithmic,
                (Mode::Division, _) => ReduceMode::Division,
                (Mode::Expression, Some(b)) => ReduceMode::Expression { bound: *b },
                (Mode::Expression, None) => {
                    return Err(Failure::Usage("expression mode needs --bound".into()))
                }
            };
            let out = match kind {
                Kind::Local => reduce_order(&f, &elems, mode)?,
                Kind::Global => reduce_degree(&f, &elems, mode)?,
            };
            let mut r = Report::new(field);
            r.setting = Some(Setting::from(*kind));
            r.reduction = Some(ReductionReport::new(&out));
            Ok(r)
        }
        Command::Semigroup { gens } => {
            let gens = parsed("generators", parse_generators(gens))?;
            Ok(Report::from_semigroup(field, &NumSgp::from_generators(&gens)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {}", w);
            }
            let text = if cli.json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            // a closed pipe on the reader's side is not our failure
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(what, e)) => {
            eprintln!("error: ParseError in {}: {}", what, e);
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {}", e.name(), e);
            match e {
                Error::LimitExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
