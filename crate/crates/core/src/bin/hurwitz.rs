use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use hurwitz::arith::format_rational;
use hurwitz::characters::{self, CharacterTable};
use hurwitz::class_algebra::product_of_class_sums;
use hurwitz::covers::{self, CyclicCoverSpec, OrbifoldSignature};
use hurwitz::floor_diagrams::{self, DiagramReport};
use hurwitz::hurwitz::{self as hw, CoveringProblem, HurwitzReport, OracleBudget};
use hurwitz::invariants::{self, MonomialAction, PolySparse};
use hurwitz::partitions::{class_size, generate_partitions_bounded, DEFAULT_MAX_DEGREE};
use hurwitz::{Error, Partition, Result};

/// Exact enumerative invariants of branched coverings of the projective line.
#[derive(Parser)]
#[command(name = "hurwitz", version)]
struct Cli {
    /// auto prints scalars bare and everything else as JSON
    #[arg(long, value_enum, default_value_t = Format::Auto, global = true)]
    format: Format,

    /// Override the degree bound of enumerations
    #[arg(long, env = "HURWITZ_MAX_D", global = true)]
    max_d: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// All partitions of d, reverse-lexicographic
    Partitions {
        #[arg(long)]
        d: u32,
    },
    /// Size of the conjugacy class of cycle type λ
    ClassSize { lambda: Partition },
    /// Irreducible character value χ^λ(μ)
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Character table of S_d
    CharTable {
        #[arg(long)]
        d: u32,
    },
    /// Littlewood–Richardson coefficient c^η_{λμ}
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        eta: Partition,
    },
    /// Kronecker coefficient g_{λμν}
    Kron {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Product of class sums in the center of Q[S_d]
    ClassProduct {
        /// A cycle type; repeat for each factor
        #[arg(long = "class", required = true)]
        classes: Vec<Partition>,
    },
    /// Hurwitz number of degree-d covers with the given profiles
    Hurwitz {
        #[arg(long)]
        d: u32,
        /// Ramification profile over one branch point; repeat per point
        #[arg(long)]
        profiles: Vec<Partition>,
        /// Count only connected covers
        #[arg(long)]
        connected: bool,
        /// Count monodromy tuples exhaustively instead
        #[arg(long)]
        oracle: bool,
    },
    /// Genus-zero simple Hurwitz number (2d-2)!/d! · d^(d-3)
    Genus0 {
        #[arg(long)]
        d: u32,
    },
    /// Genus of the cyclic cover y^d = Π (x - a_i)^(m_i)
    CoverGenus {
        #[arg(long)]
        d: u32,
        /// Root multiplicities, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        mult: Vec<u32>,
    },
    /// Ramification profile over infinity of y^d = f(x), deg f = n
    ProfileInf {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u64,
    },
    /// Classify the triangle orbifold (p, q, r)
    Triangle { p: u32, q: u32, r: u32 },
    /// Distinct orderings of the parts of μ
    MonodromyCount { mu: Partition },
    /// Distinct-point configurations on the affine line over F_p modulo affine maps
    FqConfigCount {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Affine F_q-points of y^m + x^n = 1
    FermatCount {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: u32,
    },
    /// Molien series of a monomial group action
    Molien {
        #[command(flatten)]
        action: ActionArgs,
        /// Highest degree of the truncated series
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Whether a polynomial is invariant under a monomial group action
    InvariantCheck {
        #[command(flatten)]
        action: ActionArgs,
        /// e.g. "x1^2*x2 + 1/2*x3"
        #[arg(long)]
        poly: String,
    },
    /// Labelled floor diagrams of degree d and genus g
    FloorDiagrams {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        g: u32,
    },
    /// Plane-curve count N_{d,g} from floor diagrams
    Gw {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        g: u32,
    },
    /// N_d from Kontsevich's recursion
    Kontsevich {
        #[arg(long)]
        d: u32,
    },
}

#[derive(Args)]
struct ActionArgs {
    /// Preset group
    #[arg(long, value_enum, conflicts_with = "config")]
    action: Option<Preset>,
    /// JSON file {"n":…, "s":…, "generators":[{"perm":[…], "exponents":[…]}]}
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Number of variables
    #[arg(long)]
    n: Option<usize>,
    /// Order of the root of unity
    #[arg(long)]
    s: Option<u32>,
    /// Diagonal weights for the cyclic preset, comma separated
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u32>,
    #[arg(long, default_value_t = invariants::DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Trivial,
    Cyclic,
    CyclicShift,
    Dihedral,
    Symmetric,
}

impl ActionArgs {
    fn build(&self) -> Result<MonomialAction> {
        let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Error::Parse(format!("--{flag} is required")));
        match (self.action, &self.config) {
            (_, Some(path)) => MonomialAction::from_json(&std::fs::read_to_string(path)?),
            (Some(Preset::Trivial), None) => Ok(MonomialAction::trivial(need(self.n, "n")?)),
            (Some(Preset::Cyclic), None) => {
                let s = need(self.s.map(|s| s as usize), "s")? as u32;
                MonomialAction::cyclic(s, &self.weights)
            }
            (Some(Preset::CyclicShift), None) => MonomialAction::cyclic_shift(need(self.n, "n")?),
            (Some(Preset::Dihedral), None) => MonomialAction::dihedral(need(self.s.map(|s| s as usize), "s")? as u32),
            (Some(Preset::Symmetric), None) => MonomialAction::symmetric(need(self.n, "n")?),
            (None, None) => Err(Error::Parse("give --action or --config".into())),
        }
    }
}

enum Output {
    /// A single exact value; `json` is its JSON form
    Scalar {
        text: String,
        json: Value,
    },
    Structured {
        json: Value,
        table: Vec<Vec<String>>,
    },
}

fn integer(x: impl ToString) -> Output {
    let text = x.to_string();
    // beyond i64 the JSON form is a decimal string
    let json = text
        .parse::<i64>()
        .map_or_else(|_| Value::String(text.clone()), Value::from);
    Output::Scalar { text, json }
}

fn big(x: &BigUint) -> Output {
    match x.to_u64() {
        Some(v) => integer(v),
        None => Output::Scalar {
            text: x.to_string(),
            json: Value::String(x.to_string()),
        },
    }
}

fn rational(r: &BigRational) -> Output {
    let text = format_rational(r);
    if r.is_integer() {
        return integer(text);
    }
    Output::Scalar {
        json: Value::String(text.clone()),
        text,
    }
}

fn to_json(x: &impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn run(cli: Cli) -> Result<Output> {
    let max_d = cli.max_d;
    let within = |d: u32, default: u32, what: &'static str| -> Result<u32> {
        let limit = max_d.unwrap_or(default);
        if d > limit {
            return Err(Error::SizeLimit {
                what,
                requested: d.into(),
                limit: limit.into(),
            });
        }
        Ok(limit)
    };
    Ok(match cli.command {
        Command::Partitions { d } => {
            let limit = within(d, DEFAULT_MAX_DEGREE, "degree")?;
            let parts = generate_partitions_bounded(d, limit)?;
            Output::Structured {
                json: to_json(&parts)?,
                table: parts.iter().map(|p| vec![p.to_string()]).collect(),
            }
        }
        Command::ClassSize { lambda } => big(&class_size(&lambda)),
        Command::Char { lambda, mu } => integer(characters::character_value(&lambda, &mu)?),
        Command::CharTable { d } => {
            let limit = within(d, characters::DEFAULT_TABLE_MAX_DEGREE, "degree")?;
            let table = CharacterTable::new_bounded(d, limit)?;
            let mut rows = vec![std::iter::once("λ \\ μ".to_string())
                .chain(table.classes.iter().map(|c| c.to_string()))
                .collect()];
            for (lam, values) in table.irreps.iter().zip(&table.values) {
                rows.push(
                    std::iter::once(lam.to_string())
                        .chain(values.iter().map(|v| v.to_string()))
                        .collect(),
                );
            }
            Output::Structured {
                json: to_json(&table)?,
                table: rows,
            }
        }
        Command::Lr { lambda, mu, eta } => integer(characters::lr_coefficient(&lambda, &mu, &eta)),
        Command::Kron { lambda, mu, nu } => big(&characters::kronecker_coefficient(&lambda, &mu, &nu)?),
        Command::ClassProduct { classes } => {
            let d = classes[0].weight();
            let product = product_of_class_sums(d, &classes)?;
            let table = product
                .iter()
                .map(|(c, x)| vec![c.to_string(), format_rational(x)])
                .collect();
            Output::Structured {
                json: to_json(&product)?,
                table,
            }
        }
        Command::Hurwitz {
            d,
            profiles,
            connected,
            oracle,
        } => {
            if profiles.is_empty() {
                return Err(Error::Parse("give at least one --profiles".into()));
            }
            let problem = CoveringProblem::new(d, profiles)?;
            let (disc, conn) = if oracle {
                let budget = OracleBudget {
                    max_degree: max_d.unwrap_or(hw::DEFAULT_ORACLE_MAX_DEGREE),
                    ..OracleBudget::default()
                };
                (
                    hw::monodromy_oracle_bounded(&problem, false, budget)?,
                    hw::monodromy_oracle_bounded(&problem, true, budget)?,
                )
            } else {
                within(d, characters::DEFAULT_TABLE_MAX_DEGREE, "degree")?;
                (hw::disconnected_hurwitz(&problem)?, hw::connected_hurwitz(&problem)?)
            };
            match cli.format {
                Format::Json => Output::Structured {
                    json: to_json(&HurwitzReport::new(&problem, &disc, &conn))?,
                    table: vec![],
                },
                _ => rational(if connected { &conn } else { &disc }),
            }
        }
        Command::Genus0 { d } => {
            within(d, characters::DEFAULT_TABLE_MAX_DEGREE, "degree")?;
            rational(&hw::genus0_closed_form(d)?)
        }
        Command::CoverGenus { d, mult } => integer(CyclicCoverSpec::new(d, &mult)?.genus()?),
        Command::ProfileInf { d, n } => {
            if d == 0 {
                return Err(Error::Parse("--d must be positive".into()));
            }
            let p = covers::profile_at_infinity(d, n);
            Output::Scalar {
                text: p.to_string(),
                json: to_json(&p)?,
            }
        }
        Command::Triangle { p, q, r } => {
            let class = covers::triangle_classify(OrbifoldSignature::new(p, q, r)?);
            let mut row = vec![format!("{:?}", class.geometry).to_lowercase()];
            row.extend(class.group.clone());
            row.extend(class.order.map(|o| o.to_string()));
            Output::Structured {
                json: to_json(&class)?,
                table: vec![row],
            }
        }
        Command::MonodromyCount { mu } => big(&covers::monodromy_type_count(&mu)),
        Command::FqConfigCount { p, m } => rational(&covers::count_configurations_mod_affine(p, m)?),
        Command::FermatCount { n, m, q } => integer(covers::fermat_point_count(n, m, q)?),
        Command::Molien { action, terms } => {
            let group = action.build()?;
            let series = invariants::molien_series_bounded(&group, terms, action.max_group_order)?;
            let json = Value::Array(
                series
                    .iter()
                    .map(|x| x.to_u64().map_or_else(|| Value::String(x.to_string()), Value::from))
                    .collect(),
            );
            let table = series
                .iter()
                .enumerate()
                .map(|(j, x)| vec![j.to_string(), x.to_string()])
                .collect();
            Output::Structured { json, table }
        }
        Command::InvariantCheck { action, poly } => {
            let group = action.build()?;
            let f = PolySparse::parse(&poly, group.n)?;
            let ok = invariants::is_invariant(&f, &group)?;
            Output::Scalar {
                text: ok.to_string(),
                json: Value::Bool(ok),
            }
        }
        Command::FloorDiagrams { d, g } => {
            let reports: Vec<DiagramReport> = floor_diagrams::enumerate_diagrams(d, g)?
                .iter()
                .map(DiagramReport::from)
                .collect();
            let table = reports
                .iter()
                .map(|r| {
                    let edges: Vec<String> = r.edges.iter().map(|[u, v, w]| format!("{u}->{v}:{w}")).collect();
                    vec![edges.join(" "), r.mu.to_string(), r.nu.to_string()]
                })
                .collect();
            Output::Structured {
                json: to_json(&reports)?,
                table,
            }
        }
        Command::Gw { d, g } => big(&floor_diagrams::gw_invariant(d, g)?),
        Command::Kontsevich { d } => big(&floor_diagrams::kontsevich_oracle(d)?),
    })
}

fn print_table(rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(x, &w)| format!("{x:<w$}")).collect();
        println!("{}", cells.join("  ").trim_end());
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let format = cli.format;
    match run(cli) {
        Ok(Output::Scalar { text, json }) => {
            match format {
                Format::Json => println!("{json}"),
                _ => println!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Structured { json, table }) => {
            match format {
                Format::Table => print_table(&table),
                _ => println!("{}", serde_json::to_string(&json).expect("values serialize")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::SizeLimit { .. } => 3,
                Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}
