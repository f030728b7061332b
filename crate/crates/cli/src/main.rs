//! `latfac`: generate lattices, compute Möbius functions and characteristic
//! polynomials, and run the verification checks, reporting line-delimited
//! JSON.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_factor::charpoly::char_poly;
use lattice_factor::corpus::{build_corpus, named, CorpusConfig};
use lattice_factor::criteria;
use lattice_factor::families::{
    boolean_lattice, chain, divisor_lattice, noncrossing_lattice, partition_lattice, shuffle_poset,
    tamari,
};
use lattice_factor::format::LatticeFile;
use lattice_factor::modularity::{
    is_graded, is_semimodular, left_modular_elements, lm_characterizations, modular_elements,
    semimodular_witness,
};
use lattice_factor::nbb::{is_ll, mobius_via_nbb, nbb_bases, AtomOrder, LevelStructure};
use lattice_factor::verify::{self, Status};
use lattice_factor::{FiniteLattice, GeneralizedRank, MobiusTable};
use serde_json::{json, Value};

use input::{labels, Loaded, Usage, UsageError};
use report::Report;

#[derive(Parser)]
#[command(
    name = "latfac",
    version,
    about = "Exact lattice Möbius functions and characteristic polynomial factorizations"
)]
struct Cli {
    /// Pretty-print reports.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Lattice JSON file; standard input when absent.
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as lattice JSON.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Override the family size cap.
        #[arg(long, global = true)]
        cap: Option<usize>,
    },
    /// Size, bounds, gradedness, atoms and distinguished elements.
    Info(InputArg),
    /// `μ(x, y)` for all `y >= x`.
    Mobius {
        #[command(flatten)]
        input: InputArg,
        /// Lower element; defaults to the bottom.
        #[arg(long)]
        from: Option<String>,
    },
    /// The characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        input: InputArg,
        /// `ordinary`, `levels`, or a file with a JSON array of rationals.
        #[arg(long)]
        rank: Option<String>,
        /// Chain for `--rank levels`: `auto` or `i0,i1,...`.
        #[arg(long)]
        chain: Option<String>,
    },
    /// The left-modularity tests for each element.
    Leftmod {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        element: Option<String>,
    },
    /// Modular elements and semimodularity.
    Modular(InputArg),
    /// NBB bases of an element and the signed count.
    Nbb {
        #[command(flatten)]
        input: InputArg,
        /// Defaults to the top.
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        chain: Option<String>,
        #[arg(long, value_enum, default_value_t = Order::Levels)]
        order: Order,
    },
    /// Run one verification check.
    Check {
        #[arg(value_enum)]
        which: Check,
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        chain: Option<String>,
        #[arg(long)]
        rank: Option<String>,
        /// Restrict element-wise checks to one element.
        #[arg(long)]
        element: Option<String>,
    },
    /// Run every acceptance criterion over the corpus.
    Corpus {
        /// Skip corpus lattices with more elements than this.
        #[arg(long)]
        cap: Option<usize>,
        /// Seed for the random sublattices.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Read lattice JSON and write it to a file.
    Save {
        path: PathBuf,
        #[command(flatten)]
        input: InputArg,
    },
    /// Print the lattice JSON stored in a file.
    Load { path: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Noncrossing partitions of [n].
    Nc { n: usize },
    /// Set partitions of [n].
    Pi { n: usize },
    /// The shuffle poset W_{m,n}.
    Shuffle { m: usize, n: usize },
    /// Divisors of n.
    Divisor { n: u64 },
    /// Subsets of [n].
    Boolean { n: usize },
    /// Binary trees with n internal nodes.
    Tamari { n: usize },
    /// A chain with n elements.
    Chain { n: usize },
    /// `N5`, `M3` or `hexagon`.
    Named { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Levels,
    Antichain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Thm3,
    Lmgr,
    Lmfac,
    Transfer,
    Stanley1,
    Stanley2,
    Nbbmu,
    Ll,
    Lemmas,
}

fn generate(family: &Family) -> Usage<FiniteLattice> {
    Ok(match *family {
        Family::Nc { n } => noncrossing_lattice(n)?,
        Family::Pi { n } => partition_lattice(n)?,
        Family::Shuffle { m, n } => shuffle_poset(m, n)?,
        Family::Divisor { n } => divisor_lattice(n)?,
        Family::Boolean { n } => boolean_lattice(n)?,
        Family::Tamari { n } => tamari(n)?,
        Family::Chain { n } => chain(n)?,
        Family::Named { ref name } => {
            named(name).ok_or_else(|| UsageError(format!("unknown lattice {name:?}")))?
        }
    })
}

fn mu_strings(v: impl IntoIterator<Item = impl ToString>) -> Vec<String> {
    v.into_iter().map(|m| m.to_string()).collect()
}

fn info(l: &FiniteLattice) -> Report {
    let graded = is_graded(l);
    let c = input::chain(l, None).expect("auto chain");
    let payload = json!({
        "size": l.size(),
        "covers": l.covers().len(),
        "bottom": l.label(l.bottom()),
        "top": l.label(l.top()),
        "graded": graded,
        "height": graded.then(|| GeneralizedRank::ordinary(l).unwrap().of(l.top()).to_string()),
        "atoms": labels(l, l.atoms().iter().copied()),
        "atomic": l.is_atomic(),
        "semimodular": is_semimodular(l),
        "left_modular": labels(l, left_modular_elements(l)),
        "modular": labels(l, modular_elements(l)),
        "chain": labels(l, c.iter().copied()),
        "ll": is_ll(l, &c).unwrap_or(false),
    });
    Report::pass("info", Value::Null, payload)
}

fn mobius(l: &FiniteLattice, from: Option<&str>) -> Usage<Report> {
    let x = from
        .map(|s| input::element(l, s))
        .transpose()?
        .unwrap_or(l.bottom());
    let mt = MobiusTable::new(l);
    let ys: Vec<usize> = (0..l.size()).filter(|&y| l.leq(x, y)).collect();
    let mu = ys
        .iter()
        .map(|&y| mt.mobius(x, y))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report::pass(
        "mobius",
        json!({ "from": l.label(x) }),
        json!({ "labels": labels(l, ys), "mu": mu_strings(mu) }),
    ))
}

fn charpoly(loaded: &Loaded, rank: Option<&str>, chain: Option<&str>) -> Usage<Report> {
    let (name, r) = input::rank(loaded, rank, chain)?;
    let chi = char_poly(&MobiusTable::new(&loaded.lattice), &r);
    Ok(Report::pass(
        "charpoly",
        json!({ "rank": name }),
        json!({ "chi": chi.to_json(), "text": chi.to_string() }),
    ))
}

fn leftmod(l: &FiniteLattice, element: Option<&str>) -> Usage<Report> {
    let xs: Vec<usize> = match element {
        Some(s) => vec![input::element(l, s)?],
        None => (0..l.size()).collect(),
    };
    let reports: Vec<_> = xs.iter().map(|&x| lm_characterizations(l, x)).collect();
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.consistent())
        .map(|r| l.label(r.element).to_string())
        .collect();
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "element": l.label(r.element),
                "by_definition": r.by_definition,
                "by_cond_ii": r.by_cond_ii,
                "by_cond_iii": r.by_cond_iii,
                "by_cond_iv": r.by_cond_iv,
            })
        })
        .collect();
    let inputs = json!({ "element": element });
    let payload = json!({ "elements": rows });
    Ok(if bad.is_empty() {
        Report::pass("leftmod", inputs, payload)
    } else {
        Report::fail("leftmod", inputs, bad, payload)
    })
}

fn modular(l: &FiniteLattice) -> Report {
    let witness = semimodular_witness(l).map(|(x, y)| labels(l, [x, y]));
    Report::pass(
        "modular",
        Value::Null,
        json!({
            "modular": labels(l, modular_elements(l)),
            "semimodular": witness.is_none() && is_graded(l),
            "semimodularity_witness": witness,
        }),
    )
}

fn nbb(
    l: &FiniteLattice,
    element: Option<&str>,
    chain: Option<&str>,
    order: Order,
) -> Usage<Report> {
    let x = element
        .map(|s| input::element(l, s))
        .transpose()?
        .unwrap_or(l.top());
    let c = input::chain(l, chain)?;
    let ao = match order {
        Order::Levels => LevelStructure::new(l, &c)?.atom_order(l),
        Order::Antichain => AtomOrder::antichain(l),
    };
    let bases: Vec<Vec<String>> = nbb_bases(l, x, &ao)
        .iter()
        .map(|b| labels(l, b.atoms.iter().copied()))
        .collect();
    let via_nbb = mobius_via_nbb(l, x, &ao);
    let mu = MobiusTable::new(l).mobius_bottom(x).clone();
    let inputs = json!({
        "element": l.label(x),
        "chain": labels(l, c.iter().copied()),
        "order": match order { Order::Levels => "levels", Order::Antichain => "antichain" },
    });
    let payload =
        json!({ "bases": bases, "signed_count": via_nbb.to_string(), "mobius": mu.to_string() });
    Ok(if via_nbb == mu {
        Report::pass("nbb", inputs, payload)
    } else {
        Report::fail("nbb", inputs, vec![l.label(x).to_string()], payload)
    })
}

fn check(
    loaded: &Loaded,
    which: Check,
    chain: Option<&str>,
    rank: Option<&str>,
    element: Option<&str>,
) -> Usage<Report> {
    let l = &loaded.lattice;
    let mt = MobiusTable::new(l);
    let only = element
        .map(|s| input::element(l, s))
        .transpose()?
        .map(|x| vec![x]);
    let only = only.as_deref();
    let mut inputs = json!({ "element": element });
    let mut with_rank = || -> Usage<GeneralizedRank> {
        let (name, r) = input::rank(loaded, rank, chain)?;
        inputs["rank"] = json!(name);
        Ok(r)
    };
    let o = match which {
        Check::Thm3 => verify::check_thm3(l),
        Check::Lmgr => verify::check_lmgr(&mt, &with_rank()?, only),
        Check::Lmfac => verify::check_lmfac(&mt, &with_rank()?, only),
        Check::Transfer => verify::check_transfer(&mt, &with_rank()?, only),
        Check::Stanley1 => verify::check_stanley1(&mt, only),
        Check::Lemmas => verify::check_lemmas(&mt),
        Check::Stanley2 | Check::Nbbmu | Check::Ll => {
            let c = input::chain(l, chain)?;
            inputs["chain"] = json!(labels(l, c.iter().copied()));
            match which {
                Check::Stanley2 => verify::check_stanley2(&mt, &c),
                Check::Nbbmu => verify::check_nbbmu(&mt, &c),
                _ => verify::check_ll(&mt, &c),
            }
        }
    };
    let command = format!("check {}", o.check);
    Ok(Report::from_outcome(&command, inputs, o))
}

fn corpus(cap: Option<usize>, seed: u64) -> Vec<Report> {
    let cfg = CorpusConfig {
        seed,
        max_size: cap.unwrap_or(usize::MAX),
        ..Default::default()
    };
    let items = build_corpus(&cfg);
    let results = criteria::run_all(&items);
    let passed = results.iter().filter(|r| r.passed).count();
    let mut out: Vec<Report> = results
        .into_iter()
        .map(|r| {
            let inputs = json!({ "criterion": r.id, "title": r.title, "seed": seed, "cap": cap });
            let payload = json!({ "detail": r.detail, "elapsed_ms": r.elapsed.as_millis() as u64 });
            if r.passed {
                Report::pass("corpus", inputs, payload)
            } else {
                Report::fail("corpus", inputs, vec![r.detail], payload)
            }
        })
        .collect();
    let summary = json!({ "lattices": items.len(), "passed": passed, "criteria": out.len() });
    let inputs = json!({ "seed": seed, "cap": cap });
    out.push(if passed == out.len() {
        Report::pass("corpus", inputs, summary)
    } else {
        Report::fail(
            "corpus",
            inputs,
            vec![format!("{} criteria failed", out.len() - passed)],
            summary,
        )
    });
    out
}

fn run(cli: &Cli) -> Usage<Vec<Report>> {
    let lattice_of = |i: &InputArg| input::load(i.input.as_ref());
    Ok(match &cli.command {
        Command::Gen { family, cap } => {
            if let Some(c) = cap {
                std::env::set_var("LF_CAP", c.to_string());
            }
            println!(
                "{}",
                LatticeFile::from_lattice(&generate(family)?, None).to_json()
            );
            Vec::new()
        }
        Command::Info(i) => vec![info(&lattice_of(i)?.lattice)],
        Command::Mobius { input, from } => {
            vec![mobius(&lattice_of(input)?.lattice, from.as_deref())?]
        }
        Command::Charpoly { input, rank, chain } => {
            vec![charpoly(
                &lattice_of(input)?,
                rank.as_deref(),
                chain.as_deref(),
            )?]
        }
        Command::Leftmod { input, element } => {
            vec![leftmod(&lattice_of(input)?.lattice, element.as_deref())?]
        }
        Command::Modular(i) => vec![modular(&lattice_of(i)?.lattice)],
        Command::Nbb {
            input,
            element,
            chain,
            order,
        } => {
            vec![nbb(
                &lattice_of(input)?.lattice,
                element.as_deref(),
                chain.as_deref(),
                *order,
            )?]
        }
        Command::Check {
            which,
            input,
            chain,
            rank,
            element,
        } => {
            let loaded = lattice_of(input)?;
            vec![check(
                &loaded,
                *which,
                chain.as_deref(),
                rank.as_deref(),
                element.as_deref(),
            )?]
        }
        Command::Corpus { cap, seed } => corpus(*cap, *seed),
        Command::Save { path, input } => {
            let loaded = lattice_of(input)?;
            std::fs::write(path, loaded.file.to_json() + "\n")?;
            let l = &loaded.lattice;
            vec![Report::pass(
                "save",
                json!({ "path": path }),
                json!({ "size": l.size(), "covers": l.covers().len() }),
            )]
        }
        Command::Load { path } => {
            let loaded = input::load(Some(path))?;
            println!("{}", loaded.file.to_json());
            Vec::new()
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(reports) => {
            for r in &reports {
                r.emit(cli.human);
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("latfac: {msg}");
            ExitCode::from(2)
        }
    }
}
