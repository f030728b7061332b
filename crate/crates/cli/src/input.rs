use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use lattice_factor::corpus::auto_chain;
use lattice_factor::format::LatticeFile;
use lattice_factor::modularity::is_graded;
use lattice_factor::nbb::LevelStructure;
use lattice_factor::rank::parse_rational;
use lattice_factor::{FiniteLattice, GeneralizedRank};

/// An error that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub type Usage<T> = Result<T, UsageError>;

pub struct Loaded {
    pub file: LatticeFile,
    pub lattice: FiniteLattice,
}

pub fn read_text(path: Option<&Path>) -> Usage<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

pub fn load(path: Option<&PathBuf>) -> Usage<Loaded> {
    let file = LatticeFile::parse(&read_text(path.map(PathBuf::as_path))?)?;
    let lattice = file.lattice()?;
    Ok(Loaded { file, lattice })
}

/// An element by label, or by index when no label matches.
pub fn element(l: &FiniteLattice, s: &str) -> Usage<usize> {
    if let Some(x) = l.index_of(s) {
        return Ok(x);
    }
    match s.parse::<usize>() {
        Ok(i) if i < l.size() => Ok(i),
        _ => Err(UsageError(format!("no element {s:?}"))),
    }
}

/// `auto`, a comma-separated list of indices, or failing that, of labels.
pub fn chain(l: &FiniteLattice, spec: Option<&str>) -> Usage<Vec<usize>> {
    let s = match spec {
        None | Some("auto") => return Ok(auto_chain(l)),
        Some(s) => s,
    };
    let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
    if let Ok(ixs) = tokens
        .iter()
        .map(|t| t.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
    {
        if let Some(&bad) = ixs.iter().find(|&&i| i >= l.size()) {
            return Err(UsageError(format!("no element {bad}")));
        }
        return Ok(ixs);
    }
    tokens.iter().map(|t| element(l, t)).collect()
}

/// `ordinary`, `levels` (along `chain`), or a file holding a JSON array of
/// rationals. Without a flag: the rank embedded in the input, else ordinary
/// when graded, else levels.
pub fn rank(
    loaded: &Loaded,
    spec: Option<&str>,
    chain_spec: Option<&str>,
) -> Usage<(String, GeneralizedRank)> {
    let l = &loaded.lattice;
    let levels = || -> Usage<GeneralizedRank> {
        Ok(LevelStructure::new(l, &chain(l, chain_spec)?)?.ll_rank_function(l))
    };
    match spec {
        Some("ordinary") => Ok(("ordinary".into(), GeneralizedRank::ordinary(l)?)),
        Some("levels") => Ok(("levels".into(), levels()?)),
        Some(path) => {
            let values: Vec<serde_json::Value> =
                serde_json::from_str(&read_text(Some(Path::new(path)))?)?;
            let values = values
                .iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => parse_rational(s),
                    other => parse_rational(&other.to_string()),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((path.to_string(), GeneralizedRank::new(l, values)?))
        }
        None => {
            if let Some(r) = loaded.file.generalized_rank(l)? {
                Ok(("embedded".into(), r))
            } else if is_graded(l) {
                Ok(("ordinary".into(), GeneralizedRank::ordinary(l)?))
            } else {
                Ok(("levels".into(), levels()?))
            }
        }
    }
}

pub fn labels(l: &FiniteLattice, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| l.label(x).to_string()).collect()
}
