//! Graph sources: graph6 files and named families with parameter ranges.
//!
//! Parameter grammar: comma-separated `key=value` items, where a value is a
//! single number, an inclusive integer range `lo..hi`, or a `;`-separated
//! list. A bare value binds to `n`. Examples: `3..8`, `a=1..6,b=1..6`,
//! `n=4..12,p=0.3;0.5;0.8`, `n=10,offsets=1;3`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use randic_core::graph::families::FamilyError;
use randic_core::graph::graph6::{parse_graph6_lines, Graph6LineError};
use randic_core::{Family, Graph};
use thiserror::Error;

/// Draws allowed per accepted random graph before giving up.
const MAX_DRAWS_PER_GRAPH: usize = 10_000;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Graph6 {
        path: PathBuf,
        #[source]
        source: Graph6LineError,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    Params { family: String, reason: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{family}: no graph without isolated vertices after {draws} draws")]
    Exhausted { family: String, draws: usize },
    #[error("no graph sources given")]
    NoSources,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    /// One graph6 string per line.
    File(PathBuf),
    Family { name: String, params: String },
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File(p) => write!(f, "file:{}", p.display()),
            GraphSource::Family { name, params } if params.is_empty() => write!(f, "family:{name}"),
            GraphSource::Family { name, params } => write!(f, "family:{name}[{params}]"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

/// Seed and draw count for the random families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub trials: usize,
}

pub fn load_sources(sources: &[GraphSource], sampling: Sampling) -> Result<Vec<NamedGraph>, SourceError> {
    if sources.is_empty() {
        return Err(SourceError::NoSources);
    }
    let mut out = Vec::new();
    for s in sources {
        match s {
            GraphSource::File(path) => out.extend(load_file(path)?),
            GraphSource::Family { name, params } => out.extend(load_family(name, params, sampling)?),
        }
    }
    Ok(out)
}

fn load_file(path: &PathBuf) -> Result<Vec<NamedGraph>, SourceError> {
    let text = std::fs::read_to_string(path).map_err(|source| SourceError::Read {
        path: path.clone(),
        source,
    })?;
    let graphs = parse_graph6_lines(&text).map_err(|source| SourceError::Graph6 {
        path: path.clone(),
        source,
    })?;
    let stem = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(graphs
        .into_iter()
        .map(|(line, graph)| NamedGraph {
            id: format!("{stem}:{line}"),
            graph,
        })
        .collect())
}

struct Params<'a> {
    family: &'a str,
    items: BTreeMap<String, String>,
}

impl<'a> Params<'a> {
    fn parse(family: &'a str, text: &str) -> Result<Self, SourceError> {
        let mut items = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').unwrap_or(("n", item));
            if items.insert(key.trim().to_string(), value.trim().to_string()).is_some() {
                return Err(bad(family, format!("`{}` given twice", key.trim())));
            }
        }
        Ok(Self { family, items })
    }

    fn only(&self, allowed: &[&str]) -> Result<(), SourceError> {
        match self.items.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(bad(self.family, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }

    fn raw(&self, key: &str) -> Result<&str, SourceError> {
        self.items
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| bad(self.family, format!("missing `{key}`")))
    }

    fn ints(&self, key: &str) -> Result<Vec<usize>, SourceError> {
        let value = self.raw(key)?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| bad(self.family, format!("`{key}`: `{s}` is not a non-negative integer")))
        };
        if let Some((lo, hi)) = value.split_once("..") {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(bad(self.family, format!("`{key}`: empty range {lo}..{hi}")));
            }
            return Ok((lo..=hi).collect());
        }
        value.split(';').map(parse).collect()
    }

    fn floats(&self, key: &str) -> Result<Vec<f64>, SourceError> {
        self.raw(key)?
            .split(';')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| bad(self.family, format!("`{key}`: `{s}` is not a number")))
            })
            .collect()
    }
}

fn bad(family: &str, reason: String) -> SourceError {
    SourceError::Params {
        family: family.to_string(),
        reason,
    }
}

fn named(f: Family) -> Result<NamedGraph, SourceError> {
    let graph = f.generate()?;
    Ok(NamedGraph { id: f.to_string(), graph })
}

pub fn load_family(name: &str, params: &str, sampling: Sampling) -> Result<Vec<NamedGraph>, SourceError> {
    let p = Params::parse(name, params)?;
    let each_n = |make: fn(usize) -> Family| -> Result<Vec<NamedGraph>, SourceError> {
        p.only(&["n"])?;
        p.ints("n")?.into_iter().map(|n| named(make(n))).collect()
    };
    match name {
        "star" => each_n(Family::Star),
        "complete" => each_n(Family::Complete),
        "cycle" => each_n(Family::Cycle),
        "path" => each_n(Family::Path),
        "petersen" => {
            p.only(&[])?;
            Ok(vec![named(Family::Petersen)?])
        }
        "complete_bipartite" => {
            p.only(&["a", "b"])?;
            let (a_s, b_s) = (p.ints("a")?, p.ints("b")?);
            let mut out = Vec::new();
            for &a in &a_s {
                for &b in &b_s {
                    out.push(named(Family::CompleteBipartite(a, b))?);
                }
            }
            Ok(out)
        }
        "complete_multipartite" => {
            p.only(&["parts"])?;
            Ok(vec![named(Family::CompleteMultipartite(p.ints("parts")?))?])
        }
        "turan" => {
            p.only(&["n", "r"])?;
            let (ns, rs) = (p.ints("n")?, p.ints("r")?);
            let single = ns.len() == 1 && rs.len() == 1;
            let mut out = Vec::new();
            for &n in &ns {
                for &r in &rs {
                    match named(Family::Turan(n, r)) {
                        Ok(g) => out.push(g),
                        // Ranges may cross invalid (n, r) pairs; only an explicit one is an error.
                        Err(e) if single => return Err(e),
                        Err(_) => {}
                    }
                }
            }
            if out.is_empty() {
                return Err(bad(name, "no valid (n, r) pair with r dividing n".into()));
            }
            Ok(out)
        }
        "circulant" => {
            p.only(&["n", "offsets"])?;
            let offsets = p.ints("offsets")?;
            p.ints("n")?
                .into_iter()
                .map(|n| named(Family::Circulant(n, offsets.clone())))
                .collect()
        }
        "random_gnp" | "gnp" => {
            p.only(&["n", "p"])?;
            let (ns, ps) = (p.ints("n")?, p.floats("p")?);
            sample(name, sampling, |rng| {
                let n = ns[rng.random_range(0..ns.len())];
                let prob = ps[rng.random_range(0..ps.len())];
                Family::RandomGnp { n, p: prob, seed: rng.random() }
            })
        }
        "random_tree" | "tree" => {
            p.only(&["n"])?;
            let ns = p.ints("n")?;
            sample(name, sampling, |rng| Family::RandomTree {
                n: ns[rng.random_range(0..ns.len())],
                seed: rng.random(),
            })
        }
        other => Err(SourceError::UnknownFamily(other.to_string())),
    }
}

/// Draws `sampling.trials` graphs, discarding any with an isolated vertex.
fn sample(
    name: &str,
    sampling: Sampling,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Family,
) -> Result<Vec<NamedGraph>, SourceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut out = Vec::with_capacity(sampling.trials);
    let budget = MAX_DRAWS_PER_GRAPH.saturating_mul(sampling.trials.max(1));
    let mut draws = 0;
    while out.len() < sampling.trials {
        if draws == budget {
            return Err(SourceError::Exhausted {
                family: name.to_string(),
                draws,
            });
        }
        draws += 1;
        let g = named(draw(&mut rng))?;
        if !g.graph.has_isolated_vertex() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: Sampling = Sampling { seed: 7, trials: 25 };

    fn ids(name: &str, params: &str) -> Vec<String> {
        load_family(name, params, S).unwrap().into_iter().map(|g| g.id).collect()
    }

    #[test]
    fn ranges_and_lists() {
        assert_eq!(ids("star", "3..5"), ["star(3)", "star(4)", "star(5)"]);
        assert_eq!(ids("cycle", "n=4;7"), ["cycle(4)", "cycle(7)"]);
        assert_eq!(ids("complete_bipartite", "a=1..2,b=3").len(), 2);
        assert_eq!(ids("circulant", "n=8,offsets=1;3"), ["circulant(8,1;3)"]);
        assert_eq!(ids("petersen", ""), ["petersen"]);
        assert_eq!(ids("complete_multipartite", "parts=1;2;2"), ["complete_multipartite(1;2;2)"]);
    }

    #[test]
    fn turan_ranges_skip_non_divisors() {
        assert_eq!(ids("turan", "n=6,r=2..4"), ["turan(6,2)", "turan(6,3)"]);
        assert!(load_family("turan", "n=7,r=3", S).is_err());
    }

    #[test]
    fn sampler_is_seeded_and_discards_isolated_vertices() {
        let a = load_family("random_gnp", "n=4..12,p=0.3;0.5;0.8", S).unwrap();
        let b = load_family("gnp", "n=4..12,p=0.3;0.5;0.8", S).unwrap();
        assert_eq!(a.len(), 25);
        assert!(a.iter().all(|g| !g.graph.has_isolated_vertex()));
        assert!(a.iter().all(|g| (4..=12).contains(&g.graph.order())));
        assert_eq!(
            a.iter().map(|g| &g.id).collect::<Vec<_>>(),
            b.iter().map(|g| &g.id).collect::<Vec<_>>()
        );
        let c = load_family("gnp", "n=4..12,p=0.5", Sampling { seed: 8, ..S }).unwrap();
        assert_ne!(a[0].id, c[0].id);
    }

    #[test]
    fn errors() {
        assert!(matches!(load_family("wheel", "5", S), Err(SourceError::UnknownFamily(_))));
        assert!(matches!(load_family("star", "m=5", S), Err(SourceError::Params { .. })));
        assert!(matches!(load_family("star", "5..3", S), Err(SourceError::Params { .. })));
        assert!(matches!(load_family("star", "x", S), Err(SourceError::Params { .. })));
        assert!(matches!(load_family("star", "1", S), Err(SourceError::Family(_))));
        assert!(matches!(load_family("gnp", "n=5", S), Err(SourceError::Params { .. })));
        assert!(matches!(
            load_family("gnp", "n=6,p=0", S),
            Err(SourceError::Exhausted { .. })
        ));
        assert!(matches!(load_sources(&[], S), Err(SourceError::NoSources)));
    }
}
