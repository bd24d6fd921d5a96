//! Graph arguments: graph6 strings, named constructions or files.

use std::path::Path;

use chromratio::{Error, Graph, Result};

/// `name:args` forms accepted by `--graph`, besides plain graph6.
pub const NAMED_HELP: &str = "graph6 string, or one of complete:N, empty:N, cycle:N, path:N, \
     paley:Q, tower:LEVELS (iterated Mycielskians of K2), random:N:P";

fn number<T: std::str::FromStr>(text: &str, what: &str) -> Result<T> {
    text.parse()
        .map_err(|_| Error::InvalidInput(format!("{what}: cannot parse {text:?}")))
}

pub fn parse_graph(spec: &str, seed: u64) -> Result<Graph> {
    let Some((name, rest)) = spec.split_once(':') else {
        return Graph::from_graph6(spec);
    };
    let args: Vec<&str> = rest.split(':').collect();
    let one = |what: &str| -> Result<usize> {
        match args.as_slice() {
            [a] => number(a, what),
            _ => Err(Error::InvalidInput(format!("{name} takes one argument"))),
        }
    };
    match name {
        "complete" => Graph::complete(one("vertex count")?),
        "empty" => Graph::new(one("vertex count")?),
        "cycle" => Graph::cycle(one("vertex count")?),
        "path" => Graph::path(one("vertex count")?),
        "paley" => Graph::paley(one("prime")?),
        "tower" => Graph::mycielski_tower(one("levels")?),
        "random" => match args.as_slice() {
            [n, p] => Graph::random(
                number(n, "vertex count")?,
                number(p, "edge probability")?,
                seed,
            ),
            _ => Err(Error::InvalidInput("random takes N:P".into())),
        },
        _ => Err(Error::InvalidInput(format!(
            "unknown graph family {name:?}"
        ))),
    }
}

/// A JSON edge list, or graph6 on the first non-empty line.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return Graph::from_json(trimmed);
    }
    let line = trimmed
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::InvalidInput(format!("{} is empty", path.display())))?;
    Graph::from_graph6(line.trim())
}
