//! Short names for the usual small graphs, accepted wherever graph6 is.
//!
//! | name          | graph                          |
//! |---------------|--------------------------------|
//! | `K5`          | complete graph                 |
//! | `K2x3`        | complete multipartite `K_{2,3}` (any number of `x` parts) |
//! | `K2^3`        | `K_{2,2,2}`                    |
//! | `C5`, `P4`    | cycle, path                    |
//! | `T7,2`        | Turán graph                    |
//!
//! Every name contains a digit, and digits are outside the graph6 byte range,
//! so a name is never also a valid graph6 string.

use std::sync::OnceLock;

use regex::Regex;

use crate::construct::{complete_multipartite, turan};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

fn shortcut(text: &str) -> Result<Option<Graph>> {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| {
        Regex::new(r"^(?:K(\d+)\^(\d+)|K(\d+(?:x\d+)*)|C(\d+)|P(\d+)|T(\d+),(\d+))$").unwrap()
    });
    let Some(cap) = re.captures(text) else {
        return Ok(None);
    };
    let num = |i: usize| -> Result<usize> {
        cap[i]
            .parse()
            .map_err(|_| Error::invalid(format!("number too large in {text:?}")))
    };
    let bound = |k: usize| -> Result<usize> {
        if k > graph6::MAX_ORDER {
            Err(Error::Capacity(format!(
                "{text:?} has more than {} vertices",
                graph6::MAX_ORDER
            )))
        } else {
            Ok(k)
        }
    };
    let g = if cap.get(1).is_some() {
        let (a, r) = (num(1)?, num(2)?);
        bound(a.saturating_mul(r))?;
        complete_multipartite(&vec![a; r])?
    } else if let Some(parts) = cap.get(3) {
        let sizes = parts
            .as_str()
            .split('x')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad size in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if sizes.len() == 1 {
            Graph::complete(bound(sizes[0])?)
        } else {
            bound(sizes.iter().fold(0usize, |a, &b| a.saturating_add(b)))?;
            complete_multipartite(&sizes)?
        }
    } else if cap.get(4).is_some() {
        let n = bound(num(4)?)?;
        if n < 3 {
            return Err(Error::invalid(format!(
                "cycle needs at least 3 vertices: {text:?}"
            )));
        }
        Graph::cycle(n)
    } else if cap.get(5).is_some() {
        Graph::path(bound(num(5)?)?)
    } else {
        turan(bound(num(6)?)?, num(7)?)?
    };
    Ok(Some(g))
}

/// Reads a named shortcut or a graph6 string.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    match shortcut(t)? {
        Some(g) => Ok(g),
        None => graph6::decode(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn shortcuts() {
        assert_eq!(parse_graph("K4").unwrap(), Graph::complete(4));
        assert_eq!(
            parse_graph("K2x3").unwrap(),
            complete_multipartite(&[2, 3]).unwrap()
        );
        assert_eq!(
            parse_graph("K1x1x2").unwrap(),
            complete_multipartite(&[1, 1, 2]).unwrap()
        );
        assert_eq!(
            parse_graph("K2^3").unwrap(),
            complete_multipartite(&[2, 2, 2]).unwrap()
        );
        assert_eq!(parse_graph("C5").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph("P4").unwrap(), Graph::path(4));
        assert_eq!(parse_graph("T7,2").unwrap(), turan(7, 2).unwrap());
        assert_eq!(parse_graph(" K3 \n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn graph6_fallback() {
        assert_eq!(parse_graph("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph(">>graph6<<C~").unwrap(), Graph::complete(4));
        assert!(is_isomorphic(&parse_graph("Dhc").unwrap(), &Graph::cycle(5)).unwrap());
    }

    #[test]
    fn bad_names() {
        assert!(parse_graph("C2").is_err());
        assert!(parse_graph("T5,0").is_err());
        assert!(parse_graph("K2x0").is_err());
        assert!(matches!(parse_graph("K999999"), Err(Error::Capacity(_))));
        assert!(matches!(parse_graph("Kx"), Err(Error::Parse { .. })));
    }
}
