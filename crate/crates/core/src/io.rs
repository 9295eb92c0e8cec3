//! Text and JSON input formats for ideals and graphs.
//!
//! Ideals: `{"n": 11, "generators": [[2,4],[1,5,7],[3,7,9,11]]}` or
//! comma-separated monomials such as `x2*x4, x1*x5*x7`.
//! Graphs: `{"n": 6, "edges": [[1,4],[2,5],[3,6]]}` or `1-4,2-5,3-6`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::ideals::MonomialIdeal;
use crate::monomials::SquarefreeMonomial;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub n: u32,
    pub generators: Vec<SquarefreeMonomial>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

fn json_error(input: &str, err: serde_json::Error) -> Error {
    let line = input.lines().nth(err.line().saturating_sub(1)).unwrap_or("");
    let col = err.column().saturating_sub(1).min(line.len());
    let start = line[..col].rfind([',', '[', '{', ' ', ':']).map_or(0, |p| p + 1);
    let end = line[col..].find([',', ']', '}']).map_or(line.len(), |p| col + p);
    let token = line.get(start..end.max(start)).unwrap_or(line).trim();
    let token = if token.is_empty() { line.trim() } else { token };
    Error::parse(token, err.to_string())
}

/// Parses an ideal; `n` overrides the ambient size for the text syntax
/// (otherwise the largest index used).
pub fn parse_ideal(input: &str, n: Option<u32>) -> Result<MonomialIdeal> {
    let input = input.trim();
    if input.starts_with('{') {
        let parsed: IdealJson = serde_json::from_str(input).map_err(|e| json_error(input, e))?;
        return MonomialIdeal::minimalize(n.unwrap_or(parsed.n), parsed.generators);
    }
    let gens: Vec<SquarefreeMonomial> = input
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::parse)
        .collect::<Result<_>>()?;
    let used = gens.iter().map(|g| g.max_index()).max().unwrap_or(0).max(1);
    MonomialIdeal::minimalize(n.unwrap_or(used), gens)
}

pub fn parse_graph(input: &str, n: Option<u32>) -> Result<Graph> {
    let input = input.trim();
    if input.starts_with('{') {
        let parsed: GraphJson = serde_json::from_str(input).map_err(|e| json_error(input, e))?;
        return Graph::new(n.unwrap_or(parsed.n), parsed.edges);
    }
    let edges: Vec<(u32, u32)> = input
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|token| {
            let token = token.trim();
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| Error::parse(token, "expected an edge like 1-4"))?;
            let a = a.trim().parse::<u32>().map_err(|_| Error::parse(token, "bad vertex"))?;
            let b = b.trim().parse::<u32>().map_err(|_| Error::parse(token, "bad vertex"))?;
            Ok((a, b))
        })
        .collect::<Result<_>>()?;
    let used = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(1);
    Graph::new(n.unwrap_or(used), edges)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> IdealJson {
    IdealJson {
        n: ideal.n(),
        generators: ideal.gens().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_text_agree() {
        let a = parse_ideal(r#"{"n": 11, "generators": [[2,4],[1,5,7],[3,7,9,11]]}"#, None).unwrap();
        let b = parse_ideal("x2*x4, x1*x5*x7, x3*x7*x9*x11", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n(), 11);
        let c = parse_ideal("x1*x2", Some(5)).unwrap();
        assert_eq!(c.n(), 5);
        let back = serde_json::to_string(&ideal_to_json(&a)).unwrap();
        assert_eq!(back, r#"{"n":11,"generators":[[2,4],[1,5,7],[3,7,9,11]]}"#);
    }

    #[test]
    fn malformed_inputs_name_the_token() {
        let err = parse_ideal(r#"{"n": 11, "generators": [[2,4],[1,x]]}"#, None).unwrap_err();
        assert!(err.is_parse_error(), "{err}");
        let err = parse_ideal("x1*x2, y3", None).unwrap_err();
        assert!(err.to_string().contains("`y3`"), "{err}");
        let err = parse_graph("1-2,2=3", None).unwrap_err();
        assert!(err.to_string().contains("2=3"), "{err}");
        assert!(parse_graph("1-2,2-1", None).unwrap_err().is_parse_error());
    }

    #[test]
    fn graph_formats() {
        let a = parse_graph(r#"{"n": 6, "edges": [[1,4],[2,5],[3,6]]}"#, None).unwrap();
        let b = parse_graph("1-4,2-5,3-6", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "1-4,2-5,3-6");
    }
}
