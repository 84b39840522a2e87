//! Text, JSON and DOT representations of automata.
//!
//! The text format is line based:
//!
//! ```text
//! # optional comment lines
//! n k
//! delta[0][0] ... delta[0][k-1]
//! ...
//! delta[n-1][0] ... delta[n-1][k-1]
//! ```
//!
//! The JSON format is `{"n": 4, "k": 2, "delta": [[1, 0], ...]}`, with
//! optional `state_names` and `letter_names` arrays.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// Parses the line-based text format. Blank lines and lines whose first
/// non-blank character is `#` are ignored.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| {
            let t = line.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "malformed header: input is empty"))?;
    let header_tokens = tokens(header);
    if header_tokens.len() != 2 {
        return Err(Error::parse(
            header_line,
            1,
            format!(
                "malformed header: expected `n k`, found {} fields",
                header_tokens.len()
            ),
        ));
    }
    let mut dims = [0usize; 2];
    for (slot, &(column, tok)) in dims.iter_mut().zip(&header_tokens) {
        *slot = tok.parse().map_err(|_| {
            Error::parse(
                header_line,
                column,
                format!("malformed header: `{tok}` is not a count"),
            )
        })?;
    }
    let [n, k] = dims;
    if n == 0 || k == 0 {
        return Err(Error::parse(
            header_line,
            1,
            "malformed header: n and k must be at least 1",
        ));
    }
    if n > crate::StateSet::MAX_STATES {
        return Err(Error::parse(
            header_line,
            1,
            format!(
                "malformed header: at most {} states are supported",
                crate::StateSet::MAX_STATES
            ),
        ));
    }

    let mut table = Vec::with_capacity(n * k);
    let mut last_line = header_line;
    for row in 0..n {
        let (line_no, line) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line + 1,
                1,
                format!("wrong entry count: expected {n} rows, found {row}"),
            )
        })?;
        last_line = line_no;
        let row_tokens = tokens(line);
        if row_tokens.len() != k {
            return Err(Error::parse(
                line_no,
                1,
                format!(
                    "wrong entry count: row {row} has {} entries, expected {k}",
                    row_tokens.len()
                ),
            ));
        }
        for (column, tok) in row_tokens {
            let target: usize = tok.parse().map_err(|_| {
                Error::parse(line_no, column, format!("`{tok}` is not a state index"))
            })?;
            if target >= n {
                return Err(Error::parse(
                    line_no,
                    column,
                    format!("entry out of range: {target} >= n = {n}"),
                ));
            }
            table.push(target);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(
            line_no,
            1,
            format!("wrong entry count: more than {n} rows"),
        ));
    }
    Dfa::from_table(n, k, &table)
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

/// Writes the text format. Display names are not part of this format.
pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = format!("{} {}\n", dfa.n(), dfa.k());
    for row in dfa.rows() {
        let line = row
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct DfaJson {
    n: usize,
    k: usize,
    delta: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    state_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    letter_names: Option<Vec<String>>,
}

impl TryFrom<DfaJson> for Dfa {
    type Error = Error;

    fn try_from(json: DfaJson) -> Result<Dfa> {
        if json.delta.len() != json.n {
            return Err(Error::InvalidDfa(format!(
                "wrong entry count: delta has {} rows, n = {}",
                json.delta.len(),
                json.n
            )));
        }
        if let Some((q, row)) = json
            .delta
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != json.k)
        {
            return Err(Error::InvalidDfa(format!(
                "wrong entry count: row {q} has {} entries, k = {}",
                row.len(),
                json.k
            )));
        }
        let table: Vec<usize> = json.delta.concat();
        let mut dfa = Dfa::from_table(json.n, json.k, &table)?;
        if let Some(names) = json.state_names {
            dfa = dfa.with_state_names(names)?;
        }
        if let Some(names) = json.letter_names {
            dfa = dfa.with_letter_names(names)?;
        }
        Ok(dfa)
    }
}

impl From<Dfa> for DfaJson {
    fn from(dfa: Dfa) -> DfaJson {
        DfaJson {
            n: dfa.n(),
            k: dfa.k(),
            delta: dfa.rows(),
            state_names: dfa.state_names().map(<[String]>::to_vec),
            letter_names: dfa.letter_names().map(<[String]>::to_vec),
        }
    }
}

pub fn to_json(dfa: &Dfa) -> String {
    serde_json::to_string(dfa).expect("automaton serializes")
}

pub fn from_json(text: &str) -> Result<Dfa> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

/// Accepts either the JSON format (input starting with `{`) or the text
/// format.
pub fn parse_any(text: &str) -> Result<Dfa> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse_dfa(text)
    }
}

/// Renders the transition graph as a DOT digraph. Letters sharing the same
/// source and target are merged into one edge with a comma-joined label.
pub fn to_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n    rankdir=LR;\n    node [shape=circle];\n");
    for q in 0..dfa.n() {
        let _ = writeln!(out, "    {};", dot_id(&dfa.state_name(q)));
    }
    for q in 0..dfa.n() {
        let mut edges: Vec<(usize, Vec<String>)> = Vec::new();
        for l in 0..dfa.k() {
            let t = dfa.target(q, l);
            match edges.iter_mut().find(|(to, _)| *to == t) {
                Some((_, labels)) => labels.push(dfa.letter_name(l)),
                None => edges.push((t, vec![dfa.letter_name(l)])),
            }
        }
        for (t, labels) in edges {
            let _ = writeln!(
                out,
                "    {} -> {} [label=\"{}\"];",
                dot_id(&dfa.state_name(q)),
                dot_id(&dfa.state_name(t)),
                escape(&labels.join(","))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn dot_id(name: &str) -> String {
    let plain = name
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if plain {
        name.to_string()
    } else {
        format!("\"{}\"", escape(name))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cex() -> Dfa {
        Dfa::new(&[vec![1, 0], vec![0, 2], vec![2, 3], vec![0, 1]]).unwrap()
    }

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_dfa(text).unwrap_err() {
            Error::Parse {
                line,
                column,
                message,
            } => (line, column, message),
            e => panic!("expected a parse error, got {e:?}"),
        }
    }

    #[test]
    fn parses_the_counterexample() {
        assert_eq!(parse_dfa("4 2\n1 0\n0 2\n2 3\n0 1\n").unwrap(), cex());
        assert_eq!(serialize_dfa(&cex()), "4 2\n1 0\n0 2\n2 3\n0 1\n");
    }

    #[test]
    fn parses_single_state() {
        let d = parse_dfa("1 1\n0\n").unwrap();
        assert_eq!((d.n(), d.k(), d.table()), (1, 1, vec![0]));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# counterexample\n\n4 2\n# rows\n1 0\n0 2\n  2   3\n0 1";
        assert_eq!(parse_dfa(text).unwrap(), cex());
    }

    #[test]
    fn entry_out_of_range() {
        let (line, column, msg) = parse_err("2 1\n5\n0\n");
        assert_eq!((line, column), (2, 1));
        assert!(msg.contains("entry out of range"), "{msg}");
        let (line, column, _) = parse_err("2 2\n0 1\n1   7\n");
        assert_eq!((line, column), (3, 5));
    }

    #[test]
    fn malformed_header() {
        for text in ["", "4\n", "4 x\n", "0 2\n", "4 2 1\n", "99 1\n"] {
            let (_, _, msg) = parse_err(text);
            assert!(msg.contains("malformed header"), "{text:?}: {msg}");
        }
        assert_eq!(parse_err("4 x\n").1, 3);
    }

    #[test]
    fn wrong_entry_count() {
        let (line, _, msg) = parse_err("2 2\n0 1\n1\n");
        assert_eq!(line, 3);
        assert!(msg.contains("wrong entry count"));
        let (line, _, msg) = parse_err("2 1\n0\n");
        assert_eq!(line, 3);
        assert!(msg.contains("expected 2 rows"));
        let (line, _, _) = parse_err("1 1\n0\n0\n");
        assert_eq!(line, 3);
        let (_, _, msg) = parse_err("1 1\n-1\n");
        assert!(msg.contains("not a state index"));
    }

    #[test]
    fn json_format() {
        let json = to_json(&cex());
        assert_eq!(json, r#"{"n":4,"k":2,"delta":[[1,0],[0,2],[2,3],[0,1]]}"#);
        assert_eq!(from_json(&json).unwrap(), cex());
        assert_eq!(parse_any(&json).unwrap(), cex());
        assert_eq!(parse_any("4 2\n1 0\n0 2\n2 3\n0 1\n").unwrap(), cex());
        assert!(from_json(r#"{"n":2,"k":1,"delta":[[0]]}"#).is_err());
        assert!(from_json(r#"{"n":2,"k":1,"delta":[[0],[2]]}"#).is_err());
        assert!(from_json(r#"{"n":1,"k":2,"delta":[[0]]}"#).is_err());

        let named = cex()
            .with_state_names(vec!["A".into(), "B".into(), "C".into(), "D".into()])
            .unwrap();
        assert_eq!(from_json(&to_json(&named)).unwrap(), named);
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&cex());
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("q0 -> q1 [label=\"a\"]"), "{dot}");
        assert!(dot.contains("q0 -> q0 [label=\"b\"]"), "{dot}");
        assert_eq!(dot.matches("->").count(), 8);

        let one = to_dot(&parse_dfa("1 1\n0\n").unwrap());
        assert_eq!(one.matches("->").count(), 1);
        assert!(one.contains("q0 -> q0 [label=\"a\"]"));
    }

    #[test]
    fn dot_merges_parallel_edges() {
        let d = Dfa::new(&[vec![1, 1, 0], vec![0, 0, 0]]).unwrap();
        let dot = to_dot(&d);
        assert!(dot.contains("q0 -> q1 [label=\"a,b\"]"), "{dot}");
        assert!(dot.contains("q1 -> q0 [label=\"a,b,c\"]"), "{dot}");
    }

    #[test]
    fn dot_quotes_odd_names() {
        let d = Dfa::new(&[vec![0]])
            .unwrap()
            .with_state_names(vec!["start \"s\"".into()])
            .unwrap();
        assert!(to_dot(&d).contains(r#""start \"s\"" -> "start \"s\"""#));
    }
}
