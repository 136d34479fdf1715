//! Instance file formats.
//!
//! Three line-oriented formats, 1-based ids externally, LF or CRLF, `c`
//! comment lines:
//!
//! - graphs: `p edge <n> <m>` then `m` lines `e <u> <v>`
//! - set systems: `p scp <n> <m>` then `m` lines `s [<weight>] : <e> ...`
//!   (missing weight defaults to 1; weights are exact decimals or `p/q`)
//! - TSP: `p atsp <n>` then `n` rows of `n` numeric tokens, diagonal ignored
//!
//! `serialize_*` emit the canonical form; parsing a canonical file and
//! re-serializing reproduces it byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use xapx_core::instances::{Graph, SetSystem, TspInstance};
use xapx_core::weight::{format_exact, parse_rational, Weight};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("instance validation failed: {0}")]
    Invalid(#[from] xapx_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Parse {
        line,
        msg: msg.into(),
    })
}

/// Numbered, trimmed, non-comment lines.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| FormatError::Parse {
            line,
            msg: format!("invalid {what} `{token}`"),
        })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = significant_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing `p edge <n> <m>` header"),
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "edge" {
        return err(hline, "expected header `p edge <n> <m>`");
    }
    let n = parse_count(toks[2], hline, "vertex count")?;
    let m = parse_count(toks[3], hline, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.first() != Some(&"e") || toks.len() != 3 {
            return err(line, "expected edge line `e <u> <v>`");
        }
        let u = parse_count(toks[1], line, "endpoint")?;
        let v = parse_count(toks[2], line, "endpoint")?;
        if u == 0 || u > n || v == 0 || v > n {
            return err(line, format!("endpoint out of range 1..={n}"));
        }
        if u == v {
            return err(line, format!("self-loop at vertex {u}"));
        }
        edges.push((u - 1, v - 1));
        if edges.len() > m {
            return err(line, format!("more than the declared {m} edges"));
        }
    }
    if edges.len() != m {
        return err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        );
    }
    Ok(Graph::new(n, edges)?)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_setsystem(text: &str) -> Result<SetSystem> {
    let mut lines = significant_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing `p scp <n> <m>` header"),
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "scp" {
        return err(hline, "expected header `p scp <n> <m>`");
    }
    let n = parse_count(toks[2], hline, "universe size")?;
    let m = parse_count(toks[3], hline, "set count")?;
    if m == 0 {
        return err(hline, "empty family: need at least one set");
    }
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut weights: Vec<Weight> = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.first() != Some(&"s") {
            return err(line, "expected set line `s [<weight>] : <elements>`");
        }
        let (weight, rest) = match toks.get(1) {
            Some(&":") => (Weight::from_integer(1.into()), &toks[2..]),
            Some(tok) => {
                let w = parse_rational(tok)
                    .ok_or_else(|| FormatError::Parse {
                        line,
                        msg: format!("invalid weight `{tok}`"),
                    })?;
                if toks.get(2) != Some(&":") {
                    return err(line, "expected `:` after the weight");
                }
                if w < Weight::from_integer(0.into()) {
                    return err(line, "negative weight");
                }
                (w, &toks[3..])
            }
            None => return err(line, "expected `:` and elements"),
        };
        let mut elems = Vec::with_capacity(rest.len());
        for tok in rest {
            let e = parse_count(tok, line, "element")?;
            if e == 0 || e > n {
                return err(line, format!("element out of range 1..={n}"));
            }
            elems.push(e - 1);
        }
        sets.push(elems);
        weights.push(weight);
        if sets.len() > m {
            return err(line, format!("more than the declared {m} sets"));
        }
    }
    if sets.len() != m {
        return err(
            last_line,
            format!("declared {m} sets but found {}", sets.len()),
        );
    }
    Ok(SetSystem::new(n, sets, weights)?)
}

pub fn serialize_setsystem(s: &SetSystem) -> String {
    let mut out = String::new();
    writeln!(out, "p scp {} {}", s.universe_size(), s.len()).unwrap();
    for i in 0..s.len() {
        write!(out, "s {} :", format_exact(s.weight(i))).unwrap();
        for e in s.set(i).iter() {
            write!(out, " {}", e + 1).unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}

pub fn parse_tsp(text: &str) -> Result<TspInstance> {
    let mut lines = significant_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing `p atsp <n>` header"),
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "p" || toks[1] != "atsp" {
        return err(hline, "expected header `p atsp <n>`");
    }
    let n = parse_count(toks[2], hline, "city count")?;
    let mut w = vec![Weight::from_integer(0.into()); n * n];
    let mut row = 0usize;
    for (line, text) in lines {
        if row >= n {
            return err(line, format!("more than the declared {n} rows"));
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != n {
            return err(line, format!("expected {n} entries, found {}", toks.len()));
        }
        for (col, tok) in toks.iter().enumerate() {
            if col == row {
                continue; // diagonal token ignored
            }
            let value = parse_rational(tok).ok_or_else(|| FormatError::Parse {
                line,
                msg: format!("invalid weight `{tok}`"),
            })?;
            if value < Weight::from_integer(0.into()) {
                return err(line, "negative arc weight");
            }
            w[row * n + col] = value;
        }
        row += 1;
    }
    if row != n {
        return err(0, format!("declared {n} rows but found {row}"));
    }
    Ok(TspInstance::new(n, w)?)
}

pub fn serialize_tsp(t: &TspInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p atsp {}", t.n()).unwrap();
    for i in 0..t.n() {
        let row: Vec<String> = (0..t.n())
            .map(|j| {
                if i == j {
                    "0".to_string()
                } else {
                    format_exact(t.weight(i, j))
                }
            })
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
