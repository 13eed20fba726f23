//! Plain-text file formats.
//!
//! All formats are line based, 1-indexed, and ignore blank lines and lines
//! starting with `#`. Emitters write the normalized form that the parsers
//! read back unchanged.
//!
//! - edge list: `n m`, then `m` lines `u v`
//! - intervals: `n`, then `n` lines `a b`
//! - solution: `k` (number of pairs), then `k` lines `u v`
//! - labels: `kind source_n source_m`, then one line `id label` per gadget vertex

use std::fmt::{Display, Write};
use std::str::FromStr;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalModel;
use crate::reductions::{Label, ReductionKind, ReductionOutput};
use crate::verify::SemipairedSolution;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next meaningful line as `(line number, fields)`.
    fn next_fields(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            self.last = i + 1;
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, arity: usize, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let (line, fields) = self.next_fields().ok_or_else(|| Error::Parse {
            line: self.last + 1,
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        if fields.len() != arity {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "expected {what} ({arity} fields), got {} fields",
                    fields.len()
                ),
            });
        }
        Ok((line, fields))
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_fields() {
            Some((line, _)) => Err(Error::Parse {
                line,
                msg: "unexpected trailing line".into(),
            }),
            None => Ok(()),
        }
    }
}

fn field<T: FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what} {s:?}"),
    })
}

fn vertex(line: usize, s: &str, n: usize) -> Result<usize> {
    let v: usize = field(line, s, "vertex id")?;
    if v == 0 || v > n {
        return Err(Error::Parse {
            line,
            msg: format!("vertex {v} out of range 1..={n}"),
        });
    }
    Ok(v)
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (hl, h) = lines.expect(2, "header `n m`")?;
    let n: usize = field(hl, h[0], "vertex count")?;
    let m: usize = field(hl, h[1], "edge count")?;
    if n == 0 {
        return Err(Error::Parse {
            line: hl,
            msg: "graph must have at least one vertex".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m {
        let (line, f) = lines.expect(2, "edge `u v`")?;
        let (u, v) = (vertex(line, f[0], n)?, vertex(line, f[1], n)?);
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop on vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    lines.finish()?;
    Graph::new(n, &edges)
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_intervals<T>(text: &str) -> Result<IntervalModel<T>>
where
    T: Num + PartialOrd + Copy + FromStr,
{
    let mut lines = Lines::new(text);
    let (hl, h) = lines.expect(1, "header `n`")?;
    let n: usize = field(hl, h[0], "interval count")?;
    let mut iv = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, f) = lines.expect(2, "interval `a b`")?;
        iv.push((
            field(line, f[0], "endpoint")?,
            field(line, f[1], "endpoint")?,
        ));
    }
    lines.finish()?;
    IntervalModel::new(iv)
}

pub fn emit_intervals<T>(model: &IntervalModel<T>) -> String
where
    T: Num + PartialOrd + Copy + Display,
{
    let mut out = format!("{}\n", model.len());
    for (a, b) in model.intervals() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// Parses a solution file. Ids are range-checked only by the verifier.
pub fn parse_solution(text: &str) -> Result<SemipairedSolution> {
    let mut lines = Lines::new(text);
    let (hl, h) = lines.expect(1, "header `k`")?;
    let k: usize = field(hl, h[0], "pair count")?;
    let mut sol = SemipairedSolution::default();
    for _ in 0..k {
        let (line, f) = lines.expect(2, "pair `u v`")?;
        sol.push(
            field(line, f[0], "vertex id")?,
            field(line, f[1], "vertex id")?,
        );
    }
    lines.finish()?;
    Ok(sol)
}

pub fn emit_solution(sol: &SemipairedSolution) -> String {
    let mut out = format!("{}\n", sol.pairs().len());
    for (u, v) in sol.pairs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_labels(text: &str, gadget: Graph) -> Result<ReductionOutput> {
    let mut lines = Lines::new(text);
    let (hl, h) = lines.expect(3, "header `kind source_n source_m`")?;
    let kind: ReductionKind = h[0].parse().map_err(|e: Error| Error::Parse {
        line: hl,
        msg: e.to_string(),
    })?;
    let source_n = field(hl, h[1], "source vertex count")?;
    let source_m = field(hl, h[2], "source edge count")?;
    let mut labels = Vec::with_capacity(gadget.n());
    for id in 1..=gadget.n() {
        let (line, f) = lines.expect(2, "`id label`")?;
        if field::<usize>(line, f[0], "vertex id")? != id {
            return Err(Error::Parse {
                line,
                msg: format!("expected vertex {id}"),
            });
        }
        labels.push(f[1].parse::<Label>().map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?);
    }
    lines.finish()?;
    ReductionOutput::from_parts(kind, gadget, labels, source_n, source_m)
}

pub fn emit_labels(red: &ReductionOutput) -> String {
    let mut out = format!("{} {} {}\n", red.kind, red.source_n, red.source_m);
    for (i, l) in red.labels.iter().enumerate() {
        writeln!(out, "{} {l}", i + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::dom_to_semipd_hardness;

    #[test]
    fn edgelist_examples() {
        assert_eq!(parse_edgelist("2 1\n1 2\n").unwrap(), Graph::path(2));
        let err = parse_edgelist("2 1\n1 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "vertex 3 out of range 1..=2".into()
            }
        );
        let g = parse_edgelist("# comment\n3 2\n\n3 2\n# mid\n2 1\n").unwrap();
        assert_eq!(emit_edgelist(&g), "3 2\n1 2\n2 3\n");
    }

    #[test]
    fn edgelist_errors_carry_lines() {
        let line = |s: &str| match parse_edgelist(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("3 2\n1 2\n"), 3);
        assert_eq!(line("3 1\n1 2\n2 3\n"), 3);
        assert_eq!(line("3 2\n1 2\n2 1\n"), 3);
        assert_eq!(line("3 1\n2 2\n"), 2);
        assert_eq!(line("3 x\n"), 1);
        assert_eq!(line("3 1\n1 2 3\n"), 2);
    }

    #[test]
    fn intervals_round_trip() {
        let text = "3\n1 4\n2 6\n5 8\n";
        let m: IntervalModel<i64> = parse_intervals(text).unwrap();
        assert_eq!(emit_intervals(&m), text);
        let f: IntervalModel<f64> = parse_intervals("2\n0.5 1.5\n1 2\n").unwrap();
        assert_eq!(f.interval(1), (0.5, 1.5));
        assert!(parse_intervals::<i64>("1\n3 2\n").is_err());
    }

    #[test]
    fn solution_round_trip() {
        let sol = SemipairedSolution::new([(4, 2), (5, 6)]);
        assert_eq!(emit_solution(&sol), "2\n2 4\n5 6\n");
        assert_eq!(parse_solution(&emit_solution(&sol)).unwrap(), sol);
    }

    #[test]
    fn labels_round_trip() {
        let red = dom_to_semipd_hardness(&Graph::path(3)).unwrap();
        let text = emit_labels(&red);
        assert!(text.starts_with("hardness 3 2\n1 v_1^1\n"));
        let back = parse_labels(&text, red.gadget.clone()).unwrap();
        assert_eq!(back, red);
        assert!(parse_labels(&text, Graph::path(15)).is_err());
    }
}
