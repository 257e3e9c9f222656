//! Line-oriented quiver description format.
//!
//! ```text
//! # framed 1-Jordan quiver
//! vertices 2
//! arrow a: 1 -> 1
//! arrow iota: 2 -> 1
//! framed 2
//! dim 1 = 2
//! dim 2 = 2
//! filtration 1: 1 2
//! filtration 2: 0 2
//! ```
//!
//! Vertices are numbered from 1. Besides the core directives the format
//! accepts `alpha <v> = <n>` (a second dimension vector), `map <id>: <row> ;
//! <row> ...` (rational entries of a concrete representation) and `vmap <id>:
//! ...` (polynomial entries, for specializing the Derksen-Weyman `V`).
//! Vertices without a `dim` line have dimension 0. When some `filtration`
//! lines are present, the remaining ordinary vertices get the constant chain
//! `beta_v` and framed vertices get `0, ..., 0, beta_v`.

use std::fmt;

use crate::linalg::Matrix;
use crate::poly::{Polynomial, Rational, SymbolicMatrix};
use crate::quiver::{Arrow, Quiver};
use crate::repspace::{ConcreteRep, Filtration};

/// Parse failure with a 1-based location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Everything a description file can carry.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub beta: Vec<usize>,
    /// `None` when the file has no `filtration` lines.
    pub filtration: Option<Filtration>,
    pub alpha: Option<Vec<usize>>,
    pub maps: Option<Vec<Matrix<Rational>>>,
    pub vmaps: Option<Vec<SymbolicMatrix>>,
}

impl QuiverFile {
    /// The explicit filtration, or the one-step filtration `beta`.
    pub fn filtration_or_trivial(&self) -> Filtration {
        self.filtration.clone().unwrap_or_else(|| Filtration::trivial(&self.beta))
    }

    pub fn rep(&self) -> Option<ConcreteRep> {
        self.maps.as_ref().and_then(|m| ConcreteRep::new(&self.quiver, &self.beta, m.clone()).ok())
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, at: &str, message: impl Into<String>) -> ParseError {
        // `at` is a subslice of the line when possible
        let column = match (at.as_ptr() as usize).checked_sub(self.text.as_ptr() as usize) {
            Some(off) if off <= self.text.len() => self.text[..off].chars().count() + 1,
            _ => 1,
        };
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }
}

fn parse_usize(line: &Line, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| line.err(tok, format!("expected {what}, found {tok:?}")))
}

struct Parser<'a> {
    vertices: Option<usize>,
    arrows: Vec<(Arrow, Line<'a>)>,
    framed: Vec<usize>,
    dims: Vec<(usize, usize)>,
    alphas: Vec<(usize, usize)>,
    chains: Vec<(usize, Vec<usize>, Line<'a>)>,
    maps: Vec<(String, Vec<Vec<Rational>>, Line<'a>)>,
    vmaps: Vec<(String, Vec<Vec<Polynomial>>, Line<'a>)>,
}

impl<'a> Parser<'a> {
    fn vertex(&self, line: &Line, tok: &str) -> Result<usize, ParseError> {
        let p = self
            .vertices
            .ok_or_else(|| line.err(tok, "`vertices` must come first"))?;
        let v = parse_usize(line, tok, "a vertex number")?;
        if v == 0 || v > p {
            return Err(line.err(tok, format!("vertex {v} does not exist (vertices are 1..{p})")));
        }
        Ok(v - 1)
    }

    fn assignment(&self, line: &Line, rest: &'a str) -> Result<(usize, usize), ParseError> {
        let (v, n) = rest
            .split_once('=')
            .ok_or_else(|| line.err(rest, "expected `<vertex> = <n>`"))?;
        Ok((self.vertex(line, v.trim())?, parse_usize(line, n.trim(), "a dimension")?))
    }

    fn rows<T>(
        line: &Line,
        body: &'a str,
        entry: impl Fn(&'a str) -> Result<T, String>,
    ) -> Result<Vec<Vec<T>>, ParseError> {
        let mut rows = Vec::new();
        for row in body.split(';') {
            let mut out = Vec::new();
            for tok in row.split_whitespace() {
                out.push(entry(tok).map_err(|e| line.err(tok, e))?);
            }
            rows.push(out);
        }
        if rows.len() == 1 && rows[0].is_empty() {
            rows.clear();
        }
        Ok(rows)
    }

    fn line(&mut self, line: Line<'a>) -> Result<(), ParseError> {
        let text = line.text.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            return Ok(());
        }
        let (keyword, rest) = text.split_at(text.find(char::is_whitespace).unwrap_or(text.len()));
        let rest = rest.trim();
        match keyword {
            "vertices" => {
                if self.vertices.is_some() {
                    return Err(line.err(keyword, "`vertices` given twice"));
                }
                self.vertices = Some(parse_usize(&line, rest, "a vertex count")?);
            }
            "arrow" => {
                let (id, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| line.err(rest, "expected `arrow <id>: <tail> -> <head>`"))?;
                let id = id.trim();
                if id.is_empty() || id.chars().any(char::is_whitespace) {
                    return Err(line.err(rest, "arrow id must be a single word"));
                }
                if self.arrows.iter().any(|(a, _)| a.id == id) {
                    return Err(line.err(id, format!("arrow {id} defined twice")));
                }
                let (t, h) = ends
                    .split_once("->")
                    .ok_or_else(|| line.err(ends, "expected `<tail> -> <head>`"))?;
                let tail = self.vertex(&line, t.trim())?;
                let head = self.vertex(&line, h.trim())?;
                self.arrows.push((
                    Arrow {
                        id: id.to_string(),
                        tail,
                        head,
                    },
                    line,
                ));
            }
            "framed" => {
                let v = self.vertex(&line, rest)?;
                self.framed.push(v);
            }
            "dim" => {
                let a = self.assignment(&line, rest)?;
                if self.dims.iter().any(|(v, _)| *v == a.0) {
                    return Err(line.err(rest, "dimension given twice"));
                }
                self.dims.push(a);
            }
            "alpha" => {
                let a = self.assignment(&line, rest)?;
                self.alphas.push(a);
            }
            "filtration" => {
                let (v, chain) = rest
                    .split_once(':')
                    .ok_or_else(|| line.err(rest, "expected `filtration <vertex>: d1 d2 ...`"))?;
                let v = self.vertex(&line, v.trim())?;
                let mut dims = Vec::new();
                let mut prev = 0;
                for tok in chain.split_whitespace() {
                    let d = parse_usize(&line, tok, "a subspace dimension")?;
                    if d < prev {
                        return Err(line.err(tok, format!("filtration is not monotone ({d} after {prev})")));
                    }
                    prev = d;
                    dims.push(d);
                }
                if dims.is_empty() {
                    return Err(line.err(chain, "empty filtration"));
                }
                if self.chains.iter().any(|(w, _, _)| *w == v) {
                    return Err(line.err(rest, "filtration given twice"));
                }
                self.chains.push((v, dims, line));
            }
            "map" | "vmap" => {
                let (id, body) = rest
                    .split_once(':')
                    .ok_or_else(|| line.err(rest, format!("expected `{keyword} <id>: <entries>`")))?;
                let id = id.trim().to_string();
                if keyword == "map" {
                    let rows = Self::rows(&line, body, |t| {
                        t.parse::<Rational>().map_err(|_| format!("expected a rational number, found {t:?}"))
                    })?;
                    self.maps.push((id, rows, line));
                } else {
                    let rows = Self::rows(&line, body, Polynomial::parse)?;
                    self.vmaps.push((id, rows, line));
                }
            }
            other => return Err(line.err(keyword, format!("unknown directive {other:?}"))),
        }
        Ok(())
    }
}

fn assemble<T: crate::linalg::Ring>(rows: Vec<Vec<T>>, shape: (usize, usize), line: &Line, id: &str) -> Result<Matrix<T>, ParseError> {
    let (r, c) = shape;
    if r == 0 || c == 0 {
        if rows.iter().all(Vec::is_empty) {
            return Ok(Matrix::zeros(r, c));
        }
    } else if rows.len() == r && rows.iter().all(|row| row.len() == c) {
        return Matrix::from_rows(rows).map_err(|e| line.err(line.text, e.to_string()));
    }
    Err(line.err(line.text, format!("map {id} must be {r}x{c}")))
}

/// Parses a description; see the module docs for the grammar.
pub fn parse_quiver_file(text: &str) -> Result<QuiverFile, ParseError> {
    let mut p = Parser {
        vertices: None,
        arrows: Vec::new(),
        framed: Vec::new(),
        dims: Vec::new(),
        alphas: Vec::new(),
        chains: Vec::new(),
        maps: Vec::new(),
        vmaps: Vec::new(),
    };
    let mut last_line = 1;
    for (k, raw) in text.lines().enumerate() {
        last_line = k + 1;
        p.line(Line { number: k + 1, text: raw })?;
    }
    let n = p.vertices.ok_or(ParseError {
        line: last_line,
        column: 1,
        message: "missing `vertices` line".into(),
    })?;
    let labels = (1..=n).map(|v| v.to_string()).collect();
    let mut framed = vec![false; n];
    for v in &p.framed {
        framed[*v] = true;
    }
    let arrows: Vec<Arrow> = p.arrows.iter().map(|(a, _)| a.clone()).collect();
    let quiver = Quiver::from_parts(labels, arrows, framed).map_err(|e| ParseError {
        line: p.arrows.first().map_or(1, |(_, l)| l.number),
        column: 1,
        message: e.to_string(),
    })?;
    let mut beta = vec![0; n];
    for (v, d) in &p.dims {
        beta[*v] = *d;
    }
    let alpha = (!p.alphas.is_empty()).then(|| {
        let mut a = vec![0; n];
        for (v, d) in &p.alphas {
            a[*v] = *d;
        }
        a
    });

    let filtration = if p.chains.is_empty() {
        None
    } else {
        let len = p.chains[0].1.len();
        for (v, chain, line) in &p.chains {
            if chain.len() != len {
                return Err(line.err(line.text, format!("expected {len} levels like the first filtration line")));
            }
            if chain[len - 1] != beta[*v] {
                return Err(line.err(
                    line.text,
                    format!("filtration must end at dim {} = {}", v + 1, beta[*v]),
                ));
            }
        }
        let mut levels = vec![vec![0; n]; len];
        for v in 0..n {
            let chain = p.chains.iter().find(|(w, _, _)| *w == v).map(|(_, c, _)| c.clone());
            let chain = chain.unwrap_or_else(|| {
                (0..len)
                    .map(|k| if quiver.is_framed(v) && k + 1 < len { 0 } else { beta[v] })
                    .collect()
            });
            for (k, d) in chain.into_iter().enumerate() {
                levels[k][v] = d;
            }
        }
        Some(Filtration::new(levels).expect("chains checked"))
    };

    let shape = |a: &Arrow, dims: &[usize]| (dims[a.head], dims[a.tail]);
    let maps = if p.maps.is_empty() {
        None
    } else {
        let mut out: Vec<Option<Matrix<Rational>>> = vec![None; quiver.arrows().len()];
        for (id, rows, line) in p.maps {
            let k = quiver
                .arrow_index(&id)
                .ok_or_else(|| line.err(line.text, format!("map for unknown arrow {id}")))?;
            out[k] = Some(assemble(rows, shape(quiver.arrow(k), &beta), &line, &id)?);
        }
        let missing = quiver.arrows().iter().zip(&out).find(|(_, m)| m.is_none());
        if let Some((a, _)) = missing {
            return Err(ParseError {
                line: last_line,
                column: 1,
                message: format!("no map given for arrow {}", a.id),
            });
        }
        Some(out.into_iter().map(|m| m.expect("checked")).collect())
    };
    let vmaps = if p.vmaps.is_empty() {
        None
    } else {
        let dims = alpha.clone().unwrap_or_else(|| vec![0; n]);
        let mut out: Vec<Option<SymbolicMatrix>> = vec![None; quiver.arrows().len()];
        for (id, rows, line) in p.vmaps {
            let k = quiver
                .arrow_index(&id)
                .ok_or_else(|| line.err(line.text, format!("vmap for unknown arrow {id}")))?;
            out[k] = Some(assemble(rows, shape(quiver.arrow(k), &dims), &line, &id)?);
        }
        if let Some((a, _)) = quiver.arrows().iter().zip(&out).find(|(_, m)| m.is_none()) {
            return Err(ParseError {
                line: last_line,
                column: 1,
                message: format!("no vmap given for arrow {}", a.id),
            });
        }
        Some(out.into_iter().map(|m| m.expect("checked")).collect())
    };
    let file = QuiverFile {
        quiver,
        beta,
        filtration,
        alpha,
        maps,
        vmaps,
    };
    if let (Some(f), Some(rep)) = (&file.filtration, file.rep()) {
        if !rep.respects(f) {
            return Err(ParseError {
                line: last_line,
                column: 1,
                message: "the maps do not preserve the filtration".into(),
            });
        }
    }
    Ok(file)
}

/// Renders a file that parses back to the same data.
pub fn write_quiver_file(f: &QuiverFile) -> String {
    let q = &f.quiver;
    let mut out = format!("vertices {}\n", q.vertex_count());
    for a in q.arrows() {
        out += &format!("arrow {}: {} -> {}\n", a.id, a.tail + 1, a.head + 1);
    }
    for v in (0..q.vertex_count()).filter(|&v| q.is_framed(v)) {
        out += &format!("framed {}\n", v + 1);
    }
    for (v, d) in f.beta.iter().enumerate() {
        out += &format!("dim {} = {}\n", v + 1, d);
    }
    if let Some(alpha) = &f.alpha {
        for (v, d) in alpha.iter().enumerate() {
            out += &format!("alpha {} = {}\n", v + 1, d);
        }
    }
    if let Some(filt) = &f.filtration {
        for v in 0..q.vertex_count() {
            let chain: Vec<String> = filt.chain(v).iter().map(ToString::to_string).collect();
            out += &format!("filtration {}: {}\n", v + 1, chain.join(" "));
        }
    }
    let render_rows = |rows: Vec<Vec<String>>| rows.into_iter().map(|r| r.join(" ")).collect::<Vec<_>>().join(" ; ");
    if let Some(maps) = &f.maps {
        for (a, m) in q.arrows().iter().zip(maps) {
            let rows = m.to_rows().into_iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            out += &format!("map {}: {}\n", a.id, render_rows(rows));
        }
    }
    if let Some(vmaps) = &f.vmaps {
        for (a, m) in q.arrows().iter().zip(vmaps) {
            let rows = m
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(|p| p.to_string().replace(' ', "")).collect())
                .collect();
            out += &format!("vmap {}: {}\n", a.id, render_rows(rows));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAMED_JORDAN: &str = "# framed 1-Jordan\nvertices 2\narrow a: 1 -> 1\narrow iota: 2 -> 1\nframed 2\ndim 1 = 2\ndim 2 = 2\nfiltration 1: 1 2\n";

    #[test]
    fn framed_jordan() {
        let f = parse_quiver_file(FRAMED_JORDAN).unwrap();
        assert_eq!(f.quiver.vertex_count(), 2);
        assert_eq!(f.quiver.arrows().len(), 2);
        assert!(f.quiver.is_framed(1));
        assert_eq!(f.filtration.as_ref().unwrap().chain(1), vec![0, 2]);
        assert_eq!(parse_quiver_file(&write_quiver_file(&f)).unwrap(), f);
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_quiver_file("vertices 1\ndim 1 = 3\nfiltration 1: 2 1 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 17));
        assert!(e.message.contains("monotone"));
        let e = parse_quiver_file("vertices 2\narrow a: 1 -> 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 15));
        let e = parse_quiver_file("vertices 2\nbogus 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(parse_quiver_file("arrow a: 1 -> 1\n").is_err());
        assert!(parse_quiver_file("vertices 1\n").is_ok());
        let e = parse_quiver_file("vertices 2\narrow a: 1 -> 2\ndim 1 = 1\ndim 2 = 1\nmap a: 1 2\n").unwrap_err();
        assert!(e.message.contains("1x1"));
    }

    #[test]
    fn maps_and_alpha() {
        let text = "vertices 2\narrow a: 1 -> 2\narrow b: 1 -> 2\ndim 1 = 2\ndim 2 = 2\nalpha 1 = 1\nalpha 2 = 1\nvmap a: 1\nvmap b: lambda\nmap a: 1 0 ; 0 1/2\nmap b: 0 0 ; 0 0\n";
        let f = parse_quiver_file(text).unwrap();
        assert_eq!(f.alpha, Some(vec![1, 1]));
        assert_eq!(f.vmaps.as_ref().unwrap()[1].get(0, 0), &Polynomial::scalar("lambda"));
        assert_eq!(f.rep().unwrap().maps[0].get(1, 1), &crate::poly::ratio(1, 2));
        assert_eq!(parse_quiver_file(&write_quiver_file(&f)).unwrap(), f);
    }
}
