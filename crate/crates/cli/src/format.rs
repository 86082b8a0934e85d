//! Text formats: generator files, the automaton format and DOT.
//!
//! Generator files hold one generator word per line, or blocks of
//! `u -> v` lines describing one diagram each. Blocks are separated by blank
//! lines and `#` starts a comment.
//!
//! Automaton files start with `root <id>` followed by `edge <src> <0|1> <dst>`
//! lines. [`write_automaton`] emits edges in breadth-first order from the
//! root, so writing a loaded file reproduces it byte for byte.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use thompson_core::automaton::VertexType;
use thompson_core::element::{GeneratorWord, Generators, TreeDiagram};
use thompson_core::words::Word;
use thompson_core::TreeAutomaton;

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

/// Lines grouped into blank-line separated blocks, with 1-based line numbers.
fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out = vec![Vec::new()];
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            out.push(Vec::new());
            continue;
        }
        let line = strip_comment(raw);
        if !line.is_empty() {
            out.last_mut().expect("at least one block").push((i + 1, line));
        }
    }
    out.retain(|b| !b.is_empty());
    out
}

fn parse_pair(line: &str) -> Result<(Word, Word)> {
    let (u, v) = line.split_once("->").ok_or_else(|| anyhow!("expected `u -> v`"))?;
    let u: Word = u.trim().parse()?;
    let v: Word = v.trim().parse()?;
    Ok((u, v))
}

/// Parses a generator word from its tokens.
pub fn parse_word(text: &str, gens: &mut Generators) -> Result<TreeDiagram> {
    let w: GeneratorWord = text.parse()?;
    Ok(w.evaluate(gens))
}

/// Reads the generators listed in a generator file, reduced.
pub fn parse_generators(text: &str) -> Result<Vec<TreeDiagram>> {
    let mut gens = Generators::new();
    let mut out = Vec::new();
    for block in blocks(text) {
        if block.iter().any(|(_, l)| l.contains("->")) {
            let pairs = block
                .iter()
                .map(|&(n, l)| parse_pair(l).with_context(|| format!("line {}", n)))
                .collect::<Result<Vec<_>>>()?;
            let first = block[0].0;
            let d = TreeDiagram::from_pairs(pairs).with_context(|| format!("diagram starting on line {}", first))?;
            out.push(d.reduce());
        } else {
            for (n, line) in block {
                out.push(parse_word(line, &mut gens).with_context(|| format!("line {}", n))?);
            }
        }
    }
    Ok(out)
}

/// Reads an automaton file.
pub fn parse_automaton(text: &str) -> Result<TreeAutomaton> {
    let mut root = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["root", id] => {
                if root.replace(id.to_string()).is_some() {
                    bail!("line {}: second `root` line", i + 1);
                }
            }
            ["edge", src, digit, dst] => {
                let d = match *digit {
                    "0" => 0,
                    "1" => 1,
                    other => bail!("line {}: edge label `{}` is not 0 or 1", i + 1, other),
                };
                edges.push((src.to_string(), d, dst.to_string()));
            }
            _ => bail!("line {}: expected `root <id>` or `edge <src> <0|1> <dst>`", i + 1),
        }
    }
    let root = root.ok_or_else(|| anyhow!("missing `root` line"))?;
    Ok(TreeAutomaton::from_edges(&root, &edges)?)
}

/// Writes an automaton in breadth-first edge order.
pub fn write_automaton(a: &TreeAutomaton) -> String {
    let mut out = format!("root {}\n", a.name(a.root()));
    for v in a.bfs_order() {
        if let Some(children) = a.children(v) {
            for (d, c) in children.into_iter().enumerate() {
                let _ = writeln!(out, "edge {} {} {}", a.name(v), d, a.name(c));
            }
        }
    }
    out
}

fn type_color(t: Option<VertexType>) -> &'static str {
    match t {
        Some(VertexType::Root) => "#d9d9d9",
        Some(VertexType::Left) => "#a6cee3",
        Some(VertexType::Right) => "#fb9a99",
        Some(VertexType::Middle) => "#b2df8a",
        None => "#ffffff",
    }
}

/// DOT rendering with vertices colored by type; vertices of several types are white.
pub fn to_dot(a: &TreeAutomaton) -> String {
    let types = a.vertex_types();
    let mut out = String::from("digraph automaton {\n  node [shape=circle, style=filled];\n");
    for v in a.bfs_order() {
        let names: Vec<&str> = types[v].iter().map(VertexType::name).collect();
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\\n{}\", fillcolor=\"{}\"{}];",
            a.name(v),
            a.name(v),
            names.join("/"),
            type_color(types[v].single()),
            if v == a.root() { ", shape=doublecircle" } else { "" }
        );
    }
    for v in a.bfs_order() {
        if let Some(children) = a.children(v) {
            for (d, c) in children.into_iter().enumerate() {
                let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", a.name(v), a.name(c), d);
            }
        }
    }
    out.push_str("}\n");
    out
}
