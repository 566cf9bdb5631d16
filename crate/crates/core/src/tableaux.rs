//! Young diagrams, standard tableaux, content strings and the coloured Young
//! graph.
//!
//! Rows and columns are 1-based; the content of the node in row r, column c
//! is c - r, and the matching Jucys-Murphy eigenvalue is q^{2(c - r)}.
//!
//! Tableaux of a shape are listed in descending lexicographic order of their
//! content strings, so the row-reading tableau comes first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A partition lambda_1 >= lambda_2 >= ... >= lambda_k >= 1. The empty
/// diagram has no rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

/// A node that can be added to a diagram, with its content c - r.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
    pub content: i32,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram(format!("{rows:?} has an empty row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses "3,2,1" or "(3,2,1)"; "" and "()" give the empty diagram.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let rows = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidDiagram(format!("cannot parse {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row r (1-based); 0 past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let cols = (1..=width).map(|c| self.rows.iter().filter(|&&r| r >= c).count()).collect();
        Self { rows: cols }
    }

    /// Nodes (row, col) in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 1..=len {
                out.push((r + 1, c));
            }
        }
        out
    }

    /// Hook length of every node, row by row:
    /// h(r, c) = (lambda_r - c) + (lambda'_c - r) + 1.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .map(|(r, &len)| (1..=len).map(|c| (len - c) + (conj.rows[c - 1] - (r + 1)) + 1).collect())
            .collect()
    }

    /// Addable nodes from the top row down. Their contents strictly
    /// decrease; the last one opens a new row with content -k.
    pub fn addable_corners(&self) -> Vec<Corner> {
        let mut out = Vec::new();
        for r in 1..=self.rows.len() + 1 {
            let len = self.row_len(r);
            if r == 1 || self.row_len(r - 1) > len {
                let col = len + 1;
                out.push(Corner { row: r, col, content: col as i32 - r as i32 });
            }
        }
        out
    }

    /// Nodes whose removal leaves a diagram, from the top row down.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        let k = self.rows.len();
        (1..=k).filter(|&r| r == k || self.rows[r] < self.rows[r - 1]).map(|r| (r, self.rows[r - 1])).collect()
    }

    /// The diagram with one node added at the end of row `row`.
    pub fn add_node(&self, row: usize) -> Result<Self> {
        let count = self.rows.len() + 1;
        if row == 0 || row > count || (row > 1 && self.row_len(row - 1) == self.row_len(row)) {
            return Err(Error::NotAddable { index: row, count });
        }
        let mut rows = self.rows.clone();
        if row == count {
            rows.push(1);
        } else {
            rows[row - 1] += 1;
        }
        Ok(Self { rows })
    }

    fn remove_node(&self, row: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[row - 1] -= 1;
        if rows[row - 1] == 0 {
            rows.pop();
        }
        Self { rows }
    }

    /// All diagrams with n nodes, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of standard tableaux of shape lambda,
/// n! prod_{i<j} (h_i - h_j) / prod_i h_i!  with h_i = lambda_i + k - i.
pub fn frobenius_dim(shape: &YoungDiagram) -> BigUint {
    let k = shape.num_rows();
    let h: Vec<usize> = (0..k).map(|i| shape.rows[i] + k - 1 - i).collect();
    let fact = |m: usize| -> BigUint { (1..=m).fold(BigUint::one(), |a, x| a * x) };
    let mut num = fact(shape.size());
    for i in 0..k {
        for j in i + 1..k {
            num *= h[i] - h[j];
        }
    }
    let den = h.iter().fold(BigUint::one(), |a, &x| a * fact(x));
    num / den
}

/// Exponents m_1..m_n of a Jucys-Murphy eigenvalue string (a_i = q^{2 m_i}).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ContentString(pub Vec<i32>);

/// Which condition of the spectrum characterisation a string breaks, and the
/// 1-based position where it was detected.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// m_1 must be 0.
    FirstNotZero,
    /// m_j = z != 0 needs an earlier z - 1 or z + 1.
    NoNeighbourBefore { position: usize },
    /// Between two equal values z both z - 1 and z + 1 must occur.
    MissingBetween { first: usize, second: usize, missing: i32 },
}

impl Violation {
    pub fn condition(&self) -> u8 {
        match self {
            Violation::FirstNotZero => 1,
            Violation::NoNeighbourBefore { .. } => 2,
            Violation::MissingBetween { .. } => 3,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FirstNotZero => write!(f, "condition (1): the first exponent must be 0"),
            Violation::NoNeighbourBefore { position } => {
                write!(f, "condition (2): exponent at position {position} has no neighbour value before it")
            }
            Violation::MissingBetween { first, second, missing } => {
                write!(f, "condition (3): {missing} does not occur between positions {first} and {second}")
            }
        }
    }
}

impl ContentString {
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Self(Vec::new()));
        }
        inner
            .split(',')
            .map(|p| {
                p.trim().parse::<i32>().map_err(|_| Error::InvalidTableau(format!("cannot parse content string {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the three conditions in order and reports the first failure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let m = &self.0;
        if m.is_empty() {
            return Ok(());
        }
        if m[0] != 0 {
            return Err(Violation::FirstNotZero);
        }
        for j in 1..m.len() {
            let z = m[j];
            if z != 0 && !m[..j].iter().any(|&x| x == z - 1 || x == z + 1) {
                return Err(Violation::NoNeighbourBefore { position: j + 1 });
            }
        }
        for j in 1..m.len() {
            let z = m[j];
            if let Some(i) = m[..j].iter().rposition(|&x| x == z) {
                for missing in [z - 1, z + 1] {
                    if !m[i + 1..j].contains(&missing) {
                        return Err(Violation::MissingBetween { first: i + 1, second: j + 1, missing });
                    }
                }
            }
        }
        Ok(())
    }

    /// The tableau with this content string, if there is one: entry i goes
    /// into the unique addable node of content m_i.
    pub fn to_tableau(&self) -> Option<StandardTableau> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut shape = YoungDiagram::empty();
        for (i, &z) in self.0.iter().enumerate() {
            let corner = shape.addable_corners().into_iter().find(|c| c.content == z)?;
            shape = shape.add_node(corner.row).ok()?;
            if corner.row > rows.len() {
                rows.push(Vec::new());
            }
            rows[corner.row - 1].push(i + 1);
        }
        Some(StandardTableau { shape, rows })
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl fmt::Display for ContentString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!("{rows:?} is not a filling by 1..{n}")));
            }
            seen[x] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let right_ok = c + 1 >= row.len() || row[c + 1] > x;
                let below_ok = r + 1 >= rows.len() || c >= rows[r + 1].len() || rows[r + 1][c] > x;
                if !right_ok || !below_ok {
                    return Err(Error::InvalidTableau(format!("{rows:?} is not increasing")));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    /// Parses "[[1,2],[3]]".
    pub fn parse(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|_| Error::InvalidTableau(format!("cannot parse tableau {s:?}")))?;
        Self::from_rows(rows)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// (row, col) of entry i.
    pub fn position(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == i) {
                return (r + 1, c + 1);
            }
        }
        panic!("entry {i} not in tableau {self}");
    }

    pub fn content(&self, i: usize) -> i32 {
        let (r, c) = self.position(i);
        c as i32 - r as i32
    }

    pub fn content_string(&self) -> ContentString {
        ContentString((1..=self.size()).map(|i| self.content(i)).collect())
    }

    /// The tableau with i and i+1 exchanged, when that is still standard.
    pub fn swap(&self, i: usize) -> Option<Self> {
        let (r1, c1) = self.position(i);
        let (r2, c2) = self.position(i + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1 - 1][c1 - 1] = i + 1;
        rows[r2 - 1][c2 - 1] = i;
        Some(Self { shape: self.shape.clone(), rows })
    }

    /// Removes the largest entry.
    pub fn parent(&self) -> Option<Self> {
        let n = self.size();
        if n == 0 {
            return None;
        }
        let (r, _) = self.position(n);
        let mut rows = self.rows.clone();
        rows[r - 1].pop();
        if rows[r - 1].is_empty() {
            rows.pop();
        }
        Some(Self { shape: self.shape.remove_node(r), rows })
    }

    /// Adds entry n+1 at the end of row `row`.
    pub fn extend(&self, row: usize) -> Result<Self> {
        let shape = self.shape.add_node(row)?;
        let mut rows = self.rows.clone();
        if row > rows.len() {
            rows.push(Vec::new());
        }
        rows[row - 1].push(self.size() + 1);
        Ok(Self { shape, rows })
    }

    /// Shapes along the chain of subtableaux, from the empty diagram to the
    /// full shape.
    pub fn path(&self) -> Vec<YoungDiagram> {
        let mut out = vec![YoungDiagram::empty()];
        let mut shape = YoungDiagram::empty();
        for i in 1..=self.size() {
            shape = shape.add_node(self.position(i).0).expect("standard tableau");
            out.push(shape.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// All standard tableaux of a shape, descending by content string.
pub fn enumerate_standard(shape: &YoungDiagram) -> Vec<StandardTableau> {
    fn go(shape: &YoungDiagram) -> Vec<Vec<Vec<usize>>> {
        let n = shape.size();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (r, _) in shape.removable_corners() {
            for mut rows in go(&shape.remove_node(r)) {
                if r > rows.len() {
                    rows.push(Vec::new());
                }
                rows[r - 1].push(n);
                out.push(rows);
            }
        }
        out
    }
    let mut out: Vec<StandardTableau> =
        go(shape).into_iter().map(|rows| StandardTableau { shape: shape.clone(), rows }).collect();
    sort_tableaux(&mut out);
    out
}

/// All standard tableaux with n nodes: shapes in descending lexicographic
/// order, and within a shape descending by content string.
pub fn all_standard(n: usize) -> Vec<StandardTableau> {
    YoungDiagram::all(n).iter().flat_map(enumerate_standard).collect()
}

pub(crate) fn sort_tableaux(ts: &mut [StandardTableau]) {
    ts.sort_by_cached_key(|t| std::cmp::Reverse(t.content_string()));
}

/// Edge lambda -> lambda + node, coloured by the content of the node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphEdge {
    pub from: YoungDiagram,
    pub to: YoungDiagram,
    pub colour: i32,
}

/// Diagrams with at most n nodes, by level, with their inclusion edges.
#[derive(Clone, Debug)]
pub struct YoungGraph {
    pub levels: Vec<Vec<YoungDiagram>>,
    pub edges: Vec<GraphEdge>,
}

pub fn young_graph(n: usize) -> YoungGraph {
    let levels: Vec<Vec<YoungDiagram>> = (0..=n).map(YoungDiagram::all).collect();
    let mut edges = Vec::new();
    for level in &levels[..n] {
        for d in level {
            for c in d.addable_corners() {
                edges.push(GraphEdge { from: d.clone(), to: d.add_node(c.row).unwrap(), colour: c.content });
            }
        }
    }
    YoungGraph { levels, edges }
}

impl YoungGraph {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn edge_colour(&self, from: &YoungDiagram, to: &YoungDiagram) -> Option<i32> {
        self.edges.iter().find(|e| &e.from == from && &e.to == to).map(|e| e.colour)
    }

    /// Every path from the empty diagram to a diagram of the top level, as
    /// (end shape, shapes visited, colour string).
    pub fn maximal_paths(&self) -> Vec<(Vec<YoungDiagram>, ContentString)> {
        let mut out_edges: HashMap<&YoungDiagram, Vec<&GraphEdge>> = HashMap::new();
        for e in &self.edges {
            out_edges.entry(&e.from).or_default().push(e);
        }
        let mut paths = vec![(vec![YoungDiagram::empty()], Vec::new())];
        for _ in 0..self.depth() {
            let mut next = Vec::new();
            for (shapes, colours) in paths {
                let last = shapes.last().unwrap();
                for e in out_edges.get(last).map(Vec::as_slice).unwrap_or(&[]) {
                    let mut s = shapes.clone();
                    s.push(e.to.clone());
                    let mut c: Vec<i32> = colours.clone();
                    c.push(e.colour);
                    next.push((s, c));
                }
            }
            paths = next;
        }
        paths.into_iter().map(|(s, c)| (s, ContentString(c))).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph young {\n  rankdir=TB;\n");
        let name = |d: &YoungDiagram| if d.rows.is_empty() { "()".to_string() } else { d.to_string() };
        for level in &self.levels {
            for d in level {
                s.push_str(&format!("  \"{}\";\n", name(d)));
            }
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                name(&e.from),
                name(&e.to),
                colour_label(e.colour)
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> =
            self.levels.iter().map(|l| Value::Array(l.iter().map(YoungDiagram::to_json).collect())).collect();
        let edges: Vec<Value> =
            self.edges.iter().map(|e| json!({ "from": e.from.rows, "to": e.to.rows, "colour": e.colour })).collect();
        json!({ "levels": levels, "edges": edges })
    }
}

/// "1", "q^2", "q^-4", ... for an eigenvalue q^{2c}.
pub fn colour_label(c: i32) -> String {
    match c {
        0 => "1".to_string(),
        _ => format!("q^{}", 2 * c),
    }
}

/// One row of the tableau / string / path correspondence.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub tableau: StandardTableau,
    pub string: ContentString,
    pub path: Vec<YoungDiagram>,
}

/// Tableaux, spectrum strings and graph paths of level n, matched up, with
/// the checks that the three maps are mutually inverse.
#[derive(Clone, Debug)]
pub struct Bijections {
    pub rows: Vec<Correspondence>,
    pub path_count: usize,
    pub consistent: bool,
}

pub fn bijections(n: usize) -> Bijections {
    let tableaux = all_standard(n);
    let graph = young_graph(n);
    let paths = graph.maximal_paths();
    let path_by_string: BTreeMap<ContentString, Vec<YoungDiagram>> =
        paths.iter().map(|(p, s)| (s.clone(), p.clone())).collect();

    let mut consistent = path_by_string.len() == paths.len() && paths.len() == tableaux.len();
    let mut rows = Vec::new();
    for t in tableaux {
        let string = t.content_string();
        let path = t.path();
        consistent &= string.validate().is_ok();
        consistent &= string.to_tableau().as_ref() == Some(&t);
        consistent &= path_by_string.get(&string) == Some(&path);
        rows.push(Correspondence { tableau: t, string, path });
    }
    Bijections { rows, path_count: paths.len(), consistent }
}
