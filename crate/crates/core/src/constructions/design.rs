//! Symmetric designs, difference sets and biplanes.
//!
//! Points are X, blocks are Y, and point `x` is adjacent to block `y` when
//! `x ∈ y`. Text format:
//!
//! ```text
//! design <v> <k> <lambda>
//! <k point indices>      # one line per block, v lines
//! ```

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{bipartite_complement, Bigraph, Side};
use serde::Serialize;
use std::fmt;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignSpec {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl DesignSpec {
    /// Validates the symmetric-design axioms.
    pub fn new(v: usize, k: usize, lambda: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.len() != v {
            return Err(Error::Design(format!("expected {v} blocks, found {}", blocks.len())));
        }
        for (b, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            block.dedup();
            if block.len() != k {
                return Err(Error::Design(format!("block {b} has {} distinct points, expected {k}", block.len())));
            }
            if let Some(&p) = block.iter().find(|&&p| p >= v) {
                return Err(Error::Design(format!("block {b} contains point {p} outside 0..{v}")));
            }
        }
        let sets: Vec<BitSet> = blocks.iter().map(|b| BitSet::from_indices(v, b.iter().copied())).collect();
        for a in 0..v {
            for b in a + 1..v {
                let meet = sets[a].intersection_count(&sets[b]);
                if meet != lambda {
                    return Err(Error::Design(format!("blocks {a} and {b} meet in {meet} points, expected {lambda}")));
                }
            }
        }
        for p in 0..v {
            for q in p + 1..v {
                let c = sets.iter().filter(|s| s.contains(p) && s.contains(q)).count();
                if c != lambda {
                    return Err(Error::Design(format!("points {p} and {q} lie on {c} common blocks, expected {lambda}")));
                }
            }
        }
        Ok(Self { v, k, lambda, blocks })
    }

    /// `k - λ`.
    pub fn order(&self) -> usize {
        self.k.saturating_sub(self.lambda)
    }
}

/// Incidence bigraph: point `x` adjacent to block `y` iff `x ∈ y`.
pub fn design_to_bigraph(spec: &DesignSpec) -> Bigraph {
    let edges = spec
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(y, b)| b.iter().map(move |&x| (x, y)));
    Bigraph::from_edges(spec.v, spec.blocks.len(), edges).expect("validated design")
}

/// Translates `{d + t mod v}` for `t = 0..v`, after checking that every
/// nonzero residue arises exactly `lambda` times as a difference.
pub fn develop_difference_set(v: usize, d_set: &[usize], lambda: usize) -> Result<DesignSpec> {
    if v < 2 {
        return Err(Error::Design(format!("modulus must be at least 2, got {v}")));
    }
    let mut d: Vec<usize> = d_set.to_vec();
    d.sort_unstable();
    d.dedup();
    if d.len() != d_set.len() {
        return Err(Error::Design("difference set has repeated elements".into()));
    }
    if let Some(&r) = d.iter().find(|&&r| r >= v) {
        return Err(Error::Design(format!("element {r} is not a residue mod {v}")));
    }
    let k = d.len();
    if k * k.saturating_sub(1) != lambda * (v - 1) {
        return Err(Error::Design(format!(
            "counting identity k(k-1) = λ(v-1) fails: {k}·{} ≠ {lambda}·{}",
            k.saturating_sub(1),
            v - 1
        )));
    }
    let mut count = vec![0usize; v];
    for &a in &d {
        for &b in &d {
            if a != b {
                count[(a + v - b) % v] += 1;
            }
        }
    }
    if let Some(r) = (1..v).find(|&r| count[r] != lambda) {
        return Err(Error::Design(format!(
            "difference {r} arises {} times mod {v}, expected {lambda}",
            count[r]
        )));
    }
    let blocks = (0..v).map(|t| d.iter().map(|&x| (x + t) % v).collect()).collect();
    DesignSpec::new(v, k, lambda, blocks)
}

/// A cyclic biplane (`λ = 2`) from a difference set.
pub fn biplane_from_difference_set(v: usize, d_set: &[usize]) -> Result<DesignSpec> {
    develop_difference_set(v, d_set, 2)
}

/// Biplanes of orders 0 to 3, as designs.
pub fn builtin_design(order: usize) -> Result<DesignSpec> {
    match order {
        0 => biplane_from_difference_set(2, &[0, 1]),
        1 => biplane_from_difference_set(4, &[1, 2, 3]),
        2 => {
            let fano = develop_difference_set(7, &[1, 2, 4], 1)?;
            let g = bipartite_complement(&design_to_bigraph(&fano));
            verify_design(&g).map_err(|e| Error::Design(e.to_string()))
        }
        3 => biplane_from_difference_set(11, &[1, 3, 4, 5, 9]),
        _ => Err(Error::Domain(format!(
            "no built-in biplane of order {order}; supply one with import_design"
        ))),
    }
}

/// Incidence graph of the built-in biplane of the given order.
pub fn builtin_biplane(order: usize) -> Result<Bigraph> {
    builtin_design(order).map(|d| design_to_bigraph(&d))
}

/// The first biplane axiom a bigraph violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "axiom")]
pub enum DesignViolation {
    /// Sides differ in size or are too small.
    NotSquare { nx: usize, ny: usize },
    NotRegular { side: Side, vertex: usize, degree: usize, expected: usize },
    /// Two X-vertices with other than two common neighbours.
    PointPair { a: usize, b: usize, common: usize },
    /// Two Y-vertices with other than two common neighbours.
    BlockPair { a: usize, b: usize, common: usize },
    /// `n ≠ C(d, 2) + 1`.
    WrongSize { n: usize, d: usize },
}

impl fmt::Display for DesignViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSquare { nx, ny } => write!(f, "sides must be equal and at least 2, got {nx} and {ny}"),
            Self::NotRegular { side, vertex, degree, expected } => {
                write!(f, "{side}{vertex} has degree {degree}, expected {expected}")
            }
            Self::PointPair { a, b, common } => write!(f, "x{a} and x{b} have {common} common neighbours, expected 2"),
            Self::BlockPair { a, b, common } => write!(f, "y{a} and y{b} have {common} common neighbours, expected 2"),
            Self::WrongSize { n, d } => write!(f, "n = {n} but C({d}, 2) + 1 = {}", *d * (d.max(&1) - 1) / 2 + 1),
        }
    }
}

/// Certifies that `g` is the incidence graph of a biplane.
pub fn verify_design(g: &Bigraph) -> std::result::Result<DesignSpec, DesignViolation> {
    let (nx, ny) = (g.nx(), g.ny());
    if nx != ny || nx < 2 {
        return Err(DesignViolation::NotSquare { nx, ny });
    }
    let d = g.deg_x(0);
    for side in [Side::X, Side::Y] {
        for v in 0..nx {
            let degree = g.adj(side, v).count();
            if degree != d {
                return Err(DesignViolation::NotRegular { side, vertex: v, degree, expected: d });
            }
        }
    }
    for a in 0..nx {
        for b in a + 1..nx {
            let common = g.adj_x(a).intersection_count(g.adj_x(b));
            if common != 2 {
                return Err(DesignViolation::PointPair { a, b, common });
            }
        }
    }
    for a in 0..ny {
        for b in a + 1..ny {
            let common = g.adj_y(a).intersection_count(g.adj_y(b));
            if common != 2 {
                return Err(DesignViolation::BlockPair { a, b, common });
            }
        }
    }
    if nx != d * (d - 1) / 2 + 1 {
        return Err(DesignViolation::WrongSize { n: nx, d });
    }
    let blocks = (0..ny).map(|y| g.adj_y(y).to_vec()).collect();
    Ok(DesignSpec { v: nx, k: d, lambda: 2, blocks })
}

pub fn serialize_design(spec: &DesignSpec) -> String {
    let mut out = String::new();
    writeln!(out, "design {} {} {}", spec.v, spec.k, spec.lambda).unwrap();
    for b in &spec.blocks {
        let line: Vec<String> = b.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Parses and validates the design text format.
pub fn import_design(text: &str) -> Result<DesignSpec> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse = |line: usize, tok: &str| {
        tok.parse::<usize>()
            .map_err(|_| Error::Design(format!("line {line}: expected a non-negative integer, found {tok:?}")))
    };
    let (hl, header) = lines.next().ok_or_else(|| Error::Design("missing `design <v> <k> <lambda>` header".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "design" {
        return Err(Error::Design(format!("line {hl}: expected `design <v> <k> <lambda>`, found {header:?}")));
    }
    let (v, k, lambda) = (parse(hl, toks[1])?, parse(hl, toks[2])?, parse(hl, toks[3])?);
    let mut blocks = Vec::with_capacity(v);
    for (line, l) in lines {
        let b = l.split_whitespace().map(|t| parse(line, t)).collect::<Result<Vec<_>>>()?;
        if b.len() != k {
            return Err(Error::Design(format!("line {line}: block has {} points, expected {k}", b.len())));
        }
        blocks.push(b);
    }
    DesignSpec::new(v, k, lambda, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartite_complement;

    #[test]
    fn builtins_are_biplanes() {
        for order in 0..=3 {
            let g = builtin_biplane(order).unwrap();
            let d = order + 2;
            assert_eq!(g.is_regular(), Some(d));
            assert_eq!(g.nx(), d * (d - 1) / 2 + 1);
            let spec = verify_design(&g).unwrap();
            assert_eq!((spec.k, spec.lambda, spec.order()), (d, 2, order));
        }
        assert!(matches!(builtin_biplane(4), Err(Error::Domain(_))));
    }

    #[test]
    fn order_one_is_the_cube() {
        let cube = bipartite_complement(&Bigraph::from_edges(4, 4, (0..4).map(|i| (i, i))).unwrap());
        assert_eq!(builtin_biplane(1).unwrap(), cube);
    }

    #[test]
    fn difference_set_checks() {
        let s = biplane_from_difference_set(11, &[1, 3, 4, 5, 9]).unwrap();
        assert_eq!((s.v, s.k, s.lambda), (11, 5, 2));
        let e = biplane_from_difference_set(11, &[0, 1, 2, 3, 4]).unwrap_err();
        assert!(e.to_string().contains("difference 1 arises 4 times"));
        assert!(biplane_from_difference_set(11, &[0, 1, 2]).is_err());
        // {0,1,2,4} mod 7 develops a (7,4,2) design, the Fano complement.
        let alt = biplane_from_difference_set(7, &[0, 1, 2, 4]).unwrap();
        assert_eq!((alt.v, alt.k), (7, 4));
    }

    #[test]
    fn verify_rejects() {
        use crate::constructions::pair_gadget;
        assert!(matches!(verify_design(&pair_gadget(3).unwrap()), Err(DesignViolation::NotSquare { .. })));
        assert_eq!(
            verify_design(&Bigraph::complete(3, 3)),
            Err(DesignViolation::PointPair { a: 0, b: 1, common: 3 })
        );
    }

    #[test]
    fn text_round_trip() {
        let spec = builtin_design(3).unwrap();
        let text = serialize_design(&spec);
        assert_eq!(import_design(&text).unwrap(), spec);
        assert!(text.starts_with("design 11 5 2\n"));
    }

    #[test]
    fn repeated_block_is_rejected() {
        let text = "design 4 3 2\n1 2 3\n1 2 3\n0 1 3\n0 1 2\n";
        let e = import_design(text).unwrap_err();
        assert!(e.to_string().contains("blocks 0 and 1 meet in 3 points"));
    }
}
