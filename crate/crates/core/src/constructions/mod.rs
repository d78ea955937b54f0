//! Generators for extremal and structured bigraphs.

mod design;
mod product;

pub use design::{
    biplane_from_difference_set, builtin_biplane, builtin_design, design_to_bigraph, develop_difference_set,
    import_design, serialize_design, verify_design, DesignSpec, DesignViolation,
};
pub use product::{bipartite_product, bipartite_product_with_limit, iterated_product, PowerReport, ProductLayout, PRODUCT_SIDE_LIMIT};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, PathSystem, PathWitness, Vertex};

/// For every pair `x_i, x_j` (`i < j`, lexicographic pair index `p`), two
/// private Y-vertices `2p` and `2p + 1` adjacent to exactly `x_i` and `x_j`.
pub fn pair_gadget(n: usize) -> Result<Bigraph> {
    if n < 2 {
        return Err(Error::Domain(format!("pair gadget needs n >= 2, got {n}")));
    }
    let mut edges = Vec::with_capacity(2 * n * (n - 1));
    let mut p = 0;
    for i in 0..n {
        for j in i + 1..n {
            for y in [2 * p, 2 * p + 1] {
                edges.push((i, y));
                edges.push((j, y));
            }
            p += 1;
        }
    }
    Bigraph::from_edges(n, n * (n - 1), edges)
}

/// Grows both sides to `target_n - nx` extra vertices each; the new
/// X-vertices are adjacent to every Y-vertex, old and new.
pub fn pad_with_universal(g: &Bigraph, target_n: usize) -> Result<Bigraph> {
    if target_n < g.nx() {
        return Err(Error::Domain(format!("cannot pad {} X-vertices down to {target_n}", g.nx())));
    }
    let t = target_n - g.nx();
    let ny = g.ny() + t;
    let mut rows: Vec<BitSet> = (0..g.nx())
        .map(|x| BitSet::from_indices(ny, g.adj_x(x).iter()))
        .collect();
    rows.extend((0..t).map(|_| BitSet::full(ny)));
    Ok(Bigraph::from_x_rows(ny, rows))
}

/// Deletes the padding X-vertices (index `≥ original_nx`) from a cycle of a
/// padded graph, leaving disjoint Y–Y paths; pieces without any X-vertex
/// are dropped.
pub fn strip_padding(padded: &Bigraph, c: &CycleWitness, original_nx: usize) -> Result<PathSystem> {
    c.validate(padded)?;
    let seq = c.sequence();
    let Some(cut) = seq.iter().position(|v| matches!(v, Vertex::X(i) if *i >= original_nx)) else {
        return Err(Error::InvalidInput("cycle contains no padding vertex".into()));
    };
    let len = seq.len();
    let mut paths = Vec::new();
    let mut piece: Vec<Vertex> = Vec::new();
    for k in 1..=len {
        let v = seq[(cut + k) % len];
        if matches!(v, Vertex::X(i) if i >= original_nx) {
            if piece.iter().any(|u| matches!(u, Vertex::X(_))) {
                paths.push(PathWitness::new(std::mem::take(&mut piece))?);
            }
            piece.clear();
        } else {
            piece.push(v);
        }
    }
    Ok(PathSystem::new(paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::check_dhp;
    use crate::graph::PathKind;
    use crate::Budget;

    #[test]
    fn pair_gadget_shape() {
        let g = pair_gadget(2).unwrap();
        assert_eq!(g, Bigraph::complete(2, 2));
        let g = pair_gadget(3).unwrap();
        assert_eq!(g.ny(), 6);
        assert!((0..3).all(|x| g.deg_x(x) == 4));
        assert!((0..6).all(|y| g.deg_y(y) == 2));
        assert!(check_dhp(&pair_gadget(5).unwrap(), &Budget::default()).unwrap().holds);
        assert!(pair_gadget(1).is_err());
    }

    #[test]
    fn padding() {
        let k = Bigraph::complete(2, 2);
        assert_eq!(pad_with_universal(&k, 2).unwrap(), k);
        let g = pad_with_universal(&pair_gadget(3).unwrap(), 8).unwrap();
        assert_eq!((g.nx(), g.ny()), (8, 11));
        assert!((3..8).all(|x| g.deg_x(x) == 11));
        assert!(check_dhp(&g, &Budget::default()).unwrap().holds);
        assert!(pad_with_universal(&k, 1).is_err());
    }

    #[test]
    fn strip_gives_yy_paths() {
        let g = pad_with_universal(&Bigraph::complete(2, 3), 3).unwrap();
        // x0 y0 x1 y1 x2 y2, with x2 the padding vertex
        let c = CycleWitness::new(vec![0, 1, 2], vec![0, 1, 2]).unwrap();
        let ps = strip_padding(&g, &c, 2).unwrap();
        assert_eq!(ps.paths.len(), 1);
        assert_eq!(ps.paths[0].kind(), PathKind::YY);
        ps.validate(&g, false, Some(&BitSet::from_indices(3, [0, 1]))).unwrap();
    }
}
