//! Obstacles: pairs `(S, T)` with `|S| > |T|`, `|S| ≥ 2` and `T ⊇ Λ²(S)`.
//!
//! A dHp failure is exactly an obstacle, and shrinking `T` to `Λ²(S)` never
//! breaks one, so a minimal obstacle always has `T = Λ²(S)`. When sets are
//! scanned by increasing size, the first deficient `S` has no deficient
//! proper subset and is therefore minimal.

use super::{smallest_deficient_set, subsets};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{super_neighborhood, Bigraph, Side, VertexSet};
use crate::{Budget, Meter};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstacle {
    pub s: VertexSet,
    pub t: VertexSet,
    pub minimal: bool,
}

impl Serialize for Obstacle {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Obstacle", 3)?;
        st.serialize_field("S", &self.s.to_vec())?;
        st.serialize_field("T", &self.t.to_vec())?;
        st.serialize_field("minimal", &self.minimal)?;
        st.end()
    }
}

impl Obstacle {
    /// Whether `(s, t)` satisfies the obstacle conditions in `g`.
    pub fn is_obstacle(g: &Bigraph, s: &VertexSet, t: &VertexSet) -> bool {
        if s.side() != Side::X || t.side() != Side::Y || s.len() < 2 || s.len() <= t.len() {
            return false;
        }
        if s.bits().universe() != g.nx() || t.bits().universe() != g.ny() {
            return false;
        }
        super_neighborhood(g, s.bits()).is_subset(t.bits())
    }

    /// Brute-force minimality: no obstacle `(S', T')` with `S' ⊆ S`, `T' ⊆ T`
    /// and a smaller total size.
    pub fn is_minimal(g: &Bigraph, s: &VertexSet, t: &VertexSet) -> bool {
        if !Self::is_obstacle(g, s, t) {
            return false;
        }
        let total = s.len() + t.len();
        let members = s.to_vec();
        let k = members.len();
        // For a fixed S' the cheapest admissible T' is Λ²(S'), provided it fits inside T.
        (1u64..(1 << k)).all(|mask| {
            let sub = BitSet::from_indices(g.nx(), (0..k).filter(|b| mask >> b & 1 == 1).map(|b| members[b]));
            let c = sub.count();
            if c < 2 {
                return true;
            }
            let lam = super_neighborhood(g, &sub);
            let fits = lam.is_subset(t.bits()) && c > lam.count();
            !(fits && c + lam.count() < total)
        })
    }
}

/// A minimal obstacle with `|S| ≤ s_max`, smallest `|S|` first and then
/// lexicographically least, or `None` if there is none in range.
pub fn find_minimal_obstacle(g: &Bigraph, s_max: usize, budget: &Budget) -> Result<Option<Obstacle>> {
    if g.nx() < 2 {
        return Err(Error::Domain(format!("obstacle search requires |X| >= 2, got {}", g.nx())));
    }
    if s_max < 2 {
        return Err(Error::Domain(format!("s_max must be at least 2, got {s_max}")));
    }
    let mut meter = Meter::subsets(budget);
    let first = if s_max >= g.nx() {
        smallest_deficient_set(g, 2, &mut meter)?
    } else {
        subsets::find_subset(g, 2, s_max, &mut meter, |s, t| {
            Ok((t.count() < s.len()).then(|| (s.to_vec(), t.clone())))
        })?
    };
    Ok(first.map(|(s, t)| Obstacle {
        s: VertexSet::xs(g, s),
        t: VertexSet::from_bitset(Side::Y, t),
        minimal: true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_has_none() {
        for n in 2..6 {
            assert!(find_minimal_obstacle(&Bigraph::complete(n, n), n, &Budget::default()).unwrap().is_none());
        }
    }

    #[test]
    fn single_common_neighbour() {
        let g = Bigraph::from_edges(2, 2, [(0, 0), (1, 0), (0, 1)]).unwrap();
        let o = find_minimal_obstacle(&g, 2, &Budget::default()).unwrap().unwrap();
        assert_eq!((o.s.to_vec(), o.t.to_vec(), o.minimal), (vec![0, 1], vec![0], true));
        assert!(Obstacle::is_minimal(&g, &o.s, &o.t));
        assert_eq!(serde_json::to_string(&o).unwrap(), r#"{"S":[0,1],"T":[0],"minimal":true}"#);
    }

    #[test]
    fn empty_graph() {
        let g = Bigraph::empty(3, 3);
        let o = find_minimal_obstacle(&g, 3, &Budget::default()).unwrap().unwrap();
        assert_eq!(o.s.to_vec(), vec![0, 1]);
        assert!(o.t.is_empty());
    }

    #[test]
    fn enlarged_t_is_not_minimal() {
        let g = Bigraph::from_edges(2, 2, [(0, 0), (1, 0)]).unwrap();
        let s = VertexSet::xs(&g, [0, 1]);
        assert!(!Obstacle::is_obstacle(&g, &s, &VertexSet::ys(&g, [])));
        assert!(Obstacle::is_minimal(&g, &s, &VertexSet::ys(&g, [0])));
        assert!(!Obstacle::is_obstacle(&g, &s, &VertexSet::ys(&g, [0, 1])));

        let h = Bigraph::from_edges(3, 2, [(0, 0)]).unwrap();
        let s = VertexSet::xs(&h, [0, 1, 2]);
        let t = VertexSet::ys(&h, [0]);
        assert!(Obstacle::is_obstacle(&h, &s, &t));
        assert!(!Obstacle::is_minimal(&h, &s, &t));
    }

    #[test]
    fn domain_errors() {
        assert!(find_minimal_obstacle(&Bigraph::complete(1, 1), 2, &Budget::default()).is_err());
        assert!(find_minimal_obstacle(&Bigraph::complete(3, 3), 1, &Budget::default()).is_err());
    }
}
