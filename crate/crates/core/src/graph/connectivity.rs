use super::Bigraph;
use crate::bitset::BitSet;

/// True iff the underlying graph on `nx + ny` vertices is 2-connected:
/// connected, at least 3 vertices, and free of cut vertices.
pub fn is_two_connected(g: &Bigraph) -> bool {
    is_two_connected_within(g, &BitSet::full(g.nx()), &BitSet::full(g.ny()))
}

/// 2-connectivity of the subgraph induced by `sx ∪ sy`, without materialising it.
pub(crate) fn is_two_connected_within(g: &Bigraph, sx: &BitSet, sy: &BitSet) -> bool {
    let xs = sx.to_vec();
    let ys = sy.to_vec();
    let n = xs.len() + ys.len();
    if n < 3 {
        return false;
    }
    // Local numbering: X members first, then Y members.
    let mut local_y = vec![usize::MAX; g.ny()];
    for (k, &j) in ys.iter().enumerate() {
        local_y[j] = xs.len() + k;
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &i) in xs.iter().enumerate() {
        for j in g.adj_x(i).iter().filter(|&j| sy.contains(j)) {
            let b = local_y[j];
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
    }
    !has_cut_vertex_or_disconnected(&nbrs)
}

/// Iterative Tarjan low-link scan rooted at vertex 0.
fn has_cut_vertex_or_disconnected(nbrs: &[Vec<usize>]) -> bool {
    const UNSEEN: usize = usize::MAX;
    let n = nbrs.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut next_edge = vec![0usize; n];
    let mut time = 0;
    let mut root_children = 0;

    disc[0] = time;
    low[0] = time;
    time += 1;
    let mut stack = vec![0usize];
    while let Some(&u) = stack.last() {
        if next_edge[u] < nbrs[u].len() {
            let v = nbrs[u][next_edge[u]];
            next_edge[u] += 1;
            if disc[v] == UNSEEN {
                parent[v] = u;
                disc[v] = time;
                low[v] = time;
                time += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push(v);
            } else if v != parent[u] {
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            let p = parent[u];
            if p != UNSEEN {
                low[p] = low[p].min(low[u]);
                if p != 0 && low[u] >= disc[p] {
                    return true;
                }
            }
        }
    }
    time < n || root_children > 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_is_two_connected() {
        assert!(is_two_connected(&Bigraph::complete(2, 2)));
    }

    #[test]
    fn path_has_cut_vertex() {
        let g = Bigraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap();
        assert!(!is_two_connected(&g));
    }

    #[test]
    fn cube_is_two_connected() {
        let g = Bigraph::from_edges(4, 4, (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))).unwrap();
        assert!(is_two_connected(&g));
    }

    #[test]
    fn small_and_disconnected_cases() {
        assert!(!is_two_connected(&Bigraph::complete(1, 1)));
        assert!(!is_two_connected(&Bigraph::empty(2, 2)));
        // Two disjoint 4-cycles.
        let g = Bigraph::from_edges(4, 4, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
        assert!(!is_two_connected(&g));
        // Two 4-cycles sharing x0: x0 is a cut vertex.
        let g = Bigraph::from_edges(3, 4, [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (0, 3), (2, 2), (2, 3)]).unwrap();
        assert!(!is_two_connected(&g));
        // An isolated Y vertex disconnects.
        assert!(!is_two_connected(&Bigraph::from_edges(2, 3, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()));
    }

    #[test]
    fn restricted_view_matches_induced_copy() {
        let g = Bigraph::complete(3, 3);
        let sx = BitSet::from_indices(3, [0, 2]);
        let sy = BitSet::from_indices(3, [1]);
        assert!(!is_two_connected_within(&g, &sx, &sy));
        let sy = BitSet::from_indices(3, [0, 1]);
        assert!(is_two_connected_within(&g, &sx, &sy));
    }
}
