//! Brute-force oracles and seeded generators shared by the integration tests.
//! The oracles work on plain adjacency matrices and never call the library's
//! search code.
#![allow(dead_code)]

use dhp_core::Bigraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn matrix(g: &Bigraph) -> Vec<Vec<bool>> {
    (0..g.nx()).map(|x| (0..g.ny()).map(|y| g.has_edge(x, y)).collect()).collect()
}

/// `|Λ²(S)|` for the X-subset `mask`, by counting neighbours per y.
pub fn lambda2_count(m: &[Vec<bool>], ny: usize, mask: u64) -> usize {
    (0..ny)
        .filter(|&y| (0..m.len()).filter(|&x| mask >> x & 1 == 1 && m[x][y]).count() >= 2)
        .count()
}

pub fn dhp_oracle(g: &Bigraph) -> bool {
    let m = matrix(g);
    let n = g.nx();
    (0u64..1 << n)
        .filter(|s| s.count_ones() >= 2)
        .all(|s| lambda2_count(&m, g.ny(), s) >= s.count_ones() as usize)
}

/// Size of a maximum matching of `left` (lists of allowed right vertices).
pub fn matching_oracle(left: &[Vec<usize>], n_right: usize) -> usize {
    fn aug(u: usize, left: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &left[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| aug(w, left, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; n_right];
    (0..left.len())
        .filter(|&u| aug(u, left, &mut vec![false; n_right], &mut owner))
        .count()
}

/// Some cycle passes through every X-vertex (Y-vertices unrestricted):
/// try every cyclic order of X, then match consecutive pairs to distinct
/// common neighbours.
pub fn covering_cycle_oracle(g: &Bigraph) -> bool {
    let m = matrix(g);
    let n = g.nx();
    if n < 2 {
        return false;
    }
    let common = |a: usize, b: usize| -> Vec<usize> { (0..g.ny()).filter(|&y| m[a][y] && m[b][y]).collect() };
    if n == 2 {
        return common(0, 1).len() >= 2;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    permutations(&mut rest, 0, &mut |perm| {
        if perm[0] > perm[perm.len() - 1] {
            return false;
        }
        let mut order = vec![0];
        order.extend_from_slice(perm);
        let pairs: Vec<Vec<usize>> = (0..n).map(|i| common(order[i], order[(i + 1) % n])).collect();
        matching_oracle(&pairs, g.ny()) == n
    })
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return f(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        if permutations(v, k + 1, f) {
            v.swap(k, i);
            return true;
        }
        v.swap(k, i);
    }
    false
}

pub fn random_bigraph(r: &mut impl Rng, nx: usize, ny: usize, p: f64) -> Bigraph {
    let edges: Vec<(usize, usize)> = (0..nx)
        .flat_map(|x| (0..ny).map(move |y| (x, y)))
        .filter(|_| r.random_bool(p))
        .collect();
    Bigraph::from_edges(nx, ny, edges).unwrap()
}

/// Random graph with every y of degree 2, `n-2`, `n-1` or `n`.
pub fn random_degree_split(r: &mut impl Rng, nx: usize) -> Bigraph {
    let ny = r.random_range(nx..=2 * nx + 2);
    let choices = [2, nx - 2, nx - 1, nx];
    let mut edges = Vec::new();
    let mut xs: Vec<usize> = (0..nx).collect();
    for y in 0..ny {
        let d = choices[r.random_range(0..4)];
        xs.shuffle(r);
        edges.extend(xs[..d].iter().map(|&x| (x, y)));
    }
    Bigraph::from_edges(nx, ny, edges).unwrap()
}

/// Random graph where each y misses at most `k` X-vertices. With `thin`,
/// x0 keeps only two neighbours, so it lands in the low-degree part when
/// `k >= 2`.
pub fn random_high_degree(r: &mut impl Rng, nx: usize, k: usize, thin: bool) -> Bigraph {
    let ny = r.random_range(nx..=nx + 4);
    let keep: Vec<usize> = (0..2).map(|_| r.random_range(0..ny)).collect();
    let mut edges = Vec::new();
    for y in 0..ny {
        let drop_x0 = thin && k >= 1 && !keep.contains(&y);
        let mut xs: Vec<usize> = (0..nx).filter(|&x| !(drop_x0 && x == 0)).collect();
        let miss = r.random_range(0..=k - usize::from(drop_x0));
        xs.shuffle(r);
        edges.extend(xs[miss..].iter().map(|&x| (x, y)));
    }
    Bigraph::from_edges(nx, ny, edges).unwrap()
}
