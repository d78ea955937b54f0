//! Covering cycles when every y has degree at least `n - k`.
//!
//! Split X into `X_s = {x : deg(x) ≤ k}` and `X_l`. Cover `X_s` by disjoint
//! nontrivial Y–Y paths, join consecutive paths through distinct
//! `X_l`-vertices in the completion `H` (where `X_l × Y` is complete), and
//! pull the resulting `H`-cycle back into `G` one virtual edge at a time.

use super::lemmas::absorb_virtual_edge;
use super::matching::SlotMatcher;
use super::require_dhp;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, PathSystem, PathWitness, Vertex};
use crate::{Budget, Meter};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "stage")]
pub enum HighDegreeStage {
    /// No disjoint nontrivial Y–Y paths cover exactly `X_s` with at most `|X_l|` paths.
    PathSystem,
    /// Too few spare Y-vertices to thread the remaining `X_l`-vertices.
    Join,
    /// The virtual edge `x–y` could not be absorbed.
    Absorb { x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighDegreeReport {
    pub cycle: Option<CycleWitness>,
    pub x_small: Vec<usize>,
    pub x_large: Vec<usize>,
    pub paths: Option<PathSystem>,
    /// Virtual edges of the completion that had to be absorbed.
    pub absorbed: usize,
    pub failed_stage: Option<HighDegreeStage>,
}

struct PathSearch<'a> {
    g: &'a Bigraph,
    members: Vec<usize>,
    max_paths: usize,
    used: Vec<bool>,
    left: usize,
    /// Closed paths, then the open one (always last when a path is open).
    paths: Vec<Vec<usize>>,
    matcher: SlotMatcher,
    meter: &'a mut Meter,
}

impl PathSearch<'_> {
    fn open(&mut self) -> Result<bool> {
        let a = (0..self.members.len()).find(|&i| !self.used[i]).expect("someone left");
        if self.paths.len() == self.max_paths || !self.matcher.try_push(self.g.adj_x(self.members[a]).clone()) {
            return Ok(false);
        }
        self.paths.push(vec![a]);
        self.place(a);
        let ok = self.extend()?;
        if !ok {
            self.unplace(a);
            self.paths.pop();
            self.matcher.pop();
        }
        Ok(ok)
    }

    fn place(&mut self, v: usize) {
        self.used[v] = true;
        self.left -= 1;
    }

    fn unplace(&mut self, v: usize) {
        self.used[v] = false;
        self.left += 1;
    }

    fn extend(&mut self) -> Result<bool> {
        self.meter.tick()?;
        let end = *self.paths.last().unwrap().last().unwrap();
        let ge = self.g.adj_x(self.members[end]);
        for b in 0..self.members.len() {
            if self.used[b] {
                continue;
            }
            let slot = ge.intersection(self.g.adj_x(self.members[b]));
            if !self.matcher.try_push(slot) {
                continue;
            }
            self.paths.last_mut().unwrap().push(b);
            self.place(b);
            if self.extend()? {
                return Ok(true);
            }
            self.unplace(b);
            self.paths.last_mut().unwrap().pop();
            self.matcher.pop();
        }
        // Close this path with a second endpoint.
        if !self.matcher.try_push(ge.clone()) {
            return Ok(false);
        }
        if self.left == 0 || self.open()? {
            return Ok(true);
        }
        self.matcher.pop();
        Ok(false)
    }

    /// Paths on global indices, Y-vertices taken from the matcher in push order.
    fn witnesses(&self) -> Result<Vec<PathWitness>> {
        let ys = self.matcher.assignment();
        let mut k = 0;
        let mut out = Vec::with_capacity(self.paths.len());
        for p in &self.paths {
            let mut seq = vec![Vertex::Y(ys[k])];
            k += 1;
            for &v in p {
                seq.push(Vertex::X(self.members[v]));
                seq.push(Vertex::Y(ys[k]));
                k += 1;
            }
            out.push(PathWitness::new(seq)?);
        }
        Ok(out)
    }
}

/// Disjoint nontrivial Y–Y paths whose X-vertices are exactly `members`,
/// at most `max_paths` of them. Extending the open path is tried before
/// closing it.
fn cover_by_yy_paths(g: &Bigraph, members: &[usize], max_paths: usize, meter: &mut Meter) -> Result<Option<Vec<PathWitness>>> {
    if members.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let mut s = PathSearch {
        g,
        members: members.to_vec(),
        max_paths,
        used: vec![false; members.len()],
        left: members.len(),
        paths: Vec::new(),
        matcher: SlotMatcher::new(g.ny()),
        meter,
    };
    if s.open()? {
        s.witnesses().map(Some)
    } else {
        Ok(None)
    }
}

fn check_hypotheses(g: &Bigraph, k: usize, budget: &Budget) -> Result<()> {
    let n = g.nx();
    let need = (2 * k + 1).max(k * (k + 1));
    if n <= need {
        return Err(Error::Domain(format!("hypothesis n > max(2k+1, k(k+1)) = {need} fails: n = {n}")));
    }
    if let Some(y) = (0..g.ny()).find(|&y| g.deg_y(y) + k < n) {
        return Err(Error::Domain(format!(
            "hypothesis deg(y) >= n - k fails at y{y}: deg = {}, n - k = {}",
            g.deg_y(y),
            n - k
        )));
    }
    require_dhp(g, budget)
}

/// A cycle covering X, built by the split / join / absorb pipeline.
pub fn solve_high_degree(g: &Bigraph, k: usize, budget: &Budget) -> Result<HighDegreeReport> {
    check_hypotheses(g, k, budget)?;
    let x_small: Vec<usize> = (0..g.nx()).filter(|&x| g.deg_x(x) <= k).collect();
    let x_large: Vec<usize> = (0..g.nx()).filter(|&x| g.deg_x(x) > k).collect();
    let mut report = HighDegreeReport {
        cycle: None,
        x_small: x_small.clone(),
        x_large: x_large.clone(),
        paths: None,
        absorbed: 0,
        failed_stage: None,
    };
    let mut meter = Meter::nodes(budget);
    let Some(paths) = cover_by_yy_paths(g, &x_small, x_large.len(), &mut meter)? else {
        report.failed_stage = Some(HighDegreeStage::PathSystem);
        return Ok(report);
    };
    report.paths = Some(PathSystem::new(paths.clone()));

    let Some(mut cycle) = join(g, &paths, &x_large)? else {
        report.failed_stage = Some(HighDegreeStage::Join);
        return Ok(report);
    };
    loop {
        let virtual_edges: Vec<(usize, usize)> = cycle.edges().filter(|&(x, y)| !g.has_edge(x, y)).collect();
        let Some(&(x, y)) = virtual_edges.iter().min() else {
            break;
        };
        let mut rest = g.clone();
        for &(a, b) in virtual_edges.iter().filter(|&&e| e != (x, y)) {
            rest = rest.with_edge(a, b)?;
        }
        match absorb_virtual_edge(&rest, x, y, &cycle)?.cycle {
            Some(c) => {
                cycle = c;
                report.absorbed += 1;
            }
            None => {
                report.failed_stage = Some(HighDegreeStage::Absorb { x, y });
                return Ok(report);
            }
        }
    }
    cycle.validate_cover(g, &BitSet::full(g.nx()), true)?;
    report.cycle = Some(cycle);
    Ok(report)
}

/// `P_1 x_1 P_2 x_2 … P_r x_r`, then the leftover `X_l`-vertices threaded
/// through unused Y-vertices, as a cycle of the completion.
fn join(g: &Bigraph, paths: &[PathWitness], x_large: &[usize]) -> Result<Option<CycleWitness>> {
    let r = paths.len();
    let mut used_y = BitSet::new(g.ny());
    for p in paths {
        p.y_vertices().for_each(|y| {
            used_y.insert(y);
        });
    }
    let spare_set = used_y.complement();
    let mut spare = spare_set.iter();
    let mut seq: Vec<Vertex> = Vec::new();
    for (p, &x) in paths.iter().zip(x_large) {
        seq.extend_from_slice(p.vertices());
        seq.push(Vertex::X(x));
    }
    for &x in &x_large[r..] {
        let Some(y) = spare.next() else {
            return Ok(None);
        };
        seq.push(Vertex::Y(y));
        seq.push(Vertex::X(x));
    }
    if seq.len() < 4 {
        return Ok(None);
    }
    seq.rotate_left(1);
    CycleWitness::from_sequence(&seq).map(Some)
}
