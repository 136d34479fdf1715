use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::instances::{Coloring, Graph};
use crate::oracles::{exact_mis, is_independent, Limits};
use crate::weight::{w_int, w_ratio, Weight};
use crate::{Error, Result};

use super::{mis_merge, mis_reduce};

/// Vertex maps of the simple coloring reduction's parts (new -> old).
#[derive(Debug, Clone)]
pub struct SimpleContext {
    pub maps: Vec<Vec<usize>>,
}

/// Splits the vertices by index into `rate` balanced parts and emits the
/// induced subgraphs.
pub fn coloring_simple_reduce(g: &Graph, rate: usize) -> Result<(Vec<Graph>, SimpleContext)> {
    if rate < 2 {
        return Err(Error::InvalidParameter(
            "simple coloring reduction needs an integer rate > 1",
        ));
    }
    let n = g.n();
    let per = n.div_ceil(rate).max(1);
    let mut graphs = Vec::with_capacity(rate);
    let mut maps = Vec::with_capacity(rate);
    for i in 0..rate {
        let lo = (i * per).min(n);
        let hi = ((i + 1) * per).min(n);
        let verts: Vec<usize> = (lo..hi).collect();
        let (sub, map) = g.induced(&verts);
        graphs.push(sub);
        maps.push(map);
    }
    Ok((graphs, SimpleContext { maps }))
}

/// Colors part `i` with its sub-coloring offset by the total color count of
/// earlier parts; cross-part edges land in disjoint color ranges, so the
/// merged coloring is proper with at most `alpha * rate * chi(G)` colors.
pub fn coloring_simple_merge(
    g: &Graph,
    ctx: &SimpleContext,
    graphs: &[Graph],
    subs: &[Option<Coloring>],
) -> Result<Coloring> {
    assert_eq!(subs.len(), ctx.maps.len());
    let mut colors = vec![0usize; g.n()];
    let mut offset = 0usize;
    for ((sub, map), graph) in subs.iter().zip(&ctx.maps).zip(graphs) {
        let sub = sub
            .as_ref()
            .ok_or(Error::ContractViolation("induced sub-instances are always colorable"))?;
        if sub.n() != map.len() || !sub.is_proper(graph) {
            return Err(Error::ContractViolation(
                "sub-coloring is not a proper coloring of its part",
            ));
        }
        for (new, &old) in map.iter().enumerate() {
            colors[old] = offset + sub.color(new);
        }
        offset += sub.num_colors();
    }
    let merged = Coloring::new(colors)?;
    assert!(merged.is_proper(g), "offset ranges keep the coloring proper");
    Ok(merged)
}

/// A maximum-independent-set routine with a declared guarantee `beta`: the
/// returned set is at least `1/beta` of the maximum.
pub trait MisSolver {
    fn beta(&self) -> Weight;
    fn solve(&self, g: &Graph) -> Result<Vec<usize>>;
}

/// Exact solver, `beta = 1`.
pub struct ExactMisSolver {
    pub limits: Limits,
}

impl MisSolver for ExactMisSolver {
    fn beta(&self) -> Weight {
        Weight::one()
    }

    fn solve(&self, g: &Graph) -> Result<Vec<usize>> {
        Ok(exact_mis(g, &self.limits)?.witness)
    }
}

/// This crate's own independent-set reduction with an exact inner solver:
/// guarantee `beta = parts/window`.
pub struct ReducedMisSolver {
    pub parts: usize,
    pub window: usize,
    pub limits: Limits,
}

impl MisSolver for ReducedMisSolver {
    fn beta(&self) -> Weight {
        w_ratio(self.parts as i64, self.window as i64)
    }

    fn solve(&self, g: &Graph) -> Result<Vec<usize>> {
        let (graphs, ctx) = mis_reduce(g, self.parts, self.window)?;
        let mut subs = Vec::with_capacity(graphs.len());
        for sub in &graphs {
            subs.push(Some(exact_mis(sub, &self.limits)?.witness));
        }
        mis_merge(g, &ctx, &graphs, &subs)
    }
}

/// What the peeling reducer hands the merger: the removed independent sets
/// in removal order and the residual graph's vertex map.
#[derive(Debug, Clone)]
pub struct BhContext {
    pub removed_sets: Vec<Vec<usize>>,
    pub residual_map: Vec<usize>,
    pub beta: Weight,
    pub rate: Weight,
}

/// Repeatedly removes the independent set found by `solver` until at most
/// `n / rate` vertices remain; emits the residual graph. The number of
/// rounds is at most `ceil(chi(G) * beta * ln rate)`.
pub fn coloring_bh_reduce(
    g: &Graph,
    rate: &Weight,
    solver: &dyn MisSolver,
) -> Result<(Graph, BhContext)> {
    if rate <= &Weight::one() {
        return Err(Error::InvalidParameter("peeling reduction needs rate > 1"));
    }
    let n = g.n();
    let threshold = w_int(n as i64) / rate;
    let mut current = g.clone();
    let mut current_map: Vec<usize> = (0..n).collect();
    let mut removed_sets = Vec::new();
    while w_int(current.n() as i64) > threshold {
        let found = solver.solve(&current)?;
        if found.is_empty() || !is_independent(&current, &found) {
            return Err(Error::ContractViolation(
                "inner solver must return a nonempty independent set",
            ));
        }
        removed_sets.push(found.iter().map(|&v| current_map[v]).collect());
        let keep: Vec<usize> = (0..current.n()).filter(|v| !found.contains(v)).collect();
        let (next, submap) = current.induced(&keep);
        current_map = submap.iter().map(|&v| current_map[v]).collect();
        current = next;
    }
    Ok((
        current,
        BhContext {
            removed_sets,
            residual_map: current_map,
            beta: solver.beta(),
            rate: rate.clone(),
        },
    ))
}

/// Colors the residual graph with the supplied coloring and gives the j-th
/// removed independent set the fresh color `q + j`. Uses at most
/// `alpha*chi + ceil(chi * beta * ln rate)` colors.
pub fn coloring_bh_merge(
    g: &Graph,
    ctx: &BhContext,
    residual: &Graph,
    inner: Option<&Coloring>,
) -> Result<Coloring> {
    let inner = inner.ok_or(Error::ContractViolation(
        "residual coloring is required",
    ))?;
    if inner.n() != ctx.residual_map.len() || !inner.is_proper(residual) {
        return Err(Error::ContractViolation(
            "residual coloring is not proper",
        ));
    }
    let q = inner.num_colors();
    let mut colors = vec![0usize; g.n()];
    for (new, &old) in ctx.residual_map.iter().enumerate() {
        colors[old] = inner.color(new);
    }
    for (j, set) in ctx.removed_sets.iter().enumerate() {
        for &v in set {
            colors[v] = q + j + 1;
        }
    }
    let merged = Coloring::new(colors)?;
    assert!(
        merged.is_proper(g),
        "independent sets take fresh colors, residual keeps its own"
    );
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_graph;
    use crate::oracles::exact_coloring;
    use crate::weight::ceil_mul_ln;

    fn exact_simple(g: &Graph, rate: usize) -> Coloring {
        let lim = Limits::default();
        let (graphs, ctx) = coloring_simple_reduce(g, rate).unwrap();
        let subs: Vec<Option<Coloring>> = graphs
            .iter()
            .map(|sub| Some(exact_coloring(sub, &lim).unwrap().witness))
            .collect();
        coloring_simple_merge(g, &ctx, &graphs, &subs).unwrap()
    }

    #[test]
    fn simple_reduction_meets_rate_bound() {
        let lim = Limits::default();
        for seed in 0..30 {
            let g = gen_graph(10, 0.4, seed, false).unwrap();
            let chi = exact_coloring(&g, &lim).unwrap().value;
            for rate in [2usize, 3] {
                let merged = exact_simple(&g, rate);
                assert!(merged.num_colors() <= rate * chi, "seed {seed}");
            }
        }
    }

    #[test]
    fn edgeless_parts_use_one_color_each() {
        let g = Graph::new(9, []).unwrap();
        let merged = exact_simple(&g, 3);
        assert_eq!(merged.num_colors(), 3);
    }

    #[test]
    fn peeling_meets_affine_bound() {
        let lim = Limits::default();
        let solver = ExactMisSolver {
            limits: lim.clone(),
        };
        for seed in 0..30 {
            let g = gen_graph(10, 0.4, seed, false).unwrap();
            let chi = exact_coloring(&g, &lim).unwrap().value;
            let rate = w_int(2);
            let (residual, ctx) = coloring_bh_reduce(&g, &rate, &solver).unwrap();
            // Loop guard: |V(G')| <= n / rate.
            assert!(w_int(residual.n() as i64) <= w_int(10) / &rate);
            // Round count: t <= ceil(chi * beta * ln rate).
            let t_cap = Weight::from_integer(ceil_mul_ln(&w_int(chi as i64), &rate));
            assert!(w_int(ctx.removed_sets.len() as i64) <= t_cap);
            let inner = exact_coloring(&residual, &lim).unwrap().witness;
            let merged = coloring_bh_merge(&g, &ctx, &residual, Some(&inner)).unwrap();
            // Total colors <= alpha*chi + ceil(chi*beta*ln rate), alpha = 1.
            assert!(
                w_int(merged.num_colors() as i64) <= w_int(chi as i64) + t_cap,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn bipartite_round_count() {
        let lim = Limits::default();
        let solver = ExactMisSolver { limits: lim };
        for seed in 40..70 {
            let g = gen_graph(12, 0.2, seed, false).unwrap();
            let is_bipartite = exact_coloring(&g, &Limits::default()).unwrap().value <= 2;
            if !is_bipartite {
                continue;
            }
            for rate in [w_int(2), w_int(3)] {
                let (_, ctx) = coloring_bh_reduce(&g, &rate, &solver).unwrap();
                let cap = Weight::from_integer(ceil_mul_ln(&w_int(2), &rate));
                assert!(w_int(ctx.removed_sets.len() as i64) <= cap);
            }
        }
    }

    #[test]
    fn reduced_mis_solver_realizes_theorem_composition() {
        let g = gen_graph(12, 0.35, 9, false).unwrap();
        let solver = ReducedMisSolver {
            parts: 2,
            window: 1,
            limits: Limits::default(),
        };
        let rate = w_int(2);
        let (residual, ctx) = coloring_bh_reduce(&g, &rate, &solver).unwrap();
        assert!(w_int(residual.n() as i64) <= w_int(12) / &rate);
        assert_eq!(ctx.beta, w_int(2));
    }
}
