use alloc::vec;
use alloc::vec::Vec;

use crate::instances::{Tour, TspInstance};
use crate::oracles::min_cycle_cover;
use crate::weight::{sum, Weight};
use crate::{Error, Result};

/// Everything the TSP merger needs: the cycle covers found on the way down
/// (arcs in original city ids), the vertex map of the final instance, and
/// whether a single-cycle cover already finished the job.
#[derive(Debug, Clone)]
pub struct TspContext {
    /// Arcs of each cycle cover, in original ids.
    pub cover_arcs: Vec<Vec<(usize, usize)>>,
    /// Weight of each cycle cover.
    pub cover_weights: Vec<Weight>,
    /// Final-instance city -> original city (empty on short-circuit).
    pub final_map: Vec<usize>,
    /// A cycle cover came out as one cycle; no inner tour is needed.
    pub short_circuit: bool,
}

/// Runs `k` rounds of lightest-cycle-cover contraction: each round keeps
/// the lowest-index city of every cycle and induces the sub-instance on the
/// representatives (the triangle inequality is inherited). Stops early when
/// a cover is a single cycle. Returns the final sub-instance, or none on a
/// short-circuit.
pub fn tsp_reduce(t: &TspInstance, k: usize) -> Result<(Option<TspInstance>, TspContext)> {
    if k == 0 {
        return Err(Error::InvalidParameter("contraction depth must be positive"));
    }
    let mut current_map: Vec<usize> = (0..t.n()).collect();
    let mut current = t.clone();
    let mut ctx = TspContext {
        cover_arcs: Vec::new(),
        cover_weights: Vec::new(),
        final_map: Vec::new(),
        short_circuit: false,
    };
    for _ in 0..k {
        let cover = min_cycle_cover(&current)?;
        ctx.cover_arcs.push(
            cover
                .successor
                .iter()
                .enumerate()
                .map(|(i, &j)| (current_map[i], current_map[j]))
                .collect(),
        );
        ctx.cover_weights.push(cover.weight.clone());
        if cover.cycles.len() == 1 {
            ctx.short_circuit = true;
            return Ok((None, ctx));
        }
        // Lowest-index representative per cycle; cycles are listed from
        // their minimum, so the representatives stay sorted.
        let reps: Vec<usize> = cover.cycles.iter().map(|c| c[0]).collect();
        current_map = reps.iter().map(|&r| current_map[r]).collect();
        current = current.induced(&reps);
    }
    ctx.final_map = current_map;
    Ok((Some(current), ctx))
}

/// Overlays all cycle covers with the inner tour, extracts an Eulerian
/// circuit, and shortcuts revisited cities. With an alpha-approximate inner
/// tour the result weighs at most `(alpha + k) * OPT`; every intermediate
/// cover weighs at most `OPT`.
pub fn tsp_merge(t: &TspInstance, ctx: &TspContext, inner: Option<&Tour>) -> Result<Tour> {
    let n = t.n();
    let mut arcs: Vec<(usize, usize)> = ctx.cover_arcs.iter().flatten().copied().collect();
    if ctx.short_circuit {
        // The recorded covers alone are connected and balanced.
    } else {
        let inner = inner.ok_or(Error::ContractViolation(
            "no short-circuit fired; an inner tour is required",
        ))?;
        if inner.len() != ctx.final_map.len() {
            return Err(Error::ContractViolation(
                "inner tour size does not match the final sub-instance",
            ));
        }
        let order = inner.order();
        for i in 0..order.len() {
            let from = ctx.final_map[order[i]];
            let to = ctx.final_map[order[(i + 1) % order.len()]];
            arcs.push((from, to));
        }
    }
    let circuit = eulerian_circuit(n, &arcs)?;
    // First occurrences along the circuit; the triangle inequality makes
    // every shortcut safe.
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &v in circuit.iter().take(circuit.len() - 1) {
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
    }
    let tour = Tour::new(order, n)?;
    let circuit_weight = sum_arcs(t, &arcs);
    assert!(
        tour.weight(t) <= circuit_weight,
        "shortcutting never increases weight under the triangle inequality"
    );
    Ok(tour)
}

fn sum_arcs(t: &TspInstance, arcs: &[(usize, usize)]) -> Weight {
    let weights: Vec<Weight> = arcs.iter().map(|&(a, b)| t.weight(a, b).clone()).collect();
    sum(weights.iter())
}

/// Hierholzer's algorithm with per-vertex arc lists consumed in sorted
/// order. The arc multiset must be balanced and connected over all arc
/// endpoints; both are asserted before extraction.
fn eulerian_circuit(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_deg = vec![0usize; n];
    for &(a, b) in arcs {
        out[a].push(b);
        in_deg[b] += 1;
    }
    for list in &mut out {
        list.sort_unstable();
    }
    for v in 0..n {
        assert_eq!(out[v].len(), in_deg[v], "overlay must balance in/out degrees");
    }
    // All arc-incident vertices must form one component (here: all of 0..n,
    // since the first cover touches every city).
    let mut seen = vec![false; n];
    let mut stack = vec![arcs[0].0];
    seen[arcs[0].0] = true;
    while let Some(v) = stack.pop() {
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    assert!(
        (0..n).all(|v| seen[v] || out[v].is_empty()),
        "overlay must be connected over arc-incident vertices"
    );
    let start = arcs.iter().map(|&(a, _)| a).min().unwrap();
    let mut next_arc = vec![0usize; n];
    let mut path = vec![start];
    let mut circuit = Vec::with_capacity(arcs.len() + 1);
    while let Some(&v) = path.last() {
        if next_arc[v] < out[v].len() {
            let w = out[v][next_arc[v]];
            next_arc[v] += 1;
            path.push(w);
        } else {
            circuit.push(v);
            path.pop();
        }
    }
    circuit.reverse();
    if circuit.len() != arcs.len() + 1 {
        return Err(Error::Internal("Eulerian circuit did not use every arc"));
    }
    Ok(circuit)
}
