//! Ball-size bounds, diameter bounds, excision connectivity, and the detour
//! theorem sweep with its connected-boundary companion.

use super::SuiteOutcome;
use crate::bits::BitSet;
use crate::complex::{subcomplex_k, EdgeRule, Metric, PolygonalComplex};
use crate::fixtures::Fixture;
use crate::gf2::{
    boundary_matrices, connected_boundary_check, detour_path, homology, Chain, DetourOutcome,
    Solver,
};
use crate::error::Error;

/// Ball-size and diameter bounds on every standard fixture:
/// cube d̂-balls obey |Ball(e,r)| ≤ 10r²; every fixture obeys
/// |Ball(e,r)| ≤ D^{r+1} in both metrics with D = max(deg, d̂eg); and the
/// diameters obey diam ≥ log_D(|E|) − 1.
pub fn ball_bounds_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("ball-bounds");
    let mut fixtures = Fixture::standard_set();
    fixtures.push(Fixture::Cube(6));
    for fixture in fixtures {
        let name = fixture.name();
        let g = fixture.build().expect("standard fixture");
        let (deg, co_deg) = g.degrees();
        let d_cap = deg.max(co_deg) as f64;
        let m = g.edge_count();
        let mut ok = true;
        let mut witness = String::new();
        for metric in [Metric::Path, Metric::Copath] {
            let dist = g.all_pairs_edge_distances(metric);
            let diameter = dist
                .iter()
                .flat_map(|row| row.iter().copied())
                .max()
                .unwrap_or(0);
            // diam ≥ log_D(|E|) − 1, checked as D^{diam+1} ≥ |E|.
            if d_cap.powi(diameter as i32 + 1) < m as f64 {
                ok = false;
                witness = format!("{metric:?} diameter bound: D^{}+1 < {m}", diameter);
            }
            for e in 0..m {
                let mut counts = vec![0usize; diameter + 1];
                for f in 0..m {
                    counts[dist[e][f]] += 1;
                }
                let mut ball = 0usize;
                for (r, c) in counts.iter().enumerate() {
                    ball += c;
                    if (ball as f64) > d_cap.powi(r as i32 + 1) {
                        ok = false;
                        witness = format!("{metric:?} |Ball({e},{r})|={ball} > D^{}", r + 1);
                    }
                    if matches!(fixture, Fixture::Cube(_))
                        && metric == Metric::Copath
                        && r >= 1
                        && ball > 10 * r * r
                    {
                        ok = false;
                        witness = format!("cube area: |Ball({e},{r})|={ball} > 10r²");
                    }
                }
            }
        }
        if ok {
            out.verified_here(&name, format!("D={d_cap} all e,r ≤ diam"));
        } else {
            out.violated_here(&name, "ball bounds", witness);
        }
    }
    out
}

/// Excision: on cubes up to n = 6, removing any d̂-ball of radius r < n
/// leaves the remaining edges path-connected.
pub fn excision_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("excision");
    for n in 1..=6usize {
        let g = Fixture::Cube(n).build().unwrap();
        let name = format!("cube-{n}");
        let mut ok = true;
        let mut witness = String::new();
        for e in 0..g.edge_count() {
            for r in 0..n {
                let ball = g.ball(e, r, Metric::Copath);
                let rest = ball.complement();
                if !g.edge_set_path_connected(&rest) {
                    ok = false;
                    witness = format!("e={e} r={r} complement disconnected");
                }
            }
        }
        if ok {
            out.verified_here(&name, "all e, r < n");
        } else {
            out.violated_here(&name, "excision", witness);
        }
    }
    out
}

/// The detour sweep: for r = 1 on the named fixtures, every tuple
/// (e, f, x₀) with K(x₀, r+1) simply connected and both endpoints outside
/// the ball admits a class member avoiding the ball. Also sweeps the
/// connected-boundary property of every qualifying K(e,r), r ≤ 3.
pub fn detour_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("detour");
    let fixtures = [
        Fixture::Cube(2),
        Fixture::Cube(3),
        Fixture::Cube(4),
        Fixture::Torus(4),
    ];
    let rule = EdgeRule::FaceEdgesOnly;
    let r = 1usize;
    for fixture in fixtures {
        let name = fixture.name();
        let g = fixture.build().expect("standard fixture");
        let m = g.edge_count();
        let (_, d2) = boundary_matrices(&g);
        // Canonical shortest paths from every source, lowest-index
        // predecessors, reconstructed per pair below.
        let adj = g.edge_adjacency(Metric::Path);
        let preds: Vec<Vec<usize>> = (0..m).map(|src| bfs_predecessors(&adj, src)).collect();
        let co_dist = g.all_pairs_edge_distances(Metric::Copath);

        let mut tuples = 0usize;
        let mut failures = 0usize;
        let mut skipped_x0 = 0usize;
        for x0 in 0..m {
            let k = subcomplex_k(&g, x0, r + 1, rule).expect("subcomplex");
            let rep = homology(&k.complex);
            if rep.dims.1 != 0 || rep.cohomology_dims.1 != 0 {
                skipped_x0 += 1;
                continue;
            }
            let ball: Vec<usize> = (0..m).filter(|&e| co_dist[x0][e] <= r).collect();
            let ball_set = BitSet::from_indices(m, &ball);
            let sub_rows: Vec<BitSet> = ball.iter().map(|&e| d2.row(e).clone()).collect();
            let solver = Solver::new(&crate::gf2::Gf2Matrix::from_rows(
                g.face_count(),
                sub_rows,
            ));
            for e in 0..m {
                if ball_set.get(e) {
                    continue;
                }
                for f in (e + 1)..m {
                    if ball_set.get(f) {
                        continue;
                    }
                    tuples += 1;
                    let path = reconstruct_path(&preds[e], e, f);
                    let mut rhs = BitSet::new(ball.len());
                    for (i, &be) in ball.iter().enumerate() {
                        if path.contains(&be) {
                            rhs.insert(i);
                        }
                    }
                    if !solver.is_solvable(&rhs) {
                        failures += 1;
                        if failures < 4 {
                            out.violated_here(
                                &name,
                                format!("x0={x0} e={e} f={f} r={r}"),
                                "no class member avoids the ball",
                            );
                        }
                    }
                }
            }
        }
        if failures == 0 && tuples > 0 {
            out.verified_here(
                &name,
                format!("{tuples} tuples, r={r}, {skipped_x0} x0 skipped (K not simply connected)"),
            );
        } else if tuples == 0 {
            out.skipped_here(&name, format!("r={r}"), "no qualifying tuples");
        }

        // Spot-check the public operation end to end on a few tuples.
        let mut spot = 0usize;
        'spot: for x0 in 0..m {
            for e in 0..m {
                if spot >= 5 {
                    break 'spot;
                }
                let f = m - 1 - e;
                if e == f || co_dist[x0][e] <= r || co_dist[x0][f] <= r {
                    continue;
                }
                let gamma =
                    Chain::edges(&g, &reconstruct_path(&preds[e], e, f));
                match detour_path(&g, &gamma, x0, r, rule) {
                    Ok(DetourOutcome::Member(mem)) => {
                        let ball = g.ball(x0, r, Metric::Copath);
                        if mem.coeffs.intersects(&ball) {
                            out.violated_here(
                                &name,
                                format!("spot x0={x0} e={e} f={f}"),
                                "member touches the ball",
                            );
                        }
                        spot += 1;
                    }
                    Ok(DetourOutcome::Counterexample) => {
                        out.violated_here(
                            &name,
                            format!("spot x0={x0} e={e} f={f}"),
                            "counterexample outcome",
                        );
                        spot += 1;
                    }
                    Err(Error::Precondition(_)) => continue,
                    Err(other) => {
                        out.violated_here(&name, "spot", other.to_string());
                        spot += 1;
                    }
                }
            }
        }

        // Connected boundary of every qualifying K(e,r): ∂₂(F') is
        // path-connected whenever K is copath connected with H₁ = 0.
        let mut cb_checked = 0usize;
        let mut cb_failures = 0usize;
        for e in 0..m {
            for radius in 1..=3usize {
                match connected_boundary_check(&g, e, radius, rule) {
                    Ok(true) => cb_checked += 1,
                    Ok(false) => {
                        cb_failures += 1;
                        out.violated_here(
                            &name,
                            format!("connected-boundary e={e} r={radius}"),
                            "boundary not path connected",
                        );
                    }
                    Err(Error::Precondition(_)) => {}
                    Err(other) => {
                        cb_failures += 1;
                        out.violated_here(&name, "connected-boundary", other.to_string());
                    }
                }
            }
        }
        if cb_failures == 0 && cb_checked > 0 {
            out.verified_here(&name, format!("connected-boundary on {cb_checked} qualifying (e,r)"));
        }
    }
    out
}

fn bfs_predecessors(adj: &[Vec<usize>], src: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    let mut dist = vec![usize::MAX; adj.len()];
    let mut q = std::collections::VecDeque::new();
    dist[src] = 0;
    q.push_back(src);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    prev
}

fn reconstruct_path(prev: &[usize], src: usize, dst: usize) -> Vec<usize> {
    let mut path = vec![dst];
    let mut cur = dst;
    while cur != src {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// r-simple connectedness sweeps used by the CLI: radii where the standard
/// fixtures hold or fail, pinned.
pub fn rsimple_profile(g: &PolygonalComplex, max_r: usize) -> Vec<(usize, bool, Option<usize>)> {
    (0..=max_r)
        .map(|r| {
            let rep = crate::gf2::r_simply_connected(g, r, EdgeRule::FaceEdgesOnly)
                .expect("sweep");
            (r, rep.holds, rep.witness)
        })
        .collect()
}
