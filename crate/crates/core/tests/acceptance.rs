//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::time::Instant;

use abcolor::colorers::*;
use abcolor::gadget::{check_gadget, GadgetVerdict};
use abcolor::generators::*;
use abcolor::reductions::*;
use abcolor::solver::{decide_with, Domains};
use abcolor::{decide, verify, Budget, Color, Graph, MixedColoring, Params, Status, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{all_pairs, naive_colorable};

/// Node budget per exact decision.
const NODES: u64 = 10_000_000;
const RANDOM_ORACLE_GRAPHS: usize = 500;
const CLASS_GRAPHS: usize = 300;
const DEGENERATE_SEEDS: u64 = 20;
const CLUSTER_CASES: usize = 1000;
const PEEL_CASES: usize = 200;
const OCT_CASES: u64 = 100;
const OUTERPLANAR_CASES: u64 = 200;
const CACTUS_CASES: u64 = 100;
const BLOWUP_GRAPHS: usize = 50;

type Outcome = Result<String, String>;

fn budget() -> Budget {
    Budget::nodes(NODES)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn valid(g: &Graph, p: Params, c: &MixedColoring) -> bool {
    verify(g, p, c).is_ok_and(|v| v.is_empty())
}

fn status(g: &Graph, a: usize, b: usize) -> Status {
    decide(g, Params::new(a, b), budget()).status
}

fn random_graph(r: &mut ChaCha8Rng, n: usize) -> (Vec<(usize, usize)>, Graph) {
    let density = r.gen_range(0.1..0.7);
    random_graph_with(r, n, density)
}

fn random_graph_with(r: &mut ChaCha8Rng, n: usize, density: f64) -> (Vec<(usize, usize)>, Graph) {
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| r.gen_bool(density)).collect();
    let g = Graph::from_edges(n, &edges);
    (edges, g)
}

fn oracle_equivalence() -> Outcome {
    let mut checks = 0;
    let mut one = |n: usize, edges: &[(usize, usize)]| -> Result<(), String> {
        let g = Graph::from_edges(n, edges);
        for a in 0..=2 {
            for b in 0..=2 {
                let p = Params::new(a, b);
                let out = decide(&g, p, budget());
                let want = naive_colorable(n, edges, p);
                ensure(out.status != Status::Unknown && out.is_colorable() == want, || {
                    format!("n={n} edges={edges:?} {p}: solver {:?}, oracle {want}", out.status)
                })?;
                if let Some(w) = &out.witness {
                    ensure(valid(&g, p, w), || format!("invalid witness n={n} {p}"))?;
                }
                checks += 1;
            }
        }
        Ok(())
    };
    for n in 0..=5 {
        let pairs = all_pairs(n);
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            one(n, &edges)?;
        }
    }
    let mut r = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..RANDOM_ORACLE_GRAPHS {
        let n = r.gen_range(6..=7);
        let (edges, _) = random_graph(&mut r, n);
        one(n, &edges)?;
    }
    Ok(format!("{checks} (graph, a, b) checks agree"))
}

fn is_star(g: &Graph, comp: &[usize]) -> bool {
    let edges = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    edges + 1 == comp.len() && (comp.len() <= 2 || comp.iter().any(|&v| g.degree(v) == comp.len() - 1))
}

fn class_characterizations() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..CLASS_GRAPHS {
        let n = r.gen_range(1..=8);
        let (edges, g) = random_graph(&mut r, n);
        let comps = g.components();
        let stars = comps.iter().all(|c| is_star(&g, c));
        let matching = comps.iter().all(|c| c.len() <= 2);
        for (a, b, want, name) in [(2, 0, g.is_bipartite(), "bipartite"), (1, 1, stars, "stars"), (0, 2, matching, "K1/K2")] {
            let got = status(&g, a, b);
            ensure(got != Status::Unknown && (got == Status::Colorable) == want, || {
                format!("({a},{b}) vs {name} on {edges:?}: {got:?}")
            })?;
        }
    }
    Ok(format!("{CLASS_GRAPHS} graphs"))
}

fn extremal_families() -> Outcome {
    let mut lines = Vec::new();
    for k in [2, 3] {
        let g = gen_fig6(k).map_err(|e| e.to_string())?;
        ensure(g.n() == 4 * k, || format!("fig6({k}) order {}", g.n()))?;
        ensure(status(&g, 1, k) == Status::NotColorable, || format!("fig6({k}) at (1,{k})"))?;
        ensure(status(&g, 1, k + 1) == Status::Colorable, || format!("fig6({k}) at (1,{})", k + 1))?;
        lines.push(format!("fig6({k})"));
    }
    for k in [1, 2, 3] {
        let g = gen_fig8(k).map_err(|e| e.to_string())?;
        ensure(g.n() == 3 * k + 1, || format!("fig8({k}) order {}", g.n()))?;
        ensure(status(&g, 2, k) == Status::NotColorable, || format!("fig8({k}) at (2,{k})"))?;
        ensure(status(&g, 2, k + 1) == Status::Colorable, || format!("fig8({k}) at (2,{})", k + 1))?;
        lines.push(format!("fig8({k})"));
    }
    for (k, l) in [(1, 1), (1, 2), (2, 1)] {
        let g = gen_fig5(k, l).map_err(|e| e.to_string())?;
        ensure(g.n() == k * l * l + (1 + 2 * k) * l + k + 2, || format!("fig5({k},{l}) order {}", g.n()))?;
        ensure(status(&g, k, l) == Status::NotColorable, || format!("fig5({k},{l}) at ({k},{l})"))?;
        lines.push(format!("fig5({k},{l})"));
    }
    Ok(lines.join(" "))
}

/// `b <= sqrt(num * n)`, checked as `b^2 <= num * n`.
fn within(b: usize, num: u128, n: usize) -> bool {
    (b as u128).pow(2) <= num * n as u128
}

fn degenerate_bound() -> Outcome {
    let mut worst = 0.0f64;
    let mut runs = 0;
    for k in 1..=3usize {
        for n in [100, 1000, 5000] {
            for seed in 0..DEGENERATE_SEEDS {
                let g = random_kdegenerate(n, k, seed).map_err(|e| e.to_string())?;
                let (c, cert) = color_degenerate(&g, k).map_err(|e| format!("k={k} n={n} seed={seed}: {e}"))?;
                ensure(valid(&g, Params::new(k, cert.used_d2), &c), || format!("invalid k={k} n={n} seed={seed}"))?;
                // 4k sqrt(k+1) sqrt(n), squared.
                let num = 16 * (k * k * (k + 1)) as u128;
                ensure(within(cert.used_d2, num, n), || format!("k={k} n={n} seed={seed}: {cert}"))?;
                worst = worst.max(cert.used_d2 as f64 / ((num * n as u128) as f64).sqrt());
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs, max used/bound = {worst:.3}"))
}

fn planar_bounds() -> Outcome {
    let mut g4: Vec<(String, Graph)> = vec![];
    for side in [10, 30, 70, 100] {
        g4.push((format!("grid {side}x{side}"), grid(side, side).map_err(|e| e.to_string())?));
    }
    for (n, seed) in [(1000, 0), (5000, 1), (10_000, 2)] {
        g4.push((format!("quadrangulation {n}"), random_quadrangulation(n, seed).map_err(|e| e.to_string())?));
    }
    let mut worst = 0.0f64;
    for (name, g) in &g4 {
        let (c, cert) = color_planar_g4(g, budget()).map_err(|e| format!("{name}: {e}"))?;
        ensure(valid(g, Params::new(2, cert.used_d2), &c), || format!("{name}: invalid"))?;
        // 8 sqrt(10) sqrt(n), squared.
        ensure(within(cert.used_d2, 640, g.n()), || format!("{name}: {cert}"))?;
        worst = worst.max(cert.used_d2 as f64 / (640.0 * g.n() as f64).sqrt());
    }
    for (n, seed) in [(500, 0), (2000, 1), (5000, 2)] {
        let g = random_stacked_triangulation(n, seed).map_err(|e| e.to_string())?;
        let (c, cert) = color_planar(&g).map_err(|e| format!("stacked {n}: {e}"))?;
        ensure(valid(&g, Params::new(3, cert.used_d2), &c), || format!("stacked {n}: invalid"))?;
        // 18 sqrt(2) sqrt(n), squared.
        ensure(within(cert.used_d2, 648, n), || format!("stacked {n}: {cert}"))?;
        worst = worst.max(cert.used_d2 as f64 / (648.0 * n as f64).sqrt());
    }
    Ok(format!("{} instances, max used/bound = {worst:.3}", g4.len() + 3))
}

fn greedy_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut s = VertexSet::new(n);
    let mut covered = VertexSet::new(n);
    for v in 0..n {
        if !covered.contains(v) {
            let w = g.neighbors(v).iter().copied().max_by_key(|&w| g.degree(w)).unwrap_or(v);
            s.insert(w);
            covered.insert(w);
            for &x in g.neighbors(w) {
                covered.insert(x);
            }
        }
    }
    s
}

fn oct_instance(seed: u64) -> Result<(Graph, VertexSet), String> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let host = random_tf_planar(400, seed).map_err(|e| e.to_string())?;
    let size = r.gen_range(1..8);
    let mut d = vec![r.gen_range(0..host.n())];
    while d.len() < size {
        let frontier: Vec<usize> =
            d.iter().flat_map(|&v| host.neighbors(v).iter().copied()).filter(|w| !d.contains(w)).collect();
        if frontier.is_empty() {
            break;
        }
        d.push(frontier[r.gen_range(0..frontier.len())]);
    }
    let dset = VertexSet::from_iter(host.n(), d.iter().copied());
    let (g, map) = host.induced(&host.closed_neighborhood(&dset));
    let local = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&i| dset.contains(map[i])));
    Ok((g, local))
}

fn lemma_invariants() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    for case in 0..PEEL_CASES {
        let (n, k) = (r.gen_range(2..300), r.gen_range(1..=3));
        let g = random_kdegenerate(n, k, case as u64).map_err(|e| e.to_string())?;
        let s = greedy_dominating(&g);
        let (t, col) = dominated_peel(&g, &s, k).map_err(|e| format!("peel case {case}: {e}"))?;
        ensure(s.is_subset(&t) && t.count() <= (k + 1) * s.count(), || format!("peel case {case}: |T|={}", t.count()))?;
        ensure((0..n).all(|v| col[v].is_none() == t.contains(v) && col[v].is_none_or(|c| c < k)), || {
            format!("peel case {case}: colouring shape")
        })?;
        ensure(g.edges().all(|(u, v)| col[u].is_none() || col[u] != col[v]), || format!("peel case {case}: improper"))?;
    }
    for case in 0..CLUSTER_CASES {
        let n = r.gen_range(1..60);
        let (_, g) = random_graph(&mut r, n);
        let g = if case % 2 == 0 { g } else { random_tf_planar(n.max(5), case as u64).map_err(|e| e.to_string())? };
        let picks = r.gen_range(0..=g.n().min(10));
        let s = VertexSet::from_iter(g.n(), (0..picks).map(|_| r.gen_range(0..g.n())));
        let cl = cluster(&g, &s);
        ensure(s.is_subset(&cl.s_prime) && cl.s_prime.count() <= 3 * s.count(), || format!("cluster case {case}: size"))?;
        let total: usize = cl.parts.iter().map(|p| p.count()).sum();
        ensure(total == cl.s_prime.count(), || format!("cluster case {case}: parts do not partition"))?;
        for (i, p) in cl.parts.iter().enumerate() {
            ensure(g.induced(p).0.is_connected(), || format!("cluster case {case}: disconnected part"))?;
            for q in &cl.parts[i + 1..] {
                ensure(g.set_distance(p, q).is_none_or(|d| d >= 4), || format!("cluster case {case}: parts too close"))?;
            }
        }
    }
    for seed in 0..OCT_CASES {
        let (g, d) = oct_instance(seed)?;
        let x = oct_for_cluster(&g, &d, budget()).map_err(|e| format!("oct seed {seed}: {e}"))?;
        let mut gone = d.clone();
        gone.union_with(&x);
        ensure(x.iter().all(|v| !d.contains(v)) && g.without(&gone).0.is_bipartite(), || format!("oct seed {seed}: not bipartite"))?;
        ensure(3 * x.count() <= 5 * d.count(), || format!("oct seed {seed}: |X|={} |D|={}", x.count(), d.count()))?;
    }
    for seed in 0..OUTERPLANAR_CASES {
        let n = 10 + (seed as usize * 37) % 490;
        let g = random_tf_outerplanar(n, seed).map_err(|e| e.to_string())?;
        let f = peel_homomorphism(&g, 4).map_err(|e| format!("outerplanar seed {seed}: {e}"))?;
        ensure(g.edges().all(|(u, v)| (f[u] + 1) % 5 == f[v] || (f[v] + 1) % 5 == f[u]), || {
            format!("outerplanar seed {seed}: not a homomorphism")
        })?;
        let cover = vc_outerplanar(&g, 4).map_err(|e| format!("outerplanar seed {seed}: {e}"))?;
        ensure(g.edges().all(|(u, v)| cover.contains(u) || cover.contains(v)), || format!("outerplanar seed {seed}: not a cover"))?;
        // n (k+1) / (2k+1) with k = 2.
        ensure(5 * cover.count() <= 3 * g.n(), || format!("outerplanar seed {seed}: cover {}", cover.count()))?;
    }
    for seed in 0..CACTUS_CASES {
        let n = 5 + (seed as usize * 53) % 500;
        let g = random_cactus(n, 4, seed).map_err(|e| e.to_string())?;
        let c = color_cactus_g4(&g).map_err(|e| format!("cactus seed {seed}: {e}"))?;
        ensure(valid(&g, Params::new(2, 1), &c), || format!("cactus seed {seed}: invalid"))?;
    }
    Ok(format!(
        "peel {PEEL_CASES}, cluster {CLUSTER_CASES}, oct {OCT_CASES}, outerplanar {OUTERPLANAR_CASES}, cactus {CACTUS_CASES}"
    ))
}

fn micro_lemmas() -> Outcome {
    let p10 = Graph::path(10);
    let mut d = Domains::full(10, Params::new(1, 2));
    d.fix(0, Color::D2(0)).fix(9, Color::D2(0)).only_d1(1).only_d1(8);
    ensure(decide_with(&p10, &d, budget()).status == Status::NotColorable, || "length-9 path extends".into())?;
    let g0 = 3;
    let out = reduce_3col_to_13(&Graph::empty(1), g0).map_err(|e| e.to_string())?;
    let path = &out.paths[0];
    let mut anchor = Domains::full(out.graph.n(), out.params);
    anchor.fix(path[0], Color::D2(0));
    ensure(decide_with(&out.graph, &anchor, budget()).status == Status::Colorable, || "padded path not colourable".into())?;
    for pos in [6 * g0, 12 * g0, 18 * g0] {
        let mut d = anchor.clone();
        d.forbid(path[pos], Color::D2(0));
        ensure(decide_with(&out.graph, &d, budget()).status == Status::NotColorable, || {
            format!("position {pos} can differ from position 0")
        })?;
    }
    for k in [1, 2] {
        let spec = gen_friendship(k).map_err(|e| e.to_string())?;
        ensure(check_gadget(&spec, Params::new(2, k), budget()) == GadgetVerdict::Holds, || format!("friendship({k})"))?;
    }
    Ok("path-9, mod-3 at g=3, friendship k=1,2".into())
}

fn blowup_equivalence() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let mut colourable = 0;
    for i in 0..BLOWUP_GRAPHS {
        let n = r.gen_range(1..=6);
        let density = r.gen_range(0.4..1.0);
        let (edges, g) = random_graph_with(&mut r, n, density);
        let base = status(&g, 3, 0);
        if base == Status::Colorable {
            colourable += 1;
        }
        for k in [1, 2] {
            let h = gen_blowup(&g, k).map_err(|e| e.to_string())?;
            let got = status(&h, 3, k);
            ensure(base != Status::Unknown && got == base, || format!("graph {i} {edges:?} k={k}: {base:?} vs {got:?}"))?;
        }
    }
    Ok(format!("{BLOWUP_GRAPHS} graphs ({colourable} 3-colourable)"))
}

fn reductions_end_to_end() -> Outcome {
    for (name, g) in [("K2", Graph::path(2)), ("K1", Graph::empty(1))] {
        let out = reduce_3col_to_13(&g, 3).map_err(|e| e.to_string())?;
        let h = &out.graph;
        ensure(h.is_bipartite() && h.max_degree() == 4 && h.girth().is_none_or(|x| x >= 60), || {
            format!("{name}: bipartite {} degree {} girth {:?}", h.is_bipartite(), h.max_degree(), h.girth())
        })?;
        ensure(out.provenance.len() == h.n(), || format!("{name}: provenance not total"))?;
    }
    let c5 = reduce_3col_to_13(&Graph::cycle(5), 3).map_err(|e| e.to_string())?;
    let w = build_witness_3col13(&[0, 1, 0, 1, 2], &c5).map_err(|e| e.to_string())?;
    ensure(valid(&c5.graph, Params::new(1, 3), &w), || "C5 witness invalid".into())?;
    let p3 = reduce_dd_to_12(&Graph::path(3), 3).map_err(|e| e.to_string())?;
    let w = build_witness_dd12(&[0, 0, 1], &p3).map_err(|e| e.to_string())?;
    ensure(valid(&p3.graph, Params::new(1, 2), &w), || "P3 witness invalid".into())?;
    Ok(format!("C5 -> {} vertices, P3 -> {} vertices", c5.graph.n(), p3.graph.n()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("class characterizations", class_characterizations),
        ("extremal families", extremal_families),
        ("degenerate bound", degenerate_bound),
        ("planar bounds", planar_bounds),
        ("lemma invariants", lemma_invariants),
        ("micro-lemmas", micro_lemmas),
        ("blowup equivalence", blowup_equivalence),
        ("reductions end to end", reductions_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = run();
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
