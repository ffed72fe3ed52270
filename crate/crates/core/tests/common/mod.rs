//! Independent reference implementations shared by integration tests.

use abcolor::coloring::Params;

/// Tries all (a+b)^n tagged assignments. Distances come from the adjacency
/// matrix directly, not from the library.
pub fn naive_colorable(n: usize, edges: &[(usize, usize)], p: Params) -> bool {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut near = adj.clone();
    for u in 0..n {
        for v in 0..n {
            if u != v && (0..n).any(|w| adj[u][w] && adj[w][v]) {
                near[u][v] = true;
            }
        }
    }
    let k = p.a + p.b;
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut col = vec![0usize; n];
    loop {
        let ok = (0..n).all(|u| {
            (u + 1..n).all(|v| {
                if col[u] != col[v] {
                    return true;
                }
                if col[u] < p.a { !adj[u][v] } else { !near[u][v] }
            })
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            col[i] += 1;
            if col[i] < k {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}
