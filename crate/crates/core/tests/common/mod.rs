#![allow(dead_code)]

use ngcolor::Graph;

/// Smallest `k` such that some map `V -> {0..k}` gives adjacent vertices
/// distinct colours, found by trying all `k^n` maps for `k = 1, 2, …`.
pub fn brute_force_chi(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // Odometer increment.
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n colours always suffice")
}

/// Every relabeling of `g` by a permutation of its vertices.
pub fn labeled_copies(g: &Graph) -> Vec<Graph> {
    fn permute(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            permute(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let n = g.order();
    let mut perms = Vec::new();
    permute(&mut Vec::new(), &mut (0..n).collect(), &mut perms);
    perms
        .into_iter()
        .map(|p| Graph::from_edges(n, g.edges().map(|(u, v)| (p[u], p[v]))).unwrap())
        .collect()
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |m| Graph::from_edge_mask(n, m).unwrap())
}
