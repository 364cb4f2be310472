use super::enumerate::check_edge_count;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with `n` vertices and `m` edges whose degrees differ by at most one.
///
/// The first `2m mod n` vertices get degree `⌊2m/n⌋ + 1`, the rest `⌊2m/n⌋`, and the
/// sequence is realized by Havel–Hakimi, ties going to the lowest index.
pub fn near_regular_graph(n: usize, m: usize) -> Result<Graph> {
    check_edge_count(n, m)?;
    let mut g = Graph::new(n)?;
    if n == 0 {
        return Ok(g);
    }
    let base = 2 * m / n;
    let extra = 2 * m - base * n;
    let mut residual: Vec<usize> = (0..n).map(|v| base + usize::from(v < extra)).collect();
    let mut done = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (residual[v], std::cmp::Reverse(v)))
            .expect("vertices remain");
        done[v] = true;
        let mut others: Vec<usize> = (0..n).filter(|&u| !done[u]).collect();
        others.sort_by_key(|&u| (std::cmp::Reverse(residual[u]), u));
        let need = residual[v];
        if others.len() < need || others[..need].iter().any(|&u| residual[u] == 0) {
            return Err(Error::Argument(format!("degree sequence for n={n}, m={m} is not graphical")));
        }
        for &u in &others[..need] {
            g.add_edge(v, u)?;
            residual[u] -= 1;
        }
        residual[v] = 0;
    }
    Ok(g)
}
