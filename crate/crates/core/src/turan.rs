//! Turán graphs, complete multipartite graphs and the edge count `t_r(n)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes and edge count of the balanced complete `r`-partite graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranDecomposition {
    pub r: usize,
    pub n: usize,
    /// Non-increasing; the first `s` parts have size `⌈n/r⌉`.
    pub parts: Vec<usize>,
    /// `n mod r`.
    pub s: usize,
    pub t: u64,
}

impl TuranDecomposition {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        let t = turan_size(r, n)?;
        let s = n % r;
        let base = n / r;
        let parts = (0..r).map(|i| if i < s { base + 1 } else { base }).collect();
        Ok(TuranDecomposition { r, n, parts, s, t })
    }

    /// `2r·t ≤ (r-1)n²` and `(r-1)n² - 2r·t ≤ r²/4`, both checked on integers.
    pub fn satisfies_size_bounds(&self) -> bool {
        turan_bounds_hold(self.r as u128, self.n as u128, self.t as u128)
    }
}

pub(crate) fn turan_bounds_hold(r: u128, n: u128, t: u128) -> bool {
    let upper = (r - 1) * n * n;
    let scaled = 2 * r * t;
    scaled <= upper && 4 * (upper - scaled) <= r * r
}

/// `t_r(n) = (r-1)(n² - s²)/(2r) + C(s, 2)` with `s = n mod r`, in exact integers.
pub fn turan_size(r: usize, n: usize) -> Result<u64> {
    if r == 0 {
        return Err(Error::Argument("Turán graph needs at least one part".into()));
    }
    let (r, n) = (r as u128, n as u128);
    let s = n % r;
    // n - s is a multiple of r, so (r-1)(n-s)(n+s) is divisible by 2r
    let main = (r - 1) * (n - s) * (n + s);
    debug_assert_eq!(main % (2 * r), 0);
    let t = main / (2 * r) + s * s.saturating_sub(1) / 2;
    u64::try_from(t).map_err(|_| Error::Resource(format!("t_{r}({n}) overflows u64")))
}

/// Complete multipartite graph; part `i` occupies a contiguous block of vertex indices.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::Argument("no parts given".into()));
    }
    if parts.contains(&0) {
        return Err(Error::Argument("part sizes must be positive".into()));
    }
    multipartite_unchecked(parts)
}

fn multipartite_unchecked(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::new(n)?;
    let mut label = Vec::with_capacity(n);
    for (i, &k) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(i, k));
    }
    for v in 0..n {
        for u in 0..v {
            if label[u] != label[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `T_r(n)`. When `n < r` some parts are empty and the result is `K_n`.
pub fn turan_graph(r: usize, n: usize) -> Result<(Graph, TuranDecomposition)> {
    let dec = TuranDecomposition::new(r, n)?;
    let g = multipartite_unchecked(&dec.parts)?;
    Ok((g, dec))
}
