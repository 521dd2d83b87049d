//! Shared test support: seeded random connected loop-free planar
//! multigraphs, built planar-by-construction.

use knotpoly::graph::Multigraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected loop-free planar multigraph with `3 <= |V| <= max_v`
/// and `|E| <= max_e`. Grows a random planar triangulation by repeated
/// vertex insertion into a face, keeps a random connected spanning
/// subgraph, then duplicates random edges.
pub fn random_planar_multigraph(rng: &mut StdRng, max_v: usize, max_e: usize) -> Multigraph {
    let v = rng.gen_range(3..=max_v);

    // triangulation as a set of triangular faces, including the outer one
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 2)];
    for new in 3..v {
        let f = faces.remove(rng.gen_range(0..faces.len()));
        for i in 0..3 {
            edges.push((f[i].min(new), f[i].max(new)));
            faces.push([f[i], f[(i + 1) % 3], new]);
        }
    }

    // connected spanning subgraph: a random spanning tree plus a random
    // subset of the remaining edges
    edges.shuffle(rng);
    let mut uf: Vec<usize> = (0..v).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut kept: Vec<(usize, usize)> = Vec::new();
    let mut extra: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
            kept.push((a, b));
        } else {
            extra.push((a, b));
        }
    }
    for e in extra {
        if kept.len() < max_e && rng.gen_bool(0.6) {
            kept.push(e);
        }
    }

    // parallel copies keep the graph planar and loop-free
    while kept.len() < max_e && rng.gen_bool(0.5) {
        let e = kept[rng.gen_range(0..kept.len())];
        kept.push(e);
    }

    Multigraph::from_edges(v, kept)
}
