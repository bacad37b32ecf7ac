//! Vertex-disjoint linkings in a digraph via unit-capacity max flow on the
//! vertex-split network.
//!
//! Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by a unit
//! arc, so every vertex lies on at most one path. A source vertex that is also
//! a terminal links to itself through the length-0 path.

use crate::subset::Subset;

struct Network {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(1);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, node: usize, sink: usize, seen: &mut [bool]) -> bool {
        if node == sink {
            return true;
        }
        seen[node] = true;
        for k in 0..self.adj[node].len() {
            let id = self.adj[node][k];
            let next = self.head[id];
            if self.cap[id] == 0 || seen[next] {
                continue;
            }
            if self.augment(next, sink, seen) {
                self.cap[id] -= 1;
                self.cap[id ^ 1] += 1;
                return true;
            }
        }
        false
    }
}

/// Builds the split network and saturates it. Returns the network, its
/// source/sink node ids, and the flow value.
fn saturate(
    vertices: usize,
    edges: &[(usize, usize)],
    sources: Subset,
    terminals: Subset,
) -> (Network, usize, usize, usize) {
    let source = 2 * vertices;
    let sink = source + 1;
    let mut net = Network::new(2 * vertices + 2);
    for v in 0..vertices {
        net.arc(2 * v, 2 * v + 1);
    }
    for &(u, v) in edges {
        if u != v {
            net.arc(2 * u + 1, 2 * v);
        }
    }
    for v in sources {
        net.arc(source, 2 * v);
    }
    for v in terminals {
        net.arc(2 * v + 1, sink);
    }
    let mut flow = 0;
    let mut seen = vec![false; 2 * vertices + 2];
    loop {
        seen.fill(false);
        if !net.augment(source, sink, &mut seen) {
            break;
        }
        flow += 1;
    }
    (net, source, sink, flow)
}

/// Maximum number of pairwise vertex-disjoint paths from distinct vertices of
/// `sources` to vertices of `terminals`.
pub fn max_linking(
    vertices: usize,
    edges: &[(usize, usize)],
    sources: Subset,
    terminals: Subset,
) -> usize {
    saturate(vertices, edges, sources, terminals).3
}

/// A maximum family of vertex-disjoint paths, each given as its vertex sequence.
pub fn linking_paths(
    vertices: usize,
    edges: &[(usize, usize)],
    sources: Subset,
    terminals: Subset,
) -> Vec<Vec<usize>> {
    let (net, source, sink, _) = saturate(vertices, edges, sources, terminals);
    // a saturated forward arc has cap 0 and its reverse twin has cap 1
    let used = |from: usize| -> Vec<usize> {
        net.adj[from]
            .iter()
            .copied()
            .filter(|&id| id % 2 == 0 && net.cap[id] == 0)
            .map(|id| net.head[id])
            .collect()
    };
    let mut paths = Vec::new();
    for start in used(source) {
        let mut v = start / 2;
        let mut path = vec![v];
        loop {
            let next = used(2 * v + 1);
            let next = next.first().copied().expect("flow conservation");
            if next == sink {
                break;
            }
            v = next / 2;
            path.push(v);
        }
        paths.push(path);
    }
    paths.sort();
    paths
}
