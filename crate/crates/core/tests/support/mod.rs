//! Test-side oracles and corpora, written independently of the library's
//! solver and enumerator.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use copwin::Graph;

/// Closed neighbourhoods as bitmasks (n <= 32).
pub fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|u| (0..g.n()).filter(|&v| v == u || g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect()
}

/// Result of the value-iteration oracle: for each cops-to-move state, the
/// number of cop turns to capture, or `None` if the robber escapes.
pub struct OracleTable {
    pub n: usize,
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    steps: Vec<Option<u32>>,
}

impl OracleTable {
    pub fn steps(&self, cops: &[usize], robber: usize) -> Option<u32> {
        let mut key = cops.to_vec();
        key.sort_unstable();
        self.steps[self.index[&key] * self.n + robber]
    }

    pub fn verdict(&self) -> bool {
        self.capture_time().is_some()
    }

    /// min over placements of max over robber placements.
    pub fn capture_time(&self) -> Option<u32> {
        (0..self.tuples.len())
            .filter_map(|t| (0..self.n).map(|r| self.steps[t * self.n + r]).collect::<Option<Vec<u32>>>())
            .map(|v| v.into_iter().max().unwrap())
            .min()
    }
}

fn tuples(n: usize, k: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, k: usize, distinct: bool, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, distinct, if distinct { v + 1 } else { v }, cur, out);
            cur.pop();
        }
    }
    go(n, k, distinct, 0, &mut cur, &mut out);
    out
}

/// Depth-bounded minimax by rounds: a cops-to-move state has value `d` when
/// it first becomes winnable within `d` cop turns. Round `d` reads only the
/// values of rounds `< d`; iteration stops once a round adds nothing.
/// With `distinct`, cops occupy distinct vertices throughout.
pub fn oracle(g: &Graph, k: usize, distinct: bool) -> OracleTable {
    let n = g.n();
    let nb = closed_masks(g);
    let tuples = tuples(n, k, distinct);
    let index: HashMap<Vec<usize>, usize> = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();

    let moves: Vec<Vec<usize>> = tuples
        .iter()
        .map(|t| {
            let mut reach: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut partial = vec![Vec::new()];
            for &c in t {
                let mut next = Vec::new();
                for p in &partial {
                    for d in (0..n).filter(|&d| nb[c] >> d & 1 == 1) {
                        let mut q: Vec<usize> = p.clone();
                        q.push(d);
                        next.push(q);
                    }
                }
                partial = next;
            }
            for mut p in partial {
                p.sort_unstable();
                if !distinct || p.windows(2).all(|w| w[0] != w[1]) {
                    reach.insert(p);
                }
            }
            reach.into_iter().map(|p| index[&p]).collect()
        })
        .collect();
    let cop_mask: Vec<u32> = tuples.iter().map(|t| t.iter().fold(0, |m, &c| m | 1 << c)).collect();

    let mut steps: Vec<Option<u32>> = vec![None; tuples.len() * n];
    for t in 0..tuples.len() {
        for r in 0..n {
            if cop_mask[t] >> r & 1 == 1 {
                steps[t * n + r] = Some(0);
            }
        }
    }
    for d in 1u32.. {
        let mut fresh = Vec::new();
        for t in 0..tuples.len() {
            for r in 0..n {
                if steps[t * n + r].is_some() {
                    continue;
                }
                let wins = moves[t].iter().any(|&s| {
                    cop_mask[s] >> r & 1 == 1
                        || (0..n).filter(|&x| nb[r] >> x & 1 == 1).all(|x| steps[s * n + x].is_some())
                });
                if wins {
                    fresh.push(t * n + r);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for i in fresh {
            steps[i] = Some(d);
        }
    }
    OracleTable { n, tuples, index, steps }
}

/// Least `k` for which the oracle finds a winning placement.
pub fn oracle_cop_number(g: &Graph) -> usize {
    (1..).find(|&k| oracle(g, k, false).verdict()).unwrap()
}

/// Domination number by brute force over vertex subsets.
pub fn domination_number(g: &Graph) -> usize {
    let n = g.n();
    let nb = closed_masks(g);
    let all = (1u32 << n) - 1;
    (1u32..=all)
        .filter(|s| (0..n).filter(|&v| s >> v & 1 == 1).fold(0, |m, v| m | nb[v]) == all)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Every labeled graph on `n` vertices (connected or not), in mask order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(b, _)| m >> b & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

pub fn connected_labeled(n: usize) -> impl Iterator<Item = Graph> {
    all_labeled(n).filter(|g| g.is_connected())
}

/// Canonical code: the least upper-triangle bit string over all labelings
/// reached by individualization and colour refinement.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|u| g.neighbors(u).fold(0, |m, v| m | 1 << v)).collect();
    let mut best = u64::MAX;
    search(&adj, refine(&adj, vec![(0..n).collect()]), &mut best);
    best
}

/// Splits cells by neighbour counts into every cell until stable. Cells are
/// kept in an order that depends only on the counts, never on labels.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut u64) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut code = 0u64;
        let mut bit = 0;
        for j in 1..order.len() {
            for i in 0..j {
                if adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    };
    // Twins in one cell are swapped by an automorphism that fixes the
    // partition, so one representative per twin class suffices.
    let cell = &cells[target];
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = reps.iter().any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if !twin {
            reps.push(v);
        }
    }
    for v in reps {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&x| x != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(adj, refine(adj, split), best);
    }
}

pub fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// One representative per isomorphism class of connected graphs on
/// `1..=n_max` vertices satisfying the hereditary property `keep`. Level `n`
/// extends each level-`n-1` graph by a vertex joined to every nonempty
/// subset; every connected graph has a vertex whose removal leaves it
/// connected, so nothing is missed.
pub fn canonical_corpus(n_max: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
    for n in 2..=n_max {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for base in &levels[n - 1] {
            let edges = base.edges();
            for subset in 1u32..1 << (n - 1) {
                let mut e = edges.clone();
                e.extend((0..n - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, n - 1)));
                let g = Graph::from_edge_list(n, &e).unwrap();
                if keep(&g) {
                    seen.insert(canonical_code(&g));
                }
            }
        }
        levels.push(seen.into_iter().map(|c| from_code(n, c)).collect());
    }
    levels.truncate(n_max + 1);
    levels
}

/// A001349: connected graphs on n unlabeled vertices.
pub const CONNECTED_COUNTS: [usize; 9] = [0, 1, 1, 2, 6, 21, 112, 853, 11117];
