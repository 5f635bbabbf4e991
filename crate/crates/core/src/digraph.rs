use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Dense directed graph on `0..n`.
pub(crate) struct Digraph {
    adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let adj = (0..n)
            .map(|i| (0..n).filter(|&k| edge(i, k)).collect())
            .collect();
        Digraph { adj }
    }

    /// Lexicographically smallest topological order (every edge points
    /// forward), or a directed cycle if there is none. Self-loops count as
    /// cycles of length one.
    pub fn topological_order(&self) -> Result<Vec<usize>, Vec<usize>> {
        let n = self.adj.len();
        let mut indeg = vec![0usize; n];
        for succ in &self.adj {
            for &k in succ {
                indeg[k] += 1;
            }
        }
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = ready.pop() {
            order.push(i);
            for &k in &self.adj[i] {
                indeg[k] -= 1;
                if indeg[k] == 0 {
                    ready.push(Reverse(k));
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(self.find_cycle().expect("Kahn left nodes, so a cycle exists"))
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let n = self.adj.len();
        let mut mark = vec![Mark::New; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for start in 0..n {
            if mark[start] != Mark::New {
                continue;
            }
            stack.push((start, 0));
            mark[start] = Mark::Open;
            while let Some(top) = stack.last_mut() {
                let (node, idx) = *top;
                if let Some(&succ) = self.adj[node].get(idx) {
                    top.1 += 1;
                    match mark[succ] {
                        Mark::New => {
                            mark[succ] = Mark::Open;
                            stack.push((succ, 0));
                        }
                        Mark::Open => {
                            let pos = stack
                                .iter()
                                .position(|&(v, _)| v == succ)
                                .expect("open node on stack");
                            return Some(stack[pos..].iter().map(|&(v, _)| v).collect());
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[node] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }
}
