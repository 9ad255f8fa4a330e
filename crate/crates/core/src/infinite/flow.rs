use std::collections::VecDeque;

/// Integer max-flow by Dinic's algorithm.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub fn nodes(&self) -> usize {
        self.head.len()
    }

    /// Arc `u -> v` with capacity `c`; the reverse residual arc starts at 0.
    pub fn add_arc(&mut self, u: usize, v: usize, c: u64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.nodes()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && level[y] == u32::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn augment(&mut self, x: usize, t: usize, pushed: u64, level: &[u32], next: &mut [usize]) -> u64 {
        if x == t {
            return pushed;
        }
        while next[x] < self.head[x].len() {
            let e = self.head[x][next[x]];
            let y = self.to[e];
            if self.cap[e] > 0 && level[y] == level[x] + 1 {
                let got = self.augment(y, t, pushed.min(self.cap[e]), level, next);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            next[x] += 1;
        }
        0
    }

    /// Maximum `s`-`t` flow, stopping once it reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut flow = 0;
        while flow < limit {
            let Some(level) = self.levels(s, t) else { break };
            let mut next = vec![0; self.nodes()];
            loop {
                let got = self.augment(s, t, limit - flow, &level, &mut next);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        // CLRS example, max flow 23
        let arcs = [
            (0, 1, 16),
            (0, 2, 13),
            (1, 3, 12),
            (2, 1, 4),
            (2, 4, 14),
            (3, 2, 9),
            (3, 5, 20),
            (4, 3, 7),
            (4, 5, 4),
        ];
        let mut f = FlowNetwork::new(6);
        for (u, v, c) in arcs {
            f.add_arc(u, v, c);
        }
        assert_eq!(f.clone().max_flow(0, 5, u64::MAX), 23);
        assert_eq!(f.max_flow(0, 5, 10), 10);
    }

    #[test]
    fn min_cut_side() {
        let mut f = FlowNetwork::new(3);
        f.add_arc(0, 1, 1);
        f.add_arc(1, 2, 5);
        assert_eq!(f.max_flow(0, 2, u64::MAX), 1);
        assert_eq!(f.reachable(0), vec![true, false, false]);
    }
}
