//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion in the
//! formulation of Brandes). Multiplicities are ignored.

use crate::graph::MultiGraph;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    nbrs: Vec<Vec<usize>>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    edge_id: Vec<Option<usize>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

pub fn is_planar(g: &MultiGraph) -> bool {
    let n = g.order();
    let simple_edges: usize = (0..n).map(|v| g.simple_degree(v)).sum::<usize>() / 2;
    if n > 2 && simple_edges > 3 * n - 6 {
        return false;
    }
    let m = simple_edges;
    let mut st = State {
        nbrs: (0..n).map(|v| g.neighbors(v).collect()).collect(),
        height: vec![None; n],
        parent_edge: vec![None; n],
        edge_id: vec![None; n * n],
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting_depth: Vec::with_capacity(m),
        out_edges: vec![Vec::new(); n],
        reference: vec![None; m],
        lowpt_edge: vec![None; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut st.out_edges[v]);
        out.sort_by_key(|&e| st.nesting_depth[e]);
        st.out_edges[v] = out;
    }
    roots.into_iter().all(|r| st.test(r))
}

impl State {
    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited")
    }

    fn orient(&mut self, v: usize) {
        let n = self.height.len();
        let parent = self.parent_edge[v];
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            if self.edge_id[v * n + w].is_some() {
                continue;
            }
            let e = self.src.len();
            self.edge_id[v * n + w] = Some(e);
            self.edge_id[w * n + v] = Some(e);
            self.src.push(v);
            self.dst.push(w);
            self.out_edges[v].push(e);
            let hv = self.h(v);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting_depth[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < hv);
            if let Some(p) = parent {
                if self.lowpt[e] < self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt[p].min(self.lowpt2[e]);
                    self.lowpt[p] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt[e]);
                } else {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("conflict pairs on the stack are non-empty"),
        }
    }

    fn set_ref(&mut self, key: Option<usize>, value: Option<usize>) {
        if let Some(k) = key {
            self.reference[k] = value;
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let out = self.out_edges[v].clone();
        let hv = self.h(v);
        for (i, &ei) in out.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                let e = parent.expect("a return edge below v implies v is not a root");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("ei has return edges on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.set_ref(p.left.low, p.right.low);
                p.left.low = None;
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.set_ref(p.right.low, p.left.low);
                p.right.low = None;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }
}
