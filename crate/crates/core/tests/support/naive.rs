//! Definition-level reference solver used to cross-check the production
//! code. Every parameter is computed by scanning all 2^n subsets with the
//! textbook predicate written out longhand; nothing is shared with the
//! optimized search paths, so agreement is meaningful.

use domchain_core::{Graph, Parameter};

pub struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

fn holds(s: u32, v: usize) -> bool {
    s >> v & 1 == 1
}

impl Naive {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    fn dominating(&self, s: u32) -> bool {
        'outer: for u in 0..self.n {
            if holds(s, u) {
                continue;
            }
            for v in 0..self.n {
                if holds(s, v) && self.adj[u][v] {
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    fn independent(&self, s: u32) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if holds(s, u) && holds(s, v) && self.adj[u][v] {
                    return false;
                }
            }
        }
        true
    }

    /// u lies in the closed private neighborhood of v with respect to s.
    fn privately_seen(&self, u: usize, v: usize, s: u32) -> bool {
        if !(u == v || self.adj[u][v]) {
            return false;
        }
        for w in 0..self.n {
            if holds(s, w) && w != v && (w == u || self.adj[u][w]) {
                return false;
            }
        }
        true
    }

    fn irredundant(&self, s: u32) -> bool {
        for v in 0..self.n {
            if holds(s, v) && !(0..self.n).any(|u| self.privately_seen(u, v, s)) {
                return false;
            }
        }
        true
    }

    fn open_irredundant(&self, s: u32) -> bool {
        for v in 0..self.n {
            if holds(s, v)
                && !(0..self.n).any(|u| !holds(s, u) && self.privately_seen(u, v, s))
            {
                return false;
            }
        }
        true
    }

    fn maximal_irredundant(&self, s: u32) -> bool {
        self.irredundant(s)
            && (0..self.n).all(|v| holds(s, v) || !self.irredundant(s | 1 << v))
    }

    fn minimal_dominating(&self, s: u32) -> bool {
        self.dominating(s)
            && (0..self.n).all(|v| !holds(s, v) || !self.dominating(s & !(1 << v)))
    }

    fn min_size(&self, keep: impl Fn(u32) -> bool) -> usize {
        (0..1u32 << self.n)
            .filter(|&s| keep(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("every nonempty graph admits the set")
    }

    fn max_size(&self, keep: impl Fn(u32) -> bool) -> usize {
        (0..1u32 << self.n)
            .filter(|&s| keep(s))
            .map(|s| s.count_ones() as usize)
            .max()
            .expect("the empty set always qualifies")
    }

    fn saturation(&self, keep: impl Fn(u32) -> bool) -> usize {
        (0..self.n)
            .map(|v| {
                (0..1u32 << self.n)
                    .filter(|&s| holds(s, v) && keep(s))
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .expect("the singleton always qualifies")
            })
            .min()
            .expect("nonempty graph")
    }

    pub fn value(&self, param: Parameter) -> usize {
        assert!(self.n >= 1, "parameters are undefined on the order-0 graph");
        match param {
            Parameter::LowerIrredundance => self.min_size(|s| self.maximal_irredundant(s)),
            Parameter::Domination => self.min_size(|s| self.dominating(s)),
            Parameter::IndependentDomination => {
                self.min_size(|s| self.independent(s) && self.dominating(s))
            }
            Parameter::Independence => self.max_size(|s| self.independent(s)),
            Parameter::UpperDomination => self.max_size(|s| self.minimal_dominating(s)),
            Parameter::UpperIrredundance => self.max_size(|s| self.irredundant(s)),
            Parameter::OpenIrredundance => self.max_size(|s| self.open_irredundant(s)),
            Parameter::IndependenceSaturation => self.saturation(|s| self.independent(s)),
            Parameter::IrredundanceSaturation => self.saturation(|s| self.irredundant(s)),
        }
    }
}
