use std::collections::HashMap;

use super::{OrientedCrossing, PdCode};

/// Assembles an oriented diagram from crossings on provisional arc ids,
/// merging ids that turn out to be the same arc, and relabels the result so
/// arc labels run consecutively along each component.
///
/// Components come out in the order in which their first provisional arc was
/// allocated.
#[derive(Debug, Default)]
pub(crate) struct DiagramBuilder {
    parent: Vec<u32>,
    crossings: Vec<OrientedCrossing>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        id
    }

    fn find(&mut self, a: u32) -> u32 {
        let mut root = a;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = a;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Declares two provisional ids to be the same arc.
    pub fn identify(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    pub fn push(&mut self, x: OrientedCrossing) {
        self.crossings.push(x);
    }

    pub fn finish(mut self) -> PdCode {
        let crossings: Vec<OrientedCrossing> = std::mem::take(&mut self.crossings)
            .into_iter()
            .map(|x| OrientedCrossing {
                under_in: self.find(x.under_in),
                under_out: self.find(x.under_out),
                over_in: self.find(x.over_in),
                over_out: self.find(x.over_out),
                positive: x.positive,
            })
            .collect();

        let mut next: HashMap<u32, u32> = HashMap::new();
        // arc -> (crossing index, entered as under?)
        let mut entry: HashMap<u32, (usize, bool)> = HashMap::new();
        for (i, x) in crossings.iter().enumerate() {
            for (from, to, under) in [(x.under_in, x.under_out, true), (x.over_in, x.over_out, false)] {
                let dup = next.insert(from, to).is_some();
                assert!(!dup, "arc enters two crossings");
                entry.insert(from, (i, under));
            }
        }

        let mut label: HashMap<u32, u32> = HashMap::new();
        let mut components: Vec<Vec<u32>> = Vec::new();
        let mut counter = 1u32;
        for a in 0..self.parent.len() as u32 {
            let r = self.find(a);
            if label.contains_key(&r) {
                continue;
            }
            let mut cycle = vec![r];
            if next.contains_key(&r) {
                let mut cur = next[&r];
                while cur != r {
                    cycle.push(cur);
                    cur = next[&cur];
                }
            }
            if cycle.len() == 2 && cycle.iter().all(|arc| !entry[arc].1) {
                // Two-arc component passing only over: the arc listed first must
                // enter the lower-numbered crossing (see `PdCode::new`).
                if entry[&cycle[1]].0 < entry[&cycle[0]].0 {
                    cycle.swap(0, 1);
                }
            }
            let mut comp = Vec::with_capacity(cycle.len());
            for arc in cycle {
                label.insert(arc, counter);
                comp.push(counter);
                counter += 1;
            }
            components.push(comp);
        }

        let oriented = crossings
            .into_iter()
            .map(|x| OrientedCrossing {
                under_in: label[&x.under_in],
                under_out: label[&x.under_out],
                over_in: label[&x.over_in],
                over_out: label[&x.over_out],
                positive: x.positive,
            })
            .collect();
        PdCode::from_oriented(oriented, components)
    }
}
