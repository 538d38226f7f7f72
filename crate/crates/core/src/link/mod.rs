//! Framed, oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing is a 4-tuple `(a, b, c, d)` of arc labels listed
//! counterclockwise starting from the incoming under-arc, so the under-strand
//! runs `a -> c`. Arc labels increase by one along each component in the
//! direction of travel, which fixes the direction of the over-strand and
//! therefore the sign of every crossing: the crossing is positive when the
//! over-strand runs `d -> b`.
//!
//! A component with a single arc that appears in no crossing is a crossingless
//! circle.

mod builder;
pub mod catalog;
mod matrix;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

pub(crate) use builder::DiagramBuilder;
pub use matrix::{determinant, signature_exact};

use crate::error::{Error, Result};

/// A crossing with both strands' incoming and outgoing arcs resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedCrossing {
    pub under_in: u32,
    pub under_out: u32,
    pub over_in: u32,
    pub over_out: u32,
    pub positive: bool,
}

impl OrientedCrossing {
    pub fn to_tuple(&self) -> [u32; 4] {
        if self.positive {
            [self.under_in, self.over_out, self.under_out, self.over_in]
        } else {
            [self.under_in, self.over_in, self.under_out, self.over_out]
        }
    }

    /// The same crossing with the strands' heights exchanged.
    pub fn switched(&self) -> Self {
        Self {
            under_in: self.over_in,
            under_out: self.over_out,
            over_in: self.under_in,
            over_out: self.under_out,
            positive: !self.positive,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    components: Vec<Vec<u32>>,
    oriented: Vec<OrientedCrossing>,
    component_of: HashMap<u32, usize>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDiagram(msg.into())
}

impl PdCode {
    pub fn empty() -> Self {
        Self::from_oriented(Vec::new(), Vec::new())
    }

    /// Validates a PD code and derives the orientation of every crossing.
    ///
    /// The only case the labels leave open is a two-arc component that passes
    /// over other strands at both of its crossings; there the first listed
    /// arc is taken to enter the lower-numbered crossing.
    pub fn new(crossings: Vec<[u32; 4]>, components: Vec<Vec<u32>>) -> Result<Self> {
        let mut component_of: HashMap<u32, usize> = HashMap::new();
        let mut next: HashMap<u32, u32> = HashMap::new();
        for (ci, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(malformed(format!("component {ci} has no arcs")));
            }
            for (k, &arc) in comp.iter().enumerate() {
                if arc == 0 {
                    return Err(malformed("arc labels must be positive"));
                }
                if component_of.insert(arc, ci).is_some() {
                    return Err(malformed(format!("arc {arc} is listed in two places")));
                }
                if k > 0 && arc != comp[k - 1] + 1 {
                    return Err(malformed(format!(
                        "arc labels of component {ci} are not consecutive at arc {arc}"
                    )));
                }
                next.insert(arc, comp[(k + 1) % comp.len()]);
            }
        }

        let mut uses: HashMap<u32, usize> = HashMap::new();
        for (i, x) in crossings.iter().enumerate() {
            for &arc in x {
                if !component_of.contains_key(&arc) {
                    return Err(malformed(format!("crossing {i} uses arc {arc}, which no component lists")));
                }
                *uses.entry(arc).or_default() += 1;
            }
        }
        for comp in &components {
            for &arc in comp {
                let n = uses.get(&arc).copied().unwrap_or(0);
                let free_loop = comp.len() == 1 && n == 0;
                if n != 2 && !free_loop {
                    return Err(malformed(format!("arc {arc} appears {n} times in crossings (expected 2)")));
                }
            }
        }

        let mut entered: HashSet<u32> = HashSet::new();
        let mut over_in: Vec<Option<u32>> = vec![None; crossings.len()];
        for (i, &[a, _, c, _]) in crossings.iter().enumerate() {
            if next[&a] != c {
                return Err(malformed(format!(
                    "crossing {i}: under-strand {a} -> {c} disagrees with the component order"
                )));
            }
            if !entered.insert(a) {
                return Err(malformed(format!("arc {a} enters two crossings")));
            }
        }
        let mut pending = Vec::new();
        for (i, &[_, b, _, d]) in crossings.iter().enumerate() {
            match (next[&d] == b, next[&b] == d) {
                (true, false) => over_in[i] = Some(d),
                (false, true) => over_in[i] = Some(b),
                (true, true) => pending.push(i),
                (false, false) => {
                    return Err(malformed(format!(
                        "crossing {i}: over-strand arcs {b}, {d} are not consecutive"
                    )))
                }
            }
            if let Some(arc) = over_in[i] {
                if !entered.insert(arc) {
                    return Err(malformed(format!("arc {arc} enters two crossings")));
                }
            }
        }
        // Two-arc components: the over direction follows from whichever arc
        // is still free to enter a crossing.
        let mut unresolved = Vec::new();
        for &i in &pending {
            let [_, b, _, d] = crossings[i];
            match (entered.contains(&d), entered.contains(&b)) {
                (false, true) => over_in[i] = Some(d),
                (true, false) => over_in[i] = Some(b),
                (false, false) => unresolved.push(i),
                (true, true) => return Err(malformed(format!("crossing {i}: over-strand cannot be oriented"))),
            }
            if let Some(arc) = over_in[i] {
                entered.insert(arc);
            }
        }
        let mut by_component: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &i in &unresolved {
            by_component.entry(component_of[&crossings[i][1]]).or_default().push(i);
        }
        for (ci, xs) in by_component {
            let comp = &components[ci];
            if xs.len() != 2 || comp.len() != 2 {
                return Err(malformed(format!("component {ci} cannot be oriented")));
            }
            over_in[xs[0]] = Some(comp[0]);
            over_in[xs[1]] = Some(comp[1]);
        }

        let oriented = crossings
            .iter()
            .zip(&over_in)
            .map(|(&[a, b, c, d], oin)| {
                let oin = oin.expect("every over-strand oriented");
                let positive = oin == d;
                OrientedCrossing {
                    under_in: a,
                    under_out: c,
                    over_in: oin,
                    over_out: if positive { b } else { d },
                    positive,
                }
            })
            .collect();
        Ok(Self { crossings, components, oriented, component_of })
    }

    /// Builds a code whose orientation is already known.
    pub(crate) fn from_oriented(oriented: Vec<OrientedCrossing>, components: Vec<Vec<u32>>) -> Self {
        let crossings = oriented.iter().map(OrientedCrossing::to_tuple).collect();
        let component_of = components
            .iter()
            .enumerate()
            .flat_map(|(ci, comp)| comp.iter().map(move |&a| (a, ci)))
            .collect();
        Self { crossings, components, oriented, component_of }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn oriented(&self) -> &[OrientedCrossing] {
        &self.oriented
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of_arc(&self, arc: u32) -> usize {
        self.component_of[&arc]
    }

    /// Components carrying the (under, over) strands of crossing `i`.
    pub fn strand_components(&self, i: usize) -> (usize, usize) {
        let x = &self.oriented[i];
        (self.component_of[&x.under_in], self.component_of[&x.over_in])
    }

    /// Number of components that pass through no crossing.
    pub fn free_loop_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.len() == 1 && !self.oriented.iter().any(|x| x.under_in == c[0] || x.over_in == c[0]))
            .count()
    }

    pub fn max_label(&self) -> u32 {
        self.components.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn crossing_sign(&self, i: usize) -> i64 {
        self.oriented[i].sign()
    }

    /// Sum of the signs of all crossings.
    pub fn writhe(&self) -> i64 {
        self.oriented.iter().map(OrientedCrossing::sign).sum()
    }

    /// Sum of the signs of the crossings of component `c` with itself; this is
    /// the blackboard framing of that component.
    pub fn self_writhe(&self, c: usize) -> i64 {
        (0..self.oriented.len())
            .filter(|&i| self.strand_components(i) == (c, c))
            .map(|i| self.crossing_sign(i))
            .sum()
    }

    /// Reflection through the projection plane: every crossing switched.
    pub fn mirror(&self) -> Self {
        Self::from_oriented(
            self.oriented.iter().map(OrientedCrossing::switched).collect(),
            self.components.clone(),
        )
    }

    /// Split union, with `other`'s arcs relabelled above this code's labels.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.max_label();
        let shift = |x: &OrientedCrossing| OrientedCrossing {
            under_in: x.under_in + off,
            under_out: x.under_out + off,
            over_in: x.over_in + off,
            over_out: x.over_out + off,
            positive: x.positive,
        };
        let mut oriented = self.oriented.clone();
        oriented.extend(other.oriented.iter().map(shift));
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| c.iter().map(|a| a + off).collect()));
        Self::from_oriented(oriented, components)
    }

    /// Number of crossings after replacing component `c` by `mults[c]`
    /// parallel copies.
    pub fn cabled_crossing_count(&self, mults: &[usize]) -> usize {
        (0..self.oriented.len())
            .map(|i| {
                let (u, o) = self.strand_components(i);
                mults[u] * mults[o]
            })
            .sum()
    }

    /// Replaces every component `c` by `mults[c]` blackboard-parallel copies
    /// (zero deletes it). Copies of a component are listed consecutively, in
    /// component order, each copy displaced further to the left of the
    /// direction of travel.
    pub fn cable_multi(&self, mults: &[usize]) -> Self {
        assert_eq!(mults.len(), self.components.len(), "one multiplicity per component");
        let mut b = DiagramBuilder::new();
        let mut copies: HashMap<u32, Vec<u32>> = HashMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for _ in 0..mults[ci] {
                for &arc in comp {
                    let id = b.fresh();
                    copies.entry(arc).or_default().push(id);
                }
            }
        }
        for (i, x) in self.oriented.iter().enumerate() {
            let (cu, co) = self.strand_components(i);
            let (mu, mo) = (mults[cu], mults[co]);
            if mu == 0 && mo == 0 {
                continue;
            }
            if mu == 0 {
                for v in 0..mo {
                    b.identify(copies[&x.over_in][v], copies[&x.over_out][v]);
                }
                continue;
            }
            if mo == 0 {
                for u in 0..mu {
                    b.identify(copies[&x.under_in][u], copies[&x.under_out][u]);
                }
                continue;
            }
            // Under-strand drawn upward, copy u displaced u steps west; the
            // over-strand runs east on positive crossings (copies north of it)
            // and west on negative ones (copies south of it).
            let along_vertical = |v: usize| if x.positive { v } else { mo - 1 - v };
            let along_horizontal = |u: usize| if x.positive { mu - 1 - u } else { u };
            let vertical: Vec<Vec<u32>> = (0..mu)
                .map(|u| {
                    let mut seg = vec![copies[&x.under_in][u]];
                    seg.extend((1..mo).map(|_| b.fresh()));
                    seg.push(copies[&x.under_out][u]);
                    seg
                })
                .collect();
            let horizontal: Vec<Vec<u32>> = (0..mo)
                .map(|v| {
                    let mut seg = vec![copies[&x.over_in][v]];
                    seg.extend((1..mu).map(|_| b.fresh()));
                    seg.push(copies[&x.over_out][v]);
                    seg
                })
                .collect();
            for u in 0..mu {
                for v in 0..mo {
                    let r = along_vertical(v);
                    let s = along_horizontal(u);
                    b.push(OrientedCrossing {
                        under_in: vertical[u][r],
                        under_out: vertical[u][r + 1],
                        over_in: horizontal[v][s],
                        over_out: horizontal[v][s + 1],
                        positive: x.positive,
                    });
                }
            }
        }
        b.finish()
    }

    /// Deterministic textual form, usable as a memoization key.
    pub fn canonical_key(&self) -> String {
        let mut s = String::new();
        for x in &self.crossings {
            let _ = write!(s, "X{},{},{},{};", x[0], x[1], x[2], x[3]);
        }
        for c in &self.components {
            let _ = write!(s, "C{}-{};", c[0], c[c.len() - 1]);
        }
        s
    }
}

/// A link diagram with an integer framing and an optional color per
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLinkDiagram {
    pd: PdCode,
    framings: Vec<i64>,
    colors: Vec<Option<u32>>,
}

impl FramedLinkDiagram {
    pub fn new(pd: PdCode, framings: Vec<i64>, colors: Vec<Option<u32>>) -> Result<Self> {
        if framings.len() != pd.component_count() {
            return Err(malformed(format!(
                "{} framings for {} components",
                framings.len(),
                pd.component_count()
            )));
        }
        if colors.len() != pd.component_count() {
            return Err(malformed(format!("{} colors for {} components", colors.len(), pd.component_count())));
        }
        Ok(Self { pd, framings, colors })
    }

    /// Uncolored diagram with the given framings.
    pub fn framed(pd: PdCode, framings: Vec<i64>) -> Result<Self> {
        let n = pd.component_count();
        Self::new(pd, framings, vec![None; n])
    }

    /// Uncolored diagram carrying its blackboard framing.
    pub fn blackboard(pd: PdCode) -> Self {
        let framings = (0..pd.component_count()).map(|c| pd.self_writhe(c)).collect();
        let n = pd.component_count();
        Self { pd, framings, colors: vec![None; n] }
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn colors(&self) -> &[Option<u32>] {
        &self.colors
    }

    pub fn component_count(&self) -> usize {
        self.pd.component_count()
    }

    pub fn with_colors(mut self, colors: Vec<Option<u32>>) -> Result<Self> {
        if colors.len() != self.pd.component_count() {
            return Err(malformed("color list length differs from component count"));
        }
        self.colors = colors;
        Ok(self)
    }

    /// Checks `0 <= color <= p - 2` for every colored component.
    pub fn validate_colors(&self, p: u64) -> Result<()> {
        for (component, c) in self.colors.iter().enumerate() {
            if let Some(color) = *c {
                if u64::from(color) + 2 > p {
                    return Err(Error::InvalidColor { component, color, p });
                }
            }
        }
        Ok(())
    }

    pub fn writhe(&self) -> i64 {
        self.pd.writhe()
    }

    /// Framings on the diagonal, pairwise linking numbers off it.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.component_count();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..self.pd.crossing_count() {
            let (u, o) = self.pd.strand_components(i);
            if u != o {
                m[u][o] += self.pd.crossing_sign(i);
                m[o][u] += self.pd.crossing_sign(i);
            }
        }
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if i != j {
                    debug_assert!(*v % 2 == 0, "odd number of crossings between two components");
                    *v /= 2;
                } else {
                    *v = self.framings[i];
                }
            }
        }
        m
    }

    pub fn signature(&self) -> i64 {
        signature_exact(&self.linking_matrix())
    }

    /// `m` blackboard-parallel copies of component `c`; the copies are
    /// uncolored and framed by their own blackboard framing.
    pub fn cable(&self, c: usize, m: usize) -> Self {
        let mut mults = vec![1; self.component_count()];
        mults[c] = m;
        let pd = self.pd.cable_multi(&mults);
        let mut framings = Vec::new();
        let mut colors = Vec::new();
        let mut k = 0;
        for (ci, &mult) in mults.iter().enumerate() {
            for _ in 0..mult {
                if ci == c {
                    framings.push(pd.self_writhe(k));
                    colors.push(None);
                } else {
                    framings.push(self.framings[ci]);
                    colors.push(self.colors[ci]);
                }
                k += 1;
            }
        }
        Self { pd, framings, colors }
    }

    /// Appends a crossingless, unlinked, uncolored circle with the given
    /// framing. Existing arc labels are untouched.
    pub fn add_disjoint_unknot(&self, framing: i64) -> Self {
        let label = self.pd.max_label() + 1;
        let mut components = self.pd.components.clone();
        components.push(vec![label]);
        let pd = PdCode::from_oriented(self.pd.oriented.clone(), components);
        let mut framings = self.framings.clone();
        framings.push(framing);
        let mut colors = self.colors.clone();
        colors.push(None);
        Self { pd, framings, colors }
    }

    /// Mirror image; framings change sign.
    pub fn mirror(&self) -> Self {
        Self {
            pd: self.pd.mirror(),
            framings: self.framings.iter().map(|f| -f).collect(),
            colors: self.colors.clone(),
        }
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let pd = self.pd.disjoint_union(&other.pd);
        let mut framings = self.framings.clone();
        framings.extend_from_slice(&other.framings);
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        Self { pd, framings, colors }
    }
}

/// A 3-manifold with a colored link inside it: surgery on the uncolored
/// components of `diagram` produces the manifold, the colored components form
/// the observed link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    diagram: FramedLinkDiagram,
}

impl SurgeryPresentation {
    pub fn new(diagram: FramedLinkDiagram) -> Self {
        Self { diagram }
    }

    /// Surgery on every component of an uncolored diagram.
    pub fn surgery(diagram: FramedLinkDiagram) -> Result<Self> {
        if diagram.colors().iter().any(Option::is_some) {
            return Err(Error::InvalidInput("surgery link components must be uncolored".into()));
        }
        Ok(Self { diagram })
    }

    pub fn empty() -> Self {
        Self { diagram: FramedLinkDiagram::blackboard(PdCode::empty()) }
    }

    pub fn diagram(&self) -> &FramedLinkDiagram {
        &self.diagram
    }

    pub fn surgery_components(&self) -> Vec<usize> {
        (0..self.diagram.component_count()).filter(|&c| self.diagram.colors[c].is_none()).collect()
    }

    pub fn observed_components(&self) -> Vec<usize> {
        (0..self.diagram.component_count()).filter(|&c| self.diagram.colors[c].is_some()).collect()
    }

    /// Linking matrix of the surgery components alone.
    pub fn surgery_linking_matrix(&self) -> Vec<Vec<i64>> {
        let full = self.diagram.linking_matrix();
        let idx = self.surgery_components();
        idx.iter().map(|&i| idx.iter().map(|&j| full[i][j]).collect()).collect()
    }

    /// Appends a disjoint surgery unknot with framing `framing` (a blow-up
    /// when `framing = +-1`).
    pub fn blow_up(&self, framing: i64) -> Self {
        Self { diagram: self.diagram.add_disjoint_unknot(framing) }
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    #[test]
    fn empty_code_is_valid() {
        let pd = PdCode::new(vec![], vec![]).unwrap();
        assert!(pd.is_empty());
        assert_eq!(pd.writhe(), 0);
    }

    #[test]
    fn standard_trefoil_code_validates() {
        let pd = PdCode::new(
            vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
            vec![vec![1, 2, 3, 4, 5, 6]],
        )
        .unwrap();
        assert_eq!(pd.writhe(), -3);
        assert_eq!(pd.mirror().writhe(), 3);
    }

    #[test]
    fn arc_used_once_is_rejected() {
        let err = PdCode::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 7]], vec![vec![1, 2, 3, 4, 5, 6, 7]]);
        assert!(matches!(err, Err(Error::MalformedDiagram(_))));
    }

    #[test]
    fn inconsistent_under_strand_is_rejected() {
        let err = PdCode::new(vec![[2, 1, 1, 2]], vec![vec![1, 2, 3]]);
        assert!(matches!(err, Err(Error::MalformedDiagram(_))));
        let err = PdCode::new(vec![[1, 3, 3, 1]], vec![vec![1, 2, 3]]);
        assert!(matches!(err, Err(Error::MalformedDiagram(_))));
    }

    #[test]
    fn hopf_signs() {
        let pd = hopf_positive();
        assert_eq!((0..2).map(|i| pd.crossing_sign(i)).collect::<Vec<_>>(), vec![1, 1]);
        let m = pd.mirror();
        assert_eq!((0..2).map(|i| m.crossing_sign(i)).collect::<Vec<_>>(), vec![-1, -1]);
        assert_eq!(pd.writhe(), 2);
    }

    #[test]
    fn kink_signs() {
        assert_eq!(kink(true).writhe(), 1);
        assert_eq!(kink(false).writhe(), -1);
    }

    #[test]
    fn writhe_is_additive_and_odd_under_mirror() {
        let corpus = [trefoil_right(), figure_eight(), hopf_positive(), torus_2n(5), torus_2n(-4), unknot()];
        for a in &corpus {
            assert_eq!(a.mirror().writhe(), -a.writhe());
            for b in &corpus {
                assert_eq!(a.disjoint_union(b).writhe(), a.writhe() + b.writhe());
            }
        }
    }

    #[test]
    fn reparse_preserves_orientation() {
        let corpus = [
            trefoil_right(),
            figure_eight(),
            hopf_positive(),
            torus_2n(-4),
            unlink(3),
            hopf_positive().cable_multi(&[2, 1]),
            trefoil_right().cable_multi(&[2]),
            kink(false).cable_multi(&[3]),
        ];
        for pd in corpus {
            let again = PdCode::new(pd.crossings().to_vec(), pd.components().to_vec()).unwrap();
            assert_eq!(again.oriented(), pd.oriented());
        }
    }

    #[test]
    fn linking_matrix_examples() {
        let u = FramedLinkDiagram::framed(unknot(), vec![1]).unwrap();
        assert_eq!(u.linking_matrix(), vec![vec![1]]);
        let h = FramedLinkDiagram::framed(hopf_positive(), vec![0, 0]).unwrap();
        assert_eq!(h.linking_matrix(), vec![vec![0, 1], vec![1, 0]]);
        let two = FramedLinkDiagram::framed(unlink(2), vec![1, 1]).unwrap();
        assert_eq!(two.linking_matrix(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn linking_matrix_is_symmetric_with_framing_diagonal() {
        let corpus = [
            hopf_positive().disjoint_union(&trefoil_right()),
            torus_2n(4),
            torus_2n(-6),
            hopf_positive().cable_multi(&[2, 3]),
        ];
        for pd in corpus {
            let n = pd.component_count();
            let framings: Vec<i64> = (0..n as i64).map(|i| i * 3 - 2).collect();
            let d = FramedLinkDiagram::framed(pd, framings.clone()).unwrap();
            let m = d.linking_matrix();
            for i in 0..n {
                assert_eq!(m[i][i], framings[i]);
                for j in 0..n {
                    assert_eq!(m[i][j], m[j][i]);
                }
            }
        }
        // (2, 2k) torus link: linking number k
        let t = FramedLinkDiagram::framed(torus_2n(6), vec![0, 0]).unwrap();
        assert_eq!(t.linking_matrix()[0][1], 3);
    }

    #[test]
    fn add_disjoint_unknot_examples() {
        let d = FramedLinkDiagram::blackboard(PdCode::empty()).add_disjoint_unknot(1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.linking_matrix(), vec![vec![1]]);

        let t = FramedLinkDiagram::framed(trefoil_left_standard(), vec![1]).unwrap();
        let t2 = t.add_disjoint_unknot(-1);
        assert_eq!(t2.component_count(), 2);
        assert_eq!(t2.signature(), t.signature() - 1);
        assert_eq!(&t2.pd().components()[0], &t.pd().components()[0]);
        assert_eq!(t2.pd().crossings(), t.pd().crossings());
    }

    #[test]
    fn cable_examples() {
        let two = FramedLinkDiagram::blackboard(unknot()).cable(0, 2);
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.pd().crossing_count(), 0);

        let t = FramedLinkDiagram::blackboard(trefoil_right());
        assert_eq!(t.cable(0, 1), t);
        assert_eq!(t.cable(0, 2).pd().crossing_count(), 12);
        assert_eq!(t.cable(0, 0).component_count(), 0);
    }

    #[test]
    fn cable_crossing_counts_scale() {
        let pd = hopf_positive().disjoint_union(&trefoil_right());
        for mults in [[0usize, 1, 2], [2, 2, 1], [3, 1, 0], [1, 3, 2]] {
            let cabled = pd.cable_multi(&mults);
            let expected: usize = (0..pd.crossing_count())
                .map(|i| {
                    let (u, o) = pd.strand_components(i);
                    mults[u] * mults[o]
                })
                .sum();
            assert_eq!(cabled.crossing_count(), expected);
            assert_eq!(pd.cabled_crossing_count(&mults), expected);
            assert_eq!(cabled.component_count(), mults.iter().sum::<usize>());
        }
    }

    #[test]
    fn cable_copies_link_by_blackboard_framing() {
        for (pd, w) in [(trefoil_right(), 3), (figure_eight(), 0), (kink(false), -1), (torus_2n(-5), -5)] {
            let d = FramedLinkDiagram::blackboard(pd).cable(0, 3);
            let m = d.linking_matrix();
            for i in 0..3 {
                assert_eq!(m[i][i], w);
                for j in 0..3 {
                    if i != j {
                        assert_eq!(m[i][j], w);
                    }
                }
            }
        }
    }

    #[test]
    fn colors_are_range_checked() {
        let d = FramedLinkDiagram::new(unlink(2), vec![0, 0], vec![Some(3), None]).unwrap();
        assert!(d.validate_colors(5).is_ok());
        assert!(matches!(d.validate_colors(3), Err(Error::InvalidColor { .. })));
    }

    #[test]
    fn signature_of_split_zero_component() {
        let base = FramedLinkDiagram::framed(trefoil_right(), vec![1]).unwrap();
        let plus = base.add_disjoint_unknot(0);
        assert_eq!(plus.signature(), base.signature());
        let mut m = plus.linking_matrix();
        m.iter_mut().for_each(|r| r.push(0));
        m.push(vec![0; 3]);
        assert_eq!(signature_exact(&m), base.signature());
    }
}
