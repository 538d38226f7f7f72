//! Kauffman bracket, Jones polynomial and colored (cabled) brackets.
//!
//! Two normalizations are used: `<L>` with a single circle equal to 1, and the
//! renormalized `[L] = delta * <L>` with `[empty] = 1`, where
//! `delta = -A^2 - A^-2`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::link::{FramedLinkDiagram, PdCode};

pub type Poly = LaurentPoly<BigInt>;

pub const DEFAULT_CROSSING_CAP: usize = 26;

/// Below this many crossings the state sum runs on one thread.
const PARALLEL_THRESHOLD: usize = 16;

pub fn delta() -> Poly {
    Poly::from_terms(Var::A, [(2, BigInt::from(-1)), (-2, BigInt::from(-1))])
}

fn a_mono(exp: i64, c: i64) -> Poly {
    Poly::monomial(Var::A, exp, BigInt::from(c))
}

fn check_cap(crossings: usize, cap: usize) -> Result<()> {
    if crossings > cap {
        return Err(Error::TooManyCrossings { count: crossings, cap });
    }
    Ok(())
}

/// Number of states with a given (A-smoothing count, loop count).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateHistogram {
    crossings: usize,
    counts: Vec<Vec<u64>>,
}

impl StateHistogram {
    fn new(crossings: usize, max_loops: usize) -> Self {
        Self { crossings, counts: vec![vec![0; max_loops + 1]; crossings + 1] }
    }

    fn merge(mut self, other: Self) -> Self {
        for (row, orow) in self.counts.iter_mut().zip(other.counts) {
            for (c, o) in row.iter_mut().zip(orow) {
                *c += o;
            }
        }
        self
    }

    /// `sum_states A^(#A - #B) * delta^(loops + extra_loops)`.
    fn evaluate(&self, extra_loops: usize) -> Poly {
        let max_loops = self.counts.first().map_or(0, Vec::len) + extra_loops;
        let d = delta();
        let mut dpow = vec![Poly::one(Var::A)];
        for _ in 1..max_loops {
            let next = dpow.last().unwrap() * &d;
            dpow.push(next);
        }
        let mut out = Poly::zero(Var::A);
        for (a, row) in self.counts.iter().enumerate() {
            let exp = 2 * a as i64 - self.crossings as i64;
            for (loops, &n) in row.iter().enumerate() {
                if n > 0 {
                    out = &out + &dpow[loops + extra_loops].shift(exp).scale(&BigInt::from(n));
                }
            }
        }
        out
    }
}

struct Smoothings {
    arcs: usize,
    /// Per crossing: the two arc pairs joined by the A- and by the B-smoothing.
    a_pairs: Vec<[(u16, u16); 2]>,
    b_pairs: Vec<[(u16, u16); 2]>,
}

impl Smoothings {
    fn new(pd: &PdCode) -> Self {
        let mut index: HashMap<u32, u16> = HashMap::new();
        for x in pd.crossings() {
            for &a in x {
                let n = index.len() as u16;
                index.entry(a).or_insert(n);
            }
        }
        let ix = |a: u32| index[&a];
        let a_pairs = pd.crossings().iter().map(|&[a, b, c, d]| [(ix(a), ix(b)), (ix(c), ix(d))]).collect();
        let b_pairs = pd.crossings().iter().map(|&[a, b, c, d]| [(ix(a), ix(d)), (ix(b), ix(c))]).collect();
        Self { arcs: index.len(), a_pairs, b_pairs }
    }

    fn loops(&self, state: u64, parent: &mut [u16]) -> usize {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u16;
        }
        fn find(parent: &mut [u16], mut x: u16) -> u16 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        let mut merges = 0;
        for i in 0..self.a_pairs.len() {
            let pairs = if state >> i & 1 == 1 { &self.a_pairs[i] } else { &self.b_pairs[i] };
            for &(u, v) in pairs {
                let (ru, rv) = (find(parent, u), find(parent, v));
                if ru != rv {
                    parent[ru as usize] = rv;
                    merges += 1;
                }
            }
        }
        self.arcs - merges
    }

    fn histogram(&self, states: std::ops::Range<u64>) -> StateHistogram {
        let n = self.a_pairs.len();
        let mut h = StateHistogram::new(n, self.arcs.max(1));
        let mut parent = vec![0u16; self.arcs];
        for s in states {
            let loops = self.loops(s, &mut parent);
            h.counts[s.count_ones() as usize][loops] += 1;
        }
        h
    }
}

/// Histogram of all `2^c` smoothing states of the crossings (free loops
/// excluded).
pub fn state_histogram(pd: &PdCode, cap: usize) -> Result<StateHistogram> {
    let n = pd.crossing_count();
    check_cap(n, cap)?;
    let sm = Smoothings::new(pd);
    let total = 1u64 << n;
    if n < PARALLEL_THRESHOLD {
        return Ok(sm.histogram(0..total));
    }
    let chunk = 1u64 << (PARALLEL_THRESHOLD - 4);
    let hist = (0..total / chunk)
        .into_par_iter()
        .map(|k| sm.histogram(k * chunk..(k + 1) * chunk))
        .reduce(|| StateHistogram::new(n, sm.arcs.max(1)), StateHistogram::merge);
    Ok(hist)
}

/// `[L]`: state sum with `delta^loops`; `[empty] = 1`.
pub fn bracket_renormalized(pd: &PdCode, cap: usize) -> Result<Poly> {
    let hist = state_histogram(pd, cap)?;
    Ok(hist.evaluate(pd.free_loop_count()))
}

/// `<L>`: state sum with `delta^(loops - 1)`, so a single circle is 1.
pub fn bracket(pd: &PdCode, cap: usize) -> Result<Poly> {
    if pd.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let hist = state_histogram(pd, cap)?;
    let free = pd.free_loop_count();
    if free > 0 {
        return Ok(hist.evaluate(free - 1));
    }
    // Every state has at least one loop; shift the loop count down by one.
    let mut shifted = hist.clone();
    for row in shifted.counts.iter_mut() {
        debug_assert_eq!(row[0], 0);
        row.remove(0);
        row.push(0);
    }
    Ok(shifted.evaluate(0))
}

/// `[L]` by recursive resolution of one crossing at a time, memoized on the
/// residual diagram. Independent of the state-sum code path.
pub fn bracket_renormalized_skein(pd: &PdCode) -> Poly {
    let mut memo: HashMap<Vec<[u32; 4]>, Poly> = HashMap::new();
    let d = delta();
    skein_rec(pd.crossings().to_vec(), &mut memo, &d) * d.pow(pd.free_loop_count() as u32)
}

fn canonical(crossings: &[[u32; 4]]) -> Vec<[u32; 4]> {
    let mut names: HashMap<u32, u32> = HashMap::new();
    crossings
        .iter()
        .map(|x| {
            x.map(|a| {
                let n = names.len() as u32;
                *names.entry(a).or_insert(n)
            })
        })
        .collect()
}

fn skein_rec(crossings: Vec<[u32; 4]>, memo: &mut HashMap<Vec<[u32; 4]>, Poly>, d: &Poly) -> Poly {
    if crossings.is_empty() {
        return Poly::one(Var::A);
    }
    let key = canonical(&crossings);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let [a, b, c, dd] = crossings[0];
    let rest = &crossings[1..];
    let mut total = Poly::zero(Var::A);
    for (pairs, exp) in [([(a, b), (c, dd)], 1), ([(a, dd), (b, c)], -1)] {
        let mut remaining = rest.to_vec();
        let mut pending = pairs.to_vec();
        let mut loops = 0u32;
        while let Some((u, v)) = pending.pop() {
            if u == v {
                loops += 1;
                continue;
            }
            for x in remaining.iter_mut() {
                for slot in x.iter_mut() {
                    if *slot == v {
                        *slot = u;
                    }
                }
            }
            for pr in pending.iter_mut() {
                if pr.0 == v {
                    pr.0 = u;
                }
                if pr.1 == v {
                    pr.1 = u;
                }
            }
        }
        let sub = skein_rec(remaining, memo, d);
        total = &total + &(&sub * &d.pow(loops)).shift(exp);
    }
    memo.insert(key, total.clone());
    total
}

/// `(-A^3)^(-w) <L>` rewritten in `s = t^(1/2)`, where `A = s^(-1/2)`.
pub fn jones(pd: &PdCode, cap: usize) -> Result<Poly> {
    let b = bracket(pd, cap)?;
    jones_from_bracket(&b, pd.writhe())
}

pub fn jones_from_bracket(b: &Poly, writhe: i64) -> Result<Poly> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = b.shift(-3 * writhe).scale(&BigInt::from(sign));
    if let Some((e, _)) = f.terms().find(|(e, _)| e % 2 != 0) {
        return Err(Error::NonIntegralExponent(e));
    }
    Ok(f.map_exponents(Var::S, |e| -e / 2))
}

/// Coefficients `c_{i,m}` of `e_i = sum_m c_{i,m} z^m`, indexed by `m`.
pub fn chebyshev_coeffs(i: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    if i == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..i {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (m, c) in cur.iter().enumerate() {
            next[m + 1] += c;
        }
        for (m, c) in prev.iter().enumerate() {
            next[m] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// `e_i` as a polynomial in `z`.
pub fn chebyshev_poly(i: usize) -> Poly {
    Poly::from_terms(Var::Z, chebyshev_coeffs(i).into_iter().enumerate().map(|(m, c)| (m as i64, c)))
}

/// Eigenvalue of a positive full twist on `e_i`: `(-1)^i A^(i(i+2))`.
pub fn twist_eigenvalue(i: usize) -> Poly {
    let i = i as i64;
    a_mono(i * (i + 2), if i % 2 == 0 { 1 } else { -1 })
}

/// `mu^n` for a signed power of a monomial twist eigenvalue.
pub(crate) fn twist_power(i: usize, n: i64) -> Poly {
    let i = i as i64;
    let sign = if (i * n) % 2 == 0 { 1 } else { -1 };
    a_mono(i * (i + 2) * n, sign)
}

/// Memo of renormalized brackets keyed by the canonical PD serialization.
/// Safe to share across threads; entries are only ever inserted.
#[derive(Debug, Default)]
pub struct BracketCache {
    map: Mutex<HashMap<String, Poly>>,
}

impl BracketCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bracket_renormalized(&self, pd: &PdCode, cap: usize) -> Result<Poly> {
        let key = pd.canonical_key();
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = bracket_renormalized(pd, cap)?;
        self.map.lock().unwrap().entry(key).or_insert_with(|| v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `sum_m prod_c weights[c][m_c] * [cable(pd, m)]` over all multiplicity
/// vectors `m`, skipping zero weights.
pub fn cabled_sum(pd: &PdCode, weights: &[Vec<Poly>], cap: usize, cache: &BracketCache) -> Result<Poly> {
    assert_eq!(weights.len(), pd.component_count());
    let supports: Vec<Vec<usize>> =
        weights.iter().map(|w| (0..w.len()).filter(|&m| !w[m].is_zero()).collect()).collect();
    if supports.iter().any(Vec::is_empty) {
        return Ok(Poly::zero(Var::A));
    }
    let mut vectors: Vec<Vec<usize>> = vec![Vec::new()];
    for s in &supports {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                s.iter().map(move |&m| {
                    let mut v = v.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
    }
    for v in &vectors {
        check_cap(pd.cabled_crossing_count(v), cap)?;
    }
    let mut total = Poly::zero(Var::A);
    for v in vectors {
        let coeff = v.iter().enumerate().fold(Poly::one(Var::A), |acc, (c, &m)| &acc * &weights[c][m]);
        let cabled = pd.cable_multi(&v);
        let b = cache.bracket_renormalized(&cabled, cap)?;
        total = &total + &(&coeff * &b);
    }
    Ok(total)
}

/// `[L]` with each component replaced by `e_{color}` and corrected from its
/// blackboard framing to its stated framing by twist eigenvalues.
pub fn colored_bracket(d: &FramedLinkDiagram, cap: usize, cache: &BracketCache) -> Result<Poly> {
    let pd = d.pd();
    let mut weights = Vec::with_capacity(pd.component_count());
    for c in 0..pd.component_count() {
        let i = d.colors()[c].ok_or_else(|| Error::InvalidInput(format!("component {c} has no color")))? as usize;
        let twist = twist_power(i, d.framings()[c] - pd.self_writhe(c));
        weights.push(chebyshev_coeffs(i).iter().map(|cm| twist.scale(cm)).collect());
    }
    cabled_sum(pd, &weights, cap, cache)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::catalog::*;

    const CAP: usize = DEFAULT_CROSSING_CAP;

    fn p(terms: &[(i64, i64)]) -> Poly {
        Poly::from_terms(Var::A, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn s(terms: &[(i64, i64)]) -> Poly {
        p(terms).with_var(Var::S)
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&unknot(), CAP).unwrap(), p(&[(0, 1)]));
        assert_eq!(bracket(&unlink(2), CAP).unwrap(), delta());
        assert_eq!(bracket(&hopf_positive(), CAP).unwrap(), p(&[(4, -1), (-4, -1)]));
        assert_eq!(bracket(&kink(true), CAP).unwrap(), p(&[(3, -1)]));
        assert_eq!(bracket(&kink(false), CAP).unwrap(), p(&[(-3, -1)]));
        assert_eq!(bracket(&trefoil_right(), CAP).unwrap(), p(&[(-7, 1), (-3, -1), (5, -1)]));
        assert_eq!(bracket(&PdCode::empty(), CAP), Err(Error::EmptyDiagram));
    }

    #[test]
    fn renormalized_examples() {
        assert_eq!(bracket_renormalized(&PdCode::empty(), CAP).unwrap(), p(&[(0, 1)]));
        assert_eq!(bracket_renormalized(&unknot(), CAP).unwrap(), delta());
        assert_eq!(
            bracket_renormalized(&hopf_positive(), CAP).unwrap(),
            &delta() * &p(&[(4, -1), (-4, -1)])
        );
    }

    #[test]
    fn cap_is_enforced() {
        let t = torus_2n(9);
        assert_eq!(bracket(&t, 8), Err(Error::TooManyCrossings { count: 9, cap: 8 }));
    }

    #[test]
    fn parallel_state_sum_matches_skein() {
        let pd = torus_2n(17);
        assert_eq!(bracket_renormalized(&pd, CAP).unwrap(), bracket_renormalized_skein(&pd));
    }

    #[test]
    fn jones_examples() {
        assert_eq!(jones(&unknot(), CAP).unwrap(), s(&[(0, 1)]));
        assert_eq!(jones(&trefoil_right(), CAP).unwrap(), s(&[(2, 1), (6, 1), (8, -1)]));
        assert_eq!(jones(&hopf_positive(), CAP).unwrap(), s(&[(1, -1), (5, -1)]));
        assert_eq!(jones(&kink(true), CAP).unwrap(), s(&[(0, 1)]));
    }

    #[test]
    fn jones_skein_relation_on_hopf_triple() {
        // L+ = positive Hopf link, L- = its one-crossing switch (2-component
        // unlink), L0 = smoothing (unknot).
        let vp = jones(&hopf_positive(), CAP).unwrap();
        let vm = jones(&unlink(2), CAP).unwrap();
        let v0 = jones(&unknot(), CAP).unwrap();
        let lhs = &vp.shift(-2) - &vm.shift(2);
        let rhs = &s(&[(1, 1), (-1, -1)]) * &v0;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chebyshev_examples() {
        let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(chebyshev_coeffs(0), ints(&[1]));
        assert_eq!(chebyshev_coeffs(1), ints(&[0, 1]));
        assert_eq!(chebyshev_coeffs(2), ints(&[-1, 0, 1]));
        assert_eq!(chebyshev_coeffs(4), ints(&[1, 0, -3, 0, 1]));
        for i in 0..12 {
            let c = chebyshev_coeffs(i);
            assert_eq!(c.len(), i + 1);
            assert!(c[i].is_one());
            for (m, cm) in c.iter().enumerate() {
                if (i + m) % 2 == 1 {
                    assert!(cm.is_zero());
                }
            }
        }
    }

    #[test]
    fn colored_unknot_gives_quantum_dimension() {
        let cache = BracketCache::new();
        for i in 0..=6u32 {
            let d = FramedLinkDiagram::new(unknot(), vec![0], vec![Some(i)]).unwrap();
            let expected = Poly::from_terms(
                Var::A,
                (0..=i as i64).map(|t| (2 * i as i64 - 4 * t, BigInt::from(if i % 2 == 0 { 1 } else { -1 }))),
            );
            assert_eq!(colored_bracket(&d, CAP, &cache).unwrap(), expected, "color {i}");
        }
    }

    #[test]
    fn twist_factor_matches_kinked_diagram() {
        let cache = BracketCache::new();
        for i in 0..=3u32 {
            let flat = FramedLinkDiagram::new(unknot(), vec![0], vec![Some(i)]).unwrap();
            let framed = FramedLinkDiagram::new(unknot(), vec![1], vec![Some(i)]).unwrap();
            let kinked = FramedLinkDiagram::new(kink(true), vec![1], vec![Some(i)]).unwrap();
            let base = colored_bracket(&flat, CAP, &cache).unwrap();
            let expected = &twist_eigenvalue(i as usize) * &base;
            assert_eq!(colored_bracket(&framed, CAP, &cache).unwrap(), expected);
            assert_eq!(colored_bracket(&kinked, CAP, &cache).unwrap(), expected, "color {i}");
        }
    }

    #[test]
    fn color_one_at_blackboard_framing_is_plain_bracket() {
        let cache = BracketCache::new();
        for pd in [trefoil_right(), hopf_positive(), figure_eight(), torus_2n(-4)] {
            let d = FramedLinkDiagram::blackboard(pd.clone());
            let n = d.component_count();
            let d = d.with_colors(vec![Some(1); n]).unwrap();
            assert_eq!(colored_bracket(&d, CAP, &cache).unwrap(), bracket_renormalized(&pd, CAP).unwrap());
        }
    }

    #[test]
    fn cabled_sum_respects_cap() {
        let cache = BracketCache::new();
        let d = FramedLinkDiagram::new(trefoil_right(), vec![3], vec![Some(3)]).unwrap();
        assert!(matches!(colored_bracket(&d, 20, &cache), Err(Error::TooManyCrossings { count: 27, cap: 20 })));
    }
}
