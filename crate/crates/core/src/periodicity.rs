//! Congruence criteria for p-periodicity of links and homology spheres.
//!
//! Every criterion is a necessary condition: a failing test proves the link
//! or manifold is not p-periodic, a passing one proves nothing.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bracket::{bracket, jones, Poly};
use crate::cyclotomic::{is_prime, IntElem};
use crate::error::{Error, Result};
use crate::laurent::Var;
use crate::link::PdCode;
use crate::so3::So3Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketMode {
    /// `<L>(A) = A^(6w) <L>(A^-1)` in `Z/p[A]/(A^(4p) - 1)`.
    WithWrithe,
    /// `<L>(A) = <L>(A^-1)` in `Z/p[A]/(A^(2p) - 1)`.
    Framed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    Jones,
    Bracket(BracketMode),
    Manifold,
}

impl Criterion {
    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Jones => "jones",
            Criterion::Bracket(BracketMode::WithWrithe) => "bracket",
            Criterion::Bracket(BracketMode::Framed) => "bracket-framed",
            Criterion::Manifold => "manifold",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub criterion: Criterion,
    pub p: u64,
    /// Left side minus right side, coefficients reduced to `0..p`. For the
    /// manifold criterion this is `I - conj(I)`, the `j = 0` difference.
    pub difference: Poly,
    /// The quotient ring the difference lives in.
    pub ring: String,
    /// Phases `j` in `0..p` satisfying the manifold congruence.
    pub passing_j: Vec<u64>,
    /// Set when the tested value vanishes mod `p`, so every phase passes.
    pub degenerate: bool,
    pub verdict: Verdict,
}

impl PeriodicityReport {
    pub fn note(&self) -> String {
        match self.verdict {
            Verdict::Pass => "inconclusive (necessary condition satisfied)".to_string(),
            Verdict::Fail => format!("not {}-periodic", self.p),
        }
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// Image of an integer Laurent polynomial in `Z/p[x]/(x^n - 1)`, as a
/// polynomial with exponents in `0..n` and coefficients in `0..p`.
pub fn cyclic_residue(poly: &Poly, n: i64, p: u64) -> Poly {
    let pb = BigInt::from(p);
    let mut v = vec![BigInt::zero(); n as usize];
    for (e, c) in poly.terms() {
        v[e.rem_euclid(n) as usize] += c;
    }
    Poly::from_terms(poly.var(), v.into_iter().enumerate().map(|(e, c)| (e as i64, c.mod_floor(&pb))))
}

fn link_report(criterion: Criterion, p: u64, difference: Poly, ring: String) -> PeriodicityReport {
    let verdict = if difference.is_zero() { Verdict::Pass } else { Verdict::Fail };
    PeriodicityReport { criterion, p, difference, ring, passing_j: Vec::new(), degenerate: false, verdict }
}

/// `V(t) = V(t^-1)` mod `(p, t^p - 1)`, tested in `s = t^(1/2)`.
pub fn jones_periodicity_test(pd: &PdCode, p: u64, cap: usize) -> Result<PeriodicityReport> {
    require_odd_prime(p)?;
    let v = jones(pd, cap)?;
    let diff = cyclic_residue(&(&v - &v.invert_var()), 2 * p as i64, p);
    Ok(link_report(Criterion::Jones, p, diff, format!("Z/{p}[s]/(s^{} - 1), t = s^2", 2 * p)))
}

pub fn bracket_periodicity_test(pd: &PdCode, p: u64, mode: BracketMode, cap: usize) -> Result<PeriodicityReport> {
    require_odd_prime(p)?;
    let b = bracket(pd, cap)?;
    let (rhs, n) = match mode {
        BracketMode::WithWrithe => (b.invert_var().shift(6 * pd.writhe()), 4 * p as i64),
        BracketMode::Framed => (b.invert_var(), 2 * p as i64),
    };
    let diff = cyclic_residue(&(&b - &rhs), n, p);
    Ok(link_report(Criterion::Bracket(mode), p, diff, format!("Z/{p}[A]/(A^{n} - 1)")))
}

/// `I = A^(2j) conj(I)` mod `p` in `Z/p[A]/Phi_{2p}`, for each `j` in `0..p`.
pub fn manifold_periodicity_test(value: &IntElem, p: u64) -> Result<PeriodicityReport> {
    require_odd_prime(p)?;
    if value.ring().order() != 2 * p || value.ring().characteristic() != 0 {
        return Err(Error::InvalidInput(format!("value must lie in Z[A]/Phi_{{{}}}", 2 * p)));
    }
    let r = value.mod_p_reduce(p);
    let conj = r.galois_conj();
    let passing_j: Vec<u64> = (0..p).filter(|&j| r.sub(&conj.mul_x_pow(2 * j as i64)).is_zero()).collect();
    let d = r.sub(&conj);
    let difference = Poly::from_terms(
        Var::A,
        d.coeffs().iter().enumerate().map(|(e, &c)| (e as i64, BigInt::from(c))),
    );
    let verdict = if passing_j.is_empty() { Verdict::Fail } else { Verdict::Pass };
    Ok(PeriodicityReport {
        criterion: Criterion::Manifold,
        p,
        difference,
        ring: format!("Z/{p}[A]/Phi_{{{}}}", 2 * p),
        passing_j,
        degenerate: r.is_zero(),
        verdict,
    })
}

pub const GRID_PRIMES: [u64; 6] = [5, 7, 11, 13, 17, 19];

/// Odd `n` with `3 <= |n| <= 19`.
pub fn grid_ns() -> Vec<i64> {
    (3..=19).step_by(2).flat_map(|n| [-n, n]).collect()
}

/// Primes `p` with `lo <= p <= hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

/// `M_n` is a `p`-fold cyclic branched cover (hence `p`-periodic) when `p`
/// divides `n` or `2n - 1`.
pub fn divisibility_flag(n: i64, p: u64) -> bool {
    let p = p as i64;
    n % p == 0 || (2 * n - 1) % p == 0
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridCell {
    pub n: i64,
    pub p: u64,
    pub invariant: IntElem,
    pub divisibility: bool,
    pub report: PeriodicityReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSummary {
    pub cells: Vec<GridCell>,
}

impl GridSummary {
    pub fn total(&self) -> usize {
        self.cells.len()
    }

    pub fn passing(&self) -> usize {
        self.cells.iter().filter(|c| c.report.verdict.is_pass()).count()
    }

    pub fn divisibility_pairs(&self) -> usize {
        self.cells.iter().filter(|c| c.divisibility).count()
    }

    pub fn divisibility_passes(&self) -> usize {
        self.cells.iter().filter(|c| c.divisibility && c.report.verdict.is_pass()).count()
    }

    /// Passing pairs not explained by the divisibility condition.
    pub fn exceptional(&self) -> Vec<(i64, u64)> {
        self.cells
            .iter()
            .filter(|c| !c.divisibility && c.report.verdict.is_pass())
            .map(|c| (c.n, c.p))
            .collect()
    }
}

fn grid_order(n: i64, p: u64) -> (i64, i64, u64) {
    (n.abs(), n.signum(), p)
}

/// Brieskorn invariant and manifold test for every `(n, p)`; cells are sorted
/// by `(|n|, sign of n, p)`.
pub fn grid_experiment(primes: &[u64], ns: &[i64]) -> Result<GridSummary> {
    let contexts = primes.iter().map(|&p| So3Context::new(p)).collect::<Result<Vec<_>>>()?;
    let mut jobs: Vec<(i64, usize)> = ns.iter().flat_map(|&n| (0..primes.len()).map(move |k| (n, k))).collect();
    jobs.sort_by_key(|&(n, k)| grid_order(n, primes[k]));
    let cells = jobs
        .par_iter()
        .map(|&(n, k)| {
            let ctx = &contexts[k];
            let p = ctx.p();
            let value = ctx.brieskorn_invariant(n)?;
            let invariant = value.integral().expect("Brieskorn values are integral").clone();
            let report = manifold_periodicity_test(&invariant, p)?;
            Ok(GridCell { n, p, invariant, divisibility: divisibility_flag(n, p), report })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GridSummary { cells })
}

/// Manifold test on the Poincare sphere `M_3` at each prime.
pub fn poincare_scan(primes: &[u64]) -> Result<Vec<GridCell>> {
    primes
        .par_iter()
        .map(|&p| {
            let ctx = So3Context::new(p)?;
            let invariant = ctx.brieskorn_invariant(3)?.integral().expect("integral").clone();
            let report = manifold_periodicity_test(&invariant, p)?;
            Ok(GridCell { n: 3, p, invariant, divisibility: divisibility_flag(3, p), report })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::DEFAULT_CROSSING_CAP as CAP;
    use crate::link::catalog::*;
    use proptest::prelude::*;

    #[test]
    fn unknot_passes_everything() {
        for p in [3u64, 5, 7, 11] {
            assert!(jones_periodicity_test(&unknot(), p, CAP).unwrap().verdict.is_pass());
            for mode in [BracketMode::WithWrithe, BracketMode::Framed] {
                assert!(bracket_periodicity_test(&unknot(), p, mode, CAP).unwrap().verdict.is_pass());
            }
        }
    }

    #[test]
    fn torus_knots_pass_at_their_period() {
        for p in [5u64, 7] {
            let t = torus_2n(p as i32);
            assert!(jones_periodicity_test(&t, p, CAP).unwrap().verdict.is_pass());
            assert!(bracket_periodicity_test(&t, p, BracketMode::WithWrithe, CAP).unwrap().verdict.is_pass());
        }
    }

    #[test]
    fn trefoil_fails_at_five() {
        for pd in [trefoil_right(), trefoil_left_standard()] {
            let j = jones_periodicity_test(&pd, 5, CAP).unwrap();
            assert_eq!(j.verdict, Verdict::Fail);
            assert_eq!(j.note(), "not 5-periodic");
            let b = bracket_periodicity_test(&pd, 5, BracketMode::WithWrithe, CAP).unwrap();
            assert_eq!(b.verdict, Verdict::Fail);
        }
    }

    #[test]
    fn framed_pass_follows_from_writhe_pass_when_writhe_divisible() {
        let corpus = [torus_2n(5), torus_2n(-5), torus_2n(7), figure_eight(), unlink(2), torus_2n(10)];
        for pd in corpus {
            for p in [5u64, 7] {
                if pd.writhe() % p as i64 != 0 {
                    continue;
                }
                let w = bracket_periodicity_test(&pd, p, BracketMode::WithWrithe, CAP).unwrap();
                let f = bracket_periodicity_test(&pd, p, BracketMode::Framed, CAP).unwrap();
                if w.verdict.is_pass() {
                    assert!(f.verdict.is_pass());
                }
            }
        }
    }

    #[test]
    fn poincare_phases() {
        let ctx = So3Context::new(5).unwrap();
        let i5 = ctx.brieskorn_invariant(3).unwrap();
        let r = manifold_periodicity_test(i5.integral().unwrap(), 5).unwrap();
        assert_eq!(r.passing_j, vec![4]);
        assert_eq!(r.note(), "inconclusive (necessary condition satisfied)");
        let ctx = So3Context::new(7).unwrap();
        let i7 = ctx.brieskorn_invariant(3).unwrap();
        let r = manifold_periodicity_test(i7.integral().unwrap(), 7).unwrap();
        assert!(r.passing_j.is_empty());
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn s3_passes_with_phase_zero() {
        for p in [5u64, 7, 11] {
            let ctx = So3Context::new(p).unwrap();
            let r = manifold_periodicity_test(&ctx.ring2p().one(), p).unwrap();
            assert_eq!(r.passing_j, vec![0]);
        }
    }

    #[test]
    fn zero_mod_p_is_degenerate() {
        let ctx = So3Context::new(5).unwrap();
        let v = ctx.ring2p().one().scale(&BigInt::from(5));
        let r = manifold_periodicity_test(&v, 5).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.passing_j, (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn p_three_always_passes() {
        let ctx = So3Context::new(3).unwrap();
        for n in [3, 5, 7, -3, -5, 9] {
            let v = ctx.brieskorn_invariant(n).unwrap();
            assert!(manifold_periodicity_test(v.integral().unwrap(), 3).unwrap().verdict.is_pass());
        }
    }

    #[test]
    fn wrong_ring_is_rejected() {
        let ctx = So3Context::new(7).unwrap();
        assert!(manifold_periodicity_test(&ctx.ring2p().one(), 5).is_err());
        assert_eq!(manifold_periodicity_test(&ctx.ring2p().one(), 9).unwrap_err(), Error::NotOddPrime(9));
    }

    #[test]
    fn divisibility_pairs_always_pass() {
        let g = grid_experiment(&[5, 7], &[5, -5, 7, -7, 3, -3, 11, -11]).unwrap();
        for c in &g.cells {
            if c.divisibility {
                assert!(c.report.verdict.is_pass(), "n={} p={}", c.n, c.p);
            }
        }
        let order: Vec<(i64, u64)> = g.cells.iter().map(|c| (c.n, c.p)).collect();
        assert_eq!(&order[..4], &[(-3, 5), (-3, 7), (3, 5), (3, 7)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn at_most_one_phase_unless_degenerate(
            coeffs in prop::collection::vec(-6i64..=6, 6),
            p in prop::sample::select(vec![5u64, 7]),
        ) {
            let ctx = So3Context::new(p).unwrap();
            let v = ctx.ring2p().from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
            let r = manifold_periodicity_test(&v, p).unwrap();
            if r.degenerate {
                prop_assert_eq!(r.passing_j.len() as u64, p);
            } else {
                prop_assert!(r.passing_j.len() <= 1);
            }
        }

        #[test]
        fn symmetrized_values_pass(
            coeffs in prop::collection::vec(-6i64..=6, 6),
            j in 0u64..7,
        ) {
            // I = x + A^(2j) conj(x) satisfies the congruence at phase j.
            let p = 7;
            let ctx = So3Context::new(p).unwrap();
            let x = ctx.ring2p().from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
            let v = x.add(&x.galois_conj().mul_x_pow(2 * j as i64));
            let r = manifold_periodicity_test(&v, p).unwrap();
            prop_assert!(r.passing_j.contains(&j));
        }
    }
}
