//! Small named diagrams.

use super::{DiagramBuilder, OrientedCrossing, PdCode};

pub fn unknot() -> PdCode {
    unlink(1)
}

/// `n` crossingless circles.
pub fn unlink(n: usize) -> PdCode {
    PdCode::from_oriented(Vec::new(), (1..=n as u32).map(|a| vec![a]).collect())
}

/// One-crossing diagram of the unknot with writhe `+1` or `-1`.
pub fn kink(positive: bool) -> PdCode {
    let x = if positive { [1, 1, 2, 2] } else { [1, 2, 2, 1] };
    PdCode::new(vec![x], vec![vec![1, 2]]).expect("valid kink")
}

/// Hopf link with linking number `+1`.
pub fn hopf_positive() -> PdCode {
    PdCode::new(vec![[1, 3, 2, 4], [3, 1, 4, 2]], vec![vec![1, 2], vec![3, 4]]).expect("valid Hopf link")
}

pub fn hopf_negative() -> PdCode {
    hopf_positive().mirror()
}

/// Right-handed trefoil, writhe `+3`.
pub fn trefoil_right() -> PdCode {
    PdCode::new(vec![[4, 2, 5, 1], [6, 4, 1, 3], [2, 6, 3, 5]], vec![vec![1, 2, 3, 4, 5, 6]])
        .expect("valid trefoil")
}

/// Left-handed trefoil in its most common PD form, writhe `-3`.
pub fn trefoil_left_standard() -> PdCode {
    PdCode::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], vec![vec![1, 2, 3, 4, 5, 6]])
        .expect("valid trefoil")
}

pub fn figure_eight() -> PdCode {
    braid_closure(3, &[1, -2, 1, -2])
}

/// Closure of the 2-strand braid `sigma_1^n`: the `(2, n)` torus knot or link.
pub fn torus_2n(n: i32) -> PdCode {
    let word = vec![if n >= 0 { 1 } else { -1 }; n.unsigned_abs() as usize];
    braid_closure(2, &word)
}

/// Closure of a braid word on `strands` strands; generator `i` (1-based)
/// crosses strands `i` and `i + 1`, negative entries are inverses.
pub fn braid_closure(strands: usize, word: &[i32]) -> PdCode {
    assert!(strands >= 1);
    let mut b = DiagramBuilder::new();
    let init: Vec<u32> = (0..strands).map(|_| b.fresh()).collect();
    let mut cur = init.clone();
    for &g in word {
        let i = g.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "generator {g} out of range");
        let (left, right) = (i - 1, i);
        let (uo, oo) = (b.fresh(), b.fresh());
        if g > 0 {
            b.push(OrientedCrossing {
                under_in: cur[right],
                under_out: uo,
                over_in: cur[left],
                over_out: oo,
                positive: true,
            });
            cur[left] = uo;
            cur[right] = oo;
        } else {
            b.push(OrientedCrossing {
                under_in: cur[left],
                under_out: uo,
                over_in: cur[right],
                over_out: oo,
                positive: false,
            });
            cur[right] = uo;
            cur[left] = oo;
        }
    }
    for j in 0..strands {
        b.identify(cur[j], init[j]);
    }
    b.finish()
}
