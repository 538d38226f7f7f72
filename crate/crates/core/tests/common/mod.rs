#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use so3period::bracket::Poly;
use so3period::laurent::Var;
use so3period::link::catalog::*;
use so3period::link::{OrientedCrossing, PdCode};

pub fn s_poly(terms: &[(i64, i64)]) -> Poly {
    Poly::from_terms(Var::S, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

pub fn a_poly(terms: &[(i64, i64)]) -> Poly {
    Poly::from_terms(Var::A, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

/// Diagrams with at most 8 crossings.
pub fn small_corpus() -> Vec<(String, PdCode)> {
    let mut v: Vec<(String, PdCode)> = vec![
        ("unknot".into(), unknot()),
        ("unlink2".into(), unlink(2)),
        ("unlink3".into(), unlink(3)),
        ("kink+".into(), kink(true)),
        ("kink-".into(), kink(false)),
        ("hopf+".into(), hopf_positive()),
        ("hopf-".into(), hopf_negative()),
        ("trefoil-right".into(), trefoil_right()),
        ("trefoil-left".into(), trefoil_left_standard()),
        ("figure-eight".into(), figure_eight()),
        ("hopf-cable-2-1".into(), hopf_positive().cable_multi(&[2, 1])),
        ("hopf-cable-2-2".into(), hopf_positive().cable_multi(&[2, 2])),
        ("kink-cable-2+".into(), kink(true).cable_multi(&[2])),
        ("hopf-cable-1-3".into(), hopf_negative().cable_multi(&[1, 3])),
        ("kink-cable-2".into(), kink(false).cable_multi(&[2])),
        ("hopf+trefoil".into(), hopf_positive().disjoint_union(&trefoil_right())),
        ("3-braid-1-2-1-2".into(), braid_closure(3, &[1, 2, 1, 2])),
        ("3-braid-1-1-2-m1-2".into(), braid_closure(3, &[1, 1, 2, -1, 2])),
        ("4-braid-1-m2-3-m2".into(), braid_closure(4, &[1, -2, 3, -2])),
        ("3-braid-borromean".into(), braid_closure(3, &[1, -2, 1, -2, 1, -2])),
    ];
    for n in -7..=7 {
        v.push((format!("torus(2,{n})"), torus_2n(n)));
    }
    v
}

fn descend_jones(crossings: Vec<OrientedCrossing>, free: usize) -> Poly {
    // entry[arc] = (crossing, entered as under)
    let mut entry: HashMap<u32, (usize, bool)> = HashMap::new();
    for (i, x) in crossings.iter().enumerate() {
        entry.insert(x.under_in, (i, true));
        entry.insert(x.over_in, (i, false));
    }
    let mut arcs: Vec<u32> = entry.keys().copied().collect();
    arcs.sort_unstable();
    let mut seen_arc: HashMap<u32, bool> = HashMap::new();
    let mut seen_crossing = vec![false; crossings.len()];
    let mut components = free;
    for &start in &arcs {
        if seen_arc.contains_key(&start) {
            continue;
        }
        components += 1;
        let mut a = start;
        loop {
            seen_arc.insert(a, true);
            let (i, under) = entry[&a];
            if !seen_crossing[i] {
                seen_crossing[i] = true;
                if under {
                    return skein_step(crossings, free, i);
                }
            }
            let x = &crossings[i];
            a = if under { x.under_out } else { x.over_out };
            if a == start {
                break;
            }
        }
    }
    // Descending diagram: an unlink.
    let d = s_poly(&[(1, -1), (-1, -1)]);
    d.pow(components as u32 - 1)
}

fn skein_step(crossings: Vec<OrientedCrossing>, free: usize, i: usize) -> Poly {
    let x = crossings[i];
    let mut switched = crossings.clone();
    switched[i] = OrientedCrossing {
        under_in: x.over_in,
        under_out: x.over_out,
        over_in: x.under_in,
        over_out: x.under_out,
        positive: !x.positive,
    };
    let v_switched = descend_jones(switched, free);

    // Oriented smoothing: under_in continues into over_out, over_in into
    // under_out.
    let mut rest: Vec<OrientedCrossing> = crossings.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, c)| *c).collect();
    let rename = |rest: &mut Vec<OrientedCrossing>, from: u32, to: u32| {
        for c in rest.iter_mut() {
            for slot in [&mut c.under_in, &mut c.under_out, &mut c.over_in, &mut c.over_out] {
                if *slot == from {
                    *slot = to;
                }
            }
        }
    };
    rename(&mut rest, x.over_out, x.under_in);
    let oi = if x.over_in == x.over_out { x.under_in } else { x.over_in };
    rename(&mut rest, x.under_out, oi);
    let used = |a: u32| rest.iter().any(|c| c.under_in == a || c.over_in == a);
    let mut new_free = free;
    let mut closed = vec![x.under_in];
    if oi != x.under_in {
        closed.push(oi);
    }
    for a in closed {
        if !used(a) {
            new_free += 1;
        }
    }
    let v0 = descend_jones(rest, new_free);

    if x.positive {
        // V+ = s^4 V- + (s^3 - s) V0
        &v_switched.shift(4) + &(&s_poly(&[(3, 1), (1, -1)]) * &v0)
    } else {
        // V- = s^-4 V+ - (s^-1 - s^-3) V0
        &v_switched.shift(-4) - &(&s_poly(&[(-1, 1), (-3, -1)]) * &v0)
    }
}

/// Jones polynomial in `s = t^(1/2)` from the oriented skein relation alone,
/// switching crossings until the diagram is descending.
pub fn jones_by_skein(pd: &PdCode) -> Poly {
    descend_jones(pd.oriented().to_vec(), pd.free_loop_count())
}
