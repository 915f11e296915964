//! Shared fixtures: the named toric inputs, random smooth polygons and a
//! brute-force curve-ratio oracle for blown-up planes.
#![allow(dead_code)]

use num_rational::BigRational;
use okounkov_core::toric::{DelzantPolytope, ToricInput};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn square() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]
}

pub fn simplex() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![1, 0], vec![0, 1]]
}

pub fn toric(vs: &[Vec<i64>], chosen: &[usize]) -> ToricInput {
    ToricInput::new(DelzantPolytope::from_int_vertices(vs).unwrap(), chosen.to_vec()).unwrap()
}

/// The hand-picked inputs, labelled.
pub fn named_corpus() -> Vec<(String, ToricInput)> {
    let mut out = vec![
        ("square/one".to_string(), toric(&square(), &[0])),
        ("square/opposite".to_string(), toric(&square(), &[0, 2])),
        ("square/adjacent".to_string(), toric(&square(), &[0, 1])),
        ("square/all".to_string(), toric(&square(), &[0, 1, 2, 3])),
        ("simplex/one".to_string(), toric(&simplex(), &[0])),
        ("simplex/two".to_string(), toric(&simplex(), &[0, 1])),
        ("simplex/all".to_string(), toric(&simplex(), &[0, 1, 2])),
    ];
    let hirzebruch = vec![vec![0, 0], vec![3, 0], vec![2, 1], vec![0, 1]];
    out.push(("hirzebruch/all".to_string(), toric(&hirzebruch, &[0, 1, 2, 3])));
    out
}

/// Edges at vertex `i` of a counterclockwise polygon, as primitive directions with lattice lengths.
fn edge_dirs(vs: &[(i64, i64)], i: usize) -> [((i64, i64), i64); 2] {
    let n = vs.len();
    let dir = |a: (i64, i64), b: (i64, i64)| {
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let g = gcd(dx.abs(), dy.abs());
        ((dx / g, dy / g), g)
    };
    [dir(vs[i], vs[(i + 1) % n]), dir(vs[i], vs[(i + n - 1) % n])]
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random smooth polygon in `[0, 6]^2`: rectangle, triangle or trapezoid,
/// followed by up to two corner cuts (toric blow-ups).
pub fn random_delzant(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut vs: Vec<(i64, i64)> = match rng.gen_range(0..3) {
        0 => {
            let (a, b) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            vec![(0, 0), (a, 0), (a, b), (0, b)]
        }
        1 => {
            let a = rng.gen_range(1..=6);
            vec![(0, 0), (a, 0), (0, a)]
        }
        _ => {
            let c = rng.gen_range(1..=2);
            let b = rng.gen_range(1..=5 / c);
            let a = rng.gen_range(1..=6 - c * b);
            vec![(0, 0), (a + c * b, 0), (a, b), (0, b)]
        }
    };
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(0..vs.len());
        let [(u1, l1), (u2, l2)] = edge_dirs(&vs, i);
        if l1 < 2 || l2 < 2 {
            continue;
        }
        let s = rng.gen_range(1..l1.min(l2));
        let v = vs[i];
        let p_next = (v.0 + s * u1.0, v.1 + s * u1.1);
        let p_prev = (v.0 + s * u2.0, v.1 + s * u2.1);
        vs.splice(i..=i, [p_prev, p_next]);
    }
    vs.into_iter().map(|(x, y)| vec![x, y]).collect()
}

/// `count` random polygons, each with a random nonempty choice of vertices.
pub fn random_corpus(seed: u64, count: usize) -> Vec<(String, ToricInput)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let vs = random_delzant(&mut rng);
            let mut idx: Vec<usize> = (0..vs.len()).collect();
            idx.shuffle(&mut rng);
            let k = rng.gen_range(1..=vs.len());
            idx.truncate(k);
            (format!("random-{i} {vs:?} {idx:?}"), toric(&vs, &idx))
        })
        .collect()
}

pub fn full_corpus() -> Vec<(String, ToricInput)> {
    let mut c = named_corpus();
    c.extend(random_corpus(0x5eed, 20));
    c
}

/// `min (d / sum m_i)` over classes `dH - sum m_i E_i` with `1 <= d <= max_d`,
/// `0 <= m_i <= d`, arithmetic genus 0 and `C^2 >= -1`, by plain enumeration.
/// These are the irreducible curves through general points that can bound
/// the ratio; lines through one point matter when `N = 1`.
pub fn curve_ratio_oracle(n: usize, max_d: i64) -> BigRational {
    let mut best: Option<BigRational> = None;
    for d in 1..=max_d {
        let mut m = vec![0i64; n];
        loop {
            let sum: i64 = m.iter().sum();
            let sq: i64 = m.iter().map(|x| x * x).sum();
            let self_int = d * d - sq;
            let canonical = -3 * d + sum;
            if self_int >= -1 && self_int + canonical == -2 && sum > 0 {
                let r = BigRational::new(d.into(), sum.into());
                if best.as_ref().is_none_or(|b| &r < b) {
                    best = Some(r);
                }
            }
            // odometer over m_i in [0, d]
            let mut k = 0;
            while k < n {
                if m[k] < d {
                    m[k] += 1;
                    break;
                }
                m[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    best.expect("some curve passes through the points")
}
