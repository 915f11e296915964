//! The (-1)-curves on the blow-up of the plane at up to eight general points.

use super::picard::PicardClass;
use crate::error::{Error, Result};

/// The exceptional curves followed by every integral class `dH - sum m_i E_i`
/// with `d >= 1`, `m_i >= 0`, self-intersection -1 and canonical degree -1.
pub fn delpezzo_curves(n: usize) -> Result<Vec<PicardClass>> {
    if !(1..=8).contains(&n) {
        return Err(Error::PointCountOutOfRange(n));
    }
    let mut out: Vec<PicardClass> = Vec::new();
    // Cauchy-Schwarz: (3d-1)^2 = (sum m)^2 <= n sum m^2 = n(d^2+1).
    let n64 = n as i64;
    let mut d = 1i64;
    while (3 * d - 1).pow(2) <= n64 * (d * d + 1) {
        let mut found = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fill(n, 3 * d - 1, d * d + 1, i64::MAX, &mut cur, &mut found);
        for ms in found {
            for p in distinct_permutations(&ms) {
                out.push(PicardClass::from_ints(d, &p));
            }
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    let mut all: Vec<PicardClass> = (0..n).map(|i| PicardClass::exceptional(n, i)).collect();
    all.extend(out);
    Ok(all)
}

/// Nonincreasing sequences of `slots` nonnegative integers with the given sum and sum of squares.
fn fill(slots: usize, sum: i64, sq: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let left = slots - cur.len();
    if left == 0 {
        if sum == 0 && sq == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if sum < 0 || sq < 0 || sum * sum > left as i64 * sq || sum > sq {
        return;
    }
    let mut top = cap.min(sum);
    while top * top > sq {
        top -= 1;
    }
    for v in (0..=top).rev() {
        cur.push(v);
        fill(slots, sum - v, sq - v * v, v, cur, out);
        cur.pop();
    }
}

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut a = v.to_vec();
    a.sort();
    let mut out = vec![a.clone()];
    // Next lexicographic permutation until exhausted.
    loop {
        let Some(i) = (0..a.len().saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
            return out;
        };
        let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("successor exists");
        a.swap(i, j);
        a[i + 1..].reverse();
        out.push(a.clone());
    }
}
