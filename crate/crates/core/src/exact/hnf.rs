//! Column-style Hermite normal form over the integers.
//!
//! This is the one normal-form routine the crate needs: it backs coset
//! enumeration (box representatives of `Z^3 / M Z^3`) and the rank/index
//! computation for cycle-translation sublattices, which may be rank
//! deficient and are therefore never inverted.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

type Col = [BigInt; 3];

fn col_is_zero(c: &Col) -> bool {
    c.iter().all(Zero::is_zero)
}

/// Replace `(u, v)` by `(x u + y v, (a/g) v - (b/g) u)` where
/// `a = u[row]`, `b = v[row]`, and `g = gcd(a, b) = x a + y b`.
/// The transform is unimodular and zeroes `v[row]`.
fn gcd_combine(u: &mut Col, v: &mut Col, row: usize) {
    let a = u[row].clone();
    let b = v[row].clone();
    if b.is_zero() {
        return;
    }
    if a.is_zero() {
        core::mem::swap(u, v);
        return;
    }
    let ext = a.extended_gcd(&b);
    let (g, x, y) = (ext.gcd, ext.x, ext.y);
    let ag = &a / &g;
    let bg = &b / &g;
    for i in 0..3 {
        let ui = u[i].clone();
        let vi = v[i].clone();
        u[i] = &x * &ui + &y * &vi;
        v[i] = &ag * &vi - &bg * &ui;
    }
    debug_assert!(v[row].is_zero());
}

/// Lower-triangular column Hermite normal form of the span of `cols`.
///
/// Returns one column per pivot (so `result.len()` is the rank of the span),
/// pivots positive, pivot rows strictly increasing, and off-pivot entries in
/// a pivot row reduced into `[0, pivot)`.
pub fn hermite_normal_form(cols: &[Col]) -> Vec<Col> {
    let mut work: Vec<Col> = cols.iter().filter(|c| !col_is_zero(c)).cloned().collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (column, row)
    let mut next = 0usize;
    for row in 0..3 {
        // Fold every column with a nonzero entry in this row into one.
        let mut target: Option<usize> = None;
        for j in next..work.len() {
            if work[j][row].is_zero() {
                continue;
            }
            match target {
                None => {
                    work.swap(next, j);
                    target = Some(next);
                }
                Some(t) => {
                    let (left, right) = work.split_at_mut(j);
                    gcd_combine(&mut left[t], &mut right[0], row);
                }
            }
        }
        if let Some(t) = target {
            if work[t][row].is_negative() {
                for e in work[t].iter_mut() {
                    *e = -&*e;
                }
            }
            pivots.push((t, row));
            next += 1;
        }
    }
    work.truncate(next);
    work.retain(|c| !col_is_zero(c));
    // Canonical reduction: entries left of a pivot, in the pivot row, land
    // in [0, pivot).
    for &(p, row) in &pivots {
        let pivot = work[p][row].clone();
        for j in 0..p {
            let q = work[j][row].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            for i in 0..3 {
                let sub = &q * &work[p][i];
                work[j][i] = &work[j][i] - &sub;
            }
        }
    }
    work
}

/// Rank of the integer span of `cols`.
pub fn integer_span_rank(cols: &[Col]) -> usize {
    hermite_normal_form(cols).len()
}

/// Product of the HNF pivots: the index `[Z^3 : span]` for a full-rank span.
pub fn hnf_index(hnf: &[Col]) -> Option<BigInt> {
    if hnf.len() != 3 {
        return None;
    }
    let mut acc = BigInt::from(1);
    for (j, col) in hnf.iter().enumerate() {
        acc *= &col[j];
    }
    Some(acc)
}
