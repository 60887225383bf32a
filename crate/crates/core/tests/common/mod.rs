//! Test-only reference implementations, deliberately written differently from
//! the library code they check.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Invariant factors (non-zero diagonal of the Smith form, ascending) by
/// alternating row and column Hermite reduction with Bezout combinations,
/// then a gcd/lcm pass over the diagonal.
pub fn naive_invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if m.is_empty() || m[0].is_empty() {
        return Vec::new();
    }
    loop {
        hermite_rows(&mut m);
        let mut t = transpose(&m);
        hermite_rows(&mut t);
        m = transpose(&t);
        if is_diagonal(&m) {
            break;
        }
    }
    let k = m.len().min(m[0].len());
    let mut diag: Vec<BigInt> = (0..k)
        .map(|i| m[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect();
    // (a, b) -> (gcd, lcm) until every entry divides the next
    let len = diag.len();
    for i in 0..len {
        for j in i + 1..len {
            let (a, b) = (diag[i].clone(), diag[j].clone());
            let g = a.gcd(&b);
            diag[j] = a.lcm(&b);
            diag[i] = g;
        }
    }
    diag
}

/// Row-style Hermite reduction: every pivot column ends up with a single
/// non-zero entry below the current row.
fn hermite_rows(m: &mut [Vec<BigInt>]) {
    let (r, c) = (m.len(), m[0].len());
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        for i in row + 1..r {
            if m[i][col].is_zero() {
                continue;
            }
            if m[row][col].is_zero() {
                m.swap(row, i);
                continue;
            }
            let (a, b) = (m[row][col].clone(), m[i][col].clone());
            if (&b % &a).is_zero() {
                // leave the pivot row alone, otherwise the alternation can cycle
                let q = &b / &a;
                for k in 0..c {
                    let x = &q * &m[row][k];
                    m[i][k] -= x;
                }
                continue;
            }
            // Bezout: [s t; -b/g a/g] is unimodular and clears m[i][col]
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (ag, bg) = (&a / &g, &b / &g);
            for k in 0..c {
                let x = m[row][k].clone();
                let y = m[i][k].clone();
                m[row][k] = &s * &x + &t * &y;
                m[i][k] = &ag * &y - &bg * &x;
            }
        }
        if !m[row][col].is_zero() {
            row += 1;
        }
    }
}

fn transpose(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

fn is_diagonal(m: &[Vec<BigInt>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// `d_k / d_{k-1}` where `d_k` is the gcd of all `k x k` minors. Only for
/// small matrices.
pub fn determinantal_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| BigInt::from(rows[i][j])).collect())
                    .collect();
                g = g.gcd(&det(sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Laplace expansion along the first row.
fn det(m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
