//! Integer Hermite and Smith normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntRows = Vec<Vec<BigInt>>;

/// Row-style Hermite normal form of the row lattice: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, zero rows dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> IntRows {
    let mut m: IntRows = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let best = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let Some(p) = best else { break };
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                sub_row_multiple(&mut m, i, r, &q);
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m.get(r).map_or(true, |row| row[c].is_zero()) {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                sub_row_multiple(&mut m, i, r, &q);
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

fn sub_row_multiple(m: &mut IntRows, target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    for (x, s) in m[target].iter_mut().zip(src) {
        *x -= q * s;
    }
}

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, nonnegative, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    /// Unimodular `U` with `U · A · V = diag`.
    pub left: IntRows,
    pub right: IntRows,
}

fn identity(n: usize) -> IntRows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SmithForm {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut m: IntRows = a.to_vec();
    let mut u = identity(nr);
    let mut v = identity(nc);

    let col_sub = |m: &mut IntRows, target: usize, source: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let s = row[source].clone();
            row[target] -= q * s;
        }
    };
    let col_swap = |m: &mut IntRows, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    };

    for t in 0..nr.min(nc) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut m, t, pj);
            col_swap(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..nr {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                sub_row_multiple(&mut m, i, t, &q);
                sub_row_multiple(&mut u, i, t, &q);
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..nc {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                col_sub(&mut m, j, t, &q);
                col_sub(&mut v, j, t, &q);
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..nr).find(|&i| {
                (t + 1..nc).any(|j| !m[i][j].is_multiple_of(&m[t][t]))
            });
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    sub_row_multiple(&mut m, t, i, &minus_one);
                    sub_row_multiple(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }

    SmithForm {
        diagonal: (0..nr.min(nc)).map(|i| m[i][i].clone()).collect(),
        left: u,
        right: v,
    }
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Bezout coefficients `c` with `sum c_i x_i = gcd(x)` (gcd nonnegative).
pub fn bezout(xs: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); xs.len()];
    for (k, x) in xs.iter().enumerate() {
        let e = g.extended_gcd(x);
        // e.gcd = e.x * g + e.y * x
        for c in coeffs.iter_mut().take(k) {
            *c *= &e.x;
        }
        coeffs[k] = e.y.clone();
        g = e.gcd;
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -c.clone();
        }
    }
    (g, coeffs)
}
