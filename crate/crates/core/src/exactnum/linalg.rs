//! Small dense linear algebra over Q.

use num_traits::Zero;

use crate::Rational;

/// Coefficients `c` with `sum c_i basis_i = target`, when `target` lies in
/// the span of `basis`. With dependent basis vectors any solution may be
/// returned.
pub(crate) fn solve_in_span(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let k = basis.len();
    // Augmented matrix, one row per coordinate.
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=k {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][k].clone();
    }
    Some(x)
}
