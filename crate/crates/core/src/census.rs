//! Counting type II(A) character groups through sublattices of `Z^2`.
//!
//! A sublattice of finite index is `<l a + n b, m b>` for a unique triple
//! `(l, n, m)` with `l, m > 0` and `0 <= n < m`; its index is `l m`.

use num_integer::Integer;
use rayon::prelude::*;

use crate::exactnum::rational::euler_phi;
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeTriple {
    pub l: u64,
    pub n: u64,
    pub m: u64,
}

impl LatticeTriple {
    pub fn new(l: u64, n: u64, m: u64) -> Result<Self> {
        if l == 0 || m == 0 || n >= m {
            return Err(Error::InvalidArgument(format!("({l}, {n}, {m}) needs l, m > 0 and n < m")));
        }
        Ok(LatticeTriple { l, n, m })
    }

    pub fn index(&self) -> u64 {
        self.l * self.m
    }

    /// Parses `l,n,m`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<u64> = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad triple '{s}'"))))
            .collect::<Result<_>>()?;
        match parts[..] {
            [l, n, m] => Self::new(l, n, m),
            _ => Err(Error::Parse(format!("triple '{s}' needs three entries"))),
        }
    }
}

/// `S(X)` and `S(X) / X^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub x: u64,
    pub count: u64,
    pub ratio: Rational,
}

fn check_x(x: u64, min: u64) -> Result<()> {
    if x < min {
        return Err(Error::InvalidArgument(format!("X must be at least {min}")));
    }
    Ok(())
}

fn ratio(count: u64, x: u64) -> Rational {
    Rational::new(count.into(), (x * x).into())
}

/// All triples of index below `x`, ordered by `(l, m, n)`.
pub fn enumerate_triples(x: u64) -> Result<Vec<LatticeTriple>> {
    check_x(x, 2)?;
    let mut out = Vec::new();
    for l in 1..x {
        for m in 1..=(x - 1) / l {
            out.extend((0..m).map(|n| LatticeTriple { l, n, m }));
        }
    }
    Ok(out)
}

/// `sum_{l < X} c (c - 1) / 2` with `c = ceil(X / l)`.
pub fn s_count(x: u64) -> Result<CensusResult> {
    check_x(x, 2)?;
    let count = (1..x)
        .into_par_iter()
        .map(|l| {
            let c = x.div_ceil(l);
            c * (c - 1) / 2
        })
        .sum();
    Ok(CensusResult { x, count, ratio: ratio(count, x) })
}

/// Whether the two lattices together span `Z^2`:
/// `gcd(s, l) = 1 = gcd(v, m, s n - u l)`.
pub fn join_is_full(gamma: &LatticeTriple, b: &LatticeTriple) -> bool {
    let (l, n, m) = (gamma.l as i128, gamma.n as i128, gamma.m as i128);
    let (s, u, v) = (b.l as i128, b.n as i128, b.m as i128);
    s.gcd(&l) == 1 && v.gcd(&m).gcd(&(s * n - u * l)) == 1
}

/// Diagonal of the Smith normal form of an integer matrix.
pub fn smith_diagonal(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        loop {
            // Move the smallest nonzero entry of the remaining block to (k, k).
            let pivot = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return pad(diag, rows.min(cols));
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let p = a[k][k];
            let mut clean = true;
            for i in k + 1..rows {
                let q = Integer::div_floor(&a[i][k], &p);
                for j in k..cols {
                    a[i][j] -= q * a[k][j];
                }
                clean &= a[i][k] == 0;
            }
            for j in k + 1..cols {
                let q = Integer::div_floor(&a[k][j], &p);
                for row in a.iter_mut() {
                    row[j] -= q * row[k];
                }
                clean &= a[k][j] == 0;
            }
            if !clean {
                continue;
            }
            // The pivot must divide the rest of the block.
            match (k + 1..rows).flat_map(|i| (k + 1..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % p != 0) {
                Some((i, _)) => {
                    for j in k..cols {
                        a[k][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(a[k][k].abs());
    }
    diag
}

fn pad(mut d: Vec<i128>, len: usize) -> Vec<i128> {
    d.resize(len, 0);
    d
}

/// Join test by elementary divisors of the stacked generators.
pub fn join_is_full_snf(gamma: &LatticeTriple, b: &LatticeTriple) -> bool {
    let m = vec![
        vec![gamma.l as i128, gamma.n as i128],
        vec![0, gamma.m as i128],
        vec![b.l as i128, b.n as i128],
        vec![0, b.m as i128],
    ];
    smith_diagonal(m) == vec![1, 1]
}

/// Counts for a fixed `b = (s, u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundResult {
    pub x: u64,
    pub b: LatticeTriple,
    /// Triples of index below `X` whose join with `b` is full.
    pub count: u64,
    pub ratio: Rational,
    /// Triples with `l = 1`, `X/2 < m < X`, `gcd(v, m) = 1` and full join.
    pub restricted_count: u64,
    /// Number of such `m`.
    pub coprime_m: u64,
    /// `phi(v) / (2v)`.
    pub c1: Rational,
    /// `floor(X/2) * coprime_m`, a lower bound for `restricted_count`.
    pub lower_bound: u64,
}

pub fn ubd_lower_bound_experiment(b: &LatticeTriple, x: u64) -> Result<LowerBoundResult> {
    check_x(x, 4)?;
    let count = (1..x)
        .into_par_iter()
        .map(|l| {
            let mut c = 0u64;
            for m in 1..=(x - 1) / l {
                c += (0..m).filter(|&n| join_is_full(&LatticeTriple { l, n, m }, b)).count() as u64;
            }
            c
        })
        .sum();
    let ms: Vec<u64> = (x / 2 + 1..x).filter(|m| m.gcd(&b.m) == 1).collect();
    let restricted_count = ms
        .iter()
        .map(|&m| (0..m).filter(|&n| join_is_full(&LatticeTriple { l: 1, n, m }, b)).count() as u64)
        .sum();
    let coprime_m = ms.len() as u64;
    Ok(LowerBoundResult {
        x,
        b: *b,
        count,
        ratio: ratio(count, x),
        restricted_count,
        coprime_m,
        c1: Rational::new(euler_phi(b.m).into(), (2 * b.m).into()),
        lower_bound: (x / 2) * coprime_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    fn t(l: u64, n: u64, m: u64) -> LatticeTriple {
        LatticeTriple::new(l, n, m).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_triples(2).unwrap(), vec![t(1, 0, 1)]);
        let mut three = enumerate_triples(3).unwrap();
        three.sort();
        assert_eq!(three, vec![t(1, 0, 1), t(1, 0, 2), t(1, 1, 2), t(2, 0, 1)]);
        assert_eq!(s_count(3).unwrap().count, 4);
        // The double sum evaluated directly at X = 10.
        let direct: u64 = (1..10u64).map(|l| (1..10u64.div_ceil(l)).sum::<u64>()).sum();
        assert_eq!(enumerate_triples(10).unwrap().len() as u64, direct);
        assert!(enumerate_triples(1).is_err());
    }

    #[test]
    fn join_examples() {
        let g0 = t(1, 0, 1);
        for g in enumerate_triples(8).unwrap() {
            assert!(join_is_full(&g, &g0));
        }
        assert!(!join_is_full(&t(2, 0, 2), &t(2, 0, 2)));
        assert!(!join_is_full_snf(&t(2, 0, 2), &t(2, 0, 2)));
        assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_diagonal(vec![vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn lower_bound_experiment() {
        let all = ubd_lower_bound_experiment(&t(1, 0, 1), 100).unwrap();
        assert_eq!(all.count, s_count(100).unwrap().count);
        let r = ubd_lower_bound_experiment(&t(2, 1, 2), 100).unwrap();
        assert_eq!(r.c1, rat(1, 4));
        assert_eq!(r.coprime_m, 25);
        assert!(r.restricted_count >= r.lower_bound);
        assert!(r.count <= s_count(100).unwrap().count);
        // Brute force over the same range.
        let brute = enumerate_triples(100)
            .unwrap()
            .into_iter()
            .filter(|g| g.l == 1 && g.m > 50 && g.m.gcd(&2) == 1 && join_is_full(g, &t(2, 1, 2)))
            .count() as u64;
        assert_eq!(r.restricted_count, brute);
    }
}
