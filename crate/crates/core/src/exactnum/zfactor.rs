//! Factorization of rational polynomials.
//!
//! Square-free decomposition over Q, then for each square-free part the
//! classical Zassenhaus route: factor modulo a small good prime
//! (distinct-degree plus Cantor-Zassenhaus equal-degree splitting), lift
//! the factorization p-adically past the Mignotte bound, and recombine
//! lifted factors by trial division over Z.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rational::common_denominator;
use crate::Rational;

type ZPoly = Vec<BigInt>;
type FpPoly = Vec<u64>;

/// Monic irreducible factors of `f` with multiplicities, ordered by degree
/// and then by coefficients. Constants have no factors.
pub fn factor_rational(f: &Poly<Rational>) -> Vec<(Poly<Rational>, u32)> {
    let mut out = Vec::new();
    let Ok(f) = f.monic() else {
        return out;
    };
    for (part, mult) in squarefree_decomposition(&f) {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        for g in factor_squarefree_z(&to_primitive_z(&part)) {
            let g = from_z(&g).monic().expect("nonzero factor");
            out.push((g, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    out
}

pub fn is_irreducible(f: &Poly<Rational>) -> bool {
    let factors = factor_rational(f);
    factors.len() == 1 && factors[0].1 == 1
}

/// Distinct rational roots, increasing.
pub fn rational_roots(f: &Poly<Rational>) -> Vec<Rational> {
    let mut roots: Vec<Rational> = factor_rational(f)
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| -g.coeff(0))
        .collect();
    roots.sort();
    roots
}

/// Yun's algorithm on a monic polynomial: pairs `(a_i, i)` with
/// `f = prod a_i^i`, each `a_i` square-free and monic.
fn squarefree_decomposition(f: &Poly<Rational>) -> Vec<(Poly<Rational>, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    if a.is_zero() {
        return out;
    }
    let mut b = f.div_exact(&a).expect("gcd divides");
    let mut c = df.div_exact(&a).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        a = b.gcd(&d);
        out.push((a.clone(), i));
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn to_primitive_z(f: &Poly<Rational>) -> ZPoly {
    let den = common_denominator(f.coeffs());
    let ints: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut ints: ZPoly = ints.into_iter().map(|c| c / &content).collect();
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -c.clone();
        }
    }
    ints
}

fn from_z(f: &[BigInt]) -> Poly<Rational> {
    Poly::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn z_trim(f: &mut ZPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division over Z, `None` when `d` does not divide `f`.
fn z_div_exact(f: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let dd = d.len().checked_sub(1)?;
    if f.len() <= dd {
        return if f.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
    }
    let mut rem = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dd];
    for i in (dd..rem.len()).rev() {
        let (qi, r) = rem[i].div_rem(&d[dd]);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in d.iter().enumerate() {
            rem[i - dd + j] -= &qi * c;
        }
        q[i - dd] = qi;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn mod_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive(mut f: ZPoly) -> ZPoly {
    let content = f.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in f.iter_mut() {
            *c = &*c / &content;
        }
    }
    if f.last().is_some_and(|c| c.is_negative()) {
        for c in f.iter_mut() {
            *c = -c.clone();
        }
    }
    f
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| super::rational::is_prime(n))
}

/// Irreducible primitive factors of a square-free primitive integer polynomial.
fn factor_squarefree_z(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();

    // Pick the good prime with the fewest modular factors among a handful.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_from_z(f, p);
        if fp.len() != n + 1 || fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let factors = fp_factor(&fp_monic(&fp, p), p);
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("a good prime exists for a square-free polynomial");

    // Lift past twice the Mignotte-style bound |lc| * 2^n * ||f||_2.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + 1) * BigInt::from(2).pow(n as u32) * lc.abs();
    let target = bound * 2;
    let pz = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pz.clone();
    while modulus <= target {
        modulus *= &pz;
        k += 1;
    }
    let mut lifted = hensel_lift(f, &modular, p, k);
    for g in lifted.iter_mut() {
        // Monic representatives modulo p^k.
        let inv = mod_inverse(g.last().unwrap(), &modulus);
        for c in g.iter_mut() {
            *c = (&*c * &inv).mod_floor(&modulus);
        }
    }
    recombine(f.to_vec(), lifted, &modulus)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let r = lifted.len();
        let mut matched = None;
        for subset in combinations(r, size) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc.clone()];
            for &i in &subset {
                g = z_mul(&g, &lifted[i]);
                for c in g.iter_mut() {
                    *c = c.mod_floor(modulus);
                }
            }
            let mut g: ZPoly = g.iter().map(|c| mod_sym(c, modulus)).collect();
            z_trim(&mut g);
            let g = primitive(g);
            if let Some(q) = z_div_exact(&f, &g) {
                matched = Some((subset, g, q));
                break;
            }
        }
        match matched {
            Some((subset, g, q)) => {
                found.push(g);
                f = primitive(q);
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    found.push(f);
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f = lc * prod(factors) mod p` to a factorization modulo `p^k`.
/// The first returned factor carries the leading coefficient.
fn hensel_lift(f: &[BigInt], factors: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        return vec![f.iter().map(|c| c.mod_floor(&m)).collect()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc_p = (f.last().unwrap().mod_floor(&BigInt::from(p))).to_u64().unwrap();
    let mut a0 = vec![lc_p];
    for g in left {
        a0 = fp_mul(&a0, g, p);
    }
    let mut b0 = vec![1u64];
    for g in right {
        b0 = fp_mul(&b0, g, p);
    }
    let (a, b) = lift_pair(f, &a0, &b0, p, k);
    let mut out = hensel_lift(&a, left, p, k);
    // `b` is monic, so its own factors lift with leading coefficient one.
    out.extend(hensel_lift(&b, right, p, k));
    out
}

/// Linear Hensel lifting of `f = a*b (mod p)` with `b` monic.
fn lift_pair(f: &[BigInt], a0: &FpPoly, b0: &FpPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (g, s, t) = fp_xgcd(a0, b0, p);
    debug_assert_eq!(g, vec![1]);
    let pz = BigInt::from(p);
    let mut a: ZPoly = a0.iter().map(|&c| BigInt::from(c)).collect();
    let mut b: ZPoly = b0.iter().map(|&c| BigInt::from(c)).collect();
    let mut pj = pz.clone();
    for _ in 1..k {
        let prod = z_mul(&a, &b);
        let mut diff: ZPoly = (0..f.len().max(prod.len()))
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()
            })
            .collect();
        z_trim(&mut diff);
        let c: FpPoly = fp_trim(
            diff.iter()
                .map(|d| {
                    debug_assert!((d % &pj).is_zero());
                    (d / &pj).mod_floor(&pz).to_u64().unwrap()
                })
                .collect(),
        );
        let (q, r) = fp_divrem(&fp_mul(&c, &s, p), b0, p);
        let da = fp_add(&fp_mul(&q, a0, p), &fp_mul(&c, &t, p), p);
        let next = &pj * &pz;
        for (i, d) in da.iter().enumerate() {
            if i >= a.len() {
                a.resize(i + 1, BigInt::zero());
            }
            a[i] = (&a[i] + &pj * BigInt::from(*d)).mod_floor(&next);
        }
        for (i, d) in r.iter().enumerate() {
            b[i] = (&b[i] + &pj * BigInt::from(*d)).mod_floor(&next);
        }
        pj = next;
    }
    (a, b)
}

/// For a monic integer polynomial whose reduction mod `p` is a power of a
/// single irreducible, the degree of that irreducible.
pub(crate) fn single_irreducible_power_degree(g: &[BigInt], p: u64) -> Option<usize> {
    let gp = fp_from_z(g, p);
    let n = gp.len().checked_sub(1)?;
    if n == 0 {
        return None;
    }
    let x = vec![0u64, 1];
    let pbig = BigUint::from(p);
    let mut h = x.clone();
    for d in 1..=n {
        h = fp_powmod(&h, &pbig, &gp, p);
        let common = fp_gcd(&fp_sub(&h, &x, p), &gp, p);
        if common.len() == 1 {
            continue;
        }
        if common.len() - 1 != d || n % d != 0 {
            return None;
        }
        let mut rest = gp.clone();
        while rest.len() > 1 {
            let (q, r) = fp_divrem(&rest, &common, p);
            if !r.is_empty() {
                return None;
            }
            rest = q;
        }
        return Some(d);
    }
    None
}

// ---- arithmetic in F_p[x] ----

fn fp_from_z(f: &[BigInt], p: u64) -> FpPoly {
    let pz = BigInt::from(p);
    fp_trim(f.iter().map(|c| c.mod_floor(&pz).to_u64().unwrap()).collect())
}

fn fp_trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(b[db], p);
    let mut rem = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for i in (db..rem.len()).rev() {
        let c = mulmod(rem[i], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            rem[i - db + j] = (rem[i - db + j] + p - mulmod(c, bj, p)) % p;
        }
        q[i - db] = c;
    }
    rem.truncate(db);
    (fp_trim(q), fp_trim(rem))
}

fn fp_monic(a: &[u64], p: u64) -> FpPoly {
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut a, mut b) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_xgcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let sc = |v: &FpPoly| fp_trim(v.iter().map(|&c| mulmod(c, inv, p)).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_derivative(a: &[u64], p: u64) -> FpPoly {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

fn fp_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut result = vec![1u64];
    let base = fp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        result = fp_divrem(&fp_mul(&result, &result, p), m, p).1;
        if e.bit(i) {
            result = fp_divrem(&fp_mul(&result, &base, p), m, p).1;
        }
    }
    result
}

/// Monic irreducible factors of a monic square-free polynomial over F_p, p odd.
fn fp_factor(f: &[u64], p: u64) -> Vec<FpPoly> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 1;
    let pbig = BigUint::from(p);
    while rest.len() > 1 && 2 * d < rest.len() {
        h = fp_powmod(&h, &pbig, &rest, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            out.extend(equal_degree_split(&g, d, p));
            rest = fp_divrem(&rest, &g, p).0;
            h = fp_divrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

fn equal_degree_split(g: &[u64], d: usize, p: u64) -> Vec<FpPoly> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.to_vec()];
    }
    let e: BigUint = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let mut seed = 0x9e37_79b9_7f4a_7c15u64 ^ (n as u64) ^ (p << 17);
    loop {
        let a: FpPoly = fp_trim(
            (0..n)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (seed >> 33) % p
                })
                .collect(),
        );
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &[1], p);
        let s = fp_gcd(&b, g, p);
        if s.len() > 1 && s.len() < g.len() {
            let t = fp_divrem(g, &s, p).0;
            let mut out = equal_degree_split(&s, d, p);
            out.extend(equal_degree_split(&fp_monic(&t, p), d, p));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    type P = Poly<Rational>;

    fn degrees(f: &P) -> Vec<usize> {
        factor_rational(f)
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m as usize))
            .collect()
    }

    #[test]
    fn factors_multiply_back() {
        let f = &(&P::from_i64(&[-2, 0, 0, 1]) * &P::from_i64(&[1, 1, 1]))
            * &P::from_i64(&[3, -1]).pow(2);
        let factors = factor_rational(&f);
        let mut prod = P::one();
        for (g, m) in &factors {
            prod = &prod * &g.pow(*m);
        }
        assert_eq!(prod, f.monic().unwrap());
        assert_eq!(degrees(&f), vec![1, 1, 2, 3]);
    }

    #[test]
    fn swinnerton_dyer_style_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime.
        assert!(is_irreducible(&P::from_i64(&[1, 0, -10, 0, 1])));
        assert!(!is_irreducible(&P::from_i64(&[4, 0, -5, 0, 1])));
    }

    #[test]
    fn rational_roots_of_non_monic() {
        let f = P::new(vec![int(-29), int(5), int(5)]);
        assert!(rational_roots(&f).is_empty());
        let g = &P::new(vec![rat(1, 2), int(1)]) * &P::from_i64(&[-16, 1]);
        assert_eq!(rational_roots(&g), vec![rat(-1, 2), int(16)]);
    }

    #[test]
    fn five_division_polynomial_pattern() {
        // (x - 16)(x - 5)(5x^2 + 5x - 29)(x^4 + x^3 + 11x^2 + 41x + 101)
        //   * (x^4 + 15x^3 + 120x^2 + 200x + 155)
        let f = [
            P::from_i64(&[-16, 1]),
            P::from_i64(&[-5, 1]),
            P::from_i64(&[-29, 5, 5]),
            P::from_i64(&[101, 41, 11, 1, 1]),
            P::from_i64(&[155, 200, 120, 15, 1]),
        ]
        .iter()
        .fold(P::one(), |acc, g| &acc * g);
        let factors = factor_rational(&f);
        assert_eq!(degrees(&f), vec![1, 1, 2, 4, 4]);
        assert!(factors
            .iter()
            .any(|(g, _)| g == &P::from_i64(&[101, 41, 11, 1, 1])));
    }
}
