//! Characteristic polynomials and an irreducibility test, enough to certify
//! that an algebra element acts with irreducible characteristic polynomial.
//!
//! Polynomials are coefficient vectors, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Monic minimal polynomial of `v` under `theta` when it has full degree,
/// which then equals the characteristic polynomial of `theta`.
pub(crate) fn krylov_charpoly(theta: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = theta.rows();
    let field = theta.field();
    let mut rows = vec![v.to_vec()];
    for _ in 0..n {
        let next = theta.left_mul_unchecked(rows.last().unwrap());
        rows.push(next);
    }
    let k = Matrix::from_rows(field, n, rows).ok()?;
    let null = k.nullspace();
    if null.rows() != 1 || null.get(0, n).is_zero() {
        return None;
    }
    let lead = null.get(0, n).inverse().ok()?;
    Some(null.row(0).iter().map(|c| c * &lead).collect())
}

/// `true` only when `f` (monic, degree at least 1) is proven irreducible.
pub(crate) fn is_irreducible(f: &[Scalar]) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    match f[0].field() {
        Field::Prime(p) => {
            let g: Vec<u64> = f.iter().map(residue).collect();
            degree_pattern(&g, p).is_some_and(|d| d == vec![deg])
        }
        Field::Rational => rational_irreducible(f),
    }
}

fn residue(x: &Scalar) -> u64 {
    match x {
        Scalar::Mod { value, .. } => *value,
        Scalar::Rat(_) => unreachable!("residue of a rational"),
    }
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
    127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Degrees of a rational factorization must be subset sums of every mod-p
/// factorization pattern; no common proper subset sum proves irreducibility.
fn rational_irreducible(f: &[Scalar]) -> bool {
    let deg = f.len() - 1;
    let mut denom = BigInt::one();
    for c in f {
        if let Scalar::Rat(q) = c {
            denom = denom.lcm(q.denom());
        }
    }
    let ints: Vec<BigInt> = f
        .iter()
        .map(|c| match c {
            Scalar::Rat(q) => q.numer() * (&denom / q.denom()),
            Scalar::Mod { .. } => unreachable!("rational polynomial"),
        })
        .collect();
    let mut possible: Vec<bool> = (0..=deg).map(|d| d > 0 && d < deg).collect();
    for p in PRIMES.iter().copied().chain(std::iter::once(2)) {
        let pb = BigInt::from(p);
        let reduced: Vec<u64> = ints
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect();
        if reduced[deg] == 0 {
            continue;
        }
        let inv = pow_mod(reduced[deg], p - 2, p);
        let monic: Vec<u64> = reduced.iter().map(|c| c * inv % p).collect();
        let Some(pattern) = degree_pattern(&monic, p) else {
            continue;
        };
        let mut sums = vec![false; deg + 1];
        sums[0] = true;
        for d in pattern {
            for s in (d..=deg).rev() {
                sums[s] |= sums[s - d];
            }
        }
        for (d, ok) in possible.iter_mut().enumerate() {
            *ok &= sums[d];
        }
        if !possible.iter().any(|&b| b) {
            return true;
        }
    }
    false
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// `(a div b, a mod b)` over F_p; `b` nonzero.
fn divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = deg(b).expect("nonzero divisor");
    let inv = pow_mod(b[db], p - 2, p);
    let mut r = trim(a.to_vec());
    let mut q = vec![0; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * inv % p;
        let shift = dr - db;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate().take(db + 1) {
            r[i + shift] = (r[i + shift] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    divmod(&out, m, p).1
}

fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1];
    let mut b = divmod(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = divmod(&a, &b, p).1;
        a = b;
        b = r;
    }
    if let Some(d) = deg(&a) {
        let inv = pow_mod(a[d], p - 2, p);
        a.iter_mut().for_each(|c| *c = *c * inv % p);
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
    trim((0..n).map(|i| (get(a, i) + p - get(b, i)) % p).collect())
}

/// Degrees of the irreducible factors of monic `f` over F_p, or `None` when
/// `f` is not squarefree.
fn degree_pattern(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let f = trim(f.to_vec());
    let n = deg(&f)?;
    let derivative: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
    if deg(&gcd(&f, &derivative, p)) != Some(0) {
        return None;
    }
    let x = vec![0, 1];
    let mut rest = f;
    let mut h = x.clone();
    let mut pattern = Vec::new();
    let mut d = 1;
    while deg(&rest).is_some_and(|r| 2 * d <= r) {
        h = powmod(&h, p, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        let dg = deg(&g).unwrap_or(0);
        if dg > 0 {
            pattern.extend(std::iter::repeat_n(d, dg / d));
            rest = divmod(&rest, &g, p).0;
            h = divmod(&h, &rest, p).1;
        }
        d += 1;
    }
    if let Some(r) = deg(&rest).filter(|&r| r > 0) {
        pattern.push(r);
    }
    pattern.sort_unstable();
    debug_assert_eq!(pattern.iter().sum::<usize>(), n);
    Some(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> Vec<Scalar> {
        coeffs.iter().map(|&c| Field::Rational.from_i64(c)).collect()
    }

    fn fp(p: u64, coeffs: &[i64]) -> Vec<Scalar> {
        coeffs.iter().map(|&c| Field::Prime(p).from_i64(c)).collect()
    }

    #[test]
    fn patterns_over_small_fields() {
        // x^2 + x + 1 over F_2 is irreducible; over F_7 it has roots 2 and 4
        assert_eq!(degree_pattern(&[1, 1, 1], 2), Some(vec![2]));
        assert_eq!(degree_pattern(&[1, 1, 1], 7), Some(vec![1, 1]));
        // x^2 over F_5 is not squarefree
        assert_eq!(degree_pattern(&[0, 0, 1], 5), None);
        // x^4 - 1 over F_5 splits completely
        assert_eq!(degree_pattern(&[4, 0, 0, 0, 1], 5), Some(vec![1, 1, 1, 1]));
        // x^3 + x + 1 over F_2 is irreducible
        assert_eq!(degree_pattern(&[1, 1, 0, 1], 2), Some(vec![3]));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&q(&[1, 1, 1])));
        assert!(is_irreducible(&q(&[1, 0, 1])));
        assert!(is_irreducible(&q(&[1, 1, 1, 1, 1])));
        assert!(!is_irreducible(&q(&[-1, 0, 1])));
        assert!(!is_irreducible(&q(&[1, 0, 2, 0, 1])));
        assert!(is_irreducible(&fp(2, &[1, 1, 1])));
        assert!(!is_irreducible(&fp(3, &[1, 1, 1])));
        assert!(is_irreducible(&fp(5, &[3, 1])));
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // rotation by a third of a turn acting on Q^2
        let f = Field::Rational;
        let theta = Matrix::from_i64(f, &[&[0, 1], &[-1, -1]]);
        let chi = krylov_charpoly(&theta, &[f.one(), f.zero()]).unwrap();
        assert_eq!(chi, q(&[1, 1, 1]));
        assert!(krylov_charpoly(&Matrix::identity(f, 2), &[f.one(), f.zero()]).is_none());
    }
}
