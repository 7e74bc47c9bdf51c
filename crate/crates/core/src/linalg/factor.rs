//! Factorization of rational polynomials into monic irreducibles.
//!
//! The input is made monic, split into squarefree parts (Yun), and each part
//! is rescaled to a monic integer polynomial. Integer roots are found inside
//! a Fujiwara bound; what remains is split by Kronecker's interpolation
//! search, which is exhaustive but only practical for small degrees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{QPoly, Rational};

pub const DEFAULT_MAX_FACTOR_DEGREE: usize = 8;

/// Largest absolute value whose divisors are enumerated by trial division.
const DIVISOR_CAP: u64 = 100_000_000_000_000;
/// Largest integer-root search interval before falling back to divisors.
const ROOT_SCAN_CAP: u64 = 1_000_000;
/// Interpolation candidates tried per factor degree.
const COMBINATION_BUDGET: u128 = 4_000_000;

/// A monic irreducible factor with its multiplicity.
pub type Factor = (QPoly, usize);

/// Complete factorization of `p` over the rationals, sorted by degree and then
/// coefficients. The leading coefficient of `p` is dropped (factors are monic).
pub fn factor_over_q(p: &QPoly, max_degree: usize) -> Result<Vec<Factor>> {
    match p.degree() {
        None | Some(0) => {
            return Err(Error::Precondition(format!(
                "cannot factor `{p}`: degree must be at least 1"
            )))
        }
        Some(_) => {}
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic()) {
        for f in factor_squarefree(&part, max_degree)? {
            out.push((f, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(out)
}

/// Yun's algorithm. Returns `(a_i, i)` with `p = prod a_i^i`, each `a_i`
/// squarefree, monic and nonconstant.
pub fn squarefree_decomposition(p: &QPoly) -> Vec<(QPoly, usize)> {
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().is_some_and(|k| k > 0) {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        if a.degree().is_some_and(|k| k > 0) {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn to_int(x: &Rational) -> BigInt {
    debug_assert!(x.is_integer());
    x.to_integer()
}

/// Rescales monic `f` of degree `n` to `g(y) = s^n f(y / s)`, monic with
/// integer coefficients. Returns `(g, s)`.
fn integralize(f: &QPoly) -> (Vec<BigInt>, BigInt) {
    let n = f.degree().expect("nonzero");
    let s = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut g = Vec::with_capacity(n + 1);
    for (i, c) in f.coeffs().iter().enumerate() {
        let scaled = c.clone() * Rational::from_integer(num_traits::pow(s.clone(), n - i));
        g.push(to_int(&scaled));
    }
    (g, s)
}

/// Inverse of [`integralize`] for a monic factor `h(y)`: returns `h(s x) / s^k`.
fn deintegralize(h: &[BigInt], s: &BigInt) -> QPoly {
    let k = h.len() - 1;
    QPoly::new(
        h.iter()
            .enumerate()
            .map(|(i, c)| Rational::new(c.clone(), num_traits::pow(s.clone(), k - i)))
            .collect(),
    )
}

fn horner(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn ipoly(g: &[BigInt]) -> QPoly {
    QPoly::new(g.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn from_qpoly(p: &QPoly) -> Option<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

fn factor_squarefree(f: &QPoly, max_degree: usize) -> Result<Vec<QPoly>> {
    let (mut g, s) = integralize(f);
    let mut factors = Vec::new();

    for r in integer_roots(&g)? {
        let lin = vec![-r, BigInt::one()];
        let q = ipoly(&g).exact_div(&ipoly(&lin)).expect("root divides");
        g = from_qpoly(&q).expect("monic integer quotient");
        factors.push(lin);
    }

    let residual = g.len() - 1;
    if residual > 0 {
        if residual > max_degree {
            return Err(Error::UnsupportedDegree {
                degree: residual,
                bound: max_degree,
            });
        }
        factors.extend(kronecker_split(g)?);
    }
    Ok(factors.iter().map(|h| deintegralize(h, &s)).collect())
}

fn ceil_nth_root(x: &BigInt, k: u32) -> BigInt {
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *x {
        r
    } else {
        r + 1
    }
}

/// Integer roots of a monic integer polynomial (each listed once).
fn integer_roots(g: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = g.len() - 1;
    let mut roots = Vec::new();
    let mut g = g.to_vec();
    while g.len() > 1 && g[0].is_zero() {
        roots.push(BigInt::zero());
        g.remove(0);
    }
    let n_rest = g.len() - 1;
    if n_rest == 0 {
        return Ok(roots);
    }
    // Fujiwara: every root has |z| <= 2 max |a_{n-i}|^(1/i)
    let bound: BigInt = (1..=n_rest)
        .map(|i| ceil_nth_root(&g[n_rest - i].abs(), i as u32))
        .max()
        .unwrap_or_else(BigInt::zero)
        * 2;
    let a0 = g[0].clone();
    let candidates: Vec<BigInt> = match bound.to_u64() {
        Some(b) if b <= ROOT_SCAN_CAP => {
            let b = b as i64;
            (-b..=b)
                .filter(|&r| r != 0)
                .map(BigInt::from)
                .filter(|r| (&a0 % r).is_zero())
                .collect()
        }
        _ => {
            let mag = a0.abs();
            let m = mag
                .to_u64()
                .filter(|&m| m <= DIVISOR_CAP)
                .ok_or_else(|| Error::IntegerTooLarge(mag.to_string()))?;
            divisors(m)
                .into_iter()
                .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
                .collect()
        }
    };
    for r in candidates {
        if horner(&g, &r).is_zero() {
            roots.push(r);
        }
    }
    debug_assert!(roots.len() <= n);
    Ok(roots)
}

/// All positive divisors of `m > 0`, ascending.
fn divisors(m: u64) -> Vec<u64> {
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Splits a monic integer polynomial with no integer roots into irreducibles.
fn kronecker_split(g: Vec<BigInt>) -> Result<Vec<Vec<BigInt>>> {
    let n = g.len() - 1;
    // without linear factors, degree <= 3 is irreducible
    if n <= 3 {
        return Ok(vec![g]);
    }
    for d in 2..=n / 2 {
        if let Some(h) = find_factor(&g, d)? {
            let q = ipoly(&g).exact_div(&ipoly(&h)).expect("found factor divides");
            let q = from_qpoly(&q).expect("monic integer cofactor");
            let mut out = kronecker_split(h)?;
            out.extend(kronecker_split(q)?);
            return Ok(out);
        }
    }
    Ok(vec![g])
}

/// Searches for a monic integer factor of degree `d`.
fn find_factor(g: &[BigInt], d: usize) -> Result<Option<Vec<BigInt>>> {
    let mut samples: Vec<(i64, BigInt, Vec<u64>)> = Vec::new();
    let mut largest = BigInt::zero();
    for k in 0..(2 * d as i64 + 6) {
        let a = if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 };
        let v = horner(g, &BigInt::from(a));
        debug_assert!(!v.is_zero(), "integer roots were removed");
        match v.abs().to_u64().filter(|&m| m <= DIVISOR_CAP) {
            Some(m) => samples.push((a, v, divisors(m))),
            None => largest = largest.max(v.abs()),
        }
    }
    if samples.len() < d + 1 {
        return Err(Error::IntegerTooLarge(largest.to_string()));
    }
    samples.sort_by_key(|(_, _, divs)| divs.len());
    let (interp, checks) = samples.split_at(d);

    let points: Vec<Rational> = interp.iter().map(|(a, _, _)| Rational::from_integer((*a).into())).collect();
    let base = points
        .iter()
        .fold(QPoly::one(), |acc, a| acc.mul(&QPoly::linear(a.clone())));
    let lagrange: Vec<QPoly> = (0..d)
        .map(|j| {
            let mut l = QPoly::one();
            for k in (0..d).filter(|&k| k != j) {
                let denom = points[j].clone() - points[k].clone();
                l = l.mul(&QPoly::linear(points[k].clone())).scale(&(Rational::one() / denom));
            }
            l
        })
        .collect();

    let choices: Vec<Vec<BigInt>> = interp
        .iter()
        .map(|(_, _, divs)| {
            divs.iter()
                .flat_map(|&x| [BigInt::from(x), -BigInt::from(x)])
                .collect()
        })
        .collect();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > COMBINATION_BUDGET {
        return Err(Error::FactorBudget(format!(
            "{total} interpolation candidates for a degree-{d} factor"
        )));
    }

    let gq = ipoly(g);
    let mut idx = vec![0usize; d];
    loop {
        let mut h = base.clone();
        for (j, l) in lagrange.iter().enumerate() {
            h = h.add(&l.scale(&Rational::from_integer(choices[j][idx[j]].clone())));
        }
        if let Some(hi) = from_qpoly(&h) {
            let divides_checks = checks
                .iter()
                .all(|(a, v, _)| {
                    // h(a) = 0 with g(a) != 0 rules h out as a divisor
                    let ha = horner(&hi, &BigInt::from(*a));
                    !ha.is_zero() && (v % ha).is_zero()
                });
            if divides_checks && gq.exact_div(&h).is_some() {
                return Ok(Some(hi));
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == d {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
