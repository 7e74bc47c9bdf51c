#![allow(dead_code)]

use std::sync::Arc;

use num_traits::{One, Zero};
use plesken_core::linalg::Subspace;
use plesken_core::rep::{rep_from_generators, GroupRepresentation};
use plesken_core::{group_from_generators, Field, FiniteGroup, Permutation, QGroupRepresentation, QMatrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn qv(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn group(gens: &[&str]) -> Arc<FiniteGroup> {
    let parsed: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(s, 0).unwrap()).collect();
    let n = parsed.iter().map(Permutation::points).max().unwrap();
    let padded: Vec<Permutation> = parsed.iter().map(|p| p.padded(n)).collect();
    group_from_generators(&padded).unwrap()
}

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    group(&[&format!("({})", cycle.join(" "))])
}

/// The test corpus: S3, S4, D4, Q8, C2..C8, A4.
pub fn corpus() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out = vec![
        ("S3".to_string(), group(&["(1 2 3)", "(1 2)"])),
        ("S4".to_string(), group(&["(1 2 3 4)", "(1 2)"])),
        ("D4".to_string(), group(&["(1 2 3 4)", "(1 3)"])),
        // regular action of Q8 on {1,i,j,k,-1,-i,-j,-k}, right multiplication by i and j
        (
            "Q8".to_string(),
            group(&["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]),
        ),
        ("A4".to_string(), group(&["(1 2 3)", "(1 2)(3 4)"])),
    ];
    for n in 2..=8 {
        out.push((format!("C{n}"), cyclic(n)));
    }
    out
}

/// Rank by plain Gaussian elimination on a row list; independent of the
/// library's echelon code.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() / m[rank][c].clone();
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// Dimension of the unital algebra generated by `mats`, by enumerating words
/// level by level. A word that is a combination of shorter words has only
/// extensions that are combinations of shorter extensions, so such words
/// are dropped, and the search ends at the first level adding nothing.
pub fn brute_envelope_dim(mats: &[QMatrix], d: usize) -> usize {
    let gens: Vec<Vec<Vec<Rational>>> = mats.iter().map(QMatrix::to_rows).collect();
    let id: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut kept: Vec<Vec<Rational>> = vec![id.concat()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let p = mat_mul(g, w);
                kept.push(p.concat());
                if oracle_rank(&kept) == kept.len() {
                    next.push(p);
                } else {
                    kept.pop();
                }
            }
        }
        frontier = next;
    }
    kept.len()
}

/// The subrepresentation on an invariant subspace, in the coordinates of its reduced echelon basis.
pub fn restrict(rho: &QGroupRepresentation, w: &Subspace<Rational>) -> QGroupRepresentation {
    let k = w.dim();
    let images: Vec<QMatrix> = rho
        .generator_images()
        .iter()
        .map(|m| {
            let mut out = QMatrix::zeros(k, k);
            for (j, b) in w.basis().iter().enumerate() {
                let image = m.mul_vec(b);
                assert!(w.contains(&image).unwrap(), "subspace is not invariant");
                for (i, &p) in w.pivots().iter().enumerate() {
                    out.set(i, j, image[p].clone());
                }
            }
            out
        })
        .collect();
    rep_from_generators(rho.group(), &images).unwrap()
}

/// All homomorphisms to `{+1, -1}`.
pub fn sign_characters(g: &Arc<FiniteGroup>) -> Vec<QGroupRepresentation> {
    let n = g.generators().len();
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        let imgs: Vec<QMatrix> = (0..n)
            .map(|i| QMatrix::from_ints(&[[if mask >> i & 1 == 1 { -1 } else { 1 }]]))
            .collect();
        if let Ok(r) = rep_from_generators(g, &imgs) {
            out.push(r);
        }
    }
    out
}

/// Small representations of `g`: sign characters, the permutation
/// representation and its augmentation-zero part (for at most 8 points), and
/// for the quaternion group the faithful 4-dimensional rational piece.
pub fn rep_pool(name: &str, g: &Arc<FiniteGroup>) -> Vec<QGroupRepresentation> {
    let mut pool = sign_characters(g);
    if g.points() <= 8 && g.points() >= 2 {
        let perm = GroupRepresentation::permutation(g);
        let n = g.points();
        let zero_sum: Vec<Vec<Rational>> = (1..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n];
                v[0] = q(1);
                v[i] = q(-1);
                v
            })
            .collect();
        let w = Subspace::from_vectors(n, zero_sum).unwrap();
        pool.push(restrict(&perm, &w));
        if name != "Q8" {
            pool.push(perm);
        }
    }
    if name == "Q8" {
        let reg = GroupRepresentation::<Rational>::regular(g);
        let z = (1..g.order()).find(|&x| g.element_order(x) == 2).unwrap();
        let shifted = reg.image(z) + &QMatrix::identity(g.order());
        let w = plesken_core::linalg::kernel_basis(&shifted);
        pool.push(restrict(&reg, &w));
    }
    pool
}

/// A random product of elementary integer matrices; invertible over `Z`.
pub fn random_unimodular(d: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut p = QMatrix::identity(d);
    if d < 2 {
        return p;
    }
    for _ in 0..(2 * d) {
        let i = rng.random_range(0..d);
        let mut j = rng.random_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = rng.random_range(-2..=2);
        let mut e = QMatrix::identity(d);
        e.set(i, j, q(c));
        p = &e * &p;
    }
    p
}

/// A direct sum of two or three pool members, of total degree between 2 and
/// `max_degree`, conjugated by a random unimodular matrix. Returns the
/// representation and the images of the coordinate blocks.
pub fn random_direct_sum(
    pool: &[QGroupRepresentation],
    max_degree: usize,
    rng: &mut ChaCha8Rng,
) -> (QGroupRepresentation, Vec<Subspace<Rational>>) {
    loop {
        let parts = rng.random_range(2..=3);
        let chosen: Vec<&QGroupRepresentation> = (0..parts).map(|_| &pool[rng.random_range(0..pool.len())]).collect();
        let total: usize = chosen.iter().map(|r| r.degree()).sum();
        if total > max_degree {
            continue;
        }
        let mut rho = chosen[0].clone();
        for r in &chosen[1..] {
            rho = rho.direct_sum(r).unwrap();
        }
        let p = random_unimodular(total, rng);
        let rho = rho.conjugate(&p).unwrap();
        let mut blocks = Vec::new();
        let mut start = 0;
        for r in &chosen {
            let cols: Vec<Vec<Rational>> = (start..start + r.degree()).map(|c| p.column(c)).collect();
            blocks.push(Subspace::from_vectors(total, cols).unwrap());
            start += r.degree();
        }
        return (rho, blocks);
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
