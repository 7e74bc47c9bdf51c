//! Standard small groups as permutation groups.

use std::sync::Arc;

use crate::group::{group_from_generators, FiniteGroup, Permutation};

fn build(gens: Vec<Permutation>) -> Arc<FiniteGroup> {
    group_from_generators(&gens).expect("catalog generators are well formed")
}

fn cycle(n: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[points]).expect("catalog cycle is valid")
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    let pts: Vec<usize> = (0..n).collect();
    build(vec![cycle(n, &pts)])
}

/// Symmetric group on `n` points, generated by an `n`-cycle and a transposition.
pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    if n == 1 {
        return build(vec![Permutation::identity(1)]);
    }
    let pts: Vec<usize> = (0..n).collect();
    build(vec![cycle(n, &pts), cycle(n, &[0, 1])])
}

/// Alternating group on 4 points, generated by `(1 2 3)` and `(1 2)(3 4)`.
pub fn alternating4() -> Arc<FiniteGroup> {
    let b = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).expect("valid");
    build(vec![cycle(4, &[0, 1, 2]), b])
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon, generated by
/// the rotation `a` and the reflection `b` fixing vertex 1.
pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 3);
    let pts: Vec<usize> = (0..n).collect();
    let rotation = cycle(n, &pts);
    let images: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let reflection = Permutation::new(images).expect("valid");
    build(vec![rotation, reflection])
}

/// Dihedral group of order 8 generated by `a = (1 2 3 4)` and `b = (1 3)`.
pub fn dihedral4() -> Arc<FiniteGroup> {
    build(vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[0, 2])])
}

/// Quaternion group in its regular action on 8 points, generated by `i` and
/// `j`. Point `4s + u` stands for the element `(-1)^s u` with
/// `u` in `1, i, j, k`.
pub fn quaternion() -> Arc<FiniteGroup> {
    // unit products: (sign, unit) of u * v
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let times = |v: usize| {
        let images = (0..8)
            .map(|x| {
                let (s, u) = (x / 4, x % 4);
                let (t, w) = UNIT[u][v];
                4 * ((s + t) % 2) + w
            })
            .collect();
        Permutation::new(images).expect("valid")
    };
    build(vec![times(1), times(2)])
}
