//! Exact irreducibility over `Q` with verified witnesses.
//!
//! Absolute irreducibility is decided by the envelope dimension. Otherwise a
//! MeatAxe-style search runs over probe elements `a` of the envelope: for each
//! irreducible factor `p` of the characteristic polynomial of `a`, vectors of
//! `ker p(a)` are spun under the action and vectors of `ker p(a^T)` under the
//! transposed action. A proper spin gives an invariant subspace directly (or
//! through its annihilator on the transpose side). Irreducibility is only
//! concluded when `dim ker p(a) = deg p` and both spins are full, which is
//! Norton's criterion and cannot give a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::envelope::{check_family, commutant, envelope, unflatten};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, factor_over_q, kernel_basis, spin, DEFAULT_MAX_FACTOR_DEGREE};
use crate::{QMatrix, QPoly, QSubspace, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityConfig {
    pub seed: u64,
    /// Number of pseudo-random envelope elements tried after the generators
    /// and their pairwise sums.
    pub random_probes: usize,
    pub max_factor_degree: usize,
}

impl Default for IrreducibilityConfig {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            random_probes: 32,
            max_factor_degree: DEFAULT_MAX_FACTOR_DEGREE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    AbsolutelyIrreducible,
    IrreducibleOverQ,
    ReducibleOverQ,
    Undetermined { reason: String },
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Self::AbsolutelyIrreducible => "absolutely_irreducible",
            Self::IrreducibleOverQ => "irreducible_over_Q",
            Self::ReducibleOverQ => "reducible_over_Q",
            Self::Undetermined { .. } => "undetermined",
        }
    }

    /// Irreducible over `Q`, whether or not absolutely.
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Self::AbsolutelyIrreducible | Self::IrreducibleOverQ)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealStatus {
    IrreducibleOverR,
    ReducibleOverR,
    Undetermined,
}

impl RealStatus {
    pub fn name(&self) -> &'static str {
        match self {
            Self::IrreducibleOverR => "irreducible_over_R",
            Self::ReducibleOverR => "reducible_over_R",
            Self::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IrreducibilityReport {
    pub degree: usize,
    pub commutant_dim: usize,
    pub commutant_basis: Vec<QMatrix>,
    pub envelope_dim: usize,
    pub classification: Classification,
    pub witness: Option<QSubspace>,
    pub real_status: RealStatus,
}

/// Decides irreducibility of the action of `mats` on `Q^degree`.
///
/// An empty family is accepted: every subspace is then invariant, so any
/// degree above one is reducible.
pub fn irreducibility(
    mats: &[QMatrix],
    degree: usize,
    config: &IrreducibilityConfig,
) -> Result<IrreducibilityReport> {
    check_family(mats, degree)?;
    let commutant_basis = commutant(mats, degree)?;
    let env = envelope(mats, degree)?;
    let envelope_dim = env.dim();

    let (classification, witness) = if degree == 1 || envelope_dim == degree * degree {
        (Classification::AbsolutelyIrreducible, None)
    } else {
        search(mats, degree, &env, config)?
    };

    if let Some(w) = &witness {
        if !w.is_proper_nonzero() || !w.is_invariant_under(mats)? {
            return Err(Error::Precondition(
                "internal error: witness failed verification".into(),
            ));
        }
    }

    let real_status = real_status(&classification, degree, &env);
    Ok(IrreducibilityReport {
        degree,
        commutant_dim: commutant_basis.len(),
        commutant_basis,
        envelope_dim,
        classification,
        witness,
        real_status,
    })
}

fn real_status(c: &Classification, degree: usize, env: &QSubspace) -> RealStatus {
    match c {
        Classification::AbsolutelyIrreducible => RealStatus::IrreducibleOverR,
        Classification::ReducibleOverQ => RealStatus::ReducibleOverR,
        Classification::IrreducibleOverQ if degree == 2 => {
            // the envelope is a quadratic field; any non-scalar element
            // generates it
            let non_scalar = env
                .basis()
                .iter()
                .map(|v| unflatten(v, degree))
                .find(|m| !is_scalar(m));
            let Some(m) = non_scalar else {
                return RealStatus::Undetermined;
            };
            let Ok(cp) = char_poly(&m) else {
                return RealStatus::Undetermined;
            };
            let b = cp.coeff(1);
            let c0 = cp.coeff(0);
            let disc = b.clone() * b - Rational::from_integer(BigInt::from(4)) * c0;
            if disc.is_negative() {
                RealStatus::IrreducibleOverR
            } else {
                RealStatus::ReducibleOverR
            }
        }
        _ => RealStatus::Undetermined,
    }
}

fn is_scalar(m: &QMatrix) -> bool {
    *m == QMatrix::scalar(m.rows(), m.get(0, 0).clone())
}

type Verdict = (Classification, Option<QSubspace>);

fn search(
    mats: &[QMatrix],
    degree: usize,
    env: &QSubspace,
    config: &IrreducibilityConfig,
) -> Result<Verdict> {
    // coordinate lines are cheap and catch visible block structure
    for i in 0..degree {
        let mut e = vec![Rational::zero(); degree];
        e[i] = Rational::one();
        let s = spin(&e, mats)?;
        if s.is_proper_nonzero() {
            return Ok((Classification::ReducibleOverQ, Some(s)));
        }
    }

    let transposed: Vec<QMatrix> = mats.iter().map(QMatrix::transpose).collect();
    let mut notes: Vec<String> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let env_basis: Vec<QMatrix> = env.basis().iter().map(|v| unflatten(v, degree)).collect();

    let mut probes: Vec<QMatrix> = mats.to_vec();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            probes.push(&mats[i] + &mats[j]);
        }
    }
    let fixed = probes.len();
    let total = fixed + config.random_probes;

    for idx in 0..total {
        let a = if let Some(p) = probes.get(idx) {
            p.clone()
        } else {
            random_element(&env_basis, degree, &mut rng)
        };
        let a = integralize(&a);
        if is_scalar(&a) {
            continue;
        }
        let cp = char_poly(&a)?;
        let factors = match factor_over_q(&cp, config.max_factor_degree) {
            Ok(f) => f,
            Err(e @ (Error::UnsupportedDegree { .. } | Error::IntegerTooLarge(_) | Error::FactorBudget(_))) => {
                if notes.len() < 3 {
                    notes.push(e.to_string());
                }
                continue;
            }
            Err(e) => return Err(e),
        };
        let at = a.transpose();
        for (p, _) in &factors {
            if let Some(v) = probe_factor(mats, &transposed, &a, &at, p)? {
                return Ok(v);
            }
        }
    }

    let mut reason = format!("probe budget of {total} elements exhausted without a witness or Norton certificate");
    if !notes.is_empty() {
        reason.push_str("; ");
        reason.push_str(&notes.join("; "));
    }
    Ok((Classification::Undetermined { reason }, None))
}

fn probe_factor(
    mats: &[QMatrix],
    transposed: &[QMatrix],
    a: &QMatrix,
    at: &QMatrix,
    p: &QPoly,
) -> Result<Option<Verdict>> {
    let ker = kernel_basis(&p.eval_matrix(a));
    for v in ker.basis() {
        let s = spin(v, mats)?;
        if s.is_proper_nonzero() {
            return Ok(Some((Classification::ReducibleOverQ, Some(s))));
        }
    }
    let ker_t = kernel_basis(&p.eval_matrix(at));
    let mut transpose_full = false;
    for w in ker_t.basis() {
        let s = spin(w, transposed)?;
        if s.is_proper_nonzero() {
            return Ok(Some((Classification::ReducibleOverQ, Some(s.annihilator()))));
        }
        transpose_full = true;
    }
    let deg = p.degree().unwrap_or(0);
    if !ker.is_zero() && ker.dim() == deg && transpose_full {
        return Ok(Some((Classification::IrreducibleOverQ, None)));
    }
    Ok(None)
}

/// Small-integer combination of envelope basis elements.
fn random_element(env_basis: &[QMatrix], degree: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut out = QMatrix::zeros(degree, degree);
    for b in env_basis {
        let c: i64 = rng.random_range(-3..=3);
        if c != 0 {
            out = &out + &b.scale(&Rational::from_integer(BigInt::from(c)));
        }
    }
    out
}

/// Clears denominators. Kernels of `p(a)` for factors `p` of the
/// characteristic polynomial only depend on `a` up to a nonzero scalar.
fn integralize(a: &QMatrix) -> QMatrix {
    let l = a
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    if l.is_one() {
        a.clone()
    } else {
        a.scale(&Rational::from_integer(l))
    }
}

/// Schur consequence of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurVerdict {
    /// Absolutely irreducible and the commutant is the scalar line.
    Scalars,
    /// Absolutely irreducible but the commutant is larger; never expected.
    NotScalars,
    /// The report is not absolutely irreducible, so nothing is asserted.
    NotApplicable,
}

impl SchurVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Self::NotScalars)
    }
}

/// Checks that an absolutely irreducible family has only scalar commutant.
/// The commutant is recomputed from `mats` rather than trusted from `report`.
pub fn schur_check(mats: &[QMatrix], report: &IrreducibilityReport) -> Result<SchurVerdict> {
    if report.classification != Classification::AbsolutelyIrreducible {
        return Ok(SchurVerdict::NotApplicable);
    }
    let c = commutant(mats, report.degree)?;
    let scalars = c.len() == 1 && is_scalar(&c[0]) && !c[0].is_zero();
    Ok(if scalars {
        SchurVerdict::Scalars
    } else {
        SchurVerdict::NotScalars
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(mats: &[QMatrix], d: usize) -> IrreducibilityReport {
        irreducibility(mats, d, &IrreducibilityConfig::default()).unwrap()
    }

    #[test]
    fn quarter_turn_is_irreducible_over_q_only() {
        let r = run(&[QMatrix::from_ints(&[[0, -2], [2, 0]])], 2);
        assert_eq!(r.classification, Classification::IrreducibleOverQ);
        assert_eq!(r.real_status, RealStatus::IrreducibleOverR);
        assert_eq!((r.envelope_dim, r.commutant_dim), (2, 2));
        assert!(r.witness.is_none());
    }

    #[test]
    fn split_quadratic_is_reducible() {
        // eigenvalues +-1 over Q
        let r = run(&[QMatrix::from_ints(&[[0, 1], [1, 0]])], 2);
        assert_eq!(r.classification, Classification::ReducibleOverQ);
        assert!(r.witness.unwrap().dim() == 1);
    }

    #[test]
    fn s3_standard_is_absolutely_irreducible() {
        let mats = [
            QMatrix::from_ints(&[[0, -1], [1, -1]]),
            QMatrix::from_ints(&[[0, 1], [1, 0]]),
        ];
        let r = run(&mats, 2);
        assert_eq!(r.classification, Classification::AbsolutelyIrreducible);
        assert_eq!(schur_check(&mats, &r).unwrap(), SchurVerdict::Scalars);
    }

    #[test]
    fn degree_one_and_identity_only() {
        let r = run(&[QMatrix::from_ints(&[[0]])], 1);
        assert_eq!(r.classification, Classification::AbsolutelyIrreducible);
        let r = run(&[QMatrix::identity(3)], 3);
        assert_eq!(r.classification, Classification::ReducibleOverQ);
        assert_eq!(r.commutant_dim, 9);
        assert!(schur_check(&[QMatrix::identity(3)], &r).unwrap().holds());
    }

    #[test]
    fn hidden_block_found_after_conjugation() {
        // J (+) [1], conjugated so no coordinate line is invariant
        let j = QMatrix::from_ints(&[[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
        let p = QMatrix::from_ints(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]);
        let pinv = p.inverse().unwrap();
        let m = &(&p * &j) * &pinv;
        let r = run(std::slice::from_ref(&m), 3);
        assert_eq!(r.classification, Classification::ReducibleOverQ);
        assert!(r.witness.unwrap().is_invariant_under(&[m]).unwrap());
    }

    #[test]
    fn cyclic_rotation_of_order_five() {
        // companion matrix of x^4 + x^3 + x^2 + x + 1: irreducible, not absolutely
        let c = QMatrix::from_ints(&[[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]);
        let r = run(&[c], 4);
        assert_eq!(r.classification, Classification::IrreducibleOverQ);
        assert_eq!(r.envelope_dim, 4);
        assert_eq!(r.real_status, RealStatus::Undetermined);
    }

    #[test]
    fn degree_bound_gives_undetermined() {
        let c = QMatrix::from_ints(&[[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]);
        let cfg = IrreducibilityConfig {
            max_factor_degree: 2,
            random_probes: 2,
            ..Default::default()
        };
        let r = irreducibility(&[c], 4, &cfg).unwrap();
        assert!(matches!(r.classification, Classification::Undetermined { .. }));
    }

    #[test]
    fn empty_family_of_degree_two() {
        let r = run(&[], 2);
        assert_eq!(r.classification, Classification::ReducibleOverQ);
    }
}
