//! Acceptance gate: twelve exact checks, one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_traits::Zero;
use plesken_core::algebra::{induce_algebra_hom, is_induced_from_group_hom, verify_algebra_hom, AlgebraMap};
use plesken_core::group::induce_group_hom;
use plesken_core::plesken::{
    closed_form_bracket_check, induce_plesken_hom, plesken_basis, structure_constants, PleskenElement,
};
use plesken_core::rep::{
    check_reducibility_inheritance, commutant, envelope, induce_plesken_rep, irreducibility, module_axioms_check,
    rep_from_generators, schur_check, submodule_check, Classification, GroupRepresentation, IrreducibilityConfig,
    ModuleActionTable, ModuleCounterexample, RealStatus, SchurVerdict,
};
use plesken_core::{QGroupAlgebraElement, QMatrix, QSubspace, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn d4() -> std::sync::Arc<plesken_core::FiniteGroup> {
    group(&["(1 2 3 4)", "(1 3)"])
}

fn s3() -> std::sync::Arc<plesken_core::FiniteGroup> {
    group(&["(1 2 3)", "(1 2)"])
}

fn rho5() -> plesken_core::QGroupRepresentation {
    rep_from_generators(
        &d4(),
        &[QMatrix::from_ints(&[[0, -1], [1, 0]]), QMatrix::from_ints(&[[0, 1], [1, 0]])],
    )
    .unwrap()
}

/// Commutant dimension from the Kronecker form `I (x) A - A^T (x) I`, rank by
/// the oracle eliminator.
fn oracle_commutant_dim(mats: &[QMatrix], d: usize) -> usize {
    let mut rows = Vec::new();
    for a in mats {
        for r in 0..d {
            for c in 0..d {
                // coefficient of X[i][j] in (XA - AX)[r][c]
                let mut row = vec![Rational::zero(); d * d];
                for k in 0..d {
                    row[r * d + k] += a.get(k, c).clone();
                    row[k * d + c] -= a.get(r, k).clone();
                }
                rows.push(row);
            }
        }
    }
    d * d - oracle_rank(&rows)
}

fn criterion1() -> Outcome {
    let g = s3();
    let basis = plesken_basis(&g);
    ensure!(basis.dim() == 1, "dim L(S3) = {}", basis.dim());
    ensure!(basis.labels() == ["(1 2 3)"], "basis {:?}", basis.labels());
    let sc = structure_constants::<Rational>(&basis).unwrap();
    ensure!(sc.is_zero(), "nonzero structure constants");
    let x = PleskenElement::from_coords(&basis, vec![q(3)]).unwrap();
    let y = PleskenElement::from_coords(&basis, vec![q(-5)]).unwrap();
    ensure!(x.bracket(&y).unwrap().is_zero(), "[x, y] != 0");
    Ok("dim L(S3) = 1, basis (1 2 3), abelian".into())
}

fn criterion2() -> Outcome {
    let g = d4();
    let basis = plesken_basis(&g);
    ensure!(basis.dim() == 1, "dim L(D4) = {}", basis.dim());
    let a = g.parse_element("(1 2 3 4)").unwrap();
    let a3 = g.parse_element("(1 4 3 2)").unwrap();
    let expected = QGroupAlgebraElement::from_terms(&g, &[(q(1), a), (q(-1), a3)]);
    let hat = PleskenElement::<Rational>::unit(&basis, 0).embed();
    ensure!(hat == expected, "basis element is {hat}");
    Ok(format!("dim L(D4) = 1, basis {hat}"))
}

fn criterion3() -> Outcome {
    let psi = induce_plesken_rep(&rho5());
    ensure!(
        psi.hat_images() == [QMatrix::from_ints(&[[0, -2], [2, 0]])],
        "psi5 = {:?}",
        psi.hat_images()
    );
    let chars = sign_characters(&d4());
    ensure!(chars.len() == 4, "{} linear characters", chars.len());
    for rho in &chars {
        ensure!(induce_plesken_rep(rho).is_zero(), "nonzero induced map from a degree-1 representation");
    }
    Ok("psi5(a^) = [[0,-2],[2,0]]; four degree-1 representations induce 0".into())
}

fn criterion4() -> Outcome {
    let psi = induce_plesken_rep(&rho5());
    let mats = psi.hat_images();
    let report = irreducibility(mats, 2, &IrreducibilityConfig::default()).unwrap();
    ensure!(
        report.classification == Classification::IrreducibleOverQ,
        "classification {:?}",
        report.classification
    );
    ensure!(report.witness.is_none(), "unexpected witness");
    ensure!(report.real_status == RealStatus::IrreducibleOverR, "real status {:?}", report.real_status);
    let env_oracle = brute_envelope_dim(mats, 2);
    let comm_oracle = oracle_commutant_dim(mats, 2);
    ensure!(
        report.envelope_dim == 2 && env_oracle == 2,
        "envelope {} (oracle {env_oracle})",
        report.envelope_dim
    );
    ensure!(
        report.commutant_dim == 2 && comm_oracle == 2,
        "commutant {} (oracle {comm_oracle})",
        report.commutant_dim
    );
    // no rational invariant line: every line spanned by (1, t) or (0, 1) is moved
    let h = &mats[0];
    for v in [qv(&[1, 0]), qv(&[0, 1])] {
        ensure!(h.mul_vec(&v) != v && h.mul_vec(&v).iter().any(|x| !x.is_zero()), "fixed direction");
    }
    Ok("psi5 irreducible over Q and R, envelope 2, commutant 2".into())
}

fn criterion5() -> Outcome {
    let g = s3();
    let rho = rep_from_generators(
        &g,
        &[QMatrix::from_ints(&[[0, -1], [1, -1]]), QMatrix::from_ints(&[[0, 1], [1, 0]])],
    )
    .unwrap();
    let mats = rho.images().to_vec();
    let report = irreducibility(&mats, 2, &IrreducibilityConfig::default()).unwrap();
    ensure!(
        report.classification == Classification::AbsolutelyIrreducible,
        "classification {:?}",
        report.classification
    );
    let oracle = brute_envelope_dim(&mats, 2);
    ensure!(report.envelope_dim == 4 && oracle == 4, "envelope {} (oracle {oracle})", report.envelope_dim);
    ensure!(
        commutant(&mats, 2).unwrap() == [QMatrix::identity(2)] && oracle_commutant_dim(&mats, 2) == 1,
        "commutant is not the scalar line"
    );
    ensure!(schur_check(&mats, &report).unwrap() == SchurVerdict::Scalars, "Schur check failed");
    Ok("S3 standard form absolutely irreducible, envelope 4, commutant scalars".into())
}

fn criterion6() -> Outcome {
    let groups = corpus();
    let mut rng = rng(2024);
    let cfg = IrreducibilityConfig::default();
    let mut count = 0;
    while count < 50 {
        let (name, g) = &groups[count % groups.len()];
        let pool = rep_pool(name, g);
        let (rho, blocks) = random_direct_sum(&pool, 8, &mut rng);
        for w in &blocks {
            ensure!(rho.is_invariant(w).unwrap(), "{name}: block not rho-invariant");
            ensure!(
                check_reducibility_inheritance(&rho, w).unwrap(),
                "{name}: rho-invariant block not psi-invariant"
            );
        }
        let psi = induce_plesken_rep(&rho);
        let report = irreducibility(psi.hat_images(), rho.degree(), &cfg).unwrap();
        ensure!(
            report.classification == Classification::ReducibleOverQ,
            "{name} degree {}: {:?}",
            rho.degree(),
            report.classification
        );
        let w = report.witness.as_ref().ok_or(format!("{name}: no witness"))?;
        ensure!(
            w.is_proper_nonzero() && w.is_invariant_under(psi.hat_images()).unwrap(),
            "{name}: witness fails verification"
        );
        count += 1;
    }
    Ok(format!("{count} randomized direct sums: blocks inherited, psi reducible with verified witness"))
}

fn criterion7() -> Outcome {
    for (name, g) in corpus() {
        let n = g.order();
        let mut t = 0;
        let mut hats = Vec::new();
        for i in 0..n {
            let p = g.element(i);
            if p.then(p).is_identity() {
                t += 1;
            }
            let inv = g.index_of(&p.inverse()).unwrap();
            let mut v = vec![Rational::zero(); n];
            v[i] += q(1);
            v[inv] -= q(1);
            hats.push(v);
        }
        let formula = (n - t) / 2;
        let basis = plesken_basis(&g).dim();
        let rank = oracle_rank(&hats);
        ensure!(
            formula == basis && basis == rank,
            "{name}: (|G|-t)/2 = {formula}, basis {basis}, rank {rank}"
        );
    }
    Ok("(|G| - t)/2 = basis size = brute-force rank on the corpus".into())
}

fn criterion8() -> Outcome {
    for (name, g) in corpus() {
        let basis = plesken_basis(&g);
        let sc = structure_constants::<Rational>(&basis).unwrap();
        ensure!(sc.antisymmetry_violation().is_none(), "{name}: antisymmetry fails");
        ensure!(sc.jacobi_violation().is_none(), "{name}: Jacobi fails");
        ensure!(closed_form_bracket_check::<Rational>(&basis), "{name}: closed form disagrees");
    }
    Ok("antisymmetry, Jacobi and the closed-form bracket on the corpus".into())
}

fn criterion9() -> Outcome {
    let c2 = cyclic(2);
    let g = s3();
    let sign: Vec<usize> = g
        .generators()
        .iter()
        .map(|&x| usize::from(g.element(x).then(g.element(x)).is_identity() && x != 0))
        .collect();
    let d = d4();
    let maps = [
        ("S3 -> C2", induce_group_hom(&g, &c2, &sign).unwrap()),
        ("D4 -> C2", induce_group_hom(&d, &c2, &[1, 0]).unwrap()),
    ];
    for (name, f) in maps {
        ensure!(f.map().iter().any(|&x| x != 0), "{name}: map is trivial");
        let hat_f = induce_plesken_hom::<Rational>(&f);
        let bar_f: AlgebraMap<Rational> = induce_algebra_hom(&f);
        let basis = plesken_basis(f.source());
        for i in 0..basis.dim() {
            let b = PleskenElement::<Rational>::unit(&basis, i);
            let lhs = hat_f.apply(&b).unwrap().embed();
            let rhs = bar_f.apply(&b.embed()).unwrap();
            ensure!(lhs == rhs, "{name}: images of basis element {i} differ");
        }
        ensure!(hat_f.agrees_with(&bar_f).unwrap(), "{name}: restriction check fails");
    }
    Ok("induced Plesken map = restricted algebra map for S3 -> C2 and D4 -> C2".into())
}

fn criterion10() -> Outcome {
    let c2 = cyclic(2);
    let images = vec![
        QGroupAlgebraElement::basis(&c2, 0),
        QGroupAlgebraElement::basis(&c2, 1).scale(&q(-1)),
    ];
    let phi = AlgebraMap::from_images(&c2, &c2, images).unwrap();
    ensure!(verify_algebra_hom(&phi).holds, "e -> e, s -> -s is not multiplicative");
    ensure!(!is_induced_from_group_hom(&phi), "map reported as induced");
    Ok("e -> e, s -> -s is an algebra homomorphism not induced from a group map".into())
}

fn criterion11() -> Outcome {
    let c3 = cyclic(3);
    let a = c3.generators()[0];
    let a2 = c3.mul(a, a);
    let mut action = vec![QMatrix::identity(3); 3];
    action[a] = QMatrix::from_ints(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
    action[a2] = QMatrix::from_ints(&[[0, -1, 0], [0, 0, 1], [1, 0, 0]]);
    let table = ModuleActionTable::new(&c3, 3, action).unwrap();
    let basis = plesken_basis(&c3);
    let u = QSubspace::from_vectors(3, [qv(&[1, 1, 0])]).unwrap();

    let sub = submodule_check(&table, &basis, &u).unwrap();
    ensure!(sub.lg_submodule, "U is not an L(C3)-submodule");
    ensure!(!sub.fg_submodule, "U reported as FG-submodule");
    let (g, v, image) = sub.fg_counterexample.clone().unwrap();
    ensure!(
        g == a && v == qv(&[1, 1, 0]) && image == qv(&[0, 1, 1]),
        "FG counterexample {g} {v:?} {image:?}"
    );
    // independent closure check of the hat action on U
    let hat = table.action(a) - table.action(a2);
    ensure!(u.contains(&hat.mul_vec(&qv(&[1, 1, 0]))).unwrap(), "hat action leaves U");

    let report = module_axioms_check(&table, &basis).unwrap();
    ensure!(!report.fg_module, "table reported multiplicative");
    let found = report.counterexamples.iter().any(|c| {
        matches!(c, ModuleCounterexample::Multiplicativity { g, h, column, nested, product }
            if *g == a && *h == a && *column == 1 && *nested == qv(&[1, 0, 0]) && *product == qv(&[-1, 0, 0]))
    });
    ensure!(found, "missing a(a v2) = v1 vs a^2 v2 = -v1");
    Ok("U = <v1+v2> is an L(C3)- but not an FG-submodule; table not multiplicative".into())
}

fn criterion12() -> Outcome {
    let cfg = IrreducibilityConfig::default();
    let mut rng = rng(12);
    let mut checked = 0;
    for n in 3..=8 {
        let g = cyclic(n);
        let basis = plesken_basis(&g);
        ensure!(structure_constants::<Rational>(&basis).unwrap().is_zero(), "C{n}: nonzero constants");

        let pool = rep_pool(&format!("C{n}"), &g);
        let mut reps: Vec<plesken_core::QGroupRepresentation> = pool.clone();
        reps.push(GroupRepresentation::regular(&g));
        for _ in 0..4 {
            reps.push(random_direct_sum(&pool, 8, &mut rng).0);
        }
        for rho in reps {
            let psi = induce_plesken_rep(&rho);
            let report = irreducibility(psi.hat_images(), rho.degree(), &cfg).unwrap();
            if rho.degree() == 1 {
                ensure!(report.classification.is_irreducible(), "C{n}: degree 1 not irreducible");
                continue;
            }
            ensure!(
                report.classification != Classification::AbsolutelyIrreducible,
                "C{n}: degree {} absolutely irreducible",
                rho.degree()
            );
            let env = envelope(psi.hat_images(), rho.degree()).unwrap();
            ensure!(env.dim() < rho.degree() * rho.degree(), "C{n}: full envelope");
            checked += 1;
        }
    }
    Ok(format!("C3..C8 abelian; {checked} representations of degree >= 2 never absolutely irreducible"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("L(S3) is one-dimensional and abelian", criterion1),
        ("L(D4) has basis a - a^3", criterion2),
        ("induced Plesken representations of D4", criterion3),
        ("psi5 irreducibility report", criterion4),
        ("S3 standard form is absolutely irreducible", criterion5),
        ("reducibility inheritance on random direct sums", criterion6),
        ("dimension formula", criterion7),
        ("structure-constant laws", criterion8),
        ("restriction of induced homomorphisms", criterion9),
        ("C2 sign-twist algebra map", criterion10),
        ("C3 module table and submodule", criterion11),
        ("abelian groups", criterion12),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
