use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qsphere_core::hwv::{
    apply_generator, build_generator_matrices, cartan_entry, generator_index, hwv_candidate, linear_independence,
    verify_candidate, verify_highest_weight, CoordinateVariable, GeneratorAction, GeneratorLabel, Monomial,
    SymPolynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn letters(n: usize) -> [SymPolynomial; 4] {
    [
        CoordinateVariable::x(n),
        CoordinateVariable::y(n),
        CoordinateVariable::z(n),
        CoordinateVariable::w(n),
    ]
    .map(SymPolynomial::var)
}

fn all_variables(n: usize) -> Vec<CoordinateVariable> {
    let top = 2 * n as u32;
    [1, top]
        .into_iter()
        .flat_map(|r| (1..=top).map(move |c| CoordinateVariable::new(r, c, n).unwrap()))
        .collect()
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> SymPolynomial {
    let vars = all_variables(n);
    let mut p = SymPolynomial::zero();
    for _ in 0..rng.random_range(1..=4) {
        let deg = rng.random_range(0..=3);
        let mono: Vec<_> = (0..deg).map(|_| vars[rng.random_range(0..vars.len())]).collect();
        let c = BigRational::new(rng.random_range(-5..=5).into(), rng.random_range(1..=4).into());
        p = &p + &SymPolynomial::term(c, Monomial::from_vars(mono));
    }
    p
}

/// `a + bε` with `ε² = 0`.
#[derive(Clone)]
struct Dual(BigRational, BigRational);

impl Dual {
    fn mul(&self, o: &Dual) -> Dual {
        Dual(&self.0 * &o.0, &self.0 * &o.1 + &self.1 * &o.0)
    }
}

/// Derivative of `p` at the point `U` along `U ↦ U(I + εT)`, which is how a
/// Lie algebra element acts on matrix coefficients from the right.
fn directional_derivative(
    p: &SymPolynomial,
    point: &HashMap<CoordinateVariable, BigRational>,
    g: &GeneratorAction,
) -> BigRational {
    let dim = g.matrix.dim();
    let lifted = |v: CoordinateVariable| {
        let tangent = (1..=dim).fold(BigRational::zero(), |acc, m| {
            let um = CoordinateVariable::new(v.row(), m as u32, g.rank).unwrap();
            acc + &point[&um] * q(g.matrix.entry(m, v.col() as usize))
        });
        Dual(point[&v].clone(), tangent)
    };
    let mut total = BigRational::zero();
    for (mono, c) in p.terms() {
        let d = mono
            .vars()
            .iter()
            .fold(Dual(BigRational::one(), BigRational::zero()), |acc, &v| {
                acc.mul(&lifted(v))
            });
        total += c * d.1;
    }
    total
}

fn evaluate(p: &SymPolynomial, point: &HashMap<CoordinateVariable, BigRational>) -> BigRational {
    p.terms()
        .map(|(m, c)| m.vars().iter().fold(c.clone(), |acc, v| acc * &point[v]))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> HashMap<CoordinateVariable, BigRational> {
    all_variables(n)
        .into_iter()
        .map(|v| {
            (
                v,
                BigRational::new(rng.random_range(-9..=9).into(), rng.random_range(1..=5).into()),
            )
        })
        .collect()
}

#[test]
fn action_matches_dual_number_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=3 {
        let gens = build_generator_matrices(n).unwrap();
        for _ in 0..20 {
            let p = random_poly(&mut rng, n);
            let point = random_point(&mut rng, n);
            for g in &gens {
                let image = apply_generator(g, &p).unwrap();
                assert_eq!(
                    evaluate(&image, &point),
                    directional_derivative(&p, &point, g),
                    "{}",
                    g.label
                );
            }
        }
    }
}

#[test]
fn leibniz_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let gens = build_generator_matrices(2).unwrap();
    for _ in 0..200 {
        let a = random_poly(&mut rng, 2);
        let b = random_poly(&mut rng, 2);
        let ab = &a * &b;
        for g in &gens {
            let lhs = apply_generator(g, &ab).unwrap();
            let rhs = &(&apply_generator(g, &a).unwrap() * &b) + &(&a * &apply_generator(g, &b).unwrap());
            assert_eq!(lhs, rhs, "{}", g.label);
        }
    }
}

#[test]
fn weights_add_under_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=3 {
        let gens = build_generator_matrices(n).unwrap();
        let vars = all_variables(n);
        for _ in 0..50 {
            // monomials are weight vectors for every H_i
            let pick = |rng: &mut ChaCha8Rng| {
                let k = rng.random_range(1..=3);
                SymPolynomial::term(
                    q(1),
                    Monomial::from_vars((0..k).map(|_| vars[rng.random_range(0..vars.len())]).collect()),
                )
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            for i in 1..=n {
                let h = &gens[generator_index(n, GeneratorLabel::H(i))];
                let ea = apply_generator(h, &a).unwrap().ratio_to(&a).unwrap();
                let eb = apply_generator(h, &b).unwrap().ratio_to(&b).unwrap();
                let ab = &a * &b;
                assert_eq!(apply_generator(h, &ab).unwrap().ratio_to(&ab), Some(ea + eb));
            }
        }
    }
}

#[test]
fn generator_examples() {
    let n = 2;
    let gens = build_generator_matrices(n).unwrap();
    let g = |l| &gens[generator_index(n, l)];
    let [x, y, z, w] = letters(n);
    let minor = &(&x * &w) - &(&y * &z);
    assert!(apply_generator(g(GeneratorLabel::E(1)), &minor).unwrap().is_zero());
    let z2 = z.pow(2);
    assert_eq!(apply_generator(g(GeneratorLabel::H(1)), &z2).unwrap(), z2.scale(&q(2)));
    assert!(apply_generator(g(GeneratorLabel::E(2)), &z).unwrap().is_zero());
    let e1 = &g(GeneratorLabel::E(1)).matrix;
    let f1 = &g(GeneratorLabel::F(1)).matrix;
    assert_eq!(&e1.commutator(f1), &g(GeneratorLabel::H(1)).matrix);
}

#[test]
fn e1_kills_z_and_w() {
    for n in 2..=4 {
        let gens = build_generator_matrices(n).unwrap();
        let e1 = &gens[generator_index(n, GeneratorLabel::E(1))];
        let [x, y, z, w] = letters(n);
        assert!(apply_generator(e1, &z).unwrap().is_zero());
        assert!(apply_generator(e1, &w).unwrap().is_zero());
        assert_eq!(apply_generator(e1, &x).unwrap(), -&z);
        assert_eq!(apply_generator(e1, &y).unwrap(), -&w);
    }
}

#[test]
fn chevalley_relations_up_to_rank_four() {
    for n in 2..=4 {
        let gens = build_generator_matrices(n).unwrap();
        let m = |l| &gens[generator_index(n, l)].matrix;
        for i in 1..=n {
            assert!(m(GeneratorLabel::H(i)).is_diagonal());
            for j in 1..=n {
                let a = cartan_entry(n, i, j);
                let he = m(GeneratorLabel::H(i)).commutator(m(GeneratorLabel::E(j)));
                let e = m(GeneratorLabel::E(j));
                for r in 1..=2 * n {
                    for c in 1..=2 * n {
                        assert_eq!(he.entry(r, c), a * e.entry(r, c));
                    }
                }
                let ef = m(GeneratorLabel::E(i)).commutator(m(GeneratorLabel::F(j)));
                let expect_h = i == j;
                for r in 1..=2 * n {
                    for c in 1..=2 * n {
                        let want = if expect_h {
                            m(GeneratorLabel::H(i)).entry(r, c)
                        } else {
                            0
                        };
                        assert_eq!(ef.entry(r, c), want);
                    }
                }
            }
        }
    }
}

#[test]
fn cartan_matrix_is_type_c() {
    // rank 3: the long simple root is the last one
    let want = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]];
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(cartan_entry(3, i, j), want[i - 1][j - 1]);
        }
    }
}

#[test]
fn full_family_is_independent_highest_weight() {
    for n in 2..=3 {
        for l1 in 0..=4u32 {
            for l2 in 0..=l1 {
                let mut family = Vec::new();
                for j in 0..=l1 - l2 {
                    let r = verify_candidate(n, l1, l2, j).unwrap();
                    assert!(r.passed, "n={n} ({l1},{l2},{j}): {r:?}");
                    family.push(hwv_candidate(n, l1, l2, j).unwrap());
                }
                assert_eq!(linear_independence(&family), (true, (l1 - l2 + 1) as usize));
            }
        }
    }
}

#[test]
fn wrong_weight_fails() {
    let b = hwv_candidate(3, 2, 1, 0).unwrap();
    assert!(verify_highest_weight(&b, 2, 1, 3).unwrap().passed);
    let r = verify_highest_weight(&b, 2, 0, 3).unwrap();
    assert!(!r.passed);
    assert!(r.annihilated.iter().all(|&a| a));
    // a sum of two different weights is no eigenvector
    let [x, _, _, w] = letters(2);
    let r = verify_highest_weight(&(&x + &w), 1, 0, 2).unwrap();
    assert_eq!(r.h_eigenvalues[0], None);
}
