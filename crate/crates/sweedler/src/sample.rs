//! Seeded random elements for the randomized verification suites.
//!
//! All generators take the RNG explicitly so that a fixed seed reproduces a
//! byte-identical run.

use rand::Rng;

use crate::hopf::{Delta, H4};
use crate::lincomb::LinComb;
use crate::module_algebra::{Dual, Monomial};
use crate::qplane::{Gen, QPlaneElement, Word};
use crate::scalar::{rat, Scalar};
use crate::smash::SmashElement;

/// A small Gaussian rational with numerators in ±`bound` and denominators
/// up to 4; roughly one in four are purely real.
pub fn scalar(rng: &mut impl Rng, bound: i64) -> Scalar {
    let re = rat(
        rng.random_range(-bound..=bound),
        rng.random_range(1..=4i64),
    );
    let im = if rng.random_range(0..4) == 0 {
        rat(0, 1)
    } else {
        rat(
            rng.random_range(-bound..=bound),
            rng.random_range(1..=4i64),
        )
    };
    Scalar::new(re, im)
}

pub fn nonzero_scalar(rng: &mut impl Rng, bound: i64) -> Scalar {
    loop {
        let s = scalar(rng, bound);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A unit-modulus scalar: 1, i, or a Pythagorean unit (3±4i)/5.
///
/// The seminorm suites draw every coefficient of one element as a rational
/// multiple of a single ray. Sums within an element, products of two such
/// elements, and the coefficient collisions a product creates then all stay
/// on one ray, so every modulus is an exact rational and every norm
/// comparison stays decidable.
pub fn unit_ray(rng: &mut impl Rng) -> Scalar {
    match rng.random_range(0..4) {
        0 => Scalar::one(),
        1 => Scalar::i(),
        2 => Scalar::new(rat(3, 5), rat(4, 5)),
        _ => Scalar::new(rat(3, 5), rat(-4, 5)),
    }
}

/// Polynomial with all coefficients on the given unit ray.
pub fn poly_on_ray(
    rng: &mut impl Rng,
    ray: &Scalar,
    max_degree: u32,
    max_terms: usize,
) -> LinComb<Monomial> {
    let n = rng.random_range(0..=max_terms);
    LinComb::from_terms((0..n).map(|_| {
        let r = rat(rng.random_range(-3..=3), rng.random_range(1..=4i64));
        (
            Monomial(rng.random_range(0..=max_degree)),
            &Scalar::from_rational(r) * ray,
        )
    }))
}

/// Polynomial with exactly-evaluable coefficient moduli (one random ray).
pub fn poly(rng: &mut impl Rng, max_degree: u32, max_terms: usize) -> LinComb<Monomial> {
    let ray = unit_ray(rng);
    poly_on_ray(rng, &ray, max_degree, max_terms)
}

pub fn group_elem(rng: &mut impl Rng, lo: i64, hi: i64, max_terms: usize) -> LinComb<Delta> {
    let n = rng.random_range(0..=max_terms);
    LinComb::from_terms((0..n).map(|_| (Delta(rng.random_range(lo..=hi)), scalar(rng, 3))))
}

pub fn h4_elem(rng: &mut impl Rng, max_terms: usize) -> LinComb<H4> {
    let n = rng.random_range(0..=max_terms);
    LinComb::from_terms(
        (0..n).map(|_| (H4::ALL[rng.random_range(0..4)], scalar(rng, 3))),
    )
}

pub fn dual_elem(rng: &mut impl Rng) -> LinComb<Dual> {
    LinComb::from_terms([
        (Dual::One, scalar(rng, 3)),
        (Dual::T, scalar(rng, 3)),
    ])
}

/// Smash element over ℂ[x] # ℂℤ₊ (or ℂℤ when `lo < 0`).
pub fn smash_dilation(
    rng: &mut impl Rng,
    lo: i64,
    hi: i64,
    max_degree: u32,
    max_terms: usize,
) -> SmashElement<Monomial, Delta> {
    let n = rng.random_range(1..=max_terms);
    let mut terms = LinComb::zero();
    for _ in 0..n {
        terms.add_term(
            crate::lincomb::Pair::new(
                Monomial(rng.random_range(0..=max_degree)),
                Delta(rng.random_range(lo..=hi)),
            ),
            scalar(rng, 3),
        );
    }
    SmashElement::from_lincomb(terms)
}

/// Smash element over the dual numbers # H₄.
pub fn smash_h4(rng: &mut impl Rng, max_terms: usize) -> SmashElement<Dual, H4> {
    let n = rng.random_range(1..=max_terms);
    let mut terms = LinComb::zero();
    for _ in 0..n {
        terms.add_term(
            crate::lincomb::Pair::new(
                Dual::ALL[rng.random_range(0..2)],
                H4::ALL[rng.random_range(0..4)],
            ),
            scalar(rng, 3),
        );
    }
    SmashElement::from_lincomb(terms)
}

/// Quantum-plane element with all coefficients on the given unit ray.
pub fn qplane_on_ray(
    rng: &mut impl Rng,
    ray: &Scalar,
    q: &Scalar,
    max_degree: u32,
    max_terms: usize,
) -> QPlaneElement {
    let n = rng.random_range(0..=max_terms);
    let mut terms = LinComb::zero();
    for _ in 0..n {
        let r = rat(rng.random_range(-3..=3), rng.random_range(1..=4i64));
        terms.add_term(
            crate::qplane::QMonomial {
                x: rng.random_range(0..=max_degree),
                y: rng.random_range(0..=max_degree),
            },
            &Scalar::from_rational(r) * ray,
        );
    }
    QPlaneElement::from_terms(q, terms)
}

/// Quantum-plane element with exactly-evaluable coefficient moduli.
pub fn qplane_elem(
    rng: &mut impl Rng,
    q: &Scalar,
    max_degree: u32,
    max_terms: usize,
) -> QPlaneElement {
    let ray = unit_ray(rng);
    qplane_on_ray(rng, &ray, q, max_degree, max_terms)
}

pub fn word(rng: &mut impl Rng, max_len: usize) -> Word {
    let n = rng.random_range(0..=max_len);
    Word(
        (0..n)
            .map(|_| if rng.random_bool(0.5) { Gen::X } else { Gen::Y })
            .collect(),
    )
}
