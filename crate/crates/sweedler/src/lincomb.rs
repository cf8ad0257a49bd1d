//! Finite formal linear combinations over an ordered basis-label domain.
//!
//! `LinComb<L>` is the universal carrier for algebra and coalgebra elements:
//! a finite map from basis labels to nonzero [`Scalar`] coefficients. Basis
//! domains may be infinite (ℤ, ℤ₊, monomials); structure maps are functions
//! on labels and are extended by (bi)linearity, so every computed element
//! stays finite.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::scalar::Scalar;

/// Opaque basis label: comparable, printable, and shareable across threads.
/// The total order fixes canonical printing and deterministic iteration.
pub trait Label: Clone + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T: Clone + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static> Label for T {}

/// Tensor-style pair of labels, ordered componentwise (left, then right).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Pair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Pair<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Pair { left, right }
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.left, self.right)
    }
}

/// Threefold tensor label, used for iterated comultiplication.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Triple<L> {
    pub first: L,
    pub second: L,
    pub third: L,
}

impl<L> Triple<L> {
    pub fn new(first: L, second: L, third: L) -> Self {
        Triple {
            first,
            second,
            third,
        }
    }
}

impl<L: fmt::Display> fmt::Display for Triple<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}⊗{}", self.first, self.second, self.third)
    }
}

/// A finite linear combination `Σ c_b · b` in canonical form: no stored
/// coefficient is zero, and equality is map equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<L: Label> {
    terms: BTreeMap<L, Scalar>,
}

impl<L: Label> Default for LinComb<L> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<L: Label> LinComb<L> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element `1 · label`.
    pub fn basis(label: L) -> Self {
        LinComb::term(label, Scalar::one())
    }

    /// `coeff · label`, canonicalized.
    pub fn term(label: L, coeff: Scalar) -> Self {
        let mut lc = LinComb::zero();
        lc.add_term(label, coeff);
        lc
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (L, Scalar)>) -> Self {
        let mut lc = LinComb::zero();
        for (label, coeff) in terms {
            lc.add_term(label, coeff);
        }
        lc
    }

    /// Accumulate `coeff · label`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, label: L, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `label` (zero when absent).
    pub fn coeff(&self, label: &L) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in basis-label order.
    pub fn terms(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return LinComb::zero();
        }
        LinComb::from_terms(self.terms().map(|(l, c)| (l.clone(), c * s)))
    }

    /// `self + s · other`.
    pub fn combine(&self, other: &Self, s: &Scalar) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c * s);
        }
        out
    }

    /// Push every label through `f`, merging collisions.
    pub fn map_labels<M: Label>(&self, f: impl Fn(&L) -> M) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in self.terms() {
            out.add_term(f(l), c.clone());
        }
        out
    }
}

impl<L: Label> Add for &LinComb<L> {
    type Output = LinComb<L>;
    fn add(self, rhs: &LinComb<L>) -> LinComb<L> {
        self.combine(rhs, &Scalar::one())
    }
}

impl<L: Label> Sub for &LinComb<L> {
    type Output = LinComb<L>;
    fn sub(self, rhs: &LinComb<L>) -> LinComb<L> {
        self.combine(rhs, &Scalar::from_int(-1))
    }
}

impl<L: Label> Neg for &LinComb<L> {
    type Output = LinComb<L>;
    fn neg(self) -> LinComb<L> {
        self.scaled(&Scalar::from_int(-1))
    }
}

/// Pure tensor `u ⊗ v` as a linear combination over pair labels.
pub fn tensor<A: Label, B: Label>(u: &LinComb<A>, v: &LinComb<B>) -> LinComb<Pair<A, B>> {
    let mut out = LinComb::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            out.add_term(Pair::new(a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// Linear extension of a label map `f : L → LinComb<M>` to combinations.
pub fn linear_extend<L: Label, M: Label>(
    f: impl Fn(&L) -> Result<LinComb<M>>,
    u: &LinComb<L>,
) -> Result<LinComb<M>> {
    let mut out = LinComb::zero();
    for (l, c) in u.terms() {
        let image = f(l)?;
        for (m, cm) in image.terms() {
            out.add_term(m.clone(), c * cm);
        }
    }
    Ok(out)
}

/// Bilinear extension of `f : L₁ × L₂ → LinComb<M>`:
/// `Σ_{b,b'} u[b] · v[b'] · f(b, b')`, canonicalized.
///
/// `f` must be defined on every label pair occurring in `u × v`; an undefined
/// pair surfaces as the error `f` returns for it.
pub fn bilinear_extend<L1: Label, L2: Label, M: Label>(
    f: impl Fn(&L1, &L2) -> Result<LinComb<M>>,
    u: &LinComb<L1>,
    v: &LinComb<L2>,
) -> Result<LinComb<M>> {
    let mut out = LinComb::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let image = f(a, b)?;
            let c = ca * cb;
            for (m, cm) in image.terms() {
                out.add_term(m.clone(), &c * cm);
            }
        }
    }
    Ok(out)
}

/// Canonical rendering: terms sorted by label order, zero prints as `0`,
/// coefficient `1` is suppressed, labels printing as `1` collapse to their
/// coefficient, and composite scalars are parenthesized.
impl<L: Label> fmt::Display for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (label, coeff)) in self.terms().enumerate() {
            let (neg, mag) = if coeff.is_negative_leading() {
                (true, -coeff)
            } else {
                (false, coeff.clone())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", render_term(&mag, &label.to_string()))?;
        }
        Ok(())
    }
}

/// Shared term renderer: `coeff * label` with the conventions above.
pub(crate) fn render_term(mag: &Scalar, label: &str) -> String {
    let coeff_str = if mag.is_composite() {
        format!("({mag})")
    } else {
        mag.to_string()
    };
    if label == "1" {
        coeff_str
    } else if mag.is_one() {
        label.to_string()
    } else {
        format!("{coeff_str} * {label}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::rat;

    fn x() -> LinComb<&'static str> {
        LinComb::basis("x")
    }

    fn y() -> LinComb<&'static str> {
        LinComb::basis("y")
    }

    #[test]
    fn cancellation_yields_empty() {
        let out = x().combine(&x(), &Scalar::from_int(-1));
        assert!(out.is_zero());
        assert_eq!(out, LinComb::zero());
    }

    #[test]
    fn combine_is_addition() {
        let out = x().combine(&y(), &Scalar::one());
        assert_eq!(out.coeff(&"x"), Scalar::one());
        assert_eq!(out.coeff(&"y"), Scalar::one());
    }

    #[test]
    fn coefficient_arithmetic() {
        // (2x) + (1/2)·(2x) = 3x
        let two_x = LinComb::term("x", Scalar::from_int(2));
        let out = two_x.combine(&two_x, &Scalar::rational(1, 2));
        assert_eq!(out, LinComb::term("x", Scalar::from_int(3)));
    }

    #[test]
    fn bilinear_zero_absorbs() {
        let f = |_: &&str, _: &&str| Ok(LinComb::basis("z"));
        let out = bilinear_extend(f, &LinComb::zero(), &y()).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn bilinear_tensor_pairing() {
        let f = |a: &&'static str, b: &&'static str| Ok(LinComb::basis(Pair::new(*a, *b)));
        let out = bilinear_extend(f, &x(), &y()).unwrap();
        assert_eq!(out, LinComb::basis(Pair::new("x", "y")));
    }

    #[test]
    fn bilinear_group_convolution() {
        // δ_a · δ_b = δ_{a+b} on ℤ: (δ₁ + δ₂) · δ₁ = δ₂ + δ₃
        let f = |a: &i64, b: &i64| Ok(LinComb::basis(a + b));
        let u = &LinComb::basis(1i64) + &LinComb::basis(2i64);
        let out = bilinear_extend(f, &u, &LinComb::basis(1i64)).unwrap();
        assert_eq!(out, &LinComb::basis(2i64) + &LinComb::basis(3i64));
    }

    #[test]
    fn bilinear_propagates_undefined_pair() {
        let f = |a: &i64, b: &i64| {
            if *a < 0 || *b < 0 {
                Err(Error::undefined("mul", format!("({a}, {b})")))
            } else {
                Ok(LinComb::basis(a + b))
            }
        };
        let err = bilinear_extend(f, &LinComb::basis(-1i64), &LinComb::basis(2i64)).unwrap_err();
        assert_eq!(err, Error::undefined("mul", "(-1, 2)"));
    }

    #[test]
    fn display_canonical() {
        let u = LinComb::from_terms([
            ("y", Scalar::from_int(-2)),
            ("x", Scalar::one()),
            ("z", Scalar::new(rat(1, 2), rat(1, 3))),
        ]);
        assert_eq!(u.to_string(), "x - 2 * y + (1/2+1/3*i) * z");
        assert_eq!(LinComb::<&str>::zero().to_string(), "0");
        assert_eq!(
            LinComb::term("w", Scalar::from_int(-1)).to_string(),
            "-w"
        );
    }
}
