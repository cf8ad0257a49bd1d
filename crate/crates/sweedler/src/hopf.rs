//! Bialgebra and Hopf-algebra structure on basis labels.
//!
//! A structure is a bundle of functions on basis labels — multiplication,
//! comultiplication, counit, and optionally an antipode — extended to whole
//! elements by (bi)linearity. Presets cover the group algebra ℂℤ, the
//! semigroup algebra ℂℤ₊ (a bialgebra with no antipode), and Sweedler's
//! four-dimensional Hopf algebra, the smallest non-commutative,
//! non-cocommutative example.
//!
//! All axioms are verified mechanically, never assumed: the verifiers return
//! structured [`Report`]s with exact equalities on both sides.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lincomb::{bilinear_extend, linear_extend, tensor, LinComb, Label, Pair, Triple};
use crate::report::Report;
use crate::scalar::Scalar;

/// Basis element δ_k of a (semi)group algebra over ℤ or ℤ₊.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Delta(pub i64);

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d({})", self.0)
    }
}

/// Basis of Sweedler's four-dimensional Hopf algebra: words in g, x modulo
/// g² = 1, x² = 0, xg = -gx.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum H4 {
    One,
    G,
    X,
    GX,
}

impl H4 {
    pub const ALL: [H4; 4] = [H4::One, H4::G, H4::X, H4::GX];

    fn exponents(self) -> (u8, u8) {
        match self {
            H4::One => (0, 0),
            H4::G => (1, 0),
            H4::X => (0, 1),
            H4::GX => (1, 1),
        }
    }

    fn from_exponents(g: u8, x: u8) -> H4 {
        match (g, x) {
            (0, 0) => H4::One,
            (1, 0) => H4::G,
            (0, 1) => H4::X,
            _ => H4::GX,
        }
    }
}

impl fmt::Display for H4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            H4::One => "1",
            H4::G => "g",
            H4::X => "x",
            H4::GX => "g*x",
        };
        write!(f, "{s}")
    }
}

type MulFn<L> = Arc<dyn Fn(&L, &L) -> Result<LinComb<L>> + Send + Sync>;
type ComulFn<L> = Arc<dyn Fn(&L) -> Result<LinComb<Pair<L, L>>> + Send + Sync>;
type CounitFn<L> = Arc<dyn Fn(&L) -> Result<Scalar> + Send + Sync>;
type AntipodeFn<L> = Arc<dyn Fn(&L) -> Result<LinComb<L>> + Send + Sync>;

/// Unital associative algebra given by a multiplication table on basis
/// labels. Immutable after construction; all operations are pure.
#[derive(Clone)]
pub struct AlgebraSpec<L: Label> {
    name: String,
    unit: LinComb<L>,
    mul: MulFn<L>,
}

impl<L: Label> AlgebraSpec<L> {
    pub fn new(
        name: impl Into<String>,
        unit: LinComb<L>,
        mul: impl Fn(&L, &L) -> Result<LinComb<L>> + Send + Sync + 'static,
    ) -> Self {
        AlgebraSpec {
            name: name.into(),
            unit,
            mul: Arc::new(mul),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn unit(&self) -> &LinComb<L> {
        &self.unit
    }

    pub fn mul_basis(&self, a: &L, b: &L) -> Result<LinComb<L>> {
        (self.mul)(a, b)
    }

    /// Product of two elements, by bilinear extension of the basis table.
    pub fn mul(&self, u: &LinComb<L>, v: &LinComb<L>) -> Result<LinComb<L>> {
        bilinear_extend(|a, b| self.mul_basis(a, b), u, v)
    }

    /// Associativity and two-sided unit on every triple from `labels`.
    pub fn verify(&self, labels: &[L]) -> Result<Report> {
        let mut report = Report::new(self.name.clone());
        for a in labels {
            let ea = LinComb::basis(a.clone());
            report.check_eq(
                "unit-left",
                a.to_string(),
                &self.mul(&self.unit, &ea)?,
                &ea,
            );
            report.check_eq(
                "unit-right",
                a.to_string(),
                &self.mul(&ea, &self.unit)?,
                &ea,
            );
        }
        for a in labels {
            for b in labels {
                for c in labels {
                    let ab_c = self.mul(&self.mul_basis(a, b)?, &LinComb::basis(c.clone()))?;
                    let a_bc = self.mul(&LinComb::basis(a.clone()), &self.mul_basis(b, c)?)?;
                    report.check_eq("assoc", format!("({a}, {b}, {c})"), &ab_c, &a_bc);
                }
            }
        }
        Ok(report)
    }
}

/// Comultiplication of an element, written out as its finite list of
/// summands `Σ c · (left ⊗ right)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweedlerExpansion<L: Label> {
    terms: LinComb<Pair<L, L>>,
}

impl<L: Label> SweedlerExpansion<L> {
    pub fn summands(&self) -> impl Iterator<Item = (&Scalar, &L, &L)> {
        self.terms.terms().map(|(p, c)| (c, &p.left, &p.right))
    }

    pub fn as_lincomb(&self) -> &LinComb<Pair<L, L>> {
        &self.terms
    }
}

impl<L: Label> fmt::Display for SweedlerExpansion<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

/// A bialgebra on basis labels; a Hopf algebra when `antipode` is present.
///
/// Asking for the antipode of a plain bialgebra is an [`Error::NoAntipode`].
/// That error is part of the contract: the semigroup algebra ℂℤ₊ genuinely
/// has none, which is what separates it from its Hopf repair ℂℤ.
#[derive(Clone)]
pub struct BialgebraSpec<L: Label> {
    pub algebra: AlgebraSpec<L>,
    comul: ComulFn<L>,
    counit: CounitFn<L>,
    antipode: Option<AntipodeFn<L>>,
}

impl<L: Label> BialgebraSpec<L> {
    pub fn new(
        algebra: AlgebraSpec<L>,
        comul: impl Fn(&L) -> Result<LinComb<Pair<L, L>>> + Send + Sync + 'static,
        counit: impl Fn(&L) -> Result<Scalar> + Send + Sync + 'static,
    ) -> Self {
        BialgebraSpec {
            algebra,
            comul: Arc::new(comul),
            counit: Arc::new(counit),
            antipode: None,
        }
    }

    pub fn with_antipode(
        mut self,
        antipode: impl Fn(&L) -> Result<LinComb<L>> + Send + Sync + 'static,
    ) -> Self {
        self.antipode = Some(Arc::new(antipode));
        self
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn unit(&self) -> &LinComb<L> {
        self.algebra.unit()
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn comul_basis(&self, l: &L) -> Result<LinComb<Pair<L, L>>> {
        (self.comul)(l)
    }

    pub fn counit_basis(&self, l: &L) -> Result<Scalar> {
        (self.counit)(l)
    }

    pub fn antipode_basis(&self, l: &L) -> Result<LinComb<L>> {
        match &self.antipode {
            Some(s) => s(l),
            None => Err(Error::NoAntipode {
                preset: self.name().to_string(),
            }),
        }
    }

    pub fn comul(&self, u: &LinComb<L>) -> Result<LinComb<Pair<L, L>>> {
        linear_extend(|l| self.comul_basis(l), u)
    }

    pub fn counit(&self, u: &LinComb<L>) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (l, c) in u.terms() {
            out += &(c * &self.counit_basis(l)?);
        }
        Ok(out)
    }

    pub fn antipode(&self, u: &LinComb<L>) -> Result<LinComb<L>> {
        linear_extend(|l| self.antipode_basis(l), u)
    }

    /// First-order Sweedler expansion `Δh = Σ h₍₁₎ ⊗ h₍₂₎`.
    pub fn sweedler(&self, h: &LinComb<L>) -> Result<SweedlerExpansion<L>> {
        Ok(SweedlerExpansion {
            terms: self.comul(h)?,
        })
    }

    /// `(Δ ⊗ id)Δ`, flattened to triples.
    pub fn comul2_left(&self, u: &LinComb<L>) -> Result<LinComb<Triple<L>>> {
        linear_extend(
            |p: &Pair<L, L>| {
                let inner = self.comul_basis(&p.left)?;
                Ok(inner.map_labels(|q| Triple::new(q.left.clone(), q.right.clone(), p.right.clone())))
            },
            &self.comul(u)?,
        )
    }

    /// `(id ⊗ Δ)Δ`, flattened to triples. Coassociativity says this equals
    /// [`Self::comul2_left`]; the verifier checks it rather than assuming it.
    pub fn comul2_right(&self, u: &LinComb<L>) -> Result<LinComb<Triple<L>>> {
        linear_extend(
            |p: &Pair<L, L>| {
                let inner = self.comul_basis(&p.right)?;
                Ok(inner.map_labels(|q| Triple::new(p.left.clone(), q.left.clone(), q.right.clone())))
            },
            &self.comul(u)?,
        )
    }

    /// Second-order Sweedler expansion `Σ h₍₁₎ ⊗ h₍₂₎ ⊗ h₍₃₎` (left-nested).
    pub fn sweedler2(&self, h: &LinComb<L>) -> Result<LinComb<Triple<L>>> {
        self.comul2_left(h)
    }

    /// Componentwise product on H ⊗ H.
    pub fn tensor_mul(
        &self,
        u: &LinComb<Pair<L, L>>,
        v: &LinComb<Pair<L, L>>,
    ) -> Result<LinComb<Pair<L, L>>> {
        bilinear_extend(
            |a: &Pair<L, L>, b: &Pair<L, L>| {
                Ok(tensor(
                    &self.algebra.mul_basis(&a.left, &b.left)?,
                    &self.algebra.mul_basis(&a.right, &b.right)?,
                ))
            },
            u,
            v,
        )
    }

    /// The unit of H ⊗ H.
    pub fn tensor_unit(&self) -> LinComb<Pair<L, L>> {
        tensor(self.unit(), self.unit())
    }

    /// Coassociativity and both counit identities on each label.
    pub fn verify_coalgebra(&self, labels: &[L]) -> Result<Report> {
        let mut report = Report::new(self.name().to_string());
        for l in labels {
            let e = LinComb::basis(l.clone());
            let left = self.comul2_left(&e)?;
            let right = self.comul2_right(&e)?;
            report.check_eq("coassoc", l.to_string(), &left, &right);

            // (ε⊗id)Δ = id = (id⊗ε)Δ
            let d = self.comul_basis(l)?;
            let mut eps_left = LinComb::zero();
            let mut eps_right = LinComb::zero();
            for (p, c) in d.terms() {
                eps_left.add_term(p.right.clone(), c * &self.counit_basis(&p.left)?);
                eps_right.add_term(p.left.clone(), c * &self.counit_basis(&p.right)?);
            }
            report.check_eq("counit-left", l.to_string(), &eps_left, &e);
            report.check_eq("counit-right", l.to_string(), &eps_right, &e);
        }
        Ok(report)
    }

    /// Δ and ε are algebra maps on each tested pair, and respect the unit.
    pub fn verify_bialgebra(&self, pairs: &[(L, L)]) -> Result<Report> {
        let mut report = Report::new(self.name().to_string());
        report.check_eq(
            "comul-unit",
            "1",
            &self.comul(self.unit())?,
            &self.tensor_unit(),
        );
        report.check_eq(
            "counit-unit",
            "1",
            &self.counit(self.unit())?,
            &Scalar::one(),
        );
        for (a, b) in pairs {
            let prod = self.algebra.mul_basis(a, b)?;
            let lhs = self.comul(&prod)?;
            let rhs = self.tensor_mul(&self.comul_basis(a)?, &self.comul_basis(b)?)?;
            report.check_eq("comul-mult", format!("({a}, {b})"), &lhs, &rhs);

            let lhs = self.counit(&prod)?;
            let rhs = &self.counit_basis(a)? * &self.counit_basis(b)?;
            report.check_eq("counit-mult", format!("({a}, {b})"), &lhs, &rhs);
        }
        Ok(report)
    }

    /// `Σ S(h₍₁₎)h₍₂₎ = ε(h)·1 = Σ h₍₁₎S(h₍₂₎)` on each label.
    pub fn verify_antipode(&self, labels: &[L]) -> Result<Report> {
        if !self.is_hopf() {
            return Err(Error::NoAntipode {
                preset: self.name().to_string(),
            });
        }
        let mut report = Report::new(self.name().to_string());
        for l in labels {
            let expected = self.unit().scaled(&self.counit_basis(l)?);
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for (p, c) in self.comul_basis(l)?.terms() {
                let s_first = self.antipode_basis(&p.left)?;
                let prod = self.algebra.mul(&s_first, &LinComb::basis(p.right.clone()))?;
                left = left.combine(&prod, c);

                let s_second = self.antipode_basis(&p.right)?;
                let prod = self.algebra.mul(&LinComb::basis(p.left.clone()), &s_second)?;
                right = right.combine(&prod, c);
            }
            report.check_eq("antipode-left", l.to_string(), &left, &expected);
            report.check_eq("antipode-right", l.to_string(), &right, &expected);
        }
        Ok(report)
    }

    /// Whether `flip ∘ Δ = Δ` on every given label.
    pub fn is_cocommutative_on(&self, labels: &[L]) -> Result<bool> {
        for l in labels {
            let d = self.comul_basis(l)?;
            if flip(&d) != d {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Swap the tensor factors of a combination over pairs.
pub fn flip<A: Label, B: Label>(u: &LinComb<Pair<A, B>>) -> LinComb<Pair<B, A>> {
    u.map_labels(|p| Pair::new(p.right.clone(), p.left.clone()))
}

fn delta_grouplike(preset: &'static str, restrict_nonneg: bool) -> BialgebraSpec<Delta> {
    let check = move |k: &Delta, map: &'static str| -> Result<()> {
        if restrict_nonneg && k.0 < 0 {
            Err(Error::undefined(map, k))
        } else {
            Ok(())
        }
    };
    let algebra = AlgebraSpec::new(
        preset,
        LinComb::basis(Delta(0)),
        move |a: &Delta, b: &Delta| {
            check(a, "mul")?;
            check(b, "mul")?;
            Ok(LinComb::basis(Delta(a.0 + b.0)))
        },
    );
    BialgebraSpec::new(
        algebra,
        move |k: &Delta| {
            check(k, "comul")?;
            Ok(LinComb::basis(Pair::new(*k, *k)))
        },
        move |k: &Delta| {
            check(k, "counit")?;
            Ok(Scalar::one())
        },
    )
}

/// The group algebra ℂℤ: basis {δ_k}, δ_aδ_b = δ_{a+b}, grouplike Δ,
/// antipode S(δ_k) = δ_{-k}.
pub fn group_z() -> BialgebraSpec<Delta> {
    delta_grouplike("group-z", false).with_antipode(|k: &Delta| Ok(LinComb::basis(Delta(-k.0))))
}

/// The semigroup algebra ℂℤ₊: the same formulas restricted to k ≥ 0, with no
/// antipode (ℤ₊ has no inverses).
pub fn semigroup_zplus() -> BialgebraSpec<Delta> {
    delta_grouplike("semigroup-zplus", true)
}

/// Multiply two basis words of H₄ by rewriting: concatenate the exponent
/// words and push every g left past x with the rule xg → -gx, then apply
/// g² → 1 and x² → 0.
fn h4_mul(a: &H4, b: &H4) -> Result<LinComb<H4>> {
    let (ga, xa) = a.exponents();
    let (gb, xb) = b.exponents();
    // x^{xa} g^{gb} = (-1)^{xa·gb} g^{gb} x^{xa}
    if xa + xb >= 2 {
        return Ok(LinComb::zero());
    }
    let sign = if xa * gb == 1 {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    };
    Ok(LinComb::term(
        H4::from_exponents((ga + gb) % 2, xa + xb),
        sign,
    ))
}

/// Sweedler's four-dimensional Hopf algebra: basis {1, g, x, gx} with
/// g² = 1, x² = 0, xg = -gx; Δg = g⊗g, Δx = x⊗1 + g⊗x, ε(g) = 1, ε(x) = 0,
/// S(g) = g, S(x) = -gx. Non-commutative and non-cocommutative.
pub fn sweedler_h4() -> BialgebraSpec<H4> {
    let algebra = AlgebraSpec::new("sweedler-h4", LinComb::basis(H4::One), h4_mul);
    BialgebraSpec::new(
        algebra,
        |l: &H4| {
            let one = H4::One;
            let out = match l {
                H4::One => LinComb::basis(Pair::new(one, one)),
                H4::G => LinComb::basis(Pair::new(H4::G, H4::G)),
                // Δx = x⊗1 + g⊗x
                H4::X => LinComb::from_terms([
                    (Pair::new(H4::X, one), Scalar::one()),
                    (Pair::new(H4::G, H4::X), Scalar::one()),
                ]),
                // Δ(gx) = Δg·Δx = gx⊗g + 1⊗gx
                H4::GX => LinComb::from_terms([
                    (Pair::new(H4::GX, H4::G), Scalar::one()),
                    (Pair::new(one, H4::GX), Scalar::one()),
                ]),
            };
            Ok(out)
        },
        |l: &H4| {
            Ok(match l {
                H4::One | H4::G => Scalar::one(),
                H4::X | H4::GX => Scalar::zero(),
            })
        },
    )
    .with_antipode(|l: &H4| {
        Ok(match l {
            H4::One => LinComb::basis(H4::One),
            H4::G => LinComb::basis(H4::G),
            H4::X => LinComb::term(H4::GX, Scalar::from_int(-1)),
            // S(gx) = S(x)S(g) = -gx·g = x
            H4::GX => LinComb::basis(H4::X),
        })
    })
}

/// Labels δ_k for k in the given inclusive range.
pub fn delta_range(lo: i64, hi: i64) -> Vec<Delta> {
    (lo..=hi).map(Delta).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs<L: Label>(labels: &[L]) -> Vec<(L, L)> {
        let mut out = Vec::new();
        for a in labels {
            for b in labels {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    #[test]
    fn group_z_grouplike_comul() {
        let h = group_z();
        assert_eq!(
            h.comul_basis(&Delta(1)).unwrap(),
            LinComb::basis(Pair::new(Delta(1), Delta(1)))
        );
    }

    #[test]
    fn group_z_axioms_pass() {
        let h = group_z();
        let labels = delta_range(-6, 6);
        assert!(h.verify_coalgebra(&labels).unwrap().passed());
        assert!(h.verify_bialgebra(&all_pairs(&labels)).unwrap().passed());
        assert!(h.verify_antipode(&labels).unwrap().passed());
        assert!(h.algebra.verify(&delta_range(-3, 3)).unwrap().passed());
    }

    #[test]
    fn semigroup_zplus_has_no_antipode() {
        let h = semigroup_zplus();
        let labels = delta_range(0, 6);
        assert!(h.verify_coalgebra(&labels).unwrap().passed());
        assert!(h.verify_bialgebra(&all_pairs(&labels)).unwrap().passed());
        let err = h.verify_antipode(&labels).unwrap_err();
        assert!(matches!(err, Error::NoAntipode { .. }));
        assert!(err.to_string().contains("no antipode"));
    }

    #[test]
    fn semigroup_zplus_rejects_negative_labels() {
        let h = semigroup_zplus();
        let err = h.algebra.mul_basis(&Delta(-1), &Delta(2)).unwrap_err();
        assert_eq!(err, Error::undefined("mul", "d(-1)"));
    }

    #[test]
    fn h4_multiplication_table() {
        let h = sweedler_h4();
        let mul = |a, b| h.algebra.mul_basis(&a, &b).unwrap();
        assert_eq!(mul(H4::G, H4::G), LinComb::basis(H4::One));
        assert_eq!(mul(H4::X, H4::X), LinComb::zero());
        assert_eq!(
            mul(H4::X, H4::G),
            LinComb::term(H4::GX, Scalar::from_int(-1))
        );
        assert_eq!(mul(H4::G, H4::X), LinComb::basis(H4::GX));
        assert_eq!(mul(H4::GX, H4::GX), LinComb::zero());
        assert_eq!(mul(H4::GX, H4::G), LinComb::term(H4::X, Scalar::from_int(-1)));
    }

    #[test]
    fn h4_axioms_pass_exhaustively() {
        let h = sweedler_h4();
        assert!(h.algebra.verify(&H4::ALL).unwrap().passed());
        assert!(h.verify_coalgebra(&H4::ALL).unwrap().passed());
        assert!(h.verify_bialgebra(&all_pairs(&H4::ALL)).unwrap().passed());
        assert!(h.verify_antipode(&H4::ALL).unwrap().passed());
    }

    #[test]
    fn h4_sweedler_expansions() {
        let h = sweedler_h4();
        let x = LinComb::basis(H4::X);
        let exp = h.sweedler(&x).unwrap();
        assert_eq!(
            exp.as_lincomb(),
            &LinComb::from_terms([
                (Pair::new(H4::X, H4::One), Scalar::one()),
                (Pair::new(H4::G, H4::X), Scalar::one()),
            ])
        );
        // (Δ⊗id)Δx = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x, and both association orders agree.
        let expected = LinComb::from_terms([
            (Triple::new(H4::X, H4::One, H4::One), Scalar::one()),
            (Triple::new(H4::G, H4::X, H4::One), Scalar::one()),
            (Triple::new(H4::G, H4::G, H4::X), Scalar::one()),
        ]);
        assert_eq!(h.comul2_left(&x).unwrap(), expected);
        assert_eq!(h.comul2_right(&x).unwrap(), expected);
    }

    #[test]
    fn grouplike_order2_expansion() {
        let h = group_z();
        let d3 = LinComb::basis(Delta(3));
        assert_eq!(
            h.sweedler2(&d3).unwrap(),
            LinComb::basis(Triple::new(Delta(3), Delta(3), Delta(3)))
        );
    }

    #[test]
    fn h4_antipode_on_x() {
        // Σ S(x₍₁₎)x₍₂₎ = S(x)·1 + S(g)·x = -gx + gx = 0 = ε(x)·1
        let h = sweedler_h4();
        let report = h.verify_antipode(&[H4::X]).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn cocommutativity_split() {
        let labels = delta_range(-4, 4);
        assert!(group_z().is_cocommutative_on(&labels).unwrap());
        assert!(semigroup_zplus()
            .is_cocommutative_on(&delta_range(0, 4))
            .unwrap());
        // flip(Δx) = 1⊗x + x⊗g ≠ Δx: the whole point of testing H₄.
        let h4 = sweedler_h4();
        assert!(!h4.is_cocommutative_on(&H4::ALL).unwrap());
        let dx = h4.comul_basis(&H4::X).unwrap();
        assert_ne!(flip(&dx), dx);
    }

    #[test]
    fn corrupted_comultiplication_is_reported() {
        // Replace Δx by x⊗1: (id⊗ε)Δx = x still holds but (ε⊗id)Δx = 0 ≠ x.
        let algebra = AlgebraSpec::new("corrupted-h4", LinComb::basis(H4::One), h4_mul);
        let bad = BialgebraSpec::new(
            algebra,
            |l: &H4| {
                Ok(match l {
                    H4::X => LinComb::basis(Pair::new(H4::X, H4::One)),
                    other => sweedler_h4().comul_basis(other)?,
                })
            },
            |l: &H4| sweedler_h4().counit_basis(l),
        );
        let report = bad.verify_coalgebra(&[H4::X]).unwrap();
        assert!(!report.passed());
        let failed: Vec<_> = report.failures().map(|c| c.axiom.clone()).collect();
        assert!(failed.contains(&"counit-left".to_string()));
        assert!(!failed.contains(&"counit-right".to_string()));
    }

    #[test]
    fn bialgebra_check_on_h4_nilpotent_pair() {
        // Δ(x²) = 0 must equal (Δx)², whose cross terms cancel via xg = -gx.
        let h = sweedler_h4();
        let report = h.verify_bialgebra(&[(H4::X, H4::X), (H4::G, H4::X)]).unwrap();
        assert!(report.passed());
        let sq = h
            .tensor_mul(
                &h.comul_basis(&H4::X).unwrap(),
                &h.comul_basis(&H4::X).unwrap(),
            )
            .unwrap();
        assert!(sq.is_zero());
    }
}
