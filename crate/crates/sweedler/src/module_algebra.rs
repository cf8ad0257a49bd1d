//! Module algebras: an algebra A carrying an action of a bialgebra H under
//! which the product and unit of A are H-module maps.
//!
//! The action is stored on basis pairs and extended bilinearly, like every
//! other structure map. Presets: the q-dilation action of ℂℤ₊ (or ℂℤ) on
//! ℂ[x], where δ_k scales xⁿ by q^{-kn}, and Sweedler's H₄ acting on the
//! dual numbers ℂ[t]/(t²).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{group_z, semigroup_zplus, sweedler_h4, BialgebraSpec, Delta, H4};
use crate::hopf::AlgebraSpec;
use crate::lincomb::{bilinear_extend, LinComb, Label};
use crate::report::Report;
use crate::scalar::Scalar;

/// Basis monomial xⁿ of the polynomial algebra ℂ[x].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial(pub u32);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "x"),
            n => write!(f, "x^{n}"),
        }
    }
}

/// Basis of the dual numbers ℂ[t]/(t²).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Dual {
    One,
    T,
}

impl Dual {
    pub const ALL: [Dual; 2] = [Dual::One, Dual::T];
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dual::One => write!(f, "1"),
            Dual::T => write!(f, "t"),
        }
    }
}

/// ℂ[x] with basis {xⁿ}.
pub fn polynomial_algebra() -> AlgebraSpec<Monomial> {
    AlgebraSpec::new(
        "poly-x",
        LinComb::basis(Monomial(0)),
        |a: &Monomial, b: &Monomial| Ok(LinComb::basis(Monomial(a.0 + b.0))),
    )
}

/// ℂ[t]/(t²) with basis {1, t}.
pub fn dual_number_algebra() -> AlgebraSpec<Dual> {
    AlgebraSpec::new(
        "dual-numbers",
        LinComb::basis(Dual::One),
        |a: &Dual, b: &Dual| {
            Ok(match (a, b) {
                (Dual::One, other) | (other, Dual::One) => LinComb::basis(*other),
                (Dual::T, Dual::T) => LinComb::zero(),
            })
        },
    )
}

type ActionFn<H, A> = Arc<dyn Fn(&H, &A) -> Result<LinComb<A>> + Send + Sync>;

/// An H-module algebra: a bialgebra H, an algebra A, and the action on basis
/// pairs. Pure and immutable; verification produces reports, not panics.
#[derive(Clone)]
pub struct ModuleAlgebraSpec<H: Label, A: Label> {
    name: String,
    pub hopf: BialgebraSpec<H>,
    pub algebra: AlgebraSpec<A>,
    /// Deformation parameter for the dilation presets; `None` when the
    /// action has no parameter.
    pub q: Option<Scalar>,
    action: ActionFn<H, A>,
}

impl<H: Label, A: Label> ModuleAlgebraSpec<H, A> {
    pub fn new(
        name: impl Into<String>,
        hopf: BialgebraSpec<H>,
        algebra: AlgebraSpec<A>,
        q: Option<Scalar>,
        action: impl Fn(&H, &A) -> Result<LinComb<A>> + Send + Sync + 'static,
    ) -> Self {
        ModuleAlgebraSpec {
            name: name.into(),
            hopf,
            algebra,
            q,
            action: Arc::new(action),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn act_basis(&self, h: &H, a: &A) -> Result<LinComb<A>> {
        (self.action)(h, a)
    }

    /// `h · a` by bilinear extension of the basis action.
    pub fn act(&self, h: &LinComb<H>, a: &LinComb<A>) -> Result<LinComb<A>> {
        bilinear_extend(|hl, al| self.act_basis(hl, al), h, a)
    }

    /// Module and module-algebra axioms on each sample `(h, h', a, a')`:
    /// `(hh')·a = h·(h'·a)`, `1·a = a`, `h·(aa') = Σ (h₍₁₎·a)(h₍₂₎·a')`,
    /// and `h·1 = ε(h)·1`.
    pub fn verify(&self, samples: &[(H, H, A, A)]) -> Result<Report> {
        let mut report = Report::new(self.name.clone());
        for (h, h2, a, a2) in samples {
            let ea = LinComb::basis(a.clone());
            let labels = format!("(h={h}, h'={h2}, a={a}, a'={a2})");

            let hh = self.hopf.algebra.mul_basis(h, h2)?;
            let lhs = self.act(&hh, &ea)?;
            let rhs = self.act(&LinComb::basis(h.clone()), &self.act_basis(h2, a)?)?;
            report.check_eq("module-assoc", labels.clone(), &lhs, &rhs);

            let lhs = self.act(self.hopf.unit(), &ea)?;
            report.check_eq("module-unit", format!("a={a}"), &lhs, &ea);

            let prod = self.algebra.mul_basis(a, a2)?;
            let lhs = self.act(&LinComb::basis(h.clone()), &prod)?;
            let mut rhs = LinComb::zero();
            for (p, c) in self.hopf.comul_basis(h)?.terms() {
                let left = self.act_basis(&p.left, a)?;
                let right = self.act_basis(&p.right, a2)?;
                rhs = rhs.combine(&self.algebra.mul(&left, &right)?, c);
            }
            report.check_eq("action-product", labels.clone(), &lhs, &rhs);

            let lhs = self.act_basis(h, Self::unit_label(&self.algebra))?;
            let rhs = self.algebra.unit().scaled(&self.hopf.counit_basis(h)?);
            report.check_eq("action-unit", format!("h={h}"), &lhs, &rhs);
        }
        Ok(report)
    }

    fn unit_label(algebra: &AlgebraSpec<A>) -> &A {
        // Every algebra in this crate has a single-term unit basis element.
        algebra
            .unit()
            .support()
            .next()
            .expect("algebra unit must be nonzero")
    }
}

fn require_nonzero_q(q: &Scalar) -> Result<()> {
    if q.is_zero() {
        Err(Error::Parameter("q must be nonzero".into()))
    } else {
        Ok(())
    }
}

fn dilation_action(q: Scalar) -> impl Fn(&Delta, &Monomial) -> Result<LinComb<Monomial>> {
    move |k: &Delta, m: &Monomial| {
        // δ_k · xⁿ = q^{-kn} xⁿ
        let exp = -(k.0 * i64::from(m.0));
        Ok(LinComb::term(*m, q.pow(exp)?))
    }
}

/// ℂℤ₊ acting on ℂ[x] by dilations: δ_k · xⁿ = q^{-kn} xⁿ. Requires q ≠ 0.
/// The acting bialgebra has no antipode.
pub fn q_dilation_zplus(q: &Scalar) -> Result<ModuleAlgebraSpec<Delta, Monomial>> {
    require_nonzero_q(q)?;
    let action = dilation_action(q.clone());
    Ok(ModuleAlgebraSpec::new(
        "qdilation",
        semigroup_zplus(),
        polynomial_algebra(),
        Some(q.clone()),
        move |k: &Delta, m: &Monomial| {
            if k.0 < 0 {
                return Err(Error::undefined("action", k));
            }
            action(k, m)
        },
    ))
}

/// ℂℤ acting on ℂ[x] by dilations; the Hopf variant of [`q_dilation_zplus`].
pub fn q_dilation_z(q: &Scalar) -> Result<ModuleAlgebraSpec<Delta, Monomial>> {
    require_nonzero_q(q)?;
    Ok(ModuleAlgebraSpec::new(
        "qdilation-z",
        group_z(),
        polynomial_algebra(),
        Some(q.clone()),
        dilation_action(q.clone()),
    ))
}

/// H₄ acting on the dual numbers: g·1 = 1, g·t = -t, x·1 = 0, x·t = 1.
/// The action of the word gx is derived from the module axiom,
/// (gx)·a = g·(x·a), and the verifier confirms the resulting table.
pub fn h4_dual_numbers() -> ModuleAlgebraSpec<H4, Dual> {
    fn act(h: &H4, a: &Dual) -> Result<LinComb<Dual>> {
        Ok(match (h, a) {
            (H4::One, other) => LinComb::basis(*other),
            (H4::G, Dual::One) => LinComb::basis(Dual::One),
            (H4::G, Dual::T) => LinComb::term(Dual::T, Scalar::from_int(-1)),
            (H4::X, Dual::One) => LinComb::zero(),
            (H4::X, Dual::T) => LinComb::basis(Dual::One),
            (H4::GX, a) => {
                let xa = act(&H4::X, a)?;
                let mut out = LinComb::zero();
                for (l, c) in xa.terms() {
                    out = out.combine(&act(&H4::G, l)?, c);
                }
                out
            }
        })
    }
    ModuleAlgebraSpec::new(
        "h4-dual",
        sweedler_h4(),
        dual_number_algebra(),
        None,
        act,
    )
}

/// Every (h, h', a, a') combination from the given label sets.
pub fn sample_grid<H: Label, A: Label>(hs: &[H], als: &[A]) -> Vec<(H, H, A, A)> {
    let mut out = Vec::new();
    for h in hs {
        for h2 in hs {
            for a in als {
                for a2 in als {
                    out.push((h.clone(), h2.clone(), a.clone(), a2.clone()));
                }
            }
        }
    }
    out
}
