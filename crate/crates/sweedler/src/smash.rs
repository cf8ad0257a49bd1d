//! The smash product A # H of a module algebra by its acting bialgebra.
//!
//! As a vector space A # H is A ⊗ H; the product is
//! `(a⊗h)(a'⊗h') = Σ a(h₍₁₎·a') ⊗ h₍₂₎h'`. Two independent implementations
//! of the product are provided, the Sweedler-form expansion and the
//! composition through τ, and the verifiers check them against each other,
//! together with the embedding identities of A and H and the conjugation
//! identity `h·a ⊗ 1 = Σ (1⊗h₍₁₎)(a⊗1)(1⊗S(h₍₂₎))` that drives the
//! stability bound for Hopf actions.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lincomb::{bilinear_extend, linear_extend, tensor, LinComb, Label, Pair};
use crate::module_algebra::ModuleAlgebraSpec;
use crate::report::Report;
use crate::scalar::{Rational, Scalar};
use crate::seminorm::{scalar_abs, Seminorm};

/// An element of A # H: a linear combination over pairs (A-basis, H-basis).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmashElement<A: Label, H: Label> {
    terms: LinComb<Pair<A, H>>,
}

impl<A: Label, H: Label> SmashElement<A, H> {
    pub fn zero() -> Self {
        SmashElement {
            terms: LinComb::zero(),
        }
    }

    pub fn from_lincomb(terms: LinComb<Pair<A, H>>) -> Self {
        SmashElement { terms }
    }

    /// The pure tensor `u ⊗ v`.
    pub fn tensor(u: &LinComb<A>, v: &LinComb<H>) -> Self {
        SmashElement {
            terms: tensor(u, v),
        }
    }

    pub fn basis(a: A, h: H) -> Self {
        SmashElement {
            terms: LinComb::basis(Pair::new(a, h)),
        }
    }

    pub fn as_lincomb(&self) -> &LinComb<Pair<A, H>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        SmashElement {
            terms: self.terms.scaled(s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SmashElement {
            terms: &self.terms + &other.terms,
        }
    }

    pub fn combine(&self, other: &Self, s: &Scalar) -> Self {
        SmashElement {
            terms: self.terms.combine(&other.terms, s),
        }
    }

    /// `{ "terms": [ { "coeff": {re, im}, "a": …, "h": … } ] }` with
    /// rationals rendered as strings.
    pub fn to_json(&self) -> Value {
        json!({
            "terms": self.terms.terms().map(|(p, c)| json!({
                "coeff": { "re": c.re.to_string(), "im": c.im.to_string() },
                "a": p.left.to_string(),
                "h": p.right.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl<A: Label, H: Label> fmt::Display for SmashElement<A, H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, coeff)) in self.terms.terms().enumerate() {
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
            let coeff_str = if mag.is_composite() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            if mag.is_one() {
                write!(f, "{} # {}", p.left, p.right)?;
            } else {
                write!(f, "{} * {} # {}", coeff_str, p.left, p.right)?;
            }
        }
        Ok(())
    }
}

/// `a ↦ a ⊗ 1`.
pub fn embed_algebra<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    a: &LinComb<A>,
) -> SmashElement<A, H> {
    SmashElement::tensor(a, spec.hopf.unit())
}

/// `h ↦ 1 ⊗ h`.
pub fn embed_hopf<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    h: &LinComb<H>,
) -> SmashElement<A, H> {
    SmashElement::tensor(spec.algebra.unit(), h)
}

/// The unit `1 ⊗ 1` of A # H.
pub fn smash_unit<H: Label, A: Label>(spec: &ModuleAlgebraSpec<H, A>) -> SmashElement<A, H> {
    SmashElement::tensor(spec.algebra.unit(), spec.hopf.unit())
}

/// `τ(h ⊗ a) = Σ h₍₁₎·a ⊗ h₍₂₎`, computed by comultiplication followed by
/// the action.
pub fn tau<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    h: &LinComb<H>,
    a: &LinComb<A>,
) -> Result<SmashElement<A, H>> {
    let terms = bilinear_extend(
        |hl: &H, al: &A| {
            let mut out = LinComb::zero();
            for (p, c) in spec.hopf.comul_basis(hl)?.terms() {
                let acted = spec.act_basis(&p.left, al)?;
                for (m, cm) in acted.terms() {
                    out.add_term(Pair::new(m.clone(), p.right.clone()), c * cm);
                }
            }
            Ok(out)
        },
        h,
        a,
    )?;
    Ok(SmashElement { terms })
}

/// Smash multiplication in Sweedler form:
/// `(a⊗h)(a'⊗h') = Σ a(h₍₁₎·a') ⊗ h₍₂₎h'`, extended bilinearly.
pub fn smash_mul<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    u: &SmashElement<A, H>,
    v: &SmashElement<A, H>,
) -> Result<SmashElement<A, H>> {
    let terms = bilinear_extend(
        |p: &Pair<A, H>, q: &Pair<A, H>| {
            let mut out = LinComb::zero();
            for (d, c) in spec.hopf.comul_basis(&p.right)?.terms() {
                let acted = spec.act_basis(&d.left, &q.left)?;
                let left = spec.algebra.mul(&LinComb::basis(p.left.clone()), &acted)?;
                let right = spec.hopf.algebra.mul_basis(&d.right, &q.right)?;
                for (t, ct) in tensor(&left, &right).terms() {
                    out.add_term(t.clone(), c * ct);
                }
            }
            Ok(out)
        },
        &u.terms,
        &v.terms,
    )?;
    Ok(SmashElement { terms })
}

/// Smash multiplication as the composition
/// `(μ_A ⊗ μ_H) ∘ (id_A ⊗ τ ⊗ id_H)` applied to the four-fold tensor
/// `u ⊗ v`. Kept as an independent route for differential testing against
/// [`smash_mul`].
pub fn smash_mul_composed<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    u: &SmashElement<A, H>,
    v: &SmashElement<A, H>,
) -> Result<SmashElement<A, H>> {
    // Four-fold tensor A ⊗ H ⊗ A ⊗ H, as pairs of pairs.
    let four = tensor(&u.terms, &v.terms);
    let terms = linear_extend(
        |w: &Pair<Pair<A, H>, Pair<A, H>>| {
            let a = &w.left.left;
            let h = &w.left.right;
            let a2 = &w.right.left;
            let h2 = &w.right.right;
            let mid = tau(spec, &LinComb::basis(h.clone()), &LinComb::basis(a2.clone()))?;
            let mut out = LinComb::zero();
            for (p, c) in mid.terms.terms() {
                let left = spec.algebra.mul_basis(a, &p.left)?;
                let right = spec.hopf.algebra.mul_basis(&p.right, h2)?;
                for (t, ct) in tensor(&left, &right).terms() {
                    out.add_term(t.clone(), c * ct);
                }
            }
            Ok(out)
        },
        &four,
    )?;
    Ok(SmashElement { terms })
}

/// The embedding identities: `(a⊗1)(a'⊗h') = aa'⊗h'`, `(a⊗h)(1⊗h') = a⊗hh'`,
/// `(1⊗h)(a⊗1) = τ(h⊗a)`, and multiplicativity of both embeddings.
pub fn verify_embeddings<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    samples: &[(A, A, H, H)],
) -> Result<Report> {
    let mut report = Report::new(spec.name().to_string());
    for (a, a2, h, h2) in samples {
        let ea = LinComb::basis(a.clone());
        let ea2 = LinComb::basis(a2.clone());
        let eh = LinComb::basis(h.clone());
        let eh2 = LinComb::basis(h2.clone());
        let labels = format!("(a={a}, a'={a2}, h={h}, h'={h2})");

        let lhs = smash_mul(spec, &embed_algebra(spec, &ea), &SmashElement::tensor(&ea2, &eh2))?;
        let rhs = SmashElement::tensor(&spec.algebra.mul_basis(a, a2)?, &eh2);
        report.check_eq("embed-left", labels.clone(), &lhs, &rhs);

        let lhs = smash_mul(spec, &SmashElement::tensor(&ea, &eh), &embed_hopf(spec, &eh2))?;
        let rhs = SmashElement::tensor(&ea, &spec.hopf.algebra.mul_basis(h, h2)?);
        report.check_eq("embed-right", labels.clone(), &lhs, &rhs);

        let lhs = smash_mul(spec, &embed_hopf(spec, &eh), &embed_algebra(spec, &ea))?;
        let rhs = tau(spec, &eh, &ea)?;
        report.check_eq("tau-product", format!("(h={h}, a={a})"), &lhs, &rhs);

        let lhs = smash_mul(spec, &embed_algebra(spec, &ea), &embed_algebra(spec, &ea2))?;
        let rhs = embed_algebra(spec, &spec.algebra.mul_basis(a, a2)?);
        report.check_eq("embed-a-mult", format!("(a={a}, a'={a2})"), &lhs, &rhs);

        let lhs = smash_mul(spec, &embed_hopf(spec, &eh), &embed_hopf(spec, &eh2))?;
        let rhs = embed_hopf(spec, &spec.hopf.algebra.mul_basis(h, h2)?);
        report.check_eq("embed-h-mult", format!("(h={h}, h'={h2})"), &lhs, &rhs);
    }
    Ok(report)
}

/// `(uv)w = u(vw)` for each triple, plus the differential check that the
/// Sweedler-form product agrees with the composition route on every factor
/// pair involved.
pub fn verify_associativity<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    triples: &[(SmashElement<A, H>, SmashElement<A, H>, SmashElement<A, H>)],
) -> Result<Report> {
    let mut report = Report::new(spec.name().to_string());
    for (i, (u, v, w)) in triples.iter().enumerate() {
        let uv = smash_mul(spec, u, v)?;
        let vw = smash_mul(spec, v, w)?;
        let lhs = smash_mul(spec, &uv, w)?;
        let rhs = smash_mul(spec, u, &vw)?;
        report.check_eq(
            "smash-assoc",
            format!("#{i}: u={u}, v={v}, w={w}"),
            &lhs,
            &rhs,
        );

        let composed = smash_mul_composed(spec, u, v)?;
        report.check_eq("mul-composition", format!("#{i}: u={u}, v={v}"), &uv, &composed);
    }
    Ok(report)
}

/// The four-step identity chain, all in A # H:
///
/// ```text
/// h·a ⊗ 1 = Σ h₍₁₎·a ⊗ ε(h₍₂₎)1
///         = Σ h₍₁₎·a ⊗ h₍₂₎S(h₍₃₎)
///         = Σ τ(h₍₁₎ ⊗ a)(1 ⊗ S(h₍₂₎))
///         = Σ (1⊗h₍₁₎)(a⊗1)(1⊗S(h₍₂₎))
/// ```
///
/// Returns the five expressions in order. Requires an antipode.
pub fn proof_identity_expressions<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    h: &H,
    a: &A,
) -> Result<[SmashElement<A, H>; 5]> {
    if !spec.hopf.is_hopf() {
        return Err(Error::NoAntipode {
            preset: spec.name().to_string(),
        });
    }
    let ea = LinComb::basis(a.clone());

    let e1 = embed_algebra(spec, &spec.act_basis(h, a)?);

    let mut e2 = SmashElement::zero();
    for (p, c) in spec.hopf.comul_basis(h)?.terms() {
        let acted = spec.act_basis(&p.left, a)?;
        let eps = spec.hopf.counit_basis(&p.right)?;
        e2 = e2.combine(&embed_algebra(spec, &acted), &(c * &eps));
    }

    let mut e3 = SmashElement::zero();
    for (t, c) in spec.hopf.comul2_left(&LinComb::basis(h.clone()))?.terms() {
        let acted = spec.act_basis(&t.first, a)?;
        let hs = spec.hopf.algebra.mul(
            &LinComb::basis(t.second.clone()),
            &spec.hopf.antipode_basis(&t.third)?,
        )?;
        e3 = e3.combine(&SmashElement::tensor(&acted, &hs), c);
    }

    let mut e4 = SmashElement::zero();
    let mut e5 = SmashElement::zero();
    for (p, c) in spec.hopf.comul_basis(h)?.terms() {
        let s = spec.hopf.antipode_basis(&p.right)?;
        let s_embedded = embed_hopf(spec, &s);

        let t = tau(spec, &LinComb::basis(p.left.clone()), &ea)?;
        e4 = e4.combine(&smash_mul(spec, &t, &s_embedded)?, c);

        let h1 = embed_hopf(spec, &LinComb::basis(p.left.clone()));
        let mid = smash_mul(spec, &h1, &embed_algebra(spec, &ea))?;
        e5 = e5.combine(&smash_mul(spec, &mid, &s_embedded)?, c);
    }

    Ok([e1, e2, e3, e4, e5])
}

/// Verify the chain step by step (each adjacent pair separately, so a
/// failure points at the axiom that broke) plus end to end.
pub fn proof_identity<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    h: &H,
    a: &A,
) -> Result<Report> {
    let [e1, e2, e3, e4, e5] = proof_identity_expressions(spec, h, a)?;
    let mut report = Report::new(spec.name().to_string());
    let labels = format!("(h={h}, a={a})");
    report.check_eq("step-counit", labels.clone(), &e1, &e2);
    report.check_eq("step-antipode", labels.clone(), &e2, &e3);
    report.check_eq("step-tau", labels.clone(), &e3, &e4);
    report.check_eq("step-embed", labels.clone(), &e4, &e5);
    report.check_eq("chain-ends", labels, &e1, &e5);
    Ok(report)
}

/// The constant `C = Σ ‖h₍₁₎‖·‖S(h₍₂₎)‖` attached to an element h and a
/// seminorm on H, together with its summand decomposition. The
/// decomposition is the canonical one coming from the preset's Δ, so the
/// value is deterministic.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityConstant {
    pub value: Rational,
    pub summands: Vec<(Rational, Rational)>,
}

pub fn stability_constant<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    h: &LinComb<H>,
    norm_h: &Seminorm<H>,
) -> Result<StabilityConstant> {
    if !spec.hopf.is_hopf() {
        return Err(Error::NoAntipode {
            preset: spec.name().to_string(),
        });
    }
    let mut value = Rational::from_integer(0.into());
    let mut summands = Vec::new();
    for (p, c) in spec.hopf.comul(h)?.terms() {
        let coeff = scalar_abs(c).require_exact("Sweedler coefficient")?;
        let left = coeff * norm_h.eval_exact(&LinComb::basis(p.left.clone()))?;
        let right = norm_h.eval_exact(&spec.hopf.antipode_basis(&p.right)?)?;
        value += &left * &right;
        summands.push((left, right));
    }
    Ok(StabilityConstant { value, summands })
}

/// Check `‖h·a‖ ≤ C·‖a‖` with `C` from [`stability_constant`], exactly, for
/// each given h against each basis element of A.
pub fn verify_stability_inequality<H: Label, A: Label>(
    spec: &ModuleAlgebraSpec<H, A>,
    norm_a: &Seminorm<A>,
    norm_h: &Seminorm<H>,
    hs: &[LinComb<H>],
    a_labels: &[A],
) -> Result<Report> {
    let mut report = Report::new(spec.name().to_string());
    for h in hs {
        let c = stability_constant(spec, h, norm_h)?;
        for a in a_labels {
            let acted = spec.act(h, &LinComb::basis(a.clone()))?;
            let lhs = norm_a.eval_exact(&acted)?;
            let bound = &c.value * &norm_a.eval_exact(&LinComb::basis(a.clone()))?;
            report.push(
                "stability-bound",
                format!("(h={h}, a={a})"),
                lhs <= bound,
                lhs.to_string(),
                format!("C·‖a‖ = {bound}"),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{Delta, H4};
    use crate::module_algebra::{
        h4_dual_numbers, q_dilation_z, q_dilation_zplus, Dual, Monomial,
    };
    use crate::seminorm;

    fn half() -> Scalar {
        Scalar::rational(1, 2)
    }

    #[test]
    fn tau_on_grouplike() {
        // τ(δ₁ ⊗ x) = (δ₁·x) ⊗ δ₁ = 2·(x ⊗ δ₁) at q = 1/2
        let spec = q_dilation_zplus(&half()).unwrap();
        let out = tau(
            &spec,
            &LinComb::basis(Delta(1)),
            &LinComb::basis(Monomial(1)),
        )
        .unwrap();
        assert_eq!(
            out,
            SmashElement::basis(Monomial(1), Delta(1)).scaled(&Scalar::from_int(2))
        );
    }

    #[test]
    fn tau_with_unit_is_embedding() {
        let spec = q_dilation_zplus(&half()).unwrap();
        let a = LinComb::basis(Monomial(7));
        let out = tau(&spec, spec.hopf.unit(), &a).unwrap();
        assert_eq!(out, embed_algebra(&spec, &a));
    }

    #[test]
    fn tau_on_h4() {
        // τ(x ⊗ t) = (x·t)⊗1 + (g·t)⊗x = 1⊗1 - t⊗x
        let spec = h4_dual_numbers();
        let out = tau(&spec, &LinComb::basis(H4::X), &LinComb::basis(Dual::T)).unwrap();
        let expected = SmashElement::basis(Dual::One, H4::One)
            .combine(&SmashElement::basis(Dual::T, H4::X), &Scalar::from_int(-1));
        assert_eq!(out, expected);
    }

    #[test]
    fn smash_square_of_x_tensor_delta() {
        // (x⊗δ₁)² = q⁻¹ x²⊗δ₂ = 2·(x²⊗δ₂) at q = 1/2
        let spec = q_dilation_zplus(&half()).unwrap();
        let u = SmashElement::basis(Monomial(1), Delta(1));
        let out = smash_mul(&spec, &u, &u).unwrap();
        assert_eq!(
            out,
            SmashElement::basis(Monomial(2), Delta(2)).scaled(&Scalar::from_int(2))
        );
        assert_eq!(smash_mul_composed(&spec, &u, &u).unwrap(), out);
    }

    #[test]
    fn triple_product_both_orders() {
        // u = v = w = x⊗δ₁ at q = 1/2: both associations give 8·(x³⊗δ₃).
        let spec = q_dilation_zplus(&half()).unwrap();
        let u = SmashElement::basis(Monomial(1), Delta(1));
        let uv = smash_mul(&spec, &u, &u).unwrap();
        let left = smash_mul(&spec, &uv, &u).unwrap();
        let right = smash_mul(&spec, &u, &uv).unwrap();
        let expected =
            SmashElement::basis(Monomial(3), Delta(3)).scaled(&Scalar::from_int(8));
        assert_eq!(left, expected);
        assert_eq!(right, expected);
    }

    #[test]
    fn embeddings_pass_on_dilation() {
        let spec = q_dilation_zplus(&half()).unwrap();
        let mut samples = Vec::new();
        for a in 0..3u32 {
            for h in 0..3i64 {
                samples.push((Monomial(a), Monomial(a + 1), Delta(h), Delta(h + 1)));
            }
        }
        let report = verify_embeddings(&spec, &samples).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn embeddings_pass_on_h4() {
        let spec = h4_dual_numbers();
        let mut samples = Vec::new();
        for a in Dual::ALL {
            for a2 in Dual::ALL {
                for h in H4::ALL {
                    for h2 in H4::ALL {
                        samples.push((a, a2, h, h2));
                    }
                }
            }
        }
        let report = verify_embeddings(&spec, &samples).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn proof_identity_on_grouplike() {
        // h = δ₁, a = xⁿ at q = 1/2: every expression equals 2ⁿ·(xⁿ⊗δ₀).
        let spec = q_dilation_z(&half()).unwrap();
        for n in 0..=8u32 {
            let [e1, _, _, _, e5] =
                proof_identity_expressions(&spec, &Delta(1), &Monomial(n)).unwrap();
            let expected = SmashElement::basis(Monomial(n), Delta(0))
                .scaled(&Scalar::from_int(1i64 << n));
            assert_eq!(e1, expected);
            assert_eq!(e5, expected);
            assert!(proof_identity(&spec, &Delta(1), &Monomial(n))
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn proof_identity_with_unit_h() {
        let spec = q_dilation_z(&half()).unwrap();
        let [e1, _, _, _, e5] =
            proof_identity_expressions(&spec, &Delta(0), &Monomial(4)).unwrap();
        let expected = embed_algebra(&spec, &LinComb::basis(Monomial(4)));
        assert_eq!(e1, expected);
        assert_eq!(e5, expected);
    }

    #[test]
    fn proof_identity_on_h4_x_t() {
        // Left end (x·t)⊗1 = 1⊗1; the right end collapses to the same.
        let spec = h4_dual_numbers();
        let [e1, _, _, _, e5] = proof_identity_expressions(&spec, &H4::X, &Dual::T).unwrap();
        assert_eq!(e1, SmashElement::basis(Dual::One, H4::One));
        assert_eq!(e5, SmashElement::basis(Dual::One, H4::One));
        for h in H4::ALL {
            for a in Dual::ALL {
                let report = proof_identity(&spec, &h, &a).unwrap();
                assert!(report.passed(), "h={h}, a={a}: {}", report.render_text());
            }
        }
    }

    #[test]
    fn proof_identity_requires_antipode() {
        let spec = q_dilation_zplus(&half()).unwrap();
        let err = proof_identity(&spec, &Delta(1), &Monomial(1)).unwrap_err();
        assert!(matches!(err, Error::NoAntipode { .. }));
        assert!(err.to_string().contains("no antipode"));
    }

    #[test]
    fn stability_constant_grouplike() {
        // h = δ₁, ‖δ_k‖ = ρ^|k| with ρ = 2: C = ‖δ₁‖·‖δ₋₁‖ = 4.
        let spec = q_dilation_z(&half()).unwrap();
        let norm = seminorm::group_weighted_l1(&crate::scalar::rat_int(2));
        let c = stability_constant(&spec, &LinComb::basis(Delta(1)), &norm).unwrap();
        assert_eq!(c.value, crate::scalar::rat_int(4));
        assert_eq!(c.summands.len(), 1);
    }

    #[test]
    fn stability_constant_unit() {
        let spec = q_dilation_z(&half()).unwrap();
        let norm = seminorm::group_weighted_l1(&crate::scalar::rat_int(2));
        let c = stability_constant(&spec, &LinComb::basis(Delta(0)), &norm).unwrap();
        assert_eq!(c.value, crate::scalar::rat_int(1));
    }

    #[test]
    fn stability_constant_h4() {
        // Δx = x⊗1 + g⊗x with ℓ¹ norm: C = ‖x‖‖S(1)‖ + ‖g‖‖S(x)‖ = 2.
        let spec = h4_dual_numbers();
        let norm = seminorm::h4_l1();
        let c = stability_constant(&spec, &LinComb::basis(H4::X), &norm).unwrap();
        assert_eq!(c.value, crate::scalar::rat_int(2));
        assert_eq!(c.summands.len(), 2);
    }

    #[test]
    fn smash_element_json_shape() {
        let spec = q_dilation_zplus(&half()).unwrap();
        let u = SmashElement::basis(Monomial(1), Delta(1));
        let out = smash_mul(&spec, &u, &u).unwrap();
        let v = out.to_json();
        assert_eq!(v["terms"][0]["coeff"]["re"], "2");
        assert_eq!(v["terms"][0]["a"], "x^2");
        assert_eq!(v["terms"][0]["h"], "d(2)");
    }

    #[test]
    fn display_matches_cli_contract() {
        let spec = q_dilation_zplus(&half()).unwrap();
        let u = SmashElement::basis(Monomial(1), Delta(1));
        let out = smash_mul(&spec, &u, &u).unwrap();
        assert_eq!(out.to_string(), "2 * x^2 # d(2)");
        assert_eq!(u.to_string(), "x # d(1)");
    }
}
