//! Weighted-ℓ¹ seminorm families, exact where possible, and the divergence
//! diagnostics built on them.
//!
//! Every family here is a weighted ℓ¹ norm `Σ |c_b| · w(b)` over a basis
//! domain:
//!
//! * truncation on ℂ[x]: `w(xⁿ) = [n ≤ N]`
//! * weighted ℓ¹ on ℂ[x] or ℂℤ: `w = ρⁿ`, `w = ρ^|k|`
//! * envelope norm on ℂ_q[x,y]: `w(xⁱyʲ) = |q|^{ij} ρ^{i+j}`
//! * mixed norm on ℂ_q[x,y]: `w(xⁱyʲ) = [i ≤ N] ρʲ`
//!
//! `|q|` and ρ are supplied as exact positive rationals, decoupled from the
//! Gaussian-rational q of the algebra, so every inequality tested here is a
//! decidable rational comparison. A coefficient modulus that is not a
//! rational number is never silently rounded: evaluation degrades to an
//! approximation carrying a stated relative error, and the contexts that
//! demand exactness fail loudly instead.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{Delta, H4};
use crate::lincomb::{LinComb, Label};
use crate::module_algebra::{Monomial, ModuleAlgebraSpec};
use crate::report::Report;
use crate::qplane::QMonomial;
use crate::scalar::{rat_pow, Rational, Scalar};

/// Relative error bound of approximate norm values, as a power of two.
const APPROX_GUARD_BITS: u64 = 64;

/// A nonnegative norm value: an exact rational when one exists, and always
/// an approximation whose relative error is at most 2⁻⁵⁰.
#[derive(Clone, Debug, PartialEq)]
pub struct NormValue {
    exact: Option<Rational>,
    approx: Rational,
}

impl NormValue {
    pub fn zero() -> Self {
        NormValue::from_exact(Rational::zero())
    }

    pub fn from_exact(value: Rational) -> Self {
        NormValue {
            approx: value.clone(),
            exact: Some(value),
        }
    }

    pub fn approx_only(value: Rational) -> Self {
        NormValue {
            exact: None,
            approx: value,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    /// The approximation (equal to the exact value when that exists).
    pub fn approx(&self) -> &Rational {
        &self.approx
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn require_exact(&self, context: &str) -> Result<Rational> {
        self.exact
            .clone()
            .ok_or_else(|| Error::ApproxOnly(context.to_string()))
    }

    pub fn add(&self, other: &NormValue) -> NormValue {
        NormValue {
            exact: match (&self.exact, &other.exact) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
            approx: &self.approx + &other.approx,
        }
    }

    pub fn scale(&self, w: &Rational) -> NormValue {
        NormValue {
            exact: self.exact.as_ref().map(|e| e * w),
            approx: &self.approx * w,
        }
    }

    /// Decimal rendering of the approximation, 17 significant digits.
    pub fn decimal(&self) -> String {
        decimal_string(&self.approx, 17)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value_exact": self.exact.as_ref().map(|e| e.to_string()),
            "value_approx": self.decimal(),
        })
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(e) => write!(f, "{e}"),
            None => write!(f, "≈{}", self.decimal()),
        }
    }
}

/// Modulus of a Gaussian rational. Exact when the coefficient is real, purely
/// imaginary, or has a perfect-square modulus squared; otherwise an integer
/// square root with guard bits, relative error ≤ 2⁻⁶⁴.
pub fn scalar_abs(c: &Scalar) -> NormValue {
    if c.im.is_zero() {
        return NormValue::from_exact(c.re.abs());
    }
    if c.re.is_zero() {
        return NormValue::from_exact(c.im.abs());
    }
    let sq = c.abs_sq();
    let num_root = sq.numer().sqrt();
    let den_root = sq.denom().sqrt();
    if &(&num_root * &num_root) == sq.numer() && &(&den_root * &den_root) == sq.denom() {
        return NormValue::from_exact(Rational::new(num_root, den_root));
    }
    // |c| = sqrt(p·s)/s · 2^{-m} scaling for p/s = |c|².
    let p = sq.numer();
    let s = sq.denom();
    let scaled = p * s << (2 * APPROX_GUARD_BITS);
    let root = scaled.sqrt();
    NormValue::approx_only(Rational::new(root, s << APPROX_GUARD_BITS))
}

/// Decimal string with the given number of significant digits; scientific
/// notation outside the integer range.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let v = r.abs();
    if v.is_integer() {
        let digits = v.numer().to_string();
        if digits.len() <= sig {
            return format!("{}{}", if neg { "-" } else { "" }, digits);
        }
    }
    // Exponent = floor(log10 v), found by digit counts and one correction.
    let mut exp = v.numer().to_string().len() as i64 - v.denom().to_string().len() as i64;
    let pow10 = |e: i64| -> Rational {
        let ten = BigInt::from(10);
        if e >= 0 {
            Rational::from_integer(ten.pow(e as u32))
        } else {
            Rational::new(BigInt::one(), ten.pow((-e) as u32))
        }
    };
    if v < pow10(exp) {
        exp -= 1;
    } else if v >= pow10(exp + 1) {
        exp += 1;
    }
    // Mantissa rounded to `sig` digits.
    let scaled = &v * pow10(sig as i64 - 1 - exp);
    let mantissa = (scaled.numer() + scaled.denom() / BigInt::from(2)) / scaled.denom();
    let mut digits = mantissa.to_string();
    if digits.len() > sig {
        // Rounding overflowed to the next power of ten.
        digits.truncate(sig);
        exp += 1;
    }
    let head = &digits[..1];
    let tail = digits[1..].trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

type WeightFn<L> = Arc<dyn Fn(&L) -> Rational + Send + Sync>;

/// A weighted-ℓ¹ seminorm on linear combinations over `L`.
#[derive(Clone)]
pub struct Seminorm<L: Label> {
    name: String,
    weight: WeightFn<L>,
}

impl<L: Label> Seminorm<L> {
    pub fn new(
        name: impl Into<String>,
        weight: impl Fn(&L) -> Rational + Send + Sync + 'static,
    ) -> Self {
        Seminorm {
            name: name.into(),
            weight: Arc::new(weight),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self, label: &L) -> Rational {
        (self.weight)(label)
    }

    /// `Σ |c_b| w(b)`; exact when every coefficient modulus is.
    pub fn eval(&self, u: &LinComb<L>) -> NormValue {
        let mut acc = NormValue::zero();
        for (l, c) in u.terms() {
            acc = acc.add(&scalar_abs(c).scale(&self.weight(l)));
        }
        acc
    }

    pub fn eval_exact(&self, u: &LinComb<L>) -> Result<Rational> {
        self.eval(u)
            .require_exact(&format!("{} of {}", self.name, u))
    }
}

fn check_positive(name: &str, v: &Rational) -> Result<()> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} must be positive, got {v}")))
    }
}

/// Truncation seminorm on ℂ[x]: `Σ_{n ≤ N} |c_n|`.
pub fn trunc(n: u32) -> Seminorm<Monomial> {
    Seminorm::new(format!("trunc(N={n})"), move |m: &Monomial| {
        if m.0 <= n {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Plain ℓ¹ on ℂ[x].
pub fn poly_l1() -> Seminorm<Monomial> {
    Seminorm::new("l1", |_: &Monomial| Rational::one())
}

/// `Σ |c_n| ρⁿ` on ℂ[x]. Requires ρ > 0.
pub fn poly_weighted_l1(rho: &Rational) -> Result<Seminorm<Monomial>> {
    check_positive("rho", rho)?;
    let rho = rho.clone();
    Ok(Seminorm::new(
        format!("weighted-l1(rho={rho})"),
        move |m: &Monomial| rat_pow(&rho, i64::from(m.0)).expect("positive base"),
    ))
}

/// `Σ |c_k| ρ^|k|` on ℂℤ. Requires ρ > 0.
pub fn group_weighted_l1(rho: &Rational) -> Seminorm<Delta> {
    let rho = rho.clone();
    Seminorm::new(format!("weighted-l1(rho={rho})"), move |k: &Delta| {
        rat_pow(&rho, k.0.abs()).expect("positive base")
    })
}

/// Plain ℓ¹ on Sweedler's H₄.
pub fn h4_l1() -> Seminorm<H4> {
    Seminorm::new("l1", |_: &H4| Rational::one())
}

/// Envelope norm on ℂ_q[x,y]: `Σ |c_{ij}| |q|^{ij} ρ^{i+j}`.
pub fn envelope(rho: &Rational, abs_q: &Rational) -> Result<Seminorm<QMonomial>> {
    check_positive("rho", rho)?;
    check_positive("abs_q", abs_q)?;
    let rho = rho.clone();
    let abs_q = abs_q.clone();
    Ok(Seminorm::new(
        format!("envelope(rho={rho}, |q|={abs_q})"),
        move |m: &QMonomial| {
            let ij = i64::from(m.x) * i64::from(m.y);
            rat_pow(&abs_q, ij).expect("positive base")
                * rat_pow(&rho, i64::from(m.x) + i64::from(m.y)).expect("positive base")
        },
    ))
}

/// Mixed norm on ℂ_q[x,y]: `Σ_{i ≤ N} Σ_j |c_{ij}| ρʲ`.
pub fn mixed(rho: &Rational, n: u32) -> Result<Seminorm<QMonomial>> {
    check_positive("rho", rho)?;
    let rho = rho.clone();
    Ok(Seminorm::new(
        format!("mixed(rho={rho}, N={n})"),
        move |m: &QMonomial| {
            if m.x <= n {
                rat_pow(&rho, i64::from(m.y)).expect("positive base")
            } else {
                Rational::zero()
            }
        },
    ))
}

/// The envelope norm restricted along `a ↦ a⊗1`: on xⁿ the weight is ρⁿ.
pub fn envelope_on_poly(rho: &Rational, abs_q: &Rational) -> Result<Seminorm<Monomial>> {
    let env = envelope(rho, abs_q)?;
    Ok(Seminorm::new(
        format!("{}∘embed", env.name()),
        move |m: &Monomial| env.weight(&QMonomial { x: m.0, y: 0 }),
    ))
}

/// Check `‖ab‖ ≤ ‖a‖‖b‖` exactly on each pair, under the given product.
pub fn check_submultiplicative<L: Label>(
    f: &Seminorm<L>,
    mul: impl Fn(&LinComb<L>, &LinComb<L>) -> Result<LinComb<L>>,
    pairs: &[(LinComb<L>, LinComb<L>)],
) -> Result<Report> {
    let mut report = Report::new(f.name().to_string());
    for (i, (a, b)) in pairs.iter().enumerate() {
        let lhs = f.eval_exact(&mul(a, b)?)?;
        let rhs = f.eval_exact(a)? * f.eval_exact(b)?;
        report.push(
            "submultiplicative",
            format!("pair #{i}: ({a}, {b})"),
            lhs <= rhs,
            lhs.to_string(),
            format!("‖a‖‖b‖ = {rhs}"),
        );
    }
    Ok(report)
}

/// Per-degree outcome of a stability scan.
#[derive(Clone, Debug, PartialEq)]
pub enum DegreeBound {
    /// The minimal C with `‖h·xⁿ‖ ≤ C‖xⁿ‖`.
    Ratio(Rational),
    /// `‖xⁿ‖ = 0` (and so is `‖h·xⁿ‖`): any C works.
    Unconstrained,
    /// `‖xⁿ‖ = 0` but `‖h·xⁿ‖ > 0`: no C works.
    NoFiniteBound,
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Ratio(r) => write!(f, "{r}"),
            DegreeBound::Unconstrained => write!(f, "unconstrained"),
            DegreeBound::NoFiniteBound => write!(f, "no finite bound"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// Every constrained degree obeys the single bound C.
    UniformlyBounded(Rational),
    /// The minimal constants grow geometrically; the reported ratio is the
    /// smallest consecutive growth factor over the scanned upper half.
    Diverges { ratio: Option<Rational> },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::UniformlyBounded(c) => write!(f, "uniformly bounded (C = {c})"),
            Verdict::Diverges { ratio: Some(r) } => write!(f, "diverges (ratio {r})"),
            Verdict::Diverges { ratio: None } => write!(f, "diverges"),
        }
    }
}

/// Result of scanning `‖h·xⁿ‖ ≤ C_n ‖xⁿ‖` degree by degree.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub h: String,
    pub norm: String,
    pub per_degree: Vec<(u32, DegreeBound)>,
    pub verdict: Verdict,
}

impl StabilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "h": self.h,
            "norm": self.norm,
            "rows": self.per_degree.iter().map(|(n, b)| json!({
                "n": n,
                "bound": match b {
                    DegreeBound::Ratio(r) => json!({
                        "value_exact": r.to_string(),
                        "value_approx": decimal_string(r, 17),
                    }),
                    DegreeBound::Unconstrained => json!("unconstrained"),
                    DegreeBound::NoFiniteBound => json!("no finite bound"),
                },
            })).collect::<Vec<_>>(),
            "verdict": match &self.verdict {
                Verdict::UniformlyBounded(c) => json!({
                    "kind": "uniformly-bounded",
                    "bound": c.to_string(),
                }),
                Verdict::Diverges { ratio } => json!({
                    "kind": "diverges",
                    "ratio": ratio.as_ref().map(|r| r.to_string()),
                }),
            },
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("h = {}, norm = {}\n", self.h, self.norm));
        out.push_str(" n | minimal C_n\n");
        for (n, b) in &self.per_degree {
            out.push_str(&format!("{n:>2} | {b}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// Compute the minimal per-degree constants for `‖h·xⁿ‖ ≤ C_n‖xⁿ‖` up to
/// `max_degree` and classify the growth.
///
/// The verdict is `Diverges` only when the top scanned degree is still
/// constrained and every consecutive ratio over the scanned upper half is
/// ≥ some γ > 1 (γ is reported); a truncation norm, which unconstrains all
/// high degrees, is therefore uniformly bounded by its largest constant.
pub fn stability_scan(
    spec: &ModuleAlgebraSpec<Delta, Monomial>,
    f: &Seminorm<Monomial>,
    h: &LinComb<Delta>,
    max_degree: u32,
) -> Result<StabilityReport> {
    let mut per_degree = Vec::new();
    let mut constrained: Vec<(u32, Rational)> = Vec::new();
    let mut has_unbounded = false;
    for n in 0..=max_degree {
        let a = LinComb::basis(Monomial(n));
        let denom = f.eval_exact(&a)?;
        let numer = f.eval_exact(&spec.act(h, &a)?)?;
        let bound = if denom.is_zero() {
            if numer.is_zero() {
                DegreeBound::Unconstrained
            } else {
                has_unbounded = true;
                DegreeBound::NoFiniteBound
            }
        } else {
            let c = numer / denom;
            constrained.push((n, c.clone()));
            DegreeBound::Ratio(c)
        };
        per_degree.push((n, bound));
    }

    let verdict = if has_unbounded {
        Verdict::Diverges { ratio: None }
    } else if constrained.is_empty() {
        Verdict::UniformlyBounded(Rational::zero())
    } else {
        let max_c = constrained
            .iter()
            .map(|(_, c)| c.clone())
            .max()
            .expect("nonempty");
        let top_constrained = constrained.last().expect("nonempty").0 == max_degree;
        let ratios: Vec<Rational> = constrained
            .windows(2)
            .filter(|w| w[1].0 == w[0].0 + 1 && !w[0].1.is_zero())
            .map(|w| &w[1].1 / &w[0].1)
            .collect();
        let half = ratios.len() / 2;
        let upper = &ratios[half..];
        let min_ratio = upper.iter().min().cloned();
        match min_ratio {
            Some(g) if top_constrained && g > Rational::one() => {
                Verdict::Diverges { ratio: Some(g) }
            }
            _ => Verdict::UniformlyBounded(max_c),
        }
    };

    Ok(StabilityReport {
        h: h.to_string(),
        norm: f.name().to_string(),
        per_degree,
        verdict,
    })
}

/// One row of the divergence-witness table.
#[derive(Clone, Debug)]
pub struct WitnessRow {
    pub degree: u32,
    pub mixed: Rational,
    pub envelope: Rational,
}

/// Evaluate the mixed and envelope norms on the truncations
/// `w_D = Σ_{i ≤ D} |q|^{-i²} xⁱ` for D up to `max_degree`.
///
/// For |q| < 1 the mixed column stabilizes once D ≥ N while each new term
/// contributes `|q|^{-D²} ρᴰ` to the envelope column, so the same sequence
/// is bounded in one topology and explodes in the other.
pub fn witness_divergence(
    abs_q: &Rational,
    rho: &Rational,
    n: u32,
    max_degree: u32,
) -> Result<Vec<WitnessRow>> {
    check_positive("abs_q", abs_q)?;
    check_positive("rho", rho)?;
    if abs_q >= &Rational::one() {
        return Err(Error::Parameter(format!(
            "witness requires |q| < 1, got {abs_q}"
        )));
    }
    let mixed_norm = mixed(rho, n)?;
    let env_norm = envelope(rho, abs_q)?;
    let mut rows = Vec::new();
    let mut element: LinComb<QMonomial> = LinComb::zero();
    for d in 0..=max_degree {
        let coeff = rat_pow(abs_q, -(i64::from(d) * i64::from(d)))?;
        element.add_term(QMonomial { x: d, y: 0 }, Scalar::from_rational(coeff));
        rows.push(WitnessRow {
            degree: d,
            mixed: mixed_norm.eval_exact(&element)?,
            envelope: env_norm.eval_exact(&element)?,
        });
    }
    Ok(rows)
}

/// JSON table for the witness rows.
pub fn witness_to_json(rows: &[WitnessRow]) -> Value {
    json!(rows
        .iter()
        .map(|r| json!({
            "D": r.degree,
            "mixed": {
                "value_exact": r.mixed.to_string(),
                "value_approx": decimal_string(&r.mixed, 17),
            },
            "envelope": {
                "value_exact": r.envelope.to_string(),
                "value_approx": decimal_string(&r.envelope, 17),
            },
        }))
        .collect::<Vec<_>>())
}

#[allow(unused)]
fn _norm_is_send_sync<L: Label>(s: Seminorm<L>) -> impl Send + Sync {
    s
}
