//! The quantum plane ℂ_q[x,y] = ℂ⟨x,y | xy = qyx⟩ as a confluent rewriting
//! system with normal form xⁱyʲ, and its identification with the smash
//! product ℂ[x] # ℂℤ₊ under xⁱyʲ ↔ xⁱ ⊗ δ_j.
//!
//! Words are kept only at the parser/normalizer boundary; arithmetic is done
//! in normal form. The monomial product rule
//! `(xⁱyʲ)(xᵏyˡ) = q^{-jk} x^{i+k} y^{j+l}` is derived from the rewrite
//! system by counting inversions and is cross-checked against step-by-step
//! rewriting in the tests rather than taken on faith.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::Delta;
use crate::lincomb::{LinComb, Pair};
use crate::module_algebra::Monomial;
use crate::scalar::Scalar;
use crate::smash::SmashElement;

/// Generator alphabet of the free algebra on x, y.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Gen {
    X,
    Y,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X => write!(f, "x"),
            Gen::Y => write!(f, "y"),
        }
    }
}

/// A word in the free algebra; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Positions i with letters (y, x) at (i, i+1) — the redexes of the
    /// rewrite rule yx → q⁻¹xy.
    pub fn redexes(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Gen::Y && w[1] == Gen::X)
            .map(|(i, _)| i)
            .collect()
    }

    /// Swap the letters at (pos, pos+1); caller accounts for the q⁻¹ factor.
    pub fn swap_at(&self, pos: usize) -> Word {
        let mut letters = self.0.clone();
        letters.swap(pos, pos + 1);
        Word(letters)
    }

    fn counts(&self) -> (u32, u32) {
        let x = self.0.iter().filter(|g| **g == Gen::X).count() as u32;
        (x, self.0.len() as u32 - x)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Normal-form monomial xⁱyʲ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct QMonomial {
    pub x: u32,
    pub y: u32,
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.x {
            0 => {}
            1 => parts.push("x".to_string()),
            n => parts.push(format!("x^{n}")),
        }
        match self.y {
            0 => {}
            1 => parts.push("y".to_string()),
            n => parts.push(format!("y^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An element of ℂ_q[x,y] in canonical normal form, tagged with its q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPlaneElement {
    terms: LinComb<QMonomial>,
    q: Scalar,
}

impl QPlaneElement {
    pub fn zero(q: &Scalar) -> Self {
        QPlaneElement {
            terms: LinComb::zero(),
            q: q.clone(),
        }
    }

    pub fn one(q: &Scalar) -> Self {
        Self::monomial(q, 0, 0)
    }

    pub fn monomial(q: &Scalar, x: u32, y: u32) -> Self {
        QPlaneElement {
            terms: LinComb::basis(QMonomial { x, y }),
            q: q.clone(),
        }
    }

    pub fn from_terms(q: &Scalar, terms: LinComb<QMonomial>) -> Self {
        QPlaneElement {
            terms,
            q: q.clone(),
        }
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn terms(&self) -> &LinComb<QMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        QPlaneElement {
            terms: self.terms.scaled(s),
            q: self.q.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_q(other)?;
        Ok(QPlaneElement {
            terms: &self.terms + &other.terms,
            q: self.q.clone(),
        })
    }

    fn check_q(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::QMismatch {
                left: self.q.to_string(),
                right: other.q.to_string(),
            });
        }
        Ok(())
    }

    /// Product by the derived monomial rule
    /// `(xⁱyʲ)(xᵏyˡ) = q^{-jk} x^{i+k} y^{j+l}`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_q(other)?;
        if self.q.is_zero() {
            return Err(Error::Parameter("q must be nonzero".into()));
        }
        let q = &self.q;
        let terms = crate::lincomb::bilinear_extend(
            |a: &QMonomial, b: &QMonomial| {
                let exp = -(i64::from(a.y) * i64::from(b.x));
                Ok(LinComb::term(
                    QMonomial {
                        x: a.x + b.x,
                        y: a.y + b.y,
                    },
                    q.pow(exp)?,
                ))
            },
            &self.terms,
            &other.terms,
        )?;
        Ok(QPlaneElement {
            terms,
            q: q.clone(),
        })
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(&self.q);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q.to_string(),
            "terms": self.terms.terms().map(|(m, c)| json!({
                "coeff": { "re": c.re.to_string(), "im": c.im.to_string() },
                "i": m.x,
                "j": m.y,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QPlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

/// Bring a single word to normal form, choosing each rewrite position with
/// `pick` (given the number of available redexes, return the index of the
/// one to contract). Every strategy reaches the same normal form; the
/// confluence tests exercise several.
pub fn normalize_word_with(
    word: &Word,
    q: &Scalar,
    mut pick: impl FnMut(usize) -> usize,
) -> Result<(Scalar, QMonomial)> {
    if q.is_zero() {
        return Err(Error::Parameter("q must be nonzero".into()));
    }
    let q_inv = q.inv()?;
    let mut current = word.clone();
    let mut coeff = Scalar::one();
    loop {
        let redexes = current.redexes();
        if redexes.is_empty() {
            let (x, y) = current.counts();
            return Ok((coeff, QMonomial { x, y }));
        }
        let choice = pick(redexes.len());
        current = current.swap_at(redexes[choice]);
        coeff = &coeff * &q_inv;
    }
}

/// Leftmost-redex normal form of one word.
pub fn normalize_word(word: &Word, q: &Scalar) -> Result<(Scalar, QMonomial)> {
    normalize_word_with(word, q, |_| 0)
}

/// Normalize a combination of words into a quantum-plane element.
pub fn normalize(words: &LinComb<Word>, q: &Scalar) -> Result<QPlaneElement> {
    let mut terms = LinComb::zero();
    for (w, c) in words.terms() {
        let (coeff, mono) = normalize_word(w, q)?;
        terms.add_term(mono, c * &coeff);
    }
    Ok(QPlaneElement::from_terms(q, terms))
}

/// The linear bijection xⁱyʲ ↦ xⁱ ⊗ δ_j into ℂ[x] # ℂℤ₊.
pub fn to_smash(u: &QPlaneElement) -> SmashElement<Monomial, Delta> {
    SmashElement::from_lincomb(u.terms.map_labels(|m| {
        Pair::new(Monomial(m.x), Delta(i64::from(m.y)))
    }))
}

/// Inverse of [`to_smash`]. Fails on elements outside the xⁱ ⊗ δ_j basis of
/// the dilation preset (negative δ indices).
pub fn from_smash(s: &SmashElement<Monomial, Delta>, q: &Scalar) -> Result<QPlaneElement> {
    let mut terms = LinComb::zero();
    for (p, c) in s.as_lincomb().terms() {
        let j = u32::try_from(p.right.0).map_err(|_| {
            Error::Parameter(format!(
                "not an element of the dilation-preset basis: {}",
                p.right
            ))
        })?;
        terms.add_term(QMonomial { x: p.left.0, y: j }, c.clone());
    }
    Ok(QPlaneElement::from_terms(q, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module_algebra::q_dilation_zplus;
    use crate::smash::smash_mul;

    fn word(s: &str) -> Word {
        Word(
            s.chars()
                .map(|c| match c {
                    'x' => Gen::X,
                    'y' => Gen::Y,
                    _ => panic!("bad letter {c}"),
                })
                .collect(),
        )
    }

    fn half() -> Scalar {
        Scalar::rational(1, 2)
    }

    /// Every maximal rewrite sequence of `w`, by exhaustive branching.
    fn all_normal_forms(w: &Word, q: &Scalar) -> Vec<(Scalar, QMonomial)> {
        fn go(w: &Word, coeff: Scalar, q_inv: &Scalar, out: &mut Vec<(Scalar, QMonomial)>) {
            let redexes = w.redexes();
            if redexes.is_empty() {
                let (x, y) = w.counts();
                out.push((coeff, QMonomial { x, y }));
                return;
            }
            for pos in redexes {
                go(&w.swap_at(pos), &coeff * q_inv, q_inv, out);
            }
        }
        let mut out = Vec::new();
        go(w, Scalar::one(), &q.inv().unwrap(), &mut out);
        out
    }

    #[test]
    fn already_normal_word() {
        let (c, m) = normalize_word(&word("xy"), &half()).unwrap();
        assert_eq!(c, Scalar::one());
        assert_eq!(m, QMonomial { x: 1, y: 1 });
    }

    #[test]
    fn single_swap() {
        // yx → q⁻¹ xy = 2 xy at q = 1/2
        let (c, m) = normalize_word(&word("yx"), &half()).unwrap();
        assert_eq!(c, Scalar::from_int(2));
        assert_eq!(m, QMonomial { x: 1, y: 1 });
    }

    #[test]
    fn every_rewrite_sequence_agrees() {
        // Brute-force oracle on yxyx: all sequences reach q⁻³ x²y².
        let q = half();
        let w = word("yxyx");
        let forms = all_normal_forms(&w, &q);
        assert!(!forms.is_empty());
        let expected = (Scalar::from_int(8), QMonomial { x: 2, y: 2 });
        for f in &forms {
            assert_eq!(*f, expected);
        }
        assert_eq!(normalize_word(&w, &q).unwrap(), expected);
    }

    #[test]
    fn exhaustive_confluence_on_short_words() {
        let q = Scalar::rational(3, 5);
        for bits in 0..64u32 {
            let letters: Vec<Gen> = (0..6)
                .map(|i| if bits >> i & 1 == 1 { Gen::Y } else { Gen::X })
                .collect();
            let w = Word(letters);
            let reference = normalize_word(&w, &q).unwrap();
            for f in all_normal_forms(&w, &q) {
                assert_eq!(f, reference, "word {w}");
            }
        }
    }

    #[test]
    fn zero_q_rejected() {
        assert!(normalize_word(&word("yx"), &Scalar::zero()).is_err());
        let u = QPlaneElement::monomial(&Scalar::zero(), 1, 0);
        assert!(u.mul(&u).is_err());
    }

    #[test]
    fn monomial_rule_matches_rewriting() {
        // (xy)(xy) = q⁻¹ x²y² = 2 x²y², and normalize("xyxy") agrees.
        let q = half();
        let xy = QPlaneElement::monomial(&q, 1, 1);
        let sq = xy.mul(&xy).unwrap();
        assert_eq!(
            sq,
            QPlaneElement::monomial(&q, 2, 2).scaled(&Scalar::from_int(2))
        );
        let via_words = normalize(&LinComb::basis(word("xyxy")), &q).unwrap();
        assert_eq!(sq, via_words);
    }

    #[test]
    fn unit_and_q_mismatch() {
        let q = Scalar::from_int(3);
        let u = QPlaneElement::monomial(&q, 2, 1).scaled(&Scalar::rational(5, 7));
        assert_eq!(u.mul(&QPlaneElement::one(&q)).unwrap(), u);
        // (y)(x) = q⁻¹ xy = (1/3) xy
        let y = QPlaneElement::monomial(&q, 0, 1);
        let x = QPlaneElement::monomial(&q, 1, 0);
        assert_eq!(
            y.mul(&x).unwrap(),
            QPlaneElement::monomial(&q, 1, 1).scaled(&Scalar::rational(1, 3))
        );
        let other = QPlaneElement::one(&half());
        assert!(matches!(u.mul(&other), Err(Error::QMismatch { .. })));
    }

    #[test]
    fn smash_correspondence_is_multiplicative() {
        // from_smash(to_smash(xy)·to_smash(xy)) = (xy)² = 2x²y² at q = 1/2.
        let q = half();
        let spec = q_dilation_zplus(&q).unwrap();
        let xy = QPlaneElement::monomial(&q, 1, 1);
        let via_smash =
            from_smash(&smash_mul(&spec, &to_smash(&xy), &to_smash(&xy)).unwrap(), &q).unwrap();
        assert_eq!(via_smash, xy.mul(&xy).unwrap());
    }

    #[test]
    fn basis_correspondence() {
        let q = half();
        let u = QPlaneElement::monomial(&q, 2, 3);
        let s = to_smash(&u);
        assert_eq!(s, SmashElement::basis(Monomial(2), Delta(3)));
        assert_eq!(from_smash(&s, &q).unwrap(), u);
    }

    #[test]
    fn from_smash_rejects_negative_delta() {
        let s = SmashElement::basis(Monomial(1), Delta(-1));
        assert!(from_smash(&s, &half()).is_err());
    }

    #[test]
    fn display_forms() {
        let q = half();
        assert_eq!(QPlaneElement::monomial(&q, 1, 1).to_string(), "x*y");
        assert_eq!(
            QPlaneElement::monomial(&q, 1, 1)
                .scaled(&Scalar::from_int(2))
                .to_string(),
            "2 * x*y"
        );
        assert_eq!(QPlaneElement::monomial(&q, 2, 0).to_string(), "x^2");
        assert_eq!(QPlaneElement::one(&q).to_string(), "1");
        assert_eq!(QPlaneElement::zero(&q).to_string(), "0");
        assert_eq!(word("yxyx").to_string(), "y*x*y*x");
    }

    #[test]
    fn bidegree_is_additive() {
        let q = Scalar::rational(2, 7);
        let u = QPlaneElement::monomial(&q, 2, 5);
        let v = QPlaneElement::monomial(&q, 4, 1);
        let prod = u.mul(&v).unwrap();
        let (m, _) = prod.terms().terms().next().unwrap();
        assert_eq!((m.x, m.y), (6, 6));
    }
}
