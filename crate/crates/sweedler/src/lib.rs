//! # sweedler — exact Hopf-algebra and smash-product machinery
//!
//! An exact-arithmetic kernel for checking identities between elements of
//! bialgebras, Hopf algebras, module algebras, their smash products, and the
//! quantum plane, together with a calculus of weighted-ℓ¹ seminorms on these
//! algebras. Coefficients are Gaussian rationals, so every identity is
//! decided by structural equality with zero tolerance, and every inequality
//! between seminorm values is a rational comparison.
//!
//! ## What lives where
//!
//! - [`scalar`], [`lincomb`]: exact scalars and finite linear combinations
//!   over ordered basis labels, with bilinear extension of structure maps.
//! - [`hopf`]: algebra/bialgebra/Hopf structure on basis labels; presets
//!   ℂℤ, ℂℤ₊, and Sweedler's H₄; mechanical verification of every axiom.
//! - [`module_algebra`]: H-module algebras; the q-dilation action on ℂ[x]
//!   and H₄ acting on the dual numbers.
//! - [`smash`]: the smash product A # H via two independent product
//!   implementations, the embedding identities, the antipode-conjugation
//!   identity chain, and the stability constant C = Σ‖h₍₁₎‖·‖S(h₍₂₎)‖.
//! - [`qplane`]: ℂ_q[x,y] as a confluent rewrite system with PBW normal
//!   form, identified with ℂ[x] # ℂℤ₊.
//! - [`seminorm`]: truncation, weighted-ℓ¹, envelope, and mixed norms;
//!   submultiplicativity checks; stability scans; the divergence witness.
//! - [`expr`], [`cli`]: the expression language and the subcommand layer
//!   used by the `sweedler` binary.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example hopf_axioms
//! cargo run --example module_algebras
//! cargo run --example smash_products
//! cargo run --example conjugation_identity
//! cargo run --example quantum_plane
//! cargo run --example seminorms
//! cargo run --example stability_inequality
//! cargo run --example counterexample
//! ```
//!
//! ## Quick taste
//!
//! ```
//! use sweedler::hopf::Delta;
//! use sweedler::lincomb::LinComb;
//! use sweedler::module_algebra::{q_dilation_zplus, Monomial};
//! use sweedler::scalar::Scalar;
//! use sweedler::smash::{smash_mul, SmashElement};
//!
//! // (x ⊗ δ₁)² = q⁻¹·x² ⊗ δ₂ in ℂ[x] # ℂℤ₊ at q = 1/2
//! let spec = q_dilation_zplus(&Scalar::rational(1, 2)).unwrap();
//! let u = SmashElement::basis(Monomial(1), Delta(1));
//! let square = smash_mul(&spec, &u, &u).unwrap();
//! assert_eq!(square.to_string(), "2 * x^2 # d(2)");
//! ```

pub mod cli;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod lincomb;
pub mod module_algebra;
pub mod qplane;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod seminorm;
pub mod smash;

pub use error::{Error, Result};
pub use lincomb::{LinComb, Pair, Triple};
pub use report::Report;
pub use scalar::{Rational, Scalar};
