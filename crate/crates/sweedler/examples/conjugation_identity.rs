//! The identity that makes Hopf actions inner in the smash product:
//!
//! ```text
//! h·a ⊗ 1 = Σ (1 ⊗ h(1)) (a ⊗ 1) (1 ⊗ S(h(2)))
//! ```
//!
//! Each step of the derivation (counit, antipode, τ, embedding) is checked
//! separately and exactly. The chain needs an antipode, which is exactly
//! what the semigroup algebra CZ+ lacks.
//!
//! ```bash
//! cargo run --example conjugation_identity
//! ```

use sweedler::hopf::{Delta, H4};
use sweedler::module_algebra::{h4_dual_numbers, q_dilation_z, q_dilation_zplus, Dual, Monomial};
use sweedler::scalar::Scalar;
use sweedler::smash::{proof_identity, proof_identity_expressions};
use sweedler::Result;

fn main() -> Result<()> {
    let q = Scalar::rational(1, 2);

    println!("group case CZ acting on C[x], h = d(1), a = x^3, q = {q}:");
    let spec = q_dilation_z(&q)?;
    let exprs = proof_identity_expressions(&spec, &Delta(1), &Monomial(3))?;
    let names = [
        "h·a ⊗ 1                          ",
        "Σ h(1)·a ⊗ ε(h(2))·1             ",
        "Σ h(1)·a ⊗ h(2)S(h(3))           ",
        "Σ tau(h(1) ⊗ a) (1 ⊗ S(h(2)))    ",
        "Σ (1 ⊗ h(1)) (a ⊗ 1) (1 ⊗ S(h(2)))",
    ];
    for (name, e) in names.iter().zip(&exprs) {
        println!("  {name} = {e}");
    }
    print!("{}", proof_identity(&spec, &Delta(1), &Monomial(3))?.render_text());

    println!("\nnon-cocommutative case, H4 on the dual numbers, h = x, a = t:");
    let spec = h4_dual_numbers();
    let exprs = proof_identity_expressions(&spec, &H4::X, &Dual::T)?;
    for (name, e) in names.iter().zip(&exprs) {
        println!("  {name} = {e}");
    }
    for h in H4::ALL {
        for a in Dual::ALL {
            let report = proof_identity(&spec, &h, &a)?;
            println!(
                "  h = {h}, a = {a}: {}",
                if report.passed() { "chain holds" } else { "BROKEN" }
            );
        }
    }

    println!("\nwithout an antipode the chain cannot even be written:");
    let spec = q_dilation_zplus(&q)?;
    match proof_identity(&spec, &Delta(1), &Monomial(1)) {
        Err(e) => println!("  {e}"),
        Ok(_) => unreachable!("CZ+ has no antipode"),
    }
    Ok(())
}
