//! Why the antipode matters: over CZ+ (no antipode), truncations of
//! Σ |q|^(-i²) xⁱ are bounded in every mixed norm yet explode in every
//! envelope norm, so the two completions genuinely differ.
//!
//! ```bash
//! cargo run --example counterexample
//! ```

use sweedler::cli::{cmd_demo_counterexample, RunConfig};
use sweedler::hopf::Delta;
use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{q_dilation_zplus, Monomial};
use sweedler::scalar::{rat, Scalar};
use sweedler::seminorm;
use sweedler::smash::proof_identity;
use sweedler::Result;

fn main() -> Result<()> {
    println!("the obstruction, degree by degree: |q| = 1/2, rho = 1, N = 3\n");
    let cfg = RunConfig {
        abs_q: Some(rat(1, 2)),
        n: 3,
        max_degree: 6,
        ..RunConfig::default()
    };
    let out = cmd_demo_counterexample(&cfg)?;
    print!("{}", out.text);

    println!("\nwhere the obstruction comes from: over CZ+ the stability scan");
    println!("for the plain l1 norm has no uniform constant,");
    let spec = q_dilation_zplus(&Scalar::rational(1, 2))?;
    let scan =
        seminorm::stability_scan(&spec, &seminorm::poly_l1(), &LinComb::basis(Delta(1)), 8)?;
    println!("  verdict: {}", scan.verdict);

    println!("and the conjugation identity is unavailable:");
    match proof_identity(&spec, &Delta(1), &Monomial(1)) {
        Err(e) => println!("  {e}"),
        Ok(_) => unreachable!("CZ+ has no antipode"),
    }
    Ok(())
}
