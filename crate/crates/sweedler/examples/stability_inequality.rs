//! H-stability: scanning the minimal constants in ‖h·xⁿ‖ ≤ C‖xⁿ‖, and the
//! bound C = Σ ‖h(1)‖·‖S(h(2))‖ that an antipode buys.
//!
//! For the group algebra CZ the bound holds for every monomial window and
//! for |q| on either side of 1; the corner of the tested window meets it
//! with equality.
//!
//! ```bash
//! cargo run --example stability_inequality
//! ```

use sweedler::hopf::Delta;
use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{q_dilation_z, q_dilation_zplus, Monomial};
use sweedler::scalar::{rat_int, Scalar};
use sweedler::seminorm;
use sweedler::smash::{stability_constant, verify_stability_inequality};
use sweedler::Result;

fn main() -> Result<()> {
    let q = Scalar::rational(1, 2);
    let spec = q_dilation_zplus(&q)?;

    println!("scan: truncation norm, h = d(1), |q| = 1/2");
    let scan = seminorm::stability_scan(&spec, &seminorm::trunc(3), &LinComb::basis(Delta(1)), 6)?;
    print!("{}", scan.render_text());

    println!("\nscan: plain l1 norm, h = d(1) — no uniform constant exists");
    let scan = seminorm::stability_scan(&spec, &seminorm::poly_l1(), &LinComb::basis(Delta(1)), 8)?;
    print!("{}", scan.render_text());

    println!("\nthe antipode bound on CZ: C = Σ ‖h(1)‖·‖S(h(2))‖");
    let spec = q_dilation_z(&q)?;
    let norm_h = seminorm::group_weighted_l1(&rat_int(16));
    for k in 1..=4i64 {
        let c = stability_constant(&spec, &LinComb::basis(Delta(k)), &norm_h)?;
        println!("  C(d({k})) = {}", c.value);
    }

    for q in [Scalar::rational(1, 2), Scalar::from_int(2)] {
        let spec = q_dilation_z(&q)?;
        let abs_q = seminorm::scalar_abs(&q).require_exact("|q|")?;
        let norm_a = seminorm::envelope_on_poly(&rat_int(1), &abs_q)?;
        let hs: Vec<_> = (-4..=4i64).map(|k| LinComb::basis(Delta(k))).collect();
        let a_labels: Vec<_> = (0..=8).map(Monomial).collect();
        let report = verify_stability_inequality(&spec, &norm_a, &norm_h, &hs, &a_labels)?;
        println!(
            "q = {q}: ‖h·a‖' ≤ C‖a‖' on {} (h, a) pairs: {}",
            report.checks.len(),
            if report.passed() { "all pass" } else { "FAILURES" }
        );
    }
    Ok(())
}
