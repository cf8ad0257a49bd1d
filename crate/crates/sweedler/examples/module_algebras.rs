//! The two module-algebra presets: the q-dilation action of CZ+ on C[x]
//! and Sweedler's H4 acting on the dual numbers, with the full axiom check.
//!
//! ```bash
//! cargo run --example module_algebras
//! ```

use sweedler::hopf::{delta_range, Delta, H4};
use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{h4_dual_numbers, q_dilation_zplus, sample_grid, Dual, Monomial};
use sweedler::scalar::Scalar;
use sweedler::Result;

fn main() -> Result<()> {
    let q = Scalar::rational(1, 2);
    let spec = q_dilation_zplus(&q)?;

    println!("q-dilation on C[x] at q = {q}: d(k) scales x^n by q^(-kn)");
    for k in 0..=2i64 {
        for n in 0..=3u32 {
            println!(
                "  d({k}) · {} = {}",
                Monomial(n),
                spec.act_basis(&Delta(k), &Monomial(n))?
            );
        }
    }
    let h = &LinComb::basis(Delta(1)) + &LinComb::basis(Delta(2));
    println!(
        "  (d(1)+d(2)) · x = {}   (linearity over two grouplikes)",
        spec.act(&h, &LinComb::basis(Monomial(1)))?
    );

    let hs = delta_range(0, 4);
    let als: Vec<Monomial> = (0..=4).map(Monomial).collect();
    let report = spec.verify(&sample_grid(&hs, &als))?;
    println!(
        "axioms on a {}-sample grid: {}",
        report.checks.len(),
        if report.passed() { "all pass" } else { "FAILURES" }
    );

    println!("\nH4 acting on the dual numbers C[t]/(t^2):");
    let spec = h4_dual_numbers();
    for h in H4::ALL {
        for a in Dual::ALL {
            println!("  {h} · {a} = {}", spec.act_basis(&h, &a)?);
        }
    }
    let report = spec.verify(&sample_grid(&H4::ALL, &Dual::ALL))?;
    print!("{}", report.render_text());
    Ok(())
}
