//! Verify every coalgebra, bialgebra, and antipode axiom on the three
//! presets, and watch a deliberately corrupted comultiplication get caught.
//!
//! ```bash
//! cargo run --example hopf_axioms
//! ```

use sweedler::cli::full_hopf_report;
use sweedler::hopf::{delta_range, group_z, semigroup_zplus, sweedler_h4, BialgebraSpec, H4};
use sweedler::lincomb::{LinComb, Pair};
use sweedler::Result;

fn main() -> Result<()> {
    println!("== group algebra CZ (Hopf) ==");
    let gz = group_z();
    print!("{}", full_hopf_report(&gz, &delta_range(-6, 6))?.render_text());

    println!("\n== semigroup algebra CZ+ (bialgebra, no antipode) ==");
    let zp = semigroup_zplus();
    print!("{}", full_hopf_report(&zp, &delta_range(0, 6))?.render_text());
    let err = zp.verify_antipode(&delta_range(0, 6)).unwrap_err();
    println!("asking for its antipode anyway: {err}");

    println!("\n== Sweedler's H4 (the smallest non-cocommutative Hopf algebra) ==");
    let h4 = sweedler_h4();
    print!("{}", full_hopf_report(&h4, &H4::ALL)?.render_text());
    let dx = h4.comul_basis(&H4::X)?;
    println!("Δx        = {dx}");
    println!("flip(Δx)  = {}", sweedler::hopf::flip(&dx));
    println!(
        "cocommutative? {}",
        h4.is_cocommutative_on(&H4::ALL)?
    );

    println!("\n== a corrupted Δ is reported, not assumed away ==");
    let bad = BialgebraSpec::new(
        sweedler::hopf::AlgebraSpec::new("corrupted-h4", LinComb::basis(H4::One), {
            let h4 = sweedler_h4();
            move |a: &H4, b: &H4| h4.algebra.mul_basis(a, b)
        }),
        |l: &H4| {
            Ok(match l {
                H4::X => LinComb::basis(Pair::new(H4::X, H4::One)),
                other => sweedler_h4().comul_basis(other)?,
            })
        },
        |l: &H4| sweedler_h4().counit_basis(l),
    );
    print!("{}", bad.verify_coalgebra(&[H4::X])?.render_text());
    Ok(())
}
