//! The weighted-ℓ¹ seminorm families: exact evaluation, the approx-only
//! escape hatch for irrational moduli, and submultiplicativity.
//!
//! ```bash
//! cargo run --example seminorms
//! ```

use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{polynomial_algebra, Monomial};
use sweedler::qplane::QMonomial;
use sweedler::scalar::{rat, rat_int, Scalar};
use sweedler::seminorm::{self, scalar_abs};
use sweedler::Result;

fn main() -> Result<()> {
    let poly = LinComb::from_terms([
        (Monomial(0), Scalar::from_int(2)),
        (Monomial(3), Scalar::rational(-1, 2)),
        (Monomial(9), Scalar::from_int(100)),
    ]);
    println!("a = {poly}");
    for n in [1u32, 3, 9] {
        let f = seminorm::trunc(n);
        println!("  trunc(N={n})(a)  = {}", f.eval(&poly));
    }
    let f = seminorm::poly_weighted_l1(&rat(3, 2))?;
    println!("  weighted-l1(rho=3/2)(a) = {}", f.eval(&poly));

    println!("\nquantum-plane families on x*y (|q| = 1/2, rho = 2):");
    let xy = LinComb::basis(QMonomial { x: 1, y: 1 });
    let env = seminorm::envelope(&rat_int(2), &rat(1, 2))?;
    let mix = seminorm::mixed(&rat_int(2), 3)?;
    println!("  envelope(x*y) = {}", env.eval(&xy));
    println!("  mixed(x*y)    = {}", mix.eval(&xy));

    println!("\nexactness is tracked, never silently lost:");
    println!("  |3/5 + 4/5 i| = {}", scalar_abs(&Scalar::new(rat(3, 5), rat(4, 5))));
    println!("  |1 + i|       = {}", scalar_abs(&Scalar::new(rat_int(1), rat_int(1))));

    println!("\nsubmultiplicativity of trunc(N=3) on sample pairs:");
    let algebra = polynomial_algebra();
    let pairs = vec![
        (LinComb::basis(Monomial(1)), LinComb::basis(Monomial(2))),
        (LinComb::basis(Monomial(2)), LinComb::basis(Monomial(2))),
        (poly.clone(), LinComb::basis(Monomial(1))),
    ];
    let report = seminorm::check_submultiplicative(
        &seminorm::trunc(3),
        |u, v| algebra.mul(u, v),
        &pairs,
    )?;
    print!("{}", report.render_text());
    Ok(())
}
