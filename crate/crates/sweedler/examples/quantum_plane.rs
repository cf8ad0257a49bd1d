//! The quantum plane C_q[x,y] with xy = qyx: confluent rewriting to the
//! x-before-y normal form, and the algebra identification with C[x] # CZ+.
//!
//! ```bash
//! cargo run --example quantum_plane
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sweedler::expr;
use sweedler::module_algebra::q_dilation_zplus;
use sweedler::qplane::{self, QPlaneElement};
use sweedler::sample;
use sweedler::scalar::Scalar;
use sweedler::smash::smash_mul;
use sweedler::Result;

fn main() -> Result<()> {
    let q = Scalar::rational(1, 2);

    println!("rewriting yx -> q^(-1) xy at q = {q}:");
    for src in ["x*y", "y*x", "y*x*y*x", "y^3*x"] {
        let words = expr::eval_word(&expr::parse(src)?)?;
        println!("  {src:8} -> {}", qplane::normalize(&words, &q)?);
    }

    println!("\nthe defining relation normalizes to zero:");
    let relation = expr::eval_word(&expr::parse("x*y - 1/2*y*x")?)?;
    println!("  x*y - q*y*x -> {}", qplane::normalize(&relation, &q)?);

    println!("\nall rewrite strategies agree (confluence):");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let w = sample::word(&mut rng, 8);
        let leftmost = qplane::normalize_word(&w, &q)?;
        let rightmost = qplane::normalize_word_with(&w, &q, |n| n - 1)?;
        assert_eq!(leftmost, rightmost);
        println!(
            "  {w} -> coefficient {}, monomial {}",
            leftmost.0, leftmost.1
        );
    }

    println!("\nmultiplication agrees with the smash product of C[x] by CZ+:");
    let spec = q_dilation_zplus(&q)?;
    let u = QPlaneElement::monomial(&q, 1, 1);
    let direct = u.mul(&u)?;
    let via_smash = qplane::from_smash(
        &smash_mul(&spec, &qplane::to_smash(&u), &qplane::to_smash(&u))?,
        &q,
    )?;
    println!("  (x*y)^2 directly      = {direct}");
    println!("  through x^i y^j <-> x^i # d(j) = {via_smash}");
    println!("  to_smash(x^2 y^3)     = {}", qplane::to_smash(&QPlaneElement::monomial(&q, 2, 3)));
    Ok(())
}
