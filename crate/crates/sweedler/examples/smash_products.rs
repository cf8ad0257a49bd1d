//! Multiplying in A # H: the twist map τ, the two independent product
//! implementations, and the identities that make A and H subalgebras.
//!
//! ```bash
//! cargo run --example smash_products
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sweedler::hopf::{Delta, H4};
use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{h4_dual_numbers, q_dilation_zplus, Dual, Monomial};
use sweedler::sample;
use sweedler::scalar::Scalar;
use sweedler::smash::{
    embed_algebra, embed_hopf, smash_mul, smash_mul_composed, tau, verify_associativity,
    verify_embeddings, SmashElement,
};
use sweedler::Result;

fn main() -> Result<()> {
    let q = Scalar::rational(1, 2);
    let spec = q_dilation_zplus(&q)?;

    println!("tau moves H past A: tau(h ⊗ a) = Σ h(1)·a ⊗ h(2)");
    println!(
        "  tau(d(1) ⊗ x) = {}",
        tau(&spec, &LinComb::basis(Delta(1)), &LinComb::basis(Monomial(1)))?
    );

    let u = SmashElement::basis(Monomial(1), Delta(1));
    let square = smash_mul(&spec, &u, &u)?;
    println!("\nproducts pick up dilation factors:");
    println!("  ({u}) * ({u}) = {square}");
    println!(
        "  same through the composition route: {}",
        smash_mul_composed(&spec, &u, &u)?
    );

    println!("\nA and H embed multiplicatively:");
    let x = embed_algebra(&spec, &LinComb::basis(Monomial(1)));
    let d2 = embed_hopf(&spec, &LinComb::basis(Delta(2)));
    let d3 = embed_hopf(&spec, &LinComb::basis(Delta(3)));
    println!("  (x # d(0)) * (x # d(0)) = {}", smash_mul(&spec, &x, &x)?);
    println!("  (1 # d(2)) * (1 # d(3)) = {}", smash_mul(&spec, &d2, &d3)?);
    println!(
        "  (1 # d(1)) * (x # d(0)) = {}   (equals tau(d(1) ⊗ x))",
        smash_mul(
            &spec,
            &embed_hopf(&spec, &LinComb::basis(Delta(1))),
            &x
        )?
    );

    let mut samples = Vec::new();
    for a in 0..3u32 {
        for h in 0..3i64 {
            samples.push((Monomial(a), Monomial(a + 1), Delta(h), Delta(h + 1)));
        }
    }
    let report = verify_embeddings(&spec, &samples)?;
    println!(
        "embedding identities on {} samples: {}",
        samples.len(),
        if report.passed() { "all pass" } else { "FAILURES" }
    );

    println!("\nnon-cocommutative case, dual numbers # H4:");
    let spec = h4_dual_numbers();
    println!(
        "  tau(x ⊗ t) = {}",
        tau(&spec, &LinComb::basis(H4::X), &LinComb::basis(Dual::T))?
    );
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let triples: Vec<_> = (0..20)
        .map(|_| {
            (
                sample::smash_h4(&mut rng, 3),
                sample::smash_h4(&mut rng, 3),
                sample::smash_h4(&mut rng, 3),
            )
        })
        .collect();
    let report = verify_associativity(&spec, &triples)?;
    println!(
        "  associativity + product differential on 20 random triples: {}",
        if report.passed() { "all pass" } else { "FAILURES" }
    );
    Ok(())
}
