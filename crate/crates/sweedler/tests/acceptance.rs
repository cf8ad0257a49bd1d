//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `cargo test -- --nocapture`).
//!
//! Everything here is an exact comparison of canonical forms or exact
//! rationals; there are no tolerances anywhere.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sweedler::cli::{full_hopf_report, RunConfig};
use sweedler::error::Error;
use sweedler::hopf::{delta_range, group_z, semigroup_zplus, sweedler_h4, Delta, H4};
use sweedler::lincomb::LinComb;
use sweedler::module_algebra::{h4_dual_numbers, q_dilation_z, q_dilation_zplus, Dual, Monomial};
use sweedler::qplane;
use sweedler::report::Report;
use sweedler::sample;
use sweedler::scalar::{rat, rat_int, rat_pow, Scalar};
use sweedler::seminorm::{self, Verdict};
use sweedler::smash::{proof_identity, verify_associativity, verify_stability_inequality};

fn finish(criterion: u32, what: &str, pass: bool, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let line = format!(
        "{} criterion {criterion}: {what} ({elapsed:.2?}, budget {budget:.2?})",
        if pass { "PASS" } else { "FAIL" }
    );
    println!("{line}");
    assert!(pass, "{line}");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:.2?} >= {budget:.2?}"
    );
}

fn assert_report(report: &Report) {
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn criterion_1_hopf_axiom_suite() {
    let started = Instant::now();

    let h4 = sweedler_h4();
    assert_report(&full_hopf_report(&h4, &H4::ALL).unwrap());

    let gz = group_z();
    assert_report(&full_hopf_report(&gz, &delta_range(-6, 6)).unwrap());

    let zp = semigroup_zplus();
    let report = full_hopf_report(&zp, &delta_range(0, 6)).unwrap();
    assert_report(&report);
    assert!(report.notes.iter().any(|n| n.contains("no antipode")));
    let err = zp.verify_antipode(&delta_range(0, 6)).unwrap_err();
    assert!(matches!(err, Error::NoAntipode { .. }));

    finish(1, "Hopf axiom suite", true, started, Duration::from_secs(1));
}

#[test]
fn criterion_2_smash_associativity() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    for q in [
        Scalar::rational(1, 2),
        Scalar::from_int(2),
        Scalar::rational(3, 5),
    ] {
        let spec = q_dilation_z(&q).unwrap();
        let triples: Vec<_> = (0..100)
            .map(|_| {
                (
                    sample::smash_dilation(&mut rng, -4, 4, 5, 3),
                    sample::smash_dilation(&mut rng, -4, 4, 5, 3),
                    sample::smash_dilation(&mut rng, -4, 4, 5, 3),
                )
            })
            .collect();
        // verify_associativity also runs the differential check between the
        // Sweedler-form product and the composition-route product.
        let report = verify_associativity(&spec, &triples).unwrap();
        assert_report(&report);
        assert_eq!(report.checks.len(), 200);
    }

    let spec = h4_dual_numbers();
    let triples: Vec<_> = (0..100)
        .map(|_| {
            (
                sample::smash_h4(&mut rng, 3),
                sample::smash_h4(&mut rng, 3),
                sample::smash_h4(&mut rng, 3),
            )
        })
        .collect();
    let report = verify_associativity(&spec, &triples).unwrap();
    assert_report(&report);

    finish(
        2,
        "smash associativity + product differential",
        true,
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_3_proof_identity_chain() {
    let started = Instant::now();

    // Mandatory non-cocommutative case, exhaustive.
    let spec = h4_dual_numbers();
    assert!(!spec.hopf.is_cocommutative_on(&H4::ALL).unwrap());
    for h in H4::ALL {
        for a in Dual::ALL {
            assert_report(&proof_identity(&spec, &h, &a).unwrap());
        }
    }

    // Group case for |q| < 1, = 1, > 1 (including a non-real q of modulus 1).
    for q in [
        Scalar::rational(1, 2),
        Scalar::one(),
        Scalar::i(),
        Scalar::from_int(3),
    ] {
        let spec = q_dilation_z(&q).unwrap();
        for k in -5..=5i64 {
            for n in 0..=8u32 {
                assert_report(&proof_identity(&spec, &Delta(k), &Monomial(n)).unwrap());
            }
        }
    }

    finish(
        3,
        "conjugation identity chain, step by step",
        true,
        started,
        Duration::from_secs(2),
    );
}

#[test]
fn criterion_4_quantum_plane_identification() {
    let started = Instant::now();
    let q = Scalar::rational(1, 2);
    let spec = q_dilation_zplus(&q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for _ in 0..100 {
        let u = sample::qplane_elem(&mut rng, &q, 4, 3);
        let v = sample::qplane_elem(&mut rng, &q, 4, 3);
        let direct = u.mul(&v).unwrap();
        let via_smash = qplane::from_smash(
            &sweedler::smash::smash_mul(&spec, &qplane::to_smash(&u), &qplane::to_smash(&v))
                .unwrap(),
            &q,
        )
        .unwrap();
        assert_eq!(direct, via_smash, "u = {u}, v = {v}");
    }

    // Confluence: leftmost, rightmost, and seeded-random strategies agree.
    for _ in 0..50 {
        let w = sample::word(&mut rng, 8);
        let leftmost = qplane::normalize_word(&w, &q).unwrap();
        let rightmost = qplane::normalize_word_with(&w, &q, |n| n - 1).unwrap();
        assert_eq!(leftmost, rightmost, "word {w}");
        for _ in 0..3 {
            let mut chooser_rng = ChaCha8Rng::seed_from_u64(rng.random_range(0..u64::MAX));
            let random =
                qplane::normalize_word_with(&w, &q, |n| chooser_rng.random_range(0..n)).unwrap();
            assert_eq!(leftmost, random, "word {w}");
        }
    }

    finish(
        4,
        "smash ↔ quantum-plane identification + confluence",
        true,
        started,
        Duration::from_secs(2),
    );
}

#[test]
fn criterion_5_counterexample_shadow() {
    let started = Instant::now();
    let q = Scalar::rational(1, 2);
    let spec = q_dilation_zplus(&q).unwrap();

    // (a) ‖·‖_N is submultiplicative and H-stable: verdict UniformlyBounded(8).
    let trunc = seminorm::trunc(3);
    let algebra = sweedler::module_algebra::polynomial_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs: Vec<_> = (0..200)
        .map(|_| (sample::poly(&mut rng, 6, 3), sample::poly(&mut rng, 6, 3)))
        .collect();
    let report =
        seminorm::check_submultiplicative(&trunc, |u, v| algebra.mul(u, v), &pairs).unwrap();
    assert_report(&report);

    let scan = seminorm::stability_scan(&spec, &trunc, &LinComb::basis(Delta(1)), 6).unwrap();
    assert_eq!(scan.verdict, Verdict::UniformlyBounded(rat_int(8)));
    // H-stability across the family {δ_k}: bound |q|^{-kN} = 2^{3k}.
    for k in 0..=5i64 {
        let scan =
            seminorm::stability_scan(&spec, &trunc, &LinComb::basis(Delta(k)), 6).unwrap();
        let expected = rat_pow(&rat_int(2), 3 * k).unwrap();
        assert_eq!(scan.verdict, Verdict::UniformlyBounded(expected), "k = {k}");
    }

    // (b) The unweighted ℓ¹ scan for δ₁ diverges with ratio exactly 2.
    let scan =
        seminorm::stability_scan(&spec, &seminorm::poly_l1(), &LinComb::basis(Delta(1)), 8)
            .unwrap();
    assert_eq!(
        scan.verdict,
        Verdict::Diverges {
            ratio: Some(rat_int(2))
        }
    );

    // (c) Witness table: mixed column pinned at 531 from D = 3 on, envelope
    // column at D = 6 at least 2³⁶.
    let rows = seminorm::witness_divergence(&rat(1, 2), &rat_int(1), 3, 6).unwrap();
    for row in &rows {
        if row.degree >= 3 {
            assert_eq!(row.mixed, rat_int(531), "D = {}", row.degree);
        }
    }
    assert!(rows[6].envelope >= rat_pow(&rat_int(2), 36).unwrap());

    finish(
        5,
        "seminorm shadow: truncation stable, ℓ¹ ratio 2, witness table",
        true,
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_6_hopf_case_stability_inequality() {
    let started = Instant::now();

    // ‖·‖' is the envelope norm pulled back along a ↦ a⊗1 (weight ρⁿ = 1 at
    // ρ = 1); ‖·‖'' on H must dominate the dilation over the tested window,
    // which 16 = 2^{max n / 2} does exactly: the corner k = ±4, n = 8 meets
    // the bound with equality.
    for q in [Scalar::rational(1, 2), Scalar::from_int(2)] {
        let spec = q_dilation_z(&q).unwrap();
        let abs_q = seminorm::scalar_abs(&q).require_exact("|q|").unwrap();
        let norm_a = seminorm::envelope_on_poly(&rat_int(1), &abs_q).unwrap();
        let norm_h = seminorm::group_weighted_l1(&rat_int(16));
        let hs: Vec<_> = (-4..=4i64).map(|k| LinComb::basis(Delta(k))).collect();
        let a_labels: Vec<_> = (0..=8).map(Monomial).collect();
        let report =
            verify_stability_inequality(&spec, &norm_a, &norm_h, &hs, &a_labels).unwrap();
        assert_report(&report);
        assert_eq!(report.checks.len(), 81);
    }

    finish(
        6,
        "Hopf-case stability bound ‖h·a‖' ≤ C‖a‖'",
        true,
        started,
        Duration::from_secs(1),
    );
}

fn run_cli(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_sweedler"))
        .args(args)
        .env_remove("SWEEDLER_OUTPUT")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code(),
    )
}

/// Minimal structural validation of the report JSON schema.
fn validate_report_json(v: &serde_json::Value) {
    assert_eq!(v["schema"], 1);
    assert!(v["preset"].is_string());
    assert!(v["pass"].is_boolean());
    for check in v["checks"].as_array().expect("checks array") {
        assert!(check["axiom"].is_string());
        assert!(check["labels"].is_string());
        assert!(check["pass"].is_boolean());
        assert!(check["lhs"].is_string());
        assert!(check["rhs"].is_string());
    }
}

#[test]
fn criterion_7_cli_contract() {
    let started = Instant::now();

    // Byte-exact text outputs.
    let (stdout, _, code) = run_cli(&[
        "smash",
        "mul",
        "--preset",
        "qdilation",
        "--q",
        "1/2",
        "x#d(1)",
        "x#d(1)",
    ]);
    assert_eq!(stdout, "2 * x^2 # d(2)\n");
    assert_eq!(code, Some(0));

    let (stdout, _, code) = run_cli(&["qplane", "normalize", "--q", "1/2", "y*x"]);
    assert_eq!(stdout, "2 * x*y\n");
    assert_eq!(code, Some(0));

    // Counterexample demo: table contract in both output modes.
    let (stdout, _, code) = run_cli(&[
        "demo",
        "counterexample",
        "--q",
        "1/2",
        "--rho",
        "1",
        "--N",
        "3",
        "--max-degree",
        "6",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("531"));

    let (stdout, _, code) = run_cli(&[
        "demo",
        "counterexample",
        "--q",
        "1/2",
        "--rho",
        "1",
        "--N",
        "3",
        "--max-degree",
        "6",
        "--output",
        "json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().expect("rows");
    assert_eq!(rows.len(), 7);
    for row in &rows[3..] {
        assert_eq!(row["mixed"]["value_exact"], "531");
        assert!(row["mixed"]["value_approx"].is_string());
    }
    let envelope_d6: sweedler::Rational =
        rows[6]["envelope"]["value_exact"].as_str().unwrap().parse().unwrap();
    assert!(envelope_d6 >= rat_pow(&rat_int(2), 36).unwrap());

    // Report JSON validates against the declared schema, and the two output
    // modes agree on the verdict (the exit status).
    let (stdout, _, code) = run_cli(&[
        "verify",
        "hopf",
        "--preset",
        "sweedler-h4",
        "--output",
        "json",
    ]);
    assert_eq!(code, Some(0));
    validate_report_json(&serde_json::from_str(&stdout).expect("valid json"));
    let (_, _, text_code) = run_cli(&["verify", "hopf", "--preset", "sweedler-h4"]);
    assert_eq!(text_code, code);

    // The no-antipode preset: `verify hopf` passes with a note, while
    // `verify proof-identity` exits nonzero with the documented message.
    let (_, _, code) = run_cli(&["verify", "hopf", "--preset", "semigroup-zplus"]);
    assert_eq!(code, Some(0));
    let (_, stderr, code) = run_cli(&[
        "verify",
        "proof-identity",
        "--preset",
        "qdilation",
        "--q",
        "1/2",
    ]);
    assert_ne!(code, Some(0));
    assert!(stderr.contains("no antipode"));

    // Determinism: same config and seed give byte-identical output.
    let args = [
        "verify", "smash", "--preset", "h4-dual", "--seed", "9", "--count", "20",
    ];
    let (a, _, _) = run_cli(&args);
    let (b, _, _) = run_cli(&args);
    assert_eq!(a, b);

    finish(7, "CLI contract", true, started, Duration::from_secs(1));
}

#[test]
fn run_config_defaults_are_documented() {
    // The acceptance suite exercises the CLI through the binary; this pins
    // the library-side default bundle the binary starts from.
    let cfg = RunConfig::default();
    assert_eq!(cfg.n, 3);
    assert_eq!(cfg.max_degree, 8);
    assert_eq!(cfg.depth, 6);
    assert_eq!(cfg.seed, 0);
    assert_eq!(cfg.rho, rat_int(1));
}
