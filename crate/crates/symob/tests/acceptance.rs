//! Acceptance suite: one test (and one printed pass/fail line) per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symob::algebra::AlgebraElement;
use symob::characters::{character_table, irrep_dim, isotypic_project};
use symob::eulerian::{
    adams_element, eulerian_idempotents, lemma7_reconciled, obstruction_element,
    partition_obstruction,
};
use symob::perm::{all_permutations, factorial, list_partitions, Partition, Permutation};
use symob::specht::acts_as_zero;
use symob::verify::{
    bound_thresholds, verify_excess, verify_lemma13, verify_lemma14_blocks, verify_lemma16,
    verify_lemma21, verify_lemma22, verify_loday, verify_pi_decomposition, verify_theorem5,
};

fn criterion(n: usize, desc: &str, f: impl FnOnce() + UnwindSafe) {
    let outcome = catch_unwind(f);
    let token = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {token} — {desc}");
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
}

fn symob_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symob"))
}

#[test]
fn criterion_01_flagship_compare_ideals() {
    criterion(1, "compare-ideals --k 6 --l 2 --r 3 strict, < 60 s", || {
        let start = Instant::now();
        let out = symob_bin()
            .args(["compare-ideals", "--k", "6", "--l", "2", "--r", "3"])
            .output()
            .expect("run symob");
        assert!(out.status.success(), "nonzero exit");
        let report: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("JSON report");
        assert_eq!(report["strict"], serde_json::json!(true));
        assert_eq!(report["dim_lo"], serde_json::json!(14));
        assert_eq!(report["dim_hi"], serde_json::json!(24));
        assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    });
}

#[test]
fn criterion_02_theorem5_two_routes() {
    criterion(2, "theorem 5 routes agree with explicit witness mu, < 5 min", || {
        let start = Instant::now();
        let report = verify_theorem5().unwrap();
        assert!(report.pass, "witnesses: {:?}", report.witnesses);
        let witnesses = report.witnesses.expect("witness recorded");
        assert!(
            witnesses.iter().any(|w| w.starts_with("mu=")),
            "no mu witness in {witnesses:?}"
        );
        assert!(start.elapsed() < Duration::from_secs(300), "took {:?}", start.elapsed());
    });
}

#[test]
fn criterion_03_idempotent_suite() {
    criterion(3, "idempotent families n <= 6: axioms, Adams eigenvalues, descent formula", || {
        for n in 1..=6usize {
            for signed in [false, true] {
                let family = eulerian_idempotents(n, signed);
                // Orthogonality and idempotency: e_i e_j = delta_ij e_i.
                for i in 1..=n {
                    for j in 1..=n {
                        let prod = family
                            .element(i)
                            .unwrap()
                            .multiply(family.element(j).unwrap())
                            .unwrap();
                        if i == j {
                            assert_eq!(&prod, family.element(i).unwrap(), "n={n} i={i}");
                        } else {
                            assert!(prod.is_zero(), "n={n} i={i} j={j}");
                        }
                    }
                }
                // Completeness: sum_l e^(l) = identity.
                let mut total = AlgebraElement::zero(n);
                for l in 1..=n {
                    total = total.add(family.element(l).unwrap()).unwrap();
                }
                assert_eq!(total, AlgebraElement::one(n), "n={n} signed={signed}");
                // Adams eigen-decomposition, p in {2, 3}.
                for p in [2usize, 3] {
                    let psi = adams_element(n, p, signed);
                    let mut expected = AlgebraElement::zero(n);
                    for l in 1..=n {
                        let weight = BigRational::from_integer(BigInt::from(p).pow(l as u32));
                        expected = expected
                            .add(&family.element(l).unwrap().scale(&weight))
                            .unwrap();
                    }
                    assert_eq!(psi, expected, "n={n} p={p} signed={signed}");
                }
            }
            // The literal descent-number formula reconciles with the signed
            // family under the recorded convention map.
            let signed_family = eulerian_idempotents(n, true);
            for i in 1..=n {
                assert_eq!(
                    lemma7_reconciled(n, i).unwrap(),
                    *signed_family.element(i).unwrap(),
                    "n={n} i={i}"
                );
            }
        }
    });
}

#[test]
fn criterion_04_loday_dimensions() {
    criterion(4, "conjugation-span dimension matches the rising-factorial coefficient, k <= 6", || {
        let report = verify_loday(6).unwrap();
        assert!(report.pass, "dims: {:?}", report.dimensions);
    });
}

#[test]
fn criterion_05_lemma16_19_20() {
    criterion(5, "lemma 16 identity k <= 6; cycle-power invariance k <= 6; stabilizer probes", || {
        for k in 2..=6 {
            assert!(verify_lemma16(k).unwrap().pass, "lemma 16 at k={k}");
        }
        // Cycle-power invariance: tau_k^s * (e~^(l) * tau_k) is fixed, all s.
        for k in 2..=6usize {
            let tau = Partition::new(vec![k]).unwrap().make_tau();
            for l in 2..=k {
                let base = obstruction_element(k, l).unwrap();
                for s in 0..k as i64 {
                    assert_eq!(
                        base.conjugate_by(&tau.power(s)).unwrap(),
                        base,
                        "k={k} l={l} s={s}"
                    );
                }
            }
        }
        // Stabilizer invariance for partitions with repeated or mixed parts:
        // block powers always stabilize; a block swap stabilizes equal parts.
        for (parts, swap) in [
            (vec![2usize, 2], Some(vec![3u8, 4, 1, 2])),
            (vec![3, 3], Some(vec![4u8, 5, 6, 1, 2, 3])),
            (vec![4, 2], None),
        ] {
            let lambda = Partition::new(parts.clone()).unwrap();
            for l in 2..=lambda.weight() {
                let base = partition_obstruction(&lambda, l).unwrap();
                if base.is_zero() {
                    continue;
                }
                // Per-block cycle powers.
                let mut offset = 0usize;
                for &part in lambda.parts() {
                    let block_tau = Partition::new(vec![part]).unwrap().make_tau();
                    let mut images: Vec<u8> = (1..=lambda.weight() as u8).collect();
                    for i in 1..=part {
                        images[offset + i - 1] = (offset + block_tau.apply(i)) as u8;
                    }
                    let g = Permutation::from_images(images).unwrap();
                    assert_eq!(base.conjugate_by(&g).unwrap(), base, "{parts:?} l={l}");
                    offset += part;
                }
                if let Some(images) = swap.clone() {
                    let zeta = Permutation::from_images(images).unwrap();
                    assert_eq!(base.conjugate_by(&zeta).unwrap(), base, "{parts:?} l={l} swap");
                }
            }
        }
    });
}

#[test]
fn criterion_06_pi_decomposition() {
    criterion(6, "Adams-weight projectors: orthogonal, complete, vanishing rules, k <= 6", || {
        for k in 3..=6 {
            let report = verify_pi_decomposition(k).unwrap();
            assert!(report.pass, "k={k}");
        }
    });
}

#[test]
fn criterion_07_character_infrastructure() {
    criterion(7, "character tables k <= 7 exact; Specht oracle agreement, 100+ random elements", || {
        for k in 1..=7usize {
            let table = character_table(k);
            let partitions = list_partitions(k);
            let order = BigInt::from(factorial(k));
            // Row orthogonality: sum_mu |C_mu| chi_a(mu) chi_b(mu) = delta k!.
            let rows: Vec<&[i64]> = partitions.iter().map(|p| table.row(p).unwrap()).collect();
            for a in 0..partitions.len() {
                for b in 0..partitions.len() {
                    let mut acc = BigInt::from(0);
                    for m in 0..partitions.len() {
                        acc += BigInt::from(table.class_sizes()[m]) * rows[a][m] * rows[b][m];
                    }
                    let expected = if a == b { order.clone() } else { BigInt::from(0) };
                    assert_eq!(acc, expected, "k={k} rows {a},{b}");
                }
            }
            // Sum of squared dimensions.
            let dim_sq: u64 = partitions.iter().map(|p| irrep_dim(p).pow(2)).sum();
            assert_eq!(dim_sq, factorial(k), "k={k}");
        }
        // Zero-test agreement with the explicit Specht-module oracle.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0usize;
        for k in 2..=4usize {
            let perms = all_permutations(k);
            let partitions = list_partitions(k);
            for _ in 0..40 {
                // Random sparse element; half the time, pre-multiplied by a
                // central idempotent so the zero branch is exercised too.
                let mut terms = Vec::new();
                for _ in 0..rng.gen_range(1..=4) {
                    let p = perms[rng.gen_range(0..perms.len())].clone();
                    let c = BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)));
                    terms.push((p, c));
                }
                let mut x = AlgebraElement::from_terms(k, terms).unwrap();
                if rng.gen_bool(0.5) {
                    let block = &partitions[rng.gen_range(0..partitions.len())];
                    x = isotypic_project(&x, &[block.clone()]).unwrap();
                }
                for lambda in &partitions {
                    let oracle = acts_as_zero(&x, lambda).unwrap();
                    let by_projection =
                        isotypic_project(&x, &[lambda.clone()]).unwrap().is_zero();
                    assert_eq!(oracle, by_projection, "k={k} lambda={lambda} x={x:?}");
                    checked += 1;
                }
            }
        }
        assert!(checked >= 100, "only {checked} oracle comparisons");
    });
}

#[test]
fn criterion_08_rank_lemmas_and_excess() {
    criterion(8, "lemma 21 ranks 2r in {4,6,8}; lemma 22 witness 2r in {4,6}; excess at S_4", || {
        for r in 2..=4 {
            let report = verify_lemma21(r).unwrap();
            assert!(report.pass, "lemma 21 r={r}");
            assert_eq!(
                report.dimensions.as_deref(),
                Some(&[r as i64, r as i64][..]),
                "lemma 21 rank r={r}"
            );
        }
        for r in 2..=3 {
            let report = verify_lemma22(r).unwrap();
            assert!(report.pass, "lemma 22 r={r}");
            let witnesses = report.witnesses.expect("witness s recorded");
            assert!(witnesses.iter().any(|w| w.starts_with("s=")), "{witnesses:?}");
        }
        let excess = verify_excess(2).unwrap();
        assert!(excess.pass);
        let dims = excess.dimensions.expect("dimensions recorded");
        assert_eq!(dims[0], 14, "dim V_1 for S_4");
        assert!(dims[1] > dims[0], "strict excess");
    });
}

#[test]
fn criterion_09_diagonal_brute_force() {
    criterion(9, "diagonal-sum zero and block criteria, exhaustive on S_3", || {
        assert!(verify_lemma13(3, 50).unwrap().pass);
        assert!(verify_lemma14_blocks(3).unwrap().pass);
    });
}

// The same checks on S_4 are much heavier; run with `cargo test -- --ignored`.
#[test]
#[ignore]
fn criterion_09_diagonal_brute_force_s4() {
    assert!(verify_lemma13(4, 20).unwrap().pass);
    assert!(verify_lemma14_blocks(4).unwrap().pass);
}

#[test]
fn criterion_10_bounds() {
    criterion(10, "threshold arithmetic n > 7R^2 + R + 2 and k - 2 > 7R^2, R <= 10", || {
        for r in 2..=10usize {
            let report = bound_thresholds(2, r).unwrap();
            assert_eq!(report.n_min_thm2, Some(7 * r * r + r + 2), "r={r}");
            assert!(report.k_min - 2 > 7 * r * r, "r={r} k_min={}", report.k_min);
            assert_eq!(report.k_min, 7 * r * r + 3, "r={r}");
            assert_eq!(report.n_min_thm1, report.k_min + r + 1, "r={r}");
            assert!(report.chain_holds_at_k_min, "r={r}");
        }
    });
}

#[test]
fn criterion_11_deterministic_reports() {
    criterion(11, "verify all --stable-output is byte-identical across runs", || {
        let run = || {
            symob_bin()
                .args(["verify", "all", "--stable-output"])
                .output()
                .expect("run symob")
        };
        let first = run();
        let second = run();
        assert!(first.status.success(), "first run failed");
        assert!(second.status.success(), "second run failed");
        assert!(!first.stdout.is_empty());
        assert_eq!(first.stdout, second.stdout, "reports differ between runs");
    });
}
