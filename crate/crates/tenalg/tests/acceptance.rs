//! Acceptance suite: every library-level gate runs here at its stated
//! trial count, exact rational equality throughout, one printed PASS/FAIL
//! line per sub-check (run with `--nocapture` to see them all).
//!
//! Two standard configurations: a self-dual dimension-2 identity-Gram
//! space, and a non-self-dual 2×3 rational-Gram space. Master seed 42.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tenalg::checks::{run_suite, CheckConfig, SuiteStatus};
use tenalg::products::{basis_element, phi_antisym, phi_matrix, phi_sym, phi_tensor, PhiMode};
use tenalg::scalar::{frac, int, Scalar};
use tenalg::symmetry::{antisymmetrize, symmetrize};
use tenalg::tensor::{Element, Word};
use tenalg::{Side, SpaceSpec};

fn self_dual_space() -> SpaceSpec {
    SpaceSpec::identity(2).unwrap()
}

fn rational_space() -> SpaceSpec {
    SpaceSpec::new(
        2,
        3,
        vec![
            vec![int(1), frac(1, 2), int(-1)],
            vec![int(2), int(0), frac(2, 3)],
        ],
        false,
    )
    .unwrap()
}

struct Gate {
    criterion: &'static str,
    failures: Vec<String>,
}

impl Gate {
    fn new(criterion: &'static str) -> Self {
        Gate {
            criterion,
            failures: Vec::new(),
        }
    }

    fn suite(&mut self, name: &str, label: &str, spec: &SpaceSpec, cfg: &CheckConfig) {
        let outcome = run_suite(name, spec, cfg)
            .unwrap_or_else(|| panic!("unknown suite {name}"));
        match outcome.status {
            SuiteStatus::Passed => {
                println!("{}: {name} ({label}): PASS", self.criterion);
            }
            SuiteStatus::Failed => {
                let cex = outcome.counterexample.unwrap_or_default();
                println!("{}: {name} ({label}): FAIL {cex}", self.criterion);
                self.failures.push(format!("{name} ({label}): {cex}"));
            }
            SuiteStatus::Skipped(reason) => {
                println!("{}: {name} ({label}): FAIL — skipped: {reason}", self.criterion);
                self.failures
                    .push(format!("{name} ({label}): unexpectedly skipped: {reason}"));
            }
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: &str) {
        if ok {
            println!("{}: {name}: PASS", self.criterion);
        } else {
            println!("{}: {name}: FAIL {detail}", self.criterion);
            self.failures.push(format!("{name}: {detail}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS", self.criterion);
        } else {
            panic!(
                "{} failed sub-checks:\n  {}",
                self.criterion,
                self.failures.join("\n  ")
            );
        }
    }
}

fn both_spaces() -> [(&'static str, SpaceSpec); 2] {
    [
        ("self-dual id-2", self_dual_space()),
        ("rational 2x3", rational_space()),
    ]
}

#[test]
fn criterion_1_hopf_axioms() {
    let mut gate = Gate::new("criterion 1 (Hopf axioms)");
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 5,
        trials: 100,
        mutation: None,
    };
    for (label, spec) in both_spaces() {
        for name in [
            "coassociativity",
            "cocommutativity",
            "counit-law",
            "antipode-law",
            "coproduct-homomorphism",
            "joint-coassociativity",
            "joint-cocommutativity",
            "joint-counit-law",
            "joint-antipode-law",
            "joint-coproduct-homomorphism",
        ] {
            gate.suite(name, label, &spec, &cfg);
        }
    }
    gate.finish();
}

#[test]
fn criterion_2_symmetry() {
    let mut gate = Gate::new("criterion 2 (symmetry)");
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 5,
        trials: 100,
        mutation: None,
    };
    for (label, spec) in both_spaces() {
        for name in [
            "projection-laws",
            "ideal-annihilation",
            "wedge-sign-rule",
            "homogeneous-coproduct",
            "polarization",
            "projection-duality-compat",
        ] {
            gate.suite(name, label, &spec, &cfg);
        }
    }
    gate.finish();
}

#[test]
fn criterion_3_laplace_pairing() {
    let mut gate = Gate::new("criterion 3 (Laplace pairing)");
    let equivalence_cfg = CheckConfig {
        seed: 42,
        max_grade: 4,
        trials: 200,
        mutation: None,
    };
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 4,
        trials: 100,
        mutation: None,
    };
    for (label, spec) in both_spaces() {
        gate.suite("laplace-closed-vs-recursive", label, &spec, &equivalence_cfg);
        for name in [
            "laplace-splitting",
            "laplace-symmetry",
            "laplace-grade-orthogonality",
            "laplace-permutation-invariance",
            "laplace-factorization",
            "laplace-spot-values",
        ] {
            gate.suite(name, label, &spec, &cfg);
        }
    }
    gate.finish();
}

#[test]
fn criterion_4_square_product() {
    let mut gate = Gate::new("criterion 4 (square product)");
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 3,
        trials: 100,
        mutation: None,
    };
    for (label, spec) in both_spaces() {
        for name in [
            "square-associativity",
            "square-unit",
            "square-weak-commutativity",
            "square-recovery-identity",
        ] {
            gate.suite(name, label, &spec, &cfg);
        }
    }
    gate.finish();
}

#[test]
fn criterion_5_circle_products() {
    let mut gate = Gate::new("criterion 5 (circle products)");
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 2,
        trials: 100,
        mutation: None,
    };
    let spec = self_dual_space();
    for name in [
        "circle-from-square",
        "circle-sym-associativity",
        "circle-antisym-associativity",
        "circle-sym-commutativity",
        "circle-generator-formula",
    ] {
        gate.suite(name, "self-dual id-2", &spec, &cfg);
    }
    // the four-vector expansion is evaluated against the ASymm(u □ v)
    // oracle; the report states whether the printed all-positive form
    // matches, and is not itself a pass/fail law
    let outcome = run_suite("four-vector-expansion-report", &spec, &cfg).unwrap();
    match outcome.status {
        SuiteStatus::Passed => {
            println!(
                "criterion 5 (circle products): four-vector expansion report: {}",
                outcome.note.as_deref().unwrap_or("no note")
            );
        }
        _ => gate.check(
            "four-vector-expansion-report",
            false,
            "the report itself failed to evaluate",
        ),
    }
    gate.finish();
}

fn exact_inverse(matrix: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[row][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[row][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .fold(Scalar::zero(), |acc, t| acc + t)
        })
        .collect()
}

fn random_in_span(
    rng: &mut ChaCha8Rng,
    mode: PhiMode,
    dim: usize,
    max_grade: usize,
) -> Element {
    let mut raw = Element::zero(Side::U);
    for _ in 0..rng.gen_range(1..=3) {
        let grade = rng.gen_range(0..=max_grade);
        let word = Word::from_indices(
            (0..grade)
                .map(|_| rng.gen_range(1..=dim as u32))
                .collect(),
        );
        const COEFS: [(i64, i64); 6] = [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1)];
        let (n, d) = COEFS[rng.gen_range(0..COEFS.len())];
        raw.add_term(word, frac(n, d));
    }
    match mode {
        PhiMode::Tensor => raw,
        PhiMode::Symmetric => symmetrize(&raw).unwrap(),
        PhiMode::Antisymmetric => antisymmetrize(&raw).unwrap(),
    }
}

#[test]
fn criterion_6_phi_maps() {
    let mut gate = Gate::new("criterion 6 (phi maps)");
    let cfg = CheckConfig {
        seed: 42,
        max_grade: 2,
        trials: 100,
        mutation: None,
    };
    let spec = self_dual_space();
    for name in [
        "phi-tensor-homomorphism",
        "phi-sym-homomorphism",
        "phi-antisym-homomorphism",
    ] {
        gate.suite(name, "self-dual id-2", &spec, &cfg);
    }

    // triangularity with unit diagonal for dims ≤ 3 and max_grade ≤ 4,
    // all three modes; round-trip a = φ⁻¹(φ(a)) through exact inversion
    let max_grade = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for dim in 1..=3usize {
        let space = SpaceSpec::identity(dim).unwrap();
        for mode in [PhiMode::Tensor, PhiMode::Symmetric, PhiMode::Antisymmetric] {
            let matrix = phi_matrix(&space, mode, max_grade).unwrap();
            gate.check(
                &format!("phi-matrix triangular dim={dim} mode={mode:?} max-grade={max_grade}"),
                matrix.is_triangular(),
                "matrix is not triangular with unit diagonal",
            );
            let inverse = exact_inverse(matrix.entries());
            gate.check(
                &format!("phi-matrix invertible dim={dim} mode={mode:?}"),
                inverse.is_some(),
                "exact inversion failed",
            );
            let inverse = match inverse {
                Some(m) => m,
                None => continue,
            };
            let mut all_ok = true;
            let mut detail = String::new();
            for _ in 0..10 {
                let a = random_in_span(&mut rng, mode, dim, max_grade);
                let image = match mode {
                    PhiMode::Tensor => phi_tensor(&a, &space).unwrap(),
                    PhiMode::Symmetric => phi_sym(&a, &space).unwrap(),
                    PhiMode::Antisymmetric => phi_antisym(&a, &space).unwrap(),
                };
                let image_coords = matrix.coords(&image).unwrap();
                let recovered_coords = mat_vec(&inverse, &image_coords);
                let recovered = matrix
                    .from_coords(Side::U, &recovered_coords)
                    .unwrap();
                if recovered != a {
                    all_ok = false;
                    detail = format!("a = {}, recovered = {}", a.text(), recovered.text());
                    break;
                }
            }
            gate.check(
                &format!("phi round-trip dim={dim} mode={mode:?}"),
                all_ok,
                &detail,
            );
        }
    }
    gate.finish();
}

#[test]
fn criterion_7_cli() {
    use std::process::Command;
    let mut gate = Gate::new("criterion 7 (CLI)");
    let golden_dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let space = golden_dir.join("space_id2.txt");
    let bin = env!("CARGO_BIN_EXE_tenalg");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");

    // golden outputs for the fixed expression list covering every
    // operator and function
    let cases = std::fs::read_to_string(golden_dir.join("eval_cases.txt")).unwrap();
    let mut count = 0;
    for block in cases.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let (expr, expected) = block.split_once('\n').unwrap();
        let output = run(&["eval", "--space", space.to_str().unwrap(), expr]);
        let printed = String::from_utf8_lossy(&output.stdout);
        gate.check(
            &format!("golden output for '{expr}'"),
            output.status.success() && printed == format!("{}\n", expected.trim_end()),
            &format!("got '{}'", printed.trim_end()),
        );
        count += 1;
    }
    gate.check(
        "golden expression count is at least 10",
        count >= 10,
        &format!("only {count} cases"),
    );

    // parse-error and type-error exit codes
    let output = run(&["eval", "--space", space.to_str().unwrap(), "e1 @ @ e2"]);
    gate.check(
        "parse error exits 2",
        output.status.code() == Some(2),
        &format!("status {:?}", output.status.code()),
    );
    let output = run(&["eval", "--space", space.to_str().unwrap(), "e1 + f1"]);
    gate.check(
        "type error exits 2",
        output.status.code() == Some(2),
        &format!("status {:?}", output.status.code()),
    );

    // deterministic check report for seed 42
    let args = [
        "check",
        "--space",
        space.to_str().unwrap(),
        "--seed",
        "42",
        "--max-grade",
        "3",
        "--trials",
        "20",
        "--no-timing",
    ];
    let first = run(&args);
    let second = run(&args);
    gate.check(
        "check report for seed 42 is deterministic",
        first.stdout == second.stdout,
        "two runs differ",
    );
    let golden = std::fs::read(golden_dir.join("check_report.txt")).unwrap();
    gate.check(
        "check report for seed 42 matches the golden file",
        first.stdout == golden,
        "report drifted from the golden file",
    );
    gate.finish();
}

/// Spot check that the basis elements the matrices are built over are the
/// canonical ones: plain words, symmetrized sorted multisets, wedges of
/// strictly increasing index sets.
#[test]
fn phi_basis_elements_are_canonical() {
    let w = Word::from_indices(vec![1, 2]);
    assert_eq!(
        basis_element(PhiMode::Tensor, Side::U, &w).unwrap(),
        Element::from_word(Side::U, w.clone())
    );
    assert_eq!(
        basis_element(PhiMode::Symmetric, Side::U, &w).unwrap(),
        symmetrize(&Element::from_word(Side::U, w.clone())).unwrap()
    );
    assert_eq!(
        basis_element(PhiMode::Antisymmetric, Side::U, &w).unwrap(),
        antisymmetrize(&Element::from_word(Side::U, w)).unwrap()
    );
}
