//! Randomized invariant suites and the check-runner behind the `check`
//! subcommand.
//!
//! Every suite draws its own deterministic random stream from the master
//! seed, so a report is reproducible for a fixed seed regardless of which
//! suites run. A failing suite always carries a printable counterexample
//! together with the stream and trial that produced it.

use crate::expr;
use crate::eval::{evaluate, Value};
use crate::hopf::{
    antipode_sign, antipode_word, coproduct, joint_antipode, joint_coproduct, joint_counit,
    word_coproduct, TensorSquare,
};
use crate::laplace::{laplace_closed, laplace_recursive, sym_pairing};
use crate::products::{
    circle_antisym, circle_sym, phi_antisym, phi_matrix, phi_sym, phi_tensor, square, square_self,
    PhiMode,
};
use crate::scalar::{self, binomial, Scalar};
use crate::space::{Side, SpaceSpec};
use crate::symmetry::{
    antisymmetrize, polarization_expansion, power, symmetrize, wedge_product,
};
use crate::tensor::{duality, Element, JointElement, JointKey, Word};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

/// Deliberate defects that can be injected to prove the harness catches
/// them; used by the tests of the tester, never by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Shifts every Laplace pairing by one, destroying bilinearity and
    /// the splitting identity.
    CorruptPairing,
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    pub max_grade: usize,
    pub trials: usize,
    pub mutation: Option<Mutation>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 42,
            max_grade: 4,
            trials: 100,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteStatus {
    Passed,
    Failed,
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub status: SuiteStatus,
    pub counterexample: Option<String>,
    pub note: Option<String>,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub seed: u64,
    pub max_grade: usize,
    pub trials: usize,
    pub suites: Vec<SuiteOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.suites
            .iter()
            .all(|s| !matches!(s.status, SuiteStatus::Failed))
    }

    /// One line per suite plus continuation lines for counterexamples and
    /// notes. Timing is optional so reports can be compared byte-by-byte.
    pub fn text(&self, include_timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "check report: seed={} max-grade={} trials={}",
            self.seed, self.max_grade, self.trials
        );
        let mut passed = 0usize;
        let mut failed = 0usize;
        let mut skipped = 0usize;
        for suite in &self.suites {
            match &suite.status {
                SuiteStatus::Passed => {
                    passed += 1;
                    let _ = write!(out, "PASS {} trials={}", suite.name, suite.trials);
                }
                SuiteStatus::Failed => {
                    failed += 1;
                    let _ = write!(out, "FAIL {} trials={}", suite.name, suite.trials);
                }
                SuiteStatus::Skipped(reason) => {
                    skipped += 1;
                    let _ = write!(out, "SKIP {} — {}", suite.name, reason);
                }
            }
            if include_timing && !matches!(suite.status, SuiteStatus::Skipped(_)) {
                let _ = write!(out, " [{} ms]", suite.millis);
            }
            out.push('\n');
            if let Some(cex) = &suite.counterexample {
                let _ = writeln!(out, "  counterexample {cex}");
            }
            if let Some(note) = &suite.note {
                let _ = writeln!(out, "  note: {note}");
            }
        }
        let _ = write!(
            out,
            "summary: {} run, {} passed, {} failed, {} skipped",
            self.suites.len(),
            passed,
            failed,
            skipped
        );
        out
    }
}

enum Verdict {
    Pass,
    PassWithNote(String),
    Fail(String),
}

type SuiteFn = fn(&SpaceSpec, &CheckConfig, &mut ChaCha8Rng) -> crate::Result<Verdict>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Req {
    Any,
    SelfDual,
    SymmetricGram,
}

struct Suite {
    name: &'static str,
    req: Req,
    run: SuiteFn,
}

fn suites() -> Vec<Suite> {
    fn s(name: &'static str, req: Req, run: SuiteFn) -> Suite {
        Suite { name, req, run }
    }
    vec![
        s("scalar-field-axioms", Req::Any, scalar_field_axioms),
        s("gram-lookup-determinism", Req::Any, gram_lookup_determinism),
        s("concat-associativity", Req::Any, concat_associativity),
        s("concat-grade-additivity", Req::Any, concat_grade_additivity),
        s("duality-bilinear-orthogonal", Req::Any, duality_bilinear_orthogonal),
        s("joint-product-assoc-unital", Req::Any, joint_product_assoc_unital),
        s("coassociativity", Req::Any, coassociativity),
        s("cocommutativity", Req::Any, cocommutativity),
        s("counit-law", Req::Any, counit_law),
        s("antipode-law", Req::Any, antipode_law),
        s("coproduct-homomorphism", Req::Any, coproduct_homomorphism),
        s("joint-coassociativity", Req::Any, joint_coassociativity),
        s("joint-cocommutativity", Req::Any, joint_cocommutativity),
        s("joint-counit-law", Req::Any, joint_counit_law),
        s("joint-antipode-law", Req::Any, joint_antipode_law),
        s("joint-coproduct-homomorphism", Req::Any, joint_coproduct_homomorphism),
        s("projection-laws", Req::Any, projection_laws),
        s("ideal-annihilation", Req::Any, ideal_annihilation),
        s("wedge-sign-rule", Req::Any, wedge_sign_rule),
        s("homogeneous-coproduct", Req::Any, homogeneous_coproduct),
        s("polarization", Req::Any, polarization),
        s("projection-duality-compat", Req::Any, projection_duality_compat),
        s("projected-hopf-structure", Req::Any, projected_hopf_structure),
        s("laplace-closed-vs-recursive", Req::Any, laplace_closed_vs_recursive),
        s("laplace-splitting", Req::Any, laplace_splitting),
        s("laplace-symmetry", Req::Any, laplace_symmetry),
        s("laplace-grade-orthogonality", Req::Any, laplace_grade_orthogonality),
        s("laplace-permutation-invariance", Req::Any, laplace_permutation_invariance),
        s("laplace-factorization", Req::Any, laplace_factorization),
        s("laplace-left-splitting", Req::Any, laplace_left_splitting),
        s("laplace-spot-values", Req::Any, laplace_spot_values),
        s("square-associativity", Req::Any, square_associativity),
        s("square-unit", Req::Any, square_unit),
        s("square-weak-commutativity", Req::Any, square_weak_commutativity),
        s("square-recovery-identity", Req::Any, square_recovery_identity),
        s("circle-from-square", Req::SelfDual, circle_from_square),
        s("circle-sym-associativity", Req::SelfDual, circle_sym_associativity),
        s("circle-antisym-associativity", Req::SelfDual, circle_antisym_associativity),
        s("circle-sym-commutativity", Req::SymmetricGram, circle_sym_commutativity),
        s("circle-generator-formula", Req::SelfDual, circle_generator_formula),
        s("four-vector-expansion-report", Req::Any, four_vector_expansion_report),
        s("grade-one-pairing-observation", Req::Any, grade_one_pairing_observation),
        s("phi-tensor-homomorphism", Req::SelfDual, phi_tensor_homomorphism),
        s("phi-sym-homomorphism", Req::SymmetricGram, phi_sym_homomorphism),
        s("phi-antisym-homomorphism", Req::SelfDual, phi_antisym_homomorphism),
        s("phi-triangularity", Req::SelfDual, phi_triangularity),
        s("parse-print-roundtrip", Req::Any, parse_print_roundtrip),
        s("evaluate-determinism", Req::Any, evaluate_determinism),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

/// Runs one named suite with its seed stream derived exactly as
/// `run_checks` would derive it.
pub fn run_suite(name: &str, spec: &SpaceSpec, cfg: &CheckConfig) -> Option<SuiteOutcome> {
    let all = suites();
    let (index, suite) = all.iter().enumerate().find(|(_, s)| s.name == name)?;
    Some(execute(suite, index as u64, spec, cfg))
}

/// Runs every suite. With `trials == 0` the report is empty.
pub fn run_checks(spec: &SpaceSpec, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport {
        seed: cfg.seed,
        max_grade: cfg.max_grade,
        trials: cfg.trials,
        suites: Vec::new(),
    };
    if cfg.trials == 0 {
        return report;
    }
    for (index, suite) in suites().iter().enumerate() {
        report.suites.push(execute(suite, index as u64, spec, cfg));
    }
    report
}

fn execute(suite: &Suite, stream: u64, spec: &SpaceSpec, cfg: &CheckConfig) -> SuiteOutcome {
    let skip = match suite.req {
        Req::Any => None,
        Req::SelfDual if !spec.self_dual() => Some("requires a self-dual space".to_string()),
        Req::SymmetricGram if !spec.self_dual() => {
            Some("requires a self-dual space".to_string())
        }
        Req::SymmetricGram if !spec.gram_is_symmetric() => {
            Some("requires a symmetric Gram matrix".to_string())
        }
        _ => None,
    };
    if let Some(reason) = skip {
        return SuiteOutcome {
            name: suite.name,
            trials: 0,
            status: SuiteStatus::Skipped(reason),
            counterexample: None,
            note: None,
            millis: 0,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let start = Instant::now();
    let verdict = (suite.run)(spec, cfg, &mut rng);
    let millis = start.elapsed().as_millis();
    let (status, counterexample, note) = match verdict {
        Ok(Verdict::Pass) => (SuiteStatus::Passed, None, None),
        Ok(Verdict::PassWithNote(note)) => (SuiteStatus::Passed, None, Some(note)),
        Ok(Verdict::Fail(cex)) => (
            SuiteStatus::Failed,
            Some(format!("(seed {}, stream {}) {}", cfg.seed, stream, cex)),
            None,
        ),
        Err(e) => (
            SuiteStatus::Failed,
            Some(format!(
                "(seed {}, stream {}) internal error: {e}",
                cfg.seed, stream
            )),
            None,
        ),
    };
    SuiteOutcome {
        name: suite.name,
        trials: cfg.trials,
        status,
        counterexample,
        note,
        millis,
    }
}

// ---------------------------------------------------------------------
// random data
// ---------------------------------------------------------------------

fn rand_coef(rng: &mut ChaCha8Rng) -> Scalar {
    const CHOICES: [(i64, i64); 6] = [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1)];
    let (n, d) = CHOICES[rng.gen_range(0..CHOICES.len())];
    scalar::frac(n, d)
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    scalar::frac(rng.gen_range(-20..=20), rng.gen_range(1..=10))
}

fn rand_word(rng: &mut ChaCha8Rng, dim: usize, max_grade: usize) -> Word {
    let grade = rng.gen_range(0..=max_grade);
    Word::from_indices(
        (0..grade)
            .map(|_| rng.gen_range(1..=dim as u32))
            .collect(),
    )
}

fn rand_element(rng: &mut ChaCha8Rng, side: Side, dim: usize, max_grade: usize) -> Element {
    let terms = rng.gen_range(1..=4);
    let mut out = Element::zero(side);
    for _ in 0..terms {
        let w = rand_word(rng, dim, max_grade);
        let c = rand_coef(rng);
        out.add_term(w, c);
    }
    out
}

fn rand_vector(rng: &mut ChaCha8Rng, side: Side, dim: usize) -> Element {
    let mut out = Element::zero(side);
    for ix in 1..=dim as u32 {
        if rng.gen_range(0..2) == 0 || ix == 1 {
            out.add_term(Word::single(ix), rand_coef(rng));
        }
    }
    out
}

fn rand_joint(
    rng: &mut ChaCha8Rng,
    spec: &SpaceSpec,
    max_grade: usize,
    max_terms: usize,
) -> JointElement {
    let terms = rng.gen_range(1..=max_terms);
    let mut out = JointElement::zero();
    for _ in 0..terms {
        let u = rand_word(rng, spec.dim_u(), max_grade);
        let v = rand_word(rng, spec.dim_v(), max_grade);
        out.add_term((u, v), rand_coef(rng));
    }
    out
}

fn side_for(trial: usize) -> Side {
    if trial.is_multiple_of(2) {
        Side::U
    } else {
        Side::V
    }
}

fn single_joint(key: &JointKey) -> JointElement {
    let mut e = JointElement::zero();
    e.add_term(key.clone(), scalar::int(1));
    e
}

// ---------------------------------------------------------------------
// space and tensor suites
// ---------------------------------------------------------------------

fn scalar_field_axioms(
    _spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let a = rand_scalar(rng);
        let b = rand_scalar(rng);
        let c = rand_scalar(rng);
        let ok = (&a + &b) + &c == &a + (&b + &c)
            && &a + &b == &b + &a
            && (&a * &b) * &c == &a * (&b * &c)
            && &a * &b == &b * &a
            && &a * (&b + &c) == &a * &b + &a * &c
            && &a + Scalar::zero() == a
            && &a * Scalar::one() == a
            && &a + (-&a) == Scalar::zero()
            && (a.is_zero() || &a * a.recip() == Scalar::one());
        if !ok {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {a}, b = {b}, c = {c}"
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn gram_lookup_determinism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let i = rng.gen_range(1..=spec.dim_u() as u32);
        let j = rng.gen_range(1..=spec.dim_v() as u32);
        if spec.pair_vectors(i, j)? != spec.pair_vectors(i, j)? {
            return Ok(Verdict::Fail(format!("(trial {trial}): i = {i}, j = {j}")));
        }
    }
    Ok(Verdict::Pass)
}

fn concat_associativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let dim = spec.dim(side);
        let a = rand_element(rng, side, dim, g);
        let b = rand_element(rng, side, dim, g);
        let c = rand_element(rng, side, dim, g);
        let lhs = a.concat_product(&b)?.concat_product(&c)?;
        let rhs = a.concat_product(&b.concat_product(&c)?)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn concat_grade_additivity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let dim = spec.dim(side);
        let a = rand_element(rng, side, dim, g);
        let b = rand_element(rng, side, dim, g);
        let product = a.concat_product(&b)?;
        for grade in 0..=(a.max_grade() + b.max_grade()) {
            let mut sum = Element::zero(side);
            for g1 in 0..=grade {
                let part = a.grade_part(g1).concat_product(&b.grade_part(grade - g1))?;
                sum = sum.add(&part)?;
            }
            if sum != product.grade_part(grade) {
                return Ok(Verdict::Fail(format!(
                    "(trial {trial}): grade {grade}, a = {}, b = {}",
                    a.text(),
                    b.text()
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn duality_bilinear_orthogonal(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let a1 = rand_element(rng, Side::U, spec.dim_u(), g);
        let a2 = rand_element(rng, Side::U, spec.dim_u(), g);
        let b1 = rand_element(rng, Side::V, spec.dim_v(), g);
        let b2 = rand_element(rng, Side::V, spec.dim_v(), g);
        let lambda = rand_coef(rng);
        let left_linear = duality(&a1.add(&a2.scale(&lambda))?, &b1, spec)?
            == duality(&a1, &b1, spec)? + &lambda * duality(&a2, &b1, spec)?;
        let right_linear = duality(&a1, &b1.add(&b2.scale(&lambda))?, spec)?
            == duality(&a1, &b1, spec)? + &lambda * duality(&a1, &b2, spec)?;
        let n = rng.gen_range(0..=g);
        let mut m = rng.gen_range(0..=g);
        if m == n {
            m = n + 1;
        }
        let u = Element::from_word(Side::U, rand_word_exact(rng, spec.dim_u(), n));
        let v = Element::from_word(Side::V, rand_word_exact(rng, spec.dim_v(), m));
        let orthogonal = duality(&u, &v, spec)?.is_zero();
        if !(left_linear && right_linear && orthogonal) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a1 = {}, a2 = {}, b1 = {}, b2 = {}, λ = {lambda}",
                a1.text(),
                a2.text(),
                b1.text(),
                b2.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn rand_word_exact(rng: &mut ChaCha8Rng, dim: usize, grade: usize) -> Word {
    Word::from_indices(
        (0..grade)
            .map(|_| rng.gen_range(1..=dim as u32))
            .collect(),
    )
}

fn joint_product_assoc_unital(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(3);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 3);
        let b = rand_joint(rng, spec, g, 3);
        let c = rand_joint(rng, spec, g, 3);
        let assoc = a.joint_product(&b).joint_product(&c) == a.joint_product(&b.joint_product(&c));
        let unital = JointElement::unit().joint_product(&a) == a
            && a.joint_product(&JointElement::unit()) == a;
        if !(assoc && unital) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// Hopf suites, one-sided
// ---------------------------------------------------------------------

type TripleMap = BTreeMap<(Word, Word, Word), Scalar>;

fn add_triple(map: &mut TripleMap, key: (Word, Word, Word), c: Scalar) {
    *map.entry(key).or_insert_with(Scalar::zero) += c;
}

fn hopf_grade(cfg: &CheckConfig) -> usize {
    cfg.max_grade.min(5)
}

fn coassociativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), hopf_grade(cfg));
        let delta = coproduct(&a)?;
        let mut left: TripleMap = BTreeMap::new();
        let mut right: TripleMap = BTreeMap::new();
        for ((l, r), c) in delta.terms() {
            word_coproduct(l, |l1, l2| {
                add_triple(&mut left, (l1, l2, r.clone()), c.clone());
            })?;
            word_coproduct(r, |r1, r2| {
                add_triple(&mut right, (l.clone(), r1, r2), c.clone());
            })?;
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        if left != right {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn cocommutativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), hopf_grade(cfg));
        let delta = coproduct(&a)?;
        if delta.swapped() != delta {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn counit_law(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), hopf_grade(cfg));
        let delta = coproduct(&a)?;
        let mut left = Element::zero(side);
        let mut right = Element::zero(side);
        for ((l, r), c) in delta.terms() {
            if l.is_unit() {
                left.add_term(r.clone(), c.clone());
            }
            if r.is_unit() {
                right.add_term(l.clone(), c.clone());
            }
        }
        if left != a || right != a {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn antipode_law(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), hopf_grade(cfg));
        let delta = coproduct(&a)?;
        let mut left = Element::zero(side);
        let mut right = Element::zero(side);
        for ((l, r), c) in delta.terms() {
            left.add_term(
                antipode_word(l).concat(r),
                antipode_sign(l.grade()) * c,
            );
            right.add_term(
                l.concat(&antipode_word(r)),
                antipode_sign(r.grade()) * c,
            );
        }
        let expect = Element::scalar(side, crate::hopf::counit(&a));
        if left != expect || right != expect {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn coproduct_homomorphism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), g);
        let b = rand_element(rng, side, spec.dim(side), g);
        let lhs = coproduct(&a.concat_product(&b)?)?;
        let rhs = coproduct(&a)?.componentwise_product(&coproduct(&b)?)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// Hopf suites, joint
// ---------------------------------------------------------------------

type JointTripleMap = BTreeMap<(JointKey, JointKey, JointKey), Scalar>;

fn joint_grade_cap(cfg: &CheckConfig) -> usize {
    cfg.max_grade.min(3)
}

fn joint_coassociativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, joint_grade_cap(cfg), 2);
        let delta = joint_coproduct(&a)?;
        let mut left: JointTripleMap = BTreeMap::new();
        let mut right: JointTripleMap = BTreeMap::new();
        for ((l, r), c) in delta.terms() {
            for ((l1, l2), c2) in joint_coproduct(&single_joint(l))?.terms() {
                let e = left
                    .entry((l1.clone(), l2.clone(), r.clone()))
                    .or_insert_with(Scalar::zero);
                *e += c * c2;
            }
            for ((r1, r2), c2) in joint_coproduct(&single_joint(r))?.terms() {
                let e = right
                    .entry((l.clone(), r1.clone(), r2.clone()))
                    .or_insert_with(Scalar::zero);
                *e += c * c2;
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        if left != right {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn joint_cocommutativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, joint_grade_cap(cfg), 3);
        let delta = joint_coproduct(&a)?;
        if delta.swapped() != delta {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn joint_counit_law(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, joint_grade_cap(cfg), 3);
        let delta = joint_coproduct(&a)?;
        let mut left = JointElement::zero();
        let mut right = JointElement::zero();
        for ((l, r), c) in delta.terms() {
            if l.0.is_unit() && l.1.is_unit() {
                left.add_term(r.clone(), c.clone());
            }
            if r.0.is_unit() && r.1.is_unit() {
                right.add_term(l.clone(), c.clone());
            }
        }
        if left != a || right != a {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn joint_antipode_law(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, joint_grade_cap(cfg), 3);
        let delta = joint_coproduct(&a)?;
        let mut left = JointElement::zero();
        let mut right = JointElement::zero();
        for ((l, r), c) in delta.terms() {
            let sl = joint_antipode(&single_joint(l));
            for (k, cs) in sl.joint_product(&single_joint(r)).terms() {
                left.add_term(k.clone(), c * cs);
            }
            let sr = joint_antipode(&single_joint(r));
            for (k, cs) in single_joint(l).joint_product(&sr).terms() {
                right.add_term(k.clone(), c * cs);
            }
        }
        let expect = JointElement::scalar(joint_counit(&a));
        if left != expect || right != expect {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn joint_coproduct_homomorphism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 2);
        let b = rand_joint(rng, spec, g, 2);
        let lhs = joint_coproduct(&a.joint_product(&b))?;
        let rhs = joint_coproduct(&a)?.componentwise_product(&joint_coproduct(&b)?);
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// symmetry suites
// ---------------------------------------------------------------------

fn projection_laws(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(5);
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let a = rand_element(rng, side, spec.dim(side), g);
        let s = symmetrize(&a)?;
        let t = antisymmetrize(&a)?;
        let idempotent = symmetrize(&s)? == s && antisymmetrize(&t)? == t;
        let grade = rng.gen_range(2..=g.max(2));
        let w = Element::from_word(side, rand_word_exact(rng, spec.dim(side), grade));
        let cross = symmetrize(&antisymmetrize(&w)?)?.is_zero()
            && antisymmetrize(&symmetrize(&w)?)?.is_zero();
        if !(idempotent && cross) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, w = {}",
                a.text(),
                w.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn ideal_annihilation(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let dim = spec.dim(side);
        let x = Element::generator(side, rng.gen_range(1..=dim as u32));
        let y = Element::generator(side, rng.gen_range(1..=dim as u32));
        let xy = x.concat_product(&y)?;
        let yx = y.concat_product(&x)?;
        let sym_kills = symmetrize(&xy.sub(&yx)?)?.is_zero();
        let asym_kills = antisymmetrize(&xy.add(&yx)?)?.is_zero();
        if !(sym_kills && asym_kills) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): x = {}, y = {}",
                x.text(),
                y.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn wedge_sign_rule(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let dim = spec.dim(side);
        let p = rng.gen_range(0..=3usize);
        let q = rng.gen_range(0..=3usize);
        let u = antisymmetrize(&Element::from_word(side, rand_word_exact(rng, dim, p)))?;
        let v = antisymmetrize(&Element::from_word(side, rand_word_exact(rng, dim, q)))?;
        let uv = wedge_product(&u, &v)?;
        let vu = wedge_product(&v, &u)?;
        let expect = if (p * q) % 2 == 0 { vu.clone() } else { vu.neg() };
        if uv != expect {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): p = {p}, q = {q}, u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn homogeneous_coproduct(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let x = rand_vector(rng, side, spec.dim(side));
        let t = rng.gen_range(0..=cfg.max_grade.min(5));
        let lhs = coproduct(&power(&x, t)?)?;
        let mut rhs = TensorSquare::zero(side);
        for k in 0..=t {
            let c = BigRational::from_integer(binomial(t, k));
            let left = power(&x, t - k)?;
            let right = power(&x, k)?;
            for (wl, cl) in left.terms() {
                for (wr, cr) in right.terms() {
                    rhs.add_term((wl.clone(), wr.clone()), &c * cl * cr);
                }
            }
        }
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): x = {}, t = {t}",
                x.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn polarization(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let dim = spec.dim(side);
        let t = rng.gen_range(1..=cfg.max_grade.min(5));
        // alternate generator lists and general grade-one vectors
        let vectors: Vec<Element> = (0..t)
            .map(|_| {
                if trial.is_multiple_of(2) {
                    Element::generator(side, rng.gen_range(1..=dim as u32))
                } else {
                    rand_vector(rng, side, dim)
                }
            })
            .collect();
        let lhs = polarization_expansion(&vectors)?;
        let mut word = Element::unit(side);
        for x in &vectors {
            word = word.concat_product(x)?;
        }
        let rhs = symmetrize(&word)?;
        if lhs != rhs {
            let list = vectors
                .iter()
                .map(Element::text)
                .collect::<Vec<_>>()
                .join(", ");
            return Ok(Verdict::Fail(format!("(trial {trial}): vectors = [{list}]")));
        }
    }
    Ok(Verdict::Pass)
}

fn projection_duality_compat(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let a = rand_element(rng, Side::U, spec.dim_u(), g);
        let b = rand_element(rng, Side::V, spec.dim_v(), g);
        let sa = symmetrize(&a)?;
        let sb = symmetrize(&b)?;
        let sym_ok = duality(&sa, &b, spec)? == duality(&a, &sb, spec)?
            && duality(&sa, &b, spec)? == duality(&sa, &sb, spec)?;
        let aa = antisymmetrize(&a)?;
        let ab = antisymmetrize(&b)?;
        let asym_ok = duality(&aa, &b, spec)? == duality(&a, &ab, spec)?
            && duality(&aa, &b, spec)? == duality(&aa, &ab, spec)?;
        if !(sym_ok && asym_ok) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn project_square(
    ts: &TensorSquare,
    side: Side,
    project: fn(&Element) -> crate::Result<Element>,
) -> crate::Result<TensorSquare> {
    let mut out = TensorSquare::zero(side);
    for ((l, r), c) in ts.terms() {
        let pl = project(&Element::from_word(side, l.clone()))?;
        let pr = project(&Element::from_word(side, r.clone()))?;
        for (wl, cl) in pl.terms() {
            for (wr, cr) in pr.terms() {
                out.add_term((wl.clone(), wr.clone()), c * cl * cr);
            }
        }
    }
    Ok(out)
}

fn projected_hopf_structure(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let side = side_for(trial);
        let raw = rand_element(rng, side, spec.dim(side), g);
        for (project, name) in [
            (symmetrize as fn(&Element) -> crate::Result<Element>, "symm"),
            (antisymmetrize as fn(&Element) -> crate::Result<Element>, "asymm"),
        ] {
            let a = project(&raw)?;
            let delta = project_square(&coproduct(&a)?, side, project)?;
            // cocommutativity of the projected coproduct
            if delta.swapped() != delta {
                return Ok(Verdict::Fail(format!(
                    "(trial {trial}, {name}): a = {}",
                    a.text()
                )));
            }
            // coassociativity of the projected coproduct
            let mut left: TripleMap = BTreeMap::new();
            let mut right: TripleMap = BTreeMap::new();
            for ((l, r), c) in delta.terms() {
                let dl = project_square(&coproduct(&Element::from_word(side, l.clone()))?, side, project)?;
                for ((l1, l2), cc) in dl.terms() {
                    let e = left
                        .entry((l1.clone(), l2.clone(), r.clone()))
                        .or_insert_with(Scalar::zero);
                    *e += c * cc;
                }
                let dr = project_square(&coproduct(&Element::from_word(side, r.clone()))?, side, project)?;
                for ((r1, r2), cc) in dr.terms() {
                    let e = right
                        .entry((l.clone(), r1.clone(), r2.clone()))
                        .or_insert_with(Scalar::zero);
                    *e += c * cc;
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            if left != right {
                return Ok(Verdict::Fail(format!(
                    "(trial {trial}, {name}): a = {}",
                    a.text()
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// Laplace suites
// ---------------------------------------------------------------------

fn laplace_closed_vs_recursive(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 2);
        let b = rand_joint(rng, spec, g, 2);
        if laplace_closed(&a, &b, spec)? != laplace_recursive(&a, &b, spec)? {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn pairing_for(
    mutation: Option<Mutation>,
) -> impl Fn(&JointElement, &JointElement, &SpaceSpec) -> crate::Result<Scalar> {
    move |a, b, spec| {
        let base = laplace_closed(a, b, spec)?;
        match mutation {
            None => Ok(base),
            Some(Mutation::CorruptPairing) => Ok(base + Scalar::one()),
        }
    }
}

fn laplace_splitting(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(3);
    let pairing = pairing_for(cfg.mutation);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 2);
        let b = rand_joint(rng, spec, g, 2);
        let c = rand_joint(rng, spec, g, 2);
        let lhs = pairing(&a, &b.joint_product(&c), spec)?;
        let mut rhs = Scalar::zero();
        for ((a1, a2), ca) in joint_coproduct(&a)?.terms() {
            rhs += ca
                * pairing(&single_joint(a1), &b, spec)?
                * pairing(&single_joint(a2), &c, spec)?;
        }
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn laplace_symmetry(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 3);
        let b = rand_joint(rng, spec, g, 3);
        if laplace_closed(&a, &b, spec)? != laplace_closed(&b, &a, spec)? {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn laplace_grade_orthogonality(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(4);
    for trial in 0..cfg.trials {
        let n = rng.gen_range(0..=g);
        let mut m = rng.gen_range(0..=g);
        if m == n {
            m = n + 1;
        }
        let u = rand_word_exact(rng, spec.dim_u(), n);
        let v = rand_word_exact(rng, spec.dim_v(), m);
        let a = JointElement::from_words(u, Word::unit());
        let b = JointElement::from_words(Word::unit(), v);
        if !laplace_recursive(&a, &b, spec)?.is_zero() {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn shuffle_word(rng: &mut ChaCha8Rng, w: &Word) -> Word {
    let mut indices = w.indices().to_vec();
    for i in (1..indices.len()).rev() {
        let j = rng.gen_range(0..=i);
        indices.swap(i, j);
    }
    Word::from_indices(indices)
}

fn laplace_permutation_invariance(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(5);
    for trial in 0..cfg.trials {
        let n = rng.gen_range(0..=g);
        let u = rand_word_exact(rng, spec.dim_u(), n);
        let v = rand_word_exact(rng, spec.dim_v(), n);
        let base = laplace_closed(
            &JointElement::from_words(u.clone(), Word::unit()),
            &JointElement::from_words(Word::unit(), v.clone()),
            spec,
        )?;
        let pu = shuffle_word(rng, &u);
        let pv = shuffle_word(rng, &v);
        let left = laplace_closed(
            &JointElement::from_words(pu.clone(), Word::unit()),
            &JointElement::from_words(Word::unit(), v.clone()),
            spec,
        )?;
        let right = laplace_closed(
            &JointElement::from_words(u.clone(), Word::unit()),
            &JointElement::from_words(Word::unit(), pv.clone()),
            spec,
        )?;
        if left != base || right != base {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}, u' = {}, v' = {}",
                u.text(Side::U),
                v.text(Side::V),
                pu.text(Side::U),
                pv.text(Side::V)
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn laplace_factorization(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(3);
    for trial in 0..cfg.trials {
        let u1 = rand_word(rng, spec.dim_u(), g);
        let v1 = rand_word(rng, spec.dim_v(), g);
        let u2 = rand_word(rng, spec.dim_u(), g);
        let v2 = rand_word(rng, spec.dim_v(), g);
        let lhs = laplace_closed(
            &JointElement::from_words(u1.clone(), v1.clone()),
            &JointElement::from_words(u2.clone(), v2.clone()),
            spec,
        )?;
        let rhs = sym_pairing(&u1, &v2, spec)? * sym_pairing(&u2, &v1, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u1 = {}, v1 = {}, u2 = {}, v2 = {}",
                u1.text(Side::U),
                v1.text(Side::V),
                u2.text(Side::U),
                v2.text(Side::V)
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn laplace_left_splitting(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(3);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 2);
        let b = rand_joint(rng, spec, g, 2);
        let c = rand_joint(rng, spec, g, 2);
        let lhs = laplace_closed(&a.joint_product(&b), &c, spec)?;
        let mut rhs = Scalar::zero();
        for ((c1, c2), cc) in joint_coproduct(&c)?.terms() {
            rhs += cc
                * laplace_closed(&a, &single_joint(c1), spec)?
                * laplace_closed(&b, &single_joint(c2), spec)?;
        }
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn laplace_spot_values(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let unit = JointElement::unit();
    if laplace_closed(&unit, &unit, spec)? != Scalar::one()
        || laplace_recursive(&unit, &unit, spec)? != Scalar::one()
    {
        return Ok(Verdict::Fail("(𝟏|𝟏) ≠ 1".to_string()));
    }
    for trial in 0..cfg.trials {
        let x = rand_vector(rng, Side::U, spec.dim_u());
        let y = rand_vector(rng, Side::V, spec.dim_v());
        let a = JointElement::embed(&power(&x, 2)?);
        let b = JointElement::embed(&power(&y, 2)?);
        let xy = duality(&x, &y, spec)?;
        let expect = scalar::int(2) * &xy * &xy;
        if laplace_closed(&a, &b, spec)? != expect
            || laplace_recursive(&a, &b, spec)? != expect
        {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): x = {}, y = {}",
                x.text(),
                y.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// square product suites
// ---------------------------------------------------------------------

/// Per-side grades for three operands, bounded per element and in total
/// so products stay under the coproduct and permutation caps.
fn budgeted_joint(
    rng: &mut ChaCha8Rng,
    spec: &SpaceSpec,
    max_each: usize,
    budget_u: &mut usize,
    budget_v: &mut usize,
) -> JointElement {
    let gu = rng.gen_range(0..=max_each.min(*budget_u));
    let gv = rng.gen_range(0..=max_each.min(*budget_v));
    *budget_u -= gu;
    *budget_v -= gv;
    let mut out = JointElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let u = rand_word_exact(rng, spec.dim_u(), gu);
        let v = rand_word_exact(rng, spec.dim_v(), gv);
        out.add_term((u, v), rand_coef(rng));
    }
    out
}

fn square_associativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let mut budget_u = 5usize;
        let mut budget_v = 5usize;
        let a = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let b = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let c = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let lhs = square(&square(&a, &b, spec)?, &c, spec)?;
        let rhs = square(&a, &square(&b, &c, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn square_unit(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(3);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 3);
        let unit = JointElement::unit();
        if square(&unit, &a, spec)? != a || square(&a, &unit, spec)? != a {
            return Ok(Verdict::Fail(format!("(trial {trial}): a = {}", a.text())));
        }
    }
    Ok(Verdict::Pass)
}

fn square_weak_commutativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let mut budget_u = 5usize;
        let mut budget_v = 5usize;
        let a = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let b = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let c = budgeted_joint(rng, spec, 3, &mut budget_u, &mut budget_v);
        let lhs = laplace_closed(&square(&a, &b, spec)?, &c, spec)?;
        let rhs = laplace_closed(&a, &square(&b, &c, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}, c = {}",
                a.text(),
                b.text(),
                c.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn square_recovery_identity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let a = rand_joint(rng, spec, g, 2);
        let b = rand_joint(rng, spec, g, 2);
        let mut recovered = JointElement::zero();
        for ((a1, a2), ca) in joint_coproduct(&a)?.terms() {
            for ((b1, b2), cb) in joint_coproduct(&b)?.terms() {
                let p = laplace_closed(&joint_antipode(&single_joint(a1)), &single_joint(b1), spec)?;
                if !p.is_zero() {
                    let sq = square(&single_joint(a2), &single_joint(b2), spec)?;
                    for (k, cs) in sq.terms() {
                        recovered.add_term(k.clone(), ca * cb * &p * cs);
                    }
                }
            }
        }
        if recovered != a.joint_product(&b) {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// circle product suites
// ---------------------------------------------------------------------

fn rand_projected(
    rng: &mut ChaCha8Rng,
    spec: &SpaceSpec,
    max_grade: usize,
    symmetric: bool,
) -> crate::Result<Element> {
    let raw = rand_element(rng, Side::U, spec.dim_u(), max_grade);
    if symmetric {
        symmetrize(&raw)
    } else {
        antisymmetrize(&raw)
    }
}

/// The circle products per their Sweedler-sum definition, projecting each
/// term separately; the independent route the circle suite checks the
/// production path against.
fn circle_by_termwise_sweedler(
    u: &Element,
    v: &Element,
    spec: &SpaceSpec,
    signed: bool,
) -> crate::Result<Element> {
    let du = coproduct(u)?;
    let dv = coproduct(v)?;
    let mut out = Element::zero(u.side());
    for ((u1, u2), cu) in du.terms() {
        for ((v1, v2), cv) in dv.terms() {
            let p = sym_pairing(u1, v1, spec)?;
            if p.is_zero() {
                continue;
            }
            let word = Element::from_word(u.side(), u2.concat(v2));
            let projected = if signed {
                antisymmetrize(&word)?
            } else {
                symmetrize(&word)?
            };
            let scale = cu * cv * p;
            for (w, c) in projected.terms() {
                out.add_term(w.clone(), c * &scale);
            }
        }
    }
    Ok(out)
}

fn circle_from_square(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, true)?;
        let v = rand_projected(rng, spec, g, true)?;
        let sweedler = circle_by_termwise_sweedler(&u, &v, spec, false)?;
        let produced = circle_sym(&u, &v, spec)?;
        if produced != sweedler || produced != symmetrize(&square_self(&u, &v, spec)?)? {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}, symm): u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
        let u = rand_projected(rng, spec, g, false)?;
        let v = rand_projected(rng, spec, g, false)?;
        let sweedler = circle_by_termwise_sweedler(&u, &v, spec, true)?;
        let produced = circle_antisym(&u, &v, spec)?;
        if produced != sweedler || produced != antisymmetrize(&square_self(&u, &v, spec)?)? {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}, asymm): u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn circle_sym_associativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, true)?;
        let v = rand_projected(rng, spec, g, true)?;
        let w = rand_projected(rng, spec, g, true)?;
        let lhs = circle_sym(&circle_sym(&u, &v, spec)?, &w, spec)?;
        let rhs = circle_sym(&u, &circle_sym(&v, &w, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}, w = {}",
                u.text(),
                v.text(),
                w.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn circle_antisym_associativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, false)?;
        let v = rand_projected(rng, spec, g, false)?;
        let w = rand_projected(rng, spec, g, false)?;
        let lhs = circle_antisym(&circle_antisym(&u, &v, spec)?, &w, spec)?;
        let rhs = circle_antisym(&u, &circle_antisym(&v, &w, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}, w = {}",
                u.text(),
                v.text(),
                w.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn circle_sym_commutativity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, true)?;
        let v = rand_projected(rng, spec, g, true)?;
        if circle_sym(&u, &v, spec)? != circle_sym(&v, &u, spec)? {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn circle_generator_formula(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let i = rng.gen_range(1..=spec.dim_u() as u32);
        let j = rng.gen_range(1..=spec.dim_u() as u32);
        let x = Element::generator(Side::U, i);
        let y = Element::generator(Side::U, j);
        let lhs = circle_antisym(&x, &y, spec)?;
        let rhs = wedge_product(&x, &y)?
            .add(&Element::scalar(Side::U, spec.pair_vectors(i, j)?))?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!("(trial {trial}): x = e{i}, y = e{j}")));
        }
    }
    Ok(Verdict::Pass)
}

/// Evaluates the four-vector product x∧y ∘ z∧w against the definitional
/// oracle ASymm((x∧y) □ (z∧w)) on an internal four-dimensional space with
/// all cross pairings nonzero, and reports whether the all-positive
/// pairing-term expansion
///   (x|z) y∧w + (x|w) y∧z + (y|z) x∧w + (y|w) x∧z + x∧y∧z∧w
/// reproduces it.
fn four_vector_expansion_report(
    _spec: &SpaceSpec,
    _cfg: &CheckConfig,
    _rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let dim = 4usize;
    let gram: Vec<Vec<Scalar>> = (1..=dim)
        .map(|i| (1..=dim).map(|j| scalar::frac(1, (i + j - 1) as i64)).collect())
        .collect();
    let spec = SpaceSpec::new(dim, dim, gram, true)?;
    let gen = |i: u32| Element::generator(Side::U, i);
    let u = wedge_product(&gen(1), &gen(2))?;
    let v = wedge_product(&gen(3), &gen(4))?;
    let oracle = circle_antisym(&u, &v, &spec)?;
    let mut printed = antisymmetrize(&Element::from_word(
        Side::U,
        Word::from_indices(vec![1, 2, 3, 4]),
    ))?;
    for (i, j, a, b) in [(1u32, 3u32, 2u32, 4u32), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3)] {
        let p = spec.pair_vectors(i, j)?;
        printed = printed.add(&wedge_product(&gen(a), &gen(b))?.scale(&p))?;
    }
    let top = antisymmetrize(&Element::from_word(
        Side::U,
        Word::from_indices(vec![1, 2, 3, 4]),
    ))?;
    let matches = oracle == printed;
    let note = if matches {
        "the all-positive pairing-term expansion matches the ASymm(u □ v) oracle".to_string()
    } else if oracle == top {
        "the all-positive pairing-term expansion does NOT match the ASymm(u □ v) oracle; \
         no sign correction can repair it, because the oracle equals the bare top-grade \
         wedge x∧y∧z∧w — embedded wedges are primitive for the tensor coproduct, so every \
         pairing term cancels"
            .to_string()
    } else {
        format!(
            "the all-positive pairing-term expansion does NOT match the ASymm(u □ v) oracle; \
             oracle = {}",
            oracle.text()
        )
    };
    Ok(Verdict::PassWithNote(note))
}

fn grade_one_pairing_observation(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let grade = rng.gen_range(2..=3usize);
        let a = antisymmetrize(&Element::from_word(
            Side::U,
            rand_word_exact(rng, spec.dim_u(), grade),
        ))?;
        let b = rand_element(rng, Side::V, spec.dim_v(), grade);
        let value = duality(&symmetrize(&a)?, &symmetrize(&b)?, spec)?;
        if !value.is_zero() {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// phi suites
// ---------------------------------------------------------------------

fn phi_tensor_homomorphism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let a = rand_element(rng, Side::U, spec.dim_u(), g);
        let b = rand_element(rng, Side::U, spec.dim_u(), g);
        let lhs = phi_tensor(&a.concat_product(&b)?, spec)?;
        let rhs = square_self(&phi_tensor(&a, spec)?, &phi_tensor(&b, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): a = {}, b = {}",
                a.text(),
                b.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn phi_sym_homomorphism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, true)?;
        let v = rand_projected(rng, spec, g, true)?;
        let lhs = phi_sym(&symmetrize(&u.concat_product(&v)?)?, spec)?;
        let rhs = circle_sym(&phi_sym(&u, spec)?, &phi_sym(&v, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn phi_antisym_homomorphism(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let g = cfg.max_grade.min(2);
    for trial in 0..cfg.trials {
        let u = rand_projected(rng, spec, g, false)?;
        let v = rand_projected(rng, spec, g, false)?;
        let lhs = phi_antisym(&wedge_product(&u, &v)?, spec)?;
        let rhs = circle_antisym(&phi_antisym(&u, spec)?, &phi_antisym(&v, spec)?, spec)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(format!(
                "(trial {trial}): u = {}, v = {}",
                u.text(),
                v.text()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn phi_triangularity(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    _rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let max_grade = cfg.max_grade.min(4);
    for mode in [PhiMode::Tensor, PhiMode::Symmetric, PhiMode::Antisymmetric] {
        let matrix = phi_matrix(spec, mode, max_grade)?;
        if !matrix.is_triangular() {
            return Ok(Verdict::Fail(format!(
                "mode {mode:?}, max grade {max_grade}: matrix is not triangular with unit diagonal"
            )));
        }
    }
    Ok(Verdict::Pass)
}

// ---------------------------------------------------------------------
// CLI suites
// ---------------------------------------------------------------------

fn rand_value(rng: &mut ChaCha8Rng, spec: &SpaceSpec) -> Value {
    match rng.gen_range(0..4) {
        0 => Value::Scalar(rand_scalar(rng)),
        1 => Value::Element(rand_element(rng, Side::U, spec.dim_u(), 3)),
        2 => Value::Element(rand_element(rng, Side::V, spec.dim_v(), 3)),
        _ => Value::Joint(rand_joint(rng, spec, 2, 3)),
    }
}

fn parse_print_roundtrip(
    spec: &SpaceSpec,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    for trial in 0..cfg.trials {
        let value = rand_value(rng, spec);
        let printed = value.text();
        let reparsed = expr::parse(&printed);
        let ast = match reparsed {
            Ok(ast) => ast,
            Err(e) => {
                return Ok(Verdict::Fail(format!(
                    "(trial {trial}): '{printed}' fails to reparse: {e}"
                )))
            }
        };
        match evaluate(&ast, spec) {
            Ok(back) => {
                if back.text() != printed {
                    return Ok(Verdict::Fail(format!(
                        "(trial {trial}): '{printed}' reprints as '{}'",
                        back.text()
                    )));
                }
            }
            Err(e) => {
                return Ok(Verdict::Fail(format!(
                    "(trial {trial}): '{printed}' fails to evaluate: {e}"
                )))
            }
        }
    }
    Ok(Verdict::Pass)
}

fn evaluate_determinism(
    spec: &SpaceSpec,
    _cfg: &CheckConfig,
    _rng: &mut ChaCha8Rng,
) -> crate::Result<Verdict> {
    let self_dual_only = ["e1 o_s e1", "phi_t(e1*e1)"];
    let mut texts = vec![
        "e1 + e1 - 2*e1",
        "symm(e1*e2) + asymm(e1*e2)",
        "delta(e1*e2)",
        "lap(e1;f1, e1;f1) - lap_slow(e1;f1, e1;f1)",
        "S(e1*e2*e1)",
        "pow(e1+e2, 3)",
        "dual(e1*e2, f1*f2)",
    ];
    if spec.self_dual() {
        texts.extend_from_slice(&self_dual_only);
    }
    for text in texts {
        let ast = expr::parse(text).map_err(|e| crate::Error::SpaceFile(e.to_string()));
        let ast = match ast {
            Ok(a) => a,
            Err(_) => return Ok(Verdict::Fail(format!("'{text}' fails to parse"))),
        };
        let first = evaluate(&ast, spec);
        let second = evaluate(&ast, spec);
        match (first, second) {
            (Ok(a), Ok(b)) => {
                if a.text() != b.text() {
                    return Ok(Verdict::Fail(format!("'{text}' is not deterministic")));
                }
            }
            (Err(_), Err(_)) => {}
            _ => return Ok(Verdict::Fail(format!("'{text}' is not deterministic"))),
        }
    }
    Ok(Verdict::Pass)
}
