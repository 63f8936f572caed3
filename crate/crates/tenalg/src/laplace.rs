//! The Laplace pairing on the joint tensor algebra.
//!
//! Two independent evaluators are provided. [`laplace_recursive`] peels
//! one generator at a time off the second argument and applies the
//! splitting identity (a | b·g) = Σ (a₍₁₎ | b)(a₍₂₎ | g), bottoming out at
//! the generator-level initial conditions. [`laplace_closed`] evaluates
//! the closed form: per pair of elementary terms, the product of the two
//! cross-side symmetrized word pairings. Their equality on random input
//! is the central theorem-test of the module.

use crate::hopf::joint_coproduct;
use crate::permutations::for_each_permutation;
use crate::scalar::Scalar;
use crate::space::SpaceSpec;
use crate::tensor::{joint_grade, JointElement, JointKey, Word};
use crate::{Error, Result, PERMUTATION_GRADE_CAP};
use num_traits::{One, Zero};

/// Symmetrized duality of a U-word against a V-word: the permanent of
/// the generator pairing matrix, Σ_p Π_k ⟨u_k, v_{p(k)}⟩. Equals
/// grade!·⟨Symm(u), Symm(v)⟩, and is the Laplace pairing of the
/// one-sided embeddings (u;𝟏) and (𝟏;v). Zero across grades.
pub fn sym_pairing(u: &Word, v: &Word, spec: &SpaceSpec) -> Result<Scalar> {
    if u.grade() != v.grade() {
        return Ok(Scalar::zero());
    }
    let n = u.grade();
    if n > PERMUTATION_GRADE_CAP {
        return Err(Error::PermutationCap {
            grade: n,
            cap: PERMUTATION_GRADE_CAP,
        });
    }
    // materialize the pairing matrix once, then expand over permutations
    let mut matrix = Vec::with_capacity(n);
    for &i in u.indices() {
        let mut row = Vec::with_capacity(n);
        for &j in v.indices() {
            row.push(spec.pair_vectors(i, j)?);
        }
        matrix.push(row);
    }
    let mut acc = Scalar::zero();
    for_each_permutation(n, |perm, _| {
        let mut prod = Scalar::one();
        for (k, &pk) in perm.iter().enumerate() {
            prod *= &matrix[k][pk];
            if prod.is_zero() {
                break;
            }
        }
        acc += prod;
    });
    Ok(acc)
}

/// Closed-form Laplace pairing of two elementary joint terms: the U-word
/// of each argument pairs against the V-word of the other; grade
/// mismatches vanish.
pub(crate) fn joint_word_pairing(a: &JointKey, b: &JointKey, spec: &SpaceSpec) -> Result<Scalar> {
    if a.0.grade() != b.1.grade() || b.0.grade() != a.1.grade() {
        return Ok(Scalar::zero());
    }
    let p1 = sym_pairing(&a.0, &b.1, spec)?;
    if p1.is_zero() {
        return Ok(Scalar::zero());
    }
    let p2 = sym_pairing(&b.0, &a.1, spec)?;
    Ok(p1 * p2)
}

/// Closed-form Laplace pairing, extended bilinearly over terms.
pub fn laplace_closed(a: &JointElement, b: &JointElement, spec: &SpaceSpec) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let p = joint_word_pairing(ka, kb, spec)?;
            if !p.is_zero() {
                acc += ca * cb * p;
            }
        }
    }
    Ok(acc)
}

/// Pairing of an elementary joint term against a single joint generator
/// or the unit: the initial conditions of the recursion. Same-side
/// generator pairs, generator-versus-unit pairs, and any term whose total
/// grade differs from the right-hand side's vanish.
fn base_pair(w: &JointKey, g: &JointKey, spec: &SpaceSpec) -> Result<Scalar> {
    match joint_grade(g) {
        0 => Ok(if joint_grade(w) == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }),
        1 => {
            if joint_grade(w) != 1 {
                return Ok(Scalar::zero());
            }
            match (
                w.0.indices().first(),
                w.1.indices().first(),
                g.0.indices().first(),
                g.1.indices().first(),
            ) {
                // (x ⊗ 1 | 1 ⊗ y) = ⟨x, y⟩, either way around
                (Some(&x), None, None, Some(&y)) => spec.pair_vectors(x, y),
                (None, Some(&y), Some(&x), None) => spec.pair_vectors(x, y),
                // same-side generator pairs vanish
                _ => Ok(Scalar::zero()),
            }
        }
        _ => unreachable!("base_pair called with a non-generator right-hand side"),
    }
}

fn recurse(a: &JointElement, b: &JointKey, spec: &SpaceSpec) -> Result<Scalar> {
    let total = joint_grade(b);
    if total == 0 {
        // (a | 𝟏): only the unit coefficient of a survives
        return Ok(a.unit_coefficient());
    }
    if total == 1 {
        let mut acc = Scalar::zero();
        for (w, c) in a.terms() {
            let p = base_pair(w, b, spec)?;
            if !p.is_zero() {
                acc += c * p;
            }
        }
        return Ok(acc);
    }
    // peel one generator off the right: b = b'·g
    let (bp, g) = peel(b);
    // (a | b'·g) = Σ (a₍₁₎ | b')(a₍₂₎ | g); fold the second factor into
    // the coefficients so the recursion descends on a single element
    let delta = joint_coproduct(a)?;
    let mut reduced = JointElement::zero();
    for ((left, right), c) in delta.terms() {
        let p = base_pair(right, &g, spec)?;
        if !p.is_zero() {
            reduced.add_term(left.clone(), c * p);
        }
    }
    if reduced.is_zero() {
        return Ok(Scalar::zero());
    }
    recurse(&reduced, &bp, spec)
}

fn peel(b: &JointKey) -> (JointKey, JointKey) {
    if b.1.grade() > 0 {
        let mut v = b.1.indices().to_vec();
        let last = v.pop().expect("nonempty");
        (
            (b.0.clone(), Word::from_indices(v)),
            (Word::unit(), Word::single(last)),
        )
    } else {
        let mut u = b.0.indices().to_vec();
        let last = u.pop().expect("nonempty");
        (
            (Word::from_indices(u), Word::unit()),
            (Word::single(last), Word::unit()),
        )
    }
}

/// Laplace pairing evaluated purely from the splitting identity and the
/// initial conditions; the oracle against which the closed form is
/// checked.
pub fn laplace_recursive(a: &JointElement, b: &JointElement, spec: &SpaceSpec) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (kb, cb) in b.terms() {
        let p = recurse(a, kb, spec)?;
        if !p.is_zero() {
            acc += cb * p;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::space::Side;
    use crate::symmetry::{power, symmetrize};
    use crate::tensor::{duality, Element};
    use num_rational::BigRational;

    fn identity2() -> SpaceSpec {
        SpaceSpec::identity(2).unwrap()
    }

    fn rational_gram() -> SpaceSpec {
        SpaceSpec::new(
            2,
            2,
            vec![vec![int(1), frac(1, 2)], vec![int(0), int(3)]],
            false,
        )
        .unwrap()
    }

    fn joint(u: Vec<u32>, v: Vec<u32>) -> JointElement {
        JointElement::from_words(Word::from_indices(u), Word::from_indices(v))
    }

    #[test]
    fn generator_against_generator() {
        let spec = identity2();
        let a = joint(vec![1], vec![]);
        let b = joint(vec![], vec![1]);
        assert_eq!(laplace_recursive(&a, &b, &spec).unwrap(), int(1));
        assert_eq!(laplace_closed(&a, &b, &spec).unwrap(), int(1));
        // gram[1][2] shows up for the rational gram
        let spec = rational_gram();
        let b2 = joint(vec![], vec![2]);
        assert_eq!(laplace_recursive(&a, &b2, &spec).unwrap(), frac(1, 2));
    }

    #[test]
    fn unequal_grades_vanish() {
        let spec = identity2();
        let a = joint(vec![1, 2], vec![]);
        let b = joint(vec![], vec![1]);
        assert_eq!(laplace_recursive(&a, &b, &spec).unwrap(), int(0));
        assert_eq!(laplace_closed(&a, &b, &spec).unwrap(), int(0));
    }

    #[test]
    fn two_by_two_permanent() {
        // ((e1e2;𝟏) | (𝟏;f1f2)) = G11·G22 + G12·G21
        let spec = rational_gram();
        let a = joint(vec![1, 2], vec![]);
        let b = joint(vec![], vec![1, 2]);
        let expect = int(1) * int(3) + frac(1, 2) * int(0);
        assert_eq!(laplace_recursive(&a, &b, &spec).unwrap(), expect);
        assert_eq!(laplace_closed(&a, &b, &spec).unwrap(), expect);
    }

    #[test]
    fn unit_pairing_and_units_against_words() {
        let spec = identity2();
        let unit = JointElement::unit();
        assert_eq!(laplace_closed(&unit, &unit, &spec).unwrap(), int(1));
        assert_eq!(laplace_recursive(&unit, &unit, &spec).unwrap(), int(1));
        let w = joint(vec![1], vec![2]);
        assert_eq!(laplace_recursive(&w, &unit, &spec).unwrap(), int(0));
        assert_eq!(laplace_recursive(&unit, &w, &spec).unwrap(), int(0));
    }

    #[test]
    fn squared_generators() {
        // ((e1²;𝟏) | (𝟏;f1²)) = 2!·⟨e1,f1⟩² = 2 under the identity gram
        let spec = identity2();
        let a = joint(vec![1, 1], vec![]);
        let b = joint(vec![], vec![1, 1]);
        assert_eq!(laplace_closed(&a, &b, &spec).unwrap(), int(2));
        assert_eq!(laplace_recursive(&a, &b, &spec).unwrap(), int(2));
    }

    #[test]
    fn mixed_joint_terms_cross_pair() {
        // ((e1;f2) | (e2;f1)) = ⟨e1,f1⟩⟨e2,f2⟩ = 1 under the identity gram
        let spec = identity2();
        let a = joint(vec![1], vec![2]);
        let b = joint(vec![2], vec![1]);
        assert_eq!(laplace_closed(&a, &b, &spec).unwrap(), int(1));
        assert_eq!(laplace_recursive(&a, &b, &spec).unwrap(), int(1));
    }

    #[test]
    fn sym_pairing_matches_factorial_symm_duality() {
        let spec = rational_gram();
        for (u, v) in [
            (vec![1u32, 2], vec![1u32, 2]),
            (vec![1, 2], vec![2, 1]),
            (vec![2, 2, 1], vec![1, 2, 2]),
        ] {
            let uw = Word::from_indices(u.clone());
            let vw = Word::from_indices(v.clone());
            let fast = sym_pairing(&uw, &vw, &spec).unwrap();
            let su = symmetrize(&Element::from_word(Side::U, uw)).unwrap();
            let sv = symmetrize(&Element::from_word(Side::V, vw)).unwrap();
            let slow = BigRational::from_integer(crate::scalar::factorial(u.len()))
                * duality(&su, &sv, &spec).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn pairing_is_symmetric_on_samples() {
        let spec = rational_gram();
        let a = joint(vec![1, 2], vec![1]).add(&joint(vec![], vec![2]).scale(&frac(1, 2)));
        let b = joint(vec![2], vec![2, 1]).add(&JointElement::unit().scale(&int(-3)));
        assert_eq!(
            laplace_closed(&a, &b, &spec).unwrap(),
            laplace_closed(&b, &a, &spec).unwrap()
        );
        assert_eq!(
            laplace_recursive(&a, &b, &spec).unwrap(),
            laplace_recursive(&b, &a, &spec).unwrap()
        );
    }

    #[test]
    fn power_pairing_value() {
        // ((x²;𝟏) | (𝟏;y²)) = 2⟨x,y⟩² for combination vectors
        let spec = rational_gram();
        let x = Element::generator(Side::U, 1)
            .add(&Element::generator(Side::U, 2).scale(&int(2)))
            .unwrap();
        let y = Element::generator(Side::V, 1)
            .add(&Element::generator(Side::V, 2).scale(&frac(-1, 2)))
            .unwrap();
        let a = JointElement::embed(&power(&x, 2).unwrap());
        let b = JointElement::embed(&power(&y, 2).unwrap());
        let xy = duality(&x, &y, &spec).unwrap();
        assert_eq!(
            laplace_closed(&a, &b, &spec).unwrap(),
            int(2) * &xy * &xy
        );
        assert_eq!(
            laplace_recursive(&a, &b, &spec).unwrap(),
            int(2) * &xy * &xy
        );
    }
}
