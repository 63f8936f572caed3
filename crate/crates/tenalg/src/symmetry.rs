//! Symmetrization and antisymmetrization projections and the products of
//! the quotient algebras they image. Quotient elements are represented by
//! their projection images inside the tensor algebra; no separate
//! quotient types exist.

use crate::permutations::for_each_permutation;
use crate::scalar;
use crate::tensor::{Element, Word};
use crate::{Error, Result, PERMUTATION_GRADE_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;

fn check_permutation_cap(grade: usize) -> Result<()> {
    if grade > PERMUTATION_GRADE_CAP {
        return Err(Error::PermutationCap {
            grade,
            cap: PERMUTATION_GRADE_CAP,
        });
    }
    Ok(())
}

fn project(a: &Element, signed: bool) -> Result<Element> {
    let mut out = Element::zero(a.side());
    for (w, c) in a.terms() {
        let n = w.grade();
        check_permutation_cap(n)?;
        let weight = c / BigRational::from_integer(scalar::factorial(n));
        let indices = w.indices();
        for_each_permutation(n, |perm, sign| {
            let permuted: Vec<u32> = perm.iter().map(|&p| indices[p]).collect();
            let coef = if signed && sign < 0 {
                -weight.clone()
            } else {
                weight.clone()
            };
            out.add_term(Word::from_indices(permuted), coef);
        });
    }
    Ok(out)
}

/// Symm(a): the average over all permutations of each word's letters.
/// Idempotent projection onto the symmetric algebra.
pub fn symmetrize(a: &Element) -> Result<Element> {
    project(a, false)
}

/// ASymm(a): the signed permutation average. Idempotent projection onto
/// the antisymmetric algebra.
pub fn antisymmetrize(a: &Element) -> Result<Element> {
    project(a, true)
}

pub fn is_symmetric(a: &Element) -> Result<bool> {
    Ok(symmetrize(a)? == *a)
}

pub fn is_antisymmetric(a: &Element) -> Result<bool> {
    Ok(antisymmetrize(a)? == *a)
}

/// Product of the symmetric algebra: u·v = Symm(u ⊗ v).
pub fn sym_product(u: &Element, v: &Element) -> Result<Element> {
    symmetrize(&u.concat_product(v)?)
}

/// Product of the antisymmetric algebra: u ∧ v = ASymm(u ⊗ v).
pub fn wedge_product(u: &Element, v: &Element) -> Result<Element> {
    antisymmetrize(&u.concat_product(v)?)
}

fn check_grade_one(x: &Element) -> Result<()> {
    if x.max_grade() > 1 {
        return Err(Error::NotGradeOne);
    }
    Ok(())
}

/// t-fold concatenation power of a grade ≤ 1 element. For a single
/// vector the result is automatically symmetric.
pub fn power(x: &Element, t: usize) -> Result<Element> {
    check_grade_one(x)?;
    if t > PERMUTATION_GRADE_CAP.max(crate::COPRODUCT_GRADE_CAP) {
        return Err(Error::CoproductCap {
            grade: t,
            cap: crate::COPRODUCT_GRADE_CAP,
        });
    }
    let mut acc = Element::unit(x.side());
    for _ in 0..t {
        acc = acc.concat_product(x)?;
    }
    Ok(acc)
}

/// The 2^t-term right-hand side of the polarization identity:
/// (1/2^t t!) Σ_{ε_i=±1} ε_1⋯ε_t (ε_1 x_1 + ⋯ + ε_t x_t)^t,
/// which equals Symm(x_1 ⊗ ⋯ ⊗ x_t). Repeated vectors are allowed.
pub fn polarization_expansion(vectors: &[Element]) -> Result<Element> {
    let t = vectors.len();
    if t == 0 {
        return Err(Error::EmptyPolarization);
    }
    check_permutation_cap(t)?;
    let side = vectors[0].side();
    for x in vectors {
        if x.side() != side {
            return Err(Error::SideMismatch {
                expected: side,
                found: x.side(),
            });
        }
        check_grade_one(x)?;
    }
    let mut acc = Element::zero(side);
    for mask in 0..(1usize << t) {
        // bit k set means ε_k = −1
        let mut combo = Element::zero(side);
        for (k, x) in vectors.iter().enumerate() {
            let signed = if mask & (1 << k) != 0 { x.neg() } else { x.clone() };
            combo = combo.add(&signed)?;
        }
        let prefactor = if mask.count_ones() % 2 == 0 {
            scalar::int(1)
        } else {
            scalar::int(-1)
        };
        acc = acc.add(&power(&combo, t)?.scale(&prefactor))?;
    }
    let norm = BigRational::from_integer(BigInt::from(2).pow(t as u32) * scalar::factorial(t));
    Ok(acc.scale(&norm.recip()))
}
