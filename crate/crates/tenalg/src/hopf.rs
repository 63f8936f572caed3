//! Hopf structure of the one-sided and joint tensor algebras: coproduct,
//! antipode, counit. Sweedler components are materialized as sparse
//! two-leg maps so downstream formulas (pairing, square product) can
//! consume concrete legs.

use crate::scalar::{self, Scalar};
use crate::space::Side;
use crate::tensor::{joint_key_text, render_terms, Element, JointElement, JointKey, Word};
use crate::{Error, Result, COPRODUCT_GRADE_CAP};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sparse two-leg map Σ c · (left ⊗ right) over one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSquare {
    side: Side,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorSquare {
    pub fn zero(side: Side) -> Self {
        TensorSquare {
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: (Word, Word), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// a ⊗ b as a two-leg map.
    pub fn outer(a: &Element, b: &Element) -> Result<TensorSquare> {
        if a.side() != b.side() {
            return Err(Error::SideMismatch {
                expected: a.side(),
                found: b.side(),
            });
        }
        let mut out = TensorSquare::zero(a.side());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_term((wa.clone(), wb.clone()), ca * cb);
            }
        }
        Ok(out)
    }

    /// Componentwise product: (a⊗b)·(c⊗d) = ac ⊗ bd, extended bilinearly.
    pub fn componentwise_product(&self, other: &TensorSquare) -> Result<TensorSquare> {
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side,
                found: other.side,
            });
        }
        let mut out = TensorSquare::zero(self.side);
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                out.add_term((la.concat(lb), ra.concat(rb)), ca * cb);
            }
        }
        Ok(out)
    }

    /// Legs swapped; equals the original exactly when the source
    /// coproduct is cocommutative.
    pub fn swapped(&self) -> TensorSquare {
        let mut out = TensorSquare::zero(self.side);
        for ((l, r), c) in &self.terms {
            out.add_term((r.clone(), l.clone()), c.clone());
        }
        out
    }

    /// `Σ coef·(left | right)` with legs in word text form.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let side = self.side;
        let body = render_terms(self.terms.iter().map(|((l, r), c)| {
            (
                format!("({} | {})", l.text(side), r.text(side)),
                c.clone(),
            )
        }));
        format!("Σ {body}")
    }
}

/// Sparse two-leg map over the joint algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTensorSquare {
    terms: BTreeMap<(JointKey, JointKey), Scalar>,
}

impl JointTensorSquare {
    pub fn zero() -> Self {
        JointTensorSquare {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(JointKey, JointKey), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: (JointKey, JointKey), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn outer(a: &JointElement, b: &JointElement) -> JointTensorSquare {
        let mut out = JointTensorSquare::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                out.add_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }

    pub fn componentwise_product(&self, other: &JointTensorSquare) -> JointTensorSquare {
        let mut out = JointTensorSquare::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                let left = (la.0.concat(&lb.0), la.1.concat(&lb.1));
                let right = (ra.0.concat(&rb.0), ra.1.concat(&rb.1));
                out.add_term((left, right), ca * cb);
            }
        }
        out
    }

    pub fn swapped(&self) -> JointTensorSquare {
        let mut out = JointTensorSquare::zero();
        for ((l, r), c) in &self.terms {
            out.add_term((r.clone(), l.clone()), c.clone());
        }
        out
    }

    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let body = render_terms(self.terms.iter().map(|((l, r), c)| {
            (
                format!("({} | {})", joint_key_text(l), joint_key_text(r)),
                c.clone(),
            )
        }));
        format!("Σ {body}")
    }
}

fn check_coproduct_cap(grade: usize) -> Result<()> {
    if grade > COPRODUCT_GRADE_CAP {
        return Err(Error::CoproductCap {
            grade,
            cap: COPRODUCT_GRADE_CAP,
        });
    }
    Ok(())
}

/// Coproduct of a word: the sum over all subset splits of its letters.
pub(crate) fn word_coproduct<F: FnMut(Word, Word)>(word: &Word, mut f: F) -> Result<()> {
    let n = word.grade();
    check_coproduct_cap(n)?;
    for mask in 0..(1usize << n) {
        let (left, right) = word.split_by_mask(mask);
        f(left, right);
    }
    Ok(())
}

/// Δ(a): linear extension of the subset-split formula. Δ(𝟏) = 𝟏⊗𝟏 and
/// Δ(x) = 𝟏⊗x + x⊗𝟏 on generators.
pub fn coproduct(a: &Element) -> Result<TensorSquare> {
    let mut out = TensorSquare::zero(a.side());
    for (w, c) in a.terms() {
        word_coproduct(w, |l, r| out.add_term((l, r), c.clone()))?;
    }
    Ok(out)
}

/// S(a): words reverse with sign (−1)^grade; the unique anti-homomorphic
/// extension of S(x) = −x.
pub fn antipode(a: &Element) -> Element {
    let mut out = Element::zero(a.side());
    for (w, c) in a.terms() {
        out.add_term(antipode_word(w), antipode_sign(w.grade()) * c);
    }
    out
}

pub(crate) fn antipode_word(w: &Word) -> Word {
    w.reversed()
}

pub(crate) fn antipode_sign(grade: usize) -> Scalar {
    if grade.is_multiple_of(2) {
        scalar::int(1)
    } else {
        scalar::int(-1)
    }
}

/// ε(a): the grade-0 coefficient.
pub fn counit(a: &Element) -> Scalar {
    a.coefficient(&Word::unit())
}

/// Coproduct of the joint algebra: per term (u;v), the two sides'
/// coproducts with legs interleaved as joint pairs.
pub fn joint_coproduct(a: &JointElement) -> Result<JointTensorSquare> {
    let mut out = JointTensorSquare::zero();
    for ((u, v), c) in a.terms() {
        check_coproduct_cap(u.grade())?;
        check_coproduct_cap(v.grade())?;
        for umask in 0..(1usize << u.grade()) {
            let (ul, ur) = u.split_by_mask(umask);
            for vmask in 0..(1usize << v.grade()) {
                let (vl, vr) = v.split_by_mask(vmask);
                out.add_term(((ul.clone(), vl), (ur.clone(), vr)), c.clone());
            }
        }
    }
    Ok(out)
}

/// Componentwise antipode on the joint algebra.
pub fn joint_antipode(a: &JointElement) -> JointElement {
    let mut out = JointElement::zero();
    for ((u, v), c) in a.terms() {
        let sign = antipode_sign(u.grade() + v.grade());
        out.add_term((antipode_word(u), antipode_word(v)), sign * c);
    }
    out
}

/// Product of the two sides' counits.
pub fn joint_counit(a: &JointElement) -> Scalar {
    a.unit_coefficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{binomial, frac, int};
    use crate::symmetry::power;
    use num_rational::BigRational;

    fn gen_u(i: u32) -> Element {
        Element::generator(Side::U, i)
    }

    fn word(indices: Vec<u32>) -> Word {
        Word::from_indices(indices)
    }

    #[test]
    fn coproduct_of_generator() {
        let d = coproduct(&gen_u(1)).unwrap();
        assert_eq!(d.terms().count(), 2);
        assert_eq!(
            d.terms
                .get(&(Word::unit(), Word::single(1)))
                .cloned()
                .unwrap(),
            int(1)
        );
        assert_eq!(
            d.terms
                .get(&(Word::single(1), Word::unit()))
                .cloned()
                .unwrap(),
            int(1)
        );
    }

    #[test]
    fn coproduct_of_grade_two_word() {
        // Δ(e1e2): the four subsets of {1,2}
        let a = Element::from_word(Side::U, word(vec![1, 2]));
        let d = coproduct(&a).unwrap();
        let expect = [
            (Word::unit(), word(vec![1, 2])),
            (Word::single(1), Word::single(2)),
            (Word::single(2), Word::single(1)),
            (word(vec![1, 2]), Word::unit()),
        ];
        assert_eq!(d.terms().count(), 4);
        for key in expect {
            assert_eq!(d.terms.get(&key).cloned().unwrap(), int(1));
        }
    }

    #[test]
    fn coproduct_of_unit() {
        let d = coproduct(&Element::unit(Side::V)).unwrap();
        assert_eq!(d.terms().count(), 1);
        assert_eq!(
            d.terms
                .get(&(Word::unit(), Word::unit()))
                .cloned()
                .unwrap(),
            int(1)
        );
    }

    #[test]
    fn homogeneous_coproduct_binomials() {
        // Δ(x²) for x = e1+e2 equals Σ C(2,k) x^{2−k} ⊗ x^k
        let x = gen_u(1).add(&gen_u(2)).unwrap();
        let x2 = power(&x, 2).unwrap();
        let d = coproduct(&x2).unwrap();
        let mut expect = TensorSquare::zero(Side::U);
        for k in 0..=2usize {
            let c = BigRational::from_integer(binomial(2, k));
            let left = power(&x, 2 - k).unwrap();
            let right = power(&x, k).unwrap();
            for (wl, cl) in left.terms() {
                for (wr, cr) in right.terms() {
                    expect.add_term((wl.clone(), wr.clone()), &c * cl * cr);
                }
            }
        }
        assert_eq!(d, expect);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&Element::unit(Side::U)), Element::unit(Side::U));
        assert_eq!(antipode(&gen_u(1)), gen_u(1).neg());
        // S(e1e2) = e2e1 with sign (−1)²
        let a = Element::from_word(Side::U, word(vec![1, 2]));
        assert_eq!(antipode(&a), Element::from_word(Side::U, word(vec![2, 1])));
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&Element::unit(Side::U)), int(1));
        assert_eq!(counit(&gen_u(1)), int(0));
        let a = Element::scalar(Side::U, int(5))
            .add(
                &Element::from_word(Side::U, word(vec![1, 2])).scale(&int(2)),
            )
            .unwrap();
        assert_eq!(counit(&a), int(5));
    }

    #[test]
    fn joint_coproduct_unit_legs() {
        let a = JointElement::from_words(Word::single(1), Word::unit());
        let d = joint_coproduct(&a).unwrap();
        assert_eq!(d.terms().count(), 2);
        let unit = (Word::unit(), Word::unit());
        let e1 = (Word::single(1), Word::unit());
        assert_eq!(d.terms.get(&(unit.clone(), e1.clone())).cloned().unwrap(), int(1));
        assert_eq!(d.terms.get(&(e1, unit)).cloned().unwrap(), int(1));

        // Δ(e1;f1): four-term sum over both splits
        let b = JointElement::from_words(Word::single(1), Word::single(1));
        let d = joint_coproduct(&b).unwrap();
        assert_eq!(d.terms().count(), 4);
    }

    #[test]
    fn joint_antipode_and_counit() {
        // S(e1;f1) = (−e1;−f1) = (e1;f1)
        let a = JointElement::from_words(Word::single(1), Word::single(1));
        assert_eq!(joint_antipode(&a), a);
        let b = JointElement::from_words(Word::single(1), Word::unit());
        assert_eq!(joint_antipode(&b), b.neg());
        assert_eq!(joint_counit(&JointElement::unit()), int(1));
        let c = JointElement::from_words(Word::single(1), Word::single(2));
        assert_eq!(joint_counit(&c), int(0));
    }

    #[test]
    fn coproduct_cap_enforced() {
        let long = Element::from_word(Side::U, word(vec![1; 9]));
        assert!(matches!(
            coproduct(&long),
            Err(Error::CoproductCap { grade: 9, .. })
        ));
        let j = JointElement::from_words(word(vec![1; 9]), Word::unit());
        assert!(joint_coproduct(&j).is_err());
    }

    #[test]
    fn tensor_square_text() {
        let d = coproduct(&gen_u(1)).unwrap();
        assert_eq!(d.text(), "Σ 1·(1 | e1) + 1·(e1 | 1)");
        assert_eq!(TensorSquare::zero(Side::U).text(), "0");
        let a = Element::from_word(Side::U, word(vec![1, 2]))
            .sub(&Element::from_word(Side::U, word(vec![2, 1])))
            .unwrap()
            .scale(&frac(1, 2));
        let da = coproduct(&a).unwrap();
        assert_eq!(
            da.text(),
            "Σ 1/2·(1 | e1*e2) - 1/2·(1 | e2*e1) + 1/2·(e1*e2 | 1) - 1/2·(e2*e1 | 1)"
        );
    }
}
