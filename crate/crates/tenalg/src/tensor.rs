//! The free tensor algebra on each side and the joint tensor algebra.
//!
//! Elements are sparse maps from words (sequences of 1-based generator
//! indices) to rational coefficients. Zero coefficients are pruned after
//! every operation, so equality of elements is exact equality of maps.
//! Words order graded-lexicographically, which makes map iteration — and
//! therefore the text form — canonical.

use crate::scalar::{self, Scalar};
use crate::space::{Side, SpaceSpec};
use crate::{Error, Result};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A word of generator indices (1-based). The empty word is the unit of
/// its algebra; the grade of a word is its length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(index: u32) -> Self {
        Word(vec![index])
    }

    pub fn from_indices(indices: Vec<u32>) -> Self {
        Word(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut indices = self.0.clone();
        indices.extend_from_slice(&other.0);
        Word(indices)
    }

    pub fn reversed(&self) -> Word {
        let mut indices = self.0.clone();
        indices.reverse();
        Word(indices)
    }

    /// Splits off the letters selected by `mask` (bit k = position k),
    /// returning (selected, complement) with positions kept in order.
    pub fn split_by_mask(&self, mask: usize) -> (Word, Word) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (pos, &ix) in self.0.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                left.push(ix);
            } else {
                right.push(ix);
            }
        }
        (Word(left), Word(right))
    }

    /// Text form over the given side: `1` for the unit, else letters
    /// joined by `*`, e.g. `e1*e3`.
    pub fn text(&self, side: Side) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let letter = side.letter();
        let mut out = String::new();
        for (k, ix) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            let _ = write!(out, "{letter}{ix}");
        }
        out
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Graded-lexicographic: shorter words first, then lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Key of a joint term: the U-side word and the V-side word.
pub type JointKey = (Word, Word);

pub(crate) fn joint_grade(key: &JointKey) -> usize {
    key.0.grade() + key.1.grade()
}

/// Sparse linear combination of words on one side; a member of T(U) or
/// T(V). Grade-0 scalars are stored as the empty word's coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    side: Side,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(side: Side) -> Self {
        Element {
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(side: Side) -> Self {
        Element::scalar(side, scalar::int(1))
    }

    /// The scalar `c` embedded as `c` times the empty word.
    pub fn scalar(side: Side, c: Scalar) -> Self {
        let mut e = Element::zero(side);
        e.add_term(Word::unit(), c);
        e
    }

    pub fn generator(side: Side, index: u32) -> Self {
        let mut e = Element::zero(side);
        e.add_term(Word::single(index), scalar::int(1));
        e
    }

    pub fn from_word(side: Side, word: Word) -> Self {
        let mut e = Element::zero(side);
        e.add_term(word, scalar::int(1));
        e
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &Word) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest grade carrying a term; 0 for the zero element.
    pub fn max_grade(&self) -> usize {
        self.terms.keys().map(Word::grade).max().unwrap_or(0)
    }

    /// Adds `c` times `word`, pruning the entry if it cancels.
    pub fn add_term(&mut self, word: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    fn check_side(&self, other: &Element) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side,
                found: other.side,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_side(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-scalar::int(1))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.side);
        }
        Element {
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k * c))
                .collect(),
        }
    }

    /// Bilinear extension of word concatenation; grade-additive.
    pub fn concat_product(&self, other: &Element) -> Result<Element> {
        self.check_side(other)?;
        let mut out = Element::zero(self.side);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Partition of the terms by grade, ascending; empty grades omitted.
    pub fn grade_parts(&self) -> Vec<(usize, Element)> {
        let mut parts: BTreeMap<usize, Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.grade())
                .or_insert_with(|| Element::zero(self.side))
                .add_term(w.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// The terms of one grade only.
    pub fn grade_part(&self, grade: usize) -> Element {
        let mut out = Element::zero(self.side);
        for (w, c) in &self.terms {
            if w.grade() == grade {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    /// Canonical text form: terms in graded-lex order, joined by ` + ` or
    /// ` - ` according to the sign of the coefficient. The empty word
    /// prints as the bare coefficient, other words as `coef·e1*e3`.
    pub fn text(&self) -> String {
        render_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.text(self.side), c.clone())),
        )
    }
}

/// Sparse member of the joint tensor algebra T(U) ⊗ T(V): a linear
/// combination of (U-word, V-word) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointElement {
    terms: BTreeMap<JointKey, Scalar>,
}

impl JointElement {
    pub fn zero() -> Self {
        JointElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        JointElement::scalar(scalar::int(1))
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut e = JointElement::zero();
        e.add_term((Word::unit(), Word::unit()), c);
        e
    }

    pub fn from_words(u: Word, v: Word) -> Self {
        let mut e = JointElement::zero();
        e.add_term((u, v), scalar::int(1));
        e
    }

    /// Embeds a one-sided element as (a ; 1) or (1 ; a).
    pub fn embed(a: &Element) -> Self {
        let mut e = JointElement::zero();
        for (w, c) in a.terms() {
            let key = match a.side() {
                Side::U => (w.clone(), Word::unit()),
                Side::V => (Word::unit(), w.clone()),
            };
            e.add_term(key, c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JointKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, key: &JointKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the unit (𝟏 ; 𝟏); also the joint counit.
    pub fn unit_coefficient(&self) -> Scalar {
        self.coefficient(&(Word::unit(), Word::unit()))
    }

    pub fn max_grade(&self, side: Side) -> usize {
        self.terms
            .keys()
            .map(|(u, v)| match side {
                Side::U => u.grade(),
                Side::V => v.grade(),
            })
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, key: JointKey, c: Scalar) {
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

    pub fn add(&self, other: &JointElement) -> JointElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &JointElement) -> JointElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> JointElement {
        self.scale(&-scalar::int(1))
    }

    pub fn scale(&self, c: &Scalar) -> JointElement {
        if c.is_zero() {
            return JointElement::zero();
        }
        JointElement {
            terms: self
                .terms
                .iter()
                .map(|(k, s)| (k.clone(), s * c))
                .collect(),
        }
    }

    /// Componentwise concatenation on each side, extended bilinearly.
    pub fn joint_product(&self, other: &JointElement) -> JointElement {
        let mut out = JointElement::zero();
        for ((ua, va), ca) in &self.terms {
            for ((ub, vb), cb) in &other.terms {
                out.add_term((ua.concat(ub), va.concat(vb)), ca * cb);
            }
        }
        out
    }

    /// Canonical text form; terms print as `coef·e1*e2;f1`, the term on
    /// the pair of empty words as the bare coefficient.
    pub fn text(&self) -> String {
        render_terms(self.terms.iter().map(|((u, v), c)| {
            if u.is_unit() && v.is_unit() {
                ("1".to_string(), c.clone())
            } else {
                (
                    format!("{};{}", u.text(Side::U), v.text(Side::V)),
                    c.clone(),
                )
            }
        }))
    }
}

/// Joint word text `u;v` used by displays of Sweedler legs.
pub(crate) fn joint_key_text(key: &JointKey) -> String {
    format!("{};{}", key.0.text(Side::U), key.1.text(Side::V))
}

/// Shared term renderer: text of each (word text, coefficient) pair with
/// canonical sign joining; `1` as the word text means the empty word and
/// prints as the bare coefficient.
pub(crate) fn render_terms(terms: impl Iterator<Item = (String, Scalar)>) -> String {
    let mut out = String::new();
    let mut first = true;
    for (word_text, coef) in terms {
        let negative = coef < Scalar::zero();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if word_text == "1" {
            let _ = write!(out, "{}", scalar::format_abs(&coef));
        } else {
            let _ = write!(out, "{}·{}", scalar::format_abs(&coef), word_text);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Extension of the bilinear form to equal-grade words: the positional
/// product of generator pairings, zero across grades; bilinear.
pub fn duality(a: &Element, b: &Element, spec: &SpaceSpec) -> Result<Scalar> {
    if a.side() != Side::U {
        return Err(Error::SideMismatch {
            expected: Side::U,
            found: a.side(),
        });
    }
    if b.side() != Side::V {
        return Err(Error::SideMismatch {
            expected: Side::V,
            found: b.side(),
        });
    }
    let mut acc = Scalar::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let p = word_duality(wa, wb, spec)?;
            acc += ca * cb * p;
        }
    }
    Ok(acc)
}

pub(crate) fn word_duality(u: &Word, v: &Word, spec: &SpaceSpec) -> Result<Scalar> {
    if u.grade() != v.grade() {
        return Ok(Scalar::zero());
    }
    let mut p = scalar::int(1);
    for (&i, &j) in u.indices().iter().zip(v.indices()) {
        p *= spec.pair_vectors(i, j)?;
        if p.is_zero() {
            return Ok(p);
        }
    }
    Ok(p)
}
