//! The square product on the joint tensor algebra, its self-dual
//! restriction, the symmetric and antisymmetric circle products, and the
//! phi maps between the ordinary and deformed algebra structures together
//! with their triangular matrix certificates.

use crate::hopf::{coproduct, joint_coproduct};
use crate::laplace::{joint_word_pairing, sym_pairing};
use crate::scalar::{self, Scalar};
use crate::space::{Side, SpaceSpec};
use crate::symmetry::{antisymmetrize, is_antisymmetric, is_symmetric, symmetrize};
use crate::tensor::{Element, JointElement, Word};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Write as _;
use std::str::FromStr;

/// a □ b = Σ (a₍₁₎ | b₍₁₎) a₍₂₎·b₍₂₎ on the joint tensor algebra.
pub fn square(a: &JointElement, b: &JointElement, spec: &SpaceSpec) -> Result<JointElement> {
    let da = joint_coproduct(a)?;
    let db = joint_coproduct(b)?;
    let mut out = JointElement::zero();
    for ((a1, a2), ca) in da.terms() {
        for ((b1, b2), cb) in db.terms() {
            let p = joint_word_pairing(a1, b1, spec)?;
            if !p.is_zero() {
                out.add_term((a2.0.concat(&b2.0), a2.1.concat(&b2.1)), ca * cb * p);
            }
        }
    }
    Ok(out)
}

fn require_self_dual(spec: &SpaceSpec) -> Result<()> {
    if !spec.self_dual() {
        return Err(Error::SelfDualityRequired);
    }
    Ok(())
}

fn require_same_side(u: &Element, v: &Element) -> Result<()> {
    if u.side() != v.side() {
        return Err(Error::SideMismatch {
            expected: u.side(),
            found: v.side(),
        });
    }
    Ok(())
}

/// The square product restricted to one side under self-duality: the
/// pairing reads the left legs as U-words and the right argument's legs
/// as V-words through the basis identification.
pub fn square_self(u: &Element, v: &Element, spec: &SpaceSpec) -> Result<Element> {
    require_self_dual(spec)?;
    require_same_side(u, v)?;
    let du = coproduct(u)?;
    let dv = coproduct(v)?;
    let mut out = Element::zero(u.side());
    for ((u1, u2), cu) in du.terms() {
        for ((v1, v2), cv) in dv.terms() {
            let p = sym_pairing(u1, v1, spec)?;
            if !p.is_zero() {
                out.add_term(u2.concat(v2), cu * cv * p);
            }
        }
    }
    Ok(out)
}

/// Σ (u₍₁₎ | v₍₁₎) u₍₂₎·v₍₂₎ followed by one projection of the whole
/// sum; by linearity this equals projecting each Sweedler term.
fn circle_core(u: &Element, v: &Element, spec: &SpaceSpec, signed: bool) -> Result<Element> {
    let raw = square_self(u, v, spec)?;
    if signed {
        antisymmetrize(&raw)
    } else {
        symmetrize(&raw)
    }
}

pub(crate) fn circle_sym_unchecked(
    u: &Element,
    v: &Element,
    spec: &SpaceSpec,
) -> Result<Element> {
    circle_core(u, v, spec, false)
}

pub(crate) fn circle_antisym_unchecked(
    u: &Element,
    v: &Element,
    spec: &SpaceSpec,
) -> Result<Element> {
    circle_core(u, v, spec, true)
}

/// Symmetric circle product: Σ (u₍₁₎ | v₍₁₎) Symm(u₍₂₎ ⊗ v₍₂₎).
/// Requires self-duality and operands fixed by symmetrize.
pub fn circle_sym(u: &Element, v: &Element, spec: &SpaceSpec) -> Result<Element> {
    if !is_symmetric(u)? || !is_symmetric(v)? {
        return Err(Error::NotSymmetric);
    }
    circle_core(u, v, spec, false)
}

/// Antisymmetric circle product: Σ (u₍₁₎ | v₍₁₎) ASymm(u₍₂₎ ⊗ v₍₂₎).
/// Requires self-duality and operands fixed by antisymmetrize.
pub fn circle_antisym(u: &Element, v: &Element, spec: &SpaceSpec) -> Result<Element> {
    if !is_antisymmetric(u)? || !is_antisymmetric(v)? {
        return Err(Error::NotAntisymmetric);
    }
    circle_core(u, v, spec, true)
}

/// Word-wise iterated square product of generators, extended linearly.
pub fn phi_tensor(a: &Element, spec: &SpaceSpec) -> Result<Element> {
    require_self_dual(spec)?;
    let side = a.side();
    let mut out = Element::zero(side);
    for (w, c) in a.terms() {
        let mut acc = Element::unit(side);
        for &ix in w.indices() {
            acc = square_self(&acc, &Element::generator(side, ix), spec)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

fn circle_sym_power(x: &Element, t: usize, spec: &SpaceSpec) -> Result<Element> {
    let mut acc = Element::unit(x.side());
    for _ in 0..t {
        // acc is symmetric by construction, x has grade at most 1
        acc = circle_sym_unchecked(&acc, x, spec)?;
    }
    Ok(acc)
}

/// Phi on the symmetric algebra: defined on powers, φ(xᵗ) = x∘⋯∘x, and
/// extended through the polarization identity; the expansion is applied
/// term by term, which is valid on symmetric input.
pub fn phi_sym(a: &Element, spec: &SpaceSpec) -> Result<Element> {
    require_self_dual(spec)?;
    if !is_symmetric(a)? {
        return Err(Error::NotSymmetric);
    }
    let side = a.side();
    // the expansion only depends on the multiset of letters, so fold the
    // terms of the (symmetric) input over sorted words first
    let mut by_multiset: std::collections::BTreeMap<Word, Scalar> = std::collections::BTreeMap::new();
    for (w, c) in a.terms() {
        let mut indices = w.indices().to_vec();
        indices.sort_unstable();
        *by_multiset
            .entry(Word::from_indices(indices))
            .or_insert_with(num_traits::Zero::zero) += c;
    }
    let mut out = Element::zero(side);
    for (w, c) in &by_multiset {
        if c.is_zero() {
            continue;
        }
        let t = w.grade();
        if t == 0 {
            out = out.add(&Element::scalar(side, c.clone()))?;
            continue;
        }
        let mut acc = Element::zero(side);
        for mask in 0..(1usize << t) {
            // bit k set means ε_k = −1
            let mut z = Element::zero(side);
            for (k, &ix) in w.indices().iter().enumerate() {
                let g = Element::generator(side, ix);
                z = z.add(&if mask & (1 << k) != 0 { g.neg() } else { g })?;
            }
            let signed = if mask.count_ones() % 2 == 0 {
                scalar::int(1)
            } else {
                scalar::int(-1)
            };
            acc = acc.add(&circle_sym_power(&z, t, spec)?.scale(&signed))?;
        }
        let norm =
            BigRational::from_integer(BigInt::from(2).pow(t as u32) * scalar::factorial(t));
        out = out.add(&acc.scale(&(c / norm)))?;
    }
    Ok(out)
}

/// Phi on the antisymmetric algebra: defined on the canonical wedge
/// basis, φ(x_{s₁} ∧ ⋯ ∧ x_{sₜ}) = x_{s₁} ∘ ⋯ ∘ x_{sₜ} over the sorted
/// strict index set, and extended linearly through the basis expansion.
pub fn phi_antisym(a: &Element, spec: &SpaceSpec) -> Result<Element> {
    require_self_dual(spec)?;
    if !is_antisymmetric(a)? {
        return Err(Error::NotAntisymmetric);
    }
    let side = a.side();
    let mut out = Element::zero(side);
    for (word, coord) in antisym_coords(a) {
        let mut acc = Element::unit(side);
        for &ix in word.indices() {
            // the running product stays fixed by antisymmetrize
            acc = circle_antisym_unchecked(&acc, &Element::generator(side, ix), spec)?;
        }
        out = out.add(&acc.scale(&coord))?;
    }
    Ok(out)
}

/// Coordinates of an antisymmetric element over the wedge basis indexed
/// by strictly increasing words: γ_s = grade!·(coefficient of the sorted
/// arrangement).
fn antisym_coords(a: &Element) -> Vec<(Word, Scalar)> {
    let mut coords = Vec::new();
    for (w, c) in a.terms() {
        let indices = w.indices();
        if indices.windows(2).all(|p| p[0] < p[1]) {
            let t = w.grade();
            coords.push((
                w.clone(),
                c * BigRational::from_integer(scalar::factorial(t)),
            ));
        }
    }
    coords
}

/// Which canonical basis a phi matrix is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMode {
    Tensor,
    Symmetric,
    Antisymmetric,
}

impl FromStr for PhiMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tensor" => Ok(PhiMode::Tensor),
            "sym" => Ok(PhiMode::Symmetric),
            "asym" => Ok(PhiMode::Antisymmetric),
            other => Err(format!("unknown mode {other}, expected tensor|sym|asym")),
        }
    }
}

/// Canonical basis words up to `max_grade`: all words (tensor),
/// non-decreasing words (symmetric), strictly increasing words
/// (antisymmetric); graded-lexicographic order.
pub fn basis_words(mode: PhiMode, dim: usize, max_grade: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for t in 0..=max_grade {
        let mut current: Vec<u32> = Vec::with_capacity(t);
        collect_words(mode, dim, t, &mut current, &mut out);
    }
    out
}

fn collect_words(mode: PhiMode, dim: usize, t: usize, current: &mut Vec<u32>, out: &mut Vec<Word>) {
    if current.len() == t {
        out.push(Word::from_indices(current.clone()));
        return;
    }
    let start = match (mode, current.last()) {
        (PhiMode::Tensor, _) => 1,
        (_, None) => 1,
        (PhiMode::Symmetric, Some(&last)) => last,
        (PhiMode::Antisymmetric, Some(&last)) => last + 1,
    };
    for ix in start..=(dim as u32) {
        current.push(ix);
        collect_words(mode, dim, t, current, out);
        current.pop();
    }
}

/// The canonical basis element named by a basis word.
pub fn basis_element(mode: PhiMode, side: Side, word: &Word) -> Result<Element> {
    let raw = Element::from_word(side, word.clone());
    match mode {
        PhiMode::Tensor => Ok(raw),
        PhiMode::Symmetric => symmetrize(&raw),
        PhiMode::Antisymmetric => antisymmetrize(&raw),
    }
}

/// Matrix of the relevant phi map over a canonical graded basis, with a
/// triangularity certificate: block upper triangular with respect to the
/// grading and identity diagonal blocks means the truncation is
/// invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMatrix {
    mode: PhiMode,
    dim: usize,
    max_grade: usize,
    basis: Vec<Word>,
    entries: Vec<Vec<Scalar>>,
}

impl PhiMatrix {
    pub fn mode(&self) -> PhiMode {
        self.mode
    }

    pub fn max_grade(&self) -> usize {
        self.max_grade
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// entries[i][j] = coordinate of basis element i in φ(basis element j).
    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// Coordinates of an element over this matrix's basis. Errors when
    /// the element does not lie in the basis span.
    pub fn coords(&self, a: &Element) -> Result<Vec<Scalar>> {
        let coords = match self.mode {
            PhiMode::Tensor => self
                .basis
                .iter()
                .map(|w| a.coefficient(w))
                .collect::<Vec<_>>(),
            PhiMode::Symmetric => self
                .basis
                .iter()
                .map(|w| {
                    let t = w.grade();
                    let norm = BigRational::from_integer(
                        scalar::factorial(t) / repetition_factor(w.indices()),
                    );
                    a.coefficient(w) * norm
                })
                .collect(),
            PhiMode::Antisymmetric => self
                .basis
                .iter()
                .map(|w| a.coefficient(w) * BigRational::from_integer(scalar::factorial(w.grade())))
                .collect(),
        };
        // the coordinates are read off single representative words; make
        // sure they actually reconstruct the element
        let mut rebuilt = Element::zero(a.side());
        for (w, c) in self.basis.iter().zip(&coords) {
            if !c.is_zero() {
                rebuilt = rebuilt.add(&basis_element(self.mode, a.side(), w)?.scale(c))?;
            }
        }
        if rebuilt != *a {
            return Err(Error::NotInSpan);
        }
        Ok(coords)
    }

    /// The element with the given coordinates over this matrix's basis.
    pub fn from_coords(&self, side: Side, coords: &[Scalar]) -> Result<Element> {
        let mut out = Element::zero(side);
        for (w, c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                out = out.add(&basis_element(self.mode, side, w)?.scale(c))?;
            }
        }
        Ok(out)
    }

    /// Unit diagonal and zeros at or below each diagonal block: for every
    /// column j, entry (j,j) is 1 and every row i of grade ≥ grade(j)
    /// with i ≠ j is 0.
    pub fn is_triangular(&self) -> bool {
        for j in 0..self.size() {
            if !self.entries[j][j].is_one() {
                return false;
            }
            let gj = self.basis[j].grade();
            for i in 0..self.size() {
                if i != j && self.basis[i].grade() >= gj && !self.entries[i][j].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Plain text rows plus the `triangular: yes|no` verdict line.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let mut line = String::new();
            for (k, entry) in row.iter().enumerate() {
                if k > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{}", scalar::format(entry));
            }
            out.push_str(&line);
            out.push('\n');
        }
        let _ = write!(
            out,
            "triangular: {}",
            if self.is_triangular() { "yes" } else { "no" }
        );
        out
    }
}

/// Number of letter rearrangements fixing a sorted word: ∏ mult_k!.
fn repetition_factor(indices: &[u32]) -> BigInt {
    let mut factor = BigInt::one();
    let mut run = 1usize;
    for k in 1..indices.len() {
        if indices[k] == indices[k - 1] {
            run += 1;
        } else {
            factor *= scalar::factorial(run);
            run = 1;
        }
    }
    factor *= scalar::factorial(run);
    factor
}

/// Builds the matrix of phi over the canonical graded basis up to
/// `max_grade` for the given mode.
pub fn phi_matrix(spec: &SpaceSpec, mode: PhiMode, max_grade: usize) -> Result<PhiMatrix> {
    require_self_dual(spec)?;
    if max_grade > crate::PERMUTATION_GRADE_CAP {
        return Err(Error::PermutationCap {
            grade: max_grade,
            cap: crate::PERMUTATION_GRADE_CAP,
        });
    }
    let dim = spec.dim_u();
    let basis = basis_words(mode, dim, max_grade);
    let mut matrix = PhiMatrix {
        mode,
        dim,
        max_grade,
        basis,
        entries: Vec::new(),
    };
    let n = matrix.size();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for w in &matrix.basis {
        let beta = basis_element(mode, Side::U, w)?;
        let image = match mode {
            PhiMode::Tensor => phi_tensor(&beta, spec)?,
            PhiMode::Symmetric => phi_sym(&beta, spec)?,
            PhiMode::Antisymmetric => phi_antisym(&beta, spec)?,
        };
        columns.push(matrix.coords(&image)?);
    }
    matrix.entries = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    Ok(matrix)
}
