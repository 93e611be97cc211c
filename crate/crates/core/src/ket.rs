//! Finite free modules over the bicomplex scalars.
//!
//! A [`Ket`] is an element of `M = 𝕄(2)ⁿ`, written against the fixed
//! standard basis, which doubles as the module's orthonormal basis. Through
//! the idempotents every ket splits as `|ψ⟩ = e₁|ψ⟩ + e₂|ψ⟩`, giving two
//! complex vectors (the [`ComponentKet`]s, living in `V₁ = e₁M` and
//! `V₂ = e₂M`). The canonical scalar product
//!
//! ```text
//! (|ψ⟩, |φ⟩) = Σᵢ ψᵢ^†₃ · φᵢ
//! ```
//!
//! is linear in the second slot, conjugate-symmetric under †₃, and
//! hyperbolic positive; its two projections are ordinary complex inner
//! products on `V₁` and `V₂`. The same data also carries the complex
//! vector-space view `M′` with the primed product `½(P₁ + P₂)` of the
//! bicomplex one, and the induced real norm
//! `‖ψ‖ = (1/√2)·√(⟨ψ₁|ψ₁⟩ + ⟨ψ₂|ψ₂⟩)`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::bicomplex::{Bicomplex, Component, NumberClass};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// A vector of bicomplex scalars; an element of `𝕄(2)ⁿ`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    entries: Vec<Bicomplex>,
}

/// One idempotent component of a ket: a complex vector in `V₁` or `V₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentKet {
    which: Component,
    entries: Vec<Complex>,
}

impl Ket {
    /// Panics on an empty entry list; the module has dimension at least 1.
    pub fn new(entries: Vec<Bicomplex>) -> Self {
        assert!(!entries.is_empty(), "a ket needs at least one entry");
        Ket { entries }
    }

    pub fn zero(n: usize) -> Self {
        Ket::new(vec![Bicomplex::ZERO; n])
    }

    /// The `k`-th standard basis ket of dimension `n`.
    pub fn standard_basis(n: usize, k: usize) -> Self {
        assert!(k < n, "basis index out of range");
        let mut entries = vec![Bicomplex::ZERO; n];
        entries[k] = Bicomplex::ONE;
        Ket { entries }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    #[inline]
    pub fn entries(&self) -> &[Bicomplex] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Bicomplex> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|w| w.is_zero())
    }

    /// The canonical bicomplex scalar product `Σᵢ ψᵢ^†₃·φᵢ`, linear in the
    /// second slot.
    pub fn scalar_product(&self, other: &Ket) -> Result<Bicomplex> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.dag3() * *b)
            .sum())
    }

    /// The complex-valued product of the vector space `M′`:
    /// `½·(P₁ + P₂)` applied to the bicomplex scalar product.
    pub fn scalar_product_prime(&self, other: &Ket) -> Result<Complex> {
        let g = self.scalar_product(other)?;
        Ok((g.c1 + g.c2) * 0.5)
    }

    /// The 𝕄(2)-norm `(1/√2)·√(⟨ψ₁|ψ₁⟩ + ⟨ψ₂|ψ₂⟩)`.
    pub fn norm(&self) -> f64 {
        let s: f64 = self
            .entries
            .iter()
            .map(|w| w.c1.norm_sqr() + w.c2.norm_sqr())
            .sum();
        (s * 0.5).sqrt()
    }

    /// Splits into the two idempotent component kets; `merge` inverts this
    /// exactly.
    pub fn split(&self) -> (ComponentKet, ComponentKet) {
        (
            ComponentKet {
                which: Component::One,
                entries: self.entries.iter().map(|w| w.c1).collect(),
            },
            ComponentKet {
                which: Component::Two,
                entries: self.entries.iter().map(|w| w.c2).collect(),
            },
        )
    }

    /// Reassembles a ket from its two component kets.
    ///
    /// Panics if the parts have different lengths or come from the same
    /// component.
    pub fn merge(part1: &ComponentKet, part2: &ComponentKet) -> Ket {
        assert_eq!(
            part1.which,
            Component::One,
            "first argument must be the e1 part"
        );
        assert_eq!(
            part2.which,
            Component::Two,
            "second argument must be the e2 part"
        );
        assert_eq!(
            part1.entries.len(),
            part2.entries.len(),
            "component length mismatch"
        );
        Ket::new(
            part1
                .entries
                .iter()
                .zip(&part2.entries)
                .map(|(a, b)| Bicomplex::new(*a, *b))
                .collect(),
        )
    }

    /// The ket-level extension of the †₂ conjugation relative to the
    /// standard basis: the two idempotent component kets swap.
    pub fn dagger2(&self) -> Ket {
        Ket::new(
            self.entries
                .iter()
                .map(|w| Bicomplex::new(w.c2, w.c1))
                .collect(),
        )
    }

    /// Verifies (rather than assumes) that `(ψ, ψ)` lands in the closed
    /// nonnegative hyperbolic cone.
    pub fn check_hyperbolic_positive(&self) -> bool {
        let g = self.scalar_product(self).expect("same ket");
        let tol = g.default_tol();
        match g.classify(tol) {
            NumberClass::Zero | NumberClass::HyperbolicPositive => true,
            NumberClass::NullCone => g.in_d_plus(tol),
            _ => false,
        }
    }

    /// Entry-wise scaling by a bicomplex scalar.
    pub fn scaled(&self, w: Bicomplex) -> Ket {
        Ket::new(self.entries.iter().map(|x| w * *x).collect())
    }

    /// True iff every coefficient lies in ℂ(i₁) within `tol` (equal
    /// idempotent components), i.e. the ket belongs to the subspace `V`.
    pub fn has_complex_coefficients(&self, tol: f64) -> bool {
        self.entries.iter().all(|w| (w.c1 - w.c2).abs() <= tol)
    }
}

/// The orthogonal complement of the span of `basis` inside `M′`, where the
/// basis kets have ℂ(i₁) coefficients: each generator maps to
/// `e₁|ψ⟩ − e₂|ψ⟩ = j·|ψ⟩`.
///
/// Each returned ket is orthogonal to all of `V` under the primed product;
/// under the bicomplex product the complement of `V` collapses to `{0}`, so
/// no such list exists there.
pub fn v_orthogonal_complement(basis: &[Ket]) -> Vec<Ket> {
    basis.iter().map(|psi| psi.scaled(Bicomplex::J)).collect()
}

impl ComponentKet {
    pub fn new(which: Component, entries: Vec<Complex>) -> Self {
        assert!(
            !entries.is_empty(),
            "a component ket needs at least one entry"
        );
        ComponentKet { which, entries }
    }

    #[inline]
    pub fn which(&self) -> Component {
        self.which
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    /// The standard complex inner product `Σᵢ āᵢ·bᵢ` on `V_k`, linear in
    /// the second slot.
    pub fn inner(&self, other: &ComponentKet) -> Result<Complex> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * *b)
            .sum())
    }

    /// The induced norm `√⟨v|v⟩` on `V_k`.
    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Embeds back into the module as `e_k · (entries)`: the opposite
    /// idempotent component is zero.
    pub fn to_ket(&self) -> Ket {
        let make = |z: &Complex| match self.which {
            Component::One => Bicomplex::new(*z, Complex::ZERO),
            Component::Two => Bicomplex::new(Complex::ZERO, *z),
        };
        Ket::new(self.entries.iter().map(make).collect())
    }
}

impl Index<usize> for Ket {
    type Output = Bicomplex;
    fn index(&self, i: usize) -> &Bicomplex {
        &self.entries[i]
    }
}

impl Add for &Ket {
    type Output = Ket;
    fn add(self, rhs: &Ket) -> Ket {
        assert_eq!(self.len(), rhs.len(), "ket length mismatch");
        Ket::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }
}

impl Sub for &Ket {
    type Output = Ket;
    fn sub(self, rhs: &Ket) -> Ket {
        assert_eq!(self.len(), rhs.len(), "ket length mismatch");
        Ket::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }
}

impl Neg for &Ket {
    type Output = Ket;
    fn neg(self) -> Ket {
        Ket::new(self.entries.iter().map(|a| -*a).collect())
    }
}

impl Mul<&Ket> for Bicomplex {
    type Output = Ket;
    fn mul(self, rhs: &Ket) -> Ket {
        rhs.scaled(self)
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", w)?;
        }
        write!(f, ")")
    }
}
