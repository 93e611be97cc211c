//! Bicomplex linear operators on `𝕄(2)ⁿ` as dense matrices.
//!
//! A [`BicomplexMatrix`] acts 𝕄(2)-linearly by construction; it splits
//! entry-wise into two complex component matrices `T = T₁·e₁ + T₂·e₂`, and
//! every operation here (application, composition, adjoint, norm) reduces to
//! the corresponding complex operation on the components. The adjoint is the
//! †₃-conjugate transpose, which is simultaneously the adjoint for the
//! bicomplex scalar product and for the primed complex product.
//!
//! Merely ℂ(i₁)-linear maps of the underlying complex space that fail to
//! commute with multiplication by `e₁`/`e₂` have no matrix over 𝕄(2) and are
//! not representable here.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::bicomplex::Bicomplex;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::ket::Ket;
use crate::spectral;

/// A dense n×n complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    /// The zero matrix. Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        ComplexMatrix {
            n,
            entries: vec![Complex::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::ONE;
        }
        m
    }

    /// Builds from rows; panics unless the shape is square and nonempty.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Self {
        let n = rows.len();
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend_from_slice(row);
        }
        ComplexMatrix { n, entries }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn conj_transpose(&self) -> ComplexMatrix {
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Matrix product; panics on dimension mismatch.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix–vector product; panics on dimension mismatch.
    pub fn apply_vec(&self, v: &[Complex]) -> Vec<Complex> {
        assert_eq!(self.n, v.len(), "dimension mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `max_ij |a_ij − conj(a_ji)|`; zero for an exactly Hermitian matrix.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self[(i, j)] - self[(j, i)].conj()).abs();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// `(A + A*)/2`, exactly Hermitian (real diagonal included).
    pub fn hermitian_part(&self) -> ComplexMatrix {
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let s = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
                out[(i, j)] = if i == j { Complex::from_real(s.re) } else { s };
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.entries[i * self.n + j]
    }
}

/// A dense n×n bicomplex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct BicomplexMatrix {
    n: usize,
    entries: Vec<Bicomplex>,
}

impl BicomplexMatrix {
    /// The zero matrix. Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        BicomplexMatrix {
            n,
            entries: vec![Bicomplex::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BicomplexMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Bicomplex::ONE;
        }
        m
    }

    /// Builds from rows; panics unless the shape is square and nonempty.
    pub fn from_rows(rows: &[Vec<Bicomplex>]) -> Self {
        let n = rows.len();
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend_from_slice(row);
        }
        BicomplexMatrix { n, entries }
    }

    pub fn from_diagonal(diag: &[Bicomplex]) -> Self {
        let mut m = BicomplexMatrix::zeros(diag.len());
        for (i, w) in diag.iter().enumerate() {
            m[(i, i)] = *w;
        }
        m
    }

    /// Recombines two complex component matrices into `C₁·e₁ + C₂·e₂`.
    /// Panics on dimension mismatch.
    pub fn from_components(c1: &ComplexMatrix, c2: &ComplexMatrix) -> Self {
        assert_eq!(c1.dim(), c2.dim(), "component dimension mismatch");
        let n = c1.dim();
        let mut m = BicomplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = Bicomplex::new(c1[(i, j)], c2[(i, j)]);
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entries(&self) -> &[Bicomplex] {
        &self.entries
    }

    /// Matrix–ket application over 𝕄(2).
    pub fn apply(&self, psi: &Ket) -> Result<Ket> {
        if psi.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: psi.len(),
            });
        }
        let entries = (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * psi[j]).sum())
            .collect();
        Ok(Ket::new(entries))
    }

    /// Entry-wise idempotent projections `(P₁(T), P₂(T))`; recombining them
    /// with [`BicomplexMatrix::from_components`] is exact.
    pub fn decompose(&self) -> (ComplexMatrix, ComplexMatrix) {
        let n = self.n;
        let mut t1 = ComplexMatrix::zeros(n);
        let mut t2 = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let w = self[(i, j)];
                t1[(i, j)] = w.c1;
                t2[(i, j)] = w.c2;
            }
        }
        (t1, t2)
    }

    /// The adjoint `T*`: the entry-wise †₃-conjugate transpose, equal to the
    /// recombination of the component conjugate transposes.
    pub fn adjoint(&self) -> BicomplexMatrix {
        let n = self.n;
        let mut out = BicomplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].dag3();
            }
        }
        out
    }

    /// The operator norm `sup{‖Tψ‖ : ‖ψ‖ ≤ 1}`, computed as the larger of
    /// the two component spectral norms.
    ///
    /// Panics if the internal Hermitian eigensolve fails to converge, which
    /// has not been observed within the default sweep budget.
    pub fn operator_norm(&self) -> f64 {
        let (t1, t2) = self.decompose();
        spectral::spectral_norm(&t1).max(spectral::spectral_norm(&t2))
    }

    /// `max_ij |(T − T*)_ij|`, the input to the self-adjointness test.
    pub fn self_adjoint_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self[(i, j)] - self[(j, i)].dag3()).modulus();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// True iff the entry-wise modulus of `T − T*` is at most
    /// `tol·(1 + ‖T‖)`; equivalently both component matrices are Hermitian
    /// at that scale.
    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        self.self_adjoint_defect() <= tol * (1.0 + self.operator_norm())
    }

    /// Operator composition `(self ∘ rhs)`, the matrix product `self·rhs`.
    pub fn compose(&self, rhs: &BicomplexMatrix) -> Result<BicomplexMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = BicomplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Entry-wise maximum modulus of `self − rhs`; panics on dimension
    /// mismatch.
    pub fn max_entry_distance(&self, rhs: &BicomplexMatrix) -> f64 {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (*a - *b).modulus())
            .fold(0.0, f64::max)
    }
}

/// The bra-ket outer product `|ψ⟩⟨φ|` with entries `ψᵢ·(φⱼ)^†₃`, so that
/// `|ψ⟩⟨ψ| φ = (ψ, φ)·ψ` under the second-slot-linear scalar product.
pub fn outer_product(psi: &Ket, phi: &Ket) -> Result<BicomplexMatrix> {
    if psi.len() != phi.len() {
        return Err(Error::LengthMismatch {
            left: psi.len(),
            right: phi.len(),
        });
    }
    let n = psi.len();
    let mut out = BicomplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = psi[i] * phi[j].dag3();
        }
    }
    Ok(out)
}

impl Index<(usize, usize)> for BicomplexMatrix {
    type Output = Bicomplex;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Bicomplex {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for BicomplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Bicomplex {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for BicomplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc(x: f64) -> Bicomplex {
        Bicomplex::from_real(x)
    }

    #[test]
    fn identity_application() {
        let id = BicomplexMatrix::identity(3);
        let psi = Ket::new(vec![Bicomplex::I2, Bicomplex::J, bc(2.5)]);
        assert_eq!(id.apply(&psi).unwrap(), psi);
    }

    #[test]
    fn diagonal_application() {
        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::J]);
        let psi = Ket::new(vec![bc(1.0)]);
        assert_eq!(t.apply(&psi).unwrap(), Ket::new(vec![Bicomplex::J]));
    }

    #[test]
    fn application_commutes_with_idempotents() {
        let t = BicomplexMatrix::from_rows(&[
            vec![Bicomplex::I2, bc(2.0)],
            vec![Bicomplex::J, Bicomplex::E1],
        ]);
        let psi = Ket::new(vec![bc(1.0) + Bicomplex::I1, Bicomplex::I2 * 0.5]);
        let lhs = t.apply(&psi.scaled(Bicomplex::E1)).unwrap();
        let rhs = t.apply(&psi).unwrap().scaled(Bicomplex::E1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn decomposition_examples() {
        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::J]);
        let (t1, t2) = t.decompose();
        assert_eq!(t1[(0, 0)], Complex::ONE);
        assert_eq!(t2[(0, 0)], -Complex::ONE);

        let t = BicomplexMatrix::from_rows(&[
            vec![Bicomplex::ZERO, Bicomplex::I2],
            vec![Bicomplex::ZERO, Bicomplex::ZERO],
        ]);
        let (t1, t2) = t.decompose();
        assert_eq!(t1[(0, 1)], Complex::new(0.0, -1.0));
        assert_eq!(t2[(0, 1)], Complex::new(0.0, 1.0));

        let id = BicomplexMatrix::identity(2);
        let (t1, t2) = id.decompose();
        assert_eq!(t1, ComplexMatrix::identity(2));
        assert_eq!(t2, ComplexMatrix::identity(2));
        assert_eq!(BicomplexMatrix::from_components(&t1, &t2), id);
    }

    #[test]
    fn adjoint_examples() {
        let w = Bicomplex::ONE + Bicomplex::I2;
        let t = BicomplexMatrix::from_rows(&[
            vec![Bicomplex::ZERO, w],
            vec![Bicomplex::ZERO, Bicomplex::ZERO],
        ]);
        let a = t.adjoint();
        assert_eq!(a[(0, 1)], Bicomplex::ZERO);
        assert_eq!(a[(1, 0)], Bicomplex::ONE - Bicomplex::I2);
        assert_eq!(a.adjoint(), t);
        // agrees with recombined component conjugate transposes
        let (t1, t2) = t.decompose();
        let oracle = BicomplexMatrix::from_components(&t1.conj_transpose(), &t2.conj_transpose());
        assert_eq!(a, oracle);
    }

    #[test]
    fn operator_norm_examples() {
        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::E1, Bicomplex::ZERO]);
        assert!((t.operator_norm() - 1.0).abs() < 1e-12);

        let id = BicomplexMatrix::identity(3);
        assert!((id.operator_norm() - 1.0).abs() < 1e-12);

        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::E1 * 2.0 + Bicomplex::E2 * 3.0]);
        assert!((t.operator_norm() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn self_adjointness() {
        let t = BicomplexMatrix::from_rows(&[
            vec![bc(1.0), Bicomplex::I2],
            vec![-Bicomplex::I2, bc(1.0)],
        ]);
        assert!(t.is_self_adjoint(1e-12));

        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::J, Bicomplex::ONE + Bicomplex::J]);
        assert!(t.is_self_adjoint(1e-12));

        let t = BicomplexMatrix::from_rows(&[
            vec![Bicomplex::ZERO, bc(1.0)],
            vec![Bicomplex::ZERO, Bicomplex::ZERO],
        ]);
        assert!(!t.is_self_adjoint(1e-12));
    }

    #[test]
    fn outer_product_examples() {
        let psi = Ket::new(vec![bc(1.0), Bicomplex::ZERO]);
        let p = outer_product(&psi, &psi).unwrap();
        assert_eq!(p[(0, 0)], Bicomplex::ONE);
        assert_eq!(p[(0, 1)], Bicomplex::ZERO);
        assert_eq!(p[(1, 1)], Bicomplex::ZERO);

        let psi = Ket::new(vec![Bicomplex::I2]);
        let p = outer_product(&psi, &psi).unwrap();
        assert!((p[(0, 0)] - Bicomplex::ONE).modulus() < 1e-15);

        // |ψ⟩⟨ψ| φ = (ψ, φ)·ψ
        let psi = Ket::new(vec![Bicomplex::I2, Bicomplex::J]);
        let phi = Ket::new(vec![bc(0.5), Bicomplex::E1]);
        let lhs = outer_product(&psi, &psi).unwrap().apply(&phi).unwrap();
        let rhs = psi.scaled(psi.scalar_product(&phi).unwrap());
        assert!((&lhs - &rhs).norm() < 1e-15);
    }

    #[test]
    fn composition() {
        let id = BicomplexMatrix::identity(2);
        assert_eq!(id.compose(&id).unwrap(), id);

        let s = BicomplexMatrix::from_diagonal(&[Bicomplex::E1, Bicomplex::E1]);
        let t = BicomplexMatrix::from_diagonal(&[Bicomplex::E2, Bicomplex::E2]);
        assert_eq!(s.compose(&t).unwrap(), BicomplexMatrix::zeros(2));

        let a = BicomplexMatrix::zeros(2);
        let b = BicomplexMatrix::zeros(3);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn apply_dimension_mismatch() {
        let t = BicomplexMatrix::identity(2);
        let psi = Ket::zero(3);
        assert!(t.apply(&psi).is_err());
    }
}
