//! JSON wire formats.
//!
//! Scalars travel in standard form, which is what a reader expects to see:
//!
//! ```text
//! scalar          {"re1": a, "im1": b, "re2": c, "im2": d}   w = (a+b·i1) + (c+d·i1)·i2
//! ket             {"n": N, "entries": [scalar, ...]}
//! matrix          {"n": N, "rows": [[scalar, ...], ...]}     row-major
//! complex matrix  {"n": N, "rows": [[{"re":..,"im":..}, ...], ...]}
//! hyperbolic      {"x1": .., "x2": ..}                       idempotent components
//! decomposition   {"eigenvalues": [hyperbolic, ...], "eigenkets": [ket, ...],
//!                  "pairing": [..], "reconstruction_error": r}
//! ```
//!
//! Deserialization validates everything: unknown fields, non-finite numbers,
//! length fields that disagree with the payload, and non-square matrices are
//! all rejected.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bicomplex::{Bicomplex, Hyperbolic};
use crate::complex::Complex;
use crate::ket::Ket;
use crate::operator::{BicomplexMatrix, ComplexMatrix};
use crate::spectral::SpectralDecomposition;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarWire {
    re1: f64,
    im1: f64,
    re2: f64,
    im2: f64,
}

impl Serialize for Bicomplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (z1, z2) = self.to_standard();
        ScalarWire {
            re1: z1.re,
            im1: z1.im,
            re2: z2.re,
            im2: z2.im,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Bicomplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = ScalarWire::deserialize(deserializer)?;
        let z1 = Complex::try_new(w.re1, w.im1).map_err(D::Error::custom)?;
        let z2 = Complex::try_new(w.re2, w.im2).map_err(D::Error::custom)?;
        Ok(Bicomplex::from_standard(z1, z2))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexWire {
    re: f64,
    im: f64,
}

impl Serialize for Complex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ComplexWire {
            re: self.re,
            im: self.im,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Complex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = ComplexWire::deserialize(deserializer)?;
        Complex::try_new(w.re, w.im).map_err(D::Error::custom)
    }
}

impl Serialize for Hyperbolic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        HyperbolicWire {
            x1: self.x1,
            x2: self.x2,
        }
        .serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HyperbolicWire {
    x1: f64,
    x2: f64,
}

impl<'de> Deserialize<'de> for Hyperbolic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = HyperbolicWire::deserialize(deserializer)?;
        if !w.x1.is_finite() || !w.x2.is_finite() {
            return Err(D::Error::custom("non-finite hyperbolic component"));
        }
        Ok(Hyperbolic::new(w.x1, w.x2))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KetWire {
    n: usize,
    entries: Vec<Bicomplex>,
}

impl Serialize for Ket {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        KetWire {
            n: self.len(),
            entries: self.entries().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ket {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = KetWire::deserialize(deserializer)?;
        if w.n == 0 {
            return Err(D::Error::custom("ket length must be at least 1"));
        }
        if w.entries.len() != w.n {
            return Err(D::Error::custom(format!(
                "ket declares n={} but carries {} entries",
                w.n,
                w.entries.len()
            )));
        }
        Ok(Ket::new(w.entries))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixWire<T> {
    n: usize,
    rows: Vec<Vec<T>>,
}

fn check_square<T>(w: &MatrixWire<T>) -> Result<(), String> {
    if w.n == 0 {
        return Err("matrix dimension must be at least 1".into());
    }
    if w.rows.len() != w.n {
        return Err(format!(
            "matrix declares n={} but has {} rows",
            w.n,
            w.rows.len()
        ));
    }
    for (i, row) in w.rows.iter().enumerate() {
        if row.len() != w.n {
            return Err(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                w.n
            ));
        }
    }
    Ok(())
}

impl Serialize for BicomplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.dim();
        let rows: Vec<Vec<Bicomplex>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)]).collect())
            .collect();
        MatrixWire { n, rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BicomplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w: MatrixWire<Bicomplex> = MatrixWire::deserialize(deserializer)?;
        check_square(&w).map_err(D::Error::custom)?;
        Ok(BicomplexMatrix::from_rows(&w.rows))
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.dim();
        let rows: Vec<Vec<Complex>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)]).collect())
            .collect();
        MatrixWire { n, rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w: MatrixWire<Complex> = MatrixWire::deserialize(deserializer)?;
        check_square(&w).map_err(D::Error::custom)?;
        Ok(ComplexMatrix::from_rows(&w.rows))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionWire {
    eigenvalues: Vec<Hyperbolic>,
    eigenkets: Vec<Ket>,
    pairing: Vec<usize>,
    reconstruction_error: f64,
}

impl Serialize for SpectralDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DecompositionWire {
            eigenvalues: self.eigenvalues.clone(),
            eigenkets: self.eigenkets.clone(),
            pairing: self.pairing.clone(),
            reconstruction_error: self.reconstruction_error,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpectralDecomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = DecompositionWire::deserialize(deserializer)?;
        let n = w.eigenvalues.len();
        if n == 0 {
            return Err(D::Error::custom(
                "decomposition must carry at least one eigenvalue",
            ));
        }
        if w.eigenkets.len() != n || w.pairing.len() != n {
            return Err(D::Error::custom(
                "eigenvalues, eigenkets, and pairing must have equal lengths",
            ));
        }
        if w.eigenkets.iter().any(|k| k.len() != n) {
            return Err(D::Error::custom(
                "every eigenket must have the decomposition dimension",
            ));
        }
        if !w.reconstruction_error.is_finite() || w.reconstruction_error < 0.0 {
            return Err(D::Error::custom(
                "reconstruction_error must be finite and nonnegative",
            ));
        }
        Ok(SpectralDecomposition {
            eigenvalues: w.eigenvalues,
            eigenkets: w.eigenkets,
            pairing: w.pairing,
            reconstruction_error: w.reconstruction_error,
        })
    }
}
