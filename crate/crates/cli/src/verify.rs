//! Sampled invariant checks for the `verify` command.
//!
//! Every check either passes or fails; one failing check makes the whole
//! run fail (exit code 1). Ket sampling is seeded, so a fixed input and
//! seed always produce the same report.

use bicomplex::{
    bicomplex_spectral_with, Bicomplex, BicomplexMatrix, Complex, Conjugation, Error, Ket,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random kets drawn per sampled check.
const SAMPLES: usize = 200;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct Report {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<28} {}\n", c.name, c.detail));
        }
        for n in &self.notes {
            out.push_str(&format!("note  {n}\n"));
        }
        let verdict = if self.all_passed() {
            "all checks passed"
        } else {
            "verification FAILED"
        };
        out.push_str(verdict);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
            "all_passed": self.all_passed(),
        })
    }
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Bicomplex {
    Bicomplex::new(
        Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
    )
}

fn random_ket(n: usize, rng: &mut ChaCha8Rng) -> Ket {
    Ket::new((0..n).map(|_| random_scalar(rng)).collect())
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

fn scalar_close(a: Bicomplex, b: Bicomplex, tol: f64) -> bool {
    (a - b).modulus() <= tol * (1.0 + a.modulus() + b.modulus())
}

pub fn run(t: &BicomplexMatrix, tol: f64, max_sweeps: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t.dim();
    let norm = t.operator_norm();
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    // structural checks on the operator itself
    let defect = t.self_adjoint_defect();
    let allowed = tol * (1.0 + norm);
    checks.push(Check {
        name: "self_adjoint",
        passed: defect <= allowed,
        detail: format!("defect {defect:.3e}, allowed {allowed:.3e}"),
    });

    let adj_norm = t.adjoint().operator_norm();
    checks.push(Check {
        name: "adjoint_norm_identity",
        passed: rel_close(norm, adj_norm, 1e-9),
        detail: format!("‖T‖ = {norm:.12e}, ‖T*‖ = {adj_norm:.12e}"),
    });

    let gram_norm = t
        .adjoint()
        .compose(t)
        .expect("same dimension")
        .operator_norm();
    checks.push(Check {
        name: "adjoint_product_identity",
        passed: rel_close(gram_norm, norm * norm, 1e-9),
        detail: format!("‖T*T‖ = {gram_norm:.12e}, ‖T‖² = {:.12e}", norm * norm),
    });

    // sampled scalar-product axioms at the operator's dimension
    let mut additivity = true;
    let mut homogeneity = true;
    let mut symmetry = true;
    let mut zero_axiom = true;
    let mut positivity = true;
    let mut norm_bound = true;
    let mut t_norma = true;
    let mut pairing = true;

    for _ in 0..SAMPLES {
        let psi = random_ket(n, &mut rng);
        let phi = random_ket(n, &mut rng);
        let chi = random_ket(n, &mut rng);
        let s = random_scalar(&mut rng);

        let sum = &phi + &chi;
        additivity &= scalar_close(
            psi.scalar_product(&sum).unwrap(),
            psi.scalar_product(&phi).unwrap() + psi.scalar_product(&chi).unwrap(),
            1e-12,
        );
        homogeneity &= scalar_close(
            psi.scalar_product(&phi.scaled(s)).unwrap(),
            s * psi.scalar_product(&phi).unwrap(),
            1e-12,
        ) && scalar_close(
            psi.scaled(s).scalar_product(&phi).unwrap(),
            s.conj(Conjugation::Dag3) * psi.scalar_product(&phi).unwrap(),
            1e-12,
        );
        symmetry &= scalar_close(
            psi.scalar_product(&phi).unwrap(),
            phi.scalar_product(&psi).unwrap().dag3(),
            1e-12,
        );

        let g = psi.scalar_product(&psi).unwrap();
        zero_axiom &= if psi.is_zero() {
            g.is_zero()
        } else {
            g.modulus() > 1e-12 * (1.0 + psi.norm())
        };
        positivity &= psi.check_hyperbolic_positive();

        norm_bound &= {
            let lhs = psi.scaled(s).norm();
            let rhs = 2f64.sqrt() * s.modulus() * psi.norm();
            lhs <= rhs + 1e-12 * (1.0 + rhs)
        };
        t_norma &= {
            let root = g.nth_root(2, 0, 0);
            (root.modulus() - psi.norm()).abs() <= 1e-12 * (1.0 + psi.norm())
        };

        pairing &= scalar_close(
            psi.scalar_product(&t.apply(&phi).unwrap()).unwrap(),
            t.adjoint()
                .apply(&psi)
                .unwrap()
                .scalar_product(&phi)
                .unwrap(),
            1e-10,
        );
    }
    let zero = Ket::zero(n);
    zero_axiom &= zero.scalar_product(&zero).unwrap().is_zero();

    let sampled = [
        ("sp_additivity", additivity),
        ("sp_homogeneity", homogeneity),
        ("sp_conj_symmetry", symmetry),
        ("sp_zero_axiom", zero_axiom),
        ("sp_hyperbolic_positive", positivity),
        ("norm_bound_sqrt2", norm_bound),
        ("norm_equals_root_modulus", t_norma),
        ("adjoint_pairing", pairing),
    ];
    for (name, passed) in sampled {
        checks.push(Check {
            name,
            passed,
            detail: format!("{SAMPLES} sampled kets at n={n}"),
        });
    }

    // reconstruction, only meaningful for self-adjoint input
    match bicomplex_spectral_with(t, tol, max_sweeps) {
        Ok(d) => {
            let allowed = 1e-10 * (1.0 + norm);
            checks.push(Check {
                name: "reconstruction",
                passed: d.reconstruction_error <= allowed,
                detail: format!(
                    "error {:.3e}, allowed {allowed:.3e}",
                    d.reconstruction_error
                ),
            });

            let worst_residual = d
                .eigenvalues
                .iter()
                .zip(&d.eigenkets)
                .map(|(l, psi)| (&t.apply(psi).unwrap() - &psi.scaled(l.to_bicomplex())).norm())
                .fold(0.0, f64::max);
            checks.push(Check {
                name: "eigen_equation",
                passed: worst_residual <= 1e-9 * (1.0 + norm),
                detail: format!("worst residual {worst_residual:.3e}"),
            });

            for (k, lambda) in d.eigenvalues.iter().enumerate() {
                notes.push(format!("λ_{} = {:#} = {}", k + 1, lambda, lambda));
            }
            if d.is_invertible(tol) {
                notes.push("operator is invertible (no null-cone eigenvalues)".into());
            } else {
                notes
                    .push("operator is NOT invertible: an eigenvalue lies on the null cone".into());
            }
        }
        Err(Error::NotSelfAdjoint { .. }) => {
            notes.push("reconstruction skipped: operator is not self-adjoint".into());
        }
        Err(e) => {
            checks.push(Check {
                name: "reconstruction",
                passed: false,
                detail: format!("spectral decomposition failed: {e}"),
            });
        }
    }

    Report { checks, notes }
}
