//! Discrete Fourier–Weyl and Hartley–Weyl transforms on `F_M^{σ̃,σ}`.

use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grids::{GridKey, LabelSet, PointSet};
use crate::orbitfn::{FunctionType, LabelOrbit, RootsOfUnity};
use crate::rootdata::Rat;
use crate::system::System;

/// Default bound on `|Λ|²·|F|·|W^σ|` for Gram matrix computations.
pub const DEFAULT_BUDGET: u128 = 20_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kernel {
    Complex,
    Hartley,
}

/// Values on the points of a grid, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<T> {
    pub key: GridKey,
    pub values: Vec<T>,
}

/// Expansion coefficients, one per label of the grid, in label order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCoeffs<T> {
    pub key: GridKey,
    pub coeffs: Vec<T>,
}

#[derive(Debug, Clone)]
pub struct GramReport {
    pub kernel: Kernel,
    /// Row-major `|Λ| × |Λ|` matrix of `⟨Ψ_b, Ψ_b'⟩`.
    pub matrix: Vec<Complex64>,
    pub size: usize,
    /// Expected diagonal `c|W^σ|M^n h_M^{∨σ}(b)`.
    pub expected: Vec<f64>,
    pub max_off_diag: f64,
    pub max_diag: f64,
    pub max_diag_rel_err: f64,
    pub max_imag: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parseval {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
}

/// Precomputed kernel matrix for one `(algebra, type, M)`.
#[derive(Debug, Clone)]
pub struct DiscreteTransform {
    pub points: PointSet,
    pub labels: LabelSet,
    orbits: Vec<LabelOrbit>,
    /// Row-major `|Λ| × |F|` matrix of `Ψ_b(a)`.
    psi: Vec<Complex64>,
    /// `c|W^σ|M^n h_M^{∨σ}(b)` for each label.
    norms: Vec<f64>,
    even_order: u128,
}

impl DiscreteTransform {
    pub fn new(sys: &System, ftype: FunctionType, m: i64) -> Result<Self> {
        let points = sys.composite_point_set(ftype, m)?;
        let labels = sys.composite_label_set(ftype, m)?;
        if points.len() != labels.len() {
            return Err(Error::GridMismatch(format!(
                "{} points but {} labels",
                points.len(),
                labels.len()
            )));
        }
        let orbits: Vec<LabelOrbit> = labels
            .labels
            .iter()
            .map(|l| sys.label_orbit(ftype, &l.t))
            .collect::<Result<_>>()?;
        let c = sys.data().connection_index;
        let roots = RootsOfUnity::new(c * m);
        let psi: Vec<Complex64> = orbits
            .par_iter()
            .flat_map_iter(|orbit| {
                let roots = &roots;
                points.points.iter().map(move |p| {
                    orbit
                        .grid_phases(&p.u, m)
                        .fold(Complex64::zero(), |acc, (k, s)| acc + roots.get(k) * s as f64)
                })
            })
            .collect();
        let even_order = sys.even_order(ftype.sigma);
        let base = c as f64 * even_order as f64 * (m as f64).powi(sys.rank() as i32);
        let norms = labels.weights.iter().map(|&h| base * h as f64).collect();
        Ok(Self { points, labels, orbits, psi, norms, even_order })
    }

    pub fn key(&self) -> GridKey {
        self.points.key
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Ψ_b(a)` for label index `b` and point index `a`.
    pub fn psi(&self, b: usize, a: usize) -> Complex64 {
        self.psi[b * self.len() + a]
    }

    /// `ζ_b(a) = Re Ψ_b(a) + Im Ψ_b(a)`.
    pub fn zeta(&self, b: usize, a: usize) -> f64 {
        let v = self.psi(b, a);
        v.re + v.im
    }

    pub fn norm(&self, b: usize) -> f64 {
        self.norms[b]
    }

    /// Samples of `Ψ_b` on the grid.
    pub fn psi_samples(&self, b: usize) -> SampleSet<Complex64> {
        SampleSet { key: self.key(), values: (0..self.len()).map(|a| self.psi(b, a)).collect() }
    }

    /// Samples of `ζ_b` on the grid.
    pub fn zeta_samples(&self, b: usize) -> SampleSet<f64> {
        SampleSet { key: self.key(), values: (0..self.len()).map(|a| self.zeta(b, a)).collect() }
    }

    fn check<T>(&self, f: &SampleSet<T>) -> Result<()> {
        if f.key != self.key() {
            return Err(Error::GridMismatch(format!("samples belong to {:?}", f.key)));
        }
        if f.values.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: f.values.len() });
        }
        Ok(())
    }

    fn check_coeffs<T>(&self, k: &SpectrumCoeffs<T>) -> Result<()> {
        if k.key != self.key() {
            return Err(Error::GridMismatch(format!("coefficients belong to {:?}", k.key)));
        }
        if k.coeffs.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: k.coeffs.len() });
        }
        Ok(())
    }

    /// `Σ_a ε(a) f(a) conj(g(a))`.
    pub fn inner_product(&self, f: &SampleSet<Complex64>, g: &SampleSet<Complex64>) -> Result<Complex64> {
        self.check(f)?;
        self.check(g)?;
        Ok(self
            .points
            .weights
            .iter()
            .zip(f.values.iter().zip(&g.values))
            .fold(Complex64::zero(), |acc, (&e, (a, b))| acc + a * b.conj() * e as f64))
    }

    pub fn forward(&self, f: &SampleSet<Complex64>) -> Result<SpectrumCoeffs<Complex64>> {
        self.check(f)?;
        let n = self.len();
        let coeffs = (0..n)
            .into_par_iter()
            .map(|b| {
                let s = (0..n).fold(Complex64::zero(), |acc, a| {
                    acc + f.values[a] * self.psi(b, a).conj() * self.points.weights[a] as f64
                });
                s / self.norms[b]
            })
            .collect();
        Ok(SpectrumCoeffs { key: self.key(), coeffs })
    }

    /// `Σ_b k_b Ψ_b(a)` at every grid point.
    pub fn interpolate_grid(&self, k: &SpectrumCoeffs<Complex64>) -> Result<Vec<Complex64>> {
        self.check_coeffs(k)?;
        let n = self.len();
        Ok((0..n)
            .into_par_iter()
            .map(|a| (0..n).fold(Complex64::zero(), |acc, b| acc + k.coeffs[b] * self.psi(b, a)))
            .collect())
    }

    /// `Σ_b k_b Ψ_b(a)` at an arbitrary point in ω^∨-coordinates.
    pub fn interpolate(&self, k: &SpectrumCoeffs<Complex64>, y: &[Rat]) -> Result<Complex64> {
        self.check_coeffs(k)?;
        self.check_point(y)?;
        Ok(self
            .orbits
            .iter()
            .zip(&k.coeffs)
            .fold(Complex64::zero(), |acc, (o, c)| acc + c * o.psi(y)))
    }

    pub fn forward_hartley(&self, g: &SampleSet<f64>) -> Result<SpectrumCoeffs<f64>> {
        self.check(g)?;
        let n = self.len();
        let coeffs = (0..n)
            .into_par_iter()
            .map(|b| {
                let s: f64 = (0..n)
                    .map(|a| g.values[a] * self.zeta(b, a) * self.points.weights[a] as f64)
                    .sum();
                s / self.norms[b]
            })
            .collect();
        Ok(SpectrumCoeffs { key: self.key(), coeffs })
    }

    pub fn interpolate_hartley_grid(&self, l: &SpectrumCoeffs<f64>) -> Result<Vec<f64>> {
        self.check_coeffs(l)?;
        let n = self.len();
        Ok((0..n)
            .into_par_iter()
            .map(|a| (0..n).map(|b| l.coeffs[b] * self.zeta(b, a)).sum())
            .collect())
    }

    pub fn interpolate_hartley(&self, l: &SpectrumCoeffs<f64>, y: &[Rat]) -> Result<f64> {
        self.check_coeffs(l)?;
        self.check_point(y)?;
        Ok(self.orbits.iter().zip(&l.coeffs).map(|(o, c)| c * o.zeta(y)).sum())
    }

    fn check_point(&self, y: &[Rat]) -> Result<()> {
        let n = self.key().algebra.rank;
        if y.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: y.len() });
        }
        Ok(())
    }

    /// Cost estimate `|Λ|²·|F|·|W^σ|` used by the budget guard.
    pub fn gram_cost(&self) -> u128 {
        let n = self.len() as u128;
        n * n * n * self.even_order
    }

    /// Full Gram matrix of the kernel functions with an error report.
    pub fn gram(&self, kernel: Kernel, budget: u128) -> Result<GramReport> {
        let cost = self.gram_cost();
        if cost > budget {
            return Err(Error::BudgetExceeded { cost, budget });
        }
        let n = self.len();
        let w: Vec<f64> = self.points.weights.iter().map(|&e| e as f64).collect();
        let matrix: Vec<Complex64> = (0..n * n)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                match kernel {
                    Kernel::Complex => (0..n).fold(Complex64::zero(), |acc, a| {
                        acc + self.psi(i, a) * self.psi(j, a).conj() * w[a]
                    }),
                    Kernel::Hartley => {
                        Complex64::new((0..n).map(|a| self.zeta(i, a) * self.zeta(j, a) * w[a]).sum(), 0.0)
                    }
                }
            })
            .collect();
        let mut rep = GramReport {
            kernel,
            size: n,
            expected: self.norms.clone(),
            max_off_diag: 0.0,
            max_diag: 0.0,
            max_diag_rel_err: 0.0,
            max_imag: 0.0,
            matrix,
        };
        for i in 0..n {
            for j in 0..n {
                let v = rep.matrix[i * n + j];
                rep.max_imag = rep.max_imag.max(v.im.abs());
                if i == j {
                    rep.max_diag = rep.max_diag.max(v.norm());
                    let rel = (v - self.norms[i]).norm() / self.norms[i];
                    rep.max_diag_rel_err = rep.max_diag_rel_err.max(rel);
                } else {
                    rep.max_off_diag = rep.max_off_diag.max(v.norm());
                }
            }
        }
        Ok(rep)
    }

    /// `Σ ε|f|²` against `Σ norm_b |k_b|²`.
    pub fn parseval(&self, f: &SampleSet<Complex64>) -> Result<Parseval> {
        let k = self.forward(f)?;
        let lhs: f64 = self.points.weights.iter().zip(&f.values).map(|(&e, v)| e as f64 * v.norm_sqr()).sum();
        let rhs: f64 = self.norms.iter().zip(&k.coeffs).map(|(n, c)| n * c.norm_sqr()).sum();
        Ok(parseval_of(lhs, rhs))
    }

    pub fn parseval_hartley(&self, g: &SampleSet<f64>) -> Result<Parseval> {
        let l = self.forward_hartley(g)?;
        let lhs: f64 = self.points.weights.iter().zip(&g.values).map(|(&e, v)| e as f64 * v * v).sum();
        let rhs: f64 = self.norms.iter().zip(&l.coeffs).map(|(n, c)| n * c * c).sum();
        Ok(parseval_of(lhs, rhs))
    }
}

fn parseval_of(lhs: f64, rhs: f64) -> Parseval {
    let scale = lhs.abs().max(rhs.abs());
    let rel_err = if scale == 0.0 { 0.0 } else { (lhs - rhs).abs() / scale };
    Parseval { lhs, rhs, rel_err }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(alg: &str, t: &str, m: i64) -> DiscreteTransform {
        let sys = System::from_name(alg).unwrap();
        DiscreteTransform::new(&sys, t.parse().unwrap(), m).unwrap()
    }

    #[test]
    fn c2_e_plus_constants() {
        let t = tr("C2", "E+", 4);
        assert_eq!(t.len(), 10);
        let ones = SampleSet { key: t.key(), values: vec![Complex64::new(1.0, 0.0); 10] };
        let ip = t.inner_product(&ones, &ones).unwrap();
        assert!((ip.re - 32.0).abs() < 1e-12);
        let zero = t.labels.labels.iter().position(|l| l.t == vec![0, 0]).unwrap();
        let p0 = t.psi_samples(zero);
        assert!((t.inner_product(&p0, &p0).unwrap().re - 512.0).abs() < 1e-9);
        let rep = t.gram(Kernel::Complex, DEFAULT_BUDGET).unwrap();
        assert!((rep.matrix[zero * 10 + zero].re - 512.0).abs() < 1e-9);
        assert!(rep.max_off_diag <= 1e-9 * rep.max_diag);
        assert!(rep.max_diag_rel_err <= 1e-12);
    }

    #[test]
    fn constant_function_on_c() {
        let t = tr("C2", "C", 4);
        let ones = SampleSet { key: t.key(), values: vec![Complex64::new(1.0, 0.0); t.len()] };
        let k = t.forward(&ones).unwrap();
        let zero = t.labels.labels.iter().position(|l| l.t == vec![0, 0]).unwrap();
        for (b, c) in k.coeffs.iter().enumerate() {
            let want = if b == zero { 0.125 } else { 0.0 };
            assert!((c - want).norm() <= 1e-10);
        }
    }

    #[test]
    fn single_label_spectra() {
        let t = tr("G2", "Es-", 5);
        for b in 0..t.len() {
            let k = t.forward(&t.psi_samples(b)).unwrap();
            let l = t.forward_hartley(&t.zeta_samples(b)).unwrap();
            for j in 0..t.len() {
                let want = (j == b) as u8 as f64;
                assert!((k.coeffs[j] - want).norm() < 1e-10);
                assert!((l.coeffs[j] - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn budget_guard_and_mismatch() {
        let t = tr("C2", "C", 4);
        assert!(matches!(t.gram(Kernel::Complex, 10), Err(Error::BudgetExceeded { .. })));
        let other = tr("C2", "S", 4);
        let f = SampleSet { key: other.key(), values: vec![Complex64::zero(); other.len()] };
        assert!(t.forward(&f).is_err());
        let short = SampleSet { key: t.key(), values: vec![Complex64::zero(); 3] };
        assert!(t.forward(&short).is_err());
    }

    #[test]
    fn interpolation_at_grid_points_matches_orbits() {
        let sys = System::from_name("C2").unwrap();
        let t = DiscreteTransform::new(&sys, "El-".parse().unwrap(), 6).unwrap();
        let mut k = SpectrumCoeffs { key: t.key(), coeffs: vec![Complex64::zero(); t.len()] };
        k.coeffs[2] = Complex64::new(1.0, 0.0);
        for (a, p) in t.points.points.iter().enumerate() {
            let v = t.interpolate(&k, &p.coords(6)).unwrap();
            assert!((v - t.psi(2, a)).norm() < 1e-12);
        }
    }
}
