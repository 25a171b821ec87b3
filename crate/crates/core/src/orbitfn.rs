//! The ten families of Weyl orbit functions and their Hartley variants.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootdata::{Rat, RootSystemData};
use crate::system::System;
use crate::weyl::{check_available, SignHom};

/// A pair `(σ̃, σ)` normalised to the representative used for naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionType {
    pub sigma_tilde: SignHom,
    pub sigma: SignHom,
}

const NAMES: [(&str, SignHom, SignHom); 10] = [
    ("C", SignHom::One, SignHom::One),
    ("S", SignHom::E, SignHom::One),
    ("E+", SignHom::One, SignHom::E),
    ("Ss", SignHom::S, SignHom::One),
    ("Sl", SignHom::L, SignHom::One),
    ("Es+", SignHom::One, SignHom::S),
    ("El+", SignHom::One, SignHom::L),
    ("E-", SignHom::L, SignHom::E),
    ("Es-", SignHom::E, SignHom::S),
    ("El-", SignHom::E, SignHom::L),
];

impl FunctionType {
    /// Builds the type of `(σ̃, σ)`; the pair is replaced by the equivalent
    /// `(σ̃·σ, σ)` when that one is the named representative.
    pub fn new(sigma_tilde: SignHom, sigma: SignHom) -> Self {
        let direct = Self { sigma_tilde, sigma };
        if NAMES.iter().any(|&(_, a, b)| (a, b) == (sigma_tilde, sigma)) {
            return direct;
        }
        Self { sigma_tilde: sigma_tilde.mul(sigma), sigma }
    }

    pub fn name(&self) -> &'static str {
        NAMES
            .iter()
            .find(|&&(_, a, b)| (a, b) == (self.sigma_tilde, self.sigma))
            .map(|&(n, _, _)| n)
            .expect("normalised type")
    }

    /// All ten types, in naming order.
    pub fn all() -> Vec<FunctionType> {
        NAMES.iter().map(|&(_, a, b)| Self { sigma_tilde: a, sigma: b }).collect()
    }

    /// Types defined for the given root system.
    pub fn available(data: &RootSystemData) -> Vec<FunctionType> {
        Self::all().into_iter().filter(|t| t.check(data).is_ok()).collect()
    }

    pub fn check(&self, data: &RootSystemData) -> Result<()> {
        for s in [self.sigma_tilde, self.sigma] {
            if check_available(data, s).is_err() {
                return Err(Error::TypeUnavailable(self.name().into(), data.algebra.to_string()));
            }
        }
        Ok(())
    }

    /// `σ̃·σ`, the second sign homomorphism of the composite grids.
    pub fn partner(&self) -> SignHom {
        self.sigma_tilde.mul(self.sigma)
    }
}

impl fmt::Display for FunctionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionType {
    type Err = Error;

    /// Accepts a name such as `Es-` or a pair such as `(e,s)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(&(_, a, b)) = NAMES.iter().find(|(n, _, _)| n.eq_ignore_ascii_case(t)) {
            return Ok(Self { sigma_tilde: a, sigma: b });
        }
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')'));
        if let Some((a, b)) = inner.and_then(|r| r.split_once(',')) {
            if let (Ok(a), Ok(b)) = (a.parse(), b.parse()) {
                return Ok(Self::new(a, b));
            }
        }
        Err(Error::UnknownType(s.to_string()))
    }
}

/// `frac(r)` as a rational in `[0, 1)`.
pub fn phase_mod_one(r: Rat) -> Rat {
    r - r.floor()
}

/// The orbit of one label under `W^σ`, stored as the integer covectors
/// `v_w = K (L_w t)` (with `K = c·C⁻¹`) so that `⟨wb, y⟩ = v_w·y / c` for a
/// point `y` in ω^∨-coordinates, together with `σ̃(w)`.
#[derive(Debug, Clone)]
pub struct LabelOrbit {
    pub ftype: FunctionType,
    pub label: Vec<i64>,
    pub terms: Vec<(Vec<i64>, i8)>,
    pub connection_index: i64,
}

impl LabelOrbit {
    /// `Ψ_b(a)` at an arbitrary rational point in ω^∨-coordinates.
    pub fn psi(&self, y: &[Rat]) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (v, s)| {
            let ph = self.phase(v, y);
            acc + Complex64::from_polar(*s as f64, TAU * crate::rootdata::ratio_f64(ph))
        })
    }

    /// `ζ_b(a)`, the same sum with the `cas` kernel.
    pub fn zeta(&self, y: &[Rat]) -> f64 {
        self.terms.iter().fold(0.0, |acc, (v, s)| {
            let th = TAU * crate::rootdata::ratio_f64(self.phase(v, y));
            acc + *s as f64 * (th.cos() + th.sin())
        })
    }

    fn phase(&self, v: &[i64], y: &[Rat]) -> Rat {
        let p = v.iter().zip(y).fold(Rat::zero(), |acc, (&a, &b)| acc + b * a);
        phase_mod_one(p / self.connection_index)
    }

    /// Phase numerators `v_w·u mod cM` at the grid point `u/M`, with signs.
    pub fn grid_phases<'a>(&'a self, u: &'a [i64], m: i64) -> impl Iterator<Item = (i64, i8)> + 'a {
        let modulus = self.connection_index * m;
        self.terms.iter().map(move |(v, s)| {
            let p: i64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            (p.rem_euclid(modulus), *s)
        })
    }
}

/// Table of `exp(2πi k/N)` for exact phases with denominator `N`.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    table: Vec<Complex64>,
}

impl RootsOfUnity {
    pub fn new(n: i64) -> Self {
        let table = (0..n)
            .map(|k| {
                // Reduce to [-1/2, 1/2) before the trig call.
                let k2 = if 2 * k >= n { k - n } else { k };
                Complex64::from_polar(1.0, TAU * k2 as f64 / n as f64)
            })
            .collect();
        Self { table }
    }

    pub fn get(&self, k: i64) -> Complex64 {
        self.table[k as usize]
    }
}

impl System {
    /// Precomputes the `W^σ`-orbit of the label `t` (ω-coordinates).
    pub fn label_orbit(&self, ftype: FunctionType, t: &[i64]) -> Result<LabelOrbit> {
        let data = self.data();
        ftype.check(data)?;
        let n = self.rank();
        if t.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: t.len() });
        }
        let k = data.scaled_cartan_inverse();
        let group = self.group()?;
        let terms = group
            .elements()
            .iter()
            .filter(|w| w.sign(ftype.sigma) == 1)
            .map(|w| {
                let wt = w.apply_label(t);
                // ⟨wb, y⟩ = (wt)ᵀ C⁻¹ y, so the covector is Kᵀ(wt).
                let v: Vec<i64> = (0..n).map(|j| (0..n).map(|i| wt[i] * k[i][j]).sum()).collect();
                (v, w.sign(ftype.sigma_tilde))
            })
            .collect();
        Ok(LabelOrbit { ftype, label: t.to_vec(), terms, connection_index: data.connection_index })
    }

    /// `Ψ_b^{σ̃,σ}(a)` for `b = t` in ω-coordinates and `a = y` in ω^∨-coordinates.
    pub fn eval_psi(&self, ftype: FunctionType, t: &[i64], y: &[Rat]) -> Result<Complex64> {
        self.check_point(y)?;
        Ok(self.label_orbit(ftype, t)?.psi(y))
    }

    /// `ζ_b^{σ̃,σ}(a)`.
    pub fn eval_zeta(&self, ftype: FunctionType, t: &[i64], y: &[Rat]) -> Result<f64> {
        self.check_point(y)?;
        Ok(self.label_orbit(ftype, t)?.zeta(y))
    }

    /// `Ψ_b^{σ̃,σ}(a)` for a point given in α^∨-coordinates.
    pub fn eval_psi_alpha_check(&self, ftype: FunctionType, t: &[i64], x: &[Rat]) -> Result<Complex64> {
        self.check_point(x)?;
        let y = self.data().alpha_check_to_omega_check(x);
        self.eval_psi(ftype, t, &y)
    }

    /// `ζ_b^{σ̃,σ}(a)` for a point given in α^∨-coordinates.
    pub fn eval_zeta_alpha_check(&self, ftype: FunctionType, t: &[i64], x: &[Rat]) -> Result<f64> {
        self.check_point(x)?;
        let y = self.data().alpha_check_to_omega_check(x);
        self.eval_zeta(ftype, t, &y)
    }

    fn check_point(&self, y: &[Rat]) -> Result<()> {
        if y.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: y.len() });
        }
        Ok(())
    }

    /// Both sides of
    /// `Ψ_b^{σ1,σ}(a) Ψ_b^{σ2,σ}(a') = Σ_{w∈W^σ} σ2(w) Ψ_b^{σ1σ2,σ}(a + w a')`.
    pub fn product_decompose(
        &self,
        sigma1: SignHom,
        sigma2: SignHom,
        sigma: SignHom,
        t: &[i64],
        a: &[Rat],
        a2: &[Rat],
    ) -> Result<(Complex64, Complex64)> {
        self.check_point(a)?;
        self.check_point(a2)?;
        let lhs = self.eval_psi(FunctionType::new(sigma1, sigma), t, a)?
            * self.eval_psi(FunctionType::new(sigma2, sigma), t, a2)?;
        let orbit = self.label_orbit(FunctionType::new(sigma1.mul(sigma2), sigma), t)?;
        let group = self.group()?;
        let mut rhs = Complex64::zero();
        for (idx, w) in group.elements().iter().enumerate() {
            if w.sign(sigma) != 1 {
                continue;
            }
            let p = group.point_matrix(self.data(), idx);
            let shifted: Vec<Rat> = p
                .iter()
                .zip(a)
                .map(|(row, &ai)| row.iter().zip(a2).fold(ai, |acc, (&m, &v)| acc + v * m))
                .collect();
            rhs += orbit.psi(&shifted) * w.sign(sigma2) as f64;
        }
        Ok((lhs, rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn names_and_normalisation() {
        use SignHom::*;
        assert_eq!(FunctionType::new(E, E).name(), "E+");
        assert_eq!(FunctionType::new(S, E).name(), "E-");
        assert_eq!(FunctionType::new(L, S).name(), "Es-");
        assert_eq!(FunctionType::new(S, L).name(), "El-");
        assert_eq!(FunctionType::new(S, S).name(), "Es+");
        assert_eq!(FunctionType::new(L, L).name(), "El+");
        assert_eq!("(l,e)".parse::<FunctionType>().unwrap().name(), "E-");
        assert_eq!("es-".parse::<FunctionType>().unwrap(), FunctionType::new(E, S));
        assert!("X".parse::<FunctionType>().is_err());
        let names: Vec<_> = FunctionType::all().iter().map(|t| t.name()).collect();
        assert_eq!(names.len(), 10);
    }

    #[test]
    fn availability() {
        let a2 = System::from_name("A2").unwrap();
        let av = FunctionType::available(a2.data());
        assert_eq!(av.iter().map(|t| t.name()).collect::<Vec<_>>(), vec!["C", "S", "E+"]);
        let c2 = System::from_name("C2").unwrap();
        assert_eq!(FunctionType::available(c2.data()).len(), 10);
        let es: FunctionType = "Es+".parse().unwrap();
        assert!(a2.eval_psi(es, &[1, 0], &[r(0, 1), r(0, 1)]).is_err());
    }

    #[test]
    fn a1_cosine() {
        let a1 = System::from_name("A1").unwrap();
        let c = FunctionType::new(SignHom::One, SignHom::One);
        for t in -3..=3 {
            for (p, q) in [(1, 7), (2, 5), (-3, 11)] {
                let y = r(p, q);
                let v = a1.eval_psi_alpha_check(c, &[t], &[y]).unwrap();
                let expect = 2.0 * (TAU * t as f64 * p as f64 / q as f64).cos();
                assert!((v.re - expect).abs() < 1e-13 && v.im.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn trivial_values() {
        let c2 = System::from_name("C2").unwrap();
        let y = [r(1, 3), r(2, 7)];
        for sigma in SignHom::ALL {
            let v = c2.eval_psi(FunctionType::new(SignHom::One, sigma), &[0, 0], &y).unwrap();
            assert!((v.re - c2.even_order(sigma) as f64).abs() < 1e-12);
        }
        let s = FunctionType::new(SignHom::E, SignHom::One);
        assert!(c2.eval_psi(s, &[2, 1], &[r(0, 1), r(0, 1)]).unwrap().norm() < 1e-12);
    }

    #[test]
    fn roots_of_unity_table() {
        let t = RootsOfUnity::new(8);
        assert!((t.get(2) - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((t.get(4) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }
}
