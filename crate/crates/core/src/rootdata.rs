//! Exact data of the simple root systems.
//!
//! Simple roots follow the Bourbaki numbering for every family except `G2`,
//! where `α1` is the long root and `α2` the short one. Long roots are
//! normalised to squared length 2.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for every lattice coordinate.
pub type Rat = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Lie algebra, identified by its Cartan family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    pub family: Family,
    pub rank: usize,
}

impl AlgebraId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 3,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // Coordinates are packed into 32-bit generator masks and i64 rationals.
        if !ok || rank > 16 {
            return Err(Error::UnsupportedAlgebra(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    /// True for B, C, F4 and G2.
    pub fn two_lengths(&self) -> bool {
        matches!(self.family, Family::B | Family::C | Family::F | Family::G)
    }

    /// Order of the Weyl group, from the standard formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedAlgebra(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        AlgebraId::new(family, rank).map_err(|_| bad())
    }
}

/// Coordinate bases used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Simple roots `α_i`.
    Alpha,
    /// Simple coroots `α_i^∨`.
    AlphaCheck,
    /// Fundamental weights `ω_i` (labels).
    Omega,
    /// Fundamental coweights `ω_i^∨` (points).
    OmegaCheck,
}

#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub algebra: AlgebraId,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// `gram[i][j] = ⟨α_i, α_j⟩`.
    pub gram: Vec<Vec<Rat>>,
    pub marks: Vec<i64>,
    pub dual_marks: Vec<i64>,
    pub coxeter_number: i64,
    pub connection_index: i64,
    /// Generator indices (1-based) of the short simple roots.
    pub short_set: Vec<usize>,
    /// Generator indices (1-based) of the long simple roots.
    pub long_set: Vec<usize>,
    cartan_inv: Vec<Vec<Rat>>,
    /// Unit lower-triangular factor and diagonal of `gram = L D Lᵀ`.
    ldl: (Vec<Vec<Rat>>, Vec<Rat>),
}

fn edges_of(algebra: AlgebraId) -> Vec<(usize, usize)> {
    let n = algebra.rank;
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match algebra.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 attached to 4.
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

/// Squared lengths of the simple roots.
fn lengths_of(algebra: AlgebraId) -> Vec<Rat> {
    let n = algebra.rank;
    let two = Rat::from_integer(2);
    let one = Rat::one();
    match algebra.family {
        Family::A | Family::D | Family::E => vec![two; n],
        Family::B => (0..n).map(|i| if i + 1 < n { two } else { one }).collect(),
        Family::C => (0..n).map(|i| if i + 1 < n { one } else { two }).collect(),
        Family::F => vec![two, two, one, one],
        Family::G => vec![two, Rat::new(2, 3)],
    }
}

fn marks_of(algebra: AlgebraId) -> (Vec<i64>, Vec<i64>) {
    let n = algebra.rank;
    match algebra.family {
        Family::A => (vec![1; n], vec![1; n]),
        Family::B => {
            let b: Vec<i64> = (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect();
            let c: Vec<i64> = (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect();
            (b, c)
        }
        Family::C => {
            let c: Vec<i64> = (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect();
            let b: Vec<i64> = (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect();
            (c, b)
        }
        Family::D => {
            let d: Vec<i64> = (0..n).map(|i| if i == 0 || i + 2 >= n { 1 } else { 2 }).collect();
            (d.clone(), d)
        }
        Family::E => {
            let e = match n {
                6 => vec![1, 2, 2, 3, 2, 1],
                7 => vec![2, 2, 3, 4, 3, 2, 1],
                _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
            };
            (e.clone(), e)
        }
        Family::F => (vec![2, 3, 4, 2], vec![2, 4, 3, 2]),
        Family::G => (vec![2, 3], vec![3, 2]),
    }
}

impl RootSystemData {
    /// Assembles the root data of `algebra`.
    pub fn build(algebra: AlgebraId) -> Result<Self> {
        let algebra = AlgebraId::new(algebra.family, algebra.rank)?;
        let n = algebra.rank;
        let lengths = lengths_of(algebra);
        let mut gram = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            gram[i][i] = lengths[i];
        }
        for (i, j) in edges_of(algebra) {
            // Adjacent roots meet at 120°, 135° or 150°; ⟨α_i, α_j⟩ = -max(|α_i|², |α_j|²)/2.
            let v = -std::cmp::max(lengths[i], lengths[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = gram[i][j] * 2 / gram[j][j];
                debug_assert!(v.is_integer());
                cartan[i][j] = v.to_integer();
            }
        }
        let cq: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(x)).collect())
            .collect();
        let det = determinant(&cq);
        let cartan_inv = inverse(&cq).expect("Cartan matrix is invertible");
        let (marks, dual_marks) = marks_of(algebra);
        let coxeter_number = 1 + marks.iter().sum::<i64>();
        let two = Rat::from_integer(2);
        let (short_set, long_set) = if algebra.two_lengths() {
            (0..n).map(|i| i + 1).partition(|&g| lengths[g - 1] < two)
        } else {
            (Vec::new(), (1..=n).collect())
        };
        let ldl = ldl(&gram);
        Ok(Self {
            algebra,
            cartan,
            gram,
            marks,
            dual_marks,
            coxeter_number,
            connection_index: det.to_integer(),
            short_set,
            long_set,
            cartan_inv,
            ldl,
        })
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    /// `c · C⁻¹`, an integer matrix.
    pub fn scaled_cartan_inverse(&self) -> Vec<Vec<i64>> {
        let c = self.connection_index;
        self.cartan_inv
            .iter()
            .map(|r| r.iter().map(|x| (*x * c).to_integer()).collect())
            .collect()
    }

    /// `⟨b, a⟩` for a label in the ω basis and a point in the α^∨ basis.
    pub fn pairing(&self, label: &[i64], point: &[Rat]) -> Result<Rat> {
        check_len(self.rank(), label.len())?;
        check_len(self.rank(), point.len())?;
        Ok(label
            .iter()
            .zip(point)
            .fold(Rat::zero(), |acc, (&t, &y)| acc + y * t))
    }

    /// `⟨b, a⟩` for a label in the ω basis and a point in the ω^∨ basis.
    pub fn pairing_omega_check(&self, label: &[i64], point: &[Rat]) -> Result<Rat> {
        check_len(self.rank(), point.len())?;
        let alpha_check = self.omega_check_to_alpha_check(point);
        self.pairing(label, &alpha_check)
    }

    pub fn omega_check_to_alpha_check(&self, u: &[Rat]) -> Vec<Rat> {
        mat_vec(&self.cartan_inv, u)
    }

    pub fn alpha_check_to_omega_check(&self, x: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n).fold(Rat::zero(), |acc, k| acc + x[k] * self.cartan[j][k])
            })
            .collect()
    }

    /// Converts coordinates in `basis` to coordinates in the simple-root basis.
    pub fn to_alpha(&self, basis: Basis, coords: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        match basis {
            Basis::Alpha => coords.to_vec(),
            Basis::AlphaCheck => (0..n)
                .map(|k| coords[k] * 2 / self.gram[k][k])
                .collect(),
            Basis::OmegaCheck => {
                let x = self.omega_check_to_alpha_check(coords);
                self.to_alpha(Basis::AlphaCheck, &x)
            }
            Basis::Omega => (0..n)
                .map(|k| {
                    (0..n).fold(Rat::zero(), |acc, i| acc + coords[i] * self.cartan_inv[i][k])
                })
                .collect(),
        }
    }

    /// Euclidean coordinates in the orthonormal frame obtained from the
    /// `L·√D` factor of the Gram matrix (α1 lies along the first axis).
    pub fn orthonormal(&self, basis: Basis, coords: &[Rat]) -> Vec<f64> {
        let x = self.to_alpha(basis, coords);
        let (l, d) = &self.ldl;
        let n = self.rank();
        (0..n)
            .map(|k| {
                let s = (0..n).fold(Rat::zero(), |acc, i| acc + x[i] * l[i][k]);
                ratio_f64(s) * ratio_f64(d[k]).sqrt()
            })
            .collect()
    }

    /// Exact orthonormal coordinates when every pivot of the Gram matrix is
    /// a rational square (e.g. A1, C_n); `None` otherwise.
    pub fn orthonormal_exact(&self, basis: Basis, coords: &[Rat]) -> Option<Vec<Rat>> {
        let x = self.to_alpha(basis, coords);
        let (l, d) = &self.ldl;
        let n = self.rank();
        let roots: Option<Vec<Rat>> = d.iter().map(|&v| rational_sqrt(v)).collect();
        let roots = roots?;
        Some(
            (0..n)
                .map(|k| (0..n).fold(Rat::zero(), |acc, i| acc + x[i] * l[i][k]) * roots[k])
                .collect(),
        )
    }

    /// Squared length of a vector given in the α basis.
    pub fn norm2_alpha(&self, x: &[Rat]) -> Rat {
        let n = self.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                s += x[i] * x[j] * self.gram[i][j];
            }
        }
        s
    }

    /// Highest root `ξ` in the α basis.
    pub fn highest_root(&self) -> Vec<Rat> {
        self.marks.iter().map(|&m| Rat::from_integer(m)).collect()
    }

    /// Highest dual root `η = Σ m_i^∨ α_i^∨`, written in the α basis.
    pub fn highest_dual_root(&self) -> Vec<Rat> {
        let x: Vec<Rat> = self.dual_marks.iter().map(|&m| Rat::from_integer(m)).collect();
        self.to_alpha(Basis::AlphaCheck, &x)
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

pub(crate) fn ratio_f64(r: Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| *r.numer() as f64 / *r.denom() as f64)
}

fn rational_sqrt(r: Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let isqrt = |v: i64| -> Option<i64> {
        let s = (v as f64).sqrt().round() as i64;
        (s.checked_mul(s)? == v).then_some(s)
    };
    Some(Rat::new(isqrt(*r.numer())?, isqrt(*r.denom())?))
}

fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + *a * *b))
        .collect()
}

pub(crate) fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col];
        det *= pivot;
        for r in col + 1..n {
            let f = a[r][col] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

pub(crate) fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let pivot = a[col][col];
        for c in 0..2 * n {
            a[col][c] /= pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn ldl(g: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let n = g.len();
    let mut l = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for j in 0..n {
        let mut dj = g[j][j];
        for k in 0..j {
            dj -= l[j][k] * l[j][k] * d[k];
        }
        d[j] = dj;
        l[j][j] = Rat::one();
        for i in j + 1..n {
            let mut v = g[i][j];
            for k in 0..j {
                v -= l[i][k] * l[j][k] * d[k];
            }
            l[i][j] = v / dj;
        }
    }
    (l, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn data(s: &str) -> RootSystemData {
        RootSystemData::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn c2_basic_data() {
        let d = data("C2");
        assert_eq!(d.marks, vec![2, 1]);
        assert_eq!(d.dual_marks, vec![1, 2]);
        assert_eq!(d.connection_index, 2);
        assert_eq!(d.coxeter_number, 4);
        assert_eq!(d.short_set, vec![1]);
        assert_eq!(d.long_set, vec![2]);
        assert_eq!(d.cartan, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn a1_and_g2() {
        let a1 = data("A1");
        assert_eq!(a1.cartan, vec![vec![2]]);
        assert_eq!(a1.connection_index, 2);
        assert_eq!(a1.coxeter_number, 2);
        let g2 = data("G2");
        assert_eq!(g2.connection_index, 1);
        assert_eq!(g2.coxeter_number, 6);
        assert_eq!(g2.long_set, vec![1]);
        assert_eq!(g2.cartan, vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn parse_rejects_bad_algebras() {
        for s in ["H3", "B2", "D3", "E9", "F3", "G3", "A0", "C", "", "Cx"] {
            assert!(s.parse::<AlgebraId>().is_err(), "{s}");
        }
        assert_eq!("e7".parse::<AlgebraId>().unwrap().to_string(), "E7");
    }

    #[test]
    fn pairing_examples() {
        let d = data("C2");
        assert_eq!(d.pairing(&[1, 0], &[r(1, 4), r(1, 2)]).unwrap(), r(1, 4));
        assert_eq!(d.pairing(&[0, 0], &[r(3, 7), r(1, 2)]).unwrap(), r(0, 1));
        assert_eq!(d.pairing(&[1, 1], &[r(1, 3), r(2, 3)]).unwrap(), r(1, 1));
        assert!(d.pairing(&[1], &[r(1, 3), r(2, 3)]).is_err());
    }

    #[test]
    fn coweight_to_coroot() {
        let a1 = data("A1");
        assert_eq!(a1.omega_check_to_alpha_check(&[r(1, 1)]), vec![r(1, 2)]);
        let c2 = data("C2");
        let x = c2.omega_check_to_alpha_check(&[r(1, 1), r(0, 1)]);
        // ⟨α_i, x⟩ = δ_i1 with x in the α^∨ basis: Σ_k C_ik x_k.
        for i in 0..2 {
            let v = (0..2).fold(Rat::zero(), |a, k| a + x[k] * c2.cartan[i][k]);
            assert_eq!(v, if i == 0 { Rat::one() } else { Rat::zero() });
        }
        assert_eq!(c2.alpha_check_to_omega_check(&x), vec![r(1, 1), r(0, 1)]);
        assert_eq!(c2.omega_check_to_alpha_check(&[r(0, 1), r(0, 1)]), vec![r(0, 1); 2]);
    }

    #[test]
    fn c2_orthonormal_frame() {
        let d = data("C2");
        let p = d
            .orthonormal_exact(Basis::OmegaCheck, &[r(1, 2), r(0, 1)])
            .unwrap();
        assert_eq!(p, vec![r(1, 2), r(1, 2)]);
        let p = d.orthonormal_exact(Basis::OmegaCheck, &[r(0, 1), r(1, 1)]).unwrap();
        assert_eq!(p, vec![r(0, 1), r(1, 1)]);
        let o = d.orthonormal(Basis::OmegaCheck, &[r(0, 1), r(0, 1)]);
        assert_eq!(o, vec![0.0, 0.0]);
        assert!(data("G2").orthonormal_exact(Basis::Omega, &[r(1, 1), r(0, 1)]).is_none());
    }

    #[test]
    fn orthonormal_preserves_gram() {
        for s in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let d = data(s);
            let n = d.rank();
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|i| {
                    let e: Vec<Rat> = (0..n).map(|k| Rat::from_integer((k == i) as i64)).collect();
                    d.orthonormal(Basis::Alpha, &e)
                })
                .collect();
            for i in 0..n {
                for j in 0..n {
                    let dot: f64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum();
                    assert!((dot - ratio_f64(d.gram[i][j])).abs() < 1e-12, "{s}");
                }
            }
        }
    }
}
