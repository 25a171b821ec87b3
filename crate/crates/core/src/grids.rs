//! Finite point sets `F_M^{σ̃,σ}` and label sets `Λ_M^{σ̃,σ}`, with weights
//! and point counts.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbitfn::FunctionType;
use crate::rootdata::{AlgebraId, Family, Rat};
use crate::system::System;
use crate::weyl::{SignHom, Side};

/// Identifies the grid a sample or spectrum vector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridKey {
    pub algebra: AlgebraId,
    pub m: i64,
    pub ftype: FunctionType,
}

/// A point `u/M` of `(1/M)P^∨` in ω^∨-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub u: Vec<i64>,
    pub reflected: bool,
}

impl GridPoint {
    pub fn coords(&self, m: i64) -> Vec<Rat> {
        self.u.iter().map(|&v| Rat::new(v, m)).collect()
    }
}

/// A weight `t` in ω-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightLabel {
    pub t: Vec<i64>,
    pub reflected: bool,
}

#[derive(Debug, Clone)]
pub struct PointSet {
    pub key: GridKey,
    pub points: Vec<GridPoint>,
    /// `ε^σ(a)` for each point.
    pub weights: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct LabelSet {
    pub key: GridKey,
    pub labels: Vec<WeightLabel>,
    /// `h_M^{∨σ}(b)` for each label.
    pub weights: Vec<u64>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl LabelSet {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// All `(x_1..x_n)` with `x_0 + Σ m_i x_i = total`, `x_k ≥ 0`, and `x_k ≥ 1`
/// where `strict[k]`; lexicographic order.
fn simplex_tuples(marks: &[i64], strict: &[bool], total: i64) -> Vec<Vec<i64>> {
    fn rec(marks: &[i64], strict: &[bool], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == marks.len() {
            if left >= strict[0] as i64 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = strict[i + 1] as i64;
        let mut x = lo;
        while x * marks[i] <= left {
            cur.push(x);
            rec(marks, strict, i + 1, left - x * marks[i], cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(marks, strict, 0, total, &mut Vec::new(), &mut out);
    out
}

impl System {
    fn basic_tuples(&self, side: Side, sigma: SignHom, m: i64) -> Result<Vec<Vec<i64>>> {
        if m <= 0 {
            return Err(Error::ZeroResolution);
        }
        let neg = self.negative_generators(sigma, side)?;
        let strict: Vec<bool> = (0..=self.rank()).map(|k| neg.contains(k)).collect();
        Ok(simplex_tuples(&self.frame(side).marks, &strict, m))
    }

    /// `F_M^σ`: points `u/M` with `Σ u_i m_i = M` and `u_k ≥ 1` on `R^σ`.
    pub fn basic_point_set(&self, sigma: SignHom, m: i64) -> Result<Vec<GridPoint>> {
        Ok(self
            .basic_tuples(Side::Primal, sigma, m)?
            .into_iter()
            .map(|u| GridPoint { u, reflected: false })
            .collect())
    }

    /// `Λ_M^σ`: labels with `Σ t_i m_i^∨ = M` and `t_k ≥ 1` on `R^{∨σ}`.
    pub fn basic_label_set(&self, sigma: SignHom, m: i64) -> Result<Vec<WeightLabel>> {
        Ok(self
            .basic_tuples(Side::Dual, sigma, m)?
            .into_iter()
            .map(|t| WeightLabel { t, reflected: false })
            .collect())
    }

    /// `(X^{σ̃} ∪ X^{σ̃σ}) ∪ r_σ(X^{σ̃} ∩ X^{σ̃σ})` on the given side.
    fn composite_tuples(&self, side: Side, ftype: FunctionType, m: i64) -> Result<Vec<(Vec<i64>, bool)>> {
        ftype.check(self.data())?;
        let first = self.basic_tuples(side, ftype.sigma_tilde, m)?;
        if ftype.sigma == SignHom::One {
            return Ok(first.into_iter().map(|u| (u, false)).collect());
        }
        let second = self.basic_tuples(side, ftype.partner(), m)?;
        let second_set: HashSet<&Vec<i64>> = second.iter().collect();
        let mut union: Vec<Vec<i64>> = first.iter().chain(second.iter()).cloned().collect();
        union.sort();
        union.dedup();
        let k = self.choose_reflection(ftype.sigma, side)?;
        let mut seen: HashSet<Vec<i64>> = union.iter().cloned().collect();
        let mut out: Vec<(Vec<i64>, bool)> = union.into_iter().map(|u| (u, false)).collect();
        for u in first.iter().filter(|u| second_set.contains(u)) {
            let mut v = u.clone();
            self.reflect(side, k, &mut v, m);
            if seen.insert(v.clone()) {
                out.push((v, true));
            }
        }
        Ok(out)
    }

    /// `F_M^{σ̃,σ}` with `ε^σ` weights.
    pub fn composite_point_set(&self, ftype: FunctionType, m: i64) -> Result<PointSet> {
        let tuples = self.composite_tuples(Side::Primal, ftype, m)?;
        let mut points = Vec::with_capacity(tuples.len());
        let mut weights = Vec::with_capacity(tuples.len());
        for (u, reflected) in tuples {
            weights.push(self.epsilon(&u, m, ftype.sigma)? as u64);
            points.push(GridPoint { u, reflected });
        }
        Ok(PointSet { key: self.grid_key(ftype, m), points, weights })
    }

    /// `Λ_M^{σ̃,σ}` with `h_M^{∨σ}` weights.
    pub fn composite_label_set(&self, ftype: FunctionType, m: i64) -> Result<LabelSet> {
        let tuples = self.composite_tuples(Side::Dual, ftype, m)?;
        let mut labels = Vec::with_capacity(tuples.len());
        let mut weights = Vec::with_capacity(tuples.len());
        for (t, reflected) in tuples {
            weights.push(self.dual_stabilizer_order(&t, m, ftype.sigma)? as u64);
            labels.push(WeightLabel { t, reflected });
        }
        Ok(LabelSet { key: self.grid_key(ftype, m), labels, weights })
    }

    pub fn grid_key(&self, ftype: FunctionType, m: i64) -> GridKey {
        GridKey { algebra: self.algebra(), m, ftype }
    }

    /// `|F_M^{σ̃,σ}|` by enumeration.
    pub fn count_enumerated(&self, ftype: FunctionType, m: i64) -> Result<usize> {
        Ok(self.composite_tuples(Side::Primal, ftype, m)?.len())
    }

    /// `|Λ_M^{σ̃,σ}|` by enumeration.
    pub fn count_labels_enumerated(&self, ftype: FunctionType, m: i64) -> Result<usize> {
        Ok(self.composite_tuples(Side::Dual, ftype, m)?.len())
    }
}

/// `binom(a, b)`, zero when `a < b` or `a < 0`.
pub fn binom(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
}

fn poly(coeffs: &[i64], k: i64) -> i64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * k + c)
}

/// Closed-form `|F_M^{σ̃,σ}|` for the two-length algebras.
pub fn count_closed_form(algebra: AlgebraId, ftype: FunctionType, m: i64) -> Result<u128> {
    use SignHom::*;
    if m <= 0 {
        return Err(Error::ZeroResolution);
    }
    let none = || Error::NoClosedForm(format!("{ftype} on {algebra}"));
    let pair = (ftype.sigma_tilde, ftype.sigma);
    match algebra.family {
        Family::C => c_family(algebra.rank as i64, pair, m).ok_or_else(none),
        Family::B => {
            let swapped = match pair {
                (One, S) => (One, L),
                (One, L) => (One, S),
                (E, S) => (E, L),
                (E, L) => (E, S),
                (L, E) => (L, E),
                _ => return Err(none()),
            };
            c_family(algebra.rank as i64, swapped, m).ok_or_else(none)
        }
        Family::G => {
            let (k, r) = (m / 6, (m % 6) as usize);
            let table: &[[i64; 3]; 6] = match pair {
                (One, S) | (One, L) => &G2_ONE_S,
                (One, E) => &G2_ONE_E,
                (E, S) | (E, L) => &G2_L_S,
                (L, E) => &G2_L_E,
                _ => return Err(none()),
            };
            Ok(poly(&table[r], k) as u128)
        }
        Family::F => {
            let (k, r) = (m / 12, (m % 12) as usize);
            let table: &[[i64; 5]; 12] = match pair {
                (One, S) | (One, L) => &F4_ONE_S,
                (One, E) => &F4_ONE_E,
                (E, S) | (E, L) => &F4_L_S,
                (L, E) => &F4_L_E,
                _ => return Err(none()),
            };
            Ok(poly(&table[r], k) as u128)
        }
        _ => Err(none()),
    }
}

fn c_family(n: i64, pair: (SignHom, SignHom), m: i64) -> Option<u128> {
    use SignHom::*;
    let (k, odd) = (m / 2, m % 2 == 1);
    let b = |a: i64| binom(a, n);
    Some(match (pair, odd) {
        ((One, S), false) => b(k + n) + b(k + n - 1) + b(k + 1) + b(k),
        ((One, S), true) => 2 * b(k + n) + 2 * b(k + 1),
        ((One, L), false) => b(k + n) + 2 * b(n + k - 1) + b(n + k - 2),
        ((One, L), true) => 2 * b(k + n) + 2 * b(n + k - 1),
        ((E, S), false) => b(n + k - 1) + b(n + k - 2) + b(k) + b(k - 1),
        ((E, S), true) => 2 * b(n + k - 1) + 2 * b(k),
        ((E, L), false) => b(k + 1) + 2 * b(k) + b(k - 1),
        ((E, L), true) => 2 * b(k + 1) + 2 * b(k),
        ((L, E), false) => b(k + 1) + b(k) + b(n + k - 1) + b(n + k - 2),
        ((L, E), true) => 2 * b(n + k - 1) + 2 * b(k + 1),
        _ => return None,
    })
}

// Residue-class polynomials in k, coefficients of k^0, k^1, ...
const G2_ONE_S: [[i64; 3]; 6] = [[1, 3, 6], [1, 5, 6], [2, 7, 6], [4, 9, 6], [5, 11, 6], [7, 13, 6]];
const G2_ONE_E: [[i64; 3]; 6] = [[2, 0, 6], [1, 2, 6], [2, 4, 6], [3, 6, 6], [4, 8, 6], [5, 10, 6]];
const G2_L_S: [[i64; 3]; 6] = [[1, -3, 6], [0, -1, 6], [0, 1, 6], [1, 3, 6], [1, 5, 6], [2, 7, 6]];
const G2_L_E: [[i64; 3]; 6] = [[0, 0, 6], [0, 2, 6], [0, 4, 6], [2, 6, 6], [2, 8, 6], [4, 10, 6]];

const F4_ONE_S: [[i64; 5]; 12] = [
    [1, 8, 25, 36, 36],
    [1, 10, 31, 48, 36],
    [3, 20, 49, 60, 36],
    [4, 25, 61, 72, 36],
    [8, 42, 85, 84, 36],
    [10, 52, 103, 96, 36],
    [18, 78, 133, 108, 36],
    [22, 95, 157, 120, 36],
    [35, 132, 193, 132, 36],
    [43, 158, 223, 144, 36],
    [63, 208, 265, 156, 36],
    [76, 245, 301, 168, 36],
];
const F4_ONE_E: [[i64; 5]; 12] = [
    [2, 0, 52, 0, 36],
    [1, 8, 49, 12, 36],
    [3, 18, 58, 24, 36],
    [4, 26, 61, 36, 36],
    [8, 40, 76, 48, 36],
    [10, 50, 85, 60, 36],
    [17, 70, 106, 72, 36],
    [21, 84, 121, 84, 36],
    [32, 112, 148, 96, 36],
    [39, 132, 169, 108, 36],
    [55, 170, 202, 120, 36],
    [66, 198, 229, 132, 36],
];
const F4_L_S: [[i64; 5]; 12] = [
    [1, -8, 25, -36, 36],
    [0, -3, 13, -24, 36],
    [0, -2, 13, -12, 36],
    [0, 0, 7, 0, 36],
    [0, 2, 13, 12, 36],
    [0, 3, 13, 24, 36],
    [1, 8, 25, 36, 36],
    [1, 10, 31, 48, 36],
    [3, 20, 49, 60, 36],
    [4, 25, 61, 72, 36],
    [8, 42, 85, 84, 36],
    [10, 52, 103, 96, 36],
];
const F4_L_E: [[i64; 5]; 12] = [
    [0, 0, -2, 0, 36],
    [0, -1, -5, 12, 36],
    [0, 0, 4, 24, 36],
    [0, -1, 7, 36, 36],
    [0, 4, 22, 48, 36],
    [0, 5, 31, 60, 36],
    [2, 16, 52, 72, 36],
    [2, 21, 67, 84, 36],
    [6, 40, 94, 96, 36],
    [8, 51, 115, 108, 36],
    [16, 80, 148, 120, 36],
    [20, 99, 175, 132, 36],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Basis;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn ft(s: &str) -> FunctionType {
        s.parse().unwrap()
    }

    fn ortho_points(sys: &System, ps: &[GridPoint], m: i64) -> Vec<(Vec<Rat>, bool)> {
        ps.iter()
            .map(|p| {
                let o = sys.data().orthonormal_exact(Basis::OmegaCheck, &p.coords(m)).unwrap();
                (o, p.reflected)
            })
            .collect()
    }

    #[test]
    fn simplex_tuple_enumeration() {
        let t = simplex_tuples(&[2, 1], &[false, false, false], 4);
        assert_eq!(t.len(), 9);
        assert_eq!(t[0], vec![0, 0]);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(simplex_tuples(&[2, 1], &[true, true, true], 4), vec![vec![1, 1]]);
    }

    #[test]
    fn c2_basic_sets() {
        let c2 = System::from_name("C2").unwrap();
        let f = c2.basic_point_set(SignHom::One, 4).unwrap();
        let mut got: Vec<Vec<Rat>> = ortho_points(&c2, &f, 4).into_iter().map(|p| p.0).collect();
        got.sort();
        let mut want: Vec<Vec<Rat>> = [
            (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 2),
        ]
        .iter()
        .map(|&(a, b)| vec![r(a, 4), r(b, 4)])
        .collect();
        want.sort();
        assert_eq!(got, want);
        let e = c2.basic_point_set(SignHom::E, 4).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(ortho_points(&c2, &e, 4)[0].0, vec![r(1, 4), r(1, 2)]);
        assert!(c2.basic_point_set(SignHom::E, 1).unwrap().is_empty());
        assert_eq!(c2.basic_label_set(SignHom::One, 4).unwrap().len(), 9);
        assert_eq!(c2.basic_label_set(SignHom::E, 4).unwrap().len(), 1);
        assert!(c2.basic_label_set(SignHom::One, 0).is_err());
    }

    #[test]
    fn c2_composite_reflected_points() {
        let c2 = System::from_name("C2").unwrap();
        let ps = c2.composite_point_set(ft("Es+"), 4).unwrap();
        assert_eq!(ps.len(), 13);
        let mut refl: Vec<Vec<Rat>> = ortho_points(&c2, &ps.points, 4)
            .into_iter()
            .filter(|p| p.1)
            .map(|p| p.0)
            .collect();
        refl.sort();
        let mut want = vec![
            vec![r(-1, 4), r(1, 4)],
            vec![r(-1, 4), r(1, 2)],
            vec![r(-1, 4), r(3, 4)],
            vec![r(-1, 2), r(1, 2)],
        ];
        want.sort();
        assert_eq!(refl, want);
        let el = c2.composite_point_set(ft("El-"), 4).unwrap();
        assert_eq!(el.len(), 5);
        let refl: Vec<_> = ortho_points(&c2, &el.points, 4).into_iter().filter(|p| p.1).collect();
        assert_eq!(refl, vec![(vec![r(1, 2), r(1, 4)], true)]);
    }

    #[test]
    fn c2_label_reflections() {
        let c2 = System::from_name("C2").unwrap();
        let ls = c2.composite_label_set(ft("E-"), 4).unwrap();
        assert_eq!(ls.len(), 8);
        let refl: Vec<Vec<Rat>> = ls
            .labels
            .iter()
            .filter(|l| l.reflected)
            .map(|l| {
                let t: Vec<Rat> = l.t.iter().map(|&v| Rat::from_integer(v)).collect();
                c2.data().orthonormal_exact(Basis::Omega, &t).unwrap()
            })
            .collect();
        assert_eq!(refl, vec![vec![r(-1, 2), r(3, 2)]]);
    }

    #[test]
    fn one_sigma_matches_basic() {
        let g2 = System::from_name("G2").unwrap();
        for s in SignHom::ALL {
            let t = FunctionType::new(s, SignHom::One);
            let ps = g2.composite_point_set(t, 7).unwrap();
            assert_eq!(ps.points, g2.basic_point_set(s, 7).unwrap());
        }
    }

    #[test]
    fn epsilon_sums_to_lattice_quotient() {
        for (s, ms) in [("C2", 1..=6), ("G2", 1..=6), ("A2", 1..=6), ("B3", 1..=4)] {
            let sys = System::from_name(s).unwrap();
            let c = sys.data().connection_index as u128;
            for m in ms {
                for sigma in SignHom::ALL {
                    let t = FunctionType::new(SignHom::One, sigma);
                    if t.check(sys.data()).is_err() {
                        continue;
                    }
                    let ps = sys.composite_point_set(t, m).unwrap();
                    let total: u128 = ps.weights.iter().map(|&w| w as u128).sum();
                    assert_eq!(total, c * (m as u128).pow(sys.rank() as u32), "{s} {m} {sigma}");
                }
            }
        }
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(-1, 2), 0);
        assert_eq!(binom(5, 0), 1);
    }

    #[test]
    fn closed_form_examples() {
        let c2: AlgebraId = "C2".parse().unwrap();
        assert_eq!(count_closed_form(c2, ft("Es+"), 4).unwrap(), 13);
        assert_eq!(count_closed_form("G2".parse().unwrap(), ft("Es+"), 3).unwrap(), 4);
        assert_eq!(count_closed_form("F4".parse().unwrap(), ft("Es+"), 6).unwrap(), 18);
        assert!(count_closed_form("A3".parse().unwrap(), ft("E+"), 4).is_err());
        assert!(count_closed_form(c2, ft("C"), 4).is_err());
    }

    #[test]
    fn short_long_swap_counts() {
        let (es, el) = (ft("Es-"), ft("El-"));
        for name in ["C2", "B3", "C3", "B4", "C4", "B5", "C5"] {
            let sys = System::from_name(name).unwrap();
            let rank2 = sys.rank() == 2;
            let mut all_equal = true;
            for m in 1..=16 {
                let (a, b) = (sys.count_enumerated(es, m).unwrap(), sys.count_enumerated(el, m).unwrap());
                all_equal &= a == b;
            }
            assert_eq!(all_equal, rank2, "{name}");
        }
    }
}
