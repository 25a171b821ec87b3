//! Affine Weyl group actions on points and labels, reduction to the
//! fundamental simplex, stabilizer orders and boundary membership.
//!
//! Points are handled as integer numerators over a common scale: a point
//! `x/scale` in ω^∨-coordinates (primal side) or a label `t/M` in
//! ω-coordinates (dual side).

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootdata::Rat;
use crate::system::System;
use crate::weyl::{diagram_order, GeneratorSet, SignHom, Side};

/// Simplex coordinates `(s_0, s_1, ..., s_n)` of a scaled point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCoords {
    pub s: Vec<i64>,
    pub scale: i64,
}

impl SimplexCoords {
    pub fn in_domain(&self) -> bool {
        self.s.iter().all(|&v| v >= 0)
    }

    pub fn zero_mask(&self) -> GeneratorSet {
        let mut m = GeneratorSet::empty();
        for (k, &v) in self.s.iter().enumerate() {
            if v == 0 {
                m.insert(k);
            }
        }
        m
    }

    pub fn as_rationals(&self) -> Vec<Rat> {
        self.s.iter().map(|&v| Rat::new(v, self.scale)).collect()
    }
}

/// Affine map `x ↦ A x + b` on the coordinates of one side, with the word of
/// generators (applied left to right) that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    pub linear: Vec<Vec<i64>>,
    pub translation: Vec<Rat>,
    pub word: Vec<usize>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        let linear = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        Self { linear, translation: vec![Rat::zero(); n], word: Vec::new() }
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.linear
            .iter()
            .zip(&self.translation)
            .map(|(row, b)| row.iter().zip(x).fold(*b, |acc, (&a, &v)| acc + v * a))
            .collect()
    }
}

impl System {
    /// Simplex coordinates of `x/scale`; `s_0 = scale - Σ m_i x_i`.
    pub fn simplex_coords(&self, side: Side, x: &[i64], scale: i64) -> SimplexCoords {
        let f = self.frame(side);
        let mut s = Vec::with_capacity(x.len() + 1);
        s.push(scale - f.marks.iter().zip(x).map(|(m, v)| m * v).sum::<i64>());
        s.extend_from_slice(x);
        SimplexCoords { s, scale }
    }

    /// Applies the affine generator `r_k` to `x/scale` in place.
    pub fn reflect(&self, side: Side, k: usize, x: &mut [i64], scale: i64) {
        let f = self.frame(side);
        let s = if k == 0 {
            scale - f.marks.iter().zip(x.iter()).map(|(m, v)| m * v).sum::<i64>()
        } else {
            x[k - 1]
        };
        for (xi, vi) in x.iter_mut().zip(&f.vecs[k]) {
            *xi -= s * vi;
        }
    }

    /// The affine map of the generator `r_k` on actual (unscaled) coordinates.
    pub fn generator_map(&self, side: Side, k: usize) -> AffineMap {
        let n = self.rank();
        let f = self.frame(side);
        let v = &f.vecs[k];
        let mut a = AffineMap::identity(n);
        if k == 0 {
            // x ↦ x - (1 - m·x) v_0
            for i in 0..n {
                for j in 0..n {
                    a.linear[i][j] += v[i] * f.marks[j];
                }
                a.translation[i] = Rat::from_integer(-v[i]);
            }
        } else {
            for i in 0..n {
                a.linear[i][k - 1] -= v[i];
            }
        }
        a.word.push(k);
        a
    }

    /// Maps `point` into the fundamental simplex by repeatedly reflecting in
    /// the wall with the most negative simplex coordinate (lowest index on
    /// ties). Returns the reduced point and the map that was applied.
    pub fn reduce_to_fundamental(&self, side: Side, point: &[Rat]) -> Result<(Vec<Rat>, AffineMap)> {
        let n = self.rank();
        if point.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: point.len() });
        }
        let scale = point.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
        let mut x: Vec<i64> = point.iter().map(|r| r.numer() * (scale / r.denom())).collect();
        let mut map = AffineMap::identity(n);
        loop {
            let sc = self.simplex_coords(side, &x, scale);
            let Some((k, &v)) = sc.s.iter().enumerate().min_by_key(|&(k, &v)| (v, k)) else {
                break;
            };
            if v >= 0 {
                break;
            }
            self.reflect(side, k, &mut x, scale);
            let g = self.generator_map(side, k);
            map = compose(&g, &map);
        }
        Ok((x.iter().map(|&v| Rat::new(v, scale)).collect(), map))
    }

    /// `h^𝟙`: order of the group generated by the linear parts of the
    /// generators in `mask`, from the Coxeter type of their sub-diagram.
    pub fn stabilizer_order_one(&self, side: Side, mask: GeneratorSet) -> u128 {
        if mask.is_empty() {
            return 1;
        }
        let key = (side, mask.0);
        if let Some(&h) = self.stab_cache.lock().unwrap().get(&key) {
            return h;
        }
        let h = diagram_order(self.data(), side, mask);
        self.stab_cache.lock().unwrap().insert(key, h);
        h
    }

    /// `h^σ` of a point in the fundamental simplex.
    pub fn stabilizer_order(&self, side: Side, x: &[i64], scale: i64, sigma: SignHom) -> Result<u128> {
        let sc = self.simplex_coords(side, x, scale);
        if !sc.in_domain() {
            return Err(Error::PointNotReduced);
        }
        let mask = sc.zero_mask();
        let h = self.stabilizer_order_one(side, mask);
        let neg = self.negative_generators(sigma, side)?;
        Ok(if mask.intersects(neg) { h / 2 } else { h })
    }

    /// `h^σ` of a point of `F ∪ r_σ F^σ`; reflected points use their
    /// preimage under `r_σ`.
    pub fn stabilizer_order_extended(&self, side: Side, x: &[i64], scale: i64, sigma: SignHom) -> Result<u128> {
        let sc = self.simplex_coords(side, x, scale);
        if sc.in_domain() {
            return self.stabilizer_order(side, x, scale, sigma);
        }
        let b = self.reflected_preimage(side, x, scale, sigma)?;
        self.stabilizer_order(side, &b, scale, sigma)
    }

    /// Preimage `r_σ x` of a point of `r_σ F^σ`; errors unless it lies in `F^σ`.
    fn reflected_preimage(&self, side: Side, x: &[i64], scale: i64, sigma: SignHom) -> Result<Vec<i64>> {
        if sigma == SignHom::One {
            return Err(Error::OutsideDomain);
        }
        let k = self.choose_reflection(sigma, side)?;
        let mut b = x.to_vec();
        self.reflect(side, k, &mut b, scale);
        let sc = self.simplex_coords(side, &b, scale);
        let neg = self.negative_generators(sigma, side)?;
        if !sc.in_domain() || sc.zero_mask().intersects(neg) {
            return Err(Error::OutsideDomain);
        }
        Ok(b)
    }

    /// `ε^σ(a) = |W^σ| / h^σ(a)` for `a = x/scale` in ω^∨-coordinates.
    pub fn epsilon(&self, x: &[i64], scale: i64, sigma: SignHom) -> Result<u128> {
        let h = self.stabilizer_order_extended(Side::Primal, x, scale, sigma)?;
        Ok(self.even_order(sigma) / h)
    }

    /// `h_M^{∨σ}(b)` for a label `t` in ω-coordinates.
    pub fn dual_stabilizer_order(&self, t: &[i64], m: i64, sigma: SignHom) -> Result<u128> {
        if m <= 0 {
            return Err(Error::ZeroResolution);
        }
        self.stabilizer_order_extended(Side::Dual, t, m, sigma)
    }

    /// Membership of `x/scale` in `H^{σ̃,σ}` (or its dual analogue).
    pub fn in_boundary_h(
        &self,
        side: Side,
        x: &[i64],
        scale: i64,
        sigma_tilde: SignHom,
        sigma: SignHom,
    ) -> Result<bool> {
        let sc = self.simplex_coords(side, x, scale);
        let rt = self.negative_generators(sigma_tilde, side)?;
        if sc.in_domain() {
            let rts = self.negative_generators(sigma_tilde.mul(sigma), side)?;
            let mask = sc.zero_mask();
            return Ok(mask.intersects(rt) && mask.intersects(rts));
        }
        // r_σ b with b ∈ F^σ has a conjugate stabilizer, so it is a boundary
        // point exactly when b ∈ H^{σ̃}.
        let b = self.reflected_preimage(side, x, scale, sigma)?;
        Ok(self.simplex_coords(side, &b, scale).zero_mask().intersects(rt))
    }

    /// The generator `r_σ` used to build the reflected part of the domain:
    /// the lowest linear index in `R^σ`, or 0 if there is none.
    pub fn choose_reflection(&self, sigma: SignHom, side: Side) -> Result<usize> {
        if sigma == SignHom::One {
            return Err(Error::NoReflection);
        }
        let neg = self.negative_generators(sigma, side)?;
        Ok((1..=self.rank()).find(|&k| neg.contains(k)).unwrap_or(0))
    }
}

/// `outer ∘ inner`.
fn compose(outer: &AffineMap, inner: &AffineMap) -> AffineMap {
    let n = outer.linear.len();
    let linear = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| outer.linear[i][k] * inner.linear[k][j]).sum())
                .collect()
        })
        .collect();
    let translation = outer.apply(&inner.translation);
    let mut word = inner.word.clone();
    word.extend_from_slice(&outer.word);
    AffineMap { linear, translation, word }
}

/// Whether `x/scale` lies in `F^σ` (no zero coordinate in `R^σ`).
pub fn in_f_sigma(sys: &System, side: Side, x: &[i64], scale: i64, sigma: SignHom) -> Result<bool> {
    let sc = sys.simplex_coords(side, x, scale);
    Ok(sc.in_domain() && !sc.zero_mask().intersects(sys.negative_generators(sigma, side)?))
}
