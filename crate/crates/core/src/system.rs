use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootdata::{AlgebraId, RootSystemData};
use crate::weyl::{negative_generators, GeneratorSet, SignHom, Side, WeylGroup};

/// Integer data of one affine group: marks and the reflection vectors
/// `v_k` such that `r_k x = x - s_k(x) v_k`, where `s_k` is the k-th simplex
/// coordinate.
#[derive(Debug, Clone)]
pub(crate) struct AffineFrame {
    pub marks: Vec<i64>,
    pub vecs: Vec<Vec<i64>>,
}

/// A root system together with lazily built group data and caches.
pub struct System {
    data: RootSystemData,
    group: OnceLock<std::result::Result<WeylGroup, u128>>,
    pub(crate) primal: AffineFrame,
    pub(crate) dual: AffineFrame,
    pub(crate) stab_cache: Mutex<HashMap<(Side, u32), u128>>,
}

impl std::fmt::Debug for System {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("System").field("algebra", &self.data.algebra).finish()
    }
}

impl System {
    pub fn new(algebra: AlgebraId) -> Result<Self> {
        let data = RootSystemData::build(algebra)?;
        let n = data.rank();
        // Primal points live in ω^∨-coordinates: r_i subtracts y_i times
        // column i of C, r_0 adds s_0 ξ^∨ with ξ^∨ in ω^∨-coordinates.
        let mut pv: Vec<Vec<i64>> = vec![vec![0; n]; n + 1];
        for i in 0..n {
            pv[i + 1] = (0..n).map(|j| data.cartan[j][i]).collect();
        }
        let xi = data.highest_root();
        pv[0] = (0..n)
            .map(|i| {
                let v = (0..n).fold(num_rational::Ratio::from_integer(0), |acc, k| acc + xi[k] * data.gram[k][i]);
                -v.to_integer()
            })
            .collect();
        // Dual labels live in ω-coordinates: r_i subtracts t_i times row i
        // of C, r_0^∨ adds s_0 β with β = 2η/⟨η,η⟩ in ω-coordinates.
        let mut dv: Vec<Vec<i64>> = vec![vec![0; n]; n + 1];
        dv[1..].clone_from_slice(&data.cartan);
        let eta = data.highest_dual_root();
        let eta2 = data.norm2_alpha(&eta);
        dv[0] = (0..n)
            .map(|j| {
                let v = (0..n).fold(num_rational::Ratio::from_integer(0), |acc, k| acc + eta[k] * data.cartan[k][j]);
                let b = v * 2 / eta2;
                debug_assert!(b.is_integer());
                -b.to_integer()
            })
            .collect();
        Ok(Self {
            primal: AffineFrame { marks: data.marks.clone(), vecs: pv },
            dual: AffineFrame { marks: data.dual_marks.clone(), vecs: dv },
            data,
            group: OnceLock::new(),
            stab_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(name.parse()?)
    }

    pub fn data(&self) -> &RootSystemData {
        &self.data
    }

    pub fn algebra(&self) -> AlgebraId {
        self.data.algebra
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    /// The Weyl group, generated on first use.
    pub fn group(&self) -> Result<&WeylGroup> {
        match self.group.get_or_init(|| {
            WeylGroup::generate(&self.data).map_err(|_| self.data.algebra.weyl_order())
        }) {
            Ok(g) => Ok(g),
            Err(order) => Err(Error::GroupTooLarge(*order, crate::weyl::MAX_GROUP_ORDER as usize)),
        }
    }

    /// `|W^σ|`, from the order formula (no enumeration).
    pub fn even_order(&self, sigma: SignHom) -> u128 {
        let w = self.data.algebra.weyl_order();
        if sigma == SignHom::One { w } else { w / 2 }
    }

    pub fn negative_generators(&self, sigma: SignHom, side: Side) -> Result<GeneratorSet> {
        negative_generators(&self.data, sigma, side)
    }

    pub(crate) fn frame(&self, side: Side) -> &AffineFrame {
        match side {
            Side::Primal => &self.primal,
            Side::Dual => &self.dual,
        }
    }
}
