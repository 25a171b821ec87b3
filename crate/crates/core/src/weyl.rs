//! Finite Weyl groups as integer matrices on weight coordinates, and their
//! sign homomorphisms.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{inverse, Rat, RootSystemData};

/// Largest Weyl group that is enumerated element by element.
pub const MAX_GROUP_ORDER: u128 = 1_000_000;

/// One of the four sign homomorphisms `W → {±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignHom {
    One,
    E,
    S,
    L,
}

impl SignHom {
    pub const ALL: [SignHom; 4] = [SignHom::One, SignHom::E, SignHom::S, SignHom::L];

    /// Product in the Klein four-group.
    pub fn mul(self, other: SignHom) -> SignHom {
        use SignHom::*;
        match (self, other) {
            (One, x) | (x, One) => x,
            (a, b) if a == b => One,
            (E, S) | (S, E) => L,
            (E, L) | (L, E) => S,
            _ => E,
        }
    }

    pub fn needs_two_lengths(self) -> bool {
        matches!(self, SignHom::S | SignHom::L)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SignHom::One => "1",
            SignHom::E => "e",
            SignHom::S => "s",
            SignHom::L => "l",
        }
    }
}

impl fmt::Display for SignHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SignHom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "one" | "id" => Ok(SignHom::One),
            "e" | "sigma_e" | "det" => Ok(SignHom::E),
            "s" | "sigma_s" => Ok(SignHom::S),
            "l" | "sigma_l" => Ok(SignHom::L),
            _ => Err(Error::Invalid(format!("unknown sign homomorphism `{s}`"))),
        }
    }
}

/// Which affine group a generator set refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `W^aff` acting on points; generator 0 is the reflection in `⟨x, ξ⟩ = 1`.
    Primal,
    /// `Ŵ^aff` acting on labels; generator 0 is the reflection in `⟨x, η⟩ = 1`.
    Dual,
}

/// Subset of the generators `{r_0, r_1, ..., r_n}`; bit `k` stands for `r_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GeneratorSet(pub u32);

impl GeneratorSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn intersects(&self, other: GeneratorSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|&k| self.contains(k)).collect()
    }
}

/// Element of `W`, stored as the matrix of its action on ω-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `n × n` matrix `L` with `t ↦ L t`.
    pub matrix: Vec<i16>,
    pub sign_e: i8,
    pub sign_s: i8,
    pub sign_l: i8,
}

impl WeylElement {
    pub fn sign(&self, sigma: SignHom) -> i8 {
        match sigma {
            SignHom::One => 1,
            SignHom::E => self.sign_e,
            SignHom::S => self.sign_s,
            SignHom::L => self.sign_l,
        }
    }

    pub fn rank(&self) -> usize {
        (self.matrix.len() as f64).sqrt() as usize
    }

    pub fn apply_label(&self, t: &[i64]) -> Vec<i64> {
        let n = t.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i * n + j] as i64 * t[j]).sum())
            .collect()
    }
}

pub struct WeylGroup {
    n: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i16>, usize>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("rank", &self.n)
            .field("order", &self.elements.len())
            .finish()
    }
}

/// Label matrix of the simple reflection `r_i` (0-based `i`).
fn simple_label_matrix(data: &RootSystemData, i: usize) -> Vec<i64> {
    let n = data.rank();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        m[j * n + j] = 1;
        m[j * n + i] -= data.cartan[i][j];
    }
    m
}

impl WeylGroup {
    /// Breadth-first closure from the identity under right multiplication by
    /// the simple reflections.
    pub fn generate(data: &RootSystemData) -> Result<Self> {
        let order = data.algebra.weyl_order();
        if order > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge(order, MAX_GROUP_ORDER as usize));
        }
        let n = data.rank();
        let short: Vec<bool> = (1..=n).map(|g| data.short_set.contains(&g)).collect();
        let two = data.algebra.two_lengths();
        let gens: Vec<Vec<i64>> = (0..n).map(|i| simple_label_matrix(data, i)).collect();
        let mut ident = vec![0i16; n * n];
        for i in 0..n {
            ident[i * n + i] = 1;
        }
        let mut elements = vec![WeylElement { matrix: ident.clone(), sign_e: 1, sign_s: 1, sign_l: 1 }];
        let mut index = HashMap::with_capacity(order as usize);
        index.insert(ident, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let w = &elements[k];
                let mut prod = vec![0i16; n * n];
                for r in 0..n {
                    for c in 0..n {
                        let v: i64 = (0..n).map(|m| w.matrix[r * n + m] as i64 * g[m * n + c]).sum();
                        prod[r * n + c] = i16::try_from(v).map_err(|_| Error::Overflow)?;
                    }
                }
                if index.contains_key(&prod) {
                    continue;
                }
                let (ds, dl) = match (two, short[i]) {
                    (false, _) => (1, 1),
                    (true, true) => (-1, 1),
                    (true, false) => (1, -1),
                };
                let e = WeylElement {
                    matrix: prod.clone(),
                    sign_e: -w.sign_e,
                    sign_s: w.sign_s * ds,
                    sign_l: w.sign_l * dl,
                };
                index.insert(prod, elements.len());
                queue.push_back(elements.len());
                elements.push(e);
            }
        }
        debug_assert_eq!(elements.len() as u128, order);
        Ok(Self { n, elements, index })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Position of the element with the given label matrix.
    pub fn find(&self, matrix: &[i16]) -> Option<usize> {
        self.index.get(matrix).copied()
    }

    /// Elements on which `sigma` is trivial (the whole group for `One`).
    pub fn even_subgroup(&self, sigma: SignHom) -> Vec<&WeylElement> {
        self.elements.iter().filter(|w| w.sign(sigma) == 1).collect()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let (x, y) = (&self.elements[a].matrix, &self.elements[b].matrix);
        let mut prod = vec![0i16; n * n];
        for r in 0..n {
            for c in 0..n {
                prod[r * n + c] = (0..n).map(|m| x[r * n + m] * y[m * n + c]).sum();
            }
        }
        self.index[&prod]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let n = self.n;
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|r| (0..n).map(|c| Rat::from_integer(self.elements[a].matrix[r * n + c] as i64)).collect())
            .collect();
        let inv = inverse(&m).expect("Weyl elements are invertible");
        let flat: Vec<i16> = inv.iter().flatten().map(|x| x.to_integer() as i16).collect();
        self.index[&flat]
    }

    /// Matrix of `w` acting on points in ω^∨-coordinates, `C (L_w⁻¹)ᵀ C⁻¹`.
    pub fn point_matrix(&self, data: &RootSystemData, a: usize) -> Vec<Vec<i64>> {
        let n = self.n;
        let winv = &self.elements[self.inverse(a)].matrix;
        let cinv = data.cartan_inverse();
        let mut out = vec![vec![0i64; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                let mut s = Rat::zero();
                for k in 0..n {
                    for l in 0..n {
                        s += cinv[l][j] * (data.cartan[i][k] * winv[l * n + k] as i64);
                    }
                }
                *v = s.to_integer();
            }
        }
        out
    }
}

/// Matrix of the reflection in the root `beta` (α-coordinates) acting on
/// ω-coordinates, row-major.
pub fn label_reflection(data: &RootSystemData, beta: &[Rat]) -> Vec<i64> {
    let n = data.rank();
    let len2 = data.norm2_alpha(beta);
    let beta_omega: Vec<Rat> = (0..n)
        .map(|j| (0..n).fold(Rat::zero(), |acc, k| acc + beta[k] * data.cartan[k][j]))
        .collect();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        let coef = beta[j] * data.gram[j][j] / len2;
        for i in 0..n {
            let delta = if i == j { Rat::one() } else { Rat::zero() };
            m[i * n + j] = (delta - coef * beta_omega[i]).to_integer();
        }
    }
    m
}

/// Whether the reflection `ψ(r_0)` (primal) or `ψ̂(r_0^∨)` (dual) is a
/// reflection in a short root.
fn zero_generator_is_short(data: &RootSystemData, side: Side) -> bool {
    if !data.algebra.two_lengths() {
        return false;
    }
    match side {
        // ξ is the highest root, always long.
        Side::Primal => false,
        // η is the coroot of a root of squared length 4/|η|².
        Side::Dual => {
            let len2 = data.norm2_alpha(&data.highest_dual_root());
            Rat::from_integer(4) / len2 < Rat::from_integer(2)
        }
    }
}

/// Value of `sigma` on the reflection in a root of the given length class.
fn sign_on_reflection(sigma: SignHom, short: bool) -> i8 {
    match sigma {
        SignHom::One => 1,
        SignHom::E => -1,
        SignHom::S => if short { -1 } else { 1 },
        SignHom::L => if short { 1 } else { -1 },
    }
}

/// The set `R^σ` (primal) or `R^{∨σ}` (dual) of generators on which `σ∘ψ`
/// (resp. `σ∘ψ̂`) is `-1`.
pub fn negative_generators(data: &RootSystemData, sigma: SignHom, side: Side) -> Result<GeneratorSet> {
    check_available(data, sigma)?;
    let mut set = GeneratorSet::empty();
    if sign_on_reflection(sigma, zero_generator_is_short(data, side)) == -1 {
        set.insert(0);
    }
    for g in 1..=data.rank() {
        if sign_on_reflection(sigma, data.short_set.contains(&g)) == -1 {
            set.insert(g);
        }
    }
    Ok(set)
}

pub fn check_available(data: &RootSystemData, sigma: SignHom) -> Result<()> {
    if sigma.needs_two_lengths() && !data.algebra.two_lengths() {
        return Err(Error::SignHomUndefined(sigma));
    }
    Ok(())
}

/// Linear parts of the generators in `mask`, as label matrices.
pub fn linear_parts(data: &RootSystemData, side: Side, mask: GeneratorSet) -> Vec<Vec<i64>> {
    mask.indices()
        .into_iter()
        .map(|k| {
            if k == 0 {
                let dir = match side {
                    Side::Primal => data.highest_root(),
                    Side::Dual => data.highest_dual_root(),
                };
                label_reflection(data, &dir)
            } else {
                simple_label_matrix(data, k - 1)
            }
        })
        .collect()
}

/// Order of the matrix group generated by `gens`, by closure. Gives up and
/// returns `None` once more than `limit` elements are found.
pub fn closure_order(n: usize, gens: &[Vec<i64>], limit: usize) -> Option<usize> {
    let mut ident = vec![0i64; n * n];
    for i in 0..n {
        ident[i * n + i] = 1;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::from([ident.clone()]);
    let mut frontier = vec![ident];
    while let Some(w) = frontier.pop() {
        for g in gens {
            let mut p = vec![0i64; n * n];
            for r in 0..n {
                for c in 0..n {
                    p[r * n + c] = (0..n).map(|m| w[r * n + m] * g[m * n + c]).sum();
                }
            }
            if seen.insert(p.clone()) {
                if seen.len() > limit {
                    return None;
                }
                frontier.push(p);
            }
        }
    }
    Some(seen.len())
}

/// Order of the reflection group generated by the linear parts of `mask`,
/// read off from the Coxeter type of the induced sub-diagram of the affine
/// Dynkin diagram.
pub fn diagram_order(data: &RootSystemData, side: Side, mask: GeneratorSet) -> u128 {
    let idx = mask.indices();
    // Roots of the generators in α-coordinates; r_0 uses the (co)root direction.
    let roots: Vec<Vec<Rat>> = idx
        .iter()
        .map(|&k| {
            if k == 0 {
                match side {
                    Side::Primal => data.highest_root(),
                    Side::Dual => data.highest_dual_root(),
                }
            } else {
                let mut e = vec![Rat::zero(); data.rank()];
                e[k - 1] = Rat::one();
                e
            }
        })
        .collect();
    let m = roots.len();
    let dot = |a: &[Rat], b: &[Rat]| -> Rat {
        let n = data.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                s += a[i] * b[j] * data.gram[i][j];
            }
        }
        s
    };
    // Bond multiplicity 4cos²θ between generator roots.
    let mut bond = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let d = dot(&roots[i], &roots[j]);
                let v = d * d * 4 / (dot(&roots[i], &roots[i]) * dot(&roots[j], &roots[j]));
                bond[i][j] = v.to_integer();
            }
        }
    }
    let mut seen = vec![false; m];
    let mut order: u128 = 1;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut q = 0;
        while q < comp.len() {
            let v = comp[q];
            q += 1;
            for u in 0..m {
                if !seen[u] && bond[v][u] > 0 {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        order *= component_order(&comp, &bond);
    }
    order
}

fn component_order(comp: &[usize], bond: &[Vec<i64>]) -> u128 {
    let k = comp.len() as u128;
    let fact = |x: u128| (1..=x).product::<u128>();
    let degree = |v: usize| comp.iter().filter(|&&u| bond[v][u] > 0).count();
    let max_bond = comp
        .iter()
        .flat_map(|&a| comp.iter().map(move |&b| bond[a][b]))
        .max()
        .unwrap_or(0);
    match max_bond {
        0 => 2,
        3 => 12,
        2 => {
            let (a, b) = comp
                .iter()
                .flat_map(|&a| comp.iter().map(move |&b| (a, b)))
                .find(|&(a, b)| bond[a][b] == 2)
                .unwrap();
            if k == 4 && degree(a) == 2 && degree(b) == 2 {
                1152
            } else {
                (1u128 << k) * fact(k)
            }
        }
        _ => {
            let Some(&center) = comp.iter().find(|&&v| degree(v) == 3) else {
                return fact(k + 1);
            };
            let mut arms: Vec<usize> = comp
                .iter()
                .filter(|&&u| bond[center][u] > 0)
                .map(|&u| {
                    let (mut prev, mut cur, mut len) = (center, u, 1);
                    loop {
                        let next = comp.iter().find(|&&x| x != prev && bond[cur][x] > 0);
                        match next {
                            Some(&x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => (1u128 << (k - 1)) * fact(k),
                (1, 2, 2) => 51_840,
                (1, 2, 3) => 2_903_040,
                _ => 696_729_600,
            }
        }
    }
}

/// α-coordinates of every root, by closing the simple roots under the
/// simple reflections.
pub fn all_roots(data: &RootSystemData) -> Vec<Vec<i64>> {
    let n = data.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|k| (k == i) as i64).collect())
        .collect();
    while let Some(r) = stack.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for i in 0..n {
            // ⟨r, α_i^∨⟩ = Σ_k r_k C_ki
            let p: i64 = (0..n).map(|k| r[k] * data.cartan[k][i]).sum();
            let mut s = r.clone();
            s[i] -= p;
            stack.push(s);
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Converts a root given in α-coordinates to α^∨-coordinates of its coroot.
pub fn coroot_alpha_check(data: &RootSystemData, root: &[Rat]) -> Vec<Rat> {
    let len2 = data.norm2_alpha(root);
    (0..data.rank())
        .map(|k| root[k] * data.gram[k][k] / len2)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::AlgebraId;

    fn data(s: &str) -> RootSystemData {
        RootSystemData::build(s.parse::<AlgebraId>().unwrap()).unwrap()
    }

    fn det(m: &[i16], n: usize) -> i64 {
        let q: Vec<Vec<Rat>> = (0..n)
            .map(|r| (0..n).map(|c| Rat::from_integer(m[r * n + c] as i64)).collect())
            .collect();
        crate::rootdata::determinant(&q).to_integer()
    }

    #[test]
    fn klein_table() {
        use SignHom::*;
        for a in SignHom::ALL {
            assert_eq!(a.mul(a), One);
            assert_eq!(a.mul(One), a);
            for b in SignHom::ALL {
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
        assert_eq!(E.mul(S), L);
        assert_eq!(E.mul(L), S);
        assert_eq!(S.mul(L), E);
    }

    #[test]
    fn group_orders() {
        for s in ["A1", "A2", "A3", "B3", "C2", "C3", "D4", "G2", "F4", "B4", "E6"] {
            let d = data(s);
            let g = WeylGroup::generate(&d).unwrap();
            assert_eq!(g.order() as u128, d.algebra.weyl_order(), "{s}");
        }
        assert!(matches!(
            WeylGroup::generate(&data("E8")),
            Err(Error::GroupTooLarge(..))
        ));
    }

    #[test]
    fn signs_are_consistent() {
        for s in ["C2", "G2", "B3", "A3", "F4"] {
            let d = data(s);
            let g = WeylGroup::generate(&d).unwrap();
            let n = d.rank();
            for w in g.elements() {
                assert_eq!(w.sign_e as i64, det(&w.matrix, n));
                if d.algebra.two_lengths() {
                    assert_eq!(w.sign_e, w.sign_s * w.sign_l);
                } else {
                    assert_eq!((w.sign_s, w.sign_l), (1, 1));
                }
            }
        }
    }

    #[test]
    fn even_subgroups_are_subgroups() {
        let d = data("C2");
        let g = WeylGroup::generate(&d).unwrap();
        assert_eq!(g.elements()[0].matrix, vec![1, 0, 0, 1]);
        for sigma in [SignHom::E, SignHom::S, SignHom::L] {
            let idx: Vec<usize> = (0..g.order()).filter(|&i| g.elements()[i].sign(sigma) == 1).collect();
            assert_eq!(idx.len(), 4);
            for &a in &idx {
                assert!(idx.contains(&g.inverse(a)));
                for &b in &idx {
                    assert!(idx.contains(&g.product(a, b)));
                }
            }
        }
        assert_eq!(g.even_subgroup(SignHom::One).len(), 8);
        let g2 = WeylGroup::generate(&data("G2")).unwrap();
        assert_eq!(g2.even_subgroup(SignHom::S).len(), 6);
    }

    #[test]
    fn c2_simple_reflection_signs() {
        let d = data("C2");
        let g = WeylGroup::generate(&d).unwrap();
        let r2 = g.find(&[1, 2, 0, -1]).unwrap();
        let w = &g.elements()[r2];
        assert_eq!((w.sign_e, w.sign_s, w.sign_l), (-1, 1, -1));
        assert_eq!(w.apply_label(&[0, 1]), vec![2, -1]);
    }

    #[test]
    fn negative_generator_sets() {
        let c2 = data("C2");
        let get = |s, side| negative_generators(&c2, s, side).unwrap().indices();
        assert_eq!(get(SignHom::One, Side::Primal), Vec::<usize>::new());
        assert_eq!(get(SignHom::E, Side::Primal), vec![0, 1, 2]);
        assert_eq!(get(SignHom::S, Side::Primal), vec![1]);
        assert_eq!(get(SignHom::L, Side::Primal), vec![0, 2]);
        assert_eq!(get(SignHom::S, Side::Dual), vec![0, 1]);
        assert_eq!(get(SignHom::L, Side::Dual), vec![2]);
        assert!(negative_generators(&data("A2"), SignHom::S, Side::Primal).is_err());
    }

    #[test]
    fn negative_generators_partition() {
        for s in ["B3", "B4", "C3", "F4", "G2"] {
            let d = data(s);
            for side in [Side::Primal, Side::Dual] {
                let a = negative_generators(&d, SignHom::S, side).unwrap();
                let b = negative_generators(&d, SignHom::L, side).unwrap();
                let e = negative_generators(&d, SignHom::E, side).unwrap();
                assert!(!a.intersects(b));
                assert_eq!(a.0 | b.0, e.0);
                assert_eq!(e.indices(), (0..=d.rank()).collect::<Vec<_>>());
            }
        }
    }

    /// Marks recovered as the coefficients of the unique maximal root, and
    /// dual marks as those of the maximal root of the transposed system.
    #[test]
    fn marks_match_highest_roots() {
        for s in ["A1", "A4", "B3", "B5", "C2", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let d = data(s);
            let roots = all_roots(&d);
            let best = roots.iter().max_by_key(|r| r.iter().sum::<i64>()).unwrap();
            assert_eq!(best, &d.marks, "{s}");
            // Coroots α^∨ = 2α/|α|² of all roots; the highest has the dual marks.
            let coroots: Vec<Vec<Rat>> = roots
                .iter()
                .map(|r| {
                    let q: Vec<Rat> = r.iter().map(|&x| Rat::from_integer(x)).collect();
                    coroot_alpha_check(&d, &q)
                })
                .collect();
            let best = coroots
                .iter()
                .max_by_key(|r| r.iter().copied().sum::<Rat>())
                .unwrap();
            let dual: Vec<Rat> = d.dual_marks.iter().map(|&m| Rat::from_integer(m)).collect();
            assert_eq!(best, &dual, "{s}");
            let h = d.coxeter_number;
            assert_eq!(1 + d.dual_marks.iter().sum::<i64>(), h, "{s}");
            assert_eq!(roots.len() as i64, h * d.rank() as i64, "{s}");
        }
    }

    #[test]
    fn highest_roots_are_dominant() {
        for s in ["B4", "C3", "D5", "E6", "F4", "G2"] {
            let d = data(s);
            for dir in [d.highest_root(), d.highest_dual_root()] {
                for i in 0..d.rank() {
                    let p = (0..d.rank()).fold(Rat::zero(), |a, k| a + dir[k] * d.cartan[k][i]);
                    assert!(p >= Rat::zero(), "{s}");
                }
            }
        }
    }

    #[test]
    fn connection_indices() {
        let table = [
            ("A1", 2), ("A5", 6), ("B3", 2), ("C5", 2), ("D4", 4), ("D7", 4),
            ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1),
        ];
        for (s, c) in table {
            assert_eq!(data(s).connection_index, c, "{s}");
        }
    }

    #[test]
    fn diagram_order_matches_closure() {
        for s in ["A3", "B3", "C3", "D4", "F4", "G2", "C2"] {
            let d = data(s);
            let n = d.rank();
            for side in [Side::Primal, Side::Dual] {
                for bits in 0u32..(1 << (n + 1)) - 1 {
                    let mask = GeneratorSet(bits);
                    let gens = linear_parts(&d, side, mask);
                    let closed = closure_order(n, &gens, 2_000_000).unwrap();
                    assert_eq!(closed as u128, diagram_order(&d, side, mask), "{s} {bits:b}");
                }
            }
        }
    }

    #[test]
    fn point_matrices_preserve_pairing() {
        let d = data("G2");
        let g = WeylGroup::generate(&d).unwrap();
        let t = [3i64, -2];
        let y = [Rat::new(1, 5), Rat::new(2, 7)];
        let base = d.pairing_omega_check(&t, &y).unwrap();
        for a in 0..g.order() {
            let lt = g.elements()[a].apply_label(&t);
            let p = g.point_matrix(&d, a);
            let py: Vec<Rat> = p
                .iter()
                .map(|row| row.iter().zip(&y).fold(Rat::zero(), |s, (&m, &v)| s + v * m))
                .collect();
            assert_eq!(d.pairing_omega_check(&lt, &py).unwrap(), base);
        }
    }
}
