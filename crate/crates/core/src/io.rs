//! File formats and command implementations behind the `weylorbit` binary.
//!
//! Exact quantities are written as `"p/q"` strings, sample values as JSON
//! numbers (`[re, im]` pairs for complex data).

use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grids::{count_closed_form, GridKey};
use crate::orbitfn::FunctionType;
use crate::rootdata::{Basis, Rat};
use crate::system::System;
use crate::transforms::{DiscreteTransform, Kernel, SampleSet, SpectrumCoeffs};
use crate::weyl::Side;

pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Rat::from_str(s).map_err(|_| bad()),
    }
}

fn rats_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

fn strings_to_rats(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| rat_from_str(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RootInfo {
    pub algebra: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub gram: Vec<Vec<String>>,
    pub marks: Vec<i64>,
    pub dual_marks: Vec<i64>,
    pub coxeter_number: i64,
    pub connection_index: i64,
    pub short_roots: Vec<usize>,
    pub long_roots: Vec<usize>,
    pub weyl_order: String,
}

pub fn root_info(sys: &System) -> RootInfo {
    let d = sys.data();
    RootInfo {
        algebra: d.algebra.to_string(),
        rank: d.rank(),
        cartan: d.cartan.clone(),
        gram: d.gram.iter().map(|r| rats_to_strings(r)).collect(),
        marks: d.marks.clone(),
        dual_marks: d.dual_marks.clone(),
        coxeter_number: d.coxeter_number,
        connection_index: d.connection_index,
        short_roots: d.short_set.clone(),
        long_roots: d.long_set.clone(),
        weyl_order: d.algebra.weyl_order().to_string(),
    }
}

/// Grid identification embedded in every data file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridHeader {
    pub algebra: String,
    #[serde(rename = "M")]
    pub m: i64,
    #[serde(rename = "type")]
    pub ftype: String,
}

impl GridHeader {
    pub fn of(key: &GridKey) -> Self {
        Self { algebra: key.algebra.to_string(), m: key.m, ftype: key.ftype.name().to_string() }
    }

    pub fn key(&self) -> Result<GridKey> {
        Ok(GridKey { algebra: self.algebra.parse()?, m: self.m, ftype: self.ftype.parse()? })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    /// ω^∨-coordinates.
    pub coords: Vec<String>,
    pub orthonormal: Vec<f64>,
    /// `ε^σ(a)`.
    pub weight: u64,
    pub reflected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelRecord {
    /// ω-coordinates.
    pub coords: Vec<i64>,
    pub orthonormal: Vec<f64>,
    /// `h_M^{∨σ}(b)`.
    pub weight: u64,
    pub reflected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointsFile {
    #[serde(flatten)]
    pub header: GridHeader,
    pub points: Vec<PointRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelsFile {
    #[serde(flatten)]
    pub header: GridHeader,
    pub labels: Vec<LabelRecord>,
}

pub fn points_file(sys: &System, ftype: FunctionType, m: i64) -> Result<PointsFile> {
    let ps = sys.composite_point_set(ftype, m)?;
    let points = ps
        .points
        .iter()
        .zip(&ps.weights)
        .map(|(p, &w)| {
            let c = p.coords(m);
            PointRecord {
                orthonormal: sys.data().orthonormal(Basis::OmegaCheck, &c),
                coords: rats_to_strings(&c),
                weight: w,
                reflected: p.reflected,
            }
        })
        .collect();
    Ok(PointsFile { header: GridHeader::of(&ps.key), points })
}

pub fn labels_file(sys: &System, ftype: FunctionType, m: i64) -> Result<LabelsFile> {
    let ls = sys.composite_label_set(ftype, m)?;
    let labels = ls
        .labels
        .iter()
        .zip(&ls.weights)
        .map(|(l, &w)| {
            let q: Vec<Rat> = l.t.iter().map(|&v| Rat::from_integer(v)).collect();
            LabelRecord {
                coords: l.t.clone(),
                orthonormal: sys.data().orthonormal(Basis::Omega, &q),
                weight: w,
                reflected: l.reflected,
            }
        })
        .collect();
    Ok(LabelsFile { header: GridHeader::of(&ls.key), labels })
}

pub fn points_csv(file: &PointsFile) -> Result<String> {
    let n = file.points.first().map_or(0, |p| p.coords.len());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut head: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    head.extend((1..=n).map(|i| format!("x{i}")));
    head.extend(["weight".into(), "reflected".into()]);
    w.write_record(&head)?;
    for p in &file.points {
        let mut row = p.coords.clone();
        row.extend(p.orthonormal.iter().map(|x| x.to_string()));
        row.extend([p.weight.to_string(), p.reflected.to_string()]);
        w.write_record(&row)?;
    }
    finish_csv(w)
}

pub fn labels_csv(file: &LabelsFile) -> Result<String> {
    let n = file.labels.first().map_or(0, |p| p.coords.len());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut head: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    head.extend((1..=n).map(|i| format!("x{i}")));
    head.extend(["weight".into(), "reflected".into()]);
    w.write_record(&head)?;
    for l in &file.labels {
        let mut row: Vec<String> = l.coords.iter().map(|v| v.to_string()).collect();
        row.extend(l.orthonormal.iter().map(|x| x.to_string()));
        row.extend([l.weight.to_string(), l.reflected.to_string()]);
        w.write_record(&row)?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

/// Values per point or coefficients per label: real numbers for the
/// Hartley kernel, `[re, im]` pairs for the complex one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    Real(Vec<f64>),
    Complex(Vec<[f64; 2]>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Real(v) => v.len(),
            Values::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn from_complex(v: &[Complex64]) -> Self {
        Values::Complex(v.iter().map(|c| [c.re, c.im]).collect())
    }

    pub fn as_complex(&self) -> Vec<Complex64> {
        match self {
            Values::Real(v) => v.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            Values::Complex(v) => v.iter().map(|&[a, b]| Complex64::new(a, b)).collect(),
        }
    }

    pub fn as_real(&self) -> Result<Vec<f64>> {
        match self {
            Values::Real(v) => Ok(v.clone()),
            Values::Complex(v) if v.iter().all(|c| c[1] == 0.0) => Ok(v.iter().map(|c| c[0]).collect()),
            Values::Complex(_) => Err(Error::Invalid("Hartley data must be real".into())),
        }
    }
}

/// Samples on the grid points, in grid order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleFile {
    #[serde(flatten)]
    pub header: GridHeader,
    pub kernel: Kernel,
    /// ω^∨-coordinates of each point.
    pub points: Vec<Vec<String>>,
    pub values: Values,
}

/// Expansion coefficients, one per label, in label order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    #[serde(flatten)]
    pub header: GridHeader,
    pub kernel: Kernel,
    pub labels: Vec<Vec<i64>>,
    pub coeffs: Values,
}

/// Values at arbitrary points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationFile {
    pub kernel: Kernel,
    pub points: Vec<Vec<String>>,
    pub values: Values,
}

fn grid_points(t: &DiscreteTransform) -> Vec<Vec<String>> {
    let m = t.key().m;
    t.points.points.iter().map(|p| rats_to_strings(&p.coords(m))).collect()
}

/// Builds a sample file from values aligned with the grid of `t`.
pub fn sample_file(t: &DiscreteTransform, kernel: Kernel, values: Values) -> SampleFile {
    SampleFile { header: GridHeader::of(&t.key()), kernel, points: grid_points(t), values }
}

fn transform_for(header: &GridHeader) -> Result<(System, DiscreteTransform)> {
    let key = header.key()?;
    if key.m <= 0 {
        return Err(Error::ZeroResolution);
    }
    let sys = System::new(key.algebra)?;
    let t = DiscreteTransform::new(&sys, key.ftype, key.m)?;
    Ok((sys, t))
}

/// Forward transform of a sample file, after checking that its point list
/// is exactly the regenerated grid.
pub fn analyze(samples: &SampleFile) -> Result<SpectrumFile> {
    let (_, t) = transform_for(&samples.header)?;
    let expected = grid_points(&t);
    if samples.points.len() != expected.len() || samples.values.len() != expected.len() {
        return Err(Error::GridMismatch(format!(
            "expected {} points, file has {} points and {} values",
            expected.len(),
            samples.points.len(),
            samples.values.len()
        )));
    }
    for (i, (got, want)) in samples.points.iter().zip(&expected).enumerate() {
        if strings_to_rats(got)? != strings_to_rats(want)? {
            return Err(Error::GridMismatch(format!("point {i} differs from the generated grid")));
        }
    }
    let labels = t.labels.labels.iter().map(|l| l.t.clone()).collect();
    let coeffs = match samples.kernel {
        Kernel::Complex => {
            let f = SampleSet { key: t.key(), values: samples.values.as_complex() };
            Values::from_complex(&t.forward(&f)?.coeffs)
        }
        Kernel::Hartley => {
            let g = SampleSet { key: t.key(), values: samples.values.as_real()? };
            Values::Real(t.forward_hartley(&g)?.coeffs)
        }
    };
    Ok(SpectrumFile { header: samples.header.clone(), kernel: samples.kernel, labels, coeffs })
}

/// Evaluates the interpolant of a spectrum at the grid points.
pub fn synthesize(spectrum: &SpectrumFile) -> Result<SampleFile> {
    let (_, t) = transform_for(&spectrum.header)?;
    check_labels(&t, spectrum)?;
    let values = match spectrum.kernel {
        Kernel::Complex => {
            let k = SpectrumCoeffs { key: t.key(), coeffs: spectrum.coeffs.as_complex() };
            Values::from_complex(&t.interpolate_grid(&k)?)
        }
        Kernel::Hartley => {
            let l = SpectrumCoeffs { key: t.key(), coeffs: spectrum.coeffs.as_real()? };
            Values::Real(t.interpolate_hartley_grid(&l)?)
        }
    };
    Ok(SampleFile { header: spectrum.header.clone(), kernel: spectrum.kernel, points: grid_points(&t), values })
}

/// Evaluates the interpolant of a spectrum at arbitrary points given in
/// ω^∨-coordinates.
pub fn synthesize_at(spectrum: &SpectrumFile, points: &[Vec<String>]) -> Result<EvaluationFile> {
    let (_, t) = transform_for(&spectrum.header)?;
    check_labels(&t, spectrum)?;
    let pts: Vec<Vec<Rat>> = points.iter().map(|p| strings_to_rats(p)).collect::<Result<_>>()?;
    let values = match spectrum.kernel {
        Kernel::Complex => {
            let k = SpectrumCoeffs { key: t.key(), coeffs: spectrum.coeffs.as_complex() };
            let v: Vec<Complex64> = pts.iter().map(|y| t.interpolate(&k, y)).collect::<Result<_>>()?;
            Values::from_complex(&v)
        }
        Kernel::Hartley => {
            let l = SpectrumCoeffs { key: t.key(), coeffs: spectrum.coeffs.as_real()? };
            Values::Real(pts.iter().map(|y| t.interpolate_hartley(&l, y)).collect::<Result<_>>()?)
        }
    };
    Ok(EvaluationFile { kernel: spectrum.kernel, points: points.to_vec(), values })
}

fn check_labels(t: &DiscreteTransform, spectrum: &SpectrumFile) -> Result<()> {
    let ok = spectrum.labels.len() == t.len()
        && spectrum.coeffs.len() == t.len()
        && spectrum.labels.iter().zip(&t.labels.labels).all(|(a, b)| *a == b.t);
    if !ok {
        return Err(Error::GridMismatch("label list differs from the generated label set".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub algebra: String,
    #[serde(rename = "M")]
    pub m: i64,
    #[serde(rename = "type")]
    pub ftype: String,
    pub kernel: Kernel,
    pub card_points: usize,
    pub card_labels: usize,
    pub max_off_diag: f64,
    pub off_diag_ratio: f64,
    pub max_diag_rel_err: f64,
    pub diag_tol: f64,
    pub parseval_rel_err: f64,
    pub parseval_tol: f64,
    pub pass: bool,
}

/// Tolerances used by `verify`. The diagonal and Parseval bounds are
/// widened by [`rounding_scale`] for large groups.
pub const OFF_DIAG_TOL: f64 = 1e-9;
pub const DIAG_TOL: f64 = 1e-12;
pub const PARSEVAL_TOL: f64 = 1e-11;

/// `max(1, √|W^σ| / 8)`: each `Ψ_b(a)` sums `|W^σ|` unit phases, so rounding
/// grows with the group. Equals 1 up to `|W^σ| = 64`.
pub fn rounding_scale(even_order: u128) -> f64 {
    ((even_order as f64).sqrt() / 8.0).max(1.0)
}

/// Checks cardinality, the Gram matrix and Parseval's identity on a
/// deterministic pseudo-random sample vector.
pub fn verify(sys: &System, ftype: FunctionType, m: i64, kernel: Kernel, budget: u128) -> Result<VerifyReport> {
    if m <= 0 {
        return Err(Error::ZeroResolution);
    }
    ftype.check(sys.data())?;
    let card_labels = sys.count_labels_enumerated(ftype, m)?;
    let t = DiscreteTransform::new(sys, ftype, m)?;
    let rep = t.gram(kernel, budget)?;
    // Weyl-sequence test vector, reproducible without a seeded generator.
    let golden = 0.618_033_988_749_894_9_f64;
    let wave = |i: usize, s: f64| ((i as f64 + 1.0) * golden * s).fract() - 0.5;
    let parseval = match kernel {
        Kernel::Complex => {
            let values = (0..t.len()).map(|i| Complex64::new(wave(i, 1.0), wave(i, 2.0))).collect();
            t.parseval(&SampleSet { key: t.key(), values })?
        }
        Kernel::Hartley => {
            let values = (0..t.len()).map(|i| wave(i, 1.0)).collect();
            t.parseval_hartley(&SampleSet { key: t.key(), values })?
        }
    };
    let off = if rep.max_diag > 0.0 { rep.max_off_diag / rep.max_diag } else { rep.max_off_diag };
    let scale = rounding_scale(sys.even_order(ftype.sigma));
    let pass = t.len() == card_labels
        && off <= OFF_DIAG_TOL
        && rep.max_diag_rel_err <= DIAG_TOL * scale
        && parseval.rel_err <= PARSEVAL_TOL * scale;
    Ok(VerifyReport {
        algebra: sys.algebra().to_string(),
        m,
        ftype: ftype.name().to_string(),
        kernel,
        card_points: t.len(),
        card_labels,
        max_off_diag: rep.max_off_diag,
        off_diag_ratio: off,
        max_diag_rel_err: rep.max_diag_rel_err,
        diag_tol: DIAG_TOL * scale,
        parseval_rel_err: parseval.rel_err,
        parseval_tol: PARSEVAL_TOL * scale,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountReport {
    pub algebra: String,
    #[serde(rename = "M")]
    pub m: i64,
    #[serde(rename = "type")]
    pub ftype: String,
    pub enumerated: usize,
    pub labels: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<u128>,
    pub consistent: bool,
}

pub fn count(sys: &System, ftype: FunctionType, m: i64, closed_form: bool) -> Result<CountReport> {
    let enumerated = sys.count_enumerated(ftype, m)?;
    let labels = sys.count_labels_enumerated(ftype, m)?;
    let cf = if closed_form { Some(count_closed_form(sys.algebra(), ftype, m)?) } else { None };
    Ok(CountReport {
        algebra: sys.algebra().to_string(),
        m,
        ftype: ftype.name().to_string(),
        enumerated,
        labels,
        closed_form: cf,
        consistent: enumerated == labels && cf.is_none_or(|c| c == enumerated as u128),
    })
}

/// One sample of a raster over the composite fundamental domain.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterRow {
    pub point: Vec<Rat>,
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub imag: f64,
    pub inside: bool,
    pub boundary: bool,
}

/// Samples `Ψ_b` (or `ζ_b`) on an `R × R` lattice covering the bounding box
/// of `F ∪ r_σF` in ω^∨-coordinates. Rank 2 only.
pub fn raster(sys: &System, ftype: FunctionType, t: &[i64], kernel: Kernel, res: usize) -> Result<Vec<RasterRow>> {
    if sys.rank() != 2 {
        return Err(Error::Invalid(format!("raster output needs a rank-2 algebra, got {}", sys.algebra())));
    }
    if res < 2 {
        return Err(Error::Invalid("raster resolution must be at least 2".into()));
    }
    let orbit = sys.label_orbit(ftype, t)?;
    let marks = &sys.data().marks;
    // Vertices of F scaled by l = lcm(marks): 0, (l/m_1)ω_1^∨, (l/m_2)ω_2^∨.
    let l = num_integer::lcm(marks[0], marks[1]);
    let mut verts: Vec<Vec<i64>> = vec![vec![0, 0], vec![l / marks[0], 0], vec![0, l / marks[1]]];
    let k = if ftype.sigma == crate::weyl::SignHom::One { None } else { Some(sys.choose_reflection(ftype.sigma, Side::Primal)?) };
    if let Some(k) = k {
        let images: Vec<Vec<i64>> = verts
            .iter()
            .map(|v| {
                let mut w = v.clone();
                sys.reflect(Side::Primal, k, &mut w, l);
                w
            })
            .collect();
        verts.extend(images);
    }
    let lo: Vec<i64> = (0..2).map(|i| verts.iter().map(|v| v[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..2).map(|i| verts.iter().map(|v| v[i]).max().unwrap()).collect();
    let steps = (res - 1) as i64;
    let scale = l * steps;
    let mut rows = Vec::with_capacity(res * res);
    for j in 0..res as i64 {
        for i in 0..res as i64 {
            let u = [lo[0] * steps + i * (hi[0] - lo[0]), lo[1] * steps + j * (hi[1] - lo[1])];
            let point: Vec<Rat> = u.iter().map(|&v| Rat::new(v, scale)).collect();
            let sc = sys.simplex_coords(Side::Primal, &u, scale);
            let inside = sc.in_domain()
                || k.is_some() && crate::affine::in_f_sigma(sys, Side::Primal, &reflected(sys, k.unwrap(), &u, scale), scale, ftype.sigma)?;
            let boundary = inside && sys.in_boundary_h(Side::Primal, &u, scale, ftype.sigma_tilde, ftype.sigma)?;
            let (value, imag) = match kernel {
                Kernel::Complex => {
                    let v = orbit.psi(&point);
                    (v.re, v.im)
                }
                Kernel::Hartley => (orbit.zeta(&point), 0.0),
            };
            let o = sys.data().orthonormal(Basis::OmegaCheck, &point);
            rows.push(RasterRow { point, x: o[0], y: o[1], value, imag, inside, boundary });
        }
    }
    Ok(rows)
}

fn reflected(sys: &System, k: usize, u: &[i64], scale: i64) -> Vec<i64> {
    let mut v = u.to_vec();
    sys.reflect(Side::Primal, k, &mut v, scale);
    v
}

pub fn raster_csv(rows: &[RasterRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u1", "u2", "x", "y", "value", "imag", "inside", "boundary"])?;
    for r in rows {
        w.write_record([
            rat_to_string(&r.point[0]),
            rat_to_string(&r.point[1]),
            r.x.to_string(),
            r.y.to_string(),
            r.value.to_string(),
            r.imag.to_string(),
            (r.inside as u8).to_string(),
            (r.boundary as u8).to_string(),
        ])?;
    }
    finish_csv(w)
}
