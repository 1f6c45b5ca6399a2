//! Seeded generators for isotropic, anisotropic, unidirectional, separable
//! and plane-wave fields, plus the anisotropy function β and its Fourier
//! coefficients.

use crate::error::{Error, Result};
use crate::fft;
use crate::grid::RealGrid;
use crate::riesz::wavenumber;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// `(master, stream)` pair; one stream per trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(master: u64, stream: u64) -> Self {
        Self { master, stream }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RandomTag {
    Random,
}

/// Angle in radians, or drawn uniformly per realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AngleChoice {
    Fixed(f64),
    Random(RandomTag),
}

impl AngleChoice {
    pub const RANDOM: Self = AngleChoice::Random(RandomTag::Random);

    fn draw(self, rng: &mut ChaCha8Rng, upper: f64) -> f64 {
        match self {
            AngleChoice::Fixed(a) => a,
            AngleChoice::Random(_) => rng.random::<f64>() * upper,
        }
    }
}

/// Scalar shifted-Matérn parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Matern {
    pub variance: f64,
    pub smoothness: f64,
    pub range: f64,
    pub lambda0: f64,
}

impl Matern {
    pub const DEFAULT: Self = Self { variance: 1.0, smoothness: 1.5, range: 20.0, lambda0: 0.1 };

    fn validate(&self) -> Result<()> {
        if !(self.smoothness > 0.0) || !(self.range > 0.0) {
            return Err(Error::InvalidParameter("Matérn smoothness and range must be positive".into()));
        }
        if !(self.variance > 0.0) {
            return Err(Error::InvalidParameter("Matérn variance must be positive".into()));
        }
        if !(0.0..0.5).contains(&self.lambda0) {
            return Err(Error::InvalidParameter(format!("center frequency {} outside [0, 1/2)", self.lambda0)));
        }
        Ok(())
    }

    /// Density as a function of the (possibly D-weighted) radial frequency.
    pub fn radial(&self, radius: f64) -> f64 {
        let (nu, rho) = (self.smoothness, self.range);
        let pr = PI * rho;
        let num = self.variance * libm::tgamma(nu + 1.0) * (4.0 * nu).powf(nu);
        let den = PI * libm::tgamma(nu) * pr.powf(2.0 * nu);
        let q = 4.0 * nu / (pr * pr) + (radius - self.lambda0).powi(2);
        num / den * q.powf(-(nu + 1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PsdSpec {
    ShiftedMatern {
        #[serde(flatten)]
        matern: Matern,
        d: [[f64; 2]; 2],
    },
    Unidirectional1d {
        #[serde(flatten)]
        matern: Matern,
        direction: AngleChoice,
        /// Optional `[low, high]` frequency support; components outside it
        /// get zero amplitude.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        band: Option<[f64; 2]>,
    },
    PlaneWave {
        amplitude: f64,
        lambda0: f64,
        phase: AngleChoice,
        direction: AngleChoice,
    },
    SeparableMatern {
        first: Matern,
        second: Matern,
    },
}

impl PsdSpec {
    pub fn isotropic() -> Self {
        PsdSpec::ShiftedMatern { matern: Matern::DEFAULT, d: [[1.0, 0.0], [0.0, 1.0]] }
    }

    pub fn anisotropic() -> Self {
        let s = 1.0 / 0.2775f64.sqrt();
        PsdSpec::ShiftedMatern { matern: Matern::DEFAULT, d: [[s, 0.85 * s], [0.85 * s, s]] }
    }

    pub fn unidirectional(direction: AngleChoice) -> Self {
        PsdSpec::Unidirectional1d { matern: Matern::DEFAULT, direction, band: None }
    }

    /// Unidirectional field restricted to `[lambda_l, 1/2)`.
    pub fn unidirectional_bandpass(direction: AngleChoice, lambda_l: f64) -> Self {
        PsdSpec::Unidirectional1d { matern: Matern::DEFAULT, direction, band: Some([lambda_l, 0.5]) }
    }

    /// Product of two centered (low-pass) Matérn factors of range 5.
    pub fn separable() -> Self {
        let m = Matern { variance: 1.0, smoothness: 1.5, range: 5.0, lambda0: 0.0 };
        PsdSpec::SeparableMatern { first: m, second: m }
    }

    pub fn plane_wave(lambda0: f64) -> Self {
        PsdSpec::PlaneWave { amplitude: 1.0, lambda0, phase: AngleChoice::RANDOM, direction: AngleChoice::RANDOM }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PsdSpec::ShiftedMatern { matern, d } => {
                matern.validate()?;
                let det = d[0][0] * d[1][1] - d[0][1] * d[1][0];
                if (d[0][1] - d[1][0]).abs() > 1e-12 || !(d[0][0] > 0.0) || (det - 1.0).abs() > 1e-9 {
                    return Err(Error::InvalidParameter(format!(
                        "D must be symmetric positive definite with unit determinant (det = {det})"
                    )));
                }
                Ok(())
            }
            PsdSpec::Unidirectional1d { matern, band, .. } => {
                matern.validate()?;
                if let Some([lo, hi]) = band {
                    if !(*lo >= 0.0 && lo < hi && *hi <= 0.5) {
                        return Err(Error::InvalidParameter(format!("band [{lo}, {hi}] is not inside [0, 1/2]")));
                    }
                }
                Ok(())
            }
            PsdSpec::PlaneWave { amplitude, lambda0, .. } => {
                if !(*lambda0 > 0.0 && *lambda0 < 0.5) || !amplitude.is_finite() {
                    return Err(Error::InvalidParameter(format!("plane-wave frequency {lambda0} outside (0, 1/2)")));
                }
                Ok(())
            }
            PsdSpec::SeparableMatern { first, second } => {
                first.validate()?;
                second.validate()
            }
        }
    }
}

/// Shifted-Matérn density at frequency vector `lambda` (cycles/sample).
/// For the 1D variants the first component is the frequency along the line.
pub fn matern_psd(spec: &PsdSpec, lambda: [f64; 2]) -> Result<f64> {
    spec.validate()?;
    Ok(psd_unchecked(spec, lambda))
}

fn psd_unchecked(spec: &PsdSpec, lambda: [f64; 2]) -> f64 {
    match spec {
        PsdSpec::ShiftedMatern { matern, d } => {
            let [a, b] = lambda;
            let q = d[0][0] * a * a + 2.0 * d[0][1] * a * b + d[1][1] * b * b;
            matern.radial(q.max(0.0).sqrt())
        }
        PsdSpec::Unidirectional1d { matern, .. } => matern.radial(lambda[0]),
        PsdSpec::SeparableMatern { first, second } => first.radial(lambda[0].abs()) * second.radial(lambda[1].abs()),
        PsdSpec::PlaneWave { .. } => 0.0,
    }
}

/// Dispatches to the generator for the spec's variant.
pub fn generate(spec: &PsdSpec, n: usize, seed: Seed) -> Result<RealGrid> {
    match spec {
        PsdSpec::ShiftedMatern { .. } | PsdSpec::SeparableMatern { .. } => gen_field_2d(spec, n, seed),
        PsdSpec::Unidirectional1d { .. } => gen_unidirectional(spec, n, seed),
        PsdSpec::PlaneWave { amplitude, lambda0, phase, direction } => {
            gen_plane_wave(*amplitude, *lambda0, n, seed, *phase, *direction)
        }
    }
}

fn check_side(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddSide(n));
    }
    Ok(())
}

/// Filters complex white noise by `sqrt(S)` on the DFT lattice, so the
/// output variance is `Σ_bins S / n²`.
pub fn gen_field_2d(spec: &PsdSpec, n: usize, seed: Seed) -> Result<RealGrid> {
    check_side(n)?;
    spec.validate()?;
    if !matches!(spec, PsdSpec::ShiftedMatern { .. } | PsdSpec::SeparableMatern { .. }) {
        return Err(Error::InvalidParameter("2D synthesis needs a Matérn or separable spec".into()));
    }
    let mut rng = seed.rng();
    let noise: Vec<f64> = (0..n * n).map(|_| rng.sample(StandardNormal)).collect();
    let mut spec_buf = fft::forward_real(&noise, n);
    for r in 0..n {
        for c in 0..n {
            let (k1, k2) = wavenumber(fft::signed_bin(c, n), fft::signed_bin(r, n), n);
            let lam = [k1 / (2.0 * PI), k2 / (2.0 * PI)];
            spec_buf[r * n + c] *= psd_unchecked(spec, lam).sqrt();
        }
    }
    fft::inverse(&mut spec_buf, n);
    let scale = spec_buf.iter().fold(0.0f64, |m, v| m.max(v.re.abs()));
    let residue = spec_buf.iter().fold(0.0f64, |m, v| m.max(v.im.abs()));
    if residue > 1e-10 * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::ImaginaryResidue { residue: residue / scale, tolerance: 1e-10 });
    }
    RealGrid::new(n, spec_buf.iter().map(|v| v.re).collect())
}

/// Oversampling of the 1D evaluation table (samples per unit of `nᵀx`).
const TABLE_OVERSAMPLE: usize = 16;
const INTERP_TAPS: usize = 6;

/// `f(x) = Σ_m A_m cos(2π λ_m nᵀx + φ_m)` on a comb of `4n` frequencies
/// `λ_m = (m + 1/2) / (8n)`. The 1D profile is tabulated on a fine grid by
/// one FFT and read back with 6-point Lagrange interpolation; the result is
/// a function of `nᵀx` only.
pub fn gen_unidirectional(spec: &PsdSpec, n: usize, seed: Seed) -> Result<RealGrid> {
    check_side(n)?;
    spec.validate()?;
    let PsdSpec::Unidirectional1d { matern, direction, band } = spec else {
        return Err(Error::InvalidParameter("unidirectional synthesis needs a unidirectional spec".into()));
    };
    let mut rng = seed.rng();
    let nu = direction.draw(&mut rng, PI);
    let m_count = 4 * n;
    let dlam = 0.5 / m_count as f64;
    let [lo, hi] = band.unwrap_or([0.0, 0.5]);
    let phases: Vec<f64> = (0..m_count).map(|_| rng.random::<f64>() * 2.0 * PI).collect();

    let (sn, cs) = nu.sin_cos();
    let max = (n - 1) as f64;
    let corners = [0.0, cs * max, sn * max, (cs + sn) * max];
    let t0 = corners.iter().cloned().fold(f64::INFINITY, f64::min) - 4.0;
    let t1 = corners.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 4.0;
    let h = 1.0 / TABLE_OVERSAMPLE as f64;
    // Table length P = 2M/h makes e^{2πi λ_m j h} = e^{iπj/P} e^{2πi m j/P}.
    let p = 2 * m_count * TABLE_OVERSAMPLE;
    debug_assert!(((t1 - t0) / h) < p as f64);

    let mut buf = vec![Complex64::new(0.0, 0.0); p];
    for (m, &phi) in phases.iter().enumerate() {
        let lam = (m as f64 + 0.5) * dlam;
        if lam < lo || lam > hi {
            continue;
        }
        let amp = (2.0 * matern.radial(lam) * dlam).sqrt();
        // Conjugated so that a forward transform yields the positive-sign sum.
        buf[m] = Complex64::from_polar(amp, -(2.0 * PI * lam * t0 + phi));
    }
    fft::forward_1d(&mut buf);
    let len = ((t1 - t0) / h).ceil() as usize + 1;
    let table: Vec<f64> = (0..len)
        .map(|j| (buf[j].conj() * Complex64::from_polar(1.0, PI * j as f64 / p as f64)).re)
        .collect();

    let mut data = Vec::with_capacity(n * n);
    for x2 in 0..n {
        for x1 in 0..n {
            let t = cs * x1 as f64 + sn * x2 as f64;
            data.push(lagrange(&table, (t - t0) / h));
        }
    }
    RealGrid::new(n, data)
}

/// 6-point Lagrange interpolation at fractional index `pos`.
fn lagrange(table: &[f64], pos: f64) -> f64 {
    let base = pos.floor();
    let u = pos - base;
    let j = base as usize;
    if u == 0.0 {
        return table[j];
    }
    let start = j + 1 - INTERP_TAPS / 2;
    let mut acc = 0.0;
    for a in 0..INTERP_TAPS {
        let xa = a as f64 - (INTERP_TAPS / 2 - 1) as f64;
        let mut w = 1.0;
        for b in 0..INTERP_TAPS {
            if a != b {
                let xb = b as f64 - (INTERP_TAPS / 2 - 1) as f64;
                w *= (u - xb) / (xa - xb);
            }
        }
        acc += w * table[start + a];
    }
    acc
}

/// `A cos(2π λ0 nᵀx + φ)` with phase and direction fixed or drawn.
pub fn gen_plane_wave(
    amplitude: f64,
    lambda0: f64,
    n: usize,
    seed: Seed,
    phase: AngleChoice,
    direction: AngleChoice,
) -> Result<RealGrid> {
    check_side(n)?;
    PsdSpec::PlaneWave { amplitude, lambda0, phase, direction }.validate()?;
    let mut rng = seed.rng();
    let phi = phase.draw(&mut rng, 2.0 * PI);
    let nu = direction.draw(&mut rng, PI);
    let (s, c) = nu.sin_cos();
    let w = 2.0 * PI * lambda0;
    RealGrid::from_fn(n, |x2, x1| amplitude * (w * (c * x1 as f64 + s * x2 as f64) + phi).cos())
}

/// Sign choice in the numerator of β.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaBranch {
    Rotation,
    Reflection,
}

/// Anisotropy function β(σ1, α, κ), rotation branch.
pub fn beta_fn(sigma1: f64, alpha: f64, kappa: f64) -> f64 {
    beta_fn_branch(sigma1, alpha, kappa, BetaBranch::Rotation)
}

pub fn beta_fn_branch(sigma1: f64, alpha: f64, kappa: f64, branch: BetaBranch) -> f64 {
    let (sk, ck) = kappa.sin_cos();
    let (sa, ca) = alpha.sin_cos();
    let sign = match branch {
        BetaBranch::Rotation => -1.0,
        BetaBranch::Reflection => 1.0,
    };
    let a = (sigma1 * sigma1 * ck * ck + sk * sk).sqrt();
    let b = (ck * ck + sk * sk / (sigma1 * sigma1)).sqrt();
    (ca * ck * a + sign * sa * sk * b) / (sigma1 * ck * ck + sk * sk / sigma1)
}

/// Nodes used for the periodic trapezoid rule in [`beta_coeffs`].
pub const BETA_NODES: usize = 8192;

/// `a_l = (1/2π) ∫ β(κ) e^{-ilκ} dκ` for `l = -L..=L` (index `l + L`).
pub fn beta_coeffs(sigma1: f64, alpha: f64, l_max: usize) -> Result<Vec<Complex64>> {
    if !(sigma1 > 0.0) {
        return Err(Error::InvalidParameter(format!("sigma1 must be positive, got {sigma1}")));
    }
    let values: Vec<f64> =
        (0..BETA_NODES).map(|j| beta_fn(sigma1, alpha, 2.0 * PI * j as f64 / BETA_NODES as f64)).collect();
    let l_max = l_max as i64;
    Ok((-l_max..=l_max)
        .map(|l| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &v) in values.iter().enumerate() {
                let kappa = 2.0 * PI * j as f64 / BETA_NODES as f64;
                acc += v * Complex64::from_polar(1.0, -(l as f64) * kappa);
            }
            acc / BETA_NODES as f64
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::unidirectionality;
    use crate::riesz::monogenic;
    use crate::stats::cov_zero;

    #[test]
    fn defaults_are_valid() {
        for s in [PsdSpec::isotropic(), PsdSpec::anisotropic(), PsdSpec::separable(), PsdSpec::plane_wave(0.2)] {
            s.validate().unwrap();
        }
        if let PsdSpec::ShiftedMatern { d, .. } = PsdSpec::anisotropic() {
            assert!((d[0][0] * d[1][1] - d[0][1] * d[1][0] - 1.0).abs() < 1e-9);
        }
        let bad = PsdSpec::ShiftedMatern { matern: Matern::DEFAULT, d: [[2.0, 0.0], [0.0, 2.0]] };
        assert!(bad.validate().is_err());
        let bad = PsdSpec::ShiftedMatern { matern: Matern { range: 0.0, ..Matern::DEFAULT }, d: [[1.0, 0.0], [0.0, 1.0]] };
        assert!(matern_psd(&bad, [0.1, 0.0]).is_err());
    }

    #[test]
    fn psd_shape() {
        let iso = PsdSpec::isotropic();
        let a = matern_psd(&iso, [0.06, 0.08]).unwrap();
        let b = matern_psd(&iso, [0.1, 0.0]).unwrap();
        assert!((a - b).abs() < 1e-12 * b);
        for ang in [0.0, 0.4, 1.3, 2.9] {
            let peak = matern_psd(&iso, [0.1 * f64::cos(ang), 0.1 * f64::sin(ang)]).unwrap();
            for r in [0.0, 0.05, 0.09, 0.11, 0.3] {
                assert!(matern_psd(&iso, [r * f64::cos(ang), r * f64::sin(ang)]).unwrap() < peak);
            }
        }
        // Regression pin for S(λ0)/S(0) with the default parameters.
        let ratio = b / matern_psd(&iso, [0.0, 0.0]).unwrap();
        assert!((ratio - PEAK_TO_DC).abs() < 1e-9 * PEAK_TO_DC, "ratio {ratio}");
    }

    // [4ν/(πρ)² + λ0²]^{ν+1} / [4ν/(πρ)²]^{ν+1} with ν = 1.5, ρ = 20, λ0 = 0.1.
    const PEAK_TO_DC: f64 = 158.174_050_880_035_5;

    #[test]
    fn deterministic_streams() {
        let s = PsdSpec::isotropic();
        let a = generate(&s, 32, Seed::new(9, 1)).unwrap();
        assert_eq!(a, generate(&s, 32, Seed::new(9, 1)).unwrap());
        assert_ne!(a, generate(&s, 32, Seed::new(9, 2)).unwrap());
        let u = PsdSpec::unidirectional(AngleChoice::RANDOM);
        assert_eq!(generate(&u, 32, Seed::new(1, 5)).unwrap(), generate(&u, 32, Seed::new(1, 5)).unwrap());
    }

    #[test]
    fn field_variance_matches_discrete_integral() {
        let n = 64;
        let spec = PsdSpec::isotropic();
        let mut expected = 0.0;
        for r in 0..n {
            for c in 0..n {
                let (k1, k2) = wavenumber(fft::signed_bin(c, n), fft::signed_bin(r, n), n);
                expected += psd_unchecked(&spec, [k1 / (2.0 * PI), k2 / (2.0 * PI)]);
            }
        }
        expected /= (n * n) as f64;
        let mut total = 0.0;
        for s in 0..100 {
            total += gen_field_2d(&spec, n, Seed::new(3, s)).unwrap().mean_square();
        }
        let est = total / 100.0;
        assert!((est / expected - 1.0).abs() < 0.1, "{est} vs {expected}");
    }

    #[test]
    fn axis_aligned_unidirectional_fields() {
        let g = gen_unidirectional(&PsdSpec::unidirectional(AngleChoice::Fixed(0.0)), 32, Seed::new(4, 0)).unwrap();
        for r in 1..32 {
            for c in 0..32 {
                assert!((g.get(r, c) - g.get(0, c)).abs() < 1e-10);
            }
        }
        let g =
            gen_unidirectional(&PsdSpec::unidirectional(AngleChoice::Fixed(PI / 2.0)), 32, Seed::new(4, 1)).unwrap();
        for r in 0..32 {
            for c in 1..32 {
                assert!((g.get(r, c) - g.get(r, 0)).abs() < 1e-10);
            }
        }
    }

    /// Direct evaluation of the comb sum, used as the oracle for the table.
    #[test]
    fn table_matches_direct_comb_sum() {
        let n = 16;
        let nu = 0.63;
        let spec = PsdSpec::unidirectional(AngleChoice::Fixed(nu));
        let seed = Seed::new(11, 3);
        let g = gen_unidirectional(&spec, n, seed).unwrap();
        let mut rng = seed.rng();
        let m_count = 4 * n;
        let dlam = 0.5 / m_count as f64;
        let phases: Vec<f64> = (0..m_count).map(|_| rng.random::<f64>() * 2.0 * PI).collect();
        let scale = g.mean_square().sqrt();
        for x2 in 0..n {
            for x1 in 0..n {
                let t = nu.cos() * x1 as f64 + nu.sin() * x2 as f64;
                let direct: f64 = phases
                    .iter()
                    .enumerate()
                    .map(|(m, phi)| {
                        let lam = (m as f64 + 0.5) * dlam;
                        (2.0 * Matern::DEFAULT.radial(lam) * dlam).sqrt() * (2.0 * PI * lam * t + phi).cos()
                    })
                    .sum();
                assert!((direct - g.get(x2, x1)).abs() < 1e-7 * scale);
            }
        }
    }

    #[test]
    fn unidirectional_covariance_ratios() {
        let n = 128;
        for (k, nu) in [0.3f64, 1.0, 2.2].into_iter().enumerate() {
            let g = gen_unidirectional(&PsdSpec::unidirectional(AngleChoice::Fixed(nu)), n, Seed::new(5, k as u64))
                .unwrap();
            let c = cov_zero(&monogenic(&g).unwrap());
            assert!((c.rgg / c.rff - nu.cos().powi(2)).abs() < 0.05);
            assert!((c.rhh / c.rff - nu.sin().powi(2)).abs() < 0.05);
        }
    }

    #[test]
    fn unidirectional_direction_at_thirty_degrees() {
        let spec = PsdSpec::unidirectional(AngleChoice::Fixed(30f64.to_radians()));
        for s in 0..50 {
            let d = unidirectionality(&monogenic(&generate(&spec, 64, Seed::new(6, s)).unwrap()).unwrap()).unwrap();
            assert!((d.angle.unwrap().to_degrees() - 30.0).abs() < 2.0);
        }
    }

    #[test]
    fn plane_wave_variance() {
        for s in 0..10 {
            let g = gen_plane_wave(2.0, 0.17, 64, Seed::new(8, s), AngleChoice::RANDOM, AngleChoice::RANDOM).unwrap();
            assert!((g.variance() / 2.0 - 1.0).abs() < 0.02);
        }
    }

    #[test]
    fn beta_examples() {
        for k in 0..16 {
            let kappa = k as f64 * 0.4;
            assert!((beta_fn(1.0, 0.0, kappa) - kappa.cos()).abs() < 1e-15);
        }
        assert!((beta_fn(0.5, 0.0, 0.0) - 1.0).abs() < 1e-15);
        let a = beta_coeffs(1.0, 0.0, 6).unwrap();
        for (i, c) in a.iter().enumerate() {
            let l = i as i64 - 6;
            let expect = if l.abs() == 1 { 0.5 } else { 0.0 };
            assert!((c - Complex64::new(expect, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn anisotropic_beta_needs_many_coefficients() {
        for alpha in [0.0, PI / 2.0] {
            let a = beta_coeffs(0.5, alpha, 20).unwrap();
            let big = a.iter().filter(|c| c.norm() > 1e-3).count();
            assert!(big >= 6, "only {big} coefficients above 1e-3");
        }
    }
}
