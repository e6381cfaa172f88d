//! From polynomial roots to physical eigenstates: complex wave numbers,
//! Riemann-sheet classification, sheet-fixed Newton refinement, and the
//! one-channel reference systems.
//!
//! A discrete eigenvalue `z` determines, per channel, a wave number
//! through `cos K± = −(z ± t')/t_h`; the two solutions `±K` of each
//! relation are the two branches of the square root in the dispersion
//! equation. Writing the channel Green's function as
//! `G± = 1/(i·t_h·sin K±)` makes the branch choice explicit: the
//! branch-resolved residual
//!
//! ```text
//! R = z − E_d − (g²/2)·(G₊ + G₋)
//! ```
//!
//! vanishes for exactly one of the four `(±K₊, ±K₋)` combinations, and
//! the sign pattern of `(Im K₊, Im K₋)` names the Riemann sheet:
//! `(+,+) → I` (bound), `(−,+) → II`, `(+,−) → III`, `(−,−) → IV`
//! (fully resonant).
//!
//! Polynomial roots are only seeds: near-degenerate pairs (the QBIC and
//! its time reversal differ by ~3e−7 in the canonical demo) leave the
//! polynomial ill-conditioned there, while the transcendental residual
//! is steep and Newton on it recovers full double precision.

use num_complex::Complex;
use num_traits::{Float, FloatConst, One, Zero};
use thiserror::Error;

use crate::model::{band_edges, Channel, ModelParams};
use crate::poly::{dispersion_polynomial, Poly};
use crate::roots::{find_roots, RootsError};

/// Riemann sheet of the two-sheeted × two-sheeted energy surface,
/// labeled by the signs of `(Im K₊, Im K₋)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SheetId {
    I,
    II,
    III,
    IV,
}

impl SheetId {
    pub fn from_imag_signs(im_k_plus_positive: bool, im_k_minus_positive: bool) -> Self {
        match (im_k_plus_positive, im_k_minus_positive) {
            (true, true) => SheetId::I,
            (false, true) => SheetId::II,
            (true, false) => SheetId::III,
            (false, false) => SheetId::IV,
        }
    }

    /// Required sign of `Im K` on this sheet for the given channel.
    pub fn im_sign(self, channel: Channel) -> f64 {
        match (self, channel) {
            (SheetId::I, _) => 1.0,
            (SheetId::II, Channel::Plus) => -1.0,
            (SheetId::II, Channel::Minus) => 1.0,
            (SheetId::III, Channel::Plus) => 1.0,
            (SheetId::III, Channel::Minus) => -1.0,
            (SheetId::IV, _) => -1.0,
        }
    }

    /// Sheet-letter used in state labels: I→P, II→Q, III→R, IV→S.
    pub fn letter(self) -> char {
        match self {
            SheetId::I => 'P',
            SheetId::II => 'Q',
            SheetId::III => 'R',
            SheetId::IV => 'S',
        }
    }
}

impl std::fmt::Display for SheetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SheetId::I => write!(f, "I"),
            SheetId::II => write!(f, "II"),
            SheetId::III => write!(f, "III"),
            SheetId::IV => write!(f, "IV"),
        }
    }
}

/// Physical character of a discrete eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    /// Sheet I, real energy: a true bound state.
    Bound,
    /// `Im E < 0`: decays in time, grows in space along at least one
    /// channel.
    Resonant,
    /// `Im E > 0`: the time reversal of a resonant state.
    Antiresonant,
    /// Real energy on a sheet other than I (virtual/antibound states
    /// and parameter-tuned bound states in continuum).
    RealEmbedded,
}

impl std::fmt::Display for StateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StateKind::Bound => write!(f, "bound"),
            StateKind::Resonant => write!(f, "resonant"),
            StateKind::Antiresonant => write!(f, "antiresonant"),
            StateKind::RealEmbedded => write!(f, "real_embedded"),
        }
    }
}

/// One discrete solution of the dispersion equation.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenstate<T> {
    pub energy: Complex<T>,
    pub k_plus: Complex<T>,
    pub k_minus: Complex<T>,
    pub sheet: SheetId,
    /// `|R|` of the branch-resolved dispersion residual at `energy`
    /// (polynomial backward error for edge-degenerate states).
    pub residual: T,
    /// Presentation label (`P1`, `Q2`, …) assigned by `solve_spectrum`;
    /// never used in computation.
    pub label: Option<String>,
    pub kind: StateKind,
    /// Energy within the band-edge window where `sin K → 0` makes the
    /// branch-resolved residual unusable; sheet assignment unreliable.
    pub edge_degenerate: bool,
}

impl<T: Float> Eigenstate<T> {
    pub fn k(&self, channel: Channel) -> Complex<T> {
        match channel {
            Channel::Plus => self.k_plus,
            Channel::Minus => self.k_minus,
        }
    }
}

/// Bound state of one decoupled reference channel.
#[derive(Debug, Clone, PartialEq)]
pub struct OneChannelState<T> {
    pub energy: T,
    /// Pure imaginary below the band, `π + iκ` above it.
    pub k: Complex<T>,
    pub channel: Channel,
}

/// Tolerances of the spectral pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    /// Relative step tolerance of the polynomial root finder.
    pub root_tol: T,
    pub root_max_iter: usize,
    /// Acceptance threshold for branch classification at the seed stage
    /// (polynomial error amplified by the stiff Green's function near
    /// van Hove edges can reach ~1e−3).
    pub classify_tol: T,
    /// Target residual of the sheet-fixed Newton refinement.
    pub refine_tol: T,
    /// Final accepted residual of a refined state.
    pub final_residual_tol: T,
    /// `|Im z|` below this is treated as exactly real.
    pub real_axis_tol: T,
    /// Energy distance to a band edge below which classification falls
    /// back to the polynomial residual and the state is flagged.
    pub edge_window: T,
    /// `|Im K|` below this makes the sheet undecidable (on-cut).
    pub cut_tol: T,
}

impl<T: Float> Default for SolverConfig<T> {
    fn default() -> Self {
        let t = |x: f64| T::from(x).unwrap();
        SolverConfig {
            root_tol: t(1e-13),
            root_max_iter: 200,
            classify_tol: t(1e-2),
            refine_tol: t(1e-12),
            final_residual_tol: t(1e-10),
            real_axis_tol: t(1e-12),
            edge_window: t(1e-8),
            cut_tol: t(1e-13),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum SpectrumError<T: Float + std::fmt::Debug + std::fmt::Display + 'static> {
    #[error("dot coupling must satisfy g > 0, got {0}")]
    CouplingNotPositive(T),
    #[error("polynomial root finding failed: {0}")]
    Roots(#[from] RootsError<T>),
    #[error(
        "root {z} is spurious or misconverged: branch residuals {residuals:?} all exceed {tol}"
    )]
    SpuriousRoot {
        z: Complex<T>,
        residuals: [T; 4],
        tol: T,
    },
    #[error("state at {z} lies on a branch cut (|Im K{channel}| < {cut_tol}); sheet assignment is manual")]
    OnCut {
        z: Complex<T>,
        channel: Channel,
        cut_tol: T,
    },
    #[error("refinement left sheet {sheet} near {z} (Im K sign crossed zero); returning last iterate")]
    NearCut {
        z: Complex<T>,
        sheet: SheetId,
        last: Box<Eigenstate<T>>,
    },
    #[error("refinement diverged from seed {seed} to {z}")]
    RefineDiverged { seed: Complex<T>, z: Complex<T> },
    #[error("expected 12 discrete eigenvalues, found {found}")]
    WrongCount { found: usize },
    #[error("no state labeled {0} in the solved spectrum")]
    UnknownLabel(String),
}

impl<T: Float> Eigenstate<T> {
    fn kind_of(energy: Complex<T>, sheet: SheetId, real_axis_tol: T) -> StateKind {
        if energy.im.abs() < real_axis_tol {
            if sheet == SheetId::I {
                StateKind::Bound
            } else {
                StateKind::RealEmbedded
            }
        } else if energy.im < T::zero() {
            StateKind::Resonant
        } else {
            StateKind::Antiresonant
        }
    }
}

/// Numerically stable complex arccosine: `acos(w)` via `asin` of a
/// small argument, accurate down to the branch points `w = ±1` where
/// the naive formula loses half the digits.
fn acos_stable<T: Float + FloatConst>(w: Complex<T>) -> Complex<T> {
    let half = T::from(0.5).unwrap();
    if w.re >= T::zero() {
        let s = ((Complex::<T>::one() - w) * half).sqrt();
        s.asin() * T::from(2.0).unwrap()
    } else {
        let s = ((Complex::<T>::one() + w) * half).sqrt();
        Complex::from(T::PI()) - s.asin() * T::from(2.0).unwrap()
    }
}

/// Map `Re K` into `(−π, π]`, leaving `Im K` untouched.
fn reduce_re<T: Float + FloatConst>(k: Complex<T>) -> Complex<T> {
    let two_pi = T::PI() + T::PI();
    let mut re = k.re;
    while re > T::PI() {
        re = re - two_pi;
    }
    while re <= -T::PI() {
        re = re + two_pi;
    }
    Complex::new(re, k.im)
}

/// Both wave-number branches of one channel: the two solutions `±K` of
/// `cos K = −(z ± t')/t_h`, reduced to `Re K ∈ (−π, π]`.
pub fn channel_wave_numbers<T: Float + FloatConst>(
    params: &ModelParams<T>,
    channel: Channel,
    z: Complex<T>,
) -> [Complex<T>; 2] {
    let w = -(z + Complex::from(channel.sign::<T>() * params.tp_h)) / params.t_h;
    let k = acos_stable(w);
    [reduce_re(k), reduce_re(-k)]
}

/// Wave-number candidates of both channels.
pub fn wave_numbers<T: Float + FloatConst>(
    params: &ModelParams<T>,
    z: Complex<T>,
) -> ([Complex<T>; 2], [Complex<T>; 2]) {
    (
        channel_wave_numbers(params, Channel::Plus, z),
        channel_wave_numbers(params, Channel::Minus, z),
    )
}

/// Channel Green's function `G = 1/(i·t_h·sin K)` for a committed
/// branch.
fn green<T: Float + FloatConst>(t_h: T, k: Complex<T>) -> Complex<T> {
    (Complex::i() * t_h * k.sin()).inv()
}

/// Branch-resolved dispersion residual `z − E_d − (g²/2)(G₊ + G₋)`.
pub fn dispersion_residual<T: Float + FloatConst>(
    params: &ModelParams<T>,
    z: Complex<T>,
    k_plus: Complex<T>,
    k_minus: Complex<T>,
) -> Complex<T> {
    let half_g2 = params.g * params.g * T::from(0.5).unwrap();
    z - Complex::from(params.e_d)
        - (green(params.t_h, k_plus) + green(params.t_h, k_minus)) * half_g2
}

/// Energy reconstructed from a channel wave number (the two relations
/// an eigenstate must satisfy simultaneously).
pub fn energy_from_k<T: Float + FloatConst>(
    params: &ModelParams<T>,
    channel: Channel,
    k: Complex<T>,
) -> Complex<T> {
    -k.cos() * params.t_h - Complex::from(channel.sign::<T>() * params.tp_h)
}

/// Pick the branch pair minimizing `|R|` over the four candidates.
fn best_branch<T: Float + FloatConst>(
    params: &ModelParams<T>,
    z: Complex<T>,
) -> (Complex<T>, Complex<T>, T) {
    let (kp, km) = wave_numbers(params, z);
    let mut best = (kp[0], km[0], T::infinity());
    for &a in &kp {
        for &b in &km {
            let r = dispersion_residual(params, z, a, b).norm();
            if r < best.2 {
                best = (a, b, r);
            }
        }
    }
    best
}

/// Classify one polynomial root: select wave-number branches by
/// residual minimization, read the sheet off the `Im K` signs.
///
/// Inside the band-edge window the Green's functions blow up, so the
/// residual test is replaced by the polynomial backward error plus the
/// energy–wave-number consistency that holds by construction, and the
/// state is flagged `edge_degenerate`.
pub fn classify_root<T: Float + FloatConst + std::fmt::Debug + std::fmt::Display>(
    params: &ModelParams<T>,
    z: Complex<T>,
    cfg: &SolverConfig<T>,
) -> Result<Eigenstate<T>, SpectrumError<T>> {
    let edges = band_edges(params);
    if edges.nearest_edge_distance(z.re) < cfg.edge_window && z.im.abs() < cfg.edge_window {
        let (kp, km, _) = best_branch(params, z);
        let poly = dispersion_polynomial(params);
        let scale = poly
            .coeffs()
            .iter()
            .map(|c| c.abs())
            .fold(T::zero(), T::max);
        let complex_poly = Poly::new(poly.coeffs().iter().map(|&c| Complex::from(c)).collect());
        let residual = complex_poly.eval(z).norm() / scale;
        let sheet = SheetId::from_imag_signs(kp.im > T::zero(), km.im > T::zero());
        return Ok(Eigenstate {
            energy: z,
            k_plus: kp,
            k_minus: km,
            sheet,
            residual,
            label: None,
            kind: Eigenstate::kind_of(z, sheet, cfg.real_axis_tol),
            edge_degenerate: true,
        });
    }

    let (kp_cands, km_cands) = wave_numbers(params, z);
    let mut residuals = [T::zero(); 4];
    let mut best: Option<(Complex<T>, Complex<T>, T)> = None;
    for (i, &a) in kp_cands.iter().enumerate() {
        for (j, &b) in km_cands.iter().enumerate() {
            let r = dispersion_residual(params, z, a, b).norm();
            residuals[2 * i + j] = r;
            if best.map_or(true, |(_, _, rb)| r < rb) {
                best = Some((a, b, r));
            }
        }
    }
    let (kp, km, r) = best.unwrap();
    if r >= cfg.classify_tol {
        return Err(SpectrumError::SpuriousRoot {
            z,
            residuals,
            tol: cfg.classify_tol,
        });
    }
    for (channel, k) in [(Channel::Plus, kp), (Channel::Minus, km)] {
        if k.im.abs() < cfg.cut_tol {
            return Err(SpectrumError::OnCut {
                z,
                channel,
                cut_tol: cfg.cut_tol,
            });
        }
    }
    let sheet = SheetId::from_imag_signs(kp.im > T::zero(), km.im > T::zero());
    Ok(Eigenstate {
        energy: z,
        k_plus: kp,
        k_minus: km,
        sheet,
        residual: r,
        label: None,
        kind: Eigenstate::kind_of(z, sheet, cfg.real_axis_tol),
        edge_degenerate: false,
    })
}

/// Wave number of one channel with the branch committed to the sheet's
/// `Im K` sign.
fn sheet_wave_number<T: Float + FloatConst + std::fmt::Debug + std::fmt::Display>(
    params: &ModelParams<T>,
    channel: Channel,
    sheet: SheetId,
    z: Complex<T>,
    cut_tol: T,
) -> Result<Complex<T>, ()> {
    let want_positive = sheet.im_sign(channel) > 0.0;
    let cands = channel_wave_numbers(params, channel, z);
    let k = if cands[0].im > T::zero() { cands[usize::from(!want_positive)] } else { cands[usize::from(want_positive)] };
    if k.im.abs() < cut_tol || (k.im > T::zero()) != want_positive {
        return Err(());
    }
    Ok(k)
}

/// Newton iteration on the branch-fixed residual `R(z)`, holding the
/// sheet's sign choice constant.
///
/// `dG/dz = −(z ± t')·G³`, so `R' = 1 + (g²/2)·[(z+t')G₊³ + (z−t')G₋³]`.
/// Near a van Hove edge `R'` is large — exactly where the polynomial
/// derivative is small — which is what makes this the precision stage.
pub fn newton_refine<T: Float + FloatConst + std::fmt::Debug + std::fmt::Display>(
    params: &ModelParams<T>,
    state: &Eigenstate<T>,
    tol: T,
    cfg: &SolverConfig<T>,
) -> Result<Eigenstate<T>, SpectrumError<T>> {
    if state.edge_degenerate {
        // nothing to refine against; the transcendental residual is
        // numerically void inside the edge window
        return Ok(state.clone());
    }
    let seed = state.energy;
    let sheet = state.sheet;
    let half_g2 = params.g * params.g * T::from(0.5).unwrap();
    let mut z = seed;
    let max_iter = 50;
    let mut last = state.clone();
    for _ in 0..max_iter {
        let kp = sheet_wave_number(params, Channel::Plus, sheet, z, cfg.cut_tol);
        let km = sheet_wave_number(params, Channel::Minus, sheet, z, cfg.cut_tol);
        let (kp, km) = match (kp, km) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                return Err(SpectrumError::NearCut {
                    z,
                    sheet,
                    last: Box::new(last),
                })
            }
        };
        let gp = green(params.t_h, kp);
        let gm = green(params.t_h, km);
        let r = z - Complex::from(params.e_d) - (gp + gm) * half_g2;
        last = Eigenstate {
            energy: z,
            k_plus: kp,
            k_minus: km,
            sheet,
            residual: r.norm(),
            label: state.label.clone(),
            kind: Eigenstate::kind_of(z, sheet, cfg.real_axis_tol),
            edge_degenerate: false,
        };
        if r.norm() < tol {
            return Ok(last);
        }
        let tp = Complex::from(params.tp_h);
        let dr = Complex::<T>::one()
            + ((z + tp) * gp * gp * gp + (z - tp) * gm * gm * gm) * half_g2;
        let step = r / dr;
        z = z - step;
        if (z - seed).norm() > T::from(0.05).unwrap() * params.t_h.max(T::one()) {
            return Err(SpectrumError::RefineDiverged { seed, z });
        }
    }
    // out of iterations: accept only if already at the final bar
    if last.residual < cfg.final_residual_tol {
        Ok(last)
    } else {
        Err(SpectrumError::RefineDiverged { seed, z })
    }
}

/// Presentation ordering inside one sheet, reproducing the canonical
/// table: real states first (larger `Re E` first), then conjugate pairs
/// by increasing width, resonant partner before antiresonant.
fn label_order<T: Float>(a: &Eigenstate<T>, b: &Eigenstate<T>, tie: T) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let (abs_a, abs_b) = (a.energy.im.abs(), b.energy.im.abs());
    if (abs_a - abs_b).abs() > tie {
        return abs_a.partial_cmp(&abs_b).unwrap_or(Ordering::Equal);
    }
    if (a.energy.re - b.energy.re).abs() > tie {
        return b.energy.re.partial_cmp(&a.energy.re).unwrap_or(Ordering::Equal);
    }
    a.energy.im.partial_cmp(&b.energy.im).unwrap_or(Ordering::Equal)
}

/// Sort by sheet and presentation order, then assign `P/Q/R/S` labels
/// with per-sheet ordinals.
pub fn assign_labels<T: Float>(states: &mut [Eigenstate<T>], tie: T) {
    states.sort_by(|a, b| a.sheet.cmp(&b.sheet).then_with(|| label_order(a, b, tie)));
    let mut counts = std::collections::HashMap::new();
    for s in states.iter_mut() {
        let n = counts.entry(s.sheet).or_insert(0usize);
        *n += 1;
        s.label = Some(format!("{}{}", s.sheet.letter(), n));
    }
}

/// Full spectral pipeline: polynomial → roots → classification →
/// sheet-fixed refinement → labeled states sorted by sheet and
/// presentation order.
pub fn solve_spectrum<T: Float + FloatConst + std::fmt::Debug + std::fmt::Display>(
    params: &ModelParams<T>,
    cfg: &SolverConfig<T>,
) -> Result<Vec<Eigenstate<T>>, SpectrumError<T>> {
    if params.g <= T::zero() {
        return Err(SpectrumError::CouplingNotPositive(params.g));
    }
    let poly = dispersion_polynomial(params);
    let complex_poly = Poly::new(poly.coeffs().iter().map(|&c| Complex::from(c)).collect());
    let roots = find_roots(&complex_poly, cfg.root_tol, cfg.root_max_iter)?;
    if roots.roots.len() != 12 {
        return Err(SpectrumError::WrongCount {
            found: roots.roots.len(),
        });
    }
    let mut states = Vec::with_capacity(12);
    for &z in &roots.roots {
        let seed = classify_root(params, z, cfg)?;
        let refined = newton_refine(params, &seed, cfg.refine_tol, cfg)?;
        if !refined.edge_degenerate && refined.residual > cfg.final_residual_tol {
            return Err(SpectrumError::SpuriousRoot {
                z: refined.energy,
                residuals: [refined.residual; 4],
                tol: cfg.final_residual_tol,
            });
        }
        states.push(refined);
    }
    assign_labels(&mut states, cfg.real_axis_tol);
    Ok(states)
}

/// Look up a labeled state.
pub fn find_labeled<'a, T: Float>(
    states: &'a [Eigenstate<T>],
    label: &str,
) -> Option<&'a Eigenstate<T>> {
    states
        .iter()
        .find(|s| s.label.as_deref() == Some(label))
}

/// Bound states of the decoupled one-channel reference system
/// `z − E_d − (g²/2)·G_σ(z) = 0` with the bound branch of the Green's
/// function (`Im K > 0`).
///
/// Squares to the quartic `(z − E_d)²·B_σ(z) − g⁴/4 = 0`; real quartic
/// roots outside the band are Newton-polished on the unsquared equation
/// and kept when the bound-branch residual survives. The divergent edge
/// density of states guarantees one state just outside each edge for
/// any `g > 0`, though at very small coupling the below-resolution
/// binding can make them numerically indistinguishable from the edge.
pub fn solve_one_channel<T: Float + FloatConst + std::fmt::Debug + std::fmt::Display>(
    params: &ModelParams<T>,
    channel: Channel,
    cfg: &SolverConfig<T>,
) -> Result<Vec<OneChannelState<T>>, SpectrumError<T>> {
    if params.g <= T::zero() {
        return Err(SpectrumError::CouplingNotPositive(params.g));
    }
    let band = band_edges(params).band(channel);
    let sign = channel.sign::<T>();
    let four = T::from(4.0).unwrap();

    // (z−E_d)²·((z+σt')²−t²) − g⁴/4
    let a = Poly::new(vec![-params.e_d, T::one()]);
    let b = Poly::new(vec![
        params.tp_h * params.tp_h - params.t_h * params.t_h,
        (T::one() + T::one()) * sign * params.tp_h,
        T::one(),
    ]);
    let g4 = params.g.powi(4) / four;
    let quartic = a.mul(&a).mul(&b).sub(&Poly::new(vec![g4]));
    let complex_quartic = Poly::new(
        quartic
            .coeffs()
            .iter()
            .map(|&c| Complex::from(c))
            .collect(),
    );
    let roots = find_roots(&complex_quartic, cfg.root_tol, cfg.root_max_iter)?;

    let half_g2 = params.g * params.g * T::from(0.5).unwrap();
    let bound_k = |z: Complex<T>| -> Option<Complex<T>> {
        channel_wave_numbers(params, channel, z)
            .into_iter()
            .find(|k| k.im > cfg.cut_tol)
    };

    let mut out: Vec<OneChannelState<T>> = Vec::new();
    for &root in &roots.roots {
        if root.im.abs() > T::from(1e-8).unwrap() {
            continue;
        }
        let mut z = Complex::new(root.re, T::zero());
        if band.contains(z.re) {
            continue;
        }
        // Newton on the unsquared bound-branch equation
        let mut ok = false;
        for _ in 0..60 {
            let Some(k) = bound_k(z) else { break };
            let gr = green(params.t_h, k);
            let h = z - Complex::from(params.e_d) - gr * half_g2;
            if h.norm() < T::from(1e-12).unwrap() {
                ok = true;
                break;
            }
            let tp = Complex::from(sign * params.tp_h);
            let dh = Complex::<T>::one() + (z + tp) * gr * gr * gr * half_g2;
            z = z - h / dh;
            z = Complex::new(z.re, T::zero()); // bound states are real
        }
        if !ok {
            continue;
        }
        let k = bound_k(z).unwrap();
        if out.iter().any(|s| (s.energy - z.re).abs() < T::from(1e-10).unwrap()) {
            continue;
        }
        out.push(OneChannelState {
            energy: z.re,
            k,
            channel,
        });
    }
    out.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
    Ok(out)
}
