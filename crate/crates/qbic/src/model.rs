//! Physical parameters, band structure and density of states of the
//! ladder-plus-dot model.
//!
//! Energies are measured in units of the leg hopping `t_h` throughout
//! (`t_h = 1` by default) and `ħ = 1`, so rates are energies and times
//! are inverse energies.

use num_traits::{Float, FloatConst};
use thiserror::Error;

/// Rung eigenmode of the ladder: the symmetric (`+`) or antisymmetric
/// (`−`) combination of the two legs. Each channel carries a cosine
/// band offset by `∓t'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    Plus,
    Minus,
}

impl Channel {
    pub const BOTH: [Channel; 2] = [Channel::Plus, Channel::Minus];

    /// +1 for channel `+`, −1 for channel `−`.
    pub fn sign<T: Float>(self) -> T {
        match self {
            Channel::Plus => T::one(),
            Channel::Minus => -T::one(),
        }
    }

    pub fn other(self) -> Channel {
        match self {
            Channel::Plus => Channel::Minus,
            Channel::Minus => Channel::Plus,
        }
    }
}

impl std::fmt::Display for Channel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Channel::Plus => write!(f, "+"),
            Channel::Minus => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError<T> {
    #[error("leg hopping t_h must be positive, got {0}")]
    NonPositiveHopping(T),
    #[error("dot coupling g must be non-negative, got {0}")]
    NegativeCoupling(T),
    #[error("parameter must be finite")]
    NonFinite,
    #[error("energy {energy} lies outside the {channel} band [{min}, {max}]")]
    OutOfBand {
        channel: Channel,
        energy: T,
        min: T,
        max: T,
    },
}

/// The four physical parameters of the model.
///
/// `t_h` is the hopping along the legs and the unit of energy, `tp_h`
/// the rung hopping `t'`, `g` the dot–lattice coupling and `e_d` the
/// dot level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams<T> {
    pub t_h: T,
    pub tp_h: T,
    pub g: T,
    pub e_d: T,
}

impl<T: Float + FloatConst> ModelParams<T> {
    /// Rejects `t_h ≤ 0` (the sign is a gauge freedom the model does
    /// not use) and `g < 0` (only even powers of `g` are observable).
    pub fn new(t_h: T, tp_h: T, g: T, e_d: T) -> Result<Self, ModelError<T>> {
        if !(t_h.is_finite() && tp_h.is_finite() && g.is_finite() && e_d.is_finite()) {
            return Err(ModelError::NonFinite);
        }
        if t_h <= T::zero() {
            return Err(ModelError::NonPositiveHopping(t_h));
        }
        if g < T::zero() {
            return Err(ModelError::NegativeCoupling(g));
        }
        Ok(ModelParams { t_h, tp_h, g, e_d })
    }

    /// Parameters with `t_h = 1`, i.e. in units of the leg hopping.
    pub fn unit_hopping(tp_h: T, g: T, e_d: T) -> Result<Self, ModelError<T>> {
        Self::new(T::one(), tp_h, g, e_d)
    }

    /// The two bands overlap iff `|t'| < |t_h|`; the QBIC phenomenology
    /// lives in this regime.
    pub fn bands_overlap(&self) -> bool {
        self.tp_h.abs() < self.t_h.abs()
    }

    pub fn band_edges(&self) -> BandEdges<T> {
        band_edges(self)
    }
}

/// One channel's band interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band<T> {
    pub min: T,
    pub max: T,
}

impl<T: Float> Band<T> {
    pub fn contains(&self, e: T) -> bool {
        e > self.min && e < self.max
    }
}

/// Band intervals of both channels plus the overlap predicate.
///
/// For `t' > 0` the `+` channel is the lower band and the `−` channel
/// the upper one; the fields are named by channel, not by position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandEdges<T> {
    pub plus: Band<T>,
    pub minus: Band<T>,
    pub overlap: bool,
}

impl<T: Float> BandEdges<T> {
    pub fn band(&self, channel: Channel) -> Band<T> {
        match channel {
            Channel::Plus => self.plus,
            Channel::Minus => self.minus,
        }
    }

    /// All four edge energies.
    pub fn all(&self) -> [T; 4] {
        [self.plus.min, self.plus.max, self.minus.min, self.minus.max]
    }

    /// Distance from `e` to the nearest band edge.
    pub fn nearest_edge_distance(&self, e: T) -> T {
        self.all()
            .iter()
            .map(|&edge| (e - edge).abs())
            .fold(T::infinity(), T::min)
    }
}

/// Band dispersion `ε_σ(k) = −t_h·cos k ∓ t'` (total on `k ∈ [−π, π]`).
pub fn band_energy<T: Float + FloatConst>(params: &ModelParams<T>, channel: Channel, k: T) -> T {
    -params.t_h * k.cos() - channel.sign::<T>() * params.tp_h
}

/// The four band edges `±t_h ∓ t'` together with the overlap predicate.
pub fn band_edges<T: Float + FloatConst>(params: &ModelParams<T>) -> BandEdges<T> {
    let edges = |channel: Channel| Band {
        min: -params.t_h - channel.sign::<T>() * params.tp_h,
        max: params.t_h - channel.sign::<T>() * params.tp_h,
    };
    BandEdges {
        plus: edges(Channel::Plus),
        minus: edges(Channel::Minus),
        overlap: params.bands_overlap(),
    }
}

/// Density of states `1/(π·sqrt(t_h² − (e ± t')²))` of one channel.
///
/// Diverges at the band edges (the van Hove singularities that bind a
/// state just outside each edge); defined only strictly inside the
/// band, out-of-band energies are a domain error.
pub fn density_of_states<T: Float + FloatConst>(
    params: &ModelParams<T>,
    channel: Channel,
    e: T,
) -> Result<T, ModelError<T>> {
    let band = band_edges(params).band(channel);
    if !band.contains(e) {
        return Err(ModelError::OutOfBand {
            channel,
            energy: e,
            min: band.min,
            max: band.max,
        });
    }
    let shifted = e + channel.sign::<T>() * params.tp_h;
    Ok((T::PI() * (params.t_h * params.t_h - shifted * shifted).sqrt()).recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo() -> ModelParams<f64> {
        ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap()
    }

    #[test]
    fn band_energy_examples() {
        let p = demo();
        assert!((band_energy(&p, Channel::Plus, 0.0) + 1.345).abs() < 1e-15);
        assert!((band_energy(&p, Channel::Minus, std::f64::consts::PI) - 1.345).abs() < 1e-15);
        assert!((band_energy(&p, Channel::Minus, std::f64::consts::FRAC_PI_2) - 0.345).abs() < 1e-15);
    }

    #[test]
    fn band_edges_examples() {
        let e = demo().band_edges();
        assert!((e.plus.min + 1.345).abs() < 1e-15 && (e.plus.max - 0.655).abs() < 1e-15);
        assert!((e.minus.min + 0.655).abs() < 1e-15 && (e.minus.max - 1.345).abs() < 1e-15);
        assert!(e.overlap);

        let wide = ModelParams::unit_hopping(1.5, 0.1, 0.3).unwrap().band_edges();
        assert!(!wide.overlap);

        let degenerate = ModelParams::unit_hopping(0.0, 0.1, 0.3).unwrap().band_edges();
        assert_eq!(degenerate.plus, degenerate.minus);
        assert!(degenerate.overlap);
    }

    #[test]
    fn dos_band_centers() {
        let flat = ModelParams::unit_hopping(0.0, 0.1, 0.3).unwrap();
        let inv_pi = 1.0 / std::f64::consts::PI;
        assert!((density_of_states(&flat, Channel::Plus, 0.0).unwrap() - inv_pi).abs() < 1e-15);
        let p = demo();
        assert!((density_of_states(&p, Channel::Minus, 0.345).unwrap() - inv_pi).abs() < 1e-15);
    }

    #[test]
    fn dos_diverges_monotonically_toward_edge() {
        let p = demo();
        let mut last = 0.0;
        for i in 1..60 {
            let e = 0.655 - 1e-3 / (i as f64 * i as f64);
            let d = density_of_states(&p, Channel::Plus, e).unwrap();
            assert!(d > last);
            last = d;
        }
        assert!(last > 100.0);
    }

    #[test]
    fn dos_out_of_band_is_error() {
        let p = demo();
        let err = density_of_states(&p, Channel::Plus, 0.7).unwrap_err();
        match err {
            ModelError::OutOfBand { channel, min, max, .. } => {
                assert_eq!(channel, Channel::Plus);
                assert!((min + 1.345).abs() < 1e-15 && (max - 0.655).abs() < 1e-15);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dos_identity_inside_band() {
        // ρ(e)·π·sqrt(t² − (e ± t')²) = 1 across the band
        let p = demo();
        for i in 1..200 {
            let e = -1.345 + 2.0 * (i as f64) / 200.0 * 0.9999;
            if !p.band_edges().plus.contains(e) {
                continue;
            }
            let d = density_of_states(&p, Channel::Plus, e).unwrap();
            let s = (p.t_h * p.t_h - (e + p.tp_h) * (e + p.tp_h)).sqrt();
            assert!((d * std::f64::consts::PI * s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn band_energy_even_and_extremal_at_0_pi() {
        let p = demo();
        for i in 0..50 {
            let k = -std::f64::consts::PI + (i as f64) * 0.12;
            let e = band_energy(&p, Channel::Plus, k);
            let e_neg = band_energy(&p, Channel::Plus, -k);
            assert!((e - e_neg).abs() < 1e-15);
            assert!(e >= band_energy(&p, Channel::Plus, 0.0) - 1e-15);
            assert!(e <= band_energy(&p, Channel::Plus, std::f64::consts::PI) + 1e-15);
        }
    }

    #[test]
    fn constructor_rejections() {
        assert!(ModelParams::new(-1.0, 0.3, 0.1, 0.0).is_err());
        assert!(ModelParams::new(0.0, 0.3, 0.1, 0.0).is_err());
        assert!(ModelParams::new(1.0, 0.3, -0.1, 0.0).is_err());
        assert!(ModelParams::new(1.0, f64::NAN, 0.1, 0.0).is_err());
    }
}
