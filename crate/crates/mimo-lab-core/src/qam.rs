//! Square QAM constellations with unit average energy.

use crate::error::{Error, Result};
use crate::C64;

/// A finite symbol alphabet. Points are Gray-mapped square QAM, zero mean,
/// unit average power.
#[derive(Debug, Clone)]
pub struct Constellation {
    /// Constellation order M (4, 16 or 64).
    pub order: usize,
    /// The M symbols; index = (I-axis Gray code << bits/2) | Q-axis Gray code.
    pub points: Vec<C64>,
}

fn gray_to_binary(mut g: usize) -> usize {
    let mut b = g;
    while g > 0 {
        g >>= 1;
        b ^= g;
    }
    b
}

impl Constellation {
    /// Build the square Gray-mapped QAM constellation of order `M`.
    pub fn square_qam(m: usize) -> Result<Self> {
        if !matches!(m, 4 | 16 | 64) {
            return Err(Error::Parameter(format!(
                "constellation order {m} not supported (expected 4, 16 or 64)"
            )));
        }
        let side = (m as f64).sqrt() as usize;
        // PAM levels ±1, ±3, ... scaled to unit average power over both axes:
        // E[|x|^2] = 2 (side^2 - 1) / 3.
        let scale = (2.0 * (side * side - 1) as f64 / 3.0).sqrt();
        let level = |gray: usize| {
            let k = gray_to_binary(gray);
            (2.0 * k as f64 - (side - 1) as f64) / scale
        };
        let half_bits = side.trailing_zeros() as usize;
        let mut points = Vec::with_capacity(m);
        for idx in 0..m {
            let gi = idx >> half_bits;
            let gq = idx & (side - 1);
            points.push(C64::new(level(gi), level(gq)));
        }
        Ok(Self { order: m, points })
    }

    /// Number of bits carried by one symbol.
    pub fn bits_per_symbol(&self) -> f64 {
        (self.order as f64).log2()
    }
}

/// Convenience constructor matching the configuration surface.
pub fn make_constellation(m: usize) -> Result<Constellation> {
    Constellation::square_qam(m)
}
