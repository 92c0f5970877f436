//! Gauss-Hermite nodes and weights (weight function exp(-x^2)).
//!
//! Generated by Newton iteration on the normalized Hermite recurrence and
//! cached per order. Used to evaluate expectations over complex Gaussian
//! noise: one complex dimension costs L^2 node pairs.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes (ascending) and weights of the order-`l` Gauss-Hermite rule.
#[derive(Debug, Clone)]
pub struct HermiteRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<HermiteRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HermiteRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fetch (or compute and cache) the order-`l` rule.
pub fn rule(l: usize) -> Arc<HermiteRule> {
    assert!(l >= 1 && l <= 64, "hermite order {l} out of range");
    let mut guard = cache().lock().unwrap();
    guard.entry(l).or_insert_with(|| Arc::new(compute(l))).clone()
}

/// Evaluate the normalized Hermite polynomial pair (p_l, p_{l-1}) at `x`.
/// Normalized so that the weight formula stays in range for any order.
fn normalized_pair(l: usize, x: f64) -> (f64, f64) {
    let mut p1 = std::f64::consts::PI.powf(-0.25);
    let mut p2 = 0.0;
    for j in 1..=l {
        let p3 = p2;
        p2 = p1;
        let j = j as f64;
        p1 = x * (2.0 / j).sqrt() * p2 - ((j - 1.0) / j).sqrt() * p3;
    }
    (p1, p2)
}

fn compute(l: usize) -> HermiteRule {
    let mut nodes = vec![0.0f64; l];
    let mut weights = vec![0.0f64; l];
    let n = l as f64;
    let half = (l + 1) / 2;
    let mut z = 0.0f64;
    for i in 0..half {
        // Initial guesses per standard practice for the largest roots, then
        // step down from the previously converged root.
        z = match i {
            0 => (2.0 * n + 1.0).sqrt() - 1.85575 * (2.0 * n + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * n.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[l - 1],
            3 => 1.91 * z - 0.91 * nodes[l - 2],
            _ => 2.0 * z - nodes[l - i + 1],
        };
        for _ in 0..200 {
            let (p1, p2) = normalized_pair(l, z);
            let dp = (2.0 * n).sqrt() * p2;
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (_, p2) = normalized_pair(l, z);
        let dp = (2.0 * n).sqrt() * p2;
        nodes[l - 1 - i] = z;
        nodes[i] = -z;
        weights[l - 1 - i] = 2.0 / (dp * dp);
        weights[i] = weights[l - 1 - i];
    }
    if l % 2 == 1 {
        nodes[l / 2] = 0.0;
        let (_, p2) = normalized_pair(l, 0.0);
        let dp = (2.0 * n).sqrt() * p2;
        weights[l / 2] = 2.0 / (dp * dp);
    }
    HermiteRule { nodes, weights }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772453850905516;

    #[test]
    fn moments_match_gaussian_integrals() {
        for l in [2usize, 5, 8, 10, 12, 16] {
            let r = rule(l);
            let m0: f64 = r.weights.iter().sum();
            let m2: f64 = r
                .weights
                .iter()
                .zip(&r.nodes)
                .map(|(w, x)| w * x * x)
                .sum();
            assert!((m0 - SQRT_PI).abs() < 1e-13, "L={l} m0={m0}");
            assert!((m2 - SQRT_PI / 2.0).abs() < 1e-12, "L={l} m2={m2}");
            if l >= 3 {
                let m4: f64 = r
                    .weights
                    .iter()
                    .zip(&r.nodes)
                    .map(|(w, x)| w * x.powi(4))
                    .sum();
                assert!((m4 - 0.75 * SQRT_PI).abs() < 1e-11, "L={l} m4={m4}");
            }
        }
    }

    #[test]
    fn nodes_symmetric_and_sorted() {
        let r = rule(9);
        for i in 0..9 {
            assert!((r.nodes[i] + r.nodes[8 - i]).abs() < 1e-14);
        }
        assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.nodes[4], 0.0);
    }

    #[test]
    fn known_order_two() {
        // Roots of H_2 = 4x^2 - 2 are ±1/sqrt(2), weights sqrt(pi)/2.
        let r = rule(2);
        assert!((r.nodes[1] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        assert!((r.weights[0] - SQRT_PI / 2.0).abs() < 1e-14);
    }
}
