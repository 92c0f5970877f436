//! Complex SVD in "natural" order with a deterministic phase convention.

use crate::error::{Error, Result};
use crate::{C64, CMat};
use nalgebra::DVector;

/// Thin SVD triple `A = left * diag(singular_values) * right^H`.
///
/// Singular values are sorted descending; each right singular vector has its
/// first non-negligible component rotated to be real positive, with the phase
/// compensated in the corresponding left column, so equal inputs always yield
/// identical factors.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    /// Left singular vectors, `rows x k`, orthonormal columns.
    pub left: CMat,
    /// Singular values in descending order, length `k = min(rows, cols)`.
    pub singular_values: DVector<f64>,
    /// Right singular vectors as columns, `cols x k`, orthonormal columns.
    pub right: CMat,
}

impl SvdFactors {
    /// Reconstruct the original matrix from the factors.
    pub fn reconstruct(&self) -> CMat {
        let k = self.singular_values.len();
        let mut scaled = self.left.clone();
        for j in 0..k {
            let s = self.singular_values[j];
            for i in 0..scaled.nrows() {
                scaled[(i, j)] *= s;
            }
        }
        scaled * self.right.adjoint()
    }

    /// Ratio of smallest to largest singular value (0 for an all-zero matrix).
    pub fn rank_margin(&self) -> f64 {
        let k = self.singular_values.len();
        if k == 0 || self.singular_values[0] <= 0.0 {
            return 0.0;
        }
        self.singular_values[k - 1] / self.singular_values[0]
    }
}

/// Compute the natural-order SVD of a complex matrix.
///
/// Values are re-sorted descending (ties keep the original relative order)
/// and phases are fixed as documented on [`SvdFactors`].
pub fn svd_natural(a: &CMat) -> Result<SvdFactors> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return Err(Error::Dimension("svd of an empty matrix".into()));
    }
    let svd = a.clone().svd(true, true);
    let u = svd
        .u
        .ok_or_else(|| Error::Internal("svd did not return U".into()))?;
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Internal("svd did not return V^H".into()))?;
    let s = svd.singular_values;
    let k = s.len();

    // Descending sort with stable tie order.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap().then(i.cmp(&j)));

    let mut left = CMat::zeros(u.nrows(), k);
    let mut right = CMat::zeros(v_t.ncols(), k);
    let mut values = DVector::zeros(k);
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = s[src];
        left.set_column(dst, &u.column(src));
        // Rows of v_t are the conjugated right singular vectors.
        for r in 0..v_t.ncols() {
            right[(r, dst)] = v_t[(src, r)].conj();
        }
    }

    // Phase convention: first component of each right vector with modulus
    // above 1e-12 is made real positive; the rotation moves into the left
    // column so the product is unchanged.
    for j in 0..k {
        let mut phase = C64::new(1.0, 0.0);
        for r in 0..right.nrows() {
            let v = right[(r, j)];
            if v.norm() > 1e-12 {
                phase = v / v.norm();
                break;
            }
        }
        let rot = phase.conj();
        for r in 0..right.nrows() {
            right[(r, j)] *= rot;
        }
        for r in 0..left.nrows() {
            left[(r, j)] *= rot;
        }
    }

    Ok(SvdFactors {
        left,
        singular_values: values,
        right,
    })
}

/// Unitary DFT matrix of order `n`: entry `(p, q) = exp(-j 2 pi p q / n) / sqrt(n)`.
pub fn dft_matrix(n: usize) -> CMat {
    let scale = 1.0 / (n as f64).sqrt();
    CMat::from_fn(n, n, |p, q| {
        let angle = -2.0 * std::f64::consts::PI * (p as f64) * (q as f64) / n as f64;
        C64::from_polar(scale, angle)
    })
}
