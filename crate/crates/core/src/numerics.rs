//! Small numerical utilities: orthonormalization with coefficient tracking,
//! ambient determinants, Gauss–Legendre nodes, and convergence-order helpers.

use crate::error::{GeomError, Result};
use crate::{Mat4, Mat8, Vec8};

/// Orthonormalizes four ambient vectors by modified Gram–Schmidt in the given
/// order, with one re-orthogonalization pass for numerical hygiene.
///
/// Returns the orthonormal frame together with the coefficient matrix `S`
/// expressing each frame vector in the input vectors: `frame[j] = Σ_a
/// S[(a, j)] · raw[a]`. When the inputs are the columns of a differential,
/// `S` therefore converts frame indices to chart coordinates.
pub fn orthonormalize4(raw: &[Vec8; 4]) -> Result<([Vec8; 4], Mat4)> {
    let mut frame = *raw;
    let mut coeff = Mat4::identity();
    let scale = raw
        .iter()
        .map(|v| v.norm())
        .fold(f64::MIN_POSITIVE, f64::max);
    for j in 0..4 {
        let mut v = frame[j];
        let mut c = coeff.column(j).into_owned();
        // Two MGS passes: the second removes the O(eps * condition) residue
        // the first leaves behind.
        for _ in 0..2 {
            for i in 0..j {
                let proj = v.dot(&frame[i]);
                v -= proj * frame[i];
                c -= proj * coeff.column(i);
            }
        }
        let norm = v.norm();
        if norm <= 1e-13 * scale {
            return Err(GeomError::FrameDegenerate(format!(
                "vector {j} is numerically dependent on its predecessors"
            )));
        }
        frame[j] = v / norm;
        coeff.set_column(j, &(c / norm));
    }
    Ok((frame, coeff))
}

/// Determinant of the 8x8 matrix whose columns are the given vectors.
pub fn det8(columns: &[Vec8; 8]) -> f64 {
    let mut m = Mat8::zeros();
    for (j, col) in columns.iter().enumerate() {
        m.set_column(j, col);
    }
    m.determinant()
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
///
/// Nodes are the roots of the Legendre polynomial `P_n`, found by Newton
/// iteration from the Chebyshev-based initial guess; weights are
/// `2 / ((1 - x²) P_n'(x)²)`. Deterministic for a given `n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be positive");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Initial guess for the i-th positive root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Observed convergence order from residuals at steps `h` and `h/2`.
///
/// Returns `log2(r_h / r_half)`. Residuals at the rounding floor are treated
/// as fully converged: if both are below `floor`, the returned order is a
/// large sentinel rather than the ratio of two noise values.
pub fn observed_order(r_h: f64, r_half: f64, floor: f64) -> f64 {
    if r_h.abs() <= floor && r_half.abs() <= floor {
        return f64::INFINITY;
    }
    let denom = r_half.abs().max(f64::MIN_POSITIVE);
    (r_h.abs() / denom).log2()
}

/// Flips the sign of a vector so that its entry of largest magnitude is
/// positive, breaking magnitude ties by lowest index. Stabilizes the output
/// of eigensolvers whose eigenvector signs are arbitrary.
pub fn canonicalize_sign(v: &mut nalgebra::Vector4<f64>) {
    let mut best = 0;
    for i in 1..4 {
        if v[i].abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        *v = -*v;
    }
}

/// Symmetrizes a matrix in place, annihilating rounding-level asymmetry.
pub fn symmetrize(m: &mut Mat4) {
    *m = (*m + m.transpose()) * 0.5;
}

/// Skew-symmetrizes a matrix in place.
pub fn skew_symmetrize(m: &mut Mat4) {
    *m = (*m - m.transpose()) * 0.5;
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // An n-point rule is exact through degree 2n - 1.
        let (nodes, weights) = gauss_legendre(5);
        for degree in 0..=9 {
            let integral: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(degree))
                .sum();
            let exact = if degree % 2 == 0 {
                2.0 / (degree as f64 + 1.0)
            } else {
                0.0
            };
            assert_relative_eq!(integral, exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [1, 2, 3, 8, 17, 32] {
            let (nodes, weights) = gauss_legendre(n);
            assert_eq!(nodes.len(), n);
            let total: f64 = weights.iter().sum();
            assert_relative_eq!(total, 2.0, epsilon = 1e-13);
            for pair in nodes.windows(2) {
                assert!(pair[0] < pair[1], "nodes must be strictly increasing");
            }
        }
    }

    #[test]
    fn orthonormalize_tracks_coefficients() {
        let raw = [
            Vec8::from_fn(|i, _| (i as f64 + 1.0).sin()),
            Vec8::from_fn(|i, _| (i as f64 * 0.7 + 0.2).cos()),
            Vec8::from_fn(|i, _| 1.0 / (i as f64 + 2.0)),
            Vec8::from_fn(|i, _| ((i * i) as f64 * 0.11 - 0.3).tanh()),
        ];
        let (frame, coeff) = orthonormalize4(&raw).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(frame[i].dot(&frame[j]), expected, epsilon = 1e-13);
            }
        }
        for j in 0..4 {
            let mut rebuilt = Vec8::zeros();
            for a in 0..4 {
                rebuilt += coeff[(a, j)] * raw[a];
            }
            assert_relative_eq!((rebuilt - frame[j]).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn orthonormalize_rejects_dependent_input() {
        let v = Vec8::from_fn(|i, _| i as f64 + 1.0);
        let e2 = Vec8::from_fn(|i, _| if i == 2 { 1.0 } else { 0.0 });
        let raw = [v, 2.0 * v, e2, Vec8::zeros()];
        assert!(orthonormalize4(&raw).is_err());
    }

    #[test]
    fn observed_order_matches_halving() {
        let order = observed_order(4e-3, 1e-3, 1e-12);
        assert_relative_eq!(order, 2.0, epsilon = 1e-12);
        assert!(observed_order(1e-14, 5e-15, 1e-12).is_infinite());
    }
}
