//! Pointwise tangent geometry of a graph: metric, pullback form, Kähler
//! angles, orthonormal frames, and the tangent-normal rotation.
//!
//! The two Kähler angles `θ₁ ≤ θ₂` (reported through `cosθ₁ ≥ cosθ₂`) are
//! computed by whitening: with `g = LLᵀ` and `K = L⁻¹WL⁻ᵀ`, the symmetric
//! matrix `-K²` has eigenvalues `cos²θ₁, cos²θ₁, cos²θ₂, cos²θ₂`. The
//! associated almost complex structure `J_ω` is the polar unitary factor of
//! the musical endomorphism `g⁻¹W`, cut off on the (near-)Lagrangian
//! kernel.

use crate::ambient::{
    graph_differential, j0_apply, lift_tangent, normal_spanning, omega0_eval,
};
use crate::coeffs::{metric_matrix, pullback_form_matrix};
use crate::error::{GeomError, Result};
use crate::jet::{ChartPoint, ImmersionSpec, Jet3};
use crate::numerics::{canonicalize_sign, det8, orthonormalize4, skew_symmetrize, symmetrize};
use crate::{Mat4, Vec4, Vec8};

/// Classification and angle-degeneracy thresholds.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Tolerances {
    /// A point is complex when `sin²θ₁ < complex`.
    pub complex: f64,
    /// A point is Lagrangian when `cos²θ₁ < lagrangian`; the same cutoff
    /// truncates the spectral inverse defining `J_ω`.
    pub lagrangian: f64,
    /// Angles are reported equal when `|cosθ₁ - cosθ₂| < equal`.
    pub equal: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            complex: 1e-10,
            lagrangian: 1e-10,
            equal: 1e-8,
        }
    }
}

/// Pointwise classification by Kähler angles, tested in this order.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Some angle vanishes: the tangent space contains a complex line pair.
    Complex,
    /// Both angles are π/2: the pullback form vanishes.
    Lagrangian,
    /// The two angles agree and are nondegenerate.
    EqualAngles,
    /// Distinct nondegenerate angles.
    Generic,
}

impl Classification {
    /// Stable lowercase label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Complex => "complex",
            Classification::Lagrangian => "lagrangian",
            Classification::EqualAngles => "equal-angles",
            Classification::Generic => "generic",
        }
    }
}

/// Classifies a point from its angle cosines `cosθ₁ ≥ cosθ₂`.
pub fn classify_point(cos_theta: [f64; 2], tol: &Tolerances) -> Classification {
    let sin_sq_min = 1.0 - cos_theta[0] * cos_theta[0];
    if sin_sq_min < tol.complex {
        Classification::Complex
    } else if cos_theta[0] * cos_theta[0] < tol.lagrangian {
        Classification::Lagrangian
    } else if (cos_theta[0] - cos_theta[1]).abs() < tol.equal {
        Classification::EqualAngles
    } else {
        Classification::Generic
    }
}

/// A frame diagonalizing the pullback form: `ω(X_α, Y_α) = cosθ_α` with all
/// other pairings zero, `Y_α = J_ω X_α`, the vectors `g`-orthonormal.
#[derive(Clone, Debug)]
pub struct DiagFrame {
    /// Chart coordinates of `(X₁, Y₁, X₂, Y₂)`.
    pub chart: [Vec4; 4],
    /// The same vectors lifted to the graph tangent space in `R^8`.
    pub lifted: [Vec8; 4],
    /// `cosθ_α` of the two invariant planes.
    pub cos_theta: [f64; 2],
}

/// Full first-order geometry of one graph point.
#[derive(Clone, Debug)]
pub struct PointGeometry {
    /// The chart point.
    pub point: ChartPoint,
    /// The jet the geometry was built from (at least first order).
    pub jet: Jet3,
    /// Induced metric `g = Id + dfᵀdf` in chart coordinates.
    pub metric: Mat4,
    /// Pullback two-form `W = -df + dfᵀ`, representing `ω(X,Y) = (WX)·Y`.
    pub pullback_form: Mat4,
    /// Musical endomorphism `g⁻¹W`.
    pub musical: Mat4,
    /// Columns of the graph differential (un-normalized tangents).
    pub tangent_raw: [Vec8; 4],
    /// Orthonormal oriented tangent frame `U₁..U₄`.
    pub tangent_frame: [Vec8; 4],
    /// Chart coordinates of the tangent frame: `U_j = Σ_a S[(a,j)]·dΓ(∂_a)`,
    /// so `SᵀgS = Id`.
    pub tangent_coeff: Mat4,
    /// Orthonormal normal frame `N₁..N₄`, oriented so that
    /// `det₈[U | N] > 0`.
    pub normal_frame: [Vec8; 4],
    /// `cosθ₁ ≥ cosθ₂`, each in `[0, 1]`.
    pub cos_theta: [f64; 2],
    /// The partial isometry `J_ω` in chart coordinates: `g`-orthogonal
    /// complex structure on the image of `W♯`, zero on its kernel.
    pub j_omega: Mat4,
    /// Classification under the tolerances the geometry was built with.
    pub classification: Classification,
    /// Sign of `det S`: +1 when the oriented frame agrees with the chart
    /// orientation.
    pub orientation_sign: f64,
    /// Whether the self-duality convention swapped the last two tangent
    /// vectors.
    pub swapped: bool,
    /// Tolerances used at construction.
    pub tolerances: Tolerances,
    /// Cholesky factor `L` of the metric (lower triangular).
    whitening: Mat4,
    /// Whitened form `K = L⁻¹WL⁻ᵀ` (skew).
    k_matrix: Mat4,
    /// Eigenvalues of `-K²`, descending.
    g_eigenvalues: [f64; 4],
    /// Matching sign-canonicalized eigenvectors as columns.
    g_eigenvectors: Mat4,
    /// `J_K = |K|⁺K` in whitened coordinates.
    j_k: Mat4,
}

/// Computes the point geometry of `spec` at `p` from an exact first-order
/// jet.
pub fn point_geometry(spec: &ImmersionSpec, p: ChartPoint, tol: &Tolerances) -> Result<PointGeometry> {
    let distance = spec.singular_distance(p);
    if distance < 1e-9 {
        return Err(GeomError::SingularPoint {
            distance,
            required: 1e-9,
        });
    }
    let jet = spec.evaluate_jet(p, 1)?;
    PointGeometry::from_jet(p, jet, tol)
}

impl PointGeometry {
    /// Builds the geometry from an already-evaluated jet (any order ≥ 1).
    pub fn from_jet(point: ChartPoint, jet: Jet3, tol: &Tolerances) -> Result<Self> {
        let metric = metric_matrix(&jet);
        let pullback_form = pullback_form_matrix(&jet);
        let chol = nalgebra::linalg::Cholesky::new(metric)
            .ok_or(GeomError::EigensolveFailure)?;
        let whitening = chol.l();
        let musical = chol.solve(&pullback_form);

        // Whitened form K = L⁻¹ W L⁻ᵀ, exactly skew after symmetrization.
        let half = whitening
            .solve_lower_triangular(&pullback_form)
            .ok_or(GeomError::EigensolveFailure)?;
        let mut k_matrix = whitening
            .solve_lower_triangular(&half.transpose())
            .ok_or(GeomError::EigensolveFailure)?
            .transpose();
        skew_symmetrize(&mut k_matrix);

        let mut gram = -(k_matrix * k_matrix);
        symmetrize(&mut gram);
        let eig = nalgebra::linalg::SymmetricEigen::try_new(gram, 1e-13, 500)
            .ok_or(GeomError::EigensolveFailure)?;
        let mut order: [usize; 4] = [0, 1, 2, 3];
        order.sort_by(|&i, &j| {
            eig.eigenvalues[j]
                .partial_cmp(&eig.eigenvalues[i])
                .expect("eigenvalues of a real symmetric matrix are finite")
        });
        let mut g_eigenvalues = [0.0; 4];
        let mut g_eigenvectors = Mat4::zeros();
        for (slot, &idx) in order.iter().enumerate() {
            g_eigenvalues[slot] = eig.eigenvalues[idx].max(0.0);
            let mut v: Vec4 = eig.eigenvectors.column(idx).into_owned();
            canonicalize_sign(&mut v);
            g_eigenvectors.set_column(slot, &v);
        }
        let cos_sq = [
            ((g_eigenvalues[0] + g_eigenvalues[1]) / 2.0).clamp(0.0, 1.0),
            ((g_eigenvalues[2] + g_eigenvalues[3]) / 2.0).clamp(0.0, 1.0),
        ];
        let cos_theta = [cos_sq[0].sqrt(), cos_sq[1].sqrt()];

        // J_K = |K|⁺ K with the spectral cutoff at the Lagrangian tolerance.
        let mut inv_root = Mat4::zeros();
        for slot in 0..4 {
            let lambda = g_eigenvalues[slot];
            if lambda > tol.lagrangian {
                let q = g_eigenvectors.column(slot);
                inv_root += Mat4::from_fn(|i, j| q[i] * q[j]) / lambda.sqrt();
            }
        }
        let j_k = inv_root * k_matrix;
        let upper = whitening.transpose();
        let j_omega = upper
            .solve_upper_triangular(&(j_k * upper))
            .ok_or(GeomError::EigensolveFailure)?;

        // Oriented orthonormal frames.
        let tangent_raw = graph_differential(&jet);
        let (mut tangent_frame, mut tangent_coeff) = orthonormalize4(&tangent_raw)?;
        let omega = |i: usize, j: usize| omega0_eval(&tangent_frame[i], &tangent_frame[j]);
        let sd_sq = (omega(0, 1) + omega(2, 3)).powi(2)
            + (omega(0, 2) - omega(1, 3)).powi(2)
            + (omega(0, 3) + omega(1, 2)).powi(2);
        let asd_sq = (omega(0, 1) - omega(2, 3)).powi(2)
            + (omega(0, 2) + omega(1, 3)).powi(2)
            + (omega(0, 3) - omega(1, 2)).powi(2);
        let swapped = asd_sq > sd_sq;
        if swapped {
            tangent_frame.swap(2, 3);
            tangent_coeff.swap_columns(2, 3);
        }
        let (normal_frame, _) = orthonormalize4(&normal_spanning(&jet))?;
        let mut normal_frame = normal_frame;
        let mut all8 = [Vec8::zeros(); 8];
        all8[..4].copy_from_slice(&tangent_frame);
        all8[4..].copy_from_slice(&normal_frame);
        if det8(&all8) < 0.0 {
            normal_frame[3] = -normal_frame[3];
        }
        let orientation_sign = tangent_coeff.determinant().signum();
        let classification = classify_point(cos_theta, tol);

        Ok(PointGeometry {
            point,
            jet,
            metric,
            pullback_form,
            musical,
            tangent_raw,
            tangent_frame,
            tangent_coeff,
            normal_frame,
            cos_theta,
            j_omega,
            classification,
            orientation_sign,
            swapped,
            tolerances: *tol,
            whitening,
            k_matrix,
            g_eigenvalues,
            g_eigenvectors,
            j_k,
        })
    }

    /// `sin²θ_α` for the two invariant planes, in the same order as
    /// [`PointGeometry::cos_theta`].
    pub fn sin_sq(&self) -> [f64; 2] {
        [
            1.0 - self.cos_theta[0] * self.cos_theta[0],
            1.0 - self.cos_theta[1] * self.cos_theta[1],
        ]
    }

    /// Frame components of the pullback form: entry `(i, j)` is
    /// `ω₀(U_i, U_j)`.
    pub fn omega_frame(&self) -> Mat4 {
        Mat4::from_fn(|i, j| omega0_eval(&self.tangent_frame[i], &self.tangent_frame[j]))
    }

    /// Matrix of the tangent-normal rotation `Φ(X) = (J₀X)^⊥` in the frames:
    /// entry `(β, α)` is `g₀(J₀U_α, N_β)`.
    pub fn phi_matrix(&self) -> Mat4 {
        Mat4::from_fn(|beta, alpha| {
            j0_apply(&self.tangent_frame[alpha]).dot(&self.normal_frame[beta])
        })
    }

    /// Matrix of the adjoint rotation `Ξ(V) = (J₀V)^⊤` for normal `V`:
    /// entry `(j, β)` is `g₀(J₀N_β, U_j) = -Φ(j, β)ᵀ`-wise, i.e. `-Φᵀ`.
    pub fn xi_matrix(&self) -> Mat4 {
        -self.phi_matrix().transpose()
    }

    /// Applies `Φ`: normal part of `J₀` on an ambient vector.
    pub fn phi_apply(&self, v: &Vec8) -> Vec8 {
        let jv = j0_apply(v);
        let mut out = Vec8::zeros();
        for n in &self.normal_frame {
            out += jv.dot(n) * n;
        }
        out
    }

    /// Applies `Ξ`: tangential part of `J₀` on an ambient vector.
    pub fn xi_apply(&self, v: &Vec8) -> Vec8 {
        let jv = j0_apply(v);
        let mut out = Vec8::zeros();
        for u in &self.tangent_frame {
            out += jv.dot(u) * u;
        }
        out
    }

    /// Chart-to-frame conversion: the inverse of
    /// [`PointGeometry::tangent_coeff`], with `∂_a = Σ_i P[(i, a)]·U_i`.
    pub fn chart_to_frame(&self) -> Mat4 {
        self.tangent_coeff
            .try_inverse()
            .expect("frame coefficients are invertible by construction")
    }

    /// A frame diagonalizing the pullback form, when the smaller angle
    /// cosine is above the Lagrangian cutoff. Deterministic: eigenvector
    /// signs and the second-plane seed are canonicalized.
    pub fn diag_frame(&self) -> Option<DiagFrame> {
        let c2_sq = self.cos_theta[1] * self.cos_theta[1];
        if c2_sq <= self.tolerances.lagrangian {
            return None;
        }
        let q0: Vec4 = self.g_eigenvectors.column(0).into_owned();
        let y1 = self.j_k * q0;
        let y1 = y1 / y1.norm();
        // Candidate seeds for the second plane: the remaining eigenvectors,
        // projected off the first plane; take the largest residual, lowest
        // index on ties.
        let mut best: Option<(f64, Vec4)> = None;
        for idx in 1..4 {
            let q: Vec4 = self.g_eigenvectors.column(idx).into_owned();
            let res = q - q.dot(&q0) * q0 - q.dot(&y1) * y1;
            let norm = res.norm();
            if best.as_ref().is_none_or(|(b, _)| norm > *b + 1e-12) {
                best = Some((norm, res));
            }
        }
        let (norm, res) = best.expect("three candidate seeds always exist");
        debug_assert!(norm > 0.5, "second-plane seed residual is degenerate");
        let x2 = res / norm;
        let y2 = self.j_k * x2;
        let y2 = y2 / y2.norm();

        let upper = self.whitening.transpose();
        let to_chart = |v: &Vec4| -> Vec4 {
            upper
                .solve_upper_triangular(v)
                .expect("Cholesky factor is invertible")
        };
        let chart = [to_chart(&q0), to_chart(&y1), to_chart(&x2), to_chart(&y2)];
        let lifted = chart.map(|v| lift_tangent(&self.jet, &v));
        Some(DiagFrame {
            chart,
            lifted,
            cos_theta: self.cos_theta,
        })
    }

    /// Diagonalizing tangent frame together with the rotated-normal frame
    /// `Φ(X_α)/sinθ_α`; available away from complex and Lagrangian points.
    pub fn phi_adapted_frames(&self) -> Option<([Vec8; 4], [Vec8; 4])> {
        let sin_sq = self.sin_sq();
        if sin_sq[0] <= 10.0 * self.tolerances.complex {
            return None;
        }
        let diag = self.diag_frame()?;
        let s = [sin_sq[0].sqrt(), sin_sq[1].sqrt()];
        let normals = [
            self.phi_apply(&diag.lifted[0]) / s[0],
            self.phi_apply(&diag.lifted[1]) / s[0],
            self.phi_apply(&diag.lifted[2]) / s[1],
            self.phi_apply(&diag.lifted[3]) / s[1],
        ];
        Some((diag.lifted, normals))
    }
}
