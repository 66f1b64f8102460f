//! Closed-form angle coefficients of a graph.
//!
//! For `f = (u, v, s, t)` the pullback two-form is `W = -df + dfᵀ`
//! (representing `ω(X, Y) = (WX)·Y`) and the induced metric is
//! `g = Id + dfᵀ df`. The squared cosines `μ = cos²θ` of the two Kähler
//! angles are the roots of the quadratic `μ²·𝒜 - μ·ℬ + 𝒟 = 0`, whose
//! coefficients are polynomials in the six independent entries of `W` and
//! the ten of `g`. Equivalently, `det(W - λg) = 𝒜λ⁴ + ℬλ² + 𝒟`, so
//! `𝒜 = det g`, `𝒟 = det W`, and `ℬ` interpolates at `λ = 1`; that
//! determinant route is exposed as an independent cross-check of the
//! expanded polynomials.

use crate::jet::Jet3;
use crate::Mat4;

/// The six independent entries of the pullback two-form `W = -df + dfᵀ`,
/// upper triangle in row order.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct FormEntries {
    /// `W₁₂ = -u_y + v_x`.
    pub a: f64,
    /// `W₁₃ = s_x - u_z`.
    pub b: f64,
    /// `W₁₄ = t_x - u_w`.
    pub c: f64,
    /// `W₂₃ = s_y - v_z`.
    pub d: f64,
    /// `W₂₄ = t_y - v_w`.
    pub e: f64,
    /// `W₃₄ = t_z - s_w`.
    pub f: f64,
}

/// The ten independent entries of the induced metric `g = Id + dfᵀ df`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct MetricEntries {
    /// `g₁₁ = 1 + ‖f_x‖²`.
    pub h: f64,
    /// `g₂₂ = 1 + ‖f_y‖²`.
    pub o: f64,
    /// `g₃₃ = 1 + ‖f_z‖²`.
    pub d: f64,
    /// `g₄₄ = 1 + ‖f_w‖²`.
    pub n: f64,
    /// `g₁₂ = ⟨f_x, f_y⟩`.
    pub p: f64,
    /// `g₁₃ = ⟨f_x, f_z⟩`.
    pub q: f64,
    /// `g₁₄ = ⟨f_x, f_w⟩`.
    pub r: f64,
    /// `g₂₃ = ⟨f_y, f_z⟩`.
    pub k: f64,
    /// `g₂₄ = ⟨f_y, f_w⟩`.
    pub l: f64,
    /// `g₃₄ = ⟨f_z, f_w⟩`.
    pub m: f64,
}

/// Scalar data determining the Kähler angles of a graph point in closed
/// form.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct AngleCoefficients {
    /// Pullback-form entries.
    pub form: FormEntries,
    /// Metric entries.
    pub metric: MetricEntries,
    /// Quartic coefficient `𝒜 = det g ≥ 1`.
    pub cal_a: f64,
    /// Quadratic coefficient `ℬ = 𝒜(cos²θ₁ + cos²θ₂) ≥ 0`.
    pub cal_b: f64,
    /// Constant coefficient `𝒟 = det W = Pf(W)²`.
    pub cal_d: f64,
}

/// Computes the closed-form angle coefficients from a first-order jet.
pub fn angle_coefficients(jet: &Jet3) -> AngleCoefficients {
    let df = &jet.jacobian;
    let (u_y, v_x) = (df[(0, 1)], df[(1, 0)]);
    let (u_z, s_x) = (df[(0, 2)], df[(2, 0)]);
    let (u_w, t_x) = (df[(0, 3)], df[(3, 0)]);
    let (v_z, s_y) = (df[(1, 2)], df[(2, 1)]);
    let (v_w, t_y) = (df[(1, 3)], df[(3, 1)]);
    let (s_w, t_z) = (df[(2, 3)], df[(3, 2)]);
    let form = FormEntries {
        a: -u_y + v_x,
        b: s_x - u_z,
        c: t_x - u_w,
        d: s_y - v_z,
        e: t_y - v_w,
        f: t_z - s_w,
    };
    let col = |a: usize| jet.df_column(a);
    let (fx, fy, fz, fw) = (col(0), col(1), col(2), col(3));
    let metric = MetricEntries {
        h: 1.0 + fx.dot(&fx),
        o: 1.0 + fy.dot(&fy),
        d: 1.0 + fz.dot(&fz),
        n: 1.0 + fw.dot(&fw),
        p: fx.dot(&fy),
        q: fx.dot(&fz),
        r: fx.dot(&fw),
        k: fy.dot(&fz),
        l: fy.dot(&fw),
        m: fz.dot(&fw),
    };
    let (cal_a, cal_b, cal_d) = expanded_coefficients(&form, &metric);
    AngleCoefficients {
        form,
        metric,
        cal_a,
        cal_b,
        cal_d,
    }
}

/// The expanded polynomial coefficients `(𝒜, ℬ, 𝒟)`.
fn expanded_coefficients(fe: &FormEntries, me: &MetricEntries) -> (f64, f64, f64) {
    let FormEntries { a, b, c, d, e, f } = *fe;
    let MetricEntries {
        h,
        o,
        d: dd,
        n,
        p,
        q,
        r,
        k,
        l,
        m,
    } = *me;

    let cal_a = 2.0 * h * l * k * m + h * o * dd * n
        - h * (dd * l * l + o * m * m + n * k * k)
        + p * p * (-dd * n + m * m)
        + q * q * (l * l - n * o)
        + r * r * (-o * dd + k * k)
        + 2.0 * q * m * (-l * p + o * r)
        + 2.0 * p * r * (-m * k + dd * l)
        + 2.0 * q * k * (p * n - r * l);

    let cal_b = 2.0 * d * e * (q * r - h * m)
        + 2.0 * b * e * (-r * k + p * m)
        + 2.0 * b * d * (l * r - n * p)
        + 2.0 * c * e * (-dd * p + k * q)
        + 2.0 * a * e * (dd * r - q * m)
        + 2.0 * c * f * (-o * q + p * k)
        + 2.0 * c * b * (-o * m + k * l)
        + 2.0 * d * f * (-r * p + h * l)
        + 2.0 * a * f * (-r * k + q * l)
        + 2.0 * a * d * (-r * m + n * q)
        + 2.0 * a * c * (-dd * l + m * k)
        + 2.0 * a * b * (m * l - n * k)
        + 2.0 * c * d * (-q * l + m * p)
        + 2.0 * f * e * (q * p - k * h)
        + 2.0 * f * b * (o * r - p * l)
        + e * e * (dd * h - q * q)
        + b * b * (n * o - l * l)
        + o * (h * f * f + dd * c * c)
        + n * (h * d * d + dd * a * a)
        - c * c * k * k
        - r * r * d * d
        - m * m * a * a
        - p * p * f * f;

    let pf = a * f - b * e + c * d;
    let cal_d = pf * pf;
    (cal_a, cal_b, cal_d)
}

impl AngleCoefficients {
    /// The Pfaffian `Pf(W) = AF - BE + CD`, whose square is `𝒟`.
    pub fn pfaffian(&self) -> f64 {
        let FormEntries { a, b, c, d, e, f } = self.form;
        a * f - b * e + c * d
    }

    /// Discriminant `ℬ² - 4𝒜𝒟` of the angle quadratic; zero exactly at
    /// equal-angle points.
    pub fn discriminant(&self) -> f64 {
        self.cal_b * self.cal_b - 4.0 * self.cal_a * self.cal_d
    }

    /// The two roots `cos²θ₁ ≥ cos²θ₂` of `μ²𝒜 - μℬ + 𝒟 = 0`, clamped to
    /// `[0, 1]`. Uses the product form for the small root to avoid
    /// cancellation.
    pub fn cos_sq_roots(&self) -> [f64; 2] {
        let disc = self.discriminant().max(0.0).sqrt();
        let num = self.cal_b + disc;
        let large = (num / (2.0 * self.cal_a)).clamp(0.0, 1.0);
        let small = if num > 0.0 {
            (2.0 * self.cal_d / num).clamp(0.0, 1.0)
        } else {
            0.0
        };
        [large, small]
    }
}

/// `(𝒜, ℬ, 𝒟)` by determinant interpolation of `det(W - λg)`:
/// the quartic is even with leading coefficient `det g` and constant term
/// `det W`, so `ℬ = det(W - g) - det g - det W`. Independent of the
/// expanded polynomials above.
pub fn interpolated_coefficients(g: &Mat4, w: &Mat4) -> (f64, f64, f64) {
    let det_g = g.determinant();
    let det_w = w.determinant();
    let cal_b = (w - g).determinant() - det_g - det_w;
    (det_g, cal_b, det_w)
}

/// The pullback two-form matrix `W = -df + dfᵀ` of a graph, representing
/// `ω(X, Y) = (WX)·Y` in chart coordinates.
pub fn pullback_form_matrix(jet: &Jet3) -> Mat4 {
    let df = jet.jacobian;
    df.transpose() - df
}

/// The induced metric `g = Id + dfᵀ df` in chart coordinates.
pub fn metric_matrix(jet: &Jet3) -> Mat4 {
    Mat4::identity() + jet.jacobian.transpose() * jet.jacobian
}

/// Largest violation of the anti-holomorphy conditions with respect to the
/// chart complex structure `i`: both component pairs `(u, v)` and `(s, t)`
/// must satisfy `u_x = -v_y`, `u_y = v_x`, `u_z = -v_w`, `u_w = v_z`.
/// Vanishes exactly on anti-i-holomorphic maps.
pub fn anti_i_holomorphic_defect(jet: &Jet3) -> f64 {
    let df = &jet.jacobian;
    let pair = |top: usize, bot: usize| -> [f64; 4] {
        [
            df[(top, 0)] + df[(bot, 1)],
            df[(top, 1)] - df[(bot, 0)],
            df[(top, 2)] + df[(bot, 3)],
            df[(top, 3)] - df[(bot, 2)],
        ]
    };
    pair(0, 1)
        .into_iter()
        .chain(pair(2, 3))
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
}

/// Largest violation of the first-order conditions that force constant
/// equal Kähler angles: anti-i-holomorphy together with invariance along
/// the diagonal directions `e₁ - e₃` and `e₂ - e₄`. Each of the four chains
/// `u_x = -v_y = u_z = -v_w`, `v_x = u_y = v_z = u_w`,
/// `s_x = -t_y = s_z = -t_w`, `t_x = s_y = t_z = s_w` must be constant;
/// the defect is the largest spread within a chain.
pub fn equal_angle_condition_defect(jet: &Jet3) -> f64 {
    let df = &jet.jacobian;
    let chains = [
        [df[(0, 0)], -df[(1, 1)], df[(0, 2)], -df[(1, 3)]],
        [df[(1, 0)], df[(0, 1)], df[(1, 2)], df[(0, 3)]],
        [df[(2, 0)], -df[(3, 1)], df[(2, 2)], -df[(3, 3)]],
        [df[(3, 0)], df[(2, 1)], df[(3, 2)], df[(2, 3)]],
    ];
    chains
        .iter()
        .map(|chain| {
            let max = chain.iter().fold(f64::MIN, |a, &b| a.max(b));
            let min = chain.iter().fold(f64::MAX, |a, &b| a.min(b));
            max - min
        })
        .fold(0.0f64, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{ChartPoint, ImmersionSpec};
    use approx::assert_relative_eq;

    fn jet_for(id: &str, p: ChartPoint) -> Jet3 {
        ImmersionSpec::catalog(id).unwrap().evaluate_jet(p, 1).unwrap()
    }

    #[test]
    fn zero_map_coefficients() {
        let coeffs = angle_coefficients(&Jet3::zero());
        assert_relative_eq!(coeffs.cal_a, 1.0);
        assert_relative_eq!(coeffs.cal_b, 0.0);
        assert_relative_eq!(coeffs.cal_d, 0.0);
        assert_eq!(coeffs.cos_sq_roots(), [0.0, 0.0]);
    }

    #[test]
    fn expanded_coefficients_match_determinant_route() {
        let points = [
            ChartPoint::new(0.3, -0.4, 0.8, 0.1),
            ChartPoint::new(-1.1, 0.6, 0.2, -0.5),
            ChartPoint::new(0.05, 0.9, -0.35, 0.75),
        ];
        for id in crate::catalog::IDS {
            for &p in &points {
                if ImmersionSpec::catalog(id).unwrap().singular_distance(p) < 0.1 {
                    continue;
                }
                let jet = jet_for(id, p);
                let coeffs = angle_coefficients(&jet);
                let g = metric_matrix(&jet);
                let w = pullback_form_matrix(&jet);
                let (ia, ib, idd) = interpolated_coefficients(&g, &w);
                let scale = coeffs.cal_a.abs().max(1.0);
                assert_relative_eq!(coeffs.cal_a, ia, max_relative = 1e-12, epsilon = 1e-12 * scale);
                assert_relative_eq!(coeffs.cal_b, ib, max_relative = 1e-10, epsilon = 1e-10 * scale);
                assert_relative_eq!(coeffs.cal_d, idd, max_relative = 1e-10, epsilon = 1e-10 * scale);
            }
        }
    }

    #[test]
    fn constant_angle_families_have_constant_roots() {
        for a in [0.0, 0.25, 0.5, 1.0, 2.0, -1.5] {
            let spec = ImmersionSpec::catalog_with("linear-a-Jw", &[("a", a)]).unwrap();
            let jet = spec
                .evaluate_jet(ChartPoint::new(2.0, -3.0, 1.0, 0.5), 1)
                .unwrap();
            let coeffs = angle_coefficients(&jet);
            let expected = (2.0 * a.abs() / (1.0 + a * a)).powi(2);
            let roots = coeffs.cos_sq_roots();
            assert_relative_eq!(roots[0], expected, epsilon = 1e-12);
            assert_relative_eq!(roots[1], expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn anti_holomorphy_defects_on_reference_maps() {
        let p = ChartPoint::new(0.7, -0.3, 0.45, 0.9);
        // The padded linear family and the trigonometric graphs satisfy
        // both defect conditions.
        for id in ["alpha-beta-u0v0", "cayley-sin-sinh", "lagrangian-sin-sinh", "prop84-sum"] {
            let jet = jet_for(id, p);
            assert!(
                anti_i_holomorphic_defect(&jet) < 1e-12,
                "{id}: anti-holomorphy defect"
            );
            assert!(
                equal_angle_condition_defect(&jet) < 1e-12,
                "{id}: chain defect"
            );
        }
        // The bare second complex structure is anti-i-holomorphic but does
        // not satisfy the chain conditions.
        let j_jet = jet_for("j-plus-quadratic-2", ChartPoint::default());
        assert!(anti_i_holomorphic_defect(&j_jet) < 1e-12);
        assert!(equal_angle_condition_defect(&j_jet) > 0.5);
        // A graph over a single coordinate has defect one.
        let mut jet = Jet3::zero();
        jet.jacobian[(0, 0)] = 1.0;
        assert_relative_eq!(anti_i_holomorphic_defect(&jet), 1.0);
    }

    #[test]
    fn anti_holomorphy_implies_coefficient_symmetries() {
        let p = ChartPoint::new(0.2, 0.8, -0.4, 0.35);
        for id in ["cayley-sin-sinh", "alpha-beta-u0v0", "prop84-sum"] {
            let jet = jet_for(id, p);
            let c = angle_coefficients(&jet);
            assert_relative_eq!(c.form.a, 0.0, epsilon = 1e-13);
            assert_relative_eq!(c.form.f, 0.0, epsilon = 1e-13);
            assert_relative_eq!(c.form.c, c.form.d, epsilon = 1e-13);
            assert_relative_eq!(c.form.e, -c.form.b, epsilon = 1e-13);
            assert_relative_eq!(c.metric.p, 0.0, epsilon = 1e-13);
            assert_relative_eq!(c.metric.m, 0.0, epsilon = 1e-13);
            assert_relative_eq!(c.metric.q, c.metric.l, epsilon = 1e-13);
            assert_relative_eq!(c.metric.r, -c.metric.k, epsilon = 1e-13);
            assert_relative_eq!(c.metric.h, c.metric.o, epsilon = 1e-13);
            assert_relative_eq!(c.metric.d, c.metric.n, epsilon = 1e-13);
        }
    }

    #[test]
    fn trigonometric_roots_match_closed_form() {
        let spec = ImmersionSpec::catalog("cayley-sin-sinh").unwrap();
        for p in [
            ChartPoint::default(),
            ChartPoint::new(0.9, -0.2, 0.3, 0.6),
            ChartPoint::new(-0.5, 0.1, 1.2, -0.8),
        ] {
            let jet = spec.evaluate_jet(p, 1).unwrap();
            let coeffs = angle_coefficients(&jet);
            let roots = coeffs.cos_sq_roots();
            let expected = spec
                .catalog_map()
                .unwrap()
                .expected_cos_theta(p)
                .unwrap()
                .powi(2);
            // This family has equal angles everywhere, so extracting the
            // individual roots is ill-conditioned (√ε); the symmetric
            // functions of the roots are exact to working precision.
            assert_relative_eq!(
                coeffs.cal_b / coeffs.cal_a,
                2.0 * expected,
                max_relative = 1e-12,
                epsilon = 1e-13
            );
            assert_relative_eq!(
                coeffs.cal_d / coeffs.cal_a,
                expected * expected,
                max_relative = 1e-12,
                epsilon = 1e-13
            );
            assert_relative_eq!(roots[0], expected, epsilon = 1e-7);
            assert_relative_eq!(roots[1], expected, epsilon = 1e-7);
        }
    }
}
