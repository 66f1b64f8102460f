//! The two Cayley four-forms of flat `R⁸` and frame calibration measures.
//!
//! Both forms have comass one and calibrate four-planes; they differ in
//! which rotation class of planes they calibrate. `Omega` restricts to
//! `+vol` on the graph of the zero map with its chart orientation, and so
//! does `OmegaPrime`; they differ on the mixed tangent-normal pairings,
//! which is what [`omega_triangle`] measures.

use crate::numerics::det8;
use crate::point::PointGeometry;
use crate::{Mat3, Vec8};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Which of the two Cayley four-forms to use.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CayleyVariant {
    /// The form whose mixed pairing matrix at the zero map is
    /// `diag(1, 1, -1)`.
    Omega,
    /// The form whose mixed pairing matrix at the zero map is the identity.
    OmegaPrime,
}

impl CayleyVariant {
    /// Stable lowercase label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            CayleyVariant::Omega => "omega",
            CayleyVariant::OmegaPrime => "omega-prime",
        }
    }
}

/// A constant four-form on `R⁸`, stored by its coefficients on strictly
/// increasing index quadruples.
#[derive(Clone, Debug, Default)]
pub struct FourForm8 {
    terms: BTreeMap<[u8; 4], f64>,
}

/// Sorts a quadruple, returning the permutation sign, or `None` when an
/// index repeats.
fn sort_with_sign(mut idx: [u8; 4]) -> Option<([u8; 4], f64)> {
    let mut sign = 1.0;
    for i in 0..3 {
        for j in 0..3 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((idx, sign))
    }
}

impl FourForm8 {
    /// The empty form.
    pub fn new() -> Self {
        FourForm8::default()
    }

    /// Adds `coeff` to the coefficient on the (not necessarily sorted)
    /// quadruple `idx` of zero-based indices; repeated indices are ignored.
    pub fn add_term(&mut self, idx: [u8; 4], coeff: f64) {
        if let Some((sorted, sign)) = sort_with_sign(idx) {
            let slot = self.terms.entry(sorted).or_insert(0.0);
            *slot += sign * coeff;
            if *slot == 0.0 {
                self.terms.remove(&sorted);
            }
        }
    }

    /// The coefficient on `idx` (any index order, zero-based), with the
    /// sign of the sorting permutation; zero for repeated indices.
    pub fn coefficient(&self, idx: [u8; 4]) -> f64 {
        match sort_with_sign(idx) {
            Some((sorted, sign)) => sign * self.terms.get(&sorted).copied().unwrap_or(0.0),
            None => 0.0,
        }
    }

    /// Number of stored monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Evaluates the form on four vectors.
    pub fn evaluate(&self, vectors: &[Vec8; 4]) -> f64 {
        let mut total = 0.0;
        for (idx, coeff) in &self.terms {
            let minor = nalgebra::Matrix4::from_fn(|r, c| vectors[c][idx[r] as usize]);
            total += coeff * minor.determinant();
        }
        total
    }

    /// The chosen Cayley form (cached).
    pub fn cayley(variant: CayleyVariant) -> &'static FourForm8 {
        static OMEGA: OnceLock<FourForm8> = OnceLock::new();
        static OMEGA_PRIME: OnceLock<FourForm8> = OnceLock::new();
        match variant {
            CayleyVariant::Omega => OMEGA.get_or_init(|| build_cayley_form(variant)),
            CayleyVariant::OmegaPrime => {
                OMEGA_PRIME.get_or_init(|| build_cayley_form(variant))
            }
        }
    }
}

/// Graph coordinates of the Spin(7) display axes: the normal-form monomial
/// tables below are written in a frame whose complex structure pairs
/// consecutive axes (1,2), (3,4), (5,6), (7,8), while the graph chart pairs
/// chart axis `a` with fiber axis `a+4`. Display axis `k` is graph axis
/// `DISPLAY_AXIS[k]`, which turns the form's Kähler part into
/// `½ω₀∧ω₀` for the ambient structure the angle machinery uses.
const DISPLAY_AXIS: [u8; 8] = [0, 4, 1, 5, 2, 6, 3, 7];

/// Builds a Cayley form from its monomial table (indices one-based in the
/// table for direct comparison with the usual displays), transported to
/// graph coordinates.
fn build_cayley_form(variant: CayleyVariant) -> FourForm8 {
    let monomials: [([u8; 4], f64); 14] = match variant {
        CayleyVariant::Omega => [
            ([1, 2, 3, 4], 1.0),
            ([5, 6, 7, 8], 1.0),
            ([1, 2, 5, 6], 1.0),
            ([1, 2, 7, 8], 1.0),
            ([3, 4, 5, 6], 1.0),
            ([3, 4, 7, 8], 1.0),
            ([1, 3, 5, 7], 1.0),
            ([1, 3, 6, 8], -1.0),
            ([2, 4, 5, 7], -1.0),
            ([2, 4, 6, 8], 1.0),
            ([1, 4, 5, 8], -1.0),
            ([1, 4, 6, 7], -1.0),
            ([2, 3, 5, 8], -1.0),
            ([2, 3, 6, 7], -1.0),
        ],
        CayleyVariant::OmegaPrime => [
            ([1, 2, 3, 4], 1.0),
            ([5, 6, 7, 8], 1.0),
            ([1, 2, 5, 6], 1.0),
            ([1, 2, 7, 8], -1.0),
            ([3, 4, 5, 6], -1.0),
            ([3, 4, 7, 8], 1.0),
            ([1, 3, 5, 7], 1.0),
            ([1, 3, 6, 8], 1.0),
            ([2, 4, 5, 7], 1.0),
            ([2, 4, 6, 8], 1.0),
            ([1, 4, 5, 8], 1.0),
            ([1, 4, 6, 7], -1.0),
            ([2, 3, 5, 8], -1.0),
            ([2, 3, 6, 7], 1.0),
        ],
    };
    let mut form = FourForm8::new();
    for (idx, coeff) in monomials {
        form.add_term(idx.map(|i| DISPLAY_AXIS[(i - 1) as usize]), coeff);
    }
    form
}

/// `1 - Ω(U₁, U₂, U₃, U₄)` on the oriented tangent frame; zero exactly when
/// the tangent plane is calibrated by the chosen form, at most two.
pub fn calibration_defect(geom: &PointGeometry, variant: CayleyVariant) -> f64 {
    1.0 - FourForm8::cayley(variant).evaluate(&geom.tangent_frame)
}

/// Self-dual two-vector bases used for the mixed pairing: index pairs with
/// signs, on either the tangent or the normal frame.
fn pairing_basis(variant: CayleyVariant) -> [[(usize, usize, f64); 2]; 3] {
    match variant {
        CayleyVariant::Omega => [
            [(0, 1, 1.0), (2, 3, 1.0)],
            [(0, 2, 1.0), (1, 3, -1.0)],
            [(0, 3, 1.0), (1, 2, 1.0)],
        ],
        CayleyVariant::OmegaPrime => [
            [(0, 1, 1.0), (2, 3, -1.0)],
            [(0, 2, 1.0), (1, 3, 1.0)],
            [(0, 3, 1.0), (1, 2, -1.0)],
        ],
    }
}

/// Mixed tangent-normal pairing of the Cayley form: entry `(i, j)` is
/// `¼·Ω(β_i^T ∧ β_j^N)` over the matched two-vector bases (self-dual for
/// `Omega`, anti-self-dual for `OmegaPrime`). Orthogonal with determinant
/// `-1` for `Omega` and `+1` for `OmegaPrime` on Cayley-relevant frames.
pub fn omega_triangle(geom: &PointGeometry, variant: CayleyVariant) -> Mat3 {
    let form = FourForm8::cayley(variant);
    let basis = pairing_basis(variant);
    Mat3::from_fn(|i, j| {
        let mut total = 0.0;
        for &(a, b, s1) in &basis[i] {
            for &(c, d, s2) in &basis[j] {
                total += s1
                    * s2
                    * form.evaluate(&[
                        geom.tangent_frame[a],
                        geom.tangent_frame[b],
                        geom.normal_frame[c],
                        geom.normal_frame[d],
                    ]);
            }
        }
        total / 4.0
    })
}

/// `det₈[U₁, U₂, U₃, U₄, Φ(U₁), Φ(U₂), Φ(U₃), Φ(U₄)]` on the oriented
/// tangent frame; equals `sin⁴θ` at equal-angle points and is invariant
/// under rotations of the frame.
pub fn phi_volume(geom: &PointGeometry) -> f64 {
    let mut columns = [Vec8::zeros(); 8];
    columns[..4].copy_from_slice(&geom.tangent_frame);
    for (i, u) in geom.tangent_frame.iter().enumerate() {
        columns[4 + i] = geom.phi_apply(u);
    }
    det8(&columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{ChartPoint, ImmersionSpec};
    use crate::point::{point_geometry, Tolerances};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn geom(id: &str, p: ChartPoint) -> PointGeometry {
        let spec = ImmersionSpec::catalog(id).unwrap();
        point_geometry(&spec, p, &Tolerances::default()).unwrap()
    }

    fn axis(i: usize) -> Vec8 {
        Vec8::from_fn(|r, _| if r == i { 1.0 } else { 0.0 })
    }

    #[test]
    fn monomial_tables_are_loaded() {
        for variant in [CayleyVariant::Omega, CayleyVariant::OmegaPrime] {
            let form = FourForm8::cayley(variant);
            assert_eq!(form.term_count(), 14);
            // Chart and fiber blocks are calibrated planes for both forms.
            assert_relative_eq!(form.coefficient([0, 1, 2, 3]), 1.0);
            assert_relative_eq!(form.coefficient([4, 5, 6, 7]), 1.0);
            // Antisymmetric lookup.
            assert_relative_eq!(form.coefficient([1, 0, 2, 3]), -1.0);
            assert_relative_eq!(form.coefficient([0, 0, 2, 3]), 0.0);
        }
    }

    #[test]
    fn complex_coordinate_plane_values() {
        // The first form calibrates every J₀-complex plane in its complex
        // orientation; the second form's complex structure is differently
        // embedded and flips sign on the (z₁z₄) and (z₂z₃) planes.
        let pairs: [([usize; 4], f64); 6] = [
            ([0, 4, 1, 5], 1.0),
            ([0, 4, 2, 6], 1.0),
            ([0, 4, 3, 7], -1.0),
            ([1, 5, 2, 6], -1.0),
            ([1, 5, 3, 7], 1.0),
            ([2, 6, 3, 7], 1.0),
        ];
        for (idx, prime_value) in pairs {
            let plane = [axis(idx[0]), axis(idx[1]), axis(idx[2]), axis(idx[3])];
            assert_relative_eq!(
                FourForm8::cayley(CayleyVariant::Omega).evaluate(&plane),
                1.0
            );
            assert_relative_eq!(
                FourForm8::cayley(CayleyVariant::OmegaPrime).evaluate(&plane),
                prime_value
            );
        }
    }

    #[test]
    fn volume_part_tracks_the_lagrangian_phase() {
        // Rotating one chart axis into its fiber partner turns the chart
        // block through a family of Lagrangian planes; both forms restrict
        // to the real part of the complex volume there, picking up the
        // phase cosine.
        for phase in [0.0, std::f64::consts::FRAC_PI_3, 1.1] {
            let rotated = [
                phase.cos() * axis(0) + phase.sin() * axis(4),
                axis(1),
                axis(2),
                axis(3),
            ];
            for variant in [CayleyVariant::Omega, CayleyVariant::OmegaPrime] {
                assert_relative_eq!(
                    FourForm8::cayley(variant).evaluate(&rotated),
                    phase.cos(),
                    epsilon = 1e-14
                );
            }
        }
    }

    #[test]
    fn evaluation_is_alternating_and_multilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let form = FourForm8::cayley(CayleyVariant::Omega);
        for _ in 0..50 {
            let v: [Vec8; 4] =
                std::array::from_fn(|_| Vec8::from_fn(|_, _| rng.gen_range(-1.0..1.0)));
            let base = form.evaluate(&v);
            let mut swapped = v;
            swapped.swap(0, 2);
            assert_relative_eq!(form.evaluate(&swapped), -base, epsilon = 1e-12);
            let repeated = [v[0], v[0], v[2], v[3]];
            assert_relative_eq!(form.evaluate(&repeated), 0.0, epsilon = 1e-12);
            let scaled = [2.5 * v[0], v[1], v[2], v[3]];
            assert_relative_eq!(form.evaluate(&scaled), 2.5 * base, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_map_frame_is_calibrated_by_both_variants() {
        let g = crate::point::PointGeometry::from_jet(
            ChartPoint::default(),
            crate::jet::Jet3::zero(),
            &Tolerances::default(),
        )
        .unwrap();
        for variant in [CayleyVariant::Omega, CayleyVariant::OmegaPrime] {
            assert_relative_eq!(calibration_defect(&g, variant), 0.0, epsilon = 1e-14);
        }
        // Φ at this Lagrangian graph sends U_a to the matching normal axis.
        assert_relative_eq!(phi_volume(&g), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn zero_map_mixed_pairings() {
        let g = crate::point::PointGeometry::from_jet(
            ChartPoint::default(),
            crate::jet::Jet3::zero(),
            &Tolerances::default(),
        )
        .unwrap();
        let tri = omega_triangle(&g, CayleyVariant::Omega);
        assert_relative_eq!((tri + Mat3::identity()).norm(), 0.0, epsilon = 1e-13);
        let tri_prime = omega_triangle(&g, CayleyVariant::OmegaPrime);
        let expected = Mat3::from_diagonal(&nalgebra::Vector3::new(-1.0, -1.0, 1.0));
        assert_relative_eq!((tri_prime - expected).norm(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn cayley_families_are_calibrated() {
        // The equal-angle catalog families restrict the first form to the
        // volume form exactly, in the orientation the frame builder picks.
        for id in [
            "cayley-sin-sinh",
            "alpha-beta-u0v0",
            "prop84-sum",
            "linear-a-Jw",
            "j-plus-quadratic-1",
            "lagrangian-sin-sinh",
        ] {
            for p in [
                ChartPoint::new(0.3, -0.4, 0.8, 0.1),
                ChartPoint::new(-0.7, 0.2, 0.5, 0.6),
            ] {
                let g = geom(id, p);
                let defect = calibration_defect(&g, CayleyVariant::Omega);
                assert!(defect.abs() < 1e-12, "{id} at {p:?}: defect {defect:.3e}");
            }
        }
    }

    #[test]
    fn ambient_volume_and_plane_values() {
        // Ω(e₁e₂e₃e₄) = Ω(e₅e₆e₇e₈) = 1 for both variants.
        for variant in [CayleyVariant::Omega, CayleyVariant::OmegaPrime] {
            let form = FourForm8::cayley(variant);
            assert_relative_eq!(form.evaluate(&[axis(0), axis(1), axis(2), axis(3)]), 1.0);
            assert_relative_eq!(form.evaluate(&[axis(4), axis(5), axis(6), axis(7)]), 1.0);
            // A mixed axis plane with no matching monomial evaluates to 0.
            assert_relative_eq!(form.evaluate(&[axis(0), axis(1), axis(2), axis(4)]), 0.0);
        }
    }

    #[test]
    fn comass_does_not_exceed_one_on_random_frames() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut worst: f64 = 0.0;
        for variant in [CayleyVariant::Omega, CayleyVariant::OmegaPrime] {
            let form = FourForm8::cayley(variant);
            for _ in 0..20_000 {
                let raw =
                    nalgebra::SMatrix::<f64, 8, 4>::from_fn(|_, _| rng.gen_range(-1.0..1.0));
                let qr = raw.qr();
                let q = qr.q();
                let frame: [Vec8; 4] = std::array::from_fn(|c| q.column(c).into_owned());
                worst = worst.max(form.evaluate(&frame).abs());
            }
        }
        assert!(worst <= 1.0 + 1e-9, "comass exceeded: {worst:.12}");
        // Orthonormal frames do reach values near the comass somewhere.
        assert!(worst > 0.5, "sampling failed to exercise the form: {worst:.3}");
    }

    #[test]
    fn mixed_pairing_is_orthogonal_on_calibrated_points() {
        // The pairing is an isometry only where the submanifold is
        // calibrated by the variant in question: orientation-reversing
        // (det -1) for the first form on self-dual bases,
        // orientation-preserving (det +1) for the second on
        // anti-self-dual bases.
        let omega_ids = ["cayley-sin-sinh", "lagrangian-sin-sinh", "j-plus-quadratic-1"];
        let prime_ids = ["lagrangian-sin-sinh", "linear-a-Jw"];
        let points = [
            ChartPoint::new(0.3, -0.4, 0.8, 0.1),
            ChartPoint::new(0.6, -0.2, 0.4, 0.9),
        ];
        let cases = omega_ids
            .iter()
            .map(|id| (*id, CayleyVariant::Omega, -1.0))
            .chain(prime_ids.iter().map(|id| (*id, CayleyVariant::OmegaPrime, 1.0)));
        for (id, variant, det) in cases {
            for &p in &points {
                let g = geom(id, p);
                assert!(
                    calibration_defect(&g, variant).abs() < 1e-12,
                    "{id} is not calibrated by {variant:?}"
                );
                let tri = omega_triangle(&g, variant);
                assert_relative_eq!(
                    (tri.transpose() * tri - Mat3::identity()).norm(),
                    0.0,
                    epsilon = 1e-9
                );
                assert_relative_eq!(tri.determinant(), det, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn phi_volume_is_frame_rotation_invariant() {
        let g = geom("j-plus-quadratic-1", ChartPoint::new(0.6, -0.2, 0.4, 0.9));
        let base = phi_volume(&g);
        // Rotate the tangent frame in a coordinate plane and recompute.
        let mut rotated = g.clone();
        let (c, s) = (0.6f64, 0.8f64);
        let u0 = g.tangent_frame[0];
        let u1 = g.tangent_frame[1];
        rotated.tangent_frame[0] = c * u0 + s * u1;
        rotated.tangent_frame[1] = -s * u0 + c * u1;
        assert_relative_eq!(phi_volume(&rotated), base, epsilon = 1e-12);
    }
}
