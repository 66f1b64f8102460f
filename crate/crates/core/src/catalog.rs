//! Built-in example maps.
//!
//! Each entry defines a map `f` whose graph is a four-dimensional
//! submanifold of `R^8` with known structure: constant or closed-form Kähler
//! angles, declared complex / Lagrangian / singular loci, and in several
//! cases minimality or calibration by a Cayley form. Entries serve both as
//! regression anchors (their closed forms are pinned in tests) and as
//! interesting inputs for the field-level analyses.

use crate::error::{GeomError, Result};
use crate::jet::{ChartPoint, Jet3};
use crate::quaternion::Quaternion;

/// Kinds of special loci an entry declares.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LocusKind {
    /// Points where some Kähler angle vanishes (a complex direction exists).
    Complex,
    /// Points where both Kähler angles are π/2.
    Lagrangian,
    /// Points where the map itself is undefined or not smooth.
    Singular,
}

/// A declared special locus of a catalog entry.
#[derive(Copy, Clone, Debug)]
pub struct DeclaredLocus {
    /// What degenerates there.
    pub kind: LocusKind,
    /// Human-readable description in chart coordinates.
    pub description: &'static str,
}

/// A tunable real parameter of a catalog entry.
#[derive(Copy, Clone, Debug)]
pub struct ParameterSpec {
    /// Parameter name accepted by [`build`].
    pub name: &'static str,
    /// Default value.
    pub default: f64,
}

/// Static description of one catalog entry.
#[derive(Copy, Clone, Debug)]
pub struct CatalogEntry {
    /// Stable identifier.
    pub id: &'static str,
    /// One-line description of the family.
    pub summary: &'static str,
    /// Codomain dimension of `f` (3 or 4).
    pub codomain_dim: u8,
    /// Tunable parameters with defaults.
    pub parameters: &'static [ParameterSpec],
    /// Declared special loci.
    pub loci: &'static [DeclaredLocus],
}

/// All catalog identifiers in listing order.
pub const IDS: [&str; 8] = [
    "linear-a-Jw",
    "lagrangian-sin-sinh",
    "cayley-sin-sinh",
    "j-plus-quadratic-1",
    "j-plus-quadratic-2",
    "alpha-beta-u0v0",
    "prop84-sum",
    "hopf-cone",
];

static ENTRIES: [CatalogEntry; 8] = [
    CatalogEntry {
        id: "linear-a-Jw",
        summary: "scalar multiple a·i of the first chart complex structure; \
                  constant angles cos θ = 2|a|/(1+a²)",
        codomain_dim: 4,
        parameters: &[ParameterSpec {
            name: "a",
            default: 0.5,
        }],
        loci: &[DeclaredLocus {
            kind: LocusKind::Complex,
            description: "entire chart when |a| = 1",
        }],
    },
    CatalogEntry {
        id: "lagrangian-sin-sinh",
        summary: "minimal Lagrangian graph (u, v, u, v) with \
                  u = sin(x+z)cosh(y+w), v = -cos(x+z)sinh(y+w)",
        codomain_dim: 4,
        parameters: &[],
        loci: &[DeclaredLocus {
            kind: LocusKind::Lagrangian,
            description: "entire chart",
        }],
    },
    CatalogEntry {
        id: "cayley-sin-sinh",
        summary: "calibrated graph (u, v, -u, -v) of the same trigonometric \
                  pair; closed-form angle, equal angles everywhere",
        codomain_dim: 4,
        parameters: &[],
        loci: &[DeclaredLocus {
            kind: LocusKind::Lagrangian,
            description: "x+z = π/2 + kπ together with y+w = 0",
        }],
    },
    CatalogEntry {
        id: "j-plus-quadratic-1",
        summary: "second chart complex structure plus the full quadratic \
                  correction; complex exactly at the origin",
        codomain_dim: 4,
        parameters: &[],
        loci: &[DeclaredLocus {
            kind: LocusKind::Complex,
            description: "chart origin",
        }],
    },
    CatalogEntry {
        id: "j-plus-quadratic-2",
        summary: "second chart complex structure plus a quadratic correction \
                  in the first two components only",
        codomain_dim: 4,
        parameters: &[],
        loci: &[DeclaredLocus {
            kind: LocusKind::Complex,
            description: "the coordinate plane x = y = 0",
        }],
    },
    CatalogEntry {
        id: "alpha-beta-u0v0",
        summary: "linear family (α u₀, α v₀, β u₀, β v₀) with u₀ = x+y+z+w, \
                  v₀ = x-y+z-w; constant equal angles",
        codomain_dim: 4,
        parameters: &[
            ParameterSpec {
                name: "alpha",
                default: 0.25,
            },
            ParameterSpec {
                name: "beta",
                default: 0.75,
            },
        ],
        loci: &[DeclaredLocus {
            kind: LocusKind::Lagrangian,
            description: "entire chart when α = β",
        }],
    },
    CatalogEntry {
        id: "prop84-sum",
        summary: "minimal Lagrangian trigonometric graph shifted by the \
                  (α, β) linear family; closed-form pointwise equal angles",
        codomain_dim: 4,
        parameters: &[
            ParameterSpec {
                name: "alpha",
                default: 0.25,
            },
            ParameterSpec {
                name: "beta",
                default: 0.75,
            },
        ],
        loci: &[DeclaredLocus {
            kind: LocusKind::Lagrangian,
            description: "entire chart when α = β",
        }],
    },
    CatalogEntry {
        id: "hopf-cone",
        summary: "cone over the Hopf-lift torus: f = (√5/2)·x̄εx/|x| into the \
                  last three coordinates; minimal away from the origin",
        codomain_dim: 3,
        parameters: &[
            ParameterSpec {
                name: "eps_i",
                default: 1.0,
            },
            ParameterSpec {
                name: "eps_j",
                default: 0.0,
            },
            ParameterSpec {
                name: "eps_k",
                default: 0.0,
            },
        ],
        loci: &[DeclaredLocus {
            kind: LocusKind::Singular,
            description: "chart origin",
        }],
    },
];

/// All catalog entries in listing order.
pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

/// Looks up an entry by identifier.
pub fn entry(id: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// A catalog map instantiated with concrete parameter values.
#[derive(Clone, Debug, PartialEq)]
pub enum CatalogMap {
    /// `f = a·i` with `i(x,y,z,w) = (-y, x, -w, z)`.
    LinearAJw { a: f64 },
    /// `f = (u, v, u, v)`, trigonometric minimal Lagrangian graph.
    LagrangianSinSinh,
    /// `f = (u, v, -u, -v)`, trigonometric calibrated graph.
    CayleySinSinh,
    /// `f = j + quadratic` with corrections in all four components.
    JPlusQuadratic1,
    /// `f = j + quadratic` with corrections in the first two components.
    JPlusQuadratic2,
    /// `f = (α u₀, α v₀, β u₀, β v₀)`.
    AlphaBetaU0V0 { alpha: f64, beta: f64 },
    /// Trigonometric Lagrangian graph shifted by the (α, β) linear family.
    SinSinhPlusLinear { alpha: f64, beta: f64 },
    /// `f = (√5/2)·x̄εx/|x|` with unit imaginary ε, codomain dimension 3.
    HopfCone { eps: Quaternion },
}

/// Instantiates a catalog map from its identifier and parameter overrides.
pub fn build(id: &str, overrides: &[(&str, f64)]) -> Result<CatalogMap> {
    let entry = entry(id).ok_or_else(|| GeomError::UnknownCatalogEntry(id.to_string()))?;
    let mut values: Vec<f64> = entry.parameters.iter().map(|p| p.default).collect();
    for &(name, value) in overrides {
        let slot = entry
            .parameters
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| GeomError::UnknownParameter {
                id: id.to_string(),
                name: name.to_string(),
            })?;
        if !value.is_finite() {
            return Err(GeomError::InvalidParameter {
                id: id.to_string(),
                name: name.to_string(),
                value,
                reason: "value must be finite".to_string(),
            });
        }
        values[slot] = value;
    }
    Ok(match id {
        "linear-a-Jw" => CatalogMap::LinearAJw { a: values[0] },
        "lagrangian-sin-sinh" => CatalogMap::LagrangianSinSinh,
        "cayley-sin-sinh" => CatalogMap::CayleySinSinh,
        "j-plus-quadratic-1" => CatalogMap::JPlusQuadratic1,
        "j-plus-quadratic-2" => CatalogMap::JPlusQuadratic2,
        "alpha-beta-u0v0" => CatalogMap::AlphaBetaU0V0 {
            alpha: values[0],
            beta: values[1],
        },
        "prop84-sum" => CatalogMap::SinSinhPlusLinear {
            alpha: values[0],
            beta: values[1],
        },
        "hopf-cone" => {
            let eps = Quaternion::new(0.0, values[0], values[1], values[2]);
            let norm = eps.norm();
            if norm < 1e-8 {
                return Err(GeomError::InvalidParameter {
                    id: id.to_string(),
                    name: "eps_i".to_string(),
                    value: norm,
                    reason: "the imaginary direction (eps_i, eps_j, eps_k) must be nonzero"
                        .to_string(),
                });
            }
            CatalogMap::HopfCone {
                eps: eps.scale(1.0 / norm),
            }
        }
        _ => unreachable!("entry table and builder disagree on id {id}"),
    })
}

impl CatalogMap {
    /// The identifier this map was built from.
    pub fn id(&self) -> &'static str {
        match self {
            CatalogMap::LinearAJw { .. } => "linear-a-Jw",
            CatalogMap::LagrangianSinSinh => "lagrangian-sin-sinh",
            CatalogMap::CayleySinSinh => "cayley-sin-sinh",
            CatalogMap::JPlusQuadratic1 => "j-plus-quadratic-1",
            CatalogMap::JPlusQuadratic2 => "j-plus-quadratic-2",
            CatalogMap::AlphaBetaU0V0 { .. } => "alpha-beta-u0v0",
            CatalogMap::SinSinhPlusLinear { .. } => "prop84-sum",
            CatalogMap::HopfCone { .. } => "hopf-cone",
        }
    }

    /// Codomain dimension of the map.
    pub fn codomain_dim(&self) -> u8 {
        match self {
            CatalogMap::HopfCone { .. } => 3,
            _ => 4,
        }
    }

    /// Current parameter values, in declaration order.
    pub fn parameters(&self) -> Vec<(&'static str, f64)> {
        match *self {
            CatalogMap::LinearAJw { a } => vec![("a", a)],
            CatalogMap::AlphaBetaU0V0 { alpha, beta }
            | CatalogMap::SinSinhPlusLinear { alpha, beta } => {
                vec![("alpha", alpha), ("beta", beta)]
            }
            CatalogMap::HopfCone { eps } => {
                vec![("eps_i", eps.i), ("eps_j", eps.j), ("eps_k", eps.k)]
            }
            _ => Vec::new(),
        }
    }

    /// Distance from `p` to the nearest singular locus.
    pub fn singular_distance(&self, p: ChartPoint) -> f64 {
        match self {
            CatalogMap::HopfCone { .. } => p.norm(),
            _ => f64::INFINITY,
        }
    }

    /// Closed-form larger Kähler angle cosine at `p`, where the family has
    /// one.
    pub fn expected_cos_theta(&self, p: ChartPoint) -> Option<f64> {
        match *self {
            CatalogMap::LinearAJw { a } => Some(2.0 * a.abs() / (1.0 + a * a)),
            CatalogMap::LagrangianSinSinh => Some(0.0),
            CatalogMap::CayleySinSinh => {
                let [x, y, z, w] = p.coords;
                let c2 = (x + z).cos().powi(2) + (y + w).sinh().powi(2);
                Some(2.0 * (c2 / (1.0 + 4.0 * c2)).sqrt())
            }
            CatalogMap::AlphaBetaU0V0 { alpha, beta } => {
                let zeta = 2.0 * (beta - alpha) * (beta - alpha);
                Some((zeta / (1.0 + 4.0 * (alpha * alpha + beta * beta))).sqrt())
            }
            CatalogMap::SinSinhPlusLinear { alpha, beta } => {
                let [x, y, z, w] = p.coords;
                let ux = (x + z).cos() * (y + w).cosh();
                let uy = (x + z).sin() * (y + w).sinh();
                let zeta = 2.0 * (beta - alpha) * (beta - alpha);
                let shear =
                    (2.0 * ux + alpha + beta).powi(2) + (2.0 * uy + alpha + beta).powi(2);
                Some((zeta / (1.0 + shear + zeta)).sqrt())
            }
            _ => None,
        }
    }

    /// Exact jet at `p` up to `order` derivatives.
    pub fn jet(&self, p: ChartPoint, order: u8) -> Result<Jet3> {
        let mut jet = Jet3::zero();
        match *self {
            CatalogMap::LinearAJw { a } => {
                fill_linear(&mut jet, &scale_rows(I_ROWS, a), p, order);
            }
            CatalogMap::LagrangianSinSinh => {
                let (u, v) = sin_sinh_tables(p);
                fill_separable(&mut jet, 0, &u, 1.0, order);
                fill_separable(&mut jet, 1, &v, 1.0, order);
                fill_separable(&mut jet, 2, &u, 1.0, order);
                fill_separable(&mut jet, 3, &v, 1.0, order);
            }
            CatalogMap::CayleySinSinh => {
                let (u, v) = sin_sinh_tables(p);
                fill_separable(&mut jet, 0, &u, 1.0, order);
                fill_separable(&mut jet, 1, &v, 1.0, order);
                fill_separable(&mut jet, 2, &u, -1.0, order);
                fill_separable(&mut jet, 3, &v, -1.0, order);
            }
            CatalogMap::JPlusQuadratic1 => {
                fill_linear(&mut jet, &J_ROWS, p, order);
                fill_plane_quadratic(&mut jet, 0, 1, 0, 1, p, order);
                fill_plane_quadratic(&mut jet, 2, 3, 2, 3, p, order);
            }
            CatalogMap::JPlusQuadratic2 => {
                fill_linear(&mut jet, &J_ROWS, p, order);
                fill_plane_quadratic(&mut jet, 0, 1, 0, 1, p, order);
            }
            CatalogMap::AlphaBetaU0V0 { alpha, beta } => {
                fill_linear(&mut jet, &alpha_beta_rows(alpha, beta), p, order);
            }
            CatalogMap::SinSinhPlusLinear { alpha, beta } => {
                let (u, v) = sin_sinh_tables(p);
                fill_separable(&mut jet, 0, &u, 1.0, order);
                fill_separable(&mut jet, 1, &v, 1.0, order);
                fill_separable(&mut jet, 2, &u, 1.0, order);
                fill_separable(&mut jet, 3, &v, 1.0, order);
                fill_linear(&mut jet, &alpha_beta_rows(alpha, beta), p, order);
            }
            CatalogMap::HopfCone { eps } => {
                fill_hopf_cone(&mut jet, eps, p, order)?;
            }
        }
        Ok(jet)
    }
}

/// Matrix rows of the first chart complex structure
/// `i(x,y,z,w) = (-y, x, -w, z)`.
const I_ROWS: [[f64; 4]; 4] = [
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
];

/// Matrix rows of the second chart complex structure
/// `j(x,y,z,w) = (-z, w, x, -y)`.
const J_ROWS: [[f64; 4]; 4] = [
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
];

fn scale_rows(rows: [[f64; 4]; 4], t: f64) -> [[f64; 4]; 4] {
    rows.map(|r| r.map(|x| x * t))
}

fn alpha_beta_rows(alpha: f64, beta: f64) -> [[f64; 4]; 4] {
    [
        [alpha, alpha, alpha, alpha],
        [alpha, -alpha, alpha, -alpha],
        [beta, beta, beta, beta],
        [beta, -beta, beta, -beta],
    ]
}

/// Adds a linear map (given by rows) to a jet.
fn fill_linear(jet: &mut Jet3, rows: &[[f64; 4]; 4], p: ChartPoint, order: u8) {
    for i in 0..4 {
        for a in 0..4 {
            jet.value[i] += rows[i][a] * p.coords[a];
            if order >= 1 {
                jet.jacobian[(i, a)] += rows[i][a];
            }
        }
    }
}

/// Adds the quadratic pair `(+(s² - t²), -2st)` in chart axes `(s_axis,
/// t_axis)` to components `(comp_plus, comp_minus)`.
fn fill_plane_quadratic(
    jet: &mut Jet3,
    comp_plus: usize,
    comp_minus: usize,
    s_axis: usize,
    t_axis: usize,
    p: ChartPoint,
    order: u8,
) {
    let s = p.coords[s_axis];
    let t = p.coords[t_axis];
    jet.value[comp_plus] += s * s - t * t;
    jet.value[comp_minus] += -2.0 * s * t;
    if order >= 1 {
        jet.jacobian[(comp_plus, s_axis)] += 2.0 * s;
        jet.jacobian[(comp_plus, t_axis)] += -2.0 * t;
        jet.jacobian[(comp_minus, s_axis)] += -2.0 * t;
        jet.jacobian[(comp_minus, t_axis)] += -2.0 * s;
    }
    if order >= 2 {
        jet.hessian[comp_plus][(s_axis, s_axis)] += 2.0;
        jet.hessian[comp_plus][(t_axis, t_axis)] += -2.0;
        jet.hessian[comp_minus][(s_axis, t_axis)] += -2.0;
        jet.hessian[comp_minus][(t_axis, s_axis)] += -2.0;
    }
}

/// Mixed-derivative tables `d[m][n] = ∂_ρ^m ∂_σ^n` of
/// `u = sin ρ cosh σ` and `v = -cos ρ sinh σ` at `ρ = x+z`, `σ = y+w`.
fn sin_sinh_tables(p: ChartPoint) -> ([[f64; 4]; 4], [[f64; 4]; 4]) {
    let rho = p.coords[0] + p.coords[2];
    let sigma = p.coords[1] + p.coords[3];
    let ds = [rho.sin(), rho.cos(), -rho.sin(), -rho.cos()];
    let dc = [rho.cos(), -rho.sin(), -rho.cos(), rho.sin()];
    let dch = [sigma.cosh(), sigma.sinh()];
    let dsh = [sigma.sinh(), sigma.cosh()];
    let mut u = [[0.0; 4]; 4];
    let mut v = [[0.0; 4]; 4];
    for m in 0..4 {
        for n in 0..4 {
            u[m][n] = ds[m] * dch[n % 2];
            v[m][n] = -dc[m] * dsh[n % 2];
        }
    }
    (u, v)
}

/// Number of derivatives falling on `ρ = x+z` and on `σ = y+w` for a chart
/// multi-index.
#[inline(always)]
fn rho_sigma_counts(axes: &[usize]) -> (usize, usize) {
    let m = axes.iter().filter(|&&a| a == 0 || a == 2).count();
    (m, axes.len() - m)
}

/// Adds `sign` times the separable function with mixed-derivative table `d`
/// to component `i` of a jet.
fn fill_separable(jet: &mut Jet3, i: usize, d: &[[f64; 4]; 4], sign: f64, order: u8) {
    jet.value[i] += sign * d[0][0];
    if order >= 1 {
        for a in 0..4 {
            let (m, n) = rho_sigma_counts(&[a]);
            jet.jacobian[(i, a)] += sign * d[m][n];
        }
    }
    if order >= 2 {
        for a in 0..4 {
            for b in 0..4 {
                let (m, n) = rho_sigma_counts(&[a, b]);
                jet.hessian[i][(a, b)] += sign * d[m][n];
            }
        }
    }
    if order >= 3 {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let (m, n) = rho_sigma_counts(&[a, b, c]);
                    jet.third[i][a][(b, c)] += sign * d[m][n];
                }
            }
        }
    }
}

/// Closed-form jet of `f = (√5/2)·x̄εx/|x|` into the last three components.
///
/// With `Q(x) = x̄εx`, `S_a = x̄εe_a + ē_aεx`, `T_ab = ē_aεe_b + ē_bεe_a`
/// (all pure imaginary) and the radial factors
/// `φ₂(a,b) = δ_ab/r³ - 3x_ax_b/r⁵`,
/// `φ₃(a,b,c) = -3(δ_ab x_c + δ_ac x_b + δ_bc x_a)/r⁵ + 15 x_ax_bx_c/r⁷`,
/// the derivatives of `η = Q/r` are
/// `∂_a η = S_a/r - Q x_a/r³`,
/// `∂_a∂_b η = T_ab/r - (S_a x_b + S_b x_a)/r³ - Q φ₂(a,b)`,
/// `∂_a∂_b∂_c η = -(T_ab x_c + T_ac x_b + T_bc x_a)/r³
///               - S_aφ₂(b,c) - S_bφ₂(a,c) - S_cφ₂(a,b) - Qφ₃(a,b,c)`.
fn fill_hopf_cone(jet: &mut Jet3, eps: Quaternion, p: ChartPoint, order: u8) -> Result<()> {
    let r = p.norm();
    if r < 1e-9 {
        return Err(GeomError::SingularPoint {
            distance: r,
            required: 1e-9,
        });
    }
    let c = 5.0f64.sqrt() / 2.0;
    let x = Quaternion::from_chart(p.coords);
    let q = x.conj() * eps * x;
    let s: [Quaternion; 4] = std::array::from_fn(|a| {
        let e = Quaternion::basis(a);
        x.conj() * eps * e + e.conj() * eps * x
    });
    let t: [[Quaternion; 4]; 4] = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let ea = Quaternion::basis(a);
            let eb = Quaternion::basis(b);
            ea.conj() * eps * eb + eb.conj() * eps * ea
        })
    });
    let xc = p.coords;
    let r3 = r * r * r;
    let r5 = r3 * r * r;
    let r7 = r5 * r * r;
    let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    let phi2 = |a: usize, b: usize| delta(a, b) / r3 - 3.0 * xc[a] * xc[b] / r5;
    let phi3 = |a: usize, b: usize, cx: usize| {
        -3.0 * (delta(a, b) * xc[cx] + delta(a, cx) * xc[b] + delta(b, cx) * xc[a]) / r5
            + 15.0 * xc[a] * xc[b] * xc[cx] / r7
    };
    // Imaginary parts land in components 1..3; component 0 stays zero.
    let store = |quat: Quaternion| -> [f64; 3] { quat.scale(c).imag() };

    let val = store(q.scale(1.0 / r));
    for i in 0..3 {
        jet.value[i + 1] = val[i];
    }
    if order >= 1 {
        for a in 0..4 {
            let col = store(s[a].scale(1.0 / r) - q.scale(xc[a] / r3));
            for i in 0..3 {
                jet.jacobian[(i + 1, a)] = col[i];
            }
        }
    }
    // Derivatives are evaluated once per sorted index tuple and mirrored,
    // so the stored jet is symmetric to the last bit.
    if order >= 2 {
        for a in 0..4 {
            for b in a..4 {
                let quat = t[a][b].scale(1.0 / r)
                    - s[a].scale(xc[b] / r3)
                    - s[b].scale(xc[a] / r3)
                    - q.scale(phi2(a, b));
                let h = store(quat);
                for i in 0..3 {
                    jet.hessian[i + 1][(a, b)] = h[i];
                    jet.hessian[i + 1][(b, a)] = h[i];
                }
            }
        }
    }
    if order >= 3 {
        for a in 0..4 {
            for b in a..4 {
                for cx in b..4 {
                    let quat = -(t[a][b].scale(xc[cx] / r3))
                        - t[a][cx].scale(xc[b] / r3)
                        - t[b][cx].scale(xc[a] / r3)
                        - s[a].scale(phi2(b, cx))
                        - s[b].scale(phi2(a, cx))
                        - s[cx].scale(phi2(a, b))
                        - q.scale(phi3(a, b, cx));
                    let d = store(quat);
                    for perm in [
                        [a, b, cx],
                        [a, cx, b],
                        [b, a, cx],
                        [b, cx, a],
                        [cx, a, b],
                        [cx, b, a],
                    ] {
                        for i in 0..3 {
                            jet.third[i + 1][perm[0]][(perm[1], perm[2])] = d[i];
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
