//! The flat ambient space `R^8 = R^4 × R^4` and its standard structures.
//!
//! Conventions used throughout the crate: the complex structure acts by
//! `J₀(X, Y) = (-Y, X)` on the two four-dimensional blocks, the metric is
//! Euclidean, and the Kähler form is `ω₀(A, B) = g₀(J₀A, B)`. A matrix `M`
//! always represents a bilinear form through `form(X, Y) = (MX)·Y`, so the
//! matrix of `ω₀` is the matrix of `J₀` itself.

use crate::jet::Jet3;
use crate::{Mat4, Mat8, Vec4, Vec8};
use std::sync::OnceLock;

/// The standard flat structures on `R^8`.
#[derive(Clone, Debug)]
pub struct AmbientStructure {
    /// Matrix of the complex structure `J₀(X, Y) = (-Y, X)`.
    pub j0: Mat8,
    /// Matrix of the Kähler form under `ω₀(A, B) = (matrix·A)·B`;
    /// numerically equal to `j0` and kept separate for clarity of intent.
    pub omega0: Mat8,
    /// An anticommuting triple of orthogonal complex structures
    /// `(J₀, I₂, J₀·I₂)` with `I₂(X, Y) = (iX, -iY)`.
    pub hk_triple: [Mat8; 3],
}

static STANDARD: OnceLock<AmbientStructure> = OnceLock::new();

impl AmbientStructure {
    /// The standard structures, built once.
    pub fn standard() -> &'static AmbientStructure {
        STANDARD.get_or_init(|| {
            let j0 = block_matrix(&Mat4::zeros(), &(-Mat4::identity()), &Mat4::identity(), &Mat4::zeros());
            let i = chart_i();
            let i2 = block_matrix(&i, &Mat4::zeros(), &Mat4::zeros(), &(-i));
            let i3 = j0 * i2;
            AmbientStructure {
                j0,
                omega0: j0,
                hk_triple: [j0, i2, i3],
            }
        })
    }
}

/// Assembles an 8x8 matrix from 4x4 blocks `[[a, b], [c, d]]`.
fn block_matrix(a: &Mat4, b: &Mat4, c: &Mat4, d: &Mat4) -> Mat8 {
    let mut m = Mat8::zeros();
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] = a[(i, j)];
            m[(i, j + 4)] = b[(i, j)];
            m[(i + 4, j)] = c[(i, j)];
            m[(i + 4, j + 4)] = d[(i, j)];
        }
    }
    m
}

/// The chart complex structure `i(x,y,z,w) = (-y, x, -w, z)`.
pub fn chart_i() -> Mat4 {
    Mat4::new(
        0.0, -1.0, 0.0, 0.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, 0.0, 0.0, -1.0, //
        0.0, 0.0, 1.0, 0.0,
    )
}

/// The chart complex structure `j(x,y,z,w) = (-z, w, x, -y)`,
/// anticommuting with [`chart_i`].
pub fn chart_j() -> Mat4 {
    Mat4::new(
        0.0, 0.0, -1.0, 0.0, //
        0.0, 0.0, 0.0, 1.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, -1.0, 0.0, 0.0,
    )
}

/// The product structure `k = i·j`.
pub fn chart_k() -> Mat4 {
    chart_i() * chart_j()
}

/// Applies `J₀(X, Y) = (-Y, X)` without building the matrix.
#[inline(always)]
pub fn j0_apply(v: &Vec8) -> Vec8 {
    let mut out = Vec8::zeros();
    for b in 0..4 {
        out[b] = -v[b + 4];
        out[b + 4] = v[b];
    }
    out
}

/// `ω₀(a, b) = g₀(J₀ a, b)`.
#[inline(always)]
pub fn omega0_eval(a: &Vec8, b: &Vec8) -> f64 {
    j0_apply(a).dot(b)
}

/// Columns of the graph differential: `dΓ(∂_a) = (e_a, ∂f/∂x_a)`.
pub fn graph_differential(jet: &Jet3) -> [Vec8; 4] {
    std::array::from_fn(|a| {
        let mut col = Vec8::zeros();
        col[a] = 1.0;
        let f_a = jet.df_column(a);
        for i in 0..4 {
            col[i + 4] = f_a[i];
        }
        col
    })
}

/// A spanning set of the normal space of a graph: the vectors
/// `N_a = (-(df)ᵀ e_a, e_a)`, each orthogonal to every tangent vector.
pub fn normal_spanning(jet: &Jet3) -> [Vec8; 4] {
    std::array::from_fn(|a| {
        let mut col = Vec8::zeros();
        for b in 0..4 {
            col[b] = -jet.jacobian[(a, b)];
        }
        col[a + 4] = 1.0;
        col
    })
}

/// Lifts a chart vector to the tangent space of the graph:
/// `dΓ(v) = (v, df·v)`.
pub fn lift_tangent(jet: &Jet3, v: &Vec4) -> Vec8 {
    let top = *v;
    let bottom = jet.jacobian * v;
    let mut out = Vec8::zeros();
    for i in 0..4 {
        out[i] = top[i];
        out[i + 4] = bottom[i];
    }
    out
}

/// Lifts an ambient vector given by its chart and fiber blocks.
pub fn from_blocks(top: &Vec4, bottom: &Vec4) -> Vec8 {
    let mut out = Vec8::zeros();
    for i in 0..4 {
        out[i] = top[i];
        out[i + 4] = bottom[i];
    }
    out
}

/// The fiber block `(last four components)` of an ambient vector.
pub fn fiber_block(v: &Vec8) -> Vec4 {
    Vec4::new(v[4], v[5], v[6], v[7])
}

/// The chart block `(first four components)` of an ambient vector.
pub fn chart_block(v: &Vec8) -> Vec4 {
    Vec4::new(v[0], v[1], v[2], v[3])
}
