//! Polynomial maps `R^4 -> R^4` given by explicit monomial tables.
//!
//! A map is a sum of records `(target, exponents, coefficient)` meaning
//! `coefficient · x^ex · y^ey · z^ez · w^ew` added to component `target`.
//! The text format accepted by [`PolynomialMap::parse`] is one record per
//! line, `target ex ey ez ew coefficient`, with `#` comments and blank lines
//! ignored.

use crate::error::{GeomError, Result};
use crate::jet::{ChartPoint, Jet3};
use crate::Mat4;

/// One monomial of one component of a polynomial map.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Monomial {
    /// Component of `f` the term contributes to (0 to 3).
    pub target: u8,
    /// Exponents of `(x, y, z, w)`.
    pub exponents: [u8; 4],
    /// Real coefficient.
    pub coefficient: f64,
}

impl Monomial {
    /// Total degree of the monomial.
    #[inline(always)]
    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| e as u32).sum()
    }
}

/// A polynomial map `R^4 -> R^4` as a list of monomials.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PolynomialMap {
    terms: Vec<Monomial>,
    degree_cap: u32,
}

impl PolynomialMap {
    /// Default bound on the total degree of any term.
    pub const DEFAULT_DEGREE_CAP: u32 = 8;

    /// Builds a map from monomials under the default degree cap.
    pub fn new(terms: Vec<Monomial>) -> Result<Self> {
        Self::with_degree_cap(terms, Self::DEFAULT_DEGREE_CAP)
    }

    /// Builds a map from monomials under an explicit degree cap.
    pub fn with_degree_cap(terms: Vec<Monomial>, degree_cap: u32) -> Result<Self> {
        for term in &terms {
            if term.target > 3 {
                return Err(GeomError::InvalidPolynomial(format!(
                    "target component {} out of range 0..=3",
                    term.target
                )));
            }
            if term.degree() > degree_cap {
                return Err(GeomError::DegreeCapExceeded {
                    degree: term.degree(),
                    cap: degree_cap,
                });
            }
            if !term.coefficient.is_finite() {
                return Err(GeomError::InvalidPolynomial(format!(
                    "non-finite coefficient {}",
                    term.coefficient
                )));
            }
        }
        Ok(PolynomialMap { terms, degree_cap })
    }

    /// The linear map with the given Jacobian matrix.
    pub fn linear(jacobian: Mat4) -> Self {
        let mut terms = Vec::new();
        for i in 0..4 {
            for a in 0..4 {
                let c = jacobian[(i, a)];
                if c != 0.0 {
                    let mut exponents = [0u8; 4];
                    exponents[a] = 1;
                    terms.push(Monomial {
                        target: i as u8,
                        exponents,
                        coefficient: c,
                    });
                }
            }
        }
        PolynomialMap {
            terms,
            degree_cap: Self::DEFAULT_DEGREE_CAP,
        }
    }

    /// Parses the line-oriented text format: `target ex ey ez ew coefficient`
    /// per record, `#` starting a comment, blank lines skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, raw_line) in text.lines().enumerate() {
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(GeomError::InvalidPolynomial(format!(
                    "line {}: expected 6 fields `target ex ey ez ew coefficient`, found {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let parse_u8 = |s: &str, what: &str| -> Result<u8> {
                s.parse().map_err(|_| {
                    GeomError::InvalidPolynomial(format!(
                        "line {}: {what} `{s}` is not a small non-negative integer",
                        lineno + 1
                    ))
                })
            };
            let target = parse_u8(fields[0], "target")?;
            let exponents = [
                parse_u8(fields[1], "exponent")?,
                parse_u8(fields[2], "exponent")?,
                parse_u8(fields[3], "exponent")?,
                parse_u8(fields[4], "exponent")?,
            ];
            let coefficient: f64 = fields[5].parse().map_err(|_| {
                GeomError::InvalidPolynomial(format!(
                    "line {}: coefficient `{}` is not a real number",
                    lineno + 1,
                    fields[5]
                ))
            })?;
            terms.push(Monomial {
                target,
                exponents,
                coefficient,
            });
        }
        Self::new(terms)
    }

    /// The monomial table.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Largest total degree over all terms (0 for the zero map).
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Exact jet at `p` with derivative slots above `order` zero-filled.
    pub fn jet(&self, p: ChartPoint, order: u8) -> Jet3 {
        let mut jet = Jet3::zero();
        for term in &self.terms {
            let i = term.target as usize;
            let c = term.coefficient;
            // Per-axis value and falling-factorial derivatives up to order 3.
            let mut dv = [[0.0f64; 4]; 4];
            for a in 0..4 {
                dv[a] = axis_derivatives(p.coords[a], term.exponents[a] as i32);
            }
            jet.value[i] += c * dv[0][0] * dv[1][0] * dv[2][0] * dv[3][0];
            if order < 1 {
                continue;
            }
            for a in 0..4 {
                jet.jacobian[(i, a)] += c * product_with_counts(&dv, &[a]);
            }
            if order < 2 {
                continue;
            }
            for a in 0..4 {
                for b in 0..4 {
                    jet.hessian[i][(a, b)] += c * product_with_counts(&dv, &[a, b]);
                }
            }
            if order < 3 {
                continue;
            }
            for a in 0..4 {
                for b in 0..4 {
                    for d in 0..4 {
                        jet.third[i][a][(b, d)] += c * product_with_counts(&dv, &[a, b, d]);
                    }
                }
            }
        }
        jet
    }
}

/// `x^e` and its first three derivatives `e x^{e-1}`, `e(e-1) x^{e-2}`,
/// `e(e-1)(e-2) x^{e-3}`, with vanished powers clamped to zero.
fn axis_derivatives(x: f64, e: i32) -> [f64; 4] {
    let mut out = [0.0; 4];
    let mut falling = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        let power = e - k as i32;
        if power < 0 {
            break;
        }
        *slot = falling * x.powi(power);
        falling *= power as f64;
    }
    out
}

/// Product over axes of the per-axis derivative of the multiplicity each
/// axis attains in `axes`.
#[inline(always)]
fn product_with_counts(dv: &[[f64; 4]; 4], axes: &[usize]) -> f64 {
    let mut counts = [0usize; 4];
    for &a in axes {
        counts[a] += 1;
    }
    let mut prod = 1.0;
    for a in 0..4 {
        prod *= dv[a][counts[a]];
    }
    prod
}
