//! Order-2 tensor-product Bezier algebra for the Jacobian determinant.
//!
//! The Jacobian determinant of a trilinear hexahedron is triquadratic, so it
//! is exactly represented by 27 Bezier coefficients. Their minimum bounds the
//! determinant from below, and the 8 corner coefficients are exact values of
//! it. Only 20 of the coefficients are independent: the remaining 7 follow
//! from the vanishing of the monomials `xi^2 eta^2`, `xi^2 zeta^2`,
//! `eta^2 zeta^2` and their products with the third variable.
//!
//! Coefficients are stored in the 27-node order of [`REF_NODES_27`]: corners,
//! edge midpoints, face centres, centre. Coefficient `tau` belongs to the
//! Bernstein product `B_i(xi) B_j(eta) B_k(zeta)` with `(i, j, k)` equal to
//! twice the reference coordinates of node `tau`.

mod tables;

pub use tables::{D, T20, TB};

use crate::error::{Error, Result};
use crate::geometry::{CORNER_REF, HEX_EDGES};
use crate::sampling::{RefPoint, SampleVector20, REF_NODES_27};

/// Bernstein exponents `(i, j, k)` of each coefficient.
pub const TAU_TO_IJK: [[usize; 3]; 27] = {
    let mut out = [[0; 3]; 27];
    let mut t = 0;
    while t < 27 {
        let p = REF_NODES_27[t];
        out[t] = [(p[0] * 2.0) as usize, (p[1] * 2.0) as usize, (p[2] * 2.0) as usize];
        t += 1;
    }
    out
};

/// Inverse of [`TAU_TO_IJK`] on the lexicographic index `i + 3j + 9k`.
const LEX_TO_TAU: [usize; 27] = {
    let mut out = [0; 27];
    let mut t = 0;
    while t < 27 {
        let [i, j, k] = TAU_TO_IJK[t];
        out[i + 3 * j + 9 * k] = t;
        t += 1;
    }
    out
};

/// Corner and edge indices (0-based, into the 27 ordering) of each face.
pub(crate) const FACES: [([usize; 4], [usize; 4]); 6] = [
    ([0, 1, 2, 3], [8, 9, 10, 11]),
    ([0, 1, 4, 5], [8, 12, 13, 16]),
    ([1, 2, 5, 6], [9, 13, 14, 17]),
    ([2, 3, 6, 7], [10, 14, 15, 18]),
    ([0, 3, 4, 7], [11, 12, 15, 19]),
    ([4, 5, 6, 7], [16, 17, 18, 19]),
];

/// Quadratic Bernstein polynomial `C(2,i) t^i (1-t)^(2-i)`.
pub fn bernstein2(i: usize, t: f64) -> Result<f64> {
    match i {
        0..=2 => Ok(bernstein2_all(t)[i]),
        _ => Err(Error::IndexOutOfRange {
            what: "Bernstein",
            index: i,
            max: 2,
        }),
    }
}

#[inline(always)]
fn bernstein2_all(t: f64) -> [f64; 3] {
    let u = 1.0 - t;
    [u * u, 2.0 * t * u, t * t]
}

/// The 27 Bezier coefficients of a triquadratic polynomial on `[0,1]^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BezierCoeffs27 {
    pub b: [f64; 27],
}

impl BezierCoeffs27 {
    pub const fn new(b: [f64; 27]) -> Self {
        Self { b }
    }

    pub const fn constant(c: f64) -> Self {
        Self { b: [c; 27] }
    }

    pub fn min(&self) -> f64 {
        min_of(&self.b)
    }

    pub fn max(&self) -> f64 {
        self.b.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// The corner coefficients, which are exact polynomial values.
    pub fn corners(&self) -> &[f64] {
        &self.b[..8]
    }

    /// Coefficients 9 to 27, which only bound the polynomial.
    pub fn interior(&self) -> &[f64] {
        &self.b[8..]
    }

    pub fn eval(&self, p: RefPoint) -> f64 {
        eval_bezier(self, p)
    }
}

#[inline(always)]
pub(crate) fn min_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Evaluates the Bezier expansion at `p`.
pub fn eval_bezier(b: &BezierCoeffs27, p: RefPoint) -> f64 {
    let bx = bernstein2_all(p.xi);
    let by = bernstein2_all(p.eta);
    let bz = bernstein2_all(p.zeta);
    b.b.iter()
        .zip(&TAU_TO_IJK)
        .map(|(c, &[i, j, k])| c * bx[i] * by[j] * bz[k])
        .sum()
}

/// Bezier coefficients from the 20 corner and edge-midpoint samples of the
/// Jacobian determinant. Equivalent to `T20 * c20`, evaluated through the
/// block structure of the matrix.
#[inline]
pub fn bezier_from_samples20(c20: &SampleVector20) -> BezierCoeffs27 {
    let c = &c20.values;
    let mut b = [0.0; 27];
    b[..8].copy_from_slice(&c[..8]);
    let mut edge_sum = 0.0;
    for (e, &[p, q]) in HEX_EDGES.iter().enumerate() {
        b[8 + e] = 2.0 * c[8 + e] - 0.5 * (c[p] + c[q]);
        edge_sum += c[8 + e];
    }
    for (f, (corners, edges)) in FACES.iter().enumerate() {
        let cs: f64 = corners.iter().map(|&k| c[k]).sum();
        let es: f64 = edges.iter().map(|&k| c[k]).sum();
        b[20 + f] = es - 0.75 * cs;
    }
    let corner_sum: f64 = c[..8].iter().sum();
    b[26] = 0.5 * edge_sum - 0.625 * corner_sum;
    BezierCoeffs27 { b }
}

/// Dense `T20 * c20`. Reference path for [`bezier_from_samples20`].
pub fn bezier_from_samples20_dense(c20: &SampleVector20) -> BezierCoeffs27 {
    BezierCoeffs27 {
        b: mat_vec(&T20, &c20.values),
    }
}

/// Bezier coefficients from samples at all 27 second-order nodes, `TB * c27`.
pub fn bezier_from_samples27(c27: &[f64; 27]) -> BezierCoeffs27 {
    BezierCoeffs27 { b: mat_vec(&TB, c27) }
}

/// Completes 20 Bezier coefficients with the 7 dependent ones, `D * b20`.
pub fn extend_20(b20: &[f64; 20]) -> BezierCoeffs27 {
    let mut b = [0.0; 27];
    b[..20].copy_from_slice(b20);
    for (f, (corners, edges)) in FACES.iter().enumerate() {
        let cs: f64 = corners.iter().map(|&k| b20[k]).sum();
        let es: f64 = edges.iter().map(|&k| b20[k]).sum();
        b[20 + f] = 0.5 * es - 0.25 * cs;
    }
    let cs: f64 = b20[..8].iter().sum();
    let es: f64 = b20[8..].iter().sum();
    b[26] = 0.25 * (es - cs);
    BezierCoeffs27 { b }
}

fn mat_vec<const N: usize>(m: &[[f64; N]; 27], v: &[f64; N]) -> [f64; 27] {
    m.map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
}

/// Splits `(a, b, c)` at `t = 1/2` into the five control values shared by
/// both halves: left `[0..3]`, right `[2..5]`.
#[inline(always)]
fn split_quadratic(a: f64, b: f64, c: f64) -> [f64; 5] {
    let ab = 0.5 * (a + b);
    let bc = 0.5 * (b + c);
    [a, ab, 0.5 * (ab + bc), bc, c]
}

/// Octant `o` is the subcube `[0,1/2]^3 + CORNER_REF[o] / 2`.
pub fn octant_origin(o: usize) -> [f64; 3] {
    CORNER_REF[o].map(|c| 0.5 * c)
}

/// Coefficients of the same polynomial restricted to each of the 8 octants
/// of the reference cube, each re-expressed over its own unit cube. Child `o`
/// covers the octant that contains corner `o + 1`.
///
/// Splitting is applied along xi, then eta, then zeta.
pub fn subdivide_octants(b: &BezierCoeffs27) -> [BezierCoeffs27; 8] {
    // lexicographic layout, i fastest
    let mut lex = [0.0; 27];
    for (l, t) in LEX_TO_TAU.iter().enumerate() {
        lex[l] = b.b[*t];
    }

    // xi: 3x3x3 -> 5x3x3
    let mut s1 = [0.0; 45];
    for jk in 0..9 {
        let r = split_quadratic(lex[3 * jk], lex[3 * jk + 1], lex[3 * jk + 2]);
        s1[5 * jk..5 * jk + 5].copy_from_slice(&r);
    }
    // eta: 5x3x3 -> 5x5x3
    let mut s2 = [0.0; 75];
    for k in 0..3 {
        for i in 0..5 {
            let at = |j: usize| s1[i + 5 * j + 15 * k];
            let r = split_quadratic(at(0), at(1), at(2));
            for (j, v) in r.into_iter().enumerate() {
                s2[i + 5 * j + 25 * k] = v;
            }
        }
    }
    // zeta: 5x5x3 -> 5x5x5
    let mut s3 = [0.0; 125];
    for ij in 0..25 {
        let r = split_quadratic(s2[ij], s2[ij + 25], s2[ij + 50]);
        for (k, v) in r.into_iter().enumerate() {
            s3[ij + 25 * k] = v;
        }
    }

    let mut children = [BezierCoeffs27::constant(0.0); 8];
    for (o, child) in children.iter_mut().enumerate() {
        let [ox, oy, oz] = CORNER_REF[o].map(|c| 2 * c as usize);
        for (t, &[i, j, k]) in TAU_TO_IJK.iter().enumerate() {
            child.b[t] = s3[(ox + i) + 5 * (oy + j) + 25 * (oz + k)];
        }
    }
    children
}
