//! Comparison tests and brute-force oracles.
//!
//! [`corner_tet_test`] and the corner scaled Jacobian are the usual cheap
//! screens; both can accept invalid elements. [`dense_grid_min`] is a slow
//! sampling oracle used to cross-check the robust checker.

use crate::bezier::bezier_from_samples20;
use crate::error::{Error, Result};
use crate::geometry::{triple_product, HexNodes, QuadNodes, Vec3};
use crate::sampling::{jacobian_det_at, sample_20, sample_corners, RefPoint, CORNER_TETS};

/// Necessary condition: all 8 corner tetrahedra have positive volume.
pub fn corner_tet_test(h: &HexNodes) -> bool {
    let mut c = [0.0; 8];
    sample_corners(h, &mut c);
    c.iter().all(|&v| v > 0.0)
}

/// Minimum over the corners of the corner Jacobian divided by the product
/// of the three corner edge lengths. Lies in `[-1, 1]`.
pub fn corner_scaled_jacobian_min(h: &HexNodes) -> Result<f64> {
    let n = |k| h.node(k);
    let mut min = f64::INFINITY;
    for (corner, &[a, b, c, d]) in CORNER_TETS.iter().enumerate() {
        let e = [n(b) - n(a), n(c) - n(a), n(d) - n(a)];
        let lengths = e[0].norm() * e[1].norm() * e[2].norm();
        if lengths == 0.0 {
            return Err(Error::ZeroLengthEdge { corner: corner + 1 });
        }
        min = min.min(triple_product(e[0], e[1], e[2]) / lengths);
    }
    Ok(min)
}

/// Exact volume of the hexahedron, the integral of the Jacobian determinant.
/// Every quadratic Bernstein polynomial integrates to 1/3 on `[0,1]`, so the
/// volume is the mean of the 27 Bezier coefficients.
pub fn hex_volume(h: &HexNodes) -> f64 {
    bezier_from_samples20(&sample_20(h)).b.iter().sum::<f64>() / 27.0
}

/// Minimum of the Jacobian determinant over the uniform `(n+1)^3` grid,
/// refined by a local pattern search from the best grid point.
pub fn dense_grid_min(h: &HexNodes, n: usize) -> Result<(f64, RefPoint)> {
    if n < 2 {
        return Err(Error::GridTooCoarse(n));
    }
    let m = n + 1;
    let t: Vec<f64> = (0..m).map(|i| i as f64 / n as f64).collect();
    let nd = |k| h.node(k);
    let bilinear = |e: [Vec3; 4], s: f64, r: f64| {
        ((1.0 - s) * (1.0 - r)) * e[0] + (s * (1.0 - r)) * e[1] + ((1.0 - s) * r) * e[2] + (s * r) * e[3]
    };
    // d/dxi depends on (eta, zeta), d/deta on (xi, zeta), d/dzeta on (xi, eta)
    let exi = [nd(2) - nd(1), nd(3) - nd(4), nd(6) - nd(5), nd(7) - nd(8)];
    let eeta = [nd(4) - nd(1), nd(3) - nd(2), nd(8) - nd(5), nd(7) - nd(6)];
    let ezeta = [nd(5) - nd(1), nd(6) - nd(2), nd(8) - nd(4), nd(7) - nd(3)];
    let mut dxi = Vec::with_capacity(m * m);
    let mut deta = Vec::with_capacity(m * m);
    let mut dzeta = Vec::with_capacity(m * m);
    for &a in &t {
        for &b in &t {
            // row-major in (first, second) argument
            dxi.push(bilinear(exi, a, b)); // (eta=a, zeta=b)
            deta.push(bilinear(eeta, a, b)); // (xi=a, zeta=b)
            dzeta.push(bilinear(ezeta, a, b)); // (xi=a, eta=b)
        }
    }
    let mut best = (f64::INFINITY, [0usize; 3]);
    for i in 0..m {
        for j in 0..m {
            let dz = dzeta[i * m + j];
            for k in 0..m {
                let v = triple_product(dxi[j * m + k], deta[i * m + k], dz);
                if v < best.0 {
                    best = (v, [i, j, k]);
                }
            }
        }
    }
    let start = best.1.map(|i| t[i]);
    Ok(polish_min(|p| jacobian_det_at(h, p), start, 1.0 / n as f64))
}

/// Pattern search over the 26 neighbours, halving the step on failure.
fn polish_min(f: impl Fn(RefPoint) -> f64, start: [f64; 3], step: f64) -> (f64, RefPoint) {
    let to_ref = |p: [f64; 3]| RefPoint::new_unchecked(p[0], p[1], p[2]);
    let mut p = start;
    let mut fp = f(to_ref(p));
    let mut h = step;
    while h > 1e-12 {
        let mut improved = false;
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if dx == 0 && dy == 0 && dz == 0 {
                        continue;
                    }
                    let q = [
                        (p[0] + dx as f64 * h).clamp(0.0, 1.0),
                        (p[1] + dy as f64 * h).clamp(0.0, 1.0),
                        (p[2] + dz as f64 * h).clamp(0.0, 1.0),
                    ];
                    let fq = f(to_ref(q));
                    if fq < fp {
                        p = q;
                        fp = fq;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    (fp, to_ref(p))
}

/// Grid minimum of a quadrangle's Jacobian determinant on `(n+1)^2` points.
pub fn dense_grid_min_quad(q: &QuadNodes, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::GridTooCoarse(n));
    }
    let mut min = f64::INFINITY;
    for i in 0..=n {
        for j in 0..=n {
            min = min.min(q.jacobian_det_at(i as f64 / n as f64, j as f64 / n as f64));
        }
    }
    Ok(min)
}
