//! Trilinear hexahedron mapping, its Jacobian determinant, and the 20
//! Jacobian samples obtained as tetrahedral volumes.

use crate::error::{Error, Result};
use crate::geometry::{tet_signed_volume, triple_product, HexNodes, Point3, Vec3};

/// A point of the reference cube `[0,1]^3`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RefPoint {
    pub xi: f64,
    pub eta: f64,
    pub zeta: f64,
}

impl RefPoint {
    pub fn new(xi: f64, eta: f64, zeta: f64) -> Result<Self> {
        let inside = |t: f64| (0.0..=1.0).contains(&t);
        if inside(xi) && inside(eta) && inside(zeta) {
            Ok(Self { xi, eta, zeta })
        } else {
            Err(Error::OutsideReference(xi, eta, zeta))
        }
    }

    /// Builds a point without the domain check. Callers guarantee the range.
    pub(crate) const fn new_unchecked(xi: f64, eta: f64, zeta: f64) -> Self {
        Self { xi, eta, zeta }
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.xi, self.eta, self.zeta]
    }
}

/// Reference coordinates of the 27 nodes of the second-order hexahedron:
/// 8 corners, 12 edge midpoints, 6 face centres, then the cell centre.
pub const REF_NODES_27: [[f64; 3]; 27] = [
    [0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0],
    [1.0, 1.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
    [1.0, 0.0, 1.0],
    [1.0, 1.0, 1.0],
    [0.0, 1.0, 1.0],
    [0.5, 0.0, 0.0],
    [1.0, 0.5, 0.0],
    [0.5, 1.0, 0.0],
    [0.0, 0.5, 0.0],
    [0.0, 0.0, 0.5],
    [1.0, 0.0, 0.5],
    [1.0, 1.0, 0.5],
    [0.0, 1.0, 0.5],
    [0.5, 0.0, 1.0],
    [1.0, 0.5, 1.0],
    [0.5, 1.0, 1.0],
    [0.0, 0.5, 1.0],
    [0.5, 0.5, 0.0],
    [0.5, 0.0, 0.5],
    [1.0, 0.5, 0.5],
    [0.5, 1.0, 0.5],
    [0.0, 0.5, 0.5],
    [0.5, 0.5, 1.0],
    [0.5, 0.5, 0.5],
];

/// Jacobian determinant samples at the 8 corners and 12 edge midpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleVector20 {
    pub values: [f64; 20],
}

impl SampleVector20 {
    pub fn corners(&self) -> &[f64] {
        &self.values[..8]
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Trilinear shape function `L_k`, `k` in `1..=8`.
pub fn lagrange_shape(k: usize, p: RefPoint) -> Result<f64> {
    if !(1..=8).contains(&k) {
        return Err(Error::IndexOutOfRange {
            what: "shape function",
            index: k,
            max: 8,
        });
    }
    Ok(shape_weights(p)[k - 1])
}

/// All eight shape functions at `p`.
pub fn shape_weights(p: RefPoint) -> [f64; 8] {
    let (x, y, z) = (p.xi, p.eta, p.zeta);
    let (ux, uy, uz) = (1.0 - x, 1.0 - y, 1.0 - z);
    [
        ux * uy * uz,
        x * uy * uz,
        x * y * uz,
        ux * y * uz,
        ux * uy * z,
        x * uy * z,
        x * y * z,
        ux * y * z,
    ]
}

/// Image of a reference point under the trilinear map.
pub fn map_point(h: &HexNodes, p: RefPoint) -> Point3 {
    let mut out = Point3::default();
    for (w, n) in shape_weights(p).iter().zip(h.nodes()) {
        out.x += w * n.x;
        out.y += w * n.y;
        out.z += w * n.z;
    }
    out
}

/// The three columns `d x/d xi`, `d x/d eta`, `d x/d zeta` of the Jacobian
/// matrix at `p`.
#[inline]
pub fn jacobian_columns(h: &HexNodes, p: RefPoint) -> [Vec3; 3] {
    let n = |k| h.node(k);
    let (x, y, z) = (p.xi, p.eta, p.zeta);
    let (ux, uy, uz) = (1.0 - x, 1.0 - y, 1.0 - z);
    let dxi = (uy * uz) * (n(2) - n(1)) + (y * uz) * (n(3) - n(4)) + (uy * z) * (n(6) - n(5)) + (y * z) * (n(7) - n(8));
    let deta =
        (ux * uz) * (n(4) - n(1)) + (x * uz) * (n(3) - n(2)) + (ux * z) * (n(8) - n(5)) + (x * z) * (n(7) - n(6));
    let dzeta =
        (ux * uy) * (n(5) - n(1)) + (x * uy) * (n(6) - n(2)) + (ux * y) * (n(8) - n(4)) + (x * y) * (n(7) - n(3));
    [dxi, deta, dzeta]
}

/// Jacobian determinant of the trilinear map at `p`.
#[inline]
pub fn jacobian_det_at(h: &HexNodes, p: RefPoint) -> f64 {
    let [a, b, c] = jacobian_columns(h, p);
    triple_product(a, b, c)
}

/// Vertices of the corner tetrahedra, 1-based node numbers. Each is ordered
/// so that six times its signed volume is the Jacobian determinant at the
/// corner.
pub const CORNER_TETS: [[usize; 4]; 8] = [
    [1, 2, 4, 5],
    [2, 3, 1, 6],
    [3, 4, 2, 7],
    [4, 1, 3, 8],
    [5, 8, 6, 1],
    [6, 5, 7, 2],
    [7, 6, 8, 3],
    [8, 7, 5, 4],
];

/// Edge tetrahedra: the two endpoints of the edge (lower reference
/// coordinate first) and the midpoints of the two parallel edges that share a
/// face with it, each given as a node pair.
pub const EDGE_TETS: [([usize; 2], [usize; 2], [usize; 2]); 12] = [
    ([1, 2], [3, 4], [5, 6]),
    ([2, 3], [1, 4], [6, 7]),
    ([4, 3], [7, 8], [1, 2]),
    ([1, 4], [5, 8], [2, 3]),
    ([1, 5], [2, 6], [4, 8]),
    ([2, 6], [3, 7], [1, 5]),
    ([3, 7], [4, 8], [2, 6]),
    ([4, 8], [1, 5], [3, 7]),
    ([5, 6], [1, 2], [7, 8]),
    ([6, 7], [2, 3], [5, 8]),
    ([8, 7], [5, 6], [3, 4]),
    ([5, 8], [6, 7], [1, 4]),
];

/// The 20 Jacobian samples at the corners and edge midpoints, each computed
/// as six times a tetrahedral volume.
#[inline]
pub fn sample_20(h: &HexNodes) -> SampleVector20 {
    let mut values = [0.0; 20];
    sample_corners(h, (&mut values[..8]).try_into().unwrap());
    sample_edges(h, (&mut values[8..]).try_into().unwrap());
    SampleVector20 { values }
}

#[inline(always)]
pub(crate) fn sample_corners(h: &HexNodes, out: &mut [f64; 8]) {
    let n = |k| h.node(k);
    for (v, &[a, b, c, d]) in out.iter_mut().zip(&CORNER_TETS) {
        *v = 6.0 * tet_signed_volume(n(a), n(b), n(c), n(d));
    }
}

#[inline(always)]
pub(crate) fn sample_edges(h: &HexNodes, out: &mut [f64; 12]) {
    let n = |k| h.node(k);
    for (v, &([p, q], [a0, a1], [b0, b1])) in out.iter_mut().zip(&EDGE_TETS) {
        let ma = n(a0).midpoint(n(a1));
        let mb = n(b0).midpoint(n(b1));
        *v = 6.0 * tet_signed_volume(n(p), n(q), ma, mb);
    }
}

/// Analytic Jacobian determinant at all 27 second-order nodes.
pub fn sample_27(h: &HexNodes) -> [f64; 27] {
    REF_NODES_27.map(|[x, y, z]| jacobian_det_at(h, RefPoint::new_unchecked(x, y, z)))
}
