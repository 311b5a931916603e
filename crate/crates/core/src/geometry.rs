//! Points, vectors and the signed-volume predicates everything else is built on.
//!
//! Element node ordering follows the unit reference cube `[0,1]^3`:
//!
//! ```text
//!        8-------7
//!       /|      /|          zeta
//!      / |     / |           |  eta
//!     5-------6  |           | /
//!     |  4----|--3           |/
//!     | /     | /            +---- xi
//!     |/      |/
//!     1-------2
//! ```
//!
//! Node `k` maps to reference corner `CORNER_REF[k-1]`. Quadrangles use the
//! counterclockwise order `(0,0), (1,0), (1,1), (0,1)`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn midpoint(self, other: Point3) -> Point3 {
        Point3::new(
            0.5 * (self.x + other.x),
            0.5 * (self.y + other.y),
            0.5 * (self.z + other.z),
        )
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Vec3 {
    pub const fn new(dx: f64, dy: f64, dz: f64) -> Self {
        Self { dx, dy, dz }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.dx * o.dx + self.dy * o.dy + self.dz * o.dz
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.dy * o.dz - self.dz * o.dy,
            self.dz * o.dx - self.dx * o.dz,
            self.dx * o.dy - self.dy * o.dx,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
}

impl Sub for Point3 {
    type Output = Vec3;
    fn sub(self, o: Point3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Add<Vec3> for Point3 {
    type Output = Point3;
    fn add(self, v: Vec3) -> Point3 {
        Point3::new(self.x + v.dx, self.y + v.dy, self.z + v.dz)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.dx + o.dx, self.dy + o.dy, self.dz + o.dz)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.dx - o.dx, self.dy - o.dy, self.dz - o.dz)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        Vec3::new(self * v.dx, self * v.dy, self * v.dz)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.dx, -self.dy, -self.dz)
    }
}

impl Sub for Point2 {
    type Output = (f64, f64);
    fn sub(self, o: Point2) -> (f64, f64) {
        (self.x - o.x, self.y - o.y)
    }
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// `det[a b c] = a . (b x c)`.
#[inline(always)]
pub fn triple_product(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    a.dx * (b.dy * c.dz - b.dz * c.dy) + a.dy * (b.dz * c.dx - b.dx * c.dz) + a.dz * (b.dx * c.dy - b.dy * c.dx)
}

/// Signed volume of the tetrahedron `(p0, p1, p2, p3)`, positive when
/// `p1 - p0, p2 - p0, p3 - p0` form a right-handed frame.
#[inline(always)]
pub fn tet_signed_volume(p0: Point3, p1: Point3, p2: Point3, p3: Point3) -> f64 {
    triple_product(p1 - p0, p2 - p0, p3 - p0) / 6.0
}

/// The four nodes of a linear quadrangle, counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNodes {
    nodes: [Point2; 4],
}

impl QuadNodes {
    pub fn new(nodes: [Point2; 4]) -> Result<Self> {
        for (i, p) in nodes.iter().enumerate() {
            if !(p.x.is_finite() && p.y.is_finite()) {
                return Err(Error::NonFinite { node: i + 1 });
            }
        }
        Ok(Self { nodes })
    }

    pub fn from_coords(c: [[f64; 2]; 4]) -> Result<Self> {
        Self::new(c.map(|[x, y]| Point2::new(x, y)))
    }

    pub fn nodes(&self) -> &[Point2; 4] {
        &self.nodes
    }

    /// Bilinear map of the reference square onto the quadrangle.
    pub fn map_point(&self, xi: f64, eta: f64) -> Point2 {
        let w = [(1.0 - xi) * (1.0 - eta), xi * (1.0 - eta), xi * eta, (1.0 - xi) * eta];
        let mut p = Point2::default();
        for (wk, n) in w.iter().zip(&self.nodes) {
            p.x += wk * n.x;
            p.y += wk * n.y;
        }
        p
    }

    /// Jacobian determinant of the bilinear map at `(xi, eta)`.
    pub fn jacobian_det_at(&self, xi: f64, eta: f64) -> f64 {
        let [n1, n2, n3, n4] = self.nodes;
        let v12 = n2 - n1;
        let v43 = n3 - n4;
        let v14 = n4 - n1;
        let v23 = n3 - n2;
        let dxi = (v12.0 * (1.0 - eta) + v43.0 * eta, v12.1 * (1.0 - eta) + v43.1 * eta);
        let deta = (v14.0 * (1.0 - xi) + v23.0 * xi, v14.1 * (1.0 - xi) + v23.1 * xi);
        dxi.0 * deta.1 - dxi.1 * deta.0
    }
}

#[inline(always)]
fn cross_z(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

/// Jacobian determinant at the four corners of a quadrangle. Each value is
/// twice the signed area of the triangle formed by the corner and its two
/// neighbours.
pub fn quad_corner_jacobians(q: &QuadNodes) -> [f64; 4] {
    let [n1, n2, n3, n4] = q.nodes;
    let v12 = n2 - n1;
    let v14 = n4 - n1;
    let v23 = n3 - n2;
    let v43 = n3 - n4;
    [
        cross_z(v12, v14),
        cross_z(v12, v23),
        cross_z(v43, v23),
        cross_z(v43, v14),
    ]
}

/// Reference coordinates of the 8 hexahedron corners.
pub const CORNER_REF: [[f64; 3]; 8] = [
    [0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0],
    [1.0, 1.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
    [1.0, 0.0, 1.0],
    [1.0, 1.0, 1.0],
    [0.0, 1.0, 1.0],
];

/// The 12 hexahedron edges as 0-based node pairs, in sample order 9..20.
pub const HEX_EDGES: [[usize; 2]; 12] = [
    [0, 1],
    [1, 2],
    [2, 3],
    [3, 0],
    [0, 4],
    [1, 5],
    [2, 6],
    [3, 7],
    [4, 5],
    [5, 6],
    [6, 7],
    [7, 4],
];

/// The eight nodes of a linear hexahedron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexNodes {
    nodes: [Point3; 8],
}

impl HexNodes {
    pub fn new(nodes: [Point3; 8]) -> Result<Self> {
        if let Some(i) = nodes.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { node: i + 1 });
        }
        Ok(Self { nodes })
    }

    pub fn from_coords(c: [[f64; 3]; 8]) -> Result<Self> {
        Self::new(c.map(|[x, y, z]| Point3::new(x, y, z)))
    }

    /// The unit reference cube itself.
    pub fn unit_cube() -> Self {
        Self {
            nodes: CORNER_REF.map(|[x, y, z]| Point3::new(x, y, z)),
        }
    }

    pub fn nodes(&self) -> &[Point3; 8] {
        &self.nodes
    }

    /// 1-based node access, matching the usual corner numbering.
    #[inline(always)]
    pub fn node(&self, k: usize) -> Point3 {
        self.nodes[k - 1]
    }

    /// Applies `f` to every node. Fails if the image is not finite.
    pub fn map_nodes(&self, f: impl Fn(Point3) -> Point3) -> Result<Self> {
        Self::new(self.nodes.map(f))
    }

    pub fn mean_edge_length(&self) -> f64 {
        HEX_EDGES
            .iter()
            .map(|&[a, b]| (self.nodes[b] - self.nodes[a]).norm())
            .sum::<f64>()
            / 12.0
    }

    /// Characteristic magnitude of the Jacobian determinant: cube of the mean
    /// edge length. Used to make tolerances scale-free.
    pub fn scale(&self) -> f64 {
        self.mean_edge_length().powi(3)
    }
}
