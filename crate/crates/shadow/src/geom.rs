//! Dimension-generic geometric primitives.
//!
//! Everything here works for both the plane and 3-space. Points carry their
//! dimension at runtime (`Dim::Two` or `Dim::Three`); 2D values are embedded
//! with a zero third coordinate so the vector algebra is shared.
//!
//! The central objects are [`Ball`] (open or closed), [`Cap`] (the set of
//! directions from an observation point along which a line meets a ball) and
//! the homothety operation that scales a ball about a fixed center. A cap's
//! half-angle is `arcsin(r / d)` where `d` is the distance from the
//! observation point to the ball center; it is always below `π/2` because a
//! ball that is eligible at all must not hold the observation point.

use thiserror::Error;

/// Tolerance used to renormalize unit vectors and snap angular endpoints.
pub const UNIT_TOL: f64 = 1e-12;

/// Ambient dimension, 2 or 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn n(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    pub fn from_len(n: usize) -> Result<Dim, GeomError> {
        match n {
            2 => Ok(Dim::Two),
            3 => Ok(Dim::Three),
            _ => Err(GeomError::UnsupportedDimension(n)),
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.n())
    }
}

/// Whether a ball (and by extension a cap) contains its boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Open,
    Closed,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Open => "open",
            Mode::Closed => "closed",
        }
    }

    pub fn parse(s: &str) -> Result<Mode, GeomError> {
        match s {
            "open" => Ok(Mode::Open),
            "closed" => Ok(Mode::Closed),
            _ => Err(GeomError::BadMode(s.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: Dim, got: Dim },
    #[error("unsupported dimension {0} (only 2 and 3 are handled)")]
    UnsupportedDimension(usize),
    #[error("coordinate is not finite")]
    NonFiniteCoordinate,
    #[error("radius must be positive and finite, got {0}")]
    NonPositiveRadius(f64),
    #[error("direction vector has zero length")]
    ZeroDirection,
    #[error("observation point lies in the closed ball (distance {dist}, radius {radius})")]
    PointInsideBall { dist: f64, radius: f64 },
    #[error("cap half-angle must lie strictly between 0 and pi/2, got {0}")]
    InvalidHalfAngle(f64),
    #[error("homothety coefficient must be positive and finite, got {0}")]
    NonPositiveCoefficient(f64),
    #[error("unknown mode {0:?} (expected \"open\" or \"closed\")")]
    BadMode(String),
}

// ---------------------------------------------------------------------------
// raw 3-vector helpers (2D values ride along with z = 0)
// ---------------------------------------------------------------------------

pub(crate) type V3 = [f64; 3];

pub(crate) fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn scale(a: V3, s: f64) -> V3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm(a: V3) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn normalize(a: V3) -> Option<V3> {
    let n = norm(a);
    if n == 0.0 || !n.is_finite() {
        None
    } else {
        Some(scale(a, 1.0 / n))
    }
}

/// Angle between two unit vectors, robust near 0 and π.
pub(crate) fn angle_between(a: V3, b: V3) -> f64 {
    // atan2 of (|a×b|, a·b) is well conditioned at both ends, unlike acos.
    norm(cross(a, b)).atan2(dot(a, b))
}

// ---------------------------------------------------------------------------
// points and unit vectors
// ---------------------------------------------------------------------------

/// A point of the plane or of 3-space. Coordinates are finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    c: V3,
    dim: Dim,
}

impl Point {
    pub fn new2(x: f64, y: f64) -> Result<Point, GeomError> {
        Point::from_raw([x, y, 0.0], Dim::Two)
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Result<Point, GeomError> {
        Point::from_raw([x, y, z], Dim::Three)
    }

    pub fn from_coords(coords: &[f64]) -> Result<Point, GeomError> {
        let dim = Dim::from_len(coords.len())?;
        let mut c = [0.0; 3];
        c[..coords.len()].copy_from_slice(coords);
        Point::from_raw(c, dim)
    }

    pub(crate) fn from_raw(c: V3, dim: Dim) -> Result<Point, GeomError> {
        if !c.iter().all(|v| v.is_finite()) {
            return Err(GeomError::NonFiniteCoordinate);
        }
        Ok(Point { c, dim })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    /// The live coordinates (length 2 or 3).
    pub fn coords(&self) -> &[f64] {
        &self.c[..self.dim.n()]
    }

    pub(crate) fn raw(&self) -> V3 {
        self.c
    }

    pub(crate) fn check_dim(&self, other: Dim) -> Result<(), GeomError> {
        if self.dim == other {
            Ok(())
        } else {
            Err(GeomError::DimensionMismatch {
                expected: self.dim,
                got: other,
            })
        }
    }
}

/// A direction: unit vector, renormalized on construction to within
/// [`UNIT_TOL`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVec {
    v: V3,
    dim: Dim,
}

impl UnitVec {
    pub fn new2(x: f64, y: f64) -> Result<UnitVec, GeomError> {
        UnitVec::from_raw([x, y, 0.0], Dim::Two)
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Result<UnitVec, GeomError> {
        UnitVec::from_raw([x, y, z], Dim::Three)
    }

    pub fn from_coords(coords: &[f64]) -> Result<UnitVec, GeomError> {
        let dim = Dim::from_len(coords.len())?;
        let mut v = [0.0; 3];
        v[..coords.len()].copy_from_slice(coords);
        UnitVec::from_raw(v, dim)
    }

    pub(crate) fn from_raw(v: V3, dim: Dim) -> Result<UnitVec, GeomError> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(GeomError::NonFiniteCoordinate);
        }
        let v = normalize(v).ok_or(GeomError::ZeroDirection)?;
        Ok(UnitVec { v, dim })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn coords(&self) -> &[f64] {
        &self.v[..self.dim.n()]
    }

    pub(crate) fn raw(&self) -> V3 {
        self.v
    }

    /// The opposite direction.
    pub fn negated(&self) -> UnitVec {
        UnitVec {
            v: scale(self.v, -1.0),
            dim: self.dim,
        }
    }

    /// Angle to another direction, in `[0, π]`.
    pub fn angle_to(&self, other: &UnitVec) -> f64 {
        angle_between(self.v, other.v)
    }
}

// ---------------------------------------------------------------------------
// balls, spheres, caps, homothety
// ---------------------------------------------------------------------------

/// A ball `B(center, radius)`, open or closed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball {
    center: Point,
    radius: f64,
    mode: Mode,
}

impl Ball {
    pub fn new(center: Point, radius: f64, mode: Mode) -> Result<Ball, GeomError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeomError::NonPositiveRadius(radius));
        }
        Ok(Ball {
            center,
            radius,
            mode,
        })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> Dim {
        self.center.dim()
    }

    pub fn with_mode(&self, mode: Mode) -> Ball {
        Ball { mode, ..*self }
    }

    /// Membership of a point, honoring the open/closed mode.
    pub fn holds(&self, p: &Point) -> Result<bool, GeomError> {
        let d = dist(&self.center, p)?;
        Ok(match self.mode {
            Mode::Open => d < self.radius,
            Mode::Closed => d <= self.radius,
        })
    }
}

/// A sphere (circle in 2D): center plus positive radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere {
    center: Point,
    radius: f64,
}

impl Sphere {
    pub fn new(center: Point, radius: f64) -> Result<Sphere, GeomError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeomError::NonPositiveRadius(radius));
        }
        Ok(Sphere { center, radius })
    }

    pub fn unit_2d() -> Sphere {
        Sphere {
            center: Point::new2(0.0, 0.0).unwrap(),
            radius: 1.0,
        }
    }

    pub fn unit_3d() -> Sphere {
        Sphere {
            center: Point::new3(0.0, 0.0, 0.0).unwrap(),
            radius: 1.0,
        }
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> Dim {
        self.center.dim()
    }
}

/// The blocked directions of one ball seen from an observation point:
/// a spherical cap of the direction sphere, given by its unit axis and a
/// half-angle in `(0, π/2)`. Wherever *line* (not ray) blocking is meant the
/// cap stands for itself together with its antipodal mirror.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cap {
    axis: UnitVec,
    half_angle: f64,
}

impl Cap {
    pub fn new(axis: UnitVec, half_angle: f64) -> Result<Cap, GeomError> {
        if !(half_angle.is_finite()
            && half_angle > 0.0
            && half_angle < std::f64::consts::FRAC_PI_2)
        {
            return Err(GeomError::InvalidHalfAngle(half_angle));
        }
        Ok(Cap { axis, half_angle })
    }

    pub fn axis(&self) -> UnitVec {
        self.axis
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }

    pub fn dim(&self) -> Dim {
        self.axis.dim()
    }

    pub fn mirrored(&self) -> Cap {
        Cap {
            axis: self.axis.negated(),
            half_angle: self.half_angle,
        }
    }

    /// Does the cap (alone, without its mirror) contain the direction?
    pub fn contains_direction(&self, u: &UnitVec, mode: Mode) -> bool {
        let ang = self.axis.angle_to(u);
        match mode {
            Mode::Open => ang < self.half_angle,
            Mode::Closed => ang <= self.half_angle,
        }
    }
}

/// A positive scaling coefficient for homothety.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomothetyCoeff(f64);

impl HomothetyCoeff {
    pub fn new(k: f64) -> Result<HomothetyCoeff, GeomError> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(GeomError::NonPositiveCoefficient(k));
        }
        Ok(HomothetyCoeff(k))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

/// Euclidean distance between two points of the same dimension.
pub fn dist(a: &Point, b: &Point) -> Result<f64, GeomError> {
    a.check_dim(b.dim())?;
    Ok(norm(sub(a.raw(), b.raw())))
}

/// True iff the open interiors of the two balls are disjoint, i.e.
/// `r1 + r2 <= d`. Tangent balls count as disjoint here regardless of mode.
pub fn interiors_disjoint(b1: &Ball, b2: &Ball) -> Result<bool, GeomError> {
    let d = dist(&b1.center(), &b2.center())?;
    Ok(b1.radius() + b2.radius() <= d)
}

/// Strict point-set disjointness. Two closed balls that are exactly tangent
/// share one point and are *not* disjoint; if at least one ball is open the
/// predicate coincides with [`interiors_disjoint`].
pub fn sets_disjoint(b1: &Ball, b2: &Ball) -> Result<bool, GeomError> {
    let d = dist(&b1.center(), &b2.center())?;
    Ok(match (b1.mode(), b2.mode()) {
        (Mode::Closed, Mode::Closed) => b1.radius() + b2.radius() < d,
        _ => b1.radius() + b2.radius() <= d,
    })
}

/// Scale a ball about `center` by coefficient `k`: the returned ball has
/// center `center + k (b.center - center)` and radius `k * b.radius`; the
/// mode is preserved.
pub fn homothety_ball(b: &Ball, center: &Point, k: HomothetyCoeff) -> Result<Ball, GeomError> {
    center.check_dim(b.dim())?;
    let c = add(center.raw(), scale(sub(b.center().raw(), center.raw()), k.get()));
    Ball::new(
        Point::from_raw(c, b.dim())?,
        k.get() * b.radius(),
        b.mode(),
    )
}

/// The cap of blocked directions of `b` as seen from `x0`.
///
/// Requires `x0` strictly outside the closed ball; the axis points from `x0`
/// to the ball center and the half-angle is `arcsin(radius / distance)`.
/// A line through `x0` with unit direction `u` meets the closed ball exactly
/// when the angle between `u` (or `-u`) and the axis is at most the
/// half-angle.
pub fn cap_of_ball(x0: &Point, b: &Ball) -> Result<Cap, GeomError> {
    x0.check_dim(b.dim())?;
    let d = dist(x0, &b.center())?;
    if d <= b.radius() {
        return Err(GeomError::PointInsideBall {
            dist: d,
            radius: b.radius(),
        });
    }
    let axis = UnitVec::from_raw(sub(b.center().raw(), x0.raw()), b.dim())?;
    Cap::new(axis, (b.radius() / d).asin())
}

/// Does the full line `{x0 + t u : t ∈ R}` meet the ball?
///
/// Decided by the perpendicular distance from the ball center to the line:
/// strictly below the radius for open balls, at most the radius for closed
/// ones. Symmetric in the sign of `u`.
pub fn line_hits_ball(x0: &Point, u: &UnitVec, b: &Ball) -> Result<bool, GeomError> {
    x0.check_dim(b.dim())?;
    x0.check_dim(u.dim())?;
    let v = sub(b.center().raw(), x0.raw());
    let along = dot(v, u.raw());
    let perp2 = (dot(v, v) - along * along).max(0.0);
    let perp = perp2.sqrt();
    Ok(match b.mode() {
        Mode::Open => perp < b.radius(),
        Mode::Closed => perp <= b.radius(),
    })
}

// ---------------------------------------------------------------------------
// rotations (crate-internal)
// ---------------------------------------------------------------------------

/// Row-major 3x3 rotation matrix. 2D values are rotated about the z axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Mat3 {
        Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn apply(&self, v: V3) -> V3 {
        [
            dot(self.0[0], v),
            dot(self.0[1], v),
            dot(self.0[2], v),
        ]
    }

    /// Rodrigues rotation about a unit axis.
    pub fn about_axis(axis: V3, angle: f64) -> Mat3 {
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let [x, y, z] = axis;
        Mat3([
            [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
            [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
            [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
        ])
    }

    /// The rotation taking unit vector `from` onto unit vector `to`.
    pub fn between(from: V3, to: V3) -> Mat3 {
        let c = dot(from, to);
        let ax = cross(from, to);
        let s = norm(ax);
        if s < 1e-14 {
            if c > 0.0 {
                return Mat3::identity();
            }
            // Antiparallel: rotate by pi about any axis orthogonal to `from`.
            let helper = if from[0].abs() < 0.9 {
                [1.0, 0.0, 0.0]
            } else {
                [0.0, 1.0, 0.0]
            };
            let ortho = normalize(cross(from, helper)).expect("orthogonal axis");
            return Mat3::about_axis(ortho, std::f64::consts::PI);
        }
        Mat3::about_axis(scale(ax, 1.0 / s), s.atan2(c))
    }
}
