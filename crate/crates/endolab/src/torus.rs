//! Exact mod-1 geometry on the 2-torus: points, tangent vectors, 2x2
//! matrices, lifted paths, and the sup-norm metric shared by every other
//! module.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cert::Certificate;

#[derive(Debug, Error)]
pub enum TorusError {
    #[error("non-finite coordinate ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("ball radius {0} outside (0, 1/2)")]
    BadRadius(f64),
    #[error("lift jump of {jump} at segment {index} exceeds 1/2")]
    LiftJump { index: usize, jump: f64 },
    #[error("lifted path needs at least one point")]
    EmptyPath,
}

/// A point of the torus with both coordinates reduced into [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusPoint {
    pub x: f64,
    pub y: f64,
}

/// Free tangent vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanarVec {
    pub v1: f64,
    pub v2: f64,
}

impl PlanarVec {
    pub fn new(v1: f64, v2: f64) -> Self {
        Self { v1, v2 }
    }

    pub fn norm(&self) -> f64 {
        self.v1.hypot(self.v2)
    }

    pub fn normalized(&self) -> PlanarVec {
        let n = self.norm();
        PlanarVec::new(self.v1 / n, self.v2 / n)
    }

    pub fn dot(&self, o: &PlanarVec) -> f64 {
        self.v1 * o.v1 + self.v2 * o.v2
    }
}

fn reduce_mod1(c: f64) -> f64 {
    let mut r = c.rem_euclid(1.0);
    // rem_euclid of a tiny negative rounds to 1.0 exactly
    if r >= 1.0 {
        r -= 1.0;
    }
    r
}

/// Reduce a pair of reals mod 1 into [0,1)^2. Idempotent.
pub fn wrap(x: f64, y: f64) -> Result<TorusPoint, TorusError> {
    if !x.is_finite() || !y.is_finite() {
        return Err(TorusError::NonFinite(x, y));
    }
    Ok(TorusPoint {
        x: reduce_mod1(x),
        y: reduce_mod1(y),
    })
}

impl TorusPoint {
    /// Infallible wrap for coordinates already known finite.
    pub fn new(x: f64, y: f64) -> TorusPoint {
        TorusPoint {
            x: reduce_mod1(x),
            y: reduce_mod1(y),
        }
    }
}

/// Signed circle difference a - b reduced into [-1/2, 1/2).
pub fn circle_delta(a: f64, b: f64) -> f64 {
    let mut d = (a - b).rem_euclid(1.0);
    if d >= 0.5 {
        d -= 1.0;
    }
    d
}

/// Distance on the circle: min(|d|, 1-|d|).
pub fn circle_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Shortest planar representative of q - p.
pub fn torus_delta(q: TorusPoint, p: TorusPoint) -> PlanarVec {
    PlanarVec::new(circle_delta(q.x, p.x), circle_delta(q.y, p.y))
}

/// Sup-norm distance on the torus.
pub fn torus_dist(p: TorusPoint, q: TorusPoint) -> f64 {
    circle_dist(p.x, q.x).max(circle_dist(p.y, q.y))
}

/// Open sup-norm ball {p : torus_dist(center, p) < radius}.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SupBall {
    pub center: TorusPoint,
    pub radius: f64,
}

impl SupBall {
    pub fn new(center: TorusPoint, radius: f64) -> Result<SupBall, TorusError> {
        if !(radius > 0.0 && radius < 0.5) {
            return Err(TorusError::BadRadius(radius));
        }
        Ok(SupBall { center, radius })
    }

    pub fn contains(&self, p: TorusPoint) -> bool {
        torus_dist(self.center, p) < self.radius
    }
}

/// Row-major 2x2 real matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn diag(a: f64, d: f64) -> Self {
        Self::new(a, 0.0, 0.0, d)
    }

    pub fn identity() -> Self {
        Self::diag(1.0, 1.0)
    }

    pub fn apply(&self, v: PlanarVec) -> PlanarVec {
        PlanarVec::new(self.a * v.v1 + self.b * v.v2, self.c * v.v1 + self.d * v.v2)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    /// Singular values in decreasing order, both nonnegative.
    pub fn singular_values(&self) -> (f64, f64) {
        let p = self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d;
        let h = self.a * self.a + self.b * self.b - self.c * self.c - self.d * self.d;
        let g = 2.0 * (self.a * self.c + self.b * self.d);
        let q = (h * h + g * g).sqrt();
        let s1 = ((p + q) / 2.0).max(0.0).sqrt();
        let s2 = (((p - q) / 2.0).max(0.0)).sqrt();
        (s1, s2)
    }

    pub fn sup_entry_norm(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }
}

/// Planar polyline whose mod-1 projection is a torus curve; consecutive
/// lifted points differ by less than 1/2 in each coordinate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftedPath {
    pub points: Vec<[f64; 2]>,
}

impl LiftedPath {
    /// Greedy lift of a torus-point sequence from its first sample.
    pub fn lift(samples: &[TorusPoint]) -> Result<LiftedPath, TorusError> {
        let first = *samples.first().ok_or(TorusError::EmptyPath)?;
        let mut points = Vec::with_capacity(samples.len());
        points.push([first.x, first.y]);
        for (i, s) in samples.iter().enumerate().skip(1) {
            let prev = points[i - 1];
            let prev_t = TorusPoint::new(prev[0], prev[1]);
            let d = torus_delta(*s, prev_t);
            if d.v1.abs() >= 0.5 || d.v2.abs() >= 0.5 {
                return Err(TorusError::LiftJump {
                    index: i,
                    jump: d.v1.abs().max(d.v2.abs()),
                });
            }
            points.push([prev[0] + d.v1, prev[1] + d.v2]);
        }
        Ok(LiftedPath { points })
    }

    pub fn project(&self) -> Vec<TorusPoint> {
        self.points.iter().map(|p| TorusPoint::new(p[0], p[1])).collect()
    }

    /// Sup-norm extent of the lift: max of the bounding-box side lengths.
    pub fn diameter(&self) -> f64 {
        let mut xmin = f64::INFINITY;
        let mut xmax = f64::NEG_INFINITY;
        let mut ymin = f64::INFINITY;
        let mut ymax = f64::NEG_INFINITY;
        for p in &self.points {
            xmin = xmin.min(p[0]);
            xmax = xmax.max(p[0]);
            ymin = ymin.min(p[1]);
            ymax = ymax.max(p[1]);
        }
        (xmax - xmin).max(ymax - ymin)
    }
}

fn circle_interval_gap(c1: f64, h1: f64, c2: f64, h2: f64) -> f64 {
    circle_dist(c1, c2) - (h1 + h2)
}

/// The three analytic conditions the ball radius r must satisfy for the
/// diagonal matrix A = diag(8, 2): the A-image of B((1/16,1/4),r) misses
/// its closure, the A-preimage of B((1/2,1/2),r) misses the circle {y=0},
/// and the three balls at (1/16,1/4), (1/2,1/2), (0,0) are pairwise
/// disjoint. All checks are exact interval arithmetic on the circle.
pub fn check_r_conditions(r: f64, a: Mat2) -> Result<Certificate, TorusError> {
    if !(r > 0.0 && r < 0.5) {
        return Err(TorusError::BadRadius(r));
    }
    let (lx, ly) = (a.a, a.d); // diagonal expansion rates
    let p1 = (1.0 / 16.0, 0.25);
    let p2 = (0.5, 0.5);
    let p0 = (0.0, 0.0);

    let mut worst = f64::INFINITY;
    let mut detail = Vec::new();

    // (1) A-image box of B(p1, r) vs closure of B(p1, r): disjoint iff some
    // axis separates.
    let img = (lx * p1.0, ly * p1.1);
    let gap1 = circle_interval_gap(img.0, lx.abs() * r, p1.0, r)
        .max(circle_interval_gap(img.1, ly.abs() * r, p1.1, r));
    detail.push(format!("image-ball separation {gap1:.6}"));
    worst = worst.min(gap1);

    // (2) A^{-1} of B(p2, r): y-branches (p2.1 + k)/ly for k = 0..ly-1 must
    // miss the circle {y = 0}.
    let ky = ly.abs().round() as i64;
    let mut gap2 = f64::INFINITY;
    for k in 0..ky.max(1) {
        let yc = (p2.1 + k as f64) / ly;
        gap2 = gap2.min(circle_dist(yc, 0.0) - r / ly.abs());
    }
    detail.push(format!("preimage-vs-circle separation {gap2:.6}"));
    worst = worst.min(gap2);

    // (3) pairwise disjointness of the three balls.
    for (q1, q2, lbl) in [(p1, p2, "b1-b2"), (p2, p0, "b2-b0"), (p0, p1, "b0-b1")] {
        let gap = circle_interval_gap(q1.0, r, q2.0, r).max(circle_interval_gap(q1.1, r, q2.1, r));
        detail.push(format!("{lbl} separation {gap:.6}"));
        worst = worst.min(gap);
    }

    Ok(Certificate::from_margin(
        "r_conditions",
        &format!("analytic, r={r}"),
        worst,
        0.0,
        None,
        &detail.join("; "),
    ))
}
