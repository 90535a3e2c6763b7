//! Points and isometries of the hyperbolic plane.
//!
//! Arithmetic happens in the upper half-plane; the unit disk (through the
//! Cayley map `z -> (z - i)/(z + i)`, which sends `i` to `0`) is used for
//! directions and drawing, and the Klein and hyperboloid models for the
//! linear algebra of bisectors.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Side length of the regular square with corner angle `2pi/5`:
/// `cosh(l/2) = cos(pi/4) / sin(pi/5)`.
pub fn edge_length() -> f64 {
    2.0 * ((PI / 4.0).cos() / (PI / 5.0).sin()).acosh()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    pub const I: HPoint = HPoint { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(y > 0.0);
        HPoint { x, y }
    }

    fn z(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    fn from_z(z: Complex64) -> Self {
        HPoint { x: z.re, y: z.im }
    }

    pub fn dist(self, other: HPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (1.0 + (dx * dx + dy * dy) / (2.0 * self.y * other.y)).acosh()
    }

    pub fn to_disk(self) -> (f64, f64) {
        let z = self.z();
        let w = (z - Complex64::i()) / (z + Complex64::i());
        (w.re, w.im)
    }

    pub fn from_disk(u: f64, v: f64) -> Self {
        let w = Complex64::new(u, v);
        let one = Complex64::new(1.0, 0.0);
        HPoint::from_z(Complex64::i() * (one + w) / (one - w))
    }

    /// Point at distance `r` from `i` in disk direction `theta`.
    pub fn polar(r: f64, theta: f64) -> Self {
        let t = (r / 2.0).tanh();
        HPoint::from_disk(t * theta.cos(), t * theta.sin())
    }

    /// Hyperboloid coordinates `(t, x, y)` with `-t^2 + x^2 + y^2 = -1`.
    pub fn hyperboloid(self) -> [f64; 3] {
        let (u, v) = self.to_disk();
        let r2 = u * u + v * v;
        let s = 1.0 - r2;
        [(1.0 + r2) / s, 2.0 * u / s, 2.0 * v / s]
    }

    /// Klein-model coordinates (geodesics are straight chords).
    pub fn klein(self) -> (f64, f64) {
        let [t, x, y] = self.hyperboloid();
        (x / t, y / t)
    }

    pub fn from_klein(kx: f64, ky: f64) -> Self {
        // Klein -> disk: p = k / (1 + sqrt(1 - |k|^2))
        let s = 1.0 + (1.0 - kx * kx - ky * ky).max(0.0).sqrt();
        HPoint::from_disk(kx / s, ky / s)
    }
}

/// Minkowski form `-t t' + x x' + y y'`.
pub fn minkowski(a: [f64; 3], b: [f64; 3]) -> f64 {
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Interior angle at `p` of the geodesic triangle `q1 p q2`.
pub fn angle_at(p: HPoint, q1: HPoint, q2: HPoint) -> f64 {
    let a = p.dist(q1);
    let b = p.dist(q2);
    let c = q1.dist(q2);
    let cos = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
    cos.clamp(-1.0, 1.0).acos()
}

/// An isometry `z -> m(z)` or, when `rev` is set, `z -> m(-conj z)`,
/// with `m` in `SL(2, R)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HIso {
    pub m: [f64; 4],
    pub rev: bool,
}

impl HIso {
    pub const IDENTITY: HIso = HIso {
        m: [1.0, 0.0, 0.0, 1.0],
        rev: false,
    };

    /// The reflection `z -> -conj z` in the imaginary axis.
    pub const J: HIso = HIso {
        m: [1.0, 0.0, 0.0, 1.0],
        rev: true,
    };

    /// Rotation about `i` by the angle `2t`.
    pub fn rotation(t: f64) -> Self {
        let (s, c) = t.sin_cos();
        HIso {
            m: [c, s, -s, c],
            rev: false,
        }
    }

    /// Translation along the imaginary axis by hyperbolic distance `r`.
    pub fn axial(r: f64) -> Self {
        let e = (r / 2.0).exp();
        HIso {
            m: [e, 0.0, 0.0, 1.0 / e],
            rev: false,
        }
    }

    /// Orientation-preserving isometry taking `i` to the point at distance `r`
    /// in direction `theta`, and the direction `theta` at `i` onward along
    /// the same geodesic.
    pub fn along(r: f64, theta: f64) -> Self {
        HIso::rotation(theta / 2.0)
            .compose(&HIso::axial(r))
            .compose(&HIso::rotation(-theta / 2.0))
    }

    /// Reflection in the geodesic through `i` with direction `theta`.
    pub fn reflection(theta: f64) -> Self {
        HIso::rotation(theta / 2.0)
            .compose(&HIso::J)
            .compose(&HIso::rotation(-theta / 2.0))
    }

    pub fn apply(&self, p: HPoint) -> HPoint {
        let z = if self.rev {
            Complex64::new(-p.x, p.y)
        } else {
            p.z()
        };
        let [a, b, c, d] = self.m;
        let w = (z * a + b) / (z * c + d);
        HPoint::new(w.re, w.im)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &HIso) -> HIso {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = if self.rev {
            let [e, f, g, h] = other.m;
            [e, -f, -g, h]
        } else {
            other.m
        };
        HIso {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
            rev: self.rev ^ other.rev,
        }
    }

    pub fn inverse(&self) -> HIso {
        let [a, b, c, d] = self.m;
        let inv = [d, -b, -c, a];
        HIso {
            m: if self.rev {
                [inv[0], -inv[1], -inv[2], inv[3]]
            } else {
                inv
            },
            rev: self.rev,
        }
    }

    /// Largest entry difference to `other`, up to the sign of the matrix;
    /// infinite when the orientation flags differ.
    pub fn distance_to(&self, other: &HIso) -> f64 {
        if self.rev != other.rev {
            return f64::INFINITY;
        }
        let plus = (0..4)
            .map(|k| (self.m[k] - other.m[k]).abs())
            .fold(0.0, f64::max);
        let minus = (0..4)
            .map(|k| (self.m[k] + other.m[k]).abs())
            .fold(0.0, f64::max);
        plus.min(minus)
    }

    pub fn approx_eq(&self, other: &HIso, tol: f64) -> bool {
        self.distance_to(other) <= tol
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&HIso::IDENTITY, tol)
    }

    /// The isometry sending `i`, `polar(r, t1)`, `polar(r, t2)` to `p0`,
    /// `p1`, `p2`; the orientation is read off the images. `None` when the
    /// images do not fit any isometry.
    pub fn from_three(
        r: f64,
        t1: f64,
        t2: f64,
        p0: HPoint,
        p1: HPoint,
        p2: HPoint,
    ) -> Option<HIso> {
        let to_origin = HIso::along(p0.dist(HPoint::I), direction_from_i(p0));
        let back = to_origin.inverse();
        let q1 = back.apply(p1).to_disk();
        let q2 = back.apply(p2).to_disk();
        let f1 = q1.1.atan2(q1.0);
        let f2 = q2.1.atan2(q2.0);
        let turn = normalize_angle(f2 - f1);
        let want = normalize_angle(t2 - t1);
        let local = if (turn - want).abs() < 1e-6 {
            HIso::rotation((f1 - t1) / 2.0)
        } else if (turn + want).abs() < 1e-6 {
            HIso::rotation(f1 / 2.0)
                .compose(&HIso::J)
                .compose(&HIso::rotation(-t1 / 2.0))
        } else {
            return None;
        };
        let iso = to_origin.compose(&local);
        let ok = [(HPoint::polar(r, t1), p1), (HPoint::polar(r, t2), p2)]
            .iter()
            .all(|&(a, b)| iso.apply(a).dist(b) < 1e-6 * (1.0 + r));
        ok.then_some(iso)
    }
}

/// Disk direction at `i` of the geodesic towards `p` (0 when `p = i`).
pub fn direction_from_i(p: HPoint) -> f64 {
    let (u, v) = p.to_disk();
    if u == 0.0 && v == 0.0 {
        0.0
    } else {
        v.atan2(u)
    }
}

/// Angle reduced to `(-pi, pi]`.
pub fn normalize_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x <= -PI {
        x += 2.0 * PI;
    } else if x > PI {
        x -= 2.0 * PI;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn edge_length_value() {
        assert!((edge_length() - 1.25373).abs() < 1e-5);
    }

    #[test]
    fn polar_points_have_the_right_distance_and_direction() {
        for k in 0..5 {
            let t = 2.0 * PI * k as f64 / 5.0;
            let p = HPoint::polar(1.3, t);
            assert!((p.dist(HPoint::I) - 1.3).abs() < TOL);
            assert!(normalize_angle(direction_from_i(p) - t).abs() < TOL);
            let q = HIso::along(1.3, t).apply(HPoint::I);
            assert!(q.dist(p) < TOL);
        }
    }

    #[test]
    fn composition_matches_application() {
        let a = HIso::along(0.7, 1.1).compose(&HIso::J);
        let b = HIso::rotation(0.4).compose(&HIso::axial(-0.3));
        let p = HPoint::new(0.3, 2.1);
        let lhs = a.compose(&b).apply(p);
        let rhs = a.apply(b.apply(p));
        assert!(lhs.dist(rhs) < TOL);
        assert!(a.compose(&a.inverse()).is_identity(TOL));
        assert!(b.inverse().compose(&b).is_identity(TOL));
    }

    #[test]
    fn isometries_preserve_distance() {
        let g = HIso::reflection(0.9).compose(&HIso::along(2.0, -0.5));
        let p = HPoint::new(-1.0, 0.5);
        let q = HPoint::new(2.0, 3.0);
        assert!((g.apply(p).dist(g.apply(q)) - p.dist(q)).abs() < TOL);
    }

    #[test]
    fn model_round_trips() {
        let p = HPoint::new(0.37, 1.9);
        let (u, v) = p.to_disk();
        assert!(HPoint::from_disk(u, v).dist(p) < TOL);
        let (kx, ky) = p.klein();
        assert!(HPoint::from_klein(kx, ky).dist(p) < TOL);
        let h = p.hyperboloid();
        assert!((minkowski(h, h) + 1.0).abs() < TOL);
        let q = HPoint::new(-0.2, 0.8);
        let d = (-minkowski(h, q.hyperboloid())).acosh();
        assert!((d - p.dist(q)).abs() < 1e-8);
    }

    #[test]
    fn from_three_recovers_an_isometry() {
        let r = edge_length();
        let (t1, t2) = (0.0, 2.0 * PI / 5.0);
        for g in [
            HIso::along(1.4, 0.3),
            HIso::along(0.8, 2.0).compose(&HIso::reflection(1.0)),
        ] {
            let images = [HPoint::I, HPoint::polar(r, t1), HPoint::polar(r, t2)].map(|p| g.apply(p));
            let h = HIso::from_three(r, t1, t2, images[0], images[1], images[2]).unwrap();
            assert!(h.approx_eq(&g, 1e-9), "{h:?} vs {g:?}");
        }
    }

    #[test]
    fn square_corner_angle() {
        // Regular square of side l with corner angle 2pi/5.
        let l = edge_length();
        let a = HPoint::I;
        let b = HPoint::polar(l, 0.0);
        let d = HPoint::polar(l, 2.0 * PI / 5.0);
        assert!((angle_at(a, b, d) - 2.0 * PI / 5.0).abs() < TOL);
    }
}
