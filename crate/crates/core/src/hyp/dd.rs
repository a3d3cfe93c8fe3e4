//! Double-double evaluation of the few quantities that cancel badly far from
//! the origin. Only `x1`, `x2` of a point are trusted; `x0` is rebuilt.

use twofloat::TwoFloat;

use super::HPoint;

/// Long division with two correction terms; `TwoFloat`'s own quotient is
/// only accurate to about one binary64 ulp.
fn div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    TwoFloat::new_add(q1, q2) + r.hi() / b.hi()
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Lifted {
    x0: TwoFloat,
    x1: f64,
    x2: f64,
}

impl Lifted {
    pub(crate) fn new(p: &HPoint) -> Self {
        let r2 = TwoFloat::new_mul(p.x1, p.x1) + TwoFloat::new_mul(p.x2, p.x2);
        Lifted {
            x0: (r2 + 1.0).sqrt(),
            x1: p.x1,
            x2: p.x2,
        }
    }

    fn spatial_dot(&self, o: &Lifted) -> TwoFloat {
        TwoFloat::new_mul(self.x1, o.x1) + TwoFloat::new_mul(self.x2, o.x2)
    }

    /// `−⟨p,q⟩`.
    fn cosh_dist(&self, o: &Lifted) -> TwoFloat {
        self.x0 * o.x0 - self.spatial_dot(o)
    }

    pub(crate) fn distance(&self, o: &Lifted) -> f64 {
        let c = self.cosh_dist(o);
        if c.hi() < 2.0 {
            let d0 = self.x0 - o.x0;
            let d1 = TwoFloat::new_add(self.x1, -o.x1);
            let d2 = TwoFloat::new_add(self.x2, -o.x2);
            let chord2 = (d1 * d1 + d2 * d2 - d0 * d0).hi().max(0.0);
            2.0 * (chord2.sqrt() / 2.0).asinh()
        } else {
            c.hi().acosh()
        }
    }

    /// Image of `o` under the pure boost taking `self` to the origin.
    pub(crate) fn chart(&self, o: &Lifted) -> HPoint {
        let k = div(self.spatial_dot(o), self.x0 + 1.0);
        let s = o.x0 - k;
        let y1 = TwoFloat::from(o.x1) - s * self.x1;
        let y2 = TwoFloat::from(o.x2) - s * self.x2;
        HPoint::from_spatial(y1.hi(), y2.hi())
    }

    /// `det(a, b, c)` of the hyperboloid vectors; its sign is the orientation
    /// of the triangle and it is invariant under orientation-preserving
    /// isometries.
    pub(crate) fn det(a: &Lifted, b: &Lifted, c: &Lifted) -> f64 {
        let m12 = TwoFloat::new_mul(b.x1, c.x2) - TwoFloat::new_mul(b.x2, c.x1);
        let m02 = b.x0 * c.x2 - c.x0 * b.x2;
        let m01 = b.x0 * c.x1 - c.x0 * b.x1;
        (a.x0 * m12 - m02 * a.x1 + m01 * a.x2).hi()
    }
}
