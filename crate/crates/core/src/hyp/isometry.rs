use super::HPoint;
use crate::tol::RENORM_PERIOD;

type Mat = [[f64; 3]; 3];

/// Orientation-preserving isometry of the hyperbolic plane, stored as a
/// matrix of SO⁺(2,1). Columns are (position, heading, normal) of the image
/// of the standard frame at the origin, so the same type doubles as a
/// turtle pose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: Mat,
    ops: u32,
}

impl Default for Isometry {
    fn default() -> Self {
        Self::identity()
    }
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut r = [[0.0; 3]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    r
}

fn mink(a: [f64; 3], b: [f64; 3]) -> f64 {
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            ops: 0,
        }
    }

    /// Translation by `d` along the x1 axis.
    pub fn translation(d: f64) -> Self {
        let (s, c) = (d.sinh(), d.cosh());
        Isometry {
            m: [[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
            ops: 0,
        }
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotation(a: f64) -> Self {
        let (s, c) = a.sin_cos();
        Isometry {
            m: [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
            ops: 0,
        }
    }

    /// The pure boost taking the origin to `p`.
    pub fn boost_to(p: &HPoint) -> Self {
        let k = 1.0 / (1.0 + p.x0);
        Isometry {
            m: [
                [p.x0, p.x1, p.x2],
                [p.x1, 1.0 + p.x1 * p.x1 * k, p.x1 * p.x2 * k],
                [p.x2, p.x1 * p.x2 * k, 1.0 + p.x2 * p.x2 * k],
            ],
            ops: 0,
        }
    }

    /// The boost taking `p` to the origin.
    pub fn boost_from(p: &HPoint) -> Self {
        Self::boost_to(&HPoint {
            x0: p.x0,
            x1: -p.x1,
            x2: -p.x2,
        })
    }

    /// Half-turn about `p`: `x ↦ −x − 2⟨x,p⟩p`.
    pub fn half_turn(p: &HPoint) -> Self {
        let pv = [p.x0, p.x1, p.x2];
        let jp = [-p.x0, p.x1, p.x2];
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = -2.0 * pv[i] * jp[j] - if i == j { 1.0 } else { 0.0 };
            }
        }
        Isometry { m, ops: 0 }
    }

    /// Frame at `p` whose heading points towards `q`.
    pub fn frame_towards(p: &HPoint, q: &HPoint) -> Self {
        let b = Self::boost_from(p);
        let local = b.apply(q);
        let phi = local.x2.atan2(local.x1);
        Self::boost_to(p).then(&Self::rotation(phi))
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn then(&self, other: &Isometry) -> Self {
        let mut out = Isometry {
            m: mul(&self.m, &other.m),
            ops: self.ops + other.ops + 1,
        };
        if out.ops >= RENORM_PERIOD {
            out.renormalize();
        }
        out
    }

    pub fn inverse(&self) -> Self {
        // M⁻¹ = J Mᵀ J with J = diag(−1, 1, 1).
        let s = [-1.0, 1.0, 1.0];
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = s[i] * self.m[j][i] * s[j];
            }
        }
        Isometry { m, ops: self.ops }
    }

    pub fn apply(&self, p: &HPoint) -> HPoint {
        let v = [p.x0, p.x1, p.x2];
        let r = |i: usize| self.m[i][0] * v[0] + self.m[i][1] * v[1] + self.m[i][2] * v[2];
        HPoint::from_spatial(r(1), r(2))
    }

    /// Re-orthonormalise the columns with Minkowski Gram–Schmidt.
    pub fn renormalize(&mut self) {
        let col = |m: &Mat, j: usize| [m[0][j], m[1][j], m[2][j]];
        let mut c0 = col(&self.m, 0);
        let mut c1 = col(&self.m, 1);
        let mut c2 = col(&self.m, 2);
        let n0 = (-mink(c0, c0)).sqrt();
        c0.iter_mut().for_each(|x| *x /= n0);
        let p10 = mink(c1, c0);
        for i in 0..3 {
            c1[i] += p10 * c0[i];
        }
        let n1 = mink(c1, c1).sqrt();
        c1.iter_mut().for_each(|x| *x /= n1);
        let (p20, p21) = (mink(c2, c0), mink(c2, c1));
        for i in 0..3 {
            c2[i] += p20 * c0[i] - p21 * c1[i];
        }
        let n2 = mink(c2, c2).sqrt();
        c2.iter_mut().for_each(|x| *x /= n2);
        for i in 0..3 {
            self.m[i] = [c0[i], c1[i], c2[i]];
        }
        self.ops = 0;
    }

    // --- turtle interface -------------------------------------------------

    pub fn position(&self) -> HPoint {
        HPoint::from_spatial(self.m[1][0], self.m[2][0])
    }

    /// Move forward along the heading.
    pub fn advance(&self, d: f64) -> Self {
        self.then(&Self::translation(d))
    }

    /// Turn the heading counterclockwise by `a`.
    pub fn turn(&self, a: f64) -> Self {
        self.then(&Self::rotation(a))
    }

    /// Coordinates of `p` in this frame (frame position at the origin,
    /// heading along +x1).
    pub fn local(&self, p: &HPoint) -> HPoint {
        self.inverse().apply(p)
    }

    /// Largest deviation of `MᵀJM` from `J`.
    pub fn defect(&self) -> f64 {
        let s = [-1.0, 1.0, 1.0];
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let g: f64 = (0..3).map(|k| s[k] * self.m[k][i] * self.m[k][j]).sum();
                let target = if i == j { s[i] } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn boost_moves_origin_and_back() {
        let p = HPoint::from_polar(2.5, 1.2);
        let b = Isometry::boost_to(&p);
        assert!(b.apply(&HPoint::ORIGIN).distance(&p) < 1e-12);
        assert!(Isometry::boost_from(&p).apply(&p).distance(&HPoint::ORIGIN) < 1e-12);
    }

    #[test]
    fn half_turn_fixes_centre_and_swaps() {
        let c = HPoint::from_polar(0.8, 2.0);
        let a = HPoint::from_polar(1.1, -0.3);
        let h = Isometry::half_turn(&c);
        assert!(h.apply(&c).distance(&c) < 1e-12);
        let a2 = h.apply(&a);
        assert!((a2.distance(&c) - a.distance(&c)).abs() < 1e-12);
        // c is the midpoint of a and its image
        assert!((a.distance(&a2) - 2.0 * a.distance(&c)).abs() < 1e-11);
        assert!(h.then(&h).apply(&a).distance(&a) < 1e-11);
    }

    #[test]
    fn isometries_preserve_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = Isometry::boost_to(&HPoint::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..6.0)))
                .then(&Isometry::rotation(rng.gen_range(-3.0..3.0)));
            let p = HPoint::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..6.0));
            let q = HPoint::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..6.0));
            let (gp, gq) = (g.apply(&p), g.apply(&q));
            assert!((gp.distance(&gq) - p.distance(&q)).abs() < 1e-11);
            assert!(g.inverse().apply(&gp).distance(&p) < 1e-11);
        }
    }

    #[test]
    fn long_turtle_walk_stays_on_the_hyperboloid() {
        // 10⁴ composed moves; the walk steers home whenever it strays past
        // radius 3 so coordinates stay representable.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut f = Isometry::identity();
        for _ in 0..10_000 {
            let here = f.position();
            if here.radius() > 3.0 {
                let home = f.local(&HPoint::ORIGIN);
                f = f.turn(home.x2.atan2(home.x1));
            } else {
                f = f.turn(rng.gen_range(-3.0..3.0));
            }
            f = f.advance(rng.gen_range(0.0..1.0));
            // points are re-lifted onto the sheet; the frame matrix itself
            // drifts only between re-orthonormalisations
            assert!(f.position().residual().abs() < 1e-12);
            assert!(f.defect() < 1e-10, "defect {}", f.defect());
        }
    }
}
