//! Exact arithmetic on the hexagonal tiling. Coordinates live in the axial
//! basis of the fine triangular lattice (unit vectors 60 degrees apart, one
//! step = one hexagon circumradius) and are stored doubled, so every point of
//! interest (hexagon centers, hexagon vertices, edge midpoints) is integral.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexPoint {
    /// doubled first axial coordinate
    pub a: i64,
    /// doubled second axial coordinate
    pub b: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    FaceCenter,
    LeftVertex,
    RightVertex,
    EdgeCenter,
    Other,
}

impl HexPoint {
    pub const fn new(a: i64, b: i64) -> Self {
        HexPoint { a, b }
    }

    /// The lattice point at true coordinates (a, b).
    pub const fn whole(a: i64, b: i64) -> Self {
        HexPoint { a: 2 * a, b: 2 * b }
    }

    /// Rotation by 60 degrees counterclockwise about the origin.
    pub fn rot60(self) -> HexPoint {
        HexPoint::new(-self.b, self.a + self.b)
    }

    pub fn rotk(self, k: u32) -> HexPoint {
        let mut p = self;
        for _ in 0..k % 6 {
            p = p.rot60();
        }
        p
    }

    /// Squared Euclidean length, times 4 (doubled coordinates).
    pub fn norm2(self) -> i64 {
        self.a * self.a + self.a * self.b + self.b * self.b
    }

    pub fn cross(self, o: HexPoint) -> i64 {
        self.a * o.b - self.b * o.a
    }

    pub fn dot(self, o: HexPoint) -> i64 {
        // Euclidean inner product in the axial basis, times 8
        2 * self.a * o.a + 2 * self.b * o.b + self.a * o.b + self.b * o.a
    }

    /// Role of this point in the hexagonal tiling whose face centers form the
    /// coarse sublattice {(a, b) whole : a - b divisible by 3}.
    pub fn classify(self) -> PointClass {
        if self.a % 2 == 0 && self.b % 2 == 0 {
            match ((self.a - self.b) / 2).rem_euclid(3) {
                0 => PointClass::FaceCenter,
                1 => PointClass::LeftVertex,
                _ => PointClass::RightVertex,
            }
        } else if (self.a - self.b).rem_euclid(3) == 0 {
            PointClass::EdgeCenter
        } else {
            PointClass::Other
        }
    }

    pub fn is_vertex(self) -> bool {
        matches!(self.classify(), PointClass::LeftVertex | PointClass::RightVertex)
    }
}

impl std::ops::Add for HexPoint {
    type Output = HexPoint;
    fn add(self, o: HexPoint) -> HexPoint {
        HexPoint::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for HexPoint {
    type Output = HexPoint;
    fn sub(self, o: HexPoint) -> HexPoint {
        HexPoint::new(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Neg for HexPoint {
    type Output = HexPoint;
    fn neg(self) -> HexPoint {
        HexPoint::new(-self.a, -self.b)
    }
}

/// Doubled offsets from a hexagon center to its six vertices (equally, the
/// six fine-lattice unit steps).
pub const HEX_OFFSETS: [HexPoint; 6] = [
    HexPoint::new(2, 0),
    HexPoint::new(0, 2),
    HexPoint::new(-2, 2),
    HexPoint::new(-2, 0),
    HexPoint::new(0, -2),
    HexPoint::new(2, -2),
];

/// A chamber of the barycentric subdivision of the hexagonal tiling:
/// a vertex, the midpoint of an incident edge, the center of a face on
/// that edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeChamber {
    pub v: HexPoint,
    pub m: HexPoint,
    pub c: HexPoint,
}

impl LatticeChamber {
    pub fn is_valid(&self) -> bool {
        self.v.is_vertex()
            && self.m.classify() == PointClass::EdgeCenter
            && self.c.classify() == PointClass::FaceCenter
            && HEX_OFFSETS.contains(&(self.v - self.c))
            && HEX_OFFSETS.contains(&(self.m + self.m - self.v - self.c))
    }

    /// Move to the adjacent chamber across the side opposite feature k.
    pub fn s(&self, k: usize) -> LatticeChamber {
        match k {
            0 => LatticeChamber {
                v: HexPoint::new(2 * self.m.a - self.v.a, 2 * self.m.b - self.v.b),
                m: self.m,
                c: self.c,
            },
            1 => LatticeChamber {
                v: self.v,
                m: HexPoint::new(
                    (3 * self.v.a + self.c.a) / 2 - self.m.a,
                    (3 * self.v.b + self.c.b) / 2 - self.m.b,
                ),
                c: self.c,
            },
            2 => LatticeChamber {
                v: self.v,
                m: self.m,
                c: HexPoint::new(2 * self.m.a - self.c.a, 2 * self.m.b - self.c.b),
            },
            _ => unreachable!(),
        }
    }

    /// Six times the true centroid (exact).
    pub fn centroid6(&self) -> HexPoint {
        self.v + self.m + self.c
    }

    /// White chambers turn counterclockwise from edge to face.
    pub fn color(&self) -> u8 {
        let cr = (self.m - self.v).cross(self.c - self.v);
        debug_assert!(cr != 0);
        if cr > 0 {
            0
        } else {
            1
        }
    }

    pub fn translate(&self, d: HexPoint) -> LatticeChamber {
        LatticeChamber { v: self.v + d, m: self.m + d, c: self.c + d }
    }

    pub fn rot60(&self) -> LatticeChamber {
        LatticeChamber { v: self.v.rot60(), m: self.m.rot60(), c: self.c.rot60() }
    }
}

/// Goldberg-Coxeter parameters, normalized so l >= m >= 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldbergSpec {
    pub l: i64,
    pub m: i64,
}

impl GoldbergSpec {
    pub fn new(l: i64, m: i64) -> crate::Result<Self> {
        if l < m || m < 0 || (l, m) == (0, 0) {
            return Err(crate::Error::Parse(format!(
                "gc parameters must satisfy l >= m >= 0 and (l, m) != (0, 0), got ({l}, {m})"
            )));
        }
        Ok(GoldbergSpec { l, m })
    }

    /// Triangulation number: the inflation factor of gc(l, m).
    pub fn t(&self) -> i64 {
        self.l * self.l + self.l * self.m + self.m * self.m
    }

    pub fn achiral(&self) -> bool {
        self.m == 0 || self.l == self.m
    }
}

/// Corners of the master triangle (doubled): v2 at a hexagon center, v0 at
/// the center l steps out and m steps turned, v1 at the midpoint of v0 and
/// its 60-degree rotation v0'.
pub struct GoldbergCorners {
    pub v2: HexPoint,
    pub v0: HexPoint,
    pub v1: HexPoint,
    pub v0p: HexPoint,
}

pub fn goldberg_corners(spec: GoldbergSpec) -> GoldbergCorners {
    let (l, m) = (spec.l, spec.m);
    let v0 = HexPoint::new(2 * l, 2 * m);
    GoldbergCorners {
        v2: HexPoint::new(0, 0),
        v0,
        v1: HexPoint::new(l - m, l + 2 * m),
        v0p: v0.rot60(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(HexPoint::whole(0, 0).classify(), PointClass::FaceCenter);
        assert_eq!(HexPoint::whole(1, 0).classify(), PointClass::LeftVertex);
        assert_eq!(HexPoint::whole(5, 3).classify(), PointClass::RightVertex);
        // midpoint of two adjacent vertices
        assert_eq!(HexPoint::new(1, 1).classify(), PointClass::EdgeCenter);
        // midpoint of a center and a vertex is nothing special
        assert_eq!(HexPoint::new(1, 0).classify(), PointClass::Other);
    }

    #[test]
    fn rot60_preserves_the_tiling() {
        for a in -10..=10 {
            for b in -10..=10 {
                let p = HexPoint::new(a, b);
                let q = p.rot60();
                let coarse = |c: PointClass| match c {
                    PointClass::LeftVertex | PointClass::RightVertex => 1,
                    other => match other {
                        PointClass::FaceCenter => 0,
                        PointClass::EdgeCenter => 2,
                        _ => 3,
                    },
                };
                assert_eq!(coarse(p.classify()), coarse(q.classify()), "{p:?}");
                assert_eq!(p.norm2(), q.norm2());
                assert_eq!(p.rotk(6), p);
            }
        }
    }

    #[test]
    fn rot60_swaps_vertex_chirality() {
        let p = HexPoint::whole(1, 0);
        assert_eq!(p.rot60().classify(), PointClass::RightVertex);
        assert_eq!(p.rot60().rot60().classify(), PointClass::LeftVertex);
    }

    #[test]
    fn corner_examples() {
        let c = goldberg_corners(GoldbergSpec::new(7, 0).unwrap());
        assert_eq!(c.v1, HexPoint::new(7, 7));
        assert_eq!(c.v1.classify(), PointClass::EdgeCenter);

        let c = goldberg_corners(GoldbergSpec::new(5, 3).unwrap());
        assert_eq!(c.v1, HexPoint::new(2, 11));
        assert_eq!(c.v1.classify(), PointClass::EdgeCenter);
        assert_eq!(c.v0p, HexPoint::new(-6, 16));

        let c = goldberg_corners(GoldbergSpec::new(2, 2).unwrap());
        assert_eq!(c.v1, HexPoint::new(0, 6));
        assert_eq!(c.v1.classify(), PointClass::FaceCenter);

        // v1 is the midpoint of v0 and v0'
        for (l, m) in [(1, 0), (1, 1), (2, 1), (5, 3), (4, 2)] {
            let c = goldberg_corners(GoldbergSpec::new(l, m).unwrap());
            assert_eq!(c.v0 + c.v0p, c.v1 + c.v1);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(GoldbergSpec::new(0, 0).is_err());
        assert!(GoldbergSpec::new(1, 2).is_err());
        assert!(GoldbergSpec::new(2, -1).is_err());
        assert!(GoldbergSpec::new(3, 1).unwrap().t() == 13);
        assert!(GoldbergSpec::new(1, 1).unwrap().achiral());
        assert!(GoldbergSpec::new(3, 0).unwrap().achiral());
        assert!(!GoldbergSpec::new(2, 1).unwrap().achiral());
    }

    fn sample_chamber() -> LatticeChamber {
        // hexagon at origin, vertex (1,0), edge toward (0,1)
        LatticeChamber {
            v: HexPoint::whole(1, 0),
            m: HexPoint::new(1, 1),
            c: HexPoint::whole(0, 0),
        }
    }

    #[test]
    fn chamber_involutions() {
        let ch = sample_chamber();
        assert!(ch.is_valid());
        for k in 0..3 {
            let other = ch.s(k);
            assert!(other.is_valid(), "s{k}");
            assert_ne!(other, ch);
            assert_eq!(other.s(k), ch);
            assert_ne!(other.color(), ch.color());
        }
        // s0 and s2 commute
        assert_eq!(ch.s(0).s(2), ch.s(2).s(0));
        // walking around the vertex with s1 s2 returns after deg * 2 steps
        let mut x = ch;
        for _ in 0..3 {
            x = x.s(2).s(1);
        }
        assert_eq!(x, ch);
    }

    #[test]
    fn chamber_validity_is_tight() {
        let ch = sample_chamber();
        let mut bad = ch;
        bad.v = HexPoint::whole(2, 0); // not a vertex of the hexagon at origin
        assert!(!bad.is_valid());
        let mut bad = ch;
        bad.m = HexPoint::new(2, 1);
        assert!(!bad.is_valid());
        let mut bad = ch;
        bad.c = HexPoint::whole(1, 0); // vertex, not a face center
        assert!(!bad.is_valid());
        // opposite vertices of one hexagon do not make a chamber
        let bad = LatticeChamber {
            v: HexPoint::whole(1, 0),
            m: HexPoint::whole(0, 0),
            c: HexPoint::whole(0, 0),
        };
        assert!(!bad.is_valid());
    }

    #[test]
    fn centroid_and_color() {
        let ch = sample_chamber();
        assert_eq!(ch.centroid6(), HexPoint::new(3, 1));
        assert_ne!(ch.color(), ch.s(0).color());
        assert_eq!(ch.color(), ch.translate(HexPoint::whole(3, 0)).color());
        assert_eq!(ch.color(), ch.rot60().color());
    }
}
