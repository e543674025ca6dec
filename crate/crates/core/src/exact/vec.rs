use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::rat::{frac, is_integer, rat, Rat};

/// A point or translation of Euclidean 3-space, in the fractional coordinates
/// of whatever ambient basis the caller has declared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(rat(0), rat(0), rat(0))
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(rat(x), rat(y), rat(z))
    }

    /// Vector with all three components equal to `n/d`.
    pub fn diagonal(n: i64, d: i64) -> Self {
        Vec3::new(frac(n, d), frac(n, d), frac(n, d))
    }

    pub fn from_shift(s: [i64; 3]) -> Self {
        Vec3::ints(s[0], s[1], s[2])
    }

    pub fn component(&self, i: usize) -> &Rat {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("component index out of range"),
        }
    }

    pub fn components(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        is_integer(&self.x) && is_integer(&self.y) && is_integer(&self.z)
    }

    /// Integer components, when all three are integers fitting in `i64`.
    pub fn as_integer_triple(&self) -> Option<[i64; 3]> {
        use num_traits::ToPrimitive;
        if !self.is_integer() {
            return None;
        }
        Some([
            self.x.to_integer().to_i64()?,
            self.y.to_integer().to_i64()?,
            self.z.to_integer().to_i64()?,
        ])
    }

    pub fn scale(&self, s: &Rat) -> Vec3 {
        Vec3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    /// Cross product; only used for exact collinearity tests.
    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn dot(&self, other: &Vec3) -> Rat {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    /// True when `other` points in exactly the opposite direction.
    pub fn is_opposite_collinear(&self, other: &Vec3) -> bool {
        use super::rat::signum;
        !self.is_zero()
            && !other.is_zero()
            && self.cross(other).is_zero()
            && signum(&self.dot(other)) < 0
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_collinear() {
        let d1 = Vec3::new(frac(1, 4), rat(0), frac(-1, 4));
        let d2 = Vec3::new(frac(-1, 2), rat(0), frac(1, 2));
        assert!(d1.is_opposite_collinear(&d2));
        assert!(!d1.is_opposite_collinear(&d1));
        let skew = Vec3::new(frac(1, 4), frac(1, 4), rat(0));
        assert!(!d1.is_opposite_collinear(&skew));
    }

    #[test]
    fn integer_triple() {
        assert_eq!(Vec3::ints(1, -2, 0).as_integer_triple(), Some([1, -2, 0]));
        assert_eq!(Vec3::diagonal(1, 2).as_integer_triple(), None);
    }
}
