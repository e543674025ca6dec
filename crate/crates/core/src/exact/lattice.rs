use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::hnf::{hermite_normal_form, hnf_index};
use super::mat::Mat3;
use super::rat::{fract, frac, rat, Rat};
use super::vec::Vec3;

/// Errors from lattice algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The proposed basis has determinant zero.
    SingularBasis,
    /// An index or coset computation was asked for a pair that is not in a
    /// sublattice relation.
    NotASublattice,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::SingularBasis => write!(f, "lattice basis is singular"),
            LatticeError::NotASublattice => write!(f, "not a sublattice of the given lattice"),
        }
    }
}

impl core::error::Error for LatticeError {}

/// A rank-3 translation lattice, given by a basis whose columns are the
/// generating translations in ambient coordinates.
///
/// Membership, index, and coset enumeration are all basis independent: two
/// `Lattice` values with different bases spanning the same group compare
/// equal.
#[derive(Clone)]
pub struct Lattice {
    basis: Mat3,
    inv: Mat3,
}

impl Lattice {
    pub fn new(basis: Mat3) -> Result<Self, LatticeError> {
        let inv = basis.inverse().ok_or(LatticeError::SingularBasis)?;
        Ok(Lattice { basis, inv })
    }

    pub fn from_int_cols(cols: [[i64; 3]; 3]) -> Self {
        Lattice::new(Mat3::from_int_cols(cols)).expect("integer basis must be nonsingular")
    }

    /// The integer lattice in the declared ambient coordinates.
    pub fn standard() -> Self {
        Lattice::from_int_cols([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Scaled simple cubic lattice `<n e_x, n e_y, n e_z>`, covolume `n^3`.
    pub fn cubic(n: i64) -> Self {
        assert!(n > 0);
        Lattice::from_int_cols([[n, 0, 0], [0, n, 0], [0, 0, n]])
    }

    /// Face-centered lattice `<n(e_y+e_z), n(e_z+e_x), n(e_x+e_y)>`,
    /// covolume `2 n^3`.
    pub fn fcc(n: i64) -> Self {
        assert!(n > 0);
        Lattice::from_int_cols([[0, n, n], [n, 0, n], [n, n, 0]])
    }

    /// Body-centered lattice `<n(-e_x+e_y+e_z), n(e_x-e_y+e_z), n(e_x+e_y-e_z)>`,
    /// covolume `4 n^3`.
    pub fn bcc(n: i64) -> Self {
        assert!(n > 0);
        Lattice::from_int_cols([[-n, n, n], [n, -n, n], [n, n, -n]])
    }

    /// Primitive hexagonal sublattice `<n t_x, n t_omega, t_z>` in hexagonal
    /// fractional coordinates, covolume `n^2` cells.
    pub fn hex_p(n: i64) -> Self {
        assert!(n > 0);
        Lattice::from_int_cols([[n, 0, 0], [0, n, 0], [0, 0, 1]])
    }

    /// Hexagonal superstructure `<n t_x + 2n t_omega, 2n t_x + n t_omega, t_z>`,
    /// covolume `3 n^2` cells.
    pub fn hex_h(n: i64) -> Self {
        assert!(n > 0);
        Lattice::from_int_cols([[n, 2 * n, 0], [2 * n, n, 0], [0, 0, 1]])
    }

    /// The lattice scaled by a nonzero rational factor.
    pub fn scaled(&self, factor: &Rat) -> Self {
        assert!(!factor.is_zero());
        let cols = [
            self.basis.col(0).scale(factor),
            self.basis.col(1).scale(factor),
            self.basis.col(2).scale(factor),
        ];
        Lattice::new(Mat3::from_cols(cols)).expect("scaling preserves nonsingularity")
    }

    /// Half-integer lattice `(1/2) bcc(n)`, i.e. `<T_1, t_half>` for `n = 1`.
    pub fn half_bcc(n: i64) -> Self {
        Lattice::bcc(n).scaled(&frac(1, 2))
    }

    pub fn basis(&self) -> &Mat3 {
        &self.basis
    }

    /// Coordinates of `v` in this lattice's basis.
    pub fn fractional(&self, v: &Vec3) -> Vec3 {
        self.inv.mul_vec(v)
    }

    /// Point with the given fractional coordinates.
    pub fn from_fractional(&self, f: &Vec3) -> Vec3 {
        self.basis.mul_vec(f)
    }

    /// Lattice membership: true iff `basis^-1 v` is integral.
    pub fn contains(&self, v: &Vec3) -> bool {
        self.fractional(v).is_integer()
    }

    /// True iff every basis vector of `self` lies in `sup`.
    pub fn is_sublattice_of(&self, sup: &Lattice) -> bool {
        (0..3).all(|j| sup.contains(&self.basis.col(j)))
    }

    /// The relative index `[sup : self]`, i.e. `|det(B_sup^-1 B_self)|`.
    pub fn index_in(&self, sup: &Lattice) -> Result<u64, LatticeError> {
        if !self.is_sublattice_of(sup) {
            return Err(LatticeError::NotASublattice);
        }
        let rel = &sup.inv * &self.basis;
        let idx = rel.det().abs();
        debug_assert!(idx.denom() == &BigInt::from(1));
        Ok(idx
            .to_integer()
            .to_u64()
            .expect("lattice index exceeds u64"))
    }

    /// Canonical representative of `v` modulo this lattice: the congruent
    /// point whose fractional coordinates all lie in `[0, 1)`. Idempotent.
    pub fn reduce(&self, v: &Vec3) -> Vec3 {
        let f = self.fractional(v);
        let wrapped = Vec3::new(fract(&f.x), fract(&f.y), fract(&f.z));
        self.from_fractional(&wrapped)
    }

    /// A deterministic transversal of `sup / self`: exactly `index_in(sup)`
    /// points, pairwise non-congruent mod `self`, each reduced into the
    /// half-open fundamental cell of `self`, sorted lexicographically.
    pub fn coset_representatives_in(&self, sup: &Lattice) -> Result<Vec<Vec3>, LatticeError> {
        if !self.is_sublattice_of(sup) {
            return Err(LatticeError::NotASublattice);
        }
        let rel = &sup.inv * &self.basis;
        let cols: [[BigInt; 3]; 3] = core::array::from_fn(|j| {
            core::array::from_fn(|i| {
                debug_assert!(rel.entry(i, j).denom() == &BigInt::from(1));
                rel.entry(i, j).to_integer()
            })
        });
        let h = hermite_normal_form(&cols);
        let idx = hnf_index(&h).expect("nonsingular relation matrix has full rank");
        let bounds: [u64; 3] = [
            h[0][0].to_u64().expect("index exceeds u64"),
            h[1][1].to_u64().expect("index exceeds u64"),
            h[2][2].to_u64().expect("index exceeds u64"),
        ];
        let mut reps = Vec::with_capacity(bounds.iter().product::<u64>() as usize);
        for x in 0..bounds[0] {
            for y in 0..bounds[1] {
                for z in 0..bounds[2] {
                    let coords = Vec3::ints(x as i64, y as i64, z as i64);
                    reps.push(self.reduce(&sup.from_fractional(&coords)));
                }
            }
        }
        reps.sort();
        reps.dedup();
        assert_eq!(
            reps.len() as u64,
            idx.to_u64().expect("index exceeds u64"),
            "coset transversal must have exactly index-many points"
        );
        Ok(reps)
    }
}

/// Lattice equality is mutual containment, independent of basis choice.
impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.is_sublattice_of(other) && other.is_sublattice_of(self)
    }
}

impl Eq for Lattice {}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}, {}>",
            self.basis.col(0),
            self.basis.col(1),
            self.basis.col(2)
        )
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::frac;

    #[test]
    fn membership_fcc() {
        let t2 = Lattice::fcc(1);
        assert!(t2.contains(&Vec3::ints(1, 1, 0)));
        assert!(t2.contains(&Vec3::zero()));
        assert!(!t2.contains(&Vec3::ints(1, 0, 0)));
    }

    #[test]
    fn membership_is_basis_independent() {
        // <T_1, t_half> written two ways.
        let a = Lattice::half_bcc(1);
        let b = Lattice::new(Mat3::from_cols([
            Vec3::diagonal(1, 2),
            Vec3::ints(0, 1, 0),
            Vec3::ints(0, 0, 1),
        ]))
        .unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&Vec3::diagonal(1, 2)));
        assert!(a.contains(&Vec3::ints(1, 0, 0)));
        assert!(!a.contains(&Vec3::new(frac(1, 2), frac(1, 2), rat(0))));
    }

    #[test]
    fn subgroup_chains() {
        // T_{32 n^3} in T_{8 n^3} in T_{2 n^3} and
        // T_{16 n^3} in T_{8 n^3} in T_{4 n^3}, for n = 1, 2.
        for n in [1i64, 2] {
            let t_2n3 = Lattice::fcc(n);
            let t_4n3 = Lattice::bcc(n);
            let t_8n3 = Lattice::cubic(2 * n);
            let t_16n3 = Lattice::fcc(2 * n);
            let t_32n3 = Lattice::bcc(2 * n);
            assert!(t_32n3.is_sublattice_of(&t_8n3));
            assert!(t_8n3.is_sublattice_of(&t_2n3));
            assert!(t_16n3.is_sublattice_of(&t_8n3));
            assert!(t_8n3.is_sublattice_of(&t_4n3));
            assert!(!t_4n3.is_sublattice_of(&t_8n3));
        }
        assert!(!Lattice::fcc(1).is_sublattice_of(&Lattice::bcc(1)));
    }

    #[test]
    fn volume_labels_match_construction() {
        // Subscript m of T_m equals the covolume: [T_1 : T_m] = m.
        let t1 = Lattice::standard();
        for n in [1u64, 2, 3] {
            let ni = n as i64;
            assert_eq!(Lattice::cubic(ni).index_in(&t1).unwrap(), n * n * n);
            assert_eq!(Lattice::fcc(ni).index_in(&t1).unwrap(), 2 * n * n * n);
            assert_eq!(Lattice::bcc(ni).index_in(&t1).unwrap(), 4 * n * n * n);
            // T_{(2n)^3} = T_{8 n^3} sits inside T_{2 n^3}.
            assert!(Lattice::cubic(2 * ni).is_sublattice_of(&Lattice::fcc(ni)));
        }
    }

    #[test]
    fn relative_index() {
        let t1 = Lattice::standard();
        assert_eq!(Lattice::fcc(1).index_in(&t1).unwrap(), 2);
        assert_eq!(t1.index_in(&t1).unwrap(), 1);
        assert_eq!(t1.index_in(&Lattice::half_bcc(1)).unwrap(), 2);
        assert_eq!(
            Lattice::fcc(1).index_in(&Lattice::bcc(1)),
            Err(LatticeError::NotASublattice)
        );
    }

    #[test]
    fn index_multiplicative_along_chains() {
        for n in [1i64, 2] {
            let top = Lattice::standard();
            let mid = Lattice::fcc(n);
            let bot = Lattice::cubic(2 * n);
            let direct = bot.index_in(&top).unwrap();
            let stepped = bot.index_in(&mid).unwrap() * mid.index_in(&top).unwrap();
            assert_eq!(direct, stepped);
        }
    }

    #[test]
    fn reduce_examples() {
        let t1 = Lattice::standard();
        let v = Vec3::new(frac(3, 2), frac(-1, 4), rat(2));
        let r = t1.reduce(&v);
        assert_eq!(r, Vec3::new(frac(1, 2), frac(3, 4), rat(0)));
        assert_eq!(t1.reduce(&r), r);
        assert!(t1.contains(&(&v - &r)));
        assert_eq!(t1.reduce(&Vec3::ints(5, -7, 0)), Vec3::zero());
    }

    #[test]
    fn coset_representatives_counts() {
        let t1 = Lattice::standard();
        assert_eq!(t1.coset_representatives_in(&t1).unwrap().len(), 1);

        let reps = Lattice::fcc(1).coset_representatives_in(&t1).unwrap();
        assert_eq!(reps.len(), 2);

        let reps8 = Lattice::cubic(2).coset_representatives_in(&t1).unwrap();
        assert_eq!(reps8.len(), 8);
        // {0,1}^3 exactly.
        for v in &reps8 {
            for c in v.components() {
                assert!(c == &rat(0) || c == &rat(1));
            }
        }
    }

    #[test]
    fn transversal_is_pairwise_noncongruent() {
        let sub = Lattice::bcc(1);
        let sup = Lattice::standard();
        let reps = sub.coset_representatives_in(&sup).unwrap();
        assert_eq!(reps.len(), 4);
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                assert!(!sub.contains(&(a - b)));
            }
        }
    }
}
