//! Catalog of the finite simple Lie algebras and exact arithmetic on their
//! weight lattices.
//!
//! Weights are coordinate vectors in the fundamental-weight (Dynkin) basis.
//! A fixed node labeling per family pins every downstream table:
//!
//! * `A_n`: the chain `1 - 2 - ... - n`.
//! * `B_n`: the chain with the short root at node `n`.
//! * `C_n`: the chain with the long root at node `n`.
//! * `D_n`: the chain `1 - ... - (n-2)` with fork tips `n-1` and `n`
//!   attached to node `n-2`.
//! * `E6/E7/E8`: the chain `1 - ... - (rank-1)` with the last node attached
//!   to node 3.
//! * `G2`: node 1 short, node 2 long.
//!
//! The scalar product normalizes long roots to `(α, α) = 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Shorthand for an integer as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the exact fraction `p/q`.
pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error)]
pub enum RootSysError {
    #[error("inadmissible algebra {family}{rank}")]
    InadmissibleAlgebra { family: Family, rank: usize },
    #[error("cannot parse algebra id `{0}`")]
    ParseAlgebra(String),
    #[error("weight for {algebra} needs {want} coordinates, got {got}")]
    CoordinateCount {
        algebra: AlgebraId,
        want: usize,
        got: usize,
    },
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: AlgebraId, right: AlgebraId },
    #[error("node index {index} out of range 1..={rank}")]
    NodeIndex { index: usize, rank: usize },
}

/// The classical and exceptional families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A validated (family, rank) pair naming a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraId {
    family: Family,
    rank: usize,
}

impl AlgebraId {
    /// Admissible pairs: `A_n (n≥1)`, `B_n (n≥2)`, `C_n (n≥2)`, `D_n (n≥3)`,
    /// `E6`, `E7`, `E8`, `G2`.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraId { family, rank })
        } else {
            Err(RootSysError::InadmissibleAlgebra { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Parses ids of the form `A1`, `D4`, `E6`.
    pub fn parse(s: &str) -> Result<Self, RootSysError> {
        let err = || RootSysError::ParseAlgebra(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(err)? {
            'A' | 'a' => Family::A,
            'B' | 'b' => Family::B,
            'C' | 'c' => Family::C,
            'D' | 'd' => Family::D,
            'E' | 'e' => Family::E,
            'G' | 'g' => Family::G,
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        AlgebraId::new(family, rank)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraId::parse(s)
    }
}

/// An exact-rational coordinate vector in the fundamental-weight basis.
///
/// Equality is coordinate-wise; the derived `Ord` is lexicographic on the
/// coordinates and serves as the canonical total order for set output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    algebra: AlgebraId,
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(algebra: AlgebraId, coords: Vec<BigRational>) -> Result<Self, RootSysError> {
        if coords.len() != algebra.rank() {
            return Err(RootSysError::CoordinateCount {
                algebra,
                want: algebra.rank(),
                got: coords.len(),
            });
        }
        Ok(Weight { algebra, coords })
    }

    pub fn from_ints(algebra: AlgebraId, coords: &[i64]) -> Result<Self, RootSysError> {
        Weight::new(algebra, coords.iter().map(|&k| rat(k)).collect())
    }

    pub fn zero(algebra: AlgebraId) -> Self {
        Weight {
            coords: vec![BigRational::zero(); algebra.rank()],
            algebra,
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Coordinate at the 1-based node `i`.
    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinate-wise sum. Panics on algebra mismatch; callers pair weights
    /// of one fixed algebra.
    pub fn add(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.algebra, rhs.algebra, "weight algebra mismatch");
        Weight {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.algebra, rhs.algebra, "weight algebra mismatch");
        Weight {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Weight {
        Weight {
            algebra: self.algebra,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    algebra: String,
    coords: Vec<String>,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WeightJson {
            algebra: self.algebra.to_string(),
            coords: self.coords.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = WeightJson::deserialize(deserializer)?;
        let algebra = AlgebraId::parse(&raw.algebra).map_err(D::Error::custom)?;
        let coords = raw
            .coords
            .iter()
            .map(|s| {
                BigRational::from_str(s)
                    .map_err(|_| D::Error::custom(format!("bad rational `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Weight::new(algebra, coords).map_err(D::Error::custom)
    }
}

/// Returns the Cartan matrix under the fixed labeling; row `i` gives the
/// simple root `α_i` in the fundamental-weight basis.
pub fn cartan_matrix(id: AlgebraId) -> Vec<Vec<i64>> {
    let n = id.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match id.family() {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut c, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
        }
        Family::C => {
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 1][n - 2] = -2;
        }
        Family::D => {
            // chain 1..n-1 plus node n attached to node n-2
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 3, n - 1);
        }
        Family::E => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, 2, n - 1);
        }
        Family::G => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Half squared lengths `(α_i, α_i)/2` with long roots normalized to 2.
fn root_half_norms(id: AlgebraId) -> Vec<BigRational> {
    let n = id.rank();
    match id.family() {
        Family::A | Family::D | Family::E => vec![BigRational::one(); n],
        Family::B => {
            let mut d = vec![BigRational::one(); n];
            d[n - 1] = frac(1, 2);
            d
        }
        Family::C => {
            let mut d = vec![frac(1, 2); n];
            d[n - 1] = BigRational::one();
            d
        }
        Family::G => vec![frac(1, 3), BigRational::one()],
    }
}

/// Exact inverse by Gauss-Jordan elimination; `None` for singular input.
fn invert(mat: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Cartan matrix, simple roots, quadratic form and Weyl vector of a fixed
/// algebra. Immutable once built; all operations are pure.
#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: AlgebraId,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    gram: Vec<Vec<BigRational>>,
    half_norms: Vec<BigRational>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(algebra: AlgebraId) -> Self {
        let n = algebra.rank();
        let cartan = cartan_matrix(algebra);
        let simple_roots: Vec<Weight> = cartan
            .iter()
            .map(|row| {
                Weight::new(algebra, row.iter().map(|&k| rat(k)).collect()).expect("square cartan")
            })
            .collect();
        let cartan_rat: Vec<Vec<BigRational>> = cartan
            .iter()
            .map(|row| row.iter().map(|&k| rat(k)).collect())
            .collect();
        let cinv = invert(&cartan_rat).expect("Cartan matrices are invertible");
        let half_norms = root_half_norms(algebra);
        // gram[i][j] = (λ_i, λ_j) = (C^{-1})_{ij} · (α_j, α_j)/2
        let gram: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| &cinv[i][j] * &half_norms[j]).collect())
            .collect();
        let rho = Weight::from_ints(algebra, &vec![1; n]).expect("rank-many ones");
        RootSystem {
            algebra,
            cartan,
            simple_roots,
            gram,
            half_norms,
            rho,
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The Weyl vector: all Dynkin coordinates 1.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Simple root `α_i` (1-based) as a weight-lattice vector.
    pub fn simple_root(&self, i: usize) -> Result<&Weight, RootSysError> {
        self.check_node(i)?;
        Ok(&self.simple_roots[i - 1])
    }

    /// `(α_i, α_i)/2` for the 1-based node `i`.
    pub fn half_norm(&self, i: usize) -> Result<&BigRational, RootSysError> {
        self.check_node(i)?;
        Ok(&self.half_norms[i - 1])
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    fn check_node(&self, i: usize) -> Result<(), RootSysError> {
        if i == 0 || i > self.rank() {
            return Err(RootSysError::NodeIndex {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_weight(&self, w: &Weight) -> Result<(), RootSysError> {
        if w.algebra() != self.algebra {
            return Err(RootSysError::AlgebraMismatch {
                left: self.algebra,
                right: w.algebra(),
            });
        }
        Ok(())
    }

    /// The symmetric bilinear form `aᵀ · gram · b` on the weight lattice.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<BigRational, RootSysError> {
        self.check_weight(a)?;
        self.check_weight(b)?;
        let mut acc = BigRational::zero();
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let mut row = BigRational::zero();
            for (j, bj) in b.coords().iter().enumerate() {
                if !bj.is_zero() {
                    row += &self.gram[i][j] * bj;
                }
            }
            acc += ai * row;
        }
        Ok(acc)
    }

    /// Reflection in the simple root `α_i` (1-based): `w - w_i · α_i`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight, RootSysError> {
        self.check_node(i)?;
        self.check_weight(w)?;
        let wi = w.coord(i).clone();
        if wi.is_zero() {
            return Ok(w.clone());
        }
        Ok(w.sub(&self.simple_roots[i - 1].scale(&wi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(rs: &RootSystem, coords: &[i64]) -> Weight {
        Weight::from_ints(rs.algebra(), coords).unwrap()
    }

    #[test]
    fn admissible_pairs() {
        assert!(AlgebraId::new(Family::A, 1).is_ok());
        assert!(AlgebraId::new(Family::A, 0).is_err());
        assert!(AlgebraId::new(Family::B, 1).is_err());
        assert!(AlgebraId::new(Family::D, 2).is_err());
        assert!(AlgebraId::new(Family::D, 3).is_ok());
        assert!(AlgebraId::new(Family::E, 5).is_err());
        assert!(AlgebraId::new(Family::E, 9).is_err());
        assert!(AlgebraId::new(Family::G, 2).is_ok());
        assert!(AlgebraId::new(Family::G, 3).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["A1", "A7", "B2", "C3", "D4", "E6", "E7", "E8", "G2"] {
            let id = AlgebraId::parse(s).unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!(AlgebraId::parse("F4").is_err());
        assert!(AlgebraId::parse("E9").is_err());
        assert!(AlgebraId::parse("").is_err());
    }

    #[test]
    fn cartan_a1_a2() {
        assert_eq!(cartan_matrix(AlgebraId::parse("A1").unwrap()), vec![vec![2]]);
        assert_eq!(
            cartan_matrix(AlgebraId::parse("A2").unwrap()),
            vec![vec![2, -1], vec![-1, 2]]
        );
    }

    #[test]
    fn cartan_e6_adjacency() {
        let c = cartan_matrix(AlgebraId::parse("E6").unwrap());
        let mut edges = vec![];
        for i in 0..6 {
            assert_eq!(c[i][i], 2);
            for j in (i + 1)..6 {
                assert_eq!(c[i][j], c[j][i]);
                if c[i][j] != 0 {
                    assert_eq!(c[i][j], -1);
                    edges.push((i + 1, j + 1));
                }
            }
        }
        assert_eq!(edges, vec![(1, 2), (2, 3), (3, 4), (3, 6), (4, 5)]);
    }

    #[test]
    fn inner_products_a1_e6() {
        let a1 = RootSystem::new(AlgebraId::parse("A1").unwrap());
        let l1 = ints(&a1, &[1]);
        assert_eq!(a1.inner_product(&l1, &l1).unwrap(), frac(1, 2));

        let e6 = RootSystem::new(AlgebraId::parse("E6").unwrap());
        let l1 = ints(&e6, &[1, 0, 0, 0, 0, 0]);
        let l6 = ints(&e6, &[0, 0, 0, 0, 0, 1]);
        assert_eq!(e6.inner_product(&l6, &l6).unwrap(), rat(2));
        assert_eq!(e6.inner_product(&l1, &l6).unwrap(), rat(1));
    }

    #[test]
    fn inner_product_algebra_mismatch() {
        let a2 = RootSystem::new(AlgebraId::parse("A2").unwrap());
        let a3 = RootSystem::new(AlgebraId::parse("A3").unwrap());
        let w = Weight::zero(a3.algebra());
        assert!(matches!(
            a2.inner_product(a2.rho(), &w),
            Err(RootSysError::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = RootSystem::new(AlgebraId::parse("A2").unwrap());
        let w = ints(&a2, &[1, 0]);
        let r = a2.simple_reflection(1, &w).unwrap();
        assert_eq!(r, ints(&a2, &[-1, 1]));
        assert_eq!(a2.simple_reflection(1, &r).unwrap(), w);

        let e6 = RootSystem::new(AlgebraId::parse("E6").unwrap());
        let r = e6.simple_reflection(6, e6.rho()).unwrap();
        assert_eq!(r, ints(&e6, &[1, 1, 2, 1, 1, -1]));
    }

    #[test]
    fn reflection_index_out_of_range() {
        let a2 = RootSystem::new(AlgebraId::parse("A2").unwrap());
        assert!(a2.simple_reflection(0, a2.rho()).is_err());
        assert!(a2.simple_reflection(3, a2.rho()).is_err());
    }

    #[test]
    fn dominance() {
        let e6 = RootSystem::new(AlgebraId::parse("E6").unwrap());
        assert!(e6.rho().is_strictly_dominant());
        let zero = Weight::zero(e6.algebra());
        assert!(zero.is_dominant() && !zero.is_strictly_dominant());
        let w = ints(&e6, &[1, 1, 2, 1, 1, -1]);
        assert!(!w.is_dominant() && !w.is_strictly_dominant());
    }

    #[test]
    fn root_norms_and_ratios() {
        for (name, shorts) in [
            ("A3", vec![]),
            ("B3", vec![(3, frac(1, 2))]),
            ("C3", vec![(1, frac(1, 2)), (2, frac(1, 2))]),
            ("G2", vec![(1, frac(1, 3))]),
            ("D4", vec![]),
            ("E6", vec![]),
        ] {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            for i in 1..=rs.rank() {
                let a = rs.simple_root(i).unwrap().clone();
                let norm = rs.inner_product(&a, &a).unwrap();
                let short = shorts.iter().find(|(j, _)| *j == i);
                match short {
                    Some((_, d)) => assert_eq!(norm, d * rat(2), "{name} node {i}"),
                    None => assert_eq!(norm, rat(2), "{name} node {i}"),
                }
            }
        }
    }

    #[test]
    fn gram_consistent_with_cartan() {
        // gram · cartanᵀ · diag(2/(α_i,α_i)) = identity
        for name in ["A1", "A4", "B2", "B4", "C3", "D4", "E6", "E7", "G2"] {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigRational::zero();
                    for k in 0..n {
                        acc += &rs.gram()[i][k] * rat(rs.cartan()[j][k]);
                    }
                    acc /= rs.half_norm(j + 1).unwrap();
                    let want = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(acc, want, "{name} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for name in ["A2", "B3", "C3", "D4", "E6", "G2"] {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            for i in 1..=rs.rank() {
                let a = rs.simple_root(i).unwrap().clone();
                let num = rs.inner_product(rs.rho(), &a).unwrap();
                assert_eq!(num, rs.half_norm(i).unwrap().clone(), "{name} node {i}");
            }
        }
    }

    #[test]
    fn weight_json_form() {
        let e6 = AlgebraId::parse("E6").unwrap();
        let w = Weight::new(
            e6,
            vec![rat(1), rat(1), rat(1), rat(1), rat(1), frac(-7, 2)],
        )
        .unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(
            json,
            r#"{"algebra":"E6","coords":["1","1","1","1","1","-7/2"]}"#
        );
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn weight_json_rejects_bad_input() {
        assert!(serde_json::from_str::<Weight>(r#"{"algebra":"E6","coords":["1"]}"#).is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"algebra":"F4","coords":[]}"#).is_err());
        assert!(
            serde_json::from_str::<Weight>(r#"{"algebra":"A1","coords":["x"]}"#).is_err()
        );
    }

    #[test]
    fn coordinate_count_enforced() {
        let a2 = AlgebraId::parse("A2").unwrap();
        assert!(matches!(
            Weight::from_ints(a2, &[1]),
            Err(RootSysError::CoordinateCount { .. })
        ));
    }

    fn small_algebra() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "E6"])
    }

    proptest! {
        #[test]
        fn reflections_are_involutive(name in small_algebra(), seed in prop::collection::vec(-3i64..=3, 8)) {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            let w = Weight::from_ints(rs.algebra(), &seed[..rs.rank()]).unwrap();
            for i in 1..=rs.rank() {
                let once = rs.simple_reflection(i, &w).unwrap();
                let twice = rs.simple_reflection(i, &once).unwrap();
                prop_assert_eq!(&twice, &w);
            }
        }

        #[test]
        fn inner_product_reflection_invariant(
            name in small_algebra(),
            a in prop::collection::vec(-3i64..=3, 8),
            b in prop::collection::vec(-3i64..=3, 8),
        ) {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            let wa = Weight::from_ints(rs.algebra(), &a[..rs.rank()]).unwrap();
            let wb = Weight::from_ints(rs.algebra(), &b[..rs.rank()]).unwrap();
            let ip = rs.inner_product(&wa, &wb).unwrap();
            for i in 1..=rs.rank() {
                let ra = rs.simple_reflection(i, &wa).unwrap();
                let rb = rs.simple_reflection(i, &wb).unwrap();
                prop_assert_eq!(rs.inner_product(&ra, &rb).unwrap(), ip.clone());
            }
        }

        #[test]
        fn inner_product_symmetric_bilinear(
            name in small_algebra(),
            a in prop::collection::vec(-3i64..=3, 8),
            b in prop::collection::vec(-3i64..=3, 8),
        ) {
            let rs = RootSystem::new(AlgebraId::parse(name).unwrap());
            let wa = Weight::from_ints(rs.algebra(), &a[..rs.rank()]).unwrap();
            let wb = Weight::from_ints(rs.algebra(), &b[..rs.rank()]).unwrap();
            prop_assert_eq!(
                rs.inner_product(&wa, &wb).unwrap(),
                rs.inner_product(&wb, &wa).unwrap()
            );
            let sum = wa.add(&wb);
            let lhs = rs.inner_product(&sum, &wb).unwrap();
            let rhs = rs.inner_product(&wa, &wb).unwrap() + rs.inner_product(&wb, &wb).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
