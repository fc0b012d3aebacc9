//! Permutation-weight subsets of Weyl orbits.
//!
//! Fix a node `N` whose deletion leaves a type-A chain. The permutation
//! weights of a dominant seed are the orbit elements whose coordinates are
//! nonnegative on every retained node (the deleted-node coefficient may be
//! any integer). They select exactly one representative per orbit of the
//! embedded type-A Weyl group, so a strictly dominant seed has
//! `|W(G_N)| / |W(A_{N-1})|` of them.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::rootsys::{cartan_matrix, AlgebraId, Family, RootSysError, RootSystem, Weight};
use crate::weylorb::{self, OrbitError, WeylOrbit};

#[derive(Debug, Error)]
pub enum PermwError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("deleting node {node} of {algebra} does not leave a type-A chain")]
    UnsupportedNode { algebra: AlgebraId, node: usize },
    #[error("cannot combine: sets differ in algebra or deleted node")]
    CombineMismatch,
}

/// The whitelisted deleted nodes per algebra, in ascending order.
pub fn supported_deleted_nodes(id: AlgebraId) -> Vec<usize> {
    let n = id.rank();
    match id.family() {
        Family::A => {
            if n == 1 {
                vec![1]
            } else {
                vec![1, n]
            }
        }
        Family::B | Family::C => vec![n],
        Family::D => vec![n - 1, n],
        Family::E => vec![n],
        Family::G => vec![2],
    }
}

/// The conventional deleted node: the highest-numbered whitelisted one.
pub fn default_deleted_node(id: AlgebraId) -> usize {
    *supported_deleted_nodes(id).last().expect("never empty")
}

/// Checks the (algebra, node) pair and returns the retained nodes (1-based,
/// ascending). The induced Cartan submatrix must be exactly the type-A
/// matrix of rank `N-1` in that order.
pub fn validate_deleted_node(rs: &RootSystem, node: usize) -> Result<Vec<usize>, PermwError> {
    let id = rs.algebra();
    let unsupported = || PermwError::UnsupportedNode { algebra: id, node };
    if !supported_deleted_nodes(id).contains(&node) {
        return Err(unsupported());
    }
    let retained: Vec<usize> = (1..=rs.rank()).filter(|&i| i != node).collect();
    let m = retained.len();
    if m > 0 {
        let a = cartan_matrix(AlgebraId::new(Family::A, m).expect("rank >= 1"));
        for (bi, &i) in retained.iter().enumerate() {
            for (bj, &j) in retained.iter().enumerate() {
                if rs.cartan()[i - 1][j - 1] != a[bi][bj] {
                    return Err(unsupported());
                }
            }
        }
    }
    Ok(retained)
}

/// A set of permutation weights extracted from one Weyl orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationWeightSet {
    algebra: AlgebraId,
    deleted_node: usize,
    source_seed: Weight,
    members: Vec<Weight>,
}

impl PermutationWeightSet {
    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn deleted_node(&self) -> usize {
        self.deleted_node
    }

    pub fn source_seed(&self) -> &Weight {
        &self.source_seed
    }

    /// Members in the canonical order.
    pub fn members(&self) -> &[Weight] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

fn is_perm_shaped(w: &Weight, deleted_node: usize) -> bool {
    w.coords()
        .iter()
        .enumerate()
        .all(|(i, c)| i + 1 == deleted_node || !c.is_negative())
}

/// Filters an already-computed orbit down to its permutation weights.
pub fn permutation_weights_of_orbit(
    rs: &RootSystem,
    orbit: &WeylOrbit,
    deleted_node: usize,
) -> Result<PermutationWeightSet, PermwError> {
    validate_deleted_node(rs, deleted_node)?;
    let members: Vec<Weight> = orbit
        .iter()
        .filter(|w| is_perm_shaped(w, deleted_node))
        .cloned()
        .collect();
    Ok(PermutationWeightSet {
        algebra: rs.algebra(),
        deleted_node,
        source_seed: orbit.seed().clone(),
        members,
    })
}

/// The permutation weights of a dominant integral seed: orbit elements
/// dominant on every retained node.
pub fn permutation_weights(
    rs: &RootSystem,
    seed: &Weight,
    deleted_node: usize,
) -> Result<PermutationWeightSet, PermwError> {
    validate_deleted_node(rs, deleted_node)?;
    let orbit = weylorb::orbit(rs, seed)?;
    permutation_weights_of_orbit(rs, &orbit, deleted_node)
}

/// Whether `|℘(seed)| = |W(G_N)| / |W(A_{N-1})|` for a strictly dominant
/// seed. `|W(A_{N-1})| = N!`.
pub fn count_identity_check(
    rs: &RootSystem,
    seed: &Weight,
    deleted_node: usize,
) -> Result<bool, PermwError> {
    if !seed.is_strictly_dominant() {
        return Err(OrbitError::NotStrictlyDominant(seed.clone()).into());
    }
    let pw = permutation_weights(rs, seed, deleted_node)?;
    let sub_order: BigUint = (1..=rs.rank() as u64).map(BigUint::from).product();
    let expected = weylorb::weyl_group_order(rs.algebra()) / sub_order;
    Ok(BigUint::from(pw.len()) == expected)
}

/// Builds the permutation weights of `λ + λ'` as pairwise sums of the two
/// input sets, keeping the sums with the norm of the target seed and the
/// permutation shape. Orbit filtering remains the authoritative definition;
/// this is the cheap route that avoids enumerating the large orbit.
pub fn combine(
    rs: &RootSystem,
    pw1: &PermutationWeightSet,
    pw2: &PermutationWeightSet,
) -> Result<PermutationWeightSet, PermwError> {
    if pw1.algebra != pw2.algebra
        || pw1.deleted_node != pw2.deleted_node
        || pw1.algebra != rs.algebra()
    {
        return Err(PermwError::CombineMismatch);
    }
    let deleted_node = pw1.deleted_node;
    let target = pw1.source_seed.add(&pw2.source_seed);
    let norm: BigRational = rs.inner_product(&target, &target)?;
    let mut members: Vec<Weight> = Vec::new();
    for a in &pw1.members {
        for b in &pw2.members {
            let sum = a.add(b);
            if is_perm_shaped(&sum, deleted_node)
                && rs.inner_product(&sum, &sum)? == norm
                && !members.contains(&sum)
            {
                members.push(sum);
            }
        }
    }
    members.sort();
    Ok(PermutationWeightSet {
        algebra: rs.algebra(),
        deleted_node,
        source_seed: target,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn system(name: &str) -> RootSystem {
        RootSystem::new(AlgebraId::parse(name).unwrap())
    }

    fn ints(rs: &RootSystem, coords: &[i64]) -> Weight {
        Weight::from_ints(rs.algebra(), coords).unwrap()
    }

    fn set(rs: &RootSystem, rows: &[&[i64]]) -> Vec<Weight> {
        let mut v: Vec<Weight> = rows.iter().map(|r| ints(rs, r)).collect();
        v.sort();
        v
    }

    #[test]
    fn whitelist() {
        for (name, nodes) in [
            ("A1", vec![1]),
            ("A5", vec![1, 5]),
            ("B3", vec![3]),
            ("C4", vec![4]),
            ("D4", vec![3, 4]),
            ("E6", vec![6]),
            ("E7", vec![7]),
            ("E8", vec![8]),
            ("G2", vec![2]),
        ] {
            let id = AlgebraId::parse(name).unwrap();
            assert_eq!(supported_deleted_nodes(id), nodes, "{name}");
            let rs = RootSystem::new(id);
            for node in supported_deleted_nodes(id) {
                assert!(validate_deleted_node(&rs, node).is_ok(), "{name}/{node}");
            }
        }
    }

    #[test]
    fn rejected_nodes() {
        for (name, node) in [
            ("A3", 2),
            ("B3", 1),
            ("C3", 2),
            ("D4", 1),
            ("E6", 3),
            ("G2", 1),
        ] {
            let rs = system(name);
            assert!(
                matches!(
                    permutation_weights(&rs, rs.rho(), node),
                    Err(PermwError::UnsupportedNode { .. })
                ),
                "{name}/{node}"
            );
        }
    }

    #[test]
    fn e6_fundamental_lambda1() {
        let e6 = system("E6");
        let pw = permutation_weights(&e6, &ints(&e6, &[1, 0, 0, 0, 0, 0]), 6).unwrap();
        let want = set(
            &e6,
            &[
                &[1, 0, 0, 0, 0, 0],
                &[1, 0, 0, 0, 0, -1],
                &[0, 0, 0, 1, 0, -1],
            ],
        );
        assert_eq!(pw.members(), &want[..]);
    }

    #[test]
    fn e6_fundamental_lambda5() {
        let e6 = system("E6");
        let pw = permutation_weights(&e6, &ints(&e6, &[0, 0, 0, 0, 1, 0]), 6).unwrap();
        let want = set(
            &e6,
            &[
                &[0, 0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0, -1],
                &[0, 0, 0, 0, 1, -1],
            ],
        );
        assert_eq!(pw.members(), &want[..]);
    }

    #[test]
    fn a2_weyl_vector() {
        let a2 = system("A2");
        let pw = permutation_weights(&a2, a2.rho(), 2).unwrap();
        assert_eq!(pw.members(), &set(&a2, &[&[1, 1], &[2, -1], &[1, -2]])[..]);
        assert!(count_identity_check(&a2, a2.rho(), 2).unwrap());
    }

    #[test]
    fn g2_weyl_vector_count() {
        let g2 = system("G2");
        let pw = permutation_weights(&g2, g2.rho(), 2).unwrap();
        assert_eq!(pw.len(), 6);
        assert!(count_identity_check(&g2, g2.rho(), 2).unwrap());
    }

    #[test]
    fn count_identity_needs_strict_dominance() {
        let a2 = system("A2");
        assert!(matches!(
            count_identity_check(&a2, &ints(&a2, &[1, 0]), 2),
            Err(PermwError::Orbit(OrbitError::NotStrictlyDominant(_)))
        ));
    }

    #[test]
    fn members_share_the_seed_norm() {
        for (name, seed) in [
            ("A3", vec![1, 2, 1]),
            ("B3", vec![2, 1, 1]),
            ("G2", vec![1, 2]),
        ] {
            let rs = system(name);
            let seed = ints(&rs, &seed);
            let node = default_deleted_node(rs.algebra());
            let pw = permutation_weights(&rs, &seed, node).unwrap();
            let norm = rs.inner_product(&seed, &seed).unwrap();
            assert!(pw.contains(&seed), "{name}: seed itself is a member");
            for w in pw.members() {
                assert_eq!(rs.inner_product(w, w).unwrap(), norm, "{name} at {w}");
            }
        }
    }

    #[test]
    fn zeroing_deleted_coord_gives_chain_dominant_weight() {
        let b3 = system("B3");
        let pw = permutation_weights(&b3, b3.rho(), 3).unwrap();
        for w in pw.members() {
            let mut coords = w.coords().to_vec();
            coords[2] = num_traits::Zero::zero();
            let flat = Weight::new(b3.algebra(), coords).unwrap();
            assert!(flat.is_dominant());
        }
    }

    #[test]
    fn combine_with_zero_is_identity() {
        let a3 = system("A3");
        let pw = permutation_weights(&a3, &ints(&a3, &[1, 0, 1]), 3).unwrap();
        let zero = permutation_weights(&a3, &Weight::zero(a3.algebra()), 3).unwrap();
        assert_eq!(zero.len(), 1);
        let combined = combine(&a3, &pw, &zero).unwrap();
        assert_eq!(combined.members(), pw.members());
    }

    #[test]
    fn combine_a2_fundamentals() {
        let a2 = system("A2");
        let p1 = permutation_weights(&a2, &ints(&a2, &[1, 0]), 2).unwrap();
        let p2 = permutation_weights(&a2, &ints(&a2, &[0, 1]), 2).unwrap();
        let rho = combine(&a2, &p1, &p2).unwrap();
        let direct = permutation_weights(&a2, a2.rho(), 2).unwrap();
        assert_eq!(rho, direct);
        assert_eq!(rho.len(), 3);
    }

    #[test]
    fn combine_rejects_mismatched_sets() {
        let d4 = system("D4");
        let p3 = permutation_weights(&d4, &ints(&d4, &[1, 0, 0, 0]), 3).unwrap();
        let p4 = permutation_weights(&d4, &ints(&d4, &[1, 0, 0, 0]), 4).unwrap();
        assert!(matches!(
            combine(&d4, &p3, &p4),
            Err(PermwError::CombineMismatch)
        ));
    }

    /// Exhaustive cross-check of the pairwise-sum route against orbit
    /// filtering: every algebra of rank at most 4, every whitelisted node,
    /// every pair of dominant seeds with coordinates at most 2.
    #[test]
    fn combine_matches_orbit_filtering_exhaustively() {
        let names = [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2",
        ];
        for name in names {
            let rs = system(name);
            let n = rs.rank();
            let seeds: Vec<Vec<i64>> = (0..3i64.pow(n as u32))
                .map(|mut t| {
                    (0..n)
                        .map(|_| {
                            let c = t % 3;
                            t /= 3;
                            c
                        })
                        .collect()
                })
                .collect();
            for node in supported_deleted_nodes(rs.algebra()) {
                let sets: Vec<PermutationWeightSet> = seeds
                    .iter()
                    .map(|s| permutation_weights(&rs, &ints(&rs, s), node).unwrap())
                    .collect();
                let mut oracle: HashMap<Weight, PermutationWeightSet> = HashMap::new();
                for (i, a) in sets.iter().enumerate() {
                    for b in &sets[i..] {
                        let sum = a.source_seed().add(b.source_seed());
                        let want = oracle
                            .entry(sum.clone())
                            .or_insert_with(|| permutation_weights(&rs, &sum, node).unwrap());
                        let got = combine(&rs, a, b).unwrap();
                        assert_eq!(
                            &got,
                            want,
                            "{name}/{node}: {} + {}",
                            a.source_seed(),
                            b.source_seed()
                        );
                    }
                }
            }
        }
    }
}
