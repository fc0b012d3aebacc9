//! The type-A subalgebra obtained by deleting one node, its fundamental
//! `μ`-basis, and the orbit machinery built on top of it.
//!
//! Deleting node `N` leaves an `A_{N-1}` chain with fundamental weights
//! `σ_i = λ_i - n_i λ_N`, where `n_i = (λ_i, λ_N)/(λ_N, λ_N)` makes each
//! `σ_i` orthogonal to `Ω ≡ λ_N`. The `μ`-basis
//!
//! ```text
//! μ_1 = σ_1,   μ_i = σ_i - σ_{i-1},   μ_N = -σ_{N-1}
//! ```
//!
//! satisfies `μ_1 + ... + μ_N = 0` and `(μ_I, Ω) = 0`, and every weight
//! decomposes uniquely as `Σ s_I μ_I + r Ω` with `s_N = 0`. Orbits of the
//! embedded Weyl group are exactly the distinct permutations of the
//! `μ`-coefficient vector, which turns orbit branching into bookkeeping
//! over partitions and `Ω`-shifts.

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::permw::{self, PermwError};
use crate::rootsys::{AlgebraId, RootSysError, RootSystem, Weight};
use crate::weylorb::{self, OrbitError, WeylOrbit};

#[derive(Debug, Error)]
pub enum SubalgError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Permw(#[from] PermwError),
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<BigRational>),
    #[error("permutation weight {0} projects to a non-strictly-dominant chain part")]
    NotStrictlyDominantPart(Weight),
    #[error("permutation weight {0} sits at shift r = 0 and cannot be paired")]
    ZeroShift(Weight),
    #[error("chain part of {0} has no partner of opposite shift")]
    Unpaired(Weight),
    #[error("orbit branching failed to reconstruct the orbit: {0}")]
    BranchingMismatch(String),
    #[error("correspondence failed at {rho_elem}: {matches} candidates match (expected 1)")]
    CorrespondenceMatch { rho_elem: Weight, matches: usize },
    #[error("correspondence images do not exhaust the target permutation-weight set")]
    CorrespondenceNotBijective,
}

/// A dominant weight of the embedded chain algebra, stored as its weakly
/// decreasing `μ`-coefficients normalized to end at 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AWeight {
    parts: Vec<BigRational>,
}

impl AWeight {
    /// Accepts a weakly decreasing coefficient vector; the `Σ μ_I = 0`
    /// freedom is used to shift the last part to 0.
    pub fn new(mut parts: Vec<BigRational>) -> Result<Self, SubalgError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SubalgError::NotWeaklyDecreasing(parts));
        }
        if let Some(last) = parts.last().cloned() {
            if !last.is_zero() {
                for p in &mut parts {
                    *p -= &last;
                }
            }
        }
        Ok(AWeight { parts })
    }

    pub fn parts(&self) -> &[BigRational] {
        &self.parts
    }

    /// Strict dominance in the chain lattice: strictly decreasing parts.
    pub fn is_strictly_dominant(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Number of distinct permutations of the parts vector.
    pub fn orbit_size(&self) -> u128 {
        let n = self.parts.len() as u128;
        let mut size: u128 = (1..=n).product();
        let mut run = 1u128;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                run = 1;
            }
            if run > 1 {
                size /= run;
            }
        }
        size
    }
}

/// All distinct permutations of `parts`, in ascending lexicographic order.
pub fn distinct_permutations(parts: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut v = parts.to_vec();
    v.sort();
    let n = v.len();
    let mut out = vec![v.clone()];
    if n < 2 {
        return out;
    }
    loop {
        let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// The Weyl orbit of a chain-dominant weight, by the permutation rule.
pub fn a_orbit(aw: &AWeight) -> Vec<Vec<BigRational>> {
    let out = distinct_permutations(aw.parts());
    debug_assert_eq!(out.len() as u128, aw.orbit_size());
    out
}

/// The deleted-node embedding data for one whitelisted (algebra, node)
/// pair.
#[derive(Debug, Clone)]
pub struct Embedding {
    rs: RootSystem,
    deleted_node: usize,
    retained: Vec<usize>,
    n_coeffs: Vec<BigRational>,
    mu: Vec<Weight>,
    omega: Weight,
}

/// Builds the embedding for a whitelisted pair: the orthogonality
/// coefficients `n_i`, the `σ_i`, and the `μ`-basis.
pub fn build_embedding(rs: &RootSystem, deleted_node: usize) -> Result<Embedding, SubalgError> {
    let retained = permw::validate_deleted_node(rs, deleted_node)?;
    let rank = rs.rank();
    let mut omega_coords = vec![BigRational::zero(); rank];
    omega_coords[deleted_node - 1] = BigRational::from_integer(1.into());
    let omega = Weight::new(rs.algebra(), omega_coords)?;
    let omega_norm = &rs.gram()[deleted_node - 1][deleted_node - 1];

    let n_coeffs: Vec<BigRational> = retained
        .iter()
        .map(|&i| &rs.gram()[i - 1][deleted_node - 1] / omega_norm)
        .collect();

    let sigma: Vec<Weight> = retained
        .iter()
        .zip(&n_coeffs)
        .map(|(&i, n_i)| {
            let mut coords = vec![BigRational::zero(); rank];
            coords[i - 1] = BigRational::from_integer(1.into());
            coords[deleted_node - 1] = -n_i;
            Weight::new(rs.algebra(), coords).expect("rank-sized")
        })
        .collect();

    let mut mu: Vec<Weight> = Vec::with_capacity(rank);
    match sigma.len() {
        0 => mu.push(Weight::zero(rs.algebra())),
        m => {
            mu.push(sigma[0].clone());
            for i in 1..m {
                mu.push(sigma[i].sub(&sigma[i - 1]));
            }
            mu.push(Weight::zero(rs.algebra()).sub(&sigma[m - 1]));
        }
    }

    Ok(Embedding {
        rs: rs.clone(),
        deleted_node,
        retained,
        n_coeffs,
        mu,
        omega,
    })
}

impl Embedding {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn algebra(&self) -> AlgebraId {
        self.rs.algebra()
    }

    pub fn deleted_node(&self) -> usize {
        self.deleted_node
    }

    /// Retained nodes, 1-based and ascending; they form the chain.
    pub fn retained(&self) -> &[usize] {
        &self.retained
    }

    /// Orthogonality coefficients `n_i`, one per retained node.
    pub fn n_coeffs(&self) -> &[BigRational] {
        &self.n_coeffs
    }

    /// The `μ`-basis: `rank`-many vectors summing to zero.
    pub fn mu(&self) -> &[Weight] {
        &self.mu
    }

    /// `Ω`, the fundamental weight of the deleted node.
    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    /// Rank of the embedded chain (`N-1`); also the number of power-sum
    /// indeterminates for its Schur polynomials.
    pub fn chain_rank(&self) -> usize {
        self.retained.len()
    }

    /// Decomposes `w = Σ_I s_I μ_I + r Ω` with `s_N = 0`: the raw
    /// `μ`-coefficients are the partial sums `s_I = Σ_{i≥I} k_i` of the
    /// retained coordinates, and `r = k_N + Σ n_i k_i`.
    pub fn project(&self, w: &Weight) -> (Vec<BigRational>, BigRational) {
        let k: Vec<&BigRational> = self.retained.iter().map(|&i| w.coord(i)).collect();
        let mut r = w.coord(self.deleted_node).clone();
        for (n_i, k_i) in self.n_coeffs.iter().zip(&k) {
            r += n_i * *k_i;
        }
        let n = self.mu.len();
        let mut parts = vec![BigRational::zero(); n];
        let mut acc = BigRational::zero();
        for idx in (0..n - 1).rev() {
            acc += k[idx];
            parts[idx] = acc.clone();
        }
        (parts, r)
    }

    /// Expands `Σ_I s_I μ_I + r Ω` back into a weight; inverse of
    /// [`Embedding::project`] on normalized coefficients.
    pub fn weight_from_parts(&self, parts: &[BigRational], r: &BigRational) -> Weight {
        let mut w = self.omega.scale(r);
        for (s, mu) in parts.iter().zip(&self.mu) {
            if !s.is_zero() {
                w = w.add(&mu.scale(s));
            }
        }
        w
    }

    /// Partitions an orbit into chain orbits at fixed `Ω`-shifts, one per
    /// permutation weight; verifies that the expansion reproduces the orbit
    /// exactly.
    pub fn orbit_branching(
        &self,
        orbit: &WeylOrbit,
    ) -> Result<Vec<(AWeight, BigRational)>, SubalgError> {
        let pw = permw::permutation_weights_of_orbit(&self.rs, orbit, self.deleted_node)?;
        let mut out: Vec<(AWeight, BigRational)> = Vec::with_capacity(pw.len());
        let mut reconstructed: HashSet<Weight> = HashSet::new();
        for member in pw.members() {
            let (parts, r) = self.project(member);
            let aw = AWeight::new(parts)?;
            for perm in a_orbit(&aw) {
                let w = self.weight_from_parts(&perm, &r);
                if !reconstructed.insert(w.clone()) {
                    return Err(SubalgError::BranchingMismatch(format!(
                        "duplicate element {w}"
                    )));
                }
            }
            out.push((aw, r));
        }
        if reconstructed.len() != orbit.len()
            || orbit.iter().any(|w| !reconstructed.contains(w))
        {
            return Err(SubalgError::BranchingMismatch(format!(
                "expanded {} elements, orbit has {}",
                reconstructed.len(),
                orbit.len()
            )));
        }
        out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| b.0.cmp(&a.0)));
        Ok(out)
    }
}

/// One `±r` pair of the Weyl-vector permutation weights: `plus` is
/// `σ⁺⁺ + rΩ`, `minus` is `σ⁺⁺ - rΩ`, with `r > 0`.
#[derive(Debug, Clone)]
pub struct RhoPair {
    pub sigma_pp: AWeight,
    pub r: BigRational,
    pub plus: Weight,
    pub minus: Weight,
}

/// The paired decomposition of the Weyl-vector permutation weights,
/// ordered by descending shift.
#[derive(Debug, Clone)]
pub struct RhoDecomposition {
    pairs: Vec<RhoPair>,
}

impl RhoDecomposition {
    pub fn pairs(&self) -> &[RhoPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Projects the Weyl-vector permutation weights and groups them into
/// `(σ⁺⁺ + rΩ, σ⁺⁺ - rΩ)` pairs.
///
/// Every chain part must be strictly dominant, every shift nonzero, and
/// every part matched by its opposite-shift partner; any violation is an
/// error rather than a silent repair, because downstream signature
/// bookkeeping depends on the pairing. Chains of type A with even rank
/// (for example A2) genuinely fail here: their permutation-weight count
/// `N+1` is odd.
pub fn rho_decomposition(emb: &Embedding) -> Result<RhoDecomposition, SubalgError> {
    let rs = emb.root_system();
    let pw = permw::permutation_weights(rs, rs.rho(), emb.deleted_node())?;
    let mut groups: BTreeMap<AWeight, Vec<(BigRational, Weight)>> = BTreeMap::new();
    for member in pw.members() {
        let (parts, r) = emb.project(member);
        let aw = AWeight::new(parts)?;
        if !aw.is_strictly_dominant() {
            return Err(SubalgError::NotStrictlyDominantPart(member.clone()));
        }
        if r.is_zero() {
            return Err(SubalgError::ZeroShift(member.clone()));
        }
        groups.entry(aw).or_default().push((r, member.clone()));
    }
    let mut pairs: Vec<RhoPair> = Vec::with_capacity(groups.len());
    for (sigma_pp, mut elems) in groups {
        elems.sort_by(|a, b| b.0.cmp(&a.0));
        if elems.len() != 2 || elems[0].0 != -elems[1].0.clone() {
            return Err(SubalgError::Unpaired(elems[0].1.clone()));
        }
        let (r, plus) = elems.swap_remove(0);
        let (_, minus) = elems.swap_remove(0);
        pairs.push(RhoPair {
            sigma_pp,
            r,
            plus,
            minus,
        });
    }
    pairs.sort_by(|a, b| {
        b.r.cmp(&a.r)
            .then_with(|| a.plus.coords().cmp(b.plus.coords()))
    });
    Ok(RhoDecomposition { pairs })
}

/// One entry of the signature-preserving correspondence: the `k`-th
/// element of `℘(ρ)` plus the unique `μ ∈ ℘(Λ⁺)` lands in `℘(Λ⁺⁺)`.
#[derive(Debug, Clone)]
pub struct XiEntry {
    /// 1-based position of `rho_elem` in the canonical order of `℘(ρ)`.
    pub k: usize,
    pub rho_elem: Weight,
    /// Reflection parity of `rho_elem`, inherited by `image`.
    pub sign: i8,
    pub mu: Weight,
    pub image: Weight,
}

/// For each element of `℘(ρ)` finds the unique `μ ∈ ℘(Λ⁺)` such that the
/// sum lies in `℘(Λ⁺ + ρ)`; existence, uniqueness and exhaustion are
/// asserted, not assumed.
pub fn xi_correspondence(
    emb: &Embedding,
    lambda_plus: &Weight,
) -> Result<Vec<XiEntry>, SubalgError> {
    let rs = emb.root_system();
    let node = emb.deleted_node();
    let p_rho = permw::permutation_weights(rs, rs.rho(), node)?;
    let p_lambda = permw::permutation_weights(rs, lambda_plus, node)?;
    let target_seed = lambda_plus.add(rs.rho());
    let p_target = permw::permutation_weights(rs, &target_seed, node)?;

    let mut entries: Vec<XiEntry> = Vec::with_capacity(p_rho.len());
    let mut images: HashSet<Weight> = HashSet::new();
    for (idx, rho_elem) in p_rho.members().iter().enumerate() {
        let mut found: Vec<&Weight> = Vec::new();
        for mu in p_lambda.members() {
            if p_target.contains(&rho_elem.add(mu)) {
                found.push(mu);
            }
        }
        if found.len() != 1 {
            return Err(SubalgError::CorrespondenceMatch {
                rho_elem: rho_elem.clone(),
                matches: found.len(),
            });
        }
        let mu = found[0].clone();
        let image = rho_elem.add(&mu);
        let (_, sign) = weylorb::dominant_representative(rs, rho_elem);
        images.insert(image.clone());
        entries.push(XiEntry {
            k: idx + 1,
            rho_elem: rho_elem.clone(),
            sign,
            mu,
            image,
        });
    }
    if images.len() != p_target.len() {
        return Err(SubalgError::CorrespondenceNotBijective);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{frac, rat};
    use crate::weylorb::dominant_representative;

    fn system(name: &str) -> RootSystem {
        RootSystem::new(AlgebraId::parse(name).unwrap())
    }

    fn ints(rs: &RootSystem, coords: &[i64]) -> Weight {
        Weight::from_ints(rs.algebra(), coords).unwrap()
    }

    fn embedding(name: &str, node: usize) -> Embedding {
        let rs = system(name);
        build_embedding(&rs, node).unwrap()
    }

    #[test]
    fn e6_embedding_coefficients() {
        let emb = embedding("E6", 6);
        let want = vec![frac(1, 2), rat(1), frac(3, 2), rat(1), frac(1, 2)];
        assert_eq!(emb.n_coeffs(), &want[..]);
    }

    #[test]
    fn a2_embedding_coefficient() {
        let emb = embedding("A2", 2);
        assert_eq!(emb.n_coeffs(), &[frac(1, 2)][..]);
    }

    #[test]
    fn embedding_invariants_hold_for_all_whitelisted_pairs() {
        for name in ["A1", "A2", "A3", "A5", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "E6", "E7"] {
            let rs = system(name);
            for node in permw::supported_deleted_nodes(rs.algebra()) {
                let emb = build_embedding(&rs, node).unwrap();
                // μ's sum to zero
                let total = emb
                    .mu()
                    .iter()
                    .fold(Weight::zero(rs.algebra()), |acc, m| acc.add(m));
                assert!(total.is_zero(), "{name}/{node}: Σμ ≠ 0");
                // each μ orthogonal to Ω
                for m in emb.mu() {
                    assert!(
                        rs.inner_product(m, emb.omega()).unwrap().is_zero(),
                        "{name}/{node}: (μ, Ω) ≠ 0"
                    );
                }
                // partial sums rebuild σ_i, and (σ_i, Ω) = 0
                let mut acc = Weight::zero(rs.algebra());
                for (pos, &i) in emb.retained().iter().enumerate() {
                    acc = acc.add(&emb.mu()[pos]);
                    let mut coords = vec![BigRational::zero(); rs.rank()];
                    coords[i - 1] = rat(1);
                    coords[node - 1] = -emb.n_coeffs()[pos].clone();
                    let sigma = Weight::new(rs.algebra(), coords).unwrap();
                    assert_eq!(acc, sigma, "{name}/{node}: σ_{} mismatch", pos + 1);
                    assert!(rs.inner_product(&sigma, emb.omega()).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn project_examples() {
        let emb = embedding("E6", 6);
        let rs = emb.root_system();

        let (parts, r) = emb.project(rs.rho());
        assert_eq!(r, frac(11, 2));
        assert_eq!(parts, vec![rat(5), rat(4), rat(3), rat(2), rat(1), rat(0)]);

        let (parts, r) = emb.project(emb.omega());
        assert_eq!(r, rat(1));
        assert!(parts.iter().all(|p| p.is_zero()));

        let w = Weight::from_ints(rs.algebra(), &[7, 1, 1, 1, 1, -7]).unwrap();
        let (parts, r) = emb.project(&w);
        assert_eq!(r, frac(1, 2));
        assert_eq!(parts, vec![rat(11), rat(4), rat(3), rat(2), rat(1), rat(0)]);
        assert!(AWeight::new(parts.clone()).unwrap().is_strictly_dominant());
    }

    #[test]
    fn project_is_inverted_by_expansion() {
        for (name, node) in [("A3", 3), ("B3", 3), ("C3", 3), ("D4", 4), ("G2", 2), ("E6", 6)] {
            let emb = embedding(name, node);
            let rs = emb.root_system();
            let orb = weylorb::orbit(rs, &ints(rs, &vec![1; rs.rank()])).unwrap();
            for w in orb.iter().take(60) {
                let (parts, r) = emb.project(w);
                assert_eq!(&emb.weight_from_parts(&parts, &r), w, "{name} at {w}");
            }
        }
    }

    #[test]
    fn chain_reflections_transpose_mu_coefficients() {
        // the reflection at the i-th retained node swaps μ-coefficients
        // i and i+1 and leaves the Ω-shift alone
        for (name, node) in [("A3", 3), ("B3", 3), ("C4", 4), ("D4", 4), ("E6", 6)] {
            let emb = embedding(name, node);
            let rs = emb.root_system();
            let probe = ints(rs, &(1..=rs.rank() as i64).collect::<Vec<_>>());
            for (pos, &i) in emb.retained().iter().enumerate() {
                let reflected = rs.simple_reflection(i, &probe).unwrap();
                let (parts, r) = emb.project(&probe);
                let (got_parts, got_r) = emb.project(&reflected);
                let mut want = parts.clone();
                want.swap(pos, pos + 1);
                // renormalize to s_N = 0
                let last = want.last().cloned().unwrap();
                for p in &mut want {
                    *p -= &last;
                }
                assert_eq!(got_parts, want, "{name} node {i}");
                assert_eq!(got_r, r, "{name} node {i}");
            }
        }
    }

    #[test]
    fn distinct_permutation_counts() {
        let three = distinct_permutations(&[rat(1), rat(0), rat(0)]);
        assert_eq!(three.len(), 3);
        let one = distinct_permutations(&[rat(2), rat(2), rat(2)]);
        assert_eq!(one.len(), 1);
        let aw = AWeight::new(vec![rat(7), rat(1), rat(1), rat(1), rat(1), rat(0)]).unwrap();
        assert_eq!(a_orbit(&aw).len(), 30);
        assert_eq!(aw.orbit_size(), 30);
    }

    #[test]
    fn aweight_normalizes_and_validates() {
        let aw = AWeight::new(vec![rat(5), rat(3), rat(2)]).unwrap();
        assert_eq!(aw.parts(), &[rat(3), rat(1), rat(0)][..]);
        assert!(matches!(
            AWeight::new(vec![rat(1), rat(2)]),
            Err(SubalgError::NotWeaklyDecreasing(_))
        ));
    }

    #[test]
    fn branching_e6_lambda1() {
        let emb = embedding("E6", 6);
        let rs = emb.root_system();
        let orb = weylorb::orbit(rs, &ints(rs, &[1, 0, 0, 0, 0, 0])).unwrap();
        let parts = emb.orbit_branching(&orb).unwrap();
        assert_eq!(parts.len(), 3);
        let summary: Vec<(BigRational, u128)> = parts
            .iter()
            .map(|(aw, r)| (r.clone(), aw.orbit_size()))
            .collect();
        assert_eq!(
            summary,
            vec![(frac(1, 2), 6), (rat(0), 15), (frac(-1, 2), 6)]
        );
    }

    #[test]
    fn branching_zero_orbit() {
        let emb = embedding("B3", 3);
        let rs = emb.root_system();
        let orb = weylorb::orbit(rs, &Weight::zero(rs.algebra())).unwrap();
        let parts = emb.orbit_branching(&orb).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(parts[0].0.parts().iter().all(|p| p.is_zero()));
        assert!(parts[0].1.is_zero());
    }

    #[test]
    fn branching_a2_weyl_vector() {
        let emb = embedding("A2", 2);
        let rs = emb.root_system();
        let orb = weylorb::orbit(rs, rs.rho()).unwrap();
        let parts = emb.orbit_branching(&orb).unwrap();
        assert_eq!(parts.len(), 3);
        for (aw, _) in &parts {
            assert_eq!(aw.orbit_size(), 2);
        }
    }

    #[test]
    fn branching_reconstructs_various_orbits() {
        for (name, node, seed) in [
            ("B3", 3, vec![1, 1, 1]),
            ("C3", 3, vec![2, 0, 1]),
            ("G2", 2, vec![1, 1]),
            ("D4", 4, vec![1, 0, 1, 0]),
            ("A4", 1, vec![0, 1, 0, 1]),
        ] {
            let emb = embedding(name, node);
            let rs = emb.root_system();
            let orb = weylorb::orbit(rs, &ints(rs, &seed)).unwrap();
            let parts = emb.orbit_branching(&orb).unwrap();
            let total: u128 = parts.iter().map(|(aw, _)| aw.orbit_size()).sum();
            assert_eq!(total, orb.len() as u128, "{name}");
        }
    }

    #[test]
    fn rho_decomposition_g2() {
        let emb = embedding("G2", 2);
        let rs = emb.root_system();
        let dec = rho_decomposition(&emb).unwrap();
        assert_eq!(dec.len(), 3);
        for pair in dec.pairs() {
            assert!(pair.r > BigRational::zero());
            assert!(pair.sigma_pp.is_strictly_dominant());
            // the two members of a pair always carry opposite parities
            let plus_sign = dominant_representative(rs, &pair.plus).1;
            let minus_sign = dominant_representative(rs, &pair.minus).1;
            assert_eq!(plus_sign, -minus_sign);
            // round-trip through the μ-coefficient expansion
            let rebuilt = emb.weight_from_parts(pair.sigma_pp.parts(), &pair.r);
            assert_eq!(rebuilt, pair.plus);
            let rebuilt = emb.weight_from_parts(pair.sigma_pp.parts(), &-pair.r.clone());
            assert_eq!(rebuilt, pair.minus);
        }
    }

    #[test]
    fn rho_pairs_where_they_exist() {
        // the strict ±r pairing with a shared chain part exists only for a
        // few algebras; B2/C2 have it with 4 permutation weights
        for name in ["B2", "C2"] {
            let emb = embedding(name, 2);
            let rs = emb.root_system();
            let dec = rho_decomposition(&emb).unwrap();
            assert_eq!(dec.len(), 2, "{name}");
            for pair in dec.pairs() {
                let plus_sign = dominant_representative(rs, &pair.plus).1;
                let minus_sign = dominant_representative(rs, &pair.minus).1;
                assert_eq!(plus_sign, -minus_sign, "{name}");
            }
        }
    }

    #[test]
    fn rho_decomposition_error_paths() {
        // A2: odd-sized ℘(ρ) with a zero-shift element
        let emb = embedding("A2", 2);
        match rho_decomposition(&emb) {
            Err(SubalgError::ZeroShift(w)) => {
                assert_eq!(w, ints(&system("A2"), &[2, -1]));
            }
            other => panic!("expected the zero-shift error, got {other:?}"),
        }
        // B3: paired shifts exist but chain parts do not match up
        let emb = embedding("B3", 3);
        assert!(matches!(
            rho_decomposition(&emb),
            Err(SubalgError::Unpaired(_))
        ));
        // D4: zero-shift element
        let emb = embedding("D4", 4);
        assert!(matches!(
            rho_decomposition(&emb),
            Err(SubalgError::ZeroShift(_))
        ));
    }

    #[test]
    fn xi_identity_at_zero() {
        let emb = embedding("B3", 3);
        let rs = emb.root_system();
        let entries = xi_correspondence(&emb, &Weight::zero(rs.algebra())).unwrap();
        assert_eq!(entries.len(), 8);
        for e in &entries {
            assert!(e.mu.is_zero());
            assert_eq!(e.image, e.rho_elem);
        }
    }

    #[test]
    fn xi_a2_fundamental() {
        let emb = embedding("A2", 2);
        let rs = emb.root_system();
        let entries = xi_correspondence(&emb, &ints(rs, &[1, 0])).unwrap();
        assert_eq!(entries.len(), 3);
        // signature preservation against independently computed parities
        for e in &entries {
            let (_, sign) = dominant_representative(rs, &e.image);
            assert_eq!(sign, e.sign, "at {}", e.rho_elem);
        }
    }

    #[test]
    fn xi_preserves_signs_small_algebras() {
        for (name, node, lam) in [
            ("B3", 3, vec![1, 0, 1]),
            ("C3", 3, vec![0, 2, 0]),
            ("G2", 2, vec![2, 1]),
            ("D4", 4, vec![1, 1, 0, 0]),
        ] {
            let emb = embedding(name, node);
            let rs = emb.root_system();
            let entries = xi_correspondence(&emb, &ints(rs, &lam)).unwrap();
            for e in &entries {
                let (_, sign) = dominant_representative(rs, &e.image);
                assert_eq!(sign, e.sign, "{name} at {}", e.rho_elem);
            }
        }
    }
}
