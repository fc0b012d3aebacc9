//! Weyl-orbit enumeration with signature tracking.
//!
//! Orbits are computed as the closure of a dominant seed under the simple
//! reflections. For a strictly dominant seed the stabilizer is trivial, so
//! every element carries a well-defined sign: the parity of any reflection
//! word reaching it from the seed.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use thiserror::Error;

use crate::rootsys::{AlgebraId, Family, RootSysError, RootSystem, Weight};

/// Default cap on orbit enumeration; larger orbits abort with
/// [`OrbitError::OrbitTooLarge`] before any element is generated.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

#[derive(Debug, Error)]
pub enum OrbitError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("orbit seed {0} is not dominant")]
    NonDominantSeed(Weight),
    #[error("orbit seed {0} is not integral")]
    NonIntegralSeed(Weight),
    #[error("seed {0} is not strictly dominant, so per-element signs are ill-defined")]
    NotStrictlyDominant(Weight),
    #[error("orbit of {seed} would have {predicted} elements, over the cap of {cap}")]
    OrbitTooLarge {
        seed: Weight,
        predicted: BigUint,
        cap: usize,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

/// The closure of a dominant seed under the Weyl group, as a sorted set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylOrbit {
    seed: Weight,
    elements: Vec<Weight>,
}

impl WeylOrbit {
    /// The unique dominant element.
    pub fn seed(&self) -> &Weight {
        &self.seed
    }

    /// Elements in the canonical (lexicographic) order.
    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Weight> {
        self.elements.iter()
    }
}

/// A weight together with its orbit signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWeight {
    pub weight: Weight,
    /// +1 or -1; the dominant seed carries +1.
    pub sign: i8,
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn pow2(n: usize) -> BigUint {
    BigUint::from(1u32) << n
}

/// Order of the full Weyl group via the standard product formulas.
pub fn weyl_group_order(id: AlgebraId) -> BigUint {
    let n = id.rank();
    match id.family() {
        Family::A => factorial(n + 1),
        Family::B | Family::C => pow2(n) * factorial(n),
        Family::D => pow2(n - 1) * factorial(n),
        Family::E => BigUint::from(match n {
            6 => 51_840u64,
            7 => 2_903_040u64,
            _ => 696_729_600u64,
        }),
        Family::G => BigUint::from(12u32),
    }
}

/// Weyl-group order of the sub-diagram induced on `nodes` (0-based),
/// classified component by component.
fn sub_diagram_weyl_order(cartan: &[Vec<i64>], nodes: &[usize]) -> BigUint {
    let node_set: HashSet<usize> = nodes.iter().copied().collect();
    let mut seen: HashSet<usize> = HashSet::new();
    let mut order = BigUint::from(1u32);
    for &start in nodes {
        if seen.contains(&start) {
            continue;
        }
        // flood-fill one component
        let mut comp = vec![start];
        seen.insert(start);
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            k += 1;
            for &w in &node_set {
                if !seen.contains(&w) && cartan[v][w] != 0 {
                    seen.insert(w);
                    comp.push(w);
                }
            }
        }
        order *= component_weyl_order(cartan, &comp);
    }
    order
}

fn component_weyl_order(cartan: &[Vec<i64>], comp: &[usize]) -> BigUint {
    let k = comp.len();
    if k == 1 {
        return BigUint::from(2u32);
    }
    let mut max_mult = 1;
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            let m = cartan[i][j] * cartan[j][i];
            if m != 0 {
                max_mult = max_mult.max(m);
                adjacency.entry(i).or_default().push(j);
                adjacency.entry(j).or_default().push(i);
            }
        }
    }
    if max_mult == 3 {
        return BigUint::from(12u32); // G2
    }
    if max_mult == 2 {
        return pow2(k) * factorial(k); // B/C type
    }
    let branch = comp
        .iter()
        .find(|&&v| adjacency.get(&v).map_or(0, Vec::len) >= 3);
    match branch {
        None => factorial(k + 1), // chain: A_k
        Some(&b) => {
            // arm lengths measured from the trivalent node
            let mut arms: Vec<usize> = adjacency[&b]
                .iter()
                .map(|&first| {
                    let mut len = 1;
                    let mut prev = b;
                    let mut cur = first;
                    while let Some(&next) = adjacency[&cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => pow2(k - 1) * factorial(k), // D_k
                [1, 2, 2] => BigUint::from(51_840u64),
                [1, 2, 3] => BigUint::from(2_903_040u64),
                [1, 2, 4] => BigUint::from(696_729_600u64),
                other => unreachable!("no simple diagram has arms {other:?}"),
            }
        }
    }
}

/// Predicted orbit size `|W| / |W_stab|` of a dominant seed, where the
/// stabilizer is the parabolic generated by the reflections fixing it.
pub fn predicted_orbit_size(rs: &RootSystem, seed: &Weight) -> Result<BigUint, OrbitError> {
    check_seed(rs, seed)?;
    let zero_nodes: Vec<usize> = seed
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| num_traits::Zero::is_zero(*c))
        .map(|(i, _)| i)
        .collect();
    let stab = sub_diagram_weyl_order(rs.cartan(), &zero_nodes);
    Ok(weyl_group_order(rs.algebra()) / stab)
}

fn check_seed(rs: &RootSystem, seed: &Weight) -> Result<(), OrbitError> {
    if seed.algebra() != rs.algebra() {
        return Err(RootSysError::AlgebraMismatch {
            left: rs.algebra(),
            right: seed.algebra(),
        }
        .into());
    }
    if !seed.is_dominant() {
        return Err(OrbitError::NonDominantSeed(seed.clone()));
    }
    if !seed.is_integral() {
        return Err(OrbitError::NonIntegralSeed(seed.clone()));
    }
    Ok(())
}

/// Closure of a dominant integral seed under simple reflections, with the
/// default size cap.
pub fn orbit(rs: &RootSystem, seed: &Weight) -> Result<WeylOrbit, OrbitError> {
    orbit_with_cap(rs, seed, DEFAULT_ORBIT_CAP)
}

/// As [`orbit`], aborting early when the predicted size exceeds `cap`.
pub fn orbit_with_cap(rs: &RootSystem, seed: &Weight, cap: usize) -> Result<WeylOrbit, OrbitError> {
    let predicted = predicted_orbit_size(rs, seed)?;
    if predicted > BigUint::from(cap) {
        return Err(OrbitError::OrbitTooLarge {
            seed: seed.clone(),
            predicted,
            cap,
        });
    }
    let rank = rs.rank();
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=rank {
                let r = rs.simple_reflection(i, w)?;
                if !seen.contains(&r) {
                    seen.insert(r.clone());
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Weight> = seen.into_iter().collect();
    elements.sort();
    if BigUint::from(elements.len()) != predicted {
        return Err(OrbitError::Internal(format!(
            "orbit of {seed} has {} elements, predicted {predicted}",
            elements.len()
        )));
    }
    Ok(WeylOrbit {
        seed: seed.clone(),
        elements,
    })
}

/// Signed orbit of a strictly dominant seed: each element carries the
/// parity of the reflection word reaching it, tracked as BFS depth and
/// cross-checked on every re-discovery.
pub fn signed_orbit(rs: &RootSystem, seed: &Weight) -> Result<Vec<SignedWeight>, OrbitError> {
    signed_orbit_with_cap(rs, seed, DEFAULT_ORBIT_CAP)
}

pub fn signed_orbit_with_cap(
    rs: &RootSystem,
    seed: &Weight,
    cap: usize,
) -> Result<Vec<SignedWeight>, OrbitError> {
    check_seed(rs, seed)?;
    if !seed.is_strictly_dominant() {
        return Err(OrbitError::NotStrictlyDominant(seed.clone()));
    }
    let predicted = predicted_orbit_size(rs, seed)?;
    if predicted > BigUint::from(cap) {
        return Err(OrbitError::OrbitTooLarge {
            seed: seed.clone(),
            predicted,
            cap,
        });
    }
    let rank = rs.rank();
    let mut signs: HashMap<Weight, i8> = HashMap::new();
    signs.insert(seed.clone(), 1);
    let mut frontier = vec![(seed.clone(), 1i8)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, s) in &frontier {
            let child_sign = -s;
            for i in 1..=rank {
                let r = rs.simple_reflection(i, w)?;
                match signs.get(&r) {
                    Some(&existing) => {
                        if existing != child_sign {
                            return Err(OrbitError::Internal(format!(
                                "parity conflict at {r} in the orbit of {seed}"
                            )));
                        }
                    }
                    None => {
                        signs.insert(r.clone(), child_sign);
                        next.push((r, child_sign));
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SignedWeight> = signs
        .into_iter()
        .map(|(weight, sign)| SignedWeight { weight, sign })
        .collect();
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(out)
}

/// Reflects `w` at negative coordinates until dominant; returns the
/// dominant weight and the parity `(-1)^(#reflections)`.
pub fn dominant_representative(rs: &RootSystem, w: &Weight) -> (Weight, i8) {
    let mut cur = w.clone();
    let mut sign = 1i8;
    loop {
        let neg = cur
            .coords()
            .iter()
            .position(num_traits::Signed::is_negative);
        match neg {
            None => return (cur, sign),
            Some(i) => {
                cur = rs
                    .simple_reflection(i + 1, &cur)
                    .expect("index within rank");
                sign = -sign;
            }
        }
    }
}
