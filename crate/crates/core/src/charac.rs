//! Irreducible characters, computed three independent ways.
//!
//! * [`character_direct`]: exact division of the signed orbit sum of
//!   `Λ⁺ + ρ` by that of `ρ` in the group ring of the weight lattice.
//! * [`character_permweight`]: the factorized route. Both signed orbit
//!   sums collapse to their permutation weights: each chain suborbit of a
//!   strictly dominant seed contributes `ε · S(σ⁺) · u^r` after the common
//!   chain factor cancels, so the division happens in a polynomial ring
//!   with one indeterminate per power sum plus `u`, with term counts
//!   `|℘|` instead of `|W|`.
//! * [`freudenthal`]: the standard recursive multiplicity formula over
//!   dominant weights, as an oracle independent of both routes above.
//!
//! All three must agree exactly; disagreement is a bug, never tolerance.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rootsys::{AlgebraId, Family, RootSysError, RootSystem, Weight};
use crate::schur::{Partition, PowerSumPoly, PsTerm, SchurError, SchurTable};
use crate::subalg::{self, AWeight, Embedding, SubalgError};
use crate::weylorb::{self, OrbitError};

#[derive(Debug, Error)]
pub enum CharacterError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Permw(#[from] crate::permw::PermwError),
    #[error(transparent)]
    Subalg(#[from] SubalgError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error("{0} character sums are not supported at desk scale")]
    NotSupportedAtDeskScale(AlgebraId),
    #[error("highest weight {0} is not dominant integral")]
    BadHighestWeight(Weight),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// A formal sum `Σ m_μ e^μ` with positive integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPoly {
    algebra: AlgebraId,
    highest: Weight,
    mults: BTreeMap<Weight, u64>,
}

impl CharacterPoly {
    fn from_counts(
        rs: &RootSystem,
        highest: &Weight,
        counts: BTreeMap<Weight, u64>,
    ) -> Result<Self, CharacterError> {
        let ch = CharacterPoly {
            algebra: rs.algebra(),
            highest: highest.clone(),
            mults: counts,
        };
        ch.validate(rs)?;
        Ok(ch)
    }

    /// Output contract: closed under the Weyl group and normalized at the
    /// highest weight.
    fn validate(&self, rs: &RootSystem) -> Result<(), CharacterError> {
        if self.mults.get(&self.highest) != Some(&1) {
            return Err(CharacterError::Internal(format!(
                "highest weight {} does not carry multiplicity 1",
                self.highest
            )));
        }
        for (w, m) in &self.mults {
            let (dom, _) = weylorb::dominant_representative(rs, w);
            if self.mults.get(&dom) != Some(m) {
                return Err(CharacterError::Internal(format!(
                    "multiplicity map is not Weyl-invariant at {w}"
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn multiplicities(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    /// Number of distinct weights in the support.
    pub fn support_len(&self) -> usize {
        self.mults.len()
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.mults.values().map(|&m| BigUint::from(m)).sum()
    }
}

/// The signed formal sum `A(μ) = Σ ε e^μ` over one strictly dominant
/// orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalAltSum {
    algebra: AlgebraId,
    seed: Weight,
    terms: BTreeMap<Weight, i8>,
}

impl FormalAltSum {
    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn seed(&self) -> &Weight {
        &self.seed
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i8> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Packages the signed orbit of a strictly dominant seed as a formal sum.
pub fn alternating_sum(rs: &RootSystem, seed: &Weight) -> Result<FormalAltSum, CharacterError> {
    let signed = weylorb::signed_orbit(rs, seed)?;
    Ok(FormalAltSum {
        algebra: rs.algebra(),
        seed: seed.clone(),
        terms: signed.into_iter().map(|s| (s.weight, s.sign)).collect(),
    })
}

/// The group-ring product `ChR · A`, for round-trip checks against the
/// alternating sum of the shifted highest weight.
pub fn character_times_alt_sum(ch: &CharacterPoly, alt: &FormalAltSum) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, &m) in &ch.mults {
        for (v, &s) in &alt.terms {
            let key = w.add(v);
            let c = out.entry(key).or_insert(0);
            *c += m as i64 * s as i64;
            if *c == 0 {
                out.remove(&w.add(v));
            }
        }
    }
    out
}

fn check_highest_weight(rs: &RootSystem, lambda: &Weight) -> Result<(), CharacterError> {
    if lambda.algebra() != rs.algebra() {
        return Err(RootSysError::AlgebraMismatch {
            left: rs.algebra(),
            right: lambda.algebra(),
        }
        .into());
    }
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(CharacterError::BadHighestWeight(lambda.clone()));
    }
    Ok(())
}

fn check_desk_scale(rs: &RootSystem) -> Result<(), CharacterError> {
    if rs.algebra().family() == Family::E && rs.algebra().rank() >= 7 {
        return Err(CharacterError::NotSupportedAtDeskScale(rs.algebra()));
    }
    Ok(())
}

/// Division key: graded-lexicographic on integer coordinate vectors, the
/// grade being the coordinate sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct DivKey {
    grade: i64,
    coords: Vec<i64>,
}

impl DivKey {
    fn new(coords: Vec<i64>) -> Self {
        DivKey {
            grade: coords.iter().sum(),
            coords,
        }
    }

    fn shift(&self, by: &DivKey) -> DivKey {
        DivKey {
            grade: self.grade + by.grade,
            coords: self
                .coords
                .iter()
                .zip(&by.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

fn weight_to_i64(w: &Weight) -> Result<Vec<i64>, CharacterError> {
    w.coords()
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(CharacterError::Internal(format!(
                    "non-integral coordinate in {w}"
                )));
            }
            c.numer()
                .to_i64()
                .ok_or_else(|| CharacterError::Internal(format!("coordinate overflow in {w}")))
        })
        .collect()
}

fn alt_sum_to_div_map(alt: &FormalAltSum) -> Result<BTreeMap<DivKey, i64>, CharacterError> {
    alt.terms
        .iter()
        .map(|(w, &s)| Ok((DivKey::new(weight_to_i64(w)?), s as i64)))
        .collect()
}

/// Exact division of the alternating sum of `Λ⁺ + ρ` by that of `ρ` via
/// leading-term elimination in the lattice group ring.
pub fn character_direct(rs: &RootSystem, lambda: &Weight) -> Result<CharacterPoly, CharacterError> {
    check_desk_scale(rs)?;
    check_highest_weight(rs, lambda)?;
    let shifted = lambda.add(rs.rho());
    let numerator = alternating_sum(rs, &shifted)?;
    let denominator = alternating_sum(rs, rs.rho())?;

    let mut remainder = alt_sum_to_div_map(&numerator)?;
    let divisor = alt_sum_to_div_map(&denominator)?;
    let (lead_d, &lead_c) = divisor.last_key_value().expect("divisor nonempty");
    let neg_lead = DivKey {
        grade: -lead_d.grade,
        coords: lead_d.coords.iter().map(|c| -c).collect(),
    };

    let mut quotient: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut steps = 0usize;
    while let Some((lead_r, &c_r)) = remainder.last_key_value() {
        steps += 1;
        if steps > 2_000_000 {
            return Err(CharacterError::InexactDivision(
                "leading-term elimination did not terminate".into(),
            ));
        }
        let shift = lead_r.shift(&neg_lead);
        let q = c_r * lead_c; // lead_c is ±1
        quotient.insert(shift.coords.clone(), q);
        for (t, &c) in &divisor {
            let key = t.shift(&shift);
            let slot = remainder.entry(key).or_insert(0);
            *slot -= q * c;
            if *slot == 0 {
                remainder.remove(&t.shift(&shift));
            }
        }
    }

    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    for (coords, m) in quotient {
        if m <= 0 {
            return Err(CharacterError::InexactDivision(format!(
                "quotient carries nonpositive multiplicity {m}"
            )));
        }
        let w = Weight::from_ints(rs.algebra(), &coords)?;
        counts.insert(w, m as u64);
    }
    CharacterPoly::from_counts(rs, lambda, counts)
}

/// All roots, as the union of the orbits of the simple roots.
pub fn all_roots(rs: &RootSystem) -> Result<Vec<Weight>, CharacterError> {
    let mut roots: std::collections::HashSet<Weight> = std::collections::HashSet::new();
    for i in 1..=rs.rank() {
        let alpha = rs.simple_root(i)?.clone();
        let (dom, _) = weylorb::dominant_representative(rs, &alpha);
        for w in weylorb::orbit(rs, &dom)?.iter() {
            roots.insert(w.clone());
        }
    }
    let mut out: Vec<Weight> = roots.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The positive roots: nonnegative coefficients over the simple roots.
pub fn positive_roots(rs: &RootSystem) -> Result<Vec<Weight>, CharacterError> {
    let mut out = Vec::new();
    for root in all_roots(rs)? {
        // b_i = (root, λ_i) / ((α_i, α_i)/2) are the simple-root coefficients
        let mut positive = true;
        for i in 1..=rs.rank() {
            let mut ip = BigRational::zero();
            for (j, c) in root.coords().iter().enumerate() {
                if !c.is_zero() {
                    ip += &rs.gram()[j][i - 1] * c;
                }
            }
            if ip.is_negative() {
                positive = false;
                break;
            }
        }
        if positive {
            out.push(root);
        }
    }
    Ok(out)
}

/// `Π_{α>0} (Λ⁺ + ρ, α) / (ρ, α)`, an exact integer.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint, CharacterError> {
    check_highest_weight(rs, lambda)?;
    let shifted = lambda.add(rs.rho());
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for alpha in positive_roots(rs)? {
        num *= rs.inner_product(&shifted, &alpha)?;
        den *= rs.inner_product(rs.rho(), &alpha)?;
    }
    let dim = num / den;
    if !dim.is_integer() || dim.is_negative() {
        return Err(CharacterError::Internal(format!(
            "dimension product is not a positive integer: {dim}"
        )));
    }
    Ok(dim.to_integer().to_biguint().expect("nonnegative"))
}

/// Height of `λ - μ` in the simple-root basis; `None` when the difference
/// is not a nonnegative integer combination.
fn level_below(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Option<u64>, CharacterError> {
    let diff = lambda.sub(mu);
    let mut height = BigRational::zero();
    for i in 1..=rs.rank() {
        let mut ip = BigRational::zero();
        for (j, c) in diff.coords().iter().enumerate() {
            if !c.is_zero() {
                ip += &rs.gram()[j][i - 1] * c;
            }
        }
        let b = ip / rs.half_norm(i)?.clone();
        if b.is_negative() || !b.is_integer() {
            return Ok(None);
        }
        height += b;
    }
    if !height.is_integer() {
        return Ok(None);
    }
    Ok(height.to_integer().to_u64())
}

/// Standard recursive multiplicity computation over the dominant weights
/// below `Λ⁺`, then orbit expansion.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<CharacterPoly, CharacterError> {
    check_desk_scale(rs)?;
    check_highest_weight(rs, lambda)?;
    let positives = positive_roots(rs)?;

    // all dominant weights ≤ λ: descend by positive roots (the cover
    // relations of the dominance order on dominant weights)
    let mut dominants: Vec<Weight> = vec![lambda.clone()];
    let mut seen: std::collections::HashSet<Weight> = dominants.iter().cloned().collect();
    let mut head = 0;
    while head < dominants.len() {
        let w = dominants[head].clone();
        head += 1;
        for alpha in &positives {
            let down = w.sub(alpha);
            if down.is_dominant() && !seen.contains(&down) {
                seen.insert(down.clone());
                dominants.push(down);
            }
        }
    }
    let mut leveled: Vec<(u64, Weight)> = Vec::with_capacity(dominants.len());
    for w in dominants {
        let level = level_below(rs, lambda, &w)?.ok_or_else(|| {
            CharacterError::Internal(format!("{w} is not below {lambda} in the root lattice"))
        })?;
        leveled.push((level, w));
    }
    leveled.sort();

    let shifted = lambda.add(rs.rho());
    let top_norm = rs.inner_product(&shifted, &shifted)?;
    let mut mults: HashMap<Weight, BigRational> = HashMap::new();
    for (level, mu) in &leveled {
        if *level == 0 {
            mults.insert(mu.clone(), BigRational::one());
            continue;
        }
        let mu_shifted = mu.add(rs.rho());
        let denom = top_norm.clone() - rs.inner_product(&mu_shifted, &mu_shifted)?;
        if denom.is_zero() {
            return Err(CharacterError::Internal(format!(
                "vanishing denominator at {mu}"
            )));
        }
        let mut rhs = BigRational::zero();
        for alpha in &positives {
            let mut nu = mu.clone();
            loop {
                nu = nu.add(alpha);
                let (dom, _) = weylorb::dominant_representative(rs, &nu);
                match mults.get(&dom) {
                    None => break, // left the weight hull; the ray never returns
                    Some(m) => {
                        if !m.is_zero() {
                            rhs += rs.inner_product(&nu, alpha)? * m;
                        }
                    }
                }
            }
        }
        let m = rhs * BigRational::from_integer(2.into()) / denom;
        if m.is_negative() || !m.is_integer() {
            return Err(CharacterError::Internal(format!(
                "non-integral multiplicity {m} at {mu}"
            )));
        }
        mults.insert(mu.clone(), m);
    }

    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, m) in &mults {
        if m.is_zero() {
            continue;
        }
        let m = m
            .to_integer()
            .to_u64()
            .ok_or_else(|| CharacterError::Internal("multiplicity overflow".into()))?;
        for w in weylorb::orbit(rs, mu)?.iter() {
            counts.insert(w.clone(), m);
        }
    }
    CharacterPoly::from_counts(rs, lambda, counts)
}

/// The factorized character together with its division certificate.
#[derive(Debug, Clone)]
pub struct PermWeightCharacter {
    pub character: CharacterPoly,
    /// `Σ ε S(σ⁺) u^r` over the permutation weights of `Λ⁺ + ρ`.
    pub numerator: PowerSumPoly,
    /// The same sum over the permutation weights of `ρ`.
    pub denominator: PowerSumPoly,
    /// Their exact ratio; re-expands to `character`.
    pub quotient: PowerSumPoly,
}

/// Chain data of one permutation weight of a strictly dominant seed.
fn chain_partition(
    emb: &Embedding,
    w: &Weight,
) -> Result<(Partition, BigRational), CharacterError> {
    let (parts, r) = emb.project(w);
    let aw = AWeight::new(parts)?;
    if !aw.is_strictly_dominant() {
        return Err(CharacterError::Internal(format!(
            "{w} projects to a non-strictly-dominant chain part"
        )));
    }
    let n = aw.parts().len();
    let staircase: Vec<BigRational> = (0..n)
        .map(|i| BigRational::from_integer(BigInt::from((n - 1 - i) as i64)))
        .collect();
    let reduced: Vec<u64> = aw
        .parts()
        .iter()
        .zip(&staircase)
        .map(|(s, d)| {
            let v = s - d;
            if v.is_negative() || !v.is_integer() {
                return Err(CharacterError::Internal(format!(
                    "chain part of {w} is not a shifted partition"
                )));
            }
            v.to_integer()
                .to_u64()
                .ok_or_else(|| CharacterError::Internal("partition overflow".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok((Partition::new(reduced)?, r))
}

/// `Σ ε(p) S(σ⁺(p)) u^{r(p)}` over a signed family of permutation weights.
fn signed_schur_sum(
    emb: &Embedding,
    table: &mut SchurTable,
    members: &[(Weight, i8)],
) -> Result<PowerSumPoly, CharacterError> {
    let mut acc = PowerSumPoly::zero(table.num_x());
    for (w, sign) in members {
        let (partition, r) = chain_partition(emb, w)?;
        let s = table.generalized(&partition)?;
        let signed = if *sign < 0 { s.neg() } else { s };
        acc = acc.add(&signed.mul_u_pow(&r));
    }
    Ok(acc)
}

/// Exact division in the `(x, u)` ring by elimination of the leading
/// `u`-power; the divisor's top `u`-coefficient must be a nonzero constant
/// (for the sums above it is the seed's own term, with coefficient 1).
fn divide_power_sum(
    num: &PowerSumPoly,
    den: &PowerSumPoly,
) -> Result<PowerSumPoly, CharacterError> {
    type XPoly = BTreeMap<Vec<u32>, BigRational>;
    let nx = num.num_x();
    let split = |p: &PowerSumPoly| -> BTreeMap<BigRational, XPoly> {
        let mut by_u: BTreeMap<BigRational, XPoly> = BTreeMap::new();
        for (t, c) in p.terms() {
            by_u
                .entry(t.u_exp.clone())
                .or_default()
                .insert(t.x_exp.clone(), c.clone());
        }
        by_u
    };
    let mut remainder = split(num);
    let divisor = split(den);
    let (lead_u, lead_poly) = divisor
        .last_key_value()
        .ok_or_else(|| CharacterError::InexactDivision("zero divisor".into()))?;
    if lead_poly.len() != 1 || !lead_poly.keys().next().unwrap().iter().all(|&e| e == 0) {
        return Err(CharacterError::InexactDivision(
            "the leading u-coefficient of the divisor is not a constant".into(),
        ));
    }
    let lead_c = lead_poly.values().next().unwrap().clone();
    let min_u_den = divisor.first_key_value().unwrap().0.clone();
    let min_u_num = match remainder.first_key_value() {
        Some((u, _)) => u.clone(),
        None => return Ok(PowerSumPoly::zero(nx)),
    };
    let floor = min_u_num - &min_u_den;

    let mul_x = |a: &XPoly, b: &XPoly| -> XPoly {
        let mut out: XPoly = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let slot = out.entry(e.clone()).or_insert_with(BigRational::zero);
                *slot += ca * cb;
                if slot.is_zero() {
                    out.remove(&e);
                }
            }
        }
        out
    };

    let mut quotient = PowerSumPoly::zero(nx);
    while let Some((top_u, top_poly)) = remainder.pop_last() {
        let q_u = &top_u - lead_u;
        if q_u < floor {
            return Err(CharacterError::InexactDivision(format!(
                "remainder term at u-power {top_u} cannot be eliminated"
            )));
        }
        let q_poly: XPoly = top_poly
            .iter()
            .map(|(e, c)| (e.clone(), c / &lead_c))
            .collect();
        for (e, c) in &q_poly {
            quotient.add_term(
                PsTerm {
                    u_exp: q_u.clone(),
                    x_exp: e.clone(),
                },
                c,
            );
        }
        for (du, dpoly) in &divisor {
            let target_u = &q_u + du;
            if target_u == top_u {
                continue; // cancels exactly by construction
            }
            let prod = mul_x(&q_poly, dpoly);
            let slot = remainder.entry(target_u.clone()).or_default();
            for (e, c) in prod {
                let cell = slot.entry(e.clone()).or_insert_with(BigRational::zero);
                *cell -= c;
                if cell.is_zero() {
                    slot.remove(&e);
                }
            }
            if slot.is_empty() {
                remainder.remove(&target_u);
            }
        }
    }
    Ok(quotient)
}

/// Re-expands a quotient into a weight-multiplicity map: substitutes the
/// power sums over one formal variable per `μ_I` and reads each monomial
/// as `Σ s_I μ_I + r Ω`.
fn expand_quotient(
    emb: &Embedding,
    quotient: &PowerSumPoly,
) -> Result<BTreeMap<Weight, u64>, CharacterError> {
    let nvars = emb.root_system().rank();
    let by_u = crate::schur::specialize_by_u(quotient, nvars, false);
    let mut acc: BTreeMap<Weight, BigRational> = BTreeMap::new();
    for (u_exp, poly) in by_u {
        for (exps, coeff) in poly.terms() {
            let parts: Vec<BigRational> = exps
                .iter()
                .map(|&e| BigRational::from_integer(e.into()))
                .collect();
            let w = emb.weight_from_parts(&parts, &u_exp);
            let slot = acc.entry(w.clone()).or_insert_with(BigRational::zero);
            *slot += coeff;
            if slot.is_zero() {
                acc.remove(&w);
            }
        }
    }
    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    for (w, m) in acc {
        if !w.is_integral() {
            return Err(CharacterError::Internal(format!(
                "expansion produced the non-integral weight {w}"
            )));
        }
        if !m.is_integer() || m.is_negative() || m.is_zero() {
            return Err(CharacterError::InexactDivision(format!(
                "expansion multiplicity {m} at {w} is not a positive integer"
            )));
        }
        let m = m
            .to_integer()
            .to_u64()
            .ok_or_else(|| CharacterError::Internal("multiplicity overflow".into()))?;
        counts.insert(w, m);
    }
    Ok(counts)
}

/// The factorized character. The numerator signs ride along the
/// correspondence from `℘(ρ)`, whose own signs are reflection parities;
/// an inexact division or a failed re-expansion reports the violated
/// assumption instead of guessing.
pub fn character_permweight(
    emb: &Embedding,
    lambda: &Weight,
) -> Result<PermWeightCharacter, CharacterError> {
    let rs = emb.root_system();
    check_desk_scale(rs)?;
    check_highest_weight(rs, lambda)?;

    let entries = subalg::xi_correspondence(emb, lambda)?;
    let mut table = SchurTable::new(emb.chain_rank());

    let rho_members: Vec<(Weight, i8)> = entries
        .iter()
        .map(|e| (e.rho_elem.clone(), e.sign))
        .collect();
    let denominator = signed_schur_sum(emb, &mut table, &rho_members)?;

    let image_members: Vec<(Weight, i8)> = entries
        .iter()
        .map(|e| (e.image.clone(), e.sign))
        .collect();
    let numerator = signed_schur_sum(emb, &mut table, &image_members)?;

    let quotient = divide_power_sum(&numerator, &denominator)?;
    let counts = expand_quotient(emb, &quotient)?;
    let character = CharacterPoly::from_counts(rs, lambda, counts)?;
    Ok(PermWeightCharacter {
        character,
        numerator,
        denominator,
        quotient,
    })
}
