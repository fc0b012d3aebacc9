//! Classical and generalized Schur polynomials in power-sum indeterminates.
//!
//! With `N+1` formal variables `u_I` constrained by `u_1 ··· u_{N+1} = 1`,
//! the indeterminates are `x_M ≡ (Σ_I u_I^M)/M`. The classical polynomial
//! `S_M` is the degree-`M` coefficient of `exp(Σ_k x_k t^k)`, so
//!
//! ```text
//! M · S_M = Σ_{k=1}^{M} k · x_k · S_{M-k}
//! ```
//!
//! computes `S_0..S_N` directly, and the constraint reduces everything
//! above through
//!
//! ```text
//! S_M(N) = (-1)^N S_{M-N-1}(N) - Σ_{i=1}^{N} S_i*(N) S_{M-i}(N),  M > N
//! ```
//!
//! where the star substitutes `x_i → -x_i`. Generalized Schur polynomials
//! come from the Jacobi-Trudi determinant over the classical ones.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::laurent::{power_sums, Laurent};
use crate::rootsys::rat;

#[derive(Debug, Error)]
pub enum SchurError {
    #[error("partition parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u64>),
    #[error("partition has {got} parts, more than the {max} indeterminates allow")]
    TooManyParts { got: usize, max: usize },
    #[error("cannot parse polynomial record: {0}")]
    BadRecord(String),
}

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self, SchurError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One exponent vector: a rational power of `u` and nonnegative powers of
/// `x_1..x_N`. The derived order (u first, then x) makes the maximal key
/// of a polynomial its leading term for division by `u`-degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsTerm {
    pub u_exp: BigRational,
    pub x_exp: Vec<u32>,
}

/// A sparse polynomial in `x_1..x_N` and rational powers of `u`, with
/// exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPoly {
    num_x: usize,
    terms: BTreeMap<PsTerm, BigRational>,
}

impl PowerSumPoly {
    pub fn zero(num_x: usize) -> Self {
        PowerSumPoly {
            num_x,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_x: usize) -> Self {
        PowerSumPoly::constant(num_x, BigRational::one())
    }

    pub fn constant(num_x: usize, c: BigRational) -> Self {
        let mut p = PowerSumPoly::zero(num_x);
        p.add_term(
            PsTerm {
                u_exp: BigRational::zero(),
                x_exp: vec![0; num_x],
            },
            &c,
        );
        p
    }

    /// The indeterminate `x_i` (1-based).
    pub fn x(num_x: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= num_x, "x index out of range");
        let mut exp = vec![0; num_x];
        exp[i - 1] = 1;
        let mut p = PowerSumPoly::zero(num_x);
        p.add_term(
            PsTerm {
                u_exp: BigRational::zero(),
                x_exp: exp,
            },
            &BigRational::one(),
        );
        p
    }

    /// The monomial `u^r`.
    pub fn u_pow(num_x: usize, r: BigRational) -> Self {
        let mut p = PowerSumPoly::zero(num_x);
        p.add_term(
            PsTerm {
                u_exp: r,
                x_exp: vec![0; num_x],
            },
            &BigRational::one(),
        );
        p
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PsTerm, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: PsTerm, c: &BigRational) {
        debug_assert_eq!(t.x_exp.len(), self.num_x);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &PowerSumPoly) -> PowerSumPoly {
        assert_eq!(self.num_x, rhs.num_x);
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> PowerSumPoly {
        PowerSumPoly {
            num_x: self.num_x,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> PowerSumPoly {
        if c.is_zero() {
            return PowerSumPoly::zero(self.num_x);
        }
        PowerSumPoly {
            num_x: self.num_x,
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &PowerSumPoly) -> PowerSumPoly {
        assert_eq!(self.num_x, rhs.num_x);
        let mut out = PowerSumPoly::zero(self.num_x);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                let term = PsTerm {
                    u_exp: &ta.u_exp + &tb.u_exp,
                    x_exp: ta
                        .x_exp
                        .iter()
                        .zip(&tb.x_exp)
                        .map(|(a, b)| a + b)
                        .collect(),
                };
                out.add_term(term, &(ca * cb));
            }
        }
        out
    }

    /// Multiplies by the monomial `u^r`.
    pub fn mul_u_pow(&self, r: &BigRational) -> PowerSumPoly {
        PowerSumPoly {
            num_x: self.num_x,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    (
                        PsTerm {
                            u_exp: &t.u_exp + r,
                            x_exp: t.x_exp.clone(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Evaluates at rational `x` values; the polynomial must be free of `u`.
    pub fn evaluate_x(&self, x_vals: &[BigRational]) -> BigRational {
        assert_eq!(x_vals.len(), self.num_x);
        let mut acc = BigRational::zero();
        for (t, c) in &self.terms {
            assert!(t.u_exp.is_zero(), "polynomial carries u powers");
            let mut prod = c.clone();
            for (x, &e) in x_vals.iter().zip(&t.x_exp) {
                if e > 0 {
                    prod *= x.pow(e as i32);
                }
            }
            acc += prod;
        }
        acc
    }

    /// Serializes as the documented record list, sorted by exponent order.
    pub fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                json!({
                    "coeff": c.to_string(),
                    "x": t.x_exp,
                    "u": t.u_exp.to_string(),
                })
            })
            .collect();
        Value::Array(records)
    }

    pub fn from_json(num_x: usize, v: &Value) -> Result<Self, SchurError> {
        let bad = |msg: &str| SchurError::BadRecord(msg.to_string());
        let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut out = PowerSumPoly::zero(num_x);
        for rec in arr {
            let coeff: BigRational = rec["coeff"]
                .as_str()
                .ok_or_else(|| bad("coeff"))?
                .parse()
                .map_err(|_| bad("coeff"))?;
            let u_exp: BigRational = rec["u"]
                .as_str()
                .ok_or_else(|| bad("u"))?
                .parse()
                .map_err(|_| bad("u"))?;
            let x_exp: Vec<u32> = rec["x"]
                .as_array()
                .ok_or_else(|| bad("x"))?
                .iter()
                .map(|e| e.as_u64().map(|v| v as u32).ok_or_else(|| bad("x")))
                .collect::<Result<_, _>>()?;
            if x_exp.len() != num_x {
                return Err(bad("x length"));
            }
            out.add_term(PsTerm { u_exp, x_exp }, &coeff);
        }
        Ok(out)
    }
}

/// The substitution `x_i → -x_i`: each monomial picks up the parity of its
/// total `x`-degree. An involution and a ring homomorphism.
pub fn star_transform(p: &PowerSumPoly) -> PowerSumPoly {
    PowerSumPoly {
        num_x: p.num_x,
        terms: p
            .terms
            .iter()
            .map(|(t, c)| {
                let degree: u32 = t.x_exp.iter().sum();
                let c = if degree % 2 == 1 { -c.clone() } else { c.clone() };
                (t.clone(), c)
            })
            .collect(),
    }
}

/// Memo table for the classical polynomials at a fixed number of
/// indeterminates. Single-threaded by design: callers own their table.
#[derive(Debug, Clone)]
pub struct SchurTable {
    num_x: usize,
    classical: Vec<PowerSumPoly>,
}

impl SchurTable {
    pub fn new(num_x: usize) -> Self {
        SchurTable {
            num_x,
            classical: vec![PowerSumPoly::one(num_x)],
        }
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    fn ensure(&mut self, m: usize) {
        let n = self.num_x;
        while self.classical.len() <= m {
            let j = self.classical.len();
            let next = if j <= n {
                // j·S_j = Σ_{k=1}^{j} k·x_k·S_{j-k}
                let mut acc = PowerSumPoly::zero(n);
                for k in 1..=j {
                    let term = PowerSumPoly::x(n, k)
                        .mul(&self.classical[j - k])
                        .scale(&rat(k as i64));
                    acc = acc.add(&term);
                }
                acc.scale(&(BigRational::one() / rat(j as i64)))
            } else {
                // S_j = (-1)^N S_{j-N-1} - Σ_{i=1}^{N} S_i* S_{j-i}
                let mut acc = PowerSumPoly::zero(n);
                if j >= n + 1 {
                    let lead = &self.classical[j - n - 1];
                    acc = if n % 2 == 1 { lead.neg() } else { lead.clone() };
                }
                for i in 1..=n {
                    let term = star_transform(&self.classical[i]).mul(&self.classical[j - i]);
                    acc = acc.sub(&term);
                }
                acc
            };
            self.classical.push(next);
        }
    }

    /// The classical polynomial `S_M`; `S_0 = 1`.
    pub fn classical(&mut self, m: usize) -> PowerSumPoly {
        self.ensure(m);
        self.classical[m].clone()
    }

    /// Jacobi-Trudi determinant `det(S_{p_i - i + j})` over the classical
    /// polynomials; the empty partition gives 1.
    pub fn generalized(&mut self, p: &Partition) -> Result<PowerSumPoly, SchurError> {
        let m = p.len();
        if m > self.num_x {
            return Err(SchurError::TooManyParts {
                got: m,
                max: self.num_x,
            });
        }
        if m == 0 {
            return Ok(PowerSumPoly::one(self.num_x));
        }
        let max_index = p.parts()[0] as usize + m - 1;
        self.ensure(max_index);
        let entry = |i: usize, j: usize| -> Option<&PowerSumPoly> {
            // 0-based i, j; S index p_i - i + j, None when negative
            let idx = p.parts()[i] as i64 - i as i64 + j as i64;
            if idx < 0 {
                None
            } else {
                Some(&self.classical[idx as usize])
            }
        };
        // Laplace expansion over rows, memoized on the remaining-column mask
        let mut memo: HashMap<u32, PowerSumPoly> = HashMap::new();
        memo.insert(0, PowerSumPoly::one(self.num_x));
        fn minor(
            row_count: usize,
            cols: u32,
            entryf: &dyn Fn(usize, usize) -> Option<PowerSumPoly>,
            memo: &mut HashMap<u32, PowerSumPoly>,
            num_x: usize,
        ) -> PowerSumPoly {
            if let Some(hit) = memo.get(&cols) {
                return hit.clone();
            }
            let row = row_count - cols.count_ones() as usize;
            let mut acc = PowerSumPoly::zero(num_x);
            let mut sign = BigRational::one();
            for j in 0..row_count {
                if cols & (1 << j) == 0 {
                    continue;
                }
                if let Some(e) = entryf(row, j) {
                    let sub = minor(row_count, cols & !(1 << j), entryf, memo, num_x);
                    acc = acc.add(&e.mul(&sub).scale(&sign));
                }
                sign = -sign;
            }
            memo.insert(cols, acc.clone());
            acc
        }
        let entry_owned = |i: usize, j: usize| entry(i, j).cloned();
        let full: u32 = (1 << m) - 1;
        Ok(minor(m, full, &entry_owned, &mut memo, self.num_x))
    }
}

/// One-shot classical polynomial (builds a throwaway table).
pub fn classical_schur(m: usize, num_x: usize) -> PowerSumPoly {
    SchurTable::new(num_x).classical(m)
}

/// One-shot generalized polynomial.
pub fn generalized_schur(p: &Partition, num_x: usize) -> Result<PowerSumPoly, SchurError> {
    SchurTable::new(num_x).generalized(p)
}

/// Expands a polynomial into formal-exponential monomials: substitutes
/// `x_M := p_M / M` over `nvars` symbolic variables (plus the hidden
/// inverse-product variable when `constrained`), grouping by `u`-power.
pub fn specialize_by_u(
    poly: &PowerSumPoly,
    nvars: usize,
    constrained: bool,
) -> BTreeMap<BigRational, Laurent> {
    let max_m = poly
        .terms
        .keys()
        .flat_map(|t| t.x_exp.iter().enumerate())
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let sums = power_sums(nvars, constrained, max_m);
    // x_M substitute: p_M / M
    let bases: Vec<Laurent> = sums
        .iter()
        .enumerate()
        .map(|(i, p)| p.scale(&(BigRational::one() / rat(i as i64 + 1))))
        .collect();
    let mut pow_memo: HashMap<(usize, u32), Laurent> = HashMap::new();
    let mut out: BTreeMap<BigRational, Laurent> = BTreeMap::new();
    for (t, c) in &poly.terms {
        let mut prod = Laurent::one(nvars);
        for (i, &e) in t.x_exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let factor = pow_memo
                .entry((i, e))
                .or_insert_with(|| bases[i].pow(e as usize, nvars))
                .clone();
            prod = prod.mul(&factor);
        }
        let slot = out.entry(t.u_exp.clone()).or_insert_with(Laurent::zero);
        *slot = slot.add(&prod.scale(c));
    }
    out.retain(|_, v| !v.is_zero());
    out
}
