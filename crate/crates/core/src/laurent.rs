//! Sparse Laurent polynomials in finitely many commuting variables, with
//! exact rational coefficients. Support for expanding power-sum
//! polynomials into formal-exponential monomials.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

/// A sparse Laurent polynomial; every exponent vector has the same length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one(nvars: usize) -> Self {
        Laurent::monomial(vec![0; nvars], BigRational::from_integer(1.into()))
    }

    pub fn monomial(exps: Vec<i64>, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: usize, nvars: usize) -> Laurent {
        let mut out = Laurent::one(nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// The power sums `p_m = Σ_I u_I^m` for `m = 1..=max_m`, indexed `[m-1]`.
///
/// With `constrained` set, a hidden extra variable `u_{n+1} = (u_1···u_n)^{-1}`
/// participates in the sum, so `p_m` picks up the monomial `(u_1···u_n)^{-m}`.
pub fn power_sums(nvars: usize, constrained: bool, max_m: usize) -> Vec<Laurent> {
    (1..=max_m as i64)
        .map(|m| {
            let mut p = Laurent::zero();
            for i in 0..nvars {
                let mut exps = vec![0i64; nvars];
                exps[i] = m;
                p.add_term(exps, &BigRational::from_integer(1.into()));
            }
            if constrained {
                p.add_term(vec![-m; nvars], &BigRational::from_integer(1.into()));
            }
            p
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::rat;

    #[test]
    fn arithmetic() {
        let x = Laurent::monomial(vec![1, 0], rat(1));
        let y = Laurent::monomial(vec![0, 1], rat(1));
        let s = x.add(&y);
        let sq = s.mul(&s);
        // (x + y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.terms().count(), 3);
        let recombined = x
            .mul(&x)
            .add(&y.mul(&y))
            .add(&x.mul(&y).scale(&rat(2)));
        assert_eq!(sq, recombined);
    }

    #[test]
    fn negative_exponents() {
        let inv = Laurent::monomial(vec![-1], rat(1));
        let x = Laurent::monomial(vec![1], rat(1));
        let prod = inv.mul(&x);
        assert_eq!(prod, Laurent::one(1));
    }

    #[test]
    fn constrained_power_sum() {
        // two variables plus the hidden third: p_1 = u1 + u2 + 1/(u1 u2)
        let p = power_sums(2, true, 1);
        assert_eq!(p[0].terms().count(), 3);
        assert!(p[0]
            .terms()
            .any(|(e, _)| e == &vec![-1, -1]));
    }
}
