//! Sparse multivariate Laurent polynomials over Q(i, sqrt2).
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so iteration
//! order (lexicographic) is deterministic and serialization is stable.
//! Exponents are bounded i64; overflow is a hard error, never a wrap.

use crate::cyc::CycScalar;
use crate::ExactError;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A sparse Laurent polynomial with a fixed, ordered variable list.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<i64>, CycScalar>,
}

fn checked_add(a: &[i64], b: &[i64]) -> Result<Vec<i64>, ExactError> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(ExactError::ExponentOverflow))
        .collect()
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly {
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_with(vars: Arc<Vec<String>>) -> Self {
        LaurentPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: CycScalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, CycScalar::one())
    }

    /// The monomial c * prod(vars[k]^exp[k]).
    pub fn monomial(vars: &[&str], exp: &[i64], c: CycScalar) -> Self {
        assert_eq!(vars.len(), exp.len(), "exponent length mismatch");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exp.to_vec(), c);
        }
        p
    }

    /// The single variable `name` as a polynomial.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, ExactError> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))?;
        let mut exp = vec![0; vars.len()];
        exp[idx] = 1;
        Ok(Self::monomial(vars, &exp, CycScalar::one()))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn shared_vars(&self) -> Arc<Vec<String>> {
        Arc::clone(&self.vars)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> CycScalar {
        self.terms.get(exp).cloned().unwrap_or_else(CycScalar::zero)
    }

    fn same_vars(&self, other: &Self) -> Result<(), ExactError> {
        if self.vars == other.vars || *self.vars == *other.vars {
            Ok(())
        } else {
            Err(ExactError::VariableMismatch {
                left: self.vars.as_ref().clone(),
                right: other.vars.as_ref().clone(),
            })
        }
    }

    fn insert_add(&mut self, exp: Vec<i64>, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero_with(self.shared_vars());
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_vars(other)?;
        let mut out = Self::zero_with(self.shared_vars());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = checked_add(ea, eb)?;
                out.insert_add(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::zero_with(self.shared_vars());
        }
        let mut out = Self::zero_with(self.shared_vars());
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self, ExactError> {
        let mut acc = Self::one(&self.var_refs());
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Apply a monomial substitution: variable k maps to the Laurent
    /// monomial with exponent vector `images[k]`. This is the exponent
    /// lattice map used for Weyl-group actions on torus characters.
    pub fn substitute_monomials(&self, images: &[Vec<i64>]) -> Result<Self, ExactError> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let n = self.vars.len();
        let mut out = Self::zero_with(self.shared_vars());
        for (e, c) in &self.terms {
            let mut new_e = vec![0i64; n];
            for (k, ek) in e.iter().enumerate() {
                for (j, m) in images[k].iter().enumerate() {
                    let add = ek.checked_mul(*m).ok_or(ExactError::ExponentOverflow)?;
                    new_e[j] = new_e[j].checked_add(add).ok_or(ExactError::ExponentOverflow)?;
                }
            }
            out.insert_add(new_e, c.clone());
        }
        Ok(out)
    }

    /// Substitute exact scalar values for all variables. Negative
    /// exponents require the corresponding value to be invertible.
    pub fn eval(&self, values: &[CycScalar]) -> Result<CycScalar, ExactError> {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = CycScalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, ek) in e.iter().enumerate() {
                if *ek == 0 {
                    continue;
                }
                if *ek < 0 && values[k].is_zero() {
                    return Err(ExactError::DivisionByZero);
                }
                t = &t * &values[k].powi(*ek as i32);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Group terms by the exponent of one designated variable and strip it.
    /// Returns pairs (exponent, polynomial in the remaining variables).
    pub fn coefficients_in(&self, name: &str) -> Result<Vec<(i64, LaurentPoly)>, ExactError> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let rest_arc = Arc::new(rest);
        let mut groups: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[idx];
            let stripped: Vec<i64> = e
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, v)| *v)
                .collect();
            groups
                .entry(d)
                .or_insert_with(|| LaurentPoly::zero_with(Arc::clone(&rest_arc)))
                .insert_add(stripped, c.clone());
        }
        Ok(groups.into_iter().filter(|(_, p)| !p.is_zero()).collect())
    }

    /// Minimum exponent of `name` over all terms (None for the zero polynomial).
    pub fn min_degree_in(&self, name: &str) -> Result<Option<i64>, ExactError> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))?;
        Ok(self.terms.keys().map(|e| e[idx]).min())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (k, ek) in e.iter().enumerate() {
                if *ek != 0 {
                    write!(f, "*{}^{}", self.vars[k], ek)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    #[test]
    fn arithmetic_and_substitution() {
        let vars = ["x", "y"];
        let x = LaurentPoly::var(&vars, "x").unwrap();
        let y = LaurentPoly::var(&vars, "y").unwrap();
        let p = x.add(&y).unwrap();
        let q = p.mul(&p).unwrap();
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(q.coeff(&[1, 1]), CycScalar::from_i64(2));
        // substitute x -> x*y^-1, y -> y
        let s = q
            .substitute_monomials(&[vec![1, -1], vec![0, 1]])
            .unwrap();
        assert_eq!(s.coeff(&[2, -2]), CycScalar::from_i64(1));
        assert_eq!(s.coeff(&[1, 0]), CycScalar::from_i64(2));
    }

    #[test]
    fn eval_with_negative_exponent() {
        let vars = ["t"];
        let t = LaurentPoly::var(&vars, "t").unwrap();
        let inv = t.substitute_monomials(&[vec![-1]]).unwrap();
        let v = inv.eval(&[CycScalar::from_rat(Rat::new(2, 3))]).unwrap();
        assert_eq!(v, CycScalar::from_rat(Rat::new(3, 2)));
        assert!(inv.eval(&[CycScalar::zero()]).is_err());
    }

    #[test]
    fn mismatched_vars_error() {
        let a = LaurentPoly::one(&["x"]);
        let b = LaurentPoly::one(&["y"]);
        assert!(matches!(a.add(&b), Err(ExactError::VariableMismatch { .. })));
    }
}
