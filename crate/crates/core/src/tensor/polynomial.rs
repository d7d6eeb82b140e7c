use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar};

/// Exponent multi-index `α`, one entry per coordinate.
pub type Monomial = Vec<u32>;

/// Monomials of total degree exactly `d` in `m` variables, lexicographically
/// decreasing in the first exponent.
pub fn monomials_of_degree(m: usize, d: u32) -> Vec<Monomial> {
    fn rec(m: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == m {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(m, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, d, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Monomials of total degree `≤ d`, by increasing degree.
pub fn monomials_up_to(m: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(m, k)).collect()
}

/// Polynomial in `x^1 … x^m` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    m: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{a}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        Self::monomial(m, vec![0; m], c)
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rational::one())
    }

    pub fn monomial(m: usize, exponent: Monomial, c: Rational) -> Self {
        assert_eq!(exponent.len(), m, "exponent length differs from the dimension");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Polynomial { m, terms }
    }

    /// The coordinate function `x^{i+1}` (0-based index `i`).
    pub fn var(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        Self::monomial(m, e, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(m: usize, terms: I) -> Self {
        let mut p = Self::zero(m);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            Some(d) => it.all(|x| x == d),
            None => true,
        }
    }

    pub fn add_term(&mut self, e: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled_assign(&mut self, other: &Self, c: &Rational) {
        debug_assert_eq!(self.m, other.m);
        if c.is_zero() {
            return;
        }
        for (e, x) in &other.terms {
            self.add_term(e.clone(), &x.mul_ref(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled_assign(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled_assign(other, &-Rational::one());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        Polynomial { m: self.m, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        let mut out = Self::zero(self.m);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    /// `x^e · self`
    pub fn mul_monomial(&self, e: &[u32]) -> Self {
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|(f, c)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    /// `∂_i`
    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero(self.m);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, &(c * Rational::from_i64(e[i] as i64)));
        }
        out
    }

    /// `∂^β`
    pub fn deriv_multi(&self, beta: &[u32]) -> Self {
        let mut out = self.clone();
        for (i, &b) in beta.iter().enumerate() {
            for _ in 0..b {
                out = out.deriv(i);
            }
        }
        out
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &a) in x.iter().zip(e) {
                for _ in 0..a {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(2, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 1), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = x.mul(&x).mul(&y).add(&y.scale(&rat(3, 1)));
        assert_eq!(p.deriv(0), x.mul(&y).scale(&rat(2, 1)));
        assert_eq!(p.deriv(1), x.mul(&x).add(&Polynomial::constant(2, rat(3, 1))));
        assert_eq!(p.deriv_multi(&[2, 1]), Polynomial::constant(2, rat(2, 1)));
        assert_eq!(p.eval(&[rat(2, 1), rat(-1, 1)]), rat(-7, 1));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.degree(), Some(3));
        assert!(!p.is_homogeneous());
    }
}
