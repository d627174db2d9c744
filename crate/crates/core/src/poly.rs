//! Sparse multivariate polynomials over a generic scalar, with a fixed
//! graded-reverse-lexicographic term order.
//!
//! The same representation doubles as a truncated multivariate power series
//! (a polynomial plus a total-degree cap) for the Taylor recurrences.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{GaussianRational, Scalar};

/// Exponent vector of a monomial. Length equals the ring arity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, idx: usize) -> Self {
        let mut e = vec![0; arity];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Graded reverse lexicographic comparison. Returns `Greater` when `a > b`.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da = a.total_degree();
    let db = b.total_degree();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.0.len()).rev() {
        if a.0[i] != b.0[i] {
            // smaller exponent in the rightmost differing position wins
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

/// Key wrapper so that BTreeMap iterates monomials in ascending grevlex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GrevlexKey(pub Monomial);

impl Ord for GrevlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

impl PartialOrd for GrevlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<K: Scalar> {
    pub arity: usize,
    terms: BTreeMap<GrevlexKey, K>,
}

pub type QiPolynomial = Polynomial<GaussianRational>;
pub type CPolynomial = Polynomial<Complex64>;

impl<K: Scalar> Polynomial<K> {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: K) -> Self {
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial::constant(arity), c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, K::one())
    }

    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity, "variable index out of range");
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial::var(arity, idx), K::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    /// Terms in descending grevlex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter().rev().map(|(k, c)| (&k.0, c))
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms
            .get(&GrevlexKey(m.clone()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn constant_term(&self) -> K {
        self.coeff(&Monomial::constant(self.arity))
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        debug_assert_eq!(m.0.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let key = GrevlexKey(m);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|k| k.0.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back().map(|(k, c)| (&k.0, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Polynomial::zero(self.arity);
        if c.is_zero() {
            return out;
        }
        for (m, a) in self.terms() {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> Self {
        let mut out = Polynomial::zero(self.arity);
        if c.is_zero() {
            return out;
        }
        for (ma, ca) in self.terms() {
            out.add_term(ma.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in self.terms() {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[var] -= 1;
            out.add_term(me, c.clone() * K::from_int(e as i64));
        }
        out
    }

    /// Drop all terms of total degree above `cap` (series truncation).
    pub fn truncate(&self, cap: u32) -> Self {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in self.terms() {
            if m.total_degree() <= cap {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Product truncated at total degree `cap`.
    pub fn mul_trunc(&self, other: &Self, cap: u32) -> Self {
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in self.terms() {
            let da = ma.total_degree();
            if da > cap {
                continue;
            }
            for (mb, cb) in other.terms() {
                if da + mb.total_degree() > cap {
                    continue;
                }
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Evaluate at scalar arguments.
    pub fn eval(&self, args: &[K]) -> K {
        assert_eq!(args.len(), self.arity, "arity mismatch");
        let mut acc = K::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * args[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitute truncated series for the variables, truncating at `cap`.
    pub fn eval_series(&self, args: &[Polynomial<K>], cap: u32) -> Polynomial<K> {
        assert_eq!(args.len(), self.arity, "arity mismatch");
        let out_arity = args
            .first()
            .map(|s| s.arity)
            .unwrap_or(0);
        let mut acc = Polynomial::zero(out_arity);
        // cache powers per variable as needed
        let mut powers: Vec<Vec<Polynomial<K>>> = args
            .iter()
            .map(|s| vec![Polynomial::one(out_arity), s.clone()])
            .collect();
        for (m, c) in self.terms() {
            let mut t = Polynomial::constant(out_arity, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let last = powers[i].last().unwrap().clone();
                    powers[i].push(last.mul_trunc(&args[i], cap));
                }
                t = t.mul_trunc(&powers[i][e as usize], cap);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Change arity by appending fresh (unused) variables at the end.
    pub fn pad_arity(&self, new_arity: usize) -> Self {
        assert!(new_arity >= self.arity);
        let mut out = Polynomial::zero(new_arity);
        for (m, c) in self.terms() {
            let mut e = m.0.clone();
            e.resize(new_arity, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Map coefficients into another scalar type.
    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Polynomial<L> {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn to_complex_poly(&self) -> CPolynomial {
        self.map_coeffs(|c| c.to_complex())
    }

    pub fn eval_complex(&self, args: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms() {
            let mut t = c.to_complex();
            for (i, &e) in m.0.iter().enumerate() {
                t *= args[i].powu(e);
            }
            acc += t;
        }
        acc
    }
}

impl QiPolynomial {
    /// Norm per the format arithmetic: sum over terms of `|re| + |im|`
    /// (an exact upper bound for the sum of coefficient moduli), together
    /// with the floating value `sum of sqrt(re^2+im^2)`.
    pub fn norm(&self) -> (BigRational, f64) {
        let mut exact = BigRational::zero();
        let mut float = 0.0;
        for (_, c) in self.terms() {
            exact += c.abs_upper_exact();
            float += c.abs_f64();
        }
        (exact, float)
    }

    pub fn from_i64_terms(arity: usize, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Polynomial::zero(arity);
        for (exps, c) in terms {
            p.add_term(Monomial(exps.to_vec()), GaussianRational::from_ints(*c, 0));
        }
        p
    }
}

fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("x{}", i + 1));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, e));
        }
    }
    parts.join("*")
}

impl QiPolynomial {
    /// Canonical text form: terms in descending grevlex order,
    /// e.g. `3*x1^2*x2 - 1/2*i*x2`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            // pull out the sign when the coefficient is real or pure imaginary
            let (neg, mag) = if c.is_real() && c.re < BigRational::zero() {
                (true, -c.clone())
            } else if c.re.is_zero() && c.im < BigRational::zero() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = fmt_monomial(m, names);
            let mixed = !mag.re.is_zero() && !mag.im.is_zero();
            let coeff_str = if mixed {
                format!("({})", mag)
            } else {
                format!("{}", mag)
            };
            if mono.is_empty() {
                out.push_str(&coeff_str);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff_str);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for QiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// A polynomial vector field `sum_i p_i d/dx_i` acting on the ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation<K: Scalar = GaussianRational> {
    pub components: Vec<Polynomial<K>>,
}

impl<K: Scalar> Derivation<K> {
    pub fn new(components: Vec<Polynomial<K>>) -> Self {
        assert!(!components.is_empty());
        let arity = components[0].arity;
        assert!(
            components.iter().all(|p| p.arity == arity),
            "derivation components must share the ring arity"
        );
        assert_eq!(
            components.len(),
            arity,
            "one component per ring variable required"
        );
        Derivation { components }
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    /// Apply the derivation: `sum_i p_i * dP/dx_i`.
    pub fn apply(&self, p: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(p.arity, self.arity(), "arity mismatch");
        let mut out = Polynomial::zero(p.arity);
        for (i, comp) in self.components.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            let d = p.partial_derivative(i);
            if !d.is_zero() {
                out = out.add(&comp.mul(&d));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn poly_norm_examples() {
        // 2x + 3 -> exact 5, float 5.0
        let p = QiPolynomial::from_i64_terms(1, &[(&[1], 2), (&[0], 3)]);
        let (exact, float) = p.norm();
        assert_eq!(exact, BigRational::from_integer(5.into()));
        assert!((float - 5.0).abs() < 1e-15);

        // zero polynomial -> 0, 0.0
        let z = QiPolynomial::zero(1);
        let (e0, f0) = z.norm();
        assert!(e0.is_zero() && f0 == 0.0);

        // (1+i)x -> exact 2, float sqrt(2)
        let mut p = QiPolynomial::zero(1);
        p.add_term(Monomial::var(1, 0), GaussianRational::from_ints(1, 1));
        let (e, f) = p.norm();
        assert_eq!(e, BigRational::from_integer(2.into()));
        assert!((f - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn euler_operator_on_monomial() {
        // D = x d/dx applied to x^3 gives 3x^3
        let x = QiPolynomial::var(1, 0);
        let d = Derivation::new(vec![x.clone()]);
        let p = x.pow(3);
        assert_eq!(d.apply(&p), p.scale(&q(3)));
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let d = Derivation::new(vec![QiPolynomial::one(1)]);
        let c = QiPolynomial::constant(1, q(7));
        assert!(d.apply(&c).is_zero());
    }

    #[test]
    fn rotation_field_annihilates_radius() {
        // D = (y, -x) on (x, y); P = x^2 + y^2 -> 2xy - 2xy = 0
        let x = QiPolynomial::var(2, 0);
        let y = QiPolynomial::var(2, 1);
        let d = Derivation::new(vec![y.clone(), x.neg()]);
        let p = x.mul(&x).add(&y.mul(&y));
        assert!(d.apply(&p).is_zero());
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse_lex() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![0, 2]);
        let c = Monomial(vec![1, 1]);
        // same degree: rightmost smaller exponent is greater
        assert_eq!(grevlex(&a, &b), Ordering::Greater);
        assert_eq!(grevlex(&a, &c), Ordering::Greater);
        assert_eq!(grevlex(&c, &b), Ordering::Greater);
        let d = Monomial(vec![0, 1]);
        assert_eq!(grevlex(&a, &d), Ordering::Greater);
    }

    #[test]
    fn canonical_display() {
        // 3*x1^2*x2 - 1/2*i*x2
        let mut p = QiPolynomial::zero(2);
        p.add_term(Monomial(vec![2, 1]), q(3));
        p.add_term(
            Monomial(vec![0, 1]),
            GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into())),
        );
        assert_eq!(p.to_string(), "3*x1^2*x2 - 1/2*i*x2");
    }
}
