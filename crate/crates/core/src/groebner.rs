//! Buchberger's algorithm with sugar-ordered pair selection, full
//! auto-reduction, and normal forms that track cofactors.
//!
//! The coefficient field is exact (instantiated at Q(i)); a configurable
//! total-degree cap turns potential blowup into a diagnostic error.

use std::collections::BinaryHeap;

use num_traits::One;

use crate::error::GroebnerError;
use crate::poly::{grevlex, Monomial, Polynomial};
use crate::scalar::Scalar;

pub const DEFAULT_DEGREE_CAP: u32 = 40;

/// An auto-reduced Groebner basis in the fixed grevlex order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<K: Scalar> {
    pub arity: usize,
    generators: Vec<Polynomial<K>>,
}

/// Result of a reduction: `input = sum cofactor_k * generator_k + remainder`.
#[derive(Clone, Debug)]
pub struct NormalForm<K: Scalar> {
    pub remainder: Polynomial<K>,
    pub cofactors: Vec<Polynomial<K>>,
}

/// Full reduction of `p` against `basis`, tracking one cofactor per basis
/// element. Every term of the remainder is irreducible.
pub fn reduce_full<K: Scalar>(p: &Polynomial<K>, basis: &[Polynomial<K>]) -> NormalForm<K> {
    let arity = p.arity;
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(arity);
    let mut cofactors: Vec<Polynomial<K>> = basis.iter().map(|_| Polynomial::zero(arity)).collect();
    'outer: while let Some((lm, lc)) = work.leading_term() {
        let lm = lm.clone();
        let lc = lc.clone();
        for (k, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading_term().expect("nonzero basis element");
            if gm.divides(&lm) {
                let qm = gm.div(&lm);
                let qc = lc.clone() / gc.clone();
                work = work.sub(&g.mul_monomial(&qm, &qc));
                let mut cof = Polynomial::zero(arity);
                cof.add_term(qm, qc);
                cofactors[k] = cofactors[k].add(&cof);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        let mut t = Polynomial::zero(arity);
        t.add_term(lm.clone(), lc.clone());
        remainder = remainder.add(&t);
        work = work.sub(&t);
    }
    NormalForm {
        remainder,
        cofactors,
    }
}

#[derive(PartialEq, Eq)]
struct Pair {
    sugar: u32,
    lcm_deg: u32,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; invert so that the smallest sugar pops first
        other
            .sugar
            .cmp(&self.sugar)
            .then(other.lcm_deg.cmp(&self.lcm_deg))
            .then(other.i.cmp(&self.i))
            .then(other.j.cmp(&self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn s_polynomial<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&fm.div(&l), &(K::one() / fc.clone()));
    let b = g.mul_monomial(&gm.div(&l), &(K::one() / gc.clone()));
    a.sub(&b)
}

fn make_monic<K: Scalar>(p: &Polynomial<K>) -> Polynomial<K> {
    match p.leading_term() {
        Some((_, c)) => p.scale(&(K::one() / c.clone())),
        None => p.clone(),
    }
}

impl<K: Scalar> GroebnerBasis<K> {
    /// Compute an auto-reduced basis for the ideal generated by `gens`.
    pub fn new(gens: &[Polynomial<K>], degree_cap: u32) -> Result<Self, GroebnerError> {
        assert!(K::EXACT, "Groebner bases require an exact coefficient field");
        let arity = gens.first().map(|p| p.arity).unwrap_or(0);
        let mut basis: Vec<Polynomial<K>> = Vec::new();
        for g in gens {
            assert_eq!(g.arity, arity, "arity mismatch");
            if !g.is_zero() {
                basis.push(make_monic(g));
            }
        }
        if basis.is_empty() {
            return Ok(GroebnerBasis {
                arity,
                generators: Vec::new(),
            });
        }

        let sugar = |f: &Polynomial<K>, g: &Polynomial<K>| -> (u32, u32) {
            let fm = f.leading_term().unwrap().0;
            let gm = g.leading_term().unwrap().0;
            let l = fm.lcm(gm);
            let ld = l.total_degree();
            // sugar of the S-polynomial: deg of the multiplied inputs
            let s = (f.total_degree() + ld - fm.total_degree())
                .max(g.total_degree() + ld - gm.total_degree());
            (s, ld)
        };

        let mut pairs = BinaryHeap::new();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let (s, ld) = sugar(&basis[i], &basis[j]);
                pairs.push(Pair {
                    sugar: s,
                    lcm_deg: ld,
                    i,
                    j,
                });
            }
        }

        let mut iterations: u64 = 0;
        while let Some(pair) = pairs.pop() {
            iterations += 1;
            if iterations > 200_000 {
                return Err(GroebnerError::IterationCap);
            }
            let f = &basis[pair.i];
            let g = &basis[pair.j];
            let fm = f.leading_term().unwrap().0;
            let gm = g.leading_term().unwrap().0;
            if fm.coprime(gm) {
                continue; // Buchberger's first criterion
            }
            let s = s_polynomial(f, g);
            let nf = reduce_full(&s, &basis).remainder;
            if nf.is_zero() {
                continue;
            }
            if nf.total_degree() > degree_cap {
                return Err(GroebnerError::DegreeCap {
                    cap: degree_cap,
                    reached: nf.total_degree(),
                });
            }
            let nf = make_monic(&nf);
            let new_idx = basis.len();
            for i in 0..new_idx {
                let (s, ld) = sugar(&basis[i], &nf);
                pairs.push(Pair {
                    sugar: s,
                    lcm_deg: ld,
                    i,
                    j: new_idx,
                });
            }
            basis.push(nf);
        }

        // auto-reduce: drop generators whose leading monomial is divisible
        // by another surviving generator's leading monomial
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            let lm_i = basis[i].leading_term().unwrap().0.clone();
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let lm_j = basis[j].leading_term().unwrap().0;
                if lm_j.divides(&lm_i) && (*lm_j != lm_i || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let reduced: Vec<Polynomial<K>> = basis
            .iter()
            .zip(&keep)
            .filter(|(_, k)| **k)
            .map(|(g, _)| g.clone())
            .collect();
        // second pass: tail-reduce each generator against the others
        let mut final_basis = Vec::with_capacity(reduced.len());
        for i in 0..reduced.len() {
            let others: Vec<Polynomial<K>> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = reduce_full(&reduced[i], &others).remainder;
            if !nf.is_zero() {
                final_basis.push(make_monic(&nf));
            }
        }
        final_basis.sort_by(|a, b| {
            grevlex(
                a.leading_term().unwrap().0,
                b.leading_term().unwrap().0,
            )
        });
        Ok(GroebnerBasis {
            arity,
            generators: final_basis,
        })
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    /// Normal form against this basis with cofactors per basis generator.
    pub fn normal_form(&self, p: &Polynomial<K>) -> NormalForm<K> {
        reduce_full(p, &self.generators)
    }

    /// Ideal membership test.
    pub fn contains(&self, p: &Polynomial<K>) -> bool {
        self.normal_form(p).remainder.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QiPolynomial;
    use crate::scalar::GaussianRational;

    fn x(arity: usize, i: usize) -> QiPolynomial {
        QiPolynomial::var(arity, i)
    }

    fn c(arity: usize, n: i64) -> QiPolynomial {
        QiPolynomial::constant(arity, GaussianRational::from_ints(n, 0))
    }

    #[test]
    fn normal_form_x_squared_mod_x() {
        let gb = GroebnerBasis::new(&[x(1, 0)], DEFAULT_DEGREE_CAP).unwrap();
        let p = x(1, 0).pow(2);
        let nf = gb.normal_form(&p);
        assert!(nf.remainder.is_zero());
        assert_eq!(nf.cofactors[0], x(1, 0));
        // reconstruction
        let rebuilt = nf.cofactors[0].mul(gb.generators().first().unwrap());
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn normal_form_x_plus_one_mod_x() {
        let gb = GroebnerBasis::new(&[x(1, 0)], DEFAULT_DEGREE_CAP).unwrap();
        let p = x(1, 0).add(&c(1, 1));
        let nf = gb.normal_form(&p);
        assert_eq!(nf.remainder, c(1, 1));
    }

    #[test]
    fn membership_with_cofactor_x2y_plus_y() {
        // x^2 y + y reduces to zero against {x^2 + 1} with cofactor y
        let gen = x(2, 0).pow(2).add(&c(2, 1));
        let gb = GroebnerBasis::new(&[gen.clone()], DEFAULT_DEGREE_CAP).unwrap();
        let p = x(2, 0).pow(2).mul(&x(2, 1)).add(&x(2, 1));
        let nf = gb.normal_form(&p);
        assert!(nf.remainder.is_zero());
        assert_eq!(nf.cofactors[0], x(2, 1));
    }

    #[test]
    fn circle_line_ideal() {
        // <x^2 + y^2 - 1, x - y>: GB should expose 2y^2 - 1 (up to scaling)
        let f = x(2, 0).pow(2).add(&x(2, 1).pow(2)).sub(&c(2, 1));
        let g = x(2, 0).sub(&x(2, 1));
        let gb = GroebnerBasis::new(&[f.clone(), g.clone()], DEFAULT_DEGREE_CAP).unwrap();
        // y^2 - 1/2 must be in the ideal
        let target = x(2, 1)
            .pow(2)
            .sub(&QiPolynomial::constant(2, GaussianRational::from_ratio(1, 2)));
        assert!(gb.contains(&target));
        assert!(!gb.contains(&x(2, 1)));
        // reconstruction identity on a member
        let nf = gb.normal_form(&f);
        let mut rebuilt = nf.remainder.clone();
        for (cof, gen) in nf.cofactors.iter().zip(gb.generators()) {
            rebuilt = rebuilt.add(&cof.mul(gen));
        }
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn idempotence_of_basis_computation() {
        let f = x(2, 0).pow(3).sub(&x(2, 1));
        let g = x(2, 0).mul(&x(2, 1)).sub(&c(2, 1));
        let gb = GroebnerBasis::new(&[f, g], DEFAULT_DEGREE_CAP).unwrap();
        let gb2 = GroebnerBasis::new(gb.generators(), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(gb, gb2);
    }
}
