//! Degree-D exponent vectors in a fixed number of variables, enumerated in
//! the canonical order every other module indexes columns by: descending
//! lexicographic on (a_0, ..., a_N).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `binomial` clamped to u64; panics on overflow (desk-scale guard).
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    u64::try_from(&binomial(n, k)).expect("binomial exceeds u64")
}

/// Number of monomials of degree `degree` in `num_vars` variables.
pub fn monomial_count(num_vars: usize, degree: u32) -> BigUint {
    if num_vars == 0 {
        return BigUint::ZERO;
    }
    let n = num_vars as u64 - 1;
    binomial(degree as u64 + n, n)
}

/// Ordered index of all exponent vectors a in N^{num_vars} with
/// sum(a) = degree, descending lexicographic. Columns of every coefficient
/// matrix in this crate follow this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIndex {
    num_vars: usize,
    degree: u32,
    list: Vec<Vec<u32>>,
    position: BTreeMap<Vec<u32>, usize>,
}

impl MonomialIndex {
    /// Enumerate all monomials of the given degree. `num_vars` is N+1 for
    /// the projective space P^N.
    pub fn new(num_vars: usize, degree: u32) -> Self {
        assert!(num_vars >= 1, "need at least one variable");
        let mut list = Vec::new();
        let mut current = vec![0u32; num_vars];
        fill(&mut list, &mut current, 0, degree);
        let position = list
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        Self {
            num_vars,
            degree,
            list,
            position,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Projective dimension N of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.num_vars - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn exponents(&self, i: usize) -> &[u32] {
        &self.list[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.list.iter().map(|v| v.as_slice())
    }

    /// Column of the given exponent vector, if it has the right degree.
    pub fn position(&self, a: &[u32]) -> Option<usize> {
        self.position.get(a).copied()
    }
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::ZERO);
        assert_eq!(binomial_u64(52, 5), 2_598_960);
    }

    #[test]
    fn p1_degree_two() {
        let idx = MonomialIndex::new(2, 2);
        let got: Vec<&[u32]> = idx.iter().collect();
        assert_eq!(got, vec![&[2, 0][..], &[1, 1], &[0, 2]]);
    }

    #[test]
    fn p2_degree_two() {
        let idx = MonomialIndex::new(3, 2);
        assert_eq!(idx.len(), 6);
        assert_eq!(idx.exponents(0), &[2, 0, 0]);
        assert_eq!(idx.exponents(5), &[0, 0, 2]);
    }

    #[test]
    fn single_variable() {
        let idx = MonomialIndex::new(1, 5);
        assert_eq!(idx.len(), 1);
        assert_eq!(idx.exponents(0), &[5]);
    }

    #[test]
    fn sorted_and_complete() {
        for num_vars in 1..=4usize {
            for d in 0..=5u32 {
                let idx = MonomialIndex::new(num_vars, d);
                assert_eq!(
                    BigUint::from(idx.len()),
                    monomial_count(num_vars, d),
                    "count for {num_vars} vars degree {d}"
                );
                for w in idx.list.windows(2) {
                    assert!(w[0] > w[1], "strictly descending");
                }
                for a in idx.iter() {
                    assert_eq!(a.iter().sum::<u32>(), d);
                }
            }
        }
    }

    #[test]
    fn position_lookup() {
        let idx = MonomialIndex::new(3, 4);
        for i in 0..idx.len() {
            assert_eq!(idx.position(idx.exponents(i)), Some(i));
        }
        assert_eq!(idx.position(&[4, 1, 0]), None);
    }
}
