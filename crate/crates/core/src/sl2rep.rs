//! sl2 operators on section spaces and invariant bases.
//!
//! `E = sum_i beta_i d/d(alpha_i)` raises the torus weight by 2 and `F = sum_i
//! alpha_i d/d(beta_i)` lowers it; with this orientation `beta` is the
//! highest-weight vector of `H^0(P^1, O(1))` and `[E, F]` is the weight
//! operator. The unipotent group `U` is connected and one-dimensional, so a
//! section is `U`-invariant exactly when `E` kills it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::exactlin::{kernel_basis, RatMatrix, Rational};
use crate::polyring::{weight_monomials, Monomial, Multidegree, Polynomial};

/// Applies `E = sum_i beta_i d/d(alpha_i)`.
pub fn raising(p: &Polynomial) -> Polynomial {
    let m = p.multidegree().clone();
    let degs = m.as_slice().to_vec();
    let mut terms = Vec::new();
    for (q, c) in p.terms() {
        for (i, &qi) in q.q().iter().enumerate() {
            let alpha_exp = degs[i] - qi;
            if alpha_exp > 0 {
                let mut q2 = q.q().to_vec();
                q2[i] += 1;
                terms.push((Monomial::new(q2), c * Rational::from_integer(alpha_exp.into())));
            }
        }
    }
    Polynomial::from_terms(m, terms).expect("raised monomials conform")
}

/// Applies `F = sum_i alpha_i d/d(beta_i)`.
pub fn lowering(p: &Polynomial) -> Polynomial {
    let m = p.multidegree().clone();
    let mut terms = Vec::new();
    for (q, c) in p.terms() {
        for (i, &qi) in q.q().iter().enumerate() {
            if qi > 0 {
                let mut q2 = q.q().to_vec();
                q2[i] -= 1;
                terms.push((Monomial::new(q2), c * Rational::from_integer(qi.into())));
            }
        }
    }
    Polynomial::from_terms(m, terms).expect("lowered monomials conform")
}

/// Scales every monomial by its torus weight.
pub fn weight_operator(p: &Polynomial) -> Polynomial {
    let m = p.multidegree().clone();
    let terms: Vec<_> = p
        .terms()
        .map(|(q, c)| (q.clone(), c * Rational::from_integer(q.weight(&m).into())))
        .collect();
    Polynomial::from_terms(m, terms).expect("same monomials")
}

/// Coefficients of `prod_i (1 + z + ... + z^{m_i})`, by direct convolution.
/// Entry `k` counts monomials with `sum q_i = k`.
pub fn weight_profile(m: &Multidegree) -> Vec<u64> {
    let mut acc = vec![1u64];
    for &mi in m.as_slice() {
        let mut next = vec![0u64; acc.len() + mi as usize];
        for (k, &c) in acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for slot in &mut next[k..=k + mi as usize] {
                *slot += c;
            }
        }
        acc = next;
    }
    acc
}

/// Dimension of the weight-`w` space of sections of multidegree `m`.
pub fn weight_dim(m: &Multidegree, w: i64) -> u64 {
    let total = m.total() as i64;
    if (w + total) % 2 != 0 || w.abs() > total {
        return 0;
    }
    weight_profile(m)[((w + total) / 2) as usize]
}

/// Multiplicity of the irreducible of highest weight `tau`, i.e. the
/// dimension of the `U`-invariants of weight `tau`, by character counting.
pub fn multiplicity(m: &Multidegree, tau: i64) -> u64 {
    if tau < 0 || (tau - m.total() as i64) % 2 != 0 {
        return 0;
    }
    weight_dim(m, tau) - weight_dim(m, tau + 2)
}

/// The monomials of one weight space, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBlock {
    pub multidegree: Multidegree,
    pub weight: i64,
    pub monomials: Vec<Monomial>,
}

impl WeightBlock {
    pub fn new(m: &Multidegree, weight: i64) -> Self {
        WeightBlock {
            multidegree: m.clone(),
            weight,
            monomials: weight_monomials(m, weight),
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Matrix of `E` from the weight-`tau` block to the weight-`tau + 2` block.
pub fn raising_matrix(m: &Multidegree, tau: i64) -> (WeightBlock, WeightBlock, RatMatrix) {
    let source = WeightBlock::new(m, tau);
    let target = WeightBlock::new(m, tau + 2);
    let row_of: HashMap<&Monomial, usize> = target.monomials.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let mut mat = RatMatrix::zeros(target.len(), source.len());
    let degs = m.as_slice();
    for (j, q) in source.monomials.iter().enumerate() {
        for (i, &qi) in q.q().iter().enumerate() {
            let alpha_exp = degs[i] - qi;
            if alpha_exp > 0 {
                let mut q2 = q.q().to_vec();
                q2[i] += 1;
                let row = row_of[&Monomial::new(q2)];
                let cur = mat.get(row, j) + Rational::from_integer(alpha_exp.into());
                mat.set(row, j, cur);
            }
        }
    }
    (source, target, mat)
}

/// Basis of the `U`-invariants of multidegree `m` and weight `tau`: the
/// kernel of `E` on the weight-`tau` block, in the deterministic kernel
/// convention of [`kernel_basis`].
pub fn u_inv_basis(m: &Multidegree, tau: i64) -> Vec<Polynomial> {
    let (source, _, mat) = raising_matrix(m, tau);
    if source.is_empty() {
        return Vec::new();
    }
    kernel_basis(&mat)
        .into_iter()
        .map(|v| Polynomial::from_coefficients(m.clone(), &source.monomials, &v).expect("kernel vector matches block"))
        .collect()
}

/// `G = SL(2)` invariants: weight-zero `U`-invariants.
pub fn g_inv_basis(m: &Multidegree) -> Vec<Polynomial> {
    let basis = u_inv_basis(m, 0);
    debug_assert!(basis.iter().all(|p| lowering(p).is_zero()));
    basis
}

/// Supplier of `U`-invariant bases. Implementations must return exactly
/// what [`u_inv_basis`] returns; they may only change where it comes from.
pub trait BasisSource {
    fn u_inv_basis(&self, m: &Multidegree, tau: i64) -> Result<Vec<Polynomial>>;

    fn g_inv_basis(&self, m: &Multidegree) -> Result<Vec<Polynomial>> {
        self.u_inv_basis(m, 0)
    }
}

/// Computes every basis from scratch.
#[derive(Clone, Copy, Debug, Default)]
pub struct Direct;

impl BasisSource for Direct {
    fn u_inv_basis(&self, m: &Multidegree, tau: i64) -> Result<Vec<Polynomial>> {
        Ok(u_inv_basis(m, tau))
    }
}

type BasisTable = HashMap<(Multidegree, i64), Arc<Vec<Polynomial>>>;

/// In-memory memo over another source.
#[derive(Default)]
pub struct Memo<S = Direct> {
    inner: S,
    table: Mutex<BasisTable>,
}

impl<S: BasisSource> Memo<S> {
    pub fn new(inner: S) -> Self {
        Memo {
            inner,
            table: Mutex::new(HashMap::new()),
        }
    }
}

impl<S: BasisSource> BasisSource for Memo<S> {
    fn u_inv_basis(&self, m: &Multidegree, tau: i64) -> Result<Vec<Polynomial>> {
        let key = (m.clone(), tau);
        if let Some(hit) = self.table.lock().expect("memo lock").get(&key) {
            return Ok(hit.as_ref().clone());
        }
        let basis = self.inner.u_inv_basis(m, tau)?;
        self.table
            .lock()
            .expect("memo lock")
            .insert(key, Arc::new(basis.clone()));
        Ok(basis)
    }
}

impl<S: BasisSource + ?Sized> BasisSource for &S {
    fn u_inv_basis(&self, m: &Multidegree, tau: i64) -> Result<Vec<Polynomial>> {
        (**self).u_inv_basis(m, tau)
    }
}

/// True when `p` is killed by `E`.
pub fn is_u_invariant(p: &Polynomial) -> bool {
    raising(p).is_zero()
}
