use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use super::diagonal::TwistedDiagonal;
use super::element::BisetElement;
use super::table::TwistedClassTable;
use crate::error::{Error, Result};
use crate::group::{isomorphisms, FiniteGroup, GroupContext, Morphism, Subgroup};

/// The tensor product `B^Δ(G,H) × B^Δ(H,K) → B^Δ(G,K)` via the Mackey
/// formula. Products of basis elements are memoized.
#[derive(Debug)]
pub struct TensorProduct {
    left: Arc<TwistedClassTable>,
    right: Arc<TwistedClassTable>,
    target: Arc<TwistedClassTable>,
    cache: Vec<OnceLock<Vec<(usize, i64)>>>,
}

impl TensorProduct {
    pub fn new(
        left: Arc<TwistedClassTable>,
        right: Arc<TwistedClassTable>,
        target: Arc<TwistedClassTable>,
    ) -> Result<Self> {
        if !Arc::ptr_eq(left.right(), right.left()) {
            return Err(Error::Mismatch("middle groups differ".into()));
        }
        if !Arc::ptr_eq(left.left(), target.left()) || !Arc::ptr_eq(right.right(), target.right()) {
            return Err(Error::Mismatch("target table has the wrong groups".into()));
        }
        let cache = (0..left.len() * right.len()).map(|_| OnceLock::new()).collect();
        Ok(TensorProduct {
            left,
            right,
            target,
            cache,
        })
    }

    pub fn left(&self) -> &Arc<TwistedClassTable> {
        &self.left
    }

    pub fn right(&self) -> &Arc<TwistedClassTable> {
        &self.right
    }

    pub fn target(&self) -> &Arc<TwistedClassTable> {
        &self.target
    }

    /// `[(G×H)/Δ_i] ·_H [(H×K)/Δ_j]` as sparse `(class, coefficient)`
    /// pairs, one summand `L * ^{(h,1)}M` per double coset `p2(L) h p1(M)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, i64)] {
        self.cache[i * self.right.len() + j].get_or_init(|| {
            let h = self.left.right().group();
            let l = &self.left.class(i).diagonal;
            let m = &self.right.class(j).diagonal;
            let mut counts = vec![0i64; self.target.len()];
            for rep in double_coset_reps(h, l.right(), m.left()) {
                let summand = l.star(&m.conjugate_left(h, rep));
                let c = self
                    .target
                    .class_of(&summand)
                    .expect("star of twisted diagonals is twisted diagonal");
                counts[c] += 1;
            }
            counts.into_iter().enumerate().filter(|&(_, c)| c != 0).collect()
        })
    }

    pub fn multiply(&self, a: &BisetElement, b: &BisetElement) -> Result<BisetElement> {
        if !Arc::ptr_eq(a.table(), &self.left) || !Arc::ptr_eq(b.table(), &self.right) {
            return Err(Error::Mismatch("factors do not match the tensor product".into()));
        }
        let mut coeffs = vec![0i64; self.target.len()];
        for i in a.support() {
            for j in b.support() {
                let scale = a.coeff(i) * b.coeff(j);
                for &(c, k) in self.basis_product(i, j) {
                    coeffs[c] += scale * k;
                }
            }
        }
        BisetElement::new(self.target.clone(), coeffs)
    }

    /// Every mark of `a ·_H b`, computed from the marks of the factors
    /// alone (no biset product is formed).
    pub fn tensor_marks(&self, a: &BisetElement, b: &BisetElement) -> Result<Vec<i64>> {
        (0..self.target.len())
            .map(|k| tensor_mark(a, b, &self.target.class(k).diagonal))
            .collect()
    }
}

/// Representatives of the double cosets `A \ H / B`, each the smallest
/// element of its double coset.
pub fn double_coset_reps(h: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; h.order()];
    let mut reps = Vec::new();
    for x in h.elements() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for s in a.iter() {
            let sx = h.mul(s, x);
            for t in b.iter() {
                seen[h.mul(sx, t)] = true;
            }
        }
    }
    reps
}

/// A triple `(σ, S, τ)` with `σ: S → R`, `τ: T → S` and `σ ∘ τ = ρ`.
#[derive(Clone, Debug)]
pub struct Triple {
    pub sigma: Morphism,
    pub tau: Morphism,
    /// `|C_H(S)|`, the order of the stabilizer of the triple in `H`.
    pub centralizer_order: usize,
}

impl Triple {
    pub fn middle(&self) -> &Subgroup {
        self.sigma.domain()
    }
}

/// Representatives of the `H`-orbits on the triples `(σ, S, τ)` for
/// `ρ: T → R`, under `^h(σ, S, τ) = (σ c_{h^{-1}}, ^hS, c_h τ)`.
#[derive(Clone, Debug)]
pub struct TripleOrbits {
    pub triples: Vec<Triple>,
}

impl TripleOrbits {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

/// Each orbit meets a class representative `S` of `H`; on that `S` the
/// stabilizer `N_H(S)` acts on the `σ` by precomposition with `c_{n^{-1}}`.
pub fn triple_orbits(g: &FiniteGroup, h: &GroupContext, rho: &Morphism) -> TripleOrbits {
    let r = rho.codomain();
    let hg = h.group();
    let mut triples = Vec::new();
    for class in h.lattice().classes().iter().filter(|c| c.order() == r.order()) {
        let s = &class.representative;
        let gens = &class.generators;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for sigma in isomorphisms(hg, s, g, r) {
            if seen.contains(&sigma.images(gens)) {
                continue;
            }
            for n in class.normalizer.iter() {
                let n_inv = hg.inv(n);
                seen.insert(gens.iter().map(|&t| sigma.apply(hg.conj(n_inv, t))).collect());
            }
            let tau = sigma.inverse().compose(rho);
            triples.push(Triple {
                sigma,
                tau,
                centralizer_order: class.centralizer.order(),
            });
        }
    }
    TripleOrbits { triples }
}

/// `Φ_{Δ(R,ρ,T)}(a ·_H b)` as
/// `Σ |C_H(S)|^{-1} Φ_{Δ(R,σ,S)}(a) Φ_{Δ(S,τ,T)}(b)` over the triple orbits.
///
/// The terms are summed over the common denominator `|H|`; the total must
/// divide exactly.
pub fn tensor_mark(a: &BisetElement, b: &BisetElement, delta: &TwistedDiagonal) -> Result<i64> {
    let (lt, rt) = (a.table(), b.table());
    if !Arc::ptr_eq(lt.right(), rt.left()) {
        return Err(Error::Mismatch("middle groups differ".into()));
    }
    let h = lt.right();
    let orbits = triple_orbits(lt.left().group(), h, delta.alpha());
    let mut numerator = 0i64;
    for triple in &orbits.triples {
        let left = a.mark(&TwistedDiagonal::new(triple.sigma.clone()))?;
        let right = b.mark(&TwistedDiagonal::new(triple.tau.clone()))?;
        numerator += (h.order() / triple.centralizer_order) as i64 * left * right;
    }
    let denominator = h.order() as i64;
    if numerator % denominator != 0 {
        return Err(Error::Inconsistent(format!(
            "mark sum {numerator} is not divisible by |H| = {denominator}"
        )));
    }
    Ok(numerator / denominator)
}
