use std::collections::HashMap;

use serde::Serialize;
use serde_json::Value;

use crate::biset::{double_coset_reps, BisetElement, DoubleBurnsideRing, TwistedDiagonal};
use crate::error::{Error, Result};
use crate::group::{isomorphisms, FiniteGroup, Morphism, Subgroup};

/// `γ_α = [Δ(G)] − [Δ(H)] + [Δ(H, α, H)]` for one outer class of `H`.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusUnit {
    /// Images of the generators of `H` under a representative `α`.
    pub automorphism: Vec<usize>,
    pub element: Value,
    pub order: usize,
    pub orthogonal: bool,
    pub uniform: bool,
    pub in_lambda: bool,
    pub in_iota: bool,
    /// `γ_α° = γ_{α^{-1}}`.
    pub dual_is_inverse_twist: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub complement: Vec<usize>,
    pub complement_order: usize,
    pub automorphisms: usize,
    pub inner_automorphisms: usize,
    /// `|H\G/H| − 1`.
    pub k: usize,
    /// One unit per outer automorphism class of `H`.
    pub units: Vec<FrobeniusUnit>,
    /// `γ_α ·_G γ_β = γ_{αβ}` for all `α, β ∈ Aut(H)`.
    pub homomorphism: bool,
    /// `γ_α = γ_β` exactly when `α β^{-1}` is inner.
    pub injective: bool,
    /// `j(Out(H)) ∩ ι(B(G)^×) = 1`.
    pub meets_iota_trivially: bool,
}

/// `1 < H < G` with `H ∩ ^gH = 1` for every `g ∉ H`.
pub fn is_frobenius_complement(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.order() > 1
        && h.order() < g.order()
        && g.elements()
            .filter(|&x| !h.contains(x))
            .all(|x| h.intersection(&g.conjugate_subgroup(x, h)).is_trivial())
}

/// The smallest class representative that is a Frobenius complement.
pub fn find_frobenius_complement(g: &crate::group::GroupContext) -> Option<Subgroup> {
    g.lattice()
        .classes()
        .iter()
        .map(|c| &c.representative)
        .find(|h| is_frobenius_complement(g.group(), h))
        .cloned()
}

pub fn frobenius_units(ring: &DoubleBurnsideRing, h: &Subgroup) -> Result<FrobeniusReport> {
    let g = ring.group().group();
    if !is_frobenius_complement(g, h) {
        return Err(Error::NotFrobeniusComplement(format!(
            "subgroup {:?} meets one of its conjugates nontrivially or is not proper",
            h.members()
        )));
    }
    let table = ring.table();
    let gamma = |alpha: &Morphism| -> Result<BisetElement> {
        let whole = ring.identity();
        let diag = BisetElement::transitive(table.clone(), &TwistedDiagonal::diagonal(g, h))?;
        let twist = BisetElement::transitive(table.clone(), &TwistedDiagonal::new(alpha.clone()))?;
        whole.sub(&diag)?.add(&twist)
    };
    let auts = isomorphisms(g, h, g, h);
    let gammas: Vec<BisetElement> = auts.iter().map(gamma).collect::<Result<_>>()?;
    let gens = g.generators_of(h);
    let by_key: HashMap<Vec<usize>, usize> = auts.iter().enumerate().map(|(i, a)| (a.images(&gens), i)).collect();

    let mut homomorphism = true;
    for (a, ga) in auts.iter().zip(&gammas) {
        for (b, gb) in auts.iter().zip(&gammas) {
            let ab = by_key[&a.compose(b).images(&gens)];
            homomorphism &= ring.mul(ga, gb)? == gammas[ab];
        }
    }

    let inner: Vec<usize> = {
        let mut v: Vec<usize> = h
            .iter()
            .map(|x| by_key[&gens.iter().map(|&t| g.conj(x, t)).collect::<Vec<_>>()])
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let is_inner = |i: usize| inner.binary_search(&i).is_ok();
    let mut injective = true;
    for (i, a) in auts.iter().enumerate() {
        for (j, b) in auts.iter().enumerate() {
            let quotient = by_key[&a.compose(&b.inverse()).images(&gens)];
            injective &= (gammas[i] == gammas[j]) == is_inner(quotient);
        }
    }

    // one representative per outer class, in the order of `auts`
    let mut seen: Vec<&BisetElement> = Vec::new();
    let mut units = Vec::new();
    let mut meets_iota_trivially = true;
    for (i, a) in auts.iter().enumerate() {
        let element = &gammas[i];
        if seen.contains(&element) {
            continue;
        }
        seen.push(element);
        let inverse = by_key[&a.inverse().images(&gens)];
        let in_iota = ring.iota_preimage(element).is_some();
        meets_iota_trivially &= !in_iota || *element == ring.identity();
        units.push(FrobeniusUnit {
            automorphism: a.images(&gens),
            element: element.to_json(),
            order: order_in_ring(ring, element)?,
            orthogonal: ring.is_orthogonal(element)?,
            uniform: ring.uniform_class(element).is_some(),
            in_lambda: ring
                .rho(element)
                .iter()
                .enumerate()
                .all(|(c, &v)| v == i64::from(c == 0)),
            in_iota,
            dual_is_inverse_twist: ring.dual(element) == gammas[inverse],
        });
    }

    Ok(FrobeniusReport {
        complement: h.members().to_vec(),
        complement_order: h.order(),
        automorphisms: auts.len(),
        inner_automorphisms: inner.len(),
        k: double_coset_reps(g, h, h).len() - 1,
        units,
        homomorphism,
        injective,
        meets_iota_trivially,
    })
}

fn order_in_ring(ring: &DoubleBurnsideRing, x: &BisetElement) -> Result<usize> {
    let one = ring.identity();
    let mut power = x.clone();
    for k in 1..=64 {
        if power == one {
            return Ok(k);
        }
        power = ring.mul(&power, x)?;
    }
    Err(Error::Inconsistent("unit of order above 64".into()))
}
