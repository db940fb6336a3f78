//! Orthogonal units `γ ·_H γ° = [G]` of `B^Δ(G, H)`: complete search,
//! uniformity, the group structure for `G = H`, Frobenius units, and a
//! consolidated verification report.

mod frobenius;
mod report;
mod structure;

pub use frobenius::{find_frobenius_complement, frobenius_units, FrobeniusReport, FrobeniusUnit};
pub use report::{non_isomorphic_partner, theorem_report, Check, TheoremReport};
pub use structure::{structure, UnitGroupStructure};

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::biset::{BisetElement, BisetPair, TwistedClassTable};
use crate::error::{Error, Result};

/// The branch taken for one subgroup class `[R]` of `G`: the twisted class
/// carrying the nonzero mark and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Choice {
    pub subgroup_class: usize,
    pub twisted_class: usize,
    pub sign: i64,
}

#[derive(Clone, Debug)]
pub struct OrthogonalUnit {
    pub element: BisetElement,
    /// One choice per subgroup class of `G`, largest class first.
    pub certificate: Vec<Choice>,
    /// Full twisted class whose isomorphism witnesses uniformity.
    pub uniform: Option<usize>,
    /// The full twisted class `Δ(G, φ, H)` with nonzero coefficient.
    pub principal: usize,
    /// Outer class of the principal isomorphism when `G = H`.
    pub principal_outer: Option<usize>,
    /// Coefficient at the principal class, `±1`.
    pub epsilon: i64,
}

impl OrthogonalUnit {
    pub fn is_uniform(&self) -> bool {
        self.uniform.is_some()
    }

    pub fn to_json(&self) -> Value {
        let table = self.element.table();
        json!({
            "element": self.element.to_json(),
            "certificate": self.certificate.iter().map(|c| json!({
                "subgroup_class": c.subgroup_class,
                "twisted_class": table.label(c.twisted_class),
                "sign": c.sign,
            })).collect::<Vec<_>>(),
            "uniform": self.uniform.is_some(),
            "principal": table.label(self.principal),
            "principal_outer": self.principal_outer,
            "epsilon": self.epsilon,
        })
    }
}

/// One level of the search: a subgroup class of `G` and the twisted
/// classes with first component in it.
struct Level {
    subgroup_class: usize,
    centralizer: i64,
    /// All twisted classes over this subgroup class, highest index first.
    block: Vec<usize>,
    /// Those that may carry the nonzero mark.
    candidates: Vec<usize>,
}

struct Search<'a> {
    table: &'a TwistedClassTable,
    levels: Vec<Level>,
}

impl Search<'_> {
    /// Assigns the marks of one level and solves its coefficients; `None`
    /// when a coefficient is not integral.
    fn apply(&self, level: usize, candidate: usize, sign: i64, coeffs: &mut [i64]) -> Option<()> {
        let l = &self.levels[level];
        for &k in &l.block {
            let mark = if k == candidate { sign * l.centralizer } else { 0 };
            coeffs[k] = self.table.solve_one(k, mark, coeffs).ok()?;
        }
        Some(())
    }

    fn branches(&self, level: usize) -> Vec<(usize, i64)> {
        self.levels[level]
            .candidates
            .iter()
            .flat_map(|&k| [(k, 1), (k, -1)])
            .collect()
    }

    fn descend(
        &self,
        level: usize,
        coeffs: &mut Vec<i64>,
        path: &mut Vec<Choice>,
        out: &mut Vec<(Vec<i64>, Vec<Choice>)>,
    ) {
        if level == self.levels.len() {
            out.push((coeffs.clone(), path.clone()));
            return;
        }
        for (k, sign) in self.branches(level) {
            if self.apply(level, k, sign, coeffs).is_some() {
                path.push(Choice {
                    subgroup_class: self.levels[level].subgroup_class,
                    twisted_class: k,
                    sign,
                });
                self.descend(level + 1, coeffs, path, out);
                path.pop();
            }
        }
        for &k in &self.levels[level].block {
            coeffs[k] = 0;
        }
    }
}

/// Every orthogonal unit of `B^Δ(G, H)`, sorted by coefficient vector.
///
/// Subgroup classes `[R]` of `G` are processed from the largest down. For
/// each, exactly one twisted class over `[R]` gets mark `±|C_G(R)|` and the
/// rest get `0`; only classes with `|C_H(S)| = |C_G(R)|` and
/// `N_{α^{-1}} = N_G(R)` are eligible. After each level the new
/// coefficients are solved exactly, so non-integral branches die early.
/// Survivors are checked against `γ ·_H γ° = [G]`.
pub fn search_orthogonal(pair: &BisetPair, cap: usize) -> Result<Vec<OrthogonalUnit>> {
    let table = pair.forward();
    for order in [table.left().order(), table.right().order()] {
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
    }
    let lattice = table.left().lattice();
    let levels: Vec<Level> = (0..lattice.len())
        .rev()
        .map(|r| {
            let class = lattice.class(r);
            let mut block: Vec<usize> = (0..table.len()).filter(|&k| table.class(k).left_class == r).collect();
            block.reverse();
            let candidates = block
                .iter()
                .copied()
                .filter(|&k| {
                    let c = table.class(k);
                    c.right_centralizer == c.left_centralizer && c.n_alpha_inv == class.normalizer.order()
                })
                .collect();
            Level {
                subgroup_class: r,
                centralizer: class.centralizer.order() as i64,
                block,
                candidates,
            }
        })
        .collect();
    let search = Search { table, levels };

    let leaves: Vec<(Vec<i64>, Vec<Choice>)> = search
        .branches(0)
        .into_par_iter()
        .flat_map_iter(|(k, sign)| {
            let mut coeffs = vec![0i64; table.len()];
            let mut out = Vec::new();
            if search.apply(0, k, sign, &mut coeffs).is_some() {
                let mut path = vec![Choice {
                    subgroup_class: search.levels[0].subgroup_class,
                    twisted_class: k,
                    sign,
                }];
                search.descend(1, &mut coeffs, &mut path, &mut out);
            }
            out
        })
        .collect();

    let mut units: Vec<OrthogonalUnit> = leaves
        .into_par_iter()
        .map(|(coeffs, certificate)| -> Result<Option<OrthogonalUnit>> {
            let element = BisetElement::new(table.clone(), coeffs)?;
            if pair.into_left(&element, &pair.dual(&element))? != pair.left_ring().identity() {
                return Ok(None);
            }
            if !verify_two_sided(pair, &element)? {
                return Err(Error::Inconsistent(format!(
                    "γ·γ° = [G] but γ°·γ ≠ [H] for {}",
                    element.to_json()
                )));
            }
            let (principal, epsilon) = principal_iso(pair, &element)?;
            let principal_outer = pair
                .is_square()
                .then(|| pair.left_ring().outer_class(principal))
                .flatten();
            Ok(Some(OrthogonalUnit {
                uniform: is_uniform(pair, &element),
                element,
                certificate,
                principal,
                principal_outer,
                epsilon,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    units.sort_by(|a, b| a.element.coeffs().cmp(b.element.coeffs()));
    Ok(units)
}

/// Computes `γ° ·_G γ` independently and compares it with `[H]`.
pub fn verify_two_sided(pair: &BisetPair, gamma: &BisetElement) -> Result<bool> {
    Ok(pair.into_right(&pair.dual(gamma), gamma)? == pair.right_ring().identity())
}

/// The full twisted class `Δ(G, φ, H)` witnessing uniformity of `γ`.
pub fn is_uniform(pair: &BisetPair, gamma: &BisetElement) -> Option<usize> {
    pair.forward().uniform_witness(gamma.coeffs())
}

/// The unique full twisted class with nonzero coefficient, and that
/// coefficient, which must be `±1`.
pub fn principal_iso(pair: &BisetPair, gamma: &BisetElement) -> Result<(usize, i64)> {
    let hits: Vec<usize> = pair
        .forward()
        .full_classes()
        .iter()
        .copied()
        .filter(|&f| gamma.coeff(f) != 0)
        .collect();
    match hits.as_slice() {
        [f] if gamma.coeff(*f).abs() == 1 => Ok((*f, gamma.coeff(*f))),
        _ => Err(Error::Inconsistent(format!(
            "expected one full class with coefficient ±1, found {:?}",
            hits.iter().map(|&f| (f, gamma.coeff(f))).collect::<Vec<_>>()
        ))),
    }
}

/// Units for `G = H` on a shared ring, using the default order cap.
pub fn units_of(ring: &Arc<crate::biset::DoubleBurnsideRing>) -> Result<Vec<OrthogonalUnit>> {
    search_orthogonal(&BisetPair::square(ring.clone()), usize::MAX)
}
