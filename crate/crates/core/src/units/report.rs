use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use super::frobenius::{find_frobenius_complement, frobenius_units, FrobeniusReport};
use super::structure::{structure, UnitGroupStructure};
use super::{search_orthogonal, verify_two_sided, OrthogonalUnit};
use crate::biset::{BisetElement, BisetPair, DoubleBurnsideRing};
use crate::error::Result;
use crate::group::{build_group, FiniteGroup, GroupContext};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// `false` when the statement does not apply to this group; the check
    /// then counts as passed.
    pub applicable: bool,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            applicable: true,
            passed,
            detail: detail.into(),
        }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            applicable: false,
            passed: true,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub nilpotent: bool,
    pub out_order: usize,
    pub burnside_units: usize,
    pub unit_count: usize,
    pub units: Vec<Value>,
    pub structure: UnitGroupStructure,
    pub partner: String,
    pub checks: Vec<Check>,
    pub frobenius: Option<FrobeniusReport>,
    /// `|ι(B(G)^×)|·|Out(H)|` next to `|Λ_G|`, when a Frobenius complement
    /// exists. Reported, not asserted.
    pub frobenius_comparison: Option<(usize, usize)>,
    pub passed: bool,
}

/// A group of the same order that is not isomorphic to `g` (or of a
/// neighbouring order when every group of order `|G|` at hand is cyclic).
pub fn non_isomorphic_partner(g: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let n = g.order();
    let spec = if !g.is_cyclic() {
        format!("C{n}")
    } else if let Some(p) = (2..=n).find(|p| n.is_multiple_of(p * p)) {
        format!("C{p}xC{}", n / p)
    } else if n == 1 {
        "C2".to_string()
    } else if n < cap {
        format!("C{}", n + 1)
    } else {
        format!("C{}", n - 1)
    };
    build_group(&spec, cap)
}

/// Runs the search for `G = G` and every structural check on its output.
pub fn theorem_report(ring: &Arc<DoubleBurnsideRing>, cap: usize) -> Result<TheoremReport> {
    let ctx = ring.group();
    let g = ctx.group();
    let pair = BisetPair::square(ring.clone());
    let units = search_orthogonal(&pair, cap)?;
    let s = structure(ring, &units)?;
    let nilpotent = g.is_nilpotent();
    let out_order = ctx.out().order();
    let burnside_units = ring.burnside().unit_group();
    let mut checks = Vec::new();

    let mut two_sided = true;
    for u in &units {
        two_sided &= verify_two_sided(&pair, &u.element)?;
    }
    checks.push(Check::new("two_sided", two_sided, format!("{} units", units.len())));
    checks.push(Check::new(
        "finite",
        !units.is_empty(),
        format!("search finished with {} units", units.len()),
    ));

    let partner = non_isomorphic_partner(g, cap)?;
    let partner_name = partner.provenance().unwrap_or_default().to_string();
    let across = search_orthogonal(&BisetPair::new(ctx.clone(), GroupContext::new(partner)), cap)?;
    checks.push(Check::new(
        "non_isomorphic_empty",
        across.is_empty(),
        format!("{} units against {partner_name}", across.len()),
    ));

    // principal isomorphism: set for every unit during the search
    let principal = units
        .iter()
        .all(|u| u.principal_outer.is_some() && u.epsilon.abs() == 1);
    checks.push(Check::new(
        "principal_isomorphism",
        principal,
        "ρ(γ) = ±φ̄ for every unit",
    ));

    let non_uniform: Vec<&OrthogonalUnit> = units.iter().filter(|u| !u.is_uniform()).collect();
    if nilpotent {
        checks.push(Check::new(
            "nilpotent_uniform",
            non_uniform.is_empty(),
            format!("{} non-uniform units", non_uniform.len()),
        ));
        let expected = burnside_units.len() * out_order;
        checks.push(Check::new(
            "nilpotent_order",
            units.len() == expected,
            format!("{} units, |B(G)^×|·|Out(G)| = {expected}", units.len()),
        ));
        checks.push(Check::new(
            "nilpotent_factorization",
            factorizes(ring, &units)?,
            "every unit is ι(u)·η(φ̄) with u a Burnside unit",
        ));
    } else {
        for name in ["nilpotent_uniform", "nilpotent_order", "nilpotent_factorization"] {
            checks.push(Check::skipped(name, "group is not nilpotent"));
        }
    }

    checks.push(Check::new(
        "semidirect_split",
        s.section && s.iota_normal && s.conjugation_formula,
        format!("|Λ_G| = {}, |Δ_G| = {}", s.lambda.len(), s.eta.len()),
    ));

    let mut witnesses = Vec::new();
    let mut maximal_ok = true;
    for u in &non_uniform {
        let index = units.iter().position(|v| v.element == u.element).expect("listed unit");
        let lambda = &units[s.lambda_part[index]].element;
        match maximal_off_diagonal(ring, lambda) {
            Some(found) => witnesses.extend(found),
            None => maximal_ok = false,
        }
    }
    witnesses.sort();
    witnesses.dedup();
    checks.push(if non_uniform.is_empty() {
        Check::skipped("maximal_off_diagonal", "no non-uniform units")
    } else {
        Check::new("maximal_off_diagonal", maximal_ok, witnesses.join(", "))
    });

    let frobenius = match find_frobenius_complement(ctx) {
        Some(h) => Some(frobenius_units(ring, &h)?),
        None => None,
    };
    let frobenius_comparison = frobenius.as_ref().map(|f| {
        let out_h = f.automorphisms / f.inner_automorphisms;
        (s.iota_units.len() * out_h, s.lambda.len())
    });
    if let Some(f) = &frobenius {
        checks.push(Check::new(
            "frobenius_units",
            f.homomorphism
                && f.injective
                && f.meets_iota_trivially
                && f.units.iter().all(|u| u.orthogonal && u.in_lambda),
            format!("{} outer classes of the complement", f.units.len()),
        ));
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(TheoremReport {
        group: ctx.name().to_string(),
        order: g.order(),
        nilpotent,
        out_order,
        burnside_units: burnside_units.len(),
        unit_count: units.len(),
        units: units.iter().map(OrthogonalUnit::to_json).collect(),
        structure: s,
        partner: partner_name,
        checks,
        frobenius,
        frobenius_comparison,
        passed,
    })
}

fn factorizes(ring: &DoubleBurnsideRing, units: &[OrthogonalUnit]) -> Result<bool> {
    let burnside = ring.burnside().unit_group();
    let out = ring.group().out();
    let mut products = Vec::new();
    for u in &burnside {
        for c in 0..out.order() {
            products.push(ring.mul(&ring.iota(u), &ring.eta(c))?);
        }
    }
    Ok(units.iter().all(|u| products.contains(&u.element)))
}

/// For a non-uniform `λ ∈ Λ_G`: the maximal twisted classes not conjugate
/// to a diagonal `Δ(U)` with nonzero mark. Each must have coefficient `±1`
/// and both components self-normalizing proper subgroups. Returns their
/// labels, or `None` if one fails.
fn maximal_off_diagonal(ring: &DoubleBurnsideRing, lambda: &BisetElement) -> Option<Vec<String>> {
    let table = ring.table();
    let ctx = ring.group();
    let marks = lambda.marks();
    let off: Vec<usize> = (0..table.len())
        .filter(|&k| !ring.is_diagonal_class(k) && marks[k] != 0)
        .collect();
    let maximal: Vec<usize> = off
        .iter()
        .copied()
        .filter(|&k| !off.iter().any(|&j| j != k && table.is_below(k, j)))
        .collect();
    if maximal.is_empty() {
        return None;
    }
    let lattice = ctx.lattice();
    let self_normalizing = |r: usize| {
        let class = lattice.class(r);
        class.normalizer.order() == class.order() && r != lattice.whole_class()
    };
    let mut labels = Vec::new();
    for k in maximal {
        let c = table.class(k);
        if lambda.coeff(k).abs() != 1 || !self_normalizing(c.left_class) || !self_normalizing(c.right_class) {
            return None;
        }
        labels.push(table.label(k));
    }
    Some(labels)
}
