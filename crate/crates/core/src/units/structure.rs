use std::collections::HashMap;

use serde::Serialize;

use super::OrthogonalUnit;
use crate::biset::{BisetElement, DoubleBurnsideRing};
use crate::error::{Error, Result};

/// The finite group `B^Δ_∘(G, G)` with its split `Λ_G ⋊ Δ_G`.
#[derive(Clone, Debug, Serialize)]
pub struct UnitGroupStructure {
    pub order: usize,
    /// `table[a][b]` is the index of `units[a] ·_G units[b]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    /// `π(γ)`, an outer class.
    pub projection: Vec<usize>,
    /// `γ = λ ·_G η(π(γ))` with `λ ∈ Λ_G`; stores the index of `λ`.
    pub lambda_part: Vec<usize>,
    /// `Λ_G = ker π`.
    pub lambda: Vec<usize>,
    /// `η(φ̄)` for each outer class.
    pub eta: Vec<usize>,
    /// `ι(B(G)^×)`.
    pub iota_units: Vec<usize>,
    pub exponent: usize,
    pub abelian: bool,
    pub generators: Vec<usize>,
    /// Rank when the group is elementary abelian of exponent at most 2.
    pub rank: Option<usize>,
    pub lambda_generators: Vec<usize>,
    pub lambda_rank: Option<usize>,
    /// `η(Out(G))` is central, so the semidirect product is direct.
    pub eta_central: bool,
    /// `γ ·_G ι(u) ·_G γ°` lies in `ι(B(G))` for every unit `γ` and
    /// Burnside unit `u`.
    pub iota_normal: bool,
    /// `η(φ̄) ·_G ι(u) ·_G η(φ̄)^{-1} = ι(^φ̄ u)` for all `φ̄` and `u`.
    pub conjugation_formula: bool,
    /// `π ∘ η = id`.
    pub section: bool,
    /// `Λ_G = ι(B(G)^×)`.
    pub lambda_is_iota: bool,
}

/// Builds the multiplication table of `units` (which must be the complete
/// unit set of `ring`) and checks the structural identities.
pub fn structure(ring: &DoubleBurnsideRing, units: &[OrthogonalUnit]) -> Result<UnitGroupStructure> {
    let n = units.len();
    let index: HashMap<&[i64], usize> = units.iter().enumerate().map(|(i, u)| (u.element.coeffs(), i)).collect();
    let find = |x: &BisetElement| -> Result<usize> {
        index
            .get(x.coeffs())
            .copied()
            .ok_or_else(|| Error::Inconsistent(format!("not closed: {} is not a unit", x.to_json())))
    };

    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = find(&ring.mul(&units[a].element, &units[b].element)?)?;
        }
    }
    let identity = find(&ring.identity())?;
    let inverse: Vec<usize> = units
        .iter()
        .map(|u| find(&ring.dual(&u.element)))
        .collect::<Result<_>>()?;
    for a in 0..n {
        if table[a][inverse[a]] != identity || table[inverse[a]][a] != identity {
            return Err(Error::Inconsistent(format!("dual of unit {a} is not its inverse")));
        }
    }

    let out = ring.group().out();
    let projection: Vec<usize> = units
        .iter()
        .map(|u| {
            u.principal_outer
                .ok_or_else(|| Error::Inconsistent("unit without principal outer class".into()))
        })
        .collect::<Result<_>>()?;
    for a in 0..n {
        for b in 0..n {
            if projection[table[a][b]] != out.compose(projection[a], projection[b]) {
                return Err(Error::Inconsistent("π is not a homomorphism".into()));
            }
        }
    }
    let eta: Vec<usize> = (0..out.order()).map(|c| find(&ring.eta(c))).collect::<Result<_>>()?;
    let section = eta.iter().enumerate().all(|(c, &e)| projection[e] == c);
    let lambda: Vec<usize> = (0..n).filter(|&a| projection[a] == 0).collect();
    let lambda_part: Vec<usize> = (0..n).map(|a| table[a][eta[out.inverse(projection[a])]]).collect();
    for a in 0..n {
        let l = lambda_part[a];
        if projection[l] != 0 || table[l][eta[projection[a]]] != a {
            return Err(Error::Inconsistent(format!("unit {a} does not split as λ·η(π)")));
        }
    }

    let burnside = ring.burnside();
    let burnside_units = burnside.unit_group();
    let iota_units: Vec<usize> = burnside_units
        .iter()
        .map(|u| find(&ring.iota(u)))
        .collect::<Result<_>>()?;
    let mut iota_normal = true;
    for u in &iota_units {
        for g in 0..n {
            let conjugate = table[table[g][*u]][inverse[g]];
            iota_normal &= ring.iota_preimage(&units[conjugate].element).is_some();
        }
    }
    let mut conjugation_formula = true;
    for c in 0..out.order() {
        let phi = out.representative(c);
        for (u, &iu) in burnside_units.iter().zip(&iota_units) {
            let lhs = table[table[eta[c]][iu]][inverse[eta[c]]];
            conjugation_formula &= units[lhs].element == ring.iota(&burnside.act(phi, u));
        }
    }
    let eta_central = eta.iter().all(|&e| (0..n).all(|a| table[e][a] == table[a][e]));

    let all: Vec<usize> = (0..n).collect();
    let abelian = (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]));
    let exponent = (0..n).map(|a| element_order(&table, identity, a)).fold(1, lcm);
    let lambda_exponent = lambda.iter().map(|&a| element_order(&table, identity, a)).fold(1, lcm);
    let lambda_abelian = lambda
        .iter()
        .all(|&a| lambda.iter().all(|&b| table[a][b] == table[b][a]));
    let mut lambda_is_iota = lambda.clone();
    let mut iota_sorted = iota_units.clone();
    lambda_is_iota.sort_unstable();
    iota_sorted.sort_unstable();

    Ok(UnitGroupStructure {
        order: n,
        identity,
        inverse,
        generators: greedy_generators(&table, identity, &all),
        rank: (abelian && exponent <= 2).then(|| n.trailing_zeros() as usize),
        lambda_generators: greedy_generators(&table, identity, &lambda),
        lambda_rank: (lambda_abelian && lambda_exponent <= 2).then(|| lambda.len().trailing_zeros() as usize),
        lambda_is_iota: lambda_is_iota == iota_sorted,
        table,
        projection,
        lambda_part,
        lambda,
        eta,
        iota_units,
        exponent,
        abelian,
        eta_central,
        iota_normal,
        conjugation_formula,
        section,
    })
}

fn element_order(table: &[Vec<usize>], identity: usize, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != identity {
        x = table[x][a];
        k += 1;
    }
    k
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn closure(table: &[Vec<usize>], identity: usize, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; table.len()];
    seen[identity] = true;
    let mut members = vec![identity];
    let mut i = 0;
    while i < members.len() {
        for &g in gens {
            let y = table[members[i]][g];
            if !seen[y] {
                seen[y] = true;
                members.push(y);
            }
        }
        i += 1;
    }
    seen
}

/// Takes elements of `subset` in index order, keeping each one that is not
/// yet generated.
fn greedy_generators(table: &[Vec<usize>], identity: usize, subset: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut generated = closure(table, identity, &gens);
    for &a in subset {
        if !generated[a] {
            gens.push(a);
            generated = closure(table, identity, &gens);
        }
    }
    gens
}
