//! Textual group descriptions.
//!
//! ```text
//! catalog: C4 x S3      direct product of catalog groups
//! A4                    the `catalog:` prefix is optional
//! perm: (1 2 3); (1 2)(3 4)
//! (1 2 3), (1 2)(3 4)   a bare generator list is read as `perm:`
//! ```
//!
//! Catalog names are `C<n>`, `D<2n>` (dihedral of order `2n`), `Q8`, `S<n>`
//! and `A<n>`, joined with `x` for direct products. Points are one-based and
//! whitespace is ignored.

use std::fmt;

use super::perm::{parse_permutation, Permutation};
use super::{direct_product, FiniteGroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogGroup {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
}

impl fmt::Display for CatalogGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogGroup::Cyclic(n) => write!(f, "C{n}"),
            CatalogGroup::Dihedral(n) => write!(f, "D{n}"),
            CatalogGroup::Quaternion => write!(f, "Q8"),
            CatalogGroup::Symmetric(n) => write!(f, "S{n}"),
            CatalogGroup::Alternating(n) => write!(f, "A{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Catalog(Vec<CatalogGroup>),
    Permutations(Vec<Permutation>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Catalog(factors) => {
                let names: Vec<String> = factors.iter().map(|c| c.to_string()).collect();
                write!(f, "{}", names.join("x"))
            }
            GroupSpec::Permutations(gens) => {
                let gens: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
                write!(f, "perm:{}", gens.join(";"))
            }
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let start = text.len() - text.trim_start().len();
    let body = &text[start..];
    if let Some(rest) = body.strip_prefix("catalog:") {
        parse_catalog(rest, start + "catalog:".len())
    } else if let Some(rest) = body.strip_prefix("perm:") {
        parse_perm_list(rest, start + "perm:".len())
    } else if body.starts_with('(') {
        parse_perm_list(body, start)
    } else {
        parse_catalog(body, start)
    }
}

fn parse_catalog(text: &str, offset: usize) -> Result<GroupSpec> {
    let err = |position: usize, message: String| Error::Parse { position, message };
    // (byte position, char) with whitespace dropped
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (offset + i, c))
        .collect();
    if chars.is_empty() {
        return Err(err(offset, "empty group description".into()));
    }
    let mut factors = Vec::new();
    for part in chars.split(|(_, c)| matches!(c, 'x' | '×' | '*')) {
        let Some(&(pos, letter)) = part.first() else {
            let position = chars.last().map_or(offset, |&(p, _)| p);
            return Err(err(position, "empty factor in direct product".into()));
        };
        let digits: String = part[1..].iter().map(|&(_, c)| c).collect();
        let number_pos = part.get(1).map_or(pos + 1, |&(p, _)| p);
        let n: usize = digits
            .parse()
            .map_err(|_| err(number_pos, format!("expected a number after '{letter}'")))?;
        let factor = match letter.to_ascii_uppercase() {
            'C' if n >= 1 => CatalogGroup::Cyclic(n),
            'D' if n >= 2 && n.is_multiple_of(2) => CatalogGroup::Dihedral(n),
            'D' => return Err(err(number_pos, "dihedral order must be even".into())),
            'Q' if n == 8 => CatalogGroup::Quaternion,
            'Q' => return Err(err(number_pos, "only Q8 is in the catalog".into())),
            'S' if n >= 1 => CatalogGroup::Symmetric(n),
            'A' if n >= 1 => CatalogGroup::Alternating(n),
            'C' | 'S' | 'A' => return Err(err(number_pos, "degree must be positive".into())),
            _ => return Err(err(pos, format!("unknown group family '{letter}'"))),
        };
        factors.push(factor);
    }
    Ok(GroupSpec::Catalog(factors))
}

fn parse_perm_list(text: &str, offset: usize) -> Result<GroupSpec> {
    let mut gens = Vec::new();
    let mut depth = 0usize;
    let mut piece_start = 0;
    let mut pieces = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ';' | ',' if depth == 0 => {
                pieces.push((piece_start, &text[piece_start..i]));
                piece_start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((piece_start, &text[piece_start..]));
    for (start, piece) in pieces {
        if piece.trim().is_empty() {
            continue;
        }
        gens.push(parse_permutation(piece, offset + start)?);
    }
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0);
    Ok(GroupSpec::Permutations(
        gens.into_iter().map(|p| p.extend(degree)).collect(),
    ))
}

/// Parses and builds a group. Rejects anything above `cap`.
pub fn build_group(text: &str, cap: usize) -> Result<FiniteGroup> {
    let spec = parse_group_spec(text)?;
    build_from_spec(&spec, cap)
}

pub fn build_from_spec(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    if let GroupSpec::Catalog(factors) = spec {
        // `None` means the order does not even fit in a usize
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(catalog_order(f)?));
        match order {
            Some(order) if order <= cap => {}
            Some(order) => return Err(Error::OrderCap { order, cap }),
            None => return Err(Error::AboveCap { cap }),
        }
    }
    let group = match spec {
        GroupSpec::Permutations(gens) => permutation_group(gens, cap)?,
        GroupSpec::Catalog(factors) => {
            let mut group = catalog_group(factors[0], cap)?;
            for &factor in &factors[1..] {
                let next = catalog_group(factor, cap)?;
                group = direct_product(&group, &next, cap)?.group;
            }
            group
        }
    };
    Ok(group.with_provenance(spec.to_string()))
}

fn permutation_group(gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1).max(1);
    let gens: Vec<Permutation> = gens.iter().map(|p| p.extend(degree)).collect();
    let (group, _) = FiniteGroup::from_generators(&gens, Permutation::identity(degree), |a, b| a.compose(b), cap)?;
    Ok(group)
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

fn catalog_order(name: CatalogGroup) -> Option<usize> {
    match name {
        CatalogGroup::Cyclic(n) | CatalogGroup::Dihedral(n) => Some(n),
        CatalogGroup::Quaternion => Some(8),
        CatalogGroup::Symmetric(n) => (2..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
        CatalogGroup::Alternating(n) => (2..=n)
            .try_fold(1usize, |acc, k| acc.checked_mul(k))
            .map(|f| (f / 2).max(1)),
    }
}

fn catalog_group(name: CatalogGroup, cap: usize) -> Result<FiniteGroup> {
    let perms = |degree: usize, gens: Vec<Vec<Vec<usize>>>| -> Vec<Permutation> {
        gens.iter()
            .map(|cycles| Permutation::from_cycles(degree, cycles))
            .collect()
    };
    let group = match name {
        CatalogGroup::Cyclic(n) => permutation_group(&perms(n, vec![vec![cycle(0..n)]]), cap)?,
        CatalogGroup::Dihedral(order) => {
            let k = order / 2;
            match k {
                1 => permutation_group(&perms(2, vec![vec![vec![0, 1]]]), cap)?,
                2 => permutation_group(&perms(4, vec![vec![vec![0, 1]], vec![vec![2, 3]]]), cap)?,
                _ => {
                    let reflection: Vec<Vec<usize>> = (1..k).filter(|&i| i < k - i).map(|i| vec![i, k - i]).collect();
                    permutation_group(&perms(k, vec![vec![cycle(0..k)], reflection]), cap)?
                }
            }
        }
        CatalogGroup::Quaternion => quaternion_group(cap)?,
        CatalogGroup::Symmetric(n) => {
            let gens = if n >= 2 {
                vec![vec![cycle(0..n)], vec![vec![0, 1]]]
            } else {
                vec![]
            };
            permutation_group(&perms(n, gens), cap)?
        }
        CatalogGroup::Alternating(n) => {
            let gens = (2..n).map(|k| vec![vec![0, 1, k]]).collect();
            permutation_group(&perms(n, gens), cap)?
        }
    };
    Ok(group)
}

/// Q8 as the unit quaternions `±1, ±i, ±j, ±k`.
fn quaternion_group(cap: usize) -> Result<FiniteGroup> {
    type Quat = [i8; 4];
    let hamilton = |a: &Quat, b: &Quat| -> Quat {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    };
    let (group, _) = FiniteGroup::from_generators(&[[0, 1, 0, 0], [0, 0, 1, 0]], [1, 0, 0, 0], hamilton, cap)?;
    Ok(group)
}
