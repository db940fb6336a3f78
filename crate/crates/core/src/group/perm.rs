//! Permutations on `{1, ..., n}` and cycle notation.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Builds a permutation from cycles of zero-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn extend(&self, degree: usize) -> Permutation {
        let mut images = self.0.clone();
        images.extend(self.0.len()..degree);
        Permutation(images)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0;
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.0[p];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    /// One-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut p = start;
            write!(f, "(")?;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.0[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses one permutation written as a product of disjoint-or-not cycles,
/// e.g. `(1 2 3)(4 5)` or `(1,2)`. Points are one-based. `offset` is added
/// to error positions so they refer to the caller's full input.
///
/// Cycles are composed right to left, as in `(1 2)(2 3) = (1 2 3)`.
pub fn parse_cycles(text: &str, offset: usize) -> Result<Vec<Vec<usize>>> {
    let err = |pos: usize, message: &str| Error::Parse {
        position: offset + pos,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                let open = i;
                i += 1;
                let mut cycle = Vec::new();
                loop {
                    while i < bytes.len() && matches!(bytes[i], b' ' | b'\t' | b',') {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(err(open, "unclosed cycle"));
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(i, "expected a point number"));
                    }
                    let point: usize = text[start..i]
                        .parse()
                        .map_err(|_| err(start, "point number out of range"))?;
                    if point == 0 {
                        return Err(err(start, "points are one-based"));
                    }
                    if cycle.contains(&(point - 1)) {
                        return Err(err(start, "point repeated within a cycle"));
                    }
                    cycle.push(point - 1);
                }
                cycles.push(cycle);
            }
            _ => return Err(err(i, "expected '('")),
        }
    }
    Ok(cycles)
}

/// Parses a product of cycles into a permutation of degree at least the
/// largest point mentioned.
pub fn parse_permutation(text: &str, offset: usize) -> Result<Permutation> {
    let cycles = parse_cycles(text, offset)?;
    let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
    // right-to-left product
    Ok(cycles
        .iter()
        .rev()
        .map(|c| Permutation::from_cycles(degree, std::slice::from_ref(c)))
        .fold(Permutation::identity(degree), |acc, c| c.compose(&acc)))
}
