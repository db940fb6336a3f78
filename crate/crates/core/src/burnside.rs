//! The Burnside ring `B(G)`: table of marks, arithmetic through the mark
//! homomorphism, and the unit group.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{GroupContext, Morphism};

/// Integer combination of the transitive G-sets `[G/R]`, indexed by
/// subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurnsideElement {
    pub coeffs: Vec<i64>,
}

/// Values of the marks `Φ_U`, one slot per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkVector {
    pub values: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(classes: usize) -> Self {
        BurnsideElement {
            coeffs: vec![0; classes],
        }
    }

    pub fn basis(classes: usize, i: usize) -> Self {
        let mut x = Self::zero(classes);
        x.coeffs[i] = 1;
        x
    }

    pub fn scale(&self, k: i64) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        BurnsideElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        BurnsideElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        self.scale(-1)
    }
}

impl Mul for &MarkVector {
    type Output = MarkVector;
    fn mul(self, rhs: &MarkVector) -> MarkVector {
        MarkVector {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a * b).collect(),
        }
    }
}

/// `m[U][S] = Φ_U([G/S])`, rows and columns in canonical class order.
#[derive(Clone, Debug)]
pub struct TableOfMarks {
    group: Arc<GroupContext>,
    n: usize,
    m: Vec<i64>,
}

impl TableOfMarks {
    pub fn new(group: Arc<GroupContext>) -> Self {
        let lattice = group.lattice();
        let n = lattice.len();
        let mut m = vec![0i64; n * n];
        for (s, class) in lattice.classes().iter().enumerate() {
            // Each conjugate ^gS is hit by |N_G(S)| / |S| cosets gS.
            let per_conjugate = (class.normalizer.order() / class.order()) as i64;
            for u in 0..n {
                let rep = lattice.representative(u);
                let hits = class.members.iter().filter(|c| rep.is_subset(c)).count() as i64;
                m[u * n + s] = hits * per_conjugate;
            }
        }
        TableOfMarks { group, n, m }
    }

    pub fn group(&self) -> &Arc<GroupContext> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `Φ_U([G/S])` for class indices `u`, `s`.
    pub fn mark(&self, u: usize, s: usize) -> i64 {
        self.m[u * self.n + s]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.m.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.group
            .lattice()
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| format!("R#{i}(order={})", c.order()))
            .collect()
    }

    pub fn one(&self) -> BurnsideElement {
        BurnsideElement::basis(self.n, self.n - 1)
    }

    pub fn basis(&self, i: usize) -> BurnsideElement {
        BurnsideElement::basis(self.n, i)
    }

    pub fn marks(&self, x: &BurnsideElement) -> MarkVector {
        let values = (0..self.n)
            .map(|u| (u..self.n).map(|s| self.mark(u, s) * x.coeffs[s]).sum())
            .collect();
        MarkVector { values }
    }

    /// Solves the triangular system from the largest class down.
    pub fn mark_inverse(&self, v: &MarkVector) -> Result<BurnsideElement> {
        let mut coeffs = vec![0i64; self.n];
        for s in (0..self.n).rev() {
            coeffs[s] = self.solve_one(s, v.values[s], &coeffs)?;
        }
        Ok(BurnsideElement { coeffs })
    }

    fn solve_one(&self, s: usize, value: i64, coeffs: &[i64]) -> Result<i64> {
        let rest: i64 = (s + 1..self.n).map(|t| self.mark(s, t) * coeffs[t]).sum();
        let diagonal = self.mark(s, s);
        let residual = value - rest;
        if residual % diagonal != 0 {
            return Err(Error::NotIntegral { index: s });
        }
        Ok(residual / diagonal)
    }

    pub fn multiply(&self, x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
        self.mark_inverse(&(&self.marks(x) * &self.marks(y)))
            .expect("products of G-sets have integral marks")
    }

    /// All units of `B(G)`: mark vectors in `{±1}^classes` that are integral.
    ///
    /// Sign choices are made from the largest class down, so a
    /// non-integral coefficient prunes every completion of the prefix.
    pub fn unit_group(&self) -> Vec<BurnsideElement> {
        let mut units = Vec::new();
        let mut coeffs = vec![0i64; self.n];
        self.unit_search(self.n, &mut coeffs, &mut units);
        units.sort();
        units
    }

    fn unit_search(&self, level: usize, coeffs: &mut Vec<i64>, out: &mut Vec<BurnsideElement>) {
        if level == 0 {
            out.push(BurnsideElement { coeffs: coeffs.clone() });
            return;
        }
        let s = level - 1;
        for sign in [1, -1] {
            if let Ok(c) = self.solve_one(s, sign, coeffs) {
                coeffs[s] = c;
                self.unit_search(s, coeffs, out);
            }
        }
        coeffs[s] = 0;
    }

    pub fn is_unit(&self, x: &BurnsideElement) -> bool {
        self.marks(x).values.iter().all(|v| v.abs() == 1)
    }

    /// `^φ [G/R] = [G/φ(R)]`, extended linearly.
    pub fn act(&self, automorphism: &Morphism, x: &BurnsideElement) -> BurnsideElement {
        let lattice = self.group.lattice();
        let mut out = BurnsideElement::zero(self.n);
        for (r, &c) in x.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let image = automorphism.restrict(lattice.representative(r));
            let target = lattice
                .class_of(image.codomain())
                .expect("automorphic image is a subgroup");
            out.coeffs[target] += c;
        }
        out
    }
}
