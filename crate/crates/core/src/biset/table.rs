use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::diagonal::TwistedDiagonal;
use crate::error::{Error, Result};
use crate::group::{isomorphisms, GroupContext, Morphism, Subgroup};

/// One `(G × H)`-conjugacy class of twisted diagonal subgroups.
#[derive(Clone, Debug)]
pub struct TwistedClass {
    /// Subgroup class of `R = p1(Δ)` in `G`.
    pub left_class: usize,
    /// Subgroup class of `S = p2(Δ)` in `H`.
    pub right_class: usize,
    /// Isomorphism orbit index within `(left_class, right_class)`.
    pub orbit: usize,
    /// Representative; `R` and `S` are the lattice class representatives.
    pub diagonal: TwistedDiagonal,
    /// `|C_G(R)|`.
    pub left_centralizer: usize,
    /// `|C_H(S)|`.
    pub right_centralizer: usize,
    /// `|N_{G×H}(Δ)|`.
    pub normalizer_order: usize,
    /// `|N_α|` (a subgroup of `N_H(S)`).
    pub n_alpha: usize,
    /// `|N_{α^{-1}}|` (a subgroup of `N_G(R)`).
    pub n_alpha_inv: usize,
}

impl TwistedClass {
    pub fn order(&self) -> usize {
        self.diagonal.order()
    }
}

type Key = (usize, usize, Vec<usize>);

/// Representatives of the conjugacy classes of twisted diagonal subgroups
/// of `G × H`, ordered by `|S|`, then left class, right class and orbit.
///
/// The mark matrix is computed eagerly, so a built table is read-only.
#[derive(Debug)]
pub struct TwistedClassTable {
    left: Arc<GroupContext>,
    right: Arc<GroupContext>,
    classes: Vec<TwistedClass>,
    /// `marks[i * n + j] = Φ_{Δ_i}([(G×H)/Δ_j])`.
    marks: Vec<i64>,
    /// Nonzero `(j, marks[i][j])` with `j > i`, per row `i`.
    above: Vec<Vec<(usize, i64)>>,
    /// `(R class, S class, images of the S generators)` to
    /// `(class, g, h)` with `^{(g,h)}Δ_class` the diagonal of that key.
    lookup: HashMap<Key, (usize, usize, usize)>,
    /// Classes with `R = G` and `S = H`.
    full: Vec<usize>,
}

impl TwistedClassTable {
    pub fn new(left: Arc<GroupContext>, right: Arc<GroupContext>) -> Self {
        let (g, h) = (left.group(), right.group());
        let (gl, hl) = (left.lattice(), right.lattice());
        let mut classes = Vec::new();
        let mut lookup = HashMap::new();
        for (rc, rclass) in gl.classes().iter().enumerate() {
            for (sc, sclass) in hl.classes().iter().enumerate() {
                if sclass.order() != rclass.order() {
                    continue;
                }
                let gens = &sclass.generators;
                let (ng, nh) = (&rclass.normalizer, &sclass.normalizer);
                let mut orbit = 0;
                for alpha in isomorphisms(h, &sclass.representative, g, &rclass.representative) {
                    let key = (rc, sc, alpha.images(gens));
                    if lookup.contains_key(&key) {
                        continue;
                    }
                    let class = classes.len();
                    let mut stabilizer: Vec<(usize, usize)> = Vec::new();
                    for y in nh.iter() {
                        let y_inv = h.inv(y);
                        let moved: Vec<usize> = gens.iter().map(|&t| alpha.apply(h.conj(y_inv, t))).collect();
                        for x in ng.iter() {
                            let images: Vec<usize> = moved.iter().map(|&a| g.conj(x, a)).collect();
                            if images == key.2 {
                                stabilizer.push((x, y));
                            }
                            lookup.entry((rc, sc, images)).or_insert((class, x, y));
                        }
                    }
                    let n_alpha = Subgroup::from_members(h.order(), stabilizer.iter().map(|p| p.1).collect());
                    let n_alpha_inv = Subgroup::from_members(g.order(), stabilizer.iter().map(|p| p.0).collect());
                    classes.push(TwistedClass {
                        left_class: rc,
                        right_class: sc,
                        orbit,
                        diagonal: TwistedDiagonal::new(alpha),
                        left_centralizer: rclass.centralizer.order(),
                        right_centralizer: sclass.centralizer.order(),
                        normalizer_order: stabilizer.len(),
                        n_alpha: n_alpha.order(),
                        n_alpha_inv: n_alpha_inv.order(),
                    });
                    orbit += 1;
                }
            }
        }
        // Left classes ascend with the order, so this only interleaves
        // classes of equal order by their right class.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&i| {
            (
                classes[i].order(),
                classes[i].left_class,
                classes[i].right_class,
                classes[i].orbit,
            )
        });
        let mut position = vec![0; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let classes: Vec<TwistedClass> = order.iter().map(|&i| classes[i].clone()).collect();
        for entry in lookup.values_mut() {
            entry.0 = position[entry.0];
        }
        let full = (0..classes.len())
            .filter(|&i| classes[i].left_class == gl.whole_class() && classes[i].right_class == hl.whole_class())
            .collect();
        let mut table = TwistedClassTable {
            left,
            right,
            classes,
            marks: Vec::new(),
            above: Vec::new(),
            lookup,
            full,
        };
        table.marks = table.compute_marks();
        let n = table.classes.len();
        table.above = (0..n)
            .map(|i| {
                (i + 1..n)
                    .filter_map(|j| Some((j, table.mark(i, j))).filter(|&(_, m)| m != 0))
                    .collect()
            })
            .collect();
        table
    }

    /// `Φ_{Δ_i}([(G×H)/Δ_j])`: the pairs `(g, h)` with `Δ_i ≤ ^{(g,h)}Δ_j`,
    /// divided by `|Δ_j|`.
    fn compute_marks(&self) -> Vec<i64> {
        let n = self.classes.len();
        let (g, h) = (self.left.group(), self.right.group());
        let rows: Vec<Vec<i64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let di = &self.classes[i].diagonal;
                let gens = h.generators_of(di.right());
                let targets: Vec<usize> = gens.iter().map(|&t| di.alpha().apply(t)).collect();
                (0..n)
                    .map(|j| {
                        let dj = &self.classes[j].diagonal;
                        if dj.order() < di.order() || !dj.order().is_multiple_of(di.order()) {
                            return 0;
                        }
                        let mut pairs = 0usize;
                        for y in h.elements() {
                            let y_inv = h.inv(y);
                            let pulled: Vec<usize> = gens.iter().map(|&t| h.conj(y_inv, t)).collect();
                            if !pulled.iter().all(|&t| dj.right().contains(t)) {
                                continue;
                            }
                            let images: Vec<usize> = pulled.iter().map(|&t| dj.alpha().apply(t)).collect();
                            pairs += g
                                .elements()
                                .filter(|&x| images.iter().zip(&targets).all(|(&a, &b)| g.conj(x, a) == b))
                                .count();
                        }
                        (pairs / dj.order()) as i64
                    })
                    .collect()
            })
            .collect();
        rows.concat()
    }

    pub fn left(&self) -> &Arc<GroupContext> {
        &self.left
    }

    pub fn right(&self) -> &Arc<GroupContext> {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[TwistedClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &TwistedClass {
        &self.classes[i]
    }

    /// `Φ_{Δ_i}([(G×H)/Δ_j])`.
    pub fn mark(&self, i: usize, j: usize) -> i64 {
        self.marks[i * self.classes.len() + j]
    }

    pub fn mark_rows(&self) -> Vec<Vec<i64>> {
        self.marks
            .chunks(self.classes.len().max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Class `i` is contained in a conjugate of class `j`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.mark(i, j) != 0
    }

    /// Twisted classes with `R = G` and `S = H`; empty unless `|G| = |H|`.
    pub fn full_classes(&self) -> &[usize] {
        &self.full
    }

    /// The class of `delta` and `(g, h)` with `^{(g,h)}Δ_class = delta`.
    pub fn canonicalize(&self, delta: &TwistedDiagonal) -> Option<(usize, usize, usize)> {
        let (g, h) = (self.left.group(), self.right.group());
        let (rc, x0) = self.left.lattice().locate(delta.left())?;
        let (sc, y0) = self.right.lattice().locate(delta.right())?;
        let x0_inv = g.inv(x0);
        let images: Vec<usize> = self
            .right
            .lattice()
            .class(sc)
            .generators
            .iter()
            .map(|&t| g.conj(x0_inv, delta.alpha().apply(h.conj(y0, t))))
            .collect();
        let &(class, x, y) = self.lookup.get(&(rc, sc, images))?;
        Some((class, g.mul(x0, x), h.mul(y0, y)))
    }

    pub fn class_of(&self, delta: &TwistedDiagonal) -> Option<usize> {
        self.canonicalize(delta).map(|c| c.0)
    }

    /// A pair `(g, h)` with `^{(g,h)}a = b`, if the two are conjugate.
    pub fn conjugacy_test(&self, a: &TwistedDiagonal, b: &TwistedDiagonal) -> Option<(usize, usize)> {
        let (ca, xa, ya) = self.canonicalize(a)?;
        let (cb, xb, yb) = self.canonicalize(b)?;
        if ca != cb {
            return None;
        }
        let (g, h) = (self.left.group(), self.right.group());
        Some((g.mul(xb, g.inv(xa)), h.mul(yb, h.inv(ya))))
    }

    /// For each class of this table, the class of its dual in `other`,
    /// which must be the table for the swapped pair of groups.
    pub fn dual_map(&self, other: &TwistedClassTable) -> Result<Vec<usize>> {
        if !Arc::ptr_eq(&self.left, &other.right) || !Arc::ptr_eq(&self.right, &other.left) {
            return Err(Error::Mismatch("dual table must swap the two groups".into()));
        }
        self.classes
            .iter()
            .map(|c| {
                other
                    .class_of(&c.diagonal.dual())
                    .ok_or_else(|| Error::Inconsistent("dual of a twisted class not found".into()))
            })
            .collect()
    }

    /// `Φ_{Δ_i}(a)` for every class `i`.
    pub fn marks_of(&self, coeffs: &[i64]) -> Vec<i64> {
        let n = self.classes.len();
        (0..n)
            .map(|i| self.mark(i, i) * coeffs[i] + self.above[i].iter().map(|&(j, m)| m * coeffs[j]).sum::<i64>())
            .collect()
    }

    /// Back-substitution from the largest class down; the diagonal entry
    /// `[N_{G×H}(Δ):Δ]` must divide each residual exactly.
    pub fn coeffs_from_marks(&self, marks: &[i64]) -> Result<Vec<i64>> {
        let n = self.classes.len();
        let mut coeffs = vec![0i64; n];
        for i in (0..n).rev() {
            coeffs[i] = self.solve_one(i, marks[i], &coeffs)?;
        }
        Ok(coeffs)
    }

    /// Coefficient of class `i` given its mark and the coefficients of all
    /// later classes.
    pub fn solve_one(&self, i: usize, mark: i64, coeffs: &[i64]) -> Result<i64> {
        let rest: i64 = self.above[i].iter().map(|&(j, m)| m * coeffs[j]).sum();
        let residual = mark - rest;
        let diagonal = self.mark(i, i);
        if residual % diagonal != 0 {
            return Err(Error::NotIntegral { index: i });
        }
        Ok(residual / diagonal)
    }

    /// Whether class `k` has the form `Δ(φ(V), φ, V)` for the full
    /// isomorphism `φ: H → G`, up to conjugacy: `α_k = c_x φ` on `S_k`
    /// for some `x ∈ G`.
    pub fn is_compatible(&self, k: usize, phi: &Morphism) -> bool {
        let g = self.left.group();
        let d = &self.classes[k].diagonal;
        let gens = &self.right.lattice().class(self.classes[k].right_class).generators;
        g.elements()
            .any(|x| gens.iter().all(|&t| g.conj(x, phi.apply(t)) == d.alpha().apply(t)))
    }

    /// The full class `f` such that every class in the support of `coeffs`
    /// is compatible with `f`'s isomorphism.
    pub fn uniform_witness(&self, coeffs: &[i64]) -> Option<usize> {
        self.full.iter().copied().find(|&f| {
            let phi = self.classes[f].diagonal.alpha();
            coeffs
                .iter()
                .enumerate()
                .all(|(k, &c)| c == 0 || self.is_compatible(k, phi))
        })
    }

    pub fn label(&self, i: usize) -> String {
        let c = &self.classes[i];
        format!("D(R#{}, a#{}, S#{})", c.left_class, c.orbit, c.right_class)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.classes.len()).map(|i| self.label(i)).collect()
    }

    /// Inverse of [`label`](Self::label); whitespace is ignored.
    pub fn find_label(&self, label: &str) -> Result<usize> {
        let compact: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        (0..self.classes.len())
            .find(|&i| self.label(i).replace(' ', "") == compact)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}
