use std::sync::Arc;

use super::diagonal::TwistedDiagonal;
use super::element::BisetElement;
use super::table::TwistedClassTable;
use super::tensor::TensorProduct;
use crate::burnside::{BurnsideElement, TableOfMarks};
use crate::error::{Error, Result};
use crate::group::GroupContext;

/// `B^Δ(G, G)` with its structure maps `ι: B(G) → B^Δ(G,G)`,
/// `η: ZOut(G) → B^Δ(G,G)` and `ρ: B^Δ(G,G) → ZOut(G)`.
#[derive(Debug)]
pub struct DoubleBurnsideRing {
    group: Arc<GroupContext>,
    table: Arc<TwistedClassTable>,
    tensor: Arc<TensorProduct>,
    burnside: TableOfMarks,
    dual: Vec<usize>,
    /// Subgroup class `r` to the twisted class of `Δ(R_r)`.
    diagonal: Vec<usize>,
    /// Outer class to the twisted class of `Δ(G, φ, G)`.
    full: Vec<usize>,
    /// Twisted class to outer class, for full classes.
    outer_of: Vec<Option<usize>>,
}

impl DoubleBurnsideRing {
    pub fn new(group: Arc<GroupContext>) -> Self {
        let table = Arc::new(TwistedClassTable::new(group.clone(), group.clone()));
        let tensor =
            Arc::new(TensorProduct::new(table.clone(), table.clone(), table.clone()).expect("one group throughout"));
        let dual = table.dual_map(&table).expect("self-dual table");
        let g = group.group();
        let diagonal = group
            .lattice()
            .classes()
            .iter()
            .map(|c| {
                table
                    .class_of(&TwistedDiagonal::diagonal(g, &c.representative))
                    .expect("diagonal")
            })
            .collect();
        let out = group.out();
        let full: Vec<usize> = (0..out.order())
            .map(|c| {
                table
                    .class_of(&TwistedDiagonal::new(out.representative(c).clone()))
                    .expect("full diagonal")
            })
            .collect();
        let mut outer_of = vec![None; table.len()];
        for (c, &k) in full.iter().enumerate() {
            outer_of[k] = Some(c);
        }
        DoubleBurnsideRing {
            burnside: TableOfMarks::new(group.clone()),
            group,
            table,
            tensor,
            dual,
            diagonal,
            full,
            outer_of,
        }
    }

    pub fn group(&self) -> &Arc<GroupContext> {
        &self.group
    }

    pub fn table(&self) -> &Arc<TwistedClassTable> {
        &self.table
    }

    pub fn tensor(&self) -> &Arc<TensorProduct> {
        &self.tensor
    }

    pub fn burnside(&self) -> &TableOfMarks {
        &self.burnside
    }

    /// `[G] = [(G×G)/Δ(G)]`.
    pub fn identity(&self) -> BisetElement {
        BisetElement::basis(self.table.clone(), self.diagonal[self.diagonal.len() - 1])
    }

    pub fn mul(&self, a: &BisetElement, b: &BisetElement) -> Result<BisetElement> {
        self.tensor.multiply(a, b)
    }

    pub fn dual(&self, a: &BisetElement) -> BisetElement {
        a.relabel(&self.table, &self.dual)
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    /// Twisted class of `Δ(R)` for subgroup class `r`.
    pub fn diagonal_class(&self, r: usize) -> usize {
        self.diagonal[r]
    }

    pub fn is_diagonal_class(&self, k: usize) -> bool {
        self.diagonal.contains(&k)
    }

    /// Twisted class of `Δ(G, φ, G)` for outer class `c`.
    pub fn full_class(&self, c: usize) -> usize {
        self.full[c]
    }

    /// Outer class of a full twisted class.
    pub fn outer_class(&self, k: usize) -> Option<usize> {
        self.outer_of[k]
    }

    /// `[G/R] ↦ [(G×G)/Δ(R)]`.
    pub fn iota(&self, x: &BurnsideElement) -> BisetElement {
        let mut coeffs = vec![0; self.table.len()];
        for (r, &c) in x.coeffs.iter().enumerate() {
            coeffs[self.diagonal[r]] += c;
        }
        BisetElement::new(self.table.clone(), coeffs).expect("sized to the table")
    }

    /// The `x` with `ι(x) = a`, if `a` is supported on diagonal classes.
    pub fn iota_preimage(&self, a: &BisetElement) -> Option<BurnsideElement> {
        if a.support().any(|k| !self.is_diagonal_class(k)) {
            return None;
        }
        Some(BurnsideElement {
            coeffs: self.diagonal.iter().map(|&k| a.coeff(k)).collect(),
        })
    }

    /// `φ̄ ↦ [(G×G)/Δ(G, φ, G)]`.
    pub fn eta(&self, c: usize) -> BisetElement {
        BisetElement::basis(self.table.clone(), self.full[c])
    }

    /// Coefficients of `a` on the full twisted diagonals, indexed by outer
    /// class.
    pub fn rho(&self, a: &BisetElement) -> Vec<i64> {
        self.full.iter().map(|&k| a.coeff(k)).collect()
    }

    /// Outer class of `φ` when every class in the support of `a` is of the
    /// form `Δ(φ(V), φ, V)` up to conjugacy.
    pub fn uniform_class(&self, a: &BisetElement) -> Option<usize> {
        self.table
            .uniform_witness(a.coeffs())
            .map(|f| self.outer_of[f].expect("full class"))
    }

    fn check(&self, a: &BisetElement) -> Result<()> {
        if Arc::ptr_eq(a.table(), &self.table) {
            Ok(())
        } else {
            Err(Error::Mismatch("element of a different biset group".into()))
        }
    }

    /// `γ ·_G γ° = [G]`.
    pub fn is_orthogonal(&self, a: &BisetElement) -> Result<bool> {
        self.check(a)?;
        Ok(self.mul(a, &self.dual(a))? == self.identity())
    }
}

/// The groups `B^Δ(G,H)` and `B^Δ(H,G)` together with the products into
/// the two double Burnside rings. When `G` and `H` are the same context
/// everything is shared with the ring.
#[derive(Debug)]
pub struct BisetPair {
    left: Arc<DoubleBurnsideRing>,
    right: Arc<DoubleBurnsideRing>,
    forward: Arc<TwistedClassTable>,
    backward: Arc<TwistedClassTable>,
    into_left: Arc<TensorProduct>,
    into_right: Arc<TensorProduct>,
    dual_forward: Vec<usize>,
    dual_backward: Vec<usize>,
}

impl BisetPair {
    pub fn new(g: Arc<GroupContext>, h: Arc<GroupContext>) -> Self {
        if Arc::ptr_eq(&g, &h) {
            return Self::square(Arc::new(DoubleBurnsideRing::new(g)));
        }
        let left = Arc::new(DoubleBurnsideRing::new(g.clone()));
        let right = Arc::new(DoubleBurnsideRing::new(h.clone()));
        let forward = Arc::new(TwistedClassTable::new(g.clone(), h.clone()));
        let backward = Arc::new(TwistedClassTable::new(h, g));
        let into_left = TensorProduct::new(forward.clone(), backward.clone(), left.table().clone());
        let into_right = TensorProduct::new(backward.clone(), forward.clone(), right.table().clone());
        BisetPair {
            dual_forward: forward.dual_map(&backward).expect("swapped groups"),
            dual_backward: backward.dual_map(&forward).expect("swapped groups"),
            into_left: Arc::new(into_left.expect("matching groups")),
            into_right: Arc::new(into_right.expect("matching groups")),
            left,
            right,
            forward,
            backward,
        }
    }

    /// The pair `(G, G)` built on an existing ring.
    pub fn square(ring: Arc<DoubleBurnsideRing>) -> Self {
        BisetPair {
            forward: ring.table().clone(),
            backward: ring.table().clone(),
            into_left: ring.tensor().clone(),
            into_right: ring.tensor().clone(),
            dual_forward: ring.dual_map().to_vec(),
            dual_backward: ring.dual_map().to_vec(),
            left: ring.clone(),
            right: ring,
        }
    }

    pub fn left_ring(&self) -> &Arc<DoubleBurnsideRing> {
        &self.left
    }

    pub fn right_ring(&self) -> &Arc<DoubleBurnsideRing> {
        &self.right
    }

    /// Twisted classes of `G × H`.
    pub fn forward(&self) -> &Arc<TwistedClassTable> {
        &self.forward
    }

    /// Twisted classes of `H × G`.
    pub fn backward(&self) -> &Arc<TwistedClassTable> {
        &self.backward
    }

    pub fn is_square(&self) -> bool {
        Arc::ptr_eq(&self.left, &self.right)
    }

    /// `a° ∈ B^Δ(H, G)` for `a ∈ B^Δ(G, H)`.
    pub fn dual(&self, a: &BisetElement) -> BisetElement {
        a.relabel(&self.backward, &self.dual_forward)
    }

    /// `b° ∈ B^Δ(G, H)` for `b ∈ B^Δ(H, G)`.
    pub fn dual_back(&self, b: &BisetElement) -> BisetElement {
        b.relabel(&self.forward, &self.dual_backward)
    }

    /// `a ·_H b ∈ B^Δ(G, G)`.
    pub fn into_left(&self, a: &BisetElement, b: &BisetElement) -> Result<BisetElement> {
        self.into_left.multiply(a, b)
    }

    /// `b ·_G a ∈ B^Δ(H, H)`.
    pub fn into_right(&self, b: &BisetElement, a: &BisetElement) -> Result<BisetElement> {
        self.into_right.multiply(b, a)
    }

    pub fn left_product(&self) -> &Arc<TensorProduct> {
        &self.into_left
    }

    pub fn right_product(&self) -> &Arc<TensorProduct> {
        &self.into_right
    }
}
