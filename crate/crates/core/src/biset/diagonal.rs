use crate::group::{FiniteGroup, Morphism, Subgroup};

/// The twisted diagonal subgroup `Δ(R, α, S) = {(α(s), s) : s ∈ S}` of
/// `G × H`, for an isomorphism `α: S → R` with `S ≤ H`, `R ≤ G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedDiagonal {
    alpha: Morphism,
}

impl TwistedDiagonal {
    /// `alpha` must be an isomorphism onto its codomain.
    pub fn new(alpha: Morphism) -> Self {
        debug_assert!(alpha.is_bijective());
        TwistedDiagonal { alpha }
    }

    /// `Δ(R) = Δ(R, id, R)`.
    pub fn diagonal(parent: &FiniteGroup, r: &Subgroup) -> Self {
        TwistedDiagonal::new(Morphism::identity(parent, r))
    }

    /// First component `R = p1(Δ)`.
    pub fn left(&self) -> &Subgroup {
        self.alpha.codomain()
    }

    /// Second component `S = p2(Δ)`.
    pub fn right(&self) -> &Subgroup {
        self.alpha.domain()
    }

    pub fn alpha(&self) -> &Morphism {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.alpha.domain().order()
    }

    /// The pairs `(α(s), s)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.right().iter().map(|s| (self.alpha.apply(s), s))
    }

    /// `Δ(R, α, S)° = Δ(S, α^{-1}, R)`.
    pub fn dual(&self) -> TwistedDiagonal {
        TwistedDiagonal::new(self.alpha.inverse())
    }

    /// `^{(x,y)}Δ(R, α, S) = Δ(^xR, c_x α c_y^{-1}, ^yS)`.
    pub fn conjugate(&self, g: &FiniteGroup, h: &FiniteGroup, x: usize, y: usize) -> TwistedDiagonal {
        let s = h.conjugate_subgroup(y, self.right());
        let mut map = vec![usize::MAX; h.order()];
        let y_inv = h.inv(y);
        for t in s.iter() {
            map[t] = g.conj(x, self.alpha.apply(h.conj(y_inv, t)));
        }
        let r = g.conjugate_subgroup(x, self.left());
        TwistedDiagonal::new(Morphism::from_dense(s, r, map, g.order()))
    }

    /// Containment as subgroups of `G × H`.
    pub fn is_subgroup_of(&self, other: &TwistedDiagonal) -> bool {
        self.right().is_subset(other.right())
            && self.right().iter().all(|s| other.alpha.apply(s) == self.alpha.apply(s))
    }

    /// Composition as relations, `L * M`, for `L ≤ G × H` (self) and
    /// `M ≤ H × K`:
    /// `Δ(R, α, S) * Δ(S', β, T) = Δ(α(S ∩ S'), α β, β^{-1}(S ∩ S'))`.
    pub fn star(&self, m: &TwistedDiagonal) -> TwistedDiagonal {
        let middle = self.right();
        let beta = &m.alpha;
        let k_order = m.right_parent_order();
        let g_order = self.left_parent_order();
        let mut map = vec![usize::MAX; k_order];
        let mut domain = Vec::new();
        let mut image = Vec::new();
        for t in m.right().iter() {
            let b = beta.apply(t);
            if middle.contains(b) {
                let a = self.alpha.apply(b);
                map[t] = a;
                domain.push(t);
                image.push(a);
            }
        }
        TwistedDiagonal::new(Morphism::from_dense(
            Subgroup::from_members(k_order, domain),
            Subgroup::from_members(g_order, image),
            map,
            g_order,
        ))
    }

    /// `^{(y,1)}Δ(S', β, T)` for `y` in the left group; used for the
    /// double-coset summands of the tensor product.
    pub(crate) fn conjugate_left(&self, g: &FiniteGroup, y: usize) -> TwistedDiagonal {
        let mut map = vec![usize::MAX; self.right_parent_order()];
        for t in self.right().iter() {
            map[t] = g.conj(y, self.alpha.apply(t));
        }
        TwistedDiagonal::new(Morphism::from_dense(
            self.right().clone(),
            g.conjugate_subgroup(y, self.left()),
            map,
            g.order(),
        ))
    }

    fn right_parent_order(&self) -> usize {
        self.alpha.domain_parent_order()
    }

    fn left_parent_order(&self) -> usize {
        self.alpha.codomain_parent_order()
    }
}

/// The normalizer `N_{G×H}(Δ(R, α, S))`, as the list of pairs `(g, h)` in
/// `N_G(R) × N_H(S)` with `c_g α = α c_h` on `S`.
pub fn normalizer_pairs(g: &FiniteGroup, h: &FiniteGroup, delta: &TwistedDiagonal) -> Vec<(usize, usize)> {
    let (r, s) = (delta.left(), delta.right());
    let gens = h.generators_of(s);
    let ng = g.normalizer(r);
    let nh = h.normalizer(s);
    let mut pairs = Vec::new();
    for y in nh.iter() {
        let targets: Vec<usize> = gens.iter().map(|&t| delta.alpha.apply(h.conj(y, t))).collect();
        for x in ng.iter() {
            if gens
                .iter()
                .zip(&targets)
                .all(|(&t, &target)| g.conj(x, delta.alpha.apply(t)) == target)
            {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// `(N_α, N_{α^{-1}})`:
///
/// * `N_α = {h ∈ N_H(S) | ∃ g ∈ N_G(R): α c_h = c_g α on S}`
/// * `N_{α^{-1}} = {g ∈ N_G(R) | ∃ h ∈ N_H(S): α c_h = c_g α on S}`
///
/// They satisfy `|N_{G×H}(Δ)| = |N_{α^{-1}}|·|C_H(S)| = |C_G(R)|·|N_α|`.
pub fn n_alpha(g: &FiniteGroup, h: &FiniteGroup, delta: &TwistedDiagonal) -> (Subgroup, Subgroup) {
    let pairs = normalizer_pairs(g, h, delta);
    let n_alpha = Subgroup::from_members(h.order(), pairs.iter().map(|&(_, y)| y).collect());
    let n_alpha_inv = Subgroup::from_members(g.order(), pairs.iter().map(|&(x, _)| x).collect());
    (n_alpha, n_alpha_inv)
}
