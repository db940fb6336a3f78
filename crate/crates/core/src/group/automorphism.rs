use std::collections::HashMap;

use super::{isomorphisms, FiniteGroup, Morphism};

/// `Aut(G)`, `Inn(G)` and a fixed transversal of `Inn(G)` in `Aut(G)`.
#[derive(Clone, Debug)]
pub struct OuterAutomorphismGroup {
    automorphisms: Vec<Morphism>,
    inner: Vec<usize>,
    coset_reps: Vec<usize>,
    coset_of: Vec<usize>,
    table: Vec<usize>,
    key_generators: Vec<usize>,
    by_key: HashMap<Vec<usize>, usize>,
}

impl OuterAutomorphismGroup {
    pub fn new(g: &FiniteGroup) -> Self {
        let whole = g.whole();
        let automorphisms = isomorphisms(g, &whole, g, &whole);
        let key_generators = g.generators_of(&whole);
        let by_key: HashMap<Vec<usize>, usize> = automorphisms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.images(&key_generators), i))
            .collect();
        let lookup = |images: Vec<usize>| by_key[&images];

        let mut inner = Vec::new();
        for x in g.elements() {
            let k = lookup(key_generators.iter().map(|&s| g.conj(x, s)).collect());
            if !inner.contains(&k) {
                inner.push(k);
            }
        }

        // The identity coset comes first, then cosets by first appearance.
        let identity = lookup(key_generators.clone());
        let mut coset_of = vec![usize::MAX; automorphisms.len()];
        let mut coset_reps = Vec::new();
        let order = std::iter::once(identity).chain((0..automorphisms.len()).filter(|&i| i != identity));
        for i in order {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = coset_reps.len();
            coset_reps.push(i);
            for &k in &inner {
                let product = automorphisms[k].compose(&automorphisms[i]);
                coset_of[lookup(product.images(&key_generators))] = c;
            }
        }

        let m = coset_reps.len();
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let product = automorphisms[coset_reps[a]].compose(&automorphisms[coset_reps[b]]);
                table[a * m + b] = coset_of[lookup(product.images(&key_generators))];
            }
        }

        OuterAutomorphismGroup {
            automorphisms,
            inner,
            coset_reps,
            coset_of,
            table,
            key_generators,
            by_key,
        }
    }

    pub fn automorphisms(&self) -> &[Morphism] {
        &self.automorphisms
    }

    pub fn inner(&self) -> impl Iterator<Item = &Morphism> {
        self.inner.iter().map(|&i| &self.automorphisms[i])
    }

    pub fn inner_count(&self) -> usize {
        self.inner.len()
    }

    /// `|Out(G)|`.
    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }

    /// Representative automorphism of outer class `c`; class 0 is the identity.
    pub fn representative(&self, c: usize) -> &Morphism {
        &self.automorphisms[self.coset_reps[c]]
    }

    /// Outer class of an automorphism of `G`.
    pub fn class_of(&self, automorphism: &Morphism) -> usize {
        self.coset_of[self.by_key[&automorphism.images(&self.key_generators)]]
    }

    /// Outer class of `a ∘ b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.compose(a, b) == 0)
            .expect("Out(G) is a group")
    }

    pub fn is_inner(&self, automorphism: &Morphism) -> bool {
        self.class_of(automorphism) == 0
    }
}
