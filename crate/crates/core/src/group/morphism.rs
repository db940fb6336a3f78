use super::{FiniteGroup, Subgroup};

const UNDEFINED: usize = usize::MAX;

/// A homomorphism between subgroups, possibly of different parent groups.
///
/// The map is stored densely over the domain's parent group; positions
/// outside the domain hold a sentinel.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    domain: Subgroup,
    codomain: Subgroup,
    map: Vec<usize>,
    codomain_parent_order: usize,
}

impl Morphism {
    pub(crate) fn from_dense(
        domain: Subgroup,
        codomain: Subgroup,
        map: Vec<usize>,
        codomain_parent_order: usize,
    ) -> Self {
        Morphism {
            domain,
            codomain,
            map,
            codomain_parent_order,
        }
    }

    pub fn identity(parent: &FiniteGroup, s: &Subgroup) -> Self {
        let mut map = vec![UNDEFINED; parent.order()];
        for x in s.iter() {
            map[x] = x;
        }
        Morphism::from_dense(s.clone(), s.clone(), map, parent.order())
    }

    /// `c_x` restricted to `s`, landing in `x s x^{-1}`.
    pub fn conjugation(parent: &FiniteGroup, x: usize, s: &Subgroup) -> Self {
        let mut map = vec![UNDEFINED; parent.order()];
        for g in s.iter() {
            map[g] = parent.conj(x, g);
        }
        Morphism::from_dense(s.clone(), parent.conjugate_subgroup(x, s), map, parent.order())
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    pub(crate) fn domain_parent_order(&self) -> usize {
        self.map.len()
    }

    pub(crate) fn codomain_parent_order(&self) -> usize {
        self.codomain_parent_order
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        let y = self.map[x];
        debug_assert!(y != UNDEFINED, "element {x} outside the domain");
        y
    }

    pub fn try_apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().filter(|&y| y != UNDEFINED)
    }

    /// `self ∘ inner`. The codomain of `inner` must lie in our domain.
    pub fn compose(&self, inner: &Morphism) -> Morphism {
        let mut map = vec![UNDEFINED; inner.map.len()];
        for x in inner.domain.iter() {
            map[x] = self.apply(inner.apply(x));
        }
        let image: Vec<usize> = inner.domain.iter().map(|x| map[x]).collect();
        Morphism::from_dense(
            inner.domain.clone(),
            Subgroup::from_members(self.codomain_parent_order, image),
            map,
            self.codomain_parent_order,
        )
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Morphism {
        let mut map = vec![UNDEFINED; self.codomain_parent_order];
        for x in self.domain.iter() {
            map[self.apply(x)] = x;
        }
        Morphism::from_dense(self.codomain.clone(), self.domain.clone(), map, self.map.len())
    }

    /// Restriction to a subgroup of the domain; the codomain becomes the image.
    pub fn restrict(&self, s: &Subgroup) -> Morphism {
        let mut map = vec![UNDEFINED; self.map.len()];
        for x in s.iter() {
            map[x] = self.apply(x);
        }
        let image = s.iter().map(|x| map[x]).collect();
        Morphism::from_dense(
            s.clone(),
            Subgroup::from_members(self.codomain_parent_order, image),
            map,
            self.codomain_parent_order,
        )
    }

    pub fn is_homomorphism(&self, domain_parent: &FiniteGroup, codomain_parent: &FiniteGroup) -> bool {
        self.domain.iter().all(|x| {
            self.domain
                .iter()
                .all(|y| self.apply(domain_parent.mul(x, y)) == codomain_parent.mul(self.apply(x), self.apply(y)))
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut image: Vec<usize> = self.domain.iter().map(|x| self.apply(x)).collect();
        image.sort_unstable();
        image == self.codomain.members()
    }

    /// Images of `points`, in order.
    pub fn images(&self, points: &[usize]) -> Vec<usize> {
        points.iter().map(|&x| self.apply(x)).collect()
    }
}

/// All isomorphisms `s -> r`, where `s ≤ domain_parent` and
/// `r ≤ codomain_parent`.
///
/// A generating set of `s` is fixed and its images are chosen among
/// elements of `r` of matching order, backtracking as soon as a partial
/// assignment fails to extend to a homomorphism. The output order is the
/// lexicographic order of the generator images.
pub fn isomorphisms(
    domain_parent: &FiniteGroup,
    s: &Subgroup,
    codomain_parent: &FiniteGroup,
    r: &Subgroup,
) -> Vec<Morphism> {
    if s.order() != r.order() {
        return Vec::new();
    }
    let gens = domain_parent.generators_of(s);
    let mut by_order = vec![Vec::new(); r.order() + 1];
    for y in r.iter() {
        by_order[codomain_parent.element_order(y)].push(y);
    }
    let mut out = Vec::new();
    let mut search = IsoSearch {
        domain: domain_parent,
        codomain: codomain_parent,
        gens: &gens,
        by_order: &by_order,
        images: Vec::new(),
    };
    let mut map = vec![UNDEFINED; domain_parent.order()];
    map[0] = 0;
    search.extend(&mut map, &[0], &mut |map| {
        out.push(Morphism::from_dense(
            s.clone(),
            r.clone(),
            map.to_vec(),
            codomain_parent.order(),
        ))
    });
    out
}

struct IsoSearch<'a> {
    domain: &'a FiniteGroup,
    codomain: &'a FiniteGroup,
    gens: &'a [usize],
    by_order: &'a [Vec<usize>],
    images: Vec<usize>,
}

impl IsoSearch<'_> {
    /// `mapped` lists the domain elements already carrying an image; they
    /// form the subgroup generated by the first `images.len()` generators.
    fn extend(&mut self, map: &mut [usize], mapped: &[usize], emit: &mut dyn FnMut(&[usize])) {
        let depth = self.images.len();
        if depth == self.gens.len() {
            emit(map);
            return;
        }
        let g = self.gens[depth];
        let mut image_set = vec![false; self.codomain.order()];
        for &x in mapped {
            image_set[map[x]] = true;
        }
        let candidates = &self.by_order[self.domain.element_order(g)];
        for &y in candidates {
            if image_set[y] {
                continue;
            }
            self.images.push(y);
            let mut trial = map.to_vec();
            if let Some(closure) = self.close(&mut trial, mapped) {
                self.extend(&mut trial, &closure, emit);
            }
            self.images.pop();
        }
    }

    /// Extends the map along right multiplication by the active generators.
    /// Returns the mapped elements, or `None` on a conflict or a collision.
    fn close(&self, map: &mut [usize], mapped: &[usize]) -> Option<Vec<usize>> {
        let active = self.images.len();
        let mut elements = mapped.to_vec();
        let mut used = vec![false; self.codomain.order()];
        for &x in mapped {
            used[map[x]] = true;
        }
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for k in 0..active {
                let xg = self.domain.mul(x, self.gens[k]);
                let image = self.codomain.mul(map[x], self.images[k]);
                if map[xg] == UNDEFINED {
                    if used[image] {
                        return None;
                    }
                    used[image] = true;
                    map[xg] = image;
                    elements.push(xg);
                } else if map[xg] != image {
                    return None;
                }
            }
            i += 1;
        }
        Some(elements)
    }
}
