use std::collections::{HashMap, HashSet};

use super::{FiniteGroup, Subgroup};

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Canonically smallest member of the class.
    pub representative: Subgroup,
    /// All conjugates, in canonical order.
    pub members: Vec<Subgroup>,
    /// `witnesses[i]` conjugates the representative onto `members[i]`.
    pub witnesses: Vec<usize>,
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    /// Generating set of the representative.
    pub generators: Vec<usize>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes of subgroups, ordered by ascending subgroup order and
/// then lexicographically on the representatives' member lists.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    classes: Vec<SubgroupClass>,
    /// `contained[i * n + j]`: class `i` is contained in a conjugate of class `j`.
    contained: Vec<bool>,
    index: HashMap<Subgroup, (usize, usize)>,
}

impl SubgroupLattice {
    pub fn new(g: &FiniteGroup) -> Self {
        let subgroups = all_subgroups(g);
        let mut assigned: HashSet<Subgroup> = HashSet::new();
        let mut classes = Vec::new();
        let mut index = HashMap::new();
        for s in &subgroups {
            if assigned.contains(s) {
                continue;
            }
            let mut conjugates: Vec<(Subgroup, usize)> = Vec::new();
            for x in g.elements() {
                let c = g.conjugate_subgroup(x, s);
                if !conjugates.iter().any(|(d, _)| *d == c) {
                    conjugates.push((c, x));
                }
            }
            conjugates.sort_by(|a, b| a.0.canonical_cmp(&b.0));
            let k = classes.len();
            for (i, (c, _)) in conjugates.iter().enumerate() {
                index.insert(c.clone(), (k, i));
            }
            assigned.extend(conjugates.iter().map(|(c, _)| c.clone()));
            classes.push(SubgroupClass {
                representative: s.clone(),
                normalizer: g.normalizer(s),
                centralizer: g.centralizer(s),
                generators: g.generators_of(s),
                witnesses: conjugates.iter().map(|&(_, x)| x).collect(),
                members: conjugates.into_iter().map(|(c, _)| c).collect(),
            });
        }
        let n = classes.len();
        let mut contained = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                contained[i * n + j] = classes[j]
                    .members
                    .iter()
                    .any(|m| classes[i].representative.is_subset(m));
            }
        }
        SubgroupLattice {
            classes,
            contained,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i].representative
    }

    /// Class `i` is contained in some conjugate of class `j`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.contained[i * self.classes.len() + j]
    }

    /// Class index of `s` and an element `x` with `x R x^{-1} = s`, `R` the
    /// class representative.
    pub fn locate(&self, s: &Subgroup) -> Option<(usize, usize)> {
        self.index.get(s).map(|&(c, m)| (c, self.classes[c].witnesses[m]))
    }

    pub fn class_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s).map(|&(c, _)| c)
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn subgroup_count(&self) -> usize {
        self.index.len()
    }
}

/// Every subgroup of `g`, canonically sorted. Starts from the cyclic
/// subgroups and closes under joining with a cyclic subgroup.
fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();
    for x in g.elements() {
        let c = g.generate(&[x]);
        if !cyclic.iter().any(|(d, _)| *d == c) {
            cyclic.push((c, x));
        }
    }
    let mut found: HashMap<Subgroup, Vec<usize>> = HashMap::new();
    let mut queue = Vec::new();
    for (c, x) in &cyclic {
        let gens = if *x == 0 { vec![] } else { vec![*x] };
        found.insert(c.clone(), gens.clone());
        queue.push((c.clone(), gens));
    }
    while let Some((s, gens)) = queue.pop() {
        for (c, x) in &cyclic {
            if c.is_subset(&s) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*x);
            let joined = g.generate(&joined_gens);
            if !found.contains_key(&joined) {
                found.insert(joined.clone(), joined_gens.clone());
                queue.push((joined, joined_gens));
            }
        }
    }
    let mut all: Vec<Subgroup> = found.into_keys().collect();
    all.sort_by(|a, b| a.canonical_cmp(b));
    all
}
