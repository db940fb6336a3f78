use std::sync::{Arc, OnceLock};

use super::{FiniteGroup, OuterAutomorphismGroup, SubgroupLattice};

/// A group bundled with its subgroup lattice and (lazily) its automorphisms.
/// Everything downstream holds one of these behind an `Arc`; two contexts
/// describe the same group exactly when the `Arc`s are the same.
#[derive(Debug)]
pub struct GroupContext {
    group: FiniteGroup,
    lattice: SubgroupLattice,
    out: OnceLock<OuterAutomorphismGroup>,
    name: String,
}

impl GroupContext {
    pub fn new(group: FiniteGroup) -> Arc<Self> {
        let lattice = SubgroupLattice::new(&group);
        let name = group
            .provenance()
            .map(str::to_string)
            .unwrap_or_else(|| format!("group of order {}", group.order()));
        Arc::new(GroupContext {
            group,
            lattice,
            out: OnceLock::new(),
            name,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn out(&self) -> &OuterAutomorphismGroup {
        self.out.get_or_init(|| OuterAutomorphismGroup::new(&self.group))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}
