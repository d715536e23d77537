//! Membership in the class of Berge trigraphs whose switchable pairs form at
//! most one small (one pair) or light (two pairs) component.

use serde::{Deserialize, Serialize};

use crate::berge::{is_berge, HoleWitness};
use crate::trigraph::Trigraph;
use crate::vertex_set::VertexSet;

/// Shape of the (at most one) switchable component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SwitchableComponent {
    None,
    /// A single switchable pair `xy`.
    Small { x: usize, y: usize },
    /// Switchable pairs `xv` and `vy`.
    Light { x: usize, v: usize, y: usize },
}

impl SwitchableComponent {
    pub fn vertices(self) -> VertexSet {
        match self {
            SwitchableComponent::None => VertexSet::EMPTY,
            SwitchableComponent::Small { x, y } => VertexSet::from_iter([x, y]),
            SwitchableComponent::Light { x, v, y } => VertexSet::from_iter([x, v, y]),
        }
    }

    pub fn is_small(self) -> bool {
        matches!(self, SwitchableComponent::Small { .. })
    }

    pub fn is_light(self) -> bool {
        matches!(self, SwitchableComponent::Light { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum ClassFViolation {
    MultipleSwitchableComponents { count: usize },
    ComponentTooLarge { vertices: VertexSet },
    SmallCommonNeighbor { x: usize, y: usize, common: VertexSet },
    LightCenterNotIsolated { v: usize, neighbors: VertexSet },
    LightEndsNotStronglyAntiadjacent { x: usize, y: usize },
    LightCommonNeighbors { x: usize, y: usize, common: VertexSet },
    NotBerge { witness: HoleWitness },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassFVerdict {
    Yes { component: SwitchableComponent },
    No { violation: ClassFViolation },
}

impl ClassFVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, ClassFVerdict::Yes { .. })
    }

    pub fn component(&self) -> Option<SwitchableComponent> {
        match self {
            ClassFVerdict::Yes { component } => Some(*component),
            ClassFVerdict::No { .. } => None,
        }
    }
}

/// Checks the switchable-component conditions only (no Berge test).
pub fn switchable_shape(t: &Trigraph) -> Result<SwitchableComponent, ClassFViolation> {
    let components = t.switchable_components();
    match components.len() {
        0 => return Ok(SwitchableComponent::None),
        1 => {}
        count => return Err(ClassFViolation::MultipleSwitchableComponents { count }),
    }
    let d = components[0];
    let pairs = t.switchable_pairs();
    match (d.len(), pairs.len()) {
        (2, 1) => {
            let (x, y) = pairs[0];
            let common = t.neighbors(x) & t.neighbors(y);
            if !common.is_empty() {
                return Err(ClassFViolation::SmallCommonNeighbor { x, y, common });
            }
            Ok(SwitchableComponent::Small { x, y })
        }
        (3, 2) => {
            let v = d.iter().find(|&w| t.semi_neighbors(w).len() == 2).expect("path centre");
            let ends = t.semi_neighbors(v);
            let (x, y) = (ends.min().unwrap(), ends.max().unwrap());
            let outside = t.neighbors(v) - ends;
            if !outside.is_empty() {
                return Err(ClassFViolation::LightCenterNotIsolated { v, neighbors: outside });
            }
            if !t.is_strongly_antiadjacent(x, y) {
                return Err(ClassFViolation::LightEndsNotStronglyAntiadjacent { x, y });
            }
            let common = t.neighbors(x) & t.neighbors(y);
            if common != VertexSet::singleton(v) {
                return Err(ClassFViolation::LightCommonNeighbors { x, y, common });
            }
            Ok(SwitchableComponent::Light { x, v, y })
        }
        _ => Err(ClassFViolation::ComponentTooLarge { vertices: d }),
    }
}

/// Class-F membership: switchable-component conditions first, then the
/// Berge test.
pub fn in_class_f(t: &Trigraph) -> ClassFVerdict {
    match switchable_shape(t) {
        Err(violation) => ClassFVerdict::No { violation },
        Ok(component) => match is_berge(t).witness {
            Some(witness) => ClassFVerdict::No { violation: ClassFViolation::NotBerge { witness } },
            None => ClassFVerdict::Yes { component },
        },
    }
}
