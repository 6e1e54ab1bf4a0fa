use crate::admissible::{complete_word, AdmissibleWord};
use crate::coxgraph::{CoxeterGraph, CoxeterMatrix, Orientation, VertexOrder};
use crate::rootsys::{GroupElement, RootSystem};

use super::PreprojError;

/// A root system together with a Coxeter element `c = s_n ... s_1`, its
/// orientation (arrows from later to earlier generators) and the complete
/// word `K` with `ρ(K) = c`.
#[derive(Debug, Clone)]
pub struct CoxeterContext {
    system: RootSystem,
    order: VertexOrder,
    orientation: Orientation,
    complete: AdmissibleWord,
    c: GroupElement,
}

impl CoxeterContext {
    pub fn new(system: RootSystem, order: VertexOrder) -> Result<Self, PreprojError> {
        if order.len() != system.rank() {
            return Err(crate::coxgraph::GraphError::NotAPermutation { n: system.rank() }.into());
        }
        let orientation = Orientation::from_order(system.graph(), &order);
        let complete = complete_word(&orientation)?;
        let c = system.coxeter_element(&order);
        if !system.element_of_word(complete.word()).approx_eq(&c) {
            return Err(PreprojError::FormulaMismatch(format!(
                "complete word {} does not represent the Coxeter element",
                complete.word()
            )));
        }
        Ok(CoxeterContext {
            system,
            order,
            orientation,
            complete,
            c,
        })
    }

    pub fn from_matrix(matrix: CoxeterMatrix, order: VertexOrder) -> Result<Self, PreprojError> {
        Self::new(RootSystem::from_matrix(matrix), order)
    }

    /// The context whose Coxeter element is the identity order `s_n ... s_1`.
    pub fn standard(matrix: CoxeterMatrix) -> Result<Self, PreprojError> {
        let n = matrix.rank();
        Self::from_matrix(matrix, VertexOrder::identity(n))
    }

    pub fn from_orientation(
        system: RootSystem,
        orientation: &Orientation,
    ) -> Result<Self, PreprojError> {
        let order = orientation.to_order()?;
        Self::new(system, order)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.system.graph()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> &VertexOrder {
        &self.order
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// `K = v_n ... v_1`.
    pub fn complete_word(&self) -> &AdmissibleWord {
        &self.complete
    }

    pub fn coxeter_element(&self) -> &GroupElement {
        &self.c
    }

    /// Context for `c⁻¹ = s_1 ... s_n`.
    pub fn inverse_context(&self) -> Self {
        CoxeterContext::new(self.system.clone(), self.order.reversed())
            .expect("reversed order is valid")
    }

    /// `2 n (n + 1)`.
    pub fn default_r_max(&self) -> usize {
        let n = self.rank();
        2 * n * (n + 1)
    }
}
