use repcat::{Algebra, Representation};

/// An object of the cluster category of a hereditary algebra, written as a
/// module plus shifted projectives `⊕ (ΣP_i)^{s_i}`.
///
/// Only the module part is seen by the submodule geometry; shifted
/// projectives contribute through index and coindex alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterObject {
    pub module_part: Representation,
    pub shifted: Vec<usize>,
}

impl ClusterObject {
    pub fn module(m: Representation) -> Self {
        let n = m.dims().len();
        Self { module_part: m, shifted: vec![0; n] }
    }

    /// `ΣP_i`.
    pub fn shifted_projective(alg: &Algebra, i: usize) -> Self {
        let mut shifted = vec![0; alg.n()];
        shifted[i - 1] = 1;
        Self { module_part: alg.zero_rep(), shifted }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::module(alg.zero_rep())
    }

    pub fn direct_sum(&self, alg: &Algebra, o: &ClusterObject) -> Self {
        Self {
            module_part: alg.direct_sum(&self.module_part, &o.module_part),
            shifted: self.shifted.iter().zip(&o.shifted).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.module_part.is_zero() && self.shifted.iter().all(|&s| s == 0)
    }

    pub fn is_module(&self) -> bool {
        self.shifted.iter().all(|&s| s == 0)
    }

    /// The module part plus the shift multiplicities.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"module": self.module_part.to_json(), "shifted": self.shifted})
    }

    /// Canonical text form of [`ClusterObject::to_json`].
    pub fn canonical_json(&self) -> String {
        self.to_json().to_string()
    }
}
