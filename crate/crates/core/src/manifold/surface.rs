use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

/// A tracked embedded surface and its intersection numbers with the other
/// tracked surfaces of the same manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClass {
    pub label: String,
    pub genus: u64,
    pub self_int: i64,
    /// Pairings with other labels; absent means 0. Never contains `label`.
    pub pairings: BTreeMap<String, i64>,
    pub in_cusp_neighborhood: bool,
    pub is_symplectic_torus: bool,
}

impl SurfaceClass {
    pub fn new(label: impl Into<String>, genus: u64, self_int: i64) -> Self {
        Self {
            label: label.into(),
            genus,
            self_int,
            pairings: BTreeMap::new(),
            in_cusp_neighborhood: false,
            is_symplectic_torus: false,
        }
    }

    pub fn torus(label: impl Into<String>) -> Self {
        Self::new(label, 1, 0)
    }

    pub fn cusp_fiber(label: impl Into<String>) -> Self {
        Self { in_cusp_neighborhood: true, is_symplectic_torus: true, ..Self::torus(label) }
    }

    pub fn symplectic_torus(label: impl Into<String>) -> Self {
        Self { is_symplectic_torus: true, ..Self::torus(label) }
    }

    pub fn is_torus(&self) -> bool {
        self.genus == 1
    }

    pub fn pairing_with(&self, other: &str) -> i64 {
        if other == self.label {
            self.self_int
        } else {
            self.pairings.get(other).copied().unwrap_or(0)
        }
    }

    pub(crate) fn set_pairing(&mut self, other: &str, value: i64) {
        if value == 0 {
            self.pairings.remove(other);
        } else {
            self.pairings.insert(other.to_string(), value);
        }
    }

    pub(crate) fn rename_pairing(&mut self, from: &str, to: &str) {
        if let Some(v) = self.pairings.remove(from) {
            self.pairings.insert(to.to_string(), v);
        }
    }
}
