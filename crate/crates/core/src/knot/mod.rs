//! Knot presentations and the symmetrized Alexander polynomial.
//!
//! Two independent routes compute `Δ_K`: the Seifert-matrix determinant
//! `det(tV - V^T)` and the reduced Burau representation of a braid word.
//! Both normalize to the centered form `a_0 + Σ a_n (t^n + t^-n)` with
//! `Δ(1) = +1`.

mod braid;
mod det;
mod seifert;

pub use braid::{alexander_from_braid, parse_braid, BraidWord};
pub use det::{determinant, PolyMatrix};
pub use seifert::{alexander_from_seifert, SeifertMatrix};

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::{LaurentError, LaurentPoly, Parity};

/// Variable name for Alexander polynomials before they are attached to a
/// homology class.
pub const ALEXANDER_VAR: &str = "t";

/// Reserved table name of the left-handed trefoil used to build the
/// fibered manifold.
pub const K_PRIME: &str = "K-prime";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotError {
    BraidParse { token: String, message: &'static str },
    GeneratorOutOfRange { letter: i32, strands: usize },
    NotAKnot { components: usize },
    NotSquare,
    OddSize(usize),
    NotUnimodular(BigInt),
    InexactBurauDivision,
    NotSymmetric(LaurentPoly),
    BadNormalization(BigInt),
    DegreeExceedsGenus { degree: u64, genus: u64 },
    GenusExceedsSurface { genus: u64, surface_genus: u64 },
    GenusAbsent,
    NoPresentation,
    PresentationMismatch { seifert: LaurentPoly, braid: LaurentPoly },
    Laurent(LaurentError),
}

impl fmt::Display for KnotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotError::BraidParse { token, message } => write!(f, "braid parse error at `{token}`: {message}"),
            KnotError::GeneratorOutOfRange { letter, strands } => {
                write!(f, "generator {letter} out of range for {strands} strands")
            }
            KnotError::NotAKnot { components } => write!(f, "braid closure has {components} components, not 1"),
            KnotError::NotSquare => f.write_str("Seifert matrix is not square"),
            KnotError::OddSize(n) => write!(f, "Seifert matrix has odd size {n}"),
            KnotError::NotUnimodular(d) => write!(f, "V - V^T has determinant {d}, expected ±1"),
            KnotError::InexactBurauDivision => {
                f.write_str("Burau determinant is not divisible by 1 + t + ... + t^(n-1)")
            }
            KnotError::NotSymmetric(p) => write!(f, "Alexander polynomial `{p}` cannot be centered symmetrically"),
            KnotError::BadNormalization(v) => write!(f, "Alexander polynomial has Δ(1) = {v}, expected ±1"),
            KnotError::DegreeExceedsGenus { degree, genus } => write!(f, "degree {degree} exceeds genus {genus}"),
            KnotError::GenusExceedsSurface { genus, surface_genus } => {
                write!(f, "genus {genus} exceeds Seifert surface genus {surface_genus}")
            }
            KnotError::GenusAbsent => f.write_str("knot genus not set"),
            KnotError::NoPresentation => f.write_str("knot has neither a Seifert matrix nor a braid word"),
            KnotError::PresentationMismatch { seifert, braid } => {
                write!(f, "Seifert route gives `{seifert}` but Burau route gives `{braid}`")
            }
            KnotError::Laurent(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for KnotError {}

impl From<LaurentError> for KnotError {
    fn from(e: LaurentError) -> Self {
        KnotError::Laurent(e)
    }
}

/// Centers a polynomial defined up to `±t^k` and fixes the sign so that
/// `Δ(1) = +1`.
pub fn normalize_alexander(raw: LaurentPoly) -> Result<LaurentPoly, KnotError> {
    let (lo, hi) = match (raw.min_exponent(), raw.max_exponent()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(KnotError::BadNormalization(BigInt::zero())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(KnotError::NotSymmetric(raw));
    }
    let centered = raw.shift(-(lo + hi) / 2);
    if !centered.is_symmetric(Parity::Plus) {
        return Err(KnotError::NotSymmetric(centered));
    }
    let at_one = centered.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(KnotError::BadNormalization(at_one));
    }
    Ok(if at_one.is_negative() { centered.neg() } else { centered })
}

/// A knot with its computed invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub seifert: Option<SeifertMatrix>,
    pub braid: Option<BraidWord>,
    pub alexander: LaurentPoly,
    pub degree: u64,
    pub top: BigInt,
    pub genus: Option<u64>,
    /// Set when the genus was filled in from the degree.
    pub genus_defaulted: bool,
}

impl KnotRecord {
    /// Computes `Δ_K` from the Seifert matrix when present, otherwise from
    /// the braid word, and checks the genus bounds.
    pub fn new(
        name: impl Into<String>,
        seifert: Option<SeifertMatrix>,
        braid: Option<BraidWord>,
        genus: Option<u64>,
    ) -> Result<Self, KnotError> {
        let alexander = match (&seifert, &braid) {
            (Some(v), _) => alexander_from_seifert(v)?,
            (None, Some(b)) => alexander_from_braid(b)?,
            (None, None) => return Err(KnotError::NoPresentation),
        };
        let (degree, top) = alexander.degree_and_top()?;
        if let Some(g) = genus {
            if degree > g {
                return Err(KnotError::DegreeExceedsGenus { degree, genus: g });
            }
            if let Some(v) = &seifert {
                if g > v.surface_genus() {
                    return Err(KnotError::GenusExceedsSurface { genus: g, surface_genus: v.surface_genus() });
                }
            }
        }
        Ok(Self { name: name.into(), seifert, braid, alexander, degree, top, genus, genus_defaulted: false })
    }

    pub fn from_seifert(name: impl Into<String>, v: SeifertMatrix, genus: Option<u64>) -> Result<Self, KnotError> {
        Self::new(name, Some(v), None, genus)
    }

    pub fn from_braid(name: impl Into<String>, b: BraidWord, genus: Option<u64>) -> Result<Self, KnotError> {
        Self::new(name, None, Some(b), genus)
    }

    /// The left-handed trefoil.
    pub fn k_prime() -> Self {
        let v = SeifertMatrix::new(alloc::vec![alloc::vec![-1, 1], alloc::vec![0, -1]]).expect("valid Seifert matrix");
        let b = parse_braid("2: -1 -1 -1").expect("valid braid");
        Self::new(K_PRIME, Some(v), Some(b), Some(1)).expect("trefoil invariants")
    }

    /// Fills in `genus := d` when absent. This assumes maximal degree.
    pub fn with_default_genus(mut self) -> Self {
        if self.genus.is_none() {
            self.genus = Some(self.degree);
            self.genus_defaulted = true;
        }
        self
    }

    pub fn genus(&self) -> Result<u64, KnotError> {
        self.genus.ok_or(KnotError::GenusAbsent)
    }

    /// Overrides the genus, re-checking the bounds.
    pub fn with_genus(self, genus: u64) -> Result<Self, KnotError> {
        Self::new(self.name, self.seifert, self.braid, Some(genus))
    }

    pub fn is_monic(&self) -> bool {
        self.top.abs().is_one()
    }

    /// Recomputes `Δ_K` along the Burau route and compares, when both
    /// presentations are present. Returns whether a comparison was made.
    pub fn verify_presentations(&self) -> Result<bool, KnotError> {
        match (&self.seifert, &self.braid) {
            (Some(v), Some(b)) => {
                let seifert = alexander_from_seifert(v)?;
                let braid = alexander_from_braid(b)?;
                if seifert != braid {
                    return Err(KnotError::PresentationMismatch { seifert, braid });
                }
                Ok(true)
            }
            _ => Ok(false),
        }
    }
}

/// `d == genus`.
pub fn maximal_degree_check(k: &KnotRecord) -> Result<bool, KnotError> {
    Ok(k.degree == k.genus()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalization_centers_and_fixes_sign() {
        let raw = LaurentPoly::from_terms(ALEXANDER_VAR, [(5, -1), (4, 1), (3, -1)]);
        let d = normalize_alexander(raw).unwrap();
        assert_eq!(d, LaurentPoly::from_terms(ALEXANDER_VAR, [(1, 1), (0, -1), (-1, 1)]));
    }

    #[test]
    fn normalization_rejects_odd_span_and_bad_values() {
        let odd = LaurentPoly::from_terms(ALEXANDER_VAR, [(1, 1), (0, 1)]);
        assert!(matches!(normalize_alexander(odd), Err(KnotError::NotSymmetric(_))));
        let asym = LaurentPoly::from_terms(ALEXANDER_VAR, [(2, 1), (1, 1), (0, 2)]);
        assert!(matches!(normalize_alexander(asym), Err(KnotError::NotSymmetric(_))));
        let three = LaurentPoly::from_terms(ALEXANDER_VAR, [(1, 1), (0, 1), (-1, 1)]);
        assert_eq!(normalize_alexander(three), Err(KnotError::BadNormalization(BigInt::from(3))));
        assert!(matches!(normalize_alexander(LaurentPoly::zero(ALEXANDER_VAR)), Err(KnotError::BadNormalization(_))));
    }

    #[test]
    fn maximal_degree_examples() {
        let trefoil = KnotRecord::k_prime();
        assert!(maximal_degree_check(&trefoil).unwrap());
        let unknot = KnotRecord::from_seifert("unknot", SeifertMatrix::unknot(), Some(0)).unwrap();
        assert!(maximal_degree_check(&unknot).unwrap());
        let double = SeifertMatrix::new(vec![vec![-1, 1], vec![0, 0]]).unwrap();
        let wh = KnotRecord::from_seifert("Wh", double, Some(1)).unwrap();
        assert_eq!(wh.alexander, LaurentPoly::one(ALEXANDER_VAR));
        assert!(!maximal_degree_check(&wh).unwrap());
        let no_genus = KnotRecord::from_seifert("unknot", SeifertMatrix::unknot(), None).unwrap();
        assert_eq!(maximal_degree_check(&no_genus), Err(KnotError::GenusAbsent));
    }

    #[test]
    fn genus_defaulting_is_flagged() {
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        let k = KnotRecord::from_seifert("5_2", v, None).unwrap().with_default_genus();
        assert_eq!(k.genus, Some(1));
        assert!(k.genus_defaulted);
        assert!(maximal_degree_check(&k).unwrap());
        assert!(!k.is_monic());
        assert_eq!(k.top, BigInt::from(2));
    }

    #[test]
    fn genus_bounds_are_checked() {
        let trefoil = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(
            KnotRecord::from_seifert("3_1", trefoil.clone(), Some(0)),
            Err(KnotError::DegreeExceedsGenus { degree: 1, genus: 0 })
        );
        assert_eq!(
            KnotRecord::from_seifert("3_1", trefoil, Some(2)),
            Err(KnotError::GenusExceedsSurface { genus: 2, surface_genus: 1 })
        );
        assert_eq!(KnotRecord::new("x", None, None, None), Err(KnotError::NoPresentation));
    }

    #[test]
    fn k_prime_presentations_agree() {
        let k = KnotRecord::k_prime();
        assert_eq!(k.name, K_PRIME);
        assert!(k.verify_presentations().unwrap());
        assert_eq!((k.degree, k.top.clone()), (1, BigInt::one()));
    }

    #[test]
    fn mismatched_presentations_are_reported() {
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        let b = parse_braid("2: 1 1 1").unwrap();
        let k = KnotRecord::new("bad", Some(v), Some(b), None).unwrap();
        assert!(matches!(k.verify_presentations(), Err(KnotError::PresentationMismatch { .. })));
    }
}
