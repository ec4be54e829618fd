//! Characteristic-number bookkeeping for closed oriented 4-manifolds built
//! by knot surgery and fiber sums.
//!
//! A [`FourManifold`] is a record, not a geometric object: Euler number,
//! signature, `b1`, spin and `π1` flags, a set of tracked embedded surfaces
//! with their intersection numbers, and (when known) the Seiberg-Witten
//! invariant as a Laurent polynomial in `exp(m[T])` for a tracked torus `T`.
//! Facts that are theorems rather than computations are carried as
//! [`Assertion`]s with a citation string.

mod build;
mod surface;

pub use build::{
    build_y, build_zk, canonical_of_symplectic_sum, fiber_sum, knot_surgery, make_e2n, make_k3, make_s1_times_mk_prime,
    Base, FiberSumOptions, Join, ZkConstruction,
};
pub use surface::SurfaceClass;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::knot::KnotError;
use crate::laurent::{LaurentError, LaurentPoly, Parity};

pub mod citation {
    pub const SIMPLY_CONNECTED_ZK: &str =
        "Z_K is simply connected by van Kampen over the fiber-sum decomposition (asserted, not computed)";
    pub const SIMPLY_CONNECTED_ELLIPTIC: &str = "elliptic surfaces E(n) without multiple fibers are simply connected";
    pub const HOMEOMORPHIC_AFTER_SURGERY: &str =
        "knot surgery on a cusp-neighborhood torus with simply connected complement preserves the homeomorphism type";
    pub const KNOT_SURGERY_FORMULA: &str = "knot surgery formula: SW(X_K) = SW(X) * Δ_K(t), t = exp(2[T])";
    pub const SPIN_GLUING: &str = "the fiber sum gluing can be chosen so that Z_K is spin";
    pub const RIM_TORI_TRIVIAL: &str = "each rim torus is homologically trivial in Z_K";
    pub const TAUBES: &str =
        "Taubes: the Seiberg-Witten invariant of the canonical class of a symplectic 4-manifold is ±1";
    pub const SYMPLECTIC_SUM_CANONICAL: &str =
        "canonical class of a symplectic fiber sum along a torus N: K = K_A + K_B + 2[N]";
    pub const S1_TIMES_MK_PRIME: &str =
        "S^1 x M_K' is a symplectic T^2-bundle over T^2 with the homology of S^2 x T^2 (K' fibered, genus 1)";
    pub const Y_BETTI: &str = "each fiber sum in Y raises the base genus by one and b1 by 2";
    pub const ELLIPTIC_SW: &str = "SW(E(m)) = (t - t^-1)^(m-2) with t = exp([T]) (standard elliptic-surface value)";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    NoSuchSurface(String),
    NotATorus(String),
    NonzeroSelfIntersection {
        label: String,
        self_int: i64,
    },
    NotInCuspNeighborhood(String),
    NotSimplyConnected(String),
    GenusMismatch {
        a: u64,
        b: u64,
    },
    /// Spin manifold whose signature is not divisible by 16.
    Rochlin {
        signature: i64,
    },
    InvalidBettiData {
        euler: i64,
        signature: i64,
        b1: u64,
    },
    SwUndefined(String),
    SwVariable(String),
    SymmetryNotDivisible {
        euler_plus_sign: i64,
    },
    EvenBPlus(i64),
    InvalidParameter {
        name: &'static str,
        value: i64,
    },
    CanonicalNotExpressible(String),
    BadJoin(String),
    Laurent(LaurentError),
    Knot(KnotError),
}

impl fmt::Display for ManifoldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ManifoldError::*;
        match self {
            NoSuchSurface(l) => write!(f, "no tracked surface `{l}`"),
            NotATorus(l) => write!(f, "surface `{l}` is not a torus"),
            NonzeroSelfIntersection { label, self_int } => {
                write!(f, "surface `{label}` has self-intersection {self_int}, expected 0")
            }
            NotInCuspNeighborhood(l) => write!(f, "torus `{l}` is not in a cusp neighborhood"),
            NotSimplyConnected(n) => write!(f, "`{n}` is not simply connected"),
            GenusMismatch { a, b } => write!(f, "cannot fiber-sum surfaces of genus {a} and {b}"),
            Rochlin { signature } => write!(f, "spin manifold has signature {signature}, not divisible by 16"),
            InvalidBettiData { euler, signature, b1 } => {
                write!(f, "e = {euler}, sign = {signature}, b1 = {b1} do not give a valid b+")
            }
            SwUndefined(n) => write!(f, "Seiberg-Witten polynomial of `{n}` is not defined by a product formula"),
            SwVariable(m) => write!(f, "Seiberg-Witten variable: {m}"),
            SymmetryNotDivisible { euler_plus_sign } => write!(f, "e + sign = {euler_plus_sign} is not divisible by 4"),
            EvenBPlus(b) => write!(f, "b+ = {b} is even"),
            InvalidParameter { name, value } => write!(f, "invalid {name} = {value}"),
            CanonicalNotExpressible(l) => write!(f, "canonical class term `{l}` is not a tracked class"),
            BadJoin(m) => write!(f, "bad surface join: {m}"),
            Laurent(e) => write!(f, "{e}"),
            Knot(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ManifoldError {}

impl From<LaurentError> for ManifoldError {
    fn from(e: LaurentError) -> Self {
        ManifoldError::Laurent(e)
    }
}

impl From<KnotError> for ManifoldError {
    fn from(e: KnotError) -> Self {
        ManifoldError::Knot(e)
    }
}

/// A fact used but not computed, with where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Assertion {
    pub fact: String,
    pub citation: String,
}

impl Assertion {
    pub fn new(fact: impl Into<String>, citation: impl Into<String>) -> Self {
        Self { fact: fact.into(), citation: citation.into() }
    }
}

/// The formal variable `exp(multiple * [class])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwVariable {
    pub class: String,
    pub multiple: i64,
}

impl SwVariable {
    pub fn new(class: impl Into<String>, multiple: i64) -> Self {
        Self { class: class.into(), multiple }
    }

    pub fn label(&self) -> String {
        if self.multiple == 1 {
            format!("exp([{}])", self.class)
        } else {
            format!("exp({}[{}])", self.multiple, self.class)
        }
    }

    /// Exponent of this variable encoding the class `k * [class]`.
    pub fn exponent_of_multiple(&self, k: i64) -> Result<i64, ManifoldError> {
        if k % self.multiple != 0 {
            return Err(ManifoldError::SwVariable(format!("{k}[{}] is not a power of {}", self.class, self.label())));
        }
        Ok(k / self.multiple)
    }
}

/// Seiberg-Witten polynomial together with its variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwPolynomial {
    pub variable: SwVariable,
    pub poly: LaurentPoly,
}

impl SwPolynomial {
    pub fn new(variable: SwVariable, poly: LaurentPoly) -> Self {
        let poly = poly.with_var(variable.label());
        Self { variable, poly }
    }

    /// Coefficient at the class `k * [class]`; absent terms are zero.
    pub fn coefficient_at_multiple(&self, k: i64) -> Result<BigInt, ManifoldError> {
        Ok(self.poly.coeff(self.variable.exponent_of_multiple(k)?))
    }
}

/// Integer combination of tracked surface classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CanonicalClass(pub BTreeMap<String, i64>);

impl CanonicalClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn multiple(k: i64, label: impl Into<String>) -> Self {
        let mut m = BTreeMap::new();
        if k != 0 {
            m.insert(label.into(), k);
        }
        Self(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (l, k) in &other.0 {
            *out.entry(l.clone()).or_insert(0) += k;
        }
        out.retain(|_, k| *k != 0);
        Self(out)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out: BTreeMap<String, i64> = self.0.iter().map(|(l, k)| (l.clone(), k * s)).collect();
        out.retain(|_, k| *k != 0);
        Self(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// `(k, label)` when the class is a single multiple.
    pub fn as_multiple(&self) -> Option<(i64, &str)> {
        match self.0.len() {
            1 => self.0.iter().next().map(|(l, k)| (*k, l.as_str())),
            _ => None,
        }
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, k)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(if *k < 0 { " - " } else { " + " })?;
            } else if *k < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}[{l}]", k.abs())?;
        }
        Ok(())
    }
}

/// A known value `SW(class) = ±magnitude` that is not read off a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownSwValue {
    pub class: CanonicalClass,
    pub magnitude: BigInt,
    pub sign_ambiguous: bool,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeographyPoint {
    pub chi: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourManifold {
    pub name: String,
    pub euler: i64,
    pub signature: i64,
    pub b1: u64,
    pub b_plus: i64,
    pub spin: bool,
    pub simply_connected: bool,
    pub surfaces: Vec<SurfaceClass>,
    pub sw: Option<SwPolynomial>,
    pub canonical: Option<CanonicalClass>,
    pub known_sw: Vec<KnownSwValue>,
    pub assumptions: Vec<Assertion>,
}

impl FourManifold {
    /// Validates the characteristic numbers: `b+` from `e = 2 - 2 b1 + b2`
    /// and `sign = b+ - b-`, `b+ >= 1` when simply connected, and Rochlin's
    /// theorem when spin.
    pub fn new(
        name: impl Into<String>,
        euler: i64,
        signature: i64,
        b1: u64,
        spin: bool,
        simply_connected: Option<&str>,
    ) -> Result<Self, ManifoldError> {
        let name = name.into();
        let b1i = b1 as i64;
        let numerator = euler - 2 + 2 * b1i + signature;
        let b2 = euler - 2 + 2 * b1i;
        if numerator % 2 != 0 || b2 < 0 || numerator < 0 || (simply_connected.is_some() && b1 != 0) {
            return Err(ManifoldError::InvalidBettiData { euler, signature, b1 });
        }
        let b_plus = numerator / 2;
        if simply_connected.is_some() && b_plus < 1 {
            return Err(ManifoldError::InvalidBettiData { euler, signature, b1 });
        }
        if spin && signature % 16 != 0 {
            return Err(ManifoldError::Rochlin { signature });
        }
        let mut assumptions = Vec::new();
        if let Some(c) = simply_connected {
            assumptions.push(Assertion::new(format!("{name} is simply connected"), c));
        }
        Ok(Self {
            name,
            euler,
            signature,
            b1,
            b_plus,
            spin,
            simply_connected: simply_connected.is_some(),
            surfaces: Vec::new(),
            sw: None,
            canonical: None,
            known_sw: Vec::new(),
            assumptions,
        })
    }

    pub fn b2(&self) -> i64 {
        self.euler - 2 + 2 * self.b1 as i64
    }

    /// `3 sign + 2 e`.
    pub fn c_invariant(&self) -> i64 {
        3 * self.signature + 2 * self.euler
    }

    pub fn surface(&self, label: &str) -> Result<&SurfaceClass, ManifoldError> {
        self.surfaces.iter().find(|s| s.label == label).ok_or_else(|| ManifoldError::NoSuchSurface(label.to_string()))
    }

    pub fn has_surface(&self, label: &str) -> bool {
        self.surfaces.iter().any(|s| s.label == label)
    }

    /// Intersection number of two tracked surfaces.
    pub fn pairing(&self, a: &str, b: &str) -> Result<i64, ManifoldError> {
        let sa = self.surface(a)?;
        self.surface(b)?;
        Ok(sa.pairing_with(b))
    }

    pub fn sw(&self) -> Result<&SwPolynomial, ManifoldError> {
        self.sw.as_ref().ok_or_else(|| ManifoldError::SwUndefined(self.name.clone()))
    }

    /// Whether a sphere of self-intersection -2 is tracked.
    pub fn has_minus_two_sphere(&self) -> bool {
        self.surfaces.iter().any(|s| s.genus == 0 && s.self_int == -2)
    }

    pub(crate) fn push_surface(&mut self, s: SurfaceClass) {
        self.surfaces.push(s);
    }

    /// Inserts `a·b = value` into both pairing maps.
    pub(crate) fn set_pairing(&mut self, a: &str, b: &str, value: i64) {
        for s in self.surfaces.iter_mut() {
            if s.label == a {
                s.set_pairing(b, value);
            } else if s.label == b {
                s.set_pairing(a, value);
            }
        }
    }

    pub fn assume(&mut self, fact: impl Into<String>, citation: impl Into<String>) {
        self.assumptions.push(Assertion::new(fact, citation));
    }

    /// Every tracked pairing map is symmetric and self-pairings match.
    pub fn pairings_consistent(&self) -> bool {
        self.surfaces.iter().all(|s| {
            s.pairings.iter().all(|(other, v)| match self.surfaces.iter().find(|t| &t.label == other) {
                Some(t) => t.pairing_with(&s.label) == *v,
                None => false,
            }) && !s.pairings.contains_key(&s.label)
        })
    }
}

/// `(e + sign) / 4`, the exponent in `SW(-β) = (-1)^{(e+sign)/4} SW(β)`.
pub fn sw_symmetry_exponent(m: &FourManifold) -> Result<i64, ManifoldError> {
    let s = m.euler + m.signature;
    if s % 4 != 0 {
        return Err(ManifoldError::SymmetryNotDivisible { euler_plus_sign: s });
    }
    Ok(s / 4)
}

pub fn sw_parity(m: &FourManifold) -> Result<Parity, ManifoldError> {
    Ok(Parity::from_exponent(sw_symmetry_exponent(m)?))
}

/// `((b+ + 1)/2, 3 sign + 2 e)` for a simply connected manifold.
pub fn geography(m: &FourManifold) -> Result<GeographyPoint, ManifoldError> {
    if !m.simply_connected {
        return Err(ManifoldError::NotSimplyConnected(m.name.clone()));
    }
    if m.b_plus % 2 == 0 {
        return Err(ManifoldError::EvenBPlus(m.b_plus));
    }
    Ok(GeographyPoint { chi: (m.b_plus + 1) / 2, c: m.c_invariant() })
}
