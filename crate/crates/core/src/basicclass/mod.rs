//! Basic classes of `Z_K`.
//!
//! Homology of `Z_K` (modulo rim tori, which vanish) splits as
//! `<τ, Σ'> ⊕ definite ⊕ (T_i, S_i) pairs ⊕ (T'_j, S'_j) pairs`. A class is
//! written `k = aτ + bΣ' + β + Σ m_i T_i + n_i S_i + Σ t_j T'_j + s_j S'_j`.
//! [`enumerate_basic_classes`] follows the adjunction argument block by
//! block; [`brute_force_enumerate`] scans the same box exhaustively.

pub mod lattice;


use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::{LaurentPoly, Parity};
use crate::manifold::{sw_symmetry_exponent, FourManifold, ManifoldError};

pub mod citation {
    pub const SIMPLE_TYPE: &str =
        "simple type: a basic class orthogonal to the -2 spheres of a spin manifold has dim M(k) = 0";
    pub const GLUING: &str =
        "Morgan-Szabo-Taubes gluing: SW(k) = ±SW_{X_K}(m T) SW_Y(m F), summed over rim-torus translates";
    pub const RIM_TORI: &str = "rim tori are homologically trivial in Z_K, so the gluing sum has one term";
    pub const Y_SYMPLECTIC: &str = "Y is symplectic with canonical class m[F]; Taubes gives SW_Y(m F) = ±1";
    pub const ADJUNCTION: &str = "adjunction inequality 2g(B) - 2 >= B^2 + |k·B| for embedded B with B^2 >= 0";
    pub const TAUBES: &str = "Taubes: a symplectic manifold has |SW(K)| = 1 on its canonical class";
    pub const MINUS_TWO_SPHERE: &str =
        "a -2 sphere in Z_K becomes a +2 sphere after reversing orientation, ruling out symplectic structures there";
}

pub const NOTE_ZERO_SW: &str = "SW_{Z_K}=0";
pub const NOTE_SIGNS: &str = "both signs of k enumerated; classes reported up to ±";
pub const NOTE_CHARACTERISTIC: &str = "characteristic condition checked only as k^2 ≡ c (mod 4)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasicClassError {
    NegativeSquare {
        surface: String,
        square: i64,
    },
    NotCharacteristic {
        excess: i64,
    },
    BoundTooSmall {
        bound: i64,
        minimum: i64,
    },
    InvalidBasis(String),
    /// The adjunction surfaces of a block do not pin it to zero.
    BlockUnresolved(String),
    /// `2ab` can exceed `c`, so the definite part is not forced to vanish.
    DefiniteNotForced,
    /// A class other than the gluing class survived; its SW value is unknown.
    UnevaluatedClass {
        a: i64,
        b: i64,
    },
    Manifold(ManifoldError),
}

impl fmt::Display for BasicClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegativeSquare { surface, square } => {
                write!(f, "adjunction needs B^2 >= 0, but {surface} has square {square}")
            }
            Self::NotCharacteristic { excess } => write!(f, "k^2 - c = {excess} is not divisible by 4"),
            Self::BoundTooSmall { bound, minimum } => write!(f, "bound {bound} is below the minimum {minimum}"),
            Self::InvalidBasis(m) => write!(f, "invalid basis: {m}"),
            Self::BlockUnresolved(b) => write!(f, "adjunction does not force block {b} to vanish"),
            Self::DefiniteNotForced => f.write_str("definite part is not forced to zero"),
            Self::UnevaluatedClass { a, b } => write!(f, "no gluing value for surviving class a={a}, b={b}"),
            Self::Manifold(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BasicClassError {}

impl From<ManifoldError> for BasicClassError {
    fn from(e: ManifoldError) -> Self {
        Self::Manifold(e)
    }
}

/// Intersection data of `Z_K` in the split basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkBasis {
    pub knot_genus: u64,
    pub base_n: u64,
    /// Genus of `Σ'`.
    pub sigma_genus: u64,
    pub definite_rank: usize,
    /// `(T_i, S_i)`: torus square 0, sphere square -2.
    pub x_pairs: usize,
    /// `(T'_j, S'_j)`: torus square 0, genus-2 surface square +2.
    pub y_pairs: usize,
    /// `3 sign + 2 e`.
    pub c: i64,
    /// `(e + sign) / 4`.
    pub symmetry_exponent: i64,
}

/// A surface used in the adjunction inequality, as coordinates in the
/// nondefinite part of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionSurface {
    pub label: String,
    pub genus: u64,
    pub coords: Vec<i64>,
}

impl ZkBasis {
    /// Basis for knot genus `g` on `E(2n)` (`n = 1` is K3).
    pub fn new(g: u64, n: u64) -> Result<Self, BasicClassError> {
        if g == 0 || n == 0 {
            return Err(BasicClassError::InvalidBasis(format!("need g >= 1 and n >= 1, got g={g}, n={n}")));
        }
        let big_g = g + n;
        let (ni, gg) = (n as i64, big_g as i64);
        let euler = 24 * ni + 4 * (gg - 1);
        let signature = -16 * ni;
        Ok(Self {
            knot_genus: g,
            base_n: n,
            sigma_genus: big_g,
            definite_rank: 16 * n as usize,
            x_pairs: 4 * n as usize - 2,
            y_pairs: 2 * (big_g as usize - 1),
            c: 3 * signature + 2 * euler,
            symmetry_exponent: (euler + signature) / 4,
        })
    }

    /// Reads the basis off a built `Z_K`: `Σ'` and `tau` must be tracked,
    /// and the block ranks must add up to `b2`.
    pub fn from_manifold(z: &FourManifold) -> Result<Self, BasicClassError> {
        let sigma = z.surface("Sigma'")?;
        let tau = z.surface("tau")?;
        if sigma.self_int != 0 || tau.self_int != 0 || tau.genus != 2 || z.pairing("tau", "Sigma'")? != 1 {
            return Err(BasicClassError::InvalidBasis("tau and Sigma' must span a hyperbolic pair".to_string()));
        }
        if z.signature > 0 || z.signature % 16 != 0 {
            return Err(BasicClassError::InvalidBasis(format!("signature {} is not -16n", z.signature)));
        }
        let n = (-z.signature / 16) as u64;
        let big_g = sigma.genus;
        if n == 0 || big_g <= n {
            return Err(BasicClassError::InvalidBasis(format!("Sigma' genus {big_g} with n={n}")));
        }
        let basis = Self::new(big_g - n, n)?;
        let rank = 2 + basis.definite_rank + 2 * basis.x_pairs + 2 * basis.y_pairs;
        if rank as i64 != z.b2() || basis.c != z.c_invariant() {
            return Err(BasicClassError::InvalidBasis(format!("block rank {rank} against b2 = {}", z.b2())));
        }
        if basis.symmetry_exponent != sw_symmetry_exponent(z)? {
            return Err(BasicClassError::InvalidBasis("symmetry exponent mismatch".to_string()));
        }
        Ok(basis)
    }

    pub fn parity(&self) -> Parity {
        Parity::from_exponent(self.symmetry_exponent)
    }

    /// Size of the nondefinite part: `τ, Σ'` then the pairs.
    pub fn hyperbolic_rank(&self) -> usize {
        2 + 2 * self.x_pairs + 2 * self.y_pairs
    }

    pub fn rank(&self) -> usize {
        self.hyperbolic_rank() + self.definite_rank
    }

    fn x_index(&self, i: usize) -> usize {
        2 + 2 * i
    }

    fn y_index(&self, j: usize) -> usize {
        2 + 2 * self.x_pairs + 2 * j
    }

    /// Gram matrix of the nondefinite part.
    pub fn hyperbolic_gram(&self) -> Vec<Vec<i64>> {
        let r = self.hyperbolic_rank();
        let mut m = vec![vec![0i64; r]; r];
        let mut pair = |at: usize, sphere: i64| {
            m[at][at + 1] = 1;
            m[at + 1][at] = 1;
            m[at + 1][at + 1] = sphere;
        };
        pair(0, 0);
        for i in 0..self.x_pairs {
            pair(self.x_index(i), -2);
        }
        for j in 0..self.y_pairs {
            pair(self.y_index(j), 2);
        }
        m
    }

    /// Gram matrix of the definite part, a sum of `-E8` blocks.
    pub fn definite_gram(&self) -> Vec<Vec<i64>> {
        let neg: Vec<Vec<i64>> =
            lattice::e8_cartan().into_iter().map(|r| r.into_iter().map(|v| -v).collect()).collect();
        lattice::block_diagonal(&neg, self.definite_rank / 8)
    }

    /// The full intersection form, nondefinite part first.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let h = self.hyperbolic_rank();
        let r = self.rank();
        let mut m = vec![vec![0i64; r]; r];
        for (i, row) in self.hyperbolic_gram().into_iter().enumerate() {
            m[i][..h].copy_from_slice(&row);
        }
        for (i, row) in self.definite_gram().into_iter().enumerate() {
            m[h + i][h..].copy_from_slice(&row);
        }
        m
    }

    /// `T_i`, `T_i + S_i`, `T'_j`, `T'_j + S'_j`, `τ`, `Σ'`.
    pub fn adjunction_surfaces(&self) -> Vec<AdjunctionSurface> {
        let r = self.hyperbolic_rank();
        let unit = |idx: &[usize]| {
            let mut v = vec![0i64; r];
            for &i in idx {
                v[i] = 1;
            }
            v
        };
        let mut out = Vec::new();
        for i in 0..self.x_pairs {
            let at = self.x_index(i);
            out.push(AdjunctionSurface { label: format!("T_{}", i + 1), genus: 1, coords: unit(&[at]) });
            out.push(AdjunctionSurface { label: format!("T_{0}+S_{0}", i + 1), genus: 1, coords: unit(&[at, at + 1]) });
        }
        for j in 0..self.y_pairs {
            let at = self.y_index(j);
            out.push(AdjunctionSurface { label: format!("T'_{}", j + 1), genus: 1, coords: unit(&[at]) });
            out.push(AdjunctionSurface {
                label: format!("T'_{0}+S'_{0}", j + 1),
                genus: 3,
                coords: unit(&[at, at + 1]),
            });
        }
        out.push(AdjunctionSurface { label: "tau".to_string(), genus: 2, coords: unit(&[0]) });
        out.push(AdjunctionSurface { label: "Sigma'".to_string(), genus: self.sigma_genus, coords: unit(&[1]) });
        out
    }

    pub fn hyperbolic_pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let g = self.hyperbolic_gram();
        x.iter().enumerate().map(|(i, xi)| xi * g[i].iter().zip(y).map(|(gij, yj)| gij * yj).sum::<i64>()).sum()
    }

    pub fn surface_square(&self, s: &AdjunctionSurface) -> i64 {
        self.hyperbolic_pairing(&s.coords, &s.coords)
    }
}

/// `k = aτ + bΣ' + β + Σ m_i T_i + n_i S_i + Σ t_j T'_j + s_j S'_j`, with
/// only `β²` kept from the definite part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateClass {
    pub a: i64,
    pub b: i64,
    /// `(m_i, n_i)`.
    pub x_coeffs: Vec<(i64, i64)>,
    /// `(t_j, s_j)`.
    pub y_coeffs: Vec<(i64, i64)>,
    pub beta_square: i64,
}

impl CandidateClass {
    /// `aτ + bΣ'` with everything else zero.
    pub fn special(basis: &ZkBasis, a: i64, b: i64) -> Self {
        Self { a, b, x_coeffs: vec![(0, 0); basis.x_pairs], y_coeffs: vec![(0, 0); basis.y_pairs], beta_square: 0 }
    }

    fn from_coords(coords: &[i64], x_pairs: usize, beta_square: i64) -> Self {
        let pairs: Vec<(i64, i64)> = coords[2..].chunks(2).map(|c| (c[0], c[1])).collect();
        Self {
            a: coords[0],
            b: coords[1],
            x_coeffs: pairs[..x_pairs].to_vec(),
            y_coeffs: pairs[x_pairs..].to_vec(),
            beta_square,
        }
    }

    pub fn coords(&self) -> Vec<i64> {
        let mut v = vec![self.a, self.b];
        for &(p, q) in self.x_coeffs.iter().chain(&self.y_coeffs) {
            v.push(p);
            v.push(q);
        }
        v
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            x_coeffs: self.x_coeffs.iter().map(|&(p, q)| (-p, -q)).collect(),
            y_coeffs: self.y_coeffs.iter().map(|&(p, q)| (-p, -q)).collect(),
            beta_square: self.beta_square,
        }
    }

    pub fn square(&self, basis: &ZkBasis) -> i64 {
        let v = self.coords();
        basis.hyperbolic_pairing(&v, &v) + self.beta_square
    }

    pub fn dot(&self, basis: &ZkBasis, s: &AdjunctionSurface) -> i64 {
        basis.hyperbolic_pairing(&self.coords(), &s.coords)
    }
}

impl fmt::Display for CandidateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*tau + {}*Sigma'", self.a, self.b)?;
        for (i, &(m, n)) in self.x_coeffs.iter().enumerate() {
            if m != 0 || n != 0 {
                write!(f, " + {m}*T_{0} + {n}*S_{0}", i + 1)?;
            }
        }
        for (j, &(t, s)) in self.y_coeffs.iter().enumerate() {
            if t != 0 || s != 0 {
                write!(f, " + {t}*T'_{0} + {s}*S'_{0}", j + 1)?;
            }
        }
        if self.beta_square != 0 {
            write!(f, " + beta (beta^2 = {})", self.beta_square)?;
        }
        Ok(())
    }
}

/// True iff `2g(B) - 2 >= B² + |k·B|` fails.
pub fn adjunction_excludes(
    basis: &ZkBasis,
    k: &CandidateClass,
    surface: &AdjunctionSurface,
) -> Result<bool, BasicClassError> {
    let sq = basis.surface_square(surface);
    if sq < 0 {
        return Err(BasicClassError::NegativeSquare { surface: surface.label.clone(), square: sq });
    }
    let lhs = 2 * surface.genus as i64 - 2;
    Ok(lhs < sq + k.dot(basis, surface).abs())
}

/// `(k² - c) / 4`.
pub fn moduli_dimension(basis: &ZkBasis, k: &CandidateClass) -> Result<i64, BasicClassError> {
    let excess = k.square(basis) - basis.c;
    if excess % 4 != 0 {
        return Err(BasicClassError::NotCharacteristic { excess });
    }
    Ok(excess / 4)
}

/// `SW` magnitude from the gluing formula; the sign is never determined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedValue {
    pub magnitude: BigInt,
    pub sign_ambiguous: bool,
}

pub fn mst_gluing_value(sw_xk: &BigInt, sw_y: &BigInt) -> GluedValue {
    GluedValue { magnitude: (sw_xk * sw_y).abs(), sign_ambiguous: true }
}

/// Coefficient of `t^exponent`; absent terms are zero.
pub fn extract_coefficient(sw: &LaurentPoly, exponent: i64) -> BigInt {
    sw.coeff(exponent)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicClass {
    pub class: CandidateClass,
    pub sw: BigInt,
    pub sign_ambiguous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicClassResult {
    pub knot_genus: u64,
    pub classes: Vec<BasicClass>,
    pub simple_type: bool,
    pub count_up_to_sign: usize,
    pub notes: Vec<String>,
    pub citations: Vec<String>,
}

/// Equations `k·B = 0` from the surfaces with `B² = 2g(B) - 2`, restricted
/// to the two coordinates of a pair starting at `at`. Returns whether they
/// force the pair to zero.
fn pair_forced_zero(basis: &ZkBasis, surfaces: &[AdjunctionSurface], at: usize) -> bool {
    let g = basis.hyperbolic_gram();
    let rows: Vec<[i64; 2]> = surfaces
        .iter()
        .filter(|s| s.coords[at] != 0 || s.coords[at + 1] != 0)
        .filter(|s| basis.surface_square(s) == 2 * s.genus as i64 - 2)
        .map(|s| {
            // k·B = Σ_i k_i (G B)_i
            let gb = |i: usize| g[i].iter().zip(&s.coords).map(|(x, y)| x * y).sum::<i64>();
            [gb(at), gb(at + 1)]
        })
        .collect();
    rows.iter().enumerate().any(|(i, r)| rows[i + 1..].iter().any(|q| r[0] * q[1] - r[1] * q[0] != 0))
}

/// Basic classes of `Z_K` given the top coefficient `a_d` of the knot's
/// Alexander polynomial.
///
/// Each pair block is pinned to zero by the surfaces on which adjunction is
/// an equality. `|k·Σ'|` and `|k·τ|` are then bounded by adjunction on
/// `Σ'` and `τ`, which bounds `2ab` by `c` and forces `β² = 0`. Requiring
/// `dim = 0` leaves `2ab = c`.
pub fn enumerate_basic_classes(basis: &ZkBasis, a_d: &BigInt) -> Result<BasicClassResult, BasicClassError> {
    let surfaces = basis.adjunction_surfaces();
    for i in 0..basis.x_pairs {
        if !pair_forced_zero(basis, &surfaces, basis.x_index(i)) {
            return Err(BasicClassError::BlockUnresolved(format!("T_{0}, S_{0}", i + 1)));
        }
    }
    for j in 0..basis.y_pairs {
        if !pair_forced_zero(basis, &surfaces, basis.y_index(j)) {
            return Err(BasicClassError::BlockUnresolved(format!("T'_{0}, S'_{0}", j + 1)));
        }
    }
    // k·Σ' = a, k·τ = b
    let a_max = 2 * basis.sigma_genus as i64 - 2;
    let b_max = 2 * 2 - 2;
    if 2 * a_max * b_max > basis.c {
        return Err(BasicClassError::DefiniteNotForced);
    }

    let mut notes = vec![NOTE_SIGNS.to_string(), NOTE_CHARACTERISTIC.to_string()];
    let mut citations = vec![citation::ADJUNCTION.to_string()];
    let glued = mst_gluing_value(a_d, &BigInt::one());
    if glued.magnitude.is_zero() {
        notes.push(NOTE_ZERO_SW.to_string());
        citations.push(citation::GLUING.to_string());
        return Ok(BasicClassResult {
            knot_genus: basis.knot_genus,
            classes: Vec::new(),
            simple_type: true,
            count_up_to_sign: 0,
            notes,
            citations,
        });
    }

    let gluing_multiple = 2 * (basis.sigma_genus as i64 - 1);
    let parity = basis.parity();
    let mut classes = Vec::new();
    for a in -a_max..=a_max {
        for b in -b_max..=b_max {
            let k = CandidateClass::special(basis, a, b);
            match moduli_dimension(basis, &k) {
                Ok(0) => {}
                Ok(_) | Err(BasicClassError::NotCharacteristic { .. }) => continue,
                Err(e) => return Err(e),
            }
            if a.abs() != gluing_multiple {
                return Err(BasicClassError::UnevaluatedClass { a, b });
            }
            let sw = if a > 0 {
                glued.magnitude.clone()
            } else {
                match parity {
                    Parity::Plus => glued.magnitude.clone(),
                    Parity::Minus => -glued.magnitude.clone(),
                }
            };
            classes.push(BasicClass { class: k, sw, sign_ambiguous: glued.sign_ambiguous });
        }
    }
    classes.sort_by_key(|c| (c.class.a, c.class.b));
    citations.extend(
        [citation::GLUING, citation::RIM_TORI, citation::Y_SYMPLECTIC, citation::SIMPLE_TYPE].map(String::from),
    );
    let count_up_to_sign = classes.len() / 2;
    Ok(BasicClassResult {
        knot_genus: basis.knot_genus,
        classes,
        simple_type: true,
        count_up_to_sign,
        notes,
        citations,
    })
}

/// Every class with coefficients in `[-bound, bound]` passing adjunction on
/// the listed surfaces, with `dim >= 0` and `k² ≡ c (mod 4)`.
///
/// The nondefinite coordinates are scanned block by block (every adjunction
/// surface lives in one block, so the filter factorizes) and the survivors
/// combined. For each combination the definite part is searched through
/// all `β` in the `-E8` sum with `-β² <= k_0² - c`, the full range allowed
/// by `dim >= 0`.
pub fn brute_force_enumerate(basis: &ZkBasis, bound: i64) -> Result<Vec<CandidateClass>, BasicClassError> {
    let minimum = 2 * basis.sigma_genus as i64;
    if bound < minimum {
        return Err(BasicClassError::BoundTooSmall { bound, minimum });
    }
    let r = basis.hyperbolic_rank();
    let gram = basis.hyperbolic_gram();
    let surfaces = basis.adjunction_surfaces();

    let blocks: Vec<(usize, usize)> = (0..r / 2).map(|p| (2 * p, 2 * p + 2)).collect();
    let mut per_block: Vec<Vec<[i64; 2]>> = Vec::with_capacity(blocks.len());
    for &(lo, hi) in &blocks {
        // k·B depends only on the coordinates where G B is nonzero
        let local: Vec<(Vec<i64>, i64, i64)> = surfaces
            .iter()
            .filter_map(|s| {
                let gb: Vec<i64> = (0..r).map(|i| gram[i].iter().zip(&s.coords).map(|(x, y)| x * y).sum()).collect();
                let support: Vec<usize> = (0..r).filter(|&i| gb[i] != 0).collect();
                if support.iter().all(|&i| (lo..hi).contains(&i)) && !support.is_empty() {
                    Some((gb[lo..hi].to_vec(), 2 * s.genus as i64 - 2, basis.surface_square(s)))
                } else {
                    None
                }
            })
            .collect();
        let mut keep = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let ok = local.iter().all(|(gb, lhs, sq)| {
                    if *sq < 0 {
                        return true;
                    }
                    *lhs >= sq + (gb[0] * x + gb[1] * y).abs()
                });
                if ok {
                    keep.push([x, y]);
                }
            }
        }
        per_block.push(keep);
    }

    let neg_def: Vec<Vec<i64>> =
        basis.definite_gram().into_iter().map(|r| r.into_iter().map(|v| -v).collect()).collect();
    let mut norm_cache: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_block.len()];
    if per_block.iter().any(|b| b.is_empty()) {
        return Ok(out);
    }
    loop {
        let coords: Vec<i64> = idx.iter().zip(&per_block).flat_map(|(&i, b)| b[i]).collect();
        let sq0 = basis.hyperbolic_pairing(&coords, &coords);
        let budget = sq0 - basis.c;
        if budget >= 0 {
            let norms = match norm_cache.iter().find(|(b, _)| *b == budget) {
                Some((_, v)) => v.clone(),
                None => {
                    let mut v: Vec<i64> = lattice::short_vectors(&neg_def, budget)
                        .expect("negated E8 sum is positive definite")
                        .into_iter()
                        .filter(|beta| beta.iter().all(|c| c.abs() <= bound))
                        .map(|beta| -lattice::quadratic_form(&neg_def, &beta))
                        .collect();
                    v.sort_unstable();
                    v.dedup();
                    norm_cache.push((budget, v.clone()));
                    v
                }
            };
            for beta_square in norms {
                if (sq0 + beta_square - basis.c) % 4 == 0 {
                    out.push(CandidateClass::from_coords(&coords, basis.x_pairs, beta_square));
                }
            }
        }
        let mut p = 0;
        loop {
            if p == idx.len() {
                out.sort();
                return Ok(out);
            }
            idx[p] += 1;
            if idx[p] < per_block[p].len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Neither `Z_K` nor its reverse admits a symplectic structure.
    NonsymplecticBothOrientations,
    /// `Z_K` with its given orientation is not symplectic; no `-2` sphere
    /// is tracked to handle the reverse.
    NonsymplecticGivenOrientation,
    Inconclusive,
    TrivialSw,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NonsymplecticBothOrientations => "NONSYMPLECTIC_BOTH_ORIENTATIONS",
            Self::NonsymplecticGivenOrientation => "NONSYMPLECTIC_GIVEN_ORIENTATION",
            Self::Inconclusive => "INCONCLUSIVE",
            Self::TrivialSw => "TRIVIAL_SW",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn taubes_verdict(result: &BasicClassResult, spin_sphere_present: bool) -> Verdict {
    if result.classes.is_empty() {
        return Verdict::TrivialSw;
    }
    if result.classes.iter().any(|c| c.sw.abs().is_one()) {
        return Verdict::Inconclusive;
    }
    if spin_sphere_present {
        Verdict::NonsymplecticBothOrientations
    } else {
        Verdict::NonsymplecticGivenOrientation
    }
}
