use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::citation;
use super::{CanonicalClass, FourManifold, KnownSwValue, ManifoldError, SurfaceClass, SwPolynomial, SwVariable};
use crate::knot::KnotRecord;
use crate::laurent::LaurentPoly;

/// Starting manifold for the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    K3,
    /// `E(2n)`; `E2n(1)` has the numerics of K3 but writes SW in `exp([T])`.
    E2n(u64),
}

impl Base {
    pub fn build(self) -> Result<FourManifold, ManifoldError> {
        match self {
            Base::K3 => Ok(make_k3()),
            Base::E2n(n) => make_e2n(n as i64),
        }
    }

    pub fn n(self) -> u64 {
        match self {
            Base::K3 => 1,
            Base::E2n(n) => n,
        }
    }
}

fn elliptic(name: String, n: i64, sw: SwPolynomial) -> FourManifold {
    let mut m = FourManifold::new(name, 24 * n, -16 * n, 0, true, Some(citation::SIMPLY_CONNECTED_ELLIPTIC))
        .expect("E(2n) numerics are valid");
    m.push_surface(SurfaceClass::cusp_fiber("T"));
    m.push_surface(SurfaceClass::cusp_fiber("T'"));
    m.push_surface(SurfaceClass::new("S", 0, -2 * n));
    // S + nT smoothed
    m.push_surface(SurfaceClass::new("Sigma", n as u64, 0));
    // a root sphere in the negative definite summand
    m.push_surface(SurfaceClass::new("R", 0, -2));
    for fiber in ["T", "T'"] {
        m.set_pairing(fiber, "S", 1);
        m.set_pairing(fiber, "Sigma", 1);
    }
    m.set_pairing("S", "Sigma", -n);
    m.sw = Some(sw);
    m.canonical = Some(CanonicalClass::multiple(2 * n - 2, "T"));
    m
}

/// The K3 surface with an elliptic fiber `T`, a second fiber `T'`, the
/// section `S`, the torus `Σ = S + T` and a (-2)-sphere `R`.
/// `SW = 1` in the variable `exp(2[T])`.
pub fn make_k3() -> FourManifold {
    let var = SwVariable::new("T", 2);
    let sw = SwPolynomial::new(var.clone(), LaurentPoly::one(var.label()));
    elliptic("K3".to_string(), 1, sw)
}

/// `E(2n)` with `SW = (t - t^-1)^(2n-2)` in `t = exp([T])`. The section has
/// square `-2n` and `Σ = S + nT` has genus `n`.
pub fn make_e2n(n: i64) -> Result<FourManifold, ManifoldError> {
    if n <= 0 {
        return Err(ManifoldError::InvalidParameter { name: "n", value: n });
    }
    let var = SwVariable::new("T", 1);
    let base = LaurentPoly::from_terms(var.label(), [(1, 1), (-1, -1)]);
    let sw = SwPolynomial::new(var, base.pow((2 * n - 2) as u32));
    let mut m = elliptic(format!("E({})", 2 * n), n, sw);
    m.assume(format!("SW of E({})", 2 * n), citation::ELLIPTIC_SW);
    Ok(m)
}

fn same_class(x: &FourManifold, a: &str, b: &str) -> Result<bool, ManifoldError> {
    if a == b {
        return Ok(true);
    }
    let (sa, sb) = (x.surface(a)?, x.surface(b)?);
    let strip = |s: &SurfaceClass| {
        let mut p = s.pairings.clone();
        p.remove(a);
        p.remove(b);
        p
    };
    Ok(sa.self_int == sb.self_int && sa.pairing_with(b) == sa.self_int && strip(sa) == strip(sb))
}

/// Knot surgery on the torus `label`: `SW(X_K) = SW(X) * Δ_K(exp(2[T]))`.
///
/// Every tracked surface meeting the torus once gains the knot genus and a
/// prime on its label (`S -> S'`, `Sigma -> Sigma'`).
pub fn knot_surgery(x: &FourManifold, label: &str, k: &KnotRecord) -> Result<FourManifold, ManifoldError> {
    let g = k.genus()?;
    if !x.simply_connected {
        return Err(ManifoldError::NotSimplyConnected(x.name.clone()));
    }
    let torus = x.surface(label)?;
    if !torus.is_torus() {
        return Err(ManifoldError::NotATorus(label.to_string()));
    }
    if torus.self_int != 0 {
        return Err(ManifoldError::NonzeroSelfIntersection { label: label.to_string(), self_int: torus.self_int });
    }
    if !torus.in_cusp_neighborhood {
        return Err(ManifoldError::NotInCuspNeighborhood(label.to_string()));
    }
    let sw = x.sw()?;
    if !same_class(x, label, &sw.variable.class)? {
        return Err(ManifoldError::SwVariable(format!(
            "[{label}] is not the class [{}] of {}",
            sw.variable.class,
            sw.variable.label()
        )));
    }
    let m = sw.variable.multiple;
    if m <= 0 || 2 % m != 0 {
        return Err(ManifoldError::SwVariable(format!("exp(2[{label}]) is not a power of {}", sw.variable.label())));
    }
    let delta = k.alexander.substitute_power(2 / m, sw.variable.label())?;
    let poly = sw.poly.checked_mul(&delta)?;

    let mut out = x.clone();
    out.name = format!("{}_{}", x.name, k.name);
    out.sw = Some(SwPolynomial::new(sw.variable.clone(), poly));
    out.canonical = None;
    let meeting: Vec<String> = x
        .surfaces
        .iter()
        .filter(|s| s.label != label && s.pairing_with(label).abs() == 1)
        .map(|s| s.label.clone())
        .collect();
    for old in &meeting {
        let new = format!("{old}'");
        for s in out.surfaces.iter_mut() {
            if &s.label == old {
                s.label = new.clone();
                s.genus += g;
            } else {
                s.rename_pairing(old, &new);
            }
        }
    }
    out.assume(format!("{} is homeomorphic to {}", out.name, x.name), citation::HOMEOMORPHIC_AFTER_SURGERY);
    out.assume(format!("SW({}) = SW({}) * Δ_{}", out.name, x.name, k.name), citation::KNOT_SURGERY_FORMULA);
    Ok(out)
}

/// Glue a surface `a` of one summand to `b` of the other into a single
/// surface of the fiber sum. Both must meet the summed surfaces with the
/// same nonzero intersection number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Join {
    pub a: String,
    pub b: String,
    pub label: String,
}

impl Join {
    pub fn new(a: &str, b: &str, label: &str) -> Self {
        Self { a: a.to_string(), b: b.to_string(), label: label.to_string() }
    }
}

/// Facts about a fiber sum that are supplied, not derived.
#[derive(Debug, Clone, Default)]
pub struct FiberSumOptions {
    pub name: String,
    pub b1: u64,
    /// Citation for `π1 = 1`, if asserted.
    pub simply_connected: Option<&'static str>,
    pub joins: Vec<Join>,
    /// Label of the identified surface; defaults to the `A`-side label.
    pub summed_label: Option<String>,
}

/// Fiber sum of `A` and `B` along surfaces of equal genus and square 0:
/// `e = e_A + e_B - 2 χ(N)`, `sign = sign_A + sign_B`.
///
/// Surfaces meeting the summed surface are dropped unless joined. The
/// Seiberg-Witten polynomial of the result is left undefined.
pub fn fiber_sum(
    a: &FourManifold,
    a_label: &str,
    b: &FourManifold,
    b_label: &str,
    spin_choice: bool,
    opts: &FiberSumOptions,
) -> Result<FourManifold, ManifoldError> {
    let (na, nb) = (a.surface(a_label)?, b.surface(b_label)?);
    if na.genus != nb.genus {
        return Err(ManifoldError::GenusMismatch { a: na.genus, b: nb.genus });
    }
    for s in [na, nb] {
        if s.self_int != 0 {
            return Err(ManifoldError::NonzeroSelfIntersection { label: s.label.clone(), self_int: s.self_int });
        }
    }
    let h = na.genus as i64;
    let euler = a.euler + b.euler - 2 * (2 - 2 * h);
    let signature = a.signature + b.signature;
    let mut out = FourManifold::new(opts.name.clone(), euler, signature, opts.b1, spin_choice, opts.simply_connected)?;

    let glued = opts.summed_label.clone().unwrap_or_else(|| a_label.to_string());
    let joined_a: Vec<&str> = opts.joins.iter().map(|j| j.a.as_str()).collect();
    let joined_b: Vec<&str> = opts.joins.iter().map(|j| j.b.as_str()).collect();
    let kept = |m: &FourManifold, n: &str, joined: &[&str]| -> Vec<SurfaceClass> {
        m.surfaces
            .iter()
            .filter(|s| s.label != n && s.pairing_with(n) == 0 && !joined.contains(&s.label.as_str()))
            .cloned()
            .collect()
    };
    let kept_a = kept(a, a_label, &joined_a);
    let kept_b = kept(b, b_label, &joined_b);
    for s in &kept_b {
        if kept_a.iter().any(|t| t.label == s.label) || s.label == glued {
            return Err(ManifoldError::BadJoin(format!("label `{}` occurs on both sides", s.label)));
        }
    }

    let mut summed = SurfaceClass::new(glued.clone(), na.genus, 0);
    summed.is_symplectic_torus = na.is_symplectic_torus && nb.is_symplectic_torus;
    out.push_surface(summed);
    // kept surfaces keep only pairings with other kept surfaces of their side
    for side in [&kept_a, &kept_b] {
        for s in side.iter() {
            let mut s = s.clone();
            s.pairings.retain(|l, _| side.iter().any(|t| &t.label == l));
            out.push_surface(s);
        }
    }
    for j in &opts.joins {
        let (sa, sb) = (a.surface(&j.a)?, b.surface(&j.b)?);
        let (pa, pb) = (sa.pairing_with(a_label), sb.pairing_with(b_label));
        if pa != pb || pa == 0 {
            return Err(ManifoldError::BadJoin(format!(
                "`{}`·`{a_label}` = {pa} but `{}`·`{b_label}` = {pb}",
                j.a, j.b
            )));
        }
        let mut s = SurfaceClass::new(j.label.clone(), sa.genus + sb.genus, sa.self_int + sb.self_int);
        s.is_symplectic_torus = false;
        out.push_surface(s);
        out.set_pairing(&j.label, &glued, pa);
        for t in &kept_a {
            out.set_pairing(&j.label, &t.label, sa.pairing_with(&t.label));
        }
        for t in &kept_b {
            out.set_pairing(&j.label, &t.label, sb.pairing_with(&t.label));
        }
    }
    for (i, j1) in opts.joins.iter().enumerate() {
        for j2 in &opts.joins[i + 1..] {
            let v = a.pairing(&j1.a, &j2.a)? + b.pairing(&j1.b, &j2.b)?;
            out.set_pairing(&j1.label, &j2.label, v);
        }
    }
    let mut inherited: Vec<_> = a.assumptions.iter().chain(b.assumptions.iter()).cloned().collect();
    inherited.retain(|x| !x.fact.ends_with("is simply connected"));
    inherited.append(&mut out.assumptions);
    inherited.sort();
    inherited.dedup();
    out.assumptions = inherited;
    Ok(out)
}

/// `K_{A #_N B} = K_A + K_B + 2[N]`, all terms in tracked classes.
pub fn canonical_of_symplectic_sum(
    ka: &CanonicalClass,
    kb: &CanonicalClass,
    n_label: &str,
    tracked: &[&str],
) -> Result<CanonicalClass, ManifoldError> {
    for l in ka.0.keys().chain(kb.0.keys()).map(String::as_str).chain([n_label]) {
        if !tracked.contains(&l) {
            return Err(ManifoldError::CanonicalNotExpressible(l.to_string()));
        }
    }
    Ok(ka.add(kb).add(&CanonicalClass::multiple(2, n_label)))
}

/// `S^1 x M_K'` for the left-handed trefoil `K'`: a `T^2`-bundle over `T^2`
/// with fiber `F` and section `Tm`, the homology of `S^2 x T^2`, and
/// trivial canonical class.
pub fn make_s1_times_mk_prime() -> FourManifold {
    let mut m = FourManifold::new("S1xM_K'", 0, 0, 2, true, None).expect("S^2 x T^2 numerics");
    m.push_surface(SurfaceClass::symplectic_torus("F"));
    m.push_surface(SurfaceClass::symplectic_torus("Tm"));
    m.set_pairing("F", "Tm", 1);
    m.canonical = Some(CanonicalClass::zero());
    m.assume("S1xM_K' is symplectic with K = 0", citation::S1_TIMES_MK_PRIME);
    m
}

/// `Y`: the fiber sum of `g + 1` copies of `S^1 x M_K'` along the fiber
/// `F`, fibered over a genus `g + 1` surface with section `C`.
/// Canonical class `2g[F]`, so `c1(Y) = -2g[F]`.
pub fn build_y(g: i64) -> Result<FourManifold, ManifoldError> {
    if g <= 0 {
        return Err(ManifoldError::InvalidParameter { name: "g", value: g });
    }
    let piece = make_s1_times_mk_prime();
    let mut y = piece.clone();
    y.name = "Y".to_string();
    for s in y.surfaces.iter_mut() {
        s.rename_pairing("Tm", "C");
        if s.label == "Tm" {
            s.label = "C".to_string();
        }
    }
    for copies in 2..=(g + 1) {
        let opts = FiberSumOptions {
            name: "Y".to_string(),
            b1: 2 * copies as u64,
            simply_connected: None,
            joins: vec![Join::new("C", "Tm", "C")],
            summed_label: Some("F".to_string()),
        };
        let ky = y.canonical.clone().unwrap_or_default();
        let mut next = fiber_sum(&y, "F", &piece, "F", true, &opts)?;
        let kp = piece.canonical.clone().unwrap_or_default();
        let labels: Vec<&str> = next.surfaces.iter().map(|s| s.label.as_str()).collect();
        next.canonical = Some(canonical_of_symplectic_sum(&ky, &kp, "F", &labels)?);
        y = next;
    }
    y.assume(format!("b1(Y) = {}", 2 * (g + 1)), citation::Y_BETTI);
    y.assume("Y is symplectic with c1(Y) = -2g[F]", citation::SYMPLECTIC_SUM_CANONICAL);
    y.known_sw.push(KnownSwValue {
        class: CanonicalClass::multiple(2 * g, "F"),
        magnitude: BigInt::one(),
        sign_ambiguous: true,
        citation: citation::TAUBES.to_string(),
    });
    Ok(y)
}

/// All stages of `Z_K = X_K #_{Σ'=C} Y`.
#[derive(Debug, Clone)]
pub struct ZkConstruction {
    pub knot_genus: u64,
    pub base_n: u64,
    pub base: FourManifold,
    pub knot_surgered: FourManifold,
    pub fibered: FourManifold,
    pub manifold: FourManifold,
}

impl ZkConstruction {
    /// Genus of `Σ'`, equal to `g + n`.
    pub fn sigma_prime_genus(&self) -> u64 {
        self.knot_genus + self.base_n
    }

    /// Multiple `m` with `SW_{X_K}(m[T])` and `SW_Y(m[F])` entering the gluing
    /// formula; `2g` for the K3 build.
    pub fn gluing_multiple(&self) -> i64 {
        2 * (self.sigma_prime_genus() as i64 - 1)
    }

    /// `SW_{X_K}` at `m[T]` for the gluing multiple `m`.
    pub fn sw_xk_at_gluing_class(&self) -> Result<BigInt, ManifoldError> {
        self.knot_surgered.sw()?.coefficient_at_multiple(self.gluing_multiple())
    }
}

/// Knot surgery on `T`, then the fiber sum with `Y` along `Σ' = C`, glued
/// spin. The fiber `T'` of `X_K` and the fiber `F` of `Y` are joined into
/// the genus-2 class `tau`.
pub fn build_zk(k: &KnotRecord, base: Base) -> Result<ZkConstruction, ManifoldError> {
    let g = k.genus()?;
    if g < 1 {
        return Err(ManifoldError::InvalidParameter { name: "knot genus", value: g as i64 });
    }
    let x = base.build()?;
    let xk = knot_surgery(&x, "T", k)?;
    let big_g = xk.surface("Sigma'")?.genus as i64;
    let y = build_y(big_g - 1)?;
    let opts = FiberSumOptions {
        name: "Z_K".to_string(),
        b1: 0,
        simply_connected: Some(citation::SIMPLY_CONNECTED_ZK),
        joins: vec![Join::new("T'", "F", "tau")],
        summed_label: Some("Sigma'".to_string()),
    };
    let mut z = fiber_sum(&xk, "Sigma'", &y, "C", true, &opts)?;
    z.assume("Z_K is spin", citation::SPIN_GLUING);
    z.assume("rim tori vanish in H_2(Z_K)", citation::RIM_TORI_TRIVIAL);
    Ok(ZkConstruction { knot_genus: g, base_n: base.n(), base: x, knot_surgered: xk, fibered: y, manifold: z })
}
