//! Knot in, report out: `Δ_K`, `Z_K`, basic classes, verdict, geography.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use knotsurgery_core::basicclass::{
    brute_force_enumerate, citation as bc, enumerate_basic_classes, mst_gluing_value, taubes_verdict, BasicClassResult,
    Verdict, ZkBasis,
};
use knotsurgery_core::knot::{maximal_degree_check, parse_braid, KnotRecord, SeifertMatrix, K_PRIME};
use knotsurgery_core::manifold::{build_zk, geography, Base, GeographyPoint, ZkConstruction};

use crate::error::Error;
use crate::format::{bigint, laurent_to_json, manifold_report, result_report};
use crate::table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSource {
    /// `table:NAME`
    Table(String),
    /// `braid n: w1 w2 ...`
    Braid(String),
    /// `seifert:PATH`, a JSON array of integer rows
    SeifertFile(PathBuf),
}

impl FromStr for KnotSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(name) = s.strip_prefix("table:") {
            Ok(KnotSource::Table(name.trim().to_string()))
        } else if let Some(word) = s.strip_prefix("braid") {
            Ok(KnotSource::Braid(word.trim_start_matches(':').trim().to_string()))
        } else if let Some(path) = s.strip_prefix("seifert:") {
            Ok(KnotSource::SeifertFile(PathBuf::from(path.trim())))
        } else {
            Err(Error::Input(format!("knot source `{s}`: expected table:NAME, \"braid n: w ...\" or seifert:PATH")))
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub knot: KnotSource,
    pub genus: Option<u64>,
    pub base: Base,
    /// Knot table to use instead of the bundled one.
    pub table: Option<PathBuf>,
    /// Cross-check with the Burau route and the brute-force enumerator.
    pub verify: bool,
}

impl RunConfig {
    pub fn new(knot: KnotSource) -> Self {
        Self { knot, genus: None, base: Base::K3, table: None, verify: false }
    }
}

pub fn resolve_knot(cfg: &RunConfig) -> Result<KnotRecord, Error> {
    let knot = match &cfg.knot {
        KnotSource::Table(name) => {
            let t = match &cfg.table {
                Some(p) => table::load_knot_table(p)?,
                None => table::bundled_table(),
            };
            let mut k = table::find(&t, name)?.clone();
            if k.genus_defaulted {
                k.genus = None;
                k.genus_defaulted = false;
            }
            k
        }
        KnotSource::Braid(word) => {
            let b = parse_braid(word).map_err(|e| Error::knot(word, e))?;
            KnotRecord::from_braid(format!("braid {word}"), b, None).map_err(|e| Error::knot(word, e))?
        }
        KnotSource::SeifertFile(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
            let v = table::parse_seifert_matrix(&text)?;
            let name = path.display().to_string();
            KnotRecord::from_seifert(name.clone(), v, None).map_err(|e| Error::knot(&name, e))?
        }
    };
    match cfg.genus {
        Some(g) => {
            let name = knot.name.clone();
            knot.with_genus(g).map_err(|e| Error::knot(&name, e))
        }
        None => Ok(knot.with_default_genus()),
    }
}

/// `(3n + g - 1, 8(g + n - 1))`.
pub fn closed_form_point(g: u64, n: u64) -> GeographyPoint {
    let (g, n) = (g as i64, n as i64);
    GeographyPoint { chi: 3 * n + g - 1, c: 8 * (g + n - 1) }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub presentations_compared: bool,
    pub brute_force_bound: i64,
    pub brute_force_classes: usize,
}

/// Everything computed for one knot.
#[derive(Debug, Clone)]
pub struct Run {
    pub knot: KnotRecord,
    pub base: Base,
    pub maximal_degree: bool,
    pub construction: ZkConstruction,
    pub basis: ZkBasis,
    pub gluing_coefficient: BigInt,
    pub result: BasicClassResult,
    pub verdict: Verdict,
    pub geography: GeographyPoint,
    pub verification: Option<Verification>,
}

pub fn run_pipeline(cfg: &RunConfig) -> Result<Run, Error> {
    let knot = resolve_knot(cfg)?;
    let maximal_degree = maximal_degree_check(&knot).map_err(|e| Error::knot(&knot.name, e))?;
    let construction = build_zk(&knot, cfg.base)?;
    let z = &construction.manifold;
    let basis = ZkBasis::from_manifold(z)?;
    let gluing_coefficient = construction.sw_xk_at_gluing_class()?;
    let result = enumerate_basic_classes(&basis, &gluing_coefficient)?;
    let verdict = taubes_verdict(&result, z.has_minus_two_sphere());
    let point = geography(z)?;
    let expected = closed_form_point(construction.knot_genus, construction.base_n);
    if point != expected {
        return Err(Error::Verification(format!(
            "geography ({}, {}) differs from closed form ({}, {})",
            point.chi, point.c, expected.chi, expected.c
        )));
    }
    let verification = if cfg.verify { Some(verify(&knot, &basis, &result)?) } else { None };
    Ok(Run {
        knot,
        base: cfg.base,
        maximal_degree,
        construction,
        basis,
        gluing_coefficient,
        result,
        verdict,
        geography: point,
        verification,
    })
}

fn verify(knot: &KnotRecord, basis: &ZkBasis, result: &BasicClassResult) -> Result<Verification, Error> {
    let presentations_compared = knot.verify_presentations().map_err(|e| Error::knot(&knot.name, e))?;
    let bound = 2 * basis.sigma_genus as i64 + 2;
    let brute = brute_force_enumerate(basis, bound)?;
    // with a_d = 0 the fast path reports no classes, but the admissible set is unchanged
    if !result.classes.is_empty() {
        let fast: Vec<_> = result.classes.iter().map(|c| c.class.clone()).collect();
        if fast != brute {
            return Err(Error::Verification(format!(
                "enumeration found {} classes, brute force {}",
                fast.len(),
                brute.len()
            )));
        }
    } else if brute.len() != 2 {
        return Err(Error::Verification(format!("brute force found {} admissible classes", brute.len())));
    }
    Ok(Verification { presentations_compared, brute_force_bound: bound, brute_force_classes: brute.len() })
}

fn base_name(base: Base) -> String {
    match base {
        Base::K3 => "K3".to_string(),
        Base::E2n(n) => format!("E({})", 2 * n),
    }
}

fn verdict_citations(v: Verdict) -> Vec<&'static str> {
    match v {
        Verdict::NonsymplecticBothOrientations => vec![bc::TAUBES, bc::MINUS_TWO_SPHERE],
        Verdict::NonsymplecticGivenOrientation | Verdict::Inconclusive => vec![bc::TAUBES],
        Verdict::TrivialSw => vec![],
    }
}

impl Run {
    pub fn to_json(&self) -> Value {
        let k = &self.knot;
        let c = &self.construction;
        let extra = verdict_citations(self.verdict);
        let basic = result_report(&self.result, self.verdict, &extra);
        let glued = mst_gluing_value(&self.gluing_coefficient, &BigInt::from(1));

        let mut citations: Vec<String> = c.manifold.assumptions.iter().map(|a| a.citation.clone()).collect();
        citations.extend(c.knot_surgered.assumptions.iter().map(|a| a.citation.clone()));
        citations.extend(self.result.citations.iter().cloned());
        citations.extend(extra.iter().map(|s| s.to_string()));
        citations.sort();
        citations.dedup();

        let verification = self.verification.as_ref().map(|v| {
            json!({
                "presentations_compared": v.presentations_compared,
                "brute_force_bound": v.brute_force_bound,
                "brute_force_classes": v.brute_force_classes,
            })
        });
        let sigma_prime = c.sigma_prime_genus();
        json!({
            "knot": {
                "name": k.name,
                "alexander": k.alexander.to_string(),
                "alexander_json": laurent_to_json(&k.alexander),
                "degree": k.degree,
                "top_coefficient": bigint(&k.top),
                "monic": k.is_monic(),
                "genus": k.genus,
                "genus_assumed_from_degree": k.genus_defaulted,
                "maximal_degree": self.maximal_degree,
            },
            "base": { "name": base_name(self.base), "n": c.base_n },
            "knot_surgered": manifold_report(&c.knot_surgered),
            "fibered": manifold_report(&c.fibered),
            "manifold": manifold_report(&c.manifold),
            "gluing": {
                "multiple": c.gluing_multiple(),
                "sigma_prime_genus": sigma_prime,
                "sw_knot_surgered": bigint(&self.gluing_coefficient),
                "sw_fibered_magnitude": 1,
                "magnitude": bigint(&glued.magnitude),
                "sign_ambiguous": glued.sign_ambiguous,
            },
            "basic_classes": basic,
            "geography": { "chi": self.geography.chi, "c": self.geography.c },
            "citations": citations,
            "verification": verification,
        })
    }

    pub fn to_text(&self) -> String {
        let k = &self.knot;
        let z = &self.construction.manifold;
        let mut s = String::new();
        let genus = k.genus.unwrap_or(k.degree);
        let _ = writeln!(s, "knot        {}", k.name);
        let _ = writeln!(s, "alexander   {}", k.alexander);
        let _ = writeln!(
            s,
            "degree      d = {}, a_d = {}, genus {}{}{}",
            k.degree,
            k.top,
            genus,
            if k.genus_defaulted { " (assumed = d)" } else { "" },
            if self.maximal_degree { ", maximal degree" } else { "" }
        );
        let _ = writeln!(s, "base        {}", base_name(self.base));
        let _ =
            writeln!(s, "Z_K         e = {}, sign = {}, b+ = {}, spin = {}", z.euler, z.signature, z.b_plus, z.spin);
        let _ = writeln!(s, "geography   chi = {}, c = {}", self.geography.chi, self.geography.c);
        if self.result.classes.is_empty() {
            let _ = writeln!(s, "classes     none ({})", self.result.notes.last().map(String::as_str).unwrap_or(""));
        }
        for c in self.result.classes.iter().filter(|c| c.class.a > 0) {
            let _ = writeln!(s, "classes     ±({}*tau + {}*Sigma'), |SW| = {}", c.class.a, c.class.b, c.sw.magnitude());
        }
        let _ = writeln!(s, "verdict     {}", self.verdict);
        if let Some(v) = &self.verification {
            let _ = writeln!(
                s,
                "verified    brute force bound {} found {} classes{}",
                v.brute_force_bound,
                v.brute_force_classes,
                if v.presentations_compared { "; Burau = Seifert" } else { "" }
            );
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let c = &self.construction;
        format!("n,g,chi,c\n{},{},{},{}\n", c.base_n, c.knot_genus, self.geography.chi, self.geography.c)
    }
}

/// Connected sum of `g` left trefoils: genus `g`, maximal degree.
pub fn trefoil_sum(g: u64) -> Result<KnotRecord, Error> {
    let t = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).expect("trefoil Seifert matrix");
    let mut v = SeifertMatrix::unknot();
    for _ in 0..g {
        v = v.block_sum(&t);
    }
    let name = if g == 1 { K_PRIME.to_string() } else { format!("{K_PRIME}#{g}") };
    KnotRecord::from_seifert(name.clone(), v, Some(g)).map_err(|e| Error::knot(&name, e))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeographyRow {
    pub n: u64,
    pub g: u64,
    pub chi: i64,
    pub c: i64,
}

/// Builds `Z_K` for each `(n, g)` from a genus-`g` sum of trefoils and
/// checks the point against the closed form.
pub fn geography_sweep(g_range: RangeInclusive<u64>, n_range: RangeInclusive<u64>) -> Result<Vec<GeographyRow>, Error> {
    if g_range.is_empty() || n_range.is_empty() {
        return Err(Error::Input("geography sweep needs nonempty ranges".to_string()));
    }
    let mut rows = Vec::new();
    for n in n_range {
        for g in g_range.clone() {
            let k = trefoil_sum(g)?;
            let z = build_zk(&k, Base::E2n(n))?.manifold;
            let p = geography(&z)?;
            let expected = closed_form_point(g, n);
            if p != expected {
                return Err(Error::Verification(format!(
                    "n = {n}, g = {g}: ({}, {}) against closed form ({}, {})",
                    p.chi, p.c, expected.chi, expected.c
                )));
            }
            rows.push(GeographyRow { n, g, chi: p.chi, c: p.c });
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[GeographyRow]) -> String {
    let mut s = String::from("n,g,chi,c\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{}", r.n, r.g, r.chi, r.c);
    }
    s
}

pub fn rows_to_json(rows: &[GeographyRow]) -> Value {
    Value::Array(rows.iter().map(|r| json!({ "n": r.n, "g": r.g, "chi": r.chi, "c": r.c })).collect())
}

/// `g1..g2,n1..n2`, both inclusive.
pub fn parse_sweep(text: &str) -> Result<(RangeInclusive<u64>, RangeInclusive<u64>), Error> {
    let bad = || Error::Input(format!("sweep `{text}`: expected g1..g2,n1..n2"));
    let (g, n) = text.split_once(',').ok_or_else(bad)?;
    let range = |r: &str| -> Result<RangeInclusive<u64>, Error> {
        let (a, b) = r.trim().split_once("..").ok_or_else(bad)?;
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        Ok(a..=b)
    };
    Ok((range(g)?, range(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(knot: &str) -> Result<Run, Error> {
        run_pipeline(&RunConfig::new(knot.parse().unwrap()))
    }

    #[test]
    fn knot_source_syntax() {
        assert_eq!("table:5_2".parse::<KnotSource>().unwrap(), KnotSource::Table("5_2".into()));
        assert_eq!("braid 2: 1".parse::<KnotSource>().unwrap(), KnotSource::Braid("2: 1".into()));
        assert_eq!("seifert:/tmp/v.json".parse::<KnotSource>().unwrap(), KnotSource::SeifertFile("/tmp/v.json".into()));
        assert_eq!("trefoil".parse::<KnotSource>().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn trefoil_report() {
        let r = run("table:K-prime").unwrap();
        let v = r.to_json();
        assert_eq!(v["knot"]["alexander"], "t - 1 + t^-1");
        assert_eq!((v["geography"]["chi"].as_i64(), v["geography"]["c"].as_i64()), (Some(3), Some(8)));
        assert_eq!(v["basic_classes"]["count_up_to_sign"], 1);
        assert_eq!(v["basic_classes"]["verdict"], "INCONCLUSIVE");
    }

    #[test]
    fn five_two_report() {
        let r = run("table:5_2").unwrap();
        assert_eq!(r.verdict, Verdict::NonsymplecticBothOrientations);
        let v = r.to_json();
        assert!(v["basic_classes"]["classes"].as_array().unwrap().iter().all(|c| c["sw_magnitude"] == 2));
    }

    #[test]
    fn unknot_is_rejected_as_precondition() {
        let err = run("braid 2: 1").unwrap_err();
        assert_eq!(err.exit_code(), 4);
        let k = resolve_knot(&RunConfig::new("braid 2: 1".parse().unwrap())).unwrap();
        assert_eq!(k.degree, 0);
        assert!(maximal_degree_check(&k).unwrap());
    }

    #[test]
    fn degree_below_genus_gives_zero() {
        let r = run("table:Wh(K-prime)").unwrap();
        assert!(!r.maximal_degree);
        assert!(r.result.classes.is_empty());
        assert_eq!(r.verdict, Verdict::TrivialSw);
    }

    #[test]
    fn genus_override_checked() {
        let mut cfg = RunConfig::new("table:5_1".parse().unwrap());
        cfg.genus = Some(1);
        assert_eq!(run_pipeline(&cfg).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn verify_passes_on_table() {
        for name in ["K-prime", "5_2", "5_1", "Wh(K-prime)"] {
            let mut cfg = RunConfig::new(KnotSource::Table(name.into()));
            cfg.verify = true;
            let r = run_pipeline(&cfg).unwrap();
            assert_eq!(r.verification.unwrap().brute_force_classes, 2, "{name}");
        }
    }

    #[test]
    fn e4_start() {
        let mut cfg = RunConfig::new(KnotSource::Table("K-prime".into()));
        cfg.base = Base::E2n(2);
        let r = run_pipeline(&cfg).unwrap();
        assert_eq!((r.geography.chi, r.geography.c), (6, 16));
        assert_eq!(r.to_json()["base"]["name"], "E(4)");
    }

    #[test]
    fn sweep_examples() {
        let rows = geography_sweep(1..=3, 1..=1).unwrap();
        let pts: Vec<_> = rows.iter().map(|r| (r.chi, r.c)).collect();
        assert_eq!(pts, vec![(3, 8), (4, 16), (5, 24)]);
        assert_eq!(geography_sweep(1..=1, 2..=2).unwrap()[0], GeographyRow { n: 2, g: 1, chi: 6, c: 16 });
        #[allow(clippy::reversed_empty_ranges)]
        let empty = geography_sweep(3..=1, 1..=1);
        assert_eq!(empty.unwrap_err().exit_code(), 2);
        assert_eq!(rows_to_csv(&rows[..1]), "n,g,chi,c\n1,1,3,8\n");
    }

    #[test]
    fn sweep_syntax() {
        assert_eq!(parse_sweep("1..10,1..4").unwrap(), (1..=10, 1..=4));
        assert_eq!(parse_sweep("2..=3,1..1").unwrap(), (2..=3, 1..=1));
        assert!(parse_sweep("1-3,1..2").is_err());
    }

    #[test]
    fn output_is_deterministic() {
        let a = serde_json::to_string(&run("table:5_2").unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&run("table:5_2").unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
