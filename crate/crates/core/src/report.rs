//! Checking a construction against the search oracle and reporting the outcome.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::chromatic::ChromaticProfile;
use crate::construct::{star_free_construction, theorem_descriptor, turan, ConstructionDescriptor};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::search::{brute_force_ex_with, hill_climb_with, ClimbOptions, SearchOptions};
use crate::subgraph::{
    contains, count_copies, count_multipartite_in_construction, multipartite_parts,
};

pub const SCHEMA: &str = "turanbench.report/v1";

/// Big integers as decimal strings, so reports survive any JSON reader.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// `Option<BigUint>` with `None` written as `"not-computed"`.
mod maybe_decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    const ABSENT: &str = "not-computed";

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_str(ABSENT),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let text = String::deserialize(d)?;
        if text == ABSENT {
            return Ok(None);
        }
        text.parse().map(Some).map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Theorem,
    Kbar,
    Star,
    Turan,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(Variant::Theorem),
            "kbar" => Ok(Variant::Kbar),
            "star" => Ok(Variant::Star),
            "turan" => Ok(Variant::Turan),
            _ => Err(Error::invalid(format!("unknown variant {s:?}"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Theorem => "theorem",
            Variant::Kbar => "kbar",
            Variant::Star => "star",
            Variant::Turan => "turan",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Heuristic,
    /// Build and count the construction only.
    Skip,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "heuristic" => Ok(Mode::Heuristic),
            "skip" | "none" => Ok(Mode::Skip),
            _ => Err(Error::invalid(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Heuristic => "heuristic",
            Mode::Skip => "skip",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Matches,
    ConstructionBelowOracle,
    OracleSkipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Matches => "matches",
            Verdict::ConstructionBelowOracle => "construction-below-oracle",
            Verdict::OracleSkipped => "oracle-skipped",
        })
    }
}

/// A named construction, with its descriptor when it has the apex-plus-multipartite shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub variant: Variant,
    pub descriptor: Option<ConstructionDescriptor>,
    pub graph: Graph,
}

fn star_leaves(forbidden: &Graph) -> Option<usize> {
    match multipartite_parts(forbidden)?.as_slice() {
        [1, t] | [t, 1] if *t >= 2 => Some(*t),
        _ => None,
    }
}

/// `K_{s-1} + T(n-s+1, 1)`, i.e. `s - 1` apex vertices over an independent set.
fn kbar_descriptor(s: usize, n: usize) -> Result<ConstructionDescriptor> {
    if s == 0 || s > n + 1 {
        return Err(Error::invalid(format!(
            "class size s = {s} outside 1..={}",
            n + 1
        )));
    }
    let rest = n + 1 - s;
    let parts = if rest == 0 { vec![] } else { vec![rest] };
    Ok(ConstructionDescriptor::new(s - 1, parts))
}

/// Builds `variant` at order `n` for forbidden graph `forbidden`.
///
/// `s` overrides the class size used by the bipartite construction (default `sigma`).
pub fn build_construction(
    variant: Variant,
    forbidden: &Graph,
    profile: &ChromaticProfile,
    n: usize,
    s: Option<usize>,
) -> Result<Construction> {
    let (descriptor, graph) = match variant {
        Variant::Theorem => {
            let d = theorem_descriptor(profile, n)?;
            (Some(d.clone()), d.realize())
        }
        Variant::Kbar => {
            if profile.chi != 2 || star_leaves(forbidden).is_some() {
                return Err(Error::invalid(
                    "kbar needs a bipartite forbidden graph that is not a star",
                ));
            }
            let d = kbar_descriptor(s.unwrap_or(profile.sigma), n)?;
            (Some(d.clone()), d.realize())
        }
        Variant::Star => {
            let t = star_leaves(forbidden)
                .ok_or_else(|| Error::invalid("star needs a forbidden star K_{1,t} with t >= 2"))?;
            (None, star_free_construction(n, t)?)
        }
        Variant::Turan => {
            if profile.chi < 2 {
                return Err(Error::invalid("turan needs a forbidden graph with an edge"));
            }
            let r = profile.chi - 1;
            let d = ConstructionDescriptor::apex_turan(0, n, r)?;
            (Some(d), turan(n, r)?)
        }
    };
    Ok(Construction {
        variant,
        descriptor,
        graph,
    })
}

/// The construction the verifier uses for `forbidden`, chosen by its chromatic number.
pub fn default_variant(forbidden: &Graph, profile: &ChromaticProfile) -> Result<Variant> {
    match profile.chi {
        0 | 1 => Err(Error::invalid(
            "forbidden graph has no edges; no construction applies",
        )),
        2 if star_leaves(forbidden).is_some() => Ok(Variant::Star),
        2 => Ok(Variant::Kbar),
        _ => Ok(Variant::Theorem),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub n: usize,
    pub pattern: String,
    pub forbidden: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSummary {
    pub variant: Variant,
    pub descriptor: Option<ConstructionDescriptor>,
    /// Canonical graph6.
    pub graph6: String,
    pub forbidden_free: bool,
}

/// Wall-clock microseconds per phase.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub profile_us: u64,
    pub construction_us: u64,
    pub count_us: u64,
    pub oracle_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub instance: Instance,
    pub profile: ChromaticProfile,
    pub mode: Mode,
    pub construction: ConstructionSummary,
    #[serde(with = "decimal")]
    pub construction_value: BigUint,
    #[serde(with = "maybe_decimal")]
    pub oracle_value: Option<BigUint>,
    pub verdict: Verdict,
    /// Canonical graph6 of every oracle graph attaining `oracle_value`.
    pub witnesses: Vec<String>,
    pub warnings: Vec<String>,
    pub timing: Timing,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: VerificationReport = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
        if r.schema != SCHEMA {
            return Err(Error::invalid(format!(
                "unsupported report schema {:?}",
                r.schema
            )));
        }
        Ok(r)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let i = &self.instance;
        let _ = writeln!(
            s,
            "instance      n={} H={} F={}",
            i.n, i.pattern, i.forbidden
        );
        let _ = writeln!(
            s,
            "chi / sigma   {} / {}",
            self.profile.chi, self.profile.sigma
        );
        let c = &self.construction;
        let shape = match &c.descriptor {
            Some(d) => format!(" K_{} + K_{:?}", d.apex_clique, d.part_sizes),
            None => String::new(),
        };
        let _ = writeln!(s, "construction  {}{} {}", c.variant, shape, c.graph6);
        let _ = writeln!(s, "F-free        {}", c.forbidden_free);
        let _ = writeln!(s, "construction  value {}", self.construction_value);
        let oracle = self
            .oracle_value
            .as_ref()
            .map_or_else(|| "not-computed".to_string(), |v| v.to_string());
        let _ = writeln!(s, "oracle        value {oracle} ({})", self.mode);
        let _ = writeln!(s, "verdict       {}", self.verdict);
        for w in &self.witnesses {
            let _ = writeln!(s, "witness       {w}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning       {w}");
        }
        let t = &self.timing;
        let _ = writeln!(
            s,
            "timing (us)   profile {} construction {} count {} oracle {}",
            t.profile_us, t.construction_us, t.count_us, t.oracle_us
        );
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: Mode,
    pub variant: Option<Variant>,
    pub s: Option<usize>,
    pub search: SearchOptions,
    pub climb: ClimbOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: Mode::Exact,
            variant: None,
            s: None,
            search: SearchOptions::default(),
            climb: ClimbOptions::default(),
        }
    }
}

impl VerifyOptions {
    pub fn mode(mode: Mode) -> Self {
        VerifyOptions {
            mode,
            ..Default::default()
        }
    }

    pub fn with_checkpoint(mut self, path: PathBuf) -> Self {
        self.search.checkpoint = Some(path);
        self
    }
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros().min(u64::MAX as u128) as u64
}

/// Counts `pattern` in the construction, by the closed form too when both are multipartite.
pub fn construction_value(pattern: &Graph, c: &Construction) -> Result<BigUint> {
    let direct = count_copies(pattern, &c.graph);
    if let (Some(parts), Some(d)) = (multipartite_parts(pattern), &c.descriptor) {
        if pattern.order() > 0 {
            let closed = count_multipartite_in_construction(&parts, d)?;
            if closed != direct {
                return Err(Error::InternalInvariant(format!(
                    "closed form gives {closed}, backtracking gives {direct}"
                )));
            }
        }
    }
    Ok(direct)
}

pub fn verify(
    n: usize,
    pattern: &Graph,
    forbidden: &Graph,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut timing = Timing::default();
    let mut warnings = Vec::new();

    let t = Instant::now();
    let profile = ChromaticProfile::compute(forbidden)?;
    timing.profile_us = micros(t);

    let t = Instant::now();
    let variant = match opts.variant {
        Some(v) => v,
        None => default_variant(forbidden, &profile)?,
    };
    let construction = build_construction(variant, forbidden, &profile, n, opts.s)?;
    let forbidden_free = !contains(&construction.graph, forbidden);
    let construction_g6 = canonical_form(&construction.graph)?;
    timing.construction_us = micros(t);
    if !forbidden_free {
        warnings.push(format!("the {variant} construction contains F"));
    }
    if contains(pattern, forbidden) {
        warnings.push("H contains F: every F-free graph has zero copies of H".into());
    }

    let t = Instant::now();
    let value = construction_value(pattern, &construction)?;
    timing.count_us = micros(t);

    let t = Instant::now();
    let (oracle_value, mut witnesses) = match opts.mode {
        Mode::Skip => (None, Vec::new()),
        Mode::Exact => {
            let r = brute_force_ex_with(n, pattern, forbidden, &opts.search)?;
            (Some(r.optimum), r.witnesses.into_iter().collect())
        }
        Mode::Heuristic => {
            let mut climb = opts.climb.clone();
            if forbidden_free {
                climb.start = Some(construction.graph.clone());
            }
            let r = hill_climb_with(n, pattern, forbidden, &climb)?;
            (Some(r.count), vec![canonical_form(&r.graph)?])
        }
    };
    timing.oracle_us = micros(t);

    let verdict = match &oracle_value {
        None => Verdict::OracleSkipped,
        Some(o) if *o == value && forbidden_free => Verdict::Matches,
        Some(o) if *o < value => {
            return Err(Error::InternalInvariant(format!(
                "F-free construction has {value} copies, above the oracle value {o}"
            )));
        }
        Some(_) => Verdict::ConstructionBelowOracle,
    };
    if verdict == Verdict::Matches && !witnesses.contains(&construction_g6) {
        witnesses.push(construction_g6.clone());
        witnesses.sort();
    }

    Ok(VerificationReport {
        schema: SCHEMA.into(),
        instance: Instance {
            n,
            pattern: graph6::encode(pattern)?,
            forbidden: graph6::encode(forbidden)?,
        },
        profile,
        mode: opts.mode,
        construction: ConstructionSummary {
            variant,
            descriptor: construction.descriptor,
            graph6: construction_g6,
            forbidden_free,
        },
        construction_value: value,
        oracle_value,
        verdict,
        witnesses,
        warnings,
        timing,
    })
}
