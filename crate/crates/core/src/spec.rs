//! Parameter specifications for bicirculant graphs and their named subfamilies.
//!
//! A bicirculant `B(m; R, S, T)` is described by an integer `m >= 1` and three
//! sets of residues mod `m`: outer-rim steps `R`, spoke offsets `S`, inner-rim
//! steps `T`. Invariants: `R = -R`, `T = -T`, `0 ∉ R ∪ T`, `0 ∈ S`.
//!
//! Text forms accepted by [`parse_spec`]:
//! - `B m R=r1,r2 S=s1,s2 T=t1,t2` (R/T given as one representative per ±pair;
//!   `R=` / `T=` may be empty or omitted for spoke-only graphs)
//! - `I m a b` — I-graph
//! - `GRW m a b c` — generalized rose window graph
//! - `H m S=s1,...` — cyclic Haar graph

use crate::arith::{gcd_with_all, min_residue, modm};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("m must be at least 1")]
    ZeroM,
    #[error("m must be at least {min} for this family (got {m})")]
    MTooSmall { m: u64, min: u64 },
    #[error("R must satisfy R = -R (mod m)")]
    RNotSymmetric,
    #[error("T must satisfy T = -T (mod m)")]
    TNotSymmetric,
    #[error("0 must not belong to R or T")]
    ZeroRimStep,
    #[error("S must contain 0")]
    SMissingZero,
    #[error("parameter {name} = {value} is not allowed for m = {m}")]
    BadParameter { name: &'static str, value: u64, m: u64 },
    #[error("cannot parse spec: {0}")]
    Parse(String),
}

/// General bicirculant parameters, residues stored reduced into `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BicirculantSpec {
    pub m: u64,
    pub r: BTreeSet<u64>,
    pub s: BTreeSet<u64>,
    pub t: BTreeSet<u64>,
}

fn reduce_set<I: IntoIterator<Item = u64>>(set: I, m: u64) -> BTreeSet<u64> {
    set.into_iter().map(|x| x % m).collect()
}

impl BicirculantSpec {
    /// Build and validate a spec; residues are reduced mod `m` first.
    pub fn new(
        m: u64,
        r: impl IntoIterator<Item = u64>,
        s: impl IntoIterator<Item = u64>,
        t: impl IntoIterator<Item = u64>,
    ) -> Result<Self, SpecError> {
        if m == 0 {
            return Err(SpecError::ZeroM);
        }
        let spec = BicirculantSpec {
            m,
            r: reduce_set(r, m),
            s: reduce_set(s, m),
            t: reduce_set(t, m),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Build from ± representatives: each element of `r_reps`/`t_reps`
    /// contributes both `x` and `m - x`.
    pub fn from_reps(
        m: u64,
        r_reps: impl IntoIterator<Item = u64>,
        s: impl IntoIterator<Item = u64>,
        t_reps: impl IntoIterator<Item = u64>,
    ) -> Result<Self, SpecError> {
        if m == 0 {
            return Err(SpecError::ZeroM);
        }
        let sym = |reps: &mut dyn Iterator<Item = u64>| -> BTreeSet<u64> {
            let mut out = BTreeSet::new();
            for x in reps {
                let x = x % m;
                out.insert(x);
                out.insert((m - x) % m);
            }
            out
        };
        let r = sym(&mut r_reps.into_iter());
        let t = sym(&mut t_reps.into_iter());
        Self::new(m, r, s, t)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        let m = self.m;
        if m == 0 {
            return Err(SpecError::ZeroM);
        }
        for set in [&self.r, &self.s, &self.t] {
            if set.iter().any(|&x| x >= m) {
                return Err(SpecError::Parse("residue out of range".into()));
            }
        }
        if !self.r.iter().all(|&x| self.r.contains(&((m - x) % m))) {
            return Err(SpecError::RNotSymmetric);
        }
        if !self.t.iter().all(|&x| self.t.contains(&((m - x) % m))) {
            return Err(SpecError::TNotSymmetric);
        }
        if self.r.contains(&0) || self.t.contains(&0) {
            return Err(SpecError::ZeroRimStep);
        }
        if !self.s.contains(&0) {
            return Err(SpecError::SMissingZero);
        }
        Ok(())
    }

    /// `gcd(m, R, S, T)`; the graph is connected iff this equals 1.
    pub fn connectivity_gcd(&self) -> u64 {
        gcd_with_all(
            self.m,
            self.r.iter().chain(&self.s).chain(&self.t).copied(),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity_gcd() == 1
    }

    /// Valence of outer vertices counting rim steps as a multiset
    /// (a step `m/2` is generated twice but yields a single edge).
    pub fn nominal_outer_degree(&self) -> usize {
        self.r.len() + self.s.len()
    }

    /// True when `m/2` lies in R or T, i.e. some rim step generates each of
    /// its edges twice; the realized graph collapses those to simple edges.
    pub fn has_half_step(&self) -> bool {
        self.m % 2 == 0 && {
            let h = self.m / 2;
            self.r.contains(&h) || self.t.contains(&h)
        }
    }

    /// One representative per ±pair, smallest first — the compressed
    /// rim notation used for display.
    pub fn rim_reps(set: &BTreeSet<u64>, m: u64) -> Vec<u64> {
        let mut reps: BTreeSet<u64> = set.iter().map(|&x| min_residue(x, m)).collect();
        reps.remove(&0);
        reps.into_iter().collect()
    }

    /// Canonical form for display and deduplication: S is shifted (by one of
    /// its own elements) to the lexicographically least set containing 0.
    pub fn canonical_s(&self) -> BTreeSet<u64> {
        let m = self.m;
        self.s
            .iter()
            .map(|&c| -> BTreeSet<u64> {
                self.s.iter().map(|&x| (x + m - c) % m).collect()
            })
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for BicirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let r = join(&Self::rim_reps(&self.r, self.m));
        let s = join(&self.s.iter().copied().collect::<Vec<_>>());
        let t = join(&Self::rim_reps(&self.t, self.m));
        write!(f, "B {} R={} S={} T={}", self.m, r, s, t)
    }
}

/// I-graph `I(m; a, b)`: one spoke type, rim steps `±a` and `±b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IGraphSpec {
    pub m: u64,
    pub a: u64,
    pub b: u64,
}

impl IGraphSpec {
    pub fn new(m: u64, a: u64, b: u64) -> Result<Self, SpecError> {
        if m < 3 {
            return Err(SpecError::MTooSmall { m, min: 3 });
        }
        let a = a % m;
        let b = b % m;
        for (name, x) in [("a", a), ("b", b)] {
            if x == 0 || 2 * x == m {
                return Err(SpecError::BadParameter { name, value: x, m });
            }
        }
        Ok(IGraphSpec { m, a, b })
    }

    pub fn to_bicirculant(self) -> BicirculantSpec {
        BicirculantSpec::from_reps(self.m, [self.a], [0], [self.b])
            .expect("validated I-graph parameters")
    }

    pub fn is_connected(self) -> bool {
        gcd_with_all(self.m, [self.a, self.b]) == 1
    }
}

impl fmt::Display for IGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I {} {} {}", self.m, self.a, self.b)
    }
}

/// Generalized rose window graph `R(m; a, b, c)`: rim steps `±a`, `±b`,
/// spokes of types `0` and `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GrwSpec {
    pub m: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl GrwSpec {
    pub fn new(m: u64, a: u64, b: u64, c: u64) -> Result<Self, SpecError> {
        if m < 3 {
            return Err(SpecError::MTooSmall { m, min: 3 });
        }
        let (a, b, c) = (a % m, b % m, c % m);
        for (name, x) in [("a", a), ("b", b)] {
            if x == 0 || 2 * x == m {
                return Err(SpecError::BadParameter { name, value: x, m });
            }
        }
        if c == 0 {
            return Err(SpecError::BadParameter { name: "c", value: c, m });
        }
        Ok(GrwSpec { m, a, b, c })
    }

    pub fn to_bicirculant(self) -> BicirculantSpec {
        BicirculantSpec::from_reps(self.m, [self.a], [0, self.c], [self.b])
            .expect("validated rose window parameters")
    }

    pub fn is_connected(self) -> bool {
        gcd_with_all(self.m, [self.a, self.b, self.c]) == 1
    }
}

impl fmt::Display for GrwSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GRW {} {} {} {}", self.m, self.a, self.b, self.c)
    }
}

/// Cyclic Haar graph `H(m; S)`: spokes only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HaarSpec {
    pub m: u64,
    pub s: BTreeSet<u64>,
}

impl HaarSpec {
    pub fn new(m: u64, s: impl IntoIterator<Item = u64>) -> Result<Self, SpecError> {
        if m == 0 {
            return Err(SpecError::ZeroM);
        }
        let s = reduce_set(s, m);
        if !s.contains(&0) {
            return Err(SpecError::SMissingZero);
        }
        Ok(HaarSpec { m, s })
    }

    pub fn to_bicirculant(&self) -> BicirculantSpec {
        BicirculantSpec::new(self.m, [], self.s.iter().copied(), [])
            .expect("validated Haar parameters")
    }

    pub fn is_connected(&self) -> bool {
        gcd_with_all(self.m, self.s.iter().copied()) == 1
    }
}

impl fmt::Display for HaarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .s
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "H {} S={}", self.m, s)
    }
}

/// A parsed spec, remembering which surface syntax was used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSpec {
    General(BicirculantSpec),
    IGraph(IGraphSpec),
    Grw(GrwSpec),
    Haar(HaarSpec),
}

impl ParsedSpec {
    pub fn to_bicirculant(&self) -> BicirculantSpec {
        match self {
            ParsedSpec::General(s) => s.clone(),
            ParsedSpec::IGraph(s) => s.to_bicirculant(),
            ParsedSpec::Grw(s) => s.to_bicirculant(),
            ParsedSpec::Haar(s) => s.to_bicirculant(),
        }
    }
}

fn parse_u64(tok: &str, what: &str) -> Result<u64, SpecError> {
    tok.parse::<u64>()
        .map_err(|_| SpecError::Parse(format!("expected integer for {what}, got `{tok}`")))
}

fn parse_list(val: &str, what: &str) -> Result<Vec<u64>, SpecError> {
    if val.is_empty() {
        return Ok(Vec::new());
    }
    val.split(',')
        .map(|tok| parse_u64(tok.trim(), what))
        .collect()
}

/// Parse any of the supported spec text forms.
pub fn parse_spec(text: &str) -> Result<ParsedSpec, SpecError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.is_empty() {
        return Err(SpecError::Parse("empty spec".into()));
    }
    let need = |n: usize, form: &str| -> Result<(), SpecError> {
        if toks.len() == n {
            Ok(())
        } else {
            Err(SpecError::Parse(format!(
                "form `{form}` takes {} arguments, got {}",
                n - 1,
                toks.len() - 1
            )))
        }
    };
    match toks[0] {
        "I" | "i" => {
            need(4, "I m a b")?;
            let m = parse_u64(toks[1], "m")?;
            Ok(ParsedSpec::IGraph(IGraphSpec::new(
                m,
                parse_u64(toks[2], "a")?,
                parse_u64(toks[3], "b")?,
            )?))
        }
        "GRW" | "grw" => {
            need(5, "GRW m a b c")?;
            let m = parse_u64(toks[1], "m")?;
            Ok(ParsedSpec::Grw(GrwSpec::new(
                m,
                parse_u64(toks[2], "a")?,
                parse_u64(toks[3], "b")?,
                parse_u64(toks[4], "c")?,
            )?))
        }
        "H" | "h" => {
            if toks.len() != 3 {
                return Err(SpecError::Parse("form `H m S=...` takes 2 arguments".into()));
            }
            let m = parse_u64(toks[1], "m")?;
            let s = toks[2]
                .strip_prefix("S=")
                .ok_or_else(|| SpecError::Parse("expected S=... in Haar spec".into()))?;
            Ok(ParsedSpec::Haar(HaarSpec::new(m, parse_list(s, "S")?)?))
        }
        "B" | "b" => {
            if toks.len() < 2 {
                return Err(SpecError::Parse("form `B m R=.. S=.. T=..`".into()));
            }
            let m = parse_u64(toks[1], "m")?;
            let (mut r, mut s, mut t) = (Vec::new(), Vec::new(), Vec::new());
            let mut seen_s = false;
            for tok in &toks[2..] {
                if let Some(v) = tok.strip_prefix("R=") {
                    r = parse_list(v, "R")?;
                } else if let Some(v) = tok.strip_prefix("S=") {
                    s = parse_list(v, "S")?;
                    seen_s = true;
                } else if let Some(v) = tok.strip_prefix("T=") {
                    t = parse_list(v, "T")?;
                } else {
                    return Err(SpecError::Parse(format!("unexpected token `{tok}`")));
                }
            }
            if !seen_s {
                return Err(SpecError::Parse("missing S=... in bicirculant spec".into()));
            }
            Ok(ParsedSpec::General(BicirculantSpec::from_reps(m, r, s, t)?))
        }
        other => Err(SpecError::Parse(format!(
            "unknown spec form `{other}` (expected B, I, GRW, or H)"
        ))),
    }
}

/// Shift every element of a residue set by `-c` (used by the spoke-shift
/// isomorphism).
pub fn shift_set(set: &BTreeSet<u64>, c: u64, m: u64) -> BTreeSet<u64> {
    set.iter().map(|&x| modm(x as i64 - c as i64, m)).collect()
}
