//! Axiom schemas, the lattice of Δ-systems, and a Hilbert-style derivation
//! checker.
//!
//! The checker is a small kernel with one axiom form (instances of a schema
//! under an explicitly supplied substitution), propositional tautology
//! instances, and two rules:
//!
//! * MP: from `φ` and `φ → ψ` infer `ψ`
//! * REΔ: from `φ ↔ ψ` infer `Δφ ↔ Δψ`
//!
//! Nothing is normalized. Every comparison is exact syntactic equality.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::semantics::PropertySet;
use crate::syntax::{
    instantiate, is_tautology_instance, parse, Formula, MetaVar, Substitution, SyntaxError,
};

/// Names of the registered schemas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemaName {
    DeltaEqu,
    DeltaM,
    DeltaC,
    DeltaN,
    StrongDeltaM,
    DeltaMPrime,
    DeltaCPrime,
    BoxM,
    BoxC,
    BoxN,
    BoxZ,
}

impl SchemaName {
    pub const ALL: [SchemaName; 11] = [
        SchemaName::DeltaEqu,
        SchemaName::DeltaM,
        SchemaName::DeltaC,
        SchemaName::DeltaN,
        SchemaName::StrongDeltaM,
        SchemaName::DeltaMPrime,
        SchemaName::DeltaCPrime,
        SchemaName::BoxM,
        SchemaName::BoxC,
        SchemaName::BoxN,
        SchemaName::BoxZ,
    ];

    /// File-format spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            SchemaName::DeltaEqu => "dEqu",
            SchemaName::DeltaM => "dM",
            SchemaName::DeltaC => "dC",
            SchemaName::DeltaN => "dN",
            SchemaName::StrongDeltaM => "sdM",
            SchemaName::DeltaMPrime => "dM'",
            SchemaName::DeltaCPrime => "dC'",
            SchemaName::BoxM => "M",
            SchemaName::BoxC => "C",
            SchemaName::BoxN => "N",
            SchemaName::BoxZ => "Z",
        }
    }

    fn pattern_text(self) -> &'static str {
        match self {
            SchemaName::DeltaEqu => "Dphi <-> D~phi",
            SchemaName::DeltaM => "Dphi -> D(phi | psi) | D(~phi | chi)",
            SchemaName::DeltaC => "Dphi & Dpsi -> D(phi & psi)",
            SchemaName::DeltaN => "DT",
            SchemaName::StrongDeltaM => "Dphi -> D(phi | psi)",
            SchemaName::DeltaMPrime => "Dphi -> D(phi -> psi) | D(~phi -> chi)",
            SchemaName::DeltaCPrime => "D(psi -> phi) & D(~psi -> phi) -> Dphi",
            SchemaName::BoxM => "B(phi & psi) -> Bphi & Bpsi",
            SchemaName::BoxC => "Bphi & Bpsi -> B(phi & psi)",
            SchemaName::BoxN => "BT",
            SchemaName::BoxZ => "Bphi -> B~phi",
        }
    }

    pub fn schema(self) -> Schema {
        Schema {
            name: self,
            pattern: parse(self.pattern_text()).expect("built-in schema parses"),
        }
    }
}

impl fmt::Display for SchemaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SchemaName {
    type Err = ProofError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SchemaName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| ProofError::UnknownSchema(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub name: SchemaName,
    pub pattern: Formula,
}

impl Schema {
    /// Instance with metavariables φ, ψ, χ replaced by `atoms` in that order.
    pub fn instance_over(&self, atoms: &[Formula]) -> Result<(Formula, Substitution), SyntaxError> {
        let subst: Substitution = self
            .pattern
            .metavars()
            .into_iter()
            .zip(atoms.iter().cloned())
            .collect();
        Ok((instantiate(&self.pattern, &subst)?, subst))
    }

    /// Instance over the default atoms p, q, r.
    pub fn canonical_instance(&self) -> Formula {
        let atoms = ["p", "q", "r"].map(Formula::atom);
        self.instance_over(&atoms)
            .expect("three atoms cover all metavariables")
            .0
    }
}

pub fn registry() -> Vec<Schema> {
    SchemaName::ALL
        .into_iter()
        .map(SchemaName::schema)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemStatus {
    /// Sound and complete axiomatization known.
    Axiomatized,
    /// Axiomatization proposed but completeness open.
    Conjectured,
    /// Only the frame class is known.
    SemanticOnly,
    /// Helper system used by fixture derivations.
    Auxiliary,
}

impl fmt::Display for SystemStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemStatus::Axiomatized => "axiomatized",
            SystemStatus::Conjectured => "conjectured axiomatization",
            SystemStatus::SemanticOnly => "semantic-only",
            SystemStatus::Auxiliary => "auxiliary",
        })
    }
}

/// The fourteen distinct Δ-logics of the cube (E = EZ and EN = ENZ
/// coincide) plus two auxiliary systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemId {
    E,
    EC,
    ECZ,
    M,
    R,
    EN,
    ECN,
    ECNZ,
    EMN,
    K,
    MZ,
    RZ,
    EMNZ,
    KZ,
    /// M^Δ with ΔC′ in place of ΔC.
    MPlusCPrime,
    /// E^Δ with ΔM′ in place of ΔM.
    EPlusMPrime,
}

impl SystemId {
    pub const ALL: [SystemId; 16] = [
        SystemId::E,
        SystemId::EC,
        SystemId::ECZ,
        SystemId::M,
        SystemId::R,
        SystemId::EN,
        SystemId::ECN,
        SystemId::ECNZ,
        SystemId::EMN,
        SystemId::K,
        SystemId::MZ,
        SystemId::RZ,
        SystemId::EMNZ,
        SystemId::KZ,
        SystemId::MPlusCPrime,
        SystemId::EPlusMPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::E => "E-delta",
            SystemId::EC => "EC-delta",
            SystemId::ECZ => "ECZ-delta",
            SystemId::M => "M-delta",
            SystemId::R => "R-delta",
            SystemId::EN => "EN-delta",
            SystemId::ECN => "ECN-delta",
            SystemId::ECNZ => "ECNZ-delta",
            SystemId::EMN => "EMN-delta",
            SystemId::K => "K-delta",
            SystemId::MZ => "MZ-delta",
            SystemId::RZ => "RZ-delta",
            SystemId::EMNZ => "EMNZ-delta",
            SystemId::KZ => "KZ-delta",
            SystemId::MPlusCPrime => "M-delta+dC'",
            SystemId::EPlusMPrime => "E-delta+dM'",
        }
    }

    pub fn status(self) -> SystemStatus {
        use SystemId::*;
        match self {
            E | ECZ | M | R | EN | ECNZ | EMN | K => SystemStatus::Axiomatized,
            MZ | RZ | EMNZ | KZ => SystemStatus::Conjectured,
            EC | ECN => SystemStatus::SemanticOnly,
            MPlusCPrime | EPlusMPrime => SystemStatus::Auxiliary,
        }
    }

    /// Axiom schemas beyond TAUT (MP and REΔ are implicit everywhere).
    pub fn schemas(self) -> &'static [SchemaName] {
        use SchemaName::*;
        match self {
            SystemId::E => &[DeltaEqu],
            SystemId::M => &[DeltaEqu, DeltaM],
            SystemId::ECZ => &[DeltaEqu, DeltaC],
            SystemId::EN => &[DeltaEqu, DeltaN],
            SystemId::R => &[DeltaEqu, DeltaM, DeltaC],
            SystemId::EMN => &[DeltaEqu, DeltaM, DeltaN],
            SystemId::ECNZ => &[DeltaEqu, DeltaC, DeltaN],
            SystemId::K => &[DeltaEqu, DeltaM, DeltaC, DeltaN],
            SystemId::MZ => &[DeltaEqu, StrongDeltaM],
            SystemId::RZ => &[DeltaEqu, StrongDeltaM, DeltaC],
            SystemId::EMNZ => &[DeltaEqu, StrongDeltaM, DeltaN],
            SystemId::KZ => &[DeltaEqu, StrongDeltaM, DeltaC, DeltaN],
            SystemId::EC | SystemId::ECN => &[],
            SystemId::MPlusCPrime => &[DeltaEqu, DeltaM, DeltaCPrime],
            SystemId::EPlusMPrime => &[DeltaEqu, DeltaMPrime],
        }
    }

    /// The frame class the system is (or is conjectured to be) determined by.
    pub fn frame_class(self) -> PropertySet {
        let letters = match self {
            SystemId::E => "",
            SystemId::EC => "c",
            SystemId::ECZ => "cz",
            SystemId::M | SystemId::EPlusMPrime => "m",
            SystemId::R | SystemId::MPlusCPrime => "mc",
            SystemId::EN => "n",
            SystemId::ECN => "cn",
            SystemId::ECNZ => "cnz",
            SystemId::EMN => "mn",
            SystemId::K => "mcn",
            SystemId::MZ => "mz",
            SystemId::RZ => "mcz",
            SystemId::EMNZ => "mnz",
            SystemId::KZ => "mcnz",
        };
        PropertySet::parse(letters).expect("valid flags")
    }

    pub fn has_schema(self, name: SchemaName) -> bool {
        self.schemas().contains(&name)
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = ProofError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SystemId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| ProofError::UnknownSystem(s.to_string()))
    }
}

/// Arrows of the cube of Δ-logics, from the weaker to the deductively
/// stronger system.
pub fn lattice_edges() -> Vec<(SystemId, SystemId)> {
    use SystemId::*;
    vec![
        // bottom face
        (E, EN),
        (E, M),
        (E, EC),
        (EN, ECN),
        (EN, EMN),
        (M, EMN),
        (M, R),
        (EC, ECN),
        (EC, ECZ),
        (ECN, ECNZ),
        (ECZ, ECNZ),
        (ECZ, R),
        (ECNZ, K),
        (R, K),
        (EMN, K),
        // top level
        (M, MZ),
        (MZ, EMNZ),
        (EMN, EMNZ),
        (MZ, RZ),
        (R, RZ),
        (RZ, KZ),
        (EMNZ, KZ),
        (K, KZ),
    ]
}

// ---------------------------------------------------------------------------
// Derivations

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Taut,
    Axiom(SchemaName, Substitution),
    /// `Mp(i, j)`: line `j` is `line i → this line`.
    Mp(usize, usize),
    ReDelta(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Taut => f.write_str("taut"),
            Justification::Axiom(name, subst) if subst.is_empty() => write!(f, "axiom {name}"),
            Justification::Axiom(name, subst) => write!(f, "axiom {name} {subst}"),
            Justification::Mp(i, j) => write!(f, "mp {i} {j}"),
            Justification::ReDelta(i) => write!(f, "re-delta {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    /// System name as written; resolved when checked.
    pub system: String,
    pub lines: Vec<Line>,
}

impl Derivation {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system)?;
        for line in &self.lines {
            writeln!(
                f,
                "{}. {}  {}",
                line.index, line.formula, line.justification
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("line numbers must run 1, 2, 3, ...; found {found} where {expected} was expected")]
    Numbering { expected: usize, found: usize },
    #[error("forward reference to line {0}")]
    ForwardReference(usize),
    #[error("reference to nonexistent line {0}")]
    NoSuchLine(usize),
    #[error("not an instance of a propositional tautology")]
    NotTautology,
    #[error("schema {schema} is not an axiom of {system}")]
    SchemaNotInSystem {
        schema: SchemaName,
        system: SystemId,
    },
    #[error("substitution mismatch: instance is `{expected}`")]
    SubstitutionMismatch { expected: Formula },
    #[error("bad substitution: {0}")]
    BadSubstitution(SyntaxError),
    #[error("line {major} is not `line {minor} -> this line`")]
    MpShape { minor: usize, major: usize },
    #[error("line {0} is not a biconditional")]
    ReDeltaPremise(usize),
    #[error("expected `{expected}` from line {premise} by RE-delta")]
    ReDeltaShape { premise: usize, expected: Formula },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("unknown schema `{0}`")]
    UnknownSchema(String),
    #[error("{0} has no axiomatization to check against")]
    NotAxiomatized(SystemId),
    #[error("empty derivation")]
    Empty,
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: LineError },
}

impl ProofError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ProofError::Line { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub system: SystemId,
    pub status: SystemStatus,
    pub lines: usize,
    pub conclusion: Formula,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ok: {} lines in {} ({}), conclusion {}",
            self.lines, self.system, self.status, self.conclusion
        )
    }
}

/// Checks every line of `d`; the first failing line is reported.
pub fn check_derivation(d: &Derivation) -> Result<CheckReport, ProofError> {
    let system: SystemId = d.system.parse()?;
    if system.status() == SystemStatus::SemanticOnly {
        return Err(ProofError::NotAxiomatized(system));
    }
    if d.lines.is_empty() {
        return Err(ProofError::Empty);
    }
    for (pos, line) in d.lines.iter().enumerate() {
        let expected = pos + 1;
        let fail = |reason| ProofError::Line {
            line: line.index,
            reason,
        };
        if line.index != expected {
            return Err(fail(LineError::Numbering {
                expected,
                found: line.index,
            }));
        }
        let cite = |i: usize| -> Result<&Formula, ProofError> {
            if i == 0 {
                Err(fail(LineError::NoSuchLine(i)))
            } else if i >= line.index {
                Err(fail(LineError::ForwardReference(i)))
            } else {
                Ok(&d.lines[i - 1].formula)
            }
        };
        match &line.justification {
            Justification::Taut => {
                if !is_tautology_instance(&line.formula) {
                    return Err(fail(LineError::NotTautology));
                }
            }
            Justification::Axiom(name, subst) => {
                if !system.has_schema(*name) {
                    return Err(fail(LineError::SchemaNotInSystem {
                        schema: *name,
                        system,
                    }));
                }
                let instance = instantiate(&name.schema().pattern, subst)
                    .map_err(|e| fail(LineError::BadSubstitution(e)))?;
                if instance != line.formula {
                    return Err(fail(LineError::SubstitutionMismatch { expected: instance }));
                }
            }
            Justification::Mp(i, j) => {
                let minor = cite(*i)?;
                let major = cite(*j)?;
                let ok =
                    matches!(major, Formula::Imp(a, b) if **a == *minor && **b == line.formula);
                if !ok {
                    return Err(fail(LineError::MpShape {
                        minor: *i,
                        major: *j,
                    }));
                }
            }
            Justification::ReDelta(i) => {
                let Formula::Iff(a, b) = cite(*i)? else {
                    return Err(fail(LineError::ReDeltaPremise(*i)));
                };
                let expected =
                    Formula::iff(Formula::delta((**a).clone()), Formula::delta((**b).clone()));
                if expected != line.formula {
                    return Err(fail(LineError::ReDeltaShape {
                        premise: *i,
                        expected,
                    }));
                }
            }
        }
    }
    Ok(CheckReport {
        system,
        status: system.status(),
        lines: d.lines.len(),
        conclusion: d.lines.last().unwrap().formula.clone(),
    })
}

// ---------------------------------------------------------------------------
// File format

/// Error while reading a derivation file; `line` is the 1-based file line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct DerivationParseError {
    pub line: usize,
    pub message: String,
}

const KEYWORDS: [&str; 4] = ["taut", "axiom", "mp", "re-delta"];

/// Splits `formula  justification` at the first run of two or more spaces
/// (or a tab) followed by a justification keyword.
fn split_justification(body: &str) -> Option<(&str, &str)> {
    let bytes = body.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b' ' || bytes[i] == b'\t' {
            let start = i;
            while i < bytes.len() && (bytes[i] == b' ' || bytes[i] == b'\t') {
                i += 1;
            }
            let gap = &body[start..i];
            let rest = &body[i..];
            let wide = gap.len() >= 2 || gap.contains('\t');
            let keyword = rest.split_whitespace().next().unwrap_or("");
            if wide && KEYWORDS.contains(&keyword) {
                return Some((&body[..start], rest));
            }
        } else {
            i += 1;
        }
    }
    None
}

fn parse_index(word: Option<&str>, what: &str) -> Result<usize, String> {
    word.ok_or_else(|| format!("missing {what}"))?
        .parse()
        .map_err(|_| format!("bad {what}"))
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let text = text.trim();
    let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    match keyword {
        "taut" if rest.is_empty() => Ok(Justification::Taut),
        "mp" => {
            let mut words = rest.split_whitespace();
            let i = parse_index(words.next(), "minor premise")?;
            let j = parse_index(words.next(), "major premise")?;
            if words.next().is_some() {
                return Err("mp takes two line numbers".into());
            }
            Ok(Justification::Mp(i, j))
        }
        "re-delta" => {
            let mut words = rest.split_whitespace();
            let i = parse_index(words.next(), "premise")?;
            if words.next().is_some() {
                return Err("re-delta takes one line number".into());
            }
            Ok(Justification::ReDelta(i))
        }
        "axiom" => {
            let (name, bindings) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let name: SchemaName = name.parse().map_err(|e: ProofError| e.to_string())?;
            let mut subst = Substitution::new();
            for binding in bindings.split(';').map(str::trim).filter(|b| !b.is_empty()) {
                let (var, value) = binding
                    .split_once('=')
                    .ok_or_else(|| format!("expected `var=formula` in `{binding}`"))?;
                let var = MetaVar::from_name(var.trim())
                    .ok_or_else(|| format!("`{}` is not a metavariable", var.trim()))?;
                let value = parse(value).map_err(|e| format!("in binding for {var}: {e}"))?;
                if subst.insert(var, value).is_some() {
                    return Err(format!("{var} bound twice"));
                }
            }
            Ok(Justification::Axiom(name, subst))
        }
        other => Err(format!("unknown justification `{other}`")),
    }
}

/// Reads the line-oriented derivation format:
///
/// ```text
/// system: R-delta
/// 1. Dp -> Dp  taut
/// 2. (Dp & Dq) -> D(p & q)  axiom dC phi=p; psi=q
/// 3. ...  mp 1 2
/// 4. ...  re-delta 3
/// ```
///
/// Blank lines and `#` comments are ignored.
pub fn parse_derivation(text: &str) -> Result<Derivation, DerivationParseError> {
    let mut system = None;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let file_line = idx + 1;
        let err = |message: String| DerivationParseError {
            line: file_line,
            message,
        };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix("system:") {
            if system.is_some() {
                return Err(err("duplicate `system:` line".into()));
            }
            system = Some(name.trim().to_string());
            continue;
        }
        let (number, body) = content
            .split_once('.')
            .ok_or_else(|| err("expected `<n>. <formula>  <justification>`".into()))?;
        let index: usize = number
            .trim()
            .parse()
            .map_err(|_| err(format!("bad line number `{}`", number.trim())))?;
        let (formula, justification) = split_justification(body)
            .ok_or_else(|| err("missing justification (taut, axiom, mp, re-delta)".into()))?;
        let formula = parse(formula).map_err(|e| err(e.to_string()))?;
        let justification = parse_justification(justification).map_err(err)?;
        lines.push(Line {
            index,
            formula,
            justification,
        });
    }
    let system = system.ok_or(DerivationParseError {
        line: 1,
        message: "missing `system:` line".into(),
    })?;
    Ok(Derivation { system, lines })
}
