//! Finite neighborhood frames and models.
//!
//! A frame is a finite set of states `0..n` together with a neighborhood
//! collection `N(s)` for every state. Subsets of states are bit sets
//! ([`StateSet`]), so frames have at most [`MAX_STATES`] states.
//!
//! Truth clauses for the modal operators:
//!
//! * `M, s ⊨ Δφ` iff `φ^M ∈ N(s)` or `S∖φ^M ∈ N(s)`
//! * `M, s ⊨ □φ` iff `φ^M ∈ N(s)`

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::search::{self, Mode};
use crate::syntax::{Atom, Formula};

pub const MAX_STATES: usize = 30;

/// A subset of the states of a frame, bit `i` standing for state `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StateSet(pub u32);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    /// All states of an `n`-state frame.
    pub fn full(n: usize) -> StateSet {
        debug_assert!(n <= MAX_STATES);
        StateSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> StateSet {
        StateSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: StateSet) -> StateSet {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> StateSet {
        StateSet(self.0 & other.0)
    }

    /// Complement relative to an `n`-state universe.
    pub fn complement(self, n: usize) -> StateSet {
        StateSet(!self.0 & StateSet::full(n).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

pub type Neighborhood = BTreeSet<StateSet>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("a frame needs between 1 and {MAX_STATES} states, got {0}")]
    StateCount(usize),
    #[error("duplicate state name `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("subset {0:#b} is not contained in the state set")]
    SubsetOutOfRange(u32),
    #[error("expected {expected} neighborhood collections, got {got}")]
    NeighborhoodCount { expected: usize, got: usize },
    #[error("formula `{0}` contains schema metavariables")]
    Metavariables(Formula),
    #[error("{0} valuations are too many to enumerate")]
    TooManyValuations(String),
    #[error(
        "exhaustive search is limited to frames of at most {limit} states, asked for {requested}"
    )]
    BoundExceeded { requested: usize, limit: usize },
    #[error("size bound must be at least 1")]
    EmptyBound,
    #[error("sampling is limited to frames of at most {limit} states, asked for {requested}")]
    SampleBoundExceeded { requested: usize, limit: usize },
}

/// A finite neighborhood frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    states: Vec<String>,
    neighborhoods: Vec<Neighborhood>,
}

impl Frame {
    pub fn new(
        states: Vec<String>,
        neighborhoods: Vec<Neighborhood>,
    ) -> Result<Self, SemanticsError> {
        let n = states.len();
        if n == 0 || n > MAX_STATES {
            return Err(SemanticsError::StateCount(n));
        }
        let mut seen = BTreeSet::new();
        for s in &states {
            if !seen.insert(s.as_str()) {
                return Err(SemanticsError::DuplicateState(s.clone()));
            }
        }
        if neighborhoods.len() != n {
            return Err(SemanticsError::NeighborhoodCount {
                expected: n,
                got: neighborhoods.len(),
            });
        }
        let full = StateSet::full(n);
        for x in neighborhoods.iter().flatten() {
            if !x.is_subset(full) {
                return Err(SemanticsError::SubsetOutOfRange(x.0));
            }
        }
        Ok(Frame {
            states,
            neighborhoods,
        })
    }

    /// Frame on states `s0..s{n-1}`.
    pub fn with_default_names(neighborhoods: Vec<Neighborhood>) -> Result<Self, SemanticsError> {
        let states = (0..neighborhoods.len()).map(|i| format!("s{i}")).collect();
        Frame::new(states, neighborhoods)
    }

    pub fn size(&self) -> usize {
        self.states.len()
    }

    pub fn universe(&self) -> StateSet {
        StateSet::full(self.size())
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Result<usize, SemanticsError> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| SemanticsError::UnknownState(name.to_string()))
    }

    pub fn state_name(&self, i: usize) -> &str {
        &self.states[i]
    }

    pub fn neighborhood(&self, s: usize) -> &Neighborhood {
        &self.neighborhoods[s]
    }

    pub fn neighborhoods(&self) -> &[Neighborhood] {
        &self.neighborhoods
    }

    /// Same states, new neighborhoods. Subsets are not re-validated.
    pub(crate) fn with_neighborhoods(&self, neighborhoods: Vec<Neighborhood>) -> Frame {
        debug_assert_eq!(neighborhoods.len(), self.size());
        Frame {
            states: self.states.clone(),
            neighborhoods,
        }
    }

    /// Renders a subset as `{s t}` using this frame's state names.
    pub fn format_set(&self, x: StateSet) -> String {
        let names: Vec<&str> = x.iter().map(|i| self.state_name(i)).collect();
        format!("{{{}}}", names.join(" "))
    }

    pub fn set_of(&self, names: &[&str]) -> Result<StateSet, SemanticsError> {
        names.iter().try_fold(StateSet::EMPTY, |acc, n| {
            Ok(acc.union(StateSet::singleton(self.state_index(n)?)))
        })
    }
}

/// A frame with a valuation. Atoms missing from the valuation denote ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    frame: Frame,
    valuation: BTreeMap<Atom, StateSet>,
}

impl Model {
    pub fn new(frame: Frame, valuation: BTreeMap<Atom, StateSet>) -> Result<Self, SemanticsError> {
        let full = frame.universe();
        for x in valuation.values() {
            if !x.is_subset(full) {
                return Err(SemanticsError::SubsetOutOfRange(x.0));
            }
        }
        Ok(Model { frame, valuation })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn valuation(&self) -> &BTreeMap<Atom, StateSet> {
        &self.valuation
    }

    pub fn value(&self, atom: &Atom) -> StateSet {
        self.valuation.get(atom).copied().unwrap_or_default()
    }

    pub(crate) fn with_frame(&self, frame: Frame) -> Model {
        Model {
            frame,
            valuation: self.valuation.clone(),
        }
    }
}

/// Flags selecting a frame class. The empty set is the class of all frames.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PropertySet {
    /// supplemented (closed under supersets)
    pub m: bool,
    /// closed under binary intersections
    pub c: bool,
    /// contains the unit
    pub n: bool,
    /// closed under complements
    pub z: bool,
}

impl PropertySet {
    pub const NONE: PropertySet = PropertySet {
        m: false,
        c: false,
        n: false,
        z: false,
    };

    /// Parses letters such as `"mc"` or `"cnz"`; `""` and `"all"` give the empty set.
    pub fn parse(letters: &str) -> Option<Self> {
        let mut p = PropertySet::default();
        if letters == "all" {
            return Some(p);
        }
        for ch in letters.chars() {
            let flag = match ch {
                'm' => &mut p.m,
                'c' => &mut p.c,
                'n' => &mut p.n,
                'z' => &mut p.z,
                _ => return None,
            };
            *flag = true;
        }
        Some(p)
    }

    pub fn is_empty(self) -> bool {
        self == PropertySet::NONE
    }

    pub fn union(self, other: PropertySet) -> PropertySet {
        PropertySet {
            m: self.m || other.m,
            c: self.c || other.c,
            n: self.n || other.n,
            z: self.z || other.z,
        }
    }

    /// True when every flag of `self` is also set in `other`.
    pub fn is_subset(self, other: PropertySet) -> bool {
        (!self.m || other.m) && (!self.c || other.c) && (!self.n || other.n) && (!self.z || other.z)
    }

    /// All sixteen flag combinations.
    pub fn all_combinations() -> impl Iterator<Item = PropertySet> {
        (0u8..16).map(|b| PropertySet {
            m: b & 1 != 0,
            c: b & 2 != 0,
            n: b & 4 != 0,
            z: b & 8 != 0,
        })
    }

    /// Whether a single neighborhood collection over an `n`-state universe
    /// has every flagged property.
    pub fn holds_for(self, n: usize, nbhd: &Neighborhood) -> bool {
        let full = StateSet::full(n);
        if self.n && !nbhd.contains(&full) {
            return false;
        }
        if self.z && !nbhd.iter().all(|x| nbhd.contains(&x.complement(n))) {
            return false;
        }
        if self.c
            && !nbhd
                .iter()
                .all(|x| nbhd.iter().all(|y| nbhd.contains(&x.intersection(*y))))
        {
            return false;
        }
        if self.m {
            // Closing under single-state additions suffices.
            for x in nbhd {
                for i in 0..n {
                    if !nbhd.contains(&x.union(StateSet::singleton(i))) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for PropertySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("all");
        }
        for (flag, ch) in [(self.m, 'm'), (self.c, 'c'), (self.n, 'n'), (self.z, 'z')] {
            if flag {
                write!(f, "{ch}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Evaluation

/// The truth set `φ^M`.
pub fn truth_set(model: &Model, f: &Formula) -> StateSet {
    let frame = model.frame();
    let n = frame.size();
    match f {
        Formula::Atom(a) => model.value(a),
        // Metavariables behave like atoms spelled the same way, which are never valued.
        Formula::Meta(_) => StateSet::EMPTY,
        Formula::Top => frame.universe(),
        Formula::Bot => StateSet::EMPTY,
        Formula::Not(a) => truth_set(model, a).complement(n),
        Formula::And(a, b) => truth_set(model, a).intersection(truth_set(model, b)),
        Formula::Or(a, b) => truth_set(model, a).union(truth_set(model, b)),
        Formula::Imp(a, b) => truth_set(model, a).complement(n).union(truth_set(model, b)),
        Formula::Iff(a, b) => {
            let (x, y) = (truth_set(model, a), truth_set(model, b));
            StateSet(!(x.0 ^ y.0)).intersection(frame.universe())
        }
        Formula::Delta(a) => {
            let x = truth_set(model, a);
            let cx = x.complement(n);
            collect_states(n, |s| {
                let nb = frame.neighborhood(s);
                nb.contains(&x) || nb.contains(&cx)
            })
        }
        Formula::Box(a) => {
            let x = truth_set(model, a);
            collect_states(n, |s| frame.neighborhood(s).contains(&x))
        }
    }
}

fn collect_states(n: usize, pred: impl Fn(usize) -> bool) -> StateSet {
    (0..n)
        .filter(|&s| pred(s))
        .fold(StateSet::EMPTY, |acc, s| acc.union(StateSet::singleton(s)))
}

/// Truth of `f` at the named state.
pub fn eval(model: &Model, state: &str, f: &Formula) -> Result<bool, SemanticsError> {
    let s = model.frame().state_index(state)?;
    Ok(truth_set(model, f).contains(s))
}

/// Whether every neighborhood collection of `frame` has every flagged property.
pub fn check_property(frame: &Frame, props: PropertySet) -> bool {
    frame
        .neighborhoods()
        .iter()
        .all(|nb| props.holds_for(frame.size(), nb))
}

/// A falsifying valuation and state for a formula on a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsifier {
    pub model: Model,
    pub state: usize,
}

impl Falsifier {
    pub fn state_name(&self) -> &str {
        self.model.frame().state_name(self.state)
    }
}

/// `F ⊨ φ`: true at every state under every valuation of the atoms of `f`.
pub fn is_valid_in_frame(frame: &Frame, f: &Formula) -> Result<bool, SemanticsError> {
    Ok(find_falsifier(frame, f)?.is_none())
}

/// First falsifying valuation in enumeration order, if any. Valuations are
/// enumerated as a mixed-radix counter over the atoms of `f` in name order,
/// the last atom varying fastest.
pub fn find_falsifier(frame: &Frame, f: &Formula) -> Result<Option<Falsifier>, SemanticsError> {
    let compiled = CompiledFormula::new(f)?;
    let table = NeighborhoodTable::new(frame);
    let found = compiled.first_falsifier(&table)?;
    Ok(found.map(|(values, state)| {
        let valuation = compiled.atoms.iter().cloned().zip(values).collect();
        Falsifier {
            model: Model {
                frame: frame.clone(),
                valuation,
            },
            state,
        }
    }))
}

/// Result of a bounded search over a frame class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassVerdict {
    /// No countermodel among the examined frames. Never a claim of validity
    /// on the whole class.
    ValidUpToBound,
    Countermodel(Falsifier),
}

impl ClassVerdict {
    pub fn is_valid_up_to_bound(&self) -> bool {
        matches!(self, ClassVerdict::ValidUpToBound)
    }

    pub fn countermodel(&self) -> Option<&Falsifier> {
        match self {
            ClassVerdict::Countermodel(w) => Some(w),
            ClassVerdict::ValidUpToBound => None,
        }
    }
}

/// Bounded check of `K ⊨ φ` for the class `K` selected by `props`.
///
/// Exhaustive mode sweeps every frame of size `1..=max_size` (at most 3) in
/// canonical order; sampled mode draws frames of exactly `max_size` states.
pub fn is_valid_on_class(
    props: PropertySet,
    f: &Formula,
    max_size: usize,
    mode: Mode,
) -> Result<ClassVerdict, SemanticsError> {
    Ok(search::class_search(props, f, max_size, mode)?.verdict)
}

// ---------------------------------------------------------------------------
// Fast path used by validity sweeps

/// Dense or sparse membership lookup for neighborhoods.
pub(crate) enum NeighborhoodTable<'a> {
    /// Bit `x` of word `s` is set iff subset `x` is in `N(s)`; frames of up to 6 states.
    Dense {
        n: usize,
        words: Vec<u64>,
    },
    Sparse(&'a Frame),
}

impl<'a> NeighborhoodTable<'a> {
    pub(crate) fn new(frame: &'a Frame) -> Self {
        let n = frame.size();
        if n <= 6 {
            let words = frame
                .neighborhoods()
                .iter()
                .map(|nb| nb.iter().fold(0u64, |w, x| w | 1 << x.0))
                .collect();
            NeighborhoodTable::Dense { n, words }
        } else {
            NeighborhoodTable::Sparse(frame)
        }
    }

    pub(crate) fn from_masks(n: usize, words: Vec<u64>) -> Self {
        debug_assert!(n <= 6);
        NeighborhoodTable::Dense { n, words }
    }

    fn size(&self) -> usize {
        match self {
            NeighborhoodTable::Dense { n, .. } => *n,
            NeighborhoodTable::Sparse(fr) => fr.size(),
        }
    }

    #[inline]
    fn contains(&self, s: usize, x: StateSet) -> bool {
        match self {
            NeighborhoodTable::Dense { words, .. } => words[s] >> x.0 & 1 == 1,
            NeighborhoodTable::Sparse(fr) => fr.neighborhood(s).contains(&x),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Atom(usize),
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Delta,
    Box,
}

/// A formula flattened to postfix with atoms replaced by indices.
pub(crate) struct CompiledFormula {
    atoms: Vec<Atom>,
    ops: Vec<Op>,
}

impl CompiledFormula {
    pub(crate) fn new(f: &Formula) -> Result<Self, SemanticsError> {
        if f.has_metavars() {
            return Err(SemanticsError::Metavariables(f.clone()));
        }
        let atoms: Vec<Atom> = f.atoms().into_iter().collect();
        let mut ops = Vec::new();
        Self::emit(f, &atoms, &mut ops);
        Ok(CompiledFormula { atoms, ops })
    }

    fn emit(f: &Formula, atoms: &[Atom], ops: &mut Vec<Op>) {
        match f {
            Formula::Atom(a) => ops.push(Op::Atom(atoms.binary_search(a).expect("collected atom"))),
            Formula::Meta(_) => unreachable!("rejected in CompiledFormula::new"),
            Formula::Top => ops.push(Op::Top),
            Formula::Bot => ops.push(Op::Bot),
            Formula::Not(a) | Formula::Delta(a) | Formula::Box(a) => {
                Self::emit(a, atoms, ops);
                ops.push(match f {
                    Formula::Not(_) => Op::Not,
                    Formula::Delta(_) => Op::Delta,
                    _ => Op::Box,
                });
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                Self::emit(a, atoms, ops);
                Self::emit(b, atoms, ops);
                ops.push(match f {
                    Formula::And(..) => Op::And,
                    Formula::Or(..) => Op::Or,
                    Formula::Imp(..) => Op::Imp,
                    _ => Op::Iff,
                });
            }
        }
    }

    pub(crate) fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub(crate) fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub(crate) fn truth_set(
        &self,
        table: &NeighborhoodTable<'_>,
        values: &[StateSet],
        stack: &mut Vec<u32>,
    ) -> StateSet {
        let n = table.size();
        let full = StateSet::full(n).0;
        stack.clear();
        for op in &self.ops {
            let v = match *op {
                Op::Atom(i) => values[i].0,
                Op::Top => full,
                Op::Bot => 0,
                Op::Not => !stack.pop().unwrap() & full,
                Op::Delta | Op::Box => {
                    let x = StateSet(stack.pop().unwrap());
                    let cx = x.complement(n);
                    let delta = matches!(op, Op::Delta);
                    let mut out = 0;
                    for s in 0..n {
                        if table.contains(s, x) || (delta && table.contains(s, cx)) {
                            out |= 1 << s;
                        }
                    }
                    out
                }
                binary => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    match binary {
                        Op::And => a & b,
                        Op::Or => a | b,
                        Op::Imp => (!a | b) & full,
                        Op::Iff => !(a ^ b) & full,
                        _ => unreachable!(),
                    }
                }
            };
            stack.push(v);
        }
        StateSet(stack.pop().expect("non-empty program"))
    }

    /// First valuation (as values per atom) and state falsifying the formula.
    pub(crate) fn first_falsifier(
        &self,
        table: &NeighborhoodTable<'_>,
    ) -> Result<Option<(Vec<StateSet>, usize)>, SemanticsError> {
        let n = table.size();
        let k = self.atom_count();
        let bits = n * k;
        if bits > 32 {
            return Err(SemanticsError::TooManyValuations(format!("2^{bits}")));
        }
        let full = StateSet::full(n);
        let radix = 1u64 << n;
        let mut values = vec![StateSet::EMPTY; k];
        let mut stack = Vec::with_capacity(self.ops.len());
        for code in 0..1u64 << bits {
            let mut rest = code;
            for v in values.iter_mut().rev() {
                *v = StateSet((rest % radix) as u32);
                rest /= radix;
            }
            let t = self.truth_set(table, &values, &mut stack);
            if t != full {
                let state = full
                    .intersection(StateSet(!t.0))
                    .iter()
                    .next()
                    .expect("missing state");
                return Ok(Some((values, state)));
            }
        }
        Ok(None)
    }
}
