//! Frame enumeration, random generation and bounded countermodel search.
//!
//! # Canonical enumeration order
//!
//! Frames of size `n` have states `0..n`. A neighborhood collection is a bit
//! mask over the `2^n` subsets of `S` (bit `x` set iff subset `x` is a
//! member), and its candidates are taken in increasing mask order after
//! dropping those without the requested properties. A frame is a mixed-radix
//! number over those candidates with state 0 as the most significant digit.
//! Sizes are swept in increasing order.
//!
//! Class searches split the space by the first state's candidate and merge
//! results by position, so verdicts and frame counts do not depend on the
//! number of worker threads.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::proof::SchemaName;
use crate::semantics::{
    check_property, eval, truth_set, ClassVerdict, CompiledFormula, Falsifier, Frame, Model,
    Neighborhood, NeighborhoodTable, PropertySet, SemanticsError, StateSet,
};
use crate::syntax::{parse, Atom, Formula, Substitution};
use crate::transform::close_neighborhood;

pub const MAX_EXHAUSTIVE_SIZE: usize = 3;
pub const MAX_SAMPLE_SIZE: usize = 5;
pub const DEFAULT_SEED: u64 = 0x00C0_FFEE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every frame of size `1..=max_size`.
    Exhaustive,
    /// `count` frames of exactly `max_size` states: uniform neighborhoods,
    /// then closed under the requested properties.
    Sample { count: usize, seed: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sample { count, seed } => write!(f, "sample({count}, seed={seed})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error("{schema} has {needed} metavariables but only {given} atoms were supplied")]
    NotEnoughAtoms {
        schema: SchemaName,
        needed: usize,
        given: usize,
    },
    #[error("instantiation atoms must be distinct")]
    DuplicateAtoms,
}

impl SearchError {
    /// Whether the error is a size-bound violation.
    pub fn is_bound_exceeded(&self) -> bool {
        matches!(
            self,
            SearchError::Semantics(
                SemanticsError::BoundExceeded { .. } | SemanticsError::SampleBoundExceeded { .. }
            )
        )
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// All frames of one size whose neighborhoods satisfy a property set.
#[derive(Debug, Clone)]
pub struct FrameSpace {
    n: usize,
    choices: Vec<u64>,
}

impl FrameSpace {
    pub fn new(n: usize, props: PropertySet) -> Result<Self, SemanticsError> {
        if n == 0 {
            return Err(SemanticsError::EmptyBound);
        }
        if n > MAX_EXHAUSTIVE_SIZE {
            return Err(SemanticsError::BoundExceeded {
                requested: n,
                limit: MAX_EXHAUSTIVE_SIZE,
            });
        }
        let subsets = 1u32 << n;
        let choices = (0..1u64 << subsets)
            .filter(|&mask| props.holds_for(n, &mask_to_neighborhood(mask)))
            .collect();
        Ok(FrameSpace { n, choices })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of admissible neighborhood collections per state.
    pub fn choices_per_state(&self) -> usize {
        self.choices.len()
    }

    pub fn len(&self) -> u64 {
        (self.choices.len() as u64).pow(self.n as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    fn block_len(&self) -> u64 {
        (self.choices.len() as u64).pow(self.n as u32 - 1)
    }

    fn masks_at(&self, mut index: u64) -> Vec<u64> {
        let radix = self.choices.len() as u64;
        let mut masks = vec![0; self.n];
        for slot in masks.iter_mut().rev() {
            *slot = self.choices[(index % radix) as usize];
            index /= radix;
        }
        masks
    }

    pub fn frame_at(&self, index: u64) -> Frame {
        masks_to_frame(self.n, &self.masks_at(index))
    }

    pub fn iter(&self) -> impl Iterator<Item = Frame> + '_ {
        (0..self.len()).map(move |i| self.frame_at(i))
    }

    /// First index (in canonical order) for which `hit` returns a value.
    fn find_first<T: Send>(
        &self,
        hit: impl Fn(u64, &[u64]) -> Option<T> + Sync,
    ) -> Option<(u64, T)> {
        if self.is_empty() {
            return None;
        }
        let block = self.block_len();
        (0..self.choices.len() as u64)
            .into_par_iter()
            .find_map_first(|first| {
                (first * block..(first + 1) * block).find_map(|idx| {
                    let masks = self.masks_at(idx);
                    hit(idx, &masks).map(|t| (idx, t))
                })
            })
    }
}

fn mask_to_neighborhood(mask: u64) -> Neighborhood {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| StateSet(b as u32))
        .collect()
}

fn neighborhood_to_mask(nb: &Neighborhood) -> u64 {
    nb.iter().fold(0, |m, x| m | 1 << x.0)
}

fn masks_to_frame(_n: usize, masks: &[u64]) -> Frame {
    Frame::with_default_names(masks.iter().map(|&m| mask_to_neighborhood(m)).collect())
        .expect("enumerated frames are well formed")
}

/// Every frame on `n` states satisfying `props`, each exactly once, in
/// canonical order.
pub fn enumerate_frames(
    n: usize,
    props: PropertySet,
) -> Result<impl Iterator<Item = Frame>, SemanticsError> {
    let space = FrameSpace::new(n, props)?;
    Ok((0..space.len()).map(move |i| space.frame_at(i)))
}

// ---------------------------------------------------------------------------
// Sampling

fn sample_masks(n: usize, props: PropertySet, rng: &mut impl Rng) -> Vec<u64> {
    let subsets = 1u32 << n;
    let all = if subsets == 64 {
        u64::MAX
    } else {
        (1u64 << subsets) - 1
    };
    (0..n)
        .map(|_| {
            let raw = rng.gen::<u64>() & all;
            if props.is_empty() {
                raw
            } else {
                neighborhood_to_mask(&close_neighborhood(n, &mask_to_neighborhood(raw), props))
            }
        })
        .collect()
}

fn check_sample_size(n: usize) -> Result<(), SemanticsError> {
    if n == 0 {
        return Err(SemanticsError::EmptyBound);
    }
    if n > MAX_SAMPLE_SIZE {
        return Err(SemanticsError::SampleBoundExceeded {
            requested: n,
            limit: MAX_SAMPLE_SIZE,
        });
    }
    Ok(())
}

/// Random frame of `n` states: uniform neighborhood collections, each then
/// closed under `props`. The closure biases samples towards larger
/// collections.
pub fn random_frame(
    n: usize,
    props: PropertySet,
    rng: &mut impl Rng,
) -> Result<Frame, SemanticsError> {
    check_sample_size(n)?;
    Ok(masks_to_frame(n, &sample_masks(n, props, rng)))
}

/// `count` frames drawn with [`random_frame`] from a ChaCha8 stream seeded with `seed`.
pub fn sample_frames(
    n: usize,
    props: PropertySet,
    count: usize,
    seed: u64,
) -> Result<Vec<Frame>, SemanticsError> {
    check_sample_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| masks_to_frame(n, &sample_masks(n, props, &mut rng)))
        .collect())
}

/// Random model over `atoms` on a frame from [`random_frame`].
pub fn random_model(
    n: usize,
    props: PropertySet,
    atoms: &[Atom],
    rng: &mut impl Rng,
) -> Result<Model, SemanticsError> {
    let frame = random_frame(n, props, rng)?;
    let full = StateSet::full(n).0;
    let valuation = atoms
        .iter()
        .map(|a| (a.clone(), StateSet(rng.gen::<u32>() & full)))
        .collect();
    Model::new(frame, valuation)
}

/// Which modal operators a random formula may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modalities {
    Delta,
    Box,
    Both,
}

/// Random formula of modal depth at most `depth` over `atoms`.
pub fn random_formula(
    depth: usize,
    atoms: &[Atom],
    modalities: Modalities,
    rng: &mut impl Rng,
) -> Formula {
    random_formula_sized(depth, 3, atoms, modalities, rng)
}

fn random_formula_sized<R: Rng>(
    depth: usize,
    fuel: usize,
    atoms: &[Atom],
    modalities: Modalities,
    rng: &mut R,
) -> Formula {
    let modal = |rng: &mut R| {
        let inner = random_formula_sized(depth - 1, 3, atoms, modalities, rng);
        let use_box = match modalities {
            Modalities::Delta => false,
            Modalities::Box => true,
            Modalities::Both => rng.gen_bool(0.5),
        };
        if use_box {
            Formula::nec(inner)
        } else {
            Formula::delta(inner)
        }
    };
    if fuel == 0 {
        return if depth > 0 && rng.gen_bool(0.5) {
            modal(rng)
        } else {
            random_leaf(atoms, rng)
        };
    }
    let sub = |rng: &mut R| random_formula_sized(depth, fuel - 1, atoms, modalities, rng);
    match rng.gen_range(0..8) {
        0 => random_leaf(atoms, rng),
        1 => Formula::not(sub(rng)),
        2 => Formula::and(sub(rng), sub(rng)),
        3 => Formula::or(sub(rng), sub(rng)),
        4 => Formula::imp(sub(rng), sub(rng)),
        5 => Formula::iff(sub(rng), sub(rng)),
        _ if depth > 0 => modal(rng),
        _ => random_leaf(atoms, rng),
    }
}

fn random_leaf(atoms: &[Atom], rng: &mut impl Rng) -> Formula {
    match rng.gen_range(0..10) {
        0 => Formula::Top,
        1 => Formula::Bot,
        _ => Formula::Atom(atoms[rng.gen_range(0..atoms.len())].clone()),
    }
}

// ---------------------------------------------------------------------------
// Class search

/// Outcome of a bounded class check together with the number of frames
/// examined up to and including the countermodel (or all of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSearch {
    pub verdict: ClassVerdict,
    pub frames_examined: u64,
}

fn check_valuation_space(n: usize, f: &CompiledFormula) -> Result<(), SemanticsError> {
    let bits = n * f.atom_count();
    if bits > 32 {
        return Err(SemanticsError::TooManyValuations(format!("2^{bits}")));
    }
    Ok(())
}

fn falsifier_from(
    frame: Frame,
    compiled: &CompiledFormula,
    values: Vec<StateSet>,
    state: usize,
) -> Falsifier {
    let valuation = compiled.atoms().iter().cloned().zip(values).collect();
    Falsifier {
        model: Model::new(frame, valuation).expect("valuation within frame"),
        state,
    }
}

pub(crate) fn class_search(
    props: PropertySet,
    f: &Formula,
    max_size: usize,
    mode: Mode,
) -> Result<ClassSearch, SemanticsError> {
    if max_size == 0 {
        return Err(SemanticsError::EmptyBound);
    }
    let compiled = CompiledFormula::new(f)?;
    match mode {
        Mode::Exhaustive => {
            if max_size > MAX_EXHAUSTIVE_SIZE {
                return Err(SemanticsError::BoundExceeded {
                    requested: max_size,
                    limit: MAX_EXHAUSTIVE_SIZE,
                });
            }
            let mut examined = 0;
            for n in 1..=max_size {
                check_valuation_space(n, &compiled)?;
                let space = FrameSpace::new(n, props)?;
                let found = space.find_first(|_, masks| {
                    let table = NeighborhoodTable::from_masks(n, masks.to_vec());
                    compiled
                        .first_falsifier(&table)
                        .expect("valuation space checked")
                });
                if let Some((idx, (values, state))) = found {
                    let frame = space.frame_at(idx);
                    return Ok(ClassSearch {
                        verdict: ClassVerdict::Countermodel(falsifier_from(
                            frame, &compiled, values, state,
                        )),
                        frames_examined: examined + idx + 1,
                    });
                }
                examined += space.len();
            }
            Ok(ClassSearch {
                verdict: ClassVerdict::ValidUpToBound,
                frames_examined: examined,
            })
        }
        Mode::Sample { count, seed } => {
            check_sample_size(max_size)?;
            check_valuation_space(max_size, &compiled)?;
            let n = max_size;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<Vec<u64>> = (0..count)
                .map(|_| sample_masks(n, props, &mut rng))
                .collect();
            let found = samples.par_iter().enumerate().find_map_first(|(i, masks)| {
                let table = NeighborhoodTable::from_masks(n, masks.clone());
                compiled
                    .first_falsifier(&table)
                    .expect("valuation space checked")
                    .map(|hit| (i, hit))
            });
            Ok(match found {
                Some((i, (values, state))) => ClassSearch {
                    verdict: ClassVerdict::Countermodel(falsifier_from(
                        masks_to_frame(n, &samples[i]),
                        &compiled,
                        values,
                        state,
                    )),
                    frames_examined: i as u64 + 1,
                },
                None => ClassSearch {
                    verdict: ClassVerdict::ValidUpToBound,
                    frames_examined: count as u64,
                },
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    /// Schema name or formula text.
    pub target: String,
    /// The instance that was checked.
    pub formula: Formula,
    pub substitution: Option<Substitution>,
    pub props: PropertySet,
    pub max_size: usize,
    pub mode: Mode,
    pub verdict: ClassVerdict,
    pub frames_examined: u64,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn witness(&self) -> Option<&Falsifier> {
        self.verdict.countermodel()
    }

    /// Re-checks a witness through the reference evaluator and property
    /// checker. True when there is no witness.
    pub fn witness_verifies(&self) -> bool {
        match self.witness() {
            None => true,
            Some(w) => {
                check_property(w.model.frame(), self.props)
                    && eval(&w.model, w.state_name(), &self.formula) == Ok(false)
            }
        }
    }

    /// `item=<target> verdict=<pass|fail> frames=<k> elapsed_ms=<t>`, where
    /// `pass` means no countermodel. Without `timing` the elapsed field is
    /// dropped so that reruns are byte-identical.
    pub fn machine_line(&self, timing: bool) -> String {
        let verdict = if self.verdict.is_valid_up_to_bound() {
            "pass"
        } else {
            "fail"
        };
        machine_line(
            &self.target,
            verdict,
            self.frames_examined,
            timing.then_some(self.elapsed),
        )
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("target:   {}\n", self.target);
        out.push_str(&format!("instance: {}\n", self.formula));
        if let Some(s) = self.substitution.as_ref().filter(|s| !s.is_empty()) {
            out.push_str(&format!("subst:    {s}\n"));
        }
        out.push_str(&format!(
            "class:    {}  bound: {} states  mode: {}\n",
            self.props, self.max_size, self.mode
        ));
        out.push_str(&format!("frames:   {}\n", self.frames_examined));
        match self.witness() {
            None => out.push_str(&format!(
                "verdict:  valid up to bound (no countermodel among frames of at most {} states; not a proof of validity)\n",
                self.max_size
            )),
            Some(w) => {
                out.push_str(&format!("verdict:  countermodel, falsified at state {}\n", w.state_name()));
                for line in crate::model_format::write_model(&w.model).lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        out
    }
}

pub(crate) fn machine_line(
    item: &str,
    verdict: &str,
    frames: u64,
    elapsed: Option<Duration>,
) -> String {
    let mut line = format!("item={item} verdict={verdict} frames={frames}");
    if let Some(e) = elapsed {
        line.push_str(&format!(" elapsed_ms={}", e.as_millis()));
    }
    line
}

/// Searches the class for a countermodel to an instance of `schema` whose
/// metavariables φ, ψ, χ are replaced by `atoms` in order.
pub fn find_countermodel(
    schema: SchemaName,
    atoms: &[Atom],
    props: PropertySet,
    max_size: usize,
    mode: Mode,
) -> Result<SearchReport, SearchError> {
    let schema_def = schema.schema();
    let needed = schema_def.pattern.metavars().len();
    if atoms.len() < needed {
        return Err(SearchError::NotEnoughAtoms {
            schema,
            needed,
            given: atoms.len(),
        });
    }
    let distinct: std::collections::BTreeSet<_> = atoms.iter().collect();
    if distinct.len() != atoms.len() {
        return Err(SearchError::DuplicateAtoms);
    }
    let atom_formulas: Vec<Formula> = atoms.iter().cloned().map(Formula::Atom).collect();
    let (instance, subst) = schema_def
        .instance_over(&atom_formulas)
        .expect("enough atoms for every metavariable");
    let mut report = search_formula(&instance, props, max_size, mode)?;
    report.target = schema.to_string();
    report.substitution = Some(subst);
    Ok(report)
}

/// Default instantiation atoms p, q, r.
pub fn default_atoms() -> Vec<Atom> {
    ["p", "q", "r"]
        .iter()
        .map(|a| Atom::new(*a).unwrap())
        .collect()
}

/// Like [`find_countermodel`] for an arbitrary formula.
pub fn search_formula(
    f: &Formula,
    props: PropertySet,
    max_size: usize,
    mode: Mode,
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    let outcome = class_search(props, f, max_size, mode)?;
    Ok(SearchReport {
        target: f.to_string(),
        formula: f.clone(),
        substitution: None,
        props,
        max_size,
        mode,
        verdict: outcome.verdict,
        frames_examined: outcome.frames_examined,
        elapsed: start.elapsed(),
    })
}

// ---------------------------------------------------------------------------
// Correspondence

/// A single frame property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    M,
    C,
    N,
    Z,
}

impl Property {
    pub const ALL: [Property; 4] = [Property::M, Property::C, Property::N, Property::Z];

    pub fn as_set(self) -> PropertySet {
        let mut p = PropertySet::NONE;
        match self {
            Property::M => p.m = true,
            Property::C => p.c = true,
            Property::N => p.n = true,
            Property::Z => p.z = true,
        }
        p
    }

    /// The L(□) formula defining this property.
    pub fn defining_formula(self) -> Formula {
        let text = match self {
            Property::M => "B(p & q) -> Bp & Bq",
            Property::C => "Bp & Bq -> B(p & q)",
            Property::N => "BT",
            Property::Z => "Bp -> B~p",
        };
        parse(text).expect("defining formula parses")
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_set())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub property: Property,
    pub formula: Formula,
    pub frames_examined: u64,
    /// Frames on which the property holds (shows the check is not vacuous).
    pub frames_with_property: u64,
    /// First frame where property and validity disagree.
    pub discrepancy: Option<Frame>,
    pub elapsed: Duration,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Checks `check_property ⟺ is_valid_in_frame` frame by frame. Exhaustive
/// mode sweeps all frames of size `1..=max_size`; sampled mode draws frames of
/// `max_size` states, alternating plain uniform frames with frames closed
/// under the property.
pub fn correspondence_check(
    property: Property,
    formula: &Formula,
    max_size: usize,
    mode: Mode,
) -> Result<CorrespondenceReport, SemanticsError> {
    let start = Instant::now();
    let compiled = CompiledFormula::new(formula)?;
    let props = property.as_set();
    let agrees = |n: usize, masks: &[u64]| -> (bool, bool) {
        let has = masks
            .iter()
            .all(|&m| props.holds_for(n, &mask_to_neighborhood(m)));
        let table = NeighborhoodTable::from_masks(n, masks.to_vec());
        let valid = compiled
            .first_falsifier(&table)
            .expect("valuation space checked")
            .is_none();
        (has == valid, has)
    };
    if max_size == 0 {
        return Err(SemanticsError::EmptyBound);
    }
    let mut examined = 0;
    let mut with_property = 0;
    let mut discrepancy = None;
    match mode {
        Mode::Exhaustive => {
            if max_size > MAX_EXHAUSTIVE_SIZE {
                return Err(SemanticsError::BoundExceeded {
                    requested: max_size,
                    limit: MAX_EXHAUSTIVE_SIZE,
                });
            }
            for n in 1..=max_size {
                check_valuation_space(n, &compiled)?;
                let space = FrameSpace::new(n, PropertySet::NONE)?;
                let block = space.block_len();
                let per_block: Vec<(u64, u64, Option<u64>)> = (0..space.choices.len() as u64)
                    .into_par_iter()
                    .map(|first| {
                        let mut count = 0;
                        let mut has = 0;
                        for idx in first * block..(first + 1) * block {
                            let (ok, h) = agrees(n, &space.masks_at(idx));
                            count += 1;
                            has += h as u64;
                            if !ok {
                                return (count, has, Some(idx));
                            }
                        }
                        (count, has, None)
                    })
                    .collect();
                for (count, has, bad) in per_block {
                    examined += count;
                    with_property += has;
                    if let Some(idx) = bad {
                        discrepancy = Some(space.frame_at(idx));
                        break;
                    }
                }
                if discrepancy.is_some() {
                    break;
                }
            }
        }
        Mode::Sample { count, seed } => {
            check_sample_size(max_size)?;
            check_valuation_space(max_size, &compiled)?;
            let n = max_size;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<Vec<u64>> = (0..count)
                .map(|i| {
                    let p = if i % 2 == 0 { PropertySet::NONE } else { props };
                    sample_masks(n, p, &mut rng)
                })
                .collect();
            let results: Vec<(bool, bool)> = samples.par_iter().map(|m| agrees(n, m)).collect();
            for (i, (ok, has)) in results.into_iter().enumerate() {
                examined += 1;
                with_property += has as u64;
                if !ok {
                    discrepancy = Some(masks_to_frame(n, &samples[i]));
                    break;
                }
            }
        }
    }
    Ok(CorrespondenceReport {
        property,
        formula: formula.clone(),
        frames_examined: examined,
        frames_with_property: with_property,
        discrepancy,
        elapsed: start.elapsed(),
    })
}

/// Frame-by-frame comparison of two formulas' validity over every frame of
/// size `1..=max_size` in the class. Returns the number of frames examined
/// and the first frame validating exactly one of them.
pub fn validity_equivalence(
    f: &Formula,
    g: &Formula,
    props: PropertySet,
    max_size: usize,
) -> Result<(u64, Option<Frame>), SemanticsError> {
    let cf = CompiledFormula::new(f)?;
    let cg = CompiledFormula::new(g)?;
    if max_size > MAX_EXHAUSTIVE_SIZE {
        return Err(SemanticsError::BoundExceeded {
            requested: max_size,
            limit: MAX_EXHAUSTIVE_SIZE,
        });
    }
    let mut examined = 0;
    for n in 1..=max_size {
        check_valuation_space(n, &cf)?;
        check_valuation_space(n, &cg)?;
        let space = FrameSpace::new(n, props)?;
        let found = space.find_first(|_, masks| {
            let table = NeighborhoodTable::from_masks(n, masks.to_vec());
            let vf = cf.first_falsifier(&table).expect("checked").is_none();
            let vg = cg.first_falsifier(&table).expect("checked").is_none();
            (vf != vg).then_some(())
        });
        if let Some((idx, ())) = found {
            return Ok((examined + idx + 1, Some(space.frame_at(idx))));
        }
        examined += space.len();
    }
    Ok((examined, None))
}

/// Checks that truth sets of `Δφ` and `□φ` coincide in `model`; used on
/// (z)-models.
pub fn box_delta_agree(model: &Model, f: &Formula) -> bool {
    truth_set(model, &Formula::delta(f.clone())) == truth_set(model, &Formula::nec(f.clone()))
}
