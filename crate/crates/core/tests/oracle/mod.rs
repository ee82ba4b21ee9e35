//! Brute-force reference implementations used only by tests.
//!
//! Frames are plain vectors of subset masks and every check is a direct
//! transcription of the definitions, with no shared code beyond the AST.

#![allow(dead_code)]

use std::collections::BTreeMap;

use contingent::syntax::Formula;

/// `nb[s]` lists the members of N(s) as bit masks over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFrame {
    pub n: usize,
    pub nb: Vec<Vec<u32>>,
}

impl RawFrame {
    pub fn new(n: usize, mut nb: Vec<Vec<u32>>) -> Self {
        for col in &mut nb {
            col.sort_unstable();
            col.dedup();
        }
        RawFrame { n, nb }
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn has(&self, s: usize, x: u32) -> bool {
        self.nb[s].contains(&x)
    }

    pub fn from_frame(fr: &contingent::Frame) -> Self {
        RawFrame::new(
            fr.size(),
            fr.neighborhoods()
                .iter()
                .map(|col| col.iter().map(|x| x.0).collect())
                .collect(),
        )
    }
}

pub type Val = BTreeMap<String, u32>;

pub fn truth(fr: &RawFrame, val: &Val, f: &Formula) -> u32 {
    let all = fr.full();
    match f {
        Formula::Atom(a) => val.get(a.name()).copied().unwrap_or(0),
        Formula::Meta(_) => panic!("metavariable"),
        Formula::Top => all,
        Formula::Bot => 0,
        Formula::Not(a) => all & !truth(fr, val, a),
        Formula::And(a, b) => truth(fr, val, a) & truth(fr, val, b),
        Formula::Or(a, b) => truth(fr, val, a) | truth(fr, val, b),
        Formula::Imp(a, b) => (all & !truth(fr, val, a)) | truth(fr, val, b),
        Formula::Iff(a, b) => all & !(truth(fr, val, a) ^ truth(fr, val, b)),
        Formula::Delta(a) => {
            let x = truth(fr, val, a);
            (0..fr.n)
                .filter(|&s| fr.has(s, x) || fr.has(s, all & !x))
                .fold(0, |acc, s| acc | 1 << s)
        }
        Formula::Box(a) => {
            let x = truth(fr, val, a);
            (0..fr.n)
                .filter(|&s| fr.has(s, x))
                .fold(0, |acc, s| acc | 1 << s)
        }
    }
}

pub fn holds_at(fr: &RawFrame, val: &Val, f: &Formula, s: usize) -> bool {
    truth(fr, val, f) >> s & 1 == 1
}

fn atom_names(f: &Formula) -> Vec<String> {
    f.atoms()
        .into_iter()
        .map(|a| a.name().to_string())
        .collect()
}

/// Every valuation of the formula's atoms.
pub fn valuations(n: usize, atoms: &[String]) -> Vec<Val> {
    let per = 1u64 << n;
    let total = per.pow(atoms.len() as u32);
    (0..total)
        .map(|mut code| {
            atoms
                .iter()
                .map(|a| {
                    let v = (code % per) as u32;
                    code /= per;
                    (a.clone(), v)
                })
                .collect()
        })
        .collect()
}

pub fn valid_in_frame(fr: &RawFrame, f: &Formula) -> bool {
    valuations(fr.n, &atom_names(f))
        .iter()
        .all(|v| truth(fr, v, f) == fr.full())
}

/// Property letters from `mcnz`.
pub fn has_props(fr: &RawFrame, letters: &str) -> bool {
    let all = fr.full();
    let subsets: Vec<u32> = (0..=all).collect();
    (0..fr.n).all(|s| {
        letters.chars().all(|c| match c {
            'm' => fr.nb[s].iter().all(|&x| {
                subsets
                    .iter()
                    .filter(|&&y| (x & y) == x)
                    .all(|&y| fr.has(s, y))
            }),
            'c' => fr.nb[s]
                .iter()
                .all(|&x| fr.nb[s].iter().all(|&y| fr.has(s, x & y))),
            'n' => fr.has(s, all),
            'z' => fr.nb[s].iter().all(|&x| fr.has(s, all & !x)),
            _ => panic!("unknown property letter {c}"),
        })
    })
}

/// Every frame on `n` states, without filtering.
pub fn all_frames(n: usize) -> Vec<RawFrame> {
    let subsets = 1u32 << n;
    let per_state = 1u64 << subsets;
    let total = per_state.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let nb = (0..n)
                .map(|_| {
                    let mask = code % per_state;
                    code /= per_state;
                    (0..subsets).filter(|x| mask >> x & 1 == 1).collect()
                })
                .collect();
            RawFrame::new(n, nb)
        })
        .collect()
}

/// Frames of size 1 and 2 with the given properties.
pub fn small_frames(letters: &str) -> Vec<RawFrame> {
    (1..=2)
        .flat_map(all_frames)
        .filter(|fr| has_props(fr, letters))
        .collect()
}

pub fn supplement(fr: &RawFrame) -> RawFrame {
    let all = fr.full();
    RawFrame::new(
        fr.n,
        fr.nb
            .iter()
            .map(|col| {
                (0..=all)
                    .filter(|&y| col.iter().any(|&x| x & !y == 0))
                    .collect()
            })
            .collect(),
    )
}

pub fn complement(fr: &RawFrame) -> RawFrame {
    let all = fr.full();
    RawFrame::new(
        fr.n,
        fr.nb
            .iter()
            .map(|col| {
                (0..=all)
                    .filter(|&y| col.contains(&y) || col.contains(&(all & !y)))
                    .collect()
            })
            .collect(),
    )
}
