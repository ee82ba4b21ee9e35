//! Frame and model transforms.
//!
//! Frame-level transforms are lifted to models pointwise: the valuation is
//! never touched.

use thiserror::Error;

use crate::semantics::{Frame, Model, Neighborhood, PropertySet, StateSet};
use crate::syntax::Formula;

/// Largest frame `close_under` accepts: `P(S)` then has at most 32 members.
pub const MAX_CLOSURE_STATES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("closure is limited to frames of at most {MAX_CLOSURE_STATES} states, got {0}")]
    FrameTooLarge(usize),
    #[error("the star translation applies to L(Δ) only, but `{0}` contains □")]
    ContainsBox(Formula),
}

fn superset_closure(n: usize, nb: &Neighborhood) -> Neighborhood {
    let full = StateSet::full(n);
    let mut out = Neighborhood::new();
    for &y in nb {
        // every X with y ⊆ X ⊆ S: enumerate subsets of the complement of y
        let free = full.0 & !y.0;
        let mut sub = free;
        loop {
            out.insert(StateSet(y.0 | sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out
}

fn complement_closure(n: usize, nb: &Neighborhood) -> Neighborhood {
    nb.iter().flat_map(|&x| [x, x.complement(n)]).collect()
}

fn intersection_closure(nb: &Neighborhood) -> Neighborhood {
    let mut out = nb.clone();
    loop {
        let extra: Vec<StateSet> = out
            .iter()
            .flat_map(|x| out.iter().map(move |y| x.intersection(*y)))
            .filter(|z| !out.contains(z))
            .collect();
        if extra.is_empty() {
            return out;
        }
        out.extend(extra);
    }
}

/// `N⁺(s) = { X ⊆ S | Y ⊆ X for some Y ∈ N(s) }`.
pub fn supplement_frame(frame: &Frame) -> Frame {
    let n = frame.size();
    frame.with_neighborhoods(
        frame
            .neighborhoods()
            .iter()
            .map(|nb| superset_closure(n, nb))
            .collect(),
    )
}

/// Supplementation of a model.
pub fn supplementation(model: &Model) -> Model {
    model.with_frame(supplement_frame(model.frame()))
}

/// `N^z(s) = { X | X ∈ N(s) or S∖X ∈ N(s) }`.
pub fn complementation(frame: &Frame) -> Frame {
    let n = frame.size();
    frame.with_neighborhoods(
        frame
            .neighborhoods()
            .iter()
            .map(|nb| complement_closure(n, nb))
            .collect(),
    )
}

pub fn complement_model(model: &Model) -> Model {
    model.with_frame(complementation(model.frame()))
}

/// Least extension of `frame` with the flagged properties: superset closure
/// (m), intersection closure (c), adding `S` (n) and complement closure (z)
/// are applied in that order until nothing changes.
pub fn close_under(frame: &Frame, props: PropertySet) -> Result<Frame, TransformError> {
    if props.is_empty() {
        return Ok(frame.clone());
    }
    let n = frame.size();
    if n > MAX_CLOSURE_STATES {
        return Err(TransformError::FrameTooLarge(n));
    }
    Ok(frame.with_neighborhoods(
        frame
            .neighborhoods()
            .iter()
            .map(|nb| close_neighborhood(n, nb, props))
            .collect(),
    ))
}

pub(crate) fn close_neighborhood(n: usize, nb: &Neighborhood, props: PropertySet) -> Neighborhood {
    let mut cur = nb.clone();
    loop {
        let mut next = cur.clone();
        if props.m {
            next = superset_closure(n, &next);
        }
        if props.c {
            next = intersection_closure(&next);
        }
        if props.n {
            next.insert(StateSet::full(n));
        }
        if props.z {
            next = complement_closure(n, &next);
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Translation of L(Δ) into L(□) with `(Δφ)⋆ = □φ⋆ ∨ □¬φ⋆`.
pub fn star_translate(f: &Formula) -> Result<Formula, TransformError> {
    if f.contains_box() {
        return Err(TransformError::ContainsBox(f.clone()));
    }
    Ok(star(f))
}

fn star(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Meta(_) | Formula::Top | Formula::Bot => f.clone(),
        Formula::Not(a) => Formula::not(star(a)),
        Formula::And(a, b) => Formula::and(star(a), star(b)),
        Formula::Or(a, b) => Formula::or(star(a), star(b)),
        Formula::Imp(a, b) => Formula::imp(star(a), star(b)),
        Formula::Iff(a, b) => Formula::iff(star(a), star(b)),
        Formula::Delta(a) => {
            let inner = star(a);
            Formula::or(
                Formula::nec(inner.clone()),
                Formula::nec(Formula::not(inner)),
            )
        }
        Formula::Box(_) => unreachable!("rejected by star_translate"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::check_property;
    use crate::syntax::parse;

    fn nb(sets: &[u32]) -> Neighborhood {
        sets.iter().map(|&x| StateSet(x)).collect()
    }

    fn c_frame() -> Frame {
        Frame::new(vec!["s".into(), "t".into()], vec![nb(&[0b01]), nb(&[])]).unwrap()
    }

    fn props(s: &str) -> PropertySet {
        PropertySet::parse(s).unwrap()
    }

    /// Independent superset closure: scan all of P(S).
    fn brute_supersets(n: usize, nb: &Neighborhood) -> Neighborhood {
        (0..1u32 << n)
            .map(StateSet)
            .filter(|x| nb.iter().any(|y| y.is_subset(*x)))
            .collect()
    }

    #[test]
    fn supplementation_examples() {
        let fr = c_frame();
        let sup = supplement_frame(&fr);
        assert_eq!(sup.neighborhood(0), &nb(&[0b01, 0b11]));
        assert!(sup.neighborhood(1).is_empty());
        assert_eq!(sup.neighborhood(0), &brute_supersets(2, fr.neighborhood(0)));

        assert_eq!(supplement_frame(&sup), sup);

        let with_empty = Frame::with_default_names(vec![nb(&[0]), nb(&[])]).unwrap();
        assert_eq!(supplement_frame(&with_empty).neighborhood(0).len(), 4);
    }

    #[test]
    fn superset_closure_matches_brute_force() {
        for mask in 0u32..256 {
            let col: Neighborhood = (0..8)
                .filter(|b| mask >> b & 1 == 1)
                .map(StateSet)
                .collect();
            assert_eq!(superset_closure(3, &col), brute_supersets(3, &col));
        }
    }

    #[test]
    fn complementation_examples() {
        let z = complementation(&c_frame());
        assert_eq!(z.neighborhood(0), &nb(&[0b01, 0b10]));
        assert!(check_property(&z, props("z")));
        assert!(!check_property(&z, props("c")));
        assert_eq!(complementation(&z), z);

        let unit = Frame::with_default_names(vec![nb(&[0b11]), nb(&[0b11])]).unwrap();
        assert_eq!(complementation(&unit).neighborhood(0), &nb(&[0b00, 0b11]));
    }

    #[test]
    fn close_under_examples() {
        let fr = c_frame();
        assert_eq!(close_under(&fr, PropertySet::NONE).unwrap(), fr);
        assert_eq!(close_under(&fr, props("z")).unwrap(), complementation(&fr));
        let single = Frame::with_default_names(vec![nb(&[0b01]), nb(&[])]).unwrap();
        let closed = close_under(&single, props("mn")).unwrap();
        assert_eq!(closed.neighborhood(0), &nb(&[0b01, 0b11]));
        assert_eq!(closed.neighborhood(1), &nb(&[0b11]));
    }

    #[test]
    fn close_under_every_combination_passes() {
        let fr =
            Frame::with_default_names(vec![nb(&[0b001, 0b110]), nb(&[0b010]), nb(&[])]).unwrap();
        for p in PropertySet::all_combinations() {
            let closed = close_under(&fr, p).unwrap();
            assert!(check_property(&closed, p), "{p}");
            for (a, b) in fr.neighborhoods().iter().zip(closed.neighborhoods()) {
                assert!(a.is_subset(b));
            }
        }
    }

    #[test]
    fn close_under_rejects_large_frames() {
        let fr = Frame::with_default_names(vec![nb(&[]); 6]).unwrap();
        assert_eq!(
            close_under(&fr, props("m")),
            Err(TransformError::FrameTooLarge(6))
        );
        assert!(close_under(&fr, PropertySet::NONE).is_ok());
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            star_translate(&parse("Dp").unwrap()).unwrap(),
            parse("Bp | B~p").unwrap()
        );
        assert_eq!(
            star_translate(&parse("p").unwrap()).unwrap(),
            parse("p").unwrap()
        );
        assert_eq!(
            star_translate(&parse("D(p & Dq)").unwrap()).unwrap(),
            parse("B(p & (Bq | B~q)) | B~(p & (Bq | B~q))").unwrap()
        );
        assert!(matches!(
            star_translate(&parse("Dp -> Bp").unwrap()),
            Err(TransformError::ContainsBox(_))
        ));
    }
}
