//! Line-oriented text format for models (and frames, which are models
//! without `V` lines).
//!
//! ```text
//! states: s t u
//! N s: {t u} {s t u}
//! N t: {s t u}
//! V p: s
//! ```
//!
//! Lines are order-insensitive. A state with no `N` line has an empty
//! neighborhood collection; an atom with no `V` line denotes ∅. `#` starts a
//! comment. `V` values may be bare state names or a braced set.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::semantics::{Frame, Model, Neighborhood, SemanticsError, StateSet};
use crate::syntax::Atom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ModelFormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ModelFormatError {
    ModelFormatError {
        line,
        message: message.into(),
    }
}

/// Parses a whitespace-separated sequence of braced subsets, e.g. `{} {s t}`.
fn parse_subsets(text: &str, line: usize) -> Result<Vec<Vec<String>>, ModelFormatError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('{') else {
            return Err(err(line, format!("expected `{{` at `{rest}`")));
        };
        let close = after_open
            .find('}')
            .ok_or_else(|| err(line, "unterminated `{`"))?;
        let names = after_open[..close]
            .split_whitespace()
            .map(str::to_string)
            .collect();
        out.push(names);
        rest = after_open[close + 1..].trim_start();
    }
    Ok(out)
}

fn to_set(
    frame_states: &[String],
    names: &[String],
    line: usize,
) -> Result<StateSet, ModelFormatError> {
    names.iter().try_fold(StateSet::EMPTY, |acc, name| {
        let i = frame_states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| err(line, format!("unknown state `{name}`")))?;
        Ok(acc.union(StateSet::singleton(i)))
    })
}

pub fn parse_model(text: &str) -> Result<Model, ModelFormatError> {
    let mut states: Option<(usize, Vec<String>)> = None;
    let mut n_lines: Vec<(usize, String, Vec<Vec<String>>)> = Vec::new();
    let mut v_lines: Vec<(usize, String, Vec<String>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, body) = content
            .split_once(':')
            .ok_or_else(|| err(line, "expected `states:`, `N <state>:` or `V <atom>:`"))?;
        let mut head_words = head.split_whitespace();
        match (head_words.next(), head_words.next(), head_words.next()) {
            (Some("states"), None, None) => {
                if states.is_some() {
                    return Err(err(line, "duplicate `states:` line"));
                }
                states = Some((line, body.split_whitespace().map(str::to_string).collect()));
            }
            (Some("N"), Some(state), None) => {
                n_lines.push((line, state.to_string(), parse_subsets(body, line)?));
            }
            (Some("V"), Some(atom), None) => {
                let body = body.trim();
                let names = if body.starts_with('{') {
                    let mut sets = parse_subsets(body, line)?;
                    if sets.len() != 1 {
                        return Err(err(line, "a valuation is a single set"));
                    }
                    sets.pop().unwrap()
                } else {
                    body.split_whitespace().map(str::to_string).collect()
                };
                v_lines.push((line, atom.to_string(), names));
            }
            _ => return Err(err(line, format!("unrecognized line `{content}`"))),
        }
    }

    let (states_line, states) = states.ok_or_else(|| err(1, "missing `states:` line"))?;
    let n = states.len();
    let mut neighborhoods: Vec<Option<Neighborhood>> = vec![None; n];
    for (line, state, sets) in n_lines {
        let i = states
            .iter()
            .position(|s| *s == state)
            .ok_or_else(|| err(line, format!("unknown state `{state}`")))?;
        if neighborhoods[i].is_some() {
            return Err(err(line, format!("duplicate `N {state}` line")));
        }
        let nb = sets
            .iter()
            .map(|names| to_set(&states, names, line))
            .collect::<Result<Neighborhood, _>>()?;
        neighborhoods[i] = Some(nb);
    }
    let frame = Frame::new(
        states.clone(),
        neighborhoods
            .into_iter()
            .map(Option::unwrap_or_default)
            .collect(),
    )
    .map_err(|e: SemanticsError| err(states_line, e.to_string()))?;

    let mut valuation = BTreeMap::new();
    for (line, atom, names) in v_lines {
        let atom = Atom::new(atom).map_err(|e| err(line, e.to_string()))?;
        let set = to_set(&states, &names, line)?;
        if valuation.insert(atom.clone(), set).is_some() {
            return Err(err(line, format!("duplicate `V {atom}` line")));
        }
    }
    Model::new(frame, valuation).map_err(|e| err(states_line, e.to_string()))
}

/// Renders a model. Subsets within a collection appear in increasing
/// bit-set order; every state gets an `N` line.
pub fn write_model(model: &Model) -> String {
    let frame = model.frame();
    let mut out = format!("states: {}\n", frame.states().join(" "));
    out.push_str(&write_neighborhoods(frame));
    for (atom, set) in model.valuation() {
        let names: Vec<&str> = set.iter().map(|i| frame.state_name(i)).collect();
        if names.is_empty() {
            out.push_str(&format!("V {atom}: {{}}\n"));
        } else {
            out.push_str(&format!("V {atom}: {}\n", names.join(" ")));
        }
    }
    out
}

pub fn write_frame(frame: &Frame) -> String {
    format!(
        "states: {}\n{}",
        frame.states().join(" "),
        write_neighborhoods(frame)
    )
}

fn write_neighborhoods(frame: &Frame) -> String {
    let mut out = String::new();
    for (i, nb) in frame.neighborhoods().iter().enumerate() {
        let sets: Vec<String> = nb.iter().map(|x| frame.format_set(*x)).collect();
        if sets.is_empty() {
            out.push_str(&format!("N {}:\n", frame.state_name(i)));
        } else {
            out.push_str(&format!("N {}: {}\n", frame.state_name(i), sets.join(" ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const VII: &str =
        "states: s t u\nN s: {t u} {s t u}\nN t: {s t u}\nN u: {s t u}\nV p: s\nV q: t\n";

    #[test]
    fn parses_and_writes_canonically() {
        let m = parse_model(VII).unwrap();
        assert_eq!(m.frame().size(), 3);
        assert_eq!(write_model(&m), VII);
    }

    #[test]
    fn order_insensitive_with_defaults() {
        let m = parse_model("V p: {s}\n# comment\nN s: {s}\nstates: s t\n").unwrap();
        assert!(m.frame().neighborhood(1).is_empty());
        assert_eq!(write_model(&m), "states: s t\nN s: {s}\nN t:\nV p: s\n");
    }

    #[test]
    fn empty_set_member() {
        let m = parse_model("states: s t\nN s: {}\n").unwrap();
        assert!(m.frame().neighborhood(0).contains(&StateSet::EMPTY));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_model("states: s t\nN w: {s}\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_model("states: s t\nN s: {s\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_model("states: s t\nV p: s x\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_model("N s: {s}\n").unwrap_err();
        assert!(e.message.contains("states"));
        let e = parse_model("states: s\nfoo\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
