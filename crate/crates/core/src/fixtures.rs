//! Models and derivations shipped with the crate.
//!
//! The texts are embedded at build time; accessors parse them on each call.

use crate::model_format::parse_model;
use crate::proof::{parse_derivation, Derivation};
use crate::semantics::{Frame, Model};

/// (c)-model falsifying `Dp & D~p -> D(p & ~p)` at `s`.
pub const ITEM_V: &str = include_str!("../fixtures/models/item_v.txt");
/// (cn)-model falsifying `Dp & Dq -> D(p & q)` at `s`.
pub const ITEM_VI: &str = include_str!("../fixtures/models/item_vi.txt");
/// (mcn)-model falsifying `Dp -> D(p | q)` at `s`.
pub const ITEM_VII: &str = include_str!("../fixtures/models/item_vii.txt");
/// A (c)-frame whose complementation is not (c).
pub const C_FRAME: &str = include_str!("../fixtures/models/c_frame.txt");

/// `D(q -> p) & D(~q -> p) -> Dp` in R-delta.
pub const DC_TO_DC_PRIME: &str = include_str!("../fixtures/derivations/dc_to_dc_prime.txt");
/// `Dp & Dq -> D(p & q)` in M-delta+dC'.
pub const DC_PRIME_TO_DC: &str = include_str!("../fixtures/derivations/dc_prime_to_dc.txt");
/// `Dp -> D(p -> q) | D(~p -> r)` in M-delta.
pub const DM_TO_DM_PRIME: &str = include_str!("../fixtures/derivations/dm_to_dm_prime.txt");
/// `Dp -> D(p | q) | D(~p | r)` in E-delta+dM'.
pub const DM_PRIME_TO_DM: &str = include_str!("../fixtures/derivations/dm_prime_to_dm.txt");

fn model(text: &str) -> Model {
    parse_model(text).expect("shipped model fixtures parse")
}

pub fn item_v() -> Model {
    model(ITEM_V)
}

pub fn item_vi() -> Model {
    model(ITEM_VI)
}

pub fn item_vii() -> Model {
    model(ITEM_VII)
}

pub fn c_frame() -> Frame {
    model(C_FRAME).frame().clone()
}

/// Every shipped derivation with a short name.
pub fn derivations() -> Vec<(&'static str, Derivation)> {
    [
        ("dc-to-dc-prime", DC_TO_DC_PRIME),
        ("dc-prime-to-dc", DC_PRIME_TO_DC),
        ("dm-to-dm-prime", DM_TO_DM_PRIME),
        ("dm-prime-to-dm", DM_PRIME_TO_DM),
    ]
    .into_iter()
    .map(|(name, text)| {
        (
            name,
            parse_derivation(text).expect("shipped derivations parse"),
        )
    })
    .collect()
}
