//! Formulas of the noncontingency language L(Δ) and the necessity language L(□).
//!
//! Both languages share one AST. Schemas (axiom patterns) are ordinary formulas
//! that additionally contain metavariables `phi`, `psi`, `chi`.
//!
//! Surface syntax, loosest to tightest binding:
//!
//! | operator | ASCII | Unicode | associativity |
//! |----------|-------|---------|---------------|
//! | iff      | `<->` | `↔`     | left          |
//! | implies  | `->`  | `→`     | right         |
//! | or       | `\|`  | `∨`     | left          |
//! | and      | `&`   | `∧`     | left          |
//! | not, Δ, □ | `~`, `D`, `B` | `¬`, `Δ`, `□` | prefix |
//!
//! `T` and `F` (also `⊤`, `⊥`) are the constants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A propositional variable. Names match `[a-z][a-z0-9_]*` and are never
/// one of the metavariable spellings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self, SyntaxError> {
        let name = name.into();
        if !is_identifier(&name) {
            return Err(SyntaxError::InvalidAtom(name));
        }
        if MetaVar::from_name(&name).is_some() {
            return Err(SyntaxError::ReservedAtom(name));
        }
        Ok(Atom(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// Schema metavariable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetaVar {
    Phi,
    Psi,
    Chi,
}

impl MetaVar {
    pub const ALL: [MetaVar; 3] = [MetaVar::Phi, MetaVar::Psi, MetaVar::Chi];

    pub fn name(self) -> &'static str {
        match self {
            MetaVar::Phi => "phi",
            MetaVar::Psi => "psi",
            MetaVar::Chi => "chi",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "phi" | "φ" => Some(MetaVar::Phi),
            "psi" | "ψ" => Some(MetaVar::Psi),
            "chi" | "χ" => Some(MetaVar::Chi),
            _ => None,
        }
    }
}

impl fmt::Display for MetaVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Meta(MetaVar),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// Noncontingency: true when the truth set or its complement is a neighborhood.
    Delta(Box<Formula>),
    /// Necessity: true when the truth set is a neighborhood.
    Box(Box<Formula>),
}

impl Formula {
    /// Builds an atom, panicking on an invalid name. Meant for literals in code.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("invalid atom name"))
    }

    pub fn meta(v: MetaVar) -> Formula {
        Formula::Meta(v)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn delta(f: Formula) -> Formula {
        Formula::Delta(Box::new(f))
    }

    pub fn nec(f: Formula) -> Formula {
        Formula::Box(Box::new(f))
    }

    /// Maximum nesting of Δ and □.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Meta(_) | Formula::Top | Formula::Bot => 0,
            Formula::Not(a) => a.modal_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.modal_depth().max(b.modal_depth())
            }
            Formula::Delta(a) | Formula::Box(a) => 1 + a.modal_depth(),
        }
    }

    /// Distinct atoms, in name order.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(a) = f {
                out.insert(a.clone());
            }
        });
        out
    }

    pub fn metavars(&self) -> BTreeSet<MetaVar> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Meta(v) = f {
                out.insert(*v);
            }
        });
        out
    }

    pub fn has_metavars(&self) -> bool {
        self.any(&|f| matches!(f, Formula::Meta(_)))
    }

    pub fn contains_delta(&self) -> bool {
        self.any(&|f| matches!(f, Formula::Delta(_)))
    }

    pub fn contains_box(&self) -> bool {
        self.any(&|f| matches!(f, Formula::Box(_)))
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Atom(_) | Formula::Meta(_) | Formula::Top | Formula::Bot => {}
            Formula::Not(a) | Formula::Delta(a) | Formula::Box(a) => a.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    fn any(&self, pred: &impl Fn(&Formula) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Formula::Atom(_) | Formula::Meta(_) | Formula::Top | Formula::Bot => false,
            Formula::Not(a) | Formula::Delta(a) | Formula::Box(a) => a.any(pred),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.any(pred) || b.any(pred)
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Imp(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            _ => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),
    #[error("`{0}` is reserved for schema metavariables")]
    ReservedAtom(String),
    #[error("metavariable {0} is unbound")]
    Unbound(MetaVar),
}

impl SyntaxError {
    /// 1-based column of a parse error.
    pub fn column(&self) -> Option<usize> {
        match self {
            SyntaxError::Parse { column, .. } => Some(*column),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Printing

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Meta(v) => write!(f, "{v}"),
            Formula::Top => f.write_str("T"),
            Formula::Bot => f.write_str("F"),
            Formula::Not(a) => write_prefix(f, "~", a),
            Formula::Delta(a) => write_prefix(f, "D", a),
            Formula::Box(a) => write_prefix(f, "B", a),
            Formula::And(a, b) => write_binary(f, self, " & ", a, b),
            Formula::Or(a, b) => write_binary(f, self, " | ", a, b),
            Formula::Imp(a, b) => write_binary(f, self, " -> ", a, b),
            Formula::Iff(a, b) => write_binary(f, self, " <-> ", a, b),
        }
    }
}

fn write_prefix(f: &mut fmt::Formatter<'_>, op: &str, arg: &Formula) -> fmt::Result {
    f.write_str(op)?;
    if arg.precedence() < 5 {
        write!(f, "({arg})")
    } else {
        write!(f, "{arg}")
    }
}

fn write_binary(
    f: &mut fmt::Formatter<'_>,
    node: &Formula,
    op: &str,
    lhs: &Formula,
    rhs: &Formula,
) -> fmt::Result {
    let prec = node.precedence();
    let right_assoc = matches!(node, Formula::Imp(..));
    let lhs_parens = lhs.precedence() < prec || (right_assoc && lhs.precedence() == prec);
    let rhs_parens = rhs.precedence() < prec || (!right_assoc && rhs.precedence() == prec);
    write_operand(f, lhs, lhs_parens)?;
    f.write_str(op)?;
    write_operand(f, rhs, rhs_parens)
}

fn write_operand(f: &mut fmt::Formatter<'_>, arg: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({arg})")
    } else {
        write!(f, "{arg}")
    }
}

/// Canonical rendering; `parse(&print(f)) == Ok(f)`.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Not,
    Delta,
    Box,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Top => "`T`".into(),
            Tok::Bot => "`F`".into(),
            Tok::Not => "`~`".into(),
            Tok::Delta => "`D`".into(),
            Tok::Box => "`B`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn parse_error(column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError::Parse {
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<(Vec<(usize, Tok)>, usize), SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Imp,
            '↔' => Tok::Iff,
            'D' | 'Δ' => Tok::Delta,
            'B' | '□' => Tok::Box,
            'T' | '⊤' => Tok::Top,
            'F' | '⊥' => Tok::Bot,
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    i += 2;
                    toks.push((col, Tok::Imp));
                    continue;
                }
                return Err(parse_error(col, "expected `->`"));
            }
            '<' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') {
                    i += 3;
                    toks.push((col, Tok::Iff));
                    continue;
                }
                return Err(parse_error(col, "expected `<->`"));
            }
            'φ' | 'ψ' | 'χ' => Tok::Ident(c.to_string()),
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_lowercase()
                        || chars[i].is_ascii_digit()
                        || chars[i] == '_')
                {
                    i += 1;
                }
                toks.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(parse_error(col, format!("unexpected character `{other}`"))),
        };
        toks.push((col, tok));
        i += 1;
    }
    Ok((toks, chars.len() + 1))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_column)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> SyntaxError {
        match self.peek() {
            Some(t) => parse_error(
                self.column(),
                format!("expected {wanted}, found {}", t.describe()),
            ),
            None => parse_error(
                self.column(),
                format!("expected {wanted}, found end of input"),
            ),
        }
    }

    fn iff(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let column = self.column();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected("a formula"));
        };
        self.pos += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Delta => Ok(Formula::delta(self.unary()?)),
            Tok::Box => Ok(Formula::nec(self.unary()?)),
            Tok::Top => Ok(Formula::Top),
            Tok::Bot => Ok(Formula::Bot),
            Tok::Ident(name) => match MetaVar::from_name(&name) {
                Some(v) => Ok(Formula::Meta(v)),
                None => Atom::new(name)
                    .map(Formula::Atom)
                    .map_err(|e| parse_error(column, e.to_string())),
            },
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a formula"))
            }
        }
    }
}

/// Parses a formula or schema. `phi`, `psi`, `chi` become metavariables.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let (toks, end_column) = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end_column,
    };
    let f = parser.iff()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

// ---------------------------------------------------------------------------
// Substitution

/// Bindings for schema metavariables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    bindings: BTreeMap<MetaVar, Formula>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, var: MetaVar, f: Formula) -> Self {
        self.bindings.insert(var, f);
        self
    }

    pub fn insert(&mut self, var: MetaVar, f: Formula) -> Option<Formula> {
        self.bindings.insert(var, f)
    }

    pub fn get(&self, var: MetaVar) -> Option<&Formula> {
        self.bindings.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (MetaVar, &Formula)> {
        self.bindings.iter().map(|(v, f)| (*v, f))
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

impl FromIterator<(MetaVar, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (MetaVar, Formula)>>(iter: I) -> Self {
        Substitution {
            bindings: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, g)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}={g}")?;
        }
        Ok(())
    }
}

/// Simultaneously replaces every metavariable of `schema` by its binding.
pub fn instantiate(schema: &Formula, subst: &Substitution) -> Result<Formula, SyntaxError> {
    let rec = |g: &Formula| instantiate(g, subst).map(Box::new);
    Ok(match schema {
        Formula::Meta(v) => subst.get(*v).cloned().ok_or(SyntaxError::Unbound(*v))?,
        Formula::Atom(_) | Formula::Top | Formula::Bot => schema.clone(),
        Formula::Not(a) => Formula::Not(rec(a)?),
        Formula::Delta(a) => Formula::Delta(rec(a)?),
        Formula::Box(a) => Formula::Box(rec(a)?),
        Formula::And(a, b) => Formula::And(rec(a)?, rec(b)?),
        Formula::Or(a, b) => Formula::Or(rec(a)?, rec(b)?),
        Formula::Imp(a, b) => Formula::Imp(rec(a)?, rec(b)?),
        Formula::Iff(a, b) => Formula::Iff(rec(a)?, rec(b)?),
    })
}

// ---------------------------------------------------------------------------
// Propositional tautology check

/// True when `f` is an instance of a propositional tautology: every maximal
/// Δ/□ subformula, atom and metavariable is treated as an independent
/// propositional letter (syntactically equal subformulas share a letter) and
/// the result is checked by truth table.
pub fn is_tautology_instance(f: &Formula) -> bool {
    let mut letters: Vec<&Formula> = Vec::new();
    collect_letters(f, &mut letters);
    let n = letters.len();
    (0..1u64 << n).all(|row| {
        truth_value(f, &|leaf| {
            let idx = letters
                .iter()
                .position(|l| *l == leaf)
                .expect("collected letter");
            row >> idx & 1 == 1
        })
    })
}

fn collect_letters<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::Top | Formula::Bot => {}
        Formula::Atom(_) | Formula::Meta(_) | Formula::Delta(_) | Formula::Box(_) => {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Formula::Not(a) => collect_letters(a, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
            collect_letters(a, out);
            collect_letters(b, out);
        }
    }
}

fn truth_value(f: &Formula, letter: &impl Fn(&Formula) -> bool) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Atom(_) | Formula::Meta(_) | Formula::Delta(_) | Formula::Box(_) => letter(f),
        Formula::Not(a) => !truth_value(a, letter),
        Formula::And(a, b) => truth_value(a, letter) && truth_value(b, letter),
        Formula::Or(a, b) => truth_value(a, letter) || truth_value(b, letter),
        Formula::Imp(a, b) => !truth_value(a, letter) || truth_value(b, letter),
        Formula::Iff(a, b) => truth_value(a, letter) == truth_value(b, letter),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }
    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse("D(p & q) -> Dp").unwrap(),
            Formula::imp(Formula::delta(Formula::and(p(), q())), Formula::delta(p()))
        );
        assert_eq!(
            parse("Dp <-> D~p").unwrap(),
            Formula::iff(Formula::delta(p()), Formula::delta(Formula::not(p())))
        );
    }

    #[test]
    fn unbalanced_paren_reports_column() {
        let err = parse("D(p").unwrap_err();
        assert_eq!(err.column(), Some(4));
    }

    #[test]
    fn other_errors_have_columns() {
        assert_eq!(parse("p &").unwrap_err().column(), Some(4));
        assert_eq!(parse("p q").unwrap_err().column(), Some(3));
        assert_eq!(parse("p - q").unwrap_err().column(), Some(3));
        assert_eq!(parse("p $").unwrap_err().column(), Some(3));
        assert_eq!(parse("").unwrap_err().column(), Some(1));
        assert_eq!(parse("(p))").unwrap_err().column(), Some(4));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("Δp ↔ Δ¬p").unwrap(), parse("Dp <-> D~p").unwrap());
        assert_eq!(
            parse("□⊤ ∧ ⊥ → p ∨ q").unwrap(),
            parse("BT & F -> p | q").unwrap()
        );
        assert_eq!(
            parse("Δφ").unwrap(),
            Formula::delta(Formula::meta(MetaVar::Phi))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p -> q -> p").unwrap(),
            Formula::imp(p(), Formula::imp(q(), p()))
        );
        assert_eq!(
            parse("p & q & p").unwrap(),
            Formula::and(Formula::and(p(), q()), p())
        );
        assert_eq!(
            parse("p | q & p <-> q").unwrap(),
            Formula::iff(Formula::or(p(), Formula::and(q(), p())), q())
        );
        assert_eq!(parse("~Dp").unwrap(), Formula::not(Formula::delta(p())));
    }

    #[test]
    fn prints_examples() {
        assert_eq!(print(&Formula::delta(Formula::Top)), "DT");
        assert_eq!(print(&p()), "p");
        assert_eq!(
            print(&Formula::or(
                Formula::nec(p()),
                Formula::nec(Formula::not(p()))
            )),
            "Bp | B~p"
        );
        assert_eq!(print(&parse("(p -> q) -> p").unwrap()), "(p -> q) -> p");
        assert_eq!(print(&parse("p & (q & p)").unwrap()), "p & (q & p)");
        assert_eq!(print(&parse("D~(p & q)").unwrap()), "D~(p & q)");
    }

    #[test]
    fn reserved_names_are_rejected_as_atoms() {
        assert!(matches!(
            Atom::new("phi"),
            Err(SyntaxError::ReservedAtom(_))
        ));
        assert!(matches!(Atom::new("P"), Err(SyntaxError::InvalidAtom(_))));
        assert!(Atom::new("p_1").is_ok());
    }

    #[test]
    fn modal_depth() {
        assert_eq!(p().modal_depth(), 0);
        assert_eq!(parse("D(p & Bq) | Dp").unwrap().modal_depth(), 2);
    }

    #[test]
    fn instantiate_examples() {
        let equ = parse("Dphi <-> D~phi").unwrap();
        let s = Substitution::new().bind(MetaVar::Phi, parse("p & q").unwrap());
        assert_eq!(
            instantiate(&equ, &s).unwrap(),
            parse("D(p&q) <-> D~(p&q)").unwrap()
        );

        let dc = parse("Dphi & Dpsi -> D(phi & psi)").unwrap();
        let s = Substitution::new()
            .bind(MetaVar::Phi, p())
            .bind(MetaVar::Psi, q());
        assert_eq!(
            instantiate(&dc, &s).unwrap(),
            parse("(Dp & Dq) -> D(p&q)").unwrap()
        );

        let dm = parse("Dphi -> D(phi | psi) | D(~phi | chi)").unwrap();
        let s = Substitution::new().bind(MetaVar::Phi, p());
        assert_eq!(
            instantiate(&dm, &s),
            Err(SyntaxError::Unbound(MetaVar::Psi))
        );
    }

    #[test]
    fn tautology_examples() {
        assert!(is_tautology_instance(&parse("Dp -> Dp").unwrap()));
        assert!(is_tautology_instance(
            &parse("((p->q)&(~p->q)) <-> q").unwrap()
        ));
        assert!(!is_tautology_instance(&parse("Dp -> D~p").unwrap()));
        assert!(is_tautology_instance(&parse("T").unwrap()));
        assert!(!is_tautology_instance(&parse("F").unwrap()));
        // No normalization under modal operators.
        assert!(!is_tautology_instance(
            &parse("D(p & q) -> D(q & p)").unwrap()
        ));
    }
}
