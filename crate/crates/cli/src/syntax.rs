//! S-expression syntax for words, polynomials and relation files.
//!
//! Words are letters or two-element lists: `(x (y z))`. Polynomials are a
//! word, `0`, `(* c word)`, or `(+ term ...)`; coefficients are `p` or `p/q`.

use std::fmt;

use num_traits::One;
use thiserror::Error;
use zinbiel_core::gsb::{Family, RelationSchema, RelationSet};
use zinbiel_core::{Alphabet, MagmaPoly, NaWord, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    fn error(self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }

    fn head(&self) -> Option<&str> {
        match self {
            Sexp::List(items, _) => match items.first() {
                Some(Sexp::Atom(a, _)) => Some(a),
                _ => None,
            },
            Sexp::Atom(..) => None,
        }
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(a, _) => write!(f, "{a}"),
            Sexp::List(items, _) => {
                write!(f, "(")?;
                for (i, s) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses every top-level form in `text`. `;` starts a comment.
pub fn parse_sexps(text: &str) -> Result<Vec<Sexp>, ParseError> {
    let mut stack: Vec<(Vec<Sexp>, Pos)> = Vec::new();
    let mut top = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let here = pos;
        match c {
            ';' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    advance(c, &mut pos);
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                advance(c, &mut pos);
            }
            '(' => {
                chars.next();
                advance(c, &mut pos);
                stack.push((Vec::new(), here));
            }
            ')' => {
                chars.next();
                advance(c, &mut pos);
                let (items, start) = stack.pop().ok_or_else(|| here.error("unmatched ')'"))?;
                let list = Sexp::List(items, start);
                match stack.last_mut() {
                    Some((parent, _)) => parent.push(list),
                    None => top.push(list),
                }
            }
            _ => {
                let mut atom = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    atom.push(c);
                    chars.next();
                    advance(c, &mut pos);
                }
                let a = Sexp::Atom(atom, here);
                match stack.last_mut() {
                    Some((parent, _)) => parent.push(a),
                    None => top.push(a),
                }
            }
        }
    }
    if let Some((_, start)) = stack.pop() {
        return Err(start.error("unclosed '('"));
    }
    Ok(top)
}

/// Exactly one form.
pub fn parse_one(text: &str) -> Result<Sexp, ParseError> {
    let mut forms = parse_sexps(text)?;
    match forms.len() {
        1 => Ok(forms.pop().unwrap()),
        0 => Err(Pos { line: 1, col: 1 }.error("empty input")),
        _ => Err(forms[1].pos().error("expected a single expression")),
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

pub fn format_rational(c: &Rational) -> String {
    c.to_string()
}

/// A letter name usable in this syntax.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn alphabet(names: Vec<String>, pos: Pos) -> Result<Alphabet, ParseError> {
    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
        return Err(pos.error(format!("{bad:?} is not a valid letter name")));
    }
    Alphabet::new(names).map_err(|e| pos.error(e.to_string()))
}

pub fn word_from_sexp(s: &Sexp, alphabet: &Alphabet) -> Result<NaWord, ParseError> {
    match s {
        Sexp::Atom(a, pos) => alphabet
            .letter(a)
            .map(NaWord::leaf)
            .ok_or_else(|| pos.error(format!("unknown letter {a:?}"))),
        Sexp::List(items, pos) => match items.as_slice() {
            [l, r] => Ok(NaWord::node(
                word_from_sexp(l, alphabet)?,
                word_from_sexp(r, alphabet)?,
            )),
            _ => Err(pos.error("a word is a letter or a pair (u v)")),
        },
    }
}

fn term_from_sexp(s: &Sexp, alphabet: &Alphabet) -> Result<MagmaPoly, ParseError> {
    if s.head() == Some("*") {
        let Sexp::List(items, pos) = s else { unreachable!() };
        let [_, c, w] = items.as_slice() else {
            return Err(pos.error("expected (* coefficient word)"));
        };
        let Sexp::Atom(c, cpos) = c else {
            return Err(c.pos().error("expected a coefficient"));
        };
        let c = parse_rational(c).ok_or_else(|| cpos.error(format!("bad coefficient {c:?}")))?;
        return Ok(MagmaPoly::term(c, word_from_sexp(w, alphabet)?));
    }
    if let Sexp::Atom(a, _) = s {
        if a == "0" {
            return Ok(MagmaPoly::zero());
        }
    }
    Ok(MagmaPoly::monomial(word_from_sexp(s, alphabet)?))
}

pub fn poly_from_sexp(s: &Sexp, alphabet: &Alphabet) -> Result<MagmaPoly, ParseError> {
    if s.head() == Some("+") {
        let Sexp::List(items, _) = s else { unreachable!() };
        let mut p = MagmaPoly::zero();
        for t in &items[1..] {
            p += &term_from_sexp(t, alphabet)?;
        }
        return Ok(p);
    }
    term_from_sexp(s, alphabet)
}

pub fn parse_poly(text: &str, alphabet: &Alphabet) -> Result<MagmaPoly, ParseError> {
    poly_from_sexp(&parse_one(text)?, alphabet)
}

pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<NaWord, ParseError> {
    word_from_sexp(&parse_one(text)?, alphabet)
}

fn format_term(alphabet: &Alphabet, w: &NaWord, c: &Rational) -> String {
    if c.is_one() {
        alphabet.fmt_word(w)
    } else {
        format!("(* {} {})", format_rational(c), alphabet.fmt_word(w))
    }
}

/// Terms in descending order; a lone term is printed without `(+ …)`.
pub fn format_poly(alphabet: &Alphabet, p: &MagmaPoly) -> String {
    match p.len() {
        0 => "0".into(),
        1 => {
            let (w, c) = p.leading().unwrap();
            format_term(alphabet, w, c)
        }
        _ => {
            let terms: Vec<String> = p.iter().map(|(w, c)| format_term(alphabet, w, c)).collect();
            format!("(+ {})", terms.join(" "))
        }
    }
}

/// A relation file: an alphabet and the relation schemas in file order.
#[derive(Clone)]
pub struct RelationFile {
    pub alphabet: Alphabet,
    pub relations: RelationSet,
}

pub fn family_by_name(name: &str) -> Option<Family> {
    match name {
        "zinbiel" => Some(Family::Zinbiel),
        "even-comb-anticommute" => Some(Family::EvenCombAnticommute),
        "even-comb-square" => Some(Family::EvenCombSquare),
        _ => None,
    }
}

/// Forms: `(alphabet x y …)` first, then any mix of `(family NAME)`,
/// `(relation POLY)`, or a bare polynomial.
///
/// Without an `(alphabet …)` form the `fallback` alphabet is used.
pub fn parse_relation_file(
    text: &str,
    fallback: Option<Alphabet>,
) -> Result<RelationFile, ParseError> {
    let forms = parse_sexps(text)?;
    let mut iter = forms.iter().peekable();
    let alphabet = match iter.peek() {
        Some(form) if form.head() == Some("alphabet") => {
            let Sexp::List(items, pos) = iter.next().unwrap() else { unreachable!() };
            let names = items[1..]
                .iter()
                .map(|s| match s {
                    Sexp::Atom(a, _) => Ok(a.clone()),
                    Sexp::List(_, p) => Err(p.error("letter names are atoms")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            alphabet(names, *pos)?
        }
        _ => fallback.ok_or_else(|| {
            Pos { line: 1, col: 1 }.error("missing (alphabet ...) form and no --letters given")
        })?,
    };
    let mut relations = RelationSet::new(alphabet.len());
    for form in iter {
        match form.head() {
            Some("alphabet") => return Err(form.pos().error("alphabet must come first")),
            Some("family") => {
                let Sexp::List(items, pos) = form else { unreachable!() };
                let family = match items.as_slice() {
                    [_, Sexp::Atom(n, npos)] => family_by_name(n)
                        .ok_or_else(|| npos.error(format!("unknown family {n:?}")))?,
                    _ => return Err(pos.error("expected (family NAME)")),
                };
                relations.push(RelationSchema::Family(family));
            }
            Some("relation") => {
                let Sexp::List(items, pos) = form else { unreachable!() };
                let [_, p] = items.as_slice() else {
                    return Err(pos.error("expected (relation POLY)"));
                };
                push_poly(&mut relations, p, &alphabet)?;
            }
            _ => push_poly(&mut relations, form, &alphabet)?,
        }
    }
    Ok(RelationFile {
        alphabet,
        relations,
    })
}

fn push_poly(set: &mut RelationSet, s: &Sexp, alphabet: &Alphabet) -> Result<(), ParseError> {
    let p = poly_from_sexp(s, alphabet)?;
    set.push_explicit(&p)
        .map(|_| ())
        .map_err(|_| s.pos().error("relation is zero"))
}

/// Space-separated letters, e.g. `"x y z"`.
pub fn parse_aword(text: &str, alphabet: &Alphabet) -> Result<zinbiel_core::AWord, ParseError> {
    let mut letters = Vec::new();
    let mut col = 1;
    for tok in text.split(' ') {
        if !tok.is_empty() {
            let l = alphabet.letter(tok).ok_or_else(|| {
                Pos { line: 1, col }.error(format!("unknown letter {tok:?}"))
            })?;
            letters.push(l);
        }
        col += tok.chars().count() + 1;
    }
    zinbiel_core::AWord::new(letters).map_err(|_| Pos { line: 1, col: 1 }.error("empty word"))
}
