//! The `q=…; vertices=…; pairings=…;` text format.

use std::fmt;
use std::str::FromStr;

use crate::ring::RingElement;

use super::{HeckeFareySymbol, HfsError, Pairing, Vertex};

/// A run of non-whitespace characters with the line it starts on.
#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
}

type Chars<'a> = &'a [(char, usize)];

impl Token {
    fn new(chars: Chars<'_>, fallback_line: usize) -> Self {
        Self {
            text: chars.iter().map(|&(c, _)| c).collect(),
            line: chars.first().map_or(fallback_line, |&(_, l)| l),
        }
    }
}

fn syntax(tok: &Token, msg: impl Into<String>) -> HfsError {
    HfsError::Syntax {
        line: tok.line,
        token: tok.text.clone(),
        msg: msg.into(),
    }
}

fn parse_q(tok: &Token) -> Result<u32, HfsError> {
    match tok.text.parse::<u32>() {
        Ok(q) if q >= 3 => Ok(q),
        _ => Err(syntax(tok, "q must be an integer ≥ 3")),
    }
}

fn parse_vertex(q: u32, tok: &Token) -> Result<Vertex, HfsError> {
    match tok.text.as_str() {
        "-oo" => return Ok(Vertex::NegInfinity),
        "oo" | "+oo" => return Ok(Vertex::Infinity),
        "" => return Err(syntax(tok, "empty vertex")),
        _ => {}
    }
    let ring = |s: &str| RingElement::parse(q, s).map_err(|e| syntax(tok, e.to_string()));
    let (num, den) = match tok.text.split_once('/') {
        Some((n, d)) => (ring(n)?, ring(d)?),
        None => (ring(&tok.text)?, RingElement::one(q)?),
    };
    Ok(Vertex::Finite { num, den })
}

fn parse_pairing(tok: &Token) -> Result<Pairing, HfsError> {
    match tok.text.as_str() {
        "even" => Ok(Pairing::Even),
        "odd" => Ok(Pairing::Odd),
        s => match s.parse::<u64>() {
            Ok(n) if n > 0 => Ok(Pairing::Free(n)),
            _ => Err(syntax(
                tok,
                "pairing must be even, odd or a positive integer",
            )),
        },
    }
}

/// Parses a symbol and validates it.
pub fn parse_hfs(text: &str) -> Result<HeckeFareySymbol, HfsError> {
    let mut line = 1;
    let mut chars = Vec::new();
    for c in text.chars() {
        if c == '\n' {
            line += 1;
        }
        if !c.is_whitespace() {
            chars.push((c, line));
        }
    }
    let mut stmts: Vec<Chars<'_>> = chars.split(|&(c, _)| c == ';').collect();
    let tail = stmts.pop().expect("split yields at least one piece");
    if !tail.is_empty() {
        return Err(syntax(&Token::new(tail, line), "missing ';'"));
    }

    let (mut q, mut verts, mut pairs) = (None, None, None);
    for stmt in stmts {
        let whole = Token::new(stmt, line);
        let Some(eq) = stmt.iter().position(|&(c, _)| c == '=') else {
            return Err(syntax(&whole, "expected key=value"));
        };
        let key = Token::new(&stmt[..eq], whole.line).text;
        let value = &stmt[eq + 1..];
        let slot = match key.as_str() {
            "q" => &mut q,
            "vertices" => &mut verts,
            "pairings" => &mut pairs,
            _ => return Err(syntax(&whole, format!("unknown key {key:?}"))),
        };
        if slot.is_some() {
            return Err(syntax(&whole, format!("duplicate key {key:?}")));
        }
        if value.is_empty() {
            return Err(syntax(&whole, "empty value"));
        }
        let items: Vec<Token> = value
            .split(|&(c, _)| c == ',')
            .map(|piece| Token::new(piece, whole.line))
            .collect();
        *slot = Some(items);
    }
    let missing = |what: &str| HfsError::Syntax {
        line,
        token: String::new(),
        msg: format!("missing {what}= statement"),
    };
    let q_toks = q.ok_or_else(|| missing("q"))?;
    if q_toks.len() != 1 {
        return Err(syntax(&q_toks[1], "q takes one value"));
    }
    let q = parse_q(&q_toks[0])?;
    let vertices = verts
        .ok_or_else(|| missing("vertices"))?
        .iter()
        .map(|t| parse_vertex(q, t))
        .collect::<Result<Vec<_>, _>>()?;
    let pairings = pairs
        .ok_or_else(|| missing("pairings"))?
        .iter()
        .map(parse_pairing)
        .collect::<Result<Vec<_>, _>>()?;
    HeckeFareySymbol::new(q, vertices, pairings)
}

/// Canonical three-line form.
pub fn serialize_hfs(s: &HeckeFareySymbol) -> String {
    s.to_string()
}

impl fmt::Display for HeckeFareySymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: Vec<String>| items.join(",");
        writeln!(f, "q={};", self.q)?;
        writeln!(
            f,
            "vertices={};",
            join(self.vertices.iter().map(|v| v.to_string()).collect())
        )?;
        writeln!(
            f,
            "pairings={};",
            join(self.pairings.iter().map(|p| p.to_string()).collect())
        )
    }
}

impl FromStr for HeckeFareySymbol {
    type Err = HfsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hfs(s)
    }
}
