//! Parser for the input language.
//!
//! ```text
//! # Painlevé III, degenerate fifth Lax pair
//! infinity {
//!   factor "x^(1/2)" mult 1
//! }
//! pole 0 { a: [1], b: [1] }
//! pole 1 { a: [1], b: [1] }
//! ```
//!
//! A factor string is a signed sum of terms, each a product of rationals,
//! `i`, roots of unity `zN` / `zN^k`, and powers `x`, `x^k`, `x^(p/q)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::circles::{Circle, ExpFactor, Exponent};
use crate::cyclotomic::CycloNumber;
use crate::diagram::{FormalComponent, PoleLocation, ProblemInput, TamePole};
use crate::error::{Error, Result};
use crate::legs::JordanClass;

/// Source text together with the input it describes.
#[derive(Clone, Debug)]
pub struct InputDocument {
    pub source: String,
    pub input: ProblemInput,
    pub warnings: Vec<String>,
}

impl InputDocument {
    pub fn parse(source: &str) -> Result<Self> {
        let input = parse(source)?;
        Ok(InputDocument {
            source: source.to_string(),
            warnings: input.warnings().to_vec(),
            input,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Str(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (lineno + 1, i + 1);
            let start = i;
            let tok = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '{' | '}' | '[' | ']' | ':' | ',' => {
                    i += 1;
                    Tok::Sym(c)
                }
                '"' => {
                    let close = chars[i + 1..]
                        .iter()
                        .position(|&ch| ch == '"')
                        .ok_or_else(|| Error::parse(line, col, "unterminated string"))?;
                    let s: String = chars[i + 1..i + 1 + close].iter().collect();
                    i += close + 2;
                    Tok::Str(s)
                }
                c if c.is_ascii_digit() || c == '-' => {
                    i += 1;
                    while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    if !is_rational_literal(&s) {
                        return Err(Error::parse(line, col, format!("malformed number `{s}`")));
                    }
                    Tok::Number(s)
                }
                c if c.is_alphabetic() || c == '_' => {
                    while i < chars.len()
                        && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                    {
                        i += 1;
                    }
                    Tok::Ident(chars[start..i].iter().collect())
                }
                other => {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("unexpected character `{other}`"),
                    ))
                }
            };
            out.push(Token { tok, line, col });
        }
    }
    Ok(out)
}

fn is_rational_literal(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    let mut parts = body.split('/');
    let ok =
        |p: Option<&str>| p.is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
    match (parts.next(), parts.next(), parts.next()) {
        (n, None, None) => ok(n),
        (n, Some(d), None) => ok(n) && ok(Some(d)) && d.bytes().any(|b| b != b'0'),
        _ => false,
    }
}

fn rational_literal(s: &str) -> BigRational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let mut parts = body.split('/');
    let n: BigInt = parts.next().unwrap().parse().unwrap();
    let d: BigInt = parts
        .next()
        .map_or_else(|| BigInt::from(1), |d| d.parse().unwrap());
    let r = BigRational::new(n, d);
    if neg {
        -r
    } else {
        r
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(Error::parse(l, c, message))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(Token {
                tok: Tok::Sym(s), ..
            }) if *s == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{c}`")),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Ident(s), .. }) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.at_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{kw}`"))
        }
    }

    fn positive_int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Token {
                tok: Tok::Number(s),
                ..
            }) => match s.parse::<u64>() {
                Ok(v) if v > 0 => {
                    self.pos += 1;
                    Ok(v)
                }
                _ => self.err(format!("expected a positive integer, found `{s}`")),
            },
            _ => self.err("expected a positive integer"),
        }
    }

    fn label(&mut self) -> Result<String> {
        match self.next() {
            Some(Token {
                tok: Tok::Ident(s) | Tok::Number(s),
                ..
            }) => Ok(s),
            _ => {
                self.pos -= 1;
                self.err("expected an eigenvalue label")
            }
        }
    }

    fn class(&mut self) -> Result<JordanClass> {
        let (l, c) = self.here();
        self.expect_sym('{')?;
        let mut entries = Vec::new();
        loop {
            let label = self.label()?;
            self.expect_sym(':')?;
            self.expect_sym('[')?;
            let mut parts = vec![self.positive_int()?];
            while self.at_sym(',') {
                self.pos += 1;
                parts.push(self.positive_int()?);
            }
            self.expect_sym(']')?;
            entries.push((label, parts));
            if self.at_sym(',') {
                self.pos += 1;
                continue;
            }
            break;
        }
        self.expect_sym('}')?;
        JordanClass::new(entries).map_err(|e| match e {
            Error::Validation(m) => Error::parse(l, c, m),
            other => other,
        })
    }

    fn circle(&mut self) -> Result<FormalComponent> {
        self.expect_keyword("factor")?;
        let q = match self.next() {
            Some(Token {
                tok: Tok::Str(s),
                line,
                col,
            }) => parse_factor(&s).map_err(|e| shift(e, line, col + 1))?,
            _ => {
                self.pos -= 1;
                return self.err("expected a quoted exponential factor");
            }
        };
        self.expect_keyword("mult")?;
        let mult = self.positive_int()?;
        let monodromy = if self.at_keyword("monodromy") {
            self.pos += 1;
            self.class()?
        } else {
            JordanClass::regular_semisimple(mult)
        };
        Ok(FormalComponent {
            circle: Circle::of(&q),
            mult,
            monodromy,
        })
    }

    fn document(&mut self) -> Result<ProblemInput> {
        let mut infinity: Option<Vec<FormalComponent>> = None;
        let mut poles = Vec::new();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        while self.peek().is_some() {
            if self.at_keyword("infinity") {
                if infinity.is_some() {
                    return self.err("second `infinity` stanza");
                }
                self.pos += 1;
                self.expect_sym('{')?;
                let mut comps = vec![self.circle()?];
                while self.at_keyword("factor") {
                    comps.push(self.circle()?);
                }
                self.expect_sym('}')?;
                infinity = Some(comps);
            } else if self.at_keyword("pole") {
                self.pos += 1;
                let location = match self.next() {
                    Some(Token {
                        tok: Tok::Number(s),
                        ..
                    }) => PoleLocation::Point(rational_literal(&s)),
                    Some(Token {
                        tok: Tok::Ident(s), ..
                    }) => PoleLocation::Label(s),
                    _ => {
                        self.pos -= 1;
                        return self.err("expected a pole location");
                    }
                };
                let class = self.class()?;
                poles.push(TamePole { location, class });
            } else {
                return self.err("expected `infinity` or `pole`");
            }
        }
        let Some(infinity) = infinity else {
            return Err(Error::parse(1, 1, "missing `infinity` stanza"));
        };
        ProblemInput::new(infinity, poles)
    }
}

fn shift(e: Error, line: usize, col: usize) -> Error {
    match e {
        Error::Parse {
            column, message, ..
        } => Error::parse(line, col + column - 1, message),
        other => other,
    }
}

/// Parses a whole input document.
pub fn parse(source: &str) -> Result<ProblemInput> {
    let toks = lex(source)?;
    let end = source
        .lines()
        .enumerate()
        .last()
        .map_or((1, 1), |(i, l)| (i + 1, l.chars().count() + 1));
    Parser { toks, pos: 0, end }.document()
}

struct FactorParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl FactorParser<'_> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(1, at + 1, message))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn signed_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let Some(d) = self.digits() else {
            return self.err(start, "expected an integer");
        };
        let v: i64 = d
            .parse()
            .or_else(|_| self.err(start, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn x_exponent(&mut self) -> Result<Exponent> {
        if self.peek() != Some('^') {
            return Ok(Exponent::from_integer(1));
        }
        self.pos += 1;
        if self.peek() == Some('(') {
            self.pos += 1;
            self.skip_ws();
            let num = self.signed_int()?;
            self.skip_ws();
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let d = self.signed_int()?;
                if d == 0 {
                    return self.err(at, "zero denominator");
                }
                d
            } else {
                1
            };
            self.skip_ws();
            if self.peek() != Some(')') {
                return self.err(self.pos, "expected `)`");
            }
            self.pos += 1;
            Ok(Exponent::new(num, den))
        } else {
            Ok(Exponent::from_integer(self.signed_int()?))
        }
    }

    /// One product term; returns `None` for a vanishing constant such as `0`.
    fn term(&mut self, negate: bool) -> Result<Option<(Exponent, CycloNumber)>> {
        let start = self.pos;
        let mut coeff = CycloNumber::one();
        let mut exponent: Option<Exponent> = None;
        let mut atoms = 0;
        loop {
            self.skip_ws();
            if atoms > 0 && self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
            }
            let at = self.pos;
            let Some(c) = self.peek() else { break };
            match c {
                '0'..='9' => {
                    let n = self.digits().unwrap();
                    let mut lit = n;
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        match self.digits() {
                            Some(d) if d.bytes().any(|b| b != b'0') => lit = format!("{lit}/{d}"),
                            _ => return self.err(self.pos, "expected a nonzero denominator"),
                        }
                    }
                    coeff = &coeff * &CycloNumber::from_rational(rational_literal(&lit));
                }
                'i' => {
                    self.pos += 1;
                    coeff = &coeff * &CycloNumber::root_of_unity(4, 1);
                }
                'z' => {
                    self.pos += 1;
                    let Some(n) = self.digits() else {
                        return self.err(
                            self.pos,
                            "expected the order of the root of unity after `z`",
                        );
                    };
                    let n: u64 = n
                        .parse()
                        .or_else(|_| self.err(at, "root order too large"))?;
                    if n == 0 {
                        return self.err(at, "root of unity of order 0");
                    }
                    let k = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.signed_int()?
                    } else {
                        1
                    };
                    coeff = &coeff * &CycloNumber::root_of_unity(n, k);
                }
                'x' => {
                    self.pos += 1;
                    let e = self.x_exponent()?;
                    exponent = Some(exponent.map_or(e, |old| old + e));
                }
                '+' | '-' => break,
                other => return self.err(at, format!("unexpected `{other}` in factor")),
            }
            atoms += 1;
        }
        if atoms == 0 {
            return self.err(start, "expected a term");
        }
        if negate {
            coeff = -coeff;
        }
        match exponent {
            None if coeff.is_zero() => Ok(None),
            None => self.err(start, "constant term in an exponential factor"),
            Some(e) if e <= Exponent::zero() => {
                self.err(start, format!("exponent {e} is not positive"))
            }
            Some(e) => Ok(Some((e, coeff))),
        }
    }

    fn sum(&mut self) -> Result<ExpFactor> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err(0, "empty exponential factor");
        }
        let mut negate = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('-') => {
                    negate = !negate;
                    self.pos += 1;
                    continue;
                }
                Some('+') => {
                    self.pos += 1;
                    continue;
                }
                _ => {}
            }
            terms.extend(self.term(negate)?);
            negate = false;
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') | Some('-') => {}
                Some(c) => return self.err(self.pos, format!("unexpected `{c}`")),
            }
        }
        ExpFactor::from_terms(terms)
    }
}

/// Parses one exponential factor such as `"2/3*x^(3/2) - z3*x^(1/3)"`.
pub fn parse_factor(text: &str) -> Result<ExpFactor> {
    let chars: Vec<char> = text.chars().collect();
    FactorParser {
        chars: &chars,
        pos: 0,
    }
    .sum()
}

/// Canonical source text for an input; parsing it gives back the same input.
pub fn to_source(input: &ProblemInput) -> String {
    let mut s = String::from("infinity {\n");
    for c in input.infinity() {
        s.push_str(&format!(
            "  factor \"{}\" mult {} monodromy {}\n",
            c.circle.rep(),
            c.mult,
            c.monodromy
        ));
    }
    s.push_str("}\n");
    for p in input.tame_poles() {
        s.push_str(&format!("pole {} {}\n", p.location, p.class));
    }
    s
}
