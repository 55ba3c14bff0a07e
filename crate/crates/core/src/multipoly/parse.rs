use crate::arith::{Field, FieldDescriptor};
use crate::error::{Error, Result};

use super::{MultiPoly, PolyRing};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn set_pos(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        let found = self.src[self.pos..].chars().next().map_or("end of input".to_string(), |c| format!("`{c}`"));
        Error::Syntax { pos: self.pos, msg: format!("{}, found {found}", msg.into()) }
    }

    pub(crate) fn integer(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    pub(crate) fn small_integer(&mut self) -> Result<u64> {
        let start = self.pos;
        let s = self.integer()?;
        s.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer `{s}` out of range") })
    }

    pub(crate) fn identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            return Err(self.error("expected an identifier"));
        }
        self.pos = start + len;
        Ok(self.src[start..self.pos].to_string())
    }
}

/// Recursive-descent parser for polynomial expressions with `+ - * / ^`,
/// parentheses and implicit multiplication. Identifier runs such as `xy`
/// are split greedily into declared variable names.
pub(crate) struct PolyParser<'r, F: Field> {
    ring: &'r PolyRing<F>,
    extension_generator: bool,
}

impl<'r, F: Field> PolyParser<'r, F> {
    pub(crate) fn new(ring: &'r PolyRing<F>) -> Self {
        let extension_generator =
            matches!(ring.field().descriptor(), FieldDescriptor::Extension { .. }) && ring.var_index("t").is_none();
        PolyParser { ring, extension_generator }
    }

    pub(crate) fn expr(&self, cur: &mut Cursor<'_>) -> Result<MultiPoly<F>> {
        let mut acc = match cur.peek() {
            Some('-') => {
                cur.eat('-');
                self.term(cur)?.neg()
            }
            Some('+') => {
                cur.eat('+');
                self.term(cur)?
            }
            _ => self.term(cur)?,
        };
        loop {
            if cur.eat('+') {
                acc = acc.add_unchecked(&self.term(cur)?);
            } else if cur.eat('-') {
                acc = acc.add_unchecked(&self.term(cur)?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(c: Option<char>) -> bool {
        matches!(c, Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn term(&self, cur: &mut Cursor<'_>) -> Result<MultiPoly<F>> {
        let mut acc = self.factor(cur)?;
        loop {
            if cur.eat('*') {
                acc = acc.mul_unchecked(&self.factor(cur)?);
            } else if cur.peek() == Some('/') {
                let at = cur.pos();
                cur.eat('/');
                let d = self.factor(cur)?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Syntax { pos: at, msg: "can only divide by a nonzero constant".into() });
                }
                let inv = self.ring.field().inv(&d.coeff(&super::Monomial::one(self.ring.nvars())))?;
                acc = acc.scale(&inv);
            } else if Self::starts_factor(cur.peek()) {
                acc = acc.mul_unchecked(&self.factor(cur)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&self, cur: &mut Cursor<'_>) -> Result<MultiPoly<F>> {
        let base = match cur.peek() {
            Some('(') => {
                cur.eat('(');
                let inner = self.expr(cur)?;
                cur.expect(')')?;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = cur.integer()?;
                self.ring.constant(self.ring.field().parse(&digits)?)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => return self.identifier_run(cur),
            _ => return Err(cur.error("expected a number, variable or `(`")),
        };
        self.maybe_power(cur, base)
    }

    fn maybe_power(&self, cur: &mut Cursor<'_>, base: MultiPoly<F>) -> Result<MultiPoly<F>> {
        if cur.eat('^') {
            let e = cur.small_integer()?;
            Ok(base.pow(e as u32))
        } else {
            Ok(base)
        }
    }

    /// Split `xyz^2` into `x * y * z^2` against the declared names.
    fn identifier_run(&self, cur: &mut Cursor<'_>) -> Result<MultiPoly<F>> {
        let word = cur.identifier()?;
        let mut pieces: Vec<MultiPoly<F>> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let rest = &word[i..];
            let best = self
                .ring
                .vars()
                .iter()
                .enumerate()
                .filter(|(_, v)| rest.starts_with(v.as_str()))
                .max_by_key(|(_, v)| v.len());
            match best {
                Some((idx, v)) => {
                    pieces.push(self.ring.variable(idx));
                    i += v.len();
                }
                None if self.extension_generator && rest.starts_with('t') => {
                    pieces.push(self.ring.constant(self.ring.field().parse("t")?));
                    i += 1;
                }
                None => return Err(Error::UnknownVariable(rest.to_string())),
            }
        }
        let last = pieces.pop().expect("identifier is nonempty");
        let last = self.maybe_power(cur, last)?;
        Ok(pieces.into_iter().fold(last, |acc, p| acc.mul_unchecked(&p)))
    }
}

/// Parse a polynomial in the variables of `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<MultiPoly<F>> {
    let mut cur = Cursor::new(text);
    let p = PolyParser::new(ring).expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(p)
}
