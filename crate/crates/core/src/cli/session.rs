//! Session files: one `gwa { ... }` header followed by `module` and
//! `element` definitions.

use std::fmt;

use num_rational::Rational64;

use crate::error::Error;
use crate::params::GwaParams;
use crate::picard::{ExprError, PicardElement};
use crate::simples::SimpleModule;
use crate::structure::{Letter, StructureSequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Parse(ParseError),
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn at_start(message: impl Into<String>) -> CliError {
        CliError::Parse(ParseError { line: 1, column: 1, message: message.into() })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error at {e}"),
            CliError::Domain(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => CliError::at_start(msg),
            other => CliError::Domain(other),
        }
    }
}

const RESERVED: [&str; 8] = ["A", "identity", "S", "H", "w", "i", "i0", "im"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub params: GwaParams,
    pub modules: Vec<(String, StructureSequence)>,
    pub elements: Vec<(String, PicardElement)>,
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.text[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, CliError> {
        let (line, column) = self.location(pos);
        Err(CliError::Parse(ParseError { line, column, message: message.into() }))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, CliError> {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip(&mut self) {
        loop {
            let rest = self.rest();
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip();
        self.rest().is_empty()
    }

    fn expect(&mut self, token: &str) -> Result<(), CliError> {
        self.skip();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.error(format!("expected `{token}`"))
        }
    }

    fn peek_is(&mut self, token: &str) -> bool {
        self.skip();
        self.rest().starts_with(token)
    }

    fn ident(&mut self) -> Result<&'a str, CliError> {
        self.skip();
        let rest = self.rest();
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return self.error("expected a name");
        }
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        Ok(&rest[..len])
    }

    fn integer(&mut self) -> Result<i64, CliError> {
        self.skip();
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        let value = rest[..sign + digits].parse().or_else(|_| self.error("integer out of range"))?;
        self.pos += sign + digits;
        Ok(value)
    }

    /// The raw text up to the brace closing an already consumed `{`.
    fn braced_body(&mut self) -> Result<(usize, &'a str), CliError> {
        let start = self.pos;
        let mut depth = 1;
        for (i, c) in self.rest().char_indices() {
            match c {
                '{' => depth += 1,
                '}' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos = start + i + 1;
                        return Ok((start, &self.text[start..start + i]));
                    }
                }
                _ => {}
            }
        }
        self.error_at(start, "unclosed `{`")
    }
}

impl Session {
    pub fn parse(text: &str) -> Result<Session, CliError> {
        let mut sc = Scanner { text, pos: 0 };
        if sc.at_end() {
            return sc.error("empty session: expected `gwa { m = ... }`");
        }
        let head = sc.pos;
        if sc.ident()? != "gwa" {
            return sc.error_at(head, "session must start with `gwa { m = ... }`");
        }
        sc.expect("{")?;
        sc.skip();
        let m_pos = sc.pos;
        if sc.ident()? != "m" {
            return sc.error_at(m_pos, "expected `m`");
        }
        sc.expect("=")?;
        let params = Session::parse_params(&mut sc)?;
        sc.expect("}")?;

        let mut session = Session { params, modules: Vec::new(), elements: Vec::new() };
        while !sc.at_end() {
            let kw_pos = sc.pos;
            match sc.ident()? {
                "module" => {
                    sc.skip();
                    let name_pos = sc.pos;
                    let (name, module) = Session::parse_module(&mut sc, params)?;
                    session.check_new_name(&sc, &name, name_pos)?;
                    session.modules.push((name, module));
                }
                "element" => {
                    sc.skip();
                    let name_pos = sc.pos;
                    let name = sc.ident()?.to_string();
                    session.check_new_name(&sc, &name, name_pos)?;
                    sc.expect("{")?;
                    let (body_pos, body) = sc.braced_body()?;
                    let element = session.parse_element_at(&sc, body_pos, body)?;
                    session.elements.push((name, element));
                }
                "gwa" => return sc.error_at(kw_pos, "only one `gwa` header is allowed"),
                other => return sc.error_at(kw_pos, format!("unknown statement `{other}`")),
            }
        }
        Ok(session)
    }

    fn parse_params(sc: &mut Scanner) -> Result<GwaParams, CliError> {
        sc.skip();
        let pos = sc.pos;
        if sc.peek_is("generic") {
            sc.ident()?;
            return Ok(GwaParams::Generic);
        }
        let num = sc.integer()?;
        let value = if sc.peek_is("/") {
            sc.expect("/")?;
            sc.skip();
            let den_pos = sc.pos;
            if sc.integer()? != 2 || num % 2 == 0 {
                return sc.error_at(den_pos, "only half-integers `<odd>/2` are accepted as fractions");
            }
            Rational64::new(num, 2)
        } else {
            Rational64::from_integer(num)
        };
        GwaParams::from_rational(value).or_else(|e| sc.error_at(pos, e.to_string()))
    }

    fn parse_module(sc: &mut Scanner, params: GwaParams) -> Result<(String, StructureSequence), CliError> {
        let name = sc.ident()?.to_string();
        sc.expect("{")?;
        sc.skip();
        let kw = sc.pos;
        if sc.ident()? != "window" {
            return sc.error_at(kw, "expected `window`");
        }
        sc.expect("=")?;
        let lo = sc.integer()?;
        sc.expect("..")?;
        sc.skip();
        let hi_pos = sc.pos;
        let hi = sc.integer()?;
        if hi < lo {
            return sc.error_at(hi_pos, "window must satisfy lo <= hi");
        }
        sc.expect(";")?;
        let kw = {
            sc.skip();
            sc.pos
        };
        if sc.ident()? != "letters" {
            return sc.error_at(kw, "expected `letters`");
        }
        sc.expect("=")?;
        let mut letters = Vec::new();
        sc.skip();
        while !sc.peek_is("}") {
            if !letters.is_empty() {
                sc.expect(",")?;
            }
            sc.skip();
            let pos = sc.pos;
            let letter = if sc.peek_is("1") {
                sc.pos += 1;
                Letter::One
            } else if sc.peek_is("f") {
                sc.pos += 1;
                Letter::F
            } else if sc.peek_is("z") {
                sc.pos += 1;
                if sc.peek_is("+") {
                    sc.expect("+")?;
                    sc.expect("m")?;
                    Letter::Zm
                } else {
                    Letter::Z
                }
            } else {
                return sc.error_at(pos, "expected a letter `1`, `z`, `z+m` or `f`");
            };
            letters.push(letter);
        }
        let close = sc.pos;
        sc.expect("}")?;
        if letters.len() as i64 != hi - lo {
            return sc.error_at(
                close,
                format!("window {lo}..{hi} needs {} letters, found {}", hi - lo, letters.len()),
            );
        }
        Ok((name, StructureSequence::from_window(params, lo, letters)))
    }

    fn check_new_name(&self, sc: &Scanner, name: &str, pos: usize) -> Result<(), CliError> {
        let taken = RESERVED.contains(&name)
            || self.modules.iter().any(|(n, _)| n == name)
            || self.elements.iter().any(|(n, _)| n == name);
        if taken {
            return sc.error_at(pos, format!("name `{name}` already used or reserved"));
        }
        Ok(())
    }

    fn parse_element_at(&self, sc: &Scanner, body_pos: usize, body: &str) -> Result<PicardElement, CliError> {
        match PicardElement::parse(self.params, body, &|n| self.lookup_element(n)) {
            Ok(g) => Ok(g),
            Err(ExprError::Syntax { offset, message }) => sc.error_at(body_pos + offset, message),
            Err(ExprError::Domain(e)) => Err(CliError::Domain(e)),
        }
    }

    fn lookup_element(&self, name: &str) -> Option<PicardElement> {
        self.elements.iter().find(|(n, _)| n == name).map(|(_, g)| g.clone())
    }

    /// A module by name; `A` and `A<n>` are always available.
    pub fn module(&self, name: &str) -> Result<StructureSequence, CliError> {
        let name = name.trim();
        if name == "A" {
            return Ok(StructureSequence::free_module(self.params, 0));
        }
        if let Some(inner) = name.strip_prefix("A<").and_then(|r| r.strip_suffix('>')) {
            return match inner.trim().parse() {
                Ok(n) => Ok(StructureSequence::free_module(self.params, n)),
                Err(_) => Err(CliError::at_start(format!("bad shift in `{name}`"))),
            };
        }
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| CliError::at_start(format!("unknown module `{name}`")))
    }

    pub fn simple(&self, text: &str) -> Result<SimpleModule, CliError> {
        Ok(SimpleModule::parse(self.params, text)?)
    }

    /// A Picard expression over the session's elements.
    pub fn element(&self, text: &str) -> Result<PicardElement, CliError> {
        match PicardElement::parse(self.params, text, &|n| self.lookup_element(n)) {
            Ok(g) => Ok(g),
            Err(ExprError::Syntax { offset, message }) => {
                let sc = Scanner { text, pos: 0 };
                sc.error_at(offset.min(text.len()), message)
            }
            Err(ExprError::Domain(e)) => Err(CliError::Domain(e)),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("gwa {{ {} }}\n", self.params);
        for (name, m) in &self.modules {
            out.push_str(&format!("module {name} {{ {m} }}\n"));
        }
        for (name, g) in &self.elements {
            out.push_str(&format!("element {name} {{ {g} }}\n"));
        }
        out
    }
}
