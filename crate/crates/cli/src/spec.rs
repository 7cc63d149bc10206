//! The polytope specification language.
//!
//! ```text
//! spec    := polygon | simplex | product | wedge
//! polygon := "polygon:" INT          (m >= 3 edges)
//! simplex := "simplex:" INT          (n >= 2 facets, the simplex Δ^{n-1})
//! product := "product:(" spec ("," spec)* ")"
//! wedge   := "wedge:" INT "," INT    (polygon with r >= 3 edges, simplex with n >= 2 facets)
//! ```
//!
//! Whitespace between tokens is ignored. Rendering produces the canonical
//! form without whitespace.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use skelproj_core::CombinatorialType;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolytopeSpec {
    Polygon(usize),
    Simplex(usize),
    Product(Vec<PolytopeSpec>),
    Wedge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    /// Malformed text; `position` is a byte offset into the input.
    Syntax { position: usize, message: String },
    /// Well-formed text with out-of-range parameters.
    Invalid { position: usize, message: String },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Syntax { position, message } => write!(f, "parse error at position {position}: {message}"),
            SpecError::Invalid { position, message } => {
                write!(f, "invalid polytope at position {position}: {message}")
            }
        }
    }
}

impl std::error::Error for SpecError {}

pub fn parse_spec(text: &str) -> Result<PolytopeSpec, SpecError> {
    let mut p = Parser { text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), SpecError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected {token:?}")))
        }
    }

    /// An unsigned integer of at least `min`.
    fn int(&mut self, min: usize, what: &str) -> Result<usize, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax(format!("expected {what}")));
        }
        self.pos += digits;
        let value: usize = self.text[start..self.pos].parse().map_err(|_| SpecError::Invalid {
            position: start,
            message: format!("{what} is too large"),
        })?;
        if value < min {
            return Err(SpecError::Invalid {
                position: start,
                message: format!("{what} must be at least {min}, got {value}"),
            });
        }
        Ok(value)
    }

    fn spec(&mut self) -> Result<PolytopeSpec, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let word: String = self.text[start..].chars().take_while(char::is_ascii_alphabetic).collect();
        self.pos += word.len();
        match word.as_str() {
            "polygon" => {
                self.expect(":")?;
                Ok(PolytopeSpec::Polygon(self.int(3, "polygon edge count")?))
            }
            "simplex" => {
                self.expect(":")?;
                Ok(PolytopeSpec::Simplex(self.int(2, "simplex facet count")?))
            }
            "wedge" => {
                self.expect(":")?;
                let r = self.int(3, "wedge polygon size r")?;
                self.expect(",")?;
                let n = self.int(2, "wedge simplex size n")?;
                Ok(PolytopeSpec::Wedge(r, n))
            }
            "product" => {
                self.expect(":")?;
                self.expect("(")?;
                let mut factors = vec![self.spec()?];
                while self.eat(",") {
                    factors.push(self.spec()?);
                }
                self.expect(")")?;
                Ok(PolytopeSpec::Product(factors))
            }
            _ => {
                self.pos = start;
                Err(self.syntax("expected polygon, simplex, product or wedge"))
            }
        }
    }
}

impl PolytopeSpec {
    pub fn to_type(&self) -> skelproj_core::Result<CombinatorialType> {
        match self {
            PolytopeSpec::Polygon(m) => CombinatorialType::polygon(*m),
            PolytopeSpec::Simplex(n) => CombinatorialType::simplex(*n),
            PolytopeSpec::Wedge(r, n) => CombinatorialType::wedge(*r, *n),
            PolytopeSpec::Product(fs) => {
                CombinatorialType::product(fs.iter().map(PolytopeSpec::to_type).collect::<Result<_, _>>()?)
            }
        }
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeSpec::Polygon(m) => write!(f, "polygon:{m}"),
            PolytopeSpec::Simplex(n) => write!(f, "simplex:{n}"),
            PolytopeSpec::Wedge(r, n) => write!(f, "wedge:{r},{n}"),
            PolytopeSpec::Product(fs) => {
                f.write_str("product:(")?;
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for PolytopeSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        parse_spec(s)
    }
}

impl Serialize for PolytopeSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PolytopeSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_spec(&text).map_err(serde::de::Error::custom)
    }
}
