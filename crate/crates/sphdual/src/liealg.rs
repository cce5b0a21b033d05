//! Parser for reductive Lie algebras written in the notation of the dual-group
//! tables: `sl(n)`, `so(n)`, `sp(2n)`, `gl(n)`, `spin(n)`, `s(...)`, `t^k`,
//! exceptional labels, direct sums with `+` and powers such as `gl(2)^3`.
//!
//! Every expression evaluates to a [`CartanType`], so comparison is up to
//! isomorphism (`so(6) = sl(4)`, `sp(4) = so(5)`, `so(4) = sl(2)+sl(2)`).

use std::str::FromStr;

use thiserror::Error;

use crate::cartan::{CartanType, Series, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}` at byte {pos}: {msg}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

/// Parses a Table-3 style expression.
pub fn parse(s: &str) -> Result<CartanType, ParseError> {
    let mut p = Parser {
        src: s,
        bytes: s.as_bytes(),
        pos: 0,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    v.into_type().map_err(|m| p.err(&m))
}

/// Whether two expressions denote isomorphic Lie algebras.
pub fn same(a: &str, b: &str) -> Result<bool, ParseError> {
    Ok(parse(a)? == parse(b)?)
}

/// Intermediate value: torus rank may go negative inside `s(...)` only
/// transiently.
#[derive(Debug, Clone, Default)]
struct Value {
    simple: Vec<SimpleType>,
    torus: i64,
}

impl Value {
    fn add(mut self, o: Value) -> Value {
        self.simple.extend(o.simple);
        self.torus += o.torus;
        self
    }

    fn simple(series: Series, rank: usize) -> Value {
        let mut v = Value::default();
        match (series, rank) {
            (_, 0) => {}
            (Series::B | Series::C, 1) => v.simple.push(SimpleType::new(Series::A, 1)),
            (Series::C, 2) => v.simple.push(SimpleType::new(Series::B, 2)),
            (Series::D, 1) => v.torus = 1,
            (Series::D, 2) => v.simple.extend([SimpleType::new(Series::A, 1); 2]),
            (Series::D, 3) => v.simple.push(SimpleType::new(Series::A, 3)),
            _ => v.simple.push(SimpleType::new(series, rank)),
        }
        v
    }

    fn into_type(self) -> Result<CartanType, String> {
        let torus = usize::try_from(self.torus).map_err(|_| "negative torus rank".to_string())?;
        Ok(CartanType::new(self.simple, torus))
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let braced = self.eat(b'{');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let n = self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected an integer"))?;
        if braced {
            self.expect(b'}')?;
        }
        Ok(n)
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphabetic()
                || (self.pos > start && self.bytes[self.pos].is_ascii_digit()))
        {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn sum(&mut self) -> Result<Value, ParseError> {
        let mut v = self.term()?;
        while self.eat(b'+') {
            v = v.add(self.term()?);
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let start = self.pos;
        let name = self.ident().to_string();
        if name == "t" {
            let k = if self.eat(b'^') { self.int()? } else { 1 };
            return Ok(Value {
                simple: vec![],
                torus: k as i64,
            });
        }
        let v = match name.as_str() {
            "" => {
                self.skip_ws();
                if self.bytes.get(self.pos) == Some(&b'0') {
                    self.pos += 1;
                    Value::default()
                } else {
                    return Err(self.err("expected a Lie algebra"));
                }
            }
            "s" => {
                self.expect(b'(')?;
                let mut inner = self.sum()?;
                self.expect(b')')?;
                inner.torus -= 1;
                inner
            }
            "sl" | "gl" | "so" | "spin" | "sp" => {
                self.expect(b'(')?;
                let k = self.int()?;
                self.expect(b')')?;
                match name.as_str() {
                    "sl" => Value::simple(Series::A, k.saturating_sub(1)),
                    "gl" => {
                        let mut v = Value::simple(Series::A, k.saturating_sub(1));
                        v.torus += i64::from(k > 0);
                        v
                    }
                    "sp" => {
                        if k % 2 == 1 {
                            return Err(self.err("sp(n) needs even n"));
                        }
                        Value::simple(Series::C, k / 2)
                    }
                    _ if k % 2 == 1 => Value::simple(Series::B, k / 2),
                    _ => Value::simple(Series::D, k / 2),
                }
            }
            other => {
                let t = SimpleType::from_str(other).map_err(|_| {
                    self.pos = start;
                    self.err(&format!("unknown algebra `{other}`"))
                })?;
                Value::simple(t.series, t.rank)
            }
        };
        if self.eat(b'^') {
            let k = self.int()?;
            let mut out = Value::default();
            for _ in 0..k {
                out = out.add(v.clone());
            }
            return Ok(out);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> String {
        parse(s).unwrap().to_string()
    }

    #[test]
    fn classical_names() {
        assert_eq!(t("sl(3)"), "A2");
        assert_eq!(t("so(9)"), "B4");
        assert_eq!(t("sp(6)"), "C3");
        assert_eq!(t("so(8)"), "D4");
        assert_eq!(t("spin(7)"), "B3");
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(t("so(3)"), "A1");
        assert_eq!(t("sp(2)"), "A1");
        assert_eq!(t("so(4)"), "A1+A1");
        assert_eq!(t("sp(4)"), "B2");
        assert_eq!(t("so(5)"), "B2");
        assert_eq!(t("so(6)"), "A3");
        assert_eq!(t("so(2)"), "t^1");
        assert_eq!(t("so(1)"), "0");
        assert!(same("sl(2)+so(2)", "gl(2)").unwrap());
    }

    #[test]
    fn sums_powers_and_traceless() {
        assert_eq!(t("s(gl(3)+gl(3))"), "A2+A2+t^1");
        assert_eq!(t("s(gl(2)^3)"), "A1+A1+A1+t^2");
        assert_eq!(t("sl(2)^2+t^1"), "A1+A1+t^1");
        assert_eq!(t("E6+t^{2}"), "E6+t^2");
        assert_eq!(t("s(gl(4)+t^2)"), "A3+t^2");
        assert_eq!(t("0"), "0");
        assert_eq!(t("t^0"), "0");
    }

    #[test]
    fn errors_carry_position() {
        let e = parse("sl(3)+xx(2)").unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(parse("sp(3)").is_err());
        assert!(parse("s(0)").is_err());
        assert!(parse("sl(2) sl(2)").is_err());
    }
}
