//! Ket-sum syntax for exact states.
//!
//! Accepts linear combinations such as
//!
//! ```text
//! |0000>
//! (1/sqrt2)(|1110> - |1101>)
//! 1/2(|1111> + |1100> - |0011> - |0000>)
//! 1/(2sqrt2)(|1110> + i|1101> - ...)
//! ```
//!
//! Both `>` and `⟩` close a ket. Coefficients are built from integers, `i`,
//! `sqrt2`, products (juxtaposition or `*`), quotients and parentheses, as
//! long as every value stays of the form `z / (√2)^e` with `z` a Gaussian
//! integer.

use crate::error::{Error, Result};
use crate::exact_state::{canonicalize, ExactState, GaussianInt, RawState, DIM};

/// Parses a ket-sum expression into a canonical state.
pub fn parse_state(input: &str) -> Result<ExactState> {
    let err = |reason: String| Error::Parse {
        what: "state",
        input: input.to_string(),
        reason,
    };
    let tokens = tokenize(input).map_err(err)?;
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.sum().map_err(err)?;
    if parser.pos != parser.tokens.len() {
        return Err(err(format!("unexpected trailing token {:?}", parser.tokens[parser.pos])));
    }
    let Value::Vector(v) = value else {
        return Err(err("expression has no ket".into()));
    };
    canonicalize(&RawState {
        amps: v.amps,
        k: v.exp,
    })
}

/// Formats a state in the syntax accepted by [`parse_state`].
pub fn format_state(state: &ExactState) -> String {
    let terms: Vec<(usize, GaussianInt)> = (0..DIM)
        .map(|b| (b, state.amp(b)))
        .filter(|(_, z)| !z.is_zero())
        .collect();
    let mut body = String::new();
    for (n, (b, z)) in terms.iter().enumerate() {
        let (sign, coef) = split_sign(*z);
        if n == 0 {
            if sign {
                body.push('-');
            }
        } else {
            body.push_str(if sign { " - " } else { " + " });
        }
        body.push_str(&coef);
        body.push_str(&format!("|{b:04b}>"));
    }
    let prefix = match state.k() {
        0 => String::new(),
        1 => "1/sqrt2".to_string(),
        k if k % 2 == 0 => format!("1/{}", 1u64 << (k / 2)),
        k => format!("1/({}sqrt2)", 1u64 << (k / 2)),
    };
    if prefix.is_empty() {
        body
    } else {
        format!("({prefix})({body})")
    }
}

/// Splits off an overall minus sign; returns the remaining coefficient text
/// (empty for 1).
fn split_sign(z: GaussianInt) -> (bool, String) {
    match (z.re, z.im) {
        (1, 0) => (false, String::new()),
        (-1, 0) => (true, String::new()),
        (0, 1) => (false, "i".into()),
        (0, -1) => (true, "i".into()),
        (re, 0) if re < 0 => (true, format!("{}", -re)),
        (re, 0) => (false, format!("{re}")),
        (0, im) if im < 0 => (true, format!("{}i", -im)),
        (0, im) => (false, format!("{im}i")),
        (re, im) if re < 0 => (true, format!("({})", GaussianInt::new(-re, -im))),
        _ => (false, format!("({z})")),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(i64),
    I,
    Sqrt2,
    Ket(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(input: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            'i' => {
                out.push(Token::I);
                i += 1;
            }
            '√' => {
                if chars.get(i + 1) != Some(&'2') {
                    return Err("only √2 is supported".into());
                }
                out.push(Token::Sqrt2);
                i += 2;
            }
            's' => {
                let word: String = chars[i..].iter().take(5).collect();
                if word != "sqrt2" {
                    return Err(format!("unknown word at position {i}"));
                }
                out.push(Token::Sqrt2);
                i += 5;
            }
            '|' => {
                let mut j = i + 1;
                let mut b = 0usize;
                let mut len = 0;
                while j < chars.len() && (chars[j] == '0' || chars[j] == '1') {
                    b = 2 * b + (chars[j] as usize - '0' as usize);
                    len += 1;
                    j += 1;
                }
                if len != 4 {
                    return Err(format!("ket at position {i} must have 4 binary digits"));
                }
                match chars.get(j) {
                    Some('>') | Some('⟩') => {}
                    _ => return Err(format!("unterminated ket at position {i}")),
                }
                out.push(Token::Ket(b));
                i = j + 1;
            }
            c if c.is_ascii_digit() => {
                let mut n: i64 = 0;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(chars[i] as i64 - '0' as i64))
                        .ok_or("number too large")?;
                    i += 1;
                }
                out.push(Token::Num(n));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

/// `z / (√2)^exp`
#[derive(Clone, Copy, Debug)]
struct Scalar {
    z: GaussianInt,
    exp: u32,
}

#[derive(Clone, Copy, Debug)]
struct Vector {
    amps: [GaussianInt; DIM],
    exp: u32,
}

// parse values are short-lived; boxing the vector buys nothing
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Copy, Debug)]
enum Value {
    Scalar(Scalar),
    Vector(Vector),
}

impl Scalar {
    fn int(z: GaussianInt) -> Self {
        Self { z, exp: 0 }
    }

    fn sqrt2() -> Self {
        // √2 = 2 / √2
        Self {
            z: GaussianInt::new(2, 0),
            exp: 1,
        }
    }

    fn mul(self, rhs: Self) -> Self {
        Self {
            z: self.z * rhs.z,
            exp: self.exp + rhs.exp,
        }
    }

    /// `self / rhs`, defined when `rhs.z` is a unit times a power of two or
    /// divides `self.z` exactly.
    fn div(self, rhs: Self) -> std::result::Result<Self, String> {
        if rhs.z.is_zero() {
            return Err("division by zero".into());
        }
        // a/√2^e ÷ c/√2^f = a·√2^f / (c·√2^e)
        let mut num = self.z;
        let mut exp = self.exp as i64 - rhs.exp as i64;
        let mut den = rhs.z;
        // Move powers of two from the denominator into the √2 exponent.
        while den.re % 2 == 0 && den.im % 2 == 0 {
            den = GaussianInt::new(den.re / 2, den.im / 2);
            exp += 2;
        }
        num = num
            .div_exact(den)
            .ok_or_else(|| format!("cannot divide by {}", rhs.z))?;
        while exp < 0 {
            num = num * GaussianInt::new(2, 0);
            exp += 2;
        }
        Ok(Self { z: num, exp: exp as u32 })
    }

    fn neg(self) -> Self {
        Self { z: -self.z, exp: self.exp }
    }
}

impl Vector {
    fn ket(b: usize) -> Self {
        let mut amps = [GaussianInt::ZERO; DIM];
        amps[b] = GaussianInt::ONE;
        Self { amps, exp: 0 }
    }

    fn scale(self, s: Scalar) -> Self {
        Self {
            amps: self.amps.map(|z| z * s.z),
            exp: self.exp + s.exp,
        }
    }

    /// Raises the exponent by an even amount.
    fn with_exp(self, exp: u32) -> std::result::Result<Self, String> {
        let diff = exp - self.exp;
        if !diff.is_multiple_of(2) {
            return Err("terms mix coefficients with and without a factor of √2".into());
        }
        let factor = GaussianInt::new(1 << (diff / 2), 0);
        Ok(Self {
            amps: self.amps.map(|z| z * factor),
            exp,
        })
    }

    fn add(self, rhs: Self) -> std::result::Result<Self, String> {
        let exp = self.exp.max(rhs.exp);
        let (a, b) = (self.with_exp(exp)?, rhs.with_exp(exp)?);
        let mut amps = a.amps;
        for (x, y) in amps.iter_mut().zip(b.amps) {
            *x = *x + y;
        }
        Ok(Self { amps, exp })
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn sum(&mut self) -> PResult<Value> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.product()?;
        if negate {
            acc = negate_value(acc);
        }
        loop {
            let sign = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let mut rhs = self.product()?;
            if sign {
                rhs = negate_value(rhs);
            }
            acc = match (acc, rhs) {
                (Value::Vector(a), Value::Vector(b)) => Value::Vector(a.add(b)?),
                (Value::Scalar(a), Value::Scalar(b)) if a.exp == b.exp => Value::Scalar(Scalar {
                    z: a.z + b.z,
                    exp: a.exp,
                }),
                (Value::Scalar(_), Value::Scalar(_)) => {
                    return Err("cannot add scalars with different √2 powers".into())
                }
                _ => return Err("cannot add a scalar to a ket".into()),
            };
        }
        Ok(acc)
    }

    /// Juxtaposition and `*` bind looser than `/`, so `1/2(|0>+|1>)` reads
    /// as `(1/2)·(|0>+|1>)`.
    fn product(&mut self) -> PResult<Value> {
        let mut acc = self.quotient()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                Some(Token::Num(_) | Token::I | Token::Sqrt2 | Token::Ket(_) | Token::Open) => {}
                _ => break,
            }
            let rhs = self.quotient()?;
            acc = multiply(acc, rhs)?;
        }
        Ok(acc)
    }

    fn quotient(&mut self) -> PResult<Value> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Slash) {
            self.pos += 1;
            let Value::Scalar(den) = self.divisor()? else {
                return Err("cannot divide by a ket".into());
            };
            acc = match acc {
                Value::Scalar(s) => Value::Scalar(s.div(den)?),
                Value::Vector(v) => {
                    let inv = Scalar::int(GaussianInt::ONE).div(den)?;
                    Value::Vector(v.scale(inv))
                }
            };
        }
        Ok(acc)
    }

    /// Right operand of `/`: an atom, plus an immediately following `sqrt2`
    /// so that `1/2sqrt2` means `1/(2√2)`.
    fn divisor(&mut self) -> PResult<Value> {
        let mut v = self.atom()?;
        while self.peek() == Some(&Token::Sqrt2) {
            self.pos += 1;
            v = multiply(v, Value::Scalar(Scalar::sqrt2()))?;
        }
        Ok(v)
    }

    fn atom(&mut self) -> PResult<Value> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(Value::Scalar(Scalar::int(GaussianInt::new(n, 0)))),
            Some(Token::I) => Ok(Value::Scalar(Scalar::int(GaussianInt::I))),
            Some(Token::Sqrt2) => Ok(Value::Scalar(Scalar::sqrt2())),
            Some(Token::Ket(b)) => Ok(Value::Vector(Vector::ket(b))),
            Some(Token::Minus) => Ok(negate_value(self.atom()?)),
            Some(Token::Open) => {
                let inner = self.sum()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err("missing closing parenthesis".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

fn negate_value(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(s.neg()),
        Value::Vector(v) => Value::Vector(Vector {
            amps: v.amps.map(|z| -z),
            exp: v.exp,
        }),
    }
}

fn multiply(a: Value, b: Value) -> PResult<Value> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x.mul(y))),
        (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
            Ok(Value::Vector(v.scale(s)))
        }
        (Value::Vector(_), Value::Vector(_)) => Err("cannot multiply two kets".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amps_of(s: &ExactState) -> Vec<(usize, GaussianInt)> {
        (0..DIM)
            .map(|b| (b, s.amp(b)))
            .filter(|(_, z)| !z.is_zero())
            .collect()
    }

    #[test]
    fn single_ket() {
        assert_eq!(parse_state("|0000>").unwrap(), ExactState::zero());
        assert_eq!(parse_state("|0001⟩").unwrap(), ExactState::basis(1));
        assert_eq!(parse_state("-i|1111>").unwrap(), ExactState::basis(15).times_i_pow(3));
    }

    #[test]
    fn bell_like_sum() {
        let s = parse_state("(1/sqrt2)(|1110> - |1101>)").unwrap();
        assert_eq!(s.k(), 1);
        assert_eq!(
            amps_of(&s),
            vec![(13, GaussianInt::new(-1, 0)), (14, GaussianInt::ONE)]
        );
        let t = parse_state("1/√2 (|1110⟩ − |1101⟩)").unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn half_prefix_without_parentheses() {
        let s = parse_state("1/2(|1111>+|1100>-|0011>-|0000>)").unwrap();
        assert_eq!(s.k(), 2);
        assert_eq!(s.amp(15), GaussianInt::ONE);
        assert_eq!(s.amp(0), GaussianInt::new(-1, 0));
    }

    #[test]
    fn two_root_two_prefix() {
        let text = "1/(2sqrt2)(|1110>+|1101>+|1011>-|1000>+|0111>-|0100>-|0010>-|0001>)";
        let s = parse_state(text).unwrap();
        assert_eq!(s.k(), 3);
        assert_eq!(s.support_mask().count_ones(), 8);
        assert_eq!(parse_state("1/2sqrt2(|1110>+|1101>+|1011>-|1000>+|0111>-|0100>-|0010>-|0001>)").unwrap(), s);
    }

    #[test]
    fn per_term_coefficients() {
        let s = parse_state("1/sqrt2 |0000> + i/sqrt2 |1000>").unwrap();
        assert_eq!(s.amp(8), GaussianInt::I);
        assert_eq!(s.k(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_state("|000>").is_err());
        assert!(parse_state("(1/sqrt2)(|0000>").is_err());
        assert!(parse_state("1/sqrt2").is_err());
        assert!(parse_state("|0000> + |0001>").is_err()); // not normalized
        assert!(parse_state("1/2(|0101>+|0101>-|0011>-|0000>)").is_err());
        assert!(parse_state("1/3|0000>").is_err());
    }

    #[test]
    fn format_round_trips() {
        for text in [
            "|0000>",
            "(1/sqrt2)(|1101> - |1110>)",
            "(1/2)(-|0000> + i|0011> + |1100> + |1111>)",
            "(1/sqrt2)((1+i)|0110>)",
        ] {
            let s = parse_state(text).unwrap();
            assert_eq!(parse_state(&format_state(&s)).unwrap(), s, "{text}");
        }
        let s = parse_state("(1/sqrt2)(|1110> - |1101>)").unwrap();
        assert_eq!(format_state(&s), "(1/sqrt2)(-|1101> + |1110>)");
    }
}
