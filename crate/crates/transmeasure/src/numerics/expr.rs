//! A small expression grammar for entering constants like `pi*i`, `log(2)`,
//! `1/2`, `e^2` on the command line. Evaluation is certified: the result is a
//! complex rectangle at the requested working precision.

use super::complex::{exp_complex, CertifiedComplex};
use super::consts::{e_const, ln_interval, pi, sqrt_interval};
use super::interval::CertifiedReal;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
pub enum ThetaExpr {
    Number(BigRational),
    Pi,
    E,
    ImaginaryUnit,
    Neg(Box<ThetaExpr>),
    Add(Box<ThetaExpr>, Box<ThetaExpr>),
    Sub(Box<ThetaExpr>, Box<ThetaExpr>),
    Mul(Box<ThetaExpr>, Box<ThetaExpr>),
    Div(Box<ThetaExpr>, Box<ThetaExpr>),
    Pow(Box<ThetaExpr>, u32),
    Log(Box<ThetaExpr>),
    Exp(Box<ThetaExpr>),
    Sqrt(Box<ThetaExpr>),
}

impl ThetaExpr {
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser {
            chars: input.chars().collect(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!(
                "trailing input at position {} in `{input}`",
                p.pos
            )));
        }
        Ok(e)
    }

    pub fn eval(&self, bits: u32) -> Result<CertifiedComplex> {
        Ok(match self {
            ThetaExpr::Number(r) => CertifiedComplex::exact_rational(r),
            ThetaExpr::Pi => CertifiedComplex::from_real(pi(bits)),
            ThetaExpr::E => CertifiedComplex::from_real(e_const(bits)),
            ThetaExpr::ImaginaryUnit => {
                CertifiedComplex::new(CertifiedReal::zero(), CertifiedReal::one())
            }
            ThetaExpr::Neg(a) => a.eval(bits)?.neg(),
            ThetaExpr::Add(a, b) => a.eval(bits)?.add(&b.eval(bits)?),
            ThetaExpr::Sub(a, b) => a.eval(bits)?.sub(&b.eval(bits)?),
            ThetaExpr::Mul(a, b) => a.eval(bits)?.mul(&b.eval(bits)?).round_out(bits),
            ThetaExpr::Div(a, b) => a
                .eval(bits)?
                .div(&b.eval(bits)?)
                .ok_or_else(|| {
                    Error::InvalidInstance("division by an interval containing 0".into())
                })?
                .round_out(bits),
            ThetaExpr::Pow(a, n) => a.eval(bits)?.powi(*n as i64)?.round_out(bits),
            ThetaExpr::Log(a) => {
                let v = a.eval(bits)?;
                if !v.is_real_certain() {
                    return Err(Error::InvalidInstance(
                        "log argument must be exactly real here".into(),
                    ));
                }
                CertifiedComplex::from_real(ln_interval(&v.re, bits)?)
            }
            ThetaExpr::Exp(a) => exp_complex(&a.eval(bits)?, bits),
            ThetaExpr::Sqrt(a) => {
                let v = a.eval(bits)?;
                if !v.is_real_certain() {
                    return Err(Error::InvalidInstance(
                        "sqrt argument must be exactly real here".into(),
                    ));
                }
                CertifiedComplex::from_real(sqrt_interval(&v.re, bits)?)
            }
        })
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<ThetaExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = ThetaExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some('-') => {
                    self.bump();
                    acc = ThetaExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ThetaExpr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = ThetaExpr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some('/') => {
                    self.bump();
                    acc = ThetaExpr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ThetaExpr> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(ThetaExpr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let n = self.uint()?;
            base = ThetaExpr::Pow(Box::new(base), n);
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected an exponent".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("bad exponent {s}")))
    }

    fn atom(&mut self) -> Result<ThetaExpr> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "pi" => Ok(ThetaExpr::Pi),
                    "e" => Ok(ThetaExpr::E),
                    "i" => Ok(ThetaExpr::ImaginaryUnit),
                    "log2" | "ln2" => Ok(ThetaExpr::Log(Box::new(ThetaExpr::Number(
                        BigRational::from_integer(BigInt::from(2)),
                    )))),
                    "log" | "ln" => Ok(ThetaExpr::Log(Box::new(self.call_arg()?))),
                    "exp" => Ok(ThetaExpr::Exp(Box::new(self.call_arg()?))),
                    "sqrt" => Ok(ThetaExpr::Sqrt(Box::new(self.call_arg()?))),
                    other => Err(Error::UnknownConstant(other.to_string())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn call_arg(&mut self) -> Result<ThetaExpr> {
        if self.bump() != Some('(') {
            return Err(Error::Parse("expected `(` after function name".into()));
        }
        let e = self.expr()?;
        if self.bump() != Some(')') {
            return Err(Error::Parse("expected `)`".into()));
        }
        Ok(e)
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<ThetaExpr> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '.')
        {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let r = if let Some((int_part, frac)) = s.split_once('.') {
            let digits = format!("{int_part}{frac}");
            let numer = BigInt::from_str(&digits).map_err(|e| Error::Parse(e.to_string()))?;
            BigRational::new(numer, BigInt::from(10u32).pow(frac.len() as u32))
        } else {
            BigRational::from_integer(
                BigInt::from_str(&s).map_err(|e| Error::Parse(e.to_string()))?,
            )
        };
        Ok(ThetaExpr::Number(r))
    }
}
