//! Small expression parser: integers, named variables, `+ - * / ^`, parentheses.

use num_bigint::BigInt;

use super::{AlgebraError, Frac, MPoly, Rat, RatFun};

/// Parse into the fraction field over `vars` (variable `i` is `vars[i]`).
pub fn parse_frac(src: &str, vars: &[&str]) -> Result<Frac, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, vars };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parse a polynomial; division is only allowed by constants.
pub fn parse_mpoly(src: &str, vars: &[&str]) -> Result<MPoly, AlgebraError> {
    let f = parse_frac(src, vars)?;
    match f.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(AlgebraError::Parse(format!("{src:?} is not a polynomial"))),
    }
}

/// Parse a rational function in `x` over the named parameters.
pub fn parse_ratfun(src: &str, params: &[&str]) -> Result<RatFun, AlgebraError> {
    let mut vars = vec!["x"];
    vars.extend_from_slice(params);
    Ok(RatFun::from_frac(parse_frac(src, &vars)?))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Frac, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Frac, AlgebraError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac, AlgebraError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: i64 = digits.parse().map_err(|_| self.err("expected an integer exponent"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Frac, AlgebraError> {
        let n = self.vars.len();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let k: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Frac::from_rat(n, Rat::from_int(k)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Frac::from_poly(MPoly::var(n, i))),
                    None => Err(self.err(&format!("unknown variable {name:?}"))),
                }
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let p = parse_mpoly("1 + 2*a^2 - (a - b)*b", &["a", "b"]).unwrap();
        assert_eq!(p.to_string_with(&["a", "b"]), "2*a^2 - a*b + b^2 + 1");
    }

    #[test]
    fn rational_constants() {
        let p = parse_mpoly("a/2 - 1/3", &["a"]).unwrap();
        assert_eq!(p.eval(&[Rat::from_int(2)]), Rat::frac(2, 3));
        assert!(parse_mpoly("1/a", &["a"]).is_err());
    }

    #[test]
    fn errors() {
        assert!(parse_frac("a +", &["a"]).is_err());
        assert!(parse_frac("c", &["a"]).is_err());
        assert!(parse_frac("1/(a-a)", &["a"]).is_err());
        assert!(parse_frac("(a", &["a"]).is_err());
    }
}
