use super::ast::Expr;
use super::lexer::{tokenize, Span, Token, TokenKind};
use super::ParseError;
use qsusy_core::Generator;

const ATOMS: &[&str] = &[
    "integer", "i", "s", "q", "P0..P3", "J01..J23", "Q[a,I]", "Qb[a,I]", "Z[I,J]", "Zs[I,J]", "E", "F", "K", "Kinv", "Jg",
    "Id", "T[a]", "ad(", "Delta(", "S(", "eps(", "(", "-",
];

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.sum()?;
    p.expect(TokenKind::Eof, &["'+'", "'-'", "'*'", "'/'", "'@'", "'^'", "end of input"])?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::syntax(t.span, t.kind.describe(), expected)
    }

    fn expect(&mut self, kind: TokenKind, expected: &[&str]) -> Result<Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.tensor()?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.bump();
                    acc = Expr::add(acc, self.tensor()?);
                }
                TokenKind::Minus => {
                    self.bump();
                    acc = Expr::sub(acc, self.tensor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        while self.peek().kind == TokenKind::At {
            self.bump();
            acc = Expr::tensor(acc, self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    self.bump();
                    acc = Expr::mul(acc, self.unary()?);
                }
                TokenKind::Slash => {
                    self.bump();
                    acc = Expr::div(acc, self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            return Ok(Expr::neg(self.unary()?));
        }
        let base = self.primary()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek().kind == TokenKind::Minus {
            self.bump();
            true
        } else {
            false
        };
        let t = self.peek().clone();
        let TokenKind::Int(n) = t.kind else { return Err(self.error(&["integer exponent"])) };
        self.bump();
        let e = i32::try_from(n).map_err(|_| ParseError::syntax(t.span, format!("exponent {n}"), &["exponent below 2^31"]))?;
        Ok(Expr::pow(base, if negative { -e } else { e }))
    }

    fn indices<const K: usize>(&mut self) -> Result<([u8; K], Span), ParseError> {
        self.expect(TokenKind::LBracket, &["'['"])?;
        let mut out = [0u8; K];
        let mut first = self.peek().span;
        for (k, slot) in out.iter_mut().enumerate() {
            if k > 0 {
                self.expect(TokenKind::Comma, &["','"])?;
            }
            let t = self.peek().clone();
            if k == 0 {
                first = t.span;
            }
            match t.kind {
                TokenKind::Int(n) if n <= u8::MAX as u64 => {
                    *slot = n as u8;
                    self.bump();
                }
                _ => return Err(self.error(&["small integer index"])),
            }
        }
        self.expect(TokenKind::RBracket, &["']'"])?;
        Ok((out, first))
    }

    fn call(&mut self, arity: usize) -> Result<Vec<Expr>, ParseError> {
        self.expect(TokenKind::LParen, &["'('"])?;
        let mut args = Vec::with_capacity(arity);
        for k in 0..arity {
            if k > 0 {
                self.expect(TokenKind::Comma, &["','"])?;
            }
            args.push(self.sum()?);
        }
        let close: &[&str] = if arity == 1 { &["')'"] } else { &["')'", "','"] };
        self.expect(TokenKind::RParen, close)?;
        Ok(args)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            TokenKind::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(TokenKind::RParen, &["')'"])?;
                Ok(e)
            }
            TokenKind::Ident(ref name) => {
                self.bump();
                self.identifier(name, t.span)
            }
            _ => Err(self.error(ATOMS)),
        }
    }

    fn identifier(&mut self, name: &str, span: Span) -> Result<Expr, ParseError> {
        let index_error = |what: &str| ParseError::syntax(span, format!("'{name}'"), &[what]);
        let e = match name {
            "i" => Expr::I,
            "s" => Expr::S,
            "q" => Expr::Q,
            "E" => Expr::Gen(Generator::E),
            "F" => Expr::Gen(Generator::F),
            "K" => Expr::Gen(Generator::K),
            "Kinv" => Expr::Gen(Generator::Kinv),
            "Jg" => Expr::Gen(Generator::Grading),
            "Id" => Expr::Id,
            "Q" | "Qb" => {
                let ([a, i], at) = self.indices::<2>()?;
                if !(1..=2).contains(&a) || i == 0 {
                    return Err(ParseError::syntax(at, format!("index [{a},{i}]"), &["spinor index 1 or 2 and flavour index >= 1"]));
                }
                Expr::Gen(if name == "Q" { Generator::Q(a, i) } else { Generator::Qbar(a, i) })
            }
            "Z" | "Zs" => {
                let ([i, j], at) = self.indices::<2>()?;
                if i == 0 || i >= j {
                    return Err(ParseError::syntax(at, format!("index [{i},{j}]"), &["flavour indices 1 <= I < J"]));
                }
                Expr::Gen(if name == "Z" { Generator::Z(i, j) } else { Generator::Zstar(i, j) })
            }
            "T" => {
                let ([a], at) = self.indices::<1>()?;
                if !(1..=3).contains(&a) {
                    return Err(ParseError::syntax(at, format!("index {a}"), &["quantum Lie index 1, 2 or 3"]));
                }
                Expr::T(a)
            }
            "ad" => {
                let mut args = self.call(2)?;
                let y = args.pop().unwrap();
                Expr::ad(args.pop().unwrap(), y)
            }
            "Delta" => Expr::delta(self.call(1)?.pop().unwrap()),
            "S" => Expr::antipode(self.call(1)?.pop().unwrap()),
            "eps" => Expr::eps(self.call(1)?.pop().unwrap()),
            _ => {
                let digits: Vec<u8> = name.bytes().skip(1).map(|b| b.wrapping_sub(b'0')).collect();
                match (name.as_bytes()[0], digits.as_slice()) {
                    (b'P', [m]) if *m < 4 => Expr::Gen(Generator::P(*m)),
                    (b'J', [m, n]) if m < n && *n < 4 => Expr::Gen(Generator::J(*m, *n)),
                    (b'P', _) => return Err(index_error("P0, P1, P2 or P3")),
                    (b'J', _) if name.len() == 3 => return Err(index_error("J with Lorentz indices 0 <= m < n <= 3")),
                    _ => return Err(ParseError::syntax(span, format!("identifier '{name}'"), ATOMS)),
                }
            }
        };
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let e = parse("ad(Q[1,1], Qb[1,1])").unwrap();
        assert_eq!(e, Expr::ad(Expr::Gen(Generator::Q(1, 1)), Expr::Gen(Generator::Qbar(1, 1))));
        let e = parse("Delta(E) @ Id").unwrap();
        assert_eq!(e, Expr::tensor(Expr::delta(Expr::Gen(Generator::E)), Expr::Id));
        let e = parse("(q - 1/q)*E*F").unwrap();
        let scalar = Expr::sub(Expr::Q, Expr::div(Expr::Int(1), Expr::Q));
        assert_eq!(e, Expr::mul(Expr::mul(scalar, Expr::Gen(Generator::E)), Expr::Gen(Generator::F)));
    }

    #[test]
    fn precedence() {
        let e = parse("-E*F @ K + 1").unwrap();
        let expected = Expr::add(
            Expr::tensor(Expr::mul(Expr::neg(Expr::Gen(Generator::E)), Expr::Gen(Generator::F)), Expr::Gen(Generator::K)),
            Expr::Int(1),
        );
        assert_eq!(e, expected);
        assert_eq!(parse("-q^2").unwrap(), Expr::neg(Expr::pow(Expr::Q, 2)));
        assert_eq!(parse("q^-1").unwrap(), Expr::pow(Expr::Q, -1));
        assert_eq!(parse("E - F - K").unwrap(), Expr::sub(Expr::sub(Expr::Gen(Generator::E), Expr::Gen(Generator::F)), Expr::Gen(Generator::K)));
    }

    #[test]
    fn lorentz_atoms() {
        assert_eq!(parse("J13").unwrap(), Expr::Gen(Generator::J(1, 3)));
        assert_eq!(parse("P2").unwrap(), Expr::Gen(Generator::P(2)));
        assert!(parse("J31").is_err());
        assert!(parse("P7").is_err());
    }

    #[test]
    fn diagnostics_carry_position_and_expectations() {
        let e = parse("E +\n  * F").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.expected.iter().any(|x| x == "Kinv"));
        let e = parse("ad(E F)").unwrap_err();
        assert_eq!(e.column, 6);
        assert_eq!(e.expected, vec!["','".to_string()]);
        let e = parse("Q[3,1]").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse("(E").is_err());
        assert!(parse("E F").is_err());
        assert!(parse("Foo").is_err());
    }
}
