use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int(u64),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Int(n) => format!("integer {n}"),
            TokenKind::Ident(s) => format!("identifier '{s}'"),
            TokenKind::Eof => "end of input".into(),
            other => format!("'{}'", other.symbol()),
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            TokenKind::Comma => ",",
            TokenKind::Plus => "+",
            TokenKind::Minus => "-",
            TokenKind::Star => "*",
            TokenKind::Slash => "/",
            TokenKind::Caret => "^",
            TokenKind::At => "@",
            _ => "",
        }
    }
}

/// 1-based line and column of a token's first character, and its length in characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let span = |len| Span { line, column, len };
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            k += 1;
            continue;
        }
        let (kind, len) = if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            k = start;
            let n = digits.parse::<u64>().map_err(|_| ParseError::lexical(span(digits.len()), format!("integer literal {digits} is too large")))?;
            (TokenKind::Int(n), digits.len())
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            let mut end = k;
            while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_') {
                end += 1;
            }
            let ident: String = chars[start..end].iter().collect();
            (TokenKind::Ident(ident), end - start)
        } else {
            let kind = match c {
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '[' => TokenKind::LBracket,
                ']' => TokenKind::RBracket,
                ',' => TokenKind::Comma,
                '+' => TokenKind::Plus,
                '-' | '−' => TokenKind::Minus,
                '*' | '·' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '@' | '⊗' => TokenKind::At,
                other => return Err(ParseError::lexical(span(1), format!("unexpected character '{other}'"))),
            };
            (kind, 1)
        };
        out.push(Token { kind, span: span(len) });
        k += len;
        column += len;
    }
    out.push(Token { kind: TokenKind::Eof, span: Span { line, column, len: 0 } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_track_lines() {
        let t = tokenize("E +\n  F").unwrap();
        assert_eq!(t[2].span, Span { line: 2, column: 3, len: 1 });
        assert_eq!(t[3].kind, TokenKind::Eof);
    }

    #[test]
    fn unicode_aliases() {
        let t = tokenize("E ⊗ F − K").unwrap();
        assert_eq!(t[1].kind, TokenKind::At);
        assert_eq!(t[3].kind, TokenKind::Minus);
    }

    #[test]
    fn bad_character() {
        let e = tokenize("E $ F").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
    }
}
