use super::{ParseError, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(usize),
    /// `c{n,i}`
    ConstLit(usize, usize),
    /// `case{n}`
    CaseKw(usize),
    Kw(Kw),
    Backslash,
    Dot,
    Colon,
    Arrow,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Pipe,
    Eq,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kw {
    Assume,
    Define,
    Check,
    Normalize,
    Infer,
    U,
    Nat,
    Zero,
    Suc,
    Fst,
    Snd,
    Natrec,
    Enum,
    Prf,
    Box,
    Where,
    Sig,
}

impl Kw {
    fn from_word(w: &str) -> Option<Kw> {
        Some(match w {
            "assume" => Kw::Assume,
            "define" => Kw::Define,
            "check" => Kw::Check,
            "normalize" => Kw::Normalize,
            "infer" => Kw::Infer,
            "U" => Kw::U,
            "Nat" => Kw::Nat,
            "zero" => Kw::Zero,
            "suc" => Kw::Suc,
            "fst" => Kw::Fst,
            "snd" => Kw::Snd,
            "natrec" => Kw::Natrec,
            "Enum" => Kw::Enum,
            "Prf" => Kw::Prf,
            "box" => Kw::Box,
            "where" => Kw::Where,
            "Sig" => Kw::Sig,
            _ => return None,
        })
    }

    pub fn is_decl(self) -> bool {
        matches!(
            self,
            Kw::Assume | Kw::Define | Kw::Check | Kw::Normalize | Kw::Infer
        )
    }
}

/// Reserved words, including the `case` and `c` literal prefixes.
pub fn is_reserved(w: &str) -> bool {
    Kw::from_word(w).is_some() || w == "case"
}

pub fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

pub fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Lexer<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn span(&self) -> Span {
        Span {
            line: self.line,
            col: self.col,
        }
    }

    fn number(&mut self, at: Span) -> Result<usize, ParseError> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return Err(ParseError::new(at, "expected a number"));
        }
        s.parse()
            .map_err(|_| ParseError::new(at, format!("number `{s}` is too large")))
    }

    fn expect(&mut self, want: char, at: Span) -> Result<(), ParseError> {
        self.skip_inline_space();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            _ => Err(ParseError::new(at, format!("expected `{want}`"))),
        }
    }

    fn skip_inline_space(&mut self) {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.bump();
        }
    }

    /// Reads `{n,i}` or `{n}` after a literal prefix.
    fn braced(&mut self, at: Span, pair: bool) -> Result<(usize, Option<usize>), ParseError> {
        self.expect('{', at)?;
        self.skip_inline_space();
        let n = self.number(at)?;
        let i = if pair {
            self.expect(',', at)?;
            self.skip_inline_space();
            Some(self.number(at)?)
        } else {
            None
        };
        self.expect('}', at)?;
        Ok((n, i))
    }
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut lx = Lexer {
        chars: text.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    while let Some(c) = lx.peek() {
        let at = lx.span();
        if c.is_whitespace() {
            lx.bump();
            continue;
        }
        if c == '#' {
            while lx.peek().is_some_and(|c| c != '\n') {
                lx.bump();
            }
            continue;
        }
        if c.is_ascii_digit() {
            let n = lx.number(at)?;
            out.push((Tok::Num(n), at));
            continue;
        }
        if is_ident_start(c) {
            let mut w = String::new();
            while let Some(c) = lx.peek().filter(|c| is_ident_char(*c)) {
                w.push(c);
                lx.bump();
            }
            let tok = match w.as_str() {
                "c" if lx.peek() == Some('{') => {
                    let (n, i) = lx.braced(at, true)?;
                    let i = i.unwrap_or_default();
                    if i >= n {
                        return Err(ParseError::new(
                            at,
                            format!("constant c{{{n},{i}}} out of range: index must be below {n}"),
                        ));
                    }
                    Tok::ConstLit(n, i)
                }
                "case" => {
                    let (n, _) = lx.braced(at, false)?;
                    Tok::CaseKw(n)
                }
                _ => match Kw::from_word(&w) {
                    Some(k) => Tok::Kw(k),
                    None => Tok::Ident(w),
                },
            };
            out.push((tok, at));
            continue;
        }
        lx.bump();
        let tok = match c {
            '\\' | 'λ' => Tok::Backslash,
            '.' => Tok::Dot,
            ':' => Tok::Colon,
            '-' if lx.peek() == Some('>') => {
                lx.bump();
                Tok::Arrow
            }
            '→' => Tok::Arrow,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '|' => Tok::Pipe,
            '=' => Tok::Eq,
            '*' | '⋆' => Tok::Star,
            other => {
                return Err(ParseError::new(
                    at,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push((tok, at));
    }
    Ok(out)
}
