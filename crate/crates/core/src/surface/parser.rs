use super::lexer::{tokenize, Kw, Tok};
use super::{Binder, Decl, DeclFile, DeclKind, Node, ParseError, STerm, Span};

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
}

fn boxed(t: STerm) -> Box<STerm> {
    Box::new(t)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(x) => format!("`{x}`"),
        Tok::Num(n) => format!("`{n}`"),
        Tok::ConstLit(n, i) => format!("`c{{{n},{i}}}`"),
        Tok::CaseKw(n) => format!("`case{{{n}}}`"),
        Tok::Kw(k) => format!("`{}`", format!("{k:?}").to_lowercase()),
        other => format!("{other:?}"),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map(|(_, s)| *s).unwrap_or(self.end)
    }

    fn error<T>(&self, what: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            Some(t) => describe(t),
            None => "end of input".into(),
        };
        Err(ParseError::new(
            self.span(),
            format!("expected {what}, found {found}"),
        ))
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&want) {
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn binder(&mut self) -> Result<Binder, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) => {
                let x = x.clone();
                self.pos += 1;
                Ok(if x == "_" { None } else { Some(x) })
            }
            _ => self.error("a binder name"),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) if x != "_" => {
                let x = x.clone();
                self.pos += 1;
                Ok(x)
            }
            _ => self.error("a name"),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.error("a number"),
        }
    }

    fn decls(&mut self) -> Result<DeclFile, ParseError> {
        let mut decls = Vec::new();
        while self.peek().is_some() {
            decls.push(self.decl()?);
        }
        Ok(DeclFile { decls })
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        let span = self.span();
        let kind = match self.peek() {
            Some(Tok::Kw(Kw::Assume)) => {
                self.pos += 1;
                let name = self.name()?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.term()?;
                DeclKind::Assume { name, ty }
            }
            Some(Tok::Kw(Kw::Define)) => {
                self.pos += 1;
                let name = self.name()?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.term()?;
                self.expect(Tok::Eq, "`=`")?;
                let body = self.term()?;
                DeclKind::Define { name, ty, body }
            }
            Some(Tok::Kw(Kw::Check)) => {
                self.pos += 1;
                let term = self.term()?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.term()?;
                DeclKind::Check { term, ty }
            }
            Some(Tok::Kw(Kw::Normalize)) => {
                self.pos += 1;
                let term = self.term()?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.term()?;
                DeclKind::Normalize { term, ty }
            }
            Some(Tok::Kw(Kw::Infer)) => {
                self.pos += 1;
                let term = self.term()?;
                DeclKind::Infer { term }
            }
            _ => return self.error("a declaration (assume, define, check, normalize, infer)"),
        };
        Ok(Decl { span, kind })
    }

    /// `( x :` starts a dependent arrow rather than a parenthesized term.
    fn at_telescope(&self) -> bool {
        self.peek() == Some(&Tok::LParen)
            && matches!(self.peek_at(1), Some(Tok::Ident(_)))
            && self.peek_at(2) == Some(&Tok::Colon)
    }

    fn term(&mut self) -> Result<STerm, ParseError> {
        let span = self.span();
        match self.peek() {
            Some(Tok::Backslash) => {
                self.pos += 1;
                let mut names = vec![self.binder()?];
                while matches!(self.peek(), Some(Tok::Ident(_))) {
                    names.push(self.binder()?);
                }
                self.expect(Tok::Dot, "`.` after lambda binders")?;
                let body = self.term()?;
                Ok(names.into_iter().rev().fold(body, |b, x| STerm {
                    span,
                    node: Node::Lam(x, boxed(b)),
                }))
            }
            Some(Tok::Kw(Kw::Sig)) => {
                self.pos += 1;
                let (x, a) = self.telescope()?;
                self.expect(Tok::Dot, "`.` after the pair-type binder")?;
                let b = self.term()?;
                Ok(STerm {
                    span,
                    node: Node::Sigma(x, boxed(a), boxed(b)),
                })
            }
            _ if self.at_telescope() => {
                let (x, a) = self.telescope()?;
                self.expect(Tok::Arrow, "`->` after a dependent binder")?;
                let b = self.term()?;
                Ok(STerm {
                    span,
                    node: Node::Fun(x, boxed(a), boxed(b)),
                })
            }
            _ => {
                let lhs = self.app()?;
                if self.eat(&Tok::Arrow) {
                    let rhs = self.term()?;
                    Ok(STerm {
                        span,
                        node: Node::Fun(None, boxed(lhs), boxed(rhs)),
                    })
                } else {
                    Ok(lhs)
                }
            }
        }
    }

    fn telescope(&mut self) -> Result<(Binder, STerm), ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let x = self.binder()?;
        self.expect(Tok::Colon, "`:`")?;
        let a = self.term()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((x, a))
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Tok::Ident(_))
            | Some(Tok::Num(_))
            | Some(Tok::ConstLit(..))
            | Some(Tok::Star)
            | Some(Tok::LBrace)
            | Some(Tok::LParen) => true,
            Some(Tok::Kw(k)) => matches!(k, Kw::U | Kw::Nat | Kw::Zero | Kw::Enum),
            _ => false,
        }
    }

    fn app(&mut self) -> Result<STerm, ParseError> {
        let mut head = self.head()?;
        while self.starts_atom() {
            let arg = self.atom()?;
            head = STerm {
                span: head.span,
                node: Node::App(boxed(head), boxed(arg)),
            };
        }
        Ok(head)
    }

    fn motive(&mut self) -> Result<(Binder, STerm), ParseError> {
        self.expect(Tok::LBracket, "`[` before a motive")?;
        let x = self.binder()?;
        self.expect(Tok::Dot, "`.` after the motive binder")?;
        let b = self.term()?;
        self.expect(Tok::RBracket, "`]` after a motive")?;
        Ok((x, b))
    }

    fn head(&mut self) -> Result<STerm, ParseError> {
        let span = self.span();
        let unary = |p: &mut Parser, f: fn(Box<STerm>) -> Node| -> Result<STerm, ParseError> {
            p.pos += 1;
            let a = p.atom()?;
            Ok(STerm {
                span,
                node: f(boxed(a)),
            })
        };
        match self.peek() {
            Some(Tok::Kw(Kw::Suc)) => unary(self, Node::Suc),
            Some(Tok::Kw(Kw::Fst)) => unary(self, Node::Fst),
            Some(Tok::Kw(Kw::Snd)) => unary(self, Node::Snd),
            Some(Tok::Kw(Kw::Box)) => unary(self, Node::Box),
            Some(Tok::Kw(Kw::Prf)) => unary(self, Node::Prf),
            Some(Tok::Kw(Kw::Natrec)) => {
                self.pos += 1;
                let (x, m) = self.motive()?;
                let z = self.atom()?;
                let s = self.atom()?;
                let k = self.atom()?;
                Ok(STerm {
                    span,
                    node: Node::Natrec(x, boxed(m), boxed(z), boxed(s), boxed(k)),
                })
            }
            Some(Tok::CaseKw(n)) => {
                let n = *n;
                self.pos += 1;
                let (x, m) = self.motive()?;
                let branch_span = self.span();
                self.expect(Tok::LParen, "`(` before case branches")?;
                let mut branches = Vec::new();
                if !self.eat(&Tok::RParen) {
                    loop {
                        branches.push(self.term()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        self.expect(Tok::Pipe, "`|` or `)` in case branches")?;
                    }
                }
                if branches.len() != n {
                    return Err(ParseError::new(
                        branch_span,
                        format!("case{{{n}}} needs {n} branches, found {}", branches.len()),
                    ));
                }
                let k = self.atom()?;
                Ok(STerm {
                    span,
                    node: Node::Case(n, x, boxed(m), branches, boxed(k)),
                })
            }
            Some(Tok::Kw(Kw::Where)) => {
                self.pos += 1;
                self.expect(Tok::LBracket, "`[` before the result type of where")?;
                let w = self.term()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::LParen, "`(`")?;
                self.expect(Tok::LBracket, "`[`")?;
                let y = self.binder()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::Eq, "`=`")?;
                let proof = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                let body = self.atom()?;
                Ok(STerm {
                    span,
                    node: Node::Where(boxed(w), y, boxed(proof), boxed(body)),
                })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<STerm, ParseError> {
        let span = self.span();
        let node = match self.peek().cloned() {
            Some(Tok::Ident(x)) if x != "_" => {
                self.pos += 1;
                Node::Var(x)
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Node::Numeral(n)
            }
            Some(Tok::ConstLit(n, i)) => {
                self.pos += 1;
                Node::Const(n, i)
            }
            Some(Tok::Star) => {
                self.pos += 1;
                Node::Star
            }
            Some(Tok::Kw(Kw::U)) => {
                self.pos += 1;
                Node::Universe
            }
            Some(Tok::Kw(Kw::Nat)) => {
                self.pos += 1;
                Node::Nat
            }
            Some(Tok::Kw(Kw::Zero)) => {
                self.pos += 1;
                Node::Zero
            }
            Some(Tok::Kw(Kw::Enum)) => {
                self.pos += 1;
                Node::Enum(self.number()?)
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                let a = self.term()?;
                self.expect(Tok::Colon, "`:` in a singleton type")?;
                let t = self.term()?;
                self.expect(Tok::RBrace, "`}`")?;
                Node::Sing(boxed(a), boxed(t))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let a = self.term()?;
                if self.eat(&Tok::Comma) {
                    let b = self.term()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Node::Pair(boxed(a), boxed(b))
                } else {
                    self.expect(Tok::RParen, "`)` or `,`")?;
                    return Ok(a);
                }
            }
            _ => return self.error("a term"),
        };
        Ok(STerm { span, node })
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    let toks = tokenize(text)?;
    let lines = text.split('\n').count().max(1);
    let last = text.rsplit('\n').next().unwrap_or("");
    Ok(Parser {
        toks,
        pos: 0,
        end: Span {
            line: lines,
            col: last.chars().count() + 1,
        },
    })
}

/// Parses a declaration file.
pub fn parse(text: &str) -> Result<DeclFile, ParseError> {
    parser(text)?.decls()
}

/// Parses a single term.
pub fn parse_term(text: &str) -> Result<STerm, ParseError> {
    let mut p = parser(text)?;
    let t = p.term()?;
    if p.peek().is_some() {
        return p.error("end of input");
    }
    Ok(t)
}
