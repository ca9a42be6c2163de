use super::Term;
use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Zero,
    One,
    Const(Fraction),
    Ident(String),
    Bang,
    Plus,
    Star,
    Vee,
    Wedge,
    LParen,
    RParen,
    Eof,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.src.as_bytes().get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn next(&mut self) -> Result<(usize, Tok)> {
        let bytes = self.src.as_bytes();
        while bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(self.pos) else {
            return Ok((start, Tok::Eof));
        };
        let simple = match c {
            b'!' => Some(Tok::Bang),
            b'+' => Some(Tok::Plus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Wedge),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok((start, t));
        }
        if c.is_ascii_digit() {
            let num = self.digits();
            if bytes.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let den = self.digits();
                let text = &self.src[start..self.pos];
                if den.is_empty() {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("malformed fraction `{text}`"),
                    });
                }
                let f: Fraction = text.parse().map_err(|e| Error::Syntax {
                    pos: start,
                    msg: format!("{e}"),
                })?;
                return Ok((start, Tok::Const(f)));
            }
            return match num {
                "0" => Ok((start, Tok::Zero)),
                "1" => Ok((start, Tok::One)),
                _ => Err(Error::Syntax {
                    pos: start,
                    msg: format!("malformed fraction `{num}`: integer constants must be 0 or 1"),
                }),
            };
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while bytes
                .get(self.pos)
                .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
            {
                self.pos += 1;
            }
            let word = &self.src[start..self.pos];
            return Ok((
                start,
                if word == "v" {
                    Tok::Vee
                } else {
                    Tok::Ident(word.to_string())
                },
            ));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(Error::Syntax {
            pos: start,
            msg: format!("unexpected character `{ch}`"),
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (usize, Tok),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lexer = Lexer { src, pos: 0 };
        let peeked = lexer.next()?;
        Ok(Parser { lexer, peeked })
    }

    fn bump(&mut self) -> Result<(usize, Tok)> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn binary(
        &mut self,
        op: Tok,
        operand: fn(&mut Self) -> Result<Term>,
        build: fn(Term, Term) -> Term,
    ) -> Result<Term> {
        let mut lhs = operand(self)?;
        while self.peeked.1 == op {
            self.bump()?;
            let rhs = operand(self)?;
            lhs = build(lhs, rhs);
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Term> {
        self.binary(Tok::Vee, Self::meet, Term::join)
    }

    fn meet(&mut self) -> Result<Term> {
        self.binary(Tok::Wedge, Self::oplus, Term::meet)
    }

    fn oplus(&mut self) -> Result<Term> {
        self.binary(Tok::Plus, Self::odot, Term::oplus)
    }

    fn odot(&mut self) -> Result<Term> {
        self.binary(Tok::Star, Self::unary, Term::odot)
    }

    fn unary(&mut self) -> Result<Term> {
        let (pos, tok) = self.bump()?;
        match tok {
            Tok::Bang => Ok(Term::neg(self.unary()?)),
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::Const(f) => Ok(Term::Const(f)),
            Tok::Ident(v) => Ok(Term::Var(v)),
            Tok::LParen => {
                let inner = self.join()?;
                match self.bump()? {
                    (_, Tok::RParen) => Ok(inner),
                    (p, t) => Err(Error::Syntax {
                        pos: p,
                        msg: format!("expected `)`, found {}", describe(&t)),
                    }),
                }
            }
            t => Err(Error::Syntax {
                pos,
                msg: format!("expected a term, found {}", describe(&t)),
            }),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Eof => "end of input".into(),
        Tok::Ident(v) => format!("`{v}`"),
        t => format!("{t:?}"),
    }
}

pub fn parse_term(input: &str) -> Result<Term> {
    let mut p = Parser::new(input)?;
    let t = p.join()?;
    match p.peeked {
        (_, Tok::Eof) => Ok(t),
        (pos, ref tok) => Err(Error::Syntax {
            pos,
            msg: format!("unexpected {} after term", describe(tok)),
        }),
    }
}
