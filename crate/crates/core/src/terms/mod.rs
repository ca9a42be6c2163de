//! Łukasiewicz terms: syntax, evaluation, generated subalgebras and order-rank.
//!
//! Concrete syntax, loosest binding first:
//!
//! ```text
//! term := term 'v' term     join
//!       | term '^' term     meet
//!       | term '+' term     ⊕
//!       | term '*' term     ⊙
//!       | '!' term          ¬
//!       | '0' | '1' | p/q | ident | '(' term ')'
//! ```
//!
//! Binary operators are left-associative. `v` is reserved and cannot name a variable.

mod parser;
mod subalgebra;

pub use parser::parse_term;
pub use subalgebra::{
    generated_subalgebra, order_rank, order_rank_rational, Derivation, OrderRank, Subalgebra,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{Element, FiniteMV};
use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Const(Fraction),
    Var(String),
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
}

pub type Env = BTreeMap<String, Element>;

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn oplus(a: Term, b: Term) -> Term {
        Term::Oplus(Box::new(a), Box::new(b))
    }

    pub fn odot(a: Term, b: Term) -> Term {
        Term::Odot(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Var(v) => {
                out.insert(v);
            }
            Term::Neg(a) => a.collect_vars(out),
            Term::Oplus(a, b) | Term::Odot(a, b) | Term::Join(a, b) | Term::Meet(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Zero | Term::One | Term::Const(_) => {}
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Join(..) => 1,
            Term::Meet(..) => 2,
            Term::Oplus(..) => 3,
            Term::Odot(..) => 4,
            Term::Neg(_) => 5,
            _ => 6,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Term::Zero => write!(f, "0")?,
            Term::One => write!(f, "1")?,
            Term::Const(c) => write!(f, "{}/{}", c.num(), c.den())?,
            Term::Var(v) => write!(f, "{v}")?,
            Term::Neg(a) => {
                write!(f, "!")?;
                a.write_prec(f, 5)?;
            }
            Term::Oplus(a, b) | Term::Odot(a, b) | Term::Join(a, b) | Term::Meet(a, b) => {
                let sym = match self {
                    Term::Oplus(..) => "+",
                    Term::Odot(..) => "*",
                    Term::Join(..) => "v",
                    _ => "^",
                };
                a.write_prec(f, p)?;
                write!(f, " {sym} ")?;
                b.write_prec(f, p + 1)?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }

    /// Evaluates the term in `a` under `env`.
    pub fn eval(&self, env: &Env, a: &FiniteMV) -> Result<Element> {
        Ok(match self {
            Term::Zero => a.zero(),
            Term::One => a.one(),
            Term::Const(c) => {
                if a.orders().iter().any(|m| m % c.den() != 0) {
                    return Err(Error::ConstantNotInAlgebra(format!("{c} in {a}")));
                }
                Element::constant(*c, a.components())
            }
            Term::Var(v) => {
                let x = env.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
                a.check(x)?;
                x.clone()
            }
            Term::Neg(t) => t.eval(env, a)?.neg(),
            Term::Oplus(s, t) => s.eval(env, a)?.oplus(&t.eval(env, a)?),
            Term::Odot(s, t) => s.eval(env, a)?.odot(&t.eval(env, a)?),
            Term::Join(s, t) => s.eval(env, a)?.join(&t.eval(env, a)?),
            Term::Meet(s, t) => s.eval(env, a)?.meet(&t.eval(env, a)?),
        })
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

pub fn eval_term(t: &Term, env: &Env, a: &FiniteMV) -> Result<Element> {
    t.eval(env, a)
}
