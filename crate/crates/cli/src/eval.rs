use std::fmt;

use ladder_core::classical::{chevalley_e, chevalley_f, coroot, embed_phi, gl_bracket, unit, GlElement};
use ladder_core::lie::{bracket, z, LieElement};
use ladder_core::standard_module::{t, SVector};
use ladder_core::Scalar;
use serde_json::Value as Json;

use crate::expr::Expr;

/// An evaluated expression. `Zero` is the bare literal `0`, which adopts
/// whatever universe it is combined with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Zero,
    Lie(LieElement),
    Gl(GlElement),
    Vector(SVector),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("cannot combine {left} and {right} terms; wrap gl+(inf) terms in phi(...) to embed them")]
    Mixed { left: &'static str, right: &'static str },
    #[error("{0} cannot appear inside a bracket")]
    NotBracketable(&'static str),
    #[error("phi(...) expects E-terms, got {0}")]
    PhiArgument(&'static str),
    #[error("expected {expected}, got {got}")]
    Universe { expected: &'static str, got: &'static str },
}

impl Value {
    pub fn universe(&self) -> &'static str {
        match self {
            Value::Zero => "zero",
            Value::Lie(_) => "Z",
            Value::Gl(_) => "E",
            Value::Vector(_) => "t",
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Zero => LieElement::zero().to_json(),
            Value::Lie(x) => x.to_json(),
            Value::Gl(x) => x.to_json(),
            Value::Vector(v) => v.to_json(),
        }
    }

    fn scale(self, c: &Scalar) -> Value {
        match self {
            Value::Zero => Value::Zero,
            Value::Lie(x) => Value::Lie(x.scale(c)),
            Value::Gl(x) => Value::Gl(x.scale(c)),
            Value::Vector(v) => Value::Vector(v.scale(c)),
        }
    }

    fn add(self, other: Value) -> Result<Value, EvalError> {
        Ok(match (self, other) {
            (Value::Zero, v) | (v, Value::Zero) => v,
            (Value::Lie(x), Value::Lie(y)) => Value::Lie(x + y),
            (Value::Gl(x), Value::Gl(y)) => Value::Gl(x + y),
            (Value::Vector(x), Value::Vector(y)) => Value::Vector(x + y),
            (a, b) => {
                return Err(EvalError::Mixed {
                    left: a.universe(),
                    right: b.universe(),
                })
            }
        })
    }

    /// The Lie element this value denotes; pure E-expressions are embedded.
    pub fn into_lie(self) -> Result<LieElement, EvalError> {
        match self {
            Value::Zero => Ok(LieElement::zero()),
            Value::Lie(x) => Ok(x),
            Value::Gl(x) => Ok(embed_phi(&x)),
            Value::Vector(_) => Err(EvalError::Universe {
                expected: "a Z- or E-expression",
                got: "a t-vector",
            }),
        }
    }

    pub fn into_vector(self) -> Result<SVector, EvalError> {
        match self {
            Value::Zero => Ok(SVector::zero()),
            Value::Vector(v) => Ok(v),
            other => Err(EvalError::Universe {
                expected: "a t-vector",
                got: other.universe(),
            }),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Zero => write!(f, "0"),
            Value::Lie(x) => write!(f, "{x}"),
            Value::Gl(x) => write!(f, "{x}"),
            Value::Vector(v) => write!(f, "{v}"),
        }
    }
}

pub fn eval(e: &Expr) -> Result<Value, EvalError> {
    Ok(match e {
        Expr::Zero => Value::Zero,
        Expr::Gen(n, m) => Value::Lie(z(*n, *m)),
        Expr::Unit(i, j) => Value::Gl(unit(*i, *j)),
        Expr::ChevalleyE(i) => Value::Lie(chevalley_e(*i)),
        Expr::ChevalleyF(i) => Value::Lie(chevalley_f(*i)),
        Expr::Coroot(i) => Value::Lie(coroot(*i)),
        Expr::Basis(k) => Value::Vector(t(*k)),
        Expr::Phi(x) => match eval(x)? {
            Value::Zero => Value::Zero,
            Value::Gl(x) => Value::Lie(embed_phi(&x)),
            other => return Err(EvalError::PhiArgument(other.universe())),
        },
        Expr::Bracket(x, y) => match (eval(x)?, eval(y)?) {
            (Value::Vector(_), _) | (_, Value::Vector(_)) => return Err(EvalError::NotBracketable("t-vectors")),
            (Value::Zero, _) | (_, Value::Zero) => Value::Zero,
            (Value::Lie(x), Value::Lie(y)) => Value::Lie(bracket(&x, &y)),
            (Value::Gl(x), Value::Gl(y)) => Value::Gl(gl_bracket(&x, &y)),
            (a, b) => {
                return Err(EvalError::Mixed {
                    left: a.universe(),
                    right: b.universe(),
                })
            }
        },
        Expr::Scaled(c, x) => eval(x)?.scale(c),
        Expr::Sum(terms) => {
            let mut acc = Value::Zero;
            for term in terms {
                acc = acc.add(eval(term)?)?;
            }
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn run(s: &str) -> Value {
        eval(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn bracket_of_extremal_generators() {
        assert_eq!(run("[Z[1,0],Z[0,1]]").to_string(), "-Z[0,0] + Z[1,1]");
    }

    #[test]
    fn coroot_expansion() {
        assert_eq!(
            run("h[0]"),
            Value::Lie(&(&z(0, 0) - &z(1, 1).scale(&Scalar::from(2))) + &z(2, 2))
        );
    }

    #[test]
    fn chevalley_relation_vanishes() {
        assert_eq!(run("[e[0],f[0]] - h[0]"), Value::Lie(LieElement::zero()));
    }

    #[test]
    fn phi_embeds() {
        assert_eq!(run("phi(E[0,1]) - e[0]"), Value::Lie(LieElement::zero()));
        assert_eq!(run("[E[0,1],E[1,0]]").to_string(), "E[0,0] - E[1,1]");
    }

    #[test]
    fn mixed_universes_are_rejected() {
        let err = eval(&parse("Z[1,0] + E[0,1]").unwrap()).unwrap_err();
        assert!(err.to_string().contains("phi("));
        assert!(eval(&parse("[Z[1,0],E[0,1]]").unwrap()).is_err());
        assert!(eval(&parse("phi(Z[1,0])").unwrap()).is_err());
        assert!(eval(&parse("[t[1],t[2]]").unwrap()).is_err());
    }

    #[test]
    fn zero_adopts_universe() {
        assert_eq!(run("0 + Z[1,1]"), run("Z[1,1]"));
        assert_eq!(run("[0, E[1,1]]"), Value::Zero);
    }
}
