//! Expression evaluation against a space specification.
//!
//! Values are two-sorted plus the joint sort: scalars, one-sided
//! elements, joint elements, and the printable-but-not-composable
//! Sweedler two-leg maps produced by `delta`. Scalars embed wherever a
//! context needs them; one-sided elements lift to the joint algebra only
//! where an operation is joint by nature (`@`, `lap`, `lap_slow`).

use crate::expr::{parse, pow_exponent, BinOp, Expr, Func, ParseError};
use crate::hopf::{
    antipode, coproduct, counit, joint_antipode, joint_coproduct, joint_counit, JointTensorSquare,
    TensorSquare,
};
use crate::laplace::{laplace_closed, laplace_recursive};
use crate::products::{circle_antisym, circle_sym, phi_antisym, phi_sym, phi_tensor, square};
use crate::scalar::{self, Scalar};
use crate::space::{Side, SpaceSpec};
use crate::symmetry::{antisymmetrize, power, symmetrize};
use crate::tensor::{duality, Element, JointElement};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Joint(JointElement),
    Square(TensorSquare),
    JointSquare(JointTensorSquare),
}

impl Value {
    /// Canonical text form; the CLI's output contract.
    pub fn text(&self) -> String {
        match self {
            Value::Scalar(s) => scalar::format(s),
            Value::Element(e) => e.text(),
            Value::Joint(j) => j.text(),
            Value::Square(t) => t.text(),
            Value::JointSquare(t) => t.text(),
        }
    }

    fn sort_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(e) => match e.side() {
                Side::U => "U-element",
                Side::V => "V-element",
            },
            Value::Joint(_) => "joint element",
            Value::Square(_) | Value::JointSquare(_) => "coproduct table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("syntax error: {0}")]
    Parse(#[from] ParseError),
    #[error("type error: {0}")]
    Type(String),
    #[error(transparent)]
    Algebra(#[from] crate::Error),
}

type Result<T> = std::result::Result<T, EvalError>;

fn type_error<T>(message: impl Into<String>) -> Result<T> {
    Err(EvalError::Type(message.into()))
}

fn as_element(value: Value, side: Side) -> Result<Element> {
    match value {
        Value::Scalar(s) => Ok(Element::scalar(side, s)),
        Value::Element(e) if e.side() == side => Ok(e),
        other => type_error(format!(
            "expected a {}-side element, found {}",
            side,
            other.sort_name()
        )),
    }
}

fn as_joint(value: Value) -> Result<JointElement> {
    match value {
        Value::Scalar(s) => Ok(JointElement::scalar(s)),
        Value::Element(e) => Ok(JointElement::embed(&e)),
        Value::Joint(j) => Ok(j),
        other => type_error(format!(
            "expected a joint element, found {}",
            other.sort_name()
        )),
    }
}

/// Any element-like operand: scalars embed on the given default side.
fn as_any_element(value: Value, default_side: Side) -> Result<Element> {
    match value {
        Value::Scalar(s) => Ok(Element::scalar(default_side, s)),
        Value::Element(e) => Ok(e),
        other => type_error(format!(
            "expected an element, found {}",
            other.sort_name()
        )),
    }
}

fn element_side(a: &Value, b: &Value) -> Side {
    match (a, b) {
        (Value::Element(e), _) => e.side(),
        (_, Value::Element(e)) => e.side(),
        _ => Side::U,
    }
}

fn check_generators(e: &Expr, spec: &SpaceSpec) -> Result<()> {
    match e {
        Expr::Generator(side, index) => {
            spec.check_index(*side, *index)?;
            Ok(())
        }
        Expr::Rational(_) => Ok(()),
        Expr::Neg(inner) => check_generators(inner, spec),
        Expr::Binary(_, l, r) => {
            check_generators(l, spec)?;
            check_generators(r, spec)
        }
        Expr::Call(_, args) => {
            for a in args {
                check_generators(a, spec)?;
            }
            Ok(())
        }
    }
}

pub fn evaluate(ast: &Expr, spec: &SpaceSpec) -> Result<Value> {
    check_generators(ast, spec)?;
    eval(ast, spec)
}

/// Parses and evaluates in one step, returning the canonical text form.
pub fn evaluate_text(text: &str, spec: &SpaceSpec) -> Result<String> {
    let ast = parse(text)?;
    Ok(evaluate(&ast, spec)?.text())
}

fn eval(ast: &Expr, spec: &SpaceSpec) -> Result<Value> {
    match ast {
        Expr::Rational(r) => Ok(Value::Scalar(r.clone())),
        Expr::Generator(side, index) => Ok(Value::Element(Element::generator(*side, *index))),
        Expr::Neg(inner) => match eval(inner, spec)? {
            Value::Scalar(s) => Ok(Value::Scalar(-s)),
            Value::Element(e) => Ok(Value::Element(e.neg())),
            Value::Joint(j) => Ok(Value::Joint(j.neg())),
            other => type_error(format!("cannot negate a {}", other.sort_name())),
        },
        Expr::Binary(op, l, r) => {
            let lv = eval(l, spec)?;
            let rv = eval(r, spec)?;
            eval_binary(*op, lv, rv, spec)
        }
        Expr::Call(func, args) => eval_call(*func, args, spec),
    }
}

fn eval_binary(op: BinOp, lv: Value, rv: Value, spec: &SpaceSpec) -> Result<Value> {
    match op {
        BinOp::Add | BinOp::Sub => {
            let negate = op == BinOp::Sub;
            match (&lv, &rv) {
                (Value::Scalar(a), Value::Scalar(b)) => {
                    Ok(Value::Scalar(if negate { a - b } else { a + b }))
                }
                (Value::Joint(_), _) | (_, Value::Joint(_)) => {
                    let a = as_joint(lv)?;
                    let b = as_joint(rv)?;
                    Ok(Value::Joint(if negate { a.sub(&b) } else { a.add(&b) }))
                }
                _ => {
                    let side = element_side(&lv, &rv);
                    let a = as_element(lv, side)?;
                    let b = as_element(rv, side)?;
                    Ok(Value::Element(if negate { a.sub(&b)? } else { a.add(&b)? }))
                }
            }
        }
        BinOp::Concat => match (&lv, &rv) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a * b)),
            (Value::Scalar(a), Value::Element(e)) | (Value::Element(e), Value::Scalar(a)) => {
                Ok(Value::Element(e.scale(a)))
            }
            (Value::Scalar(a), Value::Joint(j)) | (Value::Joint(j), Value::Scalar(a)) => {
                Ok(Value::Joint(j.scale(a)))
            }
            (Value::Element(_), Value::Element(_)) => {
                let side = element_side(&lv, &rv);
                let a = as_element(lv, side)?;
                let b = as_element(rv, side).map_err(|_| {
                    EvalError::Type(
                        "'*' concatenates same-side elements; use ';' to pair sides".to_string(),
                    )
                })?;
                Ok(Value::Element(a.concat_product(&b)?))
            }
            (Value::Joint(a), Value::Joint(b)) => Ok(Value::Joint(a.joint_product(b))),
            _ => type_error(format!(
                "cannot multiply {} by {}",
                lv.sort_name(),
                rv.sort_name()
            )),
        },
        BinOp::Wedge => {
            if let (Value::Scalar(a), Value::Scalar(b)) = (&lv, &rv) {
                return Ok(Value::Scalar(a * b));
            }
            let side = element_side(&lv, &rv);
            let a = as_element(lv, side)?;
            let b = as_element(rv, side)?;
            Ok(Value::Element(crate::symmetry::wedge_product(&a, &b)?))
        }
        BinOp::Square => {
            let a = as_joint(lv)?;
            let b = as_joint(rv)?;
            Ok(Value::Joint(square(&a, &b, spec)?))
        }
        BinOp::CircleSym | BinOp::CircleAntisym => {
            let side = element_side(&lv, &rv);
            let a = as_any_element(lv, side)?;
            let b = as_element(rv, a.side())?;
            let out = if op == BinOp::CircleSym {
                circle_sym(&a, &b, spec)?
            } else {
                circle_antisym(&a, &b, spec)?
            };
            Ok(Value::Element(out))
        }
        BinOp::JointPair => {
            let u = as_element(lv, Side::U).map_err(|_| {
                EvalError::Type("';' expects a U-side element on the left".to_string())
            })?;
            let v = as_element(rv, Side::V).map_err(|_| {
                EvalError::Type("';' expects a V-side element on the right".to_string())
            })?;
            Ok(Value::Joint(
                JointElement::embed(&u).joint_product(&JointElement::embed(&v)),
            ))
        }
    }
}

fn eval_call(func: Func, args: &[Expr], spec: &SpaceSpec) -> Result<Value> {
    let mut values: Vec<Value> = Vec::with_capacity(args.len());
    for a in args {
        values.push(eval(a, spec)?);
    }
    match func {
        Func::Symm | Func::Asymm => {
            let a = as_any_element(values.remove(0), Side::U)?;
            let out = if func == Func::Symm {
                symmetrize(&a)?
            } else {
                antisymmetrize(&a)?
            };
            Ok(Value::Element(out))
        }
        Func::Antipode => match values.remove(0) {
            Value::Scalar(s) => Ok(Value::Scalar(s)),
            Value::Element(e) => Ok(Value::Element(antipode(&e))),
            Value::Joint(j) => Ok(Value::Joint(joint_antipode(&j))),
            other => type_error(format!("S does not apply to a {}", other.sort_name())),
        },
        Func::Counit => match values.remove(0) {
            Value::Scalar(s) => Ok(Value::Scalar(s)),
            Value::Element(e) => Ok(Value::Scalar(counit(&e))),
            Value::Joint(j) => Ok(Value::Scalar(joint_counit(&j))),
            other => type_error(format!("eps does not apply to a {}", other.sort_name())),
        },
        Func::Delta => match values.remove(0) {
            Value::Scalar(s) => Ok(Value::Square(coproduct(&Element::scalar(Side::U, s))?)),
            Value::Element(e) => Ok(Value::Square(coproduct(&e)?)),
            Value::Joint(j) => Ok(Value::JointSquare(joint_coproduct(&j)?)),
            other => type_error(format!("delta does not apply to a {}", other.sort_name())),
        },
        Func::Lap | Func::LapSlow => {
            let b = as_joint(values.remove(1))?;
            let a = as_joint(values.remove(0))?;
            let out = if func == Func::Lap {
                laplace_closed(&a, &b, spec)?
            } else {
                laplace_recursive(&a, &b, spec)?
            };
            Ok(Value::Scalar(out))
        }
        Func::Dual => {
            let b = as_element(values.remove(1), Side::V)?;
            let a = as_element(values.remove(0), Side::U)?;
            Ok(Value::Scalar(duality(&a, &b, spec)?))
        }
        Func::Pow => {
            let t = pow_exponent(&args[1]).ok_or_else(|| {
                EvalError::Type("pow expects a nonnegative integer literal exponent".to_string())
            })?;
            let x = as_any_element(values.remove(0), Side::U)?;
            Ok(Value::Element(power(&x, t)?))
        }
        Func::PhiTensor | Func::PhiSym | Func::PhiAntisym => {
            let a = as_any_element(values.remove(0), Side::U)?;
            let out = match func {
                Func::PhiTensor => phi_tensor(&a, spec)?,
                Func::PhiSym => phi_sym(&a, spec)?,
                _ => phi_antisym(&a, spec)?,
            };
            Ok(Value::Element(out))
        }
    }
}
