use super::ast::Expr;
use qsusy_core::uq::quantum_lie_basis;
use qsusy_core::{AlgebraConfig, AlgebraElement, Generator, QuantumLieBasis, Scalar, StructureMaps, TensorElement};
use serde::Serialize;
use std::cell::OnceCell;
use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Core(#[from] qsusy_core::Error),
    #[error("type error: {0}")]
    Type(String),
}

type Result<T> = std::result::Result<T, EvalError>;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Value {
    Scalar(Scalar),
    Element(AlgebraElement),
    Tensor(TensorElement),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(c) => c.is_zero(),
            Value::Element(a) => a.is_zero(),
            Value::Tensor(t) => t.is_zero(),
        }
    }

    fn kind(&self) -> String {
        match self {
            Value::Scalar(_) => "scalar".into(),
            Value::Element(_) => "algebra element".into(),
            Value::Tensor(t) => format!("{}-fold tensor", t.legs()),
        }
    }

    fn as_element(&self, op: &str) -> Result<AlgebraElement> {
        match self {
            Value::Scalar(c) => Ok(AlgebraElement::scalar(c.clone())),
            Value::Element(a) => Ok(a.clone()),
            Value::Tensor(_) => Err(EvalError::Type(format!("{op} needs an algebra element, got a {}", self.kind()))),
        }
    }

    fn as_tensor(&self) -> TensorElement {
        match self {
            Value::Scalar(c) => TensorElement::from_element(&AlgebraElement::scalar(c.clone())),
            Value::Element(a) => TensorElement::from_element(a),
            Value::Tensor(t) => t.clone(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Element(a) => write!(f, "{a}"),
            Value::Tensor(t) => write!(f, "{t}"),
        }
    }
}

/// Evaluates expressions to normal forms in a fixed algebra.
pub struct Evaluator {
    maps: StructureMaps,
    max_degree: usize,
    basis: OnceCell<QuantumLieBasis>,
}

impl Evaluator {
    pub fn new(config: AlgebraConfig, max_degree: usize) -> std::result::Result<Self, qsusy_core::Error> {
        Ok(Evaluator { maps: StructureMaps::new(config)?, max_degree, basis: OnceCell::new() })
    }

    pub fn maps(&self) -> &StructureMaps {
        &self.maps
    }

    fn config(&self) -> &AlgebraConfig {
        self.maps.rs().config()
    }

    fn literal(&self, c: Scalar) -> Result<Value> {
        Ok(Value::Scalar(match &self.config().q_value {
            Some(q0) => c.specialize_q(q0)?,
            None => c,
        }))
    }

    fn basis(&self) -> Result<&QuantumLieBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = quantum_lie_basis(&self.maps, self.max_degree)?;
        Ok(self.basis.get_or_init(|| b))
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(n) => {
                let n = i64::try_from(*n).map_err(|_| EvalError::Type(format!("integer {n} exceeds 64-bit range")))?;
                self.literal(Scalar::from_i64(n))
            }
            Expr::I => self.literal(Scalar::i()),
            Expr::S => self.literal(Scalar::s()),
            Expr::Q => self.literal(Scalar::q()),
            Expr::Gen(g) => Ok(Value::Element(AlgebraElement::generator(g.validate(self.config().n_susy)?))),
            Expr::T(a) => Ok(Value::Element(self.basis()?.elements[*a as usize - 1].clone())),
            Expr::Id => Ok(Value::Element(AlgebraElement::one())),
            Expr::Neg(a) => self.scale(&self.eval(a)?, &Scalar::from_i64(-1)),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?, false),
            Expr::Sub(a, b) => self.add(self.eval(a)?, self.eval(b)?, true),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Div(a, b) => match self.eval(b)? {
                Value::Scalar(c) => self.scale(&self.eval(a)?, &c.inv()?),
                other => Err(EvalError::Type(format!("division by a {} is undefined", other.kind()))),
            },
            Expr::Tensor(a, b) => {
                let t = self.eval(a)?.as_tensor().tensor(&self.eval(b)?.as_tensor());
                Ok(Value::Tensor(self.maps.tensor_normal_form(&t)?))
            }
            Expr::Pow(a, n) => self.pow(self.eval(a)?, *n),
            Expr::Ad(x, y) => {
                let x = self.eval(x)?.as_element("ad")?;
                let y = self.eval(y)?.as_element("ad")?;
                Ok(Value::Element(self.maps.rs().normal_form(&self.maps.adjoint_action(&x, &y)?)?))
            }
            Expr::Delta(a) => Ok(Value::Tensor(self.maps.coproduct(&self.eval(a)?.as_element("Delta")?)?)),
            Expr::Antipode(a) => Ok(Value::Element(self.maps.antipode(&self.eval(a)?.as_element("S")?)?)),
            Expr::Eps(a) => Ok(Value::Scalar(self.maps.counit(&self.eval(a)?.as_element("eps")?)?)),
        }
    }

    fn scale(&self, v: &Value, c: &Scalar) -> Result<Value> {
        Ok(match v {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Element(a) => Value::Element(a.scale(c)),
            Value::Tensor(t) => Value::Tensor(t.scale(c)),
        })
    }

    fn add(&self, a: Value, b: Value, subtract: bool) -> Result<Value> {
        let b = if subtract { self.scale(&b, &Scalar::from_i64(-1))? } else { b };
        match (&a, &b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
            (Value::Tensor(x), Value::Tensor(y)) if x.legs() == y.legs() => Ok(Value::Tensor(x.add(y))),
            (Value::Tensor(_), _) | (_, Value::Tensor(_)) => {
                Err(EvalError::Type(format!("cannot add a {} and a {}", a.kind(), b.kind())))
            }
            _ => Ok(Value::Element(a.as_element("+")?.add(&b.as_element("+")?))),
        }
    }

    fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => self.scale(v, c),
            (Value::Element(x), Value::Element(y)) => Ok(Value::Element(self.maps.rs().multiply(x, y)?)),
            (Value::Tensor(x), Value::Tensor(y)) if x.legs() == y.legs() => Ok(Value::Tensor(self.maps.tensor_mul(x, y)?)),
            _ => Err(EvalError::Type(format!("cannot multiply a {} by a {}", a.kind(), b.kind()))),
        }
    }

    fn pow(&self, base: Value, n: i32) -> Result<Value> {
        match base {
            Value::Scalar(c) => Ok(Value::Scalar(c.pow(n)?)),
            Value::Element(a) => {
                let (a, n) = if n >= 0 {
                    (a, n as u32)
                } else if a == AlgebraElement::generator(Generator::K) {
                    (AlgebraElement::generator(Generator::Kinv), n.unsigned_abs())
                } else if a == AlgebraElement::generator(Generator::Kinv) {
                    (AlgebraElement::generator(Generator::K), n.unsigned_abs())
                } else {
                    return Err(EvalError::Type("negative powers are defined for scalars, K and Kinv only".into()));
                };
                let mut acc = AlgebraElement::one();
                for _ in 0..n {
                    acc = self.maps.rs().multiply(&acc, &a)?;
                }
                Ok(Value::Element(self.maps.rs().normal_form(&acc)?))
            }
            Value::Tensor(t) => {
                if n < 0 {
                    return Err(EvalError::Type("negative powers of tensors are undefined".into()));
                }
                let mut acc = TensorElement::pure(&vec![AlgebraElement::one(); t.legs()]);
                for _ in 0..n {
                    acc = self.maps.tensor_mul(&acc, &t)?;
                }
                Ok(Value::Tensor(acc))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn eval(text: &str) -> Value {
        Evaluator::new(AlgebraConfig::default(), 2).unwrap().eval(&parse(text).unwrap()).unwrap()
    }

    #[test]
    fn scalar_arithmetic() {
        assert_eq!(eval("(q - 1/q)*(q + q^-1)"), eval("q^2 - q^-2"));
        assert_eq!(eval("s*s"), eval("q"));
        assert_eq!(eval("i*i"), Value::Scalar(Scalar::from_i64(-1)));
    }

    #[test]
    fn algebra_relations() {
        assert_eq!(eval("K*Kinv"), eval("Id"));
        assert_eq!(eval("K^-2"), eval("Kinv*Kinv"));
        assert_eq!(eval("E*F - F*E"), eval("(K^2 - K^-2)/(q - 1/q)"));
        assert_eq!(eval("ad(Q[1,1], Qb[1,1])"), eval("Q[1,1]*Qb[1,1] + Qb[1,1]*Q[1,1]"));
        assert_eq!(eval("Jg*Q[1,1]"), eval("-Q[1,1]*Jg"));
    }

    #[test]
    fn hopf_maps() {
        assert_eq!(eval("Delta(E)"), eval("E @ Kinv + K @ E"));
        assert_eq!(eval("S(E)"), eval("-E/q"));
        assert_eq!(eval("eps(E*F + 3)"), Value::Scalar(Scalar::from_i64(3)));
        assert_eq!(eval("Delta(E*F)"), eval("Delta(E)*Delta(F)"));
    }

    #[test]
    fn quantum_lie_atoms() {
        assert_eq!(eval("T[1]"), eval("Kinv*E"));
        assert_eq!(eval("ad(E, T[1])"), Value::Element(AlgebraElement::zero()));
    }

    #[test]
    fn type_errors() {
        let ev = Evaluator::new(AlgebraConfig::default(), 2).unwrap();
        for bad in ["E @ F + E", "E / F", "E^-1", "Delta(E @ F)", "Q[1,3]"] {
            assert!(ev.eval(&parse(bad).unwrap()).is_err(), "{bad}");
        }
    }

    #[test]
    fn numeric_specialisation() {
        let cfg = AlgebraConfig { q_value: Some(qsusy_core::Gq::from_i64(4)), ..Default::default() };
        let ev = Evaluator::new(cfg, 2).unwrap();
        assert_eq!(ev.eval(&parse("s + q").unwrap()).unwrap(), Value::Scalar(Scalar::from_i64(6)));
    }
}
