use qsusy_core::Generator;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    /// Imaginary unit `i`.
    I,
    /// `s`, with `s² = q`.
    S,
    Q,
    Gen(Generator),
    /// Quantum Lie basis element `T[a]`, `a ∈ {1,2,3}`.
    T(u8),
    /// Unit `Id`.
    Id,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Ad(Box<Expr>, Box<Expr>),
    Delta(Box<Expr>),
    Antipode(Box<Expr>),
    Eps(Box<Expr>),
}

/// Binding strength, loosest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Prec {
    Sum,
    Tensor,
    Product,
    Unary,
    Atom,
}

#[allow(clippy::should_implement_trait)]
impl Expr {
    pub(crate) fn prec(&self) -> Prec {
        match self {
            Expr::Add(..) | Expr::Sub(..) => Prec::Sum,
            Expr::Tensor(..) => Prec::Tensor,
            Expr::Mul(..) | Expr::Div(..) => Prec::Product,
            Expr::Neg(_) => Prec::Unary,
            _ => Prec::Atom,
        }
    }

    pub fn neg(a: Expr) -> Expr {
        Expr::Neg(Box::new(a))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Expr, b: Expr) -> Expr {
        Expr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, e: i32) -> Expr {
        Expr::Pow(Box::new(a), e)
    }

    pub fn ad(a: Expr, b: Expr) -> Expr {
        Expr::Ad(Box::new(a), Box::new(b))
    }

    pub fn delta(a: Expr) -> Expr {
        Expr::Delta(Box::new(a))
    }

    pub fn antipode(a: Expr) -> Expr {
        Expr::Antipode(Box::new(a))
    }

    pub fn eps(a: Expr) -> Expr {
        Expr::Eps(Box::new(a))
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical printing: binary operators are left-associative, so a right
/// operand of equal binding strength is parenthesised.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr| {
            let p = self.prec();
            wrap(f, a, a.prec() < p)?;
            write!(f, " {op} ")?;
            wrap(f, b, b.prec() <= p)
        };
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::I => write!(f, "i"),
            Expr::S => write!(f, "s"),
            Expr::Q => write!(f, "q"),
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::T(a) => write!(f, "T[{a}]"),
            Expr::Id => write!(f, "Id"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.prec() < Prec::Unary)
            }
            Expr::Add(a, b) => binary(f, a, "+", b),
            Expr::Sub(a, b) => binary(f, a, "-", b),
            Expr::Mul(a, b) => binary(f, a, "*", b),
            Expr::Div(a, b) => binary(f, a, "/", b),
            Expr::Tensor(a, b) => binary(f, a, "@", b),
            Expr::Pow(a, e) => {
                wrap(f, a, a.prec() < Prec::Atom || matches!(**a, Expr::Pow(..)))?;
                write!(f, "^{e}")
            }
            Expr::Ad(a, b) => write!(f, "ad({a}, {b})"),
            Expr::Delta(a) => write!(f, "Delta({a})"),
            Expr::Antipode(a) => write!(f, "S({a})"),
            Expr::Eps(a) => write!(f, "eps({a})"),
        }
    }
}
