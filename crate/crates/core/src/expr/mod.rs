//! Closed-form expressions in the curve parameter `s`, evaluated together
//! with their derivatives through jet arithmetic.
//!
//! Supported syntax: decimal literals, the variable `s`, `+ - * /`, unary
//! minus, `^` with an integer-literal exponent, and the functions `sinh`,
//! `cosh`, `sin`, `cos`, `exp`, `sqrt`. See [`parse`] for the grammar.

mod jet;
mod parse;

use std::fmt;

use thiserror::Error;

pub use jet::{Jet, Jet3};
pub use parse::parse;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown function '{name}' at position {position}")]
    UnknownFunction { name: String, position: usize },
    #[error("exponent at position {position} must be an integer literal")]
    NonIntegerExponent { position: usize },
    #[error("{op} is undefined at s = {s}")]
    Domain { op: &'static str, s: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sinh,
    Cosh,
    Sin,
    Cos,
    Exp,
    Sqrt,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    /// The parameter `s`.
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Func(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Self, ExprError> {
        parse(text)
    }

    pub fn eval(&self, s: f64) -> Result<f64, ExprError> {
        Ok(self.eval_jet_n::<1>(s)?.value())
    }

    /// Value and first three derivatives at `s`.
    pub fn eval_jet(&self, s: f64) -> Result<Jet3, ExprError> {
        self.eval_jet_n(s)
    }

    pub fn eval_jet_n<const N: usize>(&self, s: f64) -> Result<Jet<N>, ExprError> {
        let j = self.jet(s)?;
        if !j.is_finite() {
            return Err(ExprError::Domain { op: "overflow", s });
        }
        Ok(j)
    }

    fn jet<const N: usize>(&self, s: f64) -> Result<Jet<N>, ExprError> {
        let dom = |op| ExprError::Domain { op, s };
        Ok(match self {
            Expr::Num(v) => Jet::constant(*v),
            Expr::Var => Jet::variable(s),
            Expr::Neg(a) => -a.jet(s)?,
            Expr::Add(a, b) => a.jet(s)? + b.jet(s)?,
            Expr::Sub(a, b) => a.jet(s)? - b.jet(s)?,
            Expr::Mul(a, b) => a.jet(s)? * b.jet(s)?,
            Expr::Div(a, b) => a
                .jet::<N>(s)?
                .checked_div(&b.jet(s)?)
                .ok_or_else(|| dom("division by zero"))?,
            Expr::Pow(a, n) => a
                .jet::<N>(s)?
                .powi(*n)
                .ok_or_else(|| dom("negative power of zero"))?,
            Expr::Func(f, a) => {
                let u: Jet<N> = a.jet(s)?;
                match f {
                    Func::Sinh => u.sinh(),
                    Func::Cosh => u.cosh(),
                    Func::Sin => u.sin(),
                    Func::Cos => u.cos(),
                    Func::Exp => u.exp(),
                    Func::Sqrt => u.sqrt().ok_or_else(|| dom("sqrt of nonpositive value"))?,
                }
            }
        })
    }
}

/// Fully parenthesised rendering that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var => write!(f, "s"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
            Expr::Func(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(t: &str) -> Expr {
        parse(t).unwrap()
    }

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn parses_power_over_literal() {
        assert_eq!(p("s^3/3"), Expr::Div(b(Expr::Pow(b(Expr::Var), 3)), b(Expr::Num(3.0))));
    }

    #[test]
    fn parses_timelike_example_component() {
        let e = p("2*(s-3)*sinh(s) - 2*cosh(s)");
        let lhs = Expr::Mul(
            b(Expr::Mul(b(Expr::Num(2.0)), b(Expr::Sub(b(Expr::Var), b(Expr::Num(3.0)))))),
            b(Expr::Func(Func::Sinh, b(Expr::Var))),
        );
        let rhs = Expr::Mul(b(Expr::Num(2.0)), b(Expr::Func(Func::Cosh, b(Expr::Var))));
        assert_eq!(e, Expr::Sub(b(lhs), b(rhs)));
        // γ₁(0) = −2
        assert_eq!(e.eval(0.0).unwrap(), -2.0);
    }

    #[test]
    fn precedence() {
        assert_eq!(p("-s^2"), Expr::Neg(b(Expr::Pow(b(Expr::Var), 2))));
        assert_eq!(p("s^2^3"), Expr::Pow(b(Expr::Var), 8));
        assert_eq!(p("s^-1"), Expr::Pow(b(Expr::Var), -1));
        assert_eq!(p("1-2-3").eval(0.0).unwrap(), -4.0);
        assert_eq!(p("8/4/2").eval(0.0).unwrap(), 1.0);
        assert_eq!(p("2*-s").eval(3.0).unwrap(), -6.0);
    }

    #[test]
    fn parse_errors() {
        match parse("s +") {
            Err(ExprError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse(""), Err(ExprError::Parse { position: 0, .. })));
        assert!(matches!(parse("(s"), Err(ExprError::Parse { position: 2, .. })));
        assert!(matches!(parse("s s"), Err(ExprError::Parse { position: 2, .. })));
        assert!(matches!(parse("s # 2"), Err(ExprError::Parse { position: 2, .. })));
        assert!(matches!(
            parse("tan(s)"),
            Err(ExprError::UnknownFunction { position: 0, .. })
        ));
        assert!(matches!(parse("s^2.5"), Err(ExprError::NonIntegerExponent { .. })));
        assert!(matches!(parse("s^s"), Err(ExprError::NonIntegerExponent { .. })));
        assert!(matches!(parse("1e999"), Err(ExprError::Parse { .. })));
    }

    #[test]
    fn jets_by_hand() {
        let j = p("s^3/3").eval_jet(1.0).unwrap();
        let want = [1.0 / 3.0, 1.0, 2.0, 2.0];
        for (g, w) in [j.v(), j.d1(), j.d2(), j.d3()].iter().zip(want) {
            assert!((g - w).abs() < 1e-15);
        }
        let j = p("cosh(s)").eval_jet(0.0).unwrap();
        assert_eq!([j.v(), j.d1(), j.d2(), j.d3()], [1.0, 0.0, 1.0, 0.0]);
        let j = p("s^4/4 + s^3/3").eval_jet(0.0).unwrap();
        assert_eq!([j.v(), j.d1(), j.d2(), j.d3()], [0.0, 0.0, 0.0, 2.0]);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            p("1/s").eval(0.0),
            Err(ExprError::Domain { op: "division by zero", s: 0.0 })
        );
        assert!(matches!(p("sqrt(s)").eval_jet(-1.0), Err(ExprError::Domain { .. })));
        assert!(matches!(p("exp(exp(s))").eval(10.0), Err(ExprError::Domain { .. })));
    }

    #[test]
    fn render_round_trip_examples() {
        for t in ["s^3/3", "-s^2", "2*(s-3)*sinh(s) - 2*cosh(s)", "s^-2", "0.125e-3*s"] {
            let e = p(t);
            assert_eq!(p(&e.to_string()), e, "{t}");
        }
    }

    fn central(e: &Expr, s: f64, k: usize, h: f64) -> f64 {
        let f = |x: f64| e.eval(x).unwrap();
        match k {
            1 => (f(s + h) - f(s - h)) / (2.0 * h),
            2 => (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h),
            _ => (f(s + 2.0 * h) - 2.0 * f(s + h) + 2.0 * f(s - h) - f(s - 2.0 * h)) / (2.0 * h.powi(3)),
        }
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0.0f64..100.0).prop_map(Expr::Num),
            Just(Expr::Var),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner.clone(), -4i32..5).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
                (inner, 0usize..6).prop_map(|(a, k)| {
                    let f = [Func::Sinh, Func::Cosh, Func::Sin, Func::Cos, Func::Exp, Func::Sqrt][k];
                    Expr::Func(f, Box::new(a))
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parses_to_identical_tree(e in arb_expr()) {
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn polynomial_jets_match_finite_differences(
            coef in prop::collection::vec(-3.0f64..3.0, 6),
            s in -1.5f64..1.5,
        ) {
            let text = coef
                .iter()
                .enumerate()
                .map(|(k, c)| format!("({c})*s^{k}"))
                .collect::<Vec<_>>()
                .join(" + ");
            let e = parse(&text).unwrap();
            let j = e.eval_jet(s).unwrap();
            // The third-derivative stencil carries an h²·f⁽⁵⁾/4 truncation term.
            for (k, h, tol) in [(1, 1e-4, 1e-5), (2, 1e-4, 1e-5), (3, 1e-3, 3e-4)] {
                let fd = central(&e, s, k, h);
                let d = j.derivative(k);
                prop_assert!((fd - d).abs() <= tol * (1.0 + d.abs()), "k={} fd={} jet={}", k, fd, d);
            }
        }

        #[test]
        fn chain_rule_matches_finite_differences(
            a in -1.0f64..1.0, b in -1.0f64..1.0, s in -1.0f64..1.0, k in 0usize..5,
        ) {
            let f = ["sinh", "cosh", "sin", "cos", "exp"][k];
            let e = parse(&format!("{f}(({a})*s^2 + ({b})*s + 1)")).unwrap();
            let j = e.eval_jet(s).unwrap();
            let fd = central(&e, s, 1, 1e-4);
            prop_assert!((fd - j.d1()).abs() <= 1e-6 * (1.0 + j.d1().abs()));
            let e = parse(&format!("sqrt(({a})*s^2 + ({b})*s + 3)")).unwrap();
            let j = e.eval_jet(s).unwrap();
            let fd = central(&e, s, 2, 1e-4);
            prop_assert!((fd - j.d2()).abs() <= 1e-5 * (1.0 + j.d2().abs()));
        }
    }
}
