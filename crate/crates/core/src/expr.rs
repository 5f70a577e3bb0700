//! Immutable symbolic expression trees over exact rational coefficients.
//!
//! The tree is deliberately small: rationals, the imaginary unit, parameters,
//! coordinates, field atoms, sums, products and integer powers. Negative
//! exponents are admitted only on parameters (so `1/(2*m)` is a first-class
//! monomial), which keeps the whole language inside the polynomial fragment
//! that the normalizer can decide.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::symbols::{Axis, Coordinate, FieldAtom, FieldKind, Parameter};

/// A symbolic expression. Cheap to clone; subtrees are shared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Exact rational constant.
    Rational(BigRational),
    /// The imaginary unit, subject to the single rewrite `i^2 -> -1`.
    I,
    Param(Parameter),
    /// An explicit coordinate of either frame. Needed to express the boost
    /// shift of the phase, which carries bare `x'` and `t'` terms.
    Coord(Coordinate),
    Atom(FieldAtom),
    Sum(Arc<Vec<Expr>>),
    Product(Arc<Vec<Expr>>),
    /// Integer power. Negative exponents are only constructed for
    /// parameter bases; the parser and normalizer enforce this.
    Pow(Arc<Expr>, i32),
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::Rational(BigRational::zero())
    }

    pub fn one() -> Expr {
        Expr::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Expr {
        Expr::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Expr {
        assert!(den != 0, "zero denominator");
        Expr::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn param(p: Parameter) -> Expr {
        Expr::Param(p)
    }

    /// `p^-1` as an expression.
    pub fn param_inv(p: Parameter) -> Expr {
        Expr::Pow(Arc::new(Expr::Param(p)), -1)
    }

    pub fn coord(axis: Axis, primed: bool) -> Expr {
        Expr::Coord(Coordinate::new(axis, primed))
    }

    pub fn atom(kind: FieldKind, primed: bool) -> Expr {
        Expr::Atom(FieldAtom::new(kind, primed))
    }

    pub fn field_atom(atom: FieldAtom) -> Expr {
        Expr::Atom(atom)
    }

    pub fn sum(terms: Vec<Expr>) -> Expr {
        match terms.len() {
            0 => Expr::zero(),
            1 => terms.into_iter().next().unwrap(),
            _ => Expr::Sum(Arc::new(terms)),
        }
    }

    pub fn product(factors: Vec<Expr>) -> Expr {
        match factors.len() {
            0 => Expr::one(),
            1 => factors.into_iter().next().unwrap(),
            _ => Expr::Product(Arc::new(factors)),
        }
    }

    pub fn pow(base: Expr, exp: i32) -> Expr {
        Expr::Pow(Arc::new(base), exp)
    }

    pub fn neg(self) -> Expr {
        Expr::product(vec![Expr::int(-1), self])
    }

    pub fn add(self, other: Expr) -> Expr {
        Expr::sum(vec![self, other])
    }

    pub fn sub(self, other: Expr) -> Expr {
        Expr::sum(vec![self, other.neg()])
    }

    pub fn mul(self, other: Expr) -> Expr {
        Expr::product(vec![self, other])
    }

    /// Multiply by a rational scalar.
    pub fn scale(self, num: i64, den: i64) -> Expr {
        Expr::ratio(num, den).mul(self)
    }

    /// True if any leaf satisfies the predicate.
    pub fn any_leaf(&self, pred: &mut impl FnMut(&Expr) -> bool) -> bool {
        match self {
            Expr::Sum(terms) | Expr::Product(terms) => {
                terms.iter().any(|t| t.any_leaf(pred))
            }
            Expr::Pow(base, _) => base.any_leaf(pred),
            leaf => pred(leaf),
        }
    }

    /// All field atoms occurring in the expression.
    pub fn atoms(&self) -> Vec<FieldAtom> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |leaf| {
            if let Expr::Atom(a) = leaf {
                out.push(*a);
            }
        });
        out
    }

    pub fn visit_leaves(&self, visit: &mut impl FnMut(&Expr)) {
        match self {
            Expr::Sum(terms) | Expr::Product(terms) => {
                for t in terms.iter() {
                    t.visit_leaves(visit);
                }
            }
            Expr::Pow(base, _) => base.visit_leaves(visit),
            leaf => visit(leaf),
        }
    }

    /// Rebuild the tree, mapping each leaf through `map`.
    pub fn map_leaves(&self, map: &mut impl FnMut(&Expr) -> Expr) -> Expr {
        match self {
            Expr::Sum(terms) => Expr::sum(terms.iter().map(|t| t.map_leaves(map)).collect()),
            Expr::Product(factors) => {
                Expr::product(factors.iter().map(|t| t.map_leaves(map)).collect())
            }
            Expr::Pow(base, exp) => Expr::pow(base.map_leaves(map), *exp),
            leaf => map(leaf),
        }
    }

    /// The frame of the atoms and coordinates in the expression:
    /// `Some(true)` all primed, `Some(false)` all unprimed, `None` frameless.
    /// Mixed frames are reported as an error value.
    pub fn frame(&self) -> Result<Option<bool>, ()> {
        let mut frame: Option<bool> = None;
        let mut mixed = false;
        self.visit_leaves(&mut |leaf| {
            let primed = match leaf {
                Expr::Atom(a) => Some(a.primed),
                Expr::Coord(c) => Some(c.primed),
                _ => None,
            };
            if let Some(p) = primed {
                match frame {
                    None => frame = Some(p),
                    Some(existing) if existing != p => mixed = true,
                    _ => {}
                }
            }
        });
        if mixed {
            Err(())
        } else {
            Ok(frame)
        }
    }
}

/// Sum of `d_i(f)` over the three spatial axes applied twice: the Laplacian.
pub fn laplacian(e: &Expr, primed: bool) -> Expr {
    use crate::calculus::diff_unchecked;
    Expr::sum(
        Axis::SPATIAL
            .iter()
            .map(|&axis| {
                let c = Coordinate::new(axis, primed);
                diff_unchecked(&diff_unchecked(e, c), c)
            })
            .collect(),
    )
}

/// `sum_i (d_i f)^2`.
pub fn grad_squared(e: &Expr, primed: bool) -> Expr {
    use crate::calculus::diff_unchecked;
    Expr::sum(
        Axis::SPATIAL
            .iter()
            .map(|&axis| {
                let d = diff_unchecked(e, Coordinate::new(axis, primed));
                Expr::pow(d, 2)
            })
            .collect(),
    )
}

/// `sum_i (d_i f)(d_i g)`.
pub fn grad_dot(f: &Expr, g: &Expr, primed: bool) -> Expr {
    use crate::calculus::diff_unchecked;
    Expr::sum(
        Axis::SPATIAL
            .iter()
            .map(|&axis| {
                let c = Coordinate::new(axis, primed);
                diff_unchecked(f, c).mul(diff_unchecked(g, c))
            })
            .collect(),
    )
}

/// `sum_i d_i(f * d_i g)`: the divergence of `f` times the gradient of `g`.
pub fn div_grad(f: &Expr, g: &Expr, primed: bool) -> Expr {
    use crate::calculus::diff_unchecked;
    Expr::sum(
        Axis::SPATIAL
            .iter()
            .map(|&axis| {
                let c = Coordinate::new(axis, primed);
                diff_unchecked(&f.clone().mul(diff_unchecked(g, c)), c)
            })
            .collect(),
    )
}

impl fmt::Display for Expr {
    /// Raw tree display for diagnostics; canonical output is produced by
    /// [`crate::canonical::CanonicalForm`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(q) => write!(f, "{q}"),
            Expr::I => f.write_str("i"),
            Expr::Param(p) => write!(f, "{p}"),
            Expr::Coord(c) => write!(f, "{c}"),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Sum(terms) => {
                f.write_str("(")?;
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            Expr::Product(factors) => {
                for (i, t) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Pow(base, exp) => write!(f, "({base})^{exp}"),
        }
    }
}
