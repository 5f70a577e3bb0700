//! Canonical normal form: a fully expanded, deterministically ordered sum of
//! monomials over `Q`, with `i^2` rewritten to `-1`.
//!
//! Two expressions are mathematically equal as polynomials in the atoms iff
//! their canonical forms are identical, so every verdict in the engine
//! reduces to "is this canonical form empty".
//!
//! Monomial order is lexicographic on the sorted atom powers (atoms compare
//! by field name, then frame marker, then multi-index), then coordinate
//! powers, then parameter powers, then the `i` flag. The order is total and
//! has no semantic content beyond determinism.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::expr::Expr;
use crate::symbols::{Coordinate, FieldAtom, Parameter};

/// Product key of a monomial; the rational coefficient lives outside.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialKey {
    pub atoms: Vec<(FieldAtom, u32)>,
    pub coords: Vec<(Coordinate, u32)>,
    pub params: Vec<(Parameter, i64)>,
    pub imaginary: bool,
}

impl MonomialKey {
    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.coords.is_empty() && self.params.is_empty() && !self.imaginary
    }
}

/// One term of a canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigRational,
    pub key: MonomialKey,
}

impl Monomial {
    pub fn constant(coeff: BigRational) -> Self {
        Monomial { coeff, key: MonomialKey::default() }
    }

    fn one() -> Self {
        Monomial::constant(BigRational::one())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut coeff = &self.coeff * &other.coeff;
        let imaginary = match (self.key.imaginary, other.key.imaginary) {
            (true, true) => {
                coeff = -coeff; // i*i = -1
                false
            }
            (a, b) => a || b,
        };
        let mut atoms: BTreeMap<FieldAtom, i64> =
            self.key.atoms.iter().map(|&(a, e)| (a, e as i64)).collect();
        for &(a, e) in &other.key.atoms {
            *atoms.entry(a).or_insert(0) += e as i64;
        }
        let mut coords: BTreeMap<Coordinate, i64> =
            self.key.coords.iter().map(|&(c, e)| (c, e as i64)).collect();
        for &(c, e) in &other.key.coords {
            *coords.entry(c).or_insert(0) += e as i64;
        }
        let mut params: BTreeMap<Parameter, i64> = self.key.params.iter().copied().collect();
        for &(p, e) in &other.key.params {
            *params.entry(p).or_insert(0) += e;
        }
        Monomial {
            coeff,
            key: MonomialKey {
                atoms: atoms
                    .into_iter()
                    .filter(|&(_, e)| e != 0)
                    .map(|(a, e)| (a, e as u32))
                    .collect(),
                coords: coords
                    .into_iter()
                    .filter(|&(_, e)| e != 0)
                    .map(|(c, e)| (c, e as u32))
                    .collect(),
                params: params.into_iter().filter(|&(_, e)| e != 0).collect(),
                imaginary,
            },
        }
    }

    /// Grammar-compatible rendering of this monomial without its sign.
    fn render_abs(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let coeff = self.coeff.abs();
        if !coeff.is_one() {
            parts.push(coeff.to_string());
        }
        if self.key.imaginary {
            parts.push("i".to_string());
        }
        for &(p, e) in &self.key.params {
            if e == 1 {
                parts.push(p.to_string());
            } else {
                parts.push(format!("{p}^{e}"));
            }
        }
        for &(c, e) in &self.key.coords {
            if e == 1 {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c}^{e}"));
            }
        }
        for &(a, e) in &self.key.atoms {
            if e == 1 {
                parts.push(a.to_string());
            } else {
                parts.push(format!("{a}^{e}"));
            }
        }
        if parts.is_empty() {
            coeff.to_string()
        } else {
            parts.join("*")
        }
    }

    fn to_expr(&self) -> Expr {
        let mut factors = Vec::new();
        if !self.coeff.is_one() || self.key.is_empty() {
            factors.push(Expr::Rational(self.coeff.clone()));
        }
        if self.key.imaginary {
            factors.push(Expr::I);
        }
        for &(p, e) in &self.key.params {
            factors.push(match e {
                1 => Expr::Param(p),
                _ => Expr::pow(Expr::Param(p), e as i32),
            });
        }
        for &(c, e) in &self.key.coords {
            factors.push(match e {
                1 => Expr::Coord(c),
                _ => Expr::pow(Expr::Coord(c), e as i32),
            });
        }
        for &(a, e) in &self.key.atoms {
            factors.push(match e {
                1 => Expr::Atom(a),
                _ => Expr::pow(Expr::Atom(a), e as i32),
            });
        }
        if factors.is_empty() {
            Expr::Rational(self.coeff.clone())
        } else {
            Expr::product(factors)
        }
    }
}

/// Expanded, ordered, merged sum of monomials. The empty form is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CanonicalForm {
    monomials: Vec<Monomial>,
}

impl CanonicalForm {
    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Back to a plain expression (a flat sum of monomial products).
    pub fn to_expr(&self) -> Expr {
        Expr::sum(self.monomials.iter().map(Monomial::to_expr).collect())
    }

    /// Canonical strings of the individual monomials, signs included.
    pub fn monomial_strings(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|m| {
                if m.coeff.is_negative() {
                    format!("-{}", m.render_abs())
                } else {
                    m.render_abs()
                }
            })
            .collect()
    }

    fn from_map(map: BTreeMap<MonomialKey, BigRational>) -> Self {
        CanonicalForm {
            monomials: map
                .into_iter()
                .filter(|(_, coeff)| !coeff.is_zero())
                .map(|(key, coeff)| Monomial { coeff, key })
                .collect(),
        }
    }
}

impl fmt::Display for CanonicalForm {
    /// The deterministic grammar-compatible rendering; `parse` of this
    /// string normalizes back to the same form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i == 0 {
                if m.coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if m.coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&m.render_abs())?;
        }
        Ok(())
    }
}

/// Expand an expression into its canonical form. Total on the expression
/// language; negative powers of non-parameters are rejected at construction
/// and parse time, so they cannot reach this point in well-formed input.
pub fn normalize(e: &Expr) -> CanonicalForm {
    let mut map: BTreeMap<MonomialKey, BigRational> = BTreeMap::new();
    for m in expand(e) {
        if m.coeff.is_zero() {
            continue;
        }
        let entry = map.entry(m.key).or_insert_with(BigRational::zero);
        *entry += m.coeff;
    }
    CanonicalForm::from_map(map)
}

/// `normalize(a) == normalize(b)`.
pub fn equivalent(a: &Expr, b: &Expr) -> bool {
    normalize(&a.clone().sub(b.clone())).is_zero()
}

fn expand(e: &Expr) -> Vec<Monomial> {
    match e {
        Expr::Rational(q) => vec![Monomial::constant(q.clone())],
        Expr::I => vec![Monomial {
            coeff: BigRational::one(),
            key: MonomialKey { imaginary: true, ..MonomialKey::default() },
        }],
        Expr::Param(p) => vec![Monomial {
            coeff: BigRational::one(),
            key: MonomialKey { params: vec![(*p, 1)], ..MonomialKey::default() },
        }],
        Expr::Coord(c) => vec![Monomial {
            coeff: BigRational::one(),
            key: MonomialKey { coords: vec![(*c, 1)], ..MonomialKey::default() },
        }],
        Expr::Atom(a) => vec![Monomial {
            coeff: BigRational::one(),
            key: MonomialKey { atoms: vec![(*a, 1)], ..MonomialKey::default() },
        }],
        Expr::Sum(terms) => terms.iter().flat_map(expand).collect(),
        Expr::Product(factors) => {
            let mut acc = vec![Monomial::one()];
            for f in factors.iter() {
                let fs = expand(f);
                let mut next = Vec::with_capacity(acc.len() * fs.len());
                for a in &acc {
                    for b in &fs {
                        next.push(a.mul(b));
                    }
                }
                acc = next;
            }
            acc
        }
        Expr::Pow(base, exp) => {
            if *exp == 0 {
                return vec![Monomial::one()];
            }
            if *exp < 0 {
                // Reachable only for parameter bases.
                match base.as_ref() {
                    Expr::Param(p) => {
                        return vec![Monomial {
                            coeff: BigRational::one(),
                            key: MonomialKey {
                                params: vec![(*p, *exp as i64)],
                                ..MonomialKey::default()
                            },
                        }];
                    }
                    Expr::Pow(inner, inner_exp) => {
                        // (p^a)^b
                        return expand(&Expr::Pow(inner.clone(), inner_exp * exp));
                    }
                    _ => panic!("negative power of non-parameter base: {base}"),
                }
            }
            let base_monomials = expand(base);
            let mut acc = vec![Monomial::one()];
            for _ in 0..*exp {
                let mut next = Vec::with_capacity(acc.len() * base_monomials.len());
                for a in &acc {
                    for b in &base_monomials {
                        next.push(a.mul(b));
                    }
                }
                acc = next;
            }
            acc
        }
    }
}

/// Formal polynomial derivative of a canonical form with respect to one
/// field atom, treating every atom as an independent variable. This is the
/// workhorse of the variational derivative.
pub fn formal_partial(form: &CanonicalForm, atom: &FieldAtom) -> Expr {
    let mut terms = Vec::new();
    for m in form.monomials() {
        if let Some(&(_, exp)) = m.key.atoms.iter().find(|(a, _)| a == atom) {
            let mut key = m.key.clone();
            key.atoms.retain(|(a, _)| a != atom);
            if exp > 1 {
                key.atoms.push((*atom, exp - 1));
                key.atoms.sort();
            }
            let coeff = &m.coeff * BigRational::from_integer(exp.into());
            terms.push(Monomial { coeff, key }.to_expr());
        }
    }
    Expr::sum(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{Axis, FieldKind};

    fn r() -> Expr {
        Expr::atom(FieldKind::R, false)
    }

    fn s() -> Expr {
        Expr::atom(FieldKind::S, false)
    }

    #[test]
    fn binomial_expansion() {
        // (R+S)^2 = R^2 + 2RS + S^2
        let e = Expr::pow(r().add(s()), 2);
        let expected = Expr::sum(vec![
            Expr::pow(r(), 2),
            Expr::int(2).mul(r()).mul(s()),
            Expr::pow(s(), 2),
        ]);
        assert_eq!(normalize(&e), normalize(&expected));
        assert_eq!(normalize(&e).to_string(), "2*R*S + R^2 + S^2");
    }

    #[test]
    fn i_squared_is_minus_one() {
        let e = Expr::I.mul(Expr::I).mul(r());
        assert_eq!(normalize(&e), normalize(&r().neg()));
        assert_eq!(normalize(&e).to_string(), "-R");
    }

    #[test]
    fn cancellation_gives_empty_form() {
        let e = r().sub(r());
        let n = normalize(&e);
        assert!(n.is_zero());
        assert_eq!(n.to_string(), "0");
    }

    #[test]
    fn negative_parameter_powers_merge() {
        // (1/2) * m^-1 * m = 1/2
        let e = Expr::ratio(1, 2).mul(Expr::param_inv(Parameter::M)).mul(Expr::param(Parameter::M));
        assert_eq!(normalize(&e).to_string(), "1/2");
    }

    #[test]
    fn normalization_is_idempotent_on_samples() {
        let e = Expr::pow(r().add(s()).add(Expr::I), 3);
        let once = normalize(&e);
        let twice = normalize(&once.to_expr());
        assert_eq!(once, twice);
    }

    #[test]
    fn formal_partial_counts_exponents() {
        // d/dR (R^3 S) = 3 R^2 S
        let e = Expr::pow(r(), 3).mul(s());
        let d = formal_partial(&normalize(&e), &FieldAtom::new(FieldKind::R, false));
        let expected = Expr::int(3).mul(Expr::pow(r(), 2)).mul(s());
        assert!(equivalent(&d, &expected));
    }

    #[test]
    fn coordinate_atoms_participate() {
        let x = Expr::coord(Axis::X, true);
        let e = x.clone().mul(x).mul(Expr::int(2));
        assert_eq!(normalize(&e).to_string(), "2*x'^2");
    }
}
