//! Ground symbols of the expression language: coordinates, parameters and
//! derived field atoms.
//!
//! All symbols live in one of two frames (unprimed or primed). A field atom
//! carries a derivative multi-index over the four coordinates of its own
//! frame, so mixed-frame derivatives are unrepresentable by construction and
//! Clairaut symmetry holds for free.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the four spacetime axes, ordered `t < x < y < z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    T,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::T, Axis::X, Axis::Y, Axis::Z];
    /// The three spatial axes.
    pub const SPATIAL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::T => 0,
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::T => "t",
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

/// A coordinate is an axis together with a frame marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coordinate {
    pub axis: Axis,
    pub primed: bool,
}

impl Coordinate {
    pub const fn new(axis: Axis, primed: bool) -> Self {
        Coordinate { axis, primed }
    }

    pub const fn unprimed(axis: Axis) -> Self {
        Coordinate::new(axis, false)
    }

    pub const fn primed(axis: Axis) -> Self {
        Coordinate::new(axis, true)
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis.name(), if self.primed { "'" } else { "" })
    }
}

/// Symbolic real constants. Parameters are frameless and annihilated by
/// differentiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parameter {
    /// Particle mass.
    M,
    /// Electric charge.
    E,
    /// Dimensionless coupling of the `(lap S)^2` modification.
    Gamma,
    /// Boost velocity components.
    Vx,
    Vy,
    Vz,
    /// Cubic coupling.
    G,
}

impl Parameter {
    pub const ALL: [Parameter; 7] = [
        Parameter::M,
        Parameter::E,
        Parameter::Gamma,
        Parameter::Vx,
        Parameter::Vy,
        Parameter::Vz,
        Parameter::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::M => "m",
            Parameter::E => "e",
            Parameter::Gamma => "gamma",
            Parameter::Vx => "vx",
            Parameter::Vy => "vy",
            Parameter::Vz => "vz",
            Parameter::G => "g",
        }
    }

    pub fn from_name(name: &str) -> Option<Parameter> {
        Parameter::ALL.iter().copied().find(|p| p.name() == name)
    }

    /// The velocity component along a spatial axis.
    pub fn velocity(axis: Axis) -> Option<Parameter> {
        match axis {
            Axis::X => Some(Parameter::Vx),
            Axis::Y => Some(Parameter::Vy),
            Axis::Z => Some(Parameter::Vz),
            Axis::T => None,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The field families of the engine.
///
/// `R`, `S`, `V`, `Phi`, the three `A` components and `Chi` are declared
/// real; `Psi` and `PsiStar` are complex conjugates of each other and are
/// only ever eliminated through the polar substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    R,
    S,
    V,
    Phi,
    Ax,
    Ay,
    Az,
    Psi,
    PsiStar,
    Chi,
}

impl FieldKind {
    pub const ALL: [FieldKind; 10] = [
        FieldKind::R,
        FieldKind::S,
        FieldKind::V,
        FieldKind::Phi,
        FieldKind::Ax,
        FieldKind::Ay,
        FieldKind::Az,
        FieldKind::Psi,
        FieldKind::PsiStar,
        FieldKind::Chi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::R => "R",
            FieldKind::S => "S",
            FieldKind::V => "V",
            FieldKind::Phi => "Phi",
            FieldKind::Ax => "Ax",
            FieldKind::Ay => "Ay",
            FieldKind::Az => "Az",
            FieldKind::Psi => "Psi",
            FieldKind::PsiStar => "PsiStar",
            FieldKind::Chi => "chi",
        }
    }

    pub fn from_name(name: &str) -> Option<FieldKind> {
        FieldKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    pub fn is_real(self) -> bool {
        !matches!(self, FieldKind::Psi | FieldKind::PsiStar)
    }

    /// The vector-potential component along a spatial axis.
    pub fn potential_component(axis: Axis) -> Option<FieldKind> {
        match axis {
            Axis::X => Some(FieldKind::Ax),
            Axis::Y => Some(FieldKind::Ay),
            Axis::Z => Some(FieldKind::Az),
            Axis::T => None,
        }
    }
}

// Atom ordering is lexicographic on the field NAME, then the frame marker,
// then the derivative multi-index; this is what makes canonical printing
// byte-stable, so it is implemented explicitly rather than derived.
impl PartialOrd for FieldKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name().cmp(other.name())
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Derivative multi-index over `(t, x, y, z)` of a single frame.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct MultiIndex(pub [u8; 4]);

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex([0; 4]);

    pub fn single(axis: Axis) -> Self {
        let mut orders = [0u8; 4];
        orders[axis.index()] = 1;
        MultiIndex(orders)
    }

    pub fn order(&self) -> u32 {
        self.0.iter().map(|&o| o as u32).sum()
    }

    pub fn raised(&self, axis: Axis) -> Self {
        let mut orders = self.0;
        orders[axis.index()] += 1;
        MultiIndex(orders)
    }

    pub fn get(&self, axis: Axis) -> u8 {
        self.0[axis.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Axes in canonical order, one entry per derivative application.
    pub fn letters(&self) -> impl Iterator<Item = Axis> + '_ {
        Axis::ALL
            .into_iter()
            .flat_map(move |axis| std::iter::repeat(axis).take(self.get(axis) as usize))
    }
}

/// A field symbol with its accumulated derivatives: `dt'dx'(S')` is
/// `FieldAtom { kind: S, primed: true, deriv: (1,1,0,0) }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldAtom {
    pub kind: FieldKind,
    pub primed: bool,
    pub deriv: MultiIndex,
}

impl FieldAtom {
    pub fn new(kind: FieldKind, primed: bool) -> Self {
        FieldAtom { kind, primed, deriv: MultiIndex::ZERO }
    }

    pub fn with_deriv(kind: FieldKind, primed: bool, deriv: MultiIndex) -> Self {
        FieldAtom { kind, primed, deriv }
    }

    pub fn raised(&self, axis: Axis) -> Self {
        FieldAtom { deriv: self.deriv.raised(axis), ..*self }
    }

    pub fn base(&self) -> Self {
        FieldAtom { deriv: MultiIndex::ZERO, ..*self }
    }

    pub fn is_real(&self) -> bool {
        self.kind.is_real()
    }
}

impl PartialOrd for FieldAtom {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldAtom {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.kind, self.primed, self.deriv).cmp(&(other.kind, other.primed, other.deriv))
    }
}

impl fmt::Display for FieldAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.primed { "'" } else { "" };
        if self.deriv.is_zero() {
            return write!(f, "{}{}", self.kind.name(), prime);
        }
        for axis in self.deriv.letters() {
            write!(f, "d{}{}", axis.name(), prime)?;
        }
        write!(f, "({}{})", self.kind.name(), prime)
    }
}

/// Selects every atom of one field family in one frame, regardless of its
/// derivative multi-index. Used by the substitution operations, which chain
/// derivatives through the replacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldPattern {
    pub kind: FieldKind,
    pub primed: bool,
}

impl FieldPattern {
    pub fn new(kind: FieldKind, primed: bool) -> Self {
        FieldPattern { kind, primed }
    }

    pub fn matches(&self, atom: &FieldAtom) -> bool {
        atom.kind == self.kind && atom.primed == self.primed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_display_follows_grammar() {
        let s = FieldAtom::new(FieldKind::S, false);
        assert_eq!(s.to_string(), "S");
        let dts = s.raised(Axis::T);
        assert_eq!(dts.to_string(), "dt(S)");
        let mixed = dts.raised(Axis::X).raised(Axis::X);
        assert_eq!(mixed.to_string(), "dtdxdx(S)");
        let primed = FieldAtom::new(FieldKind::R, true).raised(Axis::Y);
        assert_eq!(primed.to_string(), "dy'(R')");
    }

    #[test]
    fn multi_index_is_order_insensitive() {
        let a = MultiIndex::ZERO.raised(Axis::X).raised(Axis::T);
        let b = MultiIndex::ZERO.raised(Axis::T).raised(Axis::X);
        assert_eq!(a, b);
    }

    #[test]
    fn atom_order_is_name_lexicographic() {
        // "Ax" < "Phi" < "R" < "S" < "chi" in ASCII.
        assert!(FieldKind::Ax < FieldKind::Phi);
        assert!(FieldKind::Phi < FieldKind::R);
        assert!(FieldKind::S < FieldKind::Chi);
        // Same field: unprimed sorts before primed, bare before derived.
        let s = FieldAtom::new(FieldKind::S, false);
        assert!(s < FieldAtom::new(FieldKind::S, true));
        assert!(s < s.raised(Axis::T));
        assert!(s.raised(Axis::X) < s.raised(Axis::T));
    }
}
