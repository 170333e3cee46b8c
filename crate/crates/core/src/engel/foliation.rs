use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use num_traits::One;

use crate::algebra::{Frac, Poly, Rational};
use crate::lie::{format_combination, LieAlgebra4, Vector4};

/// Lines `𝔏 = span(α y1 + β y2)` inside `D = span(y1, y2)` with
/// `[𝔏, D²] ⊂ D²`, `D² = span(y1, y2, y3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Foliation {
    /// Every `(α, β)` works.
    All,
    /// Exactly the multiples of one `(α, β)`.
    Line { alpha: Frac, beta: Frac },
    /// Only `α = β = 0`.
    Trivial,
}

impl Foliation {
    pub fn generator(&self) -> Option<Vector4> {
        match self {
            Foliation::Line { alpha, beta } => {
                Some(Vector4([alpha.clone(), beta.clone(), Frac::zero(), Frac::zero()]))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Foliation::All => write!(f, "all (alpha, beta)"),
            Foliation::Trivial => write!(f, "none"),
            Foliation::Line { alpha, beta } => {
                write!(f, "span({})", format_combination(&[alpha.clone(), beta.clone()], |i| format!("y{}", i + 1)))
            }
        }
    }
}

impl Serialize for Foliation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Foliation", 3)?;
        match self {
            Foliation::All => st.serialize_field("solution", "all")?,
            Foliation::Trivial => st.serialize_field("solution", "none")?,
            Foliation::Line { alpha, beta } => {
                st.serialize_field("solution", "line")?;
                st.serialize_field("alpha", &alpha.to_string())?;
                st.serialize_field("beta", &beta.to_string())?;
            }
        }
        st.serialize_field("description", &self.to_string())?;
        st.end()
    }
}

/// `x / y` when `y` is a single term.
fn div_term(x: &Frac, y: &Frac) -> Option<Frac> {
    let (m, c) = y.num().terms().next().filter(|_| y.num().num_terms() == 1)?;
    let back = Frac::from(Poly::term(Rational::one(), y.den().clone()));
    Some((x * &back).scale(&(Rational::one() / c)).div_monomial(m))
}

/// Rows `k = 1, 2, 3`: the `y4`-coefficients of `[y1, y_k]` and `[y2, y_k]`.
fn conditions(l: &LieAlgebra4) -> Vec<[Frac; 2]> {
    (0..3).map(|k| [l.c(0, k, 3), l.c(1, k, 3)]).collect()
}

pub fn characteristic_foliation(l: &LieAlgebra4) -> Foliation {
    let rows = conditions(l);
    let Some(r) = rows.iter().find(|r| !r[0].is_zero() || !r[1].is_zero()) else {
        return Foliation::All;
    };
    let independent = rows.iter().any(|s| !(&(&r[0] * &s[1]) - &(&r[1] * &s[0])).is_zero());
    if independent {
        return Foliation::Trivial;
    }
    if r[0].is_zero() {
        Foliation::Line { alpha: Frac::one(), beta: Frac::zero() }
    } else if let Some(alpha) = div_term(&r[1], &r[0]) {
        Foliation::Line { alpha, beta: -Frac::one() }
    } else {
        Foliation::Line { alpha: r[1].clone(), beta: -r[0].clone() }
    }
}

/// Substitutes the solution back: `[𝔏, y_k]` has no `y4` part for
/// `k = 1, 2, 3`, for the generator or for both basis lines when all work.
pub fn foliation_closure_check(l: &LieAlgebra4, sol: &Foliation) -> bool {
    let gens = match sol {
        Foliation::All => vec![Vector4::basis(0), Vector4::basis(1)],
        Foliation::Trivial => return characteristic_foliation(l) == Foliation::Trivial,
        Foliation::Line { .. } => vec![sol.generator().expect("line")],
    };
    gens.iter().all(|g| (0..3).all(|k| l.bracket(g, &Vector4::basis(k)).coord(3).is_zero()))
}
