//! The Engel ansatz, the six Engel-type families and the twelve
//! classification types.

use num_traits::{One, Signed, Zero};

use super::algebra::{LieAlgebra4, Vector4};
use super::spec::table;
use crate::algebra::{rat, Assignment, Frac, Poly, Rational, Var};
use crate::error::{Error, Result};

pub const FAMILY_IDS: std::ops::RangeInclusive<usize> = 1..=6;
pub const TYPE_IDS: std::ops::RangeInclusive<usize> = 1..=12;

/// `[y1,y2] = y3`, `[y1,y3] = y4`, and the remaining four brackets with
/// free coefficients `C{i}{j}{k}`.
pub fn engel_ansatz() -> LieAlgebra4 {
    let mut consts: [Vector4; 6] = Default::default();
    consts[0] = Vector4::basis(2);
    consts[1] = Vector4::basis(3);
    for (slot, (i, j)) in [(2, (1, 4)), (3, (2, 3)), (4, (2, 4)), (5, (3, 4))] {
        consts[slot] = Vector4::from_polys(std::array::from_fn(|k| Poly::var(&format!("C{i}{j}{}", k + 1))));
    }
    LieAlgebra4::new("ansatz", consts, Vec::new())
}

const K: &str = "(C144^2 + 4*C143)";

/// Engel-type family `id` (1..=6) on top of the ansatz.
pub fn family(id: usize) -> Result<LieAlgebra4> {
    let fixed: [(usize, usize, [&str; 4]); 2] = [(1, 2, ["0", "0", "1", "0"]), (1, 3, ["0", "0", "0", "1"])];
    let name = format!("family {id}");
    let rows: Vec<(usize, usize, [String; 4])> = match id {
        1 => vec![
            (1, 4, ["0", "0", "C143", "C144"].map(String::from)),
            (2, 3, ["0", "0", "-C144*C234 + C244", "C234"].map(String::from)),
            (2, 4, ["0", "0", "C143*C234", "C244"].map(String::from)),
        ],
        2 => {
            let a = "(C144*C234 - 2*C244)";
            let b = "(C144*C234 - C244)";
            let f = format!("{K}*{b}/(8*C144^2)");
            vec![
                (1, 4, [format!("-{K}*{a}/8"), format!("-{K}*C144/8"), "C143".into(), "C144".into()]),
                (
                    2,
                    3,
                    [
                        format!("-{K}*{b}*{a}/(2*C144^2)"),
                        format!("-{K}*{b}*C144/(2*C144^2)"),
                        "-C144*C234 + C244".into(),
                        "C234".into(),
                    ],
                ),
                (
                    2,
                    4,
                    [
                        format!("-{a}*{K}*C234/8"),
                        format!("-{K}*C144*C234/8"),
                        "-(C144^3*C234 + 2*C143*C144*C234 - C144^2*C244 - 4*C143*C244)/(2*C144)".into(),
                        "C244".into(),
                    ],
                ),
                (
                    3,
                    4,
                    [
                        format!("{f}*{a}*{K}"),
                        format!("{f}*C144*{K}"),
                        format!("{f}*2*C144^2"),
                        format!("-{f}*4*C144"),
                    ],
                ),
            ]
        }
        3 => vec![
            (1, 4, ["-C142*C244/C144", "C142", "C143", "C144"].map(String::from)),
            (2, 3, ["0", "0", "0", "C244/C144"].map(String::from)),
            (
                2,
                4,
                ["-C142*C244^2/C144^2", "C142*C244/C144", "C143*C244/C144", "C244"].map(String::from),
            ),
        ],
        4 => vec![
            (2, 3, ["C231", "0", "C244", "C234"].map(String::from)),
            (2, 4, ["0", "0", "0", "C244"].map(String::from)),
        ],
        5 => vec![
            (1, 4, ["-C142*C234", "C142", "C143", "0"].map(String::from)),
            (2, 3, ["0", "0", "0", "C234"].map(String::from)),
            (2, 4, ["-C142*C234^2", "C142*C234", "C143*C234", "0"].map(String::from)),
        ],
        6 => vec![
            (1, 4, ["0", "0", "C143", "0"].map(String::from)),
            (2, 3, ["C231", "C344", "0", "C234"].map(String::from)),
            (2, 4, ["0", "0", "C143*C234 + C344", "0"].map(String::from)),
            (3, 4, ["-C143*C231", "-C143*C344", "0", "C344"].map(String::from)),
        ],
        _ => return Err(Error::InvalidId { what: "family", id }),
    };
    let mut all: Vec<(usize, usize, [&str; 4])> = fixed.to_vec();
    all.extend(rows.iter().map(|(i, j, c)| (*i, *j, [c[0].as_str(), c[1].as_str(), c[2].as_str(), c[3].as_str()])));
    let nonzero: &[&str] = if matches!(id, 2 | 3) { &["C144"] } else { &[] };
    Ok(table(&name, &all, nonzero))
}

/// Optional concrete values for the classification parameters `a`, `b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassParams {
    pub a: Option<Rational>,
    pub b: Option<Rational>,
}

impl ClassParams {
    pub fn new(a: Option<Rational>, b: Option<Rational>) -> Self {
        ClassParams { a, b }
    }

    pub fn assignment(&self) -> Assignment {
        let mut out = Assignment::new();
        if let Some(a) = &self.a {
            out.insert(Var::new("a"), a.clone());
        }
        if let Some(b) = &self.b {
            out.insert(Var::new("b"), b.clone());
        }
        out
    }
}

/// Parameters a type depends on and the condition they must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeInfo {
    pub id: usize,
    pub uses_a: bool,
    pub uses_b: bool,
    pub constraint: Option<&'static str>,
}

pub fn type_info(id: usize) -> Result<TypeInfo> {
    let (uses_a, uses_b, constraint) = match id {
        1 | 3 | 4 | 7 | 8 | 10 | 12 => (false, false, None),
        2 | 11 => (true, false, None),
        5 => (true, true, Some("a*b != 0")),
        6 => (true, true, Some("a != 0 and b >= 0")),
        9 => (false, true, Some("-1 < b <= 1")),
        _ => return Err(Error::InvalidId { what: "class type", id }),
    };
    Ok(TypeInfo { id, uses_a, uses_b, constraint })
}

impl TypeInfo {
    /// Checks the supplied concrete parameters; absent ones are not checked.
    pub fn check(&self, params: &ClassParams) -> Result<()> {
        let a = params.a.as_ref();
        let b = params.b.as_ref();
        let ok = match self.id {
            5 => a.is_none_or(|a| !a.is_zero()) && b.is_none_or(|b| !b.is_zero()),
            6 => a.is_none_or(|a| !a.is_zero()) && b.is_none_or(|b| !b.is_negative()),
            9 => b.is_none_or(|b| *b > -Rational::one() && *b <= Rational::one()),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ConstraintViolation(format!(
                "type {} requires {}",
                self.id,
                self.constraint.unwrap_or("nothing")
            )))
        }
    }

    /// Polynomials that must not vanish, as far as the constraint is algebraic.
    pub fn nonzero(&self) -> Vec<Poly> {
        match self.id {
            5 => vec![Poly::var("a"), Poly::var("b")],
            6 => vec![Poly::var("a")],
            9 => vec![&Poly::var("b") + &Poly::one()],
            _ => Vec::new(),
        }
    }

    /// Deterministic admissible parameter points, for sampling-based checks.
    pub fn admissible_points(&self, n: usize) -> Vec<ClassParams> {
        let a_vals = [rat(2, 1), rat(-3, 1), rat(5, 2), rat(7, 3), rat(-1, 4), rat(11, 1), rat(3, 5)];
        let b_vals = [rat(1, 2), rat(1, 3), rat(3, 1), rat(-1, 2), rat(5, 7), rat(9, 4), rat(1, 1)];
        let mut out = Vec::new();
        for k in 0..a_vals.len() * b_vals.len() {
            if out.len() == n {
                break;
            }
            let p = ClassParams {
                a: self.uses_a.then(|| a_vals[k % a_vals.len()].clone()),
                b: self.uses_b.then(|| b_vals[(k + k / a_vals.len()) % b_vals.len()].clone()),
            };
            if self.check(&p).is_ok() && !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Classification type `id` (1..=12). Unsupplied parameters stay symbolic.
pub fn class_type(id: usize, params: &ClassParams) -> Result<LieAlgebra4> {
    let info = type_info(id)?;
    info.check(params)?;
    let rows: Vec<(usize, usize, [&str; 4])> = match id {
        1 => vec![(2, 4, ["1", "0", "0", "0"]), (3, 4, ["0", "1", "0", "0"])],
        2 => vec![(1, 4, ["a", "0", "0", "0"]), (2, 4, ["0", "1", "0", "0"]), (3, 4, ["0", "1", "1", "0"])],
        3 => vec![(1, 4, ["1", "0", "0", "0"]), (3, 4, ["0", "1", "0", "0"])],
        4 => vec![(1, 4, ["1", "0", "0", "0"]), (2, 4, ["1", "1", "0", "0"]), (3, 4, ["0", "1", "1", "0"])],
        5 => vec![(1, 4, ["1", "0", "0", "0"]), (2, 4, ["0", "a", "0", "0"]), (3, 4, ["0", "0", "b", "0"])],
        6 => vec![(1, 4, ["a", "0", "0", "0"]), (2, 4, ["0", "b", "-1", "0"]), (3, 4, ["0", "1", "b", "0"])],
        7 => vec![
            (1, 4, ["2", "0", "0", "0"]),
            (2, 3, ["1", "0", "0", "0"]),
            (2, 4, ["0", "1", "0", "0"]),
            (3, 4, ["0", "1", "1", "0"]),
        ],
        8 => vec![(2, 3, ["1", "0", "0", "0"]), (2, 4, ["0", "1", "0", "0"]), (3, 4, ["0", "0", "-1", "0"])],
        9 => vec![
            (1, 4, ["1 + b", "0", "0", "0"]),
            (2, 3, ["1", "0", "0", "0"]),
            (2, 4, ["0", "1", "0", "0"]),
            (3, 4, ["0", "0", "b", "0"]),
        ],
        10 => vec![(2, 3, ["1", "0", "0", "0"]), (2, 4, ["0", "0", "-1", "0"]), (3, 4, ["0", "1", "0", "0"])],
        11 => vec![
            (1, 4, ["2*a", "0", "0", "0"]),
            (2, 3, ["1", "0", "0", "0"]),
            (2, 4, ["0", "a", "-1", "0"]),
            (3, 4, ["0", "1", "a", "0"]),
        ],
        12 => vec![
            (1, 3, ["1", "0", "0", "0"]),
            (1, 4, ["0", "-1", "0", "0"]),
            (2, 3, ["0", "1", "0", "0"]),
            (2, 4, ["1", "0", "0", "0"]),
        ],
        _ => unreachable!(),
    };
    let alg = table(&format!("type {id}"), &rows, &[]);
    let alg = LieAlgebra4::new(alg.name(), alg.structure().clone(), info.nonzero());
    alg.specialize(&params.assignment())
}

/// Coefficient `c` as a [`Frac`], for tests and display.
pub fn coeff(alg: &LieAlgebra4, i: usize, j: usize, k: usize) -> Frac {
    alg.c(i - 1, j - 1, k - 1)
}
