//! Textual structure-constant tables, shared by the catalogs and the
//! inline JSON format `{basis_dim, brackets: [{i, j, coeffs}], parameters, nonzero}`.

use serde::{Deserialize, Serialize};

use super::algebra::{pair_index, LieAlgebra4, Vector4, DIM};
use crate::algebra::{parse_frac, parse_poly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default = "default_dim")]
    pub basis_dim: usize,
    pub brackets: Vec<BracketSpec>,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default)]
    pub nonzero: Vec<String>,
}

fn default_dim() -> usize {
    DIM
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self, name: &str) -> Result<LieAlgebra4> {
        if self.basis_dim != DIM {
            return Err(Error::Parse(format!("basis_dim must be 4, got {}", self.basis_dim)));
        }
        let mut consts: [Vector4; 6] = Default::default();
        let mut seen = [false; 6];
        for b in &self.brackets {
            if !(1..=DIM).contains(&b.i) || !(1..=DIM).contains(&b.j) || b.i == b.j {
                return Err(Error::Parse(format!("bad bracket indices ({}, {})", b.i, b.j)));
            }
            if b.coeffs.len() != DIM {
                return Err(Error::Parse(format!("bracket [y{},y{}] needs 4 coefficients", b.i, b.j)));
            }
            let mut v = Vector4::zero();
            for (k, s) in b.coeffs.iter().enumerate() {
                v.0[k] = parse_frac(s)?;
            }
            let (i, j) = (b.i - 1, b.j - 1);
            let (lo, hi, v) = if i < j { (i, j, v) } else { (j, i, v.scale(&crate::algebra::Frac::int(-1))) };
            let p = pair_index(lo, hi);
            if seen[p] {
                return Err(Error::Parse(format!("bracket [y{},y{}] given twice", lo + 1, hi + 1)));
            }
            seen[p] = true;
            consts[p] = v;
        }
        let nonzero = self.nonzero.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>()?;
        let alg = LieAlgebra4::new(name, consts, nonzero);
        if !self.parameters.is_empty() {
            let declared: std::collections::BTreeSet<Var> =
                self.parameters.iter().map(|s| Var::new(s)).collect();
            if let Some(v) = alg.params().into_iter().find(|v| !declared.contains(v)) {
                return Err(Error::Parse(format!("undeclared parameter `{v}`")));
            }
        }
        Ok(alg)
    }

    /// Canonical table of an algebra; zero brackets are omitted.
    pub fn of(alg: &LieAlgebra4) -> Self {
        let brackets = super::algebra::PAIRS
            .iter()
            .zip(alg.structure())
            .filter(|(_, v)| !v.is_zero())
            .map(|(&(i, j), v)| BracketSpec {
                i: i + 1,
                j: j + 1,
                coeffs: v.0.iter().map(ToString::to_string).collect(),
            })
            .collect();
        AlgebraSpec {
            basis_dim: DIM,
            brackets,
            parameters: alg.params().iter().map(|v| v.name().to_string()).collect(),
            nonzero: alg.nonzero().iter().map(ToString::to_string).collect(),
        }
    }
}

/// Builds an algebra from `(i, j, [c1, c2, c3, c4])` rows with 1-based indices.
pub(crate) fn table(name: &str, rows: &[(usize, usize, [&str; 4])], nonzero: &[&str]) -> LieAlgebra4 {
    let spec = AlgebraSpec {
        basis_dim: DIM,
        brackets: rows
            .iter()
            .map(|(i, j, c)| BracketSpec { i: *i, j: *j, coeffs: c.iter().map(|s| s.to_string()).collect() })
            .collect(),
        parameters: Vec::new(),
        nonzero: nonzero.iter().map(|s| s.to_string()).collect(),
    };
    spec.build(name).expect("catalog tables parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"basis_dim":4,"brackets":[{"i":1,"j":2,"coeffs":["0","0","1","0"]},
            {"i":4,"j":1,"coeffs":["0","0","-a","0"]}],"parameters":["a"],"nonzero":["a"]}"#;
        let alg = AlgebraSpec::from_json(text).unwrap().build("x").unwrap();
        assert_eq!(alg.basis_bracket(0, 3).to_string(), "a*y3");
        let again = AlgebraSpec::of(&alg).build("x").unwrap();
        assert_eq!(again, alg);
    }

    #[test]
    fn rejects_bad_tables() {
        let bad = [
            r#"{"basis_dim":3,"brackets":[]}"#,
            r#"{"brackets":[{"i":1,"j":1,"coeffs":["0","0","0","0"]}]}"#,
            r#"{"brackets":[{"i":1,"j":2,"coeffs":["0","0","0"]}]}"#,
            r#"{"brackets":[{"i":1,"j":2,"coeffs":["0","0","b","0"]}],"parameters":["a"]}"#,
            r#"{"brackets":[{"i":1,"j":2,"coeffs":["0","0","1/(a+1)","0"]}]}"#,
            r#"{"brackets":"#,
        ];
        for t in bad {
            assert!(AlgebraSpec::from_json(t).and_then(|s| s.build("x")).is_err(), "{t}");
        }
    }
}
