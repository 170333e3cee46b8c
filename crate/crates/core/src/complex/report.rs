use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::rank::ModeRecord;
use crate::algebra::{matrix_rank, Assignment, RankInfo, RankMode};
use crate::error::Result;
use crate::lie::LieAlgebra4;
use crate::superalg::ComplexKind;

use super::boundary::{boundary_matrix, BoundaryBuilder};
use super::chain::{chain_basis, max_length};

/// Where the algebra of a report came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRef {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
}

impl AlgebraRef {
    pub fn family(id: usize) -> Self {
        AlgebraRef { source: "family".into(), id: Some(id), params: None }
    }

    pub fn class_type(id: usize, params: BTreeMap<String, String>) -> Self {
        AlgebraRef { source: "classType".into(), id: Some(id), params: (!params.is_empty()).then_some(params) }
    }

    pub fn inline(name: &str) -> Self {
        let params = BTreeMap::from([("name".to_string(), name.to_string())]);
        AlgebraRef { source: "inline".into(), id: None, params: Some(params) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub m: usize,
    pub dim: usize,
    pub ker: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub kind: ComplexKind,
    pub algebra: AlgebraRef,
    pub weight: i32,
    pub mode: ModeRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialization: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub nonzero: Vec<String>,
    pub rows: Vec<BettiRow>,
    pub euler: i64,
}

impl BettiReport {
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }

    pub fn kers(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.ker).collect()
    }

    pub fn bettis(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.betti).collect()
    }

    pub fn betti_euler(&self) -> i64 {
        self.rows.iter().map(|r| if r.m % 2 == 0 { r.betti as i64 } else { -(r.betti as i64) }).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,dim,ker,betti\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{}", r.m, r.dim, r.ker, r.betti);
        }
        s
    }

    /// The `m / SpaD / KerD / Bett` layout; `paper_weight` prints `|weight|`.
    pub fn to_table(&self, paper_weight: bool) -> String {
        let who = match (&self.algebra.id, self.algebra.source.as_str()) {
            (Some(id), "family") => format!("family {id}"),
            (Some(id), _) => format!("type {id}"),
            (None, _) => "inline algebra".into(),
        };
        let w = if paper_weight { self.weight.abs() } else { self.weight };
        let mut s = format!("{} complex, weight {w}, {who}", self.kind);
        if let Some(p) = &self.algebra.params {
            if self.algebra.source == "classType" {
                let kv: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = write!(s, " ({})", kv.join(", "));
            }
        }
        let _ = write!(s, "\nmode: {}", self.mode.variant);
        if let Some(seed) = self.mode.seed {
            let _ = write!(s, " (seed {seed}, trials {}, range {})", self.mode.trials.unwrap_or(0), self.mode.range.unwrap_or(0));
        }
        if let Some(sp) = &self.specialization {
            let kv: Vec<String> = sp.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(s, "\nspecialization: {}", kv.join(", "));
        }
        if !self.nonzero.is_empty() {
            let _ = write!(s, "\nassumed nonzero: {}", self.nonzero.join(", "));
        }
        s.push('\n');
        let line = |label: &str, xs: Vec<String>| {
            let cells: Vec<String> = xs.iter().map(|x| format!("{x:>5}")).collect();
            format!("{label:<5}{}\n", cells.join(""))
        };
        s += &line("m", self.rows.iter().map(|r| r.m.to_string()).collect());
        s += &line("SpaD", self.rows.iter().map(|r| r.dim.to_string()).collect());
        s += &line("KerD", self.rows.iter().map(|r| r.ker.to_string()).collect());
        s += &line("Bett", self.rows.iter().map(|r| r.betti.to_string()).collect());
        let _ = writeln!(s, "euler {}", self.euler);
        s
    }
}

fn assignment_record(a: &Assignment) -> BTreeMap<String, String> {
    a.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect()
}

/// Betti numbers of the weighted complex. `specialization` may fix any
/// subset of the parameters; the remaining ones are treated by `mode`.
pub fn homology_report(
    kind: ComplexKind,
    weight: i32,
    alg: &LieAlgebra4,
    algebra: AlgebraRef,
    mode: &RankMode,
    specialization: Option<&Assignment>,
) -> Result<BettiReport> {
    let alg = match specialization {
        Some(pt) => alg.specialize(pt)?,
        None => alg.clone(),
    };
    let lo = usize::from(!(kind == ComplexKind::Tangent && weight == 0));
    let hi = max_length(kind, weight);
    let bases: Vec<_> = (0..=hi + 1).map(|m| chain_basis(kind, weight, m)).collect();
    let builder = BoundaryBuilder::new(kind, &alg)?;
    // rank of ∂_m for m in lo..=hi+1; ∂_lo maps out of range and is zero
    let mut ranks = vec![0usize; hi + 2];
    for m in lo + 1..=hi {
        if bases[m].dim() == 0 || bases[m - 1].dim() == 0 {
            continue;
        }
        let mat = builder.matrix(&bases[m], &bases[m - 1]);
        ranks[m] = matrix_rank(&mat, mode)?.rank;
    }
    let mut rows = Vec::new();
    let mut euler = 0i64;
    for m in lo..=hi {
        let dim = bases[m].dim();
        if dim == 0 {
            continue;
        }
        let ker = dim - ranks[m];
        rows.push(BettiRow { m, dim, ker, betti: ker - ranks[m + 1] });
        euler += if m % 2 == 0 { dim as i64 } else { -(dim as i64) };
    }
    Ok(BettiReport {
        kind,
        algebra,
        weight,
        mode: mode.record(),
        specialization: specialization.map(assignment_record),
        nonzero: alg.nonzero().iter().map(ToString::to_string).collect(),
        rows,
        euler,
    })
}

/// Exact rank and kernel of one boundary map at a full specialization.
pub fn strata_report(
    kind: ComplexKind,
    weight: i32,
    m: usize,
    alg: &LieAlgebra4,
    assignment: &Assignment,
) -> Result<RankInfo> {
    let mat = boundary_matrix(kind, weight, m, alg)?;
    for v in alg.params() {
        if !assignment.contains_key(&v) {
            return Err(crate::error::Error::MissingParameter(v.name().to_string()));
        }
    }
    matrix_rank(&mat, &RankMode::Specialized(assignment.clone()))
}
