use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::rank::rational_rank;
use crate::algebra::{parse_poly, Assignment, Frac, Poly, QMatrix, Rational};
use crate::error::{Error, Result};
use crate::lie::{class_type, type_info, ClassParams, LieAlgebra4, Vector4, DIM};
use crate::superalg::exterior::Ext;

/// A plane spanned by `w1 = Σ p_i y_i` and `w2 = Σ q_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePair {
    pub p: Vector4,
    pub q: Vector4,
}

impl PlanePair {
    pub fn new(p: Vector4, q: Vector4) -> Self {
        PlanePair { p, q }
    }

    /// Coordinates are the variables `p1..p4`, `q1..q4`.
    pub fn symbolic() -> Self {
        let v = |c: char| Vector4::from_polys(std::array::from_fn(|i| Poly::var(&format!("{c}{}", i + 1))));
        PlanePair { p: v('p'), q: v('q') }
    }

    pub fn rational(p: &[Rational; DIM], q: &[Rational; DIM]) -> Self {
        PlanePair { p: Vector4::from_rationals(p), q: Vector4::from_rationals(q) }
    }

    /// Parses `p=0,0,0,1;q=1,0,1,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = None;
        let mut q = None;
        for part in s.split(';') {
            let (key, vals) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad plane `{s}`")))?;
            let xs = vals
                .split(',')
                .map(|x| crate::algebra::rational::parse_rational(x.trim()))
                .collect::<Result<Vec<_>>>()?;
            let arr: [Rational; DIM] =
                xs.try_into().map_err(|_| Error::Parse(format!("plane vector needs 4 entries in `{s}`")))?;
            match key.trim() {
                "p" => p = Some(arr),
                "q" => q = Some(arr),
                k => return Err(Error::Parse(format!("unknown plane key `{k}`"))),
            }
        }
        match (p, q) {
            (Some(p), Some(q)) => Ok(Self::rational(&p, &q)),
            _ => Err(Error::Parse(format!("plane `{s}` needs both p and q"))),
        }
    }

    fn flag(&self, l: &LieAlgebra4) -> [Vector4; 4] {
        let w3 = l.bracket(&self.p, &self.q);
        let w4 = l.bracket(&self.p, &w3);
        [self.p.clone(), self.q.clone(), w3, w4]
    }
}

impl fmt::Display for PlanePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector4| v.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "p={};q={}", show(&self.p), show(&self.q))
    }
}

fn as_ext(v: &Vector4) -> Ext {
    let mut e = Ext::zero();
    for (i, c) in v.0.iter().enumerate() {
        e.add_term(1 << i, c.clone());
    }
    e
}

fn wedge_all(vs: &[Vector4]) -> Ext {
    vs.iter().fold(Ext::one(), |acc, v| acc.wedge(&as_ext(v)))
}

/// `(w1 ∧ w2 ∧ w3 ∧ w4) / (y1 ∧ y2 ∧ y3 ∧ y4)` with `w3 = [w1, w2]`, `w4 = [w1, w3]`.
pub fn elc(l: &LieAlgebra4, d: &PlanePair) -> Frac {
    let top = wedge_all(&d.flag(l));
    let c = top.terms().next().map(|(_, c)| c.clone()).unwrap_or_default();
    c
}

/// Replaces every `Det(i,j)` by `(pi*qj - pj*qi)`.
pub fn expand_det(s: &str) -> String {
    let mut out = String::new();
    let mut rest = s;
    while let Some(k) = rest.find("Det(") {
        out.push_str(&rest[..k]);
        let after = &rest[k + 4..];
        let close = after.find(')').unwrap_or(after.len());
        let args: Vec<&str> = after[..close].split(',').map(str::trim).collect();
        if let [i, j] = args[..] {
            out.push_str(&format!("(p{i}*q{j} - p{j}*q{i})"));
        } else {
            out.push_str(&rest[k..k + 4 + close + 1]);
        }
        rest = &after[(close + 1).min(after.len())..];
    }
    out.push_str(rest);
    out
}

/// Closed form of the Engel-like coefficient of classification type `id`.
pub fn elc_closed_form(id: usize) -> Result<&'static str> {
    Ok(match id {
        1 | 4 => "p4*Det(3,4)^3",
        2 => "(a-1)^2*p4*Det(1,4)*Det(3,4)^2",
        3 => "p4*Det(1,4)*Det(3,4)^2",
        5 => "(a-1)*(b-1)*(a-b)*p4*Det(1,4)*Det(2,4)*Det(3,4)",
        6 => "((a-b)^2+1)*p4*Det(1,4)*(Det(2,4)^2+Det(3,4)^2)",
        7 => "Det(3,4)^2*(p4*Det(1,4)+p4*Det(2,3)+p3*Det(3,4))",
        8 => "-2*Det(2,4)*Det(3,4)*(p4*Det(1,4)-p3*Det(2,4)-p2*Det(3,4))",
        9 => "-(b-1)*Det(2,4)*Det(3,4)*(p3*Det(1,4)+b*(p4*Det(1,4)-p2*Det(3,4)))",
        10 => "(Det(2,4)^2+Det(3,4)^2)*(p4*Det(1,4)+p2*Det(2,4)+p3*Det(3,4))",
        11 => "(Det(2,4)^2+Det(3,4)^2)*(a^2*p4*Det(1,4)+a*p4*Det(2,3)+p4*Det(1,4)+p2*Det(2,4)+p3*Det(3,4))",
        12 => "p4*Det(3,4)*(Det(1,3)^2+Det(1,4)^2+Det(2,3)^2+Det(2,4)^2+2*Det(1,2)*Det(3,4))",
        _ => return Err(Error::InvalidId { what: "class type", id }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElcCheck {
    pub id: usize,
    pub closed_form: String,
    /// Computed coefficient, canonical expanded form.
    pub computed: String,
    pub matches: bool,
    /// `computed - closed form`, canonical; "0" when they agree.
    pub difference: String,
}

pub fn elc_formula_check(id: usize) -> Result<ElcCheck> {
    let form = elc_closed_form(id)?;
    let expected = parse_poly(&expand_det(form))?;
    let l = class_type(id, &ClassParams::default())?;
    let got = elc(&l, &PlanePair::symbolic());
    let got = if got.is_poly() { got.num().clone() } else { return Err(Error::Arithmetic("non-polynomial E-l-C".into())) };
    let diff = &got - &expected;
    Ok(ElcCheck {
        id,
        closed_form: form.to_string(),
        computed: got.to_string(),
        matches: diff.is_zero(),
        difference: diff.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSample {
    pub params: Vec<(String, String)>,
    pub triple_nonzero: bool,
    pub elc: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub id: usize,
    pub plane: String,
    /// E-l-C after substituting the plane, still symbolic in unsupplied parameters.
    pub elc: String,
    pub samples: Vec<WitnessSample>,
    pub verified: bool,
}

/// Checks that the plane gives independent `{w1,w2,w3}` and `{w1,..,w4}`.
/// Unsupplied type parameters are sampled at admissible points.
pub fn verify_witness(id: usize, plane: &PlanePair, params: &ClassParams) -> Result<WitnessReport> {
    let info = type_info(id)?;
    let l = class_type(id, params)?;
    let flag = plane.flag(&l);
    let triple = wedge_all(&flag[..3]);
    let top = elc(&l, plane);
    let free_a = info.uses_a && params.a.is_none();
    let free_b = info.uses_b && params.b.is_none();
    let points: Vec<ClassParams> = if free_a || free_b {
        info.admissible_points(5)
            .into_iter()
            .map(|s| ClassParams {
                a: params.a.clone().or(if free_a { s.a } else { None }),
                b: params.b.clone().or(if free_b { s.b } else { None }),
            })
            .collect()
    } else {
        vec![params.clone()]
    };
    let mut samples = Vec::new();
    for pt in &points {
        let asg = pt.assignment();
        let t = triple.terms().map(|(_, c)| c.eval(&asg)).collect::<Result<Vec<Rational>>>()?;
        let e = top.eval(&asg)?;
        samples.push(WitnessSample {
            params: asg.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect(),
            triple_nonzero: t.iter().any(|x| !x.is_zero()),
            elc: e.to_string(),
        });
    }
    let verified = samples.iter().any(|s| s.triple_nonzero && s.elc != "0");
    Ok(WitnessReport { id, plane: plane.to_string(), elc: top.to_string(), samples, verified })
}

fn eval_vec(v: &Vector4, pt: &Assignment) -> Result<Vec<Rational>> {
    v.0.iter().map(|c| c.eval(pt)).collect()
}

fn span_rank(vs: &[Vec<Rational>]) -> usize {
    rational_rank(&QMatrix::from_dense(vs.to_vec()))
}

/// Dimensions of `D + [D,D]` and of the next step, at a full specialization.
pub fn engel_flag_check(l: &LieAlgebra4, d: &PlanePair, pt: &Assignment) -> Result<(usize, usize)> {
    let ls = l.specialize(pt)?;
    if let Some(v) = ls.params().into_iter().next() {
        return Err(Error::MissingParameter(v.name().to_string()));
    }
    let p = Vector4::from_rationals(&eval_vec(&d.p, pt)?.try_into().expect("4 entries"));
    let q = Vector4::from_rationals(&eval_vec(&d.q, pt)?.try_into().expect("4 entries"));
    let mut d2 = vec![p.clone(), q.clone(), ls.bracket(&p, &q)];
    let d2_rank = span_rank(&d2.iter().map(|v| eval_vec(v, pt)).collect::<Result<Vec<_>>>()?);
    let mut extra = Vec::new();
    for a in 0..d2.len() {
        for b in a + 1..d2.len() {
            extra.push(ls.bracket(&d2[a], &d2[b]));
        }
    }
    d2.extend(extra);
    let d3_rank = span_rank(&d2.iter().map(|v| eval_vec(v, pt)).collect::<Result<Vec<_>>>()?);
    Ok((d2_rank, d3_rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Var};
    use crate::lie::family;

    fn r4(xs: [i64; 4]) -> [Rational; 4] {
        xs.map(int)
    }

    #[test]
    fn det_expansion() {
        assert_eq!(expand_det("p4*Det(3,4)^3"), "p4*(p3*q4 - p4*q3)^3");
    }

    #[test]
    fn type_one() {
        let l = class_type(1, &ClassParams::default()).unwrap();
        let e = elc(&l, &PlanePair::symbolic());
        assert_eq!(e.num(), &parse_poly(&expand_det("p4*Det(3,4)^3")).unwrap());
        let w = PlanePair::rational(&r4([0, 0, 0, 1]), &r4([0, 0, 1, 0]));
        assert_eq!(elc(&l, &w), Frac::int(-1));
        let same = PlanePair::new(PlanePair::symbolic().p, PlanePair::symbolic().p);
        assert!(elc(&l, &same).is_zero());
        assert!(elc_formula_check(1).unwrap().matches);
        assert!(elc_formula_check(12).unwrap().matches);
    }

    #[test]
    fn witnesses_and_constraints() {
        let w = PlanePair::parse("p=0,0,0,1;q=0,0,1,0").unwrap();
        assert!(verify_witness(1, &w, &ClassParams::default()).unwrap().verified);
        let w7 = PlanePair::parse("p=0,0,1,1;q=0,0,0,1").unwrap();
        assert!(verify_witness(7, &w7, &ClassParams::default()).unwrap().verified);
        let bad = ClassParams::new(Some(int(0)), None);
        assert!(matches!(verify_witness(5, &w, &bad), Err(Error::ConstraintViolation(_))));
        let w2 = PlanePair::parse("p=0,0,0,1;q=1,0,1,0").unwrap();
        assert!(verify_witness(2, &w2, &ClassParams::new(Some(int(2)), None)).unwrap().verified);
        assert!(!verify_witness(2, &w2, &ClassParams::new(Some(int(1)), None)).unwrap().verified);
        assert!(PlanePair::parse("p=0,0,1;q=1,0,1,0").is_err());
        assert!(PlanePair::parse("p=0,0,0,1").is_err());
    }

    #[test]
    fn no_structure_at_a_equal_one() {
        let l = class_type(2, &ClassParams::new(Some(int(1)), None)).unwrap();
        assert!(elc(&l, &PlanePair::symbolic()).is_zero());
    }

    #[test]
    fn flags() {
        let f1 = family(1).unwrap();
        let pt: Assignment = f1.params().into_iter().map(|v| (v, rat(3, 7))).collect();
        let d = PlanePair::rational(&r4([1, 0, 0, 0]), &r4([0, 1, 0, 0]));
        assert_eq!(engel_flag_check(&f1, &d, &pt).unwrap(), (3, 4));
        assert_eq!(engel_flag_check(&LieAlgebra4::abelian(), &d, &Assignment::new()).unwrap(), (2, 2));
        let t1 = class_type(1, &ClassParams::default()).unwrap();
        let d1 = PlanePair::rational(&r4([0, 0, 0, 1]), &r4([0, 0, 1, 0]));
        assert_eq!(engel_flag_check(&t1, &d1, &Assignment::new()).unwrap(), (3, 4));
        let partial: Assignment = [(Var::new("C143"), int(1))].into_iter().collect();
        assert!(matches!(engel_flag_check(&f1, &d, &partial), Err(Error::MissingParameter(_))));
    }
}
