#![allow(dead_code)]

use std::collections::BTreeMap;

use engel_core::algebra::rank::admissible_point;
use engel_core::algebra::Frac;
use engel_core::lie::{family, LieAlgebra4, Vector4};
use engel_core::superalg::{
    ce_differential, lie_derivative, lie_derivative_coordinate, super_bracket, ComplexKind, GradedElement,
    LetterTable,
};

/// Two fixed admissible rational specializations of a family.
pub fn specializations(id: usize) -> Vec<LieAlgebra4> {
    let f = family(id).unwrap();
    (0..2)
        .map(|t| {
            let pt = admissible_point(&f.params(), f.nonzero(), 77, t, 50).unwrap();
            f.specialize(&pt).unwrap()
        })
        .collect()
}

fn sign(odd: bool) -> Frac {
    if odd {
        Frac::int(-1)
    } else {
        Frac::one()
    }
}

/// Sum of elements that may live in different components; zero iff every part is zero.
fn all_zero(parts: &[GradedElement]) -> bool {
    let mut acc: Vec<GradedElement> = Vec::new();
    for p in parts {
        match acc.iter_mut().find(|a| a.component() == p.component()) {
            Some(a) => *a = a.add(p).unwrap(),
            None => acc.push(p.clone()),
        }
    }
    acc.iter().all(GradedElement::is_zero)
}

pub fn grade_and_antisymmetry(l: &LieAlgebra4, kind: ComplexKind) -> Result<(), String> {
    let letters = LetterTable::letters_of(kind);
    for u in &letters {
        for v in &letters {
            let (eu, ev) = (u.element(), v.element());
            let uv = super_bracket(kind, &eu, &ev, l).map_err(|e| e.to_string())?;
            let vu = super_bracket(kind, &ev, &eu, l).map_err(|e| e.to_string())?;
            if uv.component().grade() != u.grade() + v.grade() {
                return Err(format!("{kind}: grade of [{u},{v}]"));
            }
            let s = sign(eu.component().parity() == 1 && ev.component().parity() == 1);
            if !all_zero(&[uv, vu.scale(&s)]) {
                return Err(format!("{kind}: antisymmetry of [{u},{v}]"));
            }
        }
    }
    Ok(())
}

type Combo = Vec<(usize, Frac)>;

fn bracket_combo(t: &LetterTable, a: &Combo, b: &Combo) -> Combo {
    let mut acc: BTreeMap<usize, Frac> = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            for (k, c) in t.bracket(*i, *j) {
                let e = acc.entry(*k).or_default();
                *e = &*e + &(&(x * y) * c);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn super_jacobi(l: &LieAlgebra4, kind: ComplexKind) -> Result<(), String> {
    let t = LetterTable::new(kind, l).map_err(|e| e.to_string())?;
    let n = t.letters().len();
    let odd: Vec<bool> = t.letters().iter().map(|x| x.component.parity() == 1).collect();
    let unit = |i: usize| vec![(i, Frac::one())];
    for u in 0..n {
        for v in 0..n {
            let uv = bracket_combo(&t, &unit(u), &unit(v));
            let vw_cache: Vec<Combo> = (0..n).map(|w| bracket_combo(&t, &unit(v), &unit(w))).collect();
            for w in 0..n {
                let terms = [
                    (bracket_combo(&t, &uv, &unit(w)), odd[u] && odd[w]),
                    (bracket_combo(&t, &vw_cache[w], &unit(u)), odd[v] && odd[u]),
                    (bracket_combo(&t, &bracket_combo(&t, &unit(w), &unit(u)), &unit(v)), odd[w] && odd[v]),
                ];
                let mut acc: BTreeMap<usize, Frac> = BTreeMap::new();
                for (c, s) in terms {
                    for (k, x) in c {
                        let e = acc.entry(k).or_default();
                        *e = &*e + &(&x * &sign(s));
                    }
                }
                if !acc.values().all(Frac::is_zero) {
                    return Err(format!("{kind}: letters {u}, {v}, {w}"));
                }
            }
        }
    }
    Ok(())
}

/// `d² = 0`, Cartan versus coordinate Lie derivative, and `L_[X,Y] = [L_X, L_Y]` on basis forms.
pub fn differential_identities(l: &LieAlgebra4) -> Result<(), String> {
    let forms = LetterTable::letters_of(ComplexKind::Cotangent);
    let ys: Vec<Vector4> = (0..4).map(Vector4::basis).collect();
    let err = |e: engel_core::Error| e.to_string();
    for f in &forms {
        let w = f.element();
        if !ce_differential(&ce_differential(&w, l).map_err(err)?, l).map_err(err)?.is_zero() {
            return Err(format!("d² on {f}"));
        }
        for x in &ys {
            if lie_derivative(x, &w, l).map_err(err)? != lie_derivative_coordinate(x, &w, l).map_err(err)? {
                return Err(format!("Cartan formula on {f}"));
            }
            for y in &ys {
                let lhs = lie_derivative(&l.bracket(x, y), &w, l).map_err(err)?;
                let xy = lie_derivative(x, &lie_derivative(y, &w, l).map_err(err)?, l).map_err(err)?;
                let yx = lie_derivative(y, &lie_derivative(x, &w, l).map_err(err)?, l).map_err(err)?;
                if lhs != xy.add(&yx.neg()).map_err(err)? {
                    return Err(format!("L_[X,Y] on {f}"));
                }
            }
        }
    }
    Ok(())
}
