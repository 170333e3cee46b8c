//! Brackets and differentials of the multivector, form and extended algebras.

use crate::algebra::{int, Frac};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra4, Vector4, DIM};

use super::element::{GradedComponent, GradedElement};
use super::exterior::{wedge_sign, Ext};

use GradedComponent::{Form, MultiVector, VectorPart};

fn sign(odd: bool) -> Frac {
    if odd {
        Frac::int(-1)
    } else {
        Frac::one()
    }
}

fn indices(mask: u8) -> Vec<usize> {
    (0..DIM).filter(|i| mask >> i & 1 == 1).collect()
}

fn mixed(op: &str, u: GradedComponent, v: GradedComponent) -> Error {
    Error::MixedKinds(format!("{op} of {} and {}", u.short_name(), v.short_name()))
}

pub fn wedge(u: &GradedElement, v: &GradedElement) -> Result<GradedElement> {
    let comp = match (u.component(), v.component()) {
        (MultiVector(a), MultiVector(b)) => MultiVector(a + b),
        (Form(p), Form(q)) => Form(p + q),
        (a, b) => return Err(mixed("wedge", a, b)),
    };
    Ok(GradedElement::from_ext(comp, &u.to_ext().wedge(&v.to_ext())))
}

pub(crate) fn schouten_ext(p: &Ext, q: &Ext, l: &LieAlgebra4) -> Ext {
    let mut out = Ext::zero();
    for (s, a) in p.terms() {
        let xs = indices(s);
        for (t, b) in q.terms() {
            let ys = indices(t);
            let ab = a * b;
            for (i, &xi) in xs.iter().enumerate() {
                for (j, &yj) in ys.iter().enumerate() {
                    let (sr, tr) = (s & !(1 << xi), t & !(1 << yj));
                    let Some(s1) = wedge_sign(sr, tr) else { continue };
                    let rest = sr | tr;
                    let br = l.basis_bracket(xi, yj);
                    for (k, c) in br.0.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let Some(s2) = wedge_sign(1 << k, rest) else { continue };
                        let f = (&ab * c).scale(&int(s1 * s2));
                        out.add_term(rest | 1 << k, if (i + j) % 2 == 1 { -f } else { f });
                    }
                }
            }
        }
    }
    out
}

/// Algebraic Schouten bracket; `[x, y]` of 1-vectors is the Lie bracket.
pub fn schouten_bracket(p: &GradedElement, q: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    let (MultiVector(a), MultiVector(b)) = (p.component(), q.component()) else {
        return Err(mixed("Schouten bracket", p.component(), q.component()));
    };
    let comp = MultiVector(a + b - 1);
    Ok(GradedElement::from_ext(comp, &schouten_ext(&p.to_ext(), &q.to_ext(), l)))
}

/// `dz^k = -Σ_{i<j} c_{ijk} z^i ∧ z^j`.
fn d_generator(k: usize, l: &LieAlgebra4) -> Ext {
    let mut out = Ext::zero();
    for &(i, j) in &crate::lie::PAIRS {
        let c = l.c(i, j, k);
        if !c.is_zero() {
            out.add_term(1 << i | 1 << j, -c);
        }
    }
    out
}

/// Applies the derivation determined by `gen` on generators; `odd` selects
/// the Koszul sign `(-1)^r` for the `r`-th factor.
fn derivation(w: &Ext, gen: &dyn Fn(usize) -> Ext, odd: bool) -> Ext {
    let mut out = Ext::zero();
    for (s, c) in w.terms() {
        let xs = indices(s);
        for (r, &k) in xs.iter().enumerate() {
            let prefix = xs[..r].iter().fold(0u8, |m, &i| m | 1 << i);
            let suffix = xs[r + 1..].iter().fold(0u8, |m, &i| m | 1 << i);
            let term = Ext::single(prefix, Frac::one()).wedge(&gen(k)).wedge(&Ext::single(suffix, Frac::one()));
            out = out.add(&term.scale(&(c * &sign(odd && r % 2 == 1))));
        }
    }
    out
}

pub(crate) fn d_ext(w: &Ext, l: &LieAlgebra4) -> Ext {
    derivation(w, &|k| d_generator(k, l), true)
}

pub(crate) fn contract_ext(x: &Vector4, w: &Ext) -> Ext {
    let mut out = Ext::zero();
    for (i, c) in x.0.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&w.contract(i).scale(c));
        }
    }
    out
}

pub(crate) fn lie_derivative_ext(x: &Vector4, w: &Ext, l: &LieAlgebra4) -> Ext {
    contract_ext(x, &d_ext(w, l)).add(&d_ext(&contract_ext(x, w), l))
}

fn expect_form(w: &GradedElement, op: &str) -> Result<usize> {
    match w.component() {
        Form(p) => Ok(p),
        c => Err(Error::MixedKinds(format!("{op} needs a form, got {}", c.short_name()))),
    }
}

pub fn ce_differential(w: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    let p = expect_form(w, "d")?;
    Ok(GradedElement::from_ext(Form(p + 1), &d_ext(&w.to_ext(), l)))
}

/// `[A, B] = (-1)^p d(A ∧ B)` for a `p`-form `A`.
pub fn form_bracket(a: &GradedElement, b: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    let (Form(p), Form(q)) = (a.component(), b.component()) else {
        return Err(mixed("form bracket", a.component(), b.component()));
    };
    let d = d_ext(&a.to_ext().wedge(&b.to_ext()), l);
    Ok(GradedElement::from_ext(Form(p + q + 1), &d.scale(&sign(p % 2 == 1))))
}

pub fn interior_product(x: &Vector4, w: &GradedElement) -> Result<GradedElement> {
    let p = expect_form(w, "interior product")?;
    if p == 0 {
        return Err(Error::DegreeUnderflow);
    }
    Ok(GradedElement::from_ext(Form(p - 1), &contract_ext(x, &w.to_ext())))
}

/// Cartan formula `L_X = i_X d + d i_X`.
pub fn lie_derivative(x: &Vector4, w: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    let p = expect_form(w, "Lie derivative")?;
    Ok(GradedElement::from_ext(Form(p), &lie_derivative_ext(x, &w.to_ext(), l)))
}

/// `(L_X ω)(Y_1..Y_p) = -Σ_k ω(Y_1, .., [X, Y_k], .., Y_p)`, applied as an even
/// derivation with `(L_X z^m)(y_k) = -z^m([X, y_k])`.
pub fn lie_derivative_coordinate(x: &Vector4, w: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    let p = expect_form(w, "Lie derivative")?;
    let brs: Vec<Vector4> = (0..DIM).map(|k| l.bracket(x, &Vector4::basis(k))).collect();
    let gen = |m: usize| {
        let mut e = Ext::zero();
        for (k, br) in brs.iter().enumerate() {
            e.add_term(1 << k, -br.0[m].clone());
        }
        e
    };
    Ok(GradedElement::from_ext(Form(p), &derivation(&w.to_ext(), &gen, false)))
}

/// Bracket of the extended algebra `g ⊕ Λ g*`.
pub fn extended_bracket(u: &GradedElement, v: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    match (u.component(), v.component()) {
        (VectorPart, VectorPart) => {
            let (x, y) = (u.to_vector().expect("vector"), v.to_vector().expect("vector"));
            Ok(GradedElement::vector(&l.bracket(&x, &y)))
        }
        (VectorPart, Form(_)) => lie_derivative(&u.to_vector().expect("vector"), v, l),
        (Form(_), VectorPart) => Ok(lie_derivative(&v.to_vector().expect("vector"), u, l)?.neg()),
        (Form(_), Form(_)) => form_bracket(u, v, l),
        (a, b) => Err(mixed("extended bracket", a, b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::family;

    fn y(idx: &[usize]) -> GradedElement {
        GradedElement::word(MultiVector(idx.len()), idx)
    }

    fn z(idx: &[usize]) -> GradedElement {
        GradedElement::word(Form(idx.len()), idx)
    }

    fn one() -> GradedElement {
        GradedElement::basis(Form(0), 0)
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(wedge(&y(&[1]), &y(&[2])).unwrap(), y(&[1, 2]));
        assert!(wedge(&y(&[1]), &y(&[1])).unwrap().is_zero());
        assert_eq!(wedge(&y(&[2]), &y(&[1])).unwrap(), y(&[1, 2]).neg());
        assert!(matches!(wedge(&y(&[1]), &z(&[1])), Err(Error::MixedKinds(_))));
        let top = wedge(&y(&[1, 2, 3]), &y(&[2, 4])).unwrap();
        assert_eq!(top.component(), MultiVector(5));
        assert!(top.is_zero());
    }

    #[test]
    fn schouten_examples() {
        let f1 = family(1).unwrap();
        assert_eq!(schouten_bracket(&y(&[1]), &y(&[2]), &f1).unwrap(), y(&[3]));
        assert_eq!(schouten_bracket(&y(&[1]), &y(&[2, 3]), &f1).unwrap(), y(&[2, 4]));
        let ab = LieAlgebra4::abelian();
        assert!(schouten_bracket(&y(&[1, 3]), &y(&[2, 4]), &ab).unwrap().is_zero());
    }

    #[test]
    fn differential_examples() {
        let f4 = family(4).unwrap();
        assert_eq!(ce_differential(&z(&[1]), &f4).unwrap().to_string(), "-C231*z2∧z3");
        assert!(ce_differential(&z(&[1, 2, 3, 4]), &f4).unwrap().is_zero());
        assert!(ce_differential(&z(&[2, 3]), &LieAlgebra4::abelian()).unwrap().is_zero());
        assert!(form_bracket(&one(), &one(), &f4).unwrap().is_zero());
        assert_eq!(form_bracket(&z(&[1]), &one(), &f4).unwrap().to_string(), "C231*z2∧z3");
        assert_eq!(form_bracket(&one(), &z(&[1]), &f4).unwrap().to_string(), "-C231*z2∧z3");
    }

    #[test]
    fn interior_examples() {
        let y1 = Vector4::basis(0);
        assert_eq!(interior_product(&y1, &z(&[1])).unwrap(), one());
        assert_eq!(interior_product(&Vector4::basis(1), &z(&[1, 2])).unwrap(), z(&[1]).neg());
        assert!(interior_product(&Vector4::basis(2), &z(&[1, 2])).unwrap().is_zero());
        assert_eq!(interior_product(&y1, &one()).unwrap_err(), Error::DegreeUnderflow);
    }

    #[test]
    fn lie_derivative_examples() {
        let f4 = family(4).unwrap();
        let y2 = Vector4::basis(1);
        assert!(lie_derivative(&y2, &one(), &f4).unwrap().is_zero());
        let l = lie_derivative(&y2, &z(&[4]), &f4).unwrap();
        assert_eq!(l.to_string(), "-C234*z3 - C244*z4");
        assert_eq!(lie_derivative_coordinate(&y2, &z(&[4]), &f4).unwrap(), l);
        let v = GradedElement::vector(&y2);
        assert_eq!(extended_bracket(&v, &z(&[4]), &f4).unwrap(), l);
        assert_eq!(extended_bracket(&z(&[4]), &v, &f4).unwrap(), l.neg());
        let f1 = family(1).unwrap();
        let e = |k| GradedElement::vector(&Vector4::basis(k));
        assert_eq!(extended_bracket(&e(0), &e(1), &f1).unwrap(), e(2));
    }
}
