//! Sylvester resultants with fraction-free elimination.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::mpoly::{BiPoly, MPoly};
use crate::poly::Poly;

/// `Res_var(a, b)` as the determinant of the Sylvester matrix.
pub fn resultant(a: &MPoly, b: &MPoly, var: usize) -> Result<MPoly> {
    if a.field() != b.field() {
        return Err(Error::MixedFields);
    }
    if a.nvars() != b.nvars() {
        return Err(Error::InvalidArgument("operands in different rings".into()));
    }
    let (field, nv) = (a.field(), a.nvars());
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da.unwrap_or(0) == 0 && db.unwrap_or(0) == 0 {
        return Err(Error::ConstantResultantInputs);
    }
    let (Some(m), Some(n)) = (da, db) else {
        return Ok(MPoly::zero(field, nv));
    };
    let ca = a.coefficients_in(var);
    let cb = b.coefficients_in(var);
    let size = m + n;
    let zero = MPoly::zero(field, nv);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for (k, c) in ca.iter().enumerate() {
            mat[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in cb.iter().enumerate() {
            mat[n + i][i + n - k] = c.clone();
        }
    }
    Ok(bareiss_det(mat, field, nv))
}

fn bareiss_det(mut mat: Vec<Vec<MPoly>>, field: Field, nv: usize) -> MPoly {
    let size = mat.len();
    let mut prev = MPoly::one(field, nv);
    let mut negate = false;
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                return MPoly::zero(field, nv);
            };
            mat.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss quotients are exact");
            }
            mat[i][k] = MPoly::zero(field, nv);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Eliminates variable 0 of polynomials in `(t, X, Y)` and returns the
/// result in `(X, Y)`, scaled to be monic in `Y` when its leading
/// coefficient there is a constant.
pub fn resultant_elim(p: &MPoly, q: &MPoly) -> Result<BiPoly> {
    if p.nvars() != 3 || q.nvars() != 3 {
        return Err(Error::InvalidArgument("expected polynomials in (t, X, Y)".into()));
    }
    if p.degree_in(0).unwrap_or(0) == 0 && q.degree_in(0).unwrap_or(0) == 0 {
        return Err(Error::ConstantResultantInputs);
    }
    let r = resultant(p, q, 0)?;
    let mut out = MPoly::zero(r.field(), 2);
    for (e, c) in r.terms() {
        out = &out + &MPoly::monomial(c.clone(), vec![e[1], e[2]]);
    }
    Ok(monic_in_y(&out))
}

fn monic_in_y(f: &BiPoly) -> BiPoly {
    let lc = f.leading_coefficient_in(1);
    if !lc.is_zero() && lc.is_constant() {
        let c = lc.coeff(&[0, 0]);
        f.scale(&c.inv().expect("nonzero"))
    } else {
        f.clone()
    }
}

/// The curve equation `Res_t(X - f(t), Y - g(t))`.
pub fn curve_resultant(f: &Poly, g: &Poly) -> Result<BiPoly> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    let field = f.field();
    let x = MPoly::var(field, 3, 1);
    let y = MPoly::var(field, 3, 2);
    let p = &x - &MPoly::from_poly(f, 3, 0);
    let q = &y - &MPoly::from_poly(g, 3, 0);
    resultant_elim(&p, &q)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn linear_case() {
        let t = Poly::from_int_terms(Q, &[(1, 1)]);
        let f = curve_resultant(&t, &t).unwrap();
        assert_eq!(f, MPoly::from_int_terms(Q, 2, &[(&[0, 1], 1), (&[1, 0], -1)]));
    }

    #[test]
    fn cusp_with_tail() {
        let f = Poly::from_int_terms(Q, &[(4, 1)]);
        let g = Poly::from_int_terms(Q, &[(6, 1), (7, 1)]);
        let r = curve_resultant(&f, &g).unwrap();
        let want = MPoly::from_int_terms(
            Q,
            2,
            &[(&[0, 4], 1), (&[3, 2], -2), (&[6, 0], 1), (&[5, 1], -4), (&[7, 0], -1)],
        );
        assert_eq!(r, want);
        assert!(r.eval_univariate(&[f, g], None).unwrap().is_zero());
    }

    #[test]
    fn constant_inputs_rejected() {
        let a = MPoly::var(Q, 3, 1);
        assert_eq!(resultant_elim(&a, &a), Err(Error::ConstantResultantInputs));
    }
}
