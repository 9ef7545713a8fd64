//! Binary forms in two variables and the Bombieri inner product.
//!
//! A form of degree d is stored by its monomial coefficients c_0..c_d with
//! f = sum_i c_i x^i y^(d-i). Bombieri coordinates are a_i = c_i / C(d,i);
//! in those coordinates the inner product of f = sum C(d,i) a_i x^i y^(d-i)
//! and g = sum C(d,i) b_i x^i y^(d-i) is sum_i C(d,i) a_i conj(b_i), which
//! makes the product of powers of linear forms multiplicative:
//! <l^d, m^d> = <l, m>^d.
//!
//! Coefficients are kept as complex numbers; a field tag records whether the
//! form is intended as a real one. The default inner product conjugates its
//! second argument. The bilinear variant (no conjugation) is what the
//! algebraic identities over C use, and the two agree on real input.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Complex scalar used throughout.
pub type Scalar = Complex64;

/// Whether a form is treated as real or complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarField {
    Real,
    Complex,
}

/// Binomial coefficient C(d, i) as f64 (exact for the degrees handled here).
pub fn binomial(d: usize, i: usize) -> f64 {
    debug_assert!(i <= d);
    let i = i.min(d - i);
    let mut c = 1.0;
    for j in 0..i {
        c = c * (d - j) as f64 / (j + 1) as f64;
    }
    c.round()
}

/// Linear form a*x + b*y, also used as a vector (a, b) in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearForm {
    pub a: Scalar,
    pub b: Scalar,
}

impl LinearForm {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        Self { a, b }
    }

    pub fn real(a: f64, b: f64) -> Self {
        Self { a: Scalar::new(a, 0.0), b: Scalar::new(b, 0.0) }
    }

    /// Unit vector at angle theta: cos(theta) x + sin(theta) y.
    pub fn from_angle(theta: f64) -> Self {
        Self::real(theta.cos(), theta.sin())
    }

    pub fn eval(&self, x: Scalar, y: Scalar) -> Scalar {
        self.a * x + self.b * y
    }

    /// Euclidean norm sqrt(|a|^2 + |b|^2).
    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr()).sqrt()
    }

    /// Hermitian pairing <self, other> = a conj(a') + b conj(b').
    pub fn dot(&self, other: &LinearForm) -> Scalar {
        self.a * other.a.conj() + self.b * other.b.conj()
    }

    /// Bilinear pairing a a' + b b' (no conjugation).
    pub fn dot_bilinear(&self, other: &LinearForm) -> Scalar {
        self.a * other.a + self.b * other.b
    }

    pub fn scale(&self, s: Scalar) -> LinearForm {
        LinearForm { a: self.a * s, b: self.b * s }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        let scale = self.norm().max(1e-300);
        self.a.im.abs() <= tol * scale && self.b.im.abs() <= tol * scale
    }

    /// Scales to Euclidean norm 1 and rotates the phase so the component of
    /// larger modulus is real and positive. Deterministic representative of
    /// the projective class.
    pub fn normalized(&self) -> LinearForm {
        let n = self.norm();
        debug_assert!(n > 0.0);
        let lead = if self.a.norm() >= self.b.norm() { self.a } else { self.b };
        let phase = lead / lead.norm();
        let s = phase.conj() / n;
        let mut out = self.scale(s);
        // snap tiny imaginary dust so real directions stay exactly real
        if out.a.im.abs() <= 1e-15 && out.b.im.abs() <= 1e-15 {
            out.a.im = 0.0;
            out.b.im = 0.0;
        }
        out
    }

    /// Scales so that a^2 + b^2 = 1 (the algebraic normalization used for
    /// eigenvectors over C). Returns None for isotropic directions.
    /// Of the two admissible signs, picks the one with larger Re(a),
    /// breaking ties by larger Re(b), then by imaginary parts.
    pub fn normalized_bilinear(&self) -> Option<LinearForm> {
        let q = self.dot_bilinear(self);
        if q.norm() <= tol::ISOTROPIC * self.norm().powi(2) {
            return None;
        }
        let s = q.sqrt();
        let v = self.scale(s.inv());
        let key = |l: &LinearForm| (l.a.re, l.b.re, l.a.im, l.b.im);
        let w = v.scale(Scalar::new(-1.0, 0.0));
        let mut out = if key(&v) >= key(&w) { v } else { w };
        if out.a.im.abs() <= 1e-15 && out.b.im.abs() <= 1e-15 {
            out.a.im = 0.0;
            out.b.im = 0.0;
        }
        Some(out)
    }
}

/// Rotation of a linear form by angle phi (substitution by the inverse
/// rotation of the plane): coefficients rotate like the vector (a, b).
pub fn rotate_linear(l: &LinearForm, phi: f64) -> LinearForm {
    let (s, c) = phi.sin_cos();
    LinearForm {
        a: l.a * c - l.b * s,
        b: l.a * s + l.b * c,
    }
}

/// perp(a x + b y) = -b x + a y. Applying it twice negates the form.
pub fn perp(l: &LinearForm) -> LinearForm {
    LinearForm { a: -l.b, b: l.a }
}

/// Homogeneous binary form of degree d with monomial coefficients c_0..c_d,
/// f = sum_i c_i x^i y^(d-i).
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Scalar>,
    field: ScalarField,
}

impl BinaryForm {
    /// Builds a form from complex monomial coefficients c_0..c_d.
    pub fn new(degree: usize, coeffs: Vec<Scalar>, field: ScalarField) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::LengthMismatch { degree, need: degree + 1, got: coeffs.len() });
        }
        Ok(Self { degree, coeffs, field })
    }

    /// Builds a real form from monomial coefficients c_0..c_d.
    pub fn real(coeffs: &[f64]) -> Self {
        assert!(!coeffs.is_empty());
        Self {
            degree: coeffs.len() - 1,
            coeffs: coeffs.iter().map(|&c| Scalar::new(c, 0.0)).collect(),
            field: ScalarField::Real,
        }
    }

    pub fn zero(degree: usize, field: ScalarField) -> Self {
        Self { degree, coeffs: vec![Scalar::new(0.0, 0.0); degree + 1], field }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Monomial coefficient c_i of x^i y^(d-i).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs[i]
    }

    pub fn coeff_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.coeffs[i]
    }

    /// Bombieri coordinates a_i = c_i / C(d, i).
    pub fn bombieri_coeffs(&self) -> Vec<Scalar> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / binomial(self.degree, i))
            .collect()
    }

    /// Builds a form from Bombieri coordinates a_0..a_d.
    pub fn from_bombieri(degree: usize, coords: &[Scalar], field: ScalarField) -> Result<Self> {
        if coords.len() != degree + 1 {
            return Err(Error::LengthMismatch { degree, need: degree + 1, got: coords.len() });
        }
        let coeffs = coords
            .iter()
            .enumerate()
            .map(|(i, a)| a * binomial(degree, i))
            .collect();
        Ok(Self { degree, coeffs, field })
    }

    /// Coordinates c_i / sqrt(C(d,i)) in which the Bombieri norm is the
    /// plain Euclidean norm. Used to hand least-squares problems to a
    /// standard solver.
    pub fn orthonormal_coords(&self) -> Vec<Scalar> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / binomial(self.degree, i).sqrt())
            .collect()
    }

    pub fn from_orthonormal_coords(degree: usize, w: &[Scalar], field: ScalarField) -> Self {
        debug_assert_eq!(w.len(), degree + 1);
        let coeffs = w
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial(degree, i).sqrt())
            .collect();
        Self { degree, coeffs, field }
    }

    /// Bombieri norm sqrt(sum |c_i|^2 / C(d,i)).
    pub fn norm(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm_sqr() / binomial(self.degree, i))
            .sum::<f64>()
            .sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// True when every coefficient is below the absolute threshold.
    pub fn is_zero(&self) -> bool {
        self.max_coeff() <= tol::ZERO_COEFF
    }

    /// True when all imaginary parts are negligible relative to the norm.
    pub fn is_real_valued(&self, tol: f64) -> bool {
        let scale = self.norm().max(1e-300);
        self.coeffs.iter().all(|c| c.im.abs() <= tol * scale)
    }

    /// Reinterprets as a real form, dropping imaginary dust.
    pub fn into_real(mut self) -> Self {
        for c in &mut self.coeffs {
            c.im = 0.0;
        }
        self.field = ScalarField::Real;
        self
    }

    /// Evaluates at the point (x, y), factoring out the dominant variable
    /// for stability at large arguments.
    pub fn eval(&self, x: Scalar, y: Scalar) -> Scalar {
        let d = self.degree;
        if x.norm() <= y.norm() {
            if y.norm() == 0.0 {
                return self.coeffs[0] * if d == 0 { Scalar::new(1.0, 0.0) } else { Scalar::new(0.0, 0.0) };
            }
            // y^d * p(x/y) with p(t) = sum c_i t^i
            let t = x / y;
            let mut acc = Scalar::new(0.0, 0.0);
            for &c in self.coeffs.iter().rev() {
                acc = acc * t + c;
            }
            acc * y.powu(d as u32)
        } else {
            // x^d * q(y/x) with q(s) = sum c_{d-i} s^i
            let s = y / x;
            let mut acc = Scalar::new(0.0, 0.0);
            for &c in self.coeffs.iter() {
                acc = acc * s + c;
            }
            acc * x.powu(d as u32)
        }
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        check_same_degree(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BinaryForm { degree: self.degree, coeffs, field: join_fields(self.field, other.field) })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        check_same_degree(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(BinaryForm { degree: self.degree, coeffs, field: join_fields(self.field, other.field) })
    }

    pub fn scale(&self, s: Scalar) -> BinaryForm {
        let field = if s.im == 0.0 { self.field } else { ScalarField::Complex };
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            field,
        }
    }

    /// Product of forms (degrees add).
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let d = self.degree + other.degree;
        let mut coeffs = vec![Scalar::new(0.0, 0.0); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { degree: d, coeffs, field: join_fields(self.field, other.field) }
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
            field: self.field,
        }
    }
}

fn check_same_degree(f: &BinaryForm, g: &BinaryForm) -> Result<()> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch { left: f.degree, right: g.degree });
    }
    Ok(())
}

fn join_fields(a: ScalarField, b: ScalarField) -> ScalarField {
    if a == ScalarField::Real && b == ScalarField::Real {
        ScalarField::Real
    } else {
        ScalarField::Complex
    }
}

/// d-th power of a linear form: (a x + b y)^d with coefficients
/// C(d,i) a^i b^(d-i).
pub fn power(l: &LinearForm, d: usize) -> BinaryForm {
    let mut coeffs = vec![Scalar::new(0.0, 0.0); d + 1];
    // a^i b^(d-i) built incrementally to avoid 0^0 corner cases
    let mut apow = vec![Scalar::new(1.0, 0.0); d + 1];
    let mut bpow = vec![Scalar::new(1.0, 0.0); d + 1];
    for i in 1..=d {
        apow[i] = apow[i - 1] * l.a;
        bpow[i] = bpow[i - 1] * l.b;
    }
    for i in 0..=d {
        coeffs[i] = apow[i] * bpow[d - i] * binomial(d, i);
    }
    let field = if l.a.im == 0.0 && l.b.im == 0.0 { ScalarField::Real } else { ScalarField::Complex };
    BinaryForm { degree: d, coeffs, field }
}

/// Bombieri inner product, conjugating the second argument:
/// <f, g> = sum_i c_i conj(e_i) / C(d, i).
pub fn bombieri_dot(f: &BinaryForm, g: &BinaryForm) -> Result<Scalar> {
    check_same_degree(f, g)?;
    let d = f.degree;
    let mut acc = Scalar::new(0.0, 0.0);
    for i in 0..=d {
        acc += f.coeffs[i] * g.coeffs[i].conj() / binomial(d, i);
    }
    Ok(acc)
}

/// Bilinear Bombieri pairing, no conjugation. Agrees with `bombieri_dot`
/// on real input; the algebraic identities over C hold in this pairing.
pub fn bombieri_dot_bilinear(f: &BinaryForm, g: &BinaryForm) -> Result<Scalar> {
    check_same_degree(f, g)?;
    let d = f.degree;
    let mut acc = Scalar::new(0.0, 0.0);
    for i in 0..=d {
        acc += f.coeffs[i] * g.coeffs[i] / binomial(d, i);
    }
    Ok(acc)
}

/// Inner product of two products of linear forms by the permanent formula:
/// <l_1...l_d, m_1...m_d> = (1/d!) sum_sigma prod_i <l_i, m_sigma(i)>.
///
/// Exponential in d; it is the independent reference implementation the
/// fast coefficient formula is tested against.
pub fn split_dot(ls: &[LinearForm], ms: &[LinearForm]) -> Result<Scalar> {
    if ls.len() != ms.len() {
        return Err(Error::DegreeMismatch { left: ls.len(), right: ms.len() });
    }
    let d = ls.len();
    let pair: Vec<Vec<Scalar>> = ls
        .iter()
        .map(|l| ms.iter().map(|m| l.dot(m)).collect())
        .collect();
    let mut sum = Scalar::new(0.0, 0.0);
    let mut perm: Vec<usize> = (0..d).collect();
    permanent_sum(&pair, &mut perm, 0, Scalar::new(1.0, 0.0), &mut sum);
    let mut fact = 1.0;
    for i in 2..=d {
        fact *= i as f64;
    }
    Ok(sum / fact)
}

fn permanent_sum(
    pair: &[Vec<Scalar>],
    remaining: &mut Vec<usize>,
    row: usize,
    partial: Scalar,
    sum: &mut Scalar,
) {
    if row == pair.len() {
        *sum += partial;
        return;
    }
    for idx in 0..remaining.len() {
        let col = remaining.swap_remove(idx);
        permanent_sum(pair, remaining, row + 1, partial * pair[row][col], sum);
        remaining.push(col);
        let last = remaining.len() - 1;
        remaining.swap(idx, last);
    }
}

/// Rotational derivative D(f) = y f_x - x f_y, degree preserving.
/// In monomial coefficients D(f)_j = (j+1) c_{j+1} - (d-j+1) c_{j-1}.
#[allow(non_snake_case)]
pub fn apply_D(f: &BinaryForm) -> BinaryForm {
    let d = f.degree;
    let mut coeffs = vec![Scalar::new(0.0, 0.0); d + 1];
    for j in 0..=d {
        let mut c = Scalar::new(0.0, 0.0);
        if j + 1 <= d {
            c += f.coeffs[j + 1] * (j + 1) as f64;
        }
        if j >= 1 {
            c -= f.coeffs[j - 1] * (d - j + 1) as f64;
        }
        coeffs[j] = c;
    }
    BinaryForm { degree: d, coeffs, field: f.field }
}

/// Contraction of f against v^(d-1): the vector w* with
/// <w*, w> = <f, v^(d-1) w> for every w, in the Hermitian pairing.
pub fn contract(f: &BinaryForm, v: &LinearForm) -> Result<LinearForm> {
    contract_impl(f, v, false)
}

/// Bilinear variant of `contract`: w* with (w*, w) = (f, v^(d-1) w) in the
/// non-conjugated pairing. This is the one the eigenvector equation over C
/// is stated in; both agree for real data.
pub fn contract_bilinear(f: &BinaryForm, v: &LinearForm) -> Result<LinearForm> {
    contract_impl(f, v, true)
}

fn contract_impl(f: &BinaryForm, v: &LinearForm, bilinear: bool) -> Result<LinearForm> {
    let d = f.degree;
    if d == 0 {
        return Err(Error::DegreeMismatch { left: 0, right: 1 });
    }
    let vpow = power(v, d - 1);
    let x = BinaryForm::real(&[0.0, 1.0]);
    let y = BinaryForm::real(&[1.0, 0.0]);
    let vx = vpow.mul(&x);
    let vy = vpow.mul(&y);
    let (a, b) = if bilinear {
        (bombieri_dot_bilinear(f, &vx)?, bombieri_dot_bilinear(f, &vy)?)
    } else {
        (bombieri_dot(f, &vx)?, bombieri_dot(f, &vy)?)
    };
    Ok(LinearForm { a, b })
}

/// Rotation of a form by angle phi: substitutes the inverse plane rotation,
/// so that rotate(l^d) = (rotate_linear(l))^d and the Bombieri product is
/// preserved.
pub fn rotate(f: &BinaryForm, phi: f64) -> BinaryForm {
    let d = f.degree;
    let (s, c) = phi.sin_cos();
    // x -> c x + s y, y -> -s x + c y
    let xs = LinearForm::real(c, s);
    let ys = LinearForm::real(-s, c);
    let mut out = BinaryForm::zero(d, f.field);
    for (i, &ci) in f.coeffs.iter().enumerate() {
        if ci.norm_sqr() == 0.0 {
            continue;
        }
        let term = power(&xs, i).mul(&power(&ys, d - i));
        for j in 0..=d {
            out.coeffs[j] += ci * term.coeffs[j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    #[test]
    fn binomials_match_pascal() {
        for d in 0..=20usize {
            for i in 0..=d {
                let left = if i == 0 || i == d {
                    1.0
                } else {
                    binomial(d - 1, i - 1) + binomial(d - 1, i)
                };
                assert_eq!(binomial(d, i), left);
            }
        }
    }

    #[test]
    fn bombieri_roundtrip_is_exact_on_divisible_coeffs() {
        // coefficients chosen so c_i / C(d,i) is exact in f64
        let f = BinaryForm::real(&[3.0, 12.0, 18.0, 12.0, 3.0]);
        let a = f.bombieri_coeffs();
        let back = BinaryForm::from_bombieri(4, &a, ScalarField::Real).unwrap();
        assert_eq!(f.coeffs(), back.coeffs());
    }

    #[test]
    fn dot_of_xy_with_itself() {
        // <xy, xy> = 1/2
        let f = BinaryForm::real(&[0.0, 1.0, 0.0]);
        let v = bombieri_dot(&f, &f).unwrap();
        assert_relative_eq!(v.re, 0.5, max_relative = 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn power_rule_on_integers() {
        // <(x+2y)^3, (3x+y)^3> = (1*3 + 2*1)^3 = 125
        let l = LinearForm::real(1.0, 2.0);
        let m = LinearForm::real(3.0, 1.0);
        let v = bombieri_dot(&power(&l, 3), &power(&m, 3)).unwrap();
        assert_relative_eq!(v.re, 125.0, max_relative = 1e-14);
    }

    #[test]
    fn power_against_circle_form_gives_norm_power() {
        // <v^4, (x^2+y^2)^2> = |v|^4 = 625 for v = 3x + 4y
        let v = LinearForm::real(3.0, 4.0);
        let circ = BinaryForm::real(&[1.0, 0.0, 2.0, 0.0, 1.0]);
        let val = bombieri_dot(&power(&v, 4), &circ).unwrap();
        assert_relative_eq!(val.re, 625.0, max_relative = 1e-14);
    }

    #[test]
    fn split_dot_of_xy_against_itself() {
        let x = LinearForm::real(1.0, 0.0);
        let y = LinearForm::real(0.0, 1.0);
        let v = split_dot(&[x, y], &[x, y]).unwrap();
        assert_relative_eq!(v.re, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn d_operator_on_pure_powers() {
        // D(x^d) = d x^(d-1) y, D(y^d) = -d x y^(d-1)
        let d = 5;
        let mut xs = vec![0.0; d + 1];
        xs[d] = 1.0;
        let dx = apply_D(&BinaryForm::real(&xs));
        assert_eq!(dx.coeff(d - 1), c(d as f64, 0.0));
        assert_eq!(dx.coeff(d), c(0.0, 0.0));
        let mut ys = vec![0.0; d + 1];
        ys[0] = 1.0;
        let dy = apply_D(&BinaryForm::real(&ys));
        assert_eq!(dy.coeff(1), c(-(d as f64), 0.0));
    }

    #[test]
    fn d_operator_worked_coefficients() {
        // D(x^3 y + 2 y^4) = 3 x^2 y^2 - x^4 - 8 x y^3
        let f = BinaryForm::real(&[2.0, 0.0, 0.0, 1.0, 0.0]);
        let df = apply_D(&f);
        let expect = [0.0, -8.0, 3.0, 0.0, -1.0];
        for (i, e) in expect.iter().enumerate() {
            assert_relative_eq!(df.coeff(i).re, *e, max_relative = 1e-15);
        }
    }

    #[test]
    fn d_kills_circle_powers() {
        let circ = BinaryForm::real(&[1.0, 0.0, 2.0, 0.0, 1.0]);
        let d = apply_D(&circ);
        assert!(d.is_zero());
        let higher = circ.mul(&circ);
        assert!(apply_D(&higher).is_zero());
    }

    #[test]
    fn perp_rotates_and_squares_to_minus_one() {
        let l = LinearForm::new(c(1.0, 2.0), c(-0.5, 0.3));
        let p = perp(&l);
        assert_eq!(p.a, -l.b);
        assert_eq!(p.b, l.a);
        let pp = perp(&p);
        assert_eq!(pp.a, -l.a);
        assert_eq!(pp.b, -l.b);
    }

    #[test]
    fn contract_matches_symmetric_matrix_action() {
        // f = xy is the matrix [[0, 1/2], [1/2, 0]];
        // contracting with v = (1,1)/sqrt(2) gives v/2.
        let f = BinaryForm::real(&[0.0, 1.0, 0.0]);
        let s = 1.0 / 2f64.sqrt();
        let v = LinearForm::real(s, s);
        let w = contract(&f, &v).unwrap();
        assert_relative_eq!(w.a.re, s / 2.0, max_relative = 1e-14);
        assert_relative_eq!(w.b.re, s / 2.0, max_relative = 1e-14);
    }

    #[test]
    fn contract_on_circle_power_scales_by_norm() {
        // f = (x^2+y^2)^2: contract(f, v) = |v|^2 v for any real v
        let f = BinaryForm::real(&[1.0, 0.0, 2.0, 0.0, 1.0]);
        let v = LinearForm::real(0.6, -1.7);
        let w = contract(&f, &v).unwrap();
        let n2 = v.norm() * v.norm();
        assert_relative_eq!(w.a.re, n2 * v.a.re, max_relative = 1e-13);
        assert_relative_eq!(w.b.re, n2 * v.b.re, max_relative = 1e-13);
    }

    #[test]
    fn eval_factors_match_expansion() {
        let f = BinaryForm::real(&[1.0, -2.0, 0.5, 3.0]);
        let (x, y) = (c(0.3, 0.0), c(-1.7, 0.0));
        let direct: Scalar = (0..=3)
            .map(|i| f.coeff(i) * x.powu(i as u32) * y.powu((3 - i) as u32))
            .sum();
        assert_relative_eq!(f.eval(x, y).re, direct.re, max_relative = 1e-13);
    }

    #[test]
    fn rotation_preserves_dot_and_commutes_with_power() {
        let l = LinearForm::real(0.8, -0.3);
        let f = BinaryForm::real(&[1.0, 2.0, -1.0, 0.5]);
        let phi = 0.7342;
        let rf = rotate(&f, phi);
        let rl3 = power(&rotate_linear(&l, phi), 3);
        let l3 = power(&l, 3);
        let before = bombieri_dot(&f, &l3).unwrap();
        let after = bombieri_dot(&rf, &rl3).unwrap();
        assert_relative_eq!(before.re, after.re, max_relative = 1e-12);
        assert_relative_eq!(f.norm(), rf.norm(), max_relative = 1e-13);
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let f = BinaryForm::real(&[1.0, 0.0]);
        let g = BinaryForm::real(&[1.0, 0.0, 0.0]);
        assert!(matches!(
            bombieri_dot(&f, &g),
            Err(Error::DegreeMismatch { left: 1, right: 2 })
        ));
    }
}
