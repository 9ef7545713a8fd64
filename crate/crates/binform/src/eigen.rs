//! Eigenvectors of binary forms and the hyperplane containing every
//! critical point of the distance to the low-rank loci.
//!
//! A unit vector v is an eigenvector of f when contracting f against
//! v^(d-1) returns a multiple of v; the critical rank-one tensors of the
//! distance from f are exactly the lambda v^d built that way. They are
//! read off the roots of D(f) = y f_x - x f_y: if v^perp divides D(f)
//! then D(f) vanishes at the point v, so the root directions of D(f) are
//! the eigenvectors themselves.
//!
//! The one exception is f proportional to (x^2+y^2)^(d/2), whose D image
//! vanishes identically: every unit vector is an eigenvector with the
//! same eigenvalue, and the decomposition degenerates to a circle.

use crate::error::{Error, Result};
use crate::form::{
    apply_D, bombieri_dot, bombieri_dot_bilinear, contract_bilinear, power, BinaryForm,
    LinearForm, Scalar,
};
use crate::roots::roots;
use crate::tol;

/// (x^2 + y^2)^half as a binary form of degree 2*half.
pub fn circle_power(half: usize) -> BinaryForm {
    let quad = BinaryForm::real(&[1.0, 0.0, 1.0]);
    let mut out = BinaryForm::real(&[1.0]);
    for _ in 0..half {
        out = out.mul(&quad);
    }
    out
}

/// One eigenvector with its eigenvalue.
///
/// Over C the representative is scaled so v.v = 1 in the bilinear sense
/// (the normalization the eigenvalue identity lambda = <f, v^d> is stated
/// in), with the sign fixed by the larger real part of the first
/// component. Real eigenvectors are ordinary unit vectors.
#[derive(Clone, Debug)]
pub struct CriticalRank1 {
    pub v: LinearForm,
    pub lambda: Scalar,
    /// Multiplicity of v as a root of D(f).
    pub multiplicity: usize,
    pub is_real: bool,
}

impl CriticalRank1 {
    /// The critical rank-one tensor lambda v^d.
    pub fn tensor(&self, d: usize) -> BinaryForm {
        power(&self.v, d).scale(self.lambda)
    }

    /// Norm of contract(f, v) - lambda v in the bilinear pairing; the
    /// defining equation of an eigenvector.
    pub fn residual(&self, f: &BinaryForm) -> f64 {
        let w = contract_bilinear(f, &self.v).expect("degree checked by construction");
        let ra = w.a - self.lambda * self.v.a;
        let rb = w.b - self.lambda * self.v.b;
        (ra.norm_sqr() + rb.norm_sqr()).sqrt()
    }
}

/// Eigenvector structure of a nonzero form.
#[derive(Clone, Debug)]
pub enum EigenDecomposition {
    /// The generic case: d eigenvectors counted with multiplicity,
    /// ordered by descending |lambda|.
    Discrete(Vec<CriticalRank1>),
    /// f = coefficient * (x^2+y^2)^(d/2): every unit vector is an
    /// eigenvector with this eigenvalue.
    Circle { coefficient: Scalar },
}

impl EigenDecomposition {
    pub fn pairs(&self) -> &[CriticalRank1] {
        match self {
            EigenDecomposition::Discrete(v) => v,
            EigenDecomposition::Circle { .. } => &[],
        }
    }
}

/// All eigenvectors of f with their eigenvalues.
pub fn eigen_pairs(f: &BinaryForm) -> Result<EigenDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.degree();
    let df = apply_D(f);
    if d >= 2 && d % 2 == 0 && df.norm() <= tol::DEGENERATE_REL * (d as f64) * f.norm() {
        let w = circle_power(d / 2);
        let coefficient = bombieri_dot(f, &w)? / (w.norm() * w.norm());
        return Ok(EigenDecomposition::Circle { coefficient });
    }
    let rs = roots(&df)?;
    let mut pairs: Vec<CriticalRank1> = Vec::with_capacity(rs.roots.len());
    for root in &rs.roots {
        let (v, isotropic) = match root.direction.normalized_bilinear() {
            Some(v) => (v, false),
            // isotropic direction (a^2+b^2 = 0): no bilinear-unit
            // representative exists; keep the Euclidean-unit one
            None => (root.direction, true),
        };
        let lambda = bombieri_dot_bilinear(f, &power(&v, d))?;
        let is_real = !isotropic
            && v.is_real(tol::REALITY_REL)
            && lambda.im.abs() <= tol::REALITY_REL * f.norm();
        pairs.push(CriticalRank1 { v, lambda, multiplicity: root.multiplicity, is_real });
    }
    pairs.sort_by(|p, q| {
        let kp = (-p.lambda.norm(), -p.v.a.re, -p.v.a.im, -p.v.b.re, -p.v.b.im);
        let kq = (-q.lambda.norm(), -q.v.a.re, -q.v.a.im, -q.v.b.re, -q.v.b.im);
        kp.partial_cmp(&kq).unwrap()
    });
    Ok(EigenDecomposition::Discrete(pairs))
}

/// The critical rank-one tensors lambda_i v_i^d of f.
pub fn critical_rank_one(f: &BinaryForm) -> Result<Vec<BinaryForm>> {
    match eigen_pairs(f)? {
        EigenDecomposition::Discrete(pairs) => {
            Ok(pairs.iter().map(|p| p.tensor(f.degree())).collect())
        }
        EigenDecomposition::Circle { .. } => Err(Error::DegenerateCircle),
    }
}

/// The hyperplane orthogonal to D(f). Every critical point of the
/// distance from f to any of the rank loci lies in it.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// D(f); the hyperplane is its orthogonal complement.
    pub normal: BinaryForm,
    /// True when D(f) = 0 and the "hyperplane" is the whole space.
    pub degenerate: bool,
}

impl Hyperplane {
    /// |<g, D(f)>| / (|g| |D(f)|): zero for members. The pairing does not
    /// conjugate, which is the form of the orthogonality statement over C;
    /// for real f both pairings agree.
    pub fn membership(&self, g: &BinaryForm) -> Result<f64> {
        if self.degenerate {
            return Ok(0.0);
        }
        let num = bombieri_dot_bilinear(g, &self.normal)?.norm();
        let den = g.norm() * self.normal.norm();
        if den == 0.0 {
            return Ok(0.0);
        }
        Ok(num / den)
    }
}

/// The singular space of f.
pub fn singular_space(f: &BinaryForm) -> Result<Hyperplane> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let normal = apply_D(f);
    let degenerate = normal.norm() <= tol::DEGENERATE_REL * (f.degree() as f64) * f.norm();
    Ok(Hyperplane { normal, degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::ScalarField;
    use approx::assert_relative_eq;

    fn eigen_list(f: &BinaryForm) -> Vec<CriticalRank1> {
        match eigen_pairs(f).unwrap() {
            EigenDecomposition::Discrete(v) => v,
            EigenDecomposition::Circle { .. } => panic!("unexpected circle"),
        }
    }

    #[test]
    fn quartic_sum_of_fourth_powers() {
        // x^4 + y^4: eigenvectors x, y, (x+y)/sqrt2, (x-y)/sqrt2 with
        // eigenvalues 1, 1, 1/2, 1/2 (the values of f on the unit circle
        // at its critical angles)
        let f = BinaryForm::real(&[1.0, 0.0, 0.0, 0.0, 1.0]);
        let pairs = eigen_list(&f);
        assert_eq!(pairs.len(), 4);
        let s = 1.0 / 2f64.sqrt();
        let expected = [
            (LinearForm::real(1.0, 0.0), 1.0),
            (LinearForm::real(0.0, 1.0), 1.0),
            (LinearForm::real(s, s), 0.5),
            (LinearForm::real(s, -s), 0.5),
        ];
        for (v, lam) in &expected {
            let hit = pairs.iter().find(|p| {
                crate::roots::fubini_study(&p.v, v) < 1e-10
            });
            let hit = hit.expect("eigenvector missing");
            assert_relative_eq!(hit.lambda.re, *lam, max_relative = 1e-12);
            assert!(hit.is_real);
            assert_eq!(hit.multiplicity, 1);
        }
        // ordering: the two lambda = 1 entries come first
        assert!(pairs[0].lambda.norm() >= pairs[2].lambda.norm());
    }

    #[test]
    fn quadratic_matches_symmetric_eigendecomposition() {
        // xy is [[0,1/2],[1/2,0]]: eigenpairs (1/2, (1,1)/sqrt2) and
        // (-1/2, (1,-1)/sqrt2)
        let f = BinaryForm::real(&[0.0, 1.0, 0.0]);
        let pairs = eigen_list(&f);
        assert_eq!(pairs.len(), 2);
        let s = 1.0 / 2f64.sqrt();
        for p in &pairs {
            let sign = if crate::roots::fubini_study(&p.v, &LinearForm::real(s, s)) < 1e-10 {
                1.0
            } else {
                assert!(crate::roots::fubini_study(&p.v, &LinearForm::real(s, -s)) < 1e-10);
                -1.0
            };
            assert_relative_eq!(p.lambda.re, sign * 0.5, max_relative = 1e-13);
        }
    }

    #[test]
    fn residual_and_lambda_identities_on_random_forms() {
        let f = BinaryForm::real(&[0.7, -2.1, 0.4, 1.9, -0.3, 0.8, 1.1]);
        let pairs = eigen_list(&f);
        assert_eq!(pairs.iter().map(|p| p.multiplicity).sum::<usize>(), 6);
        for p in &pairs {
            assert!(p.residual(&f) <= tol::EIGEN_RESIDUAL_REL * f.norm());
            let lam = bombieri_dot_bilinear(&f, &power(&p.v, 6)).unwrap();
            assert!((lam - p.lambda).norm() <= tol::LAMBDA_CHECK_REL * f.norm());
        }
    }

    #[test]
    fn circle_form_degenerates() {
        let f = circle_power(2).scale(Scalar::new(3.5, 0.0));
        match eigen_pairs(&f).unwrap() {
            EigenDecomposition::Circle { coefficient } => {
                assert_relative_eq!(coefficient.re, 3.5, max_relative = 1e-13);
                assert!(coefficient.im.abs() < 1e-13);
            }
            EigenDecomposition::Discrete(_) => panic!("expected circle"),
        }
    }

    #[test]
    fn circle_membership_of_every_unit_vector() {
        // on the degenerate circle each unit v has the same eigenvalue
        let c = 3.5;
        let f = circle_power(2).scale(Scalar::new(c, 0.0));
        for k in 0..8 {
            let v = LinearForm::from_angle(0.3 + k as f64);
            let w = contract_bilinear(&f, &v).unwrap();
            assert_relative_eq!(w.a.re, c * v.a.re, max_relative = 1e-12);
            assert_relative_eq!(w.b.re, c * v.b.re, max_relative = 1e-12);
        }
    }

    #[test]
    fn eigen_tensors_lie_in_singular_space() {
        let f = BinaryForm::real(&[2.0, 0.0, 0.0, 1.0, 0.0]); // x^3 y + 2 y^4
        let hyp = singular_space(&f).unwrap();
        assert!(!hyp.degenerate);
        let pairs = eigen_list(&f);
        assert_eq!(pairs.iter().map(|p| p.multiplicity).sum::<usize>(), 4);
        for p in &pairs {
            let t = p.tensor(4);
            if t.norm() > 0.0 {
                assert!(hyp.membership(&t).unwrap() <= tol::MEMBERSHIP);
            }
        }
    }

    #[test]
    fn zero_form_is_rejected() {
        let f = BinaryForm::zero(4, ScalarField::Real);
        assert!(matches!(eigen_pairs(&f), Err(Error::ZeroForm)));
        assert!(matches!(singular_space(&f), Err(Error::ZeroForm)));
    }

    #[test]
    fn complex_form_eigen_residuals() {
        let f = BinaryForm::new(
            3,
            vec![
                Scalar::new(1.0, 0.5),
                Scalar::new(-0.3, 1.1),
                Scalar::new(0.8, -0.2),
                Scalar::new(0.1, 0.9),
            ],
            ScalarField::Complex,
        )
        .unwrap();
        let pairs = eigen_list(&f);
        assert_eq!(pairs.iter().map(|p| p.multiplicity).sum::<usize>(), 3);
        for p in &pairs {
            assert!(p.residual(&f) <= tol::EIGEN_RESIDUAL_REL * f.norm());
            // bilinear normalization: v.v = 1
            let q = p.v.dot_bilinear(&p.v);
            assert_relative_eq!(q.re, 1.0, max_relative = 1e-10);
            assert!(q.im.abs() < 1e-10);
        }
    }

    #[test]
    fn conjugate_pairs_on_real_forms() {
        // x^3: D = 3x^2 y has roots (0,1) twice and (1,0). But a richer
        // case: a cubic with one real and two complex eigenvectors.
        let f = BinaryForm::real(&[1.0, 0.6, -0.4, 0.9]);
        let pairs = eigen_list(&f);
        let real_count = pairs.iter().filter(|p| p.is_real).count();
        let complex: Vec<_> = pairs.iter().filter(|p| !p.is_real).collect();
        assert_eq!(real_count + complex.len(), 3);
        assert_eq!(complex.len() % 2, 0);
        if complex.len() == 2 {
            let conj_dist = {
                let c = LinearForm::new(complex[1].v.a.conj(), complex[1].v.b.conj());
                crate::roots::fubini_study(&complex[0].v, &c)
            };
            assert!(conj_dist < 1e-8);
            assert!((complex[0].lambda - complex[1].lambda.conj()).norm() < 1e-8 * f.norm());
        }
    }
}
