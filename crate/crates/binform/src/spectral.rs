//! Expansion of forms over their eigenvector powers.
//!
//! The d eigenvectors of a form with distinct eigen directions give d
//! powers v_i^d whose span is exactly the hyperplane orthogonal to
//! D(f) = y f_x - x f_y. The form itself lives in that hyperplane (the
//! Bombieri dot is rotation invariant, so ⟨f, D(f)⟩ = 0 identically),
//! and so does every critical rank-k tensor; both therefore admit an
//! expansion over the eigenvector powers, the direct generalization of
//! writing a symmetric matrix as a combination of its spectral
//! projectors. The rotation-invariant power (x²+y²)^(d/2) is the one
//! form without discrete eigenvectors; for it, [`rez`] produces the
//! classical decomposition over equally spaced real directions instead.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::eigen::{circle_power, eigen_pairs, singular_space, CriticalRank1, EigenDecomposition};
use crate::error::{Error, Result};
use crate::form::{bombieri_dot, power, BinaryForm, LinearForm, Scalar};
use crate::rank::{coords, ls_solve, CriticalRankK};
use crate::tol;

/// Expansion of a form over the powers of its own eigenvectors.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// The d eigenvector powers v_i^d, ordered by descending |λ|; real
    /// directions with equal |λ| are ordered by their angle in [0, π).
    pub basis: Vec<BinaryForm>,
    /// Expansion coefficients, one per basis element. At d = 2 these
    /// are the eigenvalues of the classical spectral theorem.
    pub coeffs: Vec<Scalar>,
    /// Norm of f − Σ c_i v_i^d.
    pub residual: f64,
    /// Repeated eigen directions make the basis rank-deficient; the
    /// coefficients are then the minimum-norm least-squares solution.
    pub multiple_roots: bool,
}

impl SpectralDecomposition {
    /// Rebuild Σ c_i v_i^d.
    pub fn reconstruction(&self) -> BinaryForm {
        let d = self.basis[0].degree();
        let mut out = BinaryForm::zero(d, crate::form::ScalarField::Complex);
        for (c, b) in self.coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(*c)).expect("basis degrees agree");
        }
        out
    }
}

/// Angle of a real direction in [0, π).
fn direction_angle(v: &LinearForm) -> f64 {
    let th = v.b.re.atan2(v.a.re);
    if th < 0.0 {
        th + PI
    } else if th >= PI {
        th - PI
    } else {
        th
    }
}

/// Eigen pairs expanded by multiplicity into the basis order.
fn ordered_pairs(f: &BinaryForm) -> Result<(Vec<CriticalRank1>, bool)> {
    let mut pairs = match eigen_pairs(f)? {
        EigenDecomposition::Discrete(pairs) => pairs,
        EigenDecomposition::Circle { .. } => return Err(Error::DegenerateCircle),
    };
    pairs.sort_by(|p, q| {
        let prim = (-p.lambda.norm()).partial_cmp(&(-q.lambda.norm())).expect("finite |λ|");
        if prim != std::cmp::Ordering::Equal {
            return prim;
        }
        match (p.is_real, q.is_real) {
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            (true, true) => direction_angle(&p.v)
                .partial_cmp(&direction_angle(&q.v))
                .expect("finite angles"),
            (false, false) => {
                let kp = (-p.v.a.re, -p.v.a.im, -p.v.b.re, -p.v.b.im);
                let kq = (-q.v.a.re, -q.v.a.im, -q.v.b.re, -q.v.b.im);
                kp.partial_cmp(&kq).expect("finite components")
            }
        }
    });
    let multiple = pairs.iter().any(|p| p.multiplicity > 1);
    let mut expanded = Vec::with_capacity(f.degree());
    for p in pairs {
        for _ in 0..p.multiplicity {
            expanded.push(p.clone());
        }
    }
    Ok((expanded, multiple))
}

/// Least-squares expansion of h over the eigenvector powers of f.
fn expand(f: &BinaryForm, h: &BinaryForm) -> Result<SpectralDecomposition> {
    let d = f.degree();
    if h.degree() != d {
        return Err(Error::DegreeMismatch { left: d, right: h.degree() });
    }
    let (pairs, multiple) = ordered_pairs(f)?;
    let basis: Vec<BinaryForm> = pairs.iter().map(|p| power(&p.v, d)).collect();
    let mut m = DMatrix::zeros(d + 1, d);
    for (i, b) in basis.iter().enumerate() {
        m.set_column(i, &coords(b));
    }
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let rank = svd
        .singular_values
        .iter()
        .filter(|s| **s > tol::SVD_CUTOFF_REL * smax)
        .count();
    let (c, residual) = ls_solve(&m, &coords(h));
    Ok(SpectralDecomposition {
        basis,
        coeffs: c.iter().copied().collect(),
        residual,
        multiple_roots: multiple || rank < d,
    })
}

/// Expand f over the powers of its own eigenvectors.
///
/// With distinct eigen directions the basis spans the hyperplane
/// orthogonal to D(f) and the residual vanishes to working precision;
/// repeated directions are reported through the `multiple_roots` flag
/// with minimum-norm coefficients. A multiple of (x²+y²)^(d/2) has no
/// discrete eigenvectors at all and is rejected with
/// [`Error::DegenerateCircle`]; use [`rez`] for it.
pub fn spectral_decompose(f: &BinaryForm) -> Result<SpectralDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if cfg!(debug_assertions) {
        let hyp = singular_space(f)?;
        debug_assert!(
            hyp.membership(f).map_or(true, |m| m <= 1e-8),
            "form escaped the hyperplane orthogonal to its rotational derivative"
        );
    }
    expand(f, f)
}

/// Coefficients of a critical point's tensor over the eigenvector
/// powers of f. Every critical rank-k tensor lies in the span, so the
/// reconstruction Σ c_i v_i^d recovers the tensor to working precision.
pub fn express_in_eigenbasis(f: &BinaryForm, g: &CriticalRankK) -> Result<Vec<Scalar>> {
    Ok(expand(f, &g.approximation())?.coeffs)
}

/// The decomposition of (x²+y²)^(d/2) over d/2+1 equally spaced
/// directions.
#[derive(Clone, Debug)]
pub struct RezDecomposition {
    pub d: usize,
    /// Rotation offset; the coefficient is independent of it.
    pub phi: f64,
    /// Common weight of the summands.
    pub c_d: f64,
    /// Unit directions at angles 2kπ/(d+2) + φ, k = 0..d/2 — consecutive
    /// vertices of a regular (d+2)-gon.
    pub summands: Vec<LinearForm>,
    /// Norm of (x²+y²)^(d/2) − c_d Σ_k l_k^d.
    pub residual: f64,
}

impl RezDecomposition {
    /// Rebuild c_d Σ_k l_k^d.
    pub fn reconstruction(&self) -> BinaryForm {
        let mut out = BinaryForm::zero(self.d, crate::form::ScalarField::Real);
        for l in &self.summands {
            out = out.add(&power(l, self.d)).expect("degrees agree");
        }
        out.scale(Scalar::new(self.c_d, 0.0))
    }
}

/// Decompose (x²+y²)^(d/2) into d-th powers of d/2+1 equally spaced
/// real directions, for any even d ≥ 2 and any rotation offset φ.
///
/// The weight c_d is derived per call by pairing both sides against the
/// target: each power satisfies ⟨l_k^d, (x²+y²)^(d/2)⟩ = |l_k|^d = 1,
/// so c_d = ‖(x²+y²)^(d/2)‖² / (d/2+1). The reconstruction is checked
/// and its residual reported.
pub fn rez(d: usize, phi: f64) -> Result<RezDecomposition> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::OddDegree { degree: d });
    }
    let target = circle_power(d / 2);
    let summands: Vec<LinearForm> =
        (0..=d / 2).map(|k| LinearForm::from_angle(2.0 * k as f64 * PI / (d as f64 + 2.0) + phi)).collect();
    let mut sum = BinaryForm::zero(d, crate::form::ScalarField::Real);
    for l in &summands {
        sum = sum.add(&power(l, d)).expect("degrees agree");
    }
    let c_d = target.norm() * target.norm() / bombieri_dot(&sum, &target)?.re;
    let residual = target.sub(&sum.scale(Scalar::new(c_d, 0.0)))?.norm();
    Ok(RezDecomposition { d, phi, c_d, summands, residual })
}

#[cfg(test)]
mod tests {
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::form::{apply_D, bombieri_dot_bilinear, ScalarField};
    use crate::rank::{best_rank_k, critical_rank_k, SearchBudget};
    use crate::roots::fubini_study;

    fn random_real_form(d: usize, rng: &mut ChaCha8Rng) -> BinaryForm {
        let coeffs: Vec<f64> = (0..=d).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
        BinaryForm::real(&coeffs)
    }

    #[test]
    fn sum_of_powers_expands_sparsely() {
        for d in [4usize, 6] {
            let mut coeffs = vec![0.0; d + 1];
            coeffs[0] = 1.0;
            coeffs[d] = 1.0;
            let f = BinaryForm::real(&coeffs);
            let sd = spectral_decompose(&f).unwrap();
            assert_eq!(sd.basis.len(), d);
            assert!(!sd.multiple_roots);
            // x^d and y^d carry the top eigenvalues, so they open the
            // basis (x first: angle 0 before π/2) with unit weights
            let x = LinearForm::new(Scalar::new(1.0, 0.0), Scalar::new(0.0, 0.0));
            let y = LinearForm::new(Scalar::new(0.0, 0.0), Scalar::new(1.0, 0.0));
            assert!(sd.basis[0].sub(&power(&x, d)).unwrap().norm() <= 1e-10);
            assert!(sd.basis[1].sub(&power(&y, d)).unwrap().norm() <= 1e-10);
            let one = Scalar::new(1.0, 0.0);
            assert!((sd.coeffs[0] - one).norm() <= 1e-10);
            assert!((sd.coeffs[1] - one).norm() <= 1e-10);
            for c in &sd.coeffs[2..] {
                assert!(c.norm() <= 1e-10, "spurious coefficient {c}");
            }
            assert!(sd.residual <= 1e-10 * f.norm());
        }
    }

    #[test]
    fn quadratic_recovers_matrix_spectral_theorem() {
        // the quadratic of [[2,1],[1,2]]: eigenvalues 3 and 1 on the
        // diagonal directions
        let f = BinaryForm::real(&[2.0, 2.0, 2.0]);
        let sd = spectral_decompose(&f).unwrap();
        assert_eq!(sd.coeffs.len(), 2);
        assert_relative_eq!(sd.coeffs[0].re, 3.0, max_relative = 1e-10);
        assert_abs_diff_eq!(sd.coeffs[0].im, 0.0, epsilon = 1e-10);
        assert_relative_eq!(sd.coeffs[1].re, 1.0, max_relative = 1e-10);
        let plus = power(&LinearForm::from_angle(PI / 4.0), 2);
        assert!(sd.basis[0].sub(&plus).unwrap().norm() <= 1e-8);
        assert!(sd.residual <= 1e-10 * f.norm());
    }

    #[test]
    fn random_forms_reconstruct_and_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for d in [3usize, 5, 8] {
            for _ in 0..5 {
                let f = random_real_form(d, &mut rng);
                let sd = spectral_decompose(&f).unwrap();
                assert!(!sd.multiple_roots, "random form hit a repeated root");
                assert!(sd.residual <= 1e-8 * f.norm());
                assert!(sd.reconstruction().sub(&f).unwrap().norm() <= 1e-8 * f.norm());
                // every basis element is orthogonal to the rotational
                // derivative: the span is the full hyperplane
                let df = apply_D(&f);
                for b in &sd.basis {
                    let dot = bombieri_dot_bilinear(b, &df).unwrap();
                    assert!(dot.norm() <= 1e-10 * df.norm() * b.norm());
                }
            }
        }
    }

    #[test]
    fn eigen_tensor_expands_to_a_single_coefficient() {
        let f = BinaryForm::real(&[0.4, -1.1, 0.0, 0.9, 0.3]);
        let pts = critical_rank_k(&f, 1, ScalarField::Complex, &SearchBudget::for_rank(1))
            .unwrap();
        let sd = spectral_decompose(&f).unwrap();
        for p in &pts {
            let c = express_in_eigenbasis(&f, p).unwrap();
            let g = p.approximation();
            // the expansion concentrates on the matching basis element
            let mut hits = 0usize;
            for (ci, b) in c.iter().zip(&sd.basis) {
                if ci.norm() > 1e-8 * g.norm() {
                    hits += 1;
                    assert!(b.scale(*ci).sub(&g).unwrap().norm() <= 1e-8 * g.norm());
                }
            }
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn critical_points_lie_in_the_eigen_span() {
        let f = BinaryForm::real(&[0.3, -1.2, 0.8, 0.5, -0.9]);
        let budget = SearchBudget::for_rank(2).with_seed(7);
        let pts = critical_rank_k(&f, 2, ScalarField::Complex, &budget).unwrap();
        let sd = spectral_decompose(&f).unwrap();
        for p in &pts {
            let c = express_in_eigenbasis(&f, p).unwrap();
            let g = p.approximation();
            let mut rec = BinaryForm::zero(4, ScalarField::Complex);
            for (ci, b) in c.iter().zip(&sd.basis) {
                rec = rec.add(&b.scale(*ci)).unwrap();
            }
            assert!(
                rec.sub(&g).unwrap().norm() <= 1e-8 * g.norm(),
                "critical tensor escaped the eigen span"
            );
        }
    }

    #[test]
    fn best_quadratic_matches_top_spectral_term() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let budget = SearchBudget::for_rank(1);
        for _ in 0..20 {
            let f = random_real_form(2, &mut rng);
            let sd = spectral_decompose(&f).unwrap();
            let (l0, l1) = (sd.coeffs[0].norm(), sd.coeffs[1].norm());
            if (l0 - l1).abs() <= 0.05 * l0.max(l1) {
                continue;
            }
            let best = best_rank_k(&f, 1, &budget).unwrap();
            let top = &sd.basis[0];
            let d0 = best.approximation().sub(&top.scale(sd.coeffs[0])).unwrap().norm();
            assert!(d0 <= 1e-8 * f.norm(), "best rank-1 is not the dominant term");
        }
    }

    #[test]
    fn degenerate_circle_is_redirected() {
        let f = circle_power(3);
        assert!(matches!(spectral_decompose(&f), Err(Error::DegenerateCircle)));
    }

    #[test]
    fn repeated_eigen_directions_are_flagged() {
        // x³ has D(f) = 3x²y: a double root at the y-direction, so the
        // basis repeats an element and the flag reports it
        let f = BinaryForm::real(&[0.0, 0.0, 0.0, 1.0]);
        let sd = spectral_decompose(&f).unwrap();
        assert!(sd.multiple_roots);
        assert_eq!(sd.coeffs.len(), 3);
    }

    #[test]
    fn rez_reconstructs_for_small_even_degrees() {
        for d in [2usize, 4, 6, 8, 10] {
            for phi in [0.0, 0.37] {
                let rz = rez(d, phi).unwrap();
                assert_eq!(rz.summands.len(), d / 2 + 1);
                assert!(rz.residual <= 1e-10, "degree {d} residual {}", rz.residual);
                let target = circle_power(d / 2);
                assert!(rz.reconstruction().sub(&target).unwrap().norm() <= 1e-10);
            }
            let c0 = rez(d, 0.0).unwrap().c_d;
            let c1 = rez(d, 0.37).unwrap().c_d;
            assert_abs_diff_eq!(c0, c1, epsilon = 1e-12);
        }
    }

    #[test]
    fn rez_weights_match_closed_forms() {
        // two orthogonal unit squares tile the circle: c_2 = 1; the
        // quartic weight is ‖(x²+y²)²‖²/3 = (8/3)/3
        assert_abs_diff_eq!(rez(2, 0.0).unwrap().c_d, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rez(4, 0.0).unwrap().c_d, 8.0 / 9.0, epsilon = 1e-12);
    }

    #[test]
    fn rez_summands_sit_on_the_polygon() {
        let rz = rez(6, 0.25).unwrap();
        let step = 2.0 * PI / 8.0;
        for (k, l) in rz.summands.iter().enumerate() {
            let expect = LinearForm::from_angle(0.25 + k as f64 * step);
            assert!(fubini_study(l, &expect) <= 1e-12);
        }
    }

    #[test]
    fn rez_rejects_odd_or_zero_degree() {
        assert!(matches!(rez(3, 0.0), Err(Error::OddDegree { degree: 3 })));
        assert!(matches!(rez(0, 1.0), Err(Error::OddDegree { degree: 0 })));
    }
}
