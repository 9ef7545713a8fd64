//! Projective roots of binary forms.
//!
//! A degree d form factors over C into d linear forms; each factor is
//! recorded by the point of the projective line where it vanishes. The
//! factor b x - a y vanishes at (a : b), so x^2 y - x y^2 = xy(x - y) has
//! root directions (1,0), (0,1) and (1,1).
//!
//! Roots are found on the dehomogenization f(t, 1) with a simultaneous
//! Ehrlich-Aberth iteration. A drop in the dehomogenized degree means a
//! power of y divides f, which contributes the root at infinity (1 : 0)
//! with the drop as multiplicity. A multiple root reaches working
//! precision as a cluster of simple approximations spread over a disk of
//! radius about eps^(1/m); the clustering step merges a group exactly when
//! its spread is attributable to rounding in that sense.

use num_complex::Complex64;

use crate::error::Result;
use crate::form::{BinaryForm, LinearForm, Scalar};
use crate::tol;

/// One projective root with its multiplicity.
#[derive(Clone, Debug)]
pub struct ProjectiveRoot {
    /// Unit representative of the vanishing point, deterministic phase.
    pub direction: LinearForm,
    pub multiplicity: usize,
}

/// All roots of a form, multiplicities summing to the degree.
#[derive(Clone, Debug)]
pub struct ProjectiveRootSet {
    pub roots: Vec<ProjectiveRoot>,
    /// Set when the input was the zero form and no roots are defined.
    pub degenerate: bool,
}

impl ProjectiveRootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Sine of the angle between two directions on the complex projective line.
pub fn fubini_study(u: &LinearForm, v: &LinearForm) -> f64 {
    let nu = u.norm();
    let nv = v.norm();
    if nu == 0.0 || nv == 0.0 {
        return 0.0;
    }
    let c = u.dot(v).norm() / (nu * nv);
    (1.0 - (c * c).min(1.0)).max(0.0).sqrt()
}

/// Roots of f as points of the projective line.
pub fn roots(f: &BinaryForm) -> Result<ProjectiveRootSet> {
    if f.is_zero() {
        return Ok(ProjectiveRootSet { roots: Vec::new(), degenerate: true });
    }
    let d = f.degree();
    let scale = f.max_coeff();
    let cut = tol::ZERO_COEFF * scale.max(1.0);

    // effective degree of p(t) = f(t,1): trailing zeros are y-powers
    // (roots at infinity), leading zeros are x-powers (roots at zero)
    let coeffs = f.coeffs();
    let mut hi = d;
    while hi > 0 && coeffs[hi].norm() <= cut {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && coeffs[lo].norm() <= cut {
        lo += 1;
    }

    let mut members: Vec<Option<Scalar>> = Vec::new();
    for _ in 0..(d - hi) {
        members.push(None); // root at infinity, direction (1, 0)
    }
    for _ in 0..lo {
        members.push(Some(Scalar::new(0.0, 0.0)));
    }
    let p: Vec<Scalar> = coeffs[lo..=hi].to_vec();
    if hi > lo {
        for z in poly_roots(&p)? {
            members.push(Some(z));
        }
    }

    let merged = cluster(&p, &members);
    Ok(ProjectiveRootSet { roots: merged, degenerate: false })
}

fn direction_of(member: &Option<Scalar>) -> LinearForm {
    match member {
        Some(t) => LinearForm::new(*t, Scalar::new(1.0, 0.0)).normalized(),
        None => LinearForm::real(1.0, 0.0),
    }
}

struct Cluster {
    members: Vec<Option<Scalar>>,
    dir: LinearForm,
}

impl Cluster {
    fn of(member: Option<Scalar>) -> Self {
        let dir = direction_of(&member);
        Cluster { members: vec![member], dir }
    }

    fn merge(&mut self, other: Cluster) {
        self.members.extend(other.members);
        let mut a = Scalar::new(0.0, 0.0);
        let mut b = Scalar::new(0.0, 0.0);
        for m in &self.members {
            let d = direction_of(m);
            a += d.a;
            b += d.b;
        }
        self.dir = LinearForm::new(a, b).normalized();
    }
}

/// Merges clusters that either fall within the fixed projective tolerance
/// or whose spread is consistent with a multiple root at working precision.
fn cluster(p: &[Scalar], members: &[Option<Scalar>]) -> Vec<ProjectiveRoot> {
    let mut clusters: Vec<Cluster> = members.iter().map(|m| Cluster::of(*m)).collect();
    loop {
        let n = clusters.len();
        let mut best: Option<(f64, usize, usize)> = None;
        'search: for i in 0..n {
            for j in (i + 1)..n {
                let dist = fubini_study(&clusters[i].dir, &clusters[j].dir);
                if dist <= tol::ROOT_CLUSTER {
                    best = Some((dist, i, j));
                    break 'search;
                }
                if dist <= 1e-2 && consistent_merge(p, &clusters[i], &clusters[j]) {
                    if best.map_or(true, |(bd, _, _)| dist < bd) {
                        best = Some((dist, i, j));
                    }
                }
            }
        }
        match best {
            Some((_, i, j)) => {
                let other = clusters.swap_remove(j);
                clusters[i].merge(other);
            }
            None => break,
        }
    }
    for c in &mut clusters {
        polish_cluster(p, c);
    }
    let mut out: Vec<ProjectiveRoot> = clusters
        .iter()
        .map(|c| ProjectiveRoot { direction: c.dir, multiplicity: c.members.len() })
        .collect();
    out.sort_by(|p, q| {
        let kp = (p.direction.a.re, p.direction.a.im, p.direction.b.re, p.direction.b.im);
        let kq = (q.direction.a.re, q.direction.a.im, q.direction.b.re, q.direction.b.im);
        kq.partial_cmp(&kp).unwrap()
    });
    out
}

/// Sharpens the representative of a finite multiple root: the (m-1)-th
/// derivative of p has a simple root there, where Newton converges to full
/// precision instead of the eps^(1/m) attainable on p itself.
fn polish_cluster(p: &[Scalar], c: &mut Cluster) {
    let m = c.members.len();
    if m < 2 || m >= p.len() {
        return;
    }
    let mut ts: Vec<Scalar> = Vec::with_capacity(m);
    for member in &c.members {
        match member {
            Some(t) => ts.push(*t),
            None => return,
        }
    }
    let mean = ts.iter().sum::<Scalar>() / m as f64;
    let spread = ts.iter().map(|t| (t - mean).norm()).fold(0.0, f64::max);
    let mut q: Vec<Scalar> = p.to_vec();
    for _ in 0..(m - 1) {
        q = q
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, ci)| ci * i as f64)
            .collect();
    }
    let mut z = mean;
    for _ in 0..8 {
        let (qv, dqv) = horner(&q, z);
        if dqv.norm() <= 1e-300 {
            return;
        }
        let step = qv / dqv;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    // only accept a polish that stays inside the cluster's own footprint
    if (z - mean).norm() <= 4.0 * spread + tol::ROOT_CLUSTER * (1.0 + mean.norm_sqr()) {
        c.dir = LinearForm::new(z, Scalar::new(1.0, 0.0)).normalized();
    }
}

/// True when the union of the two clusters, of total size m, has spread
/// at most a modest multiple of (noise / |p^(m)(mean)/m!|)^(1/m): the size
/// of the splatter a genuine m-fold root produces in f64.
fn consistent_merge(p: &[Scalar], a: &Cluster, b: &Cluster) -> bool {
    let mut ts: Vec<Scalar> = Vec::new();
    for m in a.members.iter().chain(&b.members) {
        match m {
            Some(t) => ts.push(*t),
            None => return false, // infinity only merges via the fixed tolerance
        }
    }
    let m = ts.len();
    if m > p.len() - 1 {
        return false;
    }
    let mean = ts.iter().sum::<Scalar>() / m as f64;
    let spread = ts.iter().map(|t| (t - mean).norm()).fold(0.0, f64::max);
    let taylor = taylor_at(p, mean, m);
    let lead = taylor[m].norm();
    let noise = eval_noise(p, mean);
    if lead <= noise {
        return true; // flatter than an m-fold root: even wider cluster
    }
    spread <= 12.0 * (noise / lead).powf(1.0 / m as f64)
}

/// Taylor coefficients p^(j)(z)/j! for j = 0..k by repeated synthetic
/// division.
fn taylor_at(p: &[Scalar], z: Scalar, k: usize) -> Vec<Scalar> {
    let mut td = vec![Scalar::new(0.0, 0.0); k + 1];
    for &c in p.iter().rev() {
        for j in (1..=k).rev() {
            td[j] = td[j] * z + td[j - 1];
        }
        td[0] = td[0] * z + c;
    }
    td
}

/// Bound on the rounding error of a Horner evaluation at z.
fn eval_noise(p: &[Scalar], z: Scalar) -> f64 {
    let mut s = 0.0;
    let az = z.norm();
    for c in p.iter().rev() {
        s = s * az + c.norm();
    }
    2.0 * (p.len() as f64) * f64::EPSILON * s
}

/// Evaluates p and p' at z in one Horner pass.
fn horner(p: &[Scalar], z: Scalar) -> (Scalar, Scalar) {
    let mut v = Scalar::new(0.0, 0.0);
    let mut dv = Scalar::new(0.0, 0.0);
    for &c in p.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

/// All complex roots of p(t) = sum p_i t^i, p of exact degree p.len()-1.
pub fn poly_roots(p: &[Scalar]) -> Result<Vec<Scalar>> {
    let m = p.len() - 1;
    if m == 0 {
        return Ok(Vec::new());
    }
    if m == 1 {
        return Ok(vec![-p[0] / p[1]]);
    }
    let lead = p[m];
    let monic: Vec<Scalar> = p.iter().map(|c| c / lead).collect();
    for attempt in 0..3 {
        if let Some(zs) = aberth(&monic, attempt) {
            return Ok(zs);
        }
    }
    companion_roots(&monic)
}

/// True when every approximation has residual at the level of evaluation
/// noise, i.e. is a root to working precision.
fn at_noise_floor(p: &[Scalar], zs: &[Scalar]) -> bool {
    zs.iter().all(|&z| {
        let (pv, _) = horner(p, z);
        pv.norm() <= 32.0 * eval_noise(p, z)
    })
}

/// Ehrlich-Aberth simultaneous iteration on a monic polynomial. Multiple
/// roots stall at their attainable accuracy, so the sweep stops either on
/// tiny corrections or when progress flattens, and the result is accepted
/// if every residual sits at the evaluation noise floor. 200 sweeps
/// without that is a failure (caller falls back to companion eigenvalues).
fn aberth(p: &[Scalar], attempt: usize) -> Option<Vec<Scalar>> {
    let m = p.len() - 1;
    let cauchy = 1.0 + p[..m].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = cauchy.min(1.0 + p[0].norm().powf(1.0 / m as f64)) * (1.0 + 0.5 * attempt as f64);
    let offset = 0.41 + 1.3 * attempt as f64;
    let mut z: Vec<Scalar> = (0..m)
        .map(|j| {
            let ang = std::f64::consts::TAU * (j as f64 + 0.5) / m as f64 + offset;
            Scalar::from_polar(radius, ang)
        })
        .collect();
    let mut w = vec![Scalar::new(0.0, 0.0); m];
    let mut best = f64::INFINITY;
    let mut since_improvement = 0;
    for _ in 0..200 {
        let mut worst: f64 = 0.0;
        for j in 0..m {
            let (pv, dv) = horner(p, z[j]);
            if pv.norm() == 0.0 {
                w[j] = Scalar::new(0.0, 0.0);
                continue;
            }
            let newton = if dv.norm() > 1e-300 {
                pv / dv
            } else {
                Scalar::new(1e-8, 1e-8)
            };
            let mut s = Scalar::new(0.0, 0.0);
            for l in 0..m {
                if l != j {
                    let diff = z[j] - z[l];
                    if diff.norm() > 1e-300 {
                        s += diff.inv();
                    }
                }
            }
            let denom = Scalar::new(1.0, 0.0) - newton * s;
            w[j] = if denom.norm() > 1e-300 { newton / denom } else { newton };
            worst = worst.max(w[j].norm() / (1.0 + z[j].norm()));
        }
        for j in 0..m {
            z[j] -= w[j];
        }
        if worst <= 1e-14 {
            return Some(z);
        }
        if worst < 0.5 * best {
            best = worst;
            since_improvement = 0;
        } else {
            since_improvement += 1;
            if since_improvement >= 50 {
                break;
            }
        }
    }
    if at_noise_floor(p, &z) {
        Some(z)
    } else {
        None
    }
}

/// Companion-matrix eigenvalues, then a short Newton polish per root.
fn companion_roots(monic: &[Scalar]) -> Result<Vec<Scalar>> {
    use nalgebra::DMatrix;
    let m = monic.len() - 1;
    let all_real = monic.iter().all(|c| c.im.abs() <= 1e-14 * (1.0 + c.re.abs()));
    let mut zs: Vec<Scalar> = if all_real {
        let mut a = DMatrix::<f64>::zeros(m, m);
        for i in 1..m {
            a[(i, i - 1)] = 1.0;
        }
        for i in 0..m {
            a[(i, m - 1)] = -monic[i].re;
        }
        a.complex_eigenvalues().iter().copied().collect()
    } else {
        let mut a = DMatrix::<Complex64>::zeros(m, m);
        for i in 1..m {
            a[(i, i - 1)] = Scalar::new(1.0, 0.0);
        }
        for i in 0..m {
            a[(i, m - 1)] = -monic[i];
        }
        match nalgebra::linalg::Schur::try_new(a, 1e-14, 10_000) {
            Some(s) => {
                let (_, t) = s.unpack();
                (0..m).map(|i| t[(i, i)]).collect()
            }
            None => return Err(crate::error::Error::RootSolve),
        }
    };
    for z in &mut zs {
        for _ in 0..3 {
            let (pv, dv) = horner(monic, *z);
            if dv.norm() > 1e-300 {
                let step = pv / dv;
                if step.norm() < 0.5 * (1.0 + z.norm()) {
                    *z -= step;
                }
            }
        }
    }
    if at_noise_floor(monic, &zs) {
        Ok(zs)
    } else {
        Err(crate::error::Error::RootSolve)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::{power, ScalarField};

    #[test]
    fn factored_cubic_has_three_directions() {
        // x^2 y - x y^2 = xy(x - y): directions (1,0), (0,1), (1,1)
        let f = BinaryForm::real(&[0.0, -1.0, 1.0, 0.0]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.total_multiplicity(), 3);
        assert_eq!(rs.roots.len(), 3);
        let s = 1.0 / 2f64.sqrt();
        for expect in [
            LinearForm::real(1.0, 0.0),
            LinearForm::real(0.0, 1.0),
            LinearForm::real(s, s),
        ] {
            assert!(
                rs.roots.iter().any(|r| fubini_study(&r.direction, &expect) < 1e-12),
                "missing direction {:?}",
                expect
            );
        }
    }

    #[test]
    fn quartic_with_infinity_root() {
        // 4xy(x^2 - y^2): directions (1,0), (0,1), (1,1), (1,-1)
        let f = BinaryForm::real(&[0.0, -4.0, 0.0, 4.0, 0.0]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 4);
        let s = 1.0 / 2f64.sqrt();
        for expect in [
            LinearForm::real(1.0, 0.0),
            LinearForm::real(0.0, 1.0),
            LinearForm::real(s, s),
            LinearForm::real(s, -s),
        ] {
            assert!(rs.roots.iter().any(|r| fubini_study(&r.direction, &expect) < 1e-12));
        }
    }

    #[test]
    fn triple_root_clusters_to_multiplicity_three() {
        // (x - y)^3
        let l = LinearForm::real(1.0, -1.0);
        let f = power(&l, 3);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].multiplicity, 3);
        let s = 1.0 / 2f64.sqrt();
        assert!(fubini_study(&rs.roots[0].direction, &LinearForm::real(s, s)) < 1e-7);
    }

    #[test]
    fn mixed_multiplicities_resolve() {
        // (x - y)^2 (x + 2y) (x - 3y)
        let a = LinearForm::real(1.0, -1.0);
        let f = power(&a, 2)
            .mul(&power(&LinearForm::real(1.0, 2.0), 1))
            .mul(&power(&LinearForm::real(1.0, -3.0), 1));
        let rs = roots(&f).unwrap();
        assert_eq!(rs.total_multiplicity(), 4);
        assert_eq!(rs.roots.len(), 3);
        let mut mults: Vec<usize> = rs.roots.iter().map(|r| r.multiplicity).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 1, 2]);
    }

    #[test]
    fn nearby_but_distinct_roots_stay_separate() {
        // roots at t = 1 and t = 1 + 1e-5 must not merge
        let f = BinaryForm::real(&[1.0 + 1e-5, -(2.0 + 1e-5), 1.0]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 2);
        assert!(rs.roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn complex_pair_on_real_quadratic() {
        // x^2 + y^2 vanishes at (1, i) and (1, -i)
        let f = BinaryForm::real(&[1.0, 0.0, 1.0]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 2);
        for r in &rs.roots {
            assert!((r.direction.a.norm() - r.direction.b.norm()).abs() < 1e-12);
            assert!(!r.direction.is_real(1e-6));
        }
    }

    #[test]
    fn residuals_at_unit_roots_are_tiny() {
        let f = BinaryForm::real(&[0.3, -1.2, 0.07, 2.4, -0.9, 1.1]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.total_multiplicity(), 5);
        for r in &rs.roots {
            let v = f.eval(r.direction.a, r.direction.b).norm();
            assert!(v <= tol::ROOT_RESIDUAL_REL * f.norm(), "residual {v}");
        }
    }

    #[test]
    fn zero_form_is_degenerate() {
        let f = BinaryForm::zero(4, ScalarField::Real);
        let rs = roots(&f).unwrap();
        assert!(rs.degenerate);
        assert!(rs.roots.is_empty());
    }

    #[test]
    fn pure_monomial_roots() {
        // x^3 y^2: (0,1) with multiplicity 3 and (1,0) with multiplicity 2
        let f = BinaryForm::real(&[0.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 2);
        for r in &rs.roots {
            if r.direction.a.norm() > 0.5 {
                assert_eq!(r.multiplicity, 2);
            } else {
                assert_eq!(r.multiplicity, 3);
            }
        }
    }

    #[test]
    fn complex_coefficient_form() {
        // (x - i y)(x + 2 y) = x^2 + (2 - i) x y - 2i y^2
        let f = BinaryForm::new(
            2,
            vec![Scalar::new(0.0, -2.0), Scalar::new(2.0, -1.0), Scalar::new(1.0, 0.0)],
            ScalarField::Complex,
        )
        .unwrap();
        let rs = roots(&f).unwrap();
        assert_eq!(rs.roots.len(), 2);
        for r in &rs.roots {
            let v = f.eval(r.direction.a, r.direction.b).norm();
            assert!(v <= 1e-12);
        }
    }

    #[test]
    fn high_degree_random_form_recovers_all_roots() {
        let coeffs: Vec<f64> = vec![
            0.42, -1.77, 0.30, 2.10, -0.95, 0.11, 1.64, -0.08, -2.33, 0.71, 0.52, -1.05, 0.95,
        ];
        let f = BinaryForm::real(&coeffs);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.total_multiplicity(), 12);
        for r in &rs.roots {
            let v = f.eval(r.direction.a, r.direction.b).norm();
            assert!(v <= tol::ROOT_RESIDUAL_REL * f.norm());
        }
    }
}
