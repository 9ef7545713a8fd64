//! Numeric thresholds used across the crate.
//!
//! Everything here is an absolute constant or a factor applied to the norm
//! of the input form. Keeping them in one place makes the accepted error
//! budget auditable and keeps tests honest about what they claim.

/// A coefficient below this absolute value is treated as zero.
pub const ZERO_COEFF: f64 = 1e-13;

/// D(f) counts as identically zero below this multiple of the form norm.
pub const DEGENERATE_REL: f64 = 1e-10;

/// Fubini-Study distance under which polynomial roots are merged into one
/// cluster of higher multiplicity.
pub const ROOT_CLUSTER: f64 = 1e-7;

/// Reported roots must satisfy |f(r)| <= this multiple of the form norm at
/// a unit representative.
pub const ROOT_RESIDUAL_REL: f64 = 1e-10;

/// Eigenvector equation residual, relative to the form norm.
pub const EIGEN_RESIDUAL_REL: f64 = 1e-8;

/// Eigenvalue cross-check |lambda - <f, v^d>|, relative to the form norm.
pub const LAMBDA_CHECK_REL: f64 = 1e-10;

/// Gradient norm of |f - g|^2 accepted as a critical point, relative to the
/// form norm.
pub const GRAD_REL: f64 = 1e-8;

/// Certificate least-squares residual accepted as critical, relative to the
/// form norm.
pub const CERT_REL: f64 = 1e-8;

/// Two critical points closer than this multiple of the form norm in the
/// ambient tensor space are duplicates.
pub const DEDUP_REL: f64 = 1e-6;

/// Summand directions closer than this Fubini-Study distance count as
/// collapsed (boundary configuration, or a rejected chart artifact).
pub const COLLAPSE_FS: f64 = 1e-6;

/// Honest-rank candidates with directions closer than this are dropped:
/// so near the collapse locus, the separation into distinct powers loses
/// all precision and the point belongs to the tangent-scroll search.
pub const NEAR_COLLAPSE_FS: f64 = 1e-4;

/// A summand whose tensor weight |mu|*|l|^d falls below this multiple of
/// the form norm makes the configuration effectively lower rank.
pub const WEIGHT_FLOOR_REL: f64 = 1e-8;

/// Weights above this multiple of the form norm are runaway chart
/// artifacts (weights of genuine points are bounded by the geometry).
pub const WEIGHT_CEILING_REL: f64 = 1e10;

/// Hyperplane membership |<g, D(f)>| / (|g| |D(f)|) accepted as zero.
pub const MEMBERSHIP: f64 = 1e-8;

/// Relative singular value cutoff for least-squares solves.
pub const SVD_CUTOFF_REL: f64 = 1e-8;

/// Spectral reconstruction residual, relative to the decomposed form.
pub const SPECTRAL_RESIDUAL_REL: f64 = 1e-8;

/// Reconstruction residual for the equiangular decomposition of
/// (x^2+y^2)^(d/2).
pub const REZ_RESIDUAL: f64 = 1e-10;

/// |a^2 + b^2| below this multiple of |l|^2 marks an isotropic direction.
pub const ISOTROPIC: f64 = 1e-12;

/// Imaginary parts below this multiple of the norm count as real.
pub const REALITY_REL: f64 = 1e-8;

/// Tolerance for the algebraic identities checked by the property suites.
pub const PROPERTY: f64 = 1e-12;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds_are_ordered_sensibly() {
        assert!(ZERO_COEFF < DEGENERATE_REL);
        assert!(ROOT_CLUSTER < COLLAPSE_FS);
        assert!(COLLAPSE_FS < NEAR_COLLAPSE_FS);
        assert!(WEIGHT_FLOOR_REL < 1.0 && WEIGHT_CEILING_REL > 1.0);
        assert!(GRAD_REL <= MEMBERSHIP);
        assert!(DEDUP_REL < 1e-3);
        assert!(PROPERTY < ROOT_RESIDUAL_REL);
        for t in [
            ZERO_COEFF,
            DEGENERATE_REL,
            ROOT_CLUSTER,
            ROOT_RESIDUAL_REL,
            EIGEN_RESIDUAL_REL,
            LAMBDA_CHECK_REL,
            GRAD_REL,
            CERT_REL,
            DEDUP_REL,
            COLLAPSE_FS,
            NEAR_COLLAPSE_FS,
            WEIGHT_FLOOR_REL,
            MEMBERSHIP,
            SVD_CUTOFF_REL,
            SPECTRAL_RESIDUAL_REL,
            REZ_RESIDUAL,
            ISOTROPIC,
            REALITY_REL,
            PROPERTY,
        ] {
            assert!(t > 0.0 && t < 1.0);
        }
    }
}
