//! Brill–Noether numerology.
//!
//! A triple `(g, r, d)` determines a rectangle with `alpha = r + 1` columns
//! and `beta = g - d + r` rows. Serre duality swaps the two sides, so every
//! [`BnParams`] is stored with `alpha <= beta`; the constructor dualizes when
//! needed and records that it did.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A raw `(g, r, d)` triple, no orientation applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub g: i64,
    pub r: i64,
    pub d: i64,
}

impl Triple {
    pub const fn new(g: i64, r: i64, d: i64) -> Self {
        Triple { g, r, d }
    }

    pub fn alpha(&self) -> i64 {
        self.r + 1
    }

    pub fn beta(&self) -> i64 {
        self.g - self.d + self.r
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(g={}, r={}, d={})", self.g, self.r, self.d)
    }
}

/// Brill–Noether parameters in canonical orientation (`alpha <= beta`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Triple", try_from = "Triple")]
pub struct BnParams {
    g: i64,
    r: i64,
    d: i64,
    dualized: bool,
}

fn check_well_formed(t: Triple) -> Result<()> {
    let bad = |reason: &str| Error::InvalidParams {
        g: t.g,
        r: t.r,
        d: t.d,
        reason: reason.to_string(),
    };
    if t.g < 2 {
        return Err(bad("genus must be at least 2"));
    }
    if t.r < 1 {
        return Err(bad("dimension r must be at least 1"));
    }
    if t.d < 1 {
        return Err(bad("degree d must be at least 1"));
    }
    if t.beta() < 1 {
        return Err(bad("g - d + r must be at least 1"));
    }
    Ok(())
}

impl BnParams {
    /// Builds parameters, replacing them by their Serre dual when
    /// `r + 1 > g - d + r`.
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        let t = Triple::new(g, r, d);
        check_well_formed(t)?;
        if t.alpha() > t.beta() {
            let dual = serre_dual_triple(t)?;
            Ok(BnParams {
                g: dual.g,
                r: dual.r,
                d: dual.d,
                dualized: true,
            })
        } else {
            Ok(BnParams {
                g,
                r,
                d,
                dualized: false,
            })
        }
    }

    pub fn from_triple(t: Triple) -> Result<Self> {
        Self::new(t.g, t.r, t.d)
    }

    /// Parameters whose rectangle is `alpha` columns by `beta` rows with
    /// index universe `1..=g`.
    pub fn from_shape(alpha: i64, beta: i64, g: i64) -> Result<Self> {
        let r = alpha - 1;
        let d = g + r - beta;
        Self::new(g, r, d)
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Whether the constructor replaced the input by its Serre dual.
    pub fn dualized(&self) -> bool {
        self.dualized
    }

    pub fn triple(&self) -> Triple {
        Triple::new(self.g, self.r, self.d)
    }

    /// The triple as originally supplied to the constructor.
    pub fn as_given(&self) -> Triple {
        if self.dualized {
            serre_dual_triple(self.triple()).expect("dual of a normalized triple is well formed")
        } else {
            self.triple()
        }
    }

    pub fn alpha(&self) -> i64 {
        self.r + 1
    }

    pub fn beta(&self) -> i64 {
        self.g - self.d + self.r
    }

    /// `-rho` when `rho < 0`, otherwise 0.
    pub fn codimension(&self) -> i64 {
        (-rho(self)).max(0)
    }
}

/// The Brill–Noether number `g - (r + 1)(g - d + r)`.
pub fn rho(p: &BnParams) -> i64 {
    rho_triple(p.triple())
}

pub fn rho_triple(t: Triple) -> i64 {
    t.alpha()
        .checked_mul(t.beta())
        .and_then(|ab| t.g.checked_sub(ab))
        .expect("rho overflow on well-formed parameters")
}

/// `(g, r, d) -> (g, g - d + r - 1, 2g - 2 - d)`.
pub fn serre_dual(p: &BnParams) -> Result<Triple> {
    serre_dual_triple(p.triple())
}

pub fn serre_dual_triple(t: Triple) -> Result<Triple> {
    let r = t.g - t.d + t.r - 1;
    let d = 2 * t.g - 2 - t.d;
    let degenerate = |reason: &str| Error::DegenerateDual {
        g: t.g,
        r: t.r,
        d: t.d,
        reason: reason.to_string(),
    };
    if r < 1 {
        return Err(degenerate("dual dimension g - d + r - 1 is below 1"));
    }
    if d < 1 {
        return Err(degenerate("dual degree 2g - 2 - d is below 1"));
    }
    Ok(Triple::new(t.g, r, d))
}

/// `(k, j)` with `k(k+1)/2 <= e < (k+1)(k+2)/2` and `j = e - k(k+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularDecomposition {
    pub e: i64,
    pub k: i64,
    pub j: i64,
}

pub fn kj_decompose(e: i64) -> TriangularDecomposition {
    assert!(e >= 0, "kj_decompose needs e >= 0, got {e}");
    let mut k = 0i64;
    while (k + 1) * (k + 2) / 2 <= e {
        k += 1;
    }
    TriangularDecomposition {
        e,
        k,
        j: e - k * (k + 1) / 2,
    }
}

/// Largest `e` for which the grid-distance bound and the optimal
/// construction apply to an `alpha x beta` rectangle.
pub fn max_separable_e(alpha: i64, beta: i64) -> i64 {
    if alpha < beta {
        (alpha + 2) * (alpha - 1) / 2
    } else {
        (alpha * alpha - 2).div_euclid(2)
    }
}

pub(crate) fn check_separation_range(alpha: i64, beta: i64, e: i64) -> Result<()> {
    if alpha < 1 {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} must be at least 1"
        )));
    }
    if alpha > beta {
        return Err(Error::OutOfRange(format!(
            "alpha <= beta violated: alpha = {alpha}, beta = {beta}"
        )));
    }
    if e < 0 {
        return Err(Error::OutOfRange(format!("e = {e} must be non-negative")));
    }
    let cap = max_separable_e(alpha, beta);
    if e > cap {
        let which = if alpha < beta {
            "e <= (alpha+2)(alpha-1)/2"
        } else {
            "e <= (alpha^2-2)/2"
        };
        return Err(Error::OutOfRange(format!(
            "{which} violated: e = {e}, bound = {cap} for alpha = {alpha}, beta = {beta}"
        )));
    }
    Ok(())
}

/// Upper bound on the sum of grid distances between the two occurrences of
/// each of `e` doubled indices in an admissible `alpha x beta` filling:
/// `e(alpha + beta - 2) - 2((k^3 - k)/3 + jk)`.
pub fn max_distance_bound(alpha: i64, beta: i64, e: i64) -> Result<i64> {
    check_separation_range(alpha, beta, e)?;
    let TriangularDecomposition { k, j, .. } = kj_decompose(e);
    let ovf = || Error::Overflow("max_distance_bound");
    let perimeter = alpha
        .checked_add(beta)
        .and_then(|s| s.checked_sub(2))
        .ok_or_else(ovf)?;
    let lead = e.checked_mul(perimeter).ok_or_else(ovf)?;
    let cube = k
        .checked_mul(k)
        .and_then(|k2| k2.checked_mul(k))
        .and_then(|k3| k3.checked_sub(k))
        .ok_or_else(ovf)?;
    let correction = (cube / 3)
        .checked_add(j.checked_mul(k).ok_or_else(ovf)?)
        .and_then(|c| c.checked_mul(2))
        .ok_or_else(ovf)?;
    lead.checked_sub(correction).ok_or_else(ovf)
}

/// Which existence statements cover `e = alpha*beta - g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    pub alpha: i64,
    pub beta: i64,
    pub g: i64,
    pub e: i64,
    /// `alpha*beta/2 + 1 <= g <= alpha*beta`: the staircase construction applies.
    pub staircase_range: bool,
    /// `e` is within the optimal-separation bound.
    pub separation_range: bool,
    /// `0 < e <= g - 2`.
    pub petri_range: bool,
}

pub fn existence_ranges(alpha: i64, beta: i64, g: i64) -> RangeReport {
    let area = alpha * beta;
    let e = area - g;
    RangeReport {
        alpha,
        beta,
        g,
        e,
        staircase_range: alpha <= beta && 2 * (g - 1) >= area && g <= area,
        separation_range: alpha <= beta && e >= 0 && e <= max_separable_e(alpha, beta),
        petri_range: e > 0 && e <= g - 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&BnParams::new(8, 1, 4).unwrap()), -2);
        assert_eq!(rho(&BnParams::new(7, 2, 6).unwrap()), -2);
        assert_eq!(rho(&BnParams::new(10, 1, 7).unwrap()), 2);
        assert_eq!(BnParams::new(8, 1, 4).unwrap().codimension(), 2);
    }

    #[test]
    fn serre_dual_examples() {
        let p = BnParams::new(14, 4, 15).unwrap();
        // r + 1 = 5 > g - d + r = 3, so the constructor already dualized.
        assert!(p.dualized());
        assert_eq!(p.triple(), Triple::new(14, 2, 11));
        assert_eq!(p.as_given(), Triple::new(14, 4, 15));
        assert_eq!(
            serre_dual_triple(Triple::new(14, 4, 15)).unwrap(),
            Triple::new(14, 2, 11)
        );
        assert_eq!(
            serre_dual(&BnParams::new(7, 2, 6).unwrap()).unwrap(),
            Triple::new(7, 2, 6)
        );
        let t = serre_dual_triple(Triple::new(10, 1, 7)).unwrap();
        assert_eq!(t, Triple::new(10, 3, 11));
        assert_eq!(rho_triple(t), 2);
    }

    #[test]
    fn serre_dual_degenerate() {
        // g - d + r - 1 = 0
        assert!(matches!(
            serre_dual_triple(Triple::new(5, 1, 5)),
            Err(Error::DegenerateDual { .. })
        ));
    }

    #[test]
    fn rejects_malformed() {
        assert!(BnParams::new(1, 1, 1).is_err());
        assert!(BnParams::new(5, 0, 3).is_err());
        assert!(BnParams::new(5, 1, 9).is_err());
    }

    #[test]
    fn kj_examples() {
        assert_eq!(
            kj_decompose(7),
            TriangularDecomposition { e: 7, k: 3, j: 1 }
        );
        assert_eq!(
            kj_decompose(11),
            TriangularDecomposition { e: 11, k: 4, j: 1 }
        );
        assert_eq!(
            kj_decompose(0),
            TriangularDecomposition { e: 0, k: 0, j: 0 }
        );
    }

    #[test]
    fn kj_invariants() {
        for e in 0..200 {
            let TriangularDecomposition { k, j, .. } = kj_decompose(e);
            assert!(k * (k + 1) / 2 <= e && e < (k + 1) * (k + 2) / 2);
            assert_eq!(j, e - k * (k + 1) / 2);
            assert!((0..=k).contains(&j));
        }
    }

    #[test]
    fn bound_examples() {
        assert_eq!(max_distance_bound(5, 6, 7).unwrap(), 41);
        assert_eq!(max_distance_bound(5, 6, 1).unwrap(), 9);
        assert_eq!(max_distance_bound(5, 5, 11).unwrap(), 40);
        assert_eq!(max_distance_bound(4, 4, 0).unwrap(), 0);
    }

    #[test]
    fn bound_out_of_range() {
        // (alpha+2)(alpha-1)/2 = 14 for alpha = 5
        let err = max_distance_bound(5, 6, 15).unwrap_err();
        assert!(err.to_string().contains("(alpha+2)(alpha-1)/2"), "{err}");
        // (alpha^2-2)/2 = 11 for alpha = beta = 5
        let err = max_distance_bound(5, 5, 12).unwrap_err();
        assert!(err.to_string().contains("(alpha^2-2)/2"), "{err}");
        assert!(max_distance_bound(6, 5, 1).is_err());
    }

    #[test]
    fn ranges() {
        let r = existence_ranges(4, 8, 21);
        assert_eq!(r.e, 11);
        assert!(r.staircase_range && r.petri_range && !r.separation_range);
        let r = existence_ranges(5, 7, 19);
        assert_eq!(r.e, 16);
        assert_eq!(r.e, r.g - 3);
        assert!(r.staircase_range && r.petri_range);
        let r = existence_ranges(2, 2, 1);
        assert!(!r.staircase_range);
    }
}
