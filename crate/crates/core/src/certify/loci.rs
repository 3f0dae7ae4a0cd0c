use serde::{Deserialize, Serialize};

use crate::construct::optimal_separation_filling;
use crate::error::{Error, Result};
use crate::params::{max_distance_bound, rho, BnParams, Triple};
use crate::tableau::{filling_exists, minimal_torsion_chain};

use super::{Inequality, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Distinct,
    SameParameters,
    SerreDualPair,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisCase {
    /// `r + 1 < g - d + r`
    Strict,
    /// `r + 1 = g - d + r`
    Square,
}

/// The size condition on `e` for one locus, in both the form used for the
/// verdict and the form under which the separation bound is proved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    /// Normalized so that `r + 1 <= g - d + r`.
    pub locus: Triple,
    pub case: HypothesisCase,
    pub e: i64,
    /// `(r+3)r` (strict) or `r^2 - 2r - 1` (square); the condition is `2e <= this`.
    pub twice_bound_in_r: i64,
    /// `(alpha+2)(alpha-1)` or `alpha^2 - 2`, again as `2e <=`.
    pub twice_bound_in_alpha: i64,
    pub holds: bool,
    pub forms_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessVerdict {
    pub verdict: Verdict,
    pub p1: Triple,
    pub p2: Triple,
    /// Separation bound of the rectangle with the larger perimeter.
    pub a1: Option<i64>,
    /// Separation bound of the other rectangle.
    pub bound2: Option<i64>,
    pub hypothesis_report: Vec<HypothesisCheck>,
    pub reason: String,
    pub inequalities: Vec<Inequality>,
}

fn hypothesis(p: &BnParams) -> HypothesisCheck {
    let (r, alpha, beta) = (p.r(), p.alpha(), p.beta());
    let e = -rho(p);
    let (case, in_r, in_alpha) = if alpha < beta {
        (
            HypothesisCase::Strict,
            (r + 3) * r,
            (alpha + 2) * (alpha - 1),
        )
    } else {
        (HypothesisCase::Square, r * r - 2 * r - 1, alpha * alpha - 2)
    };
    HypothesisCheck {
        locus: p.triple(),
        case,
        e,
        twice_bound_in_r: in_r,
        twice_bound_in_alpha: in_alpha,
        holds: 2 * e <= in_r,
        forms_agree: (2 * e <= in_r) == (2 * e <= in_alpha),
    }
}

/// Decides whether two Brill–Noether loci of the same codimension can be
/// told apart by the maximal grid-distance sum of their fillings.
pub fn distinctness_check(p1: &BnParams, p2: &BnParams) -> Result<DistinctnessVerdict> {
    let (t1, t2) = (p1.as_given(), p2.as_given());
    let mut out = DistinctnessVerdict {
        verdict: Verdict::Inconclusive,
        p1: t1,
        p2: t2,
        a1: None,
        bound2: None,
        hypothesis_report: Vec::new(),
        reason: String::new(),
        inequalities: Vec::new(),
    };
    if t1 == t2 {
        out.verdict = Verdict::SameParameters;
        out.reason = "identical (g, r, d)".into();
        return Ok(out);
    }
    if p1.triple() == p2.triple() {
        out.verdict = Verdict::SerreDualPair;
        out.reason = "the two triples are Serre dual".into();
        return Ok(out);
    }
    for p in [p1, p2] {
        if rho(p) >= 0 {
            return Err(Error::Precondition(format!(
                "rho{} = {} is not negative",
                p.as_given(),
                rho(p)
            )));
        }
    }
    if p1.g() != p2.g() {
        out.reason = format!("different genera {} and {}", p1.g(), p2.g());
        return Ok(out);
    }
    let (e1, e2) = (-rho(p1), -rho(p2));
    out.inequalities
        .push(Inequality::new("codimensions", e1, Relation::Eq, e2));
    if e1 != e2 {
        out.reason = format!("codimensions differ ({e1} and {e2})");
        return Ok(out);
    }

    out.hypothesis_report = vec![hypothesis(p1), hypothesis(p2)];
    if let Some(bad) = out.hypothesis_report.iter().find(|h| !h.holds) {
        let condition = match bad.case {
            HypothesisCase::Strict => "e <= (r+3)r/2",
            HypothesisCase::Square => "e <= (r^2-2r-1)/2",
        };
        out.reason = format!("{} fails {condition} with e = {}", bad.locus, bad.e);
        return Ok(out);
    }

    let per1 = p1.alpha() + p1.beta();
    let per2 = p2.alpha() + p2.beta();
    if per1 == per2 {
        out.reason = "equal rectangle perimeters".into();
        return Ok(out);
    }
    let (big, small) = if per1 > per2 { (p1, p2) } else { (p2, p1) };
    let a1 = max_distance_bound(big.alpha(), big.beta(), e1)?;
    let bound2 = max_distance_bound(small.alpha(), small.beta(), e1)?;
    out.a1 = Some(a1);
    out.bound2 = Some(bound2);
    out.inequalities.push(Inequality::new(
        format!(
            "bound on the {}x{} rectangle vs the {}x{}",
            small.alpha(),
            small.beta(),
            big.alpha(),
            big.beta()
        ),
        bound2,
        Relation::Lt,
        a1,
    ));
    if bound2 < a1 {
        out.verdict = Verdict::Distinct;
        out.reason = format!("a chain with distance sum {a1} supports no filling of the other rectangle (at most {bound2})");
    } else {
        out.reason = format!("bound {bound2} is not below {a1}");
    }
    Ok(out)
}

/// Brute-force confirmation of a `Distinct` verdict: the torsion chain of an
/// optimal filling for the larger-perimeter rectangle admits no filling of
/// the other rectangle.
pub fn confirm_distinct_by_enumeration(p1: &BnParams, p2: &BnParams) -> Result<bool> {
    let (big, small) = if p1.alpha() + p1.beta() > p2.alpha() + p2.beta() {
        (p1, p2)
    } else {
        (p2, p1)
    };
    let e = -rho(big);
    let f = optimal_separation_filling(big.alpha() as usize, big.beta() as usize, e as usize)?;
    let chain = minimal_torsion_chain(&f)?;
    Ok(!filling_exists(
        small.alpha() as usize,
        small.beta() as usize,
        &chain,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InclusionFamily {
    #[serde(rename = "t0")]
    T0,
    #[serde(rename = "t1")]
    T1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InclusionStatus {
    KnownInclusion,
    OpenCandidate,
    ExcludedByCitedWork,
}

/// A potential inclusion `M^{r1}_{g,d1} ⊆ M^{r1+1}_{g,d2}` of loci of
/// codimension 2 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionCandidate {
    pub family: InclusionFamily,
    pub alpha1: i64,
    /// As produced by the family formula.
    pub loci: (Triple, Triple),
    /// The same loci with `r + 1 <= g - d + r`.
    pub normalized: (Triple, Triple),
    pub status: InclusionStatus,
    pub inequalities: Vec<Inequality>,
}

impl InclusionCandidate {
    /// `M^r_{g,d}` notation of the normalized loci.
    pub fn display(&self) -> String {
        let (a, b) = self.normalized;
        format!(
            "M^{}_{{{},{}}} ⊆ M^{}_{{{},{}}}",
            a.r, a.g, a.d, b.r, b.g, b.d
        )
    }
}

fn candidate(family: InclusionFamily, alpha: i64) -> Result<InclusionCandidate> {
    let (l1, l2) = match family {
        InclusionFamily::T0 => {
            let g = 2 * alpha * alpha + alpha - 2;
            (
                Triple::new(g, alpha - 1, 2 * alpha * alpha - 4),
                Triple::new(g, alpha, 2 * alpha * alpha - 1),
            )
        }
        InclusionFamily::T1 => {
            let g = alpha * alpha - 2;
            (
                Triple::new(g, alpha - 1, alpha * alpha - 3),
                Triple::new(g, alpha, alpha * alpha - 1),
            )
        }
    };
    let (n1, n2) = (BnParams::from_triple(l1)?, BnParams::from_triple(l2)?);
    let (a1, b1, a2, b2) = (l1.alpha(), l1.beta(), l2.alpha(), l2.beta());
    let inequalities = vec![
        Inequality::new(
            "alpha1 beta1 vs alpha2 beta2 + 1",
            a1 * b1,
            Relation::Eq,
            a2 * b2 + 1,
        ),
        Inequality::new(
            "alpha1 + beta1 vs alpha2 + beta2 + 1",
            a1 + b1,
            Relation::Le,
            a2 + b2 + 1,
        ),
        Inequality::new("alpha2 vs alpha1 + 1", a2, Relation::Eq, a1 + 1),
        Inequality::new("rho of the first locus", rho(&n1), Relation::Eq, -2),
        Inequality::new("rho of the second locus", rho(&n2), Relation::Eq, -1),
    ];
    if let Some(bad) = inequalities.iter().find(|i| !i.holds()) {
        return Err(Error::Internal(format!("family candidate fails {bad}")));
    }
    let status = match (family, alpha) {
        (InclusionFamily::T0, 2) | (InclusionFamily::T1, 3) => InclusionStatus::KnownInclusion,
        (InclusionFamily::T0, 3) => InclusionStatus::ExcludedByCitedWork,
        _ => InclusionStatus::OpenCandidate,
    };
    Ok(InclusionCandidate {
        family,
        alpha1: a1,
        loci: (l1, l2),
        normalized: (n1.triple(), n2.triple()),
        status,
        inequalities,
    })
}

/// Members of the two diophantine families whose narrower locus has
/// rectangle width at most `alpha_max`, ordered by family then `alpha1`.
pub fn inclusion_candidates(alpha_max: i64) -> Result<Vec<InclusionCandidate>> {
    if alpha_max < 2 {
        return Err(Error::OutOfRange(format!(
            "alpha_max = {alpha_max} is below 2"
        )));
    }
    let mut out = Vec::new();
    for (family, start) in [(InclusionFamily::T0, 2), (InclusionFamily::T1, 3)] {
        // the narrower width grows with alpha, so stop at the first miss
        for alpha in start.. {
            let c = candidate(family, alpha)?;
            let width = c.normalized.0.alpha().min(c.normalized.1.alpha());
            if width > alpha_max {
                break;
            }
            out.push(c);
        }
    }
    Ok(out)
}
