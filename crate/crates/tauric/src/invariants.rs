//! Classical invariants, the product-of-projective-spaces classifier, and
//! the conjecture verdicts.
//!
//! The headline inequality under test is `dim X + rho - tau >= 0` with
//! equality expected exactly for products of projective spaces; the
//! classical companion replaces `tau` by `rho * (Fano index)`. Violations
//! are findings to report, never assertion failures: scanning for
//! counterexamples is part of the point.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fan::{choose_basis_rays, compute_walls, face_fan, Basis, Fan, Wall};
use crate::lattice::gcd_of_entries;
use crate::nef::NefCone;
use crate::pic::{anticanonical, to_pic, PicClass};
use crate::polytope::FanoPolytope;
use crate::tau::{total_index_dp, PartitionCertificate};

/// The Fano index: the largest `r` such that the class is `r` times a
/// lattice class. In free Picard coordinates this is the gcd of the
/// entries.
pub fn fano_index(coords: &[BigInt]) -> Result<BigInt> {
    if coords.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroClass);
    }
    Ok(gcd_of_entries(coords))
}

/// The pseudo-index: the minimal anticanonical degree of an invariant
/// curve, i.e. the minimum of `sum b_i` over all walls.
pub fn pseudo_index(walls: &[Wall]) -> Result<BigInt> {
    let min = walls
        .iter()
        .map(|w| w.anticanonical_degree())
        .min()
        .ok_or_else(|| Error::Internal("fan without walls".to_string()))?;
    if min <= BigInt::zero() {
        return Err(Error::NonPositiveCurveLength(min));
    }
    Ok(min)
}

/// The nef-effective criterion for products of projective spaces: every
/// ray divisor class is nef, equivalently every effective divisor is nef.
pub fn is_product_of_projective_spaces(
    poly: &FanoPolytope,
    basis: &Basis,
    cone: &NefCone,
) -> Result<bool> {
    let n = poly.vertex_count();
    for i in 0..n {
        let mut unit = vec![BigInt::zero(); n];
        unit[i] = BigInt::from(1);
        let class = to_pic(poly, basis, &unit)?;
        if !cone.is_nef(class.coords()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Factor dimensions when the fan is a product of projective space fans,
/// detected through primitive collections: the minimal ray sets not
/// contained in any cone. The fan is a product exactly when the
/// collections are pairwise disjoint, cover all rays, and each sums to
/// zero; each collection of size `s` contributes a `P^(s-1)` factor.
pub fn product_factors(poly: &FanoPolytope, fan: &Fan) -> Option<Vec<usize>> {
    let collections = primitive_collections(fan);
    let n = fan.ray_count();
    let mut covered = vec![false; n];
    for collection in &collections {
        for &ray in collection {
            if covered[ray] {
                return None; // overlap
            }
            covered[ray] = true;
        }
    }
    if covered.iter().any(|c| !c) {
        return None;
    }
    for collection in &collections {
        for c in 0..poly.dim() {
            let s: BigInt = collection
                .iter()
                .map(|&ray| poly.vertex(ray)[c].clone())
                .sum();
            if !s.is_zero() {
                return None;
            }
        }
    }
    let mut factors: Vec<usize> = collections.iter().map(|p| p.len() - 1).collect();
    factors.sort_unstable();
    if factors.iter().sum::<usize>() != poly.dim() {
        return None;
    }
    Some(factors)
}

/// All primitive collections: minimal non-faces of the fan, found by
/// growing candidate sets whose proper subsets are all faces.
fn primitive_collections(fan: &Fan) -> Vec<Vec<usize>> {
    let n = fan.ray_count();
    let d = fan.dim();
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for cone in fan.maximal_cones() {
        for mask in 0..(1u32 << cone.len()) {
            let subset: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(pos, _)| mask & (1 << pos) != 0)
                .map(|(_, &ray)| ray)
                .collect();
            faces.insert(subset);
        }
    }

    let mut collections = Vec::new();
    // Level k holds the k-subsets all of whose proper subsets are faces.
    let mut level: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for _size in 2..=d + 1 {
        let mut next = Vec::new();
        for candidate in extend_candidates(&level, n) {
            let all_proper_faces = (0..candidate.len()).all(|omit| {
                let mut sub = candidate.clone();
                sub.remove(omit);
                faces.contains(&sub)
            });
            if !all_proper_faces {
                continue;
            }
            if faces.contains(&candidate) {
                next.push(candidate);
            } else {
                collections.push(candidate);
            }
        }
        level = next;
    }
    collections.sort();
    collections
}

fn extend_candidates(level: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for subset in level {
        let last = *subset.last().expect("non-empty level subset");
        for ray in last + 1..n {
            let mut extended = subset.clone();
            extended.push(ray);
            out.push(extended);
        }
    }
    out
}

/// Everything derived from a validated polytope, computed once and reused
/// by the report builder and by callers needing the raw pieces.
#[derive(Debug, Clone)]
pub struct Derived {
    pub fan: Fan,
    pub walls: Vec<Wall>,
    pub basis: Basis,
    pub cone: NefCone,
    pub minus_k: PicClass,
}

/// Runs the shared pipeline: face fan, walls, basis, nef cone, and the
/// normalized anticanonical class.
pub fn derive(poly: &FanoPolytope) -> Result<Derived> {
    let fan = face_fan(poly);
    let walls = compute_walls(poly, &fan)?;
    let basis = choose_basis_rays(&fan);
    let cone = NefCone::build(poly, &basis, &walls)?;
    let minus_k = to_pic(poly, &basis, &anticanonical(poly))?;
    Ok(Derived {
        fan,
        walls,
        basis,
        cone,
        minus_k,
    })
}

/// The full invariant record for one variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub dim: usize,
    pub n_rays: usize,
    pub rho: usize,
    pub fano_index: u64,
    pub pseudo_index: u64,
    pub tau: u64,
    #[serde(serialize_with = "serialize_certificate")]
    pub certificate: Vec<Vec<BigInt>>,
    pub mukai_defect: i64,
    pub total_defect: i64,
    pub is_product: bool,
    pub factors: Option<Vec<usize>>,
}

impl InvariantReport {
    /// Certificate parts rendered as coordinate tuples like `(1,0)`.
    pub fn certificate_strings(&self) -> Vec<String> {
        self.certificate.iter().map(|p| format_class(p)).collect()
    }
}

/// Renders Picard coordinates as a tuple string.
pub fn format_class(coords: &[BigInt]) -> String {
    let inner = coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("({inner})")
}

fn serialize_certificate<S: Serializer>(
    parts: &[Vec<BigInt>],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = parts.iter().map(|p| format_class(p)).collect();
    strings.serialize(serializer)
}

/// Runs the whole pipeline on a validated polytope and assembles the
/// report. Deterministic: same input, same report, byte for byte.
pub fn build_report(poly: &FanoPolytope) -> Result<InvariantReport> {
    let derived = derive(poly)?;
    let dim = poly.dim();
    let n_rays = poly.vertex_count();
    let rho = n_rays - dim;
    debug_assert_eq!(rho, derived.cone.rho());

    let (tau, certificate) = total_index_dp(&derived.cone, derived.minus_k.coords())?;
    let fano = to_u64(&fano_index(derived.minus_k.coords())?)?;
    let pseudo = to_u64(&pseudo_index(&derived.walls)?)?;

    let is_product = is_product_of_projective_spaces(poly, &derived.basis, &derived.cone)?;
    let factors = product_factors(poly, &derived.fan);
    // Two independent classifiers; disagreement means a bug in one of them.
    if is_product != factors.is_some() {
        return Err(Error::Internal(format!(
            "product classifiers disagree: nef-effective says {is_product}, \
             primitive collections say {:?}",
            factors
        )));
    }
    if let Some(f) = &factors {
        if f.iter().sum::<usize>() != dim || f.iter().map(|d| d + 1).sum::<usize>() != n_rays {
            return Err(Error::Internal("product factors are inconsistent".into()));
        }
    }

    let mukai_defect = defect(dim, rho, fano.checked_mul(rho as u64))?;
    let total_defect = defect(dim, rho, Some(tau))?;

    Ok(InvariantReport {
        name: poly.name().unwrap_or("unnamed").to_string(),
        dim,
        n_rays,
        rho,
        fano_index: fano,
        pseudo_index: pseudo,
        tau,
        certificate: certificate_parts(certificate),
        mukai_defect,
        total_defect,
        is_product,
        factors,
    })
}

fn certificate_parts(cert: PartitionCertificate) -> Vec<Vec<BigInt>> {
    cert.parts().to_vec()
}

fn to_u64(value: &BigInt) -> Result<u64> {
    value
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("invariant {value} does not fit in u64")))
}

fn defect(dim: usize, rho: usize, subtrahend: Option<u64>) -> Result<i64> {
    let base = (dim + rho) as i64;
    let s = subtrahend
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| Error::Internal("defect arithmetic overflow".into()))?;
    base.checked_sub(s)
        .ok_or_else(|| Error::Internal("defect arithmetic overflow".into()))
}

/// Outcome of one conjecture check. Disagreement between the defect and
/// the classifier is a reportable finding, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub inequality_holds: bool,
    pub equality_case: bool,
    pub classifier_agrees: bool,
    pub violation_detail: Option<String>,
}

impl ConjectureVerdict {
    pub fn is_clean(&self) -> bool {
        self.inequality_holds && self.classifier_agrees
    }
}

/// Checks `dim + rho - tau >= 0` with equality expected exactly for
/// products of projective spaces.
pub fn check_total_index_conjecture(report: &InvariantReport) -> ConjectureVerdict {
    let inequality_holds = report.total_defect >= 0;
    let equality_case = report.total_defect == 0;
    let classifier_agrees = equality_case == report.is_product;
    let violation_detail = if !inequality_holds {
        Some(format!(
            "total index {} exceeds dim + rho = {}",
            report.tau,
            report.dim + report.rho
        ))
    } else if !classifier_agrees {
        Some(if equality_case {
            "equality case but not a product of projective spaces".to_string()
        } else {
            format!(
                "product of projective spaces with positive defect {}",
                report.total_defect
            )
        })
    } else {
        None
    };
    ConjectureVerdict {
        inequality_holds,
        equality_case,
        classifier_agrees,
        violation_detail,
    }
}

/// Checks the classical form `dim + rho - index * rho >= 0`; equality is
/// expected exactly for products of projective spaces with all factors of
/// dimension `index - 1`.
pub fn check_mukai(report: &InvariantReport) -> ConjectureVerdict {
    let inequality_holds = report.mukai_defect >= 0;
    let equality_case = report.mukai_defect == 0;
    let expected_factor = (report.fano_index as usize).saturating_sub(1);
    let classifier_says = report.is_product
        && report
            .factors
            .as_ref()
            .map(|f| f.len() == report.rho && f.iter().all(|&d| d == expected_factor))
            .unwrap_or(false);
    let classifier_agrees = equality_case == classifier_says;
    let violation_detail = if !inequality_holds {
        Some(format!(
            "index {} times rho {} exceeds dim + rho = {}",
            report.fano_index,
            report.rho,
            report.dim + report.rho
        ))
    } else if !classifier_agrees {
        Some(if equality_case {
            "equality case but not a power of a projective space".to_string()
        } else {
            format!(
                "power of a projective space with positive defect {}",
                report.mukai_defect
            )
        })
    } else {
        None
    };
    ConjectureVerdict {
        inequality_holds,
        equality_case,
        classifier_agrees,
        violation_detail,
    }
}
