//! The total index: the maximal number of parts in a decomposition of a
//! nef class into nonzero nef lattice classes.
//!
//! A decomposition with positive integer multiplicities is equivalent to a
//! multiset of unit-coefficient parts, so the solver maximizes multiset
//! cardinality. Any part of a partition of `t` lies in the order interval
//! `[0, t]`: the complement of a part is the sum of the remaining nef
//! parts and hence nef. The interval is therefore the complete atom pool.
//!
//! Two independent solvers are provided: a dynamic program graded by the
//! positivity functional, and an exhaustive recursive search used as an
//! oracle on small instances.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::dot;
use crate::nef::{IntervalPoints, NefCone};

/// Default node budget for the brute-force oracle; generous for the
/// Picard ranks the oracle is meant for.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// An explicit maximizer: a multiset of nonzero nef classes summing to
/// the target. Reported as *a* maximizer; ties are broken
/// deterministically but uniqueness is not claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    parts: Vec<Vec<BigInt>>,
    target: Vec<BigInt>,
}

impl PartitionCertificate {
    /// The parts in lexicographic order.
    pub fn parts(&self) -> &[Vec<BigInt>] {
        &self.parts
    }

    pub fn target(&self) -> &[BigInt] {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Checks a certificate without consulting either solver: all parts
/// nonzero and nef, and the parts sum to the target exactly.
pub fn validate_certificate(cone: &NefCone, cert: &PartitionCertificate) -> Result<()> {
    let mut sum = vec![BigInt::zero(); cone.rho()];
    for part in cert.parts() {
        if part.iter().all(|e| e.is_zero()) {
            return Err(Error::Internal("certificate contains a zero part".into()));
        }
        if !cone.is_nef(part) {
            return Err(Error::Internal(format!(
                "certificate part {part:?} is not nef"
            )));
        }
        for (acc, e) in sum.iter_mut().zip(part) {
            *acc += e;
        }
    }
    if sum != cert.target() {
        return Err(Error::Internal(
            "certificate parts do not sum to the target".into(),
        ));
    }
    Ok(())
}

/// The candidate parts: every nonzero point of the order interval.
pub fn atoms(cone: &NefCone, t: &[BigInt]) -> Vec<Vec<BigInt>> {
    cone.enumerate_interval(t)
        .points()
        .iter()
        .filter(|p| !p.iter().all(|e| e.is_zero()))
        .cloned()
        .collect()
}

/// Atoms that are not the sum of two atoms. Restricting the search to
/// these preserves the optimum: a reducible part splits into two parts
/// and only lengthens the partition.
pub fn irreducible_atoms(atoms: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let pool: std::collections::HashSet<&[BigInt]> = atoms.iter().map(|a| a.as_slice()).collect();
    atoms
        .iter()
        .filter(|x| {
            !atoms.iter().any(|a| {
                let rest: Option<Vec<BigInt>> = x
                    .iter()
                    .zip(a.iter())
                    .map(|(xi, ai)| {
                        let r = xi - ai;
                        (r >= BigInt::zero()).then_some(r)
                    })
                    .collect();
                match rest {
                    Some(r) => !r.iter().all(|e| e.is_zero()) && pool.contains(r.as_slice()),
                    None => false,
                }
            })
        })
        .cloned()
        .collect()
}

fn check_target(cone: &NefCone, t: &[BigInt]) -> Result<()> {
    if t.iter().all(|e| e.is_zero()) {
        return Err(Error::TargetZero);
    }
    if !cone.is_nef(t) {
        return Err(Error::TargetNotNef);
    }
    Ok(())
}

/// Exact total index with a certificate, by dynamic programming.
///
/// States are the interval points ordered by the positivity grading (ties
/// broken lexicographically); every atom strictly decreases the grading,
/// so each state only depends on already-finalized ones. Backpointers keep
/// the lexicographically smallest optimal atom, and the certificate parts
/// are sorted, so reports are reproducible.
pub fn total_index_dp(cone: &NefCone, t: &[BigInt]) -> Result<(u64, PartitionCertificate)> {
    check_target(cone, t)?;
    let interval = cone.enumerate_interval(t);
    let points = interval.points();
    let atom_list = atoms_from(&interval);
    let phi = cone.positivity_grading();

    let index: HashMap<&[BigInt], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        (dot(&phi, &points[i]), &points[i]).cmp(&(dot(&phi, &points[j]), &points[j]))
    });

    let mut part_count: Vec<Option<u64>> = vec![None; points.len()];
    let mut back: Vec<Option<usize>> = vec![None; points.len()];

    for &s in &order {
        let state = &points[s];
        if state.iter().all(|e| e.is_zero()) {
            part_count[s] = Some(0);
            continue;
        }
        let mut best: Option<(u64, usize)> = None;
        for (ai, atom) in atom_list.iter().enumerate() {
            let Some(rest) = subtract_nonneg(state, atom) else {
                continue;
            };
            let Some(&r) = index.get(rest.as_slice()) else {
                continue;
            };
            let Some(k) = part_count[r] else {
                continue;
            };
            // Strict improvement keeps the lexicographically first atom.
            if best.is_none_or(|(b, _)| k + 1 > b) {
                best = Some((k + 1, ai));
            }
        }
        let (count, atom_idx) = best.expect("every nonzero interval point is itself an atom");
        part_count[s] = Some(count);
        back[s] = Some(atom_idx);
    }

    let t_idx = index[t];
    let tau = part_count[t_idx].expect("target is an interval point");

    let mut parts = Vec::with_capacity(tau as usize);
    let mut cursor = t_idx;
    while let Some(atom_idx) = back[cursor] {
        let atom = &atom_list[atom_idx];
        parts.push(atom.clone());
        let rest = subtract_nonneg(&points[cursor], atom).expect("backpointer is valid");
        cursor = index[rest.as_slice()];
    }
    parts.sort();

    let cert = PartitionCertificate {
        parts,
        target: t.to_vec(),
    };
    validate_certificate(cone, &cert)?;
    if cert.len() as u64 != tau {
        return Err(Error::Internal(
            "certificate length disagrees with computed index".into(),
        ));
    }
    Ok((tau, cert))
}

/// Total index restricted to a caller-supplied atom pool; used to
/// cross-check that irreducible atoms preserve the optimum.
pub fn total_index_dp_with_atoms(
    cone: &NefCone,
    t: &[BigInt],
    atom_list: &[Vec<BigInt>],
) -> Result<u64> {
    check_target(cone, t)?;
    let interval = cone.enumerate_interval(t);
    let points = interval.points();
    let phi = cone.positivity_grading();
    let index: HashMap<&[BigInt], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        (dot(&phi, &points[i]), &points[i]).cmp(&(dot(&phi, &points[j]), &points[j]))
    });
    let mut part_count: Vec<Option<u64>> = vec![None; points.len()];
    for &s in &order {
        let state = &points[s];
        if state.iter().all(|e| e.is_zero()) {
            part_count[s] = Some(0);
            continue;
        }
        let mut best = None;
        for atom in atom_list {
            let Some(rest) = subtract_nonneg(state, atom) else {
                continue;
            };
            let Some(&r) = index.get(rest.as_slice()) else {
                continue;
            };
            let Some(k) = part_count[r] else {
                continue;
            };
            if best.is_none_or(|b| k + 1 > b) {
                best = Some(k + 1);
            }
        }
        part_count[s] = best;
    }
    part_count[index[t]]
        .ok_or_else(|| Error::Internal("target unreachable from supplied atom pool".into()))
}

/// Exhaustive search over canonically ordered atom sequences; the
/// independent oracle for `total_index_dp`. Intended for small instances;
/// the node budget guards runaway searches.
pub fn total_index_bruteforce(cone: &NefCone, t: &[BigInt]) -> Result<u64> {
    total_index_bruteforce_with_budget(cone, t, DEFAULT_ORACLE_BUDGET)
}

pub fn total_index_bruteforce_with_budget(
    cone: &NefCone,
    t: &[BigInt],
    budget: u64,
) -> Result<u64> {
    check_target(cone, t)?;
    let interval = cone.enumerate_interval(t);
    let atom_list = atoms_from(&interval);
    let mut nodes: u64 = 0;
    let best = search(&interval, &atom_list, t, 0, budget, &mut nodes)?;
    best.ok_or_else(|| Error::Internal("no partition found for nonzero nef target".into()))
}

/// Max parts completing `rest` using atoms with index >= `start` (sequences
/// are non-decreasing in atom index, so each multiset is visited once).
/// Any completable remainder is a sum of nef classes and stays in the
/// interval, so non-interval remainders are pruned exactly.
fn search(
    interval: &IntervalPoints,
    atom_list: &[Vec<BigInt>],
    rest: &[BigInt],
    start: usize,
    budget: u64,
    nodes: &mut u64,
) -> Result<Option<u64>> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExhausted(budget));
    }
    if rest.iter().all(|e| e.is_zero()) {
        return Ok(Some(0));
    }
    let mut best: Option<u64> = None;
    for (ai, atom) in atom_list.iter().enumerate().skip(start) {
        let Some(remainder) = subtract_nonneg(rest, atom) else {
            continue;
        };
        if !interval.contains(&remainder) {
            continue;
        }
        if let Some(sub) = search(interval, atom_list, &remainder, ai, budget, nodes)? {
            let candidate = sub + 1;
            if best.is_none_or(|b| candidate > b) {
                best = Some(candidate);
            }
        }
    }
    Ok(best)
}

fn atoms_from(interval: &IntervalPoints) -> Vec<Vec<BigInt>> {
    interval
        .points()
        .iter()
        .filter(|p| !p.iter().all(|e| e.is_zero()))
        .cloned()
        .collect()
}

fn subtract_nonneg(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let r = x - y;
            (r >= BigInt::zero()).then_some(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{choose_basis_rays, compute_walls, face_fan};
    use crate::lattice::ivec;
    use crate::pic::{anticanonical, to_pic};
    use crate::polytope::FanoPolytope;

    fn setup(verts: &[&[i64]]) -> (NefCone, Vec<BigInt>) {
        let dim = verts[0].len();
        let p = FanoPolytope::new(dim, verts.iter().map(|v| ivec(v)).collect()).unwrap();
        let fan = face_fan(&p);
        let walls = compute_walls(&p, &fan).unwrap();
        let basis = choose_basis_rays(&fan);
        let cone = NefCone::build(&p, &basis, &walls).unwrap();
        let minus_k = to_pic(&p, &basis, &anticanonical(&p)).unwrap();
        (cone, minus_k.coords().to_vec())
    }

    fn p2() -> (NefCone, Vec<BigInt>) {
        setup(&[&[1, 0], &[0, 1], &[-1, -1]])
    }

    fn p1xp1() -> (NefCone, Vec<BigInt>) {
        setup(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
    }

    fn blowup_p2() -> (NefCone, Vec<BigInt>) {
        setup(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]])
    }

    fn hexagon() -> (NefCone, Vec<BigInt>) {
        setup(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]])
    }

    #[test]
    fn p2_atoms_and_irreducibles() {
        let (cone, minus_k) = p2();
        let atom_list = atoms(&cone, &minus_k);
        assert_eq!(atom_list, vec![ivec(&[1]), ivec(&[2]), ivec(&[3])]);
        assert_eq!(irreducible_atoms(&atom_list), vec![ivec(&[1])]);
    }

    #[test]
    fn p1xp1_atoms_and_irreducibles() {
        let (cone, minus_k) = p1xp1();
        let atom_list = atoms(&cone, &minus_k);
        assert_eq!(atom_list.len(), 8);
        let irr = irreducible_atoms(&atom_list);
        assert_eq!(irr, vec![ivec(&[0, 1]), ivec(&[1, 0])]);
    }

    #[test]
    fn p2_total_index_is_three() {
        let (cone, minus_k) = p2();
        let (tau, cert) = total_index_dp(&cone, &minus_k).unwrap();
        assert_eq!(tau, 3);
        assert_eq!(cert.parts(), &[ivec(&[1]), ivec(&[1]), ivec(&[1])]);
    }

    #[test]
    fn p1xp1_total_index_is_four() {
        let (cone, minus_k) = p1xp1();
        let (tau, cert) = total_index_dp(&cone, &minus_k).unwrap();
        assert_eq!(tau, 4);
        assert_eq!(
            cert.parts(),
            &[ivec(&[0, 1]), ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[1, 0])]
        );
        assert_eq!(total_index_bruteforce(&cone, &minus_k).unwrap(), 4);
    }

    #[test]
    fn blowup_total_index_is_three() {
        let (cone, minus_k) = blowup_p2();
        let (tau, cert) = total_index_dp(&cone, &minus_k).unwrap();
        assert_eq!(tau, 3);
        assert_eq!(cert.parts(), &[ivec(&[1, 0]), ivec(&[1, 1]), ivec(&[1, 1])]);
    }

    #[test]
    fn hexagon_total_index_is_three() {
        let (cone, minus_k) = hexagon();
        let (tau, cert) = total_index_dp(&cone, &minus_k).unwrap();
        assert_eq!(tau, 3);
        assert_eq!(cert.len(), 3);
        validate_certificate(&cone, &cert).unwrap();
    }

    #[test]
    fn oracle_agrees_on_surfaces() {
        for (cone, minus_k) in [p2(), p1xp1(), blowup_p2(), hexagon()] {
            let (tau, _) = total_index_dp(&cone, &minus_k).unwrap();
            assert_eq!(total_index_bruteforce(&cone, &minus_k).unwrap(), tau);
        }
    }

    #[test]
    fn irreducible_restriction_preserves_optimum() {
        for (cone, minus_k) in [p2(), p1xp1(), blowup_p2(), hexagon()] {
            let (tau, _) = total_index_dp(&cone, &minus_k).unwrap();
            let irr = irreducible_atoms(&atoms(&cone, &minus_k));
            assert_eq!(
                total_index_dp_with_atoms(&cone, &minus_k, &irr).unwrap(),
                tau
            );
        }
    }

    #[test]
    fn rejects_zero_and_non_nef_targets() {
        let (cone, _) = p2();
        assert_eq!(
            total_index_dp(&cone, &ivec(&[0])).unwrap_err(),
            Error::TargetZero
        );
        assert_eq!(
            total_index_dp(&cone, &ivec(&[-2])).unwrap_err(),
            Error::TargetNotNef
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let (cone, minus_k) = p1xp1();
        let err = total_index_bruteforce_with_budget(&cone, &minus_k, 3).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted(3));
    }

    #[test]
    fn target_is_always_an_atom() {
        let (cone, minus_k) = hexagon();
        assert!(atoms(&cone, &minus_k).contains(&minus_k));
    }
}
