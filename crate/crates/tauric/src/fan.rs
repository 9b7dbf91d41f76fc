//! Face fans, walls between adjacent cones, and the integer wall relations.
//!
//! A wall is a codimension-one cone shared by two maximal cones. Its rays
//! satisfy a unique integer relation normalized to have coefficient 1 on
//! the two opposite rays; the coefficients compute intersection numbers of
//! divisors with the invariant curve associated to the wall.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polytope::FanoPolytope;

/// The face fan of a Fano polytope: one maximal cone per facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    ray_count: usize,
    maximal_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ray_count(&self) -> usize {
        self.ray_count
    }

    /// Maximal cones as sorted ray-index sets, in lexicographic order.
    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }
}

/// Builds the face fan; the maximal cones are exactly the facets.
///
/// Completeness and unimodularity of the cones are certified by the
/// polytope validation that produced `poly`.
pub fn face_fan(poly: &FanoPolytope) -> Fan {
    let maximal_cones: Vec<Vec<usize>> = poly
        .facets()
        .iter()
        .map(|f| f.vertex_set().to_vec())
        .collect();
    Fan {
        dim: poly.dim(),
        ray_count: poly.vertex_count(),
        maximal_cones,
    }
}

/// A wall together with its integer relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    shared: Vec<usize>,
    opposite: (usize, usize),
    coeffs: Vec<(usize, BigInt)>,
}

impl Wall {
    /// The `d - 1` rays spanning the wall, sorted.
    pub fn shared(&self) -> &[usize] {
        &self.shared
    }

    /// The two rays on opposite sides of the wall, `(u, u')` with `u < u'`.
    pub fn opposite(&self) -> (usize, usize) {
        self.opposite
    }

    /// Relation coefficients per involved ray, sorted by ray index.
    /// The coefficient is 1 on both opposite rays and the weighted sum of
    /// the ray vectors is zero.
    pub fn coeffs(&self) -> &[(usize, BigInt)] {
        &self.coeffs
    }

    /// Intersection number of the divisor `sum a_i D_i` with the invariant
    /// curve of this wall: `sum b_i a_i`.
    pub fn pairing(&self, a: &[BigInt]) -> BigInt {
        self.coeffs.iter().map(|(i, b)| b * &a[*i]).sum()
    }

    /// Anticanonical degree of the wall curve: `sum b_i`.
    pub fn anticanonical_degree(&self) -> BigInt {
        self.coeffs.iter().map(|(_, b)| b.clone()).sum()
    }
}

/// Computes one wall per adjacent pair of maximal cones.
///
/// The relation is found by expressing the ray `u'` of one cone in the
/// lattice basis formed by the shared rays plus the ray `u` of the other
/// cone; smoothness forces the `u`-coefficient to be -1, which normalizes
/// the relation to coefficient 1 on both `u` and `u'`.
pub fn compute_walls(poly: &FanoPolytope, fan: &Fan) -> Result<Vec<Wall>> {
    let d = fan.dim();
    let mut adjacency: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, cone) in fan.maximal_cones().iter().enumerate() {
        for omit in 0..cone.len() {
            let mut shared = cone.clone();
            let ray = shared.remove(omit);
            adjacency.entry(shared).or_default().push((ci, ray));
        }
    }

    let mut walls = Vec::new();
    for (shared, cones) in adjacency {
        if cones.len() != 2 {
            return Err(Error::Internal(format!(
                "wall {{{shared:?}}} borders {} maximal cones, expected 2",
                cones.len()
            )));
        }
        let (u, u_prime) = {
            let (a, b) = (cones[0].1, cones[1].1);
            (a.min(b), a.max(b))
        };

        // Columns: shared rays in order, then u; solve for u' coordinates.
        let mut columns: Vec<usize> = shared.clone();
        columns.push(u);
        let m = poly.vertex_matrix(&columns).transpose();
        let coeffs_in_basis = m.solve_unimodular(poly.vertex(u_prime))?;
        let u_coeff = &coeffs_in_basis[d - 1];
        if *u_coeff != -BigInt::one() {
            return Err(Error::Internal(format!(
                "wall relation has u-coefficient {u_coeff}, expected -1 \
                 (non-smooth adjacency escaped validation)"
            )));
        }

        let mut coeffs: Vec<(usize, BigInt)> = Vec::with_capacity(d + 1);
        for (pos, &ray) in shared.iter().enumerate() {
            coeffs.push((ray, -coeffs_in_basis[pos].clone()));
        }
        coeffs.push((u, BigInt::one()));
        coeffs.push((u_prime, BigInt::one()));
        coeffs.sort_by_key(|(ray, _)| *ray);

        // The weighted rays must sum to zero; anything else is a bug.
        for c in 0..d {
            let s: BigInt = coeffs
                .iter()
                .map(|(ray, b)| b * &poly.vertex(*ray)[c])
                .sum();
            if !s.is_zero() {
                return Err(Error::Internal(
                    "wall relation does not sum to zero".to_string(),
                ));
            }
        }

        walls.push(Wall {
            shared,
            opposite: (u, u_prime),
            coeffs,
        });
    }

    walls.sort_by(|a, b| (&a.shared, a.opposite).cmp(&(&b.shared, b.opposite)));
    Ok(walls)
}

/// The ray basis used to normalize Picard coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    rays: Vec<usize>,
}

impl Basis {
    /// Sorted indices of the `d` rays zeroed out by normalization.
    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    /// Ray indices not in the basis, in increasing order. Picard
    /// coordinates are indexed by these.
    pub fn complement(&self, ray_count: usize) -> Vec<usize> {
        (0..ray_count)
            .filter(|i| self.rays.binary_search(i).is_err())
            .collect()
    }
}

/// Deterministic basis choice: the lexicographically smallest maximal
/// cone. Its rays form a lattice basis by smoothness.
pub fn choose_basis_rays(fan: &Fan) -> Basis {
    let rays = fan
        .maximal_cones()
        .iter()
        .min()
        .expect("fan has at least one maximal cone")
        .clone();
    Basis { rays }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;
    use num_traits::{One, Signed};

    fn p2() -> FanoPolytope {
        FanoPolytope::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])]).unwrap()
    }

    fn p1xp1() -> FanoPolytope {
        FanoPolytope::new(
            2,
            vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, 0]), ivec(&[0, -1])],
        )
        .unwrap()
    }

    fn hexagon() -> FanoPolytope {
        FanoPolytope::new(
            2,
            vec![
                ivec(&[1, 0]),
                ivec(&[0, 1]),
                ivec(&[-1, 0]),
                ivec(&[0, -1]),
                ivec(&[1, 1]),
                ivec(&[-1, -1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn face_fan_of_p2_has_three_cones() {
        let fan = face_fan(&p2());
        assert_eq!(fan.maximal_cones(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn face_fan_of_p1xp1_has_four_cones() {
        let fan = face_fan(&p1xp1());
        assert_eq!(fan.maximal_cones().len(), 4);
    }

    #[test]
    fn face_fan_of_hexagon_has_six_cones() {
        let fan = face_fan(&hexagon());
        assert_eq!(fan.maximal_cones().len(), 6);
    }

    #[test]
    fn p2_wall_relation_is_all_ones() {
        let p = p2();
        let fan = face_fan(&p);
        let walls = compute_walls(&p, &fan).unwrap();
        assert_eq!(walls.len(), 3);
        // Wall at the shared ray e2 relates e1 + (-e1-e2) + e2 = 0.
        let wall = walls.iter().find(|w| w.shared() == [1]).unwrap();
        assert_eq!(wall.opposite(), (0, 2));
        for (_, b) in wall.coeffs() {
            assert_eq!(*b, BigInt::one());
        }
    }

    #[test]
    fn p1xp1_wall_has_zero_shared_coefficient() {
        let p = p1xp1();
        let fan = face_fan(&p);
        let walls = compute_walls(&p, &fan).unwrap();
        assert_eq!(walls.len(), 4);
        // Wall at e2 between the cones (e1,e2) and (e2,-e1).
        let wall = walls.iter().find(|w| w.shared() == [1]).unwrap();
        assert_eq!(wall.opposite(), (0, 2));
        let coeffs: Vec<(usize, BigInt)> = wall.coeffs().to_vec();
        assert_eq!(
            coeffs,
            vec![(0, BigInt::one()), (1, BigInt::zero()), (2, BigInt::one())]
        );
    }

    #[test]
    fn surface_counts_are_cyclic() {
        for p in [p2(), p1xp1(), hexagon()] {
            let n = p.vertex_count();
            let fan = face_fan(&p);
            let walls = compute_walls(&p, &fan).unwrap();
            assert_eq!(fan.maximal_cones().len(), n);
            assert_eq!(walls.len(), n);
        }
    }

    #[test]
    fn basis_is_lexicographically_smallest_cone() {
        let p = p2();
        let fan = face_fan(&p);
        assert_eq!(choose_basis_rays(&fan).rays(), &[0, 1]);

        let q = p1xp1();
        let fan = face_fan(&q);
        assert_eq!(choose_basis_rays(&fan).rays(), &[0, 1]);
    }

    #[test]
    fn basis_rays_form_lattice_basis() {
        for p in [p2(), p1xp1(), hexagon()] {
            let fan = face_fan(&p);
            let basis = choose_basis_rays(&fan);
            let det = p.vertex_matrix(basis.rays()).determinant().unwrap();
            assert!(det.abs().is_one());
        }
    }
}
