//! Divisor classes in normalized Picard coordinates.
//!
//! The divisor class group of a smooth complete toric variety is free of
//! rank `rho = n - d`. Fixing a unimodular cone and subtracting the unique
//! principal divisor matching a divisor on that cone's rays yields a
//! canonical representative which vanishes on the basis rays; its values
//! on the remaining rays are the Picard coordinates. Numerical and linear
//! equivalence coincide here, so the zero class is exactly the numerically
//! trivial one.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::fan::{Basis, Wall};
use crate::lattice::dot;
use crate::polytope::FanoPolytope;

/// A divisor class in normalized Picard coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PicClass {
    coords: Vec<BigInt>,
    basis_rays: Vec<usize>,
}

impl PicClass {
    /// Coordinates of length `rho`, indexed by the non-basis rays in
    /// increasing order.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// The rays zeroed out by normalization.
    pub fn basis_rays(&self) -> &[usize] {
        &self.basis_rays
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// The anticanonical divisor `-K = sum D_i`: the all-ones vector.
pub fn anticanonical(poly: &FanoPolytope) -> Vec<BigInt> {
    vec![BigInt::from(1); poly.vertex_count()]
}

/// The principal divisor of a dual vector `u`: `(<u, v_i>)_i`.
pub fn principal_divisor(poly: &FanoPolytope, u: &[BigInt]) -> Vec<BigInt> {
    poly.vertices().iter().map(|v| dot(u, v)).collect()
}

/// Normalizes a divisor `sum a_i D_i` to its Picard coordinates.
///
/// Solves for the dual vector `u` with `<u, v_i> = a_i` on the basis rays
/// and subtracts the resulting principal divisor; the remainder vanishes
/// on the basis rays and its non-basis entries are the coordinates. The
/// map is linear in `a` and its kernel is exactly the principal divisors.
pub fn to_pic(poly: &FanoPolytope, basis: &Basis, a: &[BigInt]) -> Result<PicClass> {
    assert_eq!(a.len(), poly.vertex_count(), "divisor length mismatch");
    let m = poly.vertex_matrix(basis.rays());
    let rhs: Vec<BigInt> = basis.rays().iter().map(|&i| a[i].clone()).collect();
    let u = m.solve_unimodular(&rhs)?;
    let coords = basis
        .complement(poly.vertex_count())
        .into_iter()
        .map(|j| &a[j] - dot(&u, poly.vertex(j)))
        .collect();
    Ok(PicClass {
        coords,
        basis_rays: basis.rays().to_vec(),
    })
}

/// The canonical divisor representative of a class: zero on the basis
/// rays, the coordinates on the remaining rays.
pub fn canonical_divisor(poly: &FanoPolytope, basis: &Basis, coords: &[BigInt]) -> Vec<BigInt> {
    let n = poly.vertex_count();
    let complement = basis.complement(n);
    assert_eq!(coords.len(), complement.len(), "coordinate length mismatch");
    let mut a = vec![BigInt::zero(); n];
    for (j, c) in complement.into_iter().zip(coords) {
        a[j] = c.clone();
    }
    a
}

/// The wall's intersection functional expressed on Picard coordinates.
///
/// Evaluates the relation pairing on the unit class of each non-basis
/// ray; this is well defined because the pairing kills every principal
/// divisor.
pub fn wall_functional(poly: &FanoPolytope, basis: &Basis, wall: &Wall) -> Vec<BigInt> {
    let n = poly.vertex_count();
    basis
        .complement(n)
        .into_iter()
        .map(|j| {
            let mut unit = vec![BigInt::zero(); n];
            unit[j] = BigInt::from(1);
            wall.pairing(&unit)
        })
        .collect()
}
