//! The nef cone as a half-space system over Picard coordinates.
//!
//! On a complete toric variety a divisor is nef exactly when it pairs
//! nonnegatively with every invariant wall curve, so the cone is cut out
//! by the wall functionals. Face fans of Fano polytopes always carry the
//! ample anticanonical class, which forces the cone to be pointed.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fan::{Basis, Wall};
use crate::lattice::{dot, IntMat};
use crate::pic::wall_functional;
use crate::polytope::FanoPolytope;

/// Half-space description of the nef cone: one row per wall.
///
/// Rows are one per wall, duplicates included, so the positivity grading
/// and the pseudo-index read off the same wall list.
#[derive(Debug, Clone)]
pub struct NefCone {
    rows: IntMat,
    rho: usize,
}

impl NefCone {
    /// Assembles the cone from the wall functionals and asserts
    /// pointedness. A non-pointed system on validated input is a bug, so
    /// it aborts with an error rather than degrading.
    pub fn build(poly: &FanoPolytope, basis: &Basis, walls: &[Wall]) -> Result<Self> {
        let rho = poly.vertex_count() - poly.dim();
        let functional_rows: Vec<Vec<BigInt>> = walls
            .iter()
            .map(|w| wall_functional(poly, basis, w))
            .collect();
        let rows = IntMat::from_rows(functional_rows);
        let rank = rows.rank();
        if rank != rho {
            return Err(Error::NotPointed { rank, rho });
        }
        for r in 0..rows.rows() {
            if rows.row(r).iter().all(|e| e.is_zero()) {
                return Err(Error::Internal(
                    "zero wall functional in nef cone".to_string(),
                ));
            }
        }
        Ok(Self { rows, rho })
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    /// The wall functional matrix, one row per wall.
    pub fn wall_rows(&self) -> &IntMat {
        &self.rows
    }

    /// Membership test: nef iff every wall functional is nonnegative.
    pub fn is_nef(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.rho, "coordinate length mismatch");
        (0..self.rows.rows()).all(|r| dot(self.rows.row(r), x) >= BigInt::zero())
    }

    /// The positivity grading: the sum of all wall functional rows.
    ///
    /// Pointedness and integrality give `phi(x) >= 1` for every nonzero
    /// nef lattice class `x`, which bounds partition lengths and grades
    /// the partition search.
    pub fn positivity_grading(&self) -> Vec<BigInt> {
        let mut phi = vec![BigInt::zero(); self.rho];
        for r in 0..self.rows.rows() {
            for (acc, e) in phi.iter_mut().zip(self.rows.row(r)) {
                *acc += e;
            }
        }
        phi
    }

    /// Enumerates every lattice class `x` with both `x` and `t - x` nef.
    ///
    /// In cone-normalized coordinates every nef class has nonnegative
    /// entries (its canonical divisor representative is nonnegative by
    /// convexity of the support function), so the interval lies in the box
    /// `0 <= x_j <= t_j`. The box is scanned exhaustively and filtered
    /// through the wall inequalities; the cost is exponential in `rho` but
    /// exact and complete. Points come back in lexicographic order.
    ///
    /// The target must be nef; this is the caller's contract.
    pub fn enumerate_interval(&self, t: &[BigInt]) -> IntervalPoints {
        assert!(self.is_nef(t), "interval target must be nef");
        let mut points = Vec::new();
        let mut x = vec![BigInt::zero(); self.rho];
        loop {
            let complement: Vec<BigInt> = t.iter().zip(&x).map(|(a, b)| a - b).collect();
            if self.is_nef(&x) && self.is_nef(&complement) {
                points.push(x.clone());
            }
            // Odometer over the box, last coordinate fastest.
            let mut pos = self.rho;
            loop {
                if pos == 0 {
                    return IntervalPoints {
                        target: t.to_vec(),
                        points,
                    };
                }
                pos -= 1;
                if x[pos] < t[pos] {
                    x[pos] += 1;
                    break;
                }
                x[pos] = BigInt::zero();
            }
        }
    }
}

/// The lattice points of the order interval `[0, t]` in the nef cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPoints {
    target: Vec<BigInt>,
    points: Vec<Vec<BigInt>>,
}

impl IntervalPoints {
    pub fn target(&self) -> &[BigInt] {
        &self.target
    }

    /// All interval points in lexicographic order; contains 0 and `t`.
    pub fn points(&self) -> &[Vec<BigInt>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(x))
            .is_ok()
    }
}
