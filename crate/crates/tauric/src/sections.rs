//! Global sections of divisors, counted as lattice points.
//!
//! The sections of `sum a_i D_i` correspond to the lattice points of the
//! polytope `{ u : <u, v_i> >= -a_i }`. Completeness of the fan makes the
//! polytope bounded, so its lattice points can be enumerated exactly: the
//! vertices are basic feasible solutions of the inequality system, their
//! bounding box is scanned, and the box points are filtered through the
//! inequalities. The same box-and-filter approach backs the nef interval
//! enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::lattice::dot;
use crate::polytope::FanoPolytope;

/// Number of lattice points `u` with `<u, v_i> >= -a_i` for all rays.
pub fn count_sections(poly: &FanoPolytope, a: &[BigInt]) -> usize {
    assert_eq!(a.len(), poly.vertex_count(), "divisor length mismatch");
    let d = poly.dim();
    let n = poly.vertex_count();

    // Basic solutions: intersect every d linearly independent constraint
    // hyperplanes <u, v_i> = -a_i and keep the feasible ones. A bounded
    // nonempty polytope has at least one vertex among these.
    let mut feasible: Vec<Vec<BigRational>> = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if let Some(u) = solve_subset(poly, a, &subset) {
            if is_feasible(poly, a, &u) {
                feasible.push(u);
            }
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    if feasible.is_empty() {
        return 0;
    }

    let mut lo = Vec::with_capacity(d);
    let mut hi = Vec::with_capacity(d);
    for j in 0..d {
        let min = feasible.iter().map(|u| &u[j]).min().unwrap();
        let max = feasible.iter().map(|u| &u[j]).max().unwrap();
        lo.push(min.ceil().to_integer());
        hi.push(max.floor().to_integer());
    }
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return 0;
    }

    let mut count = 0;
    let mut u = lo.clone();
    loop {
        let inside = poly
            .vertices()
            .iter()
            .zip(a)
            .all(|(v, ai)| dot(v, &u) + ai >= BigInt::zero());
        if inside {
            count += 1;
        }
        let mut pos = d;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            if u[pos] < hi[pos] {
                u[pos] += 1;
                break;
            }
            u[pos] = lo[pos].clone();
        }
    }
}

/// Solves `<u, v_i> = -a_i` for the rays in `subset` by Cramer's rule;
/// `None` when the rays are linearly dependent.
fn solve_subset(poly: &FanoPolytope, a: &[BigInt], subset: &[usize]) -> Option<Vec<BigRational>> {
    let m = poly.vertex_matrix(subset);
    let det = m.determinant().expect("subset matrix is square");
    if det.is_zero() {
        return None;
    }
    let rhs: Vec<BigInt> = subset.iter().map(|&i| -&a[i]).collect();
    let d = subset.len();
    let mut u = Vec::with_capacity(d);
    for j in 0..d {
        let mut rows = m.row_vecs();
        for (r, row) in rows.iter_mut().enumerate() {
            row[j] = rhs[r].clone();
        }
        let dj = crate::lattice::IntMat::from_rows(rows)
            .determinant()
            .expect("square");
        u.push(BigRational::new(dj, det.clone()));
    }
    Some(u)
}

fn is_feasible(poly: &FanoPolytope, a: &[BigInt], u: &[BigRational]) -> bool {
    poly.vertices().iter().zip(a).all(|(v, ai)| {
        let value: BigRational = v
            .iter()
            .zip(u)
            .map(|(vc, uc)| BigRational::from(vc.clone()) * uc)
            .sum();
        value + BigRational::from(ai.clone()) >= BigRational::zero()
    })
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    fn p2() -> FanoPolytope {
        FanoPolytope::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])]).unwrap()
    }

    #[test]
    fn trivial_bundle_has_one_section() {
        assert_eq!(count_sections(&p2(), &ivec(&[0, 0, 0])), 1);
    }

    #[test]
    fn anticanonical_of_p2_has_ten_sections() {
        // Lattice points of the 3-fold dilated standard simplex.
        assert_eq!(count_sections(&p2(), &ivec(&[1, 1, 1])), 10);
    }

    #[test]
    fn one_line_on_p2_has_three_sections() {
        assert_eq!(count_sections(&p2(), &ivec(&[1, 0, 0])), 3);
    }

    #[test]
    fn negative_line_has_no_sections() {
        assert_eq!(count_sections(&p2(), &ivec(&[-1, 0, 0])), 0);
    }

    #[test]
    fn count_is_invariant_under_principal_shifts() {
        let p = p2();
        let a = ivec(&[1, 1, 1]);
        for u in [ivec(&[1, 0]), ivec(&[-2, 3])] {
            let shifted: Vec<BigInt> = a
                .iter()
                .zip(crate::pic::principal_divisor(&p, &u))
                .map(|(ai, pi)| ai + pi)
                .collect();
            assert_eq!(count_sections(&p, &shifted), 10);
        }
    }

    #[test]
    fn segment_sections() {
        let p = FanoPolytope::new(1, vec![ivec(&[1]), ivec(&[-1])]).unwrap();
        // a = (1,1): points with -1 <= u <= 1.
        assert_eq!(count_sections(&p, &ivec(&[1, 1])), 3);
    }
}
