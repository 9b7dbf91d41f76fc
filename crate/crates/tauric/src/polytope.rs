//! Smooth Fano polytopes: validation, exact facet enumeration, vertex data.
//!
//! A vertex set passes validation when the convex hull is full-dimensional,
//! the origin is strictly interior, every listed point is a hull vertex,
//! every vertex is primitive, and every facet is spanned by exactly `d`
//! vertices forming a lattice basis. These are precisely the conditions
//! under which the face fan defines a smooth toric Fano variety.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, gcd_of_entries, IntMat};

/// A facet of the polytope: a primitive outer normal `w` with offset `c`
/// such that `<w, x> = c` on the facet and `<w, x> < c` on the rest of the
/// polytope, together with the indices of the vertices lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigInt,
    vertex_set: Vec<usize>,
}

impl Facet {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// Sorted indices of the vertices on this facet.
    pub fn vertex_set(&self) -> &[usize] {
        &self.vertex_set
    }
}

/// Validated vertex set of a smooth Fano lattice polytope.
///
/// Construction runs the full admissibility check; a value of this type is
/// the single source of truth for one variety and is frozen afterwards.
#[derive(Debug, Clone)]
pub struct FanoPolytope {
    dim: usize,
    vertices: Vec<Vec<BigInt>>,
    facets: Vec<Facet>,
    name: Option<String>,
}

impl FanoPolytope {
    /// Validates a vertex list as a smooth Fano polytope of dimension `dim`.
    pub fn new(dim: usize, vertices: Vec<Vec<BigInt>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::NotFullDimensional);
        }
        if vertices.is_empty() {
            return Err(Error::NoVertices);
        }
        for (index, v) in vertices.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::VertexLengthMismatch {
                    index,
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        for (i, v) in vertices.iter().enumerate() {
            if !gcd_of_entries(v).is_one() {
                return Err(Error::NonPrimitiveVertex(i));
            }
        }
        for i in 0..vertices.len() {
            for j in 0..i {
                if vertices[i] == vertices[j] {
                    // The repeated copy cannot be a distinct hull vertex.
                    return Err(Error::NonVertexPoint(i));
                }
            }
        }
        if affine_rank(&vertices) != dim {
            return Err(Error::NotFullDimensional);
        }

        let facets = enumerate_facets(dim, &vertices);
        for facet in &facets {
            if facet.offset <= BigInt::zero() {
                return Err(Error::OriginNotInterior);
            }
        }
        for i in 0..vertices.len() {
            let active: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.vertex_set.binary_search(&i).is_ok())
                .map(|f| f.normal.clone())
                .collect();
            let is_vertex = !active.is_empty() && IntMat::from_rows(active).rank() == dim;
            if !is_vertex {
                return Err(Error::NonVertexPoint(i));
            }
        }
        for facet in &facets {
            if facet.vertex_set.len() != dim {
                return Err(Error::NonSmoothFacet(facet.vertex_set.clone()));
            }
            let m = IntMat::from_rows(
                facet
                    .vertex_set
                    .iter()
                    .map(|&i| vertices[i].clone())
                    .collect(),
            );
            let det = m.determinant().expect("facet matrix is square");
            if !det.abs().is_one() {
                return Err(Error::NonSmoothFacet(facet.vertex_set.clone()));
            }
        }

        Ok(Self {
            dim,
            vertices,
            facets,
            name: None,
        })
    }

    /// Attaches a display name; used in reports.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices, equivalently the number of rays of the face fan.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[BigInt] {
        &self.vertices[i]
    }

    /// Facets sorted by vertex set; certified simplicial and unimodular.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Matrix whose rows are the vertices with the given indices.
    pub fn vertex_matrix(&self, indices: &[usize]) -> IntMat {
        IntMat::from_rows(indices.iter().map(|&i| self.vertices[i].clone()).collect())
    }
}

/// Rank of the affine span of the points.
fn affine_rank(points: &[Vec<BigInt>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    IntMat::from_rows(diffs).rank()
}

/// Enumerates all facets of the convex hull by brute force over
/// `d`-subsets: a subset spans a facet hyperplane when all other points
/// lie weakly on one side. Points on the hyperplane join the facet's
/// vertex set, so non-simplicial facets surface with more than `d`
/// vertices and are rejected later.
fn enumerate_facets(dim: usize, vertices: &[Vec<BigInt>]) -> Vec<Facet> {
    let n = vertices.len();
    let mut facets: Vec<Facet> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        if let Some((mut normal, _)) = hyperplane_through(dim, vertices, &subset) {
            let values: Vec<BigInt> = vertices.iter().map(|v| dot(&normal, v)).collect();
            let c = values[subset[0]].clone();
            let above = values.iter().any(|v| *v > c);
            let below = values.iter().any(|v| *v < c);
            let mut offset = c;
            if !(above && below) {
                if above {
                    // Flip so the polytope sits on the <= side.
                    for e in normal.iter_mut() {
                        *e = -&*e;
                    }
                    offset = -offset;
                }
                let vertex_set: Vec<usize> = (0..n)
                    .filter(|&i| {
                        let v = dot(&normal, &vertices[i]);
                        v == offset
                    })
                    .collect();
                if seen.insert(vertex_set.clone()) {
                    facets.push(Facet {
                        normal,
                        offset,
                        vertex_set,
                    });
                }
            }
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    facets.sort_by(|a, b| a.vertex_set.cmp(&b.vertex_set));
    facets
}

/// Primitive integer normal of the affine hyperplane through the given
/// points, or `None` when the points are affinely dependent. The normal is
/// the vector of signed maximal minors of the difference matrix.
fn hyperplane_through(
    dim: usize,
    vertices: &[Vec<BigInt>],
    subset: &[usize],
) -> Option<(Vec<BigInt>, BigInt)> {
    let base = &vertices[subset[0]];
    let diffs: Vec<Vec<BigInt>> = subset[1..]
        .iter()
        .map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal = Vec::with_capacity(dim);
    let mut sign = BigInt::one();
    for j in 0..dim {
        let minor: Vec<Vec<BigInt>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let det = if minor.is_empty() {
            BigInt::one()
        } else {
            IntMat::from_rows(minor)
                .determinant()
                .expect("minor is square")
        };
        normal.push(&sign * det);
        sign = -sign;
    }
    if normal.iter().all(|e| e.is_zero()) {
        return None;
    }
    let g = gcd_of_entries(&normal);
    if g > BigInt::one() {
        for e in normal.iter_mut() {
            *e = &*e / &g;
        }
    }
    let offset = dot(&normal, base);
    Some((normal, offset))
}

/// Advances a sorted index subset to the next combination; returns false
/// after the last one.
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

    fn poly(dim: usize, verts: &[&[i64]]) -> Result<FanoPolytope> {
        FanoPolytope::new(dim, verts.iter().map(|v| ivec(v)).collect())
    }

    #[test]
    fn accepts_projective_plane() {
        let p = poly(2, &[&[1, 0], &[0, 1], &[-1, -1]]).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.facets().len(), 3);
    }

    #[test]
    fn rejects_singular_square() {
        let err = poly(2, &[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]).unwrap_err();
        assert!(matches!(err, Error::NonSmoothFacet(_)), "got {err:?}");
    }

    #[test]
    fn rejects_origin_on_boundary_or_outside() {
        let err = poly(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap_err();
        assert_eq!(err, Error::OriginNotInterior);
    }

    #[test]
    fn rejects_non_primitive_vertex() {
        let err = poly(2, &[&[2, 0], &[0, 1], &[-1, -1]]).unwrap_err();
        assert_eq!(err, Error::NonPrimitiveVertex(0));
    }

    #[test]
    fn rejects_point_interior_to_a_facet() {
        // (1,0) sits in the middle of the edge from (1,1) to (1,-1).
        let err = poly(2, &[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1], &[1, 0]]).unwrap_err();
        assert_eq!(err, Error::NonVertexPoint(4));
    }

    #[test]
    fn rejects_low_dimensional_input() {
        let err = poly(2, &[&[1, 0], &[-1, 0]]).unwrap_err();
        assert_eq!(err, Error::NotFullDimensional);
    }

    #[test]
    fn rejects_duplicate_vertex() {
        let err = poly(2, &[&[1, 0], &[0, 1], &[-1, -1], &[1, 0]]).unwrap_err();
        assert_eq!(err, Error::NonVertexPoint(3));
    }

    #[test]
    fn accepts_segment_in_dimension_one() {
        let p = poly(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(p.facets().len(), 2);
    }

    #[test]
    fn accepts_hexagon() {
        let p = poly(
            2,
            &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]],
        )
        .unwrap();
        assert_eq!(p.facets().len(), 6);
        for f in p.facets() {
            assert_eq!(f.vertex_set().len(), 2);
        }
    }

    #[test]
    fn accepts_projective_three_space() {
        let p = poly(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]).unwrap();
        assert_eq!(p.facets().len(), 4);
    }

    #[test]
    fn facet_normals_are_outer_and_primitive() {
        let p = poly(2, &[&[1, 0], &[0, 1], &[-1, -1]]).unwrap();
        for f in p.facets() {
            assert!(*f.offset() > BigInt::zero());
            assert!(gcd_of_entries(f.normal()).is_one());
            for v in p.vertices() {
                assert!(dot(f.normal(), v) <= *f.offset());
            }
        }
    }
}
