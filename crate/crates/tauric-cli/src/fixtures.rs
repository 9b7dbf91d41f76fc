//! Built-in polytopes: projective spaces, their products, and the five
//! smooth toric Fano surfaces.
//!
//! The vertex data is hardcoded rather than generated: the fixtures
//! double as ground truth for the validator itself.

use crate::formats::ParseError;
use crate::record::PolytopeRecord;

/// Fixture ids listed by `tauric fixtures`. Any product id of the form
/// `P<a>xP<b>x...` is accepted as well.
pub fn fixture_ids() -> Vec<&'static str> {
    vec![
        "P1",
        "P2",
        "P3",
        "P4",
        "P1xP1",
        "P1xP2",
        "P2xP2",
        "P1xP1xP1",
        "P1xP1xP2",
        "P1xP1xP1xP1",
        "dP6",
        "dP7",
        "dP8",
    ]
}

/// Resolves a fixture id to its exact vertex data.
pub fn builtin_fixture(id: &str) -> Result<PolytopeRecord, ParseError> {
    let vertices: Option<Vec<Vec<i64>>> = match id {
        // One-point blow-up of P2 (degree 8 del Pezzo).
        "dP8" => Some(vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]]),
        // Two-point blow-up of P2 (degree 7).
        "dP7" => Some(vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, -1],
            vec![1, 1],
            vec![-1, 0],
        ]),
        // Three-point blow-up of P2 (degree 6): the hexagon.
        "dP6" => Some(vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, 0],
            vec![0, -1],
            vec![1, 1],
            vec![-1, -1],
        ]),
        _ => parse_product_id(id).map(product_vertices),
    };
    let vertices = vertices.ok_or_else(|| ParseError::UnknownFixture { id: id.to_string() })?;
    let dim = vertices[0].len();
    Ok(PolytopeRecord {
        name: id.to_string(),
        dim,
        vertices,
        source: format!("fixture:{id}"),
    })
}

/// Parses `P<d1>xP<d2>x...` into factor dimensions.
fn parse_product_id(id: &str) -> Option<Vec<usize>> {
    let mut dims = Vec::new();
    for part in id.split('x') {
        let d: usize = part.strip_prefix('P')?.parse().ok()?;
        if d == 0 {
            return None;
        }
        dims.push(d);
    }
    if dims.is_empty() {
        return None;
    }
    Some(dims)
}

/// Direct-sum construction: each factor's vertices embedded in its own
/// coordinate block.
fn product_vertices(dims: Vec<usize>) -> Vec<Vec<i64>> {
    let total: usize = dims.iter().sum();
    let mut vertices = Vec::new();
    let mut offset = 0;
    for &d in &dims {
        for v in projective_space_vertices(d) {
            let mut w = vec![0i64; total];
            w[offset..offset + d].copy_from_slice(&v);
            vertices.push(w);
        }
        offset += d;
    }
    vertices
}

/// The standard simplex polytope of `P^d`: the unit vectors plus the
/// all-minus-ones vector.
fn projective_space_vertices(d: usize) -> Vec<Vec<i64>> {
    let mut verts: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            let mut e = vec![0i64; d];
            e[i] = 1;
            e
        })
        .collect();
    verts.push(vec![-1; d]);
    verts
}

/// The five smooth toric Fano surfaces in a fixed order.
pub fn surface_fixtures() -> Vec<PolytopeRecord> {
    ["P2", "P1xP1", "dP8", "dP7", "dP6"]
        .iter()
        .map(|id| builtin_fixture(id).expect("surface fixture"))
        .collect()
}
