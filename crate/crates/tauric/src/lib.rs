//! Exact-arithmetic invariants of smooth toric Fano varieties.
//!
//! A smooth toric Fano variety is encoded by its Fano polytope: a lattice
//! polytope with the origin strictly interior, primitive vertices, and
//! unimodular simplicial facets. From the validated polytope this crate
//! derives the face fan, the wall relations, normalized Picard
//! coordinates, and the nef cone, and computes:
//!
//! - the Picard number `rho`,
//! - the Fano index (largest `r` with `-K = r H`),
//! - the pseudo-index (minimal anticanonical degree of an invariant curve),
//! - the total index `tau`: the maximal number of parts in a decomposition
//!   of `-K` into nonzero nef classes, with an explicit certificate,
//! - section counts of divisors via lattice point enumeration.
//!
//! On top of the invariants sit two Mukai-type checks: the inequality
//! `dim + rho - tau >= 0` whose equality case should single out products
//! of projective spaces, and the classical variant with `rho * index` in
//! place of `tau`. Everything is computed over arbitrary-precision
//! integers; no floating point is used anywhere.
//!
//! ```
//! use tauric::{build_report, FanoPolytope};
//! use tauric::lattice::ivec;
//!
//! let p2 = FanoPolytope::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])])?;
//! let report = build_report(&p2.with_name("P2"))?;
//! assert_eq!(report.rho, 1);
//! assert_eq!(report.fano_index, 3);
//! assert_eq!(report.tau, 3);
//! assert_eq!(report.total_defect, 0);
//! # Ok::<(), tauric::Error>(())
//! ```

pub mod error;
pub mod fan;
pub mod invariants;
pub mod lattice;
pub mod nef;
pub mod pic;
pub mod polytope;
pub mod sections;
pub mod tau;

pub use error::{Error, Result};
pub use fan::{choose_basis_rays, compute_walls, face_fan, Basis, Fan, Wall};
pub use invariants::{
    build_report, check_mukai, check_total_index_conjecture, derive, fano_index, format_class,
    is_product_of_projective_spaces, product_factors, pseudo_index, ConjectureVerdict, Derived,
    InvariantReport,
};
pub use nef::{IntervalPoints, NefCone};
pub use pic::{
    anticanonical, canonical_divisor, principal_divisor, to_pic, wall_functional, PicClass,
};
pub use polytope::{Facet, FanoPolytope};
pub use sections::count_sections;
pub use tau::{
    atoms, irreducible_atoms, total_index_bruteforce, total_index_bruteforce_with_budget,
    total_index_dp, total_index_dp_with_atoms, validate_certificate, PartitionCertificate,
};
