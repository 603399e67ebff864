//! Exact computations with finite subgroups of `PGL(2, F_p)`: closures,
//! recognition, orbit and block actions, the two-subgroup criterion for
//! plane curves with two outer Galois points, pair search, and explicit
//! quotient-curve witnesses.

pub mod criterion;
pub mod curve;
pub mod error;
pub mod exec;
pub mod field;
pub mod group;
pub mod paper;
pub mod poly;
pub mod projective;
pub mod search;

pub use curve::{emit_parametrization, implicit_degree, CurveJson, CurveParametrization, Polynomial, RationalFunction};
pub use criterion::{check_pair, check_pair_all_basepoints, CertificateJson, PairCertificate, Verdict};
pub use error::{Error, Result};
pub use exec::Jobs;
pub use field::{PrimeFieldElement, PrimeModulus};
pub use group::{GroupKind, Partition, Subgroup, DEFAULT_CLOSURE_CAP};
pub use projective::{enumerate_points, MatrixLiteral, ProjectiveMatrix, ProjectivePoint};
pub use paper::{load_case, verify_section, PaperCase, Report, ReportItem};
pub use search::{find_cyclic_regular, find_scaling_conjugates, random_pair_search, search, SearchConfig, Strategy};
