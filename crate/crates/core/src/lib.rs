//! Exact symmetric-function computations over the coefficient field Q(q,t).
//!
//! The crate is organised bottom-up:
//!
//! * [`qfield`]: bivariate rational functions and q-series primitives.
//! * [`partition`]: integer partitions and their cell statistics.
//! * [`symfunc`]: symmetric functions stored in the Schur basis.
//! * [`hall_littlewood`]: Kostka-Foulkes polynomials, Hall-Littlewood and
//!   modified Macdonald polynomials.
//! * [`delta_ops`]: Delta operators and the hook/general expansion families.
//! * [`parking`]: Dyck paths, parking functions and the combinatorial side of
//!   the Delta conjecture.
//! * [`verify`]: the identity registry and report layer used by the CLI.

mod cache;
pub mod delta_ops;
pub mod error;
pub mod hall_littlewood;
pub mod parking;
pub mod partition;
pub mod qfield;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use qfield::CoefQT;
pub use symfunc::{Basis, SymFunc};
