//! Exact homological invariants of squarefree and t-spread monomial ideals.
//!
//! Ideals live in `K[x_1, ..., x_n]` with `n <= 64` and are handled
//! combinatorially: a squarefree monomial is its support set. The crate
//! computes
//!
//! - generator-level invariants and bounds: support index, bcos, cosize,
//!   the Taylor bounds `pd(I) <= min(s, n)` and `reg(I) <= cosize(I) + 1`,
//!   complete-intersection invariants and the t-spread regularity bounds
//!   ([`ideals`]);
//! - Taylor and Koszul degree data and exact graded Betti numbers over `Q`
//!   through Hochster's formula ([`resolutions`]);
//! - Pascal ideals, their f_t-vectors, Hilbert series and t-lex companions
//!   ([`tspread`]);
//! - edge ideals and induced matchings ([`graphs`]).
//!
//! Everything is exact integer arithmetic; there is no floating point.
//!
//! ```
//! use tspread::{io::parse_ideal, ideals::support_index, resolutions::{betti_table, Subject}};
//!
//! let ideal = parse_ideal("x2*x4, x1*x5*x7, x3*x7*x9*x11", None).unwrap();
//! assert_eq!(support_index(&ideal).unwrap(), 2);
//! let table = betti_table(&ideal).unwrap().convert(Subject::Ideal);
//! assert_eq!((table.pd(), table.reg()), (2, 6));
//! ```

pub mod error;
pub mod graphs;
pub mod ideals;
pub mod io;
pub mod monomials;
pub mod report;
pub mod resolutions;
pub mod sample;
pub mod tspread;

pub use error::{Error, Result};
pub use ideals::MonomialIdeal;
pub use monomials::SquarefreeMonomial;
