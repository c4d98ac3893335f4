//! Exact arithmetic engine for the (mock) Eisenstein series of weight
//! `k ∈ {1/2, 1, 3/2, 2}` and `k ≥ 5/2` attached to the dual Weil
//! representation of an even lattice.
//!
//! Everything here is `no_std` + `alloc`: file formats, the command line and
//! parallel drivers live in the `weilzeta` companion crate.
//!
//! Module map:
//!
//! - [`exactnum`]: rationals, rational polynomials/functions and the closed-form
//!   monomials `r·π^a·√m·ζ₈^c` that carry transcendental factors.
//! - [`characters`]: Kronecker characters, generalized Bernoulli numbers and
//!   special values of Dirichlet L-functions.
//! - [`lattice`]: Gram matrices, signature, Smith normal form and the
//!   discriminant form.
//! - [`weilrep`]: exact matrices of the Weil representation on words in `S`, `T`.
//! - [`localzeta`]: zero counts of `q(v-γ)+n` modulo prime powers and their
//!   rational generating functions.
//! - [`eisenstein`]: holomorphic coefficients `c(n,γ)`.
//! - [`corrections`]: weight 1 / 2 constants, the weight 3/2 shadow and the
//!   weight 1/2 closed forms in dimension one.
//! - [`oracles`]: theta series, Hurwitz class numbers and divisor sums.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod characters;
pub mod corrections;
pub mod eisenstein;
mod error;
pub mod exactnum;
pub mod lattice;
pub mod localzeta;
pub mod oracles;
pub mod series;
pub mod weilrep;

pub use error::{Error, Result};
pub use exactnum::{MonomialReal, Rat, RatFunc, RatPoly};
pub use lattice::{DiscriminantForm, GramLattice};
pub use series::{VVQSeries, Weight};
