//! Exact-arithmetic engine for truncated formal power series and umbral
//! calculus, specialized to Barnes-type Daehee polynomials and the classical
//! families they connect to (Bernoulli, Cauchy, Frobenius-Euler, Stirling).
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate has four layers:
//!
//! - [`series`] / [`poly`]: the ring of truncated power series (composition,
//!   reversion, exp/log/pow) and dense polynomials in x.
//! - [`umbral`]: linear functionals, operator actions, Sheffer pairs and
//!   their sequences, connection constants, the transfer formula.
//! - [`families`]: named builders for each number/polynomial family, defined
//!   by generating function and exposed as numbers and as polynomials.
//! - [`identities`]: one executable checker per theorem relating the Daehee
//!   families to the classical ones, plus a deterministic suite runner.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.

pub mod cli;
pub mod error;
pub mod families;
pub mod identities;
pub mod output;
pub mod poly;
pub mod rat;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rat::Rat;
pub use series::Series;
