//! Walsh index series: cycle index series refined by the cycle structure
//! of edges, their composition by 2-pole network substitution, and the
//! unlabelled enumeration of K3,3-free toroidal and projective-planar graphs.

pub mod compose;
pub mod cores;
pub mod enumerate;
pub mod error;
pub mod matching;
pub mod oracle;
pub mod reference;
pub mod series;
pub mod verify;

pub use compose::{BivariateSeries, NetworkSeriesPair};
pub use error::{Error, Result};
pub use oracle::Sign;
pub use series::{IndexSeries, Monomial, Rational, VarRef};
