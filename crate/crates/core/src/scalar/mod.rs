//! Exact scalars: Laurent polynomials and rational functions in q over the
//! rationals, quantum integers, and the coefficient abstraction shared by
//! symbolic and evaluated-q computations.
//!
//! Evaluation at a rational q0 only guards against zeros of the
//! denominator. Choosing a generic q0 (not a root of unity) is the
//! caller's job.

mod coefficient;
mod intpoly;
mod laurent;
mod ratfunc;

pub use coefficient::{Coefficient, Ring};
pub use intpoly::IntLaurent;
pub use laurent::LaurentPoly;
pub use ratfunc::{delta, markov_weight, quantum_int, FieldOp, RatFunc};
