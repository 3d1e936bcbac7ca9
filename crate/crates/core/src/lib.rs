//! Exact-arithmetic kernel for chain-level cyclic homology of
//! deformation-quantized function algebras.
//!
//! Everything is computed over the ground ring `Q[s,t][h]/(h^{Nh+1}) ((u))`
//! (truncated `u`-Laurent window), so all algebraic identities hold as exact
//! rational equalities:
//!
//! * [`scalar`] — rationals, Bernoulli numbers, the truncated coefficient ring;
//! * [`jet`] — polynomial / torus-Laurent function algebras, multivector
//!   fields, differential forms and the Cartan calculus;
//! * [`hochschild`] — normalized Hochschild cochains/chains and the operator
//!   calculus `b`, `L`, `B`, `I`, `H`, `Ihat`, `D`;
//! * [`star`] — constant-coefficient Moyal-type star-product families;
//! * [`gauss_manin`] — exact chain-level parallel transport;
//! * [`graphs`] — Shoikhet graphs, the `D_Gamma` evaluator, Monte-Carlo
//!   weights and closed-form wheel weights;
//! * [`charmap`] — the A-roof genus, HKR/Connes maps, and the torus index
//!   pipeline;
//! * [`verify`] — seeded identity suites shared by tests and the CLI.

pub mod charmap;
pub mod gauss_manin;
pub mod graphs;
pub mod hochschild;
pub mod jet;
pub mod scalar;
pub mod star;
pub mod verify;

pub use scalar::{Rat, Scalar, Window};
