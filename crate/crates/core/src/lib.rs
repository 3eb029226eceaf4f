//! Indecomposable module categories over twisted Drinfeld doubles `D^ω(G)`
//! of small finite groups.
//!
//! Such categories correspond to conjugacy classes of pairs `(H, ψ)` with
//! `H ⊂ G × G` and `dψ = ω̃|_H`, where `ω̃ = p₁*ω − p₂*ω`. Everything here is
//! exact: ℂ*-valued cochains are encoded in `Z/M` for a modulus `M` with
//! enough headroom, and linear algebra is Smith normal form over `Z/M`.
//!
//! Entry points: [`session::Session`] for one group, [`modcat`] for ranks
//! and classification, [`cohomology`] for `Hⁿ(G, ℂ*)`.

pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod group;
pub mod labels;
pub mod linalg;
pub mod modcat;
pub mod oracle;
pub mod orbit;
pub mod report;
pub mod session;
pub mod solver;
pub mod subgroup;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
