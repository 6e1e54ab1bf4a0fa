//! Preprojective roots of Coxeter groups, computed through admissible words
//! on acyclic orientations of the Coxeter graph.
//!
//! Vertices are 0-based in the API and 1-based in everything printed. Words
//! are stored as written, leftmost letter first, and act right to left: the
//! rightmost letter is applied first.
//!
//! | module | contents |
//! |---|---|
//! | [`coxgraph`] | Coxeter matrices and graphs, orientations, orders, the preset catalog |
//! | [`tracemon`] | words modulo commutation: normal forms, divisibility, quotients |
//! | [`admissible`] | sink-admissible words, their lattice, principal words `W_{r,x}` |
//! | [`rootsys`] | the reflection representation, roots, group elements |
//! | [`preproj`] | Coxeter elements, projective and preprojective roots, `W_α`, `W_Ψ` |
//! | [`weakorder`] | lengths, reduced words, the left weak order |
//! | [`cli`] | the `preproj` command-line front end and its system-file format |
//!
//! Each capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example trace_monoid
//! cargo run --example admissible_lattice
//! cargo run --example principal_words
//! cargo run --example projective_roots
//! cargo run --example preprojective_enumeration
//! cargo run --example finiteness
//! cargo run --example reduced_words
//! cargo run --example infinite_dihedral
//! ```
//!
//! A short tour:
//!
//! ```
//! use preprojective::{preset, CoxeterContext, RootVec};
//!
//! let ctx = CoxeterContext::standard(preset("A", &["2"]).unwrap()).unwrap();
//! let alpha = RootVec::new(vec![0.0, 1.0]);
//! let rec = ctx.w_alpha(&alpha, 10).unwrap();
//! assert_eq!(rec.size, 2);
//! assert_eq!(rec.principal.word().to_string(), "1 2 1");
//! ```

pub mod admissible;
pub mod cli;
pub mod coxgraph;
pub mod preproj;
pub mod rootsys;
pub mod tracemon;
pub mod weakorder;

pub use admissible::{AdmissibleWord, PrincipalWord};
pub use coxgraph::{preset, CoxeterGraph, CoxeterMatrix, Orientation, Preset, Vertex, VertexOrder, VertexSet};
pub use preproj::{CoxeterContext, Finiteness, PreprojError, PreprojectiveRecord, PsiSet};
pub use rootsys::{GroupElement, RootSystem, RootVec};
pub use tracemon::TraceWord;
