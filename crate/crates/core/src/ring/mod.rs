//! The ring `Diff_h(n, N)`: normal forms, products and the structures
//! built directly on top of them.

mod element;
mod gen;
pub mod lemmas;
pub mod relations;
pub mod rmatrix;
mod rules;
pub mod special;

pub use element::Element;
pub use gen::{fmt_gen, Gen, GenKind, NormalMonomial, RingCtx};
pub use rules::clear_cache;
pub use relations::{defining_relations, Factor, FreeExpr, Relation};
pub use special::{central_c, gamma, special_element, Special};
