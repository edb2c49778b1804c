//! Mackey functors and modules over the representation Green functor of a
//! finite group, their homological algebra, and the second pages of the
//! equivariant universal-coefficient and Kunneth spectral sequences.

pub mod acceptance;
pub mod bouc;
pub mod chars;
pub mod corpus;
pub mod group;
pub mod functor;
pub mod green;
pub mod homalg;
pub mod mackey;
pub mod spectral;
