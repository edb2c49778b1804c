//! Resolutions by representables, Ext, the box product, Tor and the internal
//! hom.

mod derived;
mod inthom;
mod oracle;
mod resolve;

pub use derived::{
    box_product, ext, ext_from, ext_with, frobenius_check, graded_box, graded_ext, graded_tor, induction_adjunction, tor,
    tor_from, tor_modules, tor_with, BoxComplex, ExtComplex, ExtTable, FrobeniusReport, GradedTable, TorTable,
};
pub use inthom::internal_hom;
pub use oracle::box_direct_oracle;
pub use resolve::{
    choose_generators, orbitwise_product, resolve, resolve_with, span_from_element, Certificate, GeneratorOrder,
    LevelCertificate, Resolution,
};
