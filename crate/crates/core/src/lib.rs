//! Symbols, fake degrees, truncated induction and the Springer correspondence
//! for the imprimitive complex reflection groups G(de,e,n).

pub mod combinatorics;
pub mod cyclotomic;
pub mod error;
pub mod induction;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod springer;
pub mod symbols;

pub use combinatorics::{enumerate_multipartitions, GroupSpec, Multipartition, MultipartitionOrbit, Partition};
pub use cyclotomic::CycNum;
pub use error::{Error, Result};
pub use invariants::{Family, IrrepLabel};
pub use poly::LaurentPoly;
pub use springer::{DihedralIrrep, LatticeKind, PseudoparabolicShape, Reflection};
pub use symbols::{Presymbol, Symbol, SymbolType, Weight};
