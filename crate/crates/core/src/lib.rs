pub mod algebra;
pub mod bratteli;
pub mod chartable;
pub mod combinatorics;
pub mod diagram;
pub mod profile;
pub mod repr;
pub mod verify;
pub mod witness;

pub use algebra::{left_action_x, right_action_x, x_of, x_st_product, AlgebraElement, AlgebraError, XBasisElement};
pub use diagram::{cardinality, enumerate_planar, Diagram, DiagramError, Edge, ParseError};
pub use profile::{Profile, ProfileError};
pub use repr::IrrepLabel;
pub use witness::{VerifyError, Witness, DEFAULT_DIAGRAM_CAP};
