//! Decision procedures built on the apolarity and homological layers.
pub mod enumerate;
pub mod monomial;
pub mod omega;
pub mod report;
pub mod slip;
pub mod ternary;
pub mod vsp;
pub mod wild;

pub use enumerate::{enumerate_monomial_apolar_ideals, EnumerationConfig};
pub use monomial::{monomial_border_rank, monomial_vps_report};
pub use omega::generic_omega_rank;
pub use report::{Certificate, Shape, VspBarReport};
pub use slip::slip_ext_filter;
pub use vsp::{ci_vspbar, cw_cubic_vspbar, plateau_identifiability, sylvester_binary, ternary_cubic_vspbar};
pub use wild::{tensor_wildness, WildnessReport};
