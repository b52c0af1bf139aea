//! `U_q(sl2)` over ℚ(q) in PBW form, the quantum plane, and the smash
//! product of their Yau twists.
//!
//! The smash product is evaluated straight from its definition
//! ([`smash::smash_multiply`]) and compared with closed forms
//! ([`smash::closed_form`]). Coefficients are exact in ℚ(q); the twist
//! parameters are nonzero constants.

pub mod error;
pub mod pbw;
pub mod qplane;
pub mod smash;
pub mod twist;
pub mod verify;

pub use error::{QuantumError, Result};
pub use pbw::{uq_multiply, uq_normalize, Gen, PBWElement, Pbw};
pub use qplane::{qplane_action, QPElement, DEFAULT_BOUND};
pub use smash::{smash_multiply, verify_smash_formulas, SmashElement};
pub use twist::{uq_twist_endomorphism, TwistParams};
