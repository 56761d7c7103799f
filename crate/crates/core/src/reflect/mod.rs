//! Iterated Schwarz reflection across the corner's boundary curves.

mod certify;
mod envelope;
mod extend;
mod state;

pub use certify::{certify_expansion, r_prime_limit, CertifyConfig, ExtensionCertificate};
pub use envelope::{envelope, envelope_from, log_plus, window_reach, Envelope};
pub use extend::{extend_eval, mirrored_corner, Extension};
pub use state::{Membership, ReflectionState, ReflectionSystem};

#[cfg(test)]
mod tests;
