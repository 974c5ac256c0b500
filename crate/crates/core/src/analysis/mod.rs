//! Finite-window searches with certificates: Garden-of-Eden patterns,
//! mutually erasable pairs, entropy traces and the combined audit.
//!
//! Every search enumerates a finite set of assignments and refuses to start
//! when that set is larger than [`Enumeration::budget`].

mod audit;
mod certificate;
mod entropy;
mod enumerate;
mod erasable;
mod image;

pub use audit::{myhill_audit, AuditVerdict, Consistency, ImageRecord, PreInjectiveUpTo, SurjectiveUpTo};
pub use certificate::Certificate;
pub use entropy::{
    entropy_deficit_bound, estimate_entropy, tile_loss, window_count_bound, EntropySource, EntropyStep,
    EntropyTrace, Truncation,
};
pub use enumerate::{Enumeration, DEFAULT_BUDGET};
pub use erasable::{find_mutually_erasable, ErasablePair};
pub use image::{find_goe_pattern, window_image, GoeCertificate, WindowImage};
