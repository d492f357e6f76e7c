//! Numerical shadows of limit linear series on elliptic chains: word types
//! and their rectangular tableaux, vanishing sequences at the points of
//! attachment, shifts of included series, exhaustive checks of the two
//! nearly-consecutive-sequence bounds, and the Eisenbud-Harris
//! compatibility test on vanishing tables.

mod claims;
mod compat;
mod tableau;
mod vanishing;

pub use claims::{
    verify_claim_a, verify_claim_b, ClaimKind, ClaimParams, ClaimReport, MAX_CLAIM_RANK,
};
pub use compat::{
    chan_ambient_table, chan_included_table, eh_compatible, eh_violations, ChainTable,
    ComponentOrders, NodeViolation, CHAN_AMBIENT_FILE, CHAN_INCLUDED_FILE,
};
pub use tableau::{enumerate_tableaux, tableau_to_word, word_to_tableau, RectTableau, WordType};
pub use vanishing::{shift, vanishing_sequences, NearConsecSeq, VanishingTable};
