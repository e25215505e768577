//! Shared fixtures for the criterion benches.

use diamondlab_core::{add_dominating_vertex, paley, Tournament};

/// The order-20 skew-conference extension of paley(19).
pub fn star19() -> Tournament {
    add_dominating_vertex(&paley(19).unwrap()).unwrap()
}
