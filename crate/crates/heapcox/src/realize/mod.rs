//! Concrete realizations of the ideal-lattice actions: order isomorphisms
//! with the integers, sign-string actions, the 27-line configuration, and
//! edge-labelled ideal lattices.

mod e6;
mod graph;
mod strings;
mod zeta;

pub use e6::{e6_generator_perms, e6_orbit_table, incidence, perm_cycles, LineLabel, E6_LABELS};
pub use graph::{hasse_graph, ideal_action_group_order, LabelledGraph};
pub use strings::{string_act, string_decode, string_encode, SignString, StringVariant};
pub use zeta::{ZRealization, ZetaKind};
