//! Constructors for the Taft algebras, their modules, tensor products and
//! Auslander algebras, plus the bridge between the two descriptions of the
//! latter.

mod auslander;
mod hopf;
mod presented;
mod reconcile;
mod taft;

pub use auslander::{auslander_of, AuslanderLabeling};
pub use hopf::{extend_scalars, tensor_module, HopfData};
pub use presented::{auslander_quiver_presentation, parse_vertex_label, presented_auslander_taft, vertex_label};
pub use reconcile::{find_vertex_isomorphism, reconcile, ReconcileItem, ReconcileReport};
pub use taft::{indec_module, taft, taft_algebra, uniserial_length};
