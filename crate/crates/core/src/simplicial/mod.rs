//! Simplicial sets and groups at desk scale: sphere cells, the free
//! simplicial groups they generate, the braid-valued simplicial group,
//! Moore chain and cycle membership, and the maps between them.

mod alpha;
mod cell;
mod moore;
mod spec;

pub use alpha::{
    brunnian_seed, cabled_images, cabled_images_geometric, circle_power, doubled_top_cycle,
    power_map, quasi_brunnian_chain, theta_basis, theta_map, theta_word, MilnorElement,
    SimplicialError,
};
pub use cell::{covers_tail, sphere_cells, truncated_simplex_cells, SphereCell};
pub use moore::{moore_membership, MooreClass};
pub use spec::{
    check_simplicial_identities, EqualityOracle, IdentityReport, SimplicialGroupSpec, SpecDump,
    SpecDumpDimension,
};
