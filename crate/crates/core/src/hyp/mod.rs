//! Hyperbolic realization of the `J_4^{[2,3]}` Cayley complex.

pub mod cellular;
pub mod dirichlet;
pub mod geometry;
pub mod realize;
pub mod svg;

pub use cellular::{cellular_domain, CellularDomain};
pub use dirichlet::{dirichlet, poincare_check, DirichletDomain, SideKind};
pub use geometry::{edge_length, HIso, HPoint};
pub use realize::{realize, RealizedTess};
pub use svg::render_svg;
