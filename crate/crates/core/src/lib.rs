//! Exact computation of neighborly (Scarf) complexes of finite point sets.
//!
//! Every predicate runs on exact rationals extended by `-inf` / `+inf`. The
//! crate covers:
//!
//! * the coordinate-wise order, joins and bonnet faces ([`point`]);
//! * genericity and the complex `Nb(A)` of neighborly subsets ([`neighborly`]);
//! * barycentric subdivision and its realization on the staircase
//!   hypersurface ([`subdivision`], [`hypersurface`]);
//! * poset topology: lcm lattices, order and crosscut complexes, exact
//!   homology ([`topology`]);
//! * slack-vector augmentation and the bonnet sweep ([`slack`]);
//! * monomial ideals, Scarf chain complexes and a Betti-number oracle ([`ideals`]).

pub mod complex;
pub mod coord;
pub mod error;
pub mod guard;
pub mod hypersurface;
pub mod ideals;
pub mod linalg;
pub mod neighborly;
pub mod point;
pub mod pointset;
pub mod sample;
pub mod slack;
pub mod subdivision;
pub mod topology;

pub use complex::SimplicialComplex;
pub use coord::{ExtendedCoordinate, Rational};
pub use error::{Result, ScarfError};
pub use guard::ScaleGuards;
pub use hypersurface::StaircaseRegion;
pub use ideals::{GradedChainComplex, MonomialIdeal};
pub use neighborly::{enumerate_complex, is_generic, Face, NeighborlyComplex};
pub use point::{join, ExtendedPoint};
pub use pointset::PointSet;
pub use slack::{augment, locate_bonnet, BonnetCertificate};
pub use subdivision::{geometric_subdivision, GeometricMesh};
pub use topology::{BettiVector, FinitePoset};
