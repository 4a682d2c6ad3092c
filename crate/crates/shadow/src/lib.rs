//! Build and check "shadows": collections of pairwise disjoint balls with
//! centers on a domain's boundary such that every straight line through a
//! chosen interior point meets at least one ball.
//!
//! The crate is organized in four layers:
//!
//! * [`geom`] — dimension-generic (2D/3D) primitives: points, balls,
//!   spherical caps, homothety, line–ball incidence.
//! * [`cover`] — the exact decision procedure for "do these caps cover the
//!   whole direction sphere?", with margins, escape witnesses and an
//!   independent sampling oracle.
//! * [`construct`] — reference ball placements on a circle (two balls) and
//!   on a sphere (four balls), including the closed-form level constants and
//!   a parameter tuner.
//! * [`domain`] — boundary descriptions (implicit expression, polygon,
//!   triangle mesh), ray casting, inscribed-radius estimation, and the
//!   drivers that adapt a spherical configuration to an arbitrary domain by
//!   homothety, plus certificate validation.
//!
//! File formats shared with the `shadow` command-line tool live in
//! [`files`].
//!
//! ```
//! use shadow::construct::{two_balls_unit_circle, ShadowConfig};
//! use shadow::geom::Mode;
//!
//! let cfg: ShadowConfig = two_balls_unit_circle(0.02, Mode::Closed).unwrap();
//! let verdict = cfg.verify().unwrap();
//! assert!(verdict.covered);
//! assert!(verdict.margin > 0.019);
//! ```

pub mod construct;
pub mod cover;
pub mod domain;
pub mod files;
pub mod geom;

pub use construct::ShadowConfig;
pub use cover::{CapFamily, Verdict};
pub use domain::{Certificate, DomainSpec};
pub use geom::{Ball, Cap, Dim, Mode, Point, Sphere, UnitVec};

/// Book chapters double as doctests so the guide can never drift from the
/// library. `cargo test --doc` compiles and runs every fenced Rust block.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/balls-and-caps.md")]
    pub struct BallsAndCaps;
    #[doc = include_str!("../../../book/src/coverage.md")]
    pub struct Coverage;
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub struct Constructions;
    #[doc = include_str!("../../../book/src/domains.md")]
    pub struct Domains;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
