//! Named constructions built on the core modules: the 162-point extended
//! quadrangle and hexagon, sub-octagon classes of flag octagons, the Suzuki
//! extension step, and the locally-Δ completion search.

pub mod egq162;
pub mod hexagon;
pub mod locally;
pub mod octagon;
pub mod plane;
pub mod suzuki;

use thiserror::Error;

use crate::group::GroupError;
use crate::hyperovals::HyperovalError;
use crate::spaces::SpaceError;

#[derive(Debug, Error)]
pub enum SynthesisError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("construction produced a disconnected graph")]
    DisconnectedResult,
    #[error("search exceeded the bound of {bound} vertices")]
    BoundExceeded { bound: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Hyperoval(#[from] HyperovalError),
}
