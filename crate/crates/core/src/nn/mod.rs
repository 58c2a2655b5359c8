//! Hand-rolled function approximators: dense MLPs with analytic
//! backpropagation, Adam, and a finite-difference gradient checker that
//! gates the backward pass.

mod adam;
mod gradcheck;
mod mlp;

pub use adam::Adam;
pub use gradcheck::{gradient_check, GradCheckReport};
pub use mlp::{Mlp, MlpCache, MlpGrads};
