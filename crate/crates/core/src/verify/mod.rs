//! Randomized certificates for square-freeness and coprimality, the checks
//! on the top components of the divisor equations, and rank tables.

mod mc;
mod pi1;
mod tops;

pub use mc::{coprime_mc, squarefree_mc, McConfig, Method, Status, Trial, Verdict};
pub use pi1::{pi1_prediction, pi1_table, Pi1Row};
pub use tops::{check_tops, MinorReport, Structure, TopReport};
