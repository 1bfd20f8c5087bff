//! Information-flow scheduling for a dense sensor network reduced to a line
//! of `N` aggregation nodes feeding a central sink.
//!
//! The model places node `j` at distance `j*d` from the sink (node 0). Each
//! node carries an information rate `a_j`, a compression ratio `b_j`, a
//! remaining energy capacity `c_j`, and pays `(d*|i-j|)^lambda` per unit of
//! information sent to node `i`. Two schedules are computed:
//!
//! * maximum lifetime: minimize the worst per-node depletion rate `phi`
//!   (power consumption over remaining capacity);
//! * minimum power: minimize total transmission power.
//!
//! Each schedule is solved by three independent routes that cross-validate
//! one another: a self-contained dense two-phase simplex solver
//! ([`simplex`]), an exact closed-form solution obtained by forward
//! substitution ([`analytic`]), and two asymptotic approximations of the
//! depletion rate. [`experiments`] sweeps parameters and reproduces the
//! model's characteristic tables and heatmaps; [`cli`] exposes everything as
//! a command-line tool emitting CSV and SVG.

pub mod analytic;
pub mod cli;
pub mod experiments;
pub mod flow_opt;
pub mod ring_model;
pub mod simplex;

mod util;

pub use analytic::AnalyticSolution;
pub use flow_opt::FlowSolution;
pub use ring_model::{NodeProfile, Normalization, SystemParams};
pub use simplex::{LpProblem, LpSolution, LpStatus};
