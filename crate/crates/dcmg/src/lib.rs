//! Steady-state toolkit for islanded DC microgrids under hierarchical control.
//!
//! The crate models a meshed DC network of voltage-controlled generation
//! units (dispatchable, battery, PV) and nonlinear ZIP loads, and stacks the
//! three supervisory layers on top of it:
//!
//! * [`netmodel`] — graph, incidence/admittance matrices, node partition,
//!   and topology edits driven by unit-commitment decisions;
//! * [`pflow`] — steady-state load-flow residuals and solvers, plus the
//!   existence (contraction) certificate and the local uniqueness condition
//!   for load voltages;
//! * [`qpcore`] — dense convex QP (dual active set) and branch-and-bound
//!   MIQP used by the energy management layer;
//! * [`ems`] — the receding-horizon mixed-integer energy management problem:
//!   battery scheduling, dispatchable commitment, PV curtailment;
//! * [`secondary`] — translation of power references into voltage references
//!   by constrained power-flow optimization;
//! * [`simloop`] — the multi-rate closed-loop simulation (1-minute loads,
//!   3-minute secondary, 15-minute EMS) with CSV/JSONL logging.
//!
//! Batch analysis helpers run data-parallel via `rayon` when the `parallel`
//! feature (default) is enabled; disable it for a fully sequential build.

pub mod batch;
pub mod ems;
pub mod netmodel;
pub mod pflow;
pub mod qpcore;
pub mod secondary;
pub mod simloop;
pub mod synth;
