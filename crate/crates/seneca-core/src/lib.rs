//! Bit-faithful instruction-level simulator and energy estimator for the
//! SENeCA neuromorphic core's Neuron Processing Elements (NPEs).
//!
//! The crate models the NPE instruction set operating on BrainFloat16 and
//! packed integer data, executes micro-kernels in loop-buffer fashion over a
//! hierarchical memory, and charges energy per instruction, per memory bit and
//! per idle cycle from circuit-level measurement tables. On top of that it
//! ships the stock micro-kernels (integrate-and-fire, sigma-delta, Hebbian,
//! e-prop) and network-level simulation of the four algorithm families with a
//! plain-arithmetic reference for verification.
//!
//! The crate is `no_std` (with `alloc`); file formats, dataset handling and
//! the command-line front end live in the companion `seneca-bench` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alu;
pub mod asm;
pub mod bf16;
pub mod energy;
pub mod engine;
pub mod isa;
pub mod kernels;
pub mod memory;
pub mod packed;
pub mod rng;
pub mod sim;

pub use bf16::Value16;
pub use energy::{EnergyLedger, EnergyTable};
pub use engine::{AerEvent, LoopPlan, NpeArray, RunResult};
pub use isa::{AddrReg, Instruction, MicroKernel, Mnemonic, Reg};
pub use memory::{AccessStats, DataMemory, MemLevel};
