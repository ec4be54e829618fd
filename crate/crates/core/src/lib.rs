#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod basicclass;
pub mod knot;
pub mod laurent;
pub mod manifold;
