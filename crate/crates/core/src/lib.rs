//! Deterministic interleavers built from permutation functions over finite
//! fields and from Skolem-type sequences, with cycle-structure predictions
//! checked against direct enumeration.

pub mod families;
pub mod gf;
pub mod numtheory;
pub mod perm;
pub mod cycletheory;
pub mod skolem;
pub mod cli;
