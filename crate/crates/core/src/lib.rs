pub mod semigroup;
pub mod solution;
pub mod enumeration;
pub mod constructions;
pub mod clifford;
pub mod special;
pub mod io;
pub mod cli;
