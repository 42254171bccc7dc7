pub mod array;
pub mod classical;
pub mod cli;
pub mod construct;
pub mod error;
pub mod field;
pub mod figures;
pub mod group;
pub mod io;
pub mod kotzig;
pub mod latin;
pub mod numtheory;
pub mod oracle;
pub mod verify;
