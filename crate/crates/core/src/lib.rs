pub mod cli;
pub mod enumerate;
pub mod perm;
pub mod report;
pub mod series;
