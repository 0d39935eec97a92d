pub mod algebra;
pub mod insertion;
pub mod partitions;
pub mod polynomials;
pub mod tableaux;
