pub mod liealg;
pub mod homspace;
pub mod connection;
pub mod affine;
pub mod catalog;
pub mod numlab;
pub mod cli;
