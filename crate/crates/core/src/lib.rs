pub mod bloore;
pub mod cli;
pub mod density;
pub mod error;
pub mod integrate;
pub mod measures;
pub mod scenarios;
pub mod symmetric;
pub mod weightfit;
