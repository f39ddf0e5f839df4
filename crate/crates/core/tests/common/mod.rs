#![allow(dead_code)]

pub mod matrix_model;
pub mod random;
