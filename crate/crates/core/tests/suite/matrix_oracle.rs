//! Classical real forms realized as fixed points of explicit anti-linear
//! involutions of matrix algebras. The root conjugation read off a diagonal
//! Cartan subalgebra must equal the one derived from the Satake diagram.

use crate::common::matrix_model::*;

#[test]
fn every_classical_family() {
    assert_eq!(check_all_classical(), 40);
}

#[test]
fn wrong_structure_is_detected() {
    // sl(4,R) data cannot realize su(2,2)
    let model = Model::new(Kind::Sl, 4);
    let sigma = Structure::Conj(nalgebra::DMatrix::identity(4, 4));
    let f = form("su(2,2)");
    let r = std::panic::catch_unwind(|| check_against(&f, &model, &sigma));
    assert!(r.is_err());
}
