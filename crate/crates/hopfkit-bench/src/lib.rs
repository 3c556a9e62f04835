//! Shared fixtures for the benchmark targets.

use hopfkit_core::scalar::CycScalar;
use hopfkit_core::zoo;
use hopfkit_core::QTStructure;

pub fn taft3_double() -> QTStructure {
    let q = CycScalar::root_of_unity(3, 1);
    zoo::drinfeld_double(&zoo::taft(3, &q).unwrap())
}

pub fn z36_bicharacter() -> QTStructure {
    zoo::group_algebra_with_bicharacter(&[6, 6], &[vec![1, 0], vec![0, 5]], 6).unwrap()
}
