use hopfkit_core::hopf::{same_structure_constants, verify_hopf, HModule, StructTensor};
use hopfkit_core::linalg::Mat;
use hopfkit_core::scalar::CycScalar;
use hopfkit_core::yd::{nichols_truncated_line, nichols_truncated_line_with, BraidedHopfAlgebra};
use hopfkit_core::zoo;

fn sign_line() -> (hopfkit_core::QTStructure, BraidedHopfAlgebra) {
    let qt = zoo::sweedler();
    let one = CycScalar::from_int(1);
    let neg = CycScalar::from_int(-1);
    let zero = CycScalar::from_int(0);
    let rho: Vec<Mat> = vec![
        Mat::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]]),
        Mat::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero.clone(), neg.clone()]]),
        Mat::zero(2, 2),
        Mat::zero(2, 2),
    ];
    let st = |entries: Vec<(u32, u32, u32, i64)>| {
        StructTensor::from_entries(
            2,
            entries.into_iter().map(|(i, j, k, c)| (i, j, k, CycScalar::from_int(c))).collect(),
        )
    };
    let b = BraidedHopfAlgebra {
        carrier: HModule { dim: 2, rho },
        mult: st(vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
        unit: vec![one.clone(), zero.clone()],
        comult: st(vec![(0, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)]),
        counit: vec![one.clone(), zero.clone()],
        antipode: Mat::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, neg]]),
    };
    (qt, b)
}

#[test]
fn grid() {
    let (qt3, b3) = nichols_truncated_line(3).unwrap();
    let (qt4, b4) = nichols_truncated_line_with(4, 1).unwrap();
    let (qts, bs) = sign_line();
    let taft3 = zoo::taft(3, &CycScalar::root_of_unity(3, 1)).unwrap();
    for conjugate in [false, true] {
        for smash_left in [false, true] {
            for delta in 0..4u8 {
                for delta_swap in [false, true] {
                    for mult_leg in [false, true] {
                        for act_inv in [false, true] {
                            let v = zoo::BosVariant { delta, delta_swap, mult_leg, act_inv, conjugate, smash_left };
                            let ok3 = zoo::bosonization_with(&b3, &qt3, v)
                                .map(|a| (verify_hopf(&a).all_pass(), same_structure_constants(&a, &taft3)))
                                .unwrap_or((false, false));
                            if !ok3.0 {
                                continue;
                            }
                            let ok4 = zoo::bosonization_with(&b4, &qt4, v)
                                .map(|a| verify_hopf(&a).all_pass())
                                .unwrap_or(false);
                            let oks = zoo::bosonization_with(&bs, &qts, v)
                                .map(|a| verify_hopf(&a).all_pass())
                                .unwrap_or(false);
                            if ok4 && oks {
                                println!("PASS {v:?} taft_match={}", ok3.1);
                            }
                        }
                    }
                }
            }
        }
    }
}
