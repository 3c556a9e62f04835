//! Metric-group brute force: the centralizer order/double-centralizer
//! identities over every subgroup of a family of bicharacter groups,
//! and the bridge between the pointed model and the Hopf pipeline.

use hopfkit_core::pointed::{
    check_centralizer_identities, pointed_omega_rank, pointed_vs_hopf_crosscheck, radical,
    Bicharacter, FinAbGroup,
};

use proptest::prelude::*;

fn bichar(factors: &[u32], e: &[&[i64]], l: u32) -> Bicharacter {
    Bicharacter::new(
        FinAbGroup::new(factors.to_vec()),
        e.iter().map(|r| r.to_vec()).collect(),
        l,
    )
    .unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[test]
fn centralizer_identities_on_the_named_groups() {
    // Z/4 with chi(g,g) = i
    let cases: Vec<Bicharacter> = vec![
        bichar(&[4], &[&[1]], 4),
        // Z/12 x Z/3, a mixed form
        bichar(&[12, 3], &[&[1, 4], &[0, 4]], 12),
        // Z/15 with a partially degenerate form
        bichar(&[15], &[&[3]], 15),
        bichar(&[15], &[&[1]], 15),
    ];
    for chi in cases {
        let beta = chi.symmetric_form();
        let rep = check_centralizer_identities(&beta).unwrap();
        assert!(rep.identities_ok, "{:?}: {:?}", rep.group, rep.violation);
        assert!(rep.subgroups_checked >= 2);
    }
}

#[test]
fn centralizer_identities_family_sweep() {
    // a family of groups up to order 200 with several forms each
    let shapes: Vec<(Vec<u32>, u32)> = vec![
        (vec![2], 2),
        (vec![3], 3),
        (vec![4], 4),
        (vec![8], 8),
        (vec![9], 9),
        (vec![2, 2], 2),
        (vec![2, 4], 4),
        (vec![3, 3], 3),
        (vec![6, 2], 6),
        (vec![12, 3], 12),
        (vec![15], 15),
        (vec![4, 4], 4),
        (vec![10, 2], 10),
        (vec![12, 12], 12),
        (vec![14, 7], 14),
    ];
    for (factors, l) in shapes {
        let order: usize = factors.iter().map(|&f| f as usize).product();
        assert!(order <= 200);
        let m = factors.len();
        // a few deterministic exponent patterns per shape
        for pat in 0..3i64 {
            let e: Vec<Vec<i64>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let ni = factors[i] as i64;
                            let nj = factors[j] as i64;
                            let li = l as i64;
                            let unit = lcm(li / gcd(ni, li), li / gcd(nj, li));
                            (unit * (pat + i as i64 + j as i64)) % li
                        })
                        .collect()
                })
                .collect();
            let Ok(chi) = Bicharacter::new(FinAbGroup::new(factors.clone()), e, l) else {
                continue;
            };
            let rep = check_centralizer_identities(&chi.symmetric_form()).unwrap();
            assert!(rep.identities_ok, "{factors:?} pattern {pat}: {:?}", rep.violation);
        }
    }
}

#[test]
fn bridge_on_the_sample_set() {
    // every case with |G| <= 36: the pointed rank equals the Hopf-side
    // Omega rank and the triviality criteria agree
    let cases: Vec<Bicharacter> = vec![
        bichar(&[5], &[&[2]], 5),
        bichar(&[4], &[&[1]], 4),
        bichar(&[2], &[&[1]], 2),
        bichar(&[3], &[&[1]], 3),
        bichar(&[15], &[&[3]], 15),
        bichar(&[6], &[&[1]], 6),
        bichar(&[2, 2], &[&[1, 0], &[0, 1]], 2),
        bichar(&[3, 3], &[&[1, 2], &[0, 1]], 3),
        bichar(&[2, 4], &[&[2, 0], &[0, 1]], 4),
        bichar(&[6, 6], &[&[1, 0], &[0, 5]], 6),
    ];
    for chi in cases {
        assert!(chi.group.order() <= 36);
        let rep = pointed_vs_hopf_crosscheck(&chi).unwrap();
        assert!(rep.agree, "bridge disagrees: {rep:?}");
    }
}

#[test]
fn trivial_form_has_rank_one() {
    let beta = bichar(&[7], &[&[0]], 7);
    assert_eq!(pointed_omega_rank(&beta), 1);
    assert_eq!(radical(&beta).len(), 7);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_times_radical_is_group_order(n in 2u32..=12, k in 0i64..12) {
        let chi = Bicharacter::new(FinAbGroup::new(vec![n]), vec![vec![k % n as i64]], n).unwrap();
        let beta = chi.symmetric_form();
        let rk = pointed_omega_rank(&beta);
        prop_assert_eq!(rk * radical(&beta).len(), n as usize);
    }
}
