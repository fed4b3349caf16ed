mod common;

use common::{catalan_number, harer_zagier_chi, pairing_count};
use eo_core::algebra::Rational;
use eo_core::catalan::CatalanTable;
use num_bigint::BigInt;

#[test]
fn pairing_oracle_agrees_with_recursion() {
    let table = CatalanTable::new();
    let profiles: &[(u32, &[u32])] = &[
        (1, &[4]),
        (1, &[6]),
        (2, &[8]),
        (0, &[1, 1]),
        (0, &[3, 1]),
        (1, &[3, 3]),
        (0, &[2, 2, 2]),
        (1, &[2, 1, 1]),
        (0, &[1, 1, 1, 1]),
        (0, &[3, 2, 1]),
        (1, &[4, 2, 2]),
    ];
    for &(g, mu) in profiles {
        let expect = pairing_count(g, mu);
        assert_eq!(table.count(g, mu).unwrap(), BigInt::from(expect), "({g}, {mu:?})");
    }
    assert_eq!(pairing_count(1, &[4]), 1);
    assert_eq!(pairing_count(1, &[6]), 10);
    assert_eq!(pairing_count(0, &[1, 1]), 1);
    assert_eq!(table.dessin_number(1, &[4]).unwrap(), Rational::frac(1, 4));
}

#[test]
fn catalan_numbers_and_euler_characteristics() {
    let expect = [1, 1, 2, 5, 14, 42, 132];
    for (m, &c) in expect.iter().enumerate() {
        assert_eq!(catalan_number(m as u32), BigInt::from(c));
    }
    assert_eq!(harer_zagier_chi(1, 1), Rational::frac(-1, 12));
    assert_eq!(harer_zagier_chi(1, 2), Rational::frac(1, 12));
    assert_eq!(harer_zagier_chi(2, 1), Rational::frac(1, 120));
    assert_eq!(harer_zagier_chi(0, 3), Rational::one());
    assert_eq!(harer_zagier_chi(0, 4), Rational::from(-1));
}
