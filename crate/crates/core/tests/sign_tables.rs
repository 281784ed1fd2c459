use vortex_front_core::*;

use RootKind::{Imaginary as Im, PositiveReal as Re};

/// One row of a boundary table: open interval of `δ/(cη)` and the expected
/// classification.
struct Row {
    lo: f64,
    hi: f64,
    plus: RootKind,
    minus: RootKind,
    product_sign: i8,
}

fn row(lo: f64, hi: f64, plus: RootKind, minus: RootKind, product_sign: i8) -> Row {
    Row {
        lo,
        hi,
        plus,
        minus,
        product_sign,
    }
}

fn table(m: f64) -> Vec<Row> {
    let inf = f64::INFINITY;
    if m > 1.0 {
        vec![
            row(-inf, -(m + 1.0), Im, Im, -1),
            row(-(m + 1.0), -(m - 1.0), Re, Im, 0),
            row(-(m - 1.0), m - 1.0, Im, Im, 1),
            row(m - 1.0, m + 1.0, Im, Re, 0),
            row(m + 1.0, inf, Im, Im, -1),
        ]
    } else if m < 1.0 {
        vec![
            row(-inf, -(m + 1.0), Im, Im, -1),
            row(-(m + 1.0), m - 1.0, Re, Im, 0),
            row(m - 1.0, -(m - 1.0), Re, Re, 1),
            row(-(m - 1.0), m + 1.0, Im, Re, 0),
            row(m + 1.0, inf, Im, Im, -1),
        ]
    } else {
        vec![
            row(-inf, -2.0, Im, Im, -1),
            row(-2.0, 0.0, Re, Im, 0),
            row(0.0, 2.0, Im, Re, 0),
            row(2.0, inf, Im, Im, -1),
        ]
    }
}

fn samples(r: &Row) -> [f64; 3] {
    match (r.lo.is_finite(), r.hi.is_finite()) {
        (true, true) => {
            let w = r.hi - r.lo;
            [r.lo + 0.25 * w, r.lo + 0.5 * w, r.lo + 0.75 * w]
        }
        (false, true) => [r.hi - 0.5, r.hi - 1.5, r.hi - 4.0],
        (true, false) => [r.lo + 0.5, r.lo + 1.5, r.lo + 4.0],
        _ => unreachable!(),
    }
}

#[test]
fn classification_matches_every_table_row() {
    let mut checks = 0;
    for (m, c) in [
        (2.0, 1.0),
        (1.5, 2.0),
        (0.5, 1.0),
        (0.25, 3.0),
        (1.0, 1.0),
        (1.0, 0.5),
    ] {
        let p = MediumParams::new(m * c, c).unwrap();
        for r in table(m) {
            for ratio in samples(&r) {
                for eta in [1.3, -0.8] {
                    let f = Frequency::new(0.0, ratio * c * eta, eta).unwrap();
                    let got = sign_table_check(f, &p).unwrap();
                    // the sum vanishes only at δ = 0 in the middle supersonic row
                    let sum_nonzero = !(m > 1.0 && ratio == 0.0);
                    assert_eq!(got.mu_plus_kind, r.plus, "m={m} ratio={ratio} eta={eta}");
                    assert_eq!(got.mu_minus_kind, r.minus, "m={m} ratio={ratio} eta={eta}");
                    assert_eq!(got.re_product_sign, r.product_sign, "m={m} ratio={ratio}");
                    assert_eq!(got.sum_nonzero, sum_nonzero, "m={m} ratio={ratio}");
                    checks += 1;
                }
            }
        }
    }
    assert!(checks >= 54);
}

#[test]
fn endpoints_are_flagged() {
    for m in [2.0, 0.5, 1.0] {
        let p = MediumParams::new(m, 1.0).unwrap();
        for end in [m + 1.0, m - 1.0, 1.0 - m, -(m + 1.0)] {
            let f = Frequency::new(0.0, end * 1.7, 1.7).unwrap();
            assert!(matches!(
                sign_table_check(f, &p),
                Err(Error::OnIntervalEndpoint { .. })
            ));
        }
    }
}
