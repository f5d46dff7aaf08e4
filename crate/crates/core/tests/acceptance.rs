//! The twelve acceptance criteria at their full sizes. Each prints one
//! PASS/FAIL line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p m0nr-core --test acceptance -- --nocapture`.

use m0nr_core::verify::{self, CheckReport, OracleSettings};
use m0nr_core::Result;

const PBOUND: usize = 10;

fn criteria(settings: &OracleSettings) -> Vec<(u32, Result<CheckReport>)> {
    vec![
        (1, verify::formula_vs_lambda_prime(&[1, 2, 3, 4, 5, 6], &[7], settings)),
        (2, verify::formula_vs_lambda(&[4, 5, 6], settings)),
        (3, verify::poincare_identity(3..=30)),
        (4, verify::cycle_index_route(PBOUND)),
        (5, verify::extended_index(PBOUND)),
        (6, verify::reconstruction(PBOUND)),
        (7, verify::chr_vs_poset(&[1, 3, 5, 7])),
        (8, verify::plethystic_round_trips(PBOUND)),
        (9, verify::euler(10)),
        (10, verify::complex_checks(PBOUND)),
        (11, verify::recurrences(200, 0x5eed)),
        (12, verify::integrality(8)),
    ]
}

#[test]
fn acceptance() {
    let settings = OracleSettings::default();
    let mut failed = Vec::new();
    for (i, r) in criteria(&settings) {
        match r {
            Ok(report) => {
                println!("criterion {i:>2}: {report}");
                if !report.passed() {
                    failed.push(i);
                }
            }
            Err(e) => {
                println!("criterion {i:>2}: FAIL error: {e}");
                failed.push(i);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn supporting_checks() {
    let settings = OracleSettings::default();
    for r in [
        verify::oracle_dimensions(7, 6, &settings),
        verify::functoriality(5, 2, 40, 11, &settings),
        verify::decomposition_consistency(6, &settings),
        verify::chr_restriction(PBOUND),
    ] {
        let r = r.expect("supporting check errored");
        println!("{r}");
        assert!(r.passed(), "{r}");
    }
}
