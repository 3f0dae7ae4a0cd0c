use bnloci::construct::{optimal_separation_filling, staircase_filling, staircase_layout};
use bnloci::params::{max_distance_bound, max_separable_e};
use bnloci::tableau::{grid_distance_sum, minimal_torsion_chain, validate_positive};

#[test]
fn staircase_beyond_the_acceptance_range() {
    for alpha in 2..=8usize {
        for beta in alpha..=80 / alpha {
            for g in (alpha * beta + 3) / 2..=alpha * beta {
                let f = staircase_filling(alpha, beta, g)
                    .unwrap_or_else(|err| panic!("({alpha}, {beta}, {g}): {err}"));
                assert_eq!(f.distinct_indices(), g);
                assert_eq!(f.repeats().len(), alpha * beta - g);
            }
        }
    }
}

#[test]
fn optimal_separation_on_larger_rectangles() {
    for alpha in 2..=9usize {
        for beta in alpha..=12 {
            for e in 0..=max_separable_e(alpha as i64, beta as i64) as usize {
                let f = optimal_separation_filling(alpha, beta, e)
                    .unwrap_or_else(|err| panic!("({alpha}, {beta}, {e}): {err}"));
                let chain = minimal_torsion_chain(&f).unwrap();
                assert!(validate_positive(&f, &chain).is_valid());
                assert_eq!(
                    grid_distance_sum(&f).unwrap() as i64,
                    max_distance_bound(alpha as i64, beta as i64, e as i64).unwrap()
                );
            }
        }
    }
}

#[test]
fn staircase_layout_errors_name_the_range() {
    let err = staircase_layout(3, 3, 5).unwrap_err().to_string();
    assert!(err.contains("alpha*beta/2 + 1"), "{err}");
    let err = staircase_layout(5, 3, 12).unwrap_err().to_string();
    assert!(err.contains("alpha <= beta"), "{err}");
}
