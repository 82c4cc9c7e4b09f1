//! Ungated experiments: checks whose outcome the library deliberately does
//! not assert. Each test emits a report (visible with `--nocapture`) and
//! passes regardless of the outcome, which is data, not a contract.

use std::sync::Arc;

use doubler::{
    check_identity, norm_one_from_seed, parse_tower, random_element, IdentityId, SplitMix64,
    TowerSpec,
};

fn homogeneous(kind: &str, depth: usize) -> Arc<TowerSpec> {
    Arc::new(parse_tower(&vec![format!("{kind}:-1"); depth].join(",")).unwrap())
}

/// Right distributivity and the involution property of conjugation are only
/// proven for Conway-Smith towers in weak/depth-limited forms; at depth 4+
/// the checker just reports what it sees.
#[test]
fn cs_right_dist_and_involution_beyond_depth_three() {
    for depth in 4..=5 {
        let t = homogeneous("cs", depth);
        for id in [IdentityId::RightDist, IdentityId::Involution] {
            let report = check_identity(id, &t, 40, 17, 4).unwrap();
            println!(
                "exploratory: {} on {} -> {:?}",
                id,
                t,
                report.outcome
            );
        }
    }
}

/// Whether s^2 / n(s) still lands on the norm-one surface once the tower is
/// no longer left alternative (Cayley-Dickson depth >= 4). Reported only.
#[test]
fn cd_depth_four_norm_one_map() {
    let t = homogeneous("cd", 4);
    let mut rng = SplitMix64::new(23);
    let mut norm_one = 0;
    let total = 40;
    for _ in 0..total {
        let s = loop {
            let s = random_element(&t, &mut rng, 4);
            if !s.is_zero() {
                break s;
            }
        };
        let x = norm_one_from_seed(&s).unwrap();
        if x.norm_form().is_one() {
            norm_one += 1;
        }
    }
    println!(
        "exploratory: s^2/n(s) on {} hit norm one in {}/{} samples",
        t, norm_one, total
    );
}
