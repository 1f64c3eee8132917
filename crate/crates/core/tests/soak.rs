//! Long randomized soak at larger-than-default bounds. Ignored by default;
//! run with `cargo test -p braidthom-core --test soak -- --ignored`.

use braidthom_core::{run_suite, GenConfig, Suite};

#[test]
#[ignore]
fn all_suites_at_elevated_bounds() {
    let cfg = GenConfig {
        seed: 20260808,
        max_leaves: 16,
        max_word_len: 24,
        twist_bound: 4,
        constrain: None,
    };
    for suite in Suite::ALL {
        let trials = match suite {
            Suite::Fig5Conventions => 1,
            Suite::GroupAxioms | Suite::Confluence => 600,
            _ => 400,
        };
        let report = run_suite(suite, trials, &cfg);
        println!("{report}");
        for f in &report.failures {
            eprintln!("  trial {}: {}", f.trial, f.message);
            for w in &f.witnesses {
                eprintln!("    {w}");
            }
        }
        assert!(report.passed(), "{suite} failed at elevated bounds");
    }
}
