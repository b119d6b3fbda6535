//! One line per acceptance criterion. A criterion is green when every one of
//! its checks passes. The only red checks tolerated are the printed values
//! listed in KNOWN_MISPRINTS, and each of those must come with a passing
//! check of the corrected reading.

mod common;

use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

use cubicrel::burnside::SingularType;
use cubicrel::suite;
use cubicrel::{Check, Report};

struct Misprint {
    criterion: usize,
    /// Failing check, by exact name.
    check: &'static str,
    /// Check of the corrected reading that must pass.
    corrected: &'static str,
    reason: &'static str,
}

const KNOWN_MISPRINTS: &[Misprint] = &[
    Misprint {
        criterion: 3,
        check: "degree 3 [S^3]",
        corrected: "[S^3] Euler number and symmetry",
        reason: "printed L^5 coefficient is 1 + χ3, which breaks the L <-> L^-1 symmetry of a cube; the computed 3 + 3χ3 restores it and gives Euler number 729 = 9^3",
    },
    Misprint {
        criterion: 3,
        check: "Hilbert form [S^[3]]",
        corrected: "[S^[3]] Euler number and symmetry",
        reason: "printed display has Euler number 246; the generating function prod (1 - t^k)^-9 gives 255",
    },
    Misprint {
        criterion: 3,
        check: "Hilbert form [S^[4]]",
        corrected: "[S^[4]] Euler number and symmetry",
        reason: "printed display has Euler number 945; the generating function gives 1035",
    },
    Misprint {
        criterion: 6,
        check: "printed relation residual",
        corrected: "corrected relation residual",
        reason: "the coefficient (2L + 3L^2 + 5L^3 + 3L^4 + 2L^5) belongs to [S^2] and is printed on [S^(2)]",
    },
    Misprint {
        criterion: 6,
        check: "unique homogeneous relation equals the printed one",
        corrected: "unique homogeneous relation equals the corrected one",
        reason: "the unique relation found by the search is the corrected one",
    },
    Misprint {
        criterion: 7,
        check: "printed twists: sides agree",
        corrected: "corrected twists: sides agree",
        reason: "the printed twists on [S] and [S^[3]] do not balance; with the twists that match the Hilbert-scheme relation the two sides agree",
    },
    Misprint {
        criterion: 9,
        check: "char [Z(S)]",
        corrected: "[Z(S)] = 1 + [A12] + [A18]",
        reason: "the printed vector has zeros, impossible for a G-set containing a fixed point; 1 + [A12] + [A18] with the printed [A12], [A18] gives the computed vector",
    },
];

fn combine(title: &str, reports: Vec<Report>) -> Report {
    let mut r = Report::new(title);
    for x in reports {
        r.checks.extend(x.checks);
    }
    r
}

fn fmt<T: std::fmt::Debug>(e: proptest::test_runner::TestError<T>) -> String {
    e.to_string()
}

fn properties() -> Report {
    let mut r = Report::new("randomized properties");
    let mut run = |name: &str, f: &dyn Fn(&mut TestRunner) -> Result<(), String>| {
        let mut runner = TestRunner::new(common::config());
        let res = f(&mut runner);
        r.push(Check::new(name, res.is_ok(), res.err().unwrap_or_else(|| format!("{} cases", common::CASES))));
    };
    run("lambda-sum axiom, character ring", &|t| {
        t.run(&(common::graded_char(2), common::graded_char(2)), |(x, y)| common::char_lambda_sum(&x, &y)).map_err(fmt)
    });
    run("Sym of a Lefschetz twist, character ring", &|t| {
        t.run(&(common::effective_char(), 0i32..4), |(x, m)| common::char_twist(&x, m)).map_err(fmt)
    });
    run("lambda-sum axiom, free pre-lambda ring", &|t| {
        t.run(&(common::k3_poly(), common::k3_poly()), |(x, y)| common::k3_lambda_sum(&x, &y)).map_err(fmt)
    });
    run("Sym of a Lefschetz twist, free pre-lambda ring", &|t| {
        t.run(&(common::k3_poly(), 0u32..4), |(x, m)| common::k3_twist(&x, m)).map_err(fmt)
    });
    run("decompose round trip", &|t| {
        t.run(&prop::collection::vec((0i32..4, 1usize..10, -3i64..=3), 0..8), |v| common::decompose_round_trip(&v))
            .map_err(fmt)
    });
    run("mark character additive and multiplicative", &|t| {
        t.run(&(common::burn_element(), common::burn_element()), |(a, b)| common::burn_char_hom(&a, &b)).map_err(fmt)
    });
    run("JSON reproducible", &|t| {
        t.run(&(0usize..1000), |i| -> Result<(), TestCaseError> { common::deterministic_json(i) }).map_err(fmt)
    });
    r
}

fn main() {
    let start = Instant::now();
    let criteria: Vec<(usize, Report)> = vec![
        (1, combine("table validation", vec![suite::tables()])),
        (2, combine("structure counts", vec![suite::structure()])),
        (3, combine("decomposition goldens", vec![suite::decompositions(), suite::decomposition_oracles()])),
        (4, combine("nonexistence", vec![suite::nonexistence()])),
        (5, combine("uniqueness and coefficients", vec![suite::uniqueness()])),
        (6, combine("degree 5", vec![suite::degree5()])),
        (7, combine("motivic equivalence", vec![suite::motivic()])),
        (8, combine("A1 Burnside suite", vec![suite::burnside(SingularType::A1)])),
        (9, combine("A2 Burnside suite", vec![suite::burnside(SingularType::A2)])),
        (10, combine("fourfold suite", vec![suite::fourfold()])),
        (11, combine("mod-L obstructions", vec![suite::mod_l()])),
        (12, properties()),
    ];
    let mut unexpected = Vec::new();
    for (n, r) in &criteria {
        let failing: Vec<&Check> = r.checks.iter().filter(|c| !c.passed).collect();
        let total = r.checks.len();
        if failing.is_empty() {
            println!("criterion {n:>2} PASS  {} ({total} checks)", r.title);
            continue;
        }
        let mut explained = Vec::new();
        for c in &failing {
            let known = KNOWN_MISPRINTS.iter().find(|m| m.criterion == *n && m.check == c.name);
            let corrected_ok = known.is_some_and(|m| r.checks.iter().any(|x| x.name == m.corrected && x.passed));
            match known {
                Some(m) if corrected_ok => explained.push(format!("{} [printed misprint: {}; corrected reading passes]", c.name, m.reason)),
                _ => unexpected.push(format!("criterion {n}: {}: {}", c.name, c.detail)),
            }
        }
        println!(
            "criterion {n:>2} FAIL  {} ({} of {total} checks red): {}",
            r.title,
            failing.len(),
            explained.join("; ")
        );
    }
    for m in KNOWN_MISPRINTS {
        let still_red = criteria.iter().any(|(n, r)| *n == m.criterion && r.checks.iter().any(|c| c.name == m.check && !c.passed));
        if !still_red {
            unexpected.push(format!("criterion {}: listed misprint {:?} no longer fails", m.criterion, m.check));
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        eprintln!("unexplained failures:\n{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
