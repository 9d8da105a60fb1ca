//! One pass/fail line per acceptance criterion over the default instance set.
//! Runs without the libtest harness so the lines always print.

use std::collections::BTreeMap;

use supercas::instance::Instance;
use supercas::report::{Report, Status};
use supercas::suites::{acceptance_matrix, run_instance};

fn reports() -> BTreeMap<String, Report> {
    let jobs = acceptance_matrix();
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(i, suites)| s.spawn(move || run_instance(*i, suites, 8).expect("instance builds")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panic")).map(|r| (r.algebra.clone(), r)).collect()
    })
}

fn name(i: Instance) -> String {
    i.to_string()
}

fn passing(r: &Report, suite: &str, prefix: &str) -> usize {
    r.checks
        .iter()
        .filter(|c| c.suite == suite && c.check.starts_with(prefix) && c.status == Status::Pass)
        .count()
}

fn residual_of(r: &Report, picture: &str) -> Option<String> {
    let prefix = format!("{picture}: characteristic identity [");
    r.checks
        .iter()
        .find(|c| c.suite == "adjoint" && c.check.starts_with(&prefix) && c.check.ends_with("residual"))
        .filter(|c| c.status == Status::Pass)
        .and_then(|c| c.computed.clone())
}

const DEFINING: [Instance; 9] = [
    Instance::osp(3, 2),
    Instance::osp(5, 2),
    Instance::osp(6, 2),
    Instance::osp(7, 4),
    Instance::osp(2, 2),
    Instance::sl(2, 1),
    Instance::sl(3, 1),
    Instance::sl(4, 1),
    Instance::sl(5, 2),
];

fn criteria(all: &BTreeMap<String, Report>) -> Vec<(u32, &'static str, bool)> {
    let get = |i: Instance| all.get(&name(i)).unwrap_or_else(|| panic!("missing {i}"));
    let mut out = Vec::new();

    let c1 = DEFINING.iter().all(|&i| {
        let r = get(i);
        r.suite_ok("defining")
            && passing(r, "defining", "characteristic identity [") == 1
            && passing(r, "defining", "projectors: complete") == 1
            && passing(r, "defining", "projectors: orthogonal") == 1
            && passing(r, "defining", "projectors: idempotent") == 1
    });
    out.push((1, "defining characteristic identities and projectors", c1));

    let c2 = [Instance::osp(5, 2), Instance::sl(3, 1), Instance::sl(4, 1)].iter().all(|&i| {
        let r = get(i);
        r.suite_ok("ybe") && passing(r, "ybe", "YBE ") >= 3 && passing(r, "ybe", "unitarity ") >= 3
    });
    out.push((2, "Yang-Baxter equation and unitarity", c2));

    let zero = "0".to_string();
    let residuals = [
        (Instance::osp(5, 2), zero.clone()),
        (Instance::osp(7, 2), zero.clone()),
        (Instance::osp(6, 2), zero.clone()),
        (Instance::osp(8, 2), zero.clone()),
        (Instance::osp(2, 2), "(1/2)K".into()),
        (Instance::osp(3, 2), "(-3/2)K".into()),
        (Instance::sl(4, 1), zero.clone()),
        (Instance::sl(5, 1), zero),
        (Instance::sl(2, 1), "(1/2)K".into()),
        (Instance::sl(3, 1), "(1/16)K + (1/16)P+ + (-1/4)C+^2".into()),
    ];
    let c3 = residuals.iter().all(|(i, want)| {
        let r = get(*i);
        r.suite_ok("adjoint") && residual_of(r, "restricted").as_ref() == Some(want)
    });
    out.push((3, "adjoint characteristic identities and residuals", c3));

    let c4 = all.values().filter(|r| r.checks.iter().any(|c| c.suite == "projectors")).all(|r| {
        let total: i64 = r.dims.values().map(|d| d[0] + d[1]).sum();
        let dim = r.find("projectors", "total dims").and_then(|c| c.expected.clone());
        r.suite_ok("projectors")
            && !r.dims.is_empty()
            && dim.is_some_and(|d| d.parse::<i64>().ok() == Some(total))
            && passing(r, "projectors", "eigen ") == r.dims.len()
    });
    out.push((4, "projector systems: completeness, orthogonality, idempotence, eigen, dims", c4));

    let table = |i: Instance, count: usize, row: &str, total: i64| {
        let r = get(i);
        r.dims.len() == count
            && r.dims.get(row) == Some(&[1, 0])
            && r.dims.values().map(|d| d[0] + d[1]).sum::<i64>() == total
    };
    let c5 = table(Instance::osp(5, 2), 6, "V3", 529) && table(Instance::sl(4, 1), 7, "V1(+)", 576);
    out.push((5, "dimension tables", c5));

    let c6 = [Instance::osp(5, 2), Instance::sl(4, 1)]
        .iter()
        .all(|&i| get(i).suite_ok("brauer") && passing(get(i), "brauer", "") >= 3);
    out.push((6, "Brauer and contraction relations", c6));

    let c7 = DEFINING.iter().all(|&i| {
        let r = get(i);
        r.suite_ok("vogel") && passing(r, "vogel", "universal cubic residual") == 1
    }) && [Instance::osp(5, 2), Instance::sl(4, 1)].iter().all(|&i| {
        let r = get(i);
        passing(r, "vogel", "sdim g from mu") == 1
            && passing(r, "vogel", "sdim g from alpha") == 1
            && passing(r, "vogel", "universal P(") == 4
    });
    out.push((7, "Vogel parameters, universal cubic and projectors", c7));

    let c8 = [Instance::osp(5, 2), Instance::osp(7, 2), Instance::sl(4, 1), Instance::sl(5, 1)]
        .iter()
        .all(|&i| {
            let r = get(i);
            r.suite_ok("series")
                && r.series.direct.len() == 9
                && r.series.direct == r.series.universal
                && (0..=8).all(|k| r.find("series", &format!("c_{k}")).is_some_and(|c| c.status == Status::Pass))
        });
    out.push((8, "Casimir series, universal = direct", c8));

    let c9 = [Instance::osp(5, 2), Instance::sl(3, 1)].iter().all(|&i| {
        let r = get(i);
        let restricted = residual_of(r, "restricted");
        restricted.is_some()
            && residual_of(r, "embedded") == restricted
            && passing(r, "adjoint", "cross-picture: ") >= 7
            && r.checks.iter().filter(|c| c.check.starts_with("cross-picture: ")).all(|c| c.status == Status::Pass)
    });
    out.push((9, "cross-picture identity", c9));
    out
}

fn main() {
    let all = reports();
    let results = criteria(&all);
    for (n, what, ok) in &results {
        println!("criterion {n}: {} {what}", if *ok { "PASS" } else { "FAIL" });
    }
    let mut failed = !results.iter().all(|(_, _, ok)| *ok);
    for r in all.values() {
        for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
            failed = true;
            println!("  {} [{}] {}: expected {:?}, computed {:?}", r.algebra, c.suite, c.check, c.expected, c.computed);
        }
    }
    if failed {
        std::process::exit(1);
    }
}
