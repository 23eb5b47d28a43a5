//! Acceptance criteria 1–10. Each test writes one `criterion N: PASS|FAIL`
//! line straight to stderr, so the lines appear even when output is captured.

use std::io::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use superfield::check::Check;
use superfield::fields::table::field_table;
use superfield::fields::Stat;
use superfield::lattice::ModeLattice;
use superfield::lie;
use superfield::suites::*;
use superfield::symbolic::q;

struct Outcome {
    checks: usize,
    failures: Vec<String>,
    elapsed: Duration,
}

fn measure(f: impl FnOnce() -> Vec<Check>) -> Outcome {
    let t = Instant::now();
    let checks = f();
    let elapsed = t.elapsed();
    Outcome {
        checks: checks.len(),
        failures: checks
            .iter()
            .filter(|c| !c.passed && !c.informational)
            .map(|c| format!("{} [{}] residual {}", c.identity, c.anchor, c.residual))
            .collect(),
        elapsed,
    }
}

/// Prints the criterion line and fails the test on any failure or timeout.
fn verdict(n: u8, what: &str, o: Outcome, limit: Option<Duration>) {
    let slow = limit.is_some_and(|l| o.elapsed >= l);
    let ok = o.failures.is_empty() && !slow && o.checks > 0;
    let limit_s = limit.map_or(String::new(), |l| format!(" / limit {}s", l.as_secs()));
    let line = format!(
        "criterion {n:>2}: {} {what} ({} checks, {} failed, {:.2}s{limit_s})",
        if ok { "PASS" } else { "FAIL" },
        o.checks,
        o.failures.len(),
        o.elapsed.as_secs_f64(),
    );
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(
        ok,
        "{line}\n{}{}",
        o.failures.join("\n"),
        if slow {
            "\nexceeded the time limit"
        } else {
            ""
        }
    );
}

fn axis_lattice(n: usize) -> ModeLattice {
    let ps = [[4, 0, 0], [-4, 0, 0], [0, 0, 4]];
    ModeLattice::new(ps[..n].iter().map(|p| p.map(q)).collect(), q(3), q(3)).unwrap()
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn criterion01_elementary_algebra() {
    let mut s = Settings::new(lie::su2(), ModeLattice::line(3, 2, q(1), q(1)).unwrap());
    s.scalar_dim = 2;
    let o = measure(|| algebra_suite(&s).unwrap());
    verdict(
        1,
        "elementary super-commutators, 3 modes, internal dim 2",
        o,
        secs(5),
    );
}

#[test]
fn criterion02_propagators() {
    let lattices = [
        default_lattice(),
        ModeLattice::axes(1, q(1), q(1)).unwrap(),
        ModeLattice::cube(1, q(1), q(1)).unwrap(),
    ];
    assert_eq!(lattices[2].len(), 27);
    let o = measure(|| {
        lattices
            .iter()
            .flat_map(|l| propagator_identities(l).unwrap())
            .collect()
    });
    verdict(
        2,
        "lattice propagator identities on 2, 7 and 27 modes",
        o,
        secs(10),
    );
}

#[test]
fn criterion03_field_table_and_equal_time() {
    let s = Settings::default();
    let o = measure(|| {
        let mut c = field_table(&s.lattice, Stat::Boson).unwrap();
        c.extend(field_table(&s.lattice, Stat::Fermion).unwrap());
        c.extend(
            equal_time_suite(&s)
                .unwrap()
                .into_iter()
                .filter(|c| c.anchor.ends_with("boson") || c.anchor.ends_with("fermion")),
        );
        c
    });
    verdict(
        3,
        "field super-commutator table and scalar equal-time reductions",
        o,
        secs(30),
    );
}

#[test]
fn criterion04_dirac() {
    let s = Settings::default();
    assert!(s.dirac_samples >= 20);
    let o = measure(|| dirac_suite(&s).unwrap());
    verdict(4, "Dirac brackets, projectors, boosts, {ψ̄,ψ}", o, secs(30));
}

#[test]
fn criterion05_functionals() {
    let o = measure(|| {
        (1..=3)
            .flat_map(|n| {
                let s = Settings::new(lie::su2(), axis_lattice(n));
                functional_suite(&s).unwrap().into_iter().map(move |mut c| {
                    c.identity = format!("{} [{n} modes]", c.identity);
                    c
                })
            })
            .collect()
    });
    verdict(5, "functional reductions on 1-3 mode lattices", o, secs(60));
}

#[test]
fn criterion06_canonical_rules() {
    let s = Settings::default();
    let o = measure(|| {
        let c: Vec<Check> = equal_time_suite(&s)
            .unwrap()
            .into_iter()
            .filter(|c| {
                ["dirac", "gauge", "ghost"]
                    .iter()
                    .any(|k| c.anchor.ends_with(k))
            })
            .collect();
        assert!(c.iter().any(|c| c.anchor.ends_with("gauge")));
        c
    });
    verdict(
        6,
        "canonical rules for Dirac, gauge (ξ=1) and ghost fields",
        o,
        secs(30),
    );
}

#[test]
fn criterion07_bv() {
    let s = Settings::default();
    assert!(s.bv_samples >= 200);
    let o = measure(|| bv_suite(&s).unwrap());
    verdict(
        7,
        "BV Laplacian and antibracket identities, 200 samples",
        o,
        secs(30),
    );
}

#[test]
fn criterion08_brst() {
    let s = Settings::default();
    assert!(s.brst_samples >= 100);
    let o = measure(|| {
        let c = brst_suite(&s).unwrap();
        for a in ["brst/u1", "brst/su2", "brst/su3", "brst/control"] {
            assert!(c.iter().any(|c| c.anchor == a), "{a} missing");
        }
        c
    });
    verdict(
        8,
        "BRST nilpotency, Sℒ₀, ghost decomposition, control",
        o,
        secs(60),
    );
}

#[test]
fn criterion09_oracle() {
    let s = Settings::default();
    assert!(s.oracle.n_max == 3 && s.oracle.cap <= 1024 && s.oracle.tol <= 1e-12);
    let o = measure(|| {
        let c = oracle_suite(&s).unwrap();
        assert!(c.iter().any(|c| c.anchor == "oracle/control"));
        c
    });
    verdict(9, "Fock-space oracle on 2 modes, n_max 3", o, secs(120));
}

#[test]
fn criterion10_determinism() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_superfield"))
            .args(["--seed", "7", "verify", "--format", "json"])
            .output()
            .expect("binary runs")
            .stdout
    };
    let t = Instant::now();
    let (a, b) = (run(), run());
    let same = a == b && !a.is_empty();
    let o = Outcome {
        checks: 1,
        failures: if same {
            Vec::new()
        } else {
            vec!["JSON reports differ".into()]
        },
        elapsed: t.elapsed(),
    };
    verdict(
        10,
        "byte-identical JSON for identical seed and config",
        o,
        None,
    );
}
