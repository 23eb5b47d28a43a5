use superfield::check::Check;
use superfield::lattice::ModeLattice;
use superfield::lie;
use superfield::suites::*;
use superfield::symbolic::q;

fn failures(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.passed && !c.informational)
        .map(|c| format!("{} [{}]: {}", c.identity, c.anchor, c.residual))
        .collect()
}

fn axis_lattice(n: usize) -> ModeLattice {
    let ps = [[4, 0, 0], [-4, 0, 0], [0, 0, 4]];
    ModeLattice::new(
        ps[..n].iter().map(|p| p.map(|c| q(c))).collect(),
        q(3),
        q(3),
    )
    .unwrap()
}

#[test]
fn algebra_holds_with_two_internal_components() {
    let mut s = Settings::new(lie::su2(), ModeLattice::line(3, 2, q(1), q(1)).unwrap());
    s.scalar_dim = 2;
    let c = algebra_suite(&s).unwrap();
    assert!(c.len() > 20);
    assert_eq!(failures(&c), Vec::<String>::new());
}

#[test]
fn propagator_identities_on_the_cube() {
    let s = Settings::new(lie::u1(), ModeLattice::cube(1, q(1), q(1)).unwrap());
    let c = propagator_suite(&s).unwrap();
    let props: Vec<Check> = c
        .into_iter()
        .filter(|c| c.anchor.starts_with("propagators/"))
        .collect();
    assert!(props.iter().any(|c| c.anchor == "propagators/27 modes"));
    assert_eq!(failures(&props), Vec::<String>::new());
}

#[test]
fn dirac_suite_passes_on_default_lattice() {
    let c = dirac_suite(&Settings::default()).unwrap();
    assert_eq!(failures(&c), Vec::<String>::new());
}

#[test]
fn canonical_rules_for_dirac_gauge_and_ghost() {
    let c = equal_time_suite(&Settings::default()).unwrap();
    let canon: Vec<Check> = c
        .into_iter()
        .filter(|c| !c.anchor.ends_with("boson") && !c.anchor.ends_with("fermion"))
        .collect();
    for a in ["equal-time/dirac", "equal-time/gauge", "equal-time/ghost"] {
        assert!(canon.iter().any(|c| c.anchor == a), "{a} missing");
    }
    assert_eq!(failures(&canon), Vec::<String>::new());
}

#[test]
fn charge_momenta_and_hamiltonians_reduce_on_small_lattices() {
    for n in 1..=3 {
        let s = Settings::new(lie::su2(), axis_lattice(n));
        for r in functional_results(&s).unwrap() {
            if r.name.starts_with("FP current") {
                continue;
            }
            assert!(r.matched, "{n} modes, {}: {}", r.name, r.residual);
            assert!(r.time_independent(), "{n} modes, {}", r.name);
        }
    }
}

#[test]
fn bv_and_brst_pass_for_u1() {
    let mut s = Settings::new(lie::u1(), default_lattice());
    s.bv_samples = 40;
    s.brst_samples = 20;
    assert_eq!(failures(&bv_suite(&s).unwrap()), Vec::<String>::new());
    assert_eq!(failures(&brst_suite(&s).unwrap()), Vec::<String>::new());
}

#[test]
fn corrupted_algebra_fails_only_brst() {
    let bad = lie::su2().corrupted(0, 0, 1, superfield::symbolic::Scalar::one());
    let mut s = Settings::new(bad, default_lattice());
    s.bv_samples = 20;
    s.brst_samples = 10;
    assert!(!failures(&brst_suite(&s).unwrap()).is_empty());
    assert_eq!(failures(&bv_suite(&s).unwrap()), Vec::<String>::new());
    assert_eq!(failures(&dirac_suite(&s).unwrap()), Vec::<String>::new());
}

#[test]
fn oracle_confirms_every_symbolic_reduction() {
    let c = oracle_suite(&Settings::default()).unwrap();
    let engine: Vec<Check> = c
        .iter()
        .filter(|c| {
            c.anchor == "oracle/algebra"
                || c.anchor == "oracle/control"
                || c.anchor.starts_with("oracle/field-supercommutators")
                || c.identity.contains("symbolic reduction")
        })
        .cloned()
        .collect();
    assert!(engine.len() > 30);
    assert_eq!(failures(&engine), Vec::<String>::new());
}

#[test]
fn disabled_oracle_runs_nothing() {
    let mut s = Settings::default();
    s.oracle.enabled = false;
    assert!(run_suite(Suite::Oracle, &s).unwrap().is_empty());
}
