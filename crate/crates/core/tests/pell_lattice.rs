use nodal_k3_core::{
    is_minimal_pell_pair, pell_solutions, MukaiVector, NSLattice, ProblemInstance,
};

#[test]
fn r3_window() {
    let sols = pell_solutions(3, 10);
    for p in [(1, 0), (0, 1), (1, 3), (3, 1)] {
        assert!(sols.contains(&p), "{p:?}");
    }
    assert!(is_minimal_pell_pair(3));
}

#[test]
fn r2_is_the_difference_family() {
    let sols = pell_solutions(2, 3);
    assert!(!sols.is_empty());
    assert!(sols.iter().all(|&(x, y)| (x - y).abs() == 1));
    assert_eq!(sols.len(), 12);
}

#[test]
fn solutions_are_spherical_classes() {
    // x·u + y·t_{-1} squared through the Mukai pairing, not the form
    let inst = ProblemInstance::new(NSLattice::new(4, false).unwrap(), 3, 1, 1).unwrap();
    let (u, t) = (inst.u(), inst.t(-1));
    let combo = |x: i64, y: i64| {
        let div = u
            .divisor()
            .times(x)
            .checked_add(&t.divisor().times(y))
            .unwrap();
        MukaiVector::new(3 * x, div, x - y)
    };
    for x in -6i64..=6 {
        for y in -6i64..=6 {
            let spherical = combo(x, y).is_spherical();
            assert_eq!(
                spherical,
                pell_solutions(3, 6).contains(&(x, y)),
                "({x},{y})"
            );
        }
    }
}

#[test]
fn minimal_pair_for_small_ranks() {
    for r in 1..=8 {
        assert!(is_minimal_pell_pair(r), "r = {r}");
    }
}
