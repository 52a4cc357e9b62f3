use rootmat_core::matroid::{classical_circuits, DEFAULT_CIRCUIT_BUDGET};
use rootmat_core::{Family, LinearMatroid, RootSystem};

#[test]
fn shape_catalogue_equals_brute_force() {
    let cases = (1..=5)
        .map(|n| (Family::A, n))
        .chain((2..=5).map(|n| (Family::B, n)))
        .chain((4..=5).map(|n| (Family::D, n)));
    for (family, n) in cases {
        let system = RootSystem::build(family, n).unwrap();
        let m = LinearMatroid::from_system(&system);
        let kmax = system.rank() + 1;
        let brute = m.all_circuits_upto(kmax, DEFAULT_CIRCUIT_BUDGET).unwrap();
        let shapes = classical_circuits(family, n, kmax, DEFAULT_CIRCUIT_BUDGET).unwrap();
        println!("{}: {} circuits", system.id(), brute.len());
        assert_eq!(shapes, brute, "{}", system.id());
    }
}
