//! The verification pipeline.
//!
//! For an irreducible system R the pipeline computes two groups on lines:
//! K, generated by symmetries known to preserve M(R), and A, the
//! automorphism group of the incidence graph of the order-3 circuits. Every
//! matroid automorphism preserves the order-3 circuits, so
//! K ⊆ Aut(M(R)) ⊆ A; checking K ⊆ A and |K| = |A| collapses the chain and
//! shows that preserving order-3 circuits characterizes Aut(M(R)).

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rootmat_core::graphauto::{automorphism_group, DEFAULT_SEARCH_BUDGET};
use rootmat_core::incidence::{build_incidence, restrict_to_ground};
use rootmat_core::matroid::DEFAULT_CIRCUIT_BUDGET;
use rootmat_core::{Circuit, Family, LinearMatroid, Perm, PermGroup, RootSystem};

use crate::report::{Certificate, Status, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] rootmat_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// Node budgets for graph searches and circuit enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub search_nodes: u64,
    pub circuit_nodes: u64,
}

impl Budget {
    pub fn standard() -> Self {
        Budget {
            search_nodes: DEFAULT_SEARCH_BUDGET,
            circuit_nodes: DEFAULT_CIRCUIT_BUDGET,
        }
    }

    /// The tier for the largest systems (E₇, E₈) and big cross-checks.
    pub fn extended() -> Self {
        Budget {
            search_nodes: DEFAULT_SEARCH_BUDGET * 100,
            circuit_nodes: DEFAULT_CIRCUIT_BUDGET * 100,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            search_nodes: n,
            circuit_nodes: n,
        }
    }

    /// The budget to use for `system` when none was given explicitly.
    pub fn tier_for(system: &RootSystem) -> Self {
        match system.family() {
            Family::E7 | Family::E8 => Budget::extended(),
            _ => Budget::standard(),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::standard()
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// The closed-form |Aut(M(R))| for an irreducible system, after the
/// quotients by the antipodal map are applied.
pub fn expected_order(system: &RootSystem) -> Option<BigUint> {
    let n = system.rank_param();
    let order = match system.family() {
        Family::A => factorial(n + 1),
        Family::B => (BigUint::one() << (n - 1)) * factorial(n),
        Family::D if n >= 5 => (BigUint::one() << (n - 1)) * factorial(n),
        Family::D | Family::Dprime4 => BigUint::from(576u32),
        Family::E6 => BigUint::from(51_840u32),
        Family::E7 => BigUint::from(1_451_520u32),
        Family::E8 => BigUint::from(348_364_800u32),
        Family::F4 => BigUint::from(1_152u32),
        Family::H3 => BigUint::from(120u32),
        Family::H4 => BigUint::from(14_400u32),
        Family::I2 => factorial(n),
        Family::DirectSum => return None,
    };
    Some(order)
}

/// Generators of the symmetric group on `n` points.
pub fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let cycle: Vec<usize> = (0..n).collect();
    vec![
        Perm::from_cycles(n, &[&[0, 1]]).expect("valid"),
        Perm::from_cycles(n, &[&cycle]).expect("valid"),
    ]
}

/// Automorphisms of an incidence structure, restricted to the ground set.
#[derive(Clone, Debug)]
pub struct IncidenceGroup {
    pub group: PermGroup,
    /// Generators as found by the search, restricted to the ground set.
    pub generators: Vec<Perm>,
    /// The order implied by the search's orbit lengths.
    pub search_order: BigUint,
    pub num_sets: usize,
    pub graph: rootmat_core::ColoredGraph,
}

pub fn incidence_group(
    ground_size: usize,
    circuits: &[Circuit],
    budget: &Budget,
) -> Result<IncidenceGroup, rootmat_core::Error> {
    let sets: Vec<Vec<usize>> = circuits.iter().map(|c| c.elements().to_vec()).collect();
    let graph = build_incidence(ground_size, &sets)?;
    let search = automorphism_group(&graph, budget.search_nodes)?;
    let generators = search
        .generators
        .iter()
        .map(|p| restrict_to_ground(p, ground_size))
        .collect::<Result<Vec<_>, _>>()?;
    let group = PermGroup::from_generators(ground_size, &generators)?;
    Ok(IncidenceGroup {
        group,
        generators,
        search_order: search.order,
        num_sets: sets.len(),
        graph,
    })
}

/// Whether `perm` maps every circuit of `family` onto a member of it.
pub fn preserves(perm: &Perm, family: &[Circuit]) -> bool {
    let set: std::collections::BTreeSet<&[usize]> = family.iter().map(|c| c.elements()).collect();
    family.iter().all(|c| {
        let mut img: Vec<usize> = c.elements().iter().map(|&x| perm.apply(x)).collect();
        img.sort_unstable();
        set.contains(img.as_slice())
    })
}

/// The lower-bound group K and how it was certified.
pub struct KnownGroup {
    pub group: PermGroup,
    pub certificate: Certificate,
    /// Every generator preserves the order-3 circuits.
    pub preserves_c3: bool,
}

/// K for an irreducible system. Rank-2 systems have no parallel lines, so
/// their matroid is uniform and every line permutation is an automorphism;
/// other systems use reflections and the extra symmetries.
pub fn known_group(
    system: &RootSystem,
    matroid: &LinearMatroid,
    c3: &[Circuit],
) -> Result<KnownGroup, rootmat_core::Error> {
    let n = matroid.ground_size();
    if system.rank() <= 2 {
        let pairs_independent = (0..n).all(|i| (i + 1..n).all(|j| matroid.is_independent(&[i, j])));
        let gens = symmetric_generators(n);
        let preserves_c3 = pairs_independent && gens.iter().all(|g| preserves(g, c3));
        return Ok(KnownGroup {
            group: PermGroup::from_generators(n, &gens)?,
            certificate: Certificate::UniformRank2,
            preserves_c3,
        });
    }
    let gens = system.known_group_generators()?;
    let preserves_c3 = gens.iter().all(|g| preserves(g, c3));
    Ok(KnownGroup {
        group: PermGroup::from_generators(n, &gens)?,
        certificate: Certificate::Isometry,
        preserves_c3,
    })
}

fn parse_system(id: &str) -> Result<RootSystem, VerifyError> {
    Ok(id.parse::<RootSystem>()?)
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn budget_report(
    check: &str,
    system: &RootSystem,
    err: rootmat_core::Error,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        check: check.into(),
        system_id: system.id(),
        num_lines: system.num_lines(),
        c3_count: 0,
        aut_order: BigUint::from(0u8),
        expected_order: BigUint::from(0u8),
        known_group_order: BigUint::from(0u8),
        certificate: Certificate::Isometry,
        subgroup_ok: false,
        status: Status::BudgetExceeded,
        timing_ms: elapsed_ms(start),
        detail: Some(err.to_string()),
    }
}

/// Wraps a pipeline: budget overruns become BUDGET_EXCEEDED reports, other
/// errors propagate.
fn run_check(
    check: &str,
    system: &RootSystem,
    body: impl FnOnce() -> Result<VerificationReport, rootmat_core::Error>,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    match body() {
        Ok(mut report) => {
            report.timing_ms = elapsed_ms(start);
            report.decide();
            Ok(report)
        }
        Err(e @ rootmat_core::Error::BudgetExceeded { .. }) => {
            Ok(budget_report(check, system, e, start))
        }
        Err(e) => Err(e.into()),
    }
}

/// Certifies Aut(M(R)) = Aut(G(X, C₃)) = K and compares with the table.
pub fn verify_theorem(
    system_id: &str,
    budget: Option<Budget>,
) -> Result<VerificationReport, VerifyError> {
    let system = parse_system(system_id)?;
    if system.family() == Family::DirectSum {
        return Err(VerifyError::Usage(format!(
            "{system_id} is reducible; the order-3 characterization is checked per irreducible system (use `wreath`)"
        )));
    }
    let budget = budget.unwrap_or_else(|| Budget::tier_for(&system));
    run_check("theorem", &system, || {
        let matroid = LinearMatroid::from_system(&system);
        let c3 = matroid.circuits3();
        let aut = incidence_group(matroid.ground_size(), &c3, &budget)?;
        let known = known_group(&system, &matroid, &c3)?;
        let contained = known.group.is_subgroup_of(&aut.group)?;
        let mut detail = Vec::new();
        if !known.preserves_c3 {
            detail.push("a generator of K does not preserve C3".to_string());
        }
        if aut.search_order != aut.group.order() {
            detail.push(format!(
                "search order {} disagrees with BSGS order {}",
                aut.search_order,
                aut.group.order()
            ));
        }
        let expected = expected_order(&system).expect("irreducible");
        if expected != aut.group.order() {
            detail.push(format!("closed form gives {expected}"));
        }
        Ok(VerificationReport {
            check: "theorem".into(),
            system_id: system.id(),
            num_lines: system.num_lines(),
            c3_count: c3.len(),
            aut_order: aut.group.order(),
            expected_order: expected,
            known_group_order: known.group.order(),
            certificate: known.certificate,
            subgroup_ok: contained && known.preserves_c3 && aut.search_order == aut.group.order(),
            status: Status::Fail,
            timing_ms: 0,
            detail: (!detail.is_empty()).then(|| detail.join("; ")),
        })
    })
}

/// Expands a family list such as `A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12`
/// into system ids. `E`, `F` and `H` stand for all their members.
pub fn parse_family_specs(spec: &str) -> Result<Vec<String>, VerifyError> {
    let bad = |s: &str| VerifyError::Usage(format!("bad family spec {s:?}"));
    let mut ids = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, range) = match item.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (item, None),
        };
        let members: Vec<String> = match (name, range) {
            ("E", None) => ["E6", "E7", "E8"].map(String::from).to_vec(),
            ("F", None) => vec!["F4".into()],
            ("H", None) => ["H3", "H4"].map(String::from).to_vec(),
            (fam @ ("A" | "B" | "D" | "I2"), Some(r)) => {
                let (lo, hi) = match r.split_once("..") {
                    Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
                    None => (r, r),
                };
                let lo: usize = lo.parse().map_err(|_| bad(item))?;
                let hi: usize = hi.parse().map_err(|_| bad(item))?;
                let sep = if fam == "I2" { "_" } else { "" };
                (lo..=hi).map(|k| format!("{fam}{sep}{k}")).collect()
            }
            _ => {
                parse_system(item)?;
                vec![item.to_string()]
            }
        };
        ids.extend(members);
    }
    Ok(ids)
}

/// Runs [`verify_theorem`] for every system in a family list.
pub fn verify_table(
    spec: &str,
    budget: Option<Budget>,
) -> Result<Vec<VerificationReport>, VerifyError> {
    parse_family_specs(spec)?
        .iter()
        .map(|id| verify_theorem(id, budget))
        .collect()
}

/// Full automorphism group of M(R) from the incidence graph of all circuits.
pub fn full_circuit_group(
    system: &RootSystem,
    budget: &Budget,
) -> Result<(IncidenceGroup, Vec<Circuit>), rootmat_core::Error> {
    let matroid = LinearMatroid::from_system(system);
    let all = matroid.all_circuits_upto(system.rank() + 1, budget.circuit_nodes)?;
    Ok((incidence_group(matroid.ground_size(), &all, budget)?, all))
}

/// Lifts a permutation of a block of `len` points starting at `offset`.
fn lift(p: &Perm, offset: usize, degree: usize) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &x) in p.images().iter().enumerate() {
        images[offset + i] = offset + x;
    }
    Perm::from_images(images).expect("lifted permutation")
}

/// Checks Aut(M(ΣpᵢRᵢ)) = Π wr(Sym(pᵢ), Aut(M(Rᵢ))) on a direct sum by
/// brute force over all circuits.
pub fn verify_wreath(
    sum_spec: &str,
    budget: Option<Budget>,
) -> Result<VerificationReport, VerifyError> {
    let system = parse_system(sum_spec)?;
    let budget = budget.unwrap_or_default();
    run_check("wreath", &system, || {
        let degree = system.num_lines();
        let (aut, all) = full_circuit_group(&system, &budget)?;

        let components: Vec<RootSystem> = if system.family() == Family::DirectSum {
            system.components().to_vec()
        } else {
            vec![system.clone()]
        };
        let offsets = if system.family() == Family::DirectSum {
            system.component_offsets()
        } else {
            vec![0]
        };

        let mut classes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (k, c) in components.iter().enumerate() {
            classes.entry(c.id()).or_default().push(k);
        }
        let mut expected = BigUint::one();
        let mut gens = Vec::new();
        for copies in classes.values() {
            let component = &components[copies[0]];
            let (comp_aut, _) = full_circuit_group(component, &budget)?;
            expected *= factorial(copies.len()) * comp_aut.group.order().pow(copies.len() as u32);
            for &k in copies {
                gens.extend(
                    comp_aut
                        .generators
                        .iter()
                        .map(|g| lift(g, offsets[k], degree)),
                );
            }
            for w in copies.windows(2) {
                let mut images: Vec<usize> = (0..degree).collect();
                for i in 0..component.num_lines() {
                    images[offsets[w[0]] + i] = offsets[w[1]] + i;
                    images[offsets[w[1]] + i] = offsets[w[0]] + i;
                }
                gens.push(Perm::from_images(images)?);
            }
        }
        let wreath = PermGroup::from_generators(degree, &gens)?;
        Ok(VerificationReport {
            check: "wreath".into(),
            system_id: system.id(),
            num_lines: degree,
            c3_count: all.len(),
            aut_order: aut.group.order(),
            expected_order: expected,
            known_group_order: wreath.order(),
            certificate: Certificate::Wreath,
            subgroup_ok: wreath.is_subgroup_of(&aut.group)?,
            status: Status::Fail,
            timing_ms: 0,
            detail: None,
        })
    })
}

/// Compares the group from order-3 circuits with the group from all
/// circuits of order at most `kmax` (default rank + 1), by mutual
/// membership.
pub fn oracle_crosscheck(
    system_id: &str,
    kmax: Option<usize>,
    budget: Option<Budget>,
) -> Result<VerificationReport, VerifyError> {
    let system = parse_system(system_id)?;
    let budget = budget.unwrap_or_default();
    let kmax = kmax.unwrap_or(system.rank() + 1);
    run_check("crosscheck", &system, || {
        let matroid = LinearMatroid::from_system(&system);
        let c3 = matroid.circuits3();
        let from_c3 = incidence_group(matroid.ground_size(), &c3, &budget)?;
        let all = matroid.all_circuits_upto(kmax, budget.circuit_nodes)?;
        let from_all = incidence_group(matroid.ground_size(), &all, &budget)?;
        let equal = from_c3.group.equals(&from_all.group)?;
        Ok(VerificationReport {
            check: "crosscheck".into(),
            system_id: system.id(),
            num_lines: system.num_lines(),
            c3_count: c3.len(),
            aut_order: from_c3.group.order(),
            expected_order: from_all.group.order(),
            known_group_order: from_all.group.order(),
            certificate: Certificate::AllCircuits,
            subgroup_ok: equal,
            status: Status::Fail,
            timing_ms: 0,
            detail: Some(format!("{} circuits of order <= {kmax}", all.len())),
        })
    })
}
