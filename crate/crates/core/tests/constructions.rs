mod common;

use common::{Adj, Kind};
use tstrd_core::constructions::{
    construct_by_name, construct_diam2_bound, construct_diametral_path_bound, construct_domset_bound,
    construct_girth_cycle_bound, construct_matching_bound, construct_mindeg_bound, construct_total_domset_bound,
    CertifiedLabeling, CONSTRUCTION_NAMES,
};
use tstrd_core::enumerate::{connected_graphs, random_graphs};
use tstrd_core::families::FamilySpec;
use tstrd_core::labeling::validate_tstrd;
use tstrd_core::{Error, Graph, TheoremId};

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).unwrap()
}

fn cube() -> Graph {
    Graph::new(
        8,
        &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap()
}

/// Checks the certificate with the reference validator and returns the
/// brute-force optimum next to the claimed bound.
fn audit(g: &Graph, cert: &CertifiedLabeling) -> (u32, u32) {
    let a = Adj::of(g);
    assert!(common::is_valid(&a, cert.labeling.labels(), Kind::TotalStrong), "{g:?} {cert:?}");
    assert!(cert.weight() <= cert.claimed_bound);
    let exact = common::weight(&a, Kind::TotalStrong).unwrap();
    assert!(exact <= cert.claimed_bound);
    (exact, cert.claimed_bound)
}

#[test]
fn matching_bound_examples() {
    let c4 = Graph::cycle(4).unwrap();
    let cert = construct_matching_bound(&c4).unwrap();
    assert_eq!(cert.theorem, TheoremId::ThmS);
    assert_eq!(audit(&c4, &cert), (4, 4));

    let ds = FamilySpec::DoubleStar(2, 1).realize().unwrap();
    assert_eq!(audit(&ds, &construct_matching_bound(&ds).unwrap()), (4, 4));

    let p6 = Graph::path(6).unwrap();
    assert_eq!(audit(&p6, &construct_matching_bound(&p6).unwrap()), (6, 7));

    assert_eq!(
        construct_matching_bound(&Graph::complete_bipartite(1, 4).unwrap()).unwrap_err(),
        Error::StarInput
    );
    assert!(matches!(construct_matching_bound(&Graph::path(3).unwrap()), Err(Error::TooSmall { .. })));
}

#[test]
fn matching_bound_fails_on_two_disjoint_edges() {
    let two_k2 = Graph::path(2).unwrap().disjoint_union(&Graph::path(2).unwrap()).unwrap();
    assert!(matches!(
        construct_matching_bound(&two_k2),
        Err(Error::CertificateFailed { weight: 4, bound: 3, valid: true, .. })
    ));
}

#[test]
fn mindeg_examples() {
    for (g, want) in [
        (Graph::cycle(5).unwrap(), (5, 5)),
        (Graph::complete(4).unwrap(), (3, 3)),
        (Graph::path(4).unwrap(), (4, 4)),
    ] {
        assert_eq!(audit(&g, &construct_mindeg_bound(&g).unwrap()), want);
    }
}

#[test]
fn diam2_examples() {
    for (g, want) in [
        (Graph::cycle(5).unwrap(), (5, 5)),
        (Graph::complete_bipartite(1, 4).unwrap(), (4, 4)),
        (Graph::cycle(4).unwrap(), (4, 5)),
    ] {
        assert_eq!(audit(&g, &construct_diam2_bound(&g).unwrap()), want);
    }
    assert_eq!(construct_diam2_bound(&Graph::path(4).unwrap()).unwrap_err(), Error::WrongDiameter);
}

#[test]
fn diametral_path_examples() {
    let k4 = Graph::complete(4).unwrap();
    assert_eq!(audit(&k4, &construct_diametral_path_bound(&k4).unwrap()), (3, 4));
    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    assert_eq!(construct_diametral_path_bound(&k33).unwrap().claimed_bound, 5);
    audit(&k33, &construct_diametral_path_bound(&k33).unwrap());
    let k5 = Graph::complete(5).unwrap();
    assert_eq!(audit(&k5, &construct_diametral_path_bound(&k5).unwrap()), (4, 5));
    assert!(matches!(
        construct_diametral_path_bound(&Graph::cycle(5).unwrap()),
        Err(Error::MinDegreeTooSmall { actual: 2, required: 3 })
    ));
}

#[test]
fn girth_cycle_examples() {
    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    assert_eq!(construct_girth_cycle_bound(&k33).unwrap().claimed_bound, 5);
    audit(&k33, &construct_girth_cycle_bound(&k33).unwrap());
    let q3 = cube();
    assert_eq!(construct_girth_cycle_bound(&q3).unwrap().claimed_bound, 7);
    audit(&q3, &construct_girth_cycle_bound(&q3).unwrap());
    let pet = petersen();
    let cert = construct_girth_cycle_bound(&pet).unwrap();
    assert_eq!(cert.claimed_bound, 9);
    audit(&pet, &cert);

    assert!(matches!(construct_girth_cycle_bound(&Graph::complete(4).unwrap()), Err(Error::GirthTooSmall(3))));
    assert_eq!(construct_girth_cycle_bound(&Graph::path(5).unwrap()).unwrap_err(), Error::AcyclicInput);
}

#[test]
fn domset_examples() {
    let star = Graph::complete_bipartite(1, 5).unwrap();
    assert_eq!(audit(&star, &construct_domset_bound(&star, None).unwrap()), (4, 4));
    let p6 = Graph::path(6).unwrap();
    assert_eq!(audit(&p6, &construct_domset_bound(&p6, None).unwrap()), (6, 6));
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(audit(&c4, &construct_domset_bound(&c4, None).unwrap()), (4, 6));
    assert_eq!(construct_domset_bound(&p6, Some(&[0, 1])).unwrap_err(), Error::NotDominatingSet);
    // the bound is stated with γ, so a larger dominating set can overshoot it
    assert!(matches!(
        construct_domset_bound(&p6, Some(&[1, 4, 5])),
        Err(Error::CertificateFailed { weight: 7, bound: 6, valid: true, .. })
    ));
    let cert = construct_domset_bound(&p6, Some(&[1, 4])).unwrap();
    assert!(validate_tstrd(&p6, &cert.labeling).unwrap().valid);
}

#[test]
fn total_domset_examples() {
    let p4 = Graph::path(4).unwrap();
    assert_eq!(audit(&p4, &construct_total_domset_bound(&p4, None).unwrap()), (4, 4));
    let star = Graph::complete_bipartite(1, 5).unwrap();
    assert_eq!(audit(&star, &construct_total_domset_bound(&star, None).unwrap()), (4, 6));
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(audit(&c6, &construct_total_domset_bound(&c6, None).unwrap()), (6, 8));
    assert_eq!(
        construct_total_domset_bound(&p4, Some(&[0, 3])).unwrap_err(),
        Error::NotTotalDominatingSet
    );
}

/// Every construction certifies on every applicable connected graph of
/// order at most 6 and on seeded random graphs.
#[test]
fn certificates_hold_on_small_corpora() {
    let mut graphs: Vec<Graph> = (2..=6).flat_map(connected_graphs).collect();
    graphs.extend(random_graphs(30, 8, 0.5, 3).into_iter().filter(Graph::is_connected));
    let mut certified = 0;
    for name in CONSTRUCTION_NAMES {
        for g in &graphs {
            match construct_by_name(name, g) {
                Ok(cert) => {
                    audit(g, &cert);
                    certified += 1;
                }
                Err(Error::CertificateFailed { .. }) => panic!("{name} failed on {g:?}"),
                Err(_) => {}
            }
        }
    }
    assert!(certified > 500);
    assert!(matches!(construct_by_name("nope", &graphs[0]), Err(Error::Parse(_))));
}
