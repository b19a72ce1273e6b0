use ikverify_core::catalog::{checksum, petersen_graph, rebuild, Catalog};
use ikverify_core::minor::{find_petersen_minor, petersen_family, validate_minor_embedding};
use ikverify_core::moves::{family_closure, ClosureLimits};
use ikverify_core::{canonical_form, is_isomorphic, Graph};

#[test]
fn family_has_seven_members_with_fifteen_edges() {
    let fam = petersen_family();
    assert_eq!(fam.len(), 7);
    assert!(fam.iter().all(|o| o.graph.size() == 15));
    let orders: Vec<usize> = fam.iter().map(|o| o.graph.order()).collect();
    assert_eq!(orders, [6, 7, 7, 8, 8, 9, 10]);
}

#[test]
fn family_contains_the_named_graphs() {
    let named = [
        Graph::complete(6),
        Graph::complete_multipartite(&[3, 3, 1]),
        Graph::complete_multipartite(&[4, 4]).delete_edge(1, 5).unwrap(),
        petersen_graph(),
    ];
    for g in named {
        assert!(
            petersen_family().iter().any(|o| is_isomorphic(&o.graph, &g).is_some()),
            "{g:?}"
        );
    }
}

#[test]
fn family_matches_closure_of_k6() {
    let closure = family_closure(&Graph::complete(6), ClosureLimits::default()).unwrap();
    assert_eq!(closure.len(), 7);
    assert!(closure.collapses.is_empty());
    for o in petersen_family() {
        assert!(closure.contains(&o.graph), "{}", o.name);
    }
}

#[test]
fn members_are_pairwise_minor_free() {
    // Each member is minor-minimal, so no member contains another.
    for o in petersen_family() {
        let (hit, emb) = find_petersen_minor(&o.graph).unwrap();
        assert_eq!(hit.name, o.name);
        assert!(validate_minor_embedding(&o.graph, &hit.graph, &emb));
        for e in o.graph.edges() {
            assert!(find_petersen_minor(&o.graph.delete_edge(e.0, e.1).unwrap()).is_none());
        }
    }
}

#[test]
fn rebuilt_catalog_matches_checksums() {
    let built = rebuild().unwrap();
    let cat = Catalog::load().unwrap();
    assert_eq!(built.len(), cat.entries().len());
    for (a, b) in built.iter().zip(cat.entries()) {
        assert_eq!(a.name, b.name);
        assert_eq!(checksum(&a.graph), checksum(&b.graph));
        assert_eq!(canonical_form(&a.graph).edges, canonical_form(&b.graph).edges);
    }
}
