mod common;

use std::collections::BTreeSet;

use ikforge::catalog::graph;
use ikforge::graph::canonical_form;
use ikforge::moves::{family_closure, nabla_y, triangles, y_candidates, y_nabla};
use ikforge::store::{load_closure, store_closure};

#[test]
fn every_member_generates_the_same_family() {
    let seed = graph("k7");
    let family = family_closure(&seed).forms();
    for name in ["heawood", "k3311"] {
        let other = family_closure(&graph(name)).forms();
        assert_eq!(other == family, name == "heawood", "{name}");
    }
    let c110 = family_closure(&graph("cousin110"));
    let from_89 = family_closure(&graph("cousin89")).forms();
    assert_eq!(c110.forms(), from_89);
    for m in c110.members.iter().step_by(11) {
        assert_eq!(family_closure(&m.graph).forms(), from_89);
    }
}

#[test]
fn moves_stay_in_family_and_are_inverse() {
    let c = family_closure(&graph("k3311"));
    let forms = c.forms();
    for m in &c.members {
        for t in triangles(&m.graph) {
            let h = nabla_y(&m.graph, t).unwrap();
            assert!(forms.contains(&canonical_form(&h)));
            let back = y_nabla(&h, h.order() - 1).unwrap();
            assert!(!back.simplified);
            assert!(common::isomorphic(&back.graph, &m.graph));
        }
        for v in y_candidates(&m.graph) {
            let r = y_nabla(&m.graph, v).unwrap();
            if !r.simplified {
                assert!(forms.contains(&canonical_form(&r.graph)));
            }
        }
    }
}

#[test]
fn edges_between_members_are_recorded_both_ways() {
    let c = family_closure(&graph("k7"));
    let edges: BTreeSet<(usize, usize)> = c.edges_between.iter().map(|&(a, b, _)| (a, b)).collect();
    for &(a, b, kind) in &c.edges_between {
        assert!(a < c.len() && b < c.len());
        assert!(edges.contains(&(b, a)), "{a} -> {b} ({kind:?}) has no inverse");
    }
}

#[test]
fn stored_closures_reload() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["k7", "cousin110"] {
        let c = family_closure(&graph(name));
        let path = dir.path().join(format!("{name}.jsonl"));
        store_closure(&path, &c).unwrap();
        let loaded = load_closure(&path).unwrap();
        assert_eq!(loaded.len(), c.len());
        let forms: BTreeSet<_> = loaded.iter().map(|l| l.form.clone()).collect();
        assert_eq!(forms, c.forms());
        let depths: Vec<u64> = loaded.iter().map(|l| l.meta["depth"].as_u64().unwrap()).collect();
        assert_eq!(depths[0], 0);
        assert!(depths.windows(2).all(|w| w[0] <= w[1]));
    }
}
