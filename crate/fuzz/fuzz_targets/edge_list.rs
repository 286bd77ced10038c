#![no_main]

use libfuzzer_sys::fuzz_target;

use privgraph::graph::{read_edge_list, write_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok((g, labels)) = read_edge_list(data) else {
        return;
    };
    // Whatever parses must survive a write and re-read unchanged.
    let text = write_edge_list(&g, &labels);
    let (again, again_labels) = read_edge_list(text.as_bytes()).expect("written edge list parses");
    assert_eq!(again.node_count(), g.node_count());
    assert_eq!(again.edge_count(), g.edge_count());
    for &(u, w) in g.edges() {
        let a = again_labels.id(labels.label(u));
        let b = again_labels.id(labels.label(w));
        if let (Some(a), Some(b)) = (a, b) {
            assert!(again.has_edge(a, b));
        }
    }
});
