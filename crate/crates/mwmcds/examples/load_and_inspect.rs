//! Parse an instance from text and query the graph predicates that the
//! solver is built on: domination, induced connectivity, cut vertices.
//!
//! Run with: cargo run --example load_and_inspect

use mwmcds::graph::{Graph, VertexSet};

fn main() {
    let text = "\
# a path on four vertices
4 3
0 1 1.0
1 2 2.0
2 3 3.0
";
    let g = Graph::parse(text).expect("valid instance");
    println!("n = {}, m = {}, total weight = {}", g.n(), g.m(), g.total_weight());

    for members in [vec![1, 2], vec![0, 3], vec![1]] {
        let s = VertexSet::from_members(g.n(), &members);
        println!(
            "{members:?}: dominating = {}, connected induced = {}, cds = {}",
            g.is_dominating(&s),
            g.is_connected_induced(&s),
            g.is_cds(&s)
        );
    }

    let all = VertexSet::full(g.n());
    println!(
        "cut vertices of the whole path: {:?}",
        g.articulation_vertices_of_induced(&all).members()
    );
}
