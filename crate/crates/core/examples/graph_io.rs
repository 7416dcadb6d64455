use bounded_expansion::graph::{encode_graph6, enumerate, iso, parse_graph, subdivide_uniform, write_edge_list};

fn main() -> bounded_expansion::Result<()> {
    let g = parse_graph("# a 5-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n", None)?;
    let g6 = encode_graph6(&g)?;
    println!("graph6: {g6}");
    let back = parse_graph(&g6, None)?;
    println!("round trip isomorphic: {}", iso::are_isomorphic(&g, &back));

    let sg = subdivide_uniform(&g, 2);
    println!("2-subdivision has {} vertices:", sg.result().n());
    print!("{}", write_edge_list(sg.result()));

    for n in 1..=6 {
        println!("{n} vertices: {} graphs, {} connected", enumerate::all_graphs(n).len(), enumerate::connected_graphs(n).len());
    }
    Ok(())
}
