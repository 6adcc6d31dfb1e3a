//! Maximal irredundant generating sets of A_n: build one from a tree form, recover the tree
//! form from a sampled set, and run the uniqueness check.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use irk::classification::{
    build_original_graph, construct_from_tree_form, equal_up_to_inversion, normalize_an, random_tree_form,
    sample_maximal_irredundant, uniqueness_check, SampleOptions, TreeForm,
};
use irk::{PermGroup, Permutation};

fn show(set: &[Permutation]) -> String {
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn describe(t: &TreeForm) -> String {
    let g: Vec<String> = t.g.iter().zip(&t.e).map(|(g, e)| format!("{g}^{e}")).collect();
    format!("s = {}, g = [{}]", t.s, g.join(", "))
}

fn main() -> irk::Result<()> {
    let n = 8;
    let tree = random_tree_form(n, &mut ChaCha8Rng::seed_from_u64(2));
    let set = construct_from_tree_form(&tree)?;
    println!("tree form: {}", describe(&tree));
    println!("set: {{{}}}", show(&set));

    let back = normalize_an(&set)?;
    println!("recovered: {}", describe(&back));
    println!("rebuilds the set up to inverses: {}", equal_up_to_inversion(&construct_from_tree_form(&back)?, &set));

    let a7 = PermGroup::alternating(7);
    let opts = SampleOptions { count: 3, seed: 9, ..Default::default() };
    for sample in sample_maximal_irredundant(&a7, 5, &opts)?.samples {
        let graph = build_original_graph(&sample, &a7)?;
        let edges: Vec<String> = graph.plain_edges().iter().map(|e| format!("{}-{}", e.0 + 1, e.1 + 1)).collect();
        let form = normalize_an(&sample)?;
        println!("\nA7 sample {{{}}}", show(&sample));
        println!("  original graph {}, forest {}", edges.join(" "), graph.is_forest());
        println!("  tree form {}", describe(&form));
    }

    let report = uniqueness_check(&set)?;
    println!("\nuniqueness over {} cuts of the A8 set: {}", report.cuts.len(), report.unique);
    Ok(())
}
