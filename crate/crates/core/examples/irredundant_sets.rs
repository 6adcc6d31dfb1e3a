//! m(G) and i(G) by exhaustive search, the replacement property, flatness, and refinement
//! of an irredundant set of S_n through the quotient by A_n.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use irk::acceptance::random_irredundant_generating;
use irk::group::builtins::builtin;
use irk::irredundance::{i_search, is_flat, m_search, replacement_property, whiston_refine, Budget, SearchOptions};
use irk::{PermGroup, Permutation};

fn show(set: &[Permutation]) -> String {
    set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> irk::Result<()> {
    let opts = SearchOptions::default();
    for name in ["S3", "S4", "S5", "A4", "A5", "D6", "PSL2(7)"] {
        let g = builtin(name)?;
        let m = m_search(&g, &opts)?;
        let i = i_search(&g, &opts)?;
        println!("{name:>8}: m = {} ({} nodes), i = {}, witness {{{}}}", m.value, m.nodes, i.value, show(&m.witness));
    }

    let capped = SearchOptions { budget: Budget { max_nodes: Some(50), max_seconds: None }, ..Default::default() };
    let partial = m_search(&builtin("A6")?, &capped)?;
    println!("\nA6 with a 50-node budget: m >= {} (exact: {})", partial.value, partial.exact);

    println!();
    for name in ["A4", "A5", "S4"] {
        let r = replacement_property(&builtin(name)?, &opts)?;
        println!("{name}: replacement property {} over {} maximal sets", r.holds, r.sets_checked);
    }
    for name in ["S4", "D8"] {
        let r = is_flat(&builtin(name)?, &opts)?;
        println!("{name}: flat {}, strongly flat {}, {} subgroup classes", r.flat, r.strongly_flat, r.subgroup_classes);
    }

    let s6 = PermGroup::symmetric(6);
    let a6 = PermGroup::alternating(6);
    let set = random_irredundant_generating(&s6, &mut ChaCha8Rng::seed_from_u64(5));
    let r = whiston_refine(&s6, &a6, &set)?;
    println!("\nirredundant generating set of S6: {{{}}}", show(&set));
    println!("refined through S6/A6: {{{}}} (verified {})", show(&r.refined), r.verified);
    Ok(())
}
