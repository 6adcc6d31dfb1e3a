//! Stabilizer chains for builtin and hand-made groups: orders, membership, orbits, blocks.

use irk::group::blocks::{is_primitive, minimal_block_system};
use irk::group::builtins::builtin;
use irk::group::maximality::{verify_almost_maximal, AlmostMaximal};
use irk::{PermGroup, Permutation};

fn main() -> irk::Result<()> {
    for name in ["S6", "A7", "D8", "C12", "PSL2(7)", "PSL2(11)"] {
        let g = builtin(name)?;
        println!("{name:>9}: degree {:>2}, order {:>6}, λ {}", g.degree(), g.order(), g.lambda());
    }

    let m11 = PermGroup::new(
        11,
        vec![Permutation::parse(11, "(1 2 3 4 5 6 7 8 9 10 11)")?, Permutation::parse(11, "(3 7 11 8)(4 10 5 6)")?],
    )?;
    println!("\n<(1..11), (3 7 11 8)(4 10 5 6)> has order {}", m11.order());
    for text in ["(1 2)", "(1 2 3)", "(1 2)(3 4)(5 6)(7 8)", "(3 7 11 8)(4 10 5 6)"] {
        let x = Permutation::parse(11, text)?;
        println!("  {text:<22} member: {}", m11.contains(&x));
    }

    let g =
        PermGroup::new(6, vec![Permutation::parse(6, "(1 2 3)(4 5 6)")?, Permutation::parse(6, "(1 4)(2 5)(3 6)")?])?;
    println!("\n<(1 2 3)(4 5 6), (1 4)(2 5)(3 6)>: order {}, transitive {}", g.order(), g.is_transitive());
    println!("  primitive: {}", is_primitive(&g));
    for b in 1..6 {
        let blocks = minimal_block_system(&g, 0, b);
        let shown: Vec<Vec<usize>> = blocks.blocks().iter().map(|c| c.iter().map(|x| x + 1).collect()).collect();
        println!("  smallest block system joining 1 and {}: {shown:?}", b + 1);
    }
    println!();

    for (n, x) in [(6, vec![0]), (6, vec![0, 1, 2]), (7, vec![0, 1, 2])] {
        let verdict = match verify_almost_maximal(n, &x)? {
            AlmostMaximal::Maximal => "maximal".to_string(),
            AlmostMaximal::UniqueOvergroup { order, .. } => format!("one overgroup, of order {order}"),
            AlmostMaximal::Counterexample { h, .. } => format!("counterexample {h}"),
        };
        println!("(S_X x S_Y) ∩ A_{n}, |X| = {}: {verdict}", x.len());
    }
    Ok(())
}
