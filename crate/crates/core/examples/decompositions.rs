//! M-decompositions of permutations against ordered partitions, the closure G(T, P), and
//! greedy closure covers.

use irk::decomposition::OrderedPartition;
use irk::decomposition::{closure_cover, has_m_property, m_closure, m_decompose, strong_m_decompose, CoverMode};
use irk::Permutation;

fn main() -> irk::Result<()> {
    let p = OrderedPartition::parse("0:9|1:1,2,3|2:4,5,6|3:7,8")?;
    println!("P = {p}, d(P) = {}", p.d());
    for text in ["(1 4 2 5)(3 6)", "(1 4 7)(2 3)(5 9)", "(1 2 3)(4 5)(7 8)"] {
        let h = Permutation::parse(p.degree(), text)?;
        let d = m_decompose(&h, &p)?;
        d.verify(&h, &p)?;
        let betas: Vec<String> = d.betas.iter().map(ToString::to_string).collect();
        println!("h = {h}: alpha = {}, beta0 = {}, betas = [{}], Q = {:?}", d.alpha, d.beta0, betas.join(", "), d.q);
    }

    let h = Permutation::parse(8, "(1 5 2 6 3 7)(4 8)")?;
    let (alpha, beta) = strong_m_decompose(&h, &[0, 1, 2, 3], &[4, 5, 6, 7])?;
    println!("\nstrong: {h} = {alpha} * {beta}");

    let p = OrderedPartition::parse("0:|1:1,2,3|2:4,5,6")?;
    let t = Permutation::parse(6, "(1 2 4)")?;
    let g = m_closure(std::slice::from_ref(&t), &p);
    println!("\nG({{{t}}}, P) has order {} and the M-property: {}", g.order(), has_m_property(&g, &p));

    let h: Vec<Permutation> = ["(1 2)(4 5)", "(1 4)(2 5)(3 6)", "(2 3)", "(5 6)", "(1 2 3)(4 6 5)"]
        .iter()
        .map(|s| Permutation::parse(6, s))
        .collect::<irk::Result<_>>()?;
    let cover = closure_cover(&h, &p, &CoverMode::M)?;
    let shown: Vec<String> = cover.cover.iter().map(ToString::to_string).collect();
    println!("cover of {} elements by {} under the M-closure: [{}]", h.len(), cover.size, shown.join(", "));
    for b in &cover.bounds {
        println!("  {} bound {:?}, within: {:?}", b.lemma, b.value, b.within);
    }
    Ok(())
}
