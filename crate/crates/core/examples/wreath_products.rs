//! Wreath products S wr P: irredundant generating sets built from sets of S and P, irredundant
//! sets of S^n, Hall's criterion for generating S^k, and subdirect products of S x S.

use irk::irredundance::{is_irredundant_generating, m_search, SearchOptions};
use irk::wreath::{
    build_wreath, default_irredundant_set, default_outer_automorphisms, goursat_classify, hall_generates,
    thm10_witness, thm11_witness, twisted_diagonal, GoursatClass,
};
use irk::{PermGroup, Permutation};

fn main() -> irk::Result<()> {
    let a5 = PermGroup::alternating(5);
    let a5_set = default_irredundant_set(&a5)?;
    for (name, top) in [("S3", PermGroup::symmetric(3)), ("S4", PermGroup::symmetric(4)), ("A5", a5.clone())] {
        let top_set = default_irredundant_set(&top)?;
        let w = build_wreath(&a5, &top)?;
        let witness = thm10_witness(&a5, &a5_set, &top, &top_set)?;
        println!(
            "A5 wr {name}: degree {}, order {}, witness of size {} (irredundant {}, generating {:?})",
            w.degree, w.order, witness.size, witness.irredundant, witness.generating
        );
    }
    let w = thm11_witness(&a5_set, 4)?;
    println!("A5^4 on {} points: {} irredundant elements ({})", w.degree, w.size, w.irredundant);

    let small = build_wreath(&PermGroup::symmetric(3), &PermGroup::symmetric(2))?.group;
    let m = m_search(&small, &SearchOptions::default())?;
    println!("m(S3 wr S2) = {} by exhaustive search", m.value);

    let p = |s: &str| Permutation::parse(5, s);
    let vectors = vec![vec![p("(1 2 3 4 5)")?, p("(1 2 3)")?], vec![p("(1 2 3)")?, p("(1 2 3 4 5)")?]];
    let r = hall_generates(&vectors, &a5, &default_outer_automorphisms(&a5))?;
    println!("\nHall: the vectors generate A5^2: {} (direct check {:?})", r.generates, r.direct);
    let twins = vec![vec![p("(1 2 3 4 5)")?, p("(2 3 4 5 1)")?], vec![p("(1 2 3)")?, p("(2 3 4)")?]];
    let r = hall_generates(&twins, &a5, &default_outer_automorphisms(&a5))?;
    println!(
        "Hall: conjugate coordinates generate A5^2: {} (related {:?}, direct {:?})",
        r.generates,
        r.related.map(|t| (t.0, t.1)),
        r.direct
    );

    let c = Permutation::parse(5, "(1 2)")?;
    let diag = twisted_diagonal(&a5, &c);
    let kind = match goursat_classify(&diag, &a5)? {
        GoursatClass::Full => "all of A5 x A5".to_string(),
        GoursatClass::GraphOfAutomorphism { phi, verified } => {
            let pairs: Vec<String> = phi.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
            format!("graph of the automorphism {} (verified {verified})", pairs.join(", "))
        }
        GoursatClass::NotSubdirect { first_onto, second_onto } => {
            format!("not subdirect ({first_onto}, {second_onto})")
        }
    };
    println!("\ndiagonal twisted by {c}: {kind}");
    println!("A5 set used throughout is irredundant generating: {}", is_irredundant_generating(&a5, &a5_set));
    Ok(())
}
