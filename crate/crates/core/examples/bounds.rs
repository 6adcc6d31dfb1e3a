//! The exact bound recursions, explicit irredundant sets through a given element, and
//! audits of bound claims on small groups.

use irk::bounds::{
    bound_audit, capital_psi, capital_psi_lower_bound, f, f_brute_force, iota_member, lemma18_construct, psi, rational,
    AuditClaim, DEFAULT_N0,
};
use irk::group::builtins::builtin;
use irk::irredundance::SearchOptions;
use irk::wreath::build_wreath;
use irk::{Error, PermGroup, Permutation};

fn main() -> irk::Result<()> {
    for k in 1..=5 {
        println!("f({k}, 1) = {}", f(k, &rational(1, 1))?);
    }
    println!("f(3, 1/2) = {}, brute force {}", f(3, &rational(1, 2))?, f_brute_force(3, &rational(1, 2), 60));
    match f(7, &rational(1, 1)) {
        Err(Error::Intractable(why)) => println!("f(7, 1) is out of reach: {why}"),
        other => println!("f(7, 1) = {other:?}"),
    }

    for (k, l) in [(1, 1), (2, 2), (2, 3)] {
        println!("psi({k}, {l}) = {}", psi(k, l)?);
    }
    println!("Psi(2) = {}", capital_psi(2, DEFAULT_N0)?);
    println!("Psi(3) >= {}", capital_psi_lower_bound(3, DEFAULT_N0)?);

    let x = Permutation::parse(12, "(1 2 3)(4 5)(6 7)")?;
    let members: Vec<String> = (1..=5).map(|k| format!("k={k}: {}", iota_member(&x, k))).collect();
    println!("\nx = {x}, displacement {}; in the iota set for {}", x.displacement(), members.join(", "));
    for k in [3, 4] {
        let w = lemma18_construct(&x, k, 12)?;
        let shown: Vec<String> = w.set.iter().map(ToString::to_string).collect();
        println!("k = {k}: {} elements, verified {}", w.set.len(), w.verified);
        println!("  {{{}}}", shown.join(", "));
    }

    println!();
    let opts = SearchOptions::default();
    let s2_wr_s3 = build_wreath(&PermGroup::symmetric(2), &PermGroup::symmetric(3))?.group;
    let s3_wr_s2 = build_wreath(&PermGroup::symmetric(3), &PermGroup::symmetric(2))?.group;
    for (name, g, claim) in [
        ("S2 wr S3", s2_wr_s3, AuditClaim::Lemma15 { k: 1 }),
        ("S3 wr S2", s3_wr_s2, AuditClaim::Lemma2 { block_size: 3 }),
        ("A6", builtin("A6")?, AuditClaim::Thm2),
    ] {
        let r = bound_audit(&g, &claim, &opts)?;
        let observed = r.observed.as_deref().unwrap_or("-");
        let bound = r.bound.as_deref().unwrap_or("-");
        println!("{} on {name}: m = {observed}, bound {bound}, verdict {:?} ({})", r.claim, r.verdict, r.hypothesis);
    }
    Ok(())
}
