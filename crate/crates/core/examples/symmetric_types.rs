//! The seven types of irredundant generating sets of length n-2 in S_n: build a random
//! instance of each and classify it back.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use irk::classification::{classify_sn, construct_type, equal_up_to_inversion, random_descriptor};
use irk::irredundance::is_irredundant_generating;
use irk::PermGroup;

fn main() -> irk::Result<()> {
    let n = 9;
    let sn = PermGroup::symmetric(n);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for type_id in 1..=7 {
        let d = random_descriptor(type_id, n, &mut rng)?;
        let set = construct_type(&d)?;
        let found = classify_sn(&set)?;
        let round_trip = equal_up_to_inversion(&construct_type(&found)?, &set);
        let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
        println!("type {type_id}: {{{}}}", shown.join(", "));
        println!(
            "  irredundant generating: {}, classified as type {}, round trip: {round_trip}",
            is_irredundant_generating(&sn, &set),
            found.type_id
        );
    }
    Ok(())
}
