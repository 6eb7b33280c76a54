//! The d∘d = 0 family in 3D and 4D on random polynomial fields.
//!
//! cargo run --example exterior_identities

use selfsim::exterior::{chi, cross4, curl3, curl4_dyad, curl4_vec, div_dyad, div_vec, grad};
use selfsim::random::{seeded_rng, PolySampler};

fn main() -> selfsim::Result<()> {
    let mut rng = seeded_rng(42, 0);
    let s = PolySampler::new(3);

    let f = s.sample(&mut rng, 3);
    let b3 = s.vector(&mut rng, 3, 3);
    let b4 = s.vector(&mut rng, 4, 4);
    let c = s.dyad(&mut rng, 4, 4);

    println!("f = {f}");
    println!("curl grad f        zero: {}", curl3(&grad(&f, 3)?)?.is_zero());
    println!("div curl b         zero: {}", div_vec(&curl3(&b3)?)?.is_zero());
    println!("curl4_dyad chi b   zero: {}", curl4_dyad(&chi(&b4)?)?.is_zero());
    println!("div_dyad curl4 b   zero: {}", div_dyad(&curl4_vec(&b4)?)?.is_zero());
    println!("b . (b x C)        zero: {}", b4.dot(&cross4(&b4, &c)?)?.is_zero());

    // a single component of the 4D curl, for a feel of the output
    let chi_b = chi(&b4)?;
    println!("chi(b)_12 = {}", chi_b.get(1, 2)?);
    Ok(())
}
