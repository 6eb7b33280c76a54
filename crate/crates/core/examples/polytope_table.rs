//! Regular polytope counts, with and without star polytopes.
//!
//! cargo run --example polytope_table

use selfsim::polytopes::table;

fn main() {
    println!(" D    convex  with stars  excess");
    for row in table(10) {
        let excess = row
            .star_inclusive
            .checked_sub(row.platonic)
            .map_or_else(|e| e.to_string(), |d| d.to_string());
        println!("{:>2}  {:>8}  {:>10}  {}", row.dim, row.platonic.to_string(), row.star_inclusive.to_string(), excess);
    }
}
