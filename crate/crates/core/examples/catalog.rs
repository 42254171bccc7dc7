//! Construct and verify every group of order n² for a range of sides.

use std::time::Instant;

use abelian_magic::construct::construct_with_route;
use abelian_magic::group::abelian_groups_of_order;
use abelian_magic::verify::verify;

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let mut failures = 0;
    for n in 3..=max {
        for g in abelian_groups_of_order(n * n) {
            let start = Instant::now();
            match construct_with_route(&g) {
                Ok(c) if verify(&c.square).is_magic_square() => {
                    let mu = verify(&c.square).magic_sum.unwrap();
                    println!(
                        "{:<22} {:>3} {:>8.2?}  {mu}  {}",
                        g.to_string(),
                        n,
                        start.elapsed(),
                        c.route
                    );
                }
                other => {
                    failures += 1;
                    println!("{g}: FAILED {:?}", other.err());
                }
            }
        }
    }
    println!("{failures} failures");
}
