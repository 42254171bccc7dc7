//! Magic squares for arbitrary groups of square order.

use abelian_magic::construct::construct_with_route;
use abelian_magic::group::AbelianGroup;
use abelian_magic::verify::verify;

fn main() -> Result<(), abelian_magic::error::Error> {
    let literal = std::env::args().nth(1).unwrap_or_else(|| "4,3,27".into());
    let g = AbelianGroup::parse(&literal)?;
    let c = construct_with_route(&g)?;
    let r = verify(&c.square);
    println!("{g}: side {}, route {}", c.square.side(), c.route);
    println!(
        "{}, magic sum {}",
        r.classification.as_str(),
        r.magic_sum.unwrap()
    );
    if c.square.side() <= 12 {
        print!("{}", c.square);
    }
    for literal in ["2,2", "8"] {
        let g = AbelianGroup::parse(literal)?;
        if let Err(e) = construct_with_route(&g) {
            println!("{g}: {e}");
        }
    }
    Ok(())
}
