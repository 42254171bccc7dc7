//! Complete mappings and Kotzig arrays over groups.

use abelian_magic::group::AbelianGroup;
use abelian_magic::kotzig::{complete_mapping, kotzig_gamma};

fn main() -> Result<(), abelian_magic::error::Error> {
    let g = AbelianGroup::parse("2,2")?;
    let m = complete_mapping(&g)?;
    println!("complete mapping of {g}: {:?}", m.table());

    let ka = kotzig_gamma(3, &g)?;
    println!("3 rows over {g}:\n{}", ka.as_array());

    let z8 = AbelianGroup::parse("8")?;
    println!("4 rows over {z8}:\n{}", kotzig_gamma(4, &z8)?.as_array());
    match kotzig_gamma(3, &z8) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("3 rows over {z8}: {e}"),
    }
    Ok(())
}
