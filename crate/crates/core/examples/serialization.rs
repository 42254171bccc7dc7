//! Writing and reading arrays in the supported text formats.

use abelian_magic::construct::construct;
use abelian_magic::group::AbelianGroup;
use abelian_magic::io::{from_csv, from_json, serialize, Format};

fn main() -> Result<(), abelian_magic::error::Error> {
    let g = AbelianGroup::parse("3,3")?;
    let a = construct(&g)?;
    for format in [Format::Pretty, Format::Csv, Format::Latex, Format::Json] {
        println!("{format:?}:\n{}", serialize(&a, format));
    }
    let back = from_json(&serialize(&a, Format::Json))?;
    println!("JSON round trip: {}", back == a);
    let back = from_csv(&serialize(&a, Format::Csv), &g)?;
    println!("CSV round trip: {}", back == a);
    Ok(())
}
