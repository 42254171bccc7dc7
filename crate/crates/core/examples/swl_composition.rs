//! Extending a magic square by a Kotzig array over a second group.

use abelian_magic::classical::cyclic_magic_square;
use abelian_magic::construct::swl::swl;
use abelian_magic::figures;
use abelian_magic::group::AbelianGroup;
use abelian_magic::kotzig::kotzig_gamma;
use abelian_magic::verify::verify;

fn main() -> Result<(), abelian_magic::error::Error> {
    let base = figures::z3_z3();
    let ka = kotzig_gamma(3, &AbelianGroup::parse("2,2")?)?;
    let out = swl(&base, &ka)?;
    println!("{} of side {}:\n{out}", out.group(), out.side());

    let base = cyclic_magic_square(4)?;
    let ka = kotzig_gamma(4, &AbelianGroup::parse("3,3")?)?;
    let out = swl(&base, &ka)?;
    let r = verify(&out);
    println!(
        "{} of side {}: {}, magic sum {}",
        out.group(),
        out.side(),
        r.classification.as_str(),
        r.magic_sum.unwrap()
    );
    Ok(())
}
