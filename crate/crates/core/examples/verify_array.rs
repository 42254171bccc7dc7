//! Checking arrays with the independent verifier.

use abelian_magic::array::GroupArray;
use abelian_magic::figures;
use abelian_magic::group::AbelianGroup;
use abelian_magic::verify::verify;

fn main() -> Result<(), abelian_magic::error::Error> {
    let plain = GroupArray::from_ints(
        AbelianGroup::cyclic(9)?,
        &[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
    )?;
    for (name, a) in [
        ("row-major Z_9", plain),
        ("Z_9 square", figures::z9()),
        ("Z_4 rectangle", figures::mr_z4()),
    ] {
        let r = verify(&a);
        println!("{name}: {}", r.classification.as_str());
        let sums: Vec<String> = r.row_sums.iter().map(ToString::to_string).collect();
        println!("  rows {}", sums.join(" "));
        if let Some(mu) = r.magic_sum {
            println!("  magic sum {mu}");
        }
    }
    Ok(())
}
