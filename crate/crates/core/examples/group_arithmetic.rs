//! Groups, elements, and moving between presentations.

use abelian_magic::group::{abelian_groups_of_order, crt_isomorphism, AbelianGroup};

fn main() -> Result<(), abelian_magic::error::Error> {
    let g = AbelianGroup::parse("12,3")?;
    println!(
        "{g}: order {}, primary moduli {:?}",
        g.order(),
        g.primary_moduli()
    );
    println!(
        "involutions: {}, has a complete mapping: {}",
        g.involution_count(),
        g.in_class_g()
    );

    let x = g.element(&[7, 2])?;
    let y = g.element(&[9, 1])?;
    println!("{x} + {y} = {}", &x + &y);
    println!("-{x} = {}", -&x);
    println!("sum of all elements: {}", g.element_sum());

    let h = AbelianGroup::parse("4,3,3")?;
    let iso = crt_isomorphism(&g, &h)?;
    println!("{x} in {h}: {}", iso.apply(&x)?);

    println!("groups of order 144:");
    for g in abelian_groups_of_order(144) {
        println!("  {g}");
    }
    Ok(())
}
