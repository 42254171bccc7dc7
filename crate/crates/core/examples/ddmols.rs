//! Doubly diagonal orthogonal Latin squares over finite fields.

use abelian_magic::field::gf_make;
use abelian_magic::latin::{ddmols_prime_power, symmetric_ordering, znzn_square};
use abelian_magic::verify::verify;

fn main() -> Result<(), abelian_magic::error::Error> {
    let f = gf_make(2, 3)?;
    println!(
        "GF(8) modulus {:?}, symmetric ordering {:?}",
        f.modulus(),
        symmetric_ordering(&f)?
    );

    let pair = ddmols_prime_power(5)?;
    println!("side {} valid: {}", pair.side(), pair.is_valid());
    for (a, b) in pair.rows_a().iter().zip(pair.rows_b()) {
        println!("{a:?}  {b:?}");
    }

    let product = ddmols_prime_power(4)?.kronecker(&ddmols_prime_power(5)?);
    println!(
        "4 x 5 product of side {} valid: {}",
        product.side(),
        product.is_valid()
    );

    let sq = znzn_square(7)?;
    println!("Z_7+Z_7 square: {}", verify(&sq).classification.as_str());
    Ok(())
}
