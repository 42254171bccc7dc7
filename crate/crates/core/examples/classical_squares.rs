//! Integer magic squares and integer Kotzig arrays.

use abelian_magic::classical::{int_kotzig, int_magic_square};

fn main() -> Result<(), abelian_magic::error::Error> {
    for n in [3, 4, 6] {
        let a = int_magic_square(n)?;
        println!("side {n}, constant {}", a.magic_constant());
        for row in a.rows() {
            println!(
                "{}",
                row.iter().map(|v| format!("{v:>3}")).collect::<String>()
            );
        }
    }
    let k = int_kotzig(3, 5)?;
    println!("3x5 Kotzig array, column sums {:?}", k.column_sums());
    for i in 0..k.rows() {
        println!("{:?}", k.row(i));
    }
    Ok(())
}
