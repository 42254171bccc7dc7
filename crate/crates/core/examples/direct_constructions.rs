//! The explicit two-generator constructions.

use abelian_magic::construct::{
    lemma_2pow_pair, lemma_gl2, lemma_k2m_m, lemma_p_pair, lemma_z4n_zn, obs_z2_z2pow, obs_z4_z2pow,
};
use abelian_magic::verify::verify;

fn main() -> Result<(), abelian_magic::error::Error> {
    let built = [
        ("obs_z2_z2pow(3)", obs_z2_z2pow(3)?),
        ("obs_z4_z2pow(2)", obs_z4_z2pow(2)?),
        ("lemma_2pow_pair(1)", lemma_2pow_pair(1)?),
        ("lemma_k2m_m(3, 3)", lemma_k2m_m(3, 3)?),
        ("lemma_z4n_zn(5)", lemma_z4n_zn(5)?),
        ("lemma_p_pair(3, 1, 3)", lemma_p_pair(3, 1, 3)?),
        ("lemma_gl2(3, 1, 3)", lemma_gl2(3, 1, 3)?),
    ];
    for (name, a) in &built {
        let r = verify(a);
        println!(
            "{name:<24} {:<12} side {:>2}  magic sum {}",
            a.group().to_string(),
            a.side(),
            r.magic_sum.unwrap()
        );
    }
    println!("\nZ_12+Z_3:\n{}", lemma_z4n_zn(3)?);
    Ok(())
}
