//! Brute-force search for small squares.

use abelian_magic::group::AbelianGroup;
use abelian_magic::oracle::{
    backtrack_search, exhaustive_side2, SearchConfig, SearchMode, SearchResult,
};

fn main() -> Result<(), abelian_magic::error::Error> {
    for literal in ["9", "3,3"] {
        let g = AbelianGroup::parse(literal)?;
        let found = backtrack_search(&SearchConfig::new(g.clone(), SearchMode::FindOne)?)?;
        if let SearchResult::Found(a) = found.result {
            println!("{g} after {} nodes:\n{a}", found.nodes);
        }
        let orbits = backtrack_search(&SearchConfig::new(g.clone(), SearchMode::CountOrbits)?)?;
        println!("{g}: {:?} squares up to symmetry\n", orbits.result);
    }
    for literal in ["4", "2,2"] {
        let g = AbelianGroup::parse(literal)?;
        let census = exhaustive_side2(&g)?;
        println!(
            "{g}: {} magic squares among 24 placements",
            census.magic_square_count
        );
        for o in &census.orbits {
            let cells: Vec<String> = (0..4)
                .map(|c| o.representative.get(c / 2, c % 2).to_string())
                .collect();
            println!(
                "  [{}] x{}  rectangle {}  diagonals agree {}",
                cells.join(" "),
                o.size,
                o.rectangle,
                o.diagonals_agree
            );
        }
    }
    Ok(())
}
