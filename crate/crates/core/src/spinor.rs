//! Fixed data for `OG(5, 10)`: type `D_5`, the parabolic node `α_5`, and the
//! reduced word `s4 s3 s2 s5 s1 s3 s2 s4 s3 s5` of the longest coset element.

use crate::bstower::{self, GammaConvention, PairingTable};
use crate::rootsys::{CartanMatrix, RootSystem, WeylWord};

pub const PARABOLIC_NODE: usize = 5;

pub const REDUCED_WORD: [usize; 10] = [4, 3, 2, 5, 1, 3, 2, 4, 3, 5];

/// Upper triangle of `⟨γ_k^∨, γ_i⟩` as published; the lower triangle is
/// filled by symmetry in [`reference_table`].
pub const REFERENCE_UPPER: [[i64; 10]; 10] = [
    [2, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 2, 1, 1, 1, 0, 0, 1, 1, 0],
    [0, 0, 2, 0, 1, 1, 0, 1, 0, 1],
    [0, 0, 0, 2, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 2, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 2, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 2, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 2, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
];

pub fn root_system() -> RootSystem {
    RootSystem::new(CartanMatrix::d(5))
}

pub fn reduced_word() -> WeylWord {
    WeylWord::new(REDUCED_WORD.to_vec())
}

pub fn reference_table() -> PairingTable {
    let rows = (0..10)
        .map(|k| {
            (0..10).map(|i| if i >= k { REFERENCE_UPPER[k][i] } else { REFERENCE_UPPER[i][k] }).collect()
        })
        .collect();
    PairingTable::from_rows(rows).expect("10x10")
}

pub fn table_with(convention: GammaConvention) -> PairingTable {
    let rs = root_system();
    let g =
        bstower::gamma_sequence_with(&rs, &reduced_word(), convention).expect("the standard word is reduced");
    bstower::pairing_table(&rs, &g).expect("pairings of roots are integral")
}

/// The computed table for the standard word (prefix convention).
pub fn standard_table() -> PairingTable {
    table_with(GammaConvention::Prefix)
}
