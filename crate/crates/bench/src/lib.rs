//! Benchmark fixtures.

use dchain_core::{hermite, rat, AlphaParam, CyclicStructure, MayaDiagram, PolyMatrix};

/// Matrix `[H_{i+j}]` of size `n`.
pub fn hankel_hermite(n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| hermite(i + j)).unwrap()
}

/// Staircase diagram `(0, 2, 4, ...)` of length `m`.
pub fn staircase(m: usize) -> MayaDiagram {
    MayaDiagram::new((0..m as i64).map(|i| 2 * i).collect()).unwrap()
}

/// A 5-cyclic structure with two second-type blocks.
pub fn odd_structure() -> CyclicStructure {
    CyclicStructure::gh(vec![(1, 1), (3, 1)]).unwrap()
}

/// Slots of the `(3,1)` even case.
pub fn even_structure() -> (CyclicStructure, CyclicStructure) {
    (CyclicStructure::gh(vec![(1, 2)]).unwrap(), CyclicStructure::trivial())
}

pub fn alpha() -> AlphaParam {
    AlphaParam::new(rat(1, 3)).unwrap()
}
