//! Exact rational construction and verification of cyclic dressing chains,
//! Maya-diagram combinatorics, pseudo-Wronskians and rational Painlevé IV/V
//! solutions.

pub mod acceptance;
pub mod algebra;
pub mod chain;
pub mod error;
pub mod latex;
pub mod maya;
pub mod ortho;
pub mod painleve;
pub mod wronskian;

pub use algebra::{
    det_cofactor, det_poly_matrix, format_rational, int, log_derivative_ratio, parse_rational, rat,
    ratfunc_is_constant, PolyMatrix, Polynomial, Rational, RationalFunction,
};
pub use chain::{
    alpha_sampled_verify, build_even_chain, build_odd_chain, chain_parameters, chain_residuals,
    default_alpha_samples, potential_of, verify_chain, AlphaSampledReport, ChainSolution,
    EquationReport, EvenChainInput, Potential, VariableMap, VerificationReport, WTerm,
};
pub use error::Error;
pub use maya::{
    build_diagram, canonicalize, enumerate_structures, flip_chain_of, minimal_flip_chain,
    trivial_flip_chain, uc_flip_chain, CyclicStructure, Degeneracy, Flip, FlipChain, MayaDiagram,
    Sign, Slot, SlotFlip, SlotFlipChain, UniversalCharacter,
};
pub use ortho::{falling_factorial, hermite, laguerre, rising_factorial, AlphaParam};
pub use painleve::{
    okamoto_coincides_with_gh, piv_families, piv_from_chain, piv_residual, pv_from_chain, pv_residual, PIVFamilyMember,
    PIVInstance, PVInstance, PainleveReport,
};
pub use wronskian::{
    check_translation_equivalence_h, check_translation_equivalence_l, hermite_wronskian,
    laguerre_pseudo_wronskian, GaugeExponents, PseudoWronskian,
};
