//! Hilbert coefficients, homological degrees and torsions, and checkers.

mod checks;
mod degrees;
mod hilbert_samuel;
mod superficial;

pub use checks::{
    check_prop38, check_theorem34, inequality_suite, Check, InequalityReport, Invariants, Prop38Report,
    Theorem34Report,
};
pub use degrees::{
    euler_chi1, hdeg, hilbert_coefficients_of, multiplicity, sectional_genus, sv_invariant, torsion, torsions, Chi1,
};
pub use hilbert_samuel::{
    coefficients, hilbert_coefficients, hilbert_samuel_table, HilbertCoefficients, HilbertSamuel, LengthTable,
    TABLE_CAP,
};
pub use superficial::{
    annihilator_length, find_d_sequence_generators, find_superficial, is_d_sequence, is_superficial, random_element,
    DSequenceCheck, DSequenceSearch, DSequenceViolation, Superficiality, SUPERFICIAL_MAX_OFFSET, SUPERFICIAL_WINDOW,
};
