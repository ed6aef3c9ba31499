//! Dense complex linear algebra for the handful of qubits and modes used by
//! the channel dilations: Kronecker products, partial traces, Jacobi
//! eigenvalues and von Neumann entropies (bits).

mod density;
mod eigen;
mod matrix;

pub use density::{partial_trace, von_neumann_entropy, DensityMatrix, NEGATIVE_CLIP};
pub use eigen::{
    hermitian_eigenvalues, symmetric_eigen, symmetric_eigenvalues, SymmetricEigen, HERMITIAN_TOLERANCE,
    JACOBI_TOLERANCE,
};
pub use matrix::{kron, ComplexMatrix, RealMatrix};
