pub mod density;
pub mod error;
pub mod evolution;
pub mod grid;
pub mod phase_space;
pub mod quad;
pub mod quantumness;
pub mod shutter;
pub mod specfun;
pub mod states;
pub mod symplectic;
pub mod tomogram;
pub mod transforms;
pub mod wavefunction;

pub use density::DensityMatrix;
pub use error::{Error, Result};
pub use evolution::{evolve, evolve_free, evolve_oscillator, pde_residual, EvolutionKind, Flow};
pub use grid::{integrate_1d, integrate_2d, Grid1D};
pub use phase_space::{WignerField, WignerFunction};
pub use quantumness::{classify_state, ClassifyConfig, QuantumnessReport, Verdict};
pub use states::{FockState, GaussianState};
pub use symplectic::{apply_canonical, compose, frame_matrix, inverse, SymplecticMatrix};
pub use tomogram::{FnTomogram, SampledTomogram, TimeTomogram, Tomogram};
pub use transforms::{
    density_matrix_from_tomogram, inverse_radon, radon_forward, tomogram_from_wavefunction,
    wigner_from_wavefunction, InverseRadon, InverseRadonConfig, LineGrids, RadonSample,
};
pub use wavefunction::WaveFunction;
