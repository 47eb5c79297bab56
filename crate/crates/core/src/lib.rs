pub mod bounds;
pub mod eml;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracles;
pub mod polynomial;
pub mod spectra;
pub mod weights;

pub use bounds::{BoundReport, Parameter, Variant};
pub use eml::{EmlContext, MixingReport, TheoremId};
pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet};
pub use polynomial::Polynomial;
pub use spectra::SpectralData;
pub use weights::{Partition, WeightMap};
