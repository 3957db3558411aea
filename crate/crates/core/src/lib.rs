//! Sums of affine Cantor sets: exact witness certification for zero
//! Hausdorff measure in the sum of similarity dimensions, projection
//! scans of Cantor products, and middle-set parameter region maps.
//!
//! Everything a reported certificate depends on is computed in exact
//! rational arithmetic; floating point is used only to screen search
//! candidates before certification.

pub mod amplify;
pub mod atlas;
pub mod error;
pub mod exact;
pub mod ifs;
pub mod input;
pub mod lemmas;
pub mod measure;
pub mod padding;
pub mod report;
pub mod search;
pub mod squares;
pub mod words;

pub use error::Error;
pub use ifs::{AffineCantorSystem, ContractionMap, Orientation, SumSystem};
pub use squares::{ClosenessVerdict, CylinderSquare, WitnessPair};
pub use words::{Word, WordStats};
