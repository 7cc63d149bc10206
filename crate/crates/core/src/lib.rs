pub mod error;
pub mod kneser;
pub mod obstruction;
pub mod polytope;
pub mod simplicial;

pub use error::{Error, Result};
pub use kneser::{Coloring, ColoringConfig, KneserGraph, SarkariaConfig, SarkariaIndex};
pub use obstruction::{
    analyze, Analysis, BoundResult, BoundSource, EngineConfig, ObstructionCertificate, Outcome, Target, Verdict,
};
pub use polytope::{
    CombinatorialType, FaceType, PolygonType, ProductType, SimplexType, WedgeProductType, WedgeTuple,
};
pub use simplicial::{Face, GroundSet, NonFaceConfig, NonFaceStrategy, SimplicialComplex};
