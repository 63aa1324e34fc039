pub mod algebra;
pub mod algebroid;
pub mod category;
pub mod center;
pub mod coefficients;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod linalg;
pub mod quasihopf;
pub mod report;

pub use algebra::{Algebra, Module, Tensor};
pub use algebroid::{BaseRing, HopfAlgebroid, HopfAlgebroidData};
pub use center::CenterElement;
pub use coefficients::{Contramodule, Flavor};
pub use cyclic::{CocyclicModule, CohomologyResult, ModuleAlgebra, Theory};
pub use category::{Biclosed, Category, HomObject, TensorObject};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{intertwiner_space, kernel, quotient_section, solve, tensor_index, Matrix, QuotientSection, Subspace};
pub use quasihopf::{QuasiHopf, QuasiHopfData};
pub use report::{AydReport, CheckReport, CheckResult};
