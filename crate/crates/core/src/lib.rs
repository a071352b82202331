//! Exact-rational computations for finite-dimensional modules of the quantum
//! affine algebra `U_q(sl2-hat)` and of its positive part, the algebra on two
//! generators `x`, `y` subject to the cubic q-Serre relations.
//!
//! A module is built from evaluation parameters, transported to the q-Serre
//! side by `x -> e0+ + K0`, `y -> e1+ + K1`, and its irreducibility there is
//! decided two independent ways: by the Drinfel'd polynomial evaluated at
//! `q^-1 (q - q^-1)^-2`, and by a Burnside dimension count.
//!
//! ```
//! use qserre_core::{analyze, EvalFactor, ModuleSpec, Scalar};
//!
//! let q: Scalar = "2".parse().unwrap();
//! let spec = ModuleSpec::new(q, vec![EvalFactor::new(1, "9/2".parse().unwrap())]);
//! let report = analyze(&spec).unwrap();
//! let verdict = report.aq_verdict.unwrap();
//! assert!(verdict.criterion_value.is_zero());
//! assert_eq!(verdict.witness.unwrap().dim(), 1);
//! ```

pub mod analysis;
pub mod aqbridge;
pub mod drinfeld;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod tdpair;
pub mod uqrep;
pub mod words;

pub use analysis::{analyze, scan_grid, scan_point, AnalysisReport, ScanRow, TdSummary};
pub use aqbridge::{build_aq_pair, AqPair, IrreducibilityVerdict};
pub use drinfeld::DrinfeldData;
pub use error::{Error, ErrorClass, Result};
pub use exactnum::{Polynomial, Scalar};
pub use linalg::{Matrix, Subspace};
pub use tdpair::TdReport;
pub use uqrep::{EvalFactor, ModuleSpec, RelationReport, UqRep, WeightData};
pub use words::{Signature, Word};
