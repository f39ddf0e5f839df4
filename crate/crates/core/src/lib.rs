//! Exact root-system, Chevalley-basis and real-form machinery, and a decision
//! procedure for higher Levi form concavity of minimal orbits in complex flag
//! manifolds.

pub mod chevalley;
pub mod crflag;
pub mod error;
pub mod exactla;
pub mod golden;
pub mod realform;
pub mod report;
pub mod rootsys;
pub mod scalar;

pub use chevalley::{build_chevalley, AlgebraElement, StructureConstants};
pub use crflag::{concavity_verdict, Check, ConcavityVerdict, LeviCategory, ParabolicData};
pub use error::{Error, Result};
pub use exactla::{DefinitenessClass, ExactMatrix};
pub use golden::GoldenTable;
pub use realform::{build_real_form, parse_form, Conjugation, RealForm, RootClass, SatakeDiagram};
pub use report::{Format, Report, ReportRow};
pub use rootsys::{build_root_system, Family, Root, RootSystem, SimpleType};
pub use scalar::{Gauss, Rat};
