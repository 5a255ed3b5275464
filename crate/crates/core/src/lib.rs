//! Exact certification that a univariate rational polynomial has only real,
//! distinct roots.
//!
//! Two independent certifiers are provided. The interlacing certifier walks
//! the derivative tower `P_{i-1} = P_i' / i` and checks, at each level, that
//! the Euclidean remainder `R` of `P_i` by `P_{i-1}` alternates in sign at
//! the roots of `P_{i-1}`. The Sturm certifier builds the classical chain and
//! tests its leading coefficients. Root isolation by Sturm bisection provides
//! a third, numeric oracle. All decisions are exact: irrational roots are
//! carried as isolating intervals and refined only as far as a strict
//! comparison needs.

pub mod algebraic;
pub mod batch;
pub mod builder;
pub mod conjecture;
pub mod interlace;
pub mod matrix;
pub mod poly;
pub mod quintic;
pub mod rational;
pub mod roots;
pub mod sturm;

pub use algebraic::{Algebraic, AlgebraicError, RealRoot, DEFAULT_BUDGET};
pub use interlace::{certify_all_real, Certificate, DegenerateKind, Verdict};
pub use poly::{discriminant, gcd, DepressedForm, PolyError, Polynomial};
pub use quintic::{QuarticParams, QuinticParams};
pub use rational::{format_rational, parse_rational, Rational, Sign};
pub use roots::{isolate_real_roots, RootSet};
pub use sturm::{
    all_real_rooted_sturm, count_real_roots, sturm_chain, ExtendedRational, SturmChain,
};
