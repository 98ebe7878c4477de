//! Exact computation of the topology of real algebraic plane and space curves.
//!
//! The library builds a straight-line graph isotopic to the real solution set
//! of one bivariate polynomial (a plane curve) or of a pair of trivariate
//! polynomials (a space curve).  All certificates are exact: coefficients are
//! arbitrary-precision rationals, points are represented by isolating
//! intervals/boxes with dyadic endpoints, and every equality or sign decision
//! is made symbolically, never by floating-point tolerance.
//!
//! Module map:
//! - [`poly`]: sparse multivariate polynomials over the rationals — arithmetic,
//!   shears, resultants (subresultant PRS), gcd, square-free parts, interval
//!   evaluation, text parsing/printing.
//! - [`roots`]: real-root isolation (Descartes bisection), refinement, real
//!   algebraic numbers and their exact comparison, interval-coefficient roots,
//!   Sturm–Habicht root counting over algebraic points.
//! - [`planetop`]: topology of plane curves — generic-position test, the
//!   parametric generic-position search, fiber decomposition, graph assembly.
//! - [`spacegp`]: generic-position machinery for space curves — weak and
//!   strong tests plus the deterministic shear search that establishes them.
//! - [`spacetop`]: the space pipeline — projection, lifting, shear-parameter
//!   selection, certification against the sheared projection, connection.
//! - [`oracle`]: independent reference implementations (Sylvester determinant,
//!   Sturm counts) used by the test suites to cross-check the main paths.

pub mod error;
pub mod interval;
pub mod oracle;
pub mod planetop;
pub mod poly;
pub mod roots;
pub mod spacegp;
pub mod spacetop;

pub use error::Error;
pub use interval::{Interval, IntervalPolynomial};
pub use poly::{Polynomial, Rational, Var};
pub use roots::{AlgebraicNumber, RootList};

