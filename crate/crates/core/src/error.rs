//! Error types for the core toolkit.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroebnerError {
    #[error("total degree cap {cap} exceeded (reached {reached}) during basis computation")]
    DegreeCap { cap: u32, reached: u32 },
    #[error("pair iteration cap exceeded during basis computation")]
    IterationCap,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChainError {
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("table entry for generator `{gen}` in direction `{var}` references an unknown symbol")]
    NonClosure { gen: String, var: String },
    #[error("derivation table does not commute: residue for generator `{gen}` between directions `{var_a}` and `{var_b}` is {residue}")]
    NonCommuting {
        gen: String,
        var_a: String,
        var_b: String,
        residue: String,
    },
    #[error("coordinate generator `{gen}` has an inconsistent rule or initial value: {detail}")]
    BadCoordinate { gen: String, detail: String },
    #[error("taylor order {requested} exceeds the configured cap {cap}")]
    OrderCap { requested: usize, cap: usize },
    #[error("logarithmic center at zero: indicial system singular at order {order}")]
    LogCenterSingular { order: u32 },
    #[error("logarithmic center at zero: chain data inconsistent at the puncture ({detail})")]
    LogCenterInconsistent { detail: String },
    #[error("continuation path crosses a forbidden locus of variable `{var}`")]
    PathCrossesLocus { var: String },
    #[error("continuation failed to converge within the step-size floor near {point}")]
    NonConvergence { point: String },
    #[error("evaluation failed at sample point: {0}")]
    SampleFailure(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CellError {
    #[error("radius vanishes on the extension grid (fiber {fiber}, sample {sample})")]
    RadiusVanishes { fiber: usize, sample: String },
    #[error("annulus radii violate |r1| < |r2| on the extension grid (fiber {fiber}, sample {sample})")]
    RadiusOrdering { fiber: usize, sample: String },
    #[error("delta parameter must lie in (0,1), got {0}")]
    BadDelta(String),
    #[error("nu-cover is defined only for nu = 1 on fibers of kind {kind}")]
    NuNotAllowed { kind: String },
    #[error("nu-cover divisibility violated: winding {alpha} of the radius is not divisible by {nu}")]
    NuDivisibility { alpha: i64, nu: u32 },
    #[error("extension certificate exhausted: nu-cover would need delta {needed} >= 1")]
    ExtensionExhausted { needed: f64 },
    #[error("cell is not real: radius has imaginary part {im} at a real base sample")]
    NotReal { im: f64 },
    #[error("arc lies outside its fiber: {0}")]
    ArcOutsideFiber(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("calculus step failed inside a cell operation: {0}")]
    Calculus(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("ascending chain did not stabilize within {cap} iterations")]
    StabilizationCap { cap: usize },
    #[error("cofactor ansatz failed up to degree {cap}")]
    CofactorAnsatz { cap: u32 },
    #[error("function vanishes (or nearly vanishes) on the integration contour")]
    NearZeroOnContour,
    #[error("winding residual {residual:.4} from the nearest integer exceeds 0.25")]
    NonIntegerResidual { residual: f64 },
    #[error("persistent boundary zeros after {retries} radius perturbations")]
    BoundaryZeros { retries: usize },
    #[error("function is identically zero on the region")]
    IdenticallyZero,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DominationError {
    #[error("all window coefficients a_p..a_q vanish")]
    WindowAllZero,
    #[error("delta must lie in (0,1), got {0}")]
    BadDelta(f64),
    #[error("derivative domination precondition failed: |a_q| < max of earlier window coefficients")]
    DerivativePrecondition,
    #[error("no admissible radius: the exclusion annuli cover (0, {limit})")]
    NoAdmissibleRadius { limit: f64 },
    #[error("Rouche check found dominant index {index} > 0, contradicting nonvanishing")]
    RoucheInconsistent { index: usize },
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CalculusError {
    #[error("divisor vanishes on the extension: {0}")]
    DivisorVanishes(String),
    #[error("quotient unbounded on the extension: sampled sup {sup:.3e} exceeds the cap {cap:.3e}")]
    QuotientUnbounded { sup: f64, cap: f64 },
    #[error("winding vector {alpha:?} is not divisible by {n}")]
    RootDivisibility { alpha: Vec<i64>, n: u32 },
    #[error("function vanishes on the extension (min sampled modulus {min:.3e})")]
    FunctionVanishes { min: f64 },
    #[error("map does not send the source cell into the target cell (sample {sample})")]
    MembershipFailed { sample: String },
    #[error("base cell length {len} exceeds the supported scope for taylor coefficient extraction")]
    ScopeExceeded { len: usize },
    #[error("function is unbounded near the puncture")]
    UnboundedAtPuncture,
    #[error("source chain has no coordinate generator for variable `{var}`")]
    MissingCoordinate { var: String },
    #[error("closure self-check failed: relative error {err:.3e} at sample {sample}")]
    ClosureCheck { err: f64, sample: String },
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CptError {
    #[error("window is degenerate (p = q); no split possible")]
    WindowDegenerate,
    #[error("boundary dominance tests failed for both window reductions")]
    DominanceFailed,
    #[error("cover verification failed: {0}")]
    VerificationFailed(String),
    #[error("multiple zero of multiplicity {multiplicity} at {at} cannot be covered off-origin")]
    MultipleZero { multiplicity: i64, at: String },
    #[error("subdivision floor reached without isolating zeros")]
    SubdivisionFloor,
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}
