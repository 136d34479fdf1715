use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by instance validation, solvers and reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge endpoint or set element is outside `0..n`.
    IndexOutOfRange { index: usize, bound: usize },
    /// A graph edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// A set weight is negative.
    NegativeWeight { set: usize },
    /// Triangle inequality fails: `w(x,z) > w(x,y) + w(y,z)`.
    TriangleViolation { x: usize, y: usize, z: usize },
    /// A claimed ordering/tour does not visit every item exactly once.
    NotAPermutation,
    /// A coloring skips one of the colors `1..=q`.
    ColorUnused { color: usize },
    /// The instance has no feasible solution.
    Infeasible,
    /// The solver only supports unit weights.
    RequiresUnitWeights,
    /// The algorithm requires a connected input graph.
    Disconnected,
    /// Instance exceeds a solver's configured size limit.
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// A parameter is outside its documented domain.
    InvalidParameter(&'static str),
    /// A caller-supplied sub-solution violates its contract.
    ContractViolation(&'static str),
    /// An internal invariant failed; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (must be < {bound})")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NegativeWeight { set } => write!(f, "negative weight on set {set}"),
            Error::TriangleViolation { x, y, z } => write!(
                f,
                "triangle inequality violated: w({x},{z}) > w({x},{y}) + w({y},{z})"
            ),
            Error::NotAPermutation => write!(f, "not a permutation"),
            Error::ColorUnused { color } => write!(f, "color {color} is never used"),
            Error::Infeasible => write!(f, "instance is infeasible"),
            Error::RequiresUnitWeights => write!(f, "solver requires unit weights"),
            Error::Disconnected => write!(f, "input graph must be connected"),
            Error::SizeLimit {
                what,
                limit,
                actual,
            } => write!(f, "{what} size limit exceeded: {actual} > {limit}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::ContractViolation(msg) => write!(f, "contract violation: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
