use thiserror::Error;

/// Which exactness condition of `0 -> A -> G -> B -> 0` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactnessFailure {
    KernelMapNotInjective,
    QuotientMapNotSurjective,
    ImageDiffersFromKernel,
}

/// Which commuting condition of a morphism of extensions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Square {
    /// `phi_G . k = l . phi_A`
    Left,
    /// `g . phi_G = f`
    Right,
    /// `phi_G . s = t`
    Section,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty group specification")]
    EmptySpec,

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a homomorphism: h({x}*{y}) != h({x})*h({y})")]
    NotAHom { x: usize, y: usize },

    #[error("map does not send the identity to the identity")]
    IdentityNotPreserved,

    #[error("map has wrong shape: {0}")]
    BadShape(String),

    #[error("budget exceeded: {needed} > {budget} ({what})")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("not exact ({which:?}) at element {witness}")]
    NotExact { which: ExactnessFailure, witness: usize },

    #[error("not a section: f(s({0})) != {0}")]
    NotASection(usize),

    #[error("diagram fails ({square:?}) at element {witness}")]
    DiagramFailure { square: Square, witness: usize },

    #[error("groups over different bases")]
    MismatchedBase,

    #[error("not an action: {0}")]
    NotAnAction(String),

    #[error("map is not equivariant at m = {m}, b = {b}")]
    NotEquivariant { m: usize, b: usize },

    #[error("group is not abelian: {x}*{y} != {y}*{x}")]
    NotAbelian { x: usize, y: usize },

    #[error("value {value} at point {point} lies outside the kernel image")]
    ValueOutsideKernel { point: usize, value: usize },

    #[error("word is not in the kernel of the fold map")]
    NotInKernel,

    #[error("factorization failed: {0}")]
    FactorizationFailure(String),

    #[error("uniqueness failed: {count} satisfiers")]
    UniquenessFailure { count: usize },

    #[error("relation instance fails: chi({g},{b}) * chi({g2},{b2}) != chi({g}*{g2},{b})")]
    WellDefinednessFailure { g: usize, b: usize, g2: usize, b2: usize },

    #[error("recomposed embedding differs from the classical one at g = {0}")]
    MismatchWithClassical(usize),

    #[error("antisymmetry fails for basis pair ({0}, {1})")]
    AntisymmetryFailure(usize, usize),

    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),

    #[error("not a Lie homomorphism on basis pair ({0}, {1})")]
    NotALieHom(usize, usize),

    #[error("not a module: rho([{0},{1}]) != [rho({0}), rho({1})]")]
    NotAModule(usize, usize),

    #[error("iterated bracket at monomial {0} lies outside the kernel")]
    BracketOutsideKernel(String),

    #[error("linear map is not a section of f")]
    NotALinearSection,

    #[error("requested degree {requested} exceeds truncation {bound}")]
    DegreeOverflow { requested: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
