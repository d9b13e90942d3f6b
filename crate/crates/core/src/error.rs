use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("vector is not a negative (interior) point")]
    NotInteriorPoint,
    #[error("complex geodesics intersect inside the complex hyperbolic plane (|<c1,c2>| = {0})")]
    ChainsIntersect(f64),
    #[error("reflection order must be at least 2, got {0}")]
    BadOrder(u32),
    #[error("vector is not positive, so it is not a polar vector")]
    NotPolar,
    #[error("matrix is singular")]
    Singular,
    #[error("vector is not null, so it is not a boundary point")]
    NotBoundary,
    #[error("argument is the point at infinity")]
    InfiniteArgument,
    #[error("rotation parameter has modulus {0}, expected 1")]
    NotUnit(f64),
    #[error("radius r = {0} is below 1")]
    BadRadius(f64),
    #[error("no triangle with these distances and angular invariant")]
    NoSuchTriangle,
    #[error("degenerate triangle: a polar inner product vanishes")]
    DegenerateTriangle,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("exponent {exp} out of range for generator {generator} of order {order}")]
    BadWord { generator: u8, exp: u32, order: u32 },
    #[error("isometry is not a Heisenberg translation")]
    NotTranslation,
    #[error("unsupported group type: {0}")]
    UnsupportedType(String),
    #[error("point {0} is not of the form p + x v1 + y v2")]
    NotInOrbitForm(String),
    #[error("isometry fixes the point at infinity")]
    FixesInfinity,
    #[error("isometric sphere is degenerate")]
    DegenerateSphere,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
