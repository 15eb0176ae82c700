//! Exact scalars, vectors, linear and bilinear maps.

mod bilmap;
mod linmap;
mod scalar;

pub use bilmap::BilMap;
pub use linmap::LinMap;
pub use scalar::{Field, FieldSpec, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimError { expected: usize, got: usize },
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("characteristic {0} needs the small-characteristic override")]
    SmallCharacteristic(u64),
    #[error("unrecognised field `{0}`")]
    BadField(String),
    #[error("malformed scalar `{0}`")]
    BadScalar(String),
}

pub(crate) fn dim_check(expected: usize, got: usize) -> Result<(), LinearError> {
    if expected == got {
        Ok(())
    } else {
        Err(LinearError::DimError { expected, got })
    }
}

pub type Vector = Vec<Scalar>;

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn add_into(acc: &mut [Scalar], b: &[Scalar]) {
    debug_assert_eq!(acc.len(), b.len());
    for (x, y) in acc.iter_mut().zip(b) {
        *x += y;
    }
}

/// Concatenation (x, u) of two blocks.
pub fn concat(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().chain(b).cloned().collect()
}

/// A pair of spaces (V₁, V₀) with d: V₁ → V₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVectorSpace {
    pub dim1: usize,
    pub dim0: usize,
    pub d: LinMap,
}

impl TwoVectorSpace {
    pub fn new(d: LinMap) -> Self {
        TwoVectorSpace { dim1: d.cols(), dim0: d.rows(), d }
    }

    pub fn zero_map(field: Field, dim1: usize, dim0: usize) -> Self {
        Self::new(LinMap::zero(field, dim0, dim1))
    }
}
