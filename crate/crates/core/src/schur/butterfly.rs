use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Applies the orthogonal butterfly `Q` (or `Qᵀ`) in `O(n)`.
///
/// Entries `0` and, for even `n`, `n/2` pass through. Every other index
/// `1 ≤ j < n − j` is mixed with its mirror:
/// `y_j = (x_j + x_{n−j})/√2`, `y_{n−j} = (x_{n−j} − x_j)/√2`.
pub fn apply_q<T: Scalar>(x: &[T], transposed: bool) -> Result<Vec<T>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::InvalidDimension(
            "butterfly of an empty vector".into(),
        ));
    }
    let r = T::FRAC_1_SQRT_2();
    let mut y = x.to_vec();
    for j in 1..=(n - 1) / 2 {
        let (lo, hi) = (x[j], x[n - j]);
        if transposed {
            y[j] = (lo - hi) * r;
            y[n - j] = (lo + hi) * r;
        } else {
            y[j] = (lo + hi) * r;
            y[n - j] = (hi - lo) * r;
        }
    }
    Ok(y)
}
