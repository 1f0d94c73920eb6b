//! The three Toeplitz test families.
//!
//! Coefficients follow `t_k = (1/2π) ∫_{−π}^{π} f(x) e^{−ikx} dx` with
//! `T[j][k] = t_{j−k}`, evaluated in closed form.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use cscs_core::ToeplitzBands;
use serde::{Deserialize, Serialize};

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Example {
    /// `t_k = (1 + |k|)^{−p}`.
    Ex1,
    /// `f(x) = 5 + x² + 2cos 3x + i(x + sin x)`.
    Ex2,
    /// `f(x) = 10 + 8cos x + 2i sin 5x`.
    Ex3,
}

impl Example {
    pub fn name(self) -> &'static str {
        match self {
            Example::Ex1 => "ex1",
            Example::Ex2 => "ex2",
            Example::Ex3 => "ex3",
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Example {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ex1" | "1" => Ok(Example::Ex1),
            "ex2" | "2" => Ok(Example::Ex2),
            "ex3" | "3" => Ok(Example::Ex3),
            other => Err(BenchError::Config(format!("unknown example '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub example: Example,
    pub n: usize,
    /// Decay exponent; only read for [`Example::Ex1`].
    #[serde(default)]
    pub p: Option<f64>,
}

impl ProblemSpec {
    pub fn new(example: Example, n: usize, p: Option<f64>) -> Self {
        Self { example, n, p }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.n == 0 {
            return Err(BenchError::Config("n must be at least 1".into()));
        }
        if self.example == Example::Ex1 {
            match self.p {
                Some(p) if p.is_finite() && p > 0.0 => {}
                Some(p) => return Err(BenchError::Config(format!("ex1 needs p > 0, got {p}"))),
                None => return Err(BenchError::Config("ex1 needs an exponent p".into())),
            }
        }
        Ok(())
    }

    /// `p` as reported: `None` for the examples that ignore it.
    pub fn reported_p(&self) -> Option<f64> {
        match self.example {
            Example::Ex1 => self.p,
            _ => None,
        }
    }
}

/// `t_k` of the given example.
pub fn coefficient(spec: &ProblemSpec, k: i64) -> f64 {
    match spec.example {
        Example::Ex1 => (1.0 + k.unsigned_abs() as f64).powf(-spec.p.unwrap_or(1.0)),
        Example::Ex2 => {
            let kf = k as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            // 5 + x²
            let mut t = if k == 0 {
                5.0 + PI * PI / 3.0
            } else {
                2.0 * sign / (kf * kf)
            };
            // i·x
            if k != 0 {
                t -= sign / kf;
            }
            t += match k {
                3 | -3 => 1.0,
                1 => 0.5,
                -1 => -0.5,
                _ => 0.0,
            };
            t
        }
        Example::Ex3 => match k {
            0 => 10.0,
            1 | -1 => 4.0,
            5 => 1.0,
            -5 => -1.0,
            _ => 0.0,
        },
    }
}

/// Bands `t_{−(n−1)}, …, t_{n−1}` of the example matrix.
pub fn gen_coeffs(spec: &ProblemSpec) -> Result<ToeplitzBands<f64>, BenchError> {
    spec.validate()?;
    Ok(ToeplitzBands::from_fn(spec.n, |k| {
        coefficient(spec, k as i64)
    })?)
}
