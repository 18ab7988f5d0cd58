//! Upper bounds on the number of connected components of the real locus of
//! a smooth real Fano threefold, computed from Hodge-theoretic input.
//!
//! Two bounds are implemented: the Smith-Thom specialization
//! s <= 1 + h^{1,2} + rho_C, and its Galois refinement (Borel-Swan)
//! s <= 1 + h^{1,2} + rho_C - 2*lambda, where lambda is the rank of
//! (1 + sigma) acting on the geometric Picard lattice. Betti numbers are
//! deliberately not part of the input surface: for Fano threefolds they
//! reduce to exactly these quantities.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("lambda is required for the Borel-Swan bound")]
    MissingLambda,
    #[error("inconsistent Hodge data: {0}")]
    InvalidData(String),
}

/// Input invariants of (a real form of) a Fano threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeData {
    /// Geometric Picard rank rho(X_C).
    pub rho_c: u32,
    /// Real (Galois-invariant) Picard rank, when known.
    pub rho_r: Option<u32>,
    /// Hodge number h^{1,2}(X).
    pub h12: u32,
    /// rk((1 + sigma) Pic(X_C)), when known.
    pub lambda: Option<u32>,
}

impl HodgeData {
    pub fn new(rho_c: u32, h12: u32) -> Self {
        HodgeData {
            rho_c,
            rho_r: None,
            h12,
            lambda: None,
        }
    }

    pub fn validate(&self) -> Result<(), BoundsError> {
        if self.rho_c == 0 {
            return Err(BoundsError::InvalidData("rho_c must be positive".into()));
        }
        if let Some(rho_r) = self.rho_r {
            if rho_r == 0 || rho_r > self.rho_c {
                return Err(BoundsError::InvalidData(format!(
                    "rho_r = {rho_r} must satisfy 1 <= rho_r <= rho_c = {}",
                    self.rho_c
                )));
            }
            if let Some(lambda) = self.lambda {
                if lambda > rho_r {
                    return Err(BoundsError::InvalidData(format!(
                        "lambda = {lambda} exceeds rho_r = {rho_r}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// s <= 1 + h^{1,2} + rho_C.
pub fn smith_thom_bound(d: &HodgeData) -> u32 {
    1 + d.h12 + d.rho_c
}

/// s <= 1 + h^{1,2} + rho_C - 2*lambda; requires lambda.
///
/// The raw value can go negative on inputs violating lambda <= rho_r; it is
/// then clamped to zero and flagged.
pub fn borel_swan_bound(d: &HodgeData) -> Result<u32, BoundsError> {
    Ok(borel_swan_raw(d)?.0)
}

fn borel_swan_raw(d: &HodgeData) -> Result<(u32, bool), BoundsError> {
    let lambda = d.lambda.ok_or(BoundsError::MissingLambda)?;
    let raw = 1 + d.h12 as i64 + d.rho_c as i64 - 2 * lambda as i64;
    if raw < 0 {
        Ok((0, true))
    } else {
        Ok((raw as u32, false))
    }
}

/// Both bounds together with their minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound1: u32,
    pub bound2: Option<u32>,
    pub best: u32,
    /// Set when the refined bound was negative and clamped to zero, which
    /// signals inconsistent input.
    pub clamped: bool,
}

pub fn bound_report(d: &HodgeData) -> Result<BoundReport, BoundsError> {
    d.validate()?;
    let bound1 = smith_thom_bound(d);
    let (bound2, clamped) = match d.lambda {
        None => (None, false),
        Some(_) => {
            let (b, c) = borel_swan_raw(d)?;
            (Some(b), c)
        }
    };
    Ok(BoundReport {
        bound1,
        bound2,
        best: bound2.map_or(bound1, |b| b.min(bound1)),
        clamped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(rho_c: u32, h12: u32, lambda: Option<u32>) -> HodgeData {
        HodgeData {
            rho_c,
            rho_r: None,
            h12,
            lambda,
        }
    }

    #[test]
    fn smith_thom_values() {
        // Intersection of two quadrics: rho_C = 1, h12 = 2.
        assert_eq!(smith_thom_bound(&data(1, 2, None)), 4);
        assert_eq!(smith_thom_bound(&data(1, 0, None)), 2);
        // The (3,3)-divisor case: rho_C = 2, h12 = 3.
        assert_eq!(smith_thom_bound(&data(2, 3, None)), 6);
    }

    #[test]
    fn borel_swan_values() {
        // (1,1,1,1)-divisor in (P^1)^4 with lambda = 2.
        assert_eq!(borel_swan_bound(&data(4, 1, Some(2))).unwrap(), 2);
        // lambda = 0 reduces to Smith-Thom.
        let d = data(3, 5, Some(0));
        assert_eq!(borel_swan_bound(&d).unwrap(), smith_thom_bound(&d));
        assert_eq!(borel_swan_bound(&data(2, 3, Some(1))).unwrap(), 4);
    }

    #[test]
    fn missing_lambda() {
        assert_eq!(
            borel_swan_bound(&data(1, 2, None)),
            Err(BoundsError::MissingLambda)
        );
    }

    #[test]
    fn refinement_never_exceeds_smith_thom() {
        for rho_c in 1..8 {
            for h12 in 0..6 {
                for lambda in 0..8 {
                    let d = data(rho_c, h12, Some(lambda));
                    let b2 = borel_swan_bound(&d).unwrap();
                    assert!(b2 <= smith_thom_bound(&d));
                    if lambda == 0 {
                        assert_eq!(b2, smith_thom_bound(&d));
                    }
                }
            }
        }
    }

    #[test]
    fn clamping_is_reported() {
        let r = bound_report(&data(1, 0, Some(5))).unwrap();
        assert_eq!(r.bound2, Some(0));
        assert!(r.clamped);
        assert_eq!(r.best, 0);
    }

    #[test]
    fn validation_rules() {
        let mut d = data(2, 1, Some(2));
        d.rho_r = Some(1);
        assert!(d.validate().is_err()); // lambda > rho_r
        let mut d2 = data(2, 1, None);
        d2.rho_r = Some(3);
        assert!(d2.validate().is_err()); // rho_r > rho_c
        let mut d3 = data(4, 1, Some(2));
        d3.rho_r = Some(2);
        assert!(d3.validate().is_ok());
    }
}
