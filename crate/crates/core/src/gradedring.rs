//! Degree bookkeeping for weighted hypersurface rings and branch divisors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Generators of positive weight modulo relations of the given degrees,
/// forming a regular sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    generator_weights: Vec<u32>,
    relation_degrees: Vec<u32>,
}

impl GradedPresentation {
    pub fn new(generator_weights: Vec<u32>, relation_degrees: Vec<u32>) -> Result<Self> {
        if generator_weights.is_empty() {
            return Err(Error::Dimension("no generators".into()));
        }
        if generator_weights.contains(&0) || relation_degrees.contains(&0) {
            return Err(Error::Dimension("weights and degrees must be positive".into()));
        }
        Ok(GradedPresentation { generator_weights, relation_degrees })
    }

    pub fn generator_weights(&self) -> &[u32] {
        &self.generator_weights
    }

    pub fn relation_degrees(&self) -> &[u32] {
        &self.relation_degrees
    }

    /// Whether `degree` is a sum of generator weights.
    pub fn is_attained(&self, degree: u32) -> bool {
        let mut reach = vec![false; degree as usize + 1];
        reach[0] = true;
        for k in 1..=degree as usize {
            reach[k] = self.generator_weights.iter().any(|&w| w as usize <= k && reach[k - w as usize]);
        }
        reach[degree as usize]
    }
}

/// Coefficients `0..=n` of `∏(1 − t^r) / ∏(1 − t^w)`.
pub fn hilbert_coeffs(p: &GradedPresentation, n: usize) -> Result<Vec<BigInt>> {
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::from(1);
    for &w in &p.generator_weights {
        // multiply by 1/(1 − t^w)
        let w = w as usize;
        for k in w..=n {
            let prev = series[k - w].clone();
            series[k] += prev;
        }
    }
    for &r in &p.relation_degrees {
        let r = r as usize;
        for k in (r..=n).rev() {
            let prev = series[k - r].clone();
            series[k] -= prev;
        }
    }
    if let Some(k) = series.iter().position(Signed::is_negative) {
        return Err(Error::NegativeHilbertCoefficient(k));
    }
    Ok(series)
}

/// Data relating the canonical bundle of an orbifold to the coarse space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchDegreeProblem {
    /// `ω_orb ≅ O(orb_can)`.
    pub orb_can: i64,
    /// `ω_coarse ≅ O(coarse_can)`.
    pub coarse_can: i64,
    /// `φ*O_coarse(1) ≅ O_orb(pullback_scale)`.
    pub pullback_scale: i64,
}

/// Degree of the branch divisor `H`: squaring `ω_orb ≅ φ*ω_coarse ⊗ O(H/2)`
/// gives `2·orb_can = pullback_scale·(2·coarse_can + deg H)`.
pub fn solve_branch_degree(p: &BranchDegreeProblem) -> Result<i64> {
    let s = p.pullback_scale;
    if s == 0 || (2 * p.orb_can) % s != 0 {
        return Err(Error::BranchDegree(format!(
            "2·{} is not divisible by the pullback scale {}",
            p.orb_can, s
        )));
    }
    Ok(2 * p.orb_can / s - 2 * p.coarse_can)
}

/// Sum of component degrees and whether it meets the target.
pub fn component_degree_sum(components: &[(String, i64)], target: i64) -> (i64, bool) {
    let total = components.iter().map(|(_, d)| d).sum();
    (total, total == target)
}
