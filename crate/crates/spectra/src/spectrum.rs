//! The `Spectrum` container: a canonical ascending set of element orders,
//! with the divisibility-maximal filter and the Σ log s output measure.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Canonical ascending sequence of distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<BigUint>,
}

impl Spectrum {
    pub fn empty() -> Self {
        Spectrum { values: Vec::new() }
    }

    /// Sorts and deduplicates into canonical form.
    pub fn from_values(mut values: Vec<BigUint>) -> Self {
        values.sort();
        values.dedup();
        assert!(!values.iter().any(|v| v.is_zero()), "orders are positive");
        Spectrum { values }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn contains(&self, v: &BigUint) -> bool {
        self.values.binary_search(v).is_ok()
    }

    /// Σ log s over the set, natural logarithm.
    pub fn length_nats(&self) -> f64 {
        let sum: f64 = self
            .values
            .iter()
            .map(|v| v.to_f64().expect("order too large for the log measure").ln())
            .sum();
        // The empty f64 sum is -0.0, which would leak into serialized output.
        sum + 0.0
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Alias emphasizing the role of Σ log s as the output-size measure.
pub fn output_length(s: &Spectrum) -> f64 {
    s.length_nats()
}

/// The divisibility-maximal antichain of `s`. Every element of `s` divides
/// some element of the result and no result element divides another.
///
/// Elements are scanned descending; any proper multiple of a candidate is
/// larger and so already accepted or dominated by an accepted element.
pub fn mu_filter(s: &Spectrum) -> Spectrum {
    let mut accepted: Vec<BigUint> = Vec::new();
    for v in s.values.iter().rev() {
        if !accepted.iter().any(|m| (m % v).is_zero()) {
            accepted.push(v.clone());
        }
    }
    accepted.reverse();
    Spectrum { values: accepted }
}
