//! L-symbols of multipartitions: the shifted first-column invariants used by
//! the Schur element formula.

use super::partition::Multipartition;
use crate::error::{domain_err, Result};

/// The r x L matrix with entries beta^(s)_i = lambda^(s)_i + L - i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSymbol {
    pub l: usize,
    /// beta[s-1][i-1], rows strictly decreasing in i
    pub beta: Vec<Vec<i64>>,
}

pub fn l_symbol(lambda: &Multipartition, l: usize) -> Result<LSymbol> {
    if l < lambda.length() {
        return domain_err(format!(
            "symbol length {l} is smaller than the number of parts {}",
            lambda.length()
        ));
    }
    let beta = (1..=lambda.r())
        .map(|s| {
            (1..=l)
                .map(|i| lambda.component(s).part(i) as i64 + l as i64 - i as i64)
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    for row in &beta {
        debug_assert!(row.windows(2).all(|w| w[0] > w[1]));
    }
    Ok(LSymbol { l, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::Partition;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn symbol_values() {
        let s = l_symbol(&mp(&[&[1], &[]]), 1).unwrap();
        assert_eq!(s.beta, vec![vec![1], vec![0]]);

        let s = l_symbol(&mp(&[&[2], &[]]), 2).unwrap();
        assert_eq!(s.beta, vec![vec![3, 0], vec![1, 0]]);

        let s = l_symbol(&mp(&[&[], &[]]), 1).unwrap();
        assert_eq!(s.beta, vec![vec![0], vec![0]]);

        assert!(l_symbol(&mp(&[&[1, 1], &[]]), 1).is_err());
    }
}
