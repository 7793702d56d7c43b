use alloc::vec::Vec;

use super::HighestWeight;
use crate::Result;

/// Decomposes `V(λ) ⊗ V(ε_1)`.
///
/// The defining representation is minuscule, so the product is
/// multiplicity free with summands `V(λ ± e_i)` for exactly those shifts that
/// stay dominant. Output order: `λ + e_1, .., λ + e_n, λ - e_1, .., λ - e_n`
/// with non-dominant shifts dropped.
pub fn tensor_with_defining(rank: usize, lambda: &HighestWeight) -> Result<Vec<HighestWeight>> {
    lambda.expect_rank(rank)?;
    let base = lambda.entries();
    let mut out = Vec::with_capacity(2 * rank);
    for i in 0..rank {
        let mut e = base.to_vec();
        e[i] += 1;
        if let Ok(w) = HighestWeight::new(e) {
            out.push(w);
        }
    }
    for i in 0..rank {
        if base[i] == 0 {
            continue;
        }
        let mut e = base.to_vec();
        e[i] -= 1;
        if let Ok(w) = HighestWeight::new(e) {
            out.push(w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn hw(e: &[u32]) -> HighestWeight {
        HighestWeight::new(e.to_vec()).unwrap()
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(
            tensor_with_defining(2, &hw(&[1, 0])).unwrap(),
            vec![hw(&[2, 0]), hw(&[1, 1]), hw(&[0, 0])]
        );
        assert_eq!(tensor_with_defining(2, &hw(&[0, 0])).unwrap(), vec![hw(&[1, 0])]);
        assert_eq!(
            tensor_with_defining(2, &hw(&[1, 1])).unwrap(),
            vec![hw(&[2, 1]), hw(&[1, 0])]
        );
    }
}
