use crate::ricci::MetricParams;
use crate::{Error, Result};

/// Which of `y1..y6` (0-based) scales the `sp(4)` module coupling the
/// quaternionic blocks `a <= b` (0-based) when `Sp(1)^2 x Sp(2)` sits in
/// `Sp(4)` with `Sp(2)` on blocks 3 and 4.
///
/// The diagonal blocks 3, 4 and their coupling form `sp(2)` (`y3`); blocks
/// 1-2 give `m1` (`y4`); the couplings of block 1 with 3 or 4 give `m2`
/// (`y5`) and those of block 2 with 3 or 4 give `m3` (`y6`).
pub fn sp4_slot(a: usize, b: usize) -> Option<usize> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 0) => Some(0),
        (1, 1) => Some(1),
        (2, 2) | (3, 3) | (2, 3) => Some(2),
        (0, 1) => Some(3),
        (0, 2) | (0, 3) => Some(4),
        (1, 2) | (1, 3) => Some(5),
        _ => None,
    }
}

/// Module order of `enumerate_sign_modules(1, 2)`: four diagonal blocks, then
/// off-diagonal modules by block pair.
const SP4_BLOCK_PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (1, 1),
    (2, 2),
    (3, 3),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
];

/// Lifts a six-parameter metric on `sp(1) + sp(1) + sp(2)` to the ten-module
/// decomposition of `sp(4)` under the block-sign involutions.
pub fn expand_sp4_metric(y: &MetricParams) -> Result<MetricParams> {
    if y.len() != 6 {
        return Err(Error::LengthMismatch {
            expected: 6,
            got: y.len(),
        });
    }
    let v = y.as_slice();
    MetricParams::new(
        SP4_BLOCK_PAIRS
            .iter()
            .map(|&(a, b)| v[sp4_slot(a, b).expect("valid block pair")])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_sign_modules;

    #[test]
    fn module_order_matches_enumeration() {
        let dec = enumerate_sign_modules(1, 2).unwrap();
        let pairs: Vec<(usize, usize)> = dec
            .modules()
            .iter()
            .map(|m| {
                assert_eq!(m.block_pairs.len(), 1);
                m.block_pairs[0]
            })
            .collect();
        assert_eq!(pairs, SP4_BLOCK_PAIRS.to_vec());
    }

    #[test]
    fn multiplicity_pattern() {
        let y = MetricParams::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let x = expand_sp4_metric(&y).unwrap();
        let mut counts = [0; 6];
        for v in x.as_slice() {
            counts[*v as usize - 1] += 1;
        }
        assert_eq!(counts, [1, 1, 3, 1, 2, 2]);
        assert_eq!(
            expand_sp4_metric(&MetricParams::ones(6)).unwrap(),
            MetricParams::ones(10)
        );
    }
}
