//! Display names for subgroup classes of `G × G`.
//!
//! For `G ≅ S3` the 22 classes carry the names `H1…H22`, recognised by the
//! invariants `(|H|, |p₁H|, |p₂H|, |H ∩ (G×e)|, |H ∩ (e×G)|)`, which separate
//! them. Every other group gets `C1…Cn` in enumeration order.

use crate::orbit::DirectSquare;
use crate::subgroup::{Subgroup, SubgroupClass};

const S3_SIGNATURES: [(usize, usize, usize, usize, usize); 22] = [
    (1, 1, 1, 1, 1),    // e × e
    (2, 2, 1, 2, 1),    // Z/2 × e
    (2, 1, 2, 1, 2),    // e × Z/2
    (2, 2, 2, 1, 1),    // Δ(Z/2)
    (3, 3, 1, 3, 1),    // Z/3 × e
    (3, 1, 3, 1, 3),    // e × Z/3
    (3, 3, 3, 1, 1),    // Δ(Z/3)
    (4, 2, 2, 2, 2),    // Z/2 × Z/2
    (6, 6, 1, 6, 1),    // S3 × e
    (6, 1, 6, 1, 6),    // e × S3
    (6, 6, 6, 1, 1),    // Δ(S3)
    (6, 2, 3, 2, 3),    // Z/2 × Z/3
    (6, 3, 2, 3, 2),    // Z/3 × Z/2
    (9, 3, 3, 3, 3),    // Z/3 × Z/3
    (12, 6, 2, 6, 2),   // S3 × Z/2
    (12, 2, 6, 2, 6),   // Z/2 × S3
    (18, 6, 3, 6, 3),   // S3 × Z/3
    (18, 3, 6, 3, 6),   // Z/3 × S3
    (18, 6, 6, 3, 3),   // pairs of equal parity
    (36, 6, 6, 6, 6),   // S3 × S3
    (6, 6, 2, 3, 1),    // (Z/3 × e)·Δ(Z/2)
    (6, 2, 6, 1, 3),    // (e × Z/3)·Δ(Z/2)
];

fn signature(sq: &DirectSquare, h: &Subgroup) -> (usize, usize, usize, usize, usize) {
    let mut p1: Vec<usize> = h.elements().iter().map(|&x| sq.p1(x)).collect();
    let mut p2: Vec<usize> = h.elements().iter().map(|&x| sq.p2(x)).collect();
    p1.sort_unstable();
    p1.dedup();
    p2.sort_unstable();
    p2.dedup();
    let left = h.elements().iter().filter(|&&x| sq.p2(x) == 0).count();
    let right = h.elements().iter().filter(|&&x| sq.p1(x) == 0).count();
    (h.order(), p1.len(), p2.len(), left, right)
}

fn is_s3(sq: &DirectSquare) -> bool {
    sq.base.order() == 6 && !sq.base.is_abelian()
}

/// Names for `classes` (subgroup classes of `sq.square`) and the display
/// order: a permutation of class indices.
pub fn class_labels(sq: &DirectSquare, classes: &[SubgroupClass]) -> (Vec<String>, Vec<usize>) {
    if is_s3(sq) && classes.len() == S3_SIGNATURES.len() {
        let numbers: Option<Vec<usize>> = classes
            .iter()
            .map(|c| {
                let s = signature(sq, &c.representative);
                S3_SIGNATURES.iter().position(|&t| t == s)
            })
            .collect();
        if let Some(numbers) = numbers {
            let mut distinct = numbers.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() == numbers.len() {
                let labels = numbers.iter().map(|n| format!("H{}", n + 1)).collect();
                let mut order: Vec<usize> = (0..classes.len()).collect();
                order.sort_by_key(|&i| numbers[i]);
                return (labels, order);
            }
        }
    }
    let labels = (0..classes.len()).map(|i| format!("C{}", i + 1)).collect();
    (labels, (0..classes.len()).collect())
}
