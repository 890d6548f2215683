//! Partition bookkeeping for the readable labeling of symmetric-tower
//! vertices. The generic engine is label-agnostic; this layer
//! reconstructs partition names from branching edges and Jucys-Murphy
//! contents.

use crate::exactlin::Scalar;
use num_traits::{One, ToPrimitive};

pub type Partition = Vec<usize>;

/// All partitions of n in descending-part form, lexicographically sorted.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, current: &mut Partition, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            current.push(part);
            rec(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn label(p: &Partition) -> String {
    if p.is_empty() {
        "[]".to_string()
    } else {
        let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Add a box of the given content (column − row) if the result is a
/// partition; contents determine addable corners uniquely.
pub fn add_box_with_content(p: &Partition, content: i64) -> Option<Partition> {
    for row in 0..=p.len() {
        let row_len = if row < p.len() { p[row] } else { 0 };
        let c = row_len as i64 - row as i64;
        if c == content {
            // addable at (row, row_len) iff the previous row is longer
            if row == 0 || p[row - 1] > row_len {
                let mut q = p.clone();
                if row < q.len() {
                    q[row] += 1;
                } else {
                    q.push(1);
                }
                return Some(q);
            }
            return None;
        }
    }
    None
}

/// Partition reconstruction from eigenvalue coordinates: given labels at
/// level n and, for one upper vertex, any lower neighbour with its
/// content coordinate, produce the upper label.
pub fn extend_label(lower: &Partition, alpha: &Scalar) -> Option<Partition> {
    let r = alpha.as_rational()?;
    if !r.denom().is_one() {
        return None;
    }
    add_box_with_content(lower, r.numer().to_i64()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn content_growth_reconstructs_the_young_lattice() {
        assert_eq!(add_box_with_content(&vec![1], 1), Some(vec![2]));
        assert_eq!(add_box_with_content(&vec![1], -1), Some(vec![1, 1]));
        assert_eq!(add_box_with_content(&vec![2, 1], 0), Some(vec![2, 2]));
        assert_eq!(add_box_with_content(&vec![2, 1], 2), Some(vec![3, 1]));
        assert_eq!(add_box_with_content(&vec![2, 1], -2), Some(vec![2, 1, 1]));
        assert_eq!(add_box_with_content(&vec![2, 1], 1), None);
    }
}
