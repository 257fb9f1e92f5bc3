//! Enumeration of vertex sequences with a fixed content and of Kostant
//! partitions of a dimension vector.

use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// Height of a dimension vector (sum of entries).
pub fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

/// Content of a vertex sequence: entry v contributes 1 to coordinate v-1.
pub fn sequence_content(rank: usize, seq: &[usize]) -> Vec<i64> {
    let mut beta = vec![0i64; rank];
    for &v in seq {
        beta[v - 1] += 1;
    }
    beta
}

/// All sequences (i_1, ..., i_d) of vertices with content `beta`, in
/// lexicographic order. The empty vector yields the empty sequence.
pub fn enumerate_sequences(rs: &RootSystem, beta: &[i64]) -> Result<Vec<Vec<usize>>> {
    if beta.len() != rs.rank {
        return Err(Error::SizeMismatch(format!(
            "beta has {} entries for rank {}",
            beta.len(),
            rs.rank
        )));
    }
    if beta.iter().any(|&b| b < 0) {
        return Err(Error::Unsupported("beta must be nonnegative".into()));
    }
    let mut out = Vec::new();
    let mut remaining = beta.to_vec();
    let mut current = Vec::new();
    fn rec(
        remaining: &mut [i64],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(current.clone());
            return;
        }
        for v in 1..=remaining.len() {
            if remaining[v - 1] > 0 {
                remaining[v - 1] -= 1;
                current.push(v);
                rec(remaining, current, out);
                current.pop();
                remaining[v - 1] += 1;
            }
        }
    }
    rec(&mut remaining, &mut current, &mut out);
    Ok(out)
}

/// A Kostant partition: multiplicity per positive root, indexed by the
/// root-system ordering. Zero multiplicities are kept so the vector length
/// always equals the number of positive roots.
pub type KostantPartition = Vec<i64>;

/// All Kostant partitions of `beta`, by bounded backtracking over the
/// positive roots in the fixed root-system order.
pub fn enumerate_kostant(rs: &RootSystem, beta: &[i64]) -> Result<Vec<KostantPartition>> {
    if beta.len() != rs.rank {
        return Err(Error::SizeMismatch(format!(
            "beta has {} entries for rank {}",
            beta.len(),
            rs.rank
        )));
    }
    if beta.iter().any(|&b| b < 0) {
        return Err(Error::Unsupported("beta must be nonnegative".into()));
    }
    let roots = rs.positive_roots_alpha();
    let mut out = Vec::new();
    let mut mults = vec![0i64; roots.len()];
    let mut remaining = beta.to_vec();
    fn rec(
        roots: &[Vec<i64>],
        idx: usize,
        remaining: &mut Vec<i64>,
        mults: &mut Vec<i64>,
        out: &mut Vec<KostantPartition>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            let mut m = mults.clone();
            for x in m.iter_mut().skip(idx) {
                *x = 0;
            }
            out.push(m);
            return;
        }
        if idx == roots.len() {
            return;
        }
        let root = &roots[idx];
        let max_mult = remaining
            .iter()
            .zip(root)
            .filter(|(_, &r)| r > 0)
            .map(|(&rem, &r)| rem / r)
            .min()
            .unwrap_or(0);
        for m in 0..=max_mult {
            mults[idx] = m;
            for (rem, &r) in remaining.iter_mut().zip(root) {
                *rem -= m * r;
            }
            rec(roots, idx + 1, remaining, mults, out);
            for (rem, &r) in remaining.iter_mut().zip(root) {
                *rem += m * r;
            }
        }
        mults[idx] = 0;
    }
    rec(roots, 0, &mut remaining, &mut mults, &mut out);
    Ok(out)
}

/// Right action of a permutation on a sequence: (i.w)_k = i_{w(k)},
/// with w given 0-based as `w[k] = w(k)`.
pub fn sequence_permute(seq: &[usize], w: &[usize]) -> Result<Vec<usize>> {
    if seq.len() != w.len() {
        return Err(Error::SizeMismatch(format!(
            "sequence of length {} under permutation of length {}",
            seq.len(),
            w.len()
        )));
    }
    Ok(w.iter().map(|&k| seq[k]).collect())
}

/// The simple transposition s_k of {0, ..., d-1}, k 1-based.
pub fn transposition(d: usize, k: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (0..d).collect();
    w.swap(k - 1, k);
    w
}

/// Composition w(v(.)): applying `compose(w, v)` equals applying v then w
/// under the right action.
pub fn compose(w: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&k| w[k]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, TypeTag};

    #[test]
    fn sequences_a2() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        assert_eq!(
            enumerate_sequences(&rs, &[1, 1]).unwrap(),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(enumerate_sequences(&rs, &[1, 2]).unwrap().len(), 3);
        assert_eq!(enumerate_sequences(&rs, &[0, 0]).unwrap(), vec![vec![]]);
    }

    #[test]
    fn sequence_counts_match_multinomials_and_brute_force() {
        let rs = build_root_system(TypeTag::A, 3).unwrap();
        for beta in [[2, 1, 0], [1, 1, 1], [2, 2, 1], [0, 3, 2]] {
            let seqs = enumerate_sequences(&rs, &beta).unwrap();
            let d: i64 = beta.iter().sum();
            let fact = |n: i64| (1..=n).product::<i64>();
            let expect = fact(d) / beta.iter().map(|&b| fact(b)).product::<i64>();
            assert_eq!(seqs.len() as i64, expect);
            // brute force: filter all of I^d
            let mut count = 0;
            let n = 3usize;
            let total = (n as u64).pow(d as u32);
            for code in 0..total {
                let mut c = code;
                let mut content = vec![0i64; n];
                for _ in 0..d {
                    content[(c % n as u64) as usize] += 1;
                    c /= n as u64;
                }
                if content == beta {
                    count += 1;
                }
            }
            assert_eq!(seqs.len(), count);
            for s in &seqs {
                assert_eq!(sequence_content(3, s), beta);
            }
        }
    }

    #[test]
    fn kostant_a2() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        // beta = a1 + a2: {a1+a2} and {a1, a2}
        let parts = enumerate_kostant(&rs, &[1, 1]).unwrap();
        assert_eq!(parts.len(), 2);
        // beta = a1 + 2 a2: {a2, a1+a2} and {2a2, a1}
        assert_eq!(enumerate_kostant(&rs, &[1, 2]).unwrap().len(), 2);
        // a simple root has exactly one partition
        assert_eq!(enumerate_kostant(&rs, &[1, 0]).unwrap().len(), 1);
        for parts in [
            enumerate_kostant(&rs, &[1, 1]).unwrap(),
            enumerate_kostant(&rs, &[2, 2]).unwrap(),
        ] {
            for m in parts {
                let mut sum = vec![0i64; 2];
                for (mult, root) in m.iter().zip(rs.positive_roots_alpha()) {
                    for (s, r) in sum.iter_mut().zip(root) {
                        *s += mult * r;
                    }
                }
                assert!(sum == vec![1, 1] || sum == vec![2, 2]);
            }
        }
    }

    #[test]
    fn kostant_d4_sums_verify() {
        let rs = build_root_system(TypeTag::D, 4).unwrap();
        let beta = [1, 2, 1, 1];
        for m in enumerate_kostant(&rs, &beta).unwrap() {
            let mut sum = vec![0i64; 4];
            for (mult, root) in m.iter().zip(rs.positive_roots_alpha()) {
                for (s, r) in sum.iter_mut().zip(root) {
                    *s += mult * r;
                }
            }
            assert_eq!(sum, beta);
        }
    }

    #[test]
    fn permute_examples() {
        assert_eq!(
            sequence_permute(&[1, 2], &transposition(2, 1)).unwrap(),
            vec![2, 1]
        );
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(sequence_permute(&[1, 2, 2], &id).unwrap(), vec![1, 2, 2]);
        // s1 then s2 as one permutation
        let w = compose(&transposition(3, 1), &transposition(3, 2));
        assert_eq!(sequence_permute(&[1, 2, 2], &w).unwrap(), vec![2, 2, 1]);
        assert!(sequence_permute(&[1, 2], &id).is_err());
    }

    #[test]
    fn right_action_axiom() {
        // (s.w).v = s.(wv) over a few random-ish permutations
        let perms = [
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![3, 2, 1, 0],
            vec![2, 0, 3, 1],
        ];
        let s = vec![1, 2, 2, 3];
        for w in &perms {
            for v in &perms {
                let lhs =
                    sequence_permute(&sequence_permute(&s, w).unwrap(), v).unwrap();
                let rhs = sequence_permute(&s, &compose(w, v)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
