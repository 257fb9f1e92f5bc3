//! Cartan data, weight-lattice arithmetic, simple reflections, and the
//! positive roots of a fixed simply-laced type.
//!
//! Weights are stored in fundamental-weight coordinates, so pairing with a
//! simple coroot is a coordinate read. Vertex numbering follows Bourbaki
//! and is 1-based throughout the public API.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Field, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum TypeTag {
    A,
    D,
    E,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A => write!(f, "A"),
            TypeTag::D => write!(f, "D"),
            TypeTag::E => write!(f, "E"),
        }
    }
}

impl std::str::FromStr for TypeTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(TypeTag::A),
            "D" | "d" => Ok(TypeTag::D),
            "E" | "e" => Ok(TypeTag::E),
            other => Err(Error::Unsupported(format!("type tag {other:?}"))),
        }
    }
}

/// Element of the weight lattice in fundamental-weight coordinates:
/// `coords[i-1]` equals the pairing with the i-th simple coroot.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight attached to vertex i (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Weight { coords }
    }

    /// Pairing with the i-th simple coroot (1-based).
    pub fn pair(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

/// Root system of a fixed ADE type with enumerated positive roots.
///
/// Positive roots are listed in lexicographic order of their simple-root
/// coordinates, which fixes every downstream enumeration order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub type_tag: TypeTag,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Weight>,
    /// The same roots in simple-root coordinates, in matching order.
    positive_roots_alpha: Vec<Vec<i64>>,
}

/// Undirected Dynkin diagram edges (1-based, i < j), Bourbaki numbering.
pub fn dynkin_edges(type_tag: TypeTag, rank: usize) -> Result<Vec<(usize, usize)>> {
    match (type_tag, rank) {
        (TypeTag::A, n) if n >= 1 => Ok((1..n).map(|i| (i, i + 1)).collect()),
        (TypeTag::D, n) if n >= 4 => {
            let mut e: Vec<(usize, usize)> = (1..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n - 1));
            e.push((n - 2, n));
            Ok(e)
        }
        (TypeTag::E, n @ (6 | 7 | 8)) => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (2, 4), (5, 6)];
            if n >= 7 {
                e.push((6, 7));
            }
            if n == 8 {
                e.push((7, 8));
            }
            e.sort();
            Ok(e)
        }
        (t, n) => Err(Error::Unsupported(format!("({t}, {n})"))),
    }
}

impl RootSystem {
    /// Coxeter number of the type.
    pub fn coxeter_number(&self) -> usize {
        match (self.type_tag, self.rank) {
            (TypeTag::A, n) => n + 1,
            (TypeTag::D, n) => 2 * n - 2,
            (TypeTag::E, 6) => 12,
            (TypeTag::E, 7) => 18,
            (TypeTag::E, 8) => 30,
            _ => unreachable!(),
        }
    }

    /// The i-th simple root (1-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight {
            coords: self.cartan[i - 1].clone(),
        }
    }

    /// Convert simple-root coordinates to a weight.
    pub fn weight_from_alpha(&self, alpha: &[i64]) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (i, &c) in alpha.iter().enumerate() {
            if c != 0 {
                w = w.add(&self.simple_root(i + 1).scale(c));
            }
        }
        w
    }

    /// Simple-root coordinates of a weight, when they are integral.
    pub fn alpha_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        // Solve cartan^T c = coords; the Cartan matrix is symmetric.
        let n = self.rank;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if j < n {
                            Rat::from_int(self.cartan[i][j])
                        } else {
                            Rat::from_int(w.coords[i])
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let pinv = m[col][col].inv().unwrap();
            for j in 0..=n {
                m[col][j] = m[col][j].mul(&pinv);
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for j in 0..=n {
                    m[r][j] = m[r][j].sub(&f.mul(&m[col][j]));
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in m.iter().take(n) {
            let v = &row[n];
            if !v.denom().eq(&num_bigint::BigInt::from(1)) {
                return None;
            }
            out.push(i64::try_from(v.numer().clone()).ok()?);
        }
        Some(out)
    }

    pub fn positive_roots_alpha(&self) -> &[Vec<i64>] {
        &self.positive_roots_alpha
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn positive_root_index(&self, alpha: &[i64]) -> Option<usize> {
        self.positive_roots_alpha
            .binary_search_by(|probe| probe.as_slice().cmp(alpha))
            .ok()
    }

    /// Human-readable label "a1+2a2" from simple-root coordinates.
    pub fn root_label(alpha: &[i64]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in alpha.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("a{}", i + 1)),
                _ => parts.push(format!("{}a{}", c, i + 1)),
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Build the root system, enumerating the positive roots by reflection
/// closure of the simple roots inside the positive cone.
pub fn build_root_system(type_tag: TypeTag, rank: usize) -> Result<RootSystem> {
    let edges = dynkin_edges(type_tag, rank)?;
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        cartan[i][i] = 2;
    }
    for &(i, j) in &edges {
        cartan[i - 1][j - 1] = -1;
        cartan[j - 1][i - 1] = -1;
    }

    // Reflection closure over simple-root coordinates:
    // r_i sends c to c - <c, alpha_i^vee> e_i with <c, alpha_i^vee> = (A c)_i.
    let pairing = |c: &[i64], i: usize| -> i64 {
        (0..rank).map(|j| cartan[i][j] * c[j]).sum()
    };
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        found.insert(e.clone());
        queue.push(e);
    }
    while let Some(c) = queue.pop() {
        for i in 0..rank {
            let p = pairing(&c, i);
            if p == 0 {
                continue;
            }
            let mut r = c.clone();
            r[i] -= p;
            if r.iter().all(|&x| x >= 0) && !found.contains(&r) {
                found.insert(r.clone());
                queue.push(r);
            }
        }
    }

    let positive_roots_alpha: Vec<Vec<i64>> = found.into_iter().collect();
    let rs = RootSystem {
        type_tag,
        rank,
        cartan,
        positive_roots: Vec::new(),
        positive_roots_alpha,
    };
    let positive_roots = rs
        .positive_roots_alpha
        .iter()
        .map(|a| rs.weight_from_alpha(a))
        .collect();
    Ok(RootSystem {
        positive_roots,
        ..rs
    })
}

/// Simple reflection r_i(lambda) = lambda - lambda(h_i) alpha_i, i 1-based.
pub fn reflect(rs: &RootSystem, i: usize, w: &Weight) -> Result<Weight> {
    if i < 1 || i > rs.rank {
        return Err(Error::IndexOutOfRange(format!(
            "vertex {i} for rank {}",
            rs.rank
        )));
    }
    Ok(w.sub(&rs.simple_root(i).scale(w.pair(i))))
}

/// Left-to-right composition of simple reflections: the last letter of the
/// word acts first, so `apply_weyl_word(rs, [1, 2], w)` is r_1(r_2(w)).
pub fn apply_weyl_word(rs: &RootSystem, word: &[usize], w: &Weight) -> Result<Weight> {
    let mut cur = w.clone();
    for &i in word.iter().rev() {
        cur = reflect(rs, i, &cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(rs: &RootSystem, i: usize) -> Weight {
        rs.simple_root(i)
    }

    #[test]
    fn a2_positive_roots() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        assert_eq!(rs.positive_roots.len(), 3);
        let sum = alpha(&rs, 1).add(&alpha(&rs, 2));
        assert!(rs.positive_roots.contains(&sum));
    }

    #[test]
    fn a1_positive_roots() {
        let rs = build_root_system(TypeTag::A, 1).unwrap();
        assert_eq!(rs.positive_roots, vec![alpha(&rs, 1)]);
    }

    #[test]
    fn d4_count() {
        let rs = build_root_system(TypeTag::D, 4).unwrap();
        assert_eq!(rs.positive_roots.len(), 12);
    }

    #[test]
    fn counts_match_closed_forms() {
        for n in 1..=5 {
            let rs = build_root_system(TypeTag::A, n).unwrap();
            assert_eq!(rs.positive_roots.len(), n * (n + 1) / 2);
        }
        for n in 4..=6 {
            let rs = build_root_system(TypeTag::D, n).unwrap();
            assert_eq!(rs.positive_roots.len(), n * (n - 1));
        }
        let rs = build_root_system(TypeTag::E, 6).unwrap();
        assert_eq!(rs.positive_roots.len(), 36);
    }

    #[test]
    fn unsupported_rank_rejected() {
        assert!(build_root_system(TypeTag::D, 3).is_err());
        assert!(build_root_system(TypeTag::E, 9).is_err());
        assert!(build_root_system(TypeTag::A, 0).is_err());
    }

    #[test]
    fn reflect_examples() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        let a1 = alpha(&rs, 1);
        assert_eq!(reflect(&rs, 1, &a1).unwrap(), a1.scale(-1));
        assert_eq!(reflect(&rs, 2, &a1).unwrap(), a1.add(&alpha(&rs, 2)));
        let w2 = Weight::fundamental(2, 2);
        assert_eq!(reflect(&rs, 1, &w2).unwrap(), w2);
        assert!(reflect(&rs, 3, &a1).is_err());
    }

    #[test]
    fn weyl_word_examples() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        let a1 = alpha(&rs, 1);
        assert_eq!(apply_weyl_word(&rs, &[], &a1).unwrap(), a1);
        assert_eq!(apply_weyl_word(&rs, &[1, 2], &a1).unwrap(), alpha(&rs, 2));
        let w = Weight {
            coords: vec![3, -2],
        };
        assert_eq!(apply_weyl_word(&rs, &[1, 1], &w).unwrap(), w);
    }

    #[test]
    fn reflection_is_involutive_on_random_weights() {
        let rs = build_root_system(TypeTag::D, 4).unwrap();
        let mut state = 0x9e3779b9u64;
        for _ in 0..50 {
            let coords: Vec<i64> = (0..4)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    ((state >> 33) % 11) as i64 - 5
                })
                .collect();
            let w = Weight { coords };
            for i in 1..=4 {
                let rr = reflect(&rs, i, &reflect(&rs, i, &w).unwrap()).unwrap();
                assert_eq!(rr, w);
            }
        }
    }

    #[test]
    fn reflections_permute_roots_up_to_sign() {
        for (t, n) in [(TypeTag::A, 3), (TypeTag::D, 4)] {
            let rs = build_root_system(t, n).unwrap();
            for a in rs.positive_roots_alpha() {
                let w = rs.weight_from_alpha(a);
                for i in 1..=n {
                    let r = reflect(&rs, i, &w).unwrap();
                    let plus = rs.alpha_coords(&r).unwrap();
                    let minus: Vec<i64> = plus.iter().map(|c| -c).collect();
                    assert!(
                        rs.positive_root_index(&plus).is_some()
                            || rs.positive_root_index(&minus).is_some()
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_coords_roundtrip() {
        let rs = build_root_system(TypeTag::E, 6).unwrap();
        for a in rs.positive_roots_alpha() {
            let w = rs.weight_from_alpha(a);
            assert_eq!(rs.alpha_coords(&w).unwrap(), *a);
        }
    }
}
