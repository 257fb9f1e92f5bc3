//! Dynkin quivers, height functions, Coxeter elements, and the bijection
//! from positive roots to the repetition quiver, together with the derived
//! spectral assignment.
//!
//! Arrow convention, used verbatim by the KLR and duality modules: the pair
//! (a, b) is an arrow a -> b, and "i <- j" elsewhere means an arrow j -> i.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::root_system::{dynkin_edges, RootSystem, Weight};

#[derive(Clone, Debug)]
pub struct DynkinQuiver {
    pub rs: RootSystem,
    /// Arrows (origin, goal), 1-based vertices.
    pub arrows: Vec<(usize, usize)>,
}

impl DynkinQuiver {
    /// Validates that the arrows orient the Dynkin diagram of `rs`,
    /// one arrow per edge.
    pub fn new(rs: RootSystem, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let edges = dynkin_edges(rs.type_tag, rs.rank)?;
        let mut remaining: BTreeMap<(usize, usize), usize> =
            edges.iter().map(|&e| (e, 0usize)).collect();
        for &(a, b) in &arrows {
            if a < 1 || a > rs.rank || b < 1 || b > rs.rank {
                return Err(Error::IndexOutOfRange(format!("arrow ({a}, {b})")));
            }
            let key = (a.min(b), a.max(b));
            match remaining.get_mut(&key) {
                Some(count) => *count += 1,
                None => {
                    return Err(Error::Unsupported(format!(
                        "({a}, {b}) is not a diagram edge"
                    )))
                }
            }
        }
        for (edge, count) in &remaining {
            if *count != 1 {
                return Err(Error::Unsupported(format!(
                    "edge {edge:?} carries {count} arrows, expected exactly 1"
                )));
            }
        }
        Ok(DynkinQuiver { rs, arrows })
    }

    /// Default orientation: every edge points from the smaller vertex to
    /// the larger one (for type A this is the linear quiver 1 -> 2 -> ...).
    pub fn default_orientation(rs: RootSystem) -> Result<Self> {
        let arrows = dynkin_edges(rs.type_tag, rs.rank)?;
        DynkinQuiver::new(rs, arrows)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn has_arrow(&self, a: usize, b: usize) -> bool {
        self.arrows.contains(&(a, b))
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.has_arrow(a, b) || self.has_arrow(b, a)
    }

    /// Parse an orientation spec like "1>2,3>2".
    pub fn parse_arrows(spec: &str) -> Result<Vec<(usize, usize)>> {
        let mut arrows = Vec::new();
        for part in spec.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (a, b) = part.split_once('>').ok_or_else(|| {
                Error::Unsupported(format!("arrow {part:?}, expected the form a>b"))
            })?;
            let parse = |s: &str| -> Result<usize> {
                s.trim()
                    .parse()
                    .map_err(|_| Error::Unsupported(format!("vertex {s:?}")))
            };
            arrows.push((parse(a)?, parse(b)?));
        }
        Ok(arrows)
    }
}

/// Integer labels with xi_i = xi_j + 1 along every arrow i -> j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightFunction {
    xi: Vec<i64>,
}

impl HeightFunction {
    pub fn new(q: &DynkinQuiver, xi: Vec<i64>) -> Result<Self> {
        if xi.len() != q.rank() {
            return Err(Error::SizeMismatch(format!(
                "height function has {} entries for rank {}",
                xi.len(),
                q.rank()
            )));
        }
        for &(a, b) in &q.arrows {
            if xi[a - 1] != xi[b - 1] + 1 {
                return Err(Error::Unsupported(format!(
                    "xi_{a} = {} but xi_{b} = {}; arrows require xi_{a} = xi_{b} + 1",
                    xi[a - 1],
                    xi[b - 1]
                )));
            }
        }
        Ok(HeightFunction { xi })
    }

    pub fn get(&self, v: usize) -> i64 {
        self.xi[v - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.xi
    }
}

/// The height function anchored at min value 0, built by BFS over the
/// underlying graph starting from the lowest-numbered sink.
pub fn default_height(q: &DynkinQuiver) -> HeightFunction {
    let n = q.rank();
    let sink = (1..=n)
        .find(|&v| q.arrows.iter().all(|&(a, _)| a != v))
        .expect("a Dynkin quiver always has a sink");
    let mut xi = vec![i64::MIN; n];
    xi[sink - 1] = 0;
    let mut queue = std::collections::VecDeque::from([sink]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in &q.arrows {
            let (other, delta) = if a == v {
                (b, -1) // arrow v -> b: xi_v = xi_b + 1
            } else if b == v {
                (a, 1)
            } else {
                continue;
            };
            if xi[other - 1] == i64::MIN {
                xi[other - 1] = xi[v - 1] + delta;
                queue.push_back(other);
            }
        }
    }
    let min = *xi.iter().min().unwrap();
    for x in xi.iter_mut() {
        *x -= min;
    }
    HeightFunction::new(q, xi).expect("BFS height function is valid")
}

/// Sum of the simple roots alpha_j over all j with a directed path j -> i
/// (including the trivial path j = i).
pub fn gamma(q: &DynkinQuiver, i: usize) -> Weight {
    let n = q.rank();
    let mut reach = vec![false; n];
    reach[i - 1] = true;
    let mut queue = std::collections::VecDeque::from([i]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in &q.arrows {
            if b == v && !reach[a - 1] {
                reach[a - 1] = true;
                queue.push_back(a);
            }
        }
    }
    let mut w = Weight::zero(n);
    for j in 1..=n {
        if reach[j - 1] {
            w = w.add(&q.rs.simple_root(j));
        }
    }
    w
}

/// The bijection from positive roots to repetition-quiver vertices, plus
/// the spectral assignment read off at the simple roots.
#[derive(Clone, Debug)]
pub struct PhiTable {
    /// Vertices ordered by descending height, ties by ascending index;
    /// this is also the Coxeter word.
    pub ordering: Vec<usize>,
    pub xi: HeightFunction,
    /// Positive root (simple-root coordinates) -> (vertex, height).
    pub phi: BTreeMap<Vec<i64>, (usize, i64)>,
    /// Vertex i -> j with lambda_i the j-th fundamental weight.
    pub lambda_of: Vec<usize>,
    /// Vertex i -> p with a_i = q^p.
    pub a_exp_of: Vec<i64>,
}

impl PhiTable {
    pub fn coxeter_word(&self) -> &[usize] {
        &self.ordering
    }

    pub fn lambda(&self, i: usize) -> usize {
        self.lambda_of[i - 1]
    }

    pub fn a_exp(&self, i: usize) -> i64 {
        self.a_exp_of[i - 1]
    }
}

/// Apply the Coxeter element to a weight `power` times (negative powers use
/// the inverse word).
pub fn coxeter_action(
    pt: &PhiTable,
    rs: &RootSystem,
    w: &Weight,
    power: i64,
) -> Result<Weight> {
    let mut cur = w.clone();
    let inv_word: Vec<usize> = pt.ordering.iter().rev().copied().collect();
    for _ in 0..power.unsigned_abs() {
        let word: &[usize] = if power >= 0 { &pt.ordering } else { &inv_word };
        cur = crate::root_system::apply_weyl_word(rs, word, &cur)?;
    }
    Ok(cur)
}

/// Build the bijection by breadth-first closure from the seeds
/// gamma_i -> (i, xi_i), applying the Coxeter element and its inverse while
/// the image root stays positive.
pub fn build_phi(q: &DynkinQuiver, xi: &HeightFunction) -> Result<PhiTable> {
    let rs = &q.rs;
    let n = q.rank();
    let mut ordering: Vec<usize> = (1..=n).collect();
    ordering.sort_by_key(|&v| (-xi.get(v), v));

    let apply_c = |alpha: &[i64], inverse: bool| -> Option<Vec<i64>> {
        let w = rs.weight_from_alpha(alpha);
        let word: Vec<usize> = if inverse {
            ordering.iter().rev().copied().collect()
        } else {
            ordering.clone()
        };
        let img = crate::root_system::apply_weyl_word(rs, &word, &w).unwrap();
        let coords = rs.alpha_coords(&img).expect("Weyl image of a root is a root");
        if coords.iter().all(|&c| c >= 0) {
            Some(coords)
        } else {
            None
        }
    };

    let mut phi: BTreeMap<Vec<i64>, (usize, i64)> = BTreeMap::new();
    let mut queue: Vec<(Vec<i64>, (usize, i64))> = Vec::new();
    for i in 1..=n {
        let g = gamma(q, i);
        let coords = rs
            .alpha_coords(&g)
            .ok_or_else(|| Error::Internal(format!("gamma_{i} not in the root lattice")))?;
        if rs.positive_root_index(&coords).is_none() {
            return Err(Error::Internal(format!("gamma_{i} is not a positive root")));
        }
        let vertex = (i, xi.get(i));
        if let Some(&prev) = phi.get(&coords) {
            if prev != vertex {
                return Err(Error::InconsistentPhi(format!(
                    "seed gamma_{i}: {prev:?} vs {vertex:?}"
                )));
            }
        } else {
            phi.insert(coords.clone(), vertex);
            queue.push((coords, vertex));
        }
    }
    while let Some((alpha, (i, p))) = queue.pop() {
        for (inverse, shift) in [(false, -2i64), (true, 2i64)] {
            if let Some(img) = apply_c(&alpha, inverse) {
                let vertex = (i, p + shift);
                match phi.get(&img) {
                    Some(&prev) if prev != vertex => {
                        return Err(Error::InconsistentPhi(format!(
                            "root {img:?}: {prev:?} vs {vertex:?}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        phi.insert(img.clone(), vertex);
                        queue.push((img, vertex));
                    }
                }
            }
        }
    }

    if phi.len() != rs.positive_roots.len() {
        return Err(Error::IncompletePhi(format!(
            "covered {} of {} positive roots",
            phi.len(),
            rs.positive_roots.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    for v in phi.values() {
        if !seen.insert(*v) {
            return Err(Error::InconsistentPhi(format!(
                "AR-vertex {v:?} assigned to two roots"
            )));
        }
    }

    let mut lambda_of = vec![0usize; n];
    let mut a_exp_of = vec![0i64; n];
    for i in 1..=n {
        let alpha = rs
            .alpha_coords(&rs.simple_root(i))
            .expect("simple root coordinates");
        let &(j, p) = phi.get(&alpha).expect("phi is total on positive roots");
        lambda_of[i - 1] = j;
        a_exp_of[i - 1] = p;
    }

    Ok(PhiTable {
        ordering,
        xi: xi.clone(),
        phi,
        lambda_of,
        a_exp_of,
    })
}

/// DOT rendering of the repetition quiver restricted to the image of phi.
/// Nodes carry the root label; output is byte-stable.
pub fn ar_quiver_dot(pt: &PhiTable, q: &DynkinQuiver) -> String {
    let mut nodes: Vec<(usize, i64, String)> = pt
        .phi
        .iter()
        .map(|(alpha, &(i, p))| (i, p, RootSystem::root_label(alpha)))
        .collect();
    nodes.sort();
    let occupied: std::collections::BTreeSet<(usize, i64)> =
        nodes.iter().map(|&(i, p, _)| (i, p)).collect();

    let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
    for (i, p, label) in &nodes {
        writeln!(out, "  \"{i}_{p}\" [label=\"{label} ({i},{p})\"];").unwrap();
    }
    let mut edges = Vec::new();
    for &(i, p, _) in &nodes {
        for j in 1..=q.rank() {
            if q.adjacent(i, j) && occupied.contains(&(j, p + 1)) {
                edges.push(((i, p), (j, p + 1)));
            }
        }
    }
    edges.sort();
    for ((i, p), (j, pp)) in edges {
        writeln!(out, "  \"{i}_{p}\" -> \"{j}_{pp}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, TypeTag};

    fn a2_quiver() -> DynkinQuiver {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        DynkinQuiver::new(rs, vec![(1, 2)]).unwrap()
    }

    #[test]
    fn default_heights() {
        let q = a2_quiver();
        assert_eq!(default_height(&q).values(), &[1, 0]);

        let rs = build_root_system(TypeTag::A, 1).unwrap();
        let q1 = DynkinQuiver::new(rs, vec![]).unwrap();
        assert_eq!(default_height(&q1).values(), &[0]);

        let rs = build_root_system(TypeTag::A, 3).unwrap();
        let q3 = DynkinQuiver::new(rs, vec![(1, 2), (3, 2)]).unwrap();
        assert_eq!(default_height(&q3).values(), &[1, 0, 1]);
    }

    #[test]
    fn orientation_validation() {
        let rs = build_root_system(TypeTag::A, 2).unwrap();
        assert!(DynkinQuiver::new(rs.clone(), vec![]).is_err());
        assert!(DynkinQuiver::new(rs.clone(), vec![(1, 2), (2, 1)]).is_err());
        assert!(DynkinQuiver::new(rs, vec![(2, 1)]).is_ok());
    }

    #[test]
    fn gamma_examples() {
        let q = a2_quiver();
        assert_eq!(gamma(&q, 1), q.rs.simple_root(1));
        assert_eq!(gamma(&q, 2), q.rs.simple_root(1).add(&q.rs.simple_root(2)));

        let rs = build_root_system(TypeTag::A, 1).unwrap();
        let q1 = DynkinQuiver::new(rs, vec![]).unwrap();
        assert_eq!(gamma(&q1, 1), q1.rs.simple_root(1));
    }

    #[test]
    fn gamma_has_unit_coefficient_at_own_vertex() {
        let rs = build_root_system(TypeTag::D, 4).unwrap();
        let q = DynkinQuiver::default_orientation(rs).unwrap();
        for i in 1..=4 {
            let coords = q.rs.alpha_coords(&gamma(&q, i)).unwrap();
            assert_eq!(coords[i - 1], 1);
        }
    }

    #[test]
    fn phi_a2() {
        let q = a2_quiver();
        let xi = default_height(&q);
        let pt = build_phi(&q, &xi).unwrap();
        assert_eq!(pt.phi.get(&vec![1, 0]), Some(&(1, 1)));
        assert_eq!(pt.phi.get(&vec![1, 1]), Some(&(2, 0)));
        assert_eq!(pt.phi.get(&vec![0, 1]), Some(&(1, -1)));
        // spectral data
        assert_eq!(pt.lambda(1), 1);
        assert_eq!(pt.a_exp(1), 1);
        assert_eq!(pt.lambda(2), 1);
        assert_eq!(pt.a_exp(2), -1);
    }

    #[test]
    fn phi_a1() {
        let rs = build_root_system(TypeTag::A, 1).unwrap();
        let q = DynkinQuiver::new(rs, vec![]).unwrap();
        let xi = default_height(&q);
        let pt = build_phi(&q, &xi).unwrap();
        assert_eq!(pt.phi.get(&vec![1]), Some(&(1, xi.get(1))));
    }

    #[test]
    fn phi_total_injective_parity() {
        for (t, n, arrows) in [
            (TypeTag::A, 2, vec![(1, 2)]),
            (TypeTag::A, 3, vec![(1, 2), (2, 3)]),
            (TypeTag::A, 3, vec![(2, 1), (2, 3)]),
            (TypeTag::D, 4, vec![(1, 2), (2, 3), (2, 4)]),
        ] {
            let rs = build_root_system(t, n).unwrap();
            let expected = rs.positive_roots.len();
            let q = DynkinQuiver::new(rs, arrows).unwrap();
            let xi = default_height(&q);
            let pt = build_phi(&q, &xi).unwrap();
            assert_eq!(pt.phi.len(), expected);
            for (_, &(i, p)) in &pt.phi {
                assert_eq!((p - xi.get(i)).rem_euclid(2), 0);
            }
        }
    }

    #[test]
    fn coxeter_examples() {
        let q = a2_quiver();
        let xi = default_height(&q);
        let pt = build_phi(&q, &xi).unwrap();
        let a1 = q.rs.simple_root(1);
        assert_eq!(
            coxeter_action(&pt, &q.rs, &a1, 1).unwrap(),
            q.rs.simple_root(2)
        );
        assert_eq!(coxeter_action(&pt, &q.rs, &a1, 0).unwrap(), a1);
        // c^3 = identity in type A2
        for i in 1..=2 {
            let w = Weight::fundamental(2, i);
            assert_eq!(coxeter_action(&pt, &q.rs, &w, 3).unwrap(), w);
        }
    }

    #[test]
    fn coxeter_order_matches_type() {
        for (t, n, h) in [(TypeTag::A, 3, 4), (TypeTag::D, 4, 6)] {
            let rs = build_root_system(t, n).unwrap();
            assert_eq!(rs.coxeter_number(), h);
            let q = DynkinQuiver::default_orientation(rs).unwrap();
            let xi = default_height(&q);
            let pt = build_phi(&q, &xi).unwrap();
            for i in 1..=n {
                let w = Weight::fundamental(n, i);
                assert_eq!(coxeter_action(&pt, &q.rs, &w, h as i64).unwrap(), w);
                let back = coxeter_action(
                    &pt,
                    &q.rs,
                    &coxeter_action(&pt, &q.rs, &w, 1).unwrap(),
                    -1,
                )
                .unwrap();
                assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn height_shift_covariance() {
        let q = a2_quiver();
        let xi = default_height(&q);
        let pt = build_phi(&q, &xi).unwrap();
        let shifted = HeightFunction::new(&q, xi.values().iter().map(|x| x + 2).collect())
            .unwrap();
        let pt2 = build_phi(&q, &shifted).unwrap();
        for (alpha, &(i, p)) in &pt.phi {
            assert_eq!(pt2.phi.get(alpha), Some(&(i, p + 2)));
        }
        for i in 1..=2 {
            assert_eq!(pt2.lambda(i), pt.lambda(i));
            assert_eq!(pt2.a_exp(i), pt.a_exp(i) + 2);
        }
    }

    #[test]
    fn dot_output() {
        let q = a2_quiver();
        let xi = default_height(&q);
        let pt = build_phi(&q, &xi).unwrap();
        let dot = ar_quiver_dot(&pt, &q);
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.contains("\"1_-1\" -> \"2_0\""));
        assert!(dot.contains("\"2_0\" -> \"1_1\""));
        // byte-stable across rebuilds
        let pt2 = build_phi(&q, &xi).unwrap();
        assert_eq!(ar_quiver_dot(&pt2, &q), dot);

        let rs = build_root_system(TypeTag::A, 1).unwrap();
        let q1 = DynkinQuiver::new(rs, vec![]).unwrap();
        let pt1 = build_phi(&q1, &default_height(&q1)).unwrap();
        let dot1 = ar_quiver_dot(&pt1, &q1);
        assert_eq!(dot1.matches("label=").count(), 1);
        assert_eq!(dot1.matches(" -> ").count(), 0);
    }
}
