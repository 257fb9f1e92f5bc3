//! Type-A fundamental modules as evaluation modules with a formal spectral
//! parameter, their tensor products, and the exact normalized R-matrix
//! solver with denominator extraction and pole orders.
//!
//! Convention set, fixed here once: Chevalley generators indexed 0..=n with
//! coproduct e |-> e (x) 1 + k (x) e, f |-> f (x) k^{-1} + 1 (x) f,
//! k |-> k (x) k; the level-l module has the l-element subsets of
//! {1, ..., n+1} as basis, classical generators move one index with
//! coefficient 1, and the affine pair exchanges 1 and n+1 carrying z^{+1}
//! and z^{-1}. The ratio variable is u = z_2/z_1, instantiated as
//! (z_1, z_2) = (1, u). Only outputs invariant under these choices (kernel
//! dimension, pole orders at the assigned points, the value d(1)) are
//! treated as theorems by the test suites.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::algebra::{
    ratq_to_string, ratqu_to_string, solve_nullspace, Field, Mat, MultiPoly, Poly, RatQ, RatQU,
};
use crate::error::{Error, Result};

/// Chevalley generator of the quantum loop algebra, index 0..=n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UqGen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl UqGen {
    /// The raising/lowering and Cartan generators for rank n.
    pub fn all(n: usize) -> Vec<UqGen> {
        let mut gens = Vec::new();
        for j in 0..=n {
            gens.push(UqGen::E(j));
            gens.push(UqGen::F(j));
            gens.push(UqGen::K(j));
            gens.push(UqGen::KInv(j));
        }
        gens
    }

    /// Only the nilpotent part (what the intertwiner system is built from).
    pub fn raising_lowering(n: usize) -> Vec<UqGen> {
        let mut gens = Vec::new();
        for j in 0..=n {
            gens.push(UqGen::E(j));
            gens.push(UqGen::F(j));
        }
        gens
    }
}

/// The l-th fundamental module of the rank-n quantum loop algebra, modelled
/// on l-element subsets of {1, ..., n+1} in lexicographic order.
#[derive(Clone, Debug)]
pub struct FundamentalModule {
    pub n: usize,
    pub level: usize,
    basis: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn subsets(n_plus_1: usize, level: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, level: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == level {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, level, cur, out);
            cur.pop();
        }
    }
    rec(1, n_plus_1, level, &mut cur, &mut out);
    out
}

pub fn build_fundamental(n: usize, level: usize) -> Result<FundamentalModule> {
    if level < 1 || level > n {
        return Err(Error::IndexOutOfRange(format!(
            "fundamental level {level} for rank {n}"
        )));
    }
    let basis = subsets(n + 1, level);
    let index = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    Ok(FundamentalModule {
        n,
        level,
        basis,
        index,
    })
}

impl FundamentalModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    /// Index of the extremal (highest-weight) vector {1, ..., level}.
    pub fn extremal_index(&self) -> usize {
        0
    }

    /// Classical weight in fundamental-weight coordinates.
    pub fn weight(&self, idx: usize) -> Vec<i64> {
        let s = &self.basis[idx];
        (1..=self.n)
            .map(|i| {
                (s.contains(&i) as i64) - (s.contains(&(i + 1)) as i64)
            })
            .collect()
    }

    /// e_j moves one subset element; returns (image index, z-exponent).
    pub fn e_apply(&self, j: usize, idx: usize) -> Option<(usize, i64)> {
        let s = &self.basis[idx];
        let (take, put, zexp) = if j == 0 {
            (1, self.n + 1, 1)
        } else {
            (j + 1, j, 0)
        };
        if !s.contains(&take) || s.contains(&put) {
            return None;
        }
        let mut t: Vec<usize> = s.iter().copied().filter(|&x| x != take).collect();
        t.push(put);
        t.sort_unstable();
        Some((self.index[&t], zexp))
    }

    pub fn f_apply(&self, j: usize, idx: usize) -> Option<(usize, i64)> {
        let s = &self.basis[idx];
        let (take, put, zexp) = if j == 0 {
            (self.n + 1, 1, -1)
        } else {
            (j, j + 1, 0)
        };
        if !s.contains(&take) || s.contains(&put) {
            return None;
        }
        let mut t: Vec<usize> = s.iter().copied().filter(|&x| x != take).collect();
        t.push(put);
        t.sort_unstable();
        Some((self.index[&t], zexp))
    }

    /// Exponent of q in the k_j eigenvalue.
    pub fn k_exp(&self, j: usize, idx: usize) -> i64 {
        let s = &self.basis[idx];
        if j == 0 {
            (s.contains(&(self.n + 1)) as i64) - (s.contains(&1) as i64)
        } else {
            (s.contains(&j) as i64) - (s.contains(&(j + 1)) as i64)
        }
    }
}

/// One matrix entry of a generator on a tensor product, with the spectral
/// parameter kept symbolic per slot.
#[derive(Clone, Debug)]
pub struct TensorEntry {
    pub from: usize,
    pub to: usize,
    pub coeff: RatQ,
    /// z-exponent per tensor slot (at most one slot is nonzero).
    pub zexp: Vec<i64>,
}

fn product_dims(mods: &[&FundamentalModule]) -> usize {
    mods.iter().map(|m| m.dim()).product()
}

fn unrank(mods: &[&FundamentalModule], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; mods.len()];
    for (slot, m) in mods.iter().enumerate().rev() {
        out[slot] = idx % m.dim();
        idx /= m.dim();
    }
    out
}

fn rank_of(mods: &[&FundamentalModule], parts: &[usize]) -> usize {
    let mut idx = 0;
    for (slot, m) in mods.iter().enumerate() {
        idx = idx * m.dim() + parts[slot];
    }
    idx
}

/// Matrix entries of one generator on the d-fold tensor product, through
/// the iterated coproduct.
pub fn tensor_generator_entries(mods: &[&FundamentalModule], g: UqGen) -> Vec<TensorEntry> {
    let dim = product_dims(mods);
    let slots = mods.len();
    let mut out = Vec::new();
    for from in 0..dim {
        let parts = unrank(mods, from);
        match g {
            UqGen::K(j) | UqGen::KInv(j) => {
                let sign = if matches!(g, UqGen::K(_)) { 1 } else { -1 };
                let e: i64 = mods
                    .iter()
                    .enumerate()
                    .map(|(s, m)| m.k_exp(j, parts[s]))
                    .sum();
                out.push(TensorEntry {
                    from,
                    to: from,
                    coeff: RatQ::q_pow(sign * e),
                    zexp: vec![0; slots],
                });
            }
            UqGen::E(j) => {
                // e (x) 1 + k (x) e, iterated: k's left of the active slot.
                for t in 0..slots {
                    if let Some((img, zp)) = mods[t].e_apply(j, parts[t]) {
                        let mut to_parts = parts.clone();
                        to_parts[t] = img;
                        let kexp: i64 =
                            (0..t).map(|s| mods[s].k_exp(j, parts[s])).sum();
                        let mut zexp = vec![0; slots];
                        zexp[t] = zp;
                        out.push(TensorEntry {
                            from,
                            to: rank_of(mods, &to_parts),
                            coeff: RatQ::q_pow(kexp),
                            zexp,
                        });
                    }
                }
            }
            UqGen::F(j) => {
                // f (x) k^{-1} + 1 (x) f, iterated: k^{-1}'s right of the slot.
                for t in 0..slots {
                    if let Some((img, zp)) = mods[t].f_apply(j, parts[t]) {
                        let mut to_parts = parts.clone();
                        to_parts[t] = img;
                        let kexp: i64 = ((t + 1)..slots)
                            .map(|s| -mods[s].k_exp(j, parts[s]))
                            .sum();
                        let mut zexp = vec![0; slots];
                        zexp[t] = zp;
                        out.push(TensorEntry {
                            from,
                            to: rank_of(mods, &to_parts),
                            coeff: RatQ::q_pow(kexp),
                            zexp,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Materialize tensor entries as a matrix over Q(q)(u), substituting the
/// given power of u for each slot parameter.
pub fn tensor_matrix_u(
    mods: &[&FundamentalModule],
    g: UqGen,
    slot_u_exp: &[i64],
) -> Mat<RatQU> {
    let dim = product_dims(mods);
    let mut m = Mat::zero(dim, dim);
    for e in tensor_generator_entries(mods, g) {
        let uexp: i64 = e
            .zexp
            .iter()
            .zip(slot_u_exp)
            .map(|(&z, &s)| z * s)
            .sum();
        let val = RatQU::constant(e.coeff.clone()).mul(&RatQU::var_pow(uexp));
        let cur = m.get(e.to, e.from).add(&val);
        m.set(e.to, e.from, cur);
    }
    m
}

/// Normalized intertwiner of a tensor pair of fundamental modules, with its
/// monic least common denominator in u = z2/z1.
#[derive(Clone, Debug)]
pub struct NormalizedRMatrix {
    pub n: usize,
    pub levels: (usize, usize),
    /// Rows index the swapped product basis (second module first).
    pub entries: Mat<RatQU>,
    pub denom: Poly<RatQ>,
}

impl NormalizedRMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Entries cleared of the common denominator: denom * R, polynomial in u.
    pub fn cleared_entries(&self) -> Mat<RatQU> {
        let d = RatQU::from_poly(self.denom.clone());
        let mut out = self.entries.clone();
        for r in 0..out.nrows() {
            for c in 0..out.ncols() {
                let v = out.get(r, c).mul(&d);
                debug_assert!(v.is_polynomial());
                out.set(r, c, v);
            }
        }
        out
    }
}

/// Largest m with (u - point)^m dividing the monic polynomial d.
pub fn pole_order(d: &Poly<RatQ>, point: &RatQ) -> usize {
    d.root_multiplicity(point)
}

/// Solve for the unique normalized intertwiner
/// W(l1)_{z1} (x) W(l2)_{z2} -> W(l2)_{z2} (x) W(l1)_{z1} over Q(q)(u).
///
/// Assembles R.A_g - B_g.R = 0 for all raising and lowering generators on
/// the weight-matched unknowns, solves the nullspace, asserts it is
/// one-dimensional, scales the extremal entry to 1, and re-verifies the
/// intertwining property for every generator including the Cartan ones.
pub fn solve_normalized_r(n: usize, l1: usize, l2: usize) -> Result<NormalizedRMatrix> {
    let m1 = build_fundamental(n, l1)?;
    let m2 = build_fundamental(n, l2)?;
    let src: Vec<&FundamentalModule> = vec![&m1, &m2];
    let tgt: Vec<&FundamentalModule> = vec![&m2, &m1];
    let dim = m1.dim() * m2.dim();

    let weight_of = |mods: &[&FundamentalModule], idx: usize| -> Vec<i64> {
        let parts = unrank(mods, idx);
        let mut w = vec![0i64; n];
        for (slot, m) in mods.iter().enumerate() {
            for (acc, x) in w.iter_mut().zip(m.weight(parts[slot])) {
                *acc += x;
            }
        }
        w
    };
    let src_w: Vec<Vec<i64>> = (0..dim).map(|c| weight_of(&src, c)).collect();
    let tgt_w: Vec<Vec<i64>> = (0..dim).map(|r| weight_of(&tgt, r)).collect();

    // Unknowns: weight-matched entries only (forced by Cartan intertwining).
    let mut unknown_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in 0..dim {
        for c in 0..dim {
            if tgt_w[r] == src_w[c] {
                let k = unknown_index.len();
                unknown_index.insert((r, c), k);
            }
        }
    }
    let nunknowns = unknown_index.len();

    // Source parameters (z1, z2) = (1, u); target slots carry (u, 1).
    let src_exp = [0i64, 1];
    let tgt_exp = [1i64, 0];
    let mut rows: Vec<Vec<RatQU>> = Vec::new();
    for g in UqGen::raising_lowering(n) {
        let a = tensor_matrix_u(&src, g, &src_exp);
        let b = tensor_matrix_u(&tgt, g, &tgt_exp);
        for r in 0..dim {
            for c in 0..dim {
                let mut row = vec![RatQU::zero(); nunknowns];
                let mut nonzero = false;
                for cp in 0..dim {
                    if a.get(cp, c).is_zero() {
                        continue;
                    }
                    if let Some(&k) = unknown_index.get(&(r, cp)) {
                        row[k] = row[k].add(a.get(cp, c));
                        nonzero = true;
                    }
                }
                for rp in 0..dim {
                    if b.get(r, rp).is_zero() {
                        continue;
                    }
                    if let Some(&k) = unknown_index.get(&(rp, c)) {
                        row[k] = row[k].sub(b.get(r, rp));
                        nonzero = true;
                    }
                }
                if nonzero && row.iter().any(|v| !v.is_zero()) {
                    // scale by the leading coefficient for cheap deduplication
                    let lead = row.iter().find(|v| !v.is_zero()).unwrap().clone();
                    let inv = lead.inv().unwrap();
                    for v in row.iter_mut() {
                        *v = v.mul(&inv);
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            let xs = format!("{x:?}");
            let ys = format!("{y:?}");
            match xs.cmp(&ys) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
    rows.dedup();

    let system = Mat::from_rows(rows);
    let kernel = solve_nullspace(&system);
    if kernel.len() != 1 {
        if kernel.is_empty() {
            return Err(Error::NonUniqueIntertwiner(0));
        }
        return Err(Error::NonUniqueIntertwiner(kernel.len()));
    }
    let sol = &kernel[0];

    // Normalize: the extremal vectors sit at product index 0 on both sides.
    let ext_key = (0usize, 0usize);
    let ext_idx = *unknown_index
        .get(&ext_key)
        .ok_or(Error::ZeroIntertwiner)?;
    let ext = sol[ext_idx].clone();
    let scale = ext.inv().ok_or(Error::ZeroIntertwiner)?;

    let mut entries = Mat::zero(dim, dim);
    for (&(r, c), &k) in &unknown_index {
        entries.set(r, c, sol[k].mul(&scale));
    }

    // Exact post-verification for every generator, Cartan included.
    for g in UqGen::all(n) {
        let a = tensor_matrix_u(&src, g, &src_exp);
        let b = tensor_matrix_u(&tgt, g, &tgt_exp);
        if !entries.mul(&a).sub(&b.mul(&entries)).is_zero() {
            return Err(Error::Internal(format!(
                "solved R fails to intertwine {g:?}"
            )));
        }
    }

    let mut denom = Poly::one();
    for r in 0..dim {
        for c in 0..dim {
            denom = denom.lcm(entries.get(r, c).denom());
        }
    }
    Ok(NormalizedRMatrix {
        n,
        levels: (l1, l2),
        entries,
        denom,
    })
}

/// Apply a two-site matrix at positions (slot, slot+1) of a triple tensor
/// product with factor dimensions `dims`, as a full matrix over bivariate
/// polynomials. `m` maps (x, y) to (y', x') in first-major product indexing
/// and swaps the factor dimensions at the two slots.
fn lift_two_site(
    m: &[Vec<MultiPoly<RatQ>>],
    dims: &[usize; 3],
    slot: usize,
) -> (Vec<Vec<MultiPoly<RatQ>>>, [usize; 3]) {
    let dx = dims[slot];
    let dy = dims[slot + 1];
    let mut new_dims = *dims;
    new_dims[slot] = dy;
    new_dims[slot + 1] = dx;
    let total: usize = dims.iter().product();
    let zero = MultiPoly::zero(2);
    let mut out = vec![vec![zero; total]; total];
    let spectate = if slot == 0 { 2 } else { 0 };
    for s in 0..dims[spectate] {
        for x in 0..dx {
            for y in 0..dy {
                let col = if slot == 0 {
                    (x * dy + y) * dims[2] + s
                } else {
                    s * dx * dy + x * dy + y
                };
                for yp in 0..dy {
                    for xp in 0..dx {
                        let v = &m[yp * dx + xp][x * dy + y];
                        if v.is_zero() {
                            continue;
                        }
                        let row = if slot == 0 {
                            (yp * dx + xp) * new_dims[2] + s
                        } else {
                            s * dx * dy + yp * dx + xp
                        };
                        out[row][col] = out[row][col].add(v);
                    }
                }
            }
        }
    }
    (out, new_dims)
}

fn matmul_poly(
    a: &[Vec<MultiPoly<RatQ>>],
    b: &[Vec<MultiPoly<RatQ>>],
) -> Vec<Vec<MultiPoly<RatQ>>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let zero = MultiPoly::zero(2);
    let mut out = vec![vec![zero; m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[t][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][t].mul(&b[t][j]));
            }
        }
    }
    out
}

/// Denominator-cleared R-matrix with u replaced by a monomial in
/// (u1, u2): exponents (1,0), (0,1) or (1,1).
fn cleared_bivariate(r: &NormalizedRMatrix, uexp: (u16, u16)) -> Vec<Vec<MultiPoly<RatQ>>> {
    let cleared = r.cleared_entries();
    let dim = cleared.nrows();
    let mono = crate::algebra::Monomial(vec![uexp.0, uexp.1]);
    let mut out = vec![vec![MultiPoly::zero(2); dim]; dim];
    for row in 0..dim {
        for col in 0..dim {
            let e = cleared.get(row, col);
            if e.is_zero() {
                continue;
            }
            let p = e.numer();
            let mut acc = MultiPoly::zero(2);
            let mut mpow = MultiPoly::one(2);
            for k in 0..=p.degree().unwrap() {
                let c = p.coeff(k);
                if !c.is_zero() {
                    acc = acc.add(&mpow.mul_scalar(&c));
                }
                mpow = mpow.mul(&MultiPoly::from_terms(2, [(mono.clone(), RatQ::one())]));
            }
            out[row][col] = acc;
        }
    }
    out
}

/// Exact Yang-Baxter check for the triple of fundamental levels, as an
/// identity of denominator-cleared matrices over Q(q)[u1, u2].
pub fn check_yang_baxter(n: usize, l1: usize, l2: usize, l3: usize) -> Result<bool> {
    let r12 = solve_normalized_r(n, l1, l2)?;
    let r13 = solve_normalized_r(n, l1, l3)?;
    let r23 = solve_normalized_r(n, l2, l3)?;
    let d = |l: usize| build_fundamental(n, l).map(|m| m.dim());
    let dims = [d(l1)?, d(l2)?, d(l3)?];

    // Left path: R23 at (2,3) with u2, then R13 at (1,2) with u1 u2,
    // then R12 at (2,3) with u1.
    let p23 = cleared_bivariate(&r23, (0, 1));
    let p13 = cleared_bivariate(&r13, (1, 1));
    let p12 = cleared_bivariate(&r12, (1, 0));

    let (s1, d1) = lift_two_site(&p23, &dims, 1);
    let (s2, d2) = lift_two_site(&p13, &d1, 0);
    let (s3, d3) = lift_two_site(&p12, &d2, 1);
    let lhs = matmul_poly(&s3, &matmul_poly(&s2, &s1));

    // Right path: R12 at (1,2) with u1, then R13 at (2,3) with u1 u2,
    // then R23 at (1,2) with u2.
    let (t1, e1) = lift_two_site(&p12, &dims, 0);
    let (t2, e2) = lift_two_site(&p13, &e1, 1);
    let (t3, e3) = lift_two_site(&p23, &e2, 0);
    let rhs = matmul_poly(&t3, &matmul_poly(&t2, &t1));

    debug_assert_eq!(d3, e3);
    let equal = lhs
        .iter()
        .zip(&rhs)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x == y));
    Ok(equal)
}

/// Compose the (l2, l1) solution at the reciprocal argument with the
/// (l1, l2) solution; by uniqueness this is a scalar times the identity.
/// Returns the scalar.
pub fn swap_composition_scalar(n: usize, l1: usize, l2: usize) -> Result<RatQU> {
    let r12 = solve_normalized_r(n, l1, l2)?;
    let r21 = solve_normalized_r(n, l2, l1)?;
    let dim = r12.dim();
    let mut r21_rec = Mat::zero(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            r21_rec.set(r, c, r21.entries.get(r, c).subst_reciprocal());
        }
    }
    let prod = r21_rec.mul(&r12.entries);
    let scalar = prod.get(0, 0).clone();
    for r in 0..dim {
        for c in 0..dim {
            let expect = if r == c { scalar.clone() } else { RatQU::zero() };
            if *prod.get(r, c) != expect {
                return Err(Error::Internal(
                    "swap composition is not scalar".into(),
                ));
            }
        }
    }
    Ok(scalar)
}

#[derive(Serialize)]
pub struct RMatrixJson {
    pub n: usize,
    pub levels: (usize, usize),
    pub dim: usize,
    pub entries: Vec<Vec<String>>,
    pub denominator: Vec<String>,
}

pub fn rmatrix_to_json(r: &NormalizedRMatrix) -> RMatrixJson {
    let dim = r.dim();
    let entries = (0..dim)
        .map(|row| {
            (0..dim)
                .map(|col| ratqu_to_string(r.entries.get(row, col)))
                .collect()
        })
        .collect();
    let denominator = (0..=r.denom.degree().unwrap_or(0))
        .map(|k| ratq_to_string(&r.denom.coeff(k)))
        .collect();
    RMatrixJson {
        n: r.n,
        levels: r.levels,
        dim,
        entries,
        denominator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_dimensions() {
        assert_eq!(build_fundamental(1, 1).unwrap().dim(), 2);
        assert_eq!(build_fundamental(2, 1).unwrap().dim(), 3);
        assert_eq!(build_fundamental(3, 2).unwrap().dim(), 6);
        assert!(build_fundamental(2, 3).is_err());
        assert!(build_fundamental(2, 0).is_err());
    }

    #[test]
    fn rank_one_raising_has_single_entry() {
        let m = build_fundamental(1, 1).unwrap();
        let entries: Vec<_> = (0..2)
            .filter_map(|idx| m.e_apply(1, idx).map(|t| (idx, t)))
            .collect();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0], (1, (0, 0)));
    }

    #[test]
    fn module_relations_spot_checks() {
        // [e_j, f_j] = (k_j - k_j^{-1})/(q - q^{-1}) on each module, with
        // the spectral parameter formal.
        for (n, l) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let m = build_fundamental(n, l).unwrap();
            let mods = [&m];
            let exp = [1i64]; // z = u, kept formal
            for j in 0..=n {
                let e = tensor_matrix_u(&mods, UqGen::E(j), &exp);
                let f = tensor_matrix_u(&mods, UqGen::F(j), &exp);
                let k = tensor_matrix_u(&mods, UqGen::K(j), &exp);
                let kinv = tensor_matrix_u(&mods, UqGen::KInv(j), &exp);
                let comm = e.mul(&f).sub(&f.mul(&e));
                let q = RatQU::constant(RatQ::var());
                let denom = q.sub(&q.inv().unwrap());
                let rhs = k.sub(&kinv).mul_scalar(&denom.inv().unwrap());
                assert!(comm.sub(&rhs).is_zero(), "n={n} l={l} j={j}");
                // k e k^{-1} = q^{a_jj'} e is covered by the intertwiner
                // post-verification; here check k-conjugation on e_j itself.
                let conj = k.mul(&e).mul(&kinv);
                assert_eq!(conj, e.mul_scalar(&RatQU::constant(RatQ::q_pow(2))));
            }
        }
    }

    #[test]
    fn serre_relations_on_tensor_square() {
        // e_i^2 e_j - (q + q^{-1}) e_i e_j e_i + e_j e_i^2 = 0 for adjacent
        // i, j on W (x) W at n = 2.
        let m = build_fundamental(2, 1).unwrap();
        let mods = [&m, &m];
        let exp = [0i64, 1];
        let two = RatQU::constant(RatQ::q_pow(1).add(&RatQ::q_pow(-1)));
        for (i, j) in [(1, 2), (2, 1), (0, 1), (1, 0)] {
            let ei = tensor_matrix_u(&mods, UqGen::E(i), &exp);
            let ej = tensor_matrix_u(&mods, UqGen::E(j), &exp);
            let lhs = ei
                .mul(&ei.mul(&ej))
                .sub(&ei.mul(&ej.mul(&ei)).mul_scalar(&two))
                .add(&ej.mul(&ei.mul(&ei)));
            assert!(lhs.is_zero(), "Serre fails for ({i},{j})");
        }
    }

    #[test]
    fn tensor_action_dimensions_and_weights() {
        let m1 = build_fundamental(1, 1).unwrap();
        let mods = [&m1, &m1];
        assert_eq!(product_dims(&mods), 4);
        // weight additivity
        for idx in 0..4 {
            let parts = unrank(&mods, idx);
            let w: Vec<i64> = (0..1)
                .map(|_| m1.weight(parts[0])[0] + m1.weight(parts[1])[0])
                .collect();
            let mut acc = vec![0i64];
            for (slot, m) in mods.iter().enumerate() {
                acc[0] += m.weight(parts[slot])[0];
            }
            assert_eq!(w, acc);
        }
        // classical generators are z-independent
        for e in tensor_generator_entries(&mods, UqGen::E(1)) {
            assert!(e.zexp.iter().all(|&z| z == 0));
        }
        for e in tensor_generator_entries(&mods, UqGen::E(0)) {
            assert_eq!(e.zexp.iter().map(|z| z.abs()).sum::<i64>(), 1);
        }
    }

    #[test]
    fn sl2_r_matrix_matches_hand_computation() {
        // Frozen oracle: eliminating the intertwiner equations for the
        // rank-1 pair by hand gives, on the middle weight block in basis
        // (v1 (x) v2, v2 (x) v1):
        //   [ (1-q^2)/(u-q^2)   q(u-1)/(u-q^2) ]
        //   [ q(u-1)/(u-q^2)    u(1-q^2)/(u-q^2) ]
        // with 1 on both extremal corners, denominator u - q^2.
        let r = solve_normalized_r(1, 1, 1).unwrap();
        assert_eq!(r.dim(), 4);
        let q2 = RatQ::q_pow(2);
        let denom = Poly::from_coeffs(vec![q2.neg(), RatQ::one()]);
        assert_eq!(r.denom, denom);
        assert_eq!(pole_order(&r.denom, &q2), 1);
        assert_eq!(pole_order(&r.denom, &RatQ::q_pow(4)), 0);

        let den = RatQU::from_poly(denom);
        let u = RatQU::var();
        let one_minus_q2 = RatQU::constant(RatQ::one().sub(&q2));
        let q = RatQU::constant(RatQ::var());
        let a = one_minus_q2.div(&den).unwrap();
        let b = q
            .mul(&u.sub(&RatQU::one()))
            .div(&den)
            .unwrap();
        assert_eq!(*r.entries.get(0, 0), RatQU::one());
        assert_eq!(*r.entries.get(3, 3), RatQU::one());
        assert_eq!(*r.entries.get(1, 1), a);
        assert_eq!(*r.entries.get(1, 2), b);
        assert_eq!(*r.entries.get(2, 1), b);
        assert_eq!(*r.entries.get(2, 2), u.mul(&a));
        // d(1) != 0
        assert!(!r.denom.eval(&RatQ::one()).is_zero());
    }

    #[test]
    fn r_matrix_normalization_and_weight_preservation() {
        for (n, l1, l2) in [(2, 1, 1), (2, 1, 2), (2, 2, 1)] {
            let r = solve_normalized_r(n, l1, l2).unwrap();
            assert_eq!(*r.entries.get(0, 0), RatQU::one());
            assert!(!r.denom.eval(&RatQ::one()).is_zero());
            let m1 = build_fundamental(n, l1).unwrap();
            let m2 = build_fundamental(n, l2).unwrap();
            let src: Vec<&FundamentalModule> = vec![&m1, &m2];
            let tgt: Vec<&FundamentalModule> = vec![&m2, &m1];
            for row in 0..r.dim() {
                for col in 0..r.dim() {
                    if !r.entries.get(row, col).is_zero() {
                        let wr: Vec<i64> = {
                            let parts = unrank(&tgt, row);
                            let mut w = vec![0i64; n];
                            for (slot, m) in tgt.iter().enumerate() {
                                for (acc, x) in w.iter_mut().zip(m.weight(parts[slot])) {
                                    *acc += x;
                                }
                            }
                            w
                        };
                        let wc: Vec<i64> = {
                            let parts = unrank(&src, col);
                            let mut w = vec![0i64; n];
                            for (slot, m) in src.iter().enumerate() {
                                for (acc, x) in w.iter_mut().zip(m.weight(parts[slot])) {
                                    *acc += x;
                                }
                            }
                            w
                        };
                        assert_eq!(wr, wc);
                    }
                }
            }
        }
    }

    #[test]
    fn yang_baxter_rank_one() {
        assert!(check_yang_baxter(1, 1, 1, 1).unwrap());
    }

    #[test]
    fn swap_composition_is_scalar_dividing_denominators() {
        for (n, l1, l2) in [(1, 1, 1), (2, 1, 2)] {
            let s = swap_composition_scalar(n, l1, l2).unwrap();
            assert!(!s.is_zero());
            // scalar's numerator and denominator divide d12(u) * u^k d21(1/u)
            let r12 = solve_normalized_r(n, l1, l2).unwrap();
            let r21 = solve_normalized_r(n, l2, l1).unwrap();
            let d21 = RatQU::from_poly(r21.denom.clone()).subst_reciprocal();
            let prod = RatQU::from_poly(r12.denom.clone()).mul(&d21);
            // write prod = p/u^k: the scalar times its inverse normalization
            // must clear against it exactly
            let lhs = prod.div(&s).unwrap();
            let poles_only_at_zero = |f: &RatQU| {
                let den = f.denom();
                // denominator must be a power of u
                (0..den.degree().unwrap_or(0))
                    .all(|k| den.coeff(k).is_zero())
            };
            assert!(poles_only_at_zero(&lhs) || lhs.is_polynomial());
        }
    }
}
