//! The quiver Hecke algebra of a dimension vector, realized through its
//! faithful polynomial right representation.
//!
//! Algebra elements are treated semantically as operators on the
//! representation: since the representation is faithful, operator equality
//! is algebra equality, and the defining relations become testable
//! identities of polynomial operators. The intertwiner generator acts by a
//! Demazure quotient on equal neighbours, by a multiplied swap along an
//! arrow, and by a plain swap otherwise; the arrow convention is the one
//! fixed in the quiver module.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{demazure, Field, Monomial, MultiPoly, Poly, Rat, RatQ, TruncSeries};
use crate::combinat::{enumerate_sequences, sequence_content, sequence_permute, transposition};
use crate::error::{Error, Result};
use crate::quiver::DynkinQuiver;

/// Generator of the quiver Hecke algebra. Indices are 1-based:
/// `X(k)` needs 1 <= k <= d, `Tau(k)` needs 1 <= k <= d-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    E(Vec<usize>),
    X(usize),
    Tau(usize),
}

impl Gen {
    pub fn label(&self) -> String {
        match self {
            Gen::E(i) => format!("e({i:?})"),
            Gen::X(k) => format!("x{k}"),
            Gen::Tau(k) => format!("t{k}"),
        }
    }
}

/// Static data shared by all operators over one (quiver, beta) pair.
pub struct KlrContext<'a> {
    pub quiver: &'a DynkinQuiver,
    pub beta: Vec<i64>,
    pub d: usize,
    pub sequences: Vec<Vec<usize>>,
}

impl<'a> KlrContext<'a> {
    pub fn new(quiver: &'a DynkinQuiver, beta: &[i64]) -> Result<Self> {
        let sequences = enumerate_sequences(&quiver.rs, beta)?;
        Ok(KlrContext {
            quiver,
            beta: beta.to_vec(),
            d: beta.iter().sum::<i64>() as usize,
            sequences,
        })
    }

    fn check_gen(&self, gen: &Gen) -> Result<()> {
        match gen {
            Gen::E(i) => {
                if sequence_content(self.quiver.rank(), i) != self.beta {
                    return Err(Error::IndexOutOfRange(format!(
                        "sequence {i:?} has the wrong content"
                    )));
                }
            }
            Gen::X(k) => {
                if *k < 1 || *k > self.d {
                    return Err(Error::IndexOutOfRange(format!("x{k} with d = {}", self.d)));
                }
            }
            Gen::Tau(k) => {
                if *k < 1 || *k + 1 > self.d {
                    return Err(Error::IndexOutOfRange(format!(
                        "t{k} with d = {}",
                        self.d
                    )));
                }
            }
        }
        Ok(())
    }

    /// Branch selector for the intertwiner at position k on sequence i.
    fn tau_case(&self, i: &[usize], k: usize) -> TauCase {
        let (a, b) = (i[k - 1], i[k]);
        if a == b {
            TauCase::Equal
        } else if self.quiver.has_arrow(b, a) {
            TauCase::ArrowIn // i_k <- i_{k+1}
        } else if self.quiver.has_arrow(a, b) {
            TauCase::ArrowOut
        } else {
            TauCase::Orthogonal
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum TauCase {
    Equal,
    ArrowIn,
    ArrowOut,
    Orthogonal,
}

/// Element of the polynomial representation: a finite sum of
/// (sequence, polynomial) pairs. Zero polynomials are not stored.
#[derive(Clone, PartialEq, Debug)]
pub struct KlrVector {
    pub d: usize,
    pub terms: BTreeMap<Vec<usize>, MultiPoly<RatQ>>,
}

impl KlrVector {
    pub fn zero(d: usize) -> Self {
        KlrVector {
            d,
            terms: BTreeMap::new(),
        }
    }

    /// The idempotent basis vector 1_i.
    pub fn unit(i: &[usize]) -> Self {
        KlrVector::monomial(i, MultiPoly::one(i.len()))
    }

    pub fn monomial(i: &[usize], f: MultiPoly<RatQ>) -> Self {
        let mut v = KlrVector::zero(i.len());
        v.add_term(i.to_vec(), f);
        v
    }

    pub fn add_term(&mut self, i: Vec<usize>, f: MultiPoly<RatQ>) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(existing) => {
                let sum = existing.add(&f);
                if sum.is_zero() {
                    self.terms.remove(&i);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(i, f);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, f) in &other.terms {
            out.add_term(i.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, f) in &other.terms {
            out.add_term(i.clone(), f.neg());
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = RatQ::from_int(c);
        KlrVector {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(i, f)| (i.clone(), f.mul_scalar(&c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Right action of one generator on the polynomial representation.
pub fn act(ctx: &KlrContext, gen: &Gen, v: &KlrVector) -> Result<KlrVector> {
    ctx.check_gen(gen)?;
    let mut out = KlrVector::zero(v.d);
    match gen {
        Gen::E(i_sel) => {
            if let Some(f) = v.terms.get(i_sel) {
                out.add_term(i_sel.clone(), f.clone());
            }
        }
        Gen::X(k) => {
            let xk = MultiPoly::var(v.d, *k - 1);
            for (i, f) in &v.terms {
                out.add_term(i.clone(), f.mul(&xk));
            }
        }
        Gen::Tau(k) => {
            for (i, f) in &v.terms {
                match ctx.tau_case(i, *k) {
                    TauCase::Equal => {
                        out.add_term(i.clone(), demazure(f, *k));
                    }
                    TauCase::ArrowIn => {
                        let swapped =
                            sequence_permute(i, &transposition(v.d, *k)).unwrap();
                        let factor = MultiPoly::var(v.d, *k).sub(&MultiPoly::var(v.d, *k - 1));
                        out.add_term(swapped, factor.mul(&f.swap_vars(*k - 1)));
                    }
                    TauCase::ArrowOut | TauCase::Orthogonal => {
                        let swapped =
                            sequence_permute(i, &transposition(v.d, *k)).unwrap();
                        out.add_term(swapped, f.swap_vars(*k - 1));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Left-to-right fold of the right action: the first generator in the word
/// acts first.
pub fn act_word(ctx: &KlrContext, word: &[Gen], v: &KlrVector) -> Result<KlrVector> {
    let mut cur = v.clone();
    for gen in word {
        cur = act(ctx, gen, &cur)?;
    }
    Ok(cur)
}

/// Degree of a generator in the algebra grading; the intertwiner degree
/// depends on the sequence at its application point.
pub fn generator_degree(ctx: &KlrContext, gen: &Gen, i: &[usize]) -> Result<i64> {
    ctx.check_gen(gen)?;
    Ok(match gen {
        Gen::E(_) => 0,
        Gen::X(_) => 2,
        Gen::Tau(k) => {
            let (a, b) = (i[*k - 1], i[*k]);
            -ctx.quiver.rs.cartan[a - 1][b - 1]
        }
    })
}

/// Degree of the algebra word `word` anchored at the idempotent of
/// sequence `anchor` on the right. Returns `None` when an idempotent
/// mismatch makes the word zero.
pub fn word_degree(ctx: &KlrContext, word: &[Gen], anchor: &[usize]) -> Option<i64> {
    let mut seq = anchor.to_vec();
    let mut deg = 0i64;
    for gen in word.iter().rev() {
        match gen {
            Gen::E(j) => {
                if *j != seq {
                    return None;
                }
            }
            Gen::X(_) => deg += 2,
            Gen::Tau(k) => {
                let (a, b) = (seq[*k - 1], seq[*k]);
                deg -= ctx.quiver.rs.cartan[a - 1][b - 1];
                seq.swap(*k - 1, *k);
            }
        }
    }
    Some(deg)
}

/// One side of a defining relation: a signed sum of generator words.
pub type SignedWords = Vec<(i64, Vec<Gen>)>;

/// A single checkable instance of a defining relation.
pub struct RelationInstance {
    pub family: &'static str,
    pub label: String,
    pub lhs: SignedWords,
    pub rhs: SignedWords,
    /// Anchor sequences for the grading check; empty means "all".
    pub anchors: Vec<Vec<usize>>,
}

/// Every instance of the nine defining relation families for the given
/// (quiver, beta), in deterministic order.
pub fn relation_instances(ctx: &KlrContext) -> Vec<RelationInstance> {
    let d = ctx.d;
    let seqs = &ctx.sequences;
    let mut out = Vec::new();

    for i in seqs {
        for j in seqs {
            let rhs = if i == j {
                vec![(1, vec![Gen::E(i.clone())])]
            } else {
                vec![]
            };
            out.push(RelationInstance {
                family: "idempotent_orthogonality",
                label: format!("e{i:?} e{j:?}"),
                lhs: vec![(1, vec![Gen::E(i.clone()), Gen::E(j.clone())])],
                rhs,
                anchors: vec![j.clone()],
            });
        }
    }

    out.push(RelationInstance {
        family: "idempotent_sum",
        label: "sum_e = 1".to_string(),
        lhs: seqs.iter().map(|i| (1, vec![Gen::E(i.clone())])).collect(),
        rhs: vec![(1, vec![])],
        anchors: seqs.clone(),
    });

    for k in 1..=d {
        for l in (k + 1)..=d {
            out.push(RelationInstance {
                family: "x_commute",
                label: format!("x{k} x{l}"),
                lhs: vec![(1, vec![Gen::X(k), Gen::X(l)])],
                rhs: vec![(1, vec![Gen::X(l), Gen::X(k)])],
                anchors: seqs.clone(),
            });
        }
    }

    for k in 1..=d {
        for i in seqs {
            out.push(RelationInstance {
                family: "x_e_commute",
                label: format!("x{k} e{i:?}"),
                lhs: vec![(1, vec![Gen::X(k), Gen::E(i.clone())])],
                rhs: vec![(1, vec![Gen::E(i.clone()), Gen::X(k)])],
                anchors: vec![i.clone()],
            });
        }
    }

    for k in 1..d {
        for i in seqs {
            let swapped = sequence_permute(i, &transposition(d, k)).unwrap();
            out.push(RelationInstance {
                family: "tau_e",
                label: format!("t{k} e{i:?}"),
                lhs: vec![(1, vec![Gen::Tau(k), Gen::E(i.clone())])],
                rhs: vec![(1, vec![Gen::E(swapped), Gen::Tau(k)])],
                anchors: vec![i.clone()],
            });
        }
    }

    for k in 1..d {
        for l in (k + 2)..d {
            out.push(RelationInstance {
                family: "tau_commute_far",
                label: format!("t{k} t{l}"),
                lhs: vec![(1, vec![Gen::Tau(k), Gen::Tau(l)])],
                rhs: vec![(1, vec![Gen::Tau(l), Gen::Tau(k)])],
                anchors: seqs.clone(),
            });
        }
    }

    for k in 1..d {
        for i in seqs {
            let e = Gen::E(i.clone());
            let rhs: SignedWords = match ctx.tau_case(i, k) {
                TauCase::ArrowIn => vec![
                    (1, vec![Gen::X(k), e.clone()]),
                    (-1, vec![Gen::X(k + 1), e.clone()]),
                ],
                TauCase::ArrowOut => vec![
                    (1, vec![Gen::X(k + 1), e.clone()]),
                    (-1, vec![Gen::X(k), e.clone()]),
                ],
                TauCase::Orthogonal => vec![(1, vec![e.clone()])],
                TauCase::Equal => vec![],
            };
            out.push(RelationInstance {
                family: "tau_square",
                label: format!("t{k}^2 e{i:?}"),
                lhs: vec![(1, vec![Gen::Tau(k), Gen::Tau(k), e])],
                rhs,
                anchors: vec![i.clone()],
            });
        }
    }

    for k in 1..d {
        for l in 1..=d {
            for i in seqs {
                let e = Gen::E(i.clone());
                let sl = if l == k {
                    k + 1
                } else if l == k + 1 {
                    k
                } else {
                    l
                };
                let equal = i[k - 1] == i[k];
                let rhs: SignedWords = if equal && l == k {
                    vec![(-1, vec![e.clone()])]
                } else if equal && l == k + 1 {
                    vec![(1, vec![e.clone()])]
                } else {
                    vec![]
                };
                out.push(RelationInstance {
                    family: "tau_x",
                    label: format!("t{k} x{l} e{i:?}"),
                    lhs: vec![
                        (1, vec![Gen::Tau(k), Gen::X(l), e.clone()]),
                        (-1, vec![Gen::X(sl), Gen::Tau(k), e]),
                    ],
                    rhs,
                    anchors: vec![i.clone()],
                });
            }
        }
    }

    for k in 1..d {
        if k + 1 >= d {
            continue;
        }
        for i in seqs {
            let e = Gen::E(i.clone());
            let rhs: SignedWords = if i[k - 1] == i[k + 1] {
                match ctx.tau_case(i, k) {
                    TauCase::ArrowIn => vec![(1, vec![e.clone()])],
                    TauCase::ArrowOut => vec![(-1, vec![e.clone()])],
                    _ => vec![],
                }
            } else {
                vec![]
            };
            out.push(RelationInstance {
                family: "braid",
                label: format!("braid(t{k},t{}) e{i:?}", k + 1),
                lhs: vec![
                    (
                        1,
                        vec![Gen::Tau(k + 1), Gen::Tau(k), Gen::Tau(k + 1), e.clone()],
                    ),
                    (-1, vec![Gen::Tau(k), Gen::Tau(k + 1), Gen::Tau(k), e]),
                ],
                rhs,
                anchors: vec![i.clone()],
            });
        }
    }

    out
}

/// Evaluate a signed sum of words on a vector.
pub fn eval_side(ctx: &KlrContext, side: &SignedWords, v: &KlrVector) -> Result<KlrVector> {
    let mut acc = KlrVector::zero(v.d);
    for (sign, word) in side {
        let w = act_word(ctx, word, v)?;
        acc = acc.add(&w.scale(*sign));
    }
    Ok(acc)
}

#[derive(Serialize, Clone, Debug)]
pub struct RelationReport {
    pub relation_family: String,
    pub instance: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Test vectors: the monomial basis up to total degree `exhaustive_degree`
/// on every component, plus `trials` seeded random vectors with polynomial
/// entries of degree <= `max_poly_degree`.
pub fn test_vectors(
    ctx: &KlrContext,
    exhaustive_degree: u32,
    trials: usize,
    seed: u64,
    max_poly_degree: u32,
) -> Vec<KlrVector> {
    let d = ctx.d;
    let mut vectors = Vec::new();
    let mut monomials: Vec<Monomial> = vec![Monomial::constant(d)];
    for _ in 0..exhaustive_degree {
        let mut next = Vec::new();
        for m in &monomials {
            if m.total_degree() < exhaustive_degree {
                for v in 0..d {
                    let mut e = m.clone();
                    e.0[v] += 1;
                    next.push(e);
                }
            }
        }
        monomials.extend(next);
        monomials.sort();
        monomials.dedup();
    }
    for i in &ctx.sequences {
        for m in &monomials {
            vectors.push(KlrVector::monomial(
                i,
                MultiPoly::from_terms(d, [(m.clone(), RatQ::one())]),
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut v = KlrVector::zero(d);
        for i in &ctx.sequences {
            let mut f = MultiPoly::zero(d);
            for _ in 0..3 {
                let mono = Monomial(
                    (0..d)
                        .map(|_| rng.gen_range(0..=max_poly_degree.min(3)) as u16)
                        .collect(),
                );
                if mono.total_degree() > max_poly_degree {
                    continue;
                }
                let c0 = rng.gen_range(-3i64..=3);
                let c1 = rng.gen_range(-2i64..=2);
                let coeff = RatQ::from_poly(Poly::from_coeffs(vec![
                    Rat::from_int(c0),
                    Rat::from_int(c1),
                ]));
                f.add_term(mono, coeff);
            }
            v.add_term(i.clone(), f);
        }
        if !v.is_zero() {
            vectors.push(v);
        }
    }
    vectors
}

fn describe_vector(v: &KlrVector) -> String {
    let parts: Vec<String> = v
        .terms
        .iter()
        .map(|(i, f)| format!("{i:?}: {} terms", f.num_terms()))
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Check every defining relation instance as an operator identity on the
/// polynomial representation, exhaustively on low-degree monomials and on
/// seeded random vectors. Failures are reported, not raised.
pub fn verify_relations(
    quiver: &DynkinQuiver,
    beta: &[i64],
    trials: usize,
    seed: u64,
    max_poly_degree: u32,
) -> Result<Vec<RelationReport>> {
    let ctx = KlrContext::new(quiver, beta)?;
    let vectors = test_vectors(&ctx, 3, trials, seed, max_poly_degree);
    let instances = relation_instances(&ctx);
    let mut reports = Vec::with_capacity(instances.len());
    for inst in &instances {
        let mut counterexample = None;
        for v in &vectors {
            let lhs = eval_side(&ctx, &inst.lhs, v)?;
            let rhs = eval_side(&ctx, &inst.rhs, v)?;
            if lhs != rhs {
                counterexample = Some(format!(
                    "on vector {}: lhs != rhs",
                    describe_vector(v)
                ));
                break;
            }
        }
        reports.push(RelationReport {
            relation_family: inst.family.to_string(),
            instance: inst.label.clone(),
            status: if counterexample.is_none() {
                "pass".into()
            } else {
                "fail".into()
            },
            counterexample,
        });
    }
    Ok(reports)
}

/// Symbolic homogeneity of every defining relation: all nonzero words in
/// one instance must carry the same degree.
pub fn verify_grading(quiver: &DynkinQuiver, beta: &[i64]) -> Result<Vec<RelationReport>> {
    let ctx = KlrContext::new(quiver, beta)?;
    let instances = relation_instances(&ctx);
    let mut reports = Vec::new();
    for inst in &instances {
        let mut failure = None;
        'outer: for anchor in &inst.anchors {
            let mut degrees = Vec::new();
            for (_, word) in inst.lhs.iter().chain(inst.rhs.iter()) {
                if let Some(deg) = word_degree(&ctx, word, anchor) {
                    degrees.push(deg);
                }
            }
            degrees.dedup();
            if degrees.len() > 1 {
                failure = Some(format!("anchor {anchor:?}: degrees {degrees:?}"));
                break 'outer;
            }
        }
        reports.push(RelationReport {
            relation_family: inst.family.to_string(),
            instance: format!("grading {}", inst.label),
            status: if failure.is_none() {
                "pass".into()
            } else {
                "fail".into()
            },
            counterexample: failure,
        });
    }
    Ok(reports)
}

/// Element of the completed polynomial representation: truncated series
/// coefficients with a uniform order.
#[derive(Clone, PartialEq, Debug)]
pub struct CompletedKlrVector {
    pub d: usize,
    pub order: usize,
    pub terms: BTreeMap<Vec<usize>, TruncSeries<RatQ>>,
}

impl CompletedKlrVector {
    pub fn zero(d: usize, order: usize) -> Self {
        CompletedKlrVector {
            d,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(i: &[usize], order: usize) -> Self {
        let mut v = CompletedKlrVector::zero(i.len(), order);
        v.add_term(i.to_vec(), TruncSeries::one(i.len(), order));
        v
    }

    pub fn from_series(i: &[usize], s: TruncSeries<RatQ>) -> Self {
        let mut v = CompletedKlrVector::zero(i.len(), s.order());
        v.add_term(i.to_vec(), s);
        v
    }

    pub fn add_term(&mut self, i: Vec<usize>, f: TruncSeries<RatQ>) {
        self.order = self.order.min(f.order());
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(existing) => {
                let sum = existing.add(&f);
                if sum.is_zero() {
                    self.terms.remove(&i);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(i, f);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        for (i, f) in &other.terms {
            out.add_term(i.clone(), f.clone());
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = RatQ::from_int(c);
        CompletedKlrVector {
            d: self.d,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(i, f)| (i.clone(), f.mul_scalar(&c)))
                .collect(),
        }
    }

    /// Truncate all components to a common order and drop zeros.
    pub fn normalized(&self, order: usize) -> Self {
        let mut out = CompletedKlrVector::zero(self.d, order);
        for (i, f) in &self.terms {
            out.add_term(i.clone(), f.truncate(order));
        }
        out.order = order;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The same action formulas over truncated power series. The Demazure
/// branch loses one order of truncation; everything else preserves it.
pub fn act_completed(
    ctx: &KlrContext,
    gen: &Gen,
    v: &CompletedKlrVector,
) -> Result<CompletedKlrVector> {
    ctx.check_gen(gen)?;
    let d = v.d;
    let out_order = match gen {
        Gen::Tau(k) if v.terms.keys().any(|i| ctx.tau_case(i, *k) == TauCase::Equal) => {
            v.order.saturating_sub(1)
        }
        _ => v.order,
    };
    let mut out = CompletedKlrVector::zero(d, out_order);
    match gen {
        Gen::E(i_sel) => {
            if let Some(f) = v.terms.get(i_sel) {
                out.add_term(i_sel.clone(), f.clone());
            }
        }
        Gen::X(k) => {
            let xk = MultiPoly::var(d, *k - 1);
            for (i, f) in &v.terms {
                out.add_term(i.clone(), f.mul_poly(&xk));
            }
        }
        Gen::Tau(k) => {
            for (i, f) in &v.terms {
                match ctx.tau_case(i, *k) {
                    TauCase::Equal => {
                        let mut linear = vec![RatQ::zero(); d];
                        linear[*k - 1] = RatQ::one();
                        linear[*k] = RatQ::one().neg();
                        let num = f.swap_vars(*k - 1).sub(f);
                        let quo = num.divide_linear(&linear)?;
                        out.add_term(i.clone(), quo);
                    }
                    TauCase::ArrowIn => {
                        let swapped = sequence_permute(i, &transposition(d, *k)).unwrap();
                        let factor =
                            MultiPoly::var(d, *k).sub(&MultiPoly::var(d, *k - 1));
                        out.add_term(
                            swapped,
                            f.swap_vars(*k - 1).mul_poly(&factor).truncate(out_order),
                        );
                    }
                    TauCase::ArrowOut | TauCase::Orthogonal => {
                        let swapped = sequence_permute(i, &transposition(d, *k)).unwrap();
                        out.add_term(swapped, f.swap_vars(*k - 1).truncate(out_order));
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn act_word_completed(
    ctx: &KlrContext,
    word: &[Gen],
    v: &CompletedKlrVector,
) -> Result<CompletedKlrVector> {
    let mut cur = v.clone();
    for gen in word {
        cur = act_completed(ctx, gen, &cur)?;
    }
    Ok(cur)
}
