//! Shuffle combinatorics behind the fundamental twisted cyclic cocycle, and
//! the twisted Hochschild coboundary on a small test algebra.
//!
//! A pattern is a word in `d` (written `0`) and `dbar` (written `1`) with
//! `ell` of each. Two patterns are adjacent when they differ by swapping
//! neighbouring letters. The coboundary images used to move between
//! patterns are `phi_a - phi_b` for adjacent `a, b`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use dashu_ratio::RBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::coordring::{enumerate_monomials, QMonomial};
use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::qarith::{rational_pow, QParam};

/// A balanced `d`/`dbar` word, `false` for `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivPattern(Vec<bool>);

impl DerivPattern {
    pub fn from_bits(bits: &str) -> Result<Self> {
        let v = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidArgument(format!("bad pattern {bits}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let ones = v.iter().filter(|&&b| b).count();
        if v.len() % 2 != 0 || 2 * ones != v.len() {
            return Err(Error::InvalidArgument(format!("unbalanced pattern {bits}")));
        }
        Ok(Self(v))
    }

    pub fn ell(&self) -> usize {
        self.0.len() / 2
    }

    pub fn bits(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// `d^ell dbar^ell`.
    pub fn holomorphic_first(ell: usize) -> Self {
        Self((0..2 * ell).map(|i| i >= ell).collect())
    }

    /// `dbar^ell d^ell`.
    pub fn antiholomorphic_first(ell: usize) -> Self {
        Self((0..2 * ell).map(|i| i < ell).collect())
    }

    pub fn inversions(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for &b in &self.0 {
            if b {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    /// Differ by one swap of neighbouring distinct letters.
    pub fn is_adjacent(&self, other: &Self) -> bool {
        if self.0.len() != other.0.len() {
            return false;
        }
        let diff: Vec<usize> = (0..self.0.len())
            .filter(|&i| self.0[i] != other.0[i])
            .collect();
        diff.len() == 2 && diff[1] == diff[0] + 1
    }
}

impl fmt::Display for DerivPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "∂̄" } else { "∂" })?;
        }
        Ok(())
    }
}

impl Serialize for DerivPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.bits())
    }
}

/// Every balanced pattern of length `2 ell`, lexicographically.
pub fn enumerate_shuffles(ell: usize) -> Vec<DerivPattern> {
    let n = 2 * ell;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, zeros: usize, ones: usize, cur: &mut Vec<bool>, out: &mut Vec<DerivPattern>) {
        if cur.len() == n {
            out.push(DerivPattern(cur.clone()));
            return;
        }
        for (bit, left) in [(false, zeros), (true, ones)] {
            if left > 0 {
                cur.push(bit);
                if bit {
                    go(n, zeros, ones - 1, cur, out);
                } else {
                    go(n, zeros - 1, ones, cur, out);
                }
                cur.pop();
            }
        }
    }
    go(n, ell, ell, &mut cur, &mut out);
    out
}

/// Formal combination of the `phi_pi` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCochain {
    combo: BTreeMap<DerivPattern, RBig>,
}

impl FormalCochain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn phi(p: &DerivPattern) -> Self {
        let mut c = Self::zero();
        c.add_term(p, &RBig::ONE);
        c
    }

    /// `tau = sum_pi phi_pi`.
    pub fn tau(ell: usize) -> Self {
        let mut c = Self::zero();
        for p in enumerate_shuffles(ell) {
            c.add_term(&p, &RBig::ONE);
        }
        c
    }

    pub fn add_term(&mut self, p: &DerivPattern, c: &RBig) {
        let e = self.combo.entry(p.clone()).or_insert(RBig::ZERO);
        *e = &*e + c;
        if *e == RBig::ZERO {
            self.combo.remove(p);
        }
    }

    pub fn add_scaled(&mut self, other: &FormalCochain, s: &RBig) {
        for (p, c) in &other.combo {
            self.add_term(p, &(c * s));
        }
    }

    pub fn coeff(&self, p: &DerivPattern) -> RBig {
        self.combo.get(p).cloned().unwrap_or(RBig::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<DerivPattern, RBig> {
        &self.combo
    }
}

/// Image `phi_a - phi_b` of the coboundary witness attached to an edge.
pub fn edge_image(a: &DerivPattern, b: &DerivPattern) -> FormalCochain {
    let mut c = FormalCochain::phi(a);
    c.add_term(b, &-RBig::ONE);
    c
}

/// Two chains covering every pattern and the bridge between them.
#[derive(Clone, Debug, Serialize)]
pub struct Chains {
    pub ell: usize,
    pub chain1: Vec<DerivPattern>,
    pub chain2: Vec<DerivPattern>,
    /// 1-based index into `chain2` of the member adjacent to the end of `chain1`.
    pub bridge: usize,
}

impl Chains {
    pub fn r(&self) -> usize {
        self.chain1.len()
    }

    /// Edges in unknown order: along `chain1`, the bridge, then along `chain2`.
    pub fn edges(&self) -> Vec<(DerivPattern, DerivPattern)> {
        let mut e: Vec<_> = self
            .chain1
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        e.push((
            self.chain1.last().expect("non-empty").clone(),
            self.chain2[self.bridge - 1].clone(),
        ));
        e.extend(self.chain2.windows(2).map(|w| (w[0].clone(), w[1].clone())));
        e
    }
}

struct Graph {
    nbrs: Vec<Vec<usize>>,
    color: Vec<bool>,
}

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    start2: usize,
    used: Vec<bool>,
    /// Required bridge index, if any.
    bridge: Option<usize>,
    end1: usize,
}

impl Search<'_> {
    fn free(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.used.len()).filter(move |&v| !self.used[v])
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = self.used.clone();
        let mut comps = Vec::new();
        for s in 0..seen.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.g.nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    fn dead_ends(&self, head: usize, skip: Option<usize>) -> usize {
        self.free()
            .filter(|&v| Some(v) != skip)
            .filter(|&v| {
                self.g.nbrs[v]
                    .iter()
                    .filter(|&&w| !self.used[w] || w == head)
                    .count()
                    <= 1
            })
            .count()
    }

    /// Color counts `(even, odd)` an alternating path of `len` vertices
    /// starting at color `c` needs.
    fn needs(c: bool, len: usize) -> (usize, usize) {
        let same = len.div_ceil(2);
        let other = len / 2;
        if c {
            (other, same)
        } else {
            (same, other)
        }
    }

    fn free_colors(&self) -> (usize, usize) {
        self.free().fold((0, 0), |(e, o), v| {
            if self.g.color[v] {
                (e, o + 1)
            } else {
                (e + 1, o)
            }
        })
    }

    fn chain1_viable(&self, head: usize, len: usize) -> bool {
        if self.used[self.start2] {
            return false;
        }
        let rest = self.r - len;
        let next_color = self.g.color[head] ^ true;
        let (e1, o1) = Self::needs(next_color, rest);
        let (e2, o2) = Self::needs(self.g.color[self.start2], self.r);
        if self.free_colors() != (e1 + e2, o1 + o2) {
            return false;
        }
        let touches_head = |c: &Vec<usize>| c.iter().any(|v| self.g.nbrs[head].contains(v));
        let comps = self.components();
        let ok = match comps.len() {
            1 => rest == 0 || touches_head(&comps[0]),
            2 => {
                let other = comps.iter().find(|c| !c.contains(&self.start2));
                other.is_some_and(|c| touches_head(c) && c.len() == rest)
            }
            _ => false,
        };
        ok && self.dead_ends(head, Some(self.start2)) <= 2
    }

    fn extend1(&mut self, path: &mut Vec<usize>) -> Option<Vec<usize>> {
        let head = *path.last().expect("non-empty");
        if path.len() == self.r {
            if !self.g.nbrs[head].iter().any(|&w| !self.used[w]) {
                return None;
            }
            self.end1 = head;
            if !self.bridge_ok(self.start2, 1) {
                return None;
            }
            let mut p2 = vec![self.start2];
            self.used[self.start2] = true;
            let found = self.extend2(&mut p2);
            self.used[self.start2] = false;
            return found;
        }
        for w in self.g.nbrs[head].clone() {
            if self.used[w] || w == self.start2 {
                continue;
            }
            self.used[w] = true;
            path.push(w);
            if self.chain1_viable(w, path.len()) {
                if let Some(p2) = self.extend1(path) {
                    return Some(p2);
                }
            }
            path.pop();
            self.used[w] = false;
        }
        None
    }

    /// Whether placing `v` at 1-based position `pos` of chain 2 is
    /// compatible with the required bridge.
    fn bridge_ok(&self, v: usize, pos: usize) -> bool {
        let adjacent = self.g.nbrs[self.end1].contains(&v);
        match self.bridge {
            Some(k) if pos < k => !adjacent,
            Some(k) if pos == k => adjacent,
            _ => true,
        }
    }

    fn extend2(&mut self, path: &mut Vec<usize>) -> Option<Vec<usize>> {
        let head = *path.last().expect("non-empty");
        if path.len() == self.r {
            return Some(path.clone());
        }
        for w in self.g.nbrs[head].clone() {
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            path.push(w);
            let comps = self.components();
            let viable = self.bridge_ok(w, path.len())
                && (comps.is_empty()
                    || (comps.len() == 1 && comps[0].iter().any(|v| self.g.nbrs[w].contains(v))))
                && self.dead_ends(w, None) <= 1;
            if viable {
                if let Some(p) = self.extend2(path) {
                    return Some(p);
                }
            }
            path.pop();
            self.used[w] = false;
        }
        None
    }
}

/// Splits all patterns into two adjacent-transposition chains starting at
/// `d^ell dbar^ell` and `dbar^ell d^ell`, each of length `binom(2 ell, ell)/2`,
/// whose ends are bridged. Backtracking in lexicographic order; the first
/// solution is returned. A bridge into the second member of chain 2 is
/// preferred, since that is the shape of the closed-form solution; any
/// bridge is accepted otherwise.
pub fn build_chains(ell: usize) -> Result<Chains> {
    let r = enumerate_shuffles(ell).len() / 2;
    if r >= 2 {
        if let Ok(c) = build_chains_with_bridge(ell, Some(2)) {
            return Ok(c);
        }
    }
    build_chains_with_bridge(ell, None)
}

/// As [`build_chains`], optionally forcing the bridge index.
pub fn build_chains_with_bridge(ell: usize, bridge: Option<usize>) -> Result<Chains> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be at least 1".into()));
    }
    let patterns = enumerate_shuffles(ell);
    let nbrs: Vec<Vec<usize>> = patterns
        .iter()
        .map(|p| {
            (0..patterns.len())
                .filter(|&j| p.is_adjacent(&patterns[j]))
                .collect()
        })
        .collect();
    let color = patterns.iter().map(|p| p.inversions() % 2 == 1).collect();
    let g = Graph { nbrs, color };
    let index = |p: &DerivPattern| patterns.iter().position(|x| x == p).expect("enumerated");
    let start1 = index(&DerivPattern::holomorphic_first(ell));
    let start2 = index(&DerivPattern::antiholomorphic_first(ell));
    let r = patterns.len() / 2;

    let mut search = Search {
        g: &g,
        r,
        start2,
        used: vec![false; patterns.len()],
        bridge,
        end1: start1,
    };
    search.used[start1] = true;
    let mut p1 = vec![start1];
    let found = if search.chain1_viable(start1, 1) {
        search.extend1(&mut p1).map(|p2| (p1, p2))
    } else {
        None
    };
    let (p1, p2) = found.ok_or(Error::ChainSearchExhausted { ell })?;
    let end = *p1.last().expect("non-empty");
    let found_bridge = p2
        .iter()
        .position(|v| g.nbrs[end].contains(v))
        .expect("search guarantees a bridge")
        + 1;
    Ok(Chains {
        ell,
        chain1: p1.iter().map(|&i| patterns[i].clone()).collect(),
        chain2: p2.iter().map(|&i| patterns[i].clone()).collect(),
        bridge: found_bridge,
    })
}

/// Exact solution of `m tau - k phi_{pi_1} = sum_i x_i (phi_a - phi_b)`.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleSolution {
    pub chains: Chains,
    #[serde(serialize_with = "ser_rational")]
    pub m: RBig,
    #[serde(serialize_with = "ser_rationals")]
    pub x: Vec<RBig>,
    #[serde(serialize_with = "ser_rational")]
    pub k: RBig,
    /// `x` equals the bridge-aware closed form exactly.
    pub matches_closed_form: bool,
    /// `|x_i|` equals `(2r - i)|m|` except `|x_{r+1}| = |m|`.
    pub matches_sign_absorbed_form: bool,
}

fn ser_rational<S: Serializer>(r: &RBig, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_rationals<S: Serializer>(v: &[RBig], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<String> = v.iter().map(RBig::to_string).collect();
    strs.serialize(s)
}

/// Closed form for the edge coefficients with bridge into `chain2[k - 1]`:
/// `x_i = -(2r - i) m` for `i <= r`, `x_{r+j} = j m` for `j < k`, and
/// `x_{r+j} = -(r - j) m` for `j >= k`.
pub fn closed_form(r: usize, bridge: usize, m: &RBig) -> Vec<RBig> {
    let int = |v: i64| RBig::from(v);
    (1..2 * r)
        .map(|i| {
            let c = if i <= r {
                -(2 * r as i64 - i as i64)
            } else {
                let j = (i - r) as i64;
                if j < bridge as i64 {
                    j
                } else {
                    -(r as i64 - j)
                }
            };
            int(c) * m
        })
        .collect()
}

fn displayed_magnitudes(r: usize, m: &RBig) -> Vec<RBig> {
    let abs_m = if *m < RBig::ZERO {
        -m.clone()
    } else {
        m.clone()
    };
    (1..2 * r)
        .map(|i| {
            if i == r + 1 {
                abs_m.clone()
            } else {
                RBig::from((2 * r - i) as i64) * &abs_m
            }
        })
        .collect()
}

/// Rows indexed by patterns, columns by edge images.
fn edge_system(
    patterns: &[DerivPattern],
    edges: &[(DerivPattern, DerivPattern)],
) -> Vec<Vec<RBig>> {
    let images: Vec<FormalCochain> = edges.iter().map(|(a, b)| edge_image(a, b)).collect();
    patterns
        .iter()
        .map(|p| images.iter().map(|img| img.coeff(p)).collect())
        .collect()
}

pub fn solve_cocycle_system(ell: usize, m: &RBig) -> Result<CocycleSolution> {
    let chains = build_chains(ell)?;
    let patterns = enumerate_shuffles(ell);
    let edges = chains.edges();
    let first = &chains.chain1[0];
    // Unknowns x_1..x_{2r-1} then k; the k column carries -phi_{pi_1}.
    let mut rows = edge_system(&patterns, &edges);
    let target = FormalCochain::tau(ell);
    let mut rhs = Vec::with_capacity(patterns.len());
    for (row, p) in rows.iter_mut().zip(&patterns) {
        row.push(if p == first { RBig::ONE } else { RBig::ZERO });
        rhs.push(&target.coeff(p) * m);
    }
    let mut sol = solve_exact(&rows, &rhs).ok_or(Error::InconsistentSystem { ell })?;
    let k = sol.pop().expect("k column");
    let r = chains.r();
    let matches_closed_form = sol == closed_form(r, chains.bridge, m);
    let magnitudes: Vec<RBig> = sol
        .iter()
        .map(|x| {
            if *x < RBig::ZERO {
                -x.clone()
            } else {
                x.clone()
            }
        })
        .collect();
    let matches_sign_absorbed_form = magnitudes == displayed_magnitudes(r, m);
    Ok(CocycleSolution {
        chains,
        m: m.clone(),
        x: sol,
        k,
        matches_closed_form,
        matches_sign_absorbed_form,
    })
}

/// Outcome of the membership test, with the certificate when it holds.
#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    pub ell: usize,
    pub member: bool,
    pub pairs: Vec<(DerivPattern, DerivPattern)>,
    #[serde(serialize_with = "ser_rationals")]
    pub coefficients: Vec<RBig>,
    pub note: Option<String>,
}

fn membership_over(ell: usize, pairs: Vec<(DerivPattern, DerivPattern)>) -> Membership {
    let patterns = enumerate_shuffles(ell);
    let r = patterns.len() / 2;
    let mut target = FormalCochain::tau(ell);
    target.add_scaled(
        &FormalCochain::phi(&DerivPattern::holomorphic_first(ell)),
        &-RBig::from(2 * r as i64),
    );
    let rows = edge_system(&patterns, &pairs);
    let rhs: Vec<RBig> = patterns.iter().map(|p| target.coeff(p)).collect();
    match solve_exact(&rows, &rhs) {
        Some(x) => {
            let mut check = target.clone();
            for ((a, b), c) in pairs.iter().zip(&x) {
                check.add_scaled(&edge_image(a, b), &-c.clone());
            }
            Membership {
                ell,
                member: check.is_zero(),
                pairs,
                coefficients: x,
                note: None,
            }
        }
        None => Membership {
            ell,
            member: false,
            pairs,
            coefficients: vec![],
            note: Some("system inconsistent".into()),
        },
    }
}

/// Whether `tau - 2r phi_{pi_1}` lies in the span of the chain edge images.
pub fn verify_membership(ell: usize) -> Membership {
    match build_chains(ell) {
        Ok(chains) => membership_over(ell, chains.edges()),
        Err(e) => Membership {
            ell,
            member: false,
            pairs: vec![],
            coefficients: vec![],
            note: Some(e.to_string()),
        },
    }
}

/// As [`verify_membership`], over the edges of a breadth-first spanning tree
/// of the adjacency graph rooted at `d^ell dbar^ell`. Needs no chains.
pub fn verify_membership_spanning_tree(ell: usize) -> Membership {
    let patterns = enumerate_shuffles(ell);
    let root = DerivPattern::holomorphic_first(ell);
    let mut seen = vec![false; patterns.len()];
    let mut pairs = Vec::new();
    let start = patterns
        .iter()
        .position(|p| *p == root)
        .expect("enumerated");
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in 0..patterns.len() {
            if !seen[w] && patterns[v].is_adjacent(&patterns[w]) {
                seen[w] = true;
                pairs.push((patterns[v].clone(), patterns[w].clone()));
                queue.push_back(w);
            }
        }
    }
    membership_over(ell, pairs)
}

/// Truncated algebra `C<z_1, ..., z_g>/(z_i z_j - q z_j z_i, deg > d)` with
/// basis the normal-ordered monomials of degree `<= d`, and the diagonal
/// automorphism `z_i -> c_i z_i`.
#[derive(Clone, Debug)]
pub struct ToyAlgebra {
    q: RBig,
    chars: Vec<RBig>,
    basis: Vec<QMonomial>,
    index: BTreeMap<QMonomial, usize>,
}

impl ToyAlgebra {
    pub fn new(q: &QParam, scalings: Vec<RBig>, max_degree: u32) -> Self {
        let g = scalings.len();
        let basis: Vec<QMonomial> = (0..=max_degree)
            .flat_map(|d| enumerate_monomials(g, d))
            .collect();
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Self {
            q: q.value().clone(),
            chars: scalings,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `e_a e_b = c e_idx`, or `None` when the product vanishes.
    fn mul(&self, a: usize, b: usize) -> Option<(RBig, usize)> {
        let (e, m) = self.basis[a].product(&self.basis[b]);
        self.index.get(&m).map(|&i| (rational_pow(&self.q, e), i))
    }

    /// Eigenvalue of the automorphism on `e_a`.
    fn character(&self, a: usize) -> RBig {
        self.basis[a]
            .exponents()
            .iter()
            .zip(&self.chars)
            .fold(RBig::ONE, |acc, (&s, c)| acc * rational_pow(c, s as i64))
    }
}

/// A multilinear functional on `A^{n+1}`, evaluated on basis tuples.
trait Cochain {
    fn degree(&self) -> usize;
    fn eval(&self, tuple: &[usize]) -> RBig;
}

struct DenseCochain {
    n: usize,
    dim: usize,
    values: Vec<RBig>,
}

impl Cochain for DenseCochain {
    fn degree(&self) -> usize {
        self.n
    }

    fn eval(&self, tuple: &[usize]) -> RBig {
        let idx = tuple.iter().fold(0, |acc, &t| acc * self.dim + t);
        self.values[idx].clone()
    }
}

/// `(b_sigma phi)(a_0, ..., a_{n+1}) = sum_{i=0}^n (-1)^i phi(.., a_i a_{i+1}, ..)
/// + (-1)^{n+1} phi(sigma(a_{n+1}) a_0, a_1, ..., a_n)`.
struct Coboundary<'a> {
    inner: &'a dyn Cochain,
    alg: &'a ToyAlgebra,
}

impl Cochain for Coboundary<'_> {
    fn degree(&self) -> usize {
        self.inner.degree() + 1
    }

    fn eval(&self, a: &[usize]) -> RBig {
        let n = self.inner.degree();
        let mut acc = RBig::ZERO;
        let mut buf = Vec::with_capacity(n + 1);
        for i in 0..=n {
            if let Some((c, ab)) = self.alg.mul(a[i], a[i + 1]) {
                buf.clear();
                buf.extend_from_slice(&a[..i]);
                buf.push(ab);
                buf.extend_from_slice(&a[i + 2..]);
                let term = c * self.inner.eval(&buf);
                acc = if i % 2 == 0 { acc + term } else { acc - term };
            }
        }
        if let Some((c, ab)) = self.alg.mul(a[n + 1], a[0]) {
            buf.clear();
            buf.push(ab);
            buf.extend_from_slice(&a[1..=n]);
            let term = c * self.alg.character(a[n + 1]) * self.inner.eval(&buf);
            acc = if (n + 1).is_multiple_of(2) {
                acc + term
            } else {
                acc - term
            };
        }
        acc
    }
}

/// `(lambda_sigma phi)(a_0, ..., a_n) = (-1)^n phi(sigma(a_n), a_0, ..., a_{n-1})`.
struct Lambda<'a> {
    inner: &'a dyn Cochain,
    alg: &'a ToyAlgebra,
}

impl Cochain for Lambda<'_> {
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn eval(&self, a: &[usize]) -> RBig {
        let n = self.inner.degree();
        let mut buf = Vec::with_capacity(n + 1);
        buf.push(a[n]);
        buf.extend_from_slice(&a[..n]);
        let v = self.alg.character(a[n]) * self.inner.eval(&buf);
        if n.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

fn lambda_power(c: &dyn Cochain, alg: &ToyAlgebra, times: usize, a: &[usize]) -> RBig {
    if times == 0 {
        return c.eval(a);
    }
    struct Wrap<'a> {
        c: &'a dyn Cochain,
        alg: &'a ToyAlgebra,
        times: usize,
    }
    impl Cochain for Wrap<'_> {
        fn degree(&self) -> usize {
            self.c.degree()
        }
        fn eval(&self, a: &[usize]) -> RBig {
            lambda_power(self.c, self.alg, self.times, a)
        }
    }
    let inner = Wrap {
        c,
        alg,
        times: times - 1,
    };
    Lambda { inner: &inner, alg }.eval(a)
}

/// Result of the coboundary checks on the toy algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CoboundaryReport {
    pub n: usize,
    pub samples: usize,
    pub algebra_dim: usize,
    pub scalings: Vec<String>,
    /// Tuples checked per cochain (all of them when small enough).
    pub tuples_per_sample: usize,
    pub b_squared_violations: usize,
    pub invariance_violations: usize,
    pub pass: bool,
}

/// Tuple spaces above this size are sampled rather than enumerated.
const FULL_ENUMERATION_LIMIT: usize = 10_000;
const SAMPLED_TUPLES: usize = 400;

fn tuples(dim: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let total = dim.checked_pow(len as u32).unwrap_or(usize::MAX);
    if total <= FULL_ENUMERATION_LIMIT {
        (0..total)
            .map(|mut i| {
                let mut t = vec![0; len];
                for slot in t.iter_mut().rev() {
                    *slot = i % dim;
                    i /= dim;
                }
                t
            })
            .collect()
    } else {
        (0..SAMPLED_TUPLES)
            .map(|_| (0..len).map(|_| rng.gen_range(0..dim)).collect())
            .collect()
    }
}

fn random_cochain(
    alg: &ToyAlgebra,
    n: usize,
    rng: &mut ChaCha8Rng,
    invariant: bool,
) -> DenseCochain {
    let dim = alg.dim();
    let count = dim.pow(n as u32 + 1);
    let values = (0..count)
        .map(|mut idx| {
            let v = RBig::from_parts(
                rng.gen_range(-9i64..=9).into(),
                rng.gen_range(1u64..=4).into(),
            );
            if !invariant {
                return v;
            }
            let mut ch = RBig::ONE;
            for _ in 0..=n {
                ch *= alg.character(idx % dim);
                idx /= dim;
            }
            if ch == RBig::ONE {
                v
            } else {
                RBig::ZERO
            }
        })
        .collect();
    DenseCochain { n, dim, values }
}

/// Checks `b_sigma^2 = 0` on `samples` random `n`-cochains and that
/// `b_sigma` maps `lambda_sigma^{n+1}`-fixed cochains to
/// `lambda_sigma^{n+2}`-fixed ones, exactly.
pub fn twisted_coboundary_check(
    alg: &ToyAlgebra,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<CoboundaryReport> {
    if n > 4 {
        return Err(Error::InvalidArgument(format!(
            "cochain degree {n} above 4 is not supported"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b2 = 0;
    let mut inv = 0;
    let mut per_sample = 0;
    for _ in 0..samples {
        let phi = random_cochain(alg, n, &mut rng, false);
        let b = Coboundary { inner: &phi, alg };
        let bb = Coboundary { inner: &b, alg };
        let ts = tuples(alg.dim(), n + 3, &mut rng);
        per_sample = ts.len();
        b2 += ts.iter().filter(|t| bb.eval(t) != RBig::ZERO).count();

        let psi = random_cochain(alg, n, &mut rng, true);
        let ts = tuples(alg.dim(), n + 1, &mut rng);
        let fixed = ts
            .iter()
            .all(|t| lambda_power(&psi, alg, n + 1, t) == psi.eval(t));
        let bpsi = Coboundary { inner: &psi, alg };
        let ts = tuples(alg.dim(), n + 2, &mut rng);
        inv += usize::from(!fixed)
            + ts.iter()
                .filter(|t| lambda_power(&bpsi, alg, n + 2, t) != bpsi.eval(t))
                .count();
    }
    Ok(CoboundaryReport {
        n,
        samples,
        algebra_dim: alg.dim(),
        scalings: alg.chars.iter().map(RBig::to_string).collect(),
        tuples_per_sample: per_sample,
        b_squared_violations: b2,
        invariance_violations: inv,
        pass: b2 == 0 && inv == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> DerivPattern {
        DerivPattern::from_bits(s).unwrap()
    }

    #[test]
    fn shuffle_counts() {
        let s1 = enumerate_shuffles(1);
        assert_eq!(s1, vec![pat("01"), pat("10")]);
        assert_eq!(s1[0].to_string(), "∂∂̄");
        assert_eq!(enumerate_shuffles(2).len(), 6);
        assert_eq!(enumerate_shuffles(3).len(), 20);
        assert!(DerivPattern::from_bits("011").is_err());
    }

    #[test]
    fn chains_small() {
        let c = build_chains(1).unwrap();
        assert_eq!(
            (c.chain1.clone(), c.chain2.clone(), c.bridge),
            (vec![pat("01")], vec![pat("10")], 1)
        );
        let c = build_chains(2).unwrap();
        assert_eq!(c.chain1, vec![pat("0011"), pat("0101"), pat("0110")]);
        assert_eq!(c.chain2, vec![pat("1100"), pat("1010"), pat("1001")]);
        assert_eq!(c.bridge, 2);
        for (a, b) in c.edges() {
            assert!(a.is_adjacent(&b));
        }
    }

    #[test]
    fn parity_rules_out_four() {
        assert!(matches!(
            build_chains(4),
            Err(Error::ChainSearchExhausted { ell: 4 })
        ));
        let any = build_chains_with_bridge(3, None).unwrap();
        assert_eq!(any.chain1.len(), 10);
    }

    #[test]
    fn solutions() {
        let one = RBig::ONE;
        let s = solve_cocycle_system(1, &one).unwrap();
        assert_eq!(s.k, RBig::from(2));
        assert_eq!(s.x, vec![-RBig::ONE]);
        let s = solve_cocycle_system(2, &one).unwrap();
        assert_eq!(s.k, RBig::from(6));
        assert!(s.matches_closed_form && s.matches_sign_absorbed_form);
        let s = solve_cocycle_system(3, &one).unwrap();
        assert_eq!((s.chains.bridge, s.k.clone()), (2, RBig::from(20)));
        assert!(s.matches_closed_form && s.matches_sign_absorbed_form);
    }

    #[test]
    fn membership() {
        let m = verify_membership(1);
        assert!(m.member);
        assert_eq!(m.coefficients, vec![-RBig::ONE]);
        let m = verify_membership(2);
        assert!(m.member && m.pairs.len() == 5);
        let t = verify_membership_spanning_tree(4);
        assert!(t.member && t.pairs.len() == 69);
    }

    #[test]
    fn toy_algebra_coboundary() {
        let q = QParam::half();
        let half = RBig::from_parts(1.into(), 2u8.into());
        let alg = ToyAlgebra::new(&q, vec![RBig::from(2), half], 2);
        assert_eq!(alg.dim(), 6);
        for n in 0..=2 {
            let r = twisted_coboundary_check(&alg, n, 3, 7).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let ident = ToyAlgebra::new(&q, vec![RBig::ONE, RBig::ONE], 2);
        assert!(twisted_coboundary_check(&ident, 1, 2, 1).unwrap().pass);
    }
}
