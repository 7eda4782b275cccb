//! Finitely generated submonoids of the naturals.

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Reverse;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mpoly::ExpVec;

/// Largest generator accepted; keeps the membership tables small.
pub const MAX_GENERATOR: usize = 1 << 20;

/// Submonoid `<a_1, ..., a_k>` of the naturals.
///
/// Internally stores the Apéry set of `S/d` with respect to its smallest
/// generator, which answers membership in constant time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumSgp {
    gens: Vec<usize>,
    d: usize,
    m: usize,
    ap: Vec<usize>,
}

impl NumSgp {
    pub fn from_generators(gens: &[usize]) -> Result<NumSgp> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        if let Some(&big) = gens.iter().find(|&&a| a > MAX_GENERATOR) {
            return Err(Error::LimitExceeded(format!(
                "generator {} exceeds {}",
                big, MAX_GENERATOR
            )));
        }
        let d = gens.iter().fold(0usize, |g, &a| g.gcd(&a));
        let scaled: Vec<usize> = gens.iter().map(|a| a / d).collect();
        let m = *scaled.iter().min().unwrap();
        let ap = apery_table(&scaled, m);
        Ok(NumSgp {
            gens: gens.to_vec(),
            d,
            m,
            ap,
        })
    }

    /// The generators as given.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn gcd(&self) -> usize {
        self.d
    }

    pub fn is_numerical(&self) -> bool {
        self.d == 1
    }

    fn numerical(&self) -> Result<()> {
        if self.d == 1 {
            Ok(())
        } else {
            Err(Error::NotNumerical(self.d))
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        if n % self.d != 0 {
            return false;
        }
        let q = n / self.d;
        q >= self.ap[q % self.m]
    }

    // Conductor of S/d.
    fn reduced_conductor(&self) -> usize {
        let max = *self.ap.iter().max().unwrap();
        (max + 1).saturating_sub(self.m)
    }

    /// `c(S)`; only defined when the gcd is 1.
    pub fn conductor(&self) -> Result<usize> {
        self.numerical()?;
        Ok(self.reduced_conductor())
    }

    /// `d * c(S/d)`: every multiple of `d` from here on lies in `S`.
    pub fn scaled_conductor(&self) -> usize {
        self.d * self.reduced_conductor()
    }

    pub fn frobenius(&self) -> Result<i64> {
        Ok(self.conductor()? as i64 - 1)
    }

    pub fn gaps(&self) -> Result<Vec<usize>> {
        let c = self.conductor()?;
        Ok((0..c).filter(|&n| !self.contains(n)).collect())
    }

    pub fn genus(&self) -> Result<usize> {
        Ok(self.gaps()?.len())
    }

    /// Elements of `S` in `[0, bound]`.
    pub fn elements_up_to(&self, bound: usize) -> Vec<usize> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// Sorted minimal generating set.
    pub fn minimal_generators(&self) -> Vec<usize> {
        minimal_generators(&self.gens)
    }

    /// Least element of `S` in each residue class mod `n`, sorted.
    pub fn apery_set(&self, n: usize) -> Result<Vec<usize>> {
        self.numerical()?;
        if n == 0 || !self.contains(n) {
            return Err(Error::NotInSemigroup(n));
        }
        if n > MAX_GENERATOR {
            return Err(Error::LimitExceeded(format!("Apéry set modulus {}", n)));
        }
        let mut ap = apery_table(&self.gens, n);
        ap.sort_unstable();
        Ok(ap)
    }

    /// Pseudo-Frobenius numbers; `[-1]` for the naturals.
    pub fn type_set(&self) -> Result<Vec<i64>> {
        let gaps = self.gaps()?;
        if gaps.is_empty() {
            return Ok(vec![-1]);
        }
        let mins = self.minimal_generators();
        Ok(gaps
            .into_iter()
            .filter(|&x| mins.iter().all(|&a| self.contains(x + a)))
            .map(|x| x as i64)
            .collect())
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(2 * self.genus()? == self.conductor()?)
    }

    /// Number of elements below the conductor.
    pub fn sporadic_count(&self) -> Result<usize> {
        let c = self.conductor()?;
        Ok((0..c).filter(|&n| self.contains(n)).count())
    }

    /// All exponent vectors over the stored generators with value `n`.
    pub fn factorizations(&self, n: usize) -> Vec<ExpVec> {
        factorizations(&self.gens, n)
    }

    /// Minimal presentation over the minimal generators.
    pub fn minimal_presentation(&self) -> Result<Presentation> {
        presentation(&self.minimal_generators())
    }

    /// Whether `arrangement` generates `S` and each `e_k r_k` lies in the
    /// monoid of the previous entries.
    pub fn is_free(&self, arrangement: &[usize]) -> Result<bool> {
        let other = NumSgp::from_generators(arrangement)?;
        if !self.gens.iter().all(|&a| other.contains(a))
            || !arrangement.iter().all(|&a| self.contains(a))
        {
            return Err(Error::ArrangementMismatch);
        }
        Ok(free_multiples(arrangement).is_some())
    }
}

// Dijkstra over residues mod m with edge weights given by the generators.
fn apery_table(gens: &[usize], m: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0usize, 0usize)));
    let mut steps: Vec<usize> = gens.iter().copied().filter(|a| a % m != 0).collect();
    steps.sort_unstable();
    steps.dedup();
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r] {
            continue;
        }
        for &a in &steps {
            let nr = (r + a) % m;
            let nw = w + a;
            if nw < dist[nr] {
                dist[nr] = nw;
                heap.push(Reverse((nw, nr)));
            }
        }
    }
    dist
}

/// Sorted minimal generating set of `<gens>`.
pub fn minimal_generators(gens: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = gens.iter().copied().filter(|&a| a > 0).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut kept: Vec<usize> = Vec::new();
    for a in sorted {
        if !representable(&kept, a) {
            kept.push(a);
        }
    }
    kept
}

fn representable(gens: &[usize], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for v in 1..=n {
        reach[v] = gens.iter().any(|&a| a <= v && reach[v - a]);
    }
    reach[n]
}

// reach[i][v]: v is a nonnegative combination of gens[i..].
fn suffix_reach(gens: &[usize], n: usize) -> Vec<Vec<bool>> {
    let k = gens.len();
    let mut reach = vec![vec![false; n + 1]; k + 1];
    reach[k][0] = true;
    for i in (0..k).rev() {
        let a = gens[i];
        for v in 0..=n {
            reach[i][v] = reach[i + 1][v] || (a <= v && reach[i][v - a]);
        }
    }
    reach
}

/// All `theta` with `sum theta_i gens_i = n`, in lexicographic order.
pub fn factorizations(gens: &[usize], n: usize) -> Vec<ExpVec> {
    let reach = suffix_reach(gens, n);
    let mut out = Vec::new();
    if !reach[0][n] {
        return out;
    }
    let mut cur = vec![0; gens.len()];
    factor_dfs(gens, &reach, 0, n, &mut cur, &mut out);
    out.sort();
    out
}

fn factor_dfs(
    gens: &[usize],
    reach: &[Vec<bool>],
    i: usize,
    rest: usize,
    cur: &mut ExpVec,
    out: &mut Vec<ExpVec>,
) {
    if i == gens.len() {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let a = gens[i];
    let mut t = 0;
    loop {
        let used = t * a;
        if used > rest {
            break;
        }
        if reach[i + 1][rest - used] {
            cur[i] = t;
            factor_dfs(gens, reach, i + 1, rest - used, cur, out);
        }
        t += 1;
    }
    cur[i] = 0;
}

/// Lexicographically smallest factorization of `n`, if any.
pub fn lex_smallest_factorization(gens: &[usize], n: usize) -> Option<ExpVec> {
    greedy_factorization(gens, n, false)
}

/// Lexicographically largest factorization of `n`, if any.
pub fn lex_largest_factorization(gens: &[usize], n: usize) -> Option<ExpVec> {
    greedy_factorization(gens, n, true)
}

fn greedy_factorization(gens: &[usize], n: usize, largest: bool) -> Option<ExpVec> {
    let reach = suffix_reach(gens, n);
    if !reach[0][n] {
        return None;
    }
    let mut rest = n;
    let mut out = vec![0; gens.len()];
    for (i, &a) in gens.iter().enumerate() {
        let max_t = rest / a;
        let pick = if largest {
            (0..=max_t).rev().find(|&t| reach[i + 1][rest - t * a])
        } else {
            (0..=max_t).find(|&t| reach[i + 1][rest - t * a])
        };
        let t = pick.expect("reachable by construction");
        out[i] = t;
        rest -= t * a;
    }
    Some(out)
}

/// Value `sum theta_i gens_i`.
pub fn value_of(gens: &[usize], theta: &[usize]) -> usize {
    gens.iter().zip(theta).map(|(a, t)| a * t).sum()
}

/// Binomial relations `X^alpha - X^beta` generating the kernel of
/// `X_i -> x^{a_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<usize>,
    pub pairs: Vec<(ExpVec, ExpVec)>,
}

impl Presentation {
    pub fn value(&self, i: usize) -> usize {
        value_of(&self.generators, &self.pairs[i].0)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks, for every `n <= bound`, that the factorizations of `n` are
    /// connected by shared support and by the moves of the relations.
    pub fn is_complete_up_to(&self, bound: usize) -> bool {
        let d = self.generators.iter().fold(0usize, |g, &a| g.gcd(&a));
        if d == 0 {
            return true;
        }
        let scaled: Vec<usize> = self.generators.iter().map(|a| a / d).collect();
        (1..=bound / d).all(|n| factorization_graph_connected(&scaled, n, &self.pairs))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

// Components of the factorization graph of n under shared support.
fn support_components(gens: &[usize], zs: &[ExpVec]) -> UnionFind {
    let mut uf = UnionFind::new(zs.len());
    for i in 0..gens.len() {
        let mut first = None;
        for (j, z) in zs.iter().enumerate() {
            if z[i] > 0 {
                match first {
                    None => first = Some(j),
                    Some(f) => uf.union(f, j),
                }
            }
        }
    }
    uf
}

fn factorization_graph_connected(gens: &[usize], n: usize, pairs: &[(ExpVec, ExpVec)]) -> bool {
    let zs = factorizations(gens, n);
    if zs.len() <= 1 {
        return true;
    }
    let mut uf = support_components(gens, &zs);
    let index: HashMap<&ExpVec, usize> = zs.iter().enumerate().map(|(i, z)| (z, i)).collect();
    for (j, z) in zs.iter().enumerate() {
        for (a, b) in pairs {
            for (from, to) in [(a, b), (b, a)] {
                if z.iter().zip(from).all(|(x, y)| x >= y) {
                    let w: ExpVec = z
                        .iter()
                        .zip(from)
                        .zip(to)
                        .map(|((x, y), t)| x - y + t)
                        .collect();
                    if let Some(&k) = index.get(&w) {
                        uf.union(j, k);
                    }
                }
            }
        }
    }
    (0..zs.len()).all(|j| uf.find(j) == 0)
}

/// Presentation over an arbitrary generator list (redundant entries allowed).
///
/// Candidate values run up to `F + 2 max(a)` of `S/d`; the result is then
/// certified by a connectivity sweep to twice that bound, doubling on failure.
pub fn presentation(gens: &[usize]) -> Result<Presentation> {
    let s = NumSgp::from_generators(gens)?;
    let d = s.gcd();
    let scaled: Vec<usize> = gens.iter().map(|a| a / d).collect();
    let frob = s.reduced_conductor() as i64 - 1;
    let max = *scaled.iter().max().unwrap() as i64;
    let mut bound = (frob + 2 * max).max(1) as usize;
    let sub = NumSgp::from_generators(&scaled)?;
    loop {
        let mut pairs = Vec::new();
        for n in 1..=bound {
            if !sub.contains(n) {
                continue;
            }
            let hits = scaled
                .iter()
                .filter(|&&a| a <= n && sub.contains(n - a))
                .count();
            if hits < 2 {
                continue;
            }
            let zs = factorizations(&scaled, n);
            let mut uf = support_components(&scaled, &zs);
            // zs is sorted, so the first member seen of each component is its
            // lexicographically smallest vector.
            let mut reps: Vec<usize> = Vec::new();
            let mut seen = Vec::new();
            for j in 0..zs.len() {
                let r = uf.find(j);
                if !seen.contains(&r) {
                    seen.push(r);
                    reps.push(j);
                }
            }
            let base = reps[0];
            for &r in &reps[1..] {
                pairs.push((zs[r].clone(), zs[base].clone()));
            }
        }
        let pres = Presentation {
            generators: gens.to_vec(),
            pairs,
        };
        let sweep = 2 * bound;
        if (1..=sweep).all(|n| factorization_graph_connected(&scaled, n, &pres.pairs)) {
            return Ok(pres);
        }
        bound *= 2;
    }
}

// For an arrangement r_0..r_h, the pairs (e_k, theta^k) of the free
// decomposition, or None when some e_k r_k is not in the previous monoid.
fn free_multiples(arr: &[usize]) -> Option<Vec<(usize, ExpVec)>> {
    let mut out = Vec::new();
    let mut d = arr[0];
    for k in 1..arr.len() {
        let next = d.gcd(&arr[k]);
        let e = d / next;
        let target = e * arr[k];
        let bounds: Vec<usize> = (0..k)
            .map(|i| {
                if i == 0 {
                    usize::MAX
                } else {
                    let di = arr[..i].iter().fold(0usize, |g, &a| g.gcd(&a));
                    di / di.gcd(&arr[i])
                }
            })
            .collect();
        let theta = bounded_representation(&arr[..k], &bounds, target)?;
        out.push((e, theta));
        d = next;
    }
    Some(out)
}

// theta with theta_i < bounds[i] for i >= 1 and sum theta_i a_i = target.
fn bounded_representation(a: &[usize], bounds: &[usize], target: usize) -> Option<ExpVec> {
    fn go(a: &[usize], bounds: &[usize], i: usize, rest: usize, cur: &mut ExpVec) -> bool {
        if i == 0 {
            if rest % a[0] == 0 {
                cur[0] = rest / a[0];
                return true;
            }
            return false;
        }
        let mut t = 0;
        while t < bounds[i] && t * a[i] <= rest {
            cur[i] = t;
            if go(a, bounds, i - 1, rest - t * a[i], cur) {
                return true;
            }
            t += 1;
        }
        cur[i] = 0;
        false
    }
    let mut cur = vec![0; a.len()];
    if go(a, bounds, a.len() - 1, target, &mut cur) {
        Some(cur)
    } else {
        None
    }
}

/// Complete-intersection relations `X_k^{e_k} - X^{theta^k}` of a free
/// arrangement, with `0 <= theta^k_i < e_i` for `i >= 1`.
pub fn ci_relations(arrangement: &[usize]) -> Result<Presentation> {
    if arrangement.is_empty() || arrangement.contains(&0) {
        return Err(Error::InvalidArgument("arrangement must be nonempty and positive".into()));
    }
    let h = arrangement.len();
    let mults = free_multiples(arrangement).ok_or_else(|| {
        Error::NotFree(format!("{:?}", arrangement))
    })?;
    let pairs = mults
        .into_iter()
        .enumerate()
        .map(|(i, (e, theta))| {
            let k = i + 1;
            let mut alpha = vec![0; h];
            alpha[k] = e;
            let mut beta = theta;
            beta.resize(h, 0);
            (alpha, beta)
        })
        .collect();
    Ok(Presentation {
        generators: arrangement.to_vec(),
        pairs,
    })
}
