//! Ground truth at desk scale: exact dim D^λ over F_p as the rank of the
//! Gram matrix of the Specht-module bilinear form, explicit generator
//! matrices for D^λ, the minimal restriction depth producing a
//! one-dimensional submodule, and a sign-twisted trace check for the
//! Mullineux map.
//!
//! Polytabloids are expanded in the full tabloid space with
//! column-stabilizer signs; images under the adjacent transpositions are
//! re-expressed in the standard-polytabloid span by solving linear systems
//! against the rows indexed by the standard tableaux's own tabloids (that
//! square system is unitriangular under dominance, hence invertible over
//! every field). No Garnir straightening is implemented: one linear-algebra
//! kernel serves the Gram matrix, the action matrices, and the rank.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::BigInt;
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fp::MatFp;
use crate::mullineux::mullineux;
use crate::partition::{Partition, PrimeChar};

/// Enumeration caps; exceeding either raises `OracleOutOfRange` instead of
/// degrading silently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_tableaux: u64,
    pub max_tabloids: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_tableaux: 4000,
            max_tabloids: 500_000,
        }
    }
}

/// A standard Young tableau: rows increase left to right, columns increase
/// downwards, entries are 1..n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    /// Row index (0-based) of each value 1..n; the canonical tabloid key.
    fn assignment(&self) -> Vec<u8> {
        let n = self.shape.n() as usize;
        let mut a = vec![0u8; n];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                a[v as usize - 1] = r as u8;
            }
        }
        a
    }
}

/// Number of standard tableaux of shape λ (hook length formula).
pub fn hook_count(lambda: &Partition) -> BigInt {
    let n = lambda.n() as i64;
    let mut numer = BigInt::one();
    for k in 2..=n {
        numer *= BigInt::from(k);
    }
    let parts = lambda.parts();
    let conj_at = |c: u32| parts.iter().filter(|&&x| x >= c).count() as i64;
    let mut denom = BigInt::one();
    for (r0, &len) in parts.iter().enumerate() {
        for c in 1..=len {
            let arm = len as i64 - c as i64;
            let leg = conj_at(c) - r0 as i64 - 1;
            denom *= BigInt::from(arm + leg + 1);
        }
    }
    numer / denom
}

/// Number of tabloids of shape λ (multinomial coefficient).
pub fn tabloid_count(lambda: &Partition) -> BigInt {
    let n = lambda.n() as i64;
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    for &part in lambda.parts() {
        for k in 2..=part as i64 {
            out /= BigInt::from(k);
        }
    }
    out
}

fn check_caps(lambda: &Partition, caps: &OracleCaps) -> Result<u64> {
    let tabloids = tabloid_count(lambda);
    if tabloids > BigInt::from(caps.max_tabloids) {
        return Err(Error::OracleOutOfRange {
            what: "tabloid count",
            count: tabloids.to_string().parse().unwrap_or(u128::MAX),
            cap: caps.max_tabloids as u128,
        });
    }
    let tableaux = hook_count(lambda);
    if tableaux > BigInt::from(caps.max_tableaux) {
        return Err(Error::OracleOutOfRange {
            what: "standard tableau count",
            count: tableaux.to_string().parse().unwrap_or(u128::MAX),
            cap: caps.max_tableaux as u128,
        });
    }
    Ok(tableaux.to_string().parse().unwrap())
}

/// All standard tableaux of shape λ in a deterministic order (values placed
/// 1..n, candidate rows tried top to bottom).
pub fn standard_tableaux(lambda: &Partition, caps: &OracleCaps) -> Result<Vec<StandardTableau>> {
    check_caps(lambda, caps)?;
    let parts = lambda.parts();
    let n = lambda.n();
    let mut fill = vec![0u32; parts.len()];
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fn rec(
        v: u32,
        n: u32,
        parts: &[u32],
        fill: &mut [u32],
        rows: &mut Vec<Vec<u8>>,
        lambda: &Partition,
        out: &mut Vec<StandardTableau>,
    ) {
        if v > n {
            out.push(StandardTableau {
                shape: lambda.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..parts.len() {
            let ok = fill[r] < parts[r] && (r == 0 || fill[r - 1] > fill[r]);
            if ok {
                fill[r] += 1;
                rows[r].push(v as u8);
                rec(v + 1, n, parts, fill, rows, lambda, out);
                rows[r].pop();
                fill[r] -= 1;
            }
        }
    }
    rec(1, n, parts, &mut fill, &mut rows, lambda, &mut out);
    Ok(out)
}

/// All permutations of 0..k with signs, generated by recursive insertion.
fn signed_permutations(k: usize) -> Vec<(Vec<u8>, i8)> {
    let mut perms: Vec<(Vec<u8>, i8)> = vec![(Vec::new(), 1)];
    for v in 0..k as u8 {
        let mut next = Vec::with_capacity(perms.len() * (v as usize + 1));
        for (perm, sign) in &perms {
            for pos in 0..=perm.len() {
                let mut np = perm.clone();
                np.insert(pos, v);
                // inserting at distance d from the end costs d transpositions
                let d = (perm.len() - pos) as u32;
                let s = if d % 2 == 0 { *sign } else { -*sign };
                next.push((np, s));
            }
        }
        perms = next;
    }
    perms
}

/// A polytabloid as a sparse vector over tabloid keys; coefficients are
/// exact integers (sums of ±1 over the column stabilizer).
type SparseVec = HashMap<Vec<u8>, i64>;

fn polytabloid(t: &StandardTableau) -> SparseVec {
    let ncols = t.shape.first() as usize;
    // column c: list of (value, 0-based row)
    let mut columns: Vec<Vec<(u8, u8)>> = vec![Vec::new(); ncols];
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            columns[c].push((v, r as u8));
        }
    }
    let mut perm_cache: HashMap<usize, Vec<(Vec<u8>, i8)>> = HashMap::new();
    let base = t.assignment();
    let mut out: SparseVec = HashMap::new();
    fn rec(
        col: usize,
        columns: &[Vec<(u8, u8)>],
        perm_cache: &mut HashMap<usize, Vec<(Vec<u8>, i8)>>,
        assignment: &mut Vec<u8>,
        sign: i64,
        out: &mut SparseVec,
    ) {
        if col == columns.len() {
            *out.entry(assignment.clone()).or_insert(0) += sign;
            return;
        }
        let cells = &columns[col];
        let k = cells.len();
        let perms = perm_cache
            .entry(k)
            .or_insert_with(|| signed_permutations(k))
            .clone();
        for (perm, psign) in perms {
            for (j, &(v, _)) in cells.iter().enumerate() {
                assignment[v as usize - 1] = cells[perm[j] as usize].1;
            }
            rec(col + 1, columns, perm_cache, assignment, sign * psign as i64, out);
        }
        // restore
        for &(v, r) in cells {
            assignment[v as usize - 1] = r;
        }
    }
    let mut assignment = base;
    rec(0, &columns, &mut perm_cache, &mut assignment, 1, &mut out);
    out.retain(|_, &mut c| c != 0);
    out
}

/// Gram matrix of the standard bilinear form on standard polytabloids, over
/// the integers. Entries are bounded by column-stabilizer orders, so i64
/// accumulation is exact at the configured caps.
pub fn gram_matrix_int(lambda: &Partition, caps: &OracleCaps) -> Result<Vec<Vec<i64>>> {
    let tableaux = standard_tableaux(lambda, caps)?;
    let polys: Vec<SparseVec> = tableaux.iter().map(polytabloid).collect();
    Ok(gram_from_polys(&polys))
}

fn gram_from_polys(polys: &[SparseVec]) -> Vec<Vec<i64>> {
    let f = polys.len();
    // group by tabloid, then accumulate outer products
    let mut by_tabloid: HashMap<&Vec<u8>, Vec<(u32, i64)>> = HashMap::new();
    for (j, poly) in polys.iter().enumerate() {
        for (key, &c) in poly {
            by_tabloid.entry(key).or_default().push((j as u32, c));
        }
    }
    let mut g = vec![vec![0i64; f]; f];
    for entries in by_tabloid.values() {
        for &(a, ca) in entries {
            for &(b, cb) in entries {
                if b >= a {
                    g[a as usize][b as usize] += ca * cb;
                }
            }
        }
    }
    for a in 0..f {
        for b in 0..a {
            g[a][b] = g[b][a];
        }
    }
    g
}

/// Gram matrix reduced mod p.
pub fn gram_matrix(lambda: &Partition, p: &PrimeChar, caps: &OracleCaps) -> Result<MatFp> {
    let g = gram_matrix_int(lambda, caps)?;
    Ok(MatFp::from_int_rows(&g, p))
}

/// dim D^λ = rank of the Gram matrix over F_p.
pub fn dim_irreducible(lambda: &Partition, p: &PrimeChar, caps: &OracleCaps) -> Result<u64> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    if lambda.is_empty() {
        return Ok(1);
    }
    Ok(gram_matrix(lambda, p, caps)?.rank() as u64)
}

/// D^λ with explicit generator matrices for the adjacent transpositions
/// s_1, ..., s_{n−1}.
#[derive(Clone, Debug)]
pub struct IrreducibleModule {
    pub label: Partition,
    pub p: PrimeChar,
    pub dim: u64,
    pub generators: Vec<MatFp>,
}

impl IrreducibleModule {
    fn check_relations(&self) {
        let d = self.dim as usize;
        let id = MatFp::identity(d, &self.p);
        for (i, m) in self.generators.iter().enumerate() {
            assert_eq!(m.mul(m), id, "generator s_{} is not an involution", i + 1);
        }
        for w in self.generators.windows(2) {
            let aba = w[0].mul(&w[1]).mul(&w[0]);
            let bab = w[1].mul(&w[0]).mul(&w[1]);
            assert_eq!(aba, bab, "braid relation fails");
        }
        for i in 0..self.generators.len() {
            for j in i + 2..self.generators.len() {
                let ab = self.generators[i].mul(&self.generators[j]);
                let ba = self.generators[j].mul(&self.generators[i]);
                assert_eq!(ab, ba, "distant generators do not commute");
            }
        }
    }
}

/// Constructs the generator matrices of D^λ = S^λ / rad: act each s_i on
/// standard polytabloids inside the tabloid space, re-express images as
/// combinations of standard polytabloids, then pass to the quotient by the
/// Gram kernel using pivot-column coordinates.
pub fn irreducible_action(
    lambda: &Partition,
    p: &PrimeChar,
    caps: &OracleCaps,
) -> Result<IrreducibleModule> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    let n = lambda.n() as usize;
    let tableaux = standard_tableaux(lambda, caps)?;
    let f = tableaux.len();
    let polys: Vec<SparseVec> = tableaux.iter().map(polytabloid).collect();
    let keys: Vec<Vec<u8>> = tableaux.iter().map(|t| t.assignment()).collect();

    // Square system on the rows indexed by the standard tableaux's own
    // tabloids; unitriangular under dominance, hence invertible.
    let pm = p.p() as i64;
    let mut e_r = MatFp::zeros(f, f, p);
    for (s, key) in keys.iter().enumerate() {
        for j in 0..f {
            let c = polys[j].get(key).copied().unwrap_or(0);
            e_r.set(s, j, c.rem_euclid(pm) as u32);
        }
    }

    // Right-hand sides for all generators at once: (s_i · e_j)[{t_s}] =
    // e_j[s_i · {t_s}], where s_i swaps the values i and i+1.
    let gens = n.saturating_sub(1);
    let mut b = MatFp::zeros(f, gens * f, p);
    for g in 0..gens {
        for (s, key) in keys.iter().enumerate() {
            let mut swapped = key.clone();
            swapped.swap(g, g + 1);
            for j in 0..f {
                let c = polys[j].get(&swapped).copied().unwrap_or(0);
                b.set(s, g * f + j, c.rem_euclid(pm) as u32);
            }
        }
    }
    let x = e_r
        .solve_many(&b)
        .expect("standard-polytabloid system is unitriangular, hence invertible");

    // Quotient by the Gram radical. RREF of G gives pivot columns P and,
    // for each free column, a kernel vector with identity on the free
    // coordinates; eliminating free coordinates and restricting to P is the
    // quotient coordinate map.
    let gram = MatFp::from_int_rows(&gram_from_polys(&polys), p);
    let mut rref = gram.clone();
    let pivots = rref.rref();
    let d = pivots.len();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut q = MatFp::zeros(d, f, p);
    for (r, &pc) in pivots.iter().enumerate() {
        q.set(r, pc, 1);
        for fcol in 0..f {
            if !pivot_set.contains(&fcol) {
                q.set(r, fcol, rref.at(r, fcol));
            }
        }
    }
    let mut s = MatFp::zeros(f, d, p);
    for (r, &pc) in pivots.iter().enumerate() {
        s.set(pc, r, 1);
    }

    let mut generators = Vec::with_capacity(gens);
    for g in 0..gens {
        let mut a_g = MatFp::zeros(f, f, p);
        for i in 0..f {
            for j in 0..f {
                a_g.set(i, j, x.at(i, g * f + j));
            }
        }
        generators.push(q.mul(&a_g).mul(&s));
    }

    let module = IrreducibleModule {
        label: lambda.clone(),
        p: *p,
        dim: d as u64,
        generators,
    };
    module.check_relations();
    Ok(module)
}

/// Smallest a ≥ 1 such that restricting to the generators s_1..s_{n−a−1}
/// leaves a nonzero space of common fixed vectors (trivial submodule) or,
/// when p ≥ 3, common (−1)-eigenvectors (sign submodule). Vacuous when no
/// generators remain, so a ≤ n−1 always terminates.
pub fn minimal_a(lambda: &Partition, p: &PrimeChar, caps: &OracleCaps) -> Result<u32> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let module = irreducible_action(lambda, p, caps)?;
    Ok(minimal_a_of(&module))
}

pub fn minimal_a_of(module: &IrreducibleModule) -> u32 {
    let n = module.label.n() as i64;
    for a in 1..=n {
        let keep = (n - a - 1).max(0) as usize;
        let gens = &module.generators[..keep.min(module.generators.len())];
        if gens.is_empty() {
            return a as u32;
        }
        let fixed: Vec<MatFp> = gens.iter().map(|m| m.add_scaled_identity(-1)).collect();
        let stacked = MatFp::vstack(&fixed.iter().collect::<Vec<_>>());
        if !stacked.kernel().is_empty() {
            return a as u32;
        }
        if module.p.p() >= 3 {
            let sign: Vec<MatFp> = gens.iter().map(|m| m.add_scaled_identity(1)).collect();
            let stacked = MatFp::vstack(&sign.iter().collect::<Vec<_>>());
            if !stacked.kernel().is_empty() {
                return a as u32;
            }
        }
    }
    unreachable!("the condition is vacuous at a = n - 1")
}

/// Necessary condition for D^λ ⊗ sgn ≅ D^{λ^M}: equal dimensions and, for
/// pseudo-random generator words w, tr_{D^λ}(w)·(−1)^{len(w)} =
/// tr_{D^{λ^M}}(w) in F_p. Deterministic for a fixed seed.
pub fn twisted_trace_check(
    lambda: &Partition,
    p: &PrimeChar,
    samples: u32,
    seed: u64,
    caps: &OracleCaps,
) -> Result<bool> {
    let mu = mullineux(lambda, p)?;
    let left = irreducible_action(lambda, p, caps)?;
    let right = irreducible_action(&mu, p, caps)?;
    Ok(twisted_trace_check_of(&left, &right, samples, seed))
}

pub fn twisted_trace_check_of(
    left: &IrreducibleModule,
    right: &IrreducibleModule,
    samples: u32,
    seed: u64,
) -> bool {
    if left.dim != right.dim {
        return false;
    }
    let gens = left.generators.len();
    if gens == 0 {
        return true; // only the identity word; traces are dim = dim
    }
    let pm = left.p.p() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let len = rng.gen_range(1..=6usize);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..gens)).collect();
        let tr = |module: &IrreducibleModule| -> u64 {
            let mut m = module.generators[word[0]].clone();
            for &g in &word[1..] {
                m = m.mul(&module.generators[g]);
            }
            m.trace() as u64
        };
        let tl = tr(left);
        let trr = tr(right);
        let twisted = if len % 2 == 0 { tl } else { (pm - tl % pm) % pm };
        if twisted != trr {
            return false;
        }
    }
    true
}

type Key = (Vec<u32>, u32);

/// Caching front-end for the oracle; safe for concurrent use (per-key work
/// may be duplicated on races, results are deterministic).
pub struct Oracle {
    caps: OracleCaps,
    dims: Mutex<HashMap<Key, u64>>,
    modules: Mutex<HashMap<Key, Arc<IrreducibleModule>>>,
}

impl Oracle {
    pub fn new(caps: OracleCaps) -> Self {
        Oracle {
            caps,
            dims: Mutex::new(HashMap::new()),
            modules: Mutex::new(HashMap::new()),
        }
    }

    pub fn caps(&self) -> &OracleCaps {
        &self.caps
    }

    fn key(lambda: &Partition, p: &PrimeChar) -> Key {
        (lambda.parts().to_vec(), p.p())
    }

    pub fn dim(&self, lambda: &Partition, p: &PrimeChar) -> Result<u64> {
        let key = Self::key(lambda, p);
        if let Some(&d) = self.dims.lock().unwrap().get(&key) {
            return Ok(d);
        }
        let d = dim_irreducible(lambda, p, &self.caps)?;
        self.dims.lock().unwrap().insert(key, d);
        Ok(d)
    }

    /// Seed a dimension from a trusted external cache.
    pub fn insert_dim(&self, lambda: &Partition, p: &PrimeChar, dim: u64) {
        self.dims.lock().unwrap().insert(Self::key(lambda, p), dim);
    }

    pub fn module(&self, lambda: &Partition, p: &PrimeChar) -> Result<Arc<IrreducibleModule>> {
        let key = Self::key(lambda, p);
        if let Some(m) = self.modules.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(irreducible_action(lambda, p, &self.caps)?);
        self.dims.lock().unwrap().insert(key.clone(), m.dim);
        self.modules.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    pub fn minimal_a(&self, lambda: &Partition, p: &PrimeChar) -> Result<u32> {
        if lambda.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let module = self.module(lambda, p)?;
        Ok(minimal_a_of(&module))
    }

    pub fn twisted_trace_check(
        &self,
        lambda: &Partition,
        p: &PrimeChar,
        samples: u32,
        seed: u64,
    ) -> Result<bool> {
        let mu = mullineux(lambda, p)?;
        let left = self.module(lambda, p)?;
        let right = self.module(&mu, p)?;
        Ok(twisted_trace_check_of(&left, &right, samples, seed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p_regular_partitions_of;

    fn pc(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(standard_tableaux(&pt("2,1"), &caps()).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&pt("7"), &caps()).unwrap().len(), 1);
        assert_eq!(standard_tableaux(&pt("2,2"), &caps()).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&pt("4,3,2,1"), &caps()).unwrap().len(), 768);
        // hook count matches enumeration
        for n in 0..=8u32 {
            for la in crate::partition::partitions_of(n) {
                let c = standard_tableaux(&la, &caps()).unwrap().len();
                assert_eq!(BigInt::from(c), hook_count(&la), "{la:?}");
            }
        }
    }

    #[test]
    fn caps_enforced() {
        let tight = OracleCaps {
            max_tableaux: 1,
            max_tabloids: 500_000,
        };
        assert!(matches!(
            standard_tableaux(&pt("2,1"), &tight),
            Err(Error::OracleOutOfRange { .. })
        ));
        let tight = OracleCaps {
            max_tableaux: 4000,
            max_tabloids: 2,
        };
        assert!(matches!(
            gram_matrix(&pt("2,1"), &pc(2), &tight),
            Err(Error::OracleOutOfRange { .. })
        ));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(
            gram_matrix_int(&pt("2,1"), &caps()).unwrap(),
            vec![vec![2, 1], vec![1, 2]]
        );
        assert_eq!(gram_matrix_int(&pt("4"), &caps()).unwrap(), vec![vec![1]]);
        // Gram determinant of (2,2) is 12: the form vanishes mod 2 (the
        // label is 2-singular anyway) and has rank 1 mod 3.
        assert_eq!(
            gram_matrix_int(&pt("2,2"), &caps()).unwrap(),
            vec![vec![4, 2], vec![2, 4]]
        );
        assert_eq!(gram_matrix(&pt("2,2"), &pc(2), &caps()).unwrap().rank(), 0);
        assert_eq!(gram_matrix(&pt("2,2"), &pc(3), &caps()).unwrap().rank(), 1);
    }

    #[test]
    fn gram_symmetric() {
        for la in ["3,2", "3,1,1", "2,2,1", "4,2"] {
            let g = gram_matrix_int(&pt(la), &caps()).unwrap();
            for i in 0..g.len() {
                for j in 0..g.len() {
                    assert_eq!(g[i][j], g[j][i]);
                }
            }
        }
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim_irreducible(&pt("2,1"), &pc(3), &caps()).unwrap(), 1);
        assert_eq!(dim_irreducible(&pt("2,1"), &pc(2), &caps()).unwrap(), 2);
        assert_eq!(dim_irreducible(&pt("3,2"), &pc(2), &caps()).unwrap(), 4);
        assert_eq!(
            dim_irreducible(&Partition::empty(), &pc(3), &caps()).unwrap(),
            1
        );
    }

    #[test]
    fn dim_hook_partition_bound() {
        // dim ≤ #standard tableaux, equality iff Gram determinant ≠ 0 mod p
        for p in [2u32, 3] {
            let p = pc(p);
            for n in 1..=7u32 {
                for la in p_regular_partitions_of(n, &p) {
                    let f = standard_tableaux(&la, &caps()).unwrap().len() as u64;
                    let d = dim_irreducible(&la, &p, &caps()).unwrap();
                    assert!(d <= f, "{la:?}");
                    assert!(d >= 1);
                }
            }
        }
    }

    #[test]
    fn dim_n_minus_1_1() {
        // dim D^{(n−1,1)} = n−2 if p | n, else n−1
        for p in [2u32, 3, 5] {
            let p = pc(p);
            for n in 3..=9u32 {
                let la = Partition::new(vec![n - 1, 1]).unwrap();
                let want = if n % p.p() == 0 { n - 2 } else { n - 1 };
                assert_eq!(
                    dim_irreducible(&la, &p, &caps()).unwrap(),
                    want as u64,
                    "p={} n={}",
                    p.p(),
                    n
                );
            }
        }
    }

    #[test]
    fn action_examples() {
        let m = irreducible_action(&pt("5"), &pc(3), &caps()).unwrap();
        assert_eq!(m.dim, 1);
        for g in &m.generators {
            assert_eq!(g.at(0, 0), 1);
        }
        // sign module
        let m = irreducible_action(&pt("2,1"), &pc(3), &caps()).unwrap();
        assert_eq!(m.dim, 1);
        for g in &m.generators {
            assert_eq!(g.at(0, 0), 2);
        }
        // (2,1) mod 2: two involutions, s_1 has a fixed vector
        let m = irreducible_action(&pt("2,1"), &pc(2), &caps()).unwrap();
        assert_eq!(m.dim, 2);
        let fixed = m.generators[0].add_scaled_identity(-1);
        assert!(!fixed.kernel().is_empty());
    }

    #[test]
    fn minimal_a_examples() {
        for n in 2..=8u32 {
            assert_eq!(
                minimal_a(&Partition::single(n), &pc(3), &caps()).unwrap(),
                1
            );
        }
        assert_eq!(minimal_a(&pt("5,1"), &pc(3), &caps()).unwrap(), 2);
        assert_eq!(minimal_a(&pt("2,1"), &pc(2), &caps()).unwrap(), 1);
    }

    #[test]
    fn twisted_trace_examples() {
        assert!(twisted_trace_check(&pt("5"), &pc(3), 32, 7, &caps()).unwrap());
        assert!(twisted_trace_check(&pt("3"), &pc(3), 32, 7, &caps()).unwrap());
        assert!(twisted_trace_check(&pt("4,2,1"), &pc(2), 32, 7, &caps()).unwrap());
    }

    #[test]
    fn gram_rank_order_invariant() {
        // rank is invariant under simultaneous row/column permutation
        let g = gram_matrix_int(&pt("3,2"), &caps()).unwrap();
        let f = g.len();
        let perm: Vec<usize> = (0..f).rev().collect();
        let mut permuted = vec![vec![0i64; f]; f];
        for i in 0..f {
            for j in 0..f {
                permuted[i][j] = g[perm[i]][perm[j]];
            }
        }
        for p in [2u32, 3, 5] {
            let p = pc(p);
            assert_eq!(
                MatFp::from_int_rows(&g, &p).rank(),
                MatFp::from_int_rows(&permuted, &p).rank()
            );
        }
    }
}
