//! Exact evaluators for the dimension lower bounds: the rational kernel
//! C^p_m(n), the degree-≤4 polynomial bounds, the universal 2·3^{(t−2)/3}
//! bound, the row-product bound, and the two-row and first-row bounds.
//! All arithmetic is exact; the 2·3^{(t−2)/3} bound is compared by cubing.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::crystal::a_crystal;
use crate::error::{Error, Result};
use crate::mullineux::{first_row_condition, mullineux};
use crate::partition::{Partition, PrimeChar};

/// C^p_m(n) = p^m · binom(n/p − δ_p, m) = (1/m!) · ∏_{i<m} (n − (δ_p + i)p).
pub fn c_kernel(m: i64, p: &PrimeChar, n: i64) -> Result<BigRational> {
    if m < 0 {
        return Err(Error::NegativeM(m));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= BigInt::from(n - (p.delta() as i64 + i) * p.p() as i64);
        den *= BigInt::from(i + 1);
    }
    Ok(BigRational::new(num, den))
}

/// James' polynomial bounds for m = n − λ_1 ∈ [1,4].
pub fn james_bound(m: i64, n: i64) -> Result<BigRational> {
    let n = BigInt::from(n);
    let poly = |coeffs: &[i64], den: i64| -> BigRational {
        let mut v = BigInt::zero();
        for &c in coeffs {
            v = v * &n + BigInt::from(c);
        }
        BigRational::new(v, BigInt::from(den))
    };
    match m {
        1 => Ok(poly(&[1, -2], 1)),
        2 => Ok(poly(&[1, -5, 2], 2)),
        3 => Ok(poly(&[1, -9, 14, 0], 6)),
        4 => Ok(poly(&[1, -14, 47, -34, 0], 24)),
        _ => Err(Error::MOutOfRange(m)),
    }
}

/// An exact bound value: either a rational or the irrational 2·3^{(t−2)/3}.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactBound {
    Rational(BigRational),
    /// 2·3^{(t−2)/3}
    TwoTimesThreePow { t: i64 },
}

impl ExactBound {
    pub fn from_int(v: BigInt) -> Self {
        ExactBound::Rational(BigRational::from_integer(v))
    }

    /// Exact comparison d ≥ bound. For 2·3^{(t−2)/3} this is decided by
    /// cubing: d³ ≥ 8·3^{t−2} in arbitrary-precision integers.
    pub fn holds(&self, dim: &BigInt) -> bool {
        match self {
            ExactBound::Rational(r) => {
                BigRational::from_integer(dim.clone()) >= *r
            }
            ExactBound::TwoTimesThreePow { t } => {
                let cube = dim * dim * dim;
                if *t >= 2 {
                    cube >= BigInt::from(8) * BigInt::from(3).pow((*t - 2) as u32)
                } else {
                    cube * BigInt::from(3).pow((2 - *t) as u32) >= BigInt::from(8)
                }
            }
        }
    }

    /// ≤ 0 bounds are vacuous: every irreducible has dimension ≥ 1.
    pub fn is_vacuous(&self) -> bool {
        match self {
            ExactBound::Rational(r) => !r.is_positive(),
            ExactBound::TwoTimesThreePow { .. } => false,
        }
    }

    /// Exact order on bound values as real numbers (cubes both sides for
    /// the irrational case; cubing is monotone on all of ℝ).
    pub fn value_cmp(&self, other: &ExactBound) -> std::cmp::Ordering {
        use ExactBound::*;
        let pow_cubed = |t: i64| -> BigRational {
            if t >= 2 {
                BigRational::from_integer(BigInt::from(8) * BigInt::from(3).pow((t - 2) as u32))
            } else {
                BigRational::new(BigInt::from(8), BigInt::from(3).pow((2 - t) as u32))
            }
        };
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (TwoTimesThreePow { t: a }, TwoTimesThreePow { t: b }) => a.cmp(b),
            (Rational(a), TwoTimesThreePow { t }) => (a * a * a).cmp(&pow_cubed(*t)),
            (TwoTimesThreePow { t }, Rational(b)) => pow_cubed(*t).cmp(&(b * b * b)),
        }
    }

    pub fn display_value(&self) -> String {
        match self {
            ExactBound::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            ExactBound::TwoTimesThreePow { t } => format!("2*3^(({t}-2)/3)"),
        }
    }
}

impl Serialize for ExactBound {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExactBound::Rational(_) => ser.serialize_str(&self.display_value()),
            ExactBound::TwoTimesThreePow { t } => {
                let mut s = ser.serialize_struct("ExactBound", 1)?;
                s.serialize_field("t", t)?;
                s.end()
            }
        }
    }
}

/// The Theorem-A bound C^p_m(n): applicable when m = n − λ_1 ≥ 4 and
/// n ≥ p(δ_p + m − 2). May be ≤ 0 (vacuous).
pub fn theorem_a_bound(lambda: &Partition, p: &PrimeChar) -> Result<Option<BigRational>> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    let n = lambda.n() as i64;
    let m = n - lambda.first() as i64;
    if m < 4 || n < p.p() as i64 * (p.delta() as i64 + m - 2) {
        return Ok(None);
    }
    Ok(Some(c_kernel(m, p, n)?))
}

/// The universal bound 2·3^{(t−2)/3} with t = max{n−k, a}.
pub fn theorem_b_bound(n: u32, k: u32, a: u32) -> Result<ExactBound> {
    if k < 1 || k > n || a < 1 {
        return Err(Error::BadParams(format!("need 1 ≤ k ≤ n and a ≥ 1, got n={n} k={k} a={a}")));
    }
    let t = (n as i64 - k as i64).max(a as i64);
    Ok(ExactBound::TwoTimesThreePow { t })
}

/// k = max{λ_1, λ^M_1}, the Theorem-B width parameter.
pub fn theorem_b_k(lambda: &Partition, p: &PrimeChar) -> Result<u32> {
    let m = mullineux(lambda, p)?;
    Ok(lambda.first().max(m.first()))
}

/// 2^{n−λ_1}, for 2-regular λ (characteristic 2 only).
pub fn theorem_c_bound(lambda: &Partition) -> Result<BigInt> {
    let p2 = PrimeChar::new(2).unwrap();
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !lambda.is_p_regular(&p2) {
        return Err(Error::not_regular(lambda, &p2));
    }
    let e = lambda.n() - lambda.first();
    Ok(BigInt::one() << e)
}

/// ∏_{i ≥ p} ⌈i/(p−1)⌉^{λ_i} over 1-based row indices.
pub fn lemma_l1_bound(lambda: &Partition, p: &PrimeChar) -> Result<BigInt> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    let mut out = BigInt::one();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = idx as u32 + 1;
        if i < p.p() {
            continue;
        }
        let base = BigInt::from((i + p.p() - 2) / (p.p() - 1)); // ⌈i/(p−1)⌉
        out *= base.pow(part);
    }
    Ok(out)
}

/// The corollary value 2^{n − λ_1 − ... − λ_{p−1}}; always ≤ `lemma_l1_bound`.
pub fn l1_corollary(lambda: &Partition, p: &PrimeChar) -> Result<BigInt> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    let head: u32 = lambda
        .parts()
        .iter()
        .take(p.p() as usize - 1)
        .sum();
    Ok(BigInt::one() << (lambda.n() - head))
}

/// 2^b for a two-row partition (a,b) with a − b ≥ p − 1.
pub fn two_row_bound(a: u32, b: u32, p: &PrimeChar) -> Result<BigInt> {
    if a < b {
        return Err(Error::BadParams(format!("need a ≥ b, got a={a} b={b}")));
    }
    if ((a - b) as i64) < p.p() as i64 - 1 {
        return Err(Error::PreconditionFailed(format!(
            "two-row bound needs a − b ≥ p − 1; got a={a} b={b} p={}",
            p.p()
        )));
    }
    if b > 0 {
        let la = Partition::new(vec![a, b]).unwrap();
        if !la.is_p_regular(p) {
            return Err(Error::not_regular(&la, p));
        }
    }
    Ok(BigInt::one() << b)
}

/// 2^{n−λ_1} when the first-row condition holds, else None.
pub fn first_row_bound(lambda: &Partition, p: &PrimeChar) -> Result<Option<BigInt>> {
    if !first_row_condition(lambda, p)? {
        return Ok(None);
    }
    Ok(Some(BigInt::one() << (lambda.n() - lambda.first())))
}

/// RHS − LHS of the product inequality
/// ∏_{i=0}^{k}(a−i) ≤ (a−k+k/q)·∏_{i=0}^{k−1}(a−i−1/q); always ≥ 0 on the
/// stated domain q ≥ 1, k ≥ 0, a ≥ k.
pub fn lineq_margin(q: &BigRational, k: i64, a: &BigRational) -> Result<BigRational> {
    let one = BigRational::one();
    if *q < one || k < 0 || *a < BigRational::from_integer(BigInt::from(k)) {
        return Err(Error::BadParams(format!("need q ≥ 1, k ≥ 0, a ≥ k; got q={q} k={k} a={a}")));
    }
    let mut lhs = BigRational::one();
    for i in 0..=k {
        lhs *= a - BigRational::from_integer(BigInt::from(i));
    }
    let kq = BigRational::from_integer(BigInt::from(k)) / q;
    let mut rhs = a - BigRational::from_integer(BigInt::from(k)) + kq;
    let inv_q = one / q;
    for i in 0..k {
        rhs *= a - BigRational::from_integer(BigInt::from(i)) - &inv_q;
    }
    Ok(rhs - lhs)
}

/// (2m)!! or (2m−1)!! style double factorials.
pub fn double_factorial(n: i64) -> BigInt {
    let mut out = BigInt::one();
    let mut k = n;
    while k > 1 {
        out *= BigInt::from(k);
        k -= 2;
    }
    out
}

pub fn factorial(n: i64) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Hash)]
#[serde(rename_all = "snake_case")]
pub enum BoundTag {
    A,
    James,
    BSafe,
    BOracle,
    BCrystal,
    C,
    L1,
    TwoRow,
    FirstRow,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AMode {
    Safe,
    Oracle,
    Crystal,
}

impl AMode {
    pub fn tag(&self) -> BoundTag {
        match self {
            AMode::Safe => BoundTag::BSafe,
            AMode::Oracle => BoundTag::BOracle,
            AMode::Crystal => BoundTag::BCrystal,
        }
    }
}

impl std::str::FromStr for AMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "safe" => Ok(AMode::Safe),
            "oracle" => Ok(AMode::Oracle),
            "crystal" => Ok(AMode::Crystal),
            _ => Err(Error::BadParams(format!("unknown a-mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for AMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AMode::Safe => "safe",
            AMode::Oracle => "oracle",
            AMode::Crystal => "crystal",
        })
    }
}

/// One evaluated (or refused) bound.
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub tag: BoundTag,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<ExactBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundEntry {
    fn value(tag: BoundTag, value: ExactBound) -> Self {
        BoundEntry {
            tag,
            applicable: true,
            value: Some(value),
            note: None,
        }
    }

    fn skipped(tag: BoundTag, note: impl Into<String>) -> Self {
        BoundEntry {
            tag,
            applicable: false,
            value: None,
            note: Some(note.into()),
        }
    }
}

/// All bounds evaluated for one (λ, p), with the best certified value.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub lambda: Partition,
    pub p: u32,
    pub entries: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_tag: Option<BoundTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_value: Option<ExactBound>,
}

/// Evaluates every applicable bound for λ. Theorem B uses t = n−k in safe
/// mode (always valid since t ≥ n−k), the supplied oracle a in oracle mode,
/// and the crystal BFS upper bound in crystal mode (flagged: not guaranteed
/// by the theorem, since it may overstate a).
pub fn best_lower_bound(
    lambda: &Partition,
    p: &PrimeChar,
    a_mode: AMode,
    a_value: Option<u32>,
) -> Result<BoundReport> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    let n = lambda.n();
    let m = n as i64 - lambda.first() as i64;
    let mut entries = Vec::new();

    match theorem_a_bound(lambda, p)? {
        Some(v) => entries.push(BoundEntry::value(BoundTag::A, ExactBound::Rational(v))),
        None => entries.push(BoundEntry::skipped(
            BoundTag::A,
            format!("needs m ≥ 4 and n ≥ p(δ_p+m−2); m={m} n={n}"),
        )),
    }

    if (1..=4).contains(&m) {
        entries.push(BoundEntry::value(
            BoundTag::James,
            ExactBound::Rational(james_bound(m, n as i64)?),
        ));
    } else {
        entries.push(BoundEntry::skipped(
            BoundTag::James,
            format!("needs 1 ≤ m ≤ 4; m={m}"),
        ));
    }

    let b_tag = a_mode.tag();
    if p.p() < 3 {
        entries.push(BoundEntry::skipped(b_tag, "stated for p ≥ 3 only"));
    } else if lambda.is_empty() {
        entries.push(BoundEntry::skipped(b_tag, "empty partition"));
    } else {
        let k = theorem_b_k(lambda, p)?;
        let bound = match a_mode {
            AMode::Safe => ExactBound::TwoTimesThreePow {
                t: n as i64 - k as i64,
            },
            AMode::Oracle => {
                let a = a_value.ok_or(Error::MissingA)?;
                theorem_b_bound(n, k, a)?
            }
            AMode::Crystal => {
                let a = match a_value {
                    Some(a) => a,
                    None => a_crystal(lambda, p)?,
                };
                theorem_b_bound(n, k, a)?
            }
        };
        let mut entry = BoundEntry::value(b_tag, bound);
        if a_mode == AMode::Crystal {
            entry.note = Some("a from crystal BFS; upper bound on the true a, not guaranteed by the theorem".into());
        }
        entries.push(entry);
    }

    if p.p() == 2 && !lambda.is_empty() {
        entries.push(BoundEntry::value(
            BoundTag::C,
            ExactBound::from_int(theorem_c_bound(lambda)?),
        ));
    } else {
        entries.push(BoundEntry::skipped(BoundTag::C, "characteristic 2 only"));
    }

    entries.push(BoundEntry::value(
        BoundTag::L1,
        ExactBound::from_int(lemma_l1_bound(lambda, p)?),
    ));

    if lambda.len() <= 2 && !lambda.is_empty() {
        let a = lambda.part(1);
        let b = lambda.part(2);
        if (a - b) as i64 >= p.p() as i64 - 1 {
            entries.push(BoundEntry::value(
                BoundTag::TwoRow,
                ExactBound::from_int(two_row_bound(a, b, p)?),
            ));
        } else {
            entries.push(BoundEntry::skipped(
                BoundTag::TwoRow,
                format!("needs λ_1 − λ_2 ≥ p − 1; got {}", a - b),
            ));
        }
    } else {
        entries.push(BoundEntry::skipped(BoundTag::TwoRow, "needs at most two rows"));
    }

    if lambda.is_empty() {
        entries.push(BoundEntry::skipped(BoundTag::FirstRow, "empty partition"));
    } else {
        match first_row_bound(lambda, p)? {
            Some(v) => entries.push(BoundEntry::value(BoundTag::FirstRow, ExactBound::from_int(v))),
            None => entries.push(BoundEntry::skipped(
                BoundTag::FirstRow,
                "first-row condition fails",
            )),
        }
    }

    let best = entries
        .iter()
        .filter(|e| e.applicable)
        .filter_map(|e| e.value.as_ref().map(|v| (e.tag, v.clone())))
        .max_by(|a, b| a.1.value_cmp(&b.1));
    let (best_tag, best_value) = match best {
        Some((tag, v)) => (Some(tag), Some(v)),
        None => (None, None),
    };
    Ok(BoundReport {
        lambda: lambda.clone(),
        p: p.p(),
        entries,
        best_tag,
        best_value,
    })
}
