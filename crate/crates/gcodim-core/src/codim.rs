//! The codimension engine: multilinear graded codimensions by evaluation
//! rank, the multinomial assembly over grading compositions, weight-space
//! dimensions of the relatively free algebra, cocharacter multiplicities via
//! the unitriangular Kostka solve, and the proper delta sequence for unital
//! algebras.
//!
//! Evaluation strategy. A multilinear polynomial is an identity iff it
//! vanishes under every basis substitution, so `multilinear_codim` is the
//! rank of the matrix of basis evaluations. Weight spaces of general content
//! are not multilinear: there the engine substitutes generic elements with
//! symbolic coordinates and extracts polynomial coefficients exactly, which
//! again reduces membership in the T-ideal to the vanishing of a finite
//! coefficient matrix. For multilinear content the two coincide.
//!
//! All ranks go through [`crate::linalg`]: exact rational elimination on
//! small matrices, 62-bit modular elimination on large ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::linalg::{rank, RankMode, SparseRow};
use crate::partition::{lower_strip_set, multinomial, partitions_of, KostkaCache, Partition};
use crate::series::{a_from_m, SchurExpansion};
use crate::Rat;

/// Resource limits. Factorial growth is inherent to the problem; budgets
/// turn it into a clean typed refusal instead of an unbounded computation.
#[derive(Clone, Debug)]
pub struct Budgets {
    /// Largest multilinear degree n (the evaluation matrix has n! rows).
    pub max_multilinear_n: usize,
    /// Cap on rows x columns of any rank matrix.
    pub max_matrix_entries: u64,
    /// Largest total weight |alpha| for weight-space dimensions.
    pub max_weight_degree: u64,
    /// Cap on the number of words enumerated for one weight space.
    pub max_weight_words: u64,
    /// Height cap for cocharacter contents; `None` means
    /// min(n, dim + 1), one row beyond the Gordienko bound so the bound is
    /// checked rather than assumed.
    pub content_height_cap: Option<usize>,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_multilinear_n: 7,
            max_matrix_entries: 5_000_000,
            max_weight_degree: 10,
            max_weight_words: 3_000_000,
            content_height_cap: None,
        }
    }
}

/// Engine failures: typed budget refusals, contract violations on inputs,
/// and internal consistency breaks (which indicate bugs, never user error).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    BudgetExceeded { what: &'static str, limit: u64, requested: u64 },
    NotUnital,
    NegativeDelta { s: usize, value: BigInt },
    NegativeMultiplicity { lambda: Partition, value: i128 },
    NonIntegerMultiplicity { lambda: Partition, value: Rat },
    InsufficientTruncation { needed: u64, available: u64 },
    Consistency { detail: String },
    Algebra(AlgebraError),
}

impl core::fmt::Display for EngineError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EngineError::BudgetExceeded { what, limit, requested } => {
                write!(f, "budget exceeded: {what} needs {requested}, limit {limit}")
            }
            EngineError::NotUnital => write!(f, "operation requires a unital algebra spec"),
            EngineError::NegativeDelta { s, value } => {
                write!(f, "delta_{s} = {value} is negative: spec is not unital or engine bug")
            }
            EngineError::NegativeMultiplicity { lambda, value } => {
                write!(f, "multiplicity at {lambda} solved to {value} < 0: engine bug")
            }
            EngineError::NonIntegerMultiplicity { lambda, value } => {
                write!(f, "multiplicity at {lambda} solved to non-integer {value}: engine bug")
            }
            EngineError::InsufficientTruncation { needed, available } => {
                write!(f, "truncation headroom not met: need degree {needed}, budget allows {available}")
            }
            EngineError::Consistency { detail } => write!(f, "internal consistency failure: {detail}"),
            EngineError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EngineError {}

impl From<AlgebraError> for EngineError {
    fn from(e: AlgebraError) -> Self {
        EngineError::Algebra(e)
    }
}

/// One degree of the codimension table: the exact codimension and the
/// per-composition blocks it was assembled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimRow {
    pub n: u64,
    pub c: BigUint,
    /// (composition over group elements in engine order with e last, block dim)
    pub blocks: Vec<(Vec<u64>, u64)>,
}

/// Codimension rows for n = 0.., plus whether the spec had a unit (which
/// gates the proper-delta decomposition).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimTable {
    pub unital: bool,
    pub rows: Vec<CodimRow>,
}

impl CodimTable {
    pub fn sequence(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| BigInt::from(r.c.clone())).collect()
    }
}

/// Cocharacter multiplicities of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterRow {
    pub n: u64,
    pub m: BTreeMap<Partition, u64>,
}

impl CocharacterRow {
    /// Sum of m_lambda * d_lambda, which must equal c_n.
    pub fn character_dimension(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (lambda, &m) in &self.m {
            total += lambda.dim_irrep() * BigUint::from(m);
        }
        total
    }

    /// Largest height appearing with a nonzero multiplicity.
    pub fn support_height(&self) -> usize {
        self.m
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(l, _)| l.height())
            .max()
            .unwrap_or(0)
    }
}

/// Proper coefficients a_lambda up to the trusted degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperCoefficients {
    pub n: u64,
    pub a: BTreeMap<Partition, u64>,
}

impl ProperCoefficients {
    /// delta_s = sum of a_lambda * d_lambda over lambda of size s.
    pub fn delta(&self, s: u64) -> BigUint {
        let mut total = BigUint::zero();
        for (lambda, &a) in &self.a {
            if lambda.size() == s {
                total += lambda.dim_irrep() * BigUint::from(a);
            }
        }
        total
    }
}

/// x * b_j on sparse coordinate vectors.
fn sparse_mul_basis(spec: &AlgebraSpec, x: &SparseRow, b: usize) -> SparseRow {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, xi) in x {
        for (c, s) in spec.basis_product(*i, b).iter().enumerate() {
            if !s.is_zero() {
                let entry = acc.entry(c).or_insert_with(Rat::zero);
                *entry += xi * s;
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let mut i = n.saturating_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// dim C_h: the rank of the matrix of all basis evaluations of the n!
/// multilinear monomials in variables of homogeneous degrees h_1..h_n.
/// Returns 0 when some component W_{h_i} has no basis elements.
pub fn multilinear_codim(
    spec: &AlgebraSpec,
    h: &[usize],
    budgets: &Budgets,
    mode: RankMode,
) -> Result<u64, EngineError> {
    let n = h.len();
    assert!(n >= 1, "multilinear degree must be at least 1");
    if n > budgets.max_multilinear_n {
        return Err(EngineError::BudgetExceeded {
            what: "multilinear degree",
            limit: budgets.max_multilinear_n as u64,
            requested: n as u64,
        });
    }
    let k = spec.dim();
    let comps: Vec<Vec<usize>> = h.iter().map(|&g| spec.homogeneous_basis(g)).collect();
    if comps.iter().any(|c| c.is_empty()) {
        return Ok(0);
    }
    let mut assign_count: u64 = 1;
    for c in &comps {
        assign_count = assign_count.saturating_mul(c.len() as u64);
    }
    let mut rows_count: u64 = 1;
    for i in 2..=n as u64 {
        rows_count = rows_count.saturating_mul(i);
    }
    let cols = assign_count.saturating_mul(k as u64);
    let entries = rows_count.saturating_mul(cols);
    if entries > budgets.max_matrix_entries {
        return Err(EngineError::BudgetExceeded {
            what: "evaluation matrix entries",
            limit: budgets.max_matrix_entries,
            requested: entries,
        });
    }

    // enumerate assignments as index vectors into comps
    let mut assignments: Vec<Vec<u8>> = Vec::with_capacity(assign_count as usize);
    let mut cur = vec![0u8; n];
    'outer: loop {
        assignments.push(cur.iter().enumerate().map(|(i, &d)| comps[i][d as usize] as u8).collect());
        for pos in (0..n).rev() {
            if (cur[pos] as usize) + 1 < comps[pos].len() {
                cur[pos] += 1;
                cur[pos + 1..].iter_mut().for_each(|d| *d = 0);
                continue 'outer;
            }
        }
        break;
    }

    let mut product_memo: BTreeMap<Vec<u8>, SparseRow> = BTreeMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for sigma in permutations(n) {
        let mut row: SparseRow = Vec::new();
        for (ai, phi) in assignments.iter().enumerate() {
            let seq: Vec<u8> = sigma.iter().map(|&t| phi[t as usize]).collect();
            let product = product_memo.entry(seq.clone()).or_insert_with(|| {
                let mut acc: SparseRow = vec![(seq[0] as usize, Rat::one())];
                for &b in &seq[1..] {
                    if acc.is_empty() {
                        break;
                    }
                    acc = sparse_mul_basis(spec, &acc, b as usize);
                }
                acc
            });
            for (c, v) in product.iter() {
                row.push((ai * k + c, v.clone()));
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(rank(&rows, cols as usize, mode) as u64)
}

/// Compositions of n into s parts, colexicographic ascending (the last
/// coordinate, reserved for the identity element, varies slowest).
pub fn compositions(n: u64, s: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; s];
    fn rec(pos: usize, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos == 0 {
            cur[0] = rem;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[pos] = v;
            rec(pos - 1, rem - v, cur, out);
        }
    }
    rec(s - 1, n, &mut cur, &mut out);
    out
}

/// One codimension row: every composition block c_{n_1..n_s} together with
/// the multinomial assembly c_n = sum of multinomial(n; n_1..n_s) * block.
pub fn codim_row(
    spec: &AlgebraSpec,
    n: u64,
    budgets: &Budgets,
    mode: RankMode,
) -> Result<CodimRow, EngineError> {
    let s = spec.group().order();
    if n == 0 {
        let c0 = if spec.is_unital() { BigUint::one() } else { BigUint::zero() };
        let block = if spec.is_unital() { 1 } else { 0 };
        return Ok(CodimRow { n: 0, c: c0, blocks: vec![(vec![0; s], block)] });
    }
    let order = spec.group().engine_order();
    let mut blocks = Vec::new();
    let mut total = BigUint::zero();
    for comp in compositions(n, s) {
        let mut h: Vec<usize> = Vec::with_capacity(n as usize);
        for (t, &count) in comp.iter().enumerate() {
            for _ in 0..count {
                h.push(order[t]);
            }
        }
        let block = multilinear_codim(spec, &h, budgets, mode)?;
        total += multinomial(&comp) * BigUint::from(block);
        blocks.push((comp, block));
    }
    Ok(CodimRow { n, c: total, blocks })
}

/// Codimension table for degrees 0..=max_n.
pub fn codim_table(
    spec: &AlgebraSpec,
    max_n: u64,
    budgets: &Budgets,
    mode: RankMode,
) -> Result<CodimTable, EngineError> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        rows.push(codim_row(spec, n, budgets, mode)?);
    }
    Ok(CodimTable { unital: spec.is_unital(), rows })
}

/// Dimension of the weight space of content `alpha`: the span of all words
/// with `alpha[i]` occurrences of slot i (each occurrence carrying any group
/// label), modulo the graded identities.
///
/// Substitutes generic homogeneous elements with symbolic coordinates and
/// computes the exact rank of the resulting coefficient matrix. For
/// multilinear content this is the basis-evaluation rank; for repeated slots
/// it correctly accounts for mixed coefficient monomials that single basis
/// substitutions cannot separate.
pub fn weight_space_dim(
    spec: &AlgebraSpec,
    alpha: &[u64],
    budgets: &Budgets,
    mode: RankMode,
) -> Result<u64, EngineError> {
    let total: u64 = alpha.iter().sum();
    if total == 0 {
        return Ok(if spec.is_unital() { 1 } else { 0 });
    }
    if total > budgets.max_weight_degree {
        return Err(EngineError::BudgetExceeded {
            what: "weight degree",
            limit: budgets.max_weight_degree,
            requested: total,
        });
    }
    let s = spec.group().order() as u64;
    let mut words = multinomial(alpha);
    words *= BigUint::from(s).pow(total as u32);
    if words > BigUint::from(budgets.max_weight_words) {
        return Err(EngineError::BudgetExceeded {
            what: "weight-space words",
            limit: budgets.max_weight_words,
            requested: words.to_u64().unwrap_or(u64::MAX),
        });
    }

    let k = spec.dim();
    let nslots = alpha.len();
    // t-variable (slot, basis) -> exponent position
    let var = |slot: usize, basis: usize| slot * k + basis;
    let nvars = nslots * k;

    // state: (monomial exponents, output coordinate) -> coefficient
    type State = BTreeMap<(Vec<u8>, usize), Rat>;
    let mut rows: BTreeSet<Vec<((Vec<u8>, usize), Rat)>> = BTreeSet::new();

    struct Ctx<'a> {
        spec: &'a AlgebraSpec,
        comps: Vec<Vec<usize>>,
        nvars: usize,
    }
    let ctx = Ctx {
        spec,
        comps: (0..spec.group().order()).map(|g| spec.homogeneous_basis(g)).collect(),
        nvars,
    };

    fn extend(ctx: &Ctx, state: &State, slot: usize, g: usize, var: &dyn Fn(usize, usize) -> usize) -> State {
        let mut out: State = BTreeMap::new();
        for &b in &ctx.comps[g] {
            if state.is_empty() {
                // first letter: t_{slot,b} * b
                let mut mono = vec![0u8; ctx.nvars];
                mono[var(slot, b)] += 1;
                let entry = out.entry((mono, b)).or_insert_with(Rat::zero);
                *entry += Rat::one();
                continue;
            }
            for ((mono, c), v) in state {
                for (c2, sc) in ctx.spec.basis_product(*c, b).iter().enumerate() {
                    if sc.is_zero() {
                        continue;
                    }
                    let mut mono2 = mono.clone();
                    mono2[var(slot, b)] += 1;
                    let entry = out.entry((mono2, c2)).or_insert_with(Rat::zero);
                    *entry += v * sc;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    // DFS over words: at each position pick a slot with remaining quota and
    // a group label; prefix evaluations are shared down the tree and dead
    // (identically zero) prefixes prune the whole subtree.
    fn dfs(
        ctx: &Ctx,
        remaining: &mut [u64],
        left: u64,
        state: &State,
        first: bool,
        var: &dyn Fn(usize, usize) -> usize,
        rows: &mut BTreeSet<Vec<((Vec<u8>, usize), Rat)>>,
    ) {
        if left == 0 {
            let row: Vec<((Vec<u8>, usize), Rat)> =
                state.iter().map(|(key, v)| (key.clone(), v.clone())).collect();
            if !row.is_empty() {
                rows.insert(row);
            }
            return;
        }
        for slot in 0..remaining.len() {
            if remaining[slot] == 0 {
                continue;
            }
            remaining[slot] -= 1;
            for g in 0..ctx.comps.len() {
                if ctx.comps[g].is_empty() {
                    continue;
                }
                let next = extend(ctx, state, slot, g, var);
                if !next.is_empty() {
                    dfs(ctx, remaining, left - 1, &next, false, var, rows);
                }
            }
            remaining[slot] += 1;
        }
        let _ = first;
    }

    let mut remaining: Vec<u64> = alpha.to_vec();
    let state: State = BTreeMap::new();
    dfs(&ctx, &mut remaining, total, &state, true, &var, &mut rows);

    // intern columns and hand over to the rank engine
    let mut col_index: BTreeMap<(Vec<u8>, usize), usize> = BTreeMap::new();
    for row in &rows {
        for (key, _) in row {
            let next = col_index.len();
            col_index.entry(key.clone()).or_insert(next);
        }
    }
    let ncols = col_index.len();
    let entries = rows.len() as u64 * ncols as u64;
    if entries > budgets.max_matrix_entries {
        return Err(EngineError::BudgetExceeded {
            what: "weight-space matrix entries",
            limit: budgets.max_matrix_entries,
            requested: entries,
        });
    }
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|row| {
            let mut r: SparseRow = row.iter().map(|(key, v)| (col_index[key], v.clone())).collect();
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .collect();
    Ok(rank(&sparse, ncols, mode) as u64)
}

/// Cocharacter multiplicities at degree n, from the weight-space dimensions
/// at partition contents via the unitriangular Kostka solve.
///
/// Contents are enumerated up to the height cap (default: spec dimension
/// plus one, one row beyond the Gordienko bound so that the bound appears as
/// computed zeros instead of an assumption). The solved row is checked
/// against c_n: sum of m_lambda * d_lambda must match exactly.
pub fn cocharacter_multiplicities(
    spec: &AlgebraSpec,
    n: u64,
    budgets: &Budgets,
    mode: RankMode,
) -> Result<CocharacterRow, EngineError> {
    let mut row = CocharacterRow { n, m: BTreeMap::new() };
    if n == 0 {
        if spec.is_unital() {
            row.m.insert(Partition::empty(), 1);
        }
        return Ok(row);
    }
    let cap = budgets
        .content_height_cap
        .unwrap_or(spec.dim() + 1)
        .min(n as usize);
    let contents = partitions_of(n, Some(cap));
    let mut h_values: BTreeMap<Partition, i128> = BTreeMap::new();
    for mu in &contents {
        let alpha: Vec<u64> = mu.parts().iter().map(|&p| p as u64).collect();
        let dim = weight_space_dim(spec, &alpha, budgets, mode)?;
        h_values.insert(mu.clone(), dim as i128);
    }
    // lex-descending refines dominance: unitriangular solve
    let mut cache = KostkaCache::new();
    let mut solved: Vec<(Partition, i128)> = Vec::new();
    for mu in &contents {
        let mut value = h_values[mu];
        for (lambda, m) in &solved {
            if *m != 0 {
                let kk = cache.get(lambda, mu);
                value -= m * kk as i128;
            }
        }
        if value < 0 {
            return Err(EngineError::NegativeMultiplicity { lambda: mu.clone(), value });
        }
        solved.push((mu.clone(), value));
        if value > 0 {
            row.m.insert(mu.clone(), value as u64);
        }
    }
    // completeness cross-check against the codimension
    let expected = codim_row(spec, n, budgets, mode)?.c;
    let got = row.character_dimension();
    if got != expected {
        return Err(EngineError::Consistency {
            detail: format!(
                "sum m_lambda d_lambda = {got} but c_{n} = {expected} (height cap {cap} too small?)"
            ),
        });
    }
    Ok(row)
}

/// Cocharacter rows for all degrees 0..=max_n.
pub fn cocharacter_rows(
    spec: &AlgebraSpec,
    max_n: u64,
    budgets: &Budgets,
    mode: RankMode,
) -> Result<Vec<CocharacterRow>, EngineError> {
    (0..=max_n).map(|n| cocharacter_multiplicities(spec, n, budgets, mode)).collect()
}

/// Packs cocharacter rows into a Schur expansion in `k_vars` variables
/// truncated at `trunc`, dropping multiplicities of height beyond `k_vars`
/// after checking they are zero.
pub fn schur_expansion_from_rows(
    rows: &[CocharacterRow],
    k_vars: usize,
    trunc: u64,
) -> Result<SchurExpansion, EngineError> {
    let mut m = SchurExpansion::zero(k_vars, trunc);
    for row in rows {
        if row.n > trunc {
            continue;
        }
        for (lambda, &mult) in &row.m {
            if mult == 0 {
                continue;
            }
            if lambda.height() > k_vars {
                return Err(EngineError::Consistency {
                    detail: format!(
                        "nonzero multiplicity at {lambda} exceeds height {k_vars}: Gordienko bound violated"
                    ),
                });
            }
            m.set_coeff(lambda.clone(), Rat::from_integer(mult.into()));
        }
    }
    Ok(m)
}

/// The proper delta sequence of a unital spec, by binomial inversion of
/// c_n = sum of binomial(n,s) * delta_s.
pub fn proper_deltas(table: &CodimTable) -> Result<Vec<BigInt>, EngineError> {
    if !table.unital {
        return Err(EngineError::NotUnital);
    }
    let deltas = crate::asymptotics::binomial_inverse(&table.sequence());
    for (s, d) in deltas.iter().enumerate() {
        if d.is_negative() {
            return Err(EngineError::NegativeDelta { s, value: d.clone() });
        }
    }
    Ok(deltas)
}

/// Proper coefficients a_lambda for all degrees <= n.
///
/// Computes cocharacter rows up to n + dim (the headroom consumed by the
/// Schur-basis division by prod(1-t_i)), converts, and verifies both paper
/// identities on the result: m_lambda = sum of a_mu over the lower strip
/// set, and (for unital specs) delta_s = sum of a_lambda d_lambda.
pub fn a_multiplicities(
    spec: &AlgebraSpec,
    n: u64,
    budgets: &Budgets,
    mode: RankMode,
) -> Result<ProperCoefficients, EngineError> {
    let k_vars = spec.dim();
    let needed = n + k_vars as u64;
    if needed > budgets.max_weight_degree {
        return Err(EngineError::InsufficientTruncation {
            needed,
            available: budgets.max_weight_degree,
        });
    }
    let rows = cocharacter_rows(spec, needed, budgets, mode)?;
    let m = schur_expansion_from_rows(&rows, k_vars, needed)?;
    let a_exp = a_from_m(&m);

    let mut a: BTreeMap<Partition, u64> = BTreeMap::new();
    for (lambda, coeff) in a_exp.iter() {
        if !crate::linalg::rat_is_integer(coeff) {
            return Err(EngineError::NonIntegerMultiplicity {
                lambda: lambda.clone(),
                value: coeff.clone(),
            });
        }
        let v = coeff.to_integer();
        if v.is_negative() {
            return Err(EngineError::NegativeMultiplicity {
                lambda: lambda.clone(),
                value: v.to_i128().unwrap_or(i128::MIN),
            });
        }
        if !v.is_zero() {
            a.insert(lambda.clone(), v.to_u64().expect("a_lambda fits u64 at desk scale"));
        }
    }
    let out = ProperCoefficients { n, a };

    // Prop check: m_lambda = sum of a_mu over the lower strip set
    for row in rows.iter().filter(|r| r.n <= n) {
        for lambda in partitions_of(row.n, Some(k_vars)) {
            let mut total: u64 = 0;
            for mu in lower_strip_set(&lambda) {
                total += out.a.get(&mu).copied().unwrap_or(0);
            }
            let m_val = row.m.get(&lambda).copied().unwrap_or(0);
            if total != m_val {
                return Err(EngineError::Consistency {
                    detail: format!(
                        "m_{lambda} = {m_val} but strip sum of a gives {total} at degree {}",
                        row.n
                    ),
                });
            }
        }
    }

    // Cor check for unital specs: delta_s = sum over lambda of size s
    if spec.is_unital() {
        let table = codim_table(spec, n, budgets, mode)?;
        let deltas = proper_deltas(&table)?;
        for (s, delta) in deltas.iter().enumerate() {
            let from_a = BigInt::from(out.delta(s as u64));
            if &from_a != delta {
                return Err(EngineError::Consistency {
                    detail: format!("delta_{s} = {delta} from inversion but {from_a} from a_lambda"),
                });
            }
        }
    }
    Ok(out)
}
