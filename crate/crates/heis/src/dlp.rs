//! The double-limit engine.
//!
//! A bounded double sequence `a_{n,m}` has the double limit property (DLP)
//! when its two iterated limits agree whenever both exist. Everything here
//! is a finite proxy for that statement:
//!
//! * [`iterated_limit`] estimates one iterated limit. A limit "exists" when
//!   the deepest `window` values inside the index cap are mutually Cauchy
//!   within `tol`; the reported value is taken at the cap so that early
//!   false plateaus (a sequence that looks settled and then moves) are
//!   rejected rather than trusted. The outer pass only ranges over indices
//!   whose inner limits converged, and never past the smaller cap, because
//!   entries with one index far beyond the other cap carry truncation
//!   artifacts rather than information.
//! * [`extract_double_subsequence`] realizes the compactness step at finite
//!   scale: rows are bucketed by quantized value tuples over a column
//!   prefix (an epsilon-net refinement standing in for sequential
//!   compactness), a column subsequence is chosen the same way against the
//!   surviving rows, and both iterated limits are then required to converge
//!   on the extracted subarray.
//! * [`dlp_check`] aggregates a raw-grid attempt and several extraction
//!   attempts into PASS / FAIL / INCONCLUSIVE. FAIL is a strong claim: it
//!   needs a converged pair of limits separated by more than `10 * tol`,
//!   never an unconverged estimate. INCONCLUSIVE is a first-class outcome.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{HeisError, Result};
use crate::group::{GroupElement, HeisenbergGroup};
use crate::spaces::{PairingSpace, Vector};

/// Total evaluation function of a double sequence, 1-based in both indices.
pub type EvalFn = dyn Fn(usize, usize) -> f64 + Send + Sync;

/// A bounded, lazily evaluated real double array with declared index caps.
///
/// Evaluation must be a pure function of `(n, m)`; entries may be evaluated
/// in any order, any number of times. Every evaluated entry is checked
/// against the declared bound; a violation is a structural error.
#[derive(Clone)]
pub struct DoubleSequence {
    eval: Arc<EvalFn>,
    bound: f64,
    cap_n: usize,
    cap_m: usize,
}

impl std::fmt::Debug for DoubleSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DoubleSequence")
            .field("bound", &self.bound)
            .field("cap_n", &self.cap_n)
            .field("cap_m", &self.cap_m)
            .finish()
    }
}

impl DoubleSequence {
    pub fn new<F>(bound: f64, cap_n: usize, cap_m: usize, eval: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> f64 + Send + Sync + 'static,
    {
        if !(bound > 0.0) || !bound.is_finite() {
            return Err(HeisError::InvalidParameter(format!("bound must be positive, got {bound}")));
        }
        if cap_n == 0 || cap_m == 0 {
            return Err(HeisError::InvalidParameter("index caps must be at least 1".into()));
        }
        Ok(DoubleSequence { eval: Arc::new(eval), bound, cap_n, cap_m })
    }

    /// Entry `a_{n,m}` (1-based); enforces the declared bound.
    pub fn at(&self, n: usize, m: usize) -> Result<f64> {
        if n == 0 || n > self.cap_n || m == 0 || m > self.cap_m {
            return Err(HeisError::InvalidParameter(format!(
                "index ({n}, {m}) outside caps ({}, {})",
                self.cap_n, self.cap_m
            )));
        }
        let value = (self.eval)(n, m);
        if !value.is_finite() || value.abs() > self.bound {
            return Err(HeisError::BoundViolation { n, m, value, bound: self.bound });
        }
        Ok(value)
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn cap_n(&self) -> usize {
        self.cap_n
    }

    pub fn cap_m(&self) -> usize {
        self.cap_m
    }
}

/// Which index the inner limit runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitOrder {
    /// `lim_m lim_n`: inner limit over the row index `n`.
    RowThenCol,
    /// `lim_n lim_m`: inner limit over the column index `m`.
    ColThenRow,
}

/// Outcome of one iterated-limit estimation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IteratedLimitEstimate {
    /// Best available estimate (taken at the deepest converged indices);
    /// meaningful only when `converged`.
    pub value: f64,
    /// True only if every inner estimate used stabilized within `tolerance`
    /// across `tail_window` consecutive indices and the outer sequence of
    /// inner limits stabilized as well.
    pub converged: bool,
    pub tail_window: usize,
    pub tolerance: f64,
    /// `(n, m)` indices at which stabilization was first observed,
    /// cross-checked against the deep end of the range.
    pub indices_used: (usize, usize),
}

/// Subarray view through explicit index lists (1-based positions).
struct SeqView<'a> {
    seq: &'a DoubleSequence,
    rows: &'a [usize],
    cols: &'a [usize],
}

impl SeqView<'_> {
    fn at(&self, i: usize, j: usize) -> Result<f64> {
        self.seq.at(self.rows[i - 1], self.cols[j - 1])
    }

    fn n_len(&self) -> usize {
        self.rows.len()
    }

    fn m_len(&self) -> usize {
        self.cols.len()
    }
}

struct InnerEstimate {
    converged: bool,
    value: f64,
    first_stable: usize,
}

/// Successive differences of `values` all below `tol`.
fn window_stable(values: &[f64], tol: f64) -> bool {
    values.windows(2).all(|w| (w[0] - w[1]).abs() < tol)
}

/// Limit over the inner index at a fixed outer index.
///
/// Convergence is judged on the deepest `window` values before the cap;
/// earlier windows are probed only to report where stabilization began.
fn inner_limit(
    view: &SeqView<'_>,
    order: LimitOrder,
    outer: usize,
    tol: f64,
    window: usize,
) -> Result<InnerEstimate> {
    let len = match order {
        LimitOrder::RowThenCol => view.n_len(),
        LimitOrder::ColThenRow => view.m_len(),
    };
    let at = |inner: usize| match order {
        LimitOrder::RowThenCol => view.at(inner, outer),
        LimitOrder::ColThenRow => view.at(outer, inner),
    };
    if len < window {
        let value = at(len)?;
        return Ok(InnerEstimate { converged: false, value, first_stable: len });
    }
    let deep: Vec<f64> = (len - window + 1..=len).map(at).collect::<Result<_>>()?;
    let value = deep[window - 1];
    if !window_stable(&deep, tol) {
        return Ok(InnerEstimate { converged: false, value, first_stable: len });
    }
    // Doubling probe ladder for the earliest window consistent with the tail.
    let mut first_stable = len;
    let mut s = window;
    while s < len {
        let probe: Vec<f64> = (s - window + 1..=s).map(at).collect::<Result<_>>()?;
        if window_stable(&probe, tol) && (probe[window - 1] - value).abs() <= tol {
            first_stable = s;
            break;
        }
        s *= 2;
    }
    Ok(InnerEstimate { converged: true, value, first_stable })
}

fn iterated_limit_view(
    view: &SeqView<'_>,
    order: LimitOrder,
    tol: f64,
    window: usize,
) -> Result<IteratedLimitEstimate> {
    if !(tol > 0.0) {
        return Err(HeisError::InvalidParameter("tol must be positive".into()));
    }
    if window < 2 {
        return Err(HeisError::InvalidParameter("window must be at least 2".into()));
    }
    // The outer index never ranges past the smaller cap: entries with one
    // index far beyond the other cap see only the truncation of the array.
    let outer_len = view.n_len().min(view.m_len());
    let inner_len = match order {
        LimitOrder::RowThenCol => view.n_len(),
        LimitOrder::ColThenRow => view.m_len(),
    };

    // Deepest `window` outer indices with converged inner limits.
    let mut tail: Vec<(usize, InnerEstimate)> = Vec::new();
    for outer in (1..=outer_len).rev() {
        let est = inner_limit(view, order, outer, tol, window)?;
        if est.converged {
            tail.push((outer, est));
            if tail.len() == window {
                break;
            }
        }
    }

    let fallback_value = match tail.first() {
        Some((_, est)) => est.value,
        None => view.at(view.n_len(), view.m_len())?,
    };
    let unconverged = |inner_idx: usize, outer_idx: usize| {
        let indices_used = match order {
            LimitOrder::RowThenCol => (inner_idx, outer_idx),
            LimitOrder::ColThenRow => (outer_idx, inner_idx),
        };
        IteratedLimitEstimate {
            value: fallback_value,
            converged: false,
            tail_window: window,
            tolerance: tol,
            indices_used,
        }
    };

    if tail.len() < window {
        return Ok(unconverged(inner_len, outer_len));
    }
    tail.reverse(); // ascending outer index
    let outer_values: Vec<f64> = tail.iter().map(|(_, e)| e.value).collect();
    let deep_outer = tail.last().expect("window >= 2 entries");
    if !window_stable(&outer_values, tol) {
        return Ok(unconverged(deep_outer.1.first_stable, deep_outer.0));
    }
    let value = deep_outer.1.value;

    // Earliest outer window consistent with the deep tail.
    let mut outer_first_stable = deep_outer.0;
    let mut s = window;
    'ladder: while s < deep_outer.0 {
        let mut probe = Vec::with_capacity(window);
        for outer in s - window + 1..=s {
            let est = inner_limit(view, order, outer, tol, window)?;
            if !est.converged {
                s *= 2;
                continue 'ladder;
            }
            probe.push(est.value);
        }
        if window_stable(&probe, tol) && (probe[window - 1] - value).abs() <= tol {
            outer_first_stable = s;
            break;
        }
        s *= 2;
    }

    let indices_used = match order {
        LimitOrder::RowThenCol => (deep_outer.1.first_stable, outer_first_stable),
        LimitOrder::ColThenRow => (outer_first_stable, deep_outer.1.first_stable),
    };
    Ok(IteratedLimitEstimate {
        value,
        converged: true,
        tail_window: window,
        tolerance: tol,
        indices_used,
    })
}

/// Iterated limit of `seq` in the given order.
pub fn iterated_limit(
    seq: &DoubleSequence,
    order: LimitOrder,
    tol: f64,
    window: usize,
) -> Result<IteratedLimitEstimate> {
    let rows: Vec<usize> = (1..=seq.cap_n).collect();
    let cols: Vec<usize> = (1..=seq.cap_m).collect();
    iterated_limit_view(&SeqView { seq, rows: &rows, cols: &cols }, order, tol, window)
}

/// Tuning knobs of the extraction pass, derived from the window size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtractParams {
    /// Columns of the prefix the rows are bucketed over.
    pub prefix_cols: usize,
    /// Rows kept after bucketing (deepest survivors).
    pub row_keep: usize,
    /// Column pool scanned when selecting the column subsequence.
    pub col_pool: usize,
    /// Columns kept (deepest survivors).
    pub col_keep: usize,
    /// Minimum survivors on either side for the extraction to count.
    pub min_keep: usize,
    /// Row pool scanned when bucketing rows.
    pub row_pool: usize,
}

impl ExtractParams {
    pub fn for_window(window: usize) -> Self {
        ExtractParams {
            prefix_cols: window + 4,
            row_keep: 3 * window + 6,
            col_pool: 200,
            col_keep: 2 * window + 4,
            min_keep: window + 2,
            row_pool: 600,
        }
    }
}

/// Successful extraction: a double subsequence on which both iterated
/// limits converge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtractionResult {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub limit_row_then_col: f64,
    pub limit_col_then_row: f64,
    pub row_then_col: IteratedLimitEstimate,
    pub col_then_row: IteratedLimitEstimate,
}

/// Best partial state carried by an extraction failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartialExtraction {
    pub stage: String,
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub row_then_col: Option<IteratedLimitEstimate>,
    pub col_then_row: Option<IteratedLimitEstimate>,
}

fn cell_key(value: f64, cell_width: f64) -> i64 {
    (value / cell_width).floor() as i64
}

/// Keep the largest bucket (ties: smallest cell key) of `active` keyed by
/// the quantized value at a fixed probe.
fn refine_largest_bucket<F>(active: Vec<usize>, cell_width: f64, probe: F) -> Result<Vec<usize>>
where
    F: Fn(usize) -> Result<f64>,
{
    let mut buckets: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for idx in active {
        buckets.entry(cell_key(probe(idx)?, cell_width)).or_default().push(idx);
    }
    let mut best: Option<(usize, i64)> = None;
    for (&key, members) in &buckets {
        if best.map_or(true, |(len, _)| members.len() > len) {
            best = Some((members.len(), key));
        }
    }
    let (_, key) = best.expect("active set is nonempty");
    Ok(buckets.remove(&key).expect("chosen bucket exists"))
}

/// One extraction attempt over explicit candidate index lists.
fn extract_on(
    seq: &DoubleSequence,
    row_candidates: &[usize],
    col_candidates: &[usize],
    tol: f64,
    window: usize,
    params: &ExtractParams,
) -> Result<ExtractionResult> {
    let cell_width = tol / 2.0;
    if !(seq.bound / cell_width).is_finite() || seq.bound / cell_width > 9e15 {
        return Err(HeisError::InvalidParameter(
            "tolerance too small relative to the sequence bound for quantization".into(),
        ));
    }
    let fail = |stage: &str, rows: &[usize], cols: &[usize]| {
        Err(HeisError::ExtractionFailed(Box::new(PartialExtraction {
            stage: stage.to_string(),
            row_indices: rows.to_vec(),
            col_indices: cols.to_vec(),
            row_then_col: None,
            col_then_row: None,
        })))
    };

    let row_pool: Vec<usize> = row_candidates.iter().copied().take(params.row_pool).collect();
    let prefix: Vec<usize> = col_candidates.iter().copied().take(params.prefix_cols).collect();
    if row_pool.len() < params.min_keep || prefix.is_empty() {
        return fail("pool", &row_pool, &prefix);
    }

    // Rows as points: epsilon-net refinement over the column prefix.
    let mut rows = row_pool;
    for &c in &prefix {
        rows = refine_largest_bucket(rows, cell_width, |r| seq.at(r, c))?;
    }
    if rows.len() < params.min_keep {
        return fail("row-refinement", &rows, &prefix);
    }
    if rows.len() > params.row_keep {
        rows.drain(..rows.len() - params.row_keep);
    }

    // Columns as points against the surviving rows.
    let mut cols: Vec<usize> = col_candidates.iter().copied().take(params.col_pool).collect();
    for &r in &rows {
        cols = refine_largest_bucket(cols, cell_width, |c| seq.at(r, c))?;
        if cols.len() < params.min_keep {
            return fail("col-refinement", &rows, &cols);
        }
    }
    if cols.len() > params.col_keep {
        cols.drain(..cols.len() - params.col_keep);
    }

    // Re-tighten the rows on the columns actually selected.
    for &c in &cols {
        rows = refine_largest_bucket(rows, cell_width, |r| seq.at(r, c))?;
    }
    if rows.len() < params.min_keep {
        return fail("row-retightening", &rows, &cols);
    }

    // Both iterated limits must converge on the extracted subarray.
    let view = SeqView { seq, rows: &rows, cols: &cols };
    let rtc = iterated_limit_view(&view, LimitOrder::RowThenCol, tol, window)?;
    let ctr = iterated_limit_view(&view, LimitOrder::ColThenRow, tol, window)?;
    if !rtc.converged || !ctr.converged {
        return Err(HeisError::ExtractionFailed(Box::new(PartialExtraction {
            stage: "verification".into(),
            row_indices: rows,
            col_indices: cols,
            row_then_col: Some(rtc),
            col_then_row: Some(ctr),
        })));
    }
    Ok(ExtractionResult {
        row_indices: rows,
        col_indices: cols,
        limit_row_then_col: rtc.value,
        limit_col_then_row: ctr.value,
        row_then_col: rtc,
        col_then_row: ctr,
    })
}

/// Offsets at which extraction attempts start; later offsets skip transient
/// behavior near the origin.
fn offset_schedule(seq: &DoubleSequence, window: usize, params: &ExtractParams) -> Vec<usize> {
    let min_cap = seq.cap_n.min(seq.cap_m);
    let mut offsets: Vec<usize> = [0, 64, min_cap / 4]
        .into_iter()
        .filter(|off| min_cap.saturating_sub(*off) >= params.prefix_cols + 2 * window)
        .collect();
    offsets.sort_unstable();
    offsets.dedup();
    if offsets.is_empty() {
        offsets.push(0);
    }
    offsets
}

fn extract_at_offset(
    seq: &DoubleSequence,
    offset: usize,
    tol: f64,
    window: usize,
    params: &ExtractParams,
) -> Result<ExtractionResult> {
    let rows: Vec<usize> = (offset + 1..=seq.cap_n).collect();
    let cols: Vec<usize> = (offset + 1..=seq.cap_m).collect();
    extract_on(seq, &rows, &cols, tol, window, params)
}

/// Extraction of a double subsequence on which both iterated limits exist,
/// trying the offset schedule and returning the first success.
pub fn extract_double_subsequence(seq: &DoubleSequence, tol: f64) -> Result<ExtractionResult> {
    extract_double_subsequence_with(seq, tol, DEFAULT_WINDOW)
}

pub fn extract_double_subsequence_with(
    seq: &DoubleSequence,
    tol: f64,
    window: usize,
) -> Result<ExtractionResult> {
    let params = ExtractParams::for_window(window);
    let mut last_err = None;
    for offset in offset_schedule(seq, window, &params) {
        match extract_at_offset(seq, offset, tol, window, &params) {
            Ok(result) => return Ok(result),
            Err(err) => last_err = Some(err),
        }
    }
    Err(last_err.expect("offset schedule is nonempty"))
}

/// Successive extraction making several sequences (sharing index caps)
/// converge on one common pair of index sets.
pub fn refine_simultaneous(
    seqs: &[&DoubleSequence],
    tol: f64,
    window: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let first = seqs.first().ok_or_else(|| {
        HeisError::InvalidParameter("refine_simultaneous needs at least one sequence".into())
    })?;
    let params = ExtractParams::for_window(window);
    let mut rows: Vec<usize> = (1..=first.cap_n).collect();
    let mut cols: Vec<usize> = (1..=first.cap_m).collect();
    for seq in seqs {
        if seq.cap_n != first.cap_n || seq.cap_m != first.cap_m {
            return Err(HeisError::InvalidParameter(
                "simultaneous refinement needs identical index caps".into(),
            ));
        }
        let result = extract_on(seq, &rows, &cols, tol, window, &params)?;
        rows = result.row_indices;
        cols = result.col_indices;
    }
    Ok((rows, cols))
}

pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_WINDOW: usize = 5;
pub const DEFAULT_CAP: usize = 2000;

/// Engine parameters: stabilization tolerance, window, and index caps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DlpParams {
    pub tol: f64,
    pub window: usize,
    pub cap_n: usize,
    pub cap_m: usize,
}

impl Default for DlpParams {
    fn default() -> Self {
        DlpParams { tol: DEFAULT_TOL, window: DEFAULT_WINDOW, cap_n: DEFAULT_CAP, cap_m: DEFAULT_CAP }
    }
}

/// Verdict of a double-limit check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// One attempt inside a [`dlp_check`] run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttemptOutcome {
    /// `"raw"` for the full grid, `"extract@<offset>"` for extractions.
    pub kind: String,
    pub converged: bool,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub gap: Option<f64>,
}

/// Aggregate outcome of a double-limit check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DlpOutcome {
    pub verdict: Verdict,
    /// `lim_m lim_n` on the witnessing index sets.
    pub c1: Option<f64>,
    /// `lim_n lim_m` on the witnessing index sets.
    pub c2: Option<f64>,
    pub witness_rows: Option<Vec<usize>>,
    pub witness_cols: Option<Vec<usize>>,
    pub attempts: Vec<AttemptOutcome>,
    pub tol: f64,
    pub window: usize,
    pub cap_n: usize,
    pub cap_m: usize,
}

/// Double-limit check with default window.
pub fn dlp_check(seq: &DoubleSequence, tol: f64) -> Result<DlpOutcome> {
    dlp_check_with(seq, &DlpParams { tol, ..DlpParams::default() })
}

/// Double-limit check: raw grid first, then extraction attempts.
///
/// * FAIL — some attempt converged in both orders with `|c1 - c2| > 10 tol`;
/// * PASS — at least one attempt converged, and every converged attempt has
///   `|c1 - c2| <= tol`;
/// * INCONCLUSIVE — anything else (including converged gaps between `tol`
///   and `10 tol`, which are neither agreement nor a confident violation).
pub fn dlp_check_with(seq: &DoubleSequence, params: &DlpParams) -> Result<DlpOutcome> {
    let tol = params.tol;
    let window = params.window;
    let ep = ExtractParams::for_window(window);

    struct Converged {
        c1: f64,
        c2: f64,
        rows: Vec<usize>,
        cols: Vec<usize>,
    }
    let mut attempts = Vec::new();
    let mut converged: Vec<Converged> = Vec::new();

    let rtc = iterated_limit(seq, LimitOrder::RowThenCol, tol, window)?;
    let ctr = iterated_limit(seq, LimitOrder::ColThenRow, tol, window)?;
    if rtc.converged && ctr.converged {
        attempts.push(AttemptOutcome {
            kind: "raw".into(),
            converged: true,
            c1: Some(rtc.value),
            c2: Some(ctr.value),
            gap: Some((rtc.value - ctr.value).abs()),
        });
        converged.push(Converged {
            c1: rtc.value,
            c2: ctr.value,
            rows: (1..=seq.cap_n).collect(),
            cols: (1..=seq.cap_m).collect(),
        });
    } else {
        attempts.push(AttemptOutcome {
            kind: "raw".into(),
            converged: false,
            c1: rtc.converged.then_some(rtc.value),
            c2: ctr.converged.then_some(ctr.value),
            gap: None,
        });
    }

    for offset in offset_schedule(seq, window, &ep) {
        let kind = format!("extract@{offset}");
        match extract_at_offset(seq, offset, tol, window, &ep) {
            Ok(result) => {
                attempts.push(AttemptOutcome {
                    kind,
                    converged: true,
                    c1: Some(result.limit_row_then_col),
                    c2: Some(result.limit_col_then_row),
                    gap: Some((result.limit_row_then_col - result.limit_col_then_row).abs()),
                });
                converged.push(Converged {
                    c1: result.limit_row_then_col,
                    c2: result.limit_col_then_row,
                    rows: result.row_indices,
                    cols: result.col_indices,
                });
            }
            Err(HeisError::ExtractionFailed(_)) => {
                attempts.push(AttemptOutcome { kind, converged: false, c1: None, c2: None, gap: None });
            }
            Err(other) => return Err(other),
        }
    }

    let gap = |c: &Converged| (c.c1 - c.c2).abs();
    let outcome = |verdict, chosen: Option<&Converged>| DlpOutcome {
        verdict,
        c1: chosen.map(|c| c.c1),
        c2: chosen.map(|c| c.c2),
        witness_rows: chosen.map(|c| c.rows.clone()),
        witness_cols: chosen.map(|c| c.cols.clone()),
        attempts: attempts.clone(),
        tol,
        window,
        cap_n: seq.cap_n,
        cap_m: seq.cap_m,
    };

    if let Some(worst) = converged
        .iter()
        .filter(|c| gap(c) > 10.0 * tol)
        .max_by(|a, b| gap(a).total_cmp(&gap(b)))
    {
        return Ok(outcome(Verdict::Fail, Some(worst)));
    }
    if !converged.is_empty() && converged.iter().all(|c| gap(c) <= tol) {
        return Ok(outcome(Verdict::Pass, converged.first()));
    }
    Ok(outcome(Verdict::Inconclusive, converged.first()))
}

/// The sup-norm double sequence `a_{n,m} = ||e_n + sum_{i<=m} e_i||_inf`,
/// evaluated through the actual norm of the truncated sequence model.
/// Its entries are exactly 2 when `n <= m` (the overlap doubles coordinate
/// `n`) and exactly 1 otherwise, so the two iterated limits are 1 and 2.
pub fn c0_counterexample(cap_n: usize, cap_m: usize) -> Result<DoubleSequence> {
    if cap_n == 0 || cap_m == 0 {
        return Err(HeisError::InvalidParameter("caps must be at least 1".into()));
    }
    let dim = cap_n.max(cap_m);
    let space = PairingSpace::c0(dim, crate::ScalarMode::Float)?;
    DoubleSequence::new(2.0, cap_n, cap_m, move |n, m| {
        let mut coords = vec![0.0f64; dim];
        for c in coords.iter_mut().take(m) {
            *c += 1.0;
        }
        coords[n - 1] += 1.0;
        let v = Vector(coords.into_iter().map(crate::Scalar::Float).collect());
        space.norm(&v).expect("coords match the space dimension")
    })
}

/// Grothendieck-style check that a bounded function on the group has the
/// double limit property along two generated sequences: forms
/// `F(n, m) = phi(u_n * v_m)` and runs [`dlp_check_with`]. The DLP is the
/// operational definition of weak almost periodicity here.
pub fn wap_check<P, U, V>(
    group: &HeisenbergGroup,
    phi: P,
    gen_u: U,
    gen_v: V,
    phi_bound: f64,
    params: &DlpParams,
) -> Result<DlpOutcome>
where
    P: Fn(&GroupElement) -> f64 + Send + Sync + 'static,
    U: Fn(usize) -> GroupElement,
    V: Fn(usize) -> GroupElement,
{
    let us: Vec<GroupElement> = (1..=params.cap_n).map(|n| gen_u(n)).collect();
    let vs: Vec<GroupElement> = (1..=params.cap_m).map(|m| gen_v(m)).collect();
    for e in us.iter().chain(&vs) {
        group.validate(e)?;
    }
    let group = group.clone();
    let seq = DoubleSequence::new(phi_bound, params.cap_n, params.cap_m, move |n, m| {
        let product = group
            .multiply(&us[n - 1], &vs[m - 1])
            .expect("generated elements were validated");
        phi(&product)
    })?;
    dlp_check_with(&seq, params)
}
