//! Table-driven transform vs. the reference double loop, with the outputs
//! compared on every run.

use std::time::{Duration, Instant};

use hxdft::linalg::max_abs_diff;
use hxdft::{dft1d, reference_dft1d, AlgebraTag, Direction, MatrixRoot, ScaleConvention};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gen;

/// Largest tolerated `‖table − reference‖_max`.
pub const AGREEMENT_TOL: f64 = 1e-11;

/// Minimum wall time spent repeating the fast path.
const MIN_SAMPLE_TIME: Duration = Duration::from_millis(20);

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algebra: AlgebraTag,
    pub m_len: usize,
    pub table_ns_per_sample: f64,
    pub reference_ns_per_sample: f64,
    pub max_diff: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(
        "{algebra} M={m_len}: table and reference paths differ by {diff:e} (> {AGREEMENT_TOL:e})"
    )]
    Disagreement {
        algebra: AlgebraTag,
        m_len: usize,
        diff: f64,
    },
    #[error("sizes must be positive")]
    ZeroSize,
    #[error(transparent)]
    Core(#[from] hxdft::Error),
}

pub fn run(
    tag: AlgebraTag,
    root: &MatrixRoot,
    sizes: &[usize],
    seed: u64,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(sizes.len());
    for &m_len in sizes {
        if m_len == 0 {
            return Err(BenchError::ZeroSize);
        }
        let f = gen::signal1d(&mut rng, tag, m_len);
        let scale = ScaleConvention::InverseScaled;

        let start = Instant::now();
        let mut reps = 0u32;
        let fast = loop {
            let out = dft1d(&f, root, Direction::Forward, scale)?;
            reps += 1;
            if start.elapsed() >= MIN_SAMPLE_TIME {
                break out;
            }
        };
        let table_ns = start.elapsed().as_nanos() as f64 / reps as f64;

        let start = Instant::now();
        let slow = reference_dft1d(&f, root)?;
        let reference_ns = start.elapsed().as_nanos() as f64;

        let diff = max_abs_diff(fast.data(), slow.data());
        if !(diff <= AGREEMENT_TOL) {
            return Err(BenchError::Disagreement {
                algebra: tag,
                m_len,
                diff,
            });
        }
        rows.push(BenchRow {
            algebra: tag,
            m_len,
            table_ns_per_sample: table_ns / m_len as f64,
            reference_ns_per_sample: reference_ns / m_len as f64,
            max_diff: diff,
        });
    }
    Ok(rows)
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<13} {:>6} {:>16} {:>16} {:>10}\n",
        "algebra", "M", "table ns/sample", "ref ns/sample", "max diff"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<13} {:>6} {:>16.1} {:>16.1} {:>10.2e}\n",
            r.algebra.as_str(),
            r.m_len,
            r.table_ns_per_sample,
            r.reference_ns_per_sample,
            r.max_diff
        ));
    }
    out
}
