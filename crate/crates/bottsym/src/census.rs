//! Exhaustive census of the whole family of `n × n` matrices.
//!
//! Workers own disjoint counter shards and return partial counts, which are
//! merged in shard order, so results do not depend on the worker count.

use std::thread;
use std::time::{Duration, Instant};

use bottsym_core::cohomology::{
    is_cohomologically_symplectic, is_cohomologically_symplectic_randomized,
};
use bottsym_core::criteria::{columns_orientable, columns_pair_up, is_orientable, is_symplectic};
use bottsym_core::family::{family_size, FamilyCursor, Shard};
use bottsym_core::BottMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest size for the parity-only census.
pub const DEFAULT_LIMIT: usize = 8;
/// Largest size when the cohomological oracle runs on every matrix.
pub const ORACLE_LIMIT: usize = 6;

const ORACLE_SEED: u64 = 0x5eed_b077;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("size {n} exceeds the census limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error(transparent)]
    Core(#[from] bottsym_core::Error),
    #[error("theorem mismatch on {:?}", .0.matrix)]
    Mismatch(Box<Mismatch>),
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub use_oracle: bool,
    pub workers: usize,
    /// Overrides [`DEFAULT_LIMIT`] / [`ORACLE_LIMIT`].
    pub limit: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            use_oracle: false,
            workers: 1,
            limit: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub total: u64,
    pub orientable: u64,
    pub symplectic: u64,
    /// Present only when the oracle ran.
    pub cohomologically_symplectic: Option<u64>,
    /// Matrices where the parity criterion and the oracle disagree.
    pub mismatches: Vec<BottMatrix>,
}

impl CensusCounts {
    fn merge(&mut self, other: CensusCounts) {
        self.total += other.total;
        self.orientable += other.orientable;
        self.symplectic += other.symplectic;
        self.cohomologically_symplectic = match (
            self.cohomologically_symplectic,
            other.cohomologically_symplectic,
        ) {
            (Some(x), Some(y)) => Some(x + y),
            (x, y) => x.or(y),
        };
        self.mismatches.extend(other.mismatches);
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub counts: CensusCounts,
    pub elapsed: Duration,
}

fn check_limit(n: usize, limit: usize) -> Result<(), CensusError> {
    if n > limit {
        return Err(CensusError::LimitExceeded { n, limit });
    }
    Ok(())
}

fn count_shard(n: usize, shard: Shard, use_oracle: bool) -> Result<CensusCounts, CensusError> {
    let mut cursor = FamilyCursor::new(n, shard)?;
    let mut counts = CensusCounts {
        cohomologically_symplectic: use_oracle.then_some(0),
        ..CensusCounts::default()
    };
    while !cursor.is_done() {
        let cols = cursor.columns();
        counts.total += 1;
        counts.orientable += u64::from(columns_orientable(cols));
        let symplectic = columns_pair_up(cols);
        counts.symplectic += u64::from(symplectic);
        if let Some(coh) = counts.cohomologically_symplectic.as_mut() {
            let a = cursor.matrix();
            let oracle = is_cohomologically_symplectic(&a);
            *coh += u64::from(oracle);
            if oracle != symplectic {
                counts.mismatches.push(a);
            }
        }
        cursor.advance();
    }
    Ok(counts)
}

/// Counts orientable, symplectic and (optionally) cohomologically
/// symplectic matrices of size `n`.
pub fn census(n: usize, options: &CensusOptions) -> Result<CensusReport, CensusError> {
    let limit = options.limit.unwrap_or(if options.use_oracle {
        ORACLE_LIMIT
    } else {
        DEFAULT_LIMIT
    });
    check_limit(n, limit)?;
    family_size(n)?;
    let workers = options.workers.max(1);
    let start = Instant::now();
    let partials: Vec<Result<CensusCounts, CensusError>> = if workers == 1 {
        vec![count_shard(n, Shard::WHOLE, options.use_oracle)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|index| {
                    let shard = Shard {
                        index,
                        count: workers,
                    };
                    scope.spawn(move || count_shard(n, shard, options.use_oracle))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect()
        })
    };
    let mut counts = CensusCounts {
        cohomologically_symplectic: options.use_oracle.then_some(0),
        ..CensusCounts::default()
    };
    for partial in partials {
        counts.merge(partial?);
    }
    Ok(CensusReport {
        n,
        counts,
        elapsed: start.elapsed(),
    })
}

/// All symplectic matrices of size `n` in enumeration order.
pub fn list_symplectic(n: usize, nonzero_only: bool) -> Result<Vec<BottMatrix>, CensusError> {
    check_limit(n, DEFAULT_LIMIT)?;
    let mut cursor = FamilyCursor::new(n, Shard::WHOLE)?;
    let mut out = Vec::new();
    while !cursor.is_done() {
        let cols = cursor.columns();
        if columns_pair_up(cols) && !(nonzero_only && cols.iter().all(|&c| c == 0)) {
            out.push(cursor.matrix());
        }
        cursor.advance();
    }
    Ok(out)
}

/// A matrix on which the decision procedures disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub matrix: BottMatrix,
    pub symplectic: bool,
    pub matching_oracle: bool,
    pub randomized_oracle: bool,
    pub orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub n: usize,
    pub checked: u64,
    pub symplectic: u64,
}

/// Checks on every matrix of size `n` that the parity criterion, the
/// matching oracle and the randomized oracle agree, and that symplectic
/// implies orientable. Stops at the first disagreement.
pub fn cross_validate(n: usize) -> Result<CrossValidation, CensusError> {
    check_limit(n, ORACLE_LIMIT)?;
    let mut cursor = FamilyCursor::new(n, Shard::WHOLE)?;
    let mut report = CrossValidation {
        n,
        checked: 0,
        symplectic: 0,
    };
    while !cursor.is_done() {
        let a = cursor.matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED ^ (n as u64) << 56 ^ cursor.counter());
        let symplectic = is_symplectic(&a);
        let matching_oracle = is_cohomologically_symplectic(&a);
        let randomized_oracle = is_cohomologically_symplectic_randomized(&a, &mut rng);
        let orientable = is_orientable(&a);
        if symplectic != matching_oracle
            || symplectic != randomized_oracle
            || (symplectic && !orientable)
        {
            return Err(CensusError::Mismatch(Box::new(Mismatch {
                matrix: a,
                symplectic,
                matching_oracle,
                randomized_oracle,
                orientable,
            })));
        }
        report.checked += 1;
        report.symplectic += u64::from(symplectic);
        cursor.advance();
    }
    Ok(report)
}
