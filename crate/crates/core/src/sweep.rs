//! Exhaustive cross-check of the classifier against the perfection oracle.

use rayon::prelude::*;

use crate::census::graphs_up_to_iso;
use crate::classifier::{classify, Classification};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perfection::{is_perfect_oracle, PerfectionVerdict};
use crate::products::weak_modular_product;

/// Largest factor order a sweep accepts.
pub const SWEEP_MAX_N: usize = 6;

#[derive(Clone, Debug)]
pub struct PairOutcome {
    pub left: Graph,
    pub right: Graph,
    pub classification: Classification,
    pub oracle: PerfectionVerdict,
    /// Verdict of `classify(right, left)`.
    pub swapped_agrees: bool,
}

impl PairOutcome {
    pub fn agrees(&self) -> bool {
        self.classification.is_perfect() == self.oracle.perfect
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub max_n: usize,
    pub classes: usize,
    pub pairs: usize,
    /// `counts[row][col]`: row `k - 1` for case `k`, row 10 for no case;
    /// column 0 oracle-perfect, column 1 oracle-imperfect.
    pub counts: [[usize; 2]; 11],
    pub mismatches: Vec<PairOutcome>,
    pub asymmetric: Vec<PairOutcome>,
    pub invalid_witnesses: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.asymmetric.is_empty() && self.invalid_witnesses == 0
    }

    pub fn oracle_perfect(&self) -> usize {
        self.counts.iter().map(|r| r[0]).sum()
    }
}

pub fn evaluate_pair(left: &Graph, right: &Graph) -> Result<PairOutcome> {
    let product = weak_modular_product(left, right)?;
    let classification = classify(left, right);
    let oracle = is_perfect_oracle(&product);
    Ok(PairOutcome {
        left: left.clone(),
        right: right.clone(),
        swapped_agrees: classify(right, left).verdict == classification.verdict,
        classification,
        oracle,
    })
}

/// Runs every ordered pair of isomorphism classes with at most `max_n`
/// vertices through both the classifier and the oracle, in parallel.
pub fn sweep(max_n: usize) -> Result<SweepReport> {
    if !(1..=SWEEP_MAX_N).contains(&max_n) {
        return Err(Error::SizeOutOfRange {
            what: "sweep order",
            got: max_n,
            min: 1,
            max: SWEEP_MAX_N,
        });
    }
    let classes = graphs_up_to_iso(max_n)?;
    let pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| (0..classes.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| evaluate_pair(&classes[i], &classes[j]))
        .collect::<Result<_>>()?;

    let mut report = SweepReport {
        max_n,
        classes: classes.len(),
        pairs: outcomes.len(),
        counts: [[0; 2]; 11],
        mismatches: Vec::new(),
        asymmetric: Vec::new(),
        invalid_witnesses: 0,
    };
    for o in outcomes {
        let row = o
            .classification
            .case
            .map_or(10, |c| c.number() as usize - 1);
        let col = usize::from(!o.oracle.perfect);
        report.counts[row][col] += 1;
        if let Some(w) = &o.oracle.witness {
            let product = weak_modular_product(&o.left, &o.right)?;
            if !w.verify(&product) {
                report.invalid_witnesses += 1;
            }
        }
        if !o.swapped_agrees {
            report.asymmetric.push(o.clone());
        }
        if !o.agrees() {
            report.mismatches.push(o);
        }
    }
    Ok(report)
}
