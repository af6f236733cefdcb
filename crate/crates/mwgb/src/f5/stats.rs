//! Counters describing one engine run.

/// Per-criterion elimination counts. `gcd_steps` counts whole steps skipped,
/// the other two count individual signatures.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CriteriaHits {
    pub f5: u64,
    pub syzygy: u64,
    pub gcd_steps: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Steps in the schedule, before any filtering.
    pub steps_planned: u64,
    /// Groups of steps sharing a first-coordinate degree.
    pub batches: u64,
    /// Steps actually turned into a matrix (skipped steps excluded).
    pub matrices_total: u64,
    pub max_matrix_rows: u64,
    pub max_matrix_cols: u64,
    pub max_matrix_entries: u64,
    /// Rows inserted into a matrix that reduced to zero.
    pub reductions_to_zero_total: u64,
    /// Zero rows that were not forced by the matrix already having full
    /// column rank: genuine rank defects the criteria did not predict.
    pub rank_defects: u64,
    pub criteria_hits: CriteriaHits,
    pub max_w1_degree_reached: i64,
}

impl RunStats {
    pub(crate) fn observe_matrix(&mut self, rows: usize, cols: usize) {
        self.matrices_total += 1;
        if rows > 0 {
            self.max_matrix_rows = self.max_matrix_rows.max(rows as u64);
            self.max_matrix_cols = self.max_matrix_cols.max(cols as u64);
            self.max_matrix_entries = self.max_matrix_entries.max((rows * cols) as u64);
        }
    }

    pub(crate) fn merge(&mut self, other: &RunStats) {
        self.matrices_total += other.matrices_total;
        self.max_matrix_rows = self.max_matrix_rows.max(other.max_matrix_rows);
        self.max_matrix_cols = self.max_matrix_cols.max(other.max_matrix_cols);
        self.max_matrix_entries = self.max_matrix_entries.max(other.max_matrix_entries);
        self.reductions_to_zero_total += other.reductions_to_zero_total;
        self.rank_defects += other.rank_defects;
        self.criteria_hits.f5 += other.criteria_hits.f5;
        self.criteria_hits.syzygy += other.criteria_hits.syzygy;
        self.criteria_hits.gcd_steps += other.criteria_hits.gcd_steps;
        self.max_w1_degree_reached = self.max_w1_degree_reached.max(other.max_w1_degree_reached);
    }
}
