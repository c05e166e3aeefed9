//! Per-run statistics: counts and delays by level.

use std::fmt;
use std::time::{Duration, Instant};

use crate::enumerate::{SolutionStream, SpaceUsage};
use crate::formula::ReducedFormula;
use crate::team::Team;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub level: usize,
    /// Emissions of this size.
    pub count: u64,
    /// Emissions of this size whose free part contains the zero assignment.
    pub zero_count: u64,
    pub delays: Vec<u64>,
}

impl LevelStats {
    pub fn min_delay(&self) -> Option<u64> {
        self.delays.iter().copied().min()
    }

    pub fn max_delay(&self) -> Option<u64> {
        self.delays.iter().copied().max()
    }

    /// Lower median.
    pub fn median_delay(&self) -> Option<u64> {
        let mut sorted = self.delays.clone();
        sorted.sort_unstable();
        sorted.get(sorted.len().saturating_sub(1) / 2).copied()
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    /// Free width `n` of the reduced formula.
    pub width: usize,
    pub levels: Vec<LevelStats>,
    pub space: Option<SpaceUsage>,
    pub wall_time: Duration,
    /// Whether the counting identity applies. It does for a single reduced
    /// conjunction, where the solution set is closed under shifts.
    pub check_ratio: bool,
}

impl RunReport {
    /// Drains `stream`, handing each team and its delay to `sink`.
    pub fn collect<S, F>(rf: &ReducedFormula, stream: &mut S, mut sink: F) -> Self
    where
        S: SolutionStream + ?Sized,
        F: FnMut(&Team, u64),
    {
        let start = Instant::now();
        let mut levels: Vec<LevelStats> = Vec::new();
        while let Some(team) = stream.next() {
            let delay = stream.last_delay();
            sink(&team, delay);
            let k = team.len();
            while levels.len() < k {
                levels.push(LevelStats {
                    level: levels.len() + 1,
                    ..LevelStats::default()
                });
            }
            let stats = &mut levels[k - 1];
            stats.count += 1;
            stats.delays.push(delay);
            let free = rf.restrict_team(&team).expect("stream emits full-width teams");
            if free.contains_zero() {
                stats.zero_count += 1;
            }
        }
        Self {
            width: rf.width(),
            levels,
            space: stream.space(),
            wall_time: start.elapsed(),
            check_ratio: true,
        }
    }

    pub fn total(&self) -> u64 {
        self.levels.iter().map(|l| l.count).sum()
    }

    pub fn counts(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn zero_counts(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.zero_count).collect()
    }

    /// Whether `c_k * k == c_k0 * 2^n` on level `k`, recomputed from the raw
    /// counts; `None` for empty levels or when the identity does not apply.
    pub fn ratio_holds(&self, stats: &LevelStats) -> Option<bool> {
        (self.check_ratio && stats.count > 0).then(|| {
            stats.count as u128 * stats.level as u128 == (stats.zero_count as u128) << self.width
        })
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level\tc_k\tc_k0\tratio")?;
        for l in &self.levels {
            let ratio = match self.ratio_holds(l) {
                Some(true) => "ok",
                Some(false) => "FAIL",
                None => "-",
            };
            writeln!(f, "{}\t{}\t{}\t{}", l.level, l.count, l.zero_count, ratio)?;
        }
        writeln!(f, "total\t{}", self.total())?;
        writeln!(f, "level\tmin_delay\tmedian_delay\tmax_delay")?;
        for l in self.levels.iter().filter(|l| l.count > 0) {
            writeln!(
                f,
                "{}\t{}\t{}\t{}",
                l.level,
                l.min_delay().unwrap_or(0),
                l.median_delay().unwrap_or(0),
                l.max_delay().unwrap_or(0)
            )?;
        }
        if let Some(space) = self.space {
            writeln!(
                f,
                "peak_teams\t{}\npeak_assignments\t{}",
                space.peak_teams, space.peak_assignments
            )?;
        }
        write!(f, "wall_time_ms\t{:.3}", self.wall_time.as_secs_f64() * 1e3)
    }
}
