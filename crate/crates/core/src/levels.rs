//! The min-degree level partition `V_1, ..., V_{c-1}`.
//!
//! A vertex of `V_i` is adjacent to a vertex of `V_j` exactly when
//! `i + j >= c`, so `V_i` is a clique when `2i >= c` and independent
//! otherwise. One rule set covers both parities of `c`:
//!
//! * `n_i = (p-1) p^(c-1-i)`
//! * `d_i = p^i - 1 - [2i >= c]`

use serde::Serialize;

use crate::error::Result;
use crate::ring::RingParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelKind {
    Independent,
    Clique,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelInfo {
    pub index: usize,
    pub size: u64,
    pub degree: u64,
    pub kind: LevelKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelPartition {
    params: RingParams,
    levels: Vec<LevelInfo>,
}

impl LevelPartition {
    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn levels(&self) -> &[LevelInfo] {
        &self.levels
    }

    /// Level `i`, 1-based.
    ///
    /// # Panics
    /// If `i` is not in `1..=c-1`.
    pub fn level(&self, i: usize) -> &LevelInfo {
        &self.levels[i - 1]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.levels.iter().map(|l| l.size)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        self.levels.iter().map(|l| l.degree)
    }

    pub fn order(&self) -> u64 {
        self.sizes().sum()
    }

    /// `m = (1/2) sum n_i d_i`.
    pub fn edge_count(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.size as u128 * l.degree as u128)
            .sum::<u128>()
            / 2
    }

    pub fn is_clique(&self, i: usize) -> bool {
        self.level(i).kind == LevelKind::Clique
    }
}

pub fn level_partition(params: &RingParams) -> LevelPartition {
    let c = params.c() as usize;
    let p = params.p();
    let levels = (1..c)
        .map(|i| {
            let clique = 2 * i >= c;
            LevelInfo {
                index: i,
                size: (p - 1) * params.pow((c - 1 - i) as u32),
                degree: params.pow(i as u32) - 1 - u64::from(clique),
                kind: if clique {
                    LevelKind::Clique
                } else {
                    LevelKind::Independent
                },
            }
        })
        .collect();
    LevelPartition {
        params: *params,
        levels,
    }
}

/// Whether vertices of levels `i` and `j` (distinct vertices when `i == j`)
/// are adjacent.
pub fn adjacent_levels(i: usize, j: usize, params: &RingParams) -> Result<bool> {
    params.check_level(i)?;
    params.check_level(j)?;
    Ok(i + j >= params.c() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn lp(p: u64, c: u32) -> LevelPartition {
        level_partition(&RingParams::new(p, c).unwrap())
    }

    #[test]
    fn even_example() {
        let lp = lp(2, 6);
        assert_eq!(lp.sizes().collect::<Vec<_>>(), [16, 8, 4, 2, 1]);
        assert_eq!(lp.degrees().collect::<Vec<_>>(), [1, 3, 6, 14, 30]);
        let kinds: Vec<_> = lp.levels().iter().map(|l| l.kind).collect();
        use LevelKind::*;
        assert_eq!(kinds, [Independent, Independent, Clique, Clique, Clique]);
        assert_eq!(lp.edge_count(), 61);
    }

    #[test]
    fn odd_example() {
        let lp = lp(2, 5);
        assert_eq!(lp.sizes().collect::<Vec<_>>(), [8, 4, 2, 1]);
        assert_eq!(lp.degrees().collect::<Vec<_>>(), [1, 3, 6, 14]);
        assert_eq!(lp.edge_count(), 23);
        assert!(!lp.is_clique(2));
        assert!(lp.is_clique(3));
    }

    #[test]
    fn single_level() {
        let lp = lp(3, 2);
        assert_eq!(lp.len(), 1);
        assert_eq!(lp.level(1).size, 2);
        assert_eq!(lp.level(1).degree, 1);
        assert_eq!(lp.level(1).kind, LevelKind::Clique);
    }

    #[test]
    fn partition_invariants() {
        for p in [2u64, 3, 5, 7, 11] {
            for c in 2..=9u32 {
                let params = RingParams::new(p, c).unwrap();
                let lp = level_partition(&params);
                assert_eq!(lp.order(), params.graph_order());
                let s = params.special_level();
                for l in lp.levels() {
                    // Independent levels: i <= b-1 (c = 2b) or i <= b (c = 2b+1).
                    let b = params.half() as usize;
                    let independent = if params.is_even() { l.index < b } else { l.index <= b };
                    assert_eq!(l.kind == LevelKind::Independent, independent);
                    assert!((1..c as usize).contains(&s));
                }
                assert!(lp.degrees().collect::<Vec<_>>().windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn adjacency_rule() {
        let r = RingParams::new(2, 6).unwrap();
        assert!(adjacent_levels(1, 5, &r).unwrap());
        assert!(!adjacent_levels(1, 4, &r).unwrap());
        assert!(adjacent_levels(3, 3, &r).unwrap());
        assert!(!adjacent_levels(2, 2, &r).unwrap());
        for c in 2..8 {
            let r = RingParams::new(3, c).unwrap();
            let top = c as usize - 1;
            assert!(adjacent_levels(top, top, &r).unwrap());
        }
        assert_eq!(
            adjacent_levels(0, 1, &r),
            Err(Error::LevelOutOfRange { index: 0, max: 5 })
        );
        assert!(adjacent_levels(1, 6, &r).is_err());
    }
}
