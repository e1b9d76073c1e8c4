//! Exhaustive enumeration of presentations over the nontrivial blades of
//! Cl(n,0), deduplicated into similarity classes and partitioned into
//! modes (choirs) and rhythms (bands).

use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{canonical_masks, compare_mask_lists, PatternName};
use crate::set::GeneratorList;
use crate::tables;
use crate::taxonomy::{classify, equivalent, Beat, GroupRecord, Verdict};

/// Largest dimension accepted for exhaustive enumeration.
pub const MAX_ENUM_DIM: u8 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Counts {
    pub total: usize,
    pub choirs: usize,
    pub bands: usize,
}

/// Indices into [`TaxonomyReport::classes`]; `members[0] == leader`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub leader: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaxonomyReport {
    pub dim: u8,
    pub max_gens: usize,
    pub classes: Vec<GroupRecord>,
    pub modes: Vec<Block>,
    pub rhythms: Vec<Block>,
    pub counts: Counts,
    pub notes: Vec<String>,
}

impl TaxonomyReport {
    pub fn class(&self, pattern: &str) -> Option<&GroupRecord> {
        self.classes.iter().find(|r| r.pattern.as_str() == pattern)
    }

    pub fn block_patterns(&self, block: &Block) -> Vec<&PatternName> {
        block
            .members
            .iter()
            .map(|&i| &self.classes[i].pattern)
            .collect()
    }
}

fn generator_masks(r: &GroupRecord) -> Vec<u32> {
    r.generators.generators().iter().map(|g| g.mask()).collect()
}

/// Listing order: generator count, then generators by grade and index
/// tuple, adjoined presentations before raw ones.
pub fn record_order(a: &GroupRecord, b: &GroupRecord) -> Ordering {
    a.n.cmp(&b.n)
        .then_with(|| compare_mask_lists(&generator_masks(a), &generator_masks(b)))
        .then_with(|| {
            b.generators
                .adjoin_minus_one()
                .cmp(&a.generators.adjoin_minus_one())
        })
}

fn ordered_block(records: &[GroupRecord], mut members: Vec<usize>) -> Block {
    members.sort_by(|&i, &j| record_order(&records[i], &records[j]));
    Block {
        leader: members[0],
        members,
    }
}

/// Choirs grouped by generator count; the leader has the lowest listing
/// order. Blocks are returned in leader order.
pub fn mode_partition(choirs: &[GroupRecord]) -> Vec<Block> {
    let mut blocks: Vec<Block> = choirs
        .iter()
        .enumerate()
        .into_group_map_by(|(_, r)| r.n)
        .into_values()
        .map(|members| ordered_block(choirs, members.into_iter().map(|(i, _)| i).collect()))
        .collect();
    blocks.sort_by(|a, b| record_order(&choirs[a.leader], &choirs[b.leader]));
    blocks
}

/// Bands grouped by equivalent closures; leaders and block order as in
/// [`mode_partition`].
pub fn rhythm_partition(bands: &[GroupRecord]) -> Vec<Block> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, r) in bands.iter().enumerate() {
        match groups
            .iter_mut()
            .find(|g| equivalent(&bands[g[0]].closure, &r.closure))
        {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let mut blocks: Vec<Block> = groups
        .into_iter()
        .map(|g| ordered_block(bands, g))
        .collect();
    blocks.sort_by(|a, b| record_order(&bands[a.leader], &bands[b.leader]));
    blocks
}

/// Every presentation with at most `max_gens` distinct nontrivial blade
/// generators, one record per similarity class, plus `{±1}`.
pub fn enumerate(dim: u8, max_gens: usize) -> Result<TaxonomyReport> {
    if dim == 0 || dim > MAX_ENUM_DIM {
        return Err(Error::EnumerationDimension(dim));
    }
    let blades: Vec<u32> = (1..1u32 << dim).collect();
    if max_gens > blades.len() {
        return Err(Error::CapOutOfRange {
            cap: max_gens,
            max: blades.len(),
            dim,
        });
    }

    let subsets: Vec<Vec<u32>> = (1..=max_gens)
        .flat_map(|k| blades.iter().copied().combinations(k))
        .collect();
    let keys: BTreeSet<Vec<u32>> = subsets
        .par_iter()
        .map(|s| canonical_masks(s, dim))
        .collect();

    let mut classes: Vec<GroupRecord> = keys
        .into_par_iter()
        .flat_map_iter(|key| {
            let adjoined = GeneratorList::from_masks(dim, &key, true).expect("valid subset");
            let record = classify(&adjoined);
            let raw = adjoined.with_adjoin_minus_one(false);
            let raw_closure = raw.closure();
            let extra = (raw_closure != record.closure).then(|| classify(&raw));
            std::iter::once(record).chain(extra)
        })
        .collect();
    classes.push(classify(
        &GeneratorList::new(dim, Vec::new(), true).expect("empty list"),
    ));
    classes.sort_by(record_order);

    let (choir_idx, band_idx): (Vec<usize>, Vec<usize>) =
        (0..classes.len()).partition(|&i| classes[i].verdict == Verdict::Choir);
    let remap = |blocks: Vec<Block>, idx: &[usize]| -> Vec<Block> {
        blocks
            .into_iter()
            .map(|b| Block {
                leader: idx[b.leader],
                members: b.members.iter().map(|&m| idx[m]).collect(),
            })
            .collect()
    };
    let choirs: Vec<GroupRecord> = choir_idx.iter().map(|&i| classes[i].clone()).collect();
    let bands: Vec<GroupRecord> = band_idx.iter().map(|&i| classes[i].clone()).collect();
    let modes = remap(mode_partition(&choirs), &choir_idx);
    let rhythms = remap(rhythm_partition(&bands), &band_idx);

    let counts = Counts {
        total: classes.len(),
        choirs: choirs.len(),
        bands: bands.len(),
    };
    let mut report = TaxonomyReport {
        dim,
        max_gens,
        classes,
        modes,
        rhythms,
        counts,
        notes: Vec::new(),
    };
    report.notes = tables::reference_notes(&report);
    Ok(report)
}

#[derive(serde::Serialize)]
struct RecordJson<'a> {
    pattern: &'a PatternName,
    generators: Vec<String>,
    n: usize,
    order: usize,
    class: Verdict,
    signature: String,
    target: String,
    disorder: u32,
    chord: &'a [usize],
    beat: Option<Beat>,
}

impl Serialize for GroupRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RecordJson {
            pattern: &self.pattern,
            generators: self.generators.to_literals(),
            n: self.n,
            order: self.order(),
            class: self.verdict,
            signature: self.signature_string(),
            target: self.target.to_string(),
            disorder: self.disorder,
            chord: &self.chord,
            beat: self.beat,
        }
        .serialize(serializer)
    }
}

#[derive(serde::Serialize)]
struct BlockJson<'a> {
    leader: &'a PatternName,
    members: Vec<&'a PatternName>,
}

impl Serialize for TaxonomyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let blocks = |bs: &[Block]| -> Vec<BlockJson<'_>> {
            bs.iter()
                .map(|b| BlockJson {
                    leader: &self.classes[b.leader].pattern,
                    members: self.block_patterns(b),
                })
                .collect()
        };
        let mut s = serializer.serialize_struct("TaxonomyReport", 7)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("max_gens", &self.max_gens)?;
        s.serialize_field("counts", &self.counts)?;
        s.serialize_field("classes", &self.classes)?;
        s.serialize_field("modes", &blocks(&self.modes))?;
        s.serialize_field("rhythms", &blocks(&self.rhythms))?;
        s.serialize_field("notes", &self.notes)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn patterns(report: &TaxonomyReport) -> Vec<&str> {
        report.classes.iter().map(|r| r.pattern.as_str()).collect()
    }

    #[test]
    fn dimension_one() {
        let r = enumerate(1, 1).unwrap();
        assert_eq!(patterns(&r), ["{±1}", "E_a", "{1,e_a}"]);
        assert_eq!(
            r.counts,
            Counts {
                total: 3,
                choirs: 2,
                bands: 1
            }
        );
    }

    #[test]
    fn dimension_two() {
        let r = enumerate(2, 2).unwrap();
        assert_eq!(
            patterns(&r),
            ["{±1}", "E_a", "{1,e_a}", "E_ab", "E_a E_b", "E_a E_ab"]
        );
        assert_eq!(
            r.counts,
            Counts {
                total: 6,
                choirs: 5,
                bands: 1
            }
        );
    }

    #[test]
    fn cap_zero_is_only_plus_minus_one() {
        let r = enumerate(3, 0).unwrap();
        assert_eq!(patterns(&r), ["{±1}"]);
    }

    #[test]
    fn argument_errors() {
        assert_eq!(enumerate(0, 0), Err(Error::EnumerationDimension(0)));
        assert_eq!(enumerate(8, 1), Err(Error::EnumerationDimension(8)));
        assert_eq!(
            enumerate(2, 4),
            Err(Error::CapOutOfRange {
                cap: 4,
                max: 3,
                dim: 2
            })
        );
    }

    #[test]
    fn n3_counts_and_partitions() {
        let r = enumerate(3, 3).unwrap();
        assert_eq!(
            r.counts,
            Counts {
                total: 21,
                choirs: 9,
                bands: 12
            }
        );
        let sizes = |bs: &[Block]| bs.iter().map(|b| b.members.len()).collect::<Vec<_>>();
        assert_eq!(sizes(&r.modes), [1, 3, 3, 2]);
        assert_eq!(sizes(&r.rhythms), [1, 4, 1, 5, 1]);
    }
}
