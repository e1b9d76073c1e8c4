//! Relabelings of vector indices and the canonical pattern names built on
//! them (`E_a E_bc`, `{1,e_a}`, ...).

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::blade::generator_order;
use crate::set::GeneratorList;

/// Order-preserving relabeling that packs the bits of `support` into
/// `0..k`, followed by the remaining indices of `0..dim`.
pub fn compress(support: u32, dim: u8) -> Vec<u8> {
    let mut perm = vec![0u8; dim as usize];
    let mut next = 0u8;
    for bit in (0..dim).filter(|&b| support & (1 << b) != 0) {
        perm[bit as usize] = next;
        next += 1;
    }
    for bit in (0..dim).filter(|&b| support & (1 << b) == 0) {
        perm[bit as usize] = next;
        next += 1;
    }
    perm
}

/// All permutations of `0..k`, each padded with the identity up to `dim`.
pub fn permutations(k: u8, dim: u8) -> impl Iterator<Item = Vec<u8>> {
    (0..k).permutations(k as usize).map(move |mut p| {
        p.extend(k..dim);
        p
    })
}

pub fn map_mask(mask: u32, perm: &[u8]) -> u32 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        out |= 1 << perm[bit as usize];
        rest &= rest - 1;
    }
    out
}

/// Lexicographic order on generator lists, each generator compared by
/// grade and then index tuple.
pub fn compare_mask_lists(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match generator_order(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn sort_masks(masks: &mut [u32]) {
    masks.sort_by(|&a, &b| generator_order(a, b));
}

/// Canonical form of an unsigned generator set under relabeling: the
/// smallest sorted image over all relabelings. The minimum always lives on
/// the lowest indices, so only the support needs permuting.
pub fn canonical_masks(masks: &[u32], dim: u8) -> Vec<u32> {
    let support = masks.iter().fold(0, |acc, &m| acc | m);
    let packed = compress(support, dim);
    let base: Vec<u32> = masks.iter().map(|&m| map_mask(m, &packed)).collect();
    let k = support.count_ones() as u8;
    let mut best: Option<Vec<u32>> = None;
    for perm in permutations(k, dim) {
        let mut image: Vec<u32> = base.iter().map(|&m| map_mask(m, &perm)).collect();
        sort_masks(&mut image);
        if best
            .as_ref()
            .is_none_or(|b| compare_mask_lists(&image, b) == Ordering::Less)
        {
            best = Some(image);
        }
    }
    best.unwrap_or_default()
}

/// Canonical representative of a presentation: positive generators on the
/// lowest indices, sorted by grade then index tuple.
pub fn canonical_presentation(g: &GeneratorList) -> GeneratorList {
    let masks: Vec<u32> = g.generators().iter().map(|h| h.mask()).collect();
    let canon = canonical_masks(&masks, g.dim());
    GeneratorList::from_masks(g.dim(), &canon, g.adjoin_minus_one())
        .expect("relabeling preserves validity")
}

/// Display name of a similarity class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternName(String);

impl PatternName {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for PatternName {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

fn letters(mask: u32) -> String {
    (0..32u8)
        .filter(|&b| mask & (1 << b) != 0)
        .map(|b| (b'a' + b) as char)
        .collect()
}

/// `E_a E_bc` for adjoined presentations, `{1,e_a}{1,e_bc}` for raw ones;
/// `{±1}` and `{1}` without generators.
pub fn pattern_name(g: &GeneratorList) -> PatternName {
    let canon = canonical_presentation(g);
    let masks: Vec<u32> = canon.generators().iter().map(|h| h.mask()).collect();
    let text = match (masks.is_empty(), g.adjoin_minus_one()) {
        (true, true) => "{±1}".to_string(),
        (true, false) => "{1}".to_string(),
        (false, true) => masks.iter().map(|&m| format!("E_{}", letters(m))).join(" "),
        (false, false) => masks
            .iter()
            .map(|&m| format!("{{1,e_{}}}", letters(m)))
            .join(""),
    };
    PatternName(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(lits: &[&str], adjoin: bool) -> String {
        let g = GeneratorList::parse(3, lits, adjoin).unwrap();
        pattern_name(&g).to_string()
    }

    #[test]
    fn names_follow_lowest_labeling() {
        assert_eq!(name(&[], true), "{±1}");
        assert_eq!(name(&["e3"], true), "E_a");
        assert_eq!(name(&["e2"], false), "{1,e_a}");
        assert_eq!(name(&["e23"], true), "E_ab");
        assert_eq!(name(&["e123", "e2"], true), "E_a E_abc");
        assert_eq!(name(&["e12", "e3"], true), "E_a E_bc");
        assert_eq!(name(&["e2", "e3", "e23"], true), "E_a E_b E_ab");
        assert_eq!(name(&["e1", "e2", "e23"], true), "E_a E_b E_ac");
        assert_eq!(name(&["e3", "e13", "e12"], true), "E_a E_ab E_bc");
        assert_eq!(name(&["e23", "e13", "e12"], true), "E_ab E_ac E_bc");
        assert_eq!(name(&["e1", "e23", "e123"], true), "E_a E_bc E_abc");
        assert_eq!(name(&["e13", "e123"], true), "E_ab E_abc");
    }

    #[test]
    fn compress_packs_support() {
        assert_eq!(compress(0b1010, 4), vec![2, 0, 3, 1]);
        assert_eq!(map_mask(0b1010, &compress(0b1010, 4)), 0b0011);
    }

    #[test]
    fn permutations_are_padded() {
        let all: Vec<_> = permutations(2, 3).collect();
        assert_eq!(all, vec![vec![0, 1, 2], vec![1, 0, 2]]);
        assert_eq!(permutations(0, 2).count(), 1);
    }
}
