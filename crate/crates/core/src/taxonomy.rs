//! Choir/band classification of generator presentations and the four
//! relations between geometric groups.
//!
//! A presentation is a *choir* when its generators pairwise anticommute and
//! its group has the full order `2^(n+1)`; otherwise it is a *band*. Bands
//! are described by their disorder `n + 1 - m` (for order `2^m`), their
//! chord (how many other generators each generator commutes with) and their
//! beat (chord sum over `n(n-1)`, kept unreduced).

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::blade::Sign;
use crate::error::{Error, Result};
use crate::pattern::{compress, map_mask, pattern_name, permutations, PatternName};
use crate::set::{ElementSet, GeneratorList};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Choir,
    Band,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Choir => "choir",
            Verdict::Band => "band",
        })
    }
}

/// Unreduced fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Beat {
    pub num: usize,
    pub den: usize,
}

impl Beat {
    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for Beat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Clifford signature `C(p,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordTarget {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for CliffordTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.p, self.q)
    }
}

/// Square signs and the commutation matrix of a generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relations {
    pub squares: Vec<Sign>,
    pub commute: Vec<Vec<bool>>,
    pub adjoin_minus_one: bool,
}

impl Relations {
    pub fn of(g: &GeneratorList) -> Self {
        let gens = g.generators();
        let commute = gens
            .iter()
            .map(|&a| {
                gens.iter()
                    .map(|&b| a.commutes(b).expect("dimensions checked"))
                    .collect()
            })
            .collect();
        Relations {
            squares: g.squares(),
            commute,
            adjoin_minus_one: g.adjoin_minus_one(),
        }
    }

    /// `p` generators squaring to `+1`, then `q` squaring to `-1`, all
    /// pairwise anticommuting.
    pub fn clifford(p: usize, q: usize) -> Self {
        let n = p + q;
        let squares = (0..n)
            .map(|i| if i < p { Sign::Plus } else { Sign::Minus })
            .collect();
        let commute = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Relations {
            squares,
            commute,
            adjoin_minus_one: true,
        }
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// Brute force over generator bijections.
    pub fn isomorphic(&self, other: &Relations) -> bool {
        let n = self.len();
        if n != other.len() || self.adjoin_minus_one != other.adjoin_minus_one {
            return false;
        }
        (0..n).permutations(n).any(|perm| {
            (0..n).all(|i| self.squares[i] == other.squares[perm[i]])
                && (0..n)
                    .all(|i| (0..n).all(|j| self.commute[i][j] == other.commute[perm[i]][perm[j]]))
        })
    }
}

/// A classified presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecord {
    pub pattern: PatternName,
    pub generators: GeneratorList,
    pub closure: ElementSet,
    /// Number of nontrivial generators.
    pub n: usize,
    /// `order = 2^m`.
    pub m: u32,
    pub signature: Vec<Sign>,
    pub verdict: Verdict,
    pub target: CliffordTarget,
    pub disorder: u32,
    /// Empty when fewer than two generators.
    pub chord: Vec<usize>,
    pub beat: Option<Beat>,
}

impl GroupRecord {
    pub fn order(&self) -> usize {
        self.closure.order()
    }

    /// Square signs as text; the generator-free group `{±1}` reads `+`
    /// (the square of its identity).
    pub fn signature_string(&self) -> String {
        if self.signature.is_empty() {
            return "+".to_string();
        }
        self.signature.iter().map(|s| s.symbol()).collect()
    }

    pub fn chord_string(&self) -> String {
        if self.chord.is_empty() {
            return String::new();
        }
        format!("({})", self.chord.iter().join(","))
    }

    pub fn beat_string(&self) -> String {
        self.beat.map(|b| b.to_string()).unwrap_or_default()
    }

    pub fn sorted_chord(&self) -> Vec<usize> {
        let mut c = self.chord.clone();
        c.sort_unstable();
        c
    }

    pub fn all_anticommute(&self) -> bool {
        let gens = self.generators.generators();
        gens.iter()
            .tuple_combinations()
            .all(|(a, b)| !a.commutes(*b).expect("dimensions checked"))
    }

    /// Checks the record against its own closure and generators; returns
    /// the first violated invariant.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let fail = |what: &str| Err(format!("{}: {what}", self.pattern));
        if !self.closure.is_group() {
            return fail("closure is not a fixed point of the set product");
        }
        if self.generators.closure() != self.closure {
            return fail("closure does not match its generators");
        }
        if self.order() != 1usize << self.m {
            return fail("order is not 2^m");
        }
        if self.n + 1 < self.m as usize || self.disorder as usize != self.n + 1 - self.m as usize {
            return fail("disorder differs from n + 1 - m");
        }
        let choir = self.all_anticommute() && self.disorder == 0;
        if choir != (self.verdict == Verdict::Choir) {
            return fail("verdict disagrees with the choir criteria");
        }
        if self.verdict == Verdict::Choir && self.order() != 1 << (self.n + 1) {
            return fail("choir without full order");
        }
        if self.chord.iter().any(|&c| c + 1 > self.n) {
            return fail("chord entry out of range");
        }
        if let Some(beat) = self.beat {
            if beat.num > beat.den || beat.num != self.chord.iter().sum::<usize>() {
                return fail("beat outside [0,1] or not the chord sum");
            }
            if beat.is_zero() != self.chord.iter().all(|&c| c == 0) {
                return fail("beat is zero but chord is not all zeros");
            }
            if self.verdict == Verdict::Choir && !beat.is_zero() {
                return fail("choir with nonzero beat");
            }
        } else if self.n >= 2 {
            return fail("missing beat");
        }
        Ok(())
    }
}

/// `n + 1 - log2(order)`.
pub fn disorder(n: usize, order: usize) -> Result<u32> {
    if !order.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(order));
    }
    let m = order.trailing_zeros() as usize;
    if m > n + 1 {
        return Err(Error::InvalidGenerators(format!(
            "order {order} exceeds 2^(n+1) for n = {n}"
        )));
    }
    Ok((n + 1 - m) as u32)
}

/// For each generator, how many of the other generators it commutes with.
pub fn chord(g: &GeneratorList) -> Vec<usize> {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .map(|(i, &a)| {
            gens.iter()
                .enumerate()
                .filter(|&(j, &b)| i != j && a.commutes(b).expect("dimensions checked"))
                .count()
        })
        .collect()
}

/// Chord sum over `n(n-1)`; undefined for fewer than two generators.
pub fn beat(chord: &[usize], n: usize) -> Option<Beat> {
    if n < 2 {
        return None;
    }
    Some(Beat {
        num: chord.iter().sum(),
        den: n * (n - 1),
    })
}

pub fn classify(g: &GeneratorList) -> GroupRecord {
    let closure = g.closure();
    let n = g.len();
    let order = closure.order();
    let disorder = disorder(n, order).expect("closures of blades have power-of-two order");
    let signature = g.squares();
    let minus = signature.iter().filter(|s| s.is_negative()).count();
    let target = CliffordTarget {
        p: signature.len() - minus,
        q: minus,
    };
    let chord_full = chord(g);
    let anticommuting = chord_full.iter().all(|&c| c == 0);
    let verdict = if anticommuting && disorder == 0 {
        Verdict::Choir
    } else {
        Verdict::Band
    };
    let chord = if n < 2 { Vec::new() } else { chord_full };
    let beat = beat(&chord, n);
    GroupRecord {
        pattern: pattern_name(g),
        generators: g.clone(),
        n,
        m: order.trailing_zeros(),
        closure,
        signature,
        verdict,
        target,
        disorder,
        chord,
        beat,
    }
}

/// A generator bijection preserving square signs and pairwise
/// (anti)commutation. Presentations differing in whether `-1` is adjoined
/// are never isomorphic.
pub fn presentation_isomorphic(a: &GeneratorList, b: &GeneratorList) -> bool {
    a.len() == b.len() && Relations::of(a).isomorphic(&Relations::of(b))
}

/// Some relabeling of vector indices maps the unsigned generators of `a`
/// onto those of `b`.
pub fn similar(a: &GeneratorList, b: &GeneratorList) -> bool {
    if a.dim() != b.dim() || a.len() != b.len() || a.adjoin_minus_one() != b.adjoin_minus_one() {
        return false;
    }
    let masks =
        |g: &GeneratorList| -> Vec<u32> { g.generators().iter().map(|h| h.mask()).collect() };
    let (ma, mb) = (masks(a), masks(b));
    let (sa, sb) = (
        ma.iter().fold(0, |acc, &m| acc | m),
        mb.iter().fold(0, |acc, &m| acc | m),
    );
    if sa.count_ones() != sb.count_ones() {
        return false;
    }
    let (pa, pb) = (compress(sa, a.dim()), compress(sb, b.dim()));
    let ma: Vec<u32> = ma.iter().map(|&m| map_mask(m, &pa)).collect();
    let mut mb: Vec<u32> = mb.iter().map(|&m| map_mask(m, &pb)).collect();
    mb.sort_unstable();
    permutations(sa.count_ones() as u8, a.dim()).any(|perm| {
        let mut image: Vec<u32> = ma.iter().map(|&m| map_mask(m, &perm)).collect();
        image.sort_unstable();
        image == mb
    })
}

/// Some relabeling of vector indices, with signs re-canonicalized, maps
/// the listing of `a` onto the listing of `b`.
pub fn equivalent(a: &ElementSet, b: &ElementSet) -> bool {
    if a.dim() != b.dim() || a.order() != b.order() {
        return false;
    }
    let (sa, sb) = (a.support(), b.support());
    if sa.count_ones() != sb.count_ones() {
        return false;
    }
    let a = a.relabel(&compress(sa, a.dim()));
    let b = b.relabel(&compress(sb, b.dim()));
    permutations(sa.count_ones() as u8, a.dim()).any(|perm| a.relabel(&perm) == b)
}

/// Identical canonical listings.
pub fn equal(a: &ElementSet, b: &ElementSet) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(lits: &[&str]) -> GeneratorList {
        GeneratorList::parse(3, lits, true).unwrap()
    }

    fn sig(r: &GroupRecord) -> String {
        r.signature_string()
    }

    #[test]
    fn classify_examples() {
        let r = classify(&gens(&["e1", "e23"]));
        assert_eq!(r.verdict, Verdict::Band);
        assert_eq!(sig(&r), "+-");
        assert_eq!(r.disorder, 0);
        assert_eq!(r.chord, vec![1, 1]);
        assert_eq!(r.beat, Some(Beat { num: 2, den: 2 }));
        assert_eq!(r.pattern.as_str(), "E_a E_bc");

        let r = classify(&gens(&["e1", "e2"]));
        assert_eq!(r.verdict, Verdict::Choir);
        assert_eq!(sig(&r), "++");
        assert_eq!(r.target, CliffordTarget { p: 2, q: 0 });

        let r = classify(&gens(&["e12", "e13", "e23"]));
        assert_eq!(r.verdict, Verdict::Band);
        assert_eq!(sig(&r), "---");
        assert_eq!(r.disorder, 1);
        assert_eq!(r.chord, vec![0, 0, 0]);
        assert_eq!(r.beat_string(), "0/6");

        let r = classify(&GeneratorList::parse(3, &["e1"], false).unwrap());
        assert_eq!(r.verdict, Verdict::Band);
        assert_eq!(sig(&r), "+");
        assert_eq!(r.disorder, 1);
        assert!(r.chord.is_empty());
        assert_eq!(r.beat, None);
        assert_eq!(r.pattern.as_str(), "{1,e_a}");

        let r = classify(&GeneratorList::new(3, vec![], true).unwrap());
        assert_eq!(r.verdict, Verdict::Choir);
        assert_eq!(sig(&r), "+");
        assert_eq!(r.target.to_string(), "C(0,0)");
    }

    #[test]
    fn disorder_examples() {
        assert_eq!(disorder(3, 8), Ok(1));
        assert_eq!(disorder(2, 8), Ok(0));
        assert_eq!(disorder(1, 2), Ok(1));
        assert_eq!(disorder(2, 6), Err(Error::NotPowerOfTwo(6)));
        assert!(disorder(1, 8).is_err());
    }

    #[test]
    fn chord_examples() {
        assert_eq!(chord(&gens(&["e1", "e12", "e23"])), vec![1, 0, 1]);
        assert_eq!(chord(&gens(&["e1", "e2", "e123"])), vec![1, 1, 2]);
        assert_eq!(chord(&gens(&["e1", "e23", "e123"])), vec![2, 2, 2]);
    }

    #[test]
    fn beat_examples() {
        assert_eq!(beat(&[2, 2, 2], 3).unwrap().to_string(), "6/6");
        assert_eq!(beat(&[0, 0, 0], 3).unwrap().to_string(), "0/6");
        assert_eq!(beat(&[1, 1], 2).unwrap().to_string(), "2/2");
        assert_eq!(beat(&[0], 1), None);
        assert_eq!(beat(&[], 0), None);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(presentation_isomorphic(&gens(&["e12"]), &gens(&["e123"])));
        assert!(!presentation_isomorphic(
            &gens(&["e12", "e13"]),
            &gens(&["e12", "e13", "e23"])
        ));
        assert!(!presentation_isomorphic(&gens(&["e1"]), &gens(&["e12"])));
        assert!(!presentation_isomorphic(
            &gens(&["e1"]),
            &GeneratorList::parse(3, &["e1"], false).unwrap()
        ));
        // dimensions may differ
        let wide = GeneratorList::parse(5, &["e45"], true).unwrap();
        assert!(presentation_isomorphic(&gens(&["e12"]), &wide));
    }

    #[test]
    fn similarity_examples() {
        assert!(similar(&gens(&["e123"]), &gens(&["e132"])));
        let a = GeneratorList::parse(4, &["e12", "e23"], true).unwrap();
        let b = GeneratorList::parse(4, &["e12", "e34"], true).unwrap();
        assert!(!similar(&a, &b));
        assert!(similar(&gens(&["e1", "e2"]), &gens(&["e1", "e3"])));
        assert!(!similar(&gens(&["e1", "e2"]), &gens(&["e1", "e23"])));
    }

    #[test]
    fn equivalence_and_equality_examples() {
        let c = |l: &[&str]| gens(l).closure();
        assert!(equivalent(&c(&["e1", "e123"]), &c(&["e12", "e123"])));
        assert!(!equal(&c(&["e1", "e123"]), &c(&["e12", "e123"])));
        assert!(!equivalent(&c(&["e1", "e2"]), &c(&["e1", "e23"])));
        let a = c(&["e1", "e23"]);
        assert!(equivalent(&a, &a));

        assert!(equal(&c(&["e1", "e2"]), &c(&["e1", "e12"])));
        assert!(equal(&c(&["e12", "e13", "e23"]), &c(&["e12", "e13"])));
        let raw = GeneratorList::parse(3, &["e1"], false).unwrap().closure();
        assert!(!equal(&raw, &c(&["e1"])));
    }

    #[test]
    fn clifford_reference_presentations() {
        assert!(Relations::of(&gens(&["e1", "e12", "e13"])).isomorphic(&Relations::clifford(1, 2)));
        assert!(Relations::of(&gens(&["e12", "e13"])).isomorphic(&Relations::clifford(0, 2)));
        assert!(!Relations::of(&gens(&["e12", "e13"])).isomorphic(&Relations::clifford(1, 1)));
    }

    #[test]
    fn invariants_hold_for_examples() {
        for lits in [
            &["e1", "e23", "e123"][..],
            &["e1"],
            &["e12", "e13", "e23"],
            &[],
        ] {
            classify(&gens(lits)).check_invariants().unwrap();
        }
    }
}
