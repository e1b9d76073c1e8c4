//! Finite sets of signed blades under set product and union, and geometric
//! groups generated from blade generators.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::blade::{generator_order, Sign, SignedBlade};
use crate::error::{Error, Result};

/// A duplicate-free set of signed blades, listed by mask then sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    dim: u8,
    elements: Vec<SignedBlade>,
}

impl ElementSet {
    pub fn empty(dim: u8) -> Self {
        ElementSet {
            dim,
            elements: Vec::new(),
        }
    }

    pub fn new<I>(dim: u8, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = SignedBlade>,
    {
        let mut set = BTreeSet::new();
        for e in elements {
            if e.dim() != dim {
                return Err(Error::DimensionMismatch(dim, e.dim()));
            }
            set.insert(e);
        }
        Ok(ElementSet {
            dim,
            elements: set.into_iter().collect(),
        })
    }

    /// Parse a list of blade literals.
    pub fn parse<S: AsRef<str>>(dim: u8, literals: &[S]) -> Result<Self> {
        let elements = literals
            .iter()
            .map(|s| SignedBlade::parse(s.as_ref(), dim))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, elements)
    }

    /// `{1, -1}`.
    pub fn plus_minus_one(dim: u8) -> Self {
        ElementSet {
            dim,
            elements: vec![SignedBlade::one(dim), SignedBlade::minus_one(dim)],
        }
    }

    /// Every element of the basis group of Cl(dim,0).
    pub fn full(dim: u8) -> Self {
        let elements = (0..1u32 << dim)
            .flat_map(|m| {
                [false, true].map(|neg| SignedBlade::from_mask(m, neg, dim).expect("mask fits"))
            })
            .collect();
        ElementSet { dim, elements }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn elements(&self) -> &[SignedBlade] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = SignedBlade> + '_ {
        self.elements.iter().copied()
    }

    pub fn contains(&self, e: SignedBlade) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of elements; `+g` and `-g` count separately.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn same_dim(&self, other: &ElementSet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// `{ f h : f in self, h in other }`.
    pub fn product(&self, other: &ElementSet) -> Result<ElementSet> {
        self.same_dim(other)?;
        let mut out = BTreeSet::new();
        for f in self.iter() {
            for h in other.iter() {
                out.insert(f.mul(h)?);
            }
        }
        Ok(ElementSet {
            dim: self.dim,
            elements: out.into_iter().collect(),
        })
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        self.same_dim(other)?;
        let mut elements: Vec<_> = self.iter().chain(other.iter()).collect();
        elements.sort();
        elements.dedup();
        Ok(ElementSet {
            dim: self.dim,
            elements,
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.dim == other.dim && self.iter().all(|e| other.contains(e))
    }

    /// A nonempty set closed under the product. For finite subsets of the
    /// basis group this is the full group test.
    pub fn is_group(&self) -> bool {
        !self.is_empty() && self.product(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Image under a relabeling of vector indices (see [`SignedBlade::relabel`]).
    pub fn relabel(&self, perm: &[u8]) -> ElementSet {
        let mut elements: Vec<_> = self.iter().map(|e| e.relabel(perm)).collect();
        elements.sort();
        ElementSet {
            dim: self.dim,
            elements,
        }
    }

    /// Union of all element masks.
    pub fn support(&self) -> u32 {
        self.iter().fold(0, |acc, e| acc | e.mask())
    }

    pub fn to_literals(&self) -> Vec<String> {
        self.iter().map(|e| e.to_string()).collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.elements.len()))?;
        for e in &self.elements {
            seq.serialize_element(&e.to_string())?;
        }
        seq.end()
    }
}

/// An ordered list of nontrivial, pairwise distinct (as unsigned blades)
/// generators, plus whether `-1` is adjoined to the generated group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorList {
    dim: u8,
    generators: Vec<SignedBlade>,
    adjoin_minus_one: bool,
}

impl GeneratorList {
    pub fn new(dim: u8, generators: Vec<SignedBlade>, adjoin_minus_one: bool) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch(dim, g.dim()));
            }
            if g.is_scalar() {
                return Err(Error::InvalidGenerators(format!("{g} is trivial")));
            }
            if generators[..i].iter().any(|h| h.mask() == g.mask()) {
                return Err(Error::InvalidGenerators(format!(
                    "{} is repeated",
                    g.unsigned()
                )));
            }
            // squares of blades are always +1 or -1
            let square = g.mul(*g)?;
            assert!(square.is_scalar() && square.sign() == g.square_sign());
        }
        Ok(GeneratorList {
            dim,
            generators,
            adjoin_minus_one,
        })
    }

    pub fn parse<S: AsRef<str>>(dim: u8, literals: &[S], adjoin_minus_one: bool) -> Result<Self> {
        let generators = literals
            .iter()
            .map(|s| SignedBlade::parse(s.as_ref(), dim))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, generators, adjoin_minus_one)
    }

    /// Positive generators from unsigned masks.
    pub fn from_masks(dim: u8, masks: &[u32], adjoin_minus_one: bool) -> Result<Self> {
        let generators = masks
            .iter()
            .map(|&m| SignedBlade::from_mask(m, false, dim))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, generators, adjoin_minus_one)
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn generators(&self) -> &[SignedBlade] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn adjoin_minus_one(&self) -> bool {
        self.adjoin_minus_one
    }

    pub fn with_adjoin_minus_one(&self, adjoin: bool) -> Self {
        GeneratorList {
            adjoin_minus_one: adjoin,
            ..self.clone()
        }
    }

    pub fn squares(&self) -> Vec<Sign> {
        self.generators.iter().map(|g| g.square_sign()).collect()
    }

    /// The same generators sorted by grade, then index tuple.
    pub fn sorted(&self) -> Self {
        let mut generators = self.generators.clone();
        generators.sort_by(|a, b| generator_order(a.mask(), b.mask()));
        GeneratorList {
            generators,
            ..self.clone()
        }
    }

    pub fn relabel(&self, perm: &[u8]) -> Self {
        GeneratorList {
            generators: self.generators.iter().map(|g| g.relabel(perm)).collect(),
            ..self.clone()
        }
    }

    /// Smallest multiplicatively closed set containing `1`, the generators
    /// and, when adjoined, `-1`. Computed by squaring until stable.
    pub fn closure(&self) -> ElementSet {
        let mut seed = vec![SignedBlade::one(self.dim)];
        if self.adjoin_minus_one {
            seed.push(SignedBlade::minus_one(self.dim));
        }
        seed.extend(self.generators.iter().copied());
        let mut current = ElementSet::new(self.dim, seed).expect("dimensions checked");
        loop {
            let next = current.product(&current).expect("dimensions checked");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// `{±1}{1,h1}...{1,hm}`.
    pub fn product_form(&self) -> ElementSet {
        let mut acc = ElementSet::plus_minus_one(self.dim);
        for &g in &self.generators {
            let factor = ElementSet::new(self.dim, [SignedBlade::one(self.dim), g])
                .expect("dimensions checked");
            acc = acc.product(&factor).expect("dimensions checked");
        }
        acc
    }

    pub fn to_literals(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Display for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literals().join(" "))?;
        if !self.adjoin_minus_one {
            write!(f, " (without -1)")?;
        }
        Ok(())
    }
}
