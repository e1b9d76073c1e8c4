//! Signed basis blades of Cl(n,0).
//!
//! A blade is stored as a bitmask: bit `j - 1` is set when the vector `e_j`
//! is a factor, and the factors are always read in ascending index order.
//! A signed blade adds a parity bit for the sign. The geometric product of
//! two blades XORs the masks and picks up the sign `(-1)^M`, where `M`
//! counts, for every factor of the right operand, the factors of the left
//! operand with a strictly larger index (the Walsh exponent).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: u8 = 16;

/// An unsigned basis blade: a set of vector factors in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Blade {
    mask: u32,
    dim: u8,
}

impl Blade {
    pub fn new(mask: u32, dim: u8) -> Result<Self> {
        check_dim(dim as usize)?;
        if mask >= 1u32 << dim {
            return Err(Error::InvalidGenerators(format!(
                "mask {mask:#b} does not fit dimension {dim}"
            )));
        }
        Ok(Blade { mask, dim })
    }

    pub fn scalar(dim: u8) -> Self {
        Blade { mask: 0, dim }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn dim(self) -> u8 {
        self.dim
    }

    pub fn grade(self) -> u32 {
        self.mask.count_ones()
    }

    /// One-based vector indices, ascending.
    pub fn indices(self) -> Vec<u8> {
        (0..self.dim)
            .filter(|&bit| self.mask & (1 << bit) != 0)
            .map(|bit| bit + 1)
            .collect()
    }
}

/// Sign of a signed blade or of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An element of the Clifford basis group: `±e_{i1}...e_{ik}` with
/// ascending indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    blade: Blade,
    negative: bool,
}

/// Walsh exponent `M` of the product `left * right`: for each factor `k` of
/// `right`, the number of factors of `left` with index strictly above `k`.
pub fn walsh_exponent(left: u32, right: u32) -> u32 {
    let mut count = 0;
    let mut rest = right;
    while rest != 0 {
        let k = rest.trailing_zeros();
        let above = if k >= 31 { 0 } else { left >> (k + 1) };
        count += above.count_ones();
        rest &= rest - 1;
    }
    count
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM as usize {
        return Err(Error::BadDimension(dim));
    }
    Ok(())
}

impl SignedBlade {
    pub fn new(sign: Sign, blade: Blade) -> Self {
        SignedBlade {
            blade,
            negative: sign.is_negative(),
        }
    }

    pub fn from_mask(mask: u32, negative: bool, dim: u8) -> Result<Self> {
        Ok(SignedBlade {
            blade: Blade::new(mask, dim)?,
            negative,
        })
    }

    pub fn one(dim: u8) -> Self {
        SignedBlade {
            blade: Blade::scalar(dim),
            negative: false,
        }
    }

    pub fn minus_one(dim: u8) -> Self {
        SignedBlade {
            blade: Blade::scalar(dim),
            negative: true,
        }
    }

    /// The basis vector `e_index` (one-based).
    pub fn vector(index: usize, dim: u8) -> Result<Self> {
        if index == 0 || index > dim as usize {
            return Err(Error::FactorOutOfRange { index, dim });
        }
        Self::from_mask(1 << (index - 1), false, dim)
    }

    pub fn blade(self) -> Blade {
        self.blade
    }

    pub fn mask(self) -> u32 {
        self.blade.mask
    }

    pub fn dim(self) -> u8 {
        self.blade.dim
    }

    pub fn sign(self) -> Sign {
        Sign::from_parity(self.negative)
    }

    pub fn is_negative(self) -> bool {
        self.negative
    }

    pub fn grade(self) -> u32 {
        self.blade.grade()
    }

    /// `±1`.
    pub fn is_scalar(self) -> bool {
        self.blade.mask == 0
    }

    pub fn negate(self) -> Self {
        SignedBlade {
            negative: !self.negative,
            ..self
        }
    }

    /// Same blade, positive sign.
    pub fn unsigned(self) -> Self {
        SignedBlade {
            negative: false,
            ..self
        }
    }

    fn same_dim(self, other: SignedBlade) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    /// Geometric product; fails on mismatched dimensions.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: SignedBlade) -> Result<SignedBlade> {
        self.same_dim(rhs)?;
        let walsh_odd = walsh_exponent(self.mask(), rhs.mask()) & 1 == 1;
        Ok(SignedBlade {
            blade: Blade {
                mask: self.mask() ^ rhs.mask(),
                dim: self.dim(),
            },
            negative: self.negative ^ rhs.negative ^ walsh_odd,
        })
    }

    /// Sign of `self * self`.
    pub fn square_sign(self) -> Sign {
        // the sign of self cancels; only the reversal of the factors counts
        Sign::from_parity(walsh_exponent(self.mask(), self.mask()) & 1 == 1)
    }

    pub fn commutes(self, other: SignedBlade) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Reversed factor order, rewritten ascending: the sign picks up the
    /// Walsh parity of the blade with itself.
    pub fn inverse(self) -> SignedBlade {
        let walsh_odd = walsh_exponent(self.mask(), self.mask()) & 1 == 1;
        SignedBlade {
            negative: self.negative ^ walsh_odd,
            ..self
        }
    }

    /// Apply a relabeling of vector indices. `perm[i]` is the zero-based
    /// image of zero-based index `i`; the image factors are re-sorted with
    /// one sign flip per inversion.
    pub fn relabel(self, perm: &[u8]) -> SignedBlade {
        debug_assert!(perm.len() >= significant_bits(self.mask()) as usize);
        let images: Vec<u8> = (0..32u8)
            .filter(|&bit| self.mask() & (1 << bit) != 0)
            .map(|bit| perm[bit as usize])
            .collect();
        let mut inversions = 0u32;
        let mut mask = 0u32;
        for (i, &a) in images.iter().enumerate() {
            mask |= 1 << a;
            inversions += images[i + 1..].iter().filter(|&&b| b < a).count() as u32;
        }
        SignedBlade {
            blade: Blade {
                mask,
                dim: self.dim(),
            },
            negative: self.negative ^ (inversions & 1 == 1),
        }
    }

    /// Parse a blade literal such as `e12`, `-e31` or `+1`. Out-of-order and
    /// repeated indices are reduced by the product rules.
    pub fn parse(text: &str, dim: u8) -> Result<SignedBlade> {
        check_dim(dim as usize)?;
        let malformed = || Error::MalformedLiteral(text.to_string());
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let mut value = if body == "1" {
            SignedBlade::one(dim)
        } else {
            let digits = body.strip_prefix('e').ok_or_else(malformed)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let mut acc = SignedBlade::one(dim);
            for b in digits.bytes() {
                let index = (b - b'0') as usize;
                if index == 0 || index > dim as usize {
                    return Err(Error::IndexOutOfRange {
                        literal: text.to_string(),
                        index,
                        dim,
                    });
                }
                acc = acc.mul(SignedBlade::vector(index, dim)?)?;
            }
            acc
        };
        if negative {
            value = value.negate();
        }
        Ok(value)
    }
}

fn significant_bits(mask: u32) -> u32 {
    32 - mask.leading_zeros()
}

/// Product of `e_{f1} e_{f2} ...` in the given order, reduced by literal
/// adjacent swaps (one sign flip each) and cancellation of equal neighbours.
/// Independent of [`walsh_exponent`]; used as a cross-check.
pub fn naive_reorder_sign(factors: &[usize], dim: u8) -> Result<SignedBlade> {
    check_dim(dim as usize)?;
    if let Some(&index) = factors.iter().find(|&&i| i == 0 || i > dim as usize) {
        return Err(Error::FactorOutOfRange { index, dim });
    }
    let mut word = factors.to_vec();
    let mut negative = false;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            match word[i].cmp(&word[i + 1]) {
                Ordering::Greater => {
                    word.swap(i, i + 1);
                    negative = !negative;
                    changed = true;
                    i += 1;
                }
                Ordering::Equal => {
                    word.drain(i..i + 2);
                    changed = true;
                }
                Ordering::Less => i += 1,
            }
        }
        if !changed {
            break;
        }
    }
    let mask = word.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
    SignedBlade::from_mask(mask, negative, dim)
}

/// Listing order inside element sets: by mask, then `+` before `-`.
impl Ord for SignedBlade {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.mask(), self.negative, self.dim()).cmp(&(other.mask(), other.negative, other.dim()))
    }
}

impl PartialOrd for SignedBlade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generator order: by grade, then by the ascending index tuple.
pub fn generator_order(a: u32, b: u32) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let mut x = a;
        let mut y = b;
        while x != 0 && y != 0 {
            let (i, j) = (x.trailing_zeros(), y.trailing_zeros());
            if i != j {
                return i.cmp(&j);
            }
            x &= x - 1;
            y &= y - 1;
        }
        Ordering::Equal
    })
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.is_scalar() {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for index in self.blade.indices() {
            // indices past 9 have no literal form
            if index > 9 {
                write!(f, "{{{index}}}")?;
            } else {
                write!(f, "{index}")?;
            }
        }
        Ok(())
    }
}
