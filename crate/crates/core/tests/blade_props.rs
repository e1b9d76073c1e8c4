use basis_groups::{naive_reorder_sign, SignedBlade};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn factors(x: SignedBlade) -> Vec<usize> {
    x.blade().indices().iter().map(|&i| i as usize).collect()
}

/// Product through the reordering oracle on the concatenated factor words.
fn oracle_product(x: SignedBlade, y: SignedBlade) -> SignedBlade {
    let mut word = factors(x);
    word.extend(factors(y));
    let p = naive_reorder_sign(&word, x.dim()).unwrap();
    if x.is_negative() ^ y.is_negative() {
        p.negate()
    } else {
        p
    }
}

fn blade(dim: u8) -> impl Strategy<Value = SignedBlade> {
    (0..1u32 << dim, any::<bool>())
        .prop_map(move |(m, neg)| SignedBlade::from_mask(m, neg, dim).unwrap())
}

fn dim_and_triple() -> impl Strategy<Value = (SignedBlade, SignedBlade, SignedBlade)> {
    (1u8..=9).prop_flat_map(|d| (blade(d), blade(d), blade(d)))
}

proptest! {
    #[test]
    fn associative((a, b, c) in dim_and_triple()) {
        let left = a.mul(b).unwrap().mul(c).unwrap();
        let right = a.mul(b.mul(c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn xor_law_and_swap_law((a, b, _c) in dim_and_triple()) {
        let ab = a.mul(b).unwrap();
        prop_assert_eq!(ab.mask(), a.mask() ^ b.mask());
        let ba = b.mul(a).unwrap();
        let exponent = a.grade() * b.grade() - (a.mask() & b.mask()).count_ones();
        prop_assert_eq!(ab == ba, exponent % 2 == 0);
        prop_assert_eq!(ab.unsigned(), ba.unsigned());
    }

    #[test]
    fn literal_round_trip(x in blade(9)) {
        prop_assert_eq!(SignedBlade::parse(&x.to_string(), 9).unwrap(), x);
    }

    #[test]
    fn relabel_is_a_homomorphism(
        (a, b, _c) in dim_and_triple(),
        seed in any::<u64>(),
    ) {
        let dim = a.dim();
        let mut perm: Vec<u8> = (0..dim).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(
            a.mul(b).unwrap().relabel(&perm),
            a.relabel(&perm).mul(b.relabel(&perm)).unwrap()
        );
    }
}

#[test]
fn random_pairs_agree_with_oracle_for_dims_4_to_7() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for dim in 4..=7u8 {
        for _ in 0..10_000 {
            let x = SignedBlade::from_mask(rng.gen_range(0..1 << dim), rng.gen(), dim).unwrap();
            let y = SignedBlade::from_mask(rng.gen_range(0..1 << dim), rng.gen(), dim).unwrap();
            assert_eq!(
                x.mul(y).unwrap(),
                oracle_product(x, y),
                "{x} * {y} at n = {dim}"
            );
        }
    }
}

#[test]
fn distinct_vectors_anticommute() {
    for dim in 2..=7u8 {
        for j in 1..=dim as usize {
            for k in 1..=dim as usize {
                if j == k {
                    continue;
                }
                let (ej, ek) = (
                    SignedBlade::vector(j, dim).unwrap(),
                    SignedBlade::vector(k, dim).unwrap(),
                );
                assert_eq!(ej.mul(ek).unwrap(), ek.mul(ej).unwrap().negate());
            }
        }
    }
}

#[test]
fn inverse_for_every_blade_up_to_dim_7() {
    for dim in 1..=7u8 {
        for m in 0..1u32 << dim {
            for neg in [false, true] {
                let x = SignedBlade::from_mask(m, neg, dim).unwrap();
                let one = SignedBlade::one(dim);
                assert_eq!(x.mul(x.inverse()).unwrap(), one);
                assert_eq!(x.inverse().mul(x).unwrap(), one);
            }
        }
    }
}
