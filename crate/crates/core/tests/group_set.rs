use basis_groups::{ElementSet, GeneratorList, SignedBlade};
use itertools::Itertools;
use proptest::prelude::*;
use rand::{rngs::StdRng, seq::SliceRandom, Rng, SeedableRng};

fn random_subset(rng: &mut StdRng, of: &ElementSet) -> ElementSet {
    let size = rng.gen_range(1..=of.order());
    let picked: Vec<SignedBlade> = of.elements().choose_multiple(rng, size).copied().collect();
    ElementSet::new(of.dim(), picked).unwrap()
}

fn all_generator_lists(dim: u8, max: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=max).flat_map(move |k| (1..1u32 << dim).combinations(k))
}

#[test]
fn subset_group_product_for_enumerated_groups() {
    let mut rng = StdRng::seed_from_u64(7);
    for masks in all_generator_lists(3, 3) {
        let group = GeneratorList::from_masks(3, &masks, true)
            .unwrap()
            .closure();
        for _ in 0..5 {
            let h = random_subset(&mut rng, &group);
            assert_eq!(h.product(&group).unwrap(), group);
            assert_eq!(group.product(&h).unwrap(), group);
        }
    }
}

#[test]
fn closure_is_a_fixed_point_and_independent_of_order() {
    for dim in 1..=4u8 {
        for masks in all_generator_lists(dim, 3) {
            for adjoin in [false, true] {
                let g = GeneratorList::from_masks(dim, &masks, adjoin).unwrap();
                let closure = g.closure();
                assert!(closure.is_group());
                assert_eq!(closure.product(&closure).unwrap(), closure);
                assert!(closure.order().is_power_of_two());
                for perm in masks.iter().copied().permutations(masks.len()) {
                    let h = GeneratorList::from_masks(dim, &perm, adjoin).unwrap();
                    assert_eq!(h.closure(), closure);
                }
                if adjoin {
                    assert!(closure.contains(SignedBlade::minus_one(dim)));
                    assert_eq!(g.product_form(), closure);
                }
            }
        }
    }
}

#[test]
fn only_single_positive_square_generators_avoid_minus_one_in_cl3() {
    let minus = SignedBlade::minus_one(3);
    for masks in all_generator_lists(3, 3) {
        let g = GeneratorList::from_masks(3, &masks, false).unwrap();
        let lacks = !g.closure().contains(minus);
        let single_positive = masks.len() == 1 && g.generators()[0].square_sign().symbol() == '+';
        assert_eq!(lacks, single_positive, "{masks:?}");
    }
}

#[test]
fn plus_minus_one_commutes_with_every_pair_set() {
    for dim in 1..=4u8 {
        let pm = ElementSet::plus_minus_one(dim);
        for g in ElementSet::full(dim).iter() {
            let pair = ElementSet::new(dim, [SignedBlade::one(dim), g]).unwrap();
            assert_eq!(pm.product(&pair).unwrap(), pair.product(&pm).unwrap());
        }
    }
}

fn small_set() -> impl Strategy<Value = ElementSet> {
    proptest::collection::vec((0u32..8, any::<bool>()), 0..6).prop_map(|v| {
        ElementSet::new(
            3,
            v.into_iter()
                .map(|(m, n)| SignedBlade::from_mask(m, n, 3).unwrap()),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn distributive(a in small_set(), b in small_set(), c in small_set()) {
        let left = a.product(&b.union(&c).unwrap()).unwrap();
        let right = a.product(&b).unwrap().union(&a.product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let left = b.union(&c).unwrap().product(&a).unwrap();
        let right = b.product(&a).unwrap().union(&c.product(&a).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_associative_and_union_commutative(a in small_set(), b in small_set(), c in small_set()) {
        prop_assert_eq!(
            a.product(&b).unwrap().product(&c).unwrap(),
            a.product(&b.product(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        let one = ElementSet::new(3, [SignedBlade::one(3)]).unwrap();
        prop_assert_eq!(a.product(&one).unwrap(), a.clone());
        prop_assert_eq!(a.union(&ElementSet::empty(3)).unwrap(), a);
    }
}
