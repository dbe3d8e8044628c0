use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use oggkit::crisp::{is_ideal, is_left_ideal, is_prime_subset, is_right_ideal, is_semiprime_subset};
use oggkit::enumerate::{
    default_grid, element_names, enumerate_fuzzy, enumerate_posets, enumerate_structures,
    gamma_names, EnumBounds, OrderMode,
};
use oggkit::fuzzy::{
    decisive_thresholds, is_fuzzy_ideal, is_fuzzy_left_ideal, is_fuzzy_prime,
    is_fuzzy_right_ideal, is_fuzzy_semiprime, level_cut, membership_image,
};
use oggkit::product::fuzzy_product;
use oggkit::{
    validate_structure, CrispSubset, FuzzySubset, Membership, OrderedGammaGroupoid, PartialOrder,
    Rational,
};
use proptest::prelude::*;

/// Every structure with n <= 2, k <= 2 (both order modes) plus n = 3, k = 1
/// with the chain order 0 <= 1 <= 2.
fn corpus() -> &'static [OrderedGammaGroupoid] {
    static CORPUS: OnceLock<Vec<OrderedGammaGroupoid>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut v = vec![];
        for n in 1..=2 {
            for k in 1..=2 {
                v.extend(enumerate_structures(&EnumBounds::new(n, k)).unwrap());
            }
        }
        let chain = PartialOrder::from_generators(3, [(0, 1), (1, 2)]).unwrap();
        v.extend(enumerate_structures(&EnumBounds::new(3, 1).with_order(OrderMode::Fixed(chain))).unwrap());
        v
    })
}

fn all_subsets(n: usize) -> impl Iterator<Item = CrispSubset> {
    (0u64..1 << n).map(move |m| CrispSubset::from_bits(n, m))
}

#[test]
fn validation_is_idempotent_and_streams_round_trip() {
    for g in corpus() {
        assert_eq!(&validate_structure(&g.to_raw()).unwrap(), g);
    }
}

#[test]
fn prime_subsets_are_semiprime() {
    for g in corpus() {
        for t in all_subsets(g.size()) {
            if is_prime_subset(g, &t).unwrap().passed() {
                assert!(is_semiprime_subset(g, &t).unwrap().passed());
            }
        }
    }
}

#[test]
fn full_and_empty_subsets() {
    for g in corpus() {
        let full = CrispSubset::full(g.size());
        let empty = CrispSubset::empty(g.size());
        assert!(is_left_ideal(g, &full).unwrap().passed());
        assert!(is_right_ideal(g, &full).unwrap().passed());
        assert!(is_ideal(g, &full).unwrap().passed());
        assert!(is_prime_subset(g, &empty).unwrap().passed());
        assert!(is_semiprime_subset(g, &empty).unwrap().passed());
    }
}

/// Compatibility by direct scan of every `(a, b, c, γ)` with `a <= b`.
fn compatible_oracle(n: usize, table: &[usize], order: &PartialOrder) -> bool {
    let op = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        for b in 0..n {
            if !order.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if !order.leq(op(a, c), op(b, c)) || !order.leq(op(c, a), op(c, b)) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn compatibility_agrees_with_brute_force_up_to_three_points() {
    for n in 1..=3usize {
        let cells = n * n;
        let total = n.pow(cells as u32);
        for order in enumerate_posets(n).unwrap() {
            for code in 0..total {
                let mut table = vec![0; cells];
                let mut c = code;
                for cell in table.iter_mut().rev() {
                    *cell = c % n;
                    c /= n;
                }
                let built = OrderedGammaGroupoid::from_parts(
                    element_names(n),
                    gamma_names(1),
                    table.clone(),
                    order.clone(),
                );
                assert_eq!(built.is_ok(), compatible_oracle(n, &table, &order));
            }
        }
    }
}

/// Copy of `g` with its single gamma duplicated into two identical labels.
fn duplicate_gamma(g: &OrderedGammaGroupoid) -> OrderedGammaGroupoid {
    let mut table = g.table().to_vec();
    table.extend_from_slice(g.table());
    OrderedGammaGroupoid::from_parts(g.elements().clone(), gamma_names(2), table, g.order().clone())
        .unwrap()
}

#[test]
fn duplicating_a_gamma_changes_nothing() {
    type Pred = fn(&OrderedGammaGroupoid, &FuzzySubset) -> oggkit::Result<oggkit::Verdict>;
    let fuzzy_preds: [Pred; 5] = [
        is_fuzzy_left_ideal,
        is_fuzzy_right_ideal,
        is_fuzzy_ideal,
        is_fuzzy_prime,
        is_fuzzy_semiprime,
    ];
    for g in corpus().iter().filter(|g| g.gamma_count() == 1) {
        let d = duplicate_gamma(g);
        assert_eq!(
            oggkit::crisp::is_gamma_semigroup(g).status(),
            oggkit::crisp::is_gamma_semigroup(&d).status()
        );
        for a in all_subsets(g.size()) {
            assert_eq!(
                is_prime_subset(g, &a).unwrap().status(),
                is_prime_subset(&d, &a).unwrap().status()
            );
            assert_eq!(
                is_semiprime_subset(g, &a).unwrap().status(),
                is_semiprime_subset(&d, &a).unwrap().status()
            );
            if !a.is_empty() {
                assert_eq!(is_ideal(g, &a).unwrap().status(), is_ideal(&d, &a).unwrap().status());
                assert_eq!(
                    is_left_ideal(g, &a).unwrap().status(),
                    is_left_ideal(&d, &a).unwrap().status()
                );
            }
        }
        for mu in enumerate_fuzzy(g, &default_grid()).unwrap() {
            let mu_d = FuzzySubset::new(d.elements().clone(), mu.grades().to_vec()).unwrap();
            for p in fuzzy_preds {
                assert_eq!(p(g, &mu).unwrap().status(), p(&d, &mu_d).unwrap().status());
            }
        }
    }
}

/// `μ(x γ y) >= max{μ(x), μ(y)}` plus antitonicity, scanned directly.
fn max_characterization(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> bool {
    let n = g.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..g.gamma_count()).all(|c| mu.grade(g.op(x, c, y)) >= mu.grade(x).max(mu.grade(y)))
                && (!g.leq(x, y) || mu.grade(x) >= mu.grade(y))
        })
    })
}

#[test]
fn fuzzy_ideal_three_way_agreement() {
    for g in corpus() {
        for mu in enumerate_fuzzy(g, &default_grid()).unwrap() {
            let two = is_fuzzy_ideal(g, &mu).unwrap().passed();
            let sides = is_fuzzy_left_ideal(g, &mu).unwrap().passed()
                && is_fuzzy_right_ideal(g, &mu).unwrap().passed();
            assert_eq!(two, sides);
            assert_eq!(two, max_characterization(g, &mu));
        }
    }
}

#[test]
fn enumeration_matches_brute_force_sets() {
    // all 16 relations on two points filtered by the axioms
    let mut expected = BTreeSet::new();
    for m in 0u32..16 {
        let leq: Vec<bool> = (0..4).map(|i| m >> i & 1 == 1).collect();
        let reflexive = leq[0] && leq[3];
        let antisym = !(leq[1] && leq[2]);
        if reflexive && antisym {
            expected.insert(leq);
        }
    }
    let got: BTreeSet<Vec<bool>> = enumerate_posets(2)
        .unwrap()
        .iter()
        .map(|o| (0..2).flat_map(|x| (0..2).map(move |y| o.leq(x, y))).collect())
        .collect();
    assert_eq!(got, expected);

    // structures: every table for every poset, filtered by compatibility
    let bounds = EnumBounds::new(2, 1);
    let stream: Vec<_> = enumerate_structures(&bounds).unwrap().collect();
    let as_set: BTreeSet<(Vec<usize>, PartialOrder)> = stream
        .iter()
        .map(|g| (g.table().to_vec(), g.order().clone()))
        .collect();
    assert_eq!(as_set.len(), stream.len(), "duplicates in stream");
    let mut brute = BTreeSet::new();
    for order in enumerate_posets(2).unwrap() {
        for code in 0..16usize {
            let table: Vec<usize> = (0..4).map(|i| code >> (3 - i) & 1).collect();
            if compatible_oracle(2, &table, &order) {
                brute.insert((table, order.clone()));
            }
        }
    }
    assert_eq!(as_set, brute);
}

#[test]
fn enumeration_is_deterministic() {
    let b = EnumBounds::new(2, 2);
    let a: Vec<_> = enumerate_structures(&b).unwrap().collect();
    let c: Vec<_> = enumerate_structures(&b).unwrap().collect();
    assert_eq!(a, c);
}

fn grade() -> impl Strategy<Value = Membership> {
    (1i64..=12)
        .prop_flat_map(|q| (0..=q, Just(q)))
        .prop_map(|(p, q)| Membership::ratio(p, q))
}

fn threshold() -> impl Strategy<Value = Rational> {
    (1i64..=24).prop_flat_map(|q| (0..=q, Just(q))).prop_map(|(p, q)| Rational::new(p, q))
}

fn fuzzy_on(n: usize) -> impl Strategy<Value = FuzzySubset> {
    prop::collection::vec(grade(), n)
        .prop_map(move |grades| FuzzySubset::new(element_names(n), grades).unwrap())
}

proptest! {
    #[test]
    fn cuts_are_antitone(mu in fuzzy_on(4), t1 in threshold(), t2 in threshold()) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let a = level_cut(&mu, hi).unwrap();
        let b = level_cut(&mu, lo).unwrap();
        prop_assert!(a.is_subset_of(&b));
        prop_assert_eq!(level_cut(&mu, Rational::from_integer(0)).unwrap(), CrispSubset::full(4));
    }

    #[test]
    fn cuts_are_step_functions(mu in fuzzy_on(4), t in threshold()) {
        let image = membership_image(&mu);
        let cut = level_cut(&mu, t).unwrap();
        match image.iter().find(|v| v.value() >= t) {
            Some(s) => prop_assert_eq!(cut, mu.cut(*s)),
            None => prop_assert!(cut.is_empty()),
        }
        for w in image.windows(2) {
            let mid = w[0].midpoint(w[1]);
            prop_assert_eq!(mu.cut(mid), mu.cut(w[1]));
        }
        prop_assert!(decisive_thresholds(&mu).len() <= image.len() + 1);
    }

    #[test]
    fn product_cuts_are_products_of_cuts(mu in fuzzy_on(3), sigma in fuzzy_on(3)) {
        let prod = fuzzy_product(&mu, &sigma).unwrap();
        let mut ts = membership_image(&mu);
        ts.extend(membership_image(&sigma));
        for t in ts {
            let cut = prod.cut(t);
            let (a, b) = (mu.cut(t), sigma.cut(t));
            for x in 0..3 {
                for y in 0..3 {
                    prop_assert_eq!(cut.contains(x * 3 + y), a.contains(x) && b.contains(y));
                }
            }
        }
    }

    #[test]
    fn product_is_monotone(mu in fuzzy_on(3), bump in fuzzy_on(3), sigma in fuzzy_on(3)) {
        let grades = mu.grades().iter().zip(bump.grades()).map(|(a, b)| *a.max(b)).collect();
        let bigger = FuzzySubset::new(mu.carrier().clone(), grades).unwrap();
        prop_assert!(mu.is_below(&bigger));
        let p = fuzzy_product(&mu, &sigma).unwrap();
        let q = fuzzy_product(&bigger, &sigma).unwrap();
        prop_assert!(p.is_below(&q));
    }

    #[test]
    fn indicator_bridge(idx in 0usize..64, mask in 0u64..4) {
        let g = &corpus()[idx % corpus().len()];
        let a = CrispSubset::from_bits(g.size(), mask & ((1 << g.size()) - 1));
        let chi = FuzzySubset::indicator(Arc::clone(g.elements()), &a);
        prop_assert_eq!(is_prime_subset(g, &a).unwrap().passed(), is_fuzzy_prime(g, &chi).unwrap().passed());
        prop_assert_eq!(is_semiprime_subset(g, &a).unwrap().passed(), is_fuzzy_semiprime(g, &chi).unwrap().passed());
        if !a.is_empty() {
            prop_assert_eq!(is_left_ideal(g, &a).unwrap().passed(), is_fuzzy_left_ideal(g, &chi).unwrap().passed());
            prop_assert_eq!(is_ideal(g, &a).unwrap().passed(), is_fuzzy_ideal(g, &chi).unwrap().passed());
        }
    }
}
