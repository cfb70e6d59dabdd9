use polymon::green::{ball, positive_words};
use polymon::rewriting::{all_words, mul_oracle, reduce, FreeWord};
use polymon::sample::random_element;
use polymon::{Alphabet, Element, Letter, PositiveWord};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn two() -> Alphabet {
    Alphabet::finite(2).unwrap()
}

fn element(letters: u32, max_len: usize) -> impl Strategy<Value = Element> {
    let word = move || prop::collection::vec(0..letters, 0..=max_len);
    prop_oneof![
        1 => Just(Element::Zero),
        15 => (word(), word()).prop_map(|(u, v)| Element::from_indices(&u, &v)),
    ]
}

#[test]
fn random_associativity() {
    for (lambda, seed) in [(2u32, 1u64), (3, 2), (5, 3)] {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..100_000 {
            let x = random_element(&mut rng, lambda, 5);
            let y = random_element(&mut rng, lambda, 5);
            let z = random_element(&mut rng, lambda, 5);
            assert_eq!(
                x.product(&y).product(&z),
                x.product(&y.product(&z)),
                "{x} {y} {z}"
            );
        }
    }
}

#[test]
fn involution_laws() {
    let b3 = ball(&two(), 3).unwrap();
    for x in &b3 {
        assert_eq!(x.inverse().inverse(), *x);
        for y in &b3 {
            assert_eq!(
                x.product(y).inverse(),
                y.inverse().product(&x.inverse()),
                "{x} {y}"
            );
        }
    }
}

#[test]
fn positive_words_cancel_from_the_right() {
    let letters = two().letters().unwrap();
    for v in positive_words(&letters, 5) {
        let x = Element::positive(v.clone());
        assert_eq!(x.product(&x.inverse()), Element::one(), "{v}");
        let e = x.inverse().product(&x);
        assert!(e.is_idempotent());
        assert_eq!(e.product(&e), e);
        assert_eq!(e.is_one(), v.is_empty(), "{v}");
    }
}

#[test]
fn downset_cardinality() {
    for x in ball(&two(), 4).unwrap().nonzero() {
        let down = x.downset().unwrap();
        assert_eq!(down.len(), x.len() + 1);
        assert_eq!(down.first(), Some(&Element::one()));
        assert_eq!(down.last(), Some(x));
        // Each prefix extends the previous one by a single signed letter.
        for pair in down.windows(2) {
            let (short, long) = (pair[0].signed_letters(), pair[1].signed_letters());
            assert_eq!(&long[..short.len()], short.as_slice());
        }
    }
}

#[test]
fn reduce_is_idempotent() {
    for len in 0..=6 {
        for w in all_words(3, len) {
            let once = reduce(&w);
            assert_eq!(reduce(&FreeWord::from_element(&once)), once, "{w}");
        }
    }
}

#[test]
fn oracle_on_infinite_alphabet() {
    let inf = Alphabet::countably_infinite();
    let x = Element::new(
        PositiveWord::new(vec![Letter(1000)]),
        PositiveWord::new(vec![Letter(7)]),
    );
    let y = Element::generator_inverse(Letter(7));
    assert_eq!(mul_oracle(&inf, &x, &y).unwrap(), x.product(&y));
    assert_eq!(x.product(&y), Element::generator_inverse(Letter(1000)));
}

proptest! {
    #[test]
    fn product_matches_rewriting(x in element(3, 5), y in element(3, 5)) {
        let three = Alphabet::finite(3).unwrap();
        prop_assert_eq!(x.product(&y), mul_oracle(&three, &x, &y).unwrap());
    }

    #[test]
    fn regularity(x in element(4, 6)) {
        let xi = x.inverse();
        prop_assert_eq!(x.product(&xi).product(&x), x.clone());
        prop_assert_eq!(xi.product(&x).product(&xi), xi);
    }

    #[test]
    fn json_round_trip(x in element(30, 4)) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&s).unwrap(), x);
    }

    #[test]
    fn text_round_trip(x in element(40, 4)) {
        let parsed = polymon::cli::parse_element(&x.to_string(), &Alphabet::countably_infinite()).unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn order_is_consistent_with_equality(x in element(2, 3), y in element(2, 3)) {
        prop_assert_eq!(x.cmp(&y) == std::cmp::Ordering::Equal, x == y);
    }
}
