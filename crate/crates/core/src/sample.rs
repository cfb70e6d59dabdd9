//! Random elements for sampled property sweeps.

use rand::Rng;

use crate::element::{Element, Letter, PositiveWord};

fn random_word<R: Rng + ?Sized>(rng: &mut R, letters: u32, len: usize) -> PositiveWord {
    (0..len)
        .map(|_| Letter(rng.gen_range(0..letters)))
        .collect()
}

/// A non-zero element over the first `letters` generators with
/// `|u| + |v| ≤ max_len`, split uniformly between `u` and `v`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, letters: u32, max_len: usize) -> Element {
    let total = rng.gen_range(0..=max_len);
    let ulen = rng.gen_range(0..=total);
    Element::new(
        random_word(rng, letters, ulen),
        random_word(rng, letters, total - ulen),
    )
}

/// Like [`random_nonzero`] but returns zero with probability `1 / 16`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, letters: u32, max_len: usize) -> Element {
    if rng.gen_range(0..16) == 0 {
        Element::Zero
    } else {
        random_nonzero(rng, letters, max_len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn respects_bounds() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let x = random_element(&mut rng, 3, 5);
            assert!(x.len() <= 5);
            assert!(x.letters().all(|l| l.0 < 3));
        }
    }
}
