use ramseyforge::bridge::is_bridge_set;
use ramseyforge::kset::KSet;
use ramseyforge::ramsey::block_lambdas;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_bridge(y: &KSet, l: usize, values: &[(u8, u8)]) {
    let vs = block_lambdas(y, l, 3, values).unwrap();
    let ends = is_bridge_set(&vs).unwrap_or_else(|| panic!("no bridge for {y} with {values:?}"));
    assert_eq!(ends, (vs[4].clone(), vs[0].clone()), "{y} with {values:?}");
}

fn random_values(rng: &mut ChaCha8Rng) -> Vec<(u8, u8)> {
    (0..4)
        .map(|_| {
            let a = rng.random_range(0..3u8);
            let b = (a + rng.random_range(1..3u8)) % 3;
            (a, b)
        })
        .collect()
}

#[test]
fn random_block_assignments_form_bridges() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let l = rng.random_range(1..=3usize);
        let mut pool: Vec<u32> = (1..=16).collect();
        for i in 0..(4 * l + 1) {
            let j = rng.random_range(i..pool.len());
            pool.swap(i, j);
        }
        let mut elems = pool[..4 * l + 1].to_vec();
        elems.sort_unstable();
        let y = KSet::new(elems).unwrap();
        assert_bridge(&y, l, &random_values(&mut rng));
    }
}

#[test]
fn every_block_pattern_forms_a_bridge() {
    let y = KSet::interval(1, 9).unwrap();
    let mut seen = 0;
    for code in 0..6u32.pow(4) {
        let values: Vec<(u8, u8)> = (0..4)
            .map(|j| {
                let d = code / 6u32.pow(j) % 6;
                let a = (d / 2) as u8;
                (a, (a + 1 + (d % 2) as u8) % 3)
            })
            .collect();
        assert_bridge(&y, 2, &values);
        seen += 1;
    }
    assert_eq!(seen, 1296);
}
