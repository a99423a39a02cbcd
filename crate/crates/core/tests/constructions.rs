use proptest::prelude::*;
use uep_core::bounds::{
    packing_plan, uep_ball_bound, uep_cube_bound, PackingCount, SplitRule, TwoLevelParams,
    UepParams,
};
use uep_core::combinatorics::{ball_volume, chained_union_upper};
use uep_core::construction::{
    assemble_two_level, ball_construction, chained_ball_packing, connected_set_select,
    cube_construction, greedy_multilevel, random_luep_search, read_codebook, union_volume,
    write_codebook, LinearSearchParams, Region, UepCode, Word,
};
use uep_core::exact::Count;

/// Pairwise check of the requested profile, independent of `verify_profile`.
fn satisfies(code: &UepCode, required: &[u32]) -> bool {
    let words = code.words();
    for i in 0..words.len() {
        let mi = code.message(i);
        for j in i + 1..words.len() {
            let mj = code.message(j);
            let d = words[i].distance(&words[j]);
            let need = (0..required.len())
                .filter(|&l| mi[l] != mj[l])
                .map(|l| required[l])
                .max()
                .unwrap_or(0);
            if d < need {
                return false;
            }
        }
    }
    true
}

fn chained(words: &[Word], d: u32) -> bool {
    (1..words.len()).all(|i| words[..i].iter().any(|w| w.distance(&words[i]) == d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn greedy_meets_request(
        n in 4u32..=11,
        sizes in proptest::collection::vec(1u64..=4, 1..=3),
        gaps in proptest::collection::vec(0u32..=2, 3),
        last in 1u32..=3,
    ) {
        let m = sizes.len();
        let mut distances = vec![last; m];
        for i in (0..m - 1).rev() {
            distances[i] = distances[i + 1] + gaps[i];
        }
        let p = UepParams::new(n, sizes.iter().map(|&a| Count::from(a)).collect(), distances.clone()).unwrap();
        match greedy_multilevel(&p, None) {
            Ok(code) => prop_assert!(satisfies(&code, &distances)),
            Err(uep_core::Error::Precondition(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn chained_selection_in_balls(n in 5u32..=12, b in 1u64..=6, d_b in 1u32..=3, center in any::<u64>()) {
        let center = Word::from_index(n, center & ((1 << n) - 1));
        let need = Count::from(b - 1) * ball_volume(n, d_b - 1);
        let Some(radius) = (0..=n).find(|&r| ball_volume(n, r) > need) else { return Ok(()); };
        let region = Region::Ball { center, radius };
        let words = connected_set_select(&region, &Count::from(b), d_b).unwrap();
        prop_assert_eq!(words.len() as u64, b);
        prop_assert!(words.iter().all(|w| region.contains(w)));
        prop_assert!(chained(&words, d_b));
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                prop_assert!(words[i].distance(&words[j]) >= d_b);
            }
        }
    }

    #[test]
    fn codebook_round_trip(n in 1u32..=16, shape in proptest::collection::vec(1usize..=3, 1..=3), seed in any::<u64>()) {
        let total: usize = shape.iter().product();
        let mut state = seed | 1;
        let words = (0..total)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                Word::from_index(n, state & ((1 << n) - 1))
            })
            .collect();
        let code = UepCode::new(n, shape, words).unwrap();
        let text = write_codebook(&code);
        let back = read_codebook(&text).unwrap();
        prop_assert_eq!(&back, &code);
        prop_assert_eq!(write_codebook(&back), text);
    }
}

#[test]
fn assembled_codes_meet_bounds_and_union_estimates() {
    for (n, b, d_a, d_b) in [
        (10, 4, 3, 2),
        (11, 2, 4, 2),
        (12, 4, 4, 2),
        (9, 2, 3, 1),
        (12, 8, 3, 2),
    ] {
        let p = TwoLevelParams::new(n, Count::from(b as u32), d_a, d_b).unwrap();
        if let Ok(bound) = uep_cube_bound(&p, SplitRule::NonStrict) {
            let built = cube_construction(&p, SplitRule::NonStrict).unwrap();
            assert!(satisfies(&built.code, &[d_a, d_b]));
            assert!(Count::from(built.hosted + built.filled) >= bound.guaranteed_size);
            let per_group = chained_union_upper(n, &p.b, d_b, d_a - 1).unwrap();
            assert!(
                Count::from(built.hosted_union_volume) <= Count::from(built.hosted) * per_group
            );
        }
        if let Ok(plan) = packing_plan(&p) {
            let bound = uep_ball_bound(&p, &plan.m_s_lower).unwrap();
            let built = ball_construction(&p, PackingCount::Certified).unwrap();
            assert!(satisfies(&built.code, &[d_a, d_b]));
            assert!(
                Count::from(built.hosted + built.filled) >= bound.guaranteed_size,
                "{n} {b} {d_a} {d_b}"
            );
        }
    }
}

#[test]
fn packing_properties() {
    for n in 3..=12u32 {
        for r in 0..=2u32 {
            let centers = chained_ball_packing(n, r, 64).unwrap();
            assert!(chained(&centers, 2 * r + 1));
            for i in 0..centers.len() {
                for j in i + 1..centers.len() {
                    assert!(centers[i].distance(&centers[j]) > 2 * r);
                }
            }
            // disjoint balls: the union is the sum of the volumes
            let vol = ball_volume(n, r);
            assert_eq!(
                Count::from(union_volume(n, &centers, r).unwrap()),
                vol * Count::from(centers.len())
            );
        }
    }
}

#[test]
fn region_conditions_are_checked() {
    let p = TwoLevelParams::new(8, Count::from(2u8), 3, 2).unwrap();
    let scattered = Region::explicit(
        8,
        vec!["00000000".parse().unwrap(), "11000000".parse().unwrap()],
    )
    .unwrap();
    assert!(assemble_two_level(&p, &[scattered]).is_err());
}

#[test]
fn luep_is_deterministic_and_valid() {
    for seed in 0..20 {
        let q = LinearSearchParams {
            n: 10,
            k_a: 1,
            k_b: 2,
            d_a: 4,
            d_b: 2,
            seed,
            max_trials: 500,
        };
        let a = random_luep_search(&q).unwrap();
        let b = random_luep_search(&q).unwrap();
        assert_eq!(a, b);
        let code = a.code.to_uep_code().unwrap();
        assert!(satisfies(&code, &[4, 2]));
        assert_eq!(
            write_codebook(&code),
            write_codebook(&b.code.to_uep_code().unwrap())
        );
    }
}
