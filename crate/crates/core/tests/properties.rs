use std::sync::Arc;

use proptest::prelude::*;

use pwe_core::enumerators::{
    byte_enumerator, complete_level_enumerator, hamming_enumerator, level_enumerator,
    mspotty_enumerator, poset_weight_enumerator, substitute, Substitution,
};
use pwe_core::fuzz::catalog;
use pwe_core::poly::{parse_poly, VarStyle};
use pwe_core::{Cyc, Int, LevelStructure, LinearCode, Poly, Poset, RingSpec, Word};

fn rings() -> Vec<Arc<RingSpec>> {
    catalog()
        .into_iter()
        .map(|k| Arc::new(RingSpec::new(k).unwrap()))
        .collect()
}

/// Ring index, level sizes, and raw generator entries (reduced mod q later).
fn instance() -> impl Strategy<Value = (usize, Vec<usize>, Vec<Vec<u8>>)> {
    (0..6usize, prop::collection::vec(1..=3usize, 1..=3)).prop_flat_map(|(r, sizes)| {
        let n: usize = sizes.iter().sum();
        let gens = prop::collection::vec(prop::collection::vec(any::<u8>(), n), 0..=3);
        (Just(r), Just(sizes), gens)
    })
}

fn build(r: usize, sizes: &[usize], raw: &[Vec<u8>]) -> (LinearCode, LevelStructure) {
    let ring = rings()[r].clone();
    let q = ring.size() as u8;
    let gens: Vec<Word> = raw
        .iter()
        .map(|g| g.iter().map(|x| x % q).collect())
        .collect();
    let n = sizes.iter().sum();
    (
        LinearCode::span(ring, n, gens).unwrap(),
        LevelStructure::new(sizes.to_vec()).unwrap(),
    )
}

/// Acyclic cover pairs `lo < hi` on `1..=n`.
fn poset() -> impl Strategy<Value = Poset> {
    (1..=7usize)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((1..=n, 1..=n), 0..10)))
        .prop_map(|(n, pairs)| {
            let covers: Vec<[usize; 2]> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| [a.min(b), a.max(b)])
                .collect();
            Poset::from_covers(n, &covers).unwrap()
        })
}

fn subset(n: usize, mask: u8) -> Vec<usize> {
    (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_a_closure_operator(p in poset(), a in any::<u8>(), b in any::<u8>()) {
        let n = p.size();
        let (sa, sb) = (subset(n, a), subset(n, a | b));
        let ca = p.ideal_closure(&sa).unwrap();
        let cb = p.ideal_closure(&sb).unwrap();
        prop_assert!(sa.iter().all(|x| ca.contains(x)));
        prop_assert_eq!(p.ideal_closure(&ca).unwrap(), ca.clone());
        prop_assert!(ca.iter().all(|x| cb.contains(x)));
        // down-closed
        for &j in &ca {
            for i in 1..=n {
                if p.le(i, j) {
                    prop_assert!(ca.contains(&i));
                }
            }
        }
    }

    #[test]
    fn dual_of_dual((r, sizes, raw) in instance()) {
        let (code, _) = build(r, &sizes, &raw);
        let dual = code.dual().unwrap();
        let q = code.ring().size();
        prop_assert_eq!(code.size() * dual.size(), q.pow(code.length() as u32));
        prop_assert_eq!(dual.dual().unwrap(), code);
    }

    #[test]
    fn cyclotomic_matches_floats(
        e in 1u32..=24,
        a in prop::collection::vec(-50i64..=50, 24),
        b in prop::collection::vec(-50i64..=50, 24),
    ) {
        let x = Cyc::from_power_coeffs(e, a[..e as usize].iter().map(|&v| Int::from(v)).collect()).unwrap();
        let y = Cyc::from_power_coeffs(e, b[..e as usize].iter().map(|&v| Int::from(v)).collect()).unwrap();
        let (xr, xi) = x.eval::<f64>();
        let (yr, yi) = y.eval::<f64>();
        let (pr, pi) = (&x * &y).eval::<f64>();
        let (sr, si) = (&x + &y).eval::<f64>();
        prop_assert!(close(pr, xr * yr - xi * yi) && close(pi, xr * yi + xi * yr));
        prop_assert!(close(sr, xr + yr) && close(si, xi + yi));
        let (f32r, _) = x.eval::<f32>();
        prop_assert!((f64::from(f32r) - xr).abs() <= 1e-3 * (1.0 + xr.abs()));
    }

    #[test]
    fn text_round_trip((r, sizes, raw) in instance()) {
        let (code, levels) = build(r, &sizes, &raw);
        let polys: Vec<(Poly, VarStyle)> = vec![
            (byte_enumerator(&code, &levels).unwrap(), VarStyle::Byte),
            (complete_level_enumerator(&code, &levels).unwrap(), VarStyle::Weight),
            (level_enumerator(&code, &levels).unwrap(), VarStyle::Weight),
            (hamming_enumerator(&code), VarStyle::Weight),
        ];
        for (p, style) in polys {
            let back: Poly = parse_poly(&p.to_string(), style).unwrap();
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn leveled_weight_formula(sizes in prop::collection::vec(1..=3usize, 1..=4), raw in prop::collection::vec(0u8..3, 12)) {
        let p = Poset::leveled(&sizes).unwrap();
        let levels = LevelStructure::new(sizes.clone()).unwrap();
        let v: Vec<u8> = raw[..levels.total()].to_vec();
        // levels below the top nonzero one count fully, the top one by support
        let parts = levels.split(&v).unwrap();
        let expected = match parts.iter().rposition(|part| part.iter().any(|&x| x != 0)) {
            None => 0,
            Some(top) => sizes[..top].iter().sum::<usize>() + parts[top].iter().filter(|&&x| x != 0).count(),
        };
        prop_assert_eq!(p.weight(&v).unwrap(), expected);
    }

    #[test]
    fn enumerators_agree((r, sizes, raw) in instance(), t_raw in prop::collection::vec(1..=3usize, 3)) {
        let (code, levels) = build(r, &sizes, &raw);
        let t: Vec<usize> = sizes.iter().zip(&t_raw).map(|(&n, &t)| t.min(n)).collect();
        let byte: Poly = byte_enumerator(&code, &levels).unwrap();
        let complete: Poly = complete_level_enumerator(&code, &levels).unwrap();
        let size = Int::from(code.size());
        prop_assert_eq!(byte.coefficient_sum(), size.clone());
        prop_assert_eq!(complete.coefficient_sum(), size);
        prop_assert_eq!(substitute(&byte, &Substitution::ByteToComplete).unwrap(), complete.clone());
        prop_assert_eq!(
            substitute(&complete, &Substitution::CompleteToLevel).unwrap(),
            level_enumerator::<Int>(&code, &levels).unwrap()
        );
        prop_assert_eq!(
            substitute(&complete, &Substitution::CompleteToSpotty(t.clone())).unwrap(),
            mspotty_enumerator::<Int>(&code, &levels, &t).unwrap()
        );
    }

    #[test]
    fn antichain_and_chain_weights((r, sizes, raw) in instance()) {
        let (code, _) = build(r, &sizes, &raw);
        let n = code.length();
        let anti: Poly = poset_weight_enumerator(&code, &Poset::antichain(n).unwrap()).unwrap();
        prop_assert_eq!(anti, hamming_enumerator::<Int>(&code));
        // over a chain the weight is the last nonzero position
        let chain: Poly = poset_weight_enumerator(&code, &Poset::chain(n).unwrap()).unwrap();
        let mut rt = vec![Int::from(0); n + 1];
        for w in code.codewords() {
            rt[w.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)] += 1;
        }
        let coeffs = chain.univariate_coeffs().unwrap();
        prop_assert_eq!(&coeffs[..], &rt[..coeffs.len()]);
        prop_assert!(rt[coeffs.len()..].iter().all(|c| *c == Int::from(0)));
    }
}
