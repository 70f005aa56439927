mod common;

use common::*;
use piecewise::arch::{alpha, arch_factorize, beta, is_fully_arched};
use piecewise::side::{l_general, r_general, r_letter};
use piecewise::{Letter, Word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn jumping_facts(w: &Word) {
    let n = w.len();
    let k = w.alphabet().size();
    let a = |i| alpha(w, i).unwrap();
    let b = |i| beta(w, i).unwrap();
    for i in 0..=n {
        let Some(ai) = a(i) else {
            if i < n {
                assert_eq!(a(i + 1), None, "{w}: α defined after undefined at {i}");
            }
            continue;
        };
        assert!(i + k <= ai, "{w} i={i}");
        if i < n {
            if let Some(next) = a(i + 1) {
                assert!(ai <= next);
            }
        }
        let bai = b(ai).expect("an arch ends at α(i)");
        assert!(i <= bai);
        assert_eq!(a(bai), Some(ai));

        // i ≤ βⁿαⁿ(i) ≤ βⁿ⁺¹αⁿ⁺¹(i) ≤ α(i)
        let mut forward = vec![i];
        while let Some(next) = a(*forward.last().unwrap()) {
            forward.push(next);
        }
        let mut prev = i;
        for (steps, &top) in forward.iter().enumerate().skip(1) {
            let mut back = top;
            for _ in 0..steps {
                back = b(back).expect("co-arches exist below an α-chain");
            }
            assert!(prev <= back && back <= ai, "{w} i={i} n={steps}");
            prev = back;
        }
    }
}

fn factor_cuts_follow_alpha(w: &Word) {
    let f = arch_factorize(w);
    let mut c = 0;
    for (j, &cut) in f.cuts().iter().enumerate() {
        assert_eq!(cut, c, "c_{j}");
        if j + 1 < f.cuts().len() {
            c = alpha(w, c).unwrap().unwrap();
        }
    }
    assert_eq!(alpha(w, c).unwrap(), None, "m is maximal");
    assert!(
        !f.rest().missing_letters().is_empty(),
        "a rest never holds every letter"
    );
}

#[test]
fn jumping_facts_exhaustive() {
    for k in 1..=3 {
        for w in words_upto(&alphabet(k), 8) {
            jumping_facts(&w);
            factor_cuts_follow_alpha(&w);
        }
    }
}

#[test]
fn jumping_facts_random() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let k = rng.random_range(1..=5);
        let len = rng.random_range(0..=120);
        let w = random_word(&mut rng, &alphabet(k), len);
        jumping_facts(&w);
        factor_cuts_follow_alpha(&w);
    }
}

#[test]
fn arched_generator_is_sound() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let k = rng.random_range(1..=4);
        let m = rng.random_range(0..=5);
        let v = random_arched(&mut rng, &alphabet(k), m);
        assert!(is_fully_arched(&v));
        assert_eq!(arch_factorize(&v).arch_count(), m);
    }
}

#[test]
fn arch_shift_and_arched_prefix() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..2000 {
        let k = rng.random_range(1..=4);
        let a = alphabet(k);
        let arches = rng.random_range(1..=4);
        let v = random_arched(&mut rng, &a, arches);
        let u = {
            let len = rng.random_range(0..=20);
            random_word(&mut rng, &a, len)
        };
        let t = {
            let len = rng.random_range(1..=4);
            random_word(&mut rng, &a, len)
        };
        let x = rng.random_range(0..k) as Letter;

        // one arch in front adds exactly one
        let s = random_arched(&mut rng, &a, 1);
        assert_eq!(
            r_letter(&s.concat(&u).unwrap(), x),
            1 + r_letter(&u, x),
            "{s}·{u}"
        );

        // r(v·u, t) = m + r(u, t) and ℓ(t, u·vᴿ) = m + ℓ(t, u)
        let vu = v.concat(&u).unwrap();
        let fin = |d: piecewise::side::SideDistance| d.finite().unwrap() as usize;
        assert_eq!(
            fin(r_general(&vu, &t).unwrap()),
            arches + fin(r_general(&u, &t).unwrap())
        );
        let uvr = u.concat(&v.mirror()).unwrap();
        assert_eq!(
            fin(l_general(&t, &uvr).unwrap()),
            arches + fin(l_general(&t, &u).unwrap())
        );
    }
}

proptest! {
    #[test]
    fn arches_and_rest_reassemble(w in word_strategy(4, 60)) {
        let f = arch_factorize(&w);
        let mut text: String = f.arches().map(|a| a.to_string()).collect();
        text.push_str(&f.rest().to_string());
        prop_assert_eq!(text, w.to_string());
        for arch in f.arches() {
            prop_assert!(arch.missing_letters().is_empty());
            let short = arch.factor(0, arch.len() - 1);
            prop_assert!(!short.missing_letters().is_empty());
        }
    }
}
