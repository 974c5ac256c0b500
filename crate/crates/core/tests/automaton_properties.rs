use proptest::prelude::*;
use semica_core::analysis::{
    entropy_deficit_bound, estimate_entropy, find_goe_pattern, find_mutually_erasable, myhill_audit,
    window_count_bound, window_image, Certificate, EntropySource, Enumeration,
};
use semica_core::automaton::{
    apply_to_pattern, apply_with_background, dependence_window, CellularAutomaton, Pattern, Symbol,
};
use semica_core::geometry::{adherence, interior};
use semica_core::semigroup::DEFAULT_BALL_BUDGET;
use semica_core::tiling::{density_constant, greedy_tiling, tiling_density};
use semica_core::{Element, Semigroup, Window, WindowSchedule};

/// A random automaton: family, memory drawn from a small ball, alphabet 2 or 3.
#[derive(Clone, Debug)]
struct Random {
    family: usize,
    memory: Vec<usize>,
    alphabet: usize,
    rule: Vec<u8>,
    support: Vec<usize>,
    background: u8,
}

fn random() -> impl Strategy<Value = Random> {
    (
        0usize..3,
        proptest::collection::vec(0usize..64, 1..4),
        2usize..4,
        proptest::collection::vec(any::<u8>(), 27),
        proptest::collection::vec(0usize..64, 1..4),
        any::<u8>(),
    )
        .prop_map(|(family, memory, alphabet, rule, support, background)| Random {
            family,
            memory,
            alphabet,
            rule,
            support,
            background,
        })
}

fn small_ball(sg: &Semigroup) -> Vec<Element> {
    sg.ball(&sg.default_generators(), 2, DEFAULT_BALL_BUDGET)
        .unwrap()
        .elements()
        .to_vec()
}

impl Random {
    fn build(&self) -> (Semigroup, CellularAutomaton, Window, Symbol) {
        let sg = match self.family {
            0 => Semigroup::nat(),
            1 => Semigroup::int_pow(1).unwrap(),
            _ => Semigroup::bicyclic(),
        };
        let ball = small_ball(&sg);
        let mut memory: Vec<Element> = Vec::new();
        for i in &self.memory {
            let e = ball[i % ball.len()].clone();
            if !memory.contains(&e) {
                memory.push(e);
            }
        }
        let q = self.alphabet;
        let entries = q.pow(memory.len() as u32);
        let rule = self.rule[..entries].iter().map(|v| v % q as u8).collect();
        let ca = CellularAutomaton::new(q, memory, rule).unwrap();
        let support: Window = self.support.iter().map(|i| ball[i % ball.len()].clone()).collect();
        (sg, ca, support, self.background % q as u8)
    }
}

fn region(sg: &Semigroup) -> Window {
    sg.ball(&sg.default_generators(), 6, DEFAULT_BALL_BUDGET).unwrap()
}

fn pattern_from(window: &Window, q: usize, seed: &[u8]) -> Pattern {
    let mut i = 0;
    Pattern::from_fn(window.clone(), |_| {
        i += 1;
        seed[i % seed.len()] % q as u8
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The output on Ω depends only on the input on MΩ.
    #[test]
    fn output_depends_only_on_the_dependence_window(r in random(), seed in proptest::collection::vec(any::<u8>(), 1..40), flip in 1u8..3) {
        let (sg, ca, omega, _) = r.build();
        let q = ca.alphabet();
        let dep = dependence_window(&sg, &ca, &omega).unwrap();
        let big = region(&sg).union(&dep);
        let x = pattern_from(&big, q, &seed);
        let y = Pattern::from_fn(big.clone(), |s| {
            let v = x.get(s).unwrap();
            if dep.contains(s) { v } else { (v + flip) % q as u8 }
        });
        let tx = apply_with_background(&sg, &ca, &x, 0, &omega).unwrap();
        let ty = apply_with_background(&sg, &ca, &y, 0, &omega).unwrap();
        prop_assert_eq!(tx, ty);
    }

    /// Configurations equal off Ω have images equal off `adh_M(Ω)`.
    #[test]
    fn differences_stay_inside_the_adherence(r in random(), a in proptest::collection::vec(any::<u8>(), 1..8), b in proptest::collection::vec(any::<u8>(), 1..8)) {
        let (sg, ca, omega, background) = r.build();
        let q = ca.alphabet();
        let adh = adherence(&sg, &omega, &ca.memory_window()).unwrap();
        let za = pattern_from(&omega, q, &a);
        let zb = pattern_from(&omega, q, &b);
        let outside = region(&sg).difference(&adh);
        let ta = apply_with_background(&sg, &ca, &za, background, &outside).unwrap();
        let tb = apply_with_background(&sg, &ca, &zb, background, &outside).unwrap();
        prop_assert_eq!(ta, tb);
    }

    /// `apply_to_pattern` and `apply_with_background` agree on `int_M(Ω)`.
    #[test]
    fn evaluators_agree_on_the_interior(r in random(), seed in proptest::collection::vec(any::<u8>(), 1..40)) {
        let (sg, ca, _, background) = r.build();
        let big = region(&sg);
        let x = pattern_from(&big, ca.alphabet(), &seed);
        let direct = apply_to_pattern(&sg, &ca, &x).unwrap();
        prop_assert_eq!(direct.window(), &interior(&sg, &big, &ca.memory_window()).unwrap());
        let via = apply_with_background(&sg, &ca, &x, background, direct.window()).unwrap();
        prop_assert_eq!(direct, via);
    }

    /// A collision is forced whenever the image on the adherence has fewer than
    /// `q^|Ω|` patterns; every returned pair and every window count replays.
    #[test]
    fn pigeonhole_and_replay(r in random()) {
        let (sg, ca, omega, background) = r.build();
        let q = ca.alphabet() as u128;
        let cfg = Enumeration::default();
        let pair = find_mutually_erasable(&sg, &ca, &omega, background, &cfg).unwrap();
        let adh = adherence(&sg, &omega, &ca.memory_window()).unwrap();
        let forced = adh.is_empty() || window_image(&sg, &ca, &adh, &cfg).unwrap().count < q.pow(omega.len() as u32);
        if forced {
            prop_assert!(pair.is_some());
        }
        match pair {
            Some(p) => prop_assert!(Certificate::MutuallyErasablePair(p).replay(&sg, &ca, 1 << 20).unwrap()),
            None => {
                let claim = semica_core::analysis::PreInjectiveUpTo { background, supports: vec![omega.clone()] };
                prop_assert!(Certificate::PreInjectiveUpTo(claim).replay(&sg, &ca, 1 << 20).unwrap());
            }
        }
        if let Some(goe) = find_goe_pattern(&sg, &ca, &omega, &cfg).unwrap() {
            prop_assert!(Certificate::GoePattern(goe).replay(&sg, &ca, 1 << 20).unwrap());
        }
    }

    /// `|π_{int_M(F)}(τ(A^S))| ≤ |π_F(A^S)|`.
    #[test]
    fn image_counts_never_exceed_the_full_shift(r in random(), n in 1usize..4) {
        let (sg, ca, _, _) = r.build();
        let f = sg.anchored_window(n).unwrap();
        let inner = interior(&sg, &f, &ca.memory_window()).unwrap();
        if !inner.is_empty() {
            let img = window_image(&sg, &ca, &inner, &Enumeration::default()).unwrap();
            prop_assert!(img.count <= (ca.alphabet() as u128).pow(f.len() as u32));
        }
    }

    /// Searches are identical for any number of workers.
    #[test]
    fn worker_count_does_not_change_results(r in random(), workers in 2usize..9) {
        let (sg, ca, omega, background) = r.build();
        let one = Enumeration::default();
        let many = Enumeration::default().workers(workers);
        let windows = vec![omega.clone(), sg.anchored_window(2).unwrap()];
        prop_assert_eq!(
            myhill_audit(&sg, &ca, &windows, background, &one).unwrap(),
            myhill_audit(&sg, &ca, &windows, background, &many).unwrap()
        );
    }
}

fn and_rule() -> CellularAutomaton {
    CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| t[0] & t[1]).unwrap()
}

/// On ℤ a pattern missing from the image on `K` stays missing when the window
/// and the pattern are translated together.
#[test]
fn translated_missing_patterns_stay_missing() {
    let sg = Semigroup::int_pow(1).unwrap();
    let ca = and_rule();
    let cfg = Enumeration::default();
    let k = sg.anchored_window(3).unwrap();
    let goe = find_goe_pattern(&sg, &ca, &k, &cfg).unwrap().unwrap();
    for s in [-7i64, -2, 1, 5, 40] {
        let ks = sg.translate(&Element::int(s), &k).unwrap();
        let moved = Pattern::new(ks.clone(), goe.missing.values().to_vec()).unwrap();
        let img = window_image(&sg, &ca, &ks, &cfg).unwrap();
        assert!(img.is_proper());
        assert!(!img.contains(&moved), "shift {s}");
        assert_eq!(img.count, goe.image_count);
    }
}

/// The AND image misses `101` on every translate of `K = {0, 1, 2}`, so each
/// window count obeys the tiling bound and the trace falls below `log 2`.
#[test]
fn and_rule_entropy_respects_the_deficit_bounds() {
    let sg = Semigroup::int_pow(1).unwrap();
    let ca = and_rule();
    let k = sg.anchored_window(3).unwrap();
    let trace = estimate_entropy(
        &sg,
        EntropySource::Image(&ca),
        WindowSchedule::Anchored,
        1..=12,
        &Enumeration::default(),
    )
    .unwrap();
    let arena: Window = (-5..=20).map(Element::int).collect();
    let tiling = greedy_tiling(&sg, &k, &arena).unwrap();
    let delta = density_constant(k.len());
    let bound = entropy_deficit_bound(2, k.len(), delta).unwrap();
    for step in &trace.steps {
        assert!(step.count <= 1u128 << step.window_size);
        let f = sg.anchored_window(step.n).unwrap();
        let inside = tiling_density(&sg, &k, &tiling.tiles, &f).unwrap().tiles_inside;
        let cap = window_count_bound(2, k.len(), f.len(), inside).unwrap();
        assert!((step.count as f64).ln() <= cap + 1e-9, "n = {}", step.n);
        if step.n >= 3 {
            assert!(step.value <= bound, "n = {}: {} > {bound}", step.n, step.value);
        }
    }
    assert!(trace.steps.last().unwrap().value < 2f64.ln());
}

#[test]
fn xor_image_is_the_full_shift() {
    let sg = Semigroup::int_pow(1).unwrap();
    let ca = CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| t[0] ^ t[1])
        .unwrap();
    let trace =
        estimate_entropy(&sg, EntropySource::Image(&ca), WindowSchedule::Anchored, 1..=12, &Enumeration::default())
            .unwrap();
    for s in &trace.steps {
        assert_eq!(s.count, 1u128 << s.window_size);
        assert!((s.value - 2f64.ln()).abs() < 1e-12);
    }
    assert!(Certificate::EntropyTrace(trace).replay(&sg, &ca, 1 << 16).unwrap());
}
