use std::sync::OnceLock;

use cactus_core::oracle::{oracle, KbOracle};
use cactus_core::rewrite::all_words;
use cactus_core::split::sigma;
use cactus_core::{split_form, Generator, Presentation, SplitForm, TessBall, Word};
use proptest::prelude::*;

fn j4_ball() -> &'static TessBall {
    static BALL: OnceLock<TessBall> = OnceLock::new();
    BALL.get_or_init(|| TessBall::build(&Presentation::named("j4-23").unwrap(), 10).unwrap())
}

fn words_up_to(p: &Presentation, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|l| all_words(p.degree(), p.generators(), l)).collect()
}

fn same(ball: &TessBall, a: &SplitForm, b: &SplitForm) -> bool {
    a.flip == b.flip && ball.wp_equal(&a.w, &b.w).unwrap()
}

#[test]
fn rewriting_and_tessellation_agree_on_j3_2() {
    let p = Presentation::named("j3-2").unwrap();
    let tess = oracle("tess", &p, 13).unwrap();
    let kb = oracle("kb", &p, 64).unwrap();
    let ws = words_up_to(&p, 6);
    assert_eq!(ws.len(), 127);
    for u in &ws {
        for v in &ws {
            assert_eq!(tess.equal(u, v).unwrap(), kb.equal(u, v).unwrap(), "{u} vs {v}");
        }
    }
}

#[test]
fn rewriting_and_tessellation_agree_on_j4_23() {
    let p = Presentation::named("j4-23").unwrap();
    let kb = KbOracle::new(&p, 4096);
    let ball = j4_ball();
    let ws = words_up_to(&p, 5);
    let keys: Vec<(u32, Word)> = ws
        .iter()
        .map(|w| (ball.evaluate(w).unwrap(), kb.system().rewrite(w)))
        .collect();
    for (i, a) in keys.iter().enumerate() {
        for b in &keys[..i] {
            assert_eq!(a.0 == b.0, a.1 == b.1, "{} vs {}", ws[i], a.1);
        }
    }
}

#[test]
fn split_mul_is_a_homomorphism() {
    let j4 = Presentation::cactus(4).unwrap();
    let ball = j4_ball();
    let ws = words_up_to(&j4, 4);
    assert_eq!(ws.len(), 1555);
    let forms: Vec<SplitForm> = ws.iter().map(|w| split_form(w).unwrap()).collect();
    for (u, fu) in ws.iter().zip(&forms) {
        for (v, fv) in ws.iter().zip(&forms) {
            let prod = fu.mul(fv).unwrap();
            let direct = split_form(&u.concat(v)).unwrap();
            assert!(same(ball, &prod, &direct), "{u} * {v}");
        }
    }
}

fn j4_23_word(max: usize) -> impl Strategy<Value = Word> {
    let gens: Vec<Generator> = Presentation::named("j4-23").unwrap().generators().to_vec();
    prop::collection::vec(prop::sample::select(gens), 0..=max).prop_map(|l| Word::new(4, l).unwrap())
}

/// A word equal to `w`: a relator or a cancelling pair spliced in.
fn equal_variant() -> impl Strategy<Value = (Word, Word)> {
    let p = Presentation::named("j4-23").unwrap();
    let rels: Vec<Word> = p.relators().to_vec();
    (j4_23_word(8), prop::sample::select(rels), any::<prop::sample::Index>()).prop_map(|(w, r, at)| {
        let i = at.index(w.len() + 1);
        let mut l = w.letters()[..i].to_vec();
        l.extend_from_slice(r.letters());
        l.extend_from_slice(&w.letters()[i..]);
        let v = Word::new(4, l).unwrap();
        (w, v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn pi_factors_through_equality(pair in prop_oneof![equal_variant(), (j4_23_word(8), j4_23_word(8))]) {
        let (u, v) = pair;
        if j4_ball().wp_equal(&u, &v).unwrap() {
            prop_assert_eq!(u.pi(), v.pi());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    /// `g·(h·v) = (gh)·v` wherever both sides are defined.
    #[test]
    fn left_multiplication_is_an_action(
        g in (j4_23_word(3), any::<bool>()),
        h in (j4_23_word(3), any::<bool>()),
        v in j4_23_word(3),
    ) {
        let ball = j4_ball();
        let g = SplitForm { w: g.0, flip: g.1 };
        let h = SplitForm { w: h.0, flip: h.1 };
        let gh = g.mul(&h).unwrap();
        let vert = ball.evaluate(&v).unwrap();
        let mg = ball.left_mult_map(&g).unwrap();
        let mh = ball.left_mult_map(&h).unwrap();
        let mgh = ball.left_mult_map(&gh).unwrap();
        if let (Some(&hv), Some(&ghv)) = (mh.get(&vert), mgh.get(&vert)) {
            if let Some(&g_hv) = mg.get(&hv) {
                prop_assert_eq!(g_hv, ghv);
            }
        }
        // the coset rule: the image of v is w_g followed by σ^flip of v's word
        let tail = if g.flip { sigma(&v).unwrap() } else { v.clone() };
        if let Some(&gv) = mg.get(&vert) {
            prop_assert_eq!(gv, ball.evaluate(&g.w.concat(&tail)).unwrap());
        }
    }
}
