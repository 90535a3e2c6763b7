//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL`
//! line with the measured values; run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use cactus_core::confspace::{build_config_complex, pj3_check, reconcile_printed, verify_phi};
use cactus_core::hyp::{cellular_domain, poincare_check, realize, SideKind};
use cactus_core::pure::{
    check_relator, enumerate_pure, match_reference_list, minimal_length_scan, six_relators,
    tietze_eliminate, verify_relators, GWord, ELIMINATION_ORDER, OUTLINE_RELATORS, SINGLE_RELATOR,
};
use cactus_core::quotient::{alpha2_check, quotient_complex, SurfaceReport};
use cactus_core::oracle::oracle;
use cactus_core::rewrite::all_words;
use cactus_core::series::guess_series;
use cactus_core::{split_form, Generator, Presentation, SplitForm, TessBall, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Polygon angles and sums.
const GEOM_TOL: f64 = 1e-6;
/// Isometry identities near the root.
const ALG_TOL: f64 = 1e-9;

fn j4(radius: u32) -> TessBall {
    TessBall::build(&Presentation::named("j4-23").unwrap(), radius).unwrap()
}

fn verdict(n: u32, name: &str, ok: bool, detail: String) {
    println!("criterion {n:>2} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} {name} failed: {detail}");
}

#[test]
fn criterion_01_ball_structure() {
    let b = j4(8);
    let sizes = b.sphere_sizes();
    let degree_ok = b
        .vertices()
        .filter(|&v| b.is_trusted(v))
        .all(|v| b.neighbors(v).count() == 5);
    let interior: Vec<_> = b.vertices().filter(|&v| b.is_interior(v)).collect();
    let links_ok = interior
        .iter()
        .all(|&v| b.link_cycle(v).is_some_and(|c| c.len() == 5));
    let ok = sizes[..3] == [1, 5, 15] && degree_ok && links_ok && b.check_structure().is_ok();
    verdict(
        1,
        "ball structure",
        ok,
        format!(
            "sizes {:?}, degree 5 {degree_ok}, pentagon links at {} interior vertices {links_ok}",
            &sizes[..3],
            interior.len()
        ),
    );
}

#[test]
fn criterion_02_enumeration() {
    let b = j4(8);
    let r3 = enumerate_pure(&b, 3).unwrap();
    let found = enumerate_pure(&b, 4).unwrap();
    let m = match_reference_list(&b, &found).unwrap();
    let nontrivial = found.len() - 1;
    let ok = r3.len() == 1 && nontrivial == 20 && m.passed() && m.flip_zero == 6 && m.flip_one == 14;
    verdict(
        2,
        "enumeration",
        ok,
        format!(
            "R=3 {} element(s), R=4 {nontrivial} nontrivial, flip 0/1 = {}/{}",
            r3.len(),
            m.flip_zero,
            m.flip_one
        ),
    );
}

#[test]
fn criterion_03_presentation() {
    let b = j4(8);
    let checks = verify_relators(&b).unwrap();
    let relators_ok = checks.len() == 12 && checks.iter().all(|c| c.passed());
    let left = tietze_eliminate(&six_relators(), &ELIMINATION_ORDER).unwrap();
    let single = GWord::parse(SINGLE_RELATOR).unwrap();
    let tietze_ok = left.len() == 1 && left[0].cyclic_key() == single.cyclic_key();
    let single_ok = check_relator(&b, &single, "single").unwrap().passed();
    verdict(
        3,
        "presentation",
        relators_ok && tietze_ok && single_ok,
        format!("12 relators trivial {relators_ok}, elimination {tietze_ok}, single relator trivial {single_ok}"),
    );
}

#[test]
fn criterion_04_minimality() {
    let b = j4(8);
    let short = minimal_length_scan(&b, 3).unwrap();
    let full = minimal_length_scan(&b, 4).unwrap();
    let ok = short.words_scanned == 258 && short.short_pure.is_empty() && full.not_minimal.is_empty();
    verdict(
        4,
        "minimality",
        ok,
        format!(
            "{} words of length <= 3 scanned, {} pure, {} g_i with a shorter equal word",
            short.words_scanned,
            short.short_pure.len(),
            full.not_minimal.len()
        ),
    );
}

#[test]
fn criterion_05_fundamental_polygon() {
    let b = j4(8);
    let rt = realize(&b, ALG_TOL).unwrap();
    let q = quotient_complex(&b).unwrap();
    let d = cellular_domain(&b, &rt, &q, ALG_TOL).unwrap().domain;
    let allowed = [2.0, 3.0, 4.0].map(|k| k * PI / 5.0);
    let angles_ok = d
        .corners
        .iter()
        .all(|c| allowed.iter().any(|a| (c.angle - a).abs() <= GEOM_TOL));
    let sum = d.angle_sum();
    let report = poincare_check(&d, GEOM_TOL).unwrap();
    let cycles_ok = report
        .cycles
        .iter()
        .all(|c| (c.angle_sum - 2.0 * PI).abs() <= GEOM_TOL);
    let diagonals = d.count_kind(SideKind::Diagonal);
    let keys: BTreeSet<GWord> = report
        .cycles
        .iter()
        .map(|c| d.cycle_gword(c).unwrap().cyclic_key())
        .collect();
    let outline: BTreeSet<GWord> = OUTLINE_RELATORS
        .iter()
        .map(|r| GWord::parse(r).unwrap().cyclic_key())
        .collect();
    let ok = d.sides.len() == 20
        && angles_ok
        && (sum - 12.0 * PI).abs() <= GEOM_TOL
        && report.pairing_involutive
        && report.bad_pairings.is_empty()
        && cycles_ok
        && diagonals == 10
        && keys == outline;
    verdict(
        5,
        "fundamental polygon",
        ok,
        format!(
            "{} sides, angle sum - 12pi = {:.2e}, {} vertex cycles at 2pi {cycles_ok}, {diagonals} diagonals",
            d.sides.len(),
            sum - 12.0 * PI,
            report.cycles.len()
        ),
    );
}

#[test]
fn criterion_06_quotient_surface() {
    let q = quotient_complex(&j4(8)).unwrap();
    let s = SurfaceReport::of(&q.complex).unwrap();
    let ok = s.counts == (12, 30, 15)
        && s.chi == -3
        && s.closed
        && s.connected
        && !s.orientable
        && s.classification == "N5";
    verdict(
        6,
        "quotient surface",
        ok,
        format!("{:?}, chi {}, orientable {}, {}", s.counts, s.chi, s.orientable, s.classification),
    );
}

#[test]
fn criterion_07_configuration_space() {
    let cc = build_config_complex(5).unwrap();
    let degree_ok = (0..12).all(|v| cc.complex.degree(v) == 5);
    let q = quotient_complex(&j4(8)).unwrap();
    let phi = verify_phi(&cc, &q).unwrap();
    let rec = reconcile_printed(&cc).unwrap();
    for s in rec.squares.iter().filter(|s| !s.generated) {
        println!("  printed square <{}> is not generated", s.printed.join(", "));
    }
    for m in &rec.missing {
        let m: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        println!("  generated square <{}> is not printed", m.join(", "));
    }
    let reported = rec.squares.len() == 15 && rec.matched() + rec.missing.len() == 15;
    let ok = cc.complex.counts() == (12, 30, 15) && degree_ok && phi.passed() && reported;
    verdict(
        7,
        "configuration space",
        ok,
        format!(
            "phi {:?} {:?} {:?}, printed squares matched {} of 15",
            phi.vertices,
            phi.edges,
            phi.faces,
            rec.matched()
        ),
    );
}

#[test]
fn criterion_08_degree_three() {
    let b3 = TessBall::build(&Presentation::named("j3-2").unwrap(), 10).unwrap();
    let r = pj3_check(&b3).unwrap();
    verdict(
        8,
        "degree three",
        r.passed(),
        format!(
            "path {}, quotient {:?} matches X4 {}, pure {}, displacement {}, free {}",
            r.is_line, r.quotient_counts, r.quotient_matches_x4, r.pure, r.displacement, r.acts_freely
        ),
    );
}

#[test]
fn criterion_09_orientation() {
    let b = j4(8);
    let rt = realize(&b, ALG_TOL).unwrap();
    let a = alpha2_check(&b, &rt, ALG_TOL).unwrap();
    let mut relators_ok = true;
    for g in six_relators() {
        let f = split_form(&g.expand()).unwrap();
        let iso = rt.split_isometry(&b, &f, ALG_TOL).unwrap();
        relators_ok &= !iso.rev && iso.is_identity(ALG_TOL);
    }
    verdict(
        9,
        "orientation",
        a.pure && a.reverses_orientation && relators_ok,
        format!("pure {}, rev {}, relators act trivially {relators_ok}", a.pure, a.reverses_orientation),
    );
}

fn random_word(rng: &mut ChaCha8Rng, gens: &[Generator], max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::new(4, (0..n).map(|_| gens[rng.gen_range(0..gens.len())]).collect()).unwrap()
}

#[test]
fn criterion_10_oracle_cross_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);

    let j3 = Presentation::named("j3-2").unwrap();
    let tess = oracle("tess", &j3, 13).unwrap();
    let kb = oracle("kb", &j3, 64).unwrap();
    let ws: Vec<Word> = (0..=6).flat_map(|l| all_words(3, j3.generators(), l)).collect();
    let mut rewrite_pairs = 0;
    let mut rewrite_ok = true;
    for u in &ws {
        for v in &ws {
            rewrite_pairs += 1;
            rewrite_ok &= tess.equal(u, v).unwrap() == kb.equal(u, v).unwrap();
        }
    }

    let b = j4(10);
    let sub = Presentation::named("j4-23").unwrap();
    let gens = sub.generators();
    let mut pi_ok = true;
    let mut equal_pairs = 0;
    for i in 0..10_000 {
        let u = random_word(&mut rng, gens, 8);
        let v = if i % 2 == 0 {
            // splice a relator into u
            let r = &sub.relators()[rng.gen_range(0..sub.relators().len())];
            let at = rng.gen_range(0..=u.len());
            let mut l = u.letters()[..at].to_vec();
            l.extend_from_slice(r.letters());
            l.extend_from_slice(&u.letters()[at..]);
            Word::new(4, l).unwrap()
        } else {
            random_word(&mut rng, gens, 8)
        };
        if b.wp_equal(&u, &v).unwrap() {
            equal_pairs += 1;
            pi_ok &= u.pi() == v.pi();
        }
    }

    let j4_full = Presentation::cactus(4).unwrap();
    let short: Vec<Word> = (0..=4).flat_map(|l| all_words(4, j4_full.generators(), l)).collect();
    let forms: Vec<SplitForm> = short.iter().map(|w| split_form(w).unwrap()).collect();
    let mut mul_ok = true;
    for (u, fu) in short.iter().zip(&forms) {
        for (v, fv) in short.iter().zip(&forms) {
            let prod = fu.mul(fv).unwrap();
            let direct = split_form(&u.concat(v)).unwrap();
            mul_ok &= prod.flip == direct.flip && b.wp_equal(&prod.w, &direct.w).unwrap();
        }
    }

    let mut action_ok = true;
    let mut action_checked = 0;
    for _ in 0..1_000 {
        let g = SplitForm { w: random_word(&mut rng, gens, 3), flip: rng.gen() };
        let h = SplitForm { w: random_word(&mut rng, gens, 3), flip: rng.gen() };
        let v = b.evaluate(&random_word(&mut rng, gens, 3)).unwrap();
        let (mg, mh) = (b.left_mult_map(&g).unwrap(), b.left_mult_map(&h).unwrap());
        let mgh = b.left_mult_map(&g.mul(&h).unwrap()).unwrap();
        if let (Some(hv), Some(ghv)) = (mh.get(&v), mgh.get(&v)) {
            if let Some(g_hv) = mg.get(hv) {
                action_checked += 1;
                action_ok &= g_hv == ghv;
            }
        }
    }

    verdict(
        10,
        "oracle cross-checks",
        rewrite_ok && pi_ok && mul_ok && action_ok && action_checked > 900,
        format!(
            "rewrite/tess on {rewrite_pairs} pairs {rewrite_ok}, pi on {equal_pairs} equal pairs {pi_ok}, \
             split_mul on {} pairs {mul_ok}, action on {action_checked} triples {action_ok}",
            short.len() * short.len()
        ),
    );
}

#[test]
fn criterion_11_growth() {
    let p = Presentation::named("j4-23").unwrap();
    let a = TessBall::build(&p, 11).unwrap().sphere_sizes();
    let b = TessBall::build(&p, 11).unwrap().sphere_sizes();
    let series = guess_series(&a);
    let validated = series.as_ref().is_some_and(|s| {
        s.validated_terms > 0 && s.expand(a.len()) == a.iter().map(|&x| x as i64).collect::<Vec<_>>()
    });
    verdict(
        11,
        "growth",
        a == b && a.len() >= 10 && validated,
        format!(
            "sizes {a:?}, series {}",
            series.map_or("none".to_string(), |s| format!("{s} checked on {} held-out terms", s.validated_terms))
        ),
    );
}
