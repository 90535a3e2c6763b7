use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use cactus_core::complex::CellComplex2;
use cactus_core::confspace::{build_config_complex, pj3_check, reconcile_printed, verify_phi};
use cactus_core::hyp::cellular::units_to_angle;
use cactus_core::hyp::{cellular_domain, dirichlet, poincare_check, realize, render_svg, SideKind};
use cactus_core::pure::{
    check_relator, enumerate_pure, match_reference_list, minimal_length_scan, tietze_eliminate,
    verify_relators, GWord, ELIMINATION_ORDER, SINGLE_RELATOR,
};
use cactus_core::quotient::{alpha2_check, quotient_complex, SurfaceReport};
use cactus_core::rewrite::RewriteSystem;
use cactus_core::series::guess_series;
use cactus_core::{split_form, Presentation, TessBall, Word};

use crate::report::Report;

/// Options shared by every pipeline.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub radius: Option<u32>,
    pub tol: Option<f64>,
}

impl Settings {
    fn radius_or(&self, default: u32) -> u32 {
        self.radius.unwrap_or(default)
    }

    fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

pub trait Pipeline {
    fn name(&self) -> &'static str;
    fn run(&self, s: &Settings) -> Result<Report>;

    /// Whether `all` forwards its `--radius` (meant for the `J_4` ball).
    fn takes_j4_radius(&self) -> bool {
        true
    }
}

pub const J4_RADIUS: u32 = 8;
pub const J3_RADIUS: u32 = 10;
pub const GROWTH_RADIUS: u32 = 11;
pub const ALG_TOL: f64 = 1e-9;
pub const GEOM_TOL: f64 = 1e-6;

fn default_radius(group: &str) -> u32 {
    if group.starts_with("j3") {
        J3_RADIUS
    } else {
        J4_RADIUS
    }
}

fn j4_ball(s: &Settings) -> Result<TessBall> {
    Ok(TessBall::build(&Presentation::named("j4-23")?, s.radius_or(J4_RADIUS))?)
}

fn words(list: &[Word]) -> Value {
    list.iter().map(|w| w.to_string()).collect::<Vec<_>>().into()
}

pub struct Wp {
    pub group: String,
    pub words: Vec<String>,
}

impl Pipeline for Wp {
    fn name(&self) -> &'static str {
        "wp"
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        // full cactus groups go through the split form over the subgroup
        let (ball_group, split) = match self.group.as_str() {
            "j4" => ("j4-23", true),
            "j3" => ("j3-2", true),
            g => (g, false),
        };
        let p = Presentation::named(ball_group)?;
        let degree = p.degree();
        let parsed: Vec<Word> = self
            .words
            .iter()
            .map(|t| Word::parse(t, degree))
            .collect::<cactus_core::Result<_>>()?;
        let ball = TessBall::build(&p, s.radius_or(default_radius(ball_group)))?;
        let key = |w: &Word| -> Result<(u32, bool)> {
            if split {
                let f = split_form(w)?;
                Ok((ball.evaluate(&f.w)?, f.flip))
            } else {
                Ok((ball.evaluate(w)?, false))
            }
        };
        r.param("group", self.group.clone());
        r.param("words", self.words.clone());
        r.param("radius", ball.radius());
        let a = key(&parsed[0])?;
        let verdict = match parsed.get(1) {
            None => {
                if a == (ball.root(), false) {
                    "trivial"
                } else {
                    "nontrivial"
                }
            }
            Some(v) => {
                if key(v)? == a {
                    "equal"
                } else {
                    "not equal"
                }
            }
        };
        let mut normal = ball.geodesic(a.0).to_string();
        if a.1 {
            normal = format!("{normal} * s1{degree}");
        }
        r.metric("result", verdict);
        r.metric("geodesic", normal);
        r.line(verdict);
        Ok(r)
    }
}

pub struct Pi {
    pub word: String,
    pub degree: u8,
}

impl Pipeline for Pi {
    fn name(&self) -> &'static str {
        "pi"
    }

    fn run(&self, _: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let w = Word::parse(&self.word, self.degree)?;
        let p = w.pi();
        r.param("word", self.word.clone());
        r.param("degree", self.degree);
        r.metric("images", p.images().to_vec());
        r.metric("pure", w.is_pure());
        r.line(p.to_string());
        r.line(if w.is_pure() { "pure" } else { "not pure" });
        Ok(r)
    }
}

pub struct Ball {
    pub group: String,
}

impl Pipeline for Ball {
    fn name(&self) -> &'static str {
        "ball"
    }

    fn takes_j4_radius(&self) -> bool {
        self.group.starts_with("j4")
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let p = Presentation::named(&self.group)?;
        let ball = TessBall::build(&p, s.radius_or(default_radius(&self.group)))?;
        let sizes = ball.sphere_sizes();
        r.param("group", self.group.clone());
        r.metric("radius", ball.radius());
        r.metric("sphere_sizes", sizes.clone());
        r.metric("vertex_count", ball.vertex_count());
        r.metric("edge_count", ball.edge_count());
        r.metric("square_count", ball.squares().len());
        r.check_with(
            "structure",
            ball.check_structure().is_ok(),
            "consistent",
            ball.check_structure().err().map_or("consistent".to_string(), |e| e.to_string()),
        );
        match self.group.as_str() {
            "j4-23" => {
                let head: Vec<u64> = sizes.iter().take(3).copied().collect();
                r.check("sphere sizes at levels 0-2", json!([1, 5, 15]), head);
                let trusted = ball.vertices().filter(|&v| ball.is_trusted(v));
                let bad_degree = trusted.filter(|&v| ball.neighbors(v).count() != 5).count();
                let interior: Vec<_> = ball.vertices().filter(|&v| ball.is_interior(v)).collect();
                let bad_link = interior
                    .iter()
                    .filter(|&&v| ball.link_cycle(v).is_none_or(|c| c.len() != 5))
                    .count();
                r.metric("interior_vertices", interior.len());
                r.check("trusted vertices without degree 5", 0, bad_degree);
                r.check("interior vertices without a pentagon link", 0, bad_link);
            }
            "j3-2" => {
                let line = ball.squares().is_empty() && sizes.iter().skip(1).all(|&n| n == 2);
                r.check("ball is a path", true, line);
            }
            _ => {}
        }
        r.line(format!("sphere sizes {sizes:?}"));
        r.line(format!(
            "vertices {} edges {} squares {}",
            ball.vertex_count(),
            ball.edge_count(),
            ball.squares().len()
        ));
        Ok(r)
    }
}

pub struct Kb {
    pub group: String,
    pub cap: usize,
}

impl Pipeline for Kb {
    fn name(&self) -> &'static str {
        "kb"
    }

    fn run(&self, _: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let p = Presentation::named(&self.group)?;
        let sys = RewriteSystem::complete(&p, self.cap);
        r.param("group", self.group.clone());
        r.param("cap", self.cap);
        r.metric("status", sys.status().as_str());
        r.metric("rule_count", sys.len());
        let rules: Vec<String> = sys.rules().iter().map(|x| format!("{} -> {}", x.lhs, x.rhs)).collect();
        r.metric("rules", rules.clone());
        for l in rules {
            r.line(l);
        }
        r.line(format!("# {} rules, {}", sys.len(), sys.status().as_str()));
        Ok(r)
    }
}

pub struct Enumerate;

impl Pipeline for Enumerate {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn takes_j4_radius(&self) -> bool {
        false
    }

    /// `--radius` bounds the displacement here; the ball is built larger.
    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let bound = s.radius_or(4);
        let ball = TessBall::build(&Presentation::named("j4-23")?, (bound + 1).max(J4_RADIUS))?;
        let found = enumerate_pure(&ball, bound)?;
        let nontrivial: Vec<_> = found.iter().filter(|e| !(e.vertex == ball.root() && !e.form.flip)).collect();
        r.param("radius", bound);
        r.metric("nontrivial_count", nontrivial.len());
        let listed: Vec<Value> = nontrivial
            .iter()
            .map(|e| json!({"word": e.form.w.to_string(), "flip": e.form.flip, "displacement": e.displacement}))
            .collect();
        r.metric("elements", listed);
        for e in &nontrivial {
            r.line(format!("{} flip={} d={}", e.form.w, u8::from(e.form.flip), e.displacement));
        }
        if bound <= 3 {
            r.check("only the identity", 0, nontrivial.len());
        } else if bound == 4 {
            let m = match_reference_list(&ball, &found)?;
            r.check("nontrivial elements", 20, nontrivial.len());
            let missing: Vec<&str> = m.matches.iter().filter(|x| !x.found).map(|x| x.name.as_str()).collect();
            r.check("listed elements found", json!([]), missing);
            r.check("unmatched elements", 0, m.unmatched_found.len());
            r.check("flip 0 count", 6, m.flip_zero);
            r.check("flip 1 count", 14, m.flip_one);
            r.check("flip 0 exactly for g2, g5, g8", true, m.flips_as_expected);
            let named: Vec<Value> = m
                .matches
                .iter()
                .map(|x| json!({"name": x.name, "geodesic": ball.geodesic(x.vertex).to_string(), "flip": x.form.flip}))
                .collect();
            r.metric("named", named);
            r.line(format!("{} nontrivial elements matched to g1..g10", nontrivial.len()));
        }
        Ok(r)
    }
}

pub struct VerifyPresentation;

impl Pipeline for VerifyPresentation {
    fn name(&self) -> &'static str {
        "verify-presentation"
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let ball = j4_ball(s)?;
        let tol = s.tol_or(ALG_TOL);
        r.param("radius", ball.radius());
        r.param("tol", tol);
        let rt = realize(&ball, ALG_TOL)?;
        for c in verify_relators(&ball)? {
            r.check(&format!("{} relator {} is trivial", c.source, c.relator), true, c.passed());
            if c.source == "six" {
                let f = split_form(&c.relator.expand())?;
                let iso = rt.split_isometry(&ball, &f, tol)?;
                r.check_with(
                    &format!("relator {} acts as the identity", c.relator),
                    iso.is_identity(tol) && !iso.rev,
                    json!({"rev": false, "identity": true}),
                    json!({"rev": iso.rev, "identity": iso.is_identity(tol)}),
                );
            }
        }
        let six: Vec<GWord> = cactus_core::pure::six_relators();
        let left = tietze_eliminate(&six, &ELIMINATION_ORDER)?;
        let single = GWord::parse(SINGLE_RELATOR)?;
        let got: Vec<String> = left.iter().map(|g| g.to_string()).collect();
        let ok = left.len() == 1 && left[0].cyclic_key() == single.cyclic_key();
        r.check_with("elimination gives the single relator", ok, SINGLE_RELATOR, got);
        let c = check_relator(&ball, &single, "single")?;
        r.check("single relator is trivial", true, c.passed());
        let scan = minimal_length_scan(&ball, 3)?;
        r.check("words scanned up to length 3", 258, scan.words_scanned);
        r.check("short pure words", json!([]), words(&scan.short_pure));
        let not_min: Vec<String> = scan.not_minimal.iter().map(|(n, w)| format!("{n} = {w}")).collect();
        r.check("g_i equal to a shorter word", json!([]), not_min);
        r.line(format!("single relator {}", left.first().map_or("none".into(), |g| g.to_string())));
        Ok(r)
    }
}

pub struct Dirichlet {
    pub svg: Option<PathBuf>,
    pub depth: u32,
}

impl Pipeline for Dirichlet {
    fn name(&self) -> &'static str {
        "dirichlet"
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let ball = j4_ball(s)?;
        let tol = s.tol_or(GEOM_TOL);
        r.param("radius", ball.radius());
        r.param("tol", tol);
        let rt = realize(&ball, ALG_TOL)?;
        let q = quotient_complex(&ball)?;
        let cd = cellular_domain(&ball, &rt, &q, ALG_TOL)?;
        let d = &cd.domain;
        let angles: Vec<f64> = d.corners.iter().map(|c| c.angle).collect();
        let allowed = [2.0 * PI / 5.0, 3.0 * PI / 5.0, 4.0 * PI / 5.0];
        let off: Vec<f64> = angles
            .iter()
            .copied()
            .filter(|a| allowed.iter().all(|b| (a - b).abs() > tol))
            .collect();
        r.check("side count", 20, d.sides.len());
        r.check("angles outside 2pi/5, 3pi/5, 4pi/5", json!([]), off);
        let sum = d.angle_sum();
        r.check_with("angle sum", (sum - 12.0 * PI).abs() <= tol, 12.0 * PI, sum);
        let report = poincare_check(d, tol)?;
        r.check("pairing is a fixed-point-free involution", true, report.pairing_involutive);
        r.check("sides mapped onto partners", json!([]), report.bad_pairings.clone());
        let sums: Vec<f64> = report.cycles.iter().map(|c| c.angle_sum).collect();
        let bad_cycles = sums.iter().filter(|x| (*x - 2.0 * PI).abs() > tol).count();
        r.check("vertex cycles not summing to 2pi", 0, bad_cycles);
        r.check("cycles with nontrivial holonomy", 0, report.nontrivial_cycles.len());
        r.check("diagonal sides", 10, d.count_kind(SideKind::Diagonal));
        let mut cycle_words = Vec::new();
        let mut keys = BTreeSet::new();
        let mut all_trivial = true;
        for c in &report.cycles {
            let g = d
                .cycle_gword(c)
                .context("a vertex cycle uses an unnamed pairing")?;
            all_trivial &= check_relator(&ball, &g, "cycle")?.passed();
            keys.insert(g.cyclic_key());
            cycle_words.push(g.to_string());
        }
        let outline: BTreeSet<GWord> = cactus_core::pure::OUTLINE_RELATORS
            .iter()
            .map(|t| GWord::parse(t).map(|g| g.cyclic_key()))
            .collect::<cactus_core::Result<_>>()?;
        r.check("cycle relators are trivial", true, all_trivial);
        r.check("cycle relators match the outline list", true, keys == outline);

        let sides: Vec<Value> = d
            .sides
            .iter()
            .enumerate()
            .map(|(i, side)| {
                let e = &d.elements[side.element];
                json!({
                    "tag": e.name.map(|n| n.to_string()),
                    "kind": side.kind.as_str(),
                    "paired_with": d.pairing[i],
                })
            })
            .collect();
        r.metric("sides", sides);
        r.metric("angles", angles);
        r.metric("angle_units_pi_over_5", cd.angle_units.clone());
        r.metric("angle_sum", sum);
        r.metric("cycle_sums", sums);
        r.metric("cycle_words", cycle_words);
        r.metric("hub", cd.hub.clone());
        r.metric("cut_graphs_tried", cd.tried);
        r.metric("cut_graphs_accepted", cd.accepted);
        r.check_with("polygon is unique among cut graphs", cd.accepted == 1, 1, cd.accepted);
        let units: Vec<f64> = cd.angle_units.iter().map(|&u| units_to_angle(u)).collect();
        r.check_with(
            "measured angles equal counted angles",
            units.iter().zip(&d.corners).all(|(u, c)| (u - c.angle).abs() <= tol),
            "equal",
            "compared",
        );

        // the plain bisector intersection for comparison
        let pures = enumerate_pure(&ball, 4)?;
        let b = dirichlet(&ball, &rt, &pures, tol)?;
        let kinds: Vec<&str> = b.sides.iter().map(|x| x.kind.as_str()).collect();
        r.metric(
            "bisector_polygon",
            json!({
                "sides": b.sides.len(),
                "side_kinds": kinds,
                "angles": b.corners.iter().map(|c| c.angle).collect::<Vec<_>>(),
                "angle_sum": b.angle_sum(),
            }),
        );
        if let Some(path) = &self.svg {
            let svg = render_svg(&ball, &rt, Some(d), self.depth);
            fs::write(path, svg).with_context(|| format!("writing {}", path.display()))?;
            r.param("svg", path.display().to_string());
        }
        r.line(format!(
            "{} sides ({} edges, {} diagonals), angle sum {:.12} = 12pi",
            d.sides.len(),
            d.count_kind(SideKind::Edge),
            d.count_kind(SideKind::Diagonal),
            sum
        ));
        r.line(format!("bisector intersection alone has {} sides", b.sides.len()));
        Ok(r)
    }
}

fn surface_checks(r: &mut Report, c: &CellComplex2) -> Result<()> {
    let s = SurfaceReport::of(c)?;
    r.check("cell counts", json!([12, 30, 15]), json!([s.counts.0, s.counts.1, s.counts.2]));
    r.check("euler characteristic", -3, s.chi);
    r.check("closed", true, s.closed);
    r.check("connected", true, s.connected);
    r.check("orientable", false, s.orientable);
    r.check("classification", "N5", s.classification.clone());
    r.metric("V", s.counts.0);
    r.metric("E", s.counts.1);
    r.metric("F", s.counts.2);
    r.metric("chi", s.chi);
    r.metric("orientable", s.orientable);
    r.metric("classification", s.classification.clone());
    r.line(format!(
        "V={} E={} F={} chi={} orientable={} {}",
        s.counts.0, s.counts.1, s.counts.2, s.chi, s.orientable, s.classification
    ));
    Ok(())
}

pub struct Quotient;

impl Pipeline for Quotient {
    fn name(&self) -> &'static str {
        "quotient"
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let ball = j4_ball(s)?;
        let tol = s.tol_or(ALG_TOL);
        r.param("radius", ball.radius());
        let q = quotient_complex(&ball)?;
        surface_checks(&mut r, &q.complex)?;
        let rt = realize(&ball, ALG_TOL)?;
        let a = alpha2_check(&ball, &rt, tol)?;
        r.check("orientation-reversing element is pure", true, a.pure);
        r.check("orientation-reversing element acts freely", true, a.acts_freely);
        r.check("orientation-reversing element has rev", true, a.reverses_orientation);
        r.check("its square preserves orientation", true, a.square_preserves_orientation);
        Ok(r)
    }
}

pub struct X5 {
    pub verify_phi: bool,
}

impl Pipeline for X5 {
    fn name(&self) -> &'static str {
        "x5"
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let cc = build_config_complex(5)?;
        let (v, e, f) = cc.complex.counts();
        r.check("cell counts", json!([12, 30, 15]), json!([v, e, f]));
        let degrees: BTreeSet<usize> = (0..v).map(|i| cc.complex.degree(i)).collect();
        r.check("vertex degrees", json!([5]), degrees.into_iter().collect::<Vec<_>>());
        r.line(format!("X5 dual complex V={v} E={e} F={f}"));
        if self.verify_phi {
            let ball = j4_ball(s)?;
            let q = quotient_complex(&ball)?;
            let p = verify_phi(&cc, &q)?;
            r.check("vertex bijection", json!([12, 12]), json!([p.vertices.0, p.vertices.1]));
            r.check("edge bijection", json!([30, 30]), json!([p.edges.0, p.edges.1]));
            r.check("face bijection", json!([15, 15]), json!([p.faces.0, p.faces.1]));
            r.check("phi is a cellular isomorphism", true, p.passed());
            r.check("euler characteristics agree", true, p.chi_agree);
            r.metric("phi_failures", p.failures.clone());
            let rec = reconcile_printed(&cc)?;
            let printed: Vec<Value> = rec
                .squares
                .iter()
                .map(|sq| {
                    json!({
                        "printed": sq.printed.to_vec(),
                        "canonical": sq.canonical.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "is_cycle": sq.is_cycle,
                        "generated": sq.generated,
                    })
                })
                .collect();
            let missing: Vec<Vec<String>> = rec
                .missing
                .iter()
                .map(|m| m.iter().map(|c| c.to_string()).collect())
                .collect();
            r.metric(
                "printed_squares",
                json!({
                    "entries": printed,
                    "matched": rec.matched(),
                    "missing_from_print": missing,
                    "duplicates": rec.duplicates.clone(),
                    "exact": rec.exact(),
                }),
            );
            r.line(format!("phi verified: {}", p.passed()));
            r.line(format!("printed squares matching generated ones: {} of 15", rec.matched()));
            for sq in rec.squares.iter().filter(|s| !s.generated) {
                r.line(format!("  printed <{}> is not a generated square", sq.printed.join(", ")));
            }
            for m in &missing {
                r.line(format!("  generated <{}> is not printed", m.join(", ")));
            }
        }
        Ok(r)
    }
}

pub struct X4 {
    pub check_pj3: bool,
}

impl Pipeline for X4 {
    fn name(&self) -> &'static str {
        "x4"
    }

    fn takes_j4_radius(&self) -> bool {
        false
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let cc = build_config_complex(4)?;
        let (v, e, f) = cc.complex.counts();
        r.check("cell counts", json!([3, 3, 0]), json!([v, e, f]));
        r.line(format!("X4 dual complex V={v} E={e} F={f}"));
        if self.check_pj3 {
            let ball = TessBall::build(&Presentation::named("j3-2")?, s.radius_or(J3_RADIUS))?;
            r.param("radius", ball.radius());
            let p = pj3_check(&ball)?;
            r.check("ball is a path", true, p.is_line);
            r.check("orbit count", 3, p.orbit_count);
            r.check("quotient counts", json!([3, 3, 0]), json!([p.quotient_counts.0, p.quotient_counts.1, p.quotient_counts.2]));
            r.check("quotient is the X4 triangle", true, p.quotient_matches_x4);
            r.check("s12 s23 s12 s13 is pure", true, p.pure);
            r.check("s12 s23 s12 reverses 123", true, p.top_part_is_reversal);
            r.check("displacement", 3, p.displacement);
            r.check("acts freely", true, p.acts_freely);
            r.check("translations reach every orbit-mate", true, p.generates_deck_action);
            r.line(format!("pj3 check passed: {}", p.passed()));
        }
        Ok(r)
    }
}

pub struct Growth {
    pub group: String,
}

impl Pipeline for Growth {
    fn name(&self) -> &'static str {
        "growth"
    }

    fn takes_j4_radius(&self) -> bool {
        false
    }

    fn run(&self, s: &Settings) -> Result<Report> {
        let mut r = Report::new(self.name());
        let radius = s.radius_or(GROWTH_RADIUS);
        if radius < 10 {
            bail!("growth needs radius at least 10, got {radius}");
        }
        let p = Presentation::named(&self.group)?;
        let a = TessBall::build(&p, radius)?.sphere_sizes();
        let b = TessBall::build(&p, radius)?.sphere_sizes();
        r.param("group", self.group.clone());
        r.param("radius", radius);
        r.metric("sphere_sizes", a.clone());
        r.check("reproducible", true, a == b);
        match guess_series(&a) {
            Some(g) => {
                let valid = g.validated_terms > 0 && g.expand(a.len()) == a.iter().map(|&x| x as i64).collect::<Vec<_>>();
                r.check("series reproduces held-out terms", true, valid);
                r.metric("series", g.to_string());
                r.metric("numerator", g.numerator.clone());
                r.metric("denominator", g.denominator.clone());
                r.metric("validated_terms", g.validated_terms);
                r.line(format!("growth series {g}"));
            }
            None => {
                r.metric("series", Value::Null);
                r.line("no recurrence fits");
            }
        }
        r.line(format!("sphere sizes {a:?}"));
        Ok(r)
    }
}

/// Every pipeline `all` runs, with its default arguments.
pub fn registry() -> Vec<Box<dyn Pipeline>> {
    vec![
        Box::new(Ball { group: "j4-23".into() }),
        Box::new(Ball { group: "j3-2".into() }),
        Box::new(Kb {
            group: "j4-23".into(),
            cap: 4096,
        }),
        Box::new(Enumerate),
        Box::new(VerifyPresentation),
        Box::new(Dirichlet { svg: None, depth: 3 }),
        Box::new(Quotient),
        Box::new(X5 { verify_phi: true }),
        Box::new(X4 { check_pj3: true }),
        Box::new(Growth { group: "j4-23".into() }),
    ]
}
