//! The verification suites behind `verify`: every check operation of the
//! library, run on fixed and seeded random parameters.
//!
//! Each suite draws from its own ChaCha stream of the configured seed, so
//! the suites are independent, can run concurrently, and produce the same
//! report for the same seed.

use std::thread;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::fibbasis::{
    algebraic_relations_check, duality_check, example2_check, example3_check, golden_ratio_check, kernel_check,
    right_inverse_check, signatures_check, theorem3_check, theorem4_check, BasisKind, Family,
};
use crate::fps::{format_rational, random_rational, rat, Rational, Series};
use crate::polyfam::{family_row_check, root_form_check, trig_product_check, FamilyTag, DEFAULT_TOL};
use crate::riordan::{pseudo_eigen_check, verify_theorem1, RiordanPair, Side};
use crate::transforms::{
    catalan_power_check, even_odd_columns_check, pseudo_involution_check, type1_closed_form, type1_cs,
    type1_quadratic_check, type2_closed_form, type2_parity_check, type2_quadratic_check, type2_root_check, type2_tu,
    TypeOneContext, TypeTwoContext,
};

/// Bound on numerators and denominators of random rationals.
pub const RANDOM_BOUND: i64 = 20;

/// Every check operation of the library; the suites must cover exactly this list.
pub const MANIFEST: &[&str] = &[
    "verify_theorem1",
    "pseudo_eigen_check",
    "family_row_check",
    "root_form_check",
    "trig_product_check",
    "type1_quadratic_check",
    "type2_parity_check",
    "type2_quadratic_check",
    "type2_root_check",
    "catalan_power_check",
    "pseudo_involution_check",
    "even_odd_columns_check",
    "duality_check",
    "theorem3_check",
    "kernel_check",
    "right_inverse_check",
    "example2_check",
    "example3_check",
    "golden_ratio_check",
    "signatures_check",
    "theorem4_check",
    "algebraic_relations_check",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub order: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { order: 16, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub covers: &'static [&'static str],
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct Suite {
    pub name: &'static str,
    pub covers: &'static [&'static str],
    run: fn(&SuiteConfig, &mut ChaCha8Rng, &mut Tally),
}

/// Case counter; an `Err` from a check counts as a failure.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, label: impl FnOnce() -> String, outcome: Result<bool>) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(label()),
            Err(e) => self.failures.push(format!("{}: {e}", label())),
        }
    }
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng, RANDOM_BOUND);
        if !r.is_zero() {
            return r;
        }
    }
}

fn params(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    (random_rational(rng, RANDOM_BOUND), random_rational(rng, RANDOM_BOUND))
}

fn show(values: &[&Rational]) -> String {
    values.iter().map(|v| format_rational(v)).collect::<Vec<_>>().join(", ")
}

/// Random series with constant term 1.
pub fn random_unit_series<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Series {
    let mut coeffs = vec![Rational::one()];
    coeffs.extend((1..=order).map(|_| random_rational(rng, RANDOM_BOUND)));
    Series::new(coeffs, order)
}

fn riordan_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n = cfg.order;
    for i in 0..50 {
        let a = random_unit_series(rng, n);
        t.record(|| format!("Lagrange identities, random series #{i}"), verify_theorem1(&a, n).map(|r| r.holds()));
    }
    let den = Series::from_ints(&[1, -1, 1], n).inv().expect("unit constant term");
    let pair =
        RiordanPair::new(Series::from_ints(&[1, 0, -1], n).mul(&den), den.shift_up(1).truncate(n)).expect("g0 = 0");
    t.record(
        || "((1-x^2)/(1-x+x^2), x/(1-x+x^2)) P^-2".into(),
        pseudo_eigen_check(&pair, &rat(-2), n + 1, Side::Right),
    );
    t.record(
        || "identity with P^0".into(),
        pseudo_eigen_check(&RiordanPair::identity(n), &Rational::zero(), n + 1, Side::Left),
    );
}

fn polyfam_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let beta = random_rational(rng, RANDOM_BOUND);
    for tag in FamilyTag::ALL {
        for n in 0..=cfg.order {
            t.record(|| format!("row of {tag}_{n}, beta = {}", show(&[&beta])), family_row_check(tag, n, &beta));
        }
    }
}

fn roots_suite(_cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let positive = nonzero(rng).abs();
    for tag in [FamilyTag::C, FamilyTag::S, FamilyTag::D, FamilyTag::E] {
        for n in 1..=16 {
            t.record(
                || format!("roots of {tag}_{n}, beta = {}", show(&[&positive])),
                root_form_check(tag, n, &positive, DEFAULT_TOL),
            );
        }
    }
}

fn trig_suite(_cfg: &SuiteConfig, _rng: &mut ChaCha8Rng, t: &mut Tally) {
    for n in 1..=16 {
        t.record(|| format!("trigonometric products, n = {n}"), trig_product_check(n, DEFAULT_TOL));
    }
}

fn type1_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let order = cfg.order.max(24);
    let n_max = 12.min(order / 2);
    for _ in 0..5 {
        let (phi, beta) = params(rng);
        let label = show(&[&phi, &beta]);
        let ctx = match TypeOneContext::new(&phi, &beta, order) {
            Ok(ctx) => ctx,
            Err(e) => {
                t.record(|| format!("type 1 context ({label})"), Err(e));
                continue;
            }
        };
        t.record(|| format!("type 1 invariants ({label})"), ctx.invariants_hold());
        for n in 0..=n_max {
            let routes = type1_cs(&ctx, n).and_then(|cs| Ok(cs == type1_closed_form(&phi, &beta, n)?));
            t.record(|| format!("type 1 c/s routes, n = {n} ({label})"), routes);
            t.record(|| format!("type 1 quadratic, n = {n} ({label})"), type1_quadratic_check(&ctx, n));
        }
    }
}

fn type2_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let order = cfg.order.max(24);
    let n_max = 12.min(order / 2);
    for _ in 0..5 {
        let (phi, beta) = params(rng);
        let label = show(&[&phi, &beta]);
        let ctx = match TypeTwoContext::new(&phi, &beta, order) {
            Ok(ctx) => ctx,
            Err(e) => {
                t.record(|| format!("type 2 context ({label})"), Err(e));
                continue;
            }
        };
        t.record(|| format!("type 2 invariants ({label})"), ctx.invariants_hold());
        for n in 0..=n_max {
            let tu = type2_tu(&ctx, n);
            let parity = tu.as_ref().map(|(tp, up)| type2_parity_check(tp, up, n)).map_err(Clone::clone);
            t.record(|| format!("type 2 parity, n = {n} ({label})"), parity);
            let routes = tu.and_then(|tu| Ok(tu == type2_closed_form(&phi, &beta, n)?));
            t.record(|| format!("type 2 t/u routes, n = {n} ({label})"), routes);
            t.record(|| format!("type 2 quadratic, n = {n} ({label})"), type2_quadratic_check(&ctx, n));
            if n >= 1 {
                t.record(
                    || format!("type 2 factored rows, n = {n} ({label})"),
                    type2_root_check(&phi, &beta, n, DEFAULT_TOL),
                );
            }
        }
    }
}

fn catalan_suite(cfg: &SuiteConfig, _rng: &mut ChaCha8Rng, t: &mut Tally) {
    for k in -6i64..=6 {
        let order = cfg.order.max(2 * k.unsigned_abs() as usize + 4);
        t.record(|| format!("Catalan power k = {k}"), catalan_power_check(k, order));
    }
}

fn involution_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n_rows = cfg.order.max(2);
    for _ in 0..5 {
        let (phi, beta) = params(rng);
        let label = show(&[&phi, &beta]);
        match pseudo_involution_check(&phi, &beta, n_rows) {
            Ok(report) => {
                for r in report.relations {
                    t.record(|| format!("{} ({label})", r.name), Ok(r.holds));
                }
            }
            Err(e) => t.record(|| format!("pseudo-involutions ({label})"), Err(e)),
        }
        t.record(|| format!("even/odd columns ({label})"), even_odd_columns_check(&phi, &beta, n_rows));
    }
}

fn basis_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n_max = 12;
    let order = cfg.order.max(n_max);
    t.record(|| "duality, classic".into(), duality_check(&Family::Classic, n_max, order));
    t.record(|| "duality, reduced".into(), duality_check(&Family::Reduced, n_max, order));
    for _ in 0..3 {
        let (phi, beta) = params(rng);
        let family = Family::general(phi.clone(), beta.clone());
        t.record(|| format!("duality ({})", show(&[&phi, &beta])), duality_check(&family, n_max, order));
        for kind in [BasisKind::A(family.clone()), BasisKind::B(family)] {
            t.record(|| format!("rows of {kind}"), theorem3_check(&kind, n_max));
        }
    }
    for family in [Family::Classic, Family::Reduced] {
        for kind in [BasisKind::A(family.clone()), BasisKind::B(family)] {
            t.record(|| format!("rows of {kind}"), theorem3_check(&kind, n_max));
        }
    }
}

fn basis_transform_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let order = cfg.order.max(24);
    for i in 0..5 {
        let c = Series::new((0..=order).map(|_| random_rational(rng, RANDOM_BOUND)).collect(), order);
        t.record(|| format!("kernel, random c #{i}"), kernel_check(&c, order));
    }
    t.record(|| "right inverses".into(), right_inverse_check(16, cfg.order.max(16)));
    for n in 0..=8 {
        t.record(|| format!("(1+x)^{n} coordinates"), example2_check(n, cfg.order.max(12)));
    }
    let phi = nonzero(rng);
    for n in 0..=8 {
        t.record(
            || format!("radical identities, phi = {}, n = {n}", show(&[&phi])),
            example3_check(&phi, n, cfg.order),
        );
    }
    t.record(|| "golden ratio".into(), golden_ratio_check(12, DEFAULT_TOL));
    t.record(|| "sequence signatures".into(), signatures_check(cfg.order.max(10)));
}

fn basis_relations_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..5 {
        let phi = random_rational(rng, RANDOM_BOUND);
        let (b1, b2) = params(rng);
        t.record(|| format!("beta action ({})", show(&[&phi, &b1, &b2])), theorem4_check(&phi, &b1, &b2, 10));
    }
    let n = cfg.order.max(2);
    for _ in 0..3 {
        let (phi, beta) = params(rng);
        let label = show(&[&phi, &beta]);
        match algebraic_relations_check(&phi, &beta, n) {
            Ok(report) => {
                for r in report.relations {
                    t.record(|| format!("{} ({label})", r.name), Ok(r.holds));
                }
            }
            Err(e) => t.record(|| format!("basis relations ({label})"), Err(e)),
        }
    }
}

static SUITES: &[Suite] = &[
    Suite { name: "riordan", covers: &["verify_theorem1", "pseudo_eigen_check"], run: riordan_suite },
    Suite { name: "polyfam", covers: &["family_row_check"], run: polyfam_suite },
    Suite { name: "roots", covers: &["root_form_check"], run: roots_suite },
    Suite { name: "trig", covers: &["trig_product_check"], run: trig_suite },
    Suite { name: "type1", covers: &["type1_quadratic_check"], run: type1_suite },
    Suite {
        name: "type2",
        covers: &["type2_parity_check", "type2_quadratic_check", "type2_root_check"],
        run: type2_suite,
    },
    Suite { name: "catalan", covers: &["catalan_power_check"], run: catalan_suite },
    Suite {
        name: "involutions",
        covers: &["pseudo_involution_check", "even_odd_columns_check"],
        run: involution_suite,
    },
    Suite { name: "basis", covers: &["duality_check", "theorem3_check"], run: basis_suite },
    Suite {
        name: "basis-transform",
        covers: &[
            "kernel_check",
            "right_inverse_check",
            "example2_check",
            "example3_check",
            "golden_ratio_check",
            "signatures_check",
        ],
        run: basis_transform_suite,
    },
    Suite {
        name: "basis-relations",
        covers: &["theorem4_check", "algebraic_relations_check"],
        run: basis_relations_suite,
    },
];

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

impl Suite {
    pub fn run(&self, cfg: &SuiteConfig) -> SuiteReport {
        let index = SUITES.iter().position(|s| s.name == self.name).unwrap_or(0);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index as u64);
        let mut tally = Tally::default();
        (self.run)(cfg, &mut rng, &mut tally);
        SuiteReport { name: self.name, covers: self.covers, cases: tally.cases, failures: tally.failures }
    }
}

/// Runs every suite, one thread each; reports come back in suite order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    thread::scope(|scope| {
        let handles: Vec<_> = SUITES.iter().map(|s| scope.spawn(move || s.run(cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}
