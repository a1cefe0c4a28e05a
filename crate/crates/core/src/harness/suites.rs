use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{cx, Tally};
use super::{enumerate_int, enumerate_nat, subsets, Monoid, SuiteReport, UniverseSpec};
use crate::error::{Error, Result};
use crate::homs::{eps_conjugation, extend_in, hom_annihilating, hom_translation, hom_z2, refute_finite_generation};
use crate::int::{hclass_group, restriction_isometries, ElemID, HClassGroup};
use crate::iso_z::{IsoZ, Order};
use crate::nat::{BicyclicNF, ElemIN};
use crate::word::{decompose, decompose_filtered, parse, Generator};

/// A suite and the universes it runs over by default.
#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub about: &'static str,
    pub defaults: &'static [UniverseSpec],
}

const NAT: UniverseSpec = UniverseSpec::nat(5, 2);
const INT: UniverseSpec = UniverseSpec::int(2, 2);

/// Every suite, in the order `--all` runs them.
///
/// Some suites read the bounds differently: `lemma-2.7` uses S as the bound on
/// `|a|`; `lemma-2.9-oracle` uses B only; `remark-3.9` uses B as the largest
/// `k`; `bicyclic-oracle` uses B as the largest exponent; `refute-fg` uses the
/// generators `α, β, ε^[2..=B]`.
pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo { name: "assoc", about: "associativity of composition", defaults: &[NAT, INT] },
    SuiteInfo { name: "inverse-axioms", about: "x x' x = x, x' x x' = x', idempotents commute", defaults: &[NAT, INT] },
    SuiteInfo { name: "lemma-2.1", about: "deficiency bounds for products", defaults: &[INT] },
    SuiteInfo { name: "prop-2.2", about: "ab = 1 forces units, no bicyclic pair", defaults: &[INT] },
    SuiteInfo { name: "lemma-2.7", about: "Iso(Z) group law and element orders", defaults: &[UniverseSpec::int(0, 8)] },
    SuiteInfo {
        name: "lemma-2.9-oracle",
        about: "restriction isometries against brute-force search",
        defaults: &[UniverseSpec::int(4, 0)],
    },
    SuiteInfo { name: "lemma-3.3", about: "range gap equals domain gap; marker oracle", defaults: &[NAT] },
    SuiteInfo { name: "lemma-3.4", about: "gap(γδ) <= gap(δ) for γ in C_N", defaults: &[NAT] },
    SuiteInfo { name: "lemma-3.5", about: "gap(δγ) <= gap(δ) for γ in C_N", defaults: &[NAT] },
    SuiteInfo { name: "lemma-3.6", about: "gap <= k is closed under products", defaults: &[NAT] },
    SuiteInfo { name: "filtration", about: "filtration chain and base level", defaults: &[NAT] },
    SuiteInfo {
        name: "sigma-hom",
        about: "least group congruence map is a homomorphism; E-unitary; covers",
        defaults: &[NAT, INT],
    },
    SuiteInfo {
        name: "decompose-roundtrip",
        about: "eval(decompose(γ)) = γ and print/parse",
        defaults: &[UniverseSpec::nat(6, 3)],
    },
    SuiteInfo {
        name: "decompose-filtered",
        about: "words over a, b, e[k] for gap <= k, k = 2, 3, 4",
        defaults: &[UniverseSpec::nat(6, 3)],
    },
    SuiteInfo { name: "remark-3.9", about: "α^(k-l) ε^[k] β^(k-l) = ε^[l]", defaults: &[UniverseSpec::nat(12, 0)] },
    SuiteInfo { name: "example-2.13", about: "extension to Z is a monotone homomorphism", defaults: &[NAT] },
    SuiteInfo { name: "cor-2.12", about: "translation and Z2 images are homomorphisms", defaults: &[NAT] },
    SuiteInfo {
        name: "bicyclic-oracle",
        about: "normal-form product against composition",
        defaults: &[UniverseSpec::nat(6, 0)],
    },
    SuiteInfo {
        name: "refute-fg",
        about: "non-generation witness against products of <= 4 generators",
        defaults: &[UniverseSpec::nat(3, 0)],
    },
];

/// Maximum product length searched by `refute-fg`.
const REFUTE_MAX_FACTORS: usize = 4;

fn info(name: &str) -> Result<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_owned()))
}

/// Runs one suite over one universe, in the current rayon pool.
pub fn run_suite(name: &str, spec: &UniverseSpec) -> Result<SuiteReport> {
    let suite = info(name)?;
    if !suite.defaults.iter().any(|d| d.monoid == spec.monoid) {
        return Err(Error::UnsupportedMonoid { suite: name.to_owned(), monoid: spec.monoid.to_string() });
    }
    let start = Instant::now();
    let (b, s) = (spec.exception_bound, spec.shift_bound);
    let nat = || enumerate_nat(b, s).collect::<Vec<_>>();
    let int = || enumerate_int(b, s).collect::<Vec<_>>();
    let tally = match (suite.name, spec.monoid) {
        ("assoc", Monoid::Nat) => assoc(&nat()),
        ("assoc", Monoid::Int) => assoc(&int()),
        ("inverse-axioms", Monoid::Nat) => inverse_axioms(&nat()),
        ("inverse-axioms", Monoid::Int) => inverse_axioms(&int()),
        ("lemma-2.1", _) => deficiency_bounds(&int()),
        ("prop-2.2", _) => identity_products(&int()),
        ("lemma-2.7", _) => iso_z_orders(s),
        ("lemma-2.9-oracle", _) => restriction_oracle(b),
        ("lemma-3.3", _) => range_gap(&nat()),
        ("lemma-3.4", _) => cn_times_gap(&nat()),
        ("lemma-3.5", _) => gap_times_cn(&nat()),
        ("lemma-3.6", _) => gap_closure(&nat()),
        ("filtration", _) => filtration(&nat(), b),
        ("sigma-hom", Monoid::Nat) => sigma_hom_nat(&nat()),
        ("sigma-hom", Monoid::Int) => sigma_hom_int(&int()),
        ("decompose-roundtrip", _) => decompose_roundtrip(&nat()),
        ("decompose-filtered", _) => decompose_filtered_suite(&nat()),
        ("remark-3.9", _) => eps_conjugates(b),
        ("example-2.13", _) => extension_homs(&nat()),
        ("cor-2.12", _) => iso_z_images(&nat()),
        ("bicyclic-oracle", _) => bicyclic_oracle(b),
        ("refute-fg", _) => refute_fg(b),
        _ => unreachable!("suite table and dispatch disagree on {name}"),
    };
    Ok(tally.into_report(suite.name, *spec, start.elapsed()))
}

/// Which suites to run and how to override their default bounds.
#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    /// Empty means every suite.
    pub suites: Vec<String>,
    pub exception_bound: Option<i64>,
    pub shift_bound: Option<i64>,
}

/// Runs the selected suites over each of their default universes, with any
/// bound overrides applied. Reports come back in table order.
pub fn run_checks(opts: &CheckOptions) -> Result<Vec<SuiteReport>> {
    let selected: Vec<&SuiteInfo> = if opts.suites.is_empty() {
        SUITES.iter().collect()
    } else {
        let wanted: Vec<&SuiteInfo> = opts.suites.iter().map(|n| info(n)).collect::<Result<_>>()?;
        SUITES.iter().filter(|s| wanted.iter().any(|w| w.name == s.name)).collect()
    };
    let mut reports = Vec::new();
    for suite in selected {
        for default in suite.defaults {
            let spec = UniverseSpec {
                exception_bound: opts.exception_bound.unwrap_or(default.exception_bound),
                shift_bound: opts.shift_bound.unwrap_or(default.shift_bound),
                ..*default
            };
            reports.push(run_suite(suite.name, &spec)?);
        }
    }
    Ok(reports)
}

/// Splits the outer loop across the pool and merges the per-worker tallies.
fn par_each<T: Sync>(items: &[T], f: impl Fn(usize, &T, &mut Tally) + Sync + Send) -> Tally {
    items
        .par_iter()
        .enumerate()
        .fold(Tally::default, |mut t, (i, x)| {
            f(i, x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// The operations shared by both monoids.
trait Elem: Clone + Eq + Sync + Send + std::fmt::Display {
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn idempotent(&self) -> bool;
}

impl Elem for ElemIN {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn idempotent(&self) -> bool {
        self.is_idempotent()
    }
}

impl Elem for ElemID {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn idempotent(&self) -> bool {
        self.is_idempotent()
    }
}

fn assoc<E: Elem>(u: &[E]) -> Tally {
    let n = u.len();
    let products: Vec<E> = u.par_iter().flat_map_iter(|g| u.iter().map(move |h| g.op(h))).collect();
    par_each(u, |i, g, t| {
        for j in 0..n {
            let gh = &products[i * n + j];
            for (k, l) in u.iter().enumerate() {
                let left = gh.op(l);
                let right = g.op(&products[j * n + k]);
                t.check(left == right, || cx(format!("{g} {} {l}", u[j]), &left, &right));
            }
        }
    })
}

fn inverse_axioms<E: Elem>(u: &[E]) -> Tally {
    let idempotents: Vec<&E> = u.iter().filter(|e| e.idempotent()).collect();
    par_each(u, |_, g, t| {
        let gi = g.inv();
        let ggig = g.op(&gi).op(g);
        t.check(ggig == *g, || cx(format!("x x' x, x = {g}"), g, &ggig));
        let gigg = gi.op(g).op(&gi);
        t.check(gigg == gi, || cx(format!("x' x x', x = {g}"), &gi, &gigg));
        let e = g.op(&gi);
        t.check(e.idempotent() && e.op(&e) == e, || cx(format!("x x' idempotent, x = {g}"), "idempotent", &e));
        t.check(gi.inv() == *g, || cx(format!("(x')' = x, x = {g}"), g, gi.inv()));
        if g.idempotent() {
            for f in &idempotents {
                let (gf, fg) = (g.op(f), f.op(g));
                t.check(gf == fg, || cx(format!("ef = fe, e = {g}, f = {f}"), &gf, &fg));
            }
        }
    })
}

fn deficiency_bounds(u: &[ElemID]) -> Tally {
    par_each(u, |_, b, t| {
        for g in u {
            let (db, dg, d) = (b.deficiency(), g.deficiency(), b.compose(g).deficiency());
            let ok = db.max(dg) <= d && d <= db + dg;
            if d == db.max(dg) {
                t.case("lower-bound-attained");
            }
            if d == db + dg {
                t.case("upper-bound-attained");
            }
            t.check(ok, || cx(format!("{b} {g}"), format!("{} <= def <= {}", db.max(dg), db + dg), d));
        }
    })
}

fn identity_products(u: &[ElemID]) -> Tally {
    let one = ElemID::identity();
    par_each(u, |_, a, t| {
        for b in u {
            let ab = a.compose(b);
            if ab == one {
                t.case("identity-product");
                t.check(a.is_unit() && b.is_unit(), || cx(format!("{a} {b}"), "both units", "non-unit factor"));
                let ba = b.compose(a);
                t.check(ba == one, || cx(format!("{a} {b}"), "ba = 1", &ba));
            } else {
                t.instances += 1;
            }
        }
    })
}

fn iso_z_orders(bound: i64) -> Tally {
    let units: Vec<IsoZ> = (-bound..=bound).flat_map(|a| [IsoZ::translation(a), IsoZ::reflection(a)]).collect();
    par_each(&units, |_, &g, t| {
        // brute force: first power returning to the identity within 16 steps
        let mut power = g;
        let mut found = None;
        for n in 1..=16 {
            if power.is_identity() {
                found = Some(n);
                break;
            }
            power = power.compose(g);
        }
        let brute = match found {
            Some(1) => Order::One,
            Some(2) => Order::Two,
            Some(n) => unreachable!("Iso(Z) has no elements of order {n}"),
            None => Order::Infinite,
        };
        t.case(match brute {
            Order::One => "order-1",
            Order::Two => "order-2",
            Order::Infinite => "order-infinite",
        });
        t.check(g.order() == brute, || cx(g, brute, g.order()));
        let id = IsoZ::IDENTITY;
        t.check(g.compose(id) == g && id.compose(g) == g, || cx(g, "identity law", "violated"));
        t.check(g.compose(g.inverse()) == id && g.inverse().compose(g) == id, || cx(g, "inverse law", "violated"));
        for &h in &units {
            for &k in &units {
                let (l, r) = (g.compose(h).compose(k), g.compose(h.compose(k)));
                t.check(l == r, || cx(format!("{g:?} {h:?} {k:?}"), l, r));
            }
        }
    })
}

fn restriction_oracle(bound: i64) -> Tally {
    let sets: Vec<_> = subsets(-bound, bound).collect();
    let window = 2 * bound + 2;
    par_each(&sets, |_, exc, t| {
        let Some(reach) = exc.iter().map(i64::abs).max() else {
            t.case("full-units");
            t.check(hclass_group(exc) == HClassGroup::FullUnits, || {
                cx("{}", "FullUnits", format!("{:?}", hclass_group(exc)))
            });
            t.check(restriction_isometries(exc) == Err(Error::FullUnitsCase), || cx("{}", "FullUnitsCase", "a list"));
            return;
        };
        let a_bound = 2 * reach + 2;
        // brute force: isometries preserving the exception set on the window
        let mut brute: Vec<ElemID> = (-a_bound..=a_bound)
            .flat_map(|a| [IsoZ::translation(a), IsoZ::reflection(a)])
            .filter(|g| (-window..=window).all(|x| exc.contains(x) == exc.contains(g.apply(x))))
            .map(|g| ElemID::new(g, exc.clone()))
            .collect();
        brute.sort();
        let mut got = restriction_isometries(exc).unwrap_or_default();
        got.sort();
        t.check(got == brute, || cx(exc, format!("{brute:?}"), format!("{got:?}")));
        let class = hclass_group(exc);
        let expected = match (brute.len(), exc.symmetry_center()) {
            (1, None) => Some(HClassGroup::Trivial),
            (2, Some(center)) => Some(HClassGroup::Z2 { center }),
            _ => None,
        };
        t.case(match class {
            HClassGroup::Trivial => "trivial",
            HClassGroup::Z2 { .. } => "z2",
            HClassGroup::FullUnits => "full-units",
        });
        t.check(expected == Some(class), || cx(exc, format!("{expected:?}"), format!("{class:?}")));
    })
}

/// Marker oracle straight from the definitions, scanning a window of ℕ.
fn brute_markers(g: &ElemIN) -> (i64, i64) {
    let top = g.exceptions().max_elem().unwrap_or(0) + 2;
    let in_dom = |x: i64| g.apply(x).is_some();
    let low = (1..=top).find(|&x| in_dom(x)).expect("cofinite domain");
    let high = (1..=top).find(|&n| in_dom(n) && (n..=top).all(in_dom)).expect("cofinite domain");
    (low, high)
}

fn range_gap(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        let m = g.markers();
        t.check(m.nr_high - m.nr_low == m.nd_high - m.nd_low, || cx(g, m.nd_high - m.nd_low, m.nr_high - m.nr_low));
        let (low, high) = brute_markers(g);
        t.check((m.nd_low, m.nd_high) == (low, high), || {
            cx(g, format!("{low},{high}"), format!("{},{}", m.nd_low, m.nd_high))
        });
        let (rl, rh) = (g.apply(low).expect("in domain"), g.apply(high).expect("in domain"));
        t.check((m.nr_low, m.nr_high) == (rl, rh), || {
            cx(g, format!("{rl},{rh}"), format!("{},{}", m.nr_low, m.nr_high))
        });
    })
}

fn cn_times_gap(u: &[ElemIN]) -> Tally {
    let cn: Vec<&ElemIN> = u.iter().filter(|g| g.is_in_cn()).collect();
    par_each(u, |_, d, t| {
        for g in &cn {
            let gd = g.compose(d);
            t.case(if d.is_in_cn() {
                "delta-in-cn"
            } else if gd.is_in_cn() {
                "product-in-cn"
            } else {
                "general"
            });
            t.check(gd.gap() <= d.gap(), || cx(format!("{g} {d}"), format!("<= {}", d.gap()), gd.gap()));
        }
    })
}

fn gap_times_cn(u: &[ElemIN]) -> Tally {
    let cn: Vec<&ElemIN> = u.iter().filter(|g| g.is_in_cn()).collect();
    par_each(u, |_, d, t| {
        for g in &cn {
            let dg = d.compose(g);
            t.case(if d.is_in_cn() {
                "delta-in-cn"
            } else if dg.is_in_cn() {
                "product-in-cn"
            } else {
                "general"
            });
            t.check(dg.gap() <= d.gap(), || cx(format!("{d} {g}"), format!("<= {}", d.gap()), dg.gap()));
        }
    })
}

fn gap_closure(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        for d in u {
            let gd = g.compose(d);
            let (mg, md) = (g.markers(), d.markers());
            let general = !g.is_in_cn() && !d.is_in_cn() && !gd.is_in_cn();
            for k in 2..=5 {
                if g.gap() > k || d.gap() > k {
                    continue;
                }
                if general {
                    t.case(match (mg.nr_low <= md.nd_low, mg.nr_high <= md.nd_high) {
                        (true, true) => "case-1",
                        (false, true) => "case-2",
                        (true, false) => "case-3",
                        (false, false) => "case-4",
                    });
                }
                t.check(gd.gap() <= k, || cx(format!("k={k} {g} {d}"), format!("<= {k}"), gd.gap()));
            }
        }
    })
}

fn filtration(u: &[ElemIN], bound: i64) -> Tally {
    par_each(u, |_, g, t| {
        for k in 0..=bound + 1 {
            t.check(!g.in_filtration(k) || g.in_filtration(k + 1), || cx(format!("{g} k={k}"), "in level k+1", "not"));
        }
        t.check(g.in_filtration(0) == g.is_in_cn(), || cx(g, g.is_in_cn(), g.in_filtration(0)));
        t.check(g.in_filtration(1) == g.is_in_cn(), || cx(g, g.is_in_cn(), g.in_filtration(1)));
        t.check(g.in_filtration(g.gap()) && (g.gap() == 0 || !g.in_filtration(g.gap() - 1)), || {
            cx(g, "least level = gap", "mismatch")
        });
    })
}

fn sigma_hom_nat(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        for h in u {
            let s = g.compose(h).sigma();
            t.check(s == g.sigma() + h.sigma(), || cx(format!("{g} {h}"), g.sigma() + h.sigma(), s));
            // E-unitary: above an idempotent means idempotent
            if h.is_idempotent() && h.natural_le(g) {
                t.check(g.is_idempotent(), || cx(format!("{h} <= {g}"), "idempotent", g));
            }
            if h.sigma() == g.sigma() {
                let cover = g.f_cover();
                t.check(h.natural_le(&cover), || cx(format!("{h} vs cover of {g}"), &cover, "not above"));
            }
        }
        t.check(g.natural_le(&g.f_cover()), || cx(g, g.f_cover(), "not above"));
    })
}

fn sigma_hom_int(u: &[ElemID]) -> Tally {
    par_each(u, |_, g, t| {
        let cover = ElemID::from_unit(g.unit_cover());
        t.check(g.natural_le(&cover), || cx(g, &cover, "not above"));
        for h in u {
            let s = g.compose(h).sigma();
            let expected = g.sigma().compose(h.sigma());
            t.check(s == expected, || cx(format!("{g} {h}"), expected, s));
            if h.is_idempotent() && h.natural_le(g) {
                t.check(g.is_idempotent(), || cx(format!("{h} <= {g}"), "idempotent", g));
            }
        }
    })
}

fn decompose_roundtrip(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        let w = decompose(g);
        let back = w.eval();
        t.check(back == *g, || cx(format!("{g} via {w}"), g, &back));
        let printed = w.to_string();
        match parse(&printed) {
            Ok(p) if w.is_empty() => t.check(p.eval() == *g, || cx(&printed, g, p.eval())),
            Ok(p) => t.check(p == w, || cx(&printed, &printed, &p)),
            Err(e) => t.check(false, || cx(&printed, "parses", e)),
        }
    })
}

fn decompose_filtered_suite(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        for k in 2..=4i64 {
            match decompose_filtered(g, k) {
                Ok(w) => {
                    t.case(match k {
                        2 => "k=2",
                        3 => "k=3",
                        _ => "k=4",
                    });
                    let back = w.eval();
                    t.check(back == *g, || cx(format!("{g} k={k} via {w}"), g, &back));
                    let alphabet_ok =
                        w.alphabet().iter().all(|x| matches!(x, Generator::A | Generator::B) || *x == Generator::E(k));
                    t.check(alphabet_ok, || cx(format!("{g} k={k}"), format!("a, b, e[{k}]"), &w));
                }
                Err(Error::NotInFiltration { .. }) => {
                    t.check(g.gap() > k, || cx(format!("{g} k={k}"), "a word", "rejected"))
                }
                Err(e) => t.check(false, || cx(format!("{g} k={k}"), "a word", e)),
            }
        }
    })
}

fn eps_conjugates(max_k: i64) -> Tally {
    let pairs: Vec<(i64, i64)> = (3..=max_k).flat_map(|k| (2..k).map(move |l| (k, l))).collect();
    par_each(&pairs, |_, &(k, l), t| {
        let got = eps_conjugation(k, l).expect("indices in range");
        let want = ElemIN::eps(l).expect("l >= 2");
        t.check(got == want, || cx(format!("k={k} l={l}"), &want, &got));
    })
}

fn extension_homs(u: &[ElemIN]) -> Tally {
    par_each(u, |_, g, t| {
        for n in [0, -1, -2] {
            let fg = extend_in(g, n).expect("n <= 0");
            t.check(fg.is_monotone(), || cx(format!("{g} n={n}"), "monotone", format!("{fg:?}")));
            let window_ok = (n - 3..=g.exceptions().max_elem().unwrap_or(0) + 4)
                .all(|x| fg.apply(x) == if x <= n { Some(x) } else { g.apply(x) });
            t.check(window_ok, || cx(format!("{g} n={n}"), "pointwise extension", format!("{fg:?}")));
            for h in u {
                let fh = extend_in(h, n).expect("n <= 0");
                let lhs = extend_in(&g.compose(h), n).expect("n <= 0");
                let rhs = fg.compose(&fh);
                t.check(lhs == rhs, || cx(format!("{g} {h} n={n}"), format!("{lhs:?}"), format!("{rhs:?}")));
            }
        }
    })
}

fn iso_z_images(u: &[ElemIN]) -> Tally {
    let mut tally = par_each(u, |_, g, t| {
        for h in u {
            let gh = g.compose(h);
            let (l, r) = (hom_translation(&gh), hom_translation(g).compose(&hom_translation(h)));
            t.check(l == r, || cx(format!("translation {g} {h}"), &l, &r));
            let (l, r) = (hom_z2(&gh), hom_z2(g).compose(&hom_z2(h)));
            t.check(l == r, || cx(format!("z2 {g} {h}"), &l, &r));
            let (l, r) = (hom_annihilating(&gh), hom_annihilating(g).compose(&hom_annihilating(h)));
            t.check(l == r, || cx(format!("annihilating {g} {h}"), &l, &r));
        }
        let unit = hom_translation(g).unit_cover();
        let expected = if g.sigma() == 0 { Order::One } else { Order::Infinite };
        t.check(unit.order() == expected, || cx(g, expected, unit.order()));
    });
    let z2_image: BTreeSet<ElemID> = u.iter().map(hom_z2).collect();
    tally.check(z2_image.len() == 2, || cx("image of hom_z2", 2, z2_image.len()));
    let alpha_order = hom_translation(&ElemIN::alpha()).unit_cover().order();
    tally.check(alpha_order == Order::Infinite, || cx("order of translation image of α", Order::Infinite, alpha_order));
    tally
}

fn bicyclic_oracle(max_exp: i64) -> Tally {
    let max_exp = max_exp.max(0) as u64;
    let nfs: Vec<BicyclicNF> = (0..=max_exp).flat_map(|k| (0..=max_exp).map(move |l| BicyclicNF::new(k, l))).collect();
    par_each(&nfs, |_, &x, t| {
        let ex = ElemIN::from_bicyclic(x);
        t.check(ex.to_bicyclic() == Some(x), || {
            cx(format!("{x:?}"), format!("{x:?}"), format!("{:?}", ex.to_bicyclic()))
        });
        for &y in &nfs {
            let lhs = ElemIN::from_bicyclic(x * y);
            let rhs = ex.compose(&ElemIN::from_bicyclic(y));
            t.check(lhs == rhs, || cx(format!("{x:?} {y:?}"), &lhs, &rhs));
        }
    })
}

fn refute_fg(max_eps: i64) -> Tally {
    let mut gens = vec![ElemIN::alpha(), ElemIN::beta()];
    gens.extend((2..=max_eps).map(|k| ElemIN::eps(k).expect("k >= 2")));
    let mut t = Tally::default();
    let witness = refute_finite_generation(&gens).expect("non-empty generators");
    let k = witness.bound_k;
    t.check(witness.element.gap() == k + 1 && witness.certificate == k + 1, || {
        cx("witness gap", k + 1, witness.element.gap())
    });
    // breadth-first over all words of length 1..=4 (no deduplication)
    let mut layer: Vec<ElemIN> = vec![ElemIN::identity()];
    for _ in 0..REFUTE_MAX_FACTORS {
        let next: Vec<ElemIN> = layer.par_iter().flat_map_iter(|p| gens.iter().map(move |g| p.compose(g))).collect();
        let part = par_each(&next, |_, p, t| {
            t.check(*p != witness.element, || cx("product of generators", "not the witness", p));
            t.check(p.gap() <= k, || cx(format!("product {p}"), format!("gap <= {k}"), p.gap()));
        });
        t = t.merge(part);
        layer = next;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run_suite("nope", &NAT), Err(Error::UnknownSuite(_))));
        assert!(matches!(run_suite("lemma-3.3", &INT), Err(Error::UnsupportedMonoid { .. })));
    }

    #[test]
    fn small_universes_pass() {
        for suite in SUITES {
            for d in suite.defaults {
                let spec =
                    UniverseSpec { exception_bound: d.exception_bound.min(3), shift_bound: d.shift_bound.min(1), ..*d };
                let spec = if suite.name == "remark-3.9" { UniverseSpec::nat(6, 0) } else { spec };
                let r = run_suite(suite.name, &spec).unwrap();
                assert!(r.passed, "{r}");
                assert!(r.instances > 0, "{r}");
            }
        }
    }

    #[test]
    fn brute_markers_agree_on_examples() {
        let g = ElemIN::new(2, [1, 3].into()).unwrap();
        assert_eq!(brute_markers(&g), (2, 4));
        assert_eq!(brute_markers(&ElemIN::identity()), (1, 1));
        assert_eq!(brute_markers(&ElemIN::beta()), (2, 2));
    }
}
