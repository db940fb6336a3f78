//! The acceptance criteria and the property checks they share with the
//! proptest suites. Each criterion returns a one-line detail on success and
//! the first failure otherwise.

use std::collections::HashSet;
use std::fmt::Display;
use std::sync::Arc;
use std::time::{Duration, Instant};

use bifree::biset::{BisetElement, BisetPair, DoubleBurnsideRing};
use bifree::burnside::BurnsideElement;
use bifree::group::{build_group, isomorphisms, GroupContext};
use bifree::units::{
    find_frobenius_complement, frobenius_units, principal_iso, search_orthogonal, structure, units_of, verify_two_sided,
};
use proptest::prelude::*;
use proptest::sample::select;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{brute_normalizer_count, context, naive_units, product, ring, table, CAP, SMALL_GROUPS};

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

/// Groups for the mixed-pair biset checks.
pub const BISET_GROUPS: [&str; 4] = ["C2", "C3", "S3", "C2xC2"];

/// Groups whose complete unit sets feed the unit invariants.
pub const UNIT_GROUPS: [&str; 11] = ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "D8", "Q8", "A4"];

pub const NILPOTENT_GROUPS: [&str; 8] = ["C2", "C3", "C4", "C5", "C2xC2", "C6", "D8", "Q8"];

pub fn a4_headline() -> Outcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(err)?;
    let detail = pool.install(|| -> Outcome {
        let ring = Arc::new(DoubleBurnsideRing::new(GroupContext::new(
            build_group("A4", CAP).map_err(err)?,
        )));
        let burnside = ring.burnside();
        let b_units = burnside.unit_group();
        let units = units_of(&ring).map_err(err)?;
        let s = structure(&ring, &units).map_err(err)?;
        ensure!(b_units.len() == 4, "|B(A4)^×| = {}", b_units.len());
        ensure!(s.lambda.len() == 8, "|Λ| = {}", s.lambda.len());
        ensure!(units.len() == 16, "{} orthogonal units", units.len());
        for u in &b_units {
            ensure!(burnside.multiply(u, u) == burnside.one(), "{u:?} does not square to 1");
        }
        for u in &units {
            let square = ring.mul(&u.element, &u.element).map_err(err)?;
            ensure!(
                square == ring.identity(),
                "{} does not square to [G]",
                u.element.to_json()
            );
        }
        ensure!(
            s.rank == Some(4) && s.lambda_rank == Some(3),
            "ranks {:?} {:?}",
            s.rank,
            s.lambda_rank
        );
        Ok("|B^×| = 4, |Λ| = 8, |B^Δ_∘| = 16, ranks 2/3/4".to_string())
    })?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?} single-threaded");
    Ok(format!("{detail}, {:.2?} single-threaded", elapsed))
}

pub fn a4_burnside_generators() -> Outcome {
    let ctx = context("A4");
    let lattice = ctx.lattice();
    let class_of_order = |n: usize| (0..lattice.len()).find(|&r| lattice.class(r).order() == n).unwrap();
    let (e, k, h, g) = (
        class_of_order(1),
        class_of_order(2),
        class_of_order(3),
        class_of_order(12),
    );
    let a4 = ring("A4");
    let tom = a4.burnside();
    let basis = |r: usize| tom.basis(r);
    let minus_one = basis(g).scale(-1);
    let u = &(&(&basis(g) - &basis(h).scale(2)) - &basis(k)) + &basis(e);
    for x in [&minus_one, &u] {
        ensure!(tom.is_unit(x), "{:?} is not a unit", x.coeffs);
        ensure!(tom.multiply(x, x) == tom.one(), "{:?} does not square to 1", x.coeffs);
    }
    let mut generated: Vec<BurnsideElement> = vec![tom.one()];
    let mut i = 0;
    while i < generated.len() {
        for x in [&minus_one, &u] {
            let y = tom.multiply(&generated[i], x);
            if !generated.contains(&y) {
                generated.push(y);
            }
        }
        i += 1;
    }
    generated.sort();
    let all = tom.unit_group();
    ensure!(generated == all, "generated {} of {} units", generated.len(), all.len());
    Ok(format!(
        "−[G/G] and [G/G]−2[G/H]−[G/K]+[G/E] generate all {} units",
        all.len()
    ))
}

pub fn nilpotent_structure() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for spec in NILPOTENT_GROUPS {
        let ring = ring(spec);
        ensure!(ring.group().group().is_nilpotent(), "{spec} is not nilpotent");
        let units = units_of(&ring).map_err(err)?;
        let burnside = ring.burnside().unit_group();
        let out = ring.group().out().order();
        ensure!(
            units.len() == burnside.len() * out,
            "{spec}: {} units, |B^×|·|Out| = {}·{out}",
            units.len(),
            burnside.len()
        );
        if let Some(u) = units.iter().find(|u| !u.is_uniform()) {
            return Err(format!("{spec}: {} is not uniform", u.element.to_json()));
        }
        let mut products = HashSet::new();
        for b in &burnside {
            for c in 0..out {
                let p = ring.mul(&ring.iota(b), &ring.eta(c)).map_err(err)?;
                products.insert(p.coeffs().to_vec());
            }
        }
        let found: HashSet<Vec<i64>> = units.iter().map(|u| u.element.coeffs().to_vec()).collect();
        ensure!(found == products, "{spec}: units differ from ι(B^×)·η(Out)");
        sizes.push(format!("{spec}:{}", units.len()));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{} in {:.2?}", sizes.join(" "), elapsed))
}

pub fn odd_order_nilpotent() -> Outcome {
    let c3 = ring("C3");
    let s = structure(&c3, &units_of(&c3).map_err(err)?).map_err(err)?;
    ensure!(
        s.order == 4 && s.abelian && s.exponent == 2,
        "C3: order {} exponent {}",
        s.order,
        s.exponent
    );

    let c5 = ring("C5");
    let units = units_of(&c5).map_err(err)?;
    let s = structure(&c5, &units).map_err(err)?;
    ensure!(
        s.order == 8 && s.abelian && s.exponent == 4,
        "C5: order {} exponent {}",
        s.order,
        s.exponent
    );
    ensure!(s.eta.len() == 4, "|Out(C5)| = {}", s.eta.len());
    let power = |a: usize, k: usize| (1..k).fold(a, |x, _| s.table[x][a]);
    let cyclic = s
        .eta
        .iter()
        .any(|&e| power(e, 2) != s.identity && power(e, 4) == s.identity);
    ensure!(cyclic, "η(Out(C5)) has no element of order 4");
    let minus = c5.identity().neg();
    ensure!(units.iter().any(|u| u.element == minus), "−[G] missing for C5");
    Ok("C3: Klein four; C5: {±1} × C4 of order 8".into())
}

pub fn frobenius_a4() -> Outcome {
    let ring = ring("A4");
    let h = find_frobenius_complement(ring.group()).ok_or("no Frobenius complement in A4")?;
    ensure!(h.order() == 3, "complement of order {}", h.order());
    let report = frobenius_units(&ring, &h).map_err(err)?;
    ensure!(report.automorphisms == 2, "|Aut(C3)| = {}", report.automorphisms);
    ensure!(report.homomorphism, "γ_α·γ_β ≠ γ_{{αβ}}");
    ensure!(report.injective, "j is not injective on Out(C3)");
    let twist = report
        .units
        .iter()
        .find(|u| u.order != 1)
        .ok_or("no unit for the inversion automorphism")?;
    ensure!(twist.order == 2, "γ_α has order {}", twist.order);
    ensure!(twist.orthogonal, "γ_α is not orthogonal");
    ensure!(!twist.uniform, "γ_α is uniform");
    ensure!(twist.in_lambda, "γ_α is not in Λ");
    ensure!(!twist.in_iota, "γ_α lies in ι(B^×)");
    ensure!(twist.dual_is_inverse_twist, "γ_α° ≠ γ_{{α^-1}}");
    Ok(format!("k = {}, γ_α of order 2, non-uniform, in Λ \\ ι(B^×)", report.k))
}

pub fn non_isomorphic_emptiness() -> Outcome {
    let mut detail = Vec::new();
    for (g, h, empty) in [
        ("C4", "C2xC2", true),
        ("C2xC2", "C4", true),
        ("C6", "S3", true),
        ("S3", "C6", true),
        ("S3", "S3", false),
    ] {
        let pair = BisetPair::new(context(g), context(h));
        let units = search_orthogonal(&pair, CAP).map_err(err)?;
        ensure!(units.is_empty() == empty, "({g}, {h}): {} units", units.len());
        detail.push(format!("({g},{h}):{}", units.len()));
    }
    Ok(detail.join(" "))
}

pub fn cross_algorithm(seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..200 {
        let pick = |rng: &mut StdRng| BISET_GROUPS[rng.gen_range(0..BISET_GROUPS.len())];
        let (g, h, k) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let (left, right) = (table(g, h), table(h, k));
        let i = rng.gen_range(0..left.len());
        let j = rng.gen_range(0..right.len());
        let a = BisetElement::basis(left.clone(), i);
        let b = BisetElement::basis(right.clone(), j);
        let p = product(g, h, k);
        let mackey = p.multiply(&a, &b).map_err(err)?.marks();
        let theorem = p.tensor_marks(&a, &b).map_err(err)?;
        ensure!(
            mackey == theorem,
            "({g},{h},{k}) basis {i}·{j}: {mackey:?} vs {theorem:?}"
        );
    }

    let mut pairs_checked = 0;
    for g in BISET_GROUPS {
        let ring = ring(g);
        let tom = ring.burnside();
        let lattice = ring.group().lattice();
        let mut xs: Vec<BurnsideElement> = (0..tom.len()).map(|r| tom.basis(r)).collect();
        for _ in 0..5 {
            xs.push(BurnsideElement {
                coeffs: (0..tom.len()).map(|_| rng.gen_range(-3..=3)).collect(),
            });
        }
        for r in 0..lattice.len() {
            let centralizer = lattice.class(r).centralizer.order() as i64;
            for x in &xs {
                let lhs = ring.iota(x).mark_at(ring.diagonal_class(r));
                let rhs = centralizer * tom.marks(x).values[r];
                ensure!(lhs == rhs, "{g}: Φ_Δ(R#{r})(ι({:?})) = {lhs}, expected {rhs}", x.coeffs);
                pairs_checked += 1;
            }
        }
    }

    let mut classes_checked = 0;
    for g in BISET_GROUPS {
        for h in BISET_GROUPS {
            let t = table(g, h);
            let (gg, hh) = (t.left().group(), t.right().group());
            for (k, c) in t.classes().iter().enumerate() {
                let brute = brute_normalizer_count(gg, hh, &c.diagonal);
                let via_alpha_inv = c.n_alpha_inv * c.right_centralizer;
                let via_alpha = c.left_centralizer * c.n_alpha;
                ensure!(
                    brute == via_alpha_inv && brute == via_alpha && brute == c.normalizer_order,
                    "({g},{h}) class {k}: brute {brute}, |N_α^-1||C_H(S)| = {via_alpha_inv}, |C_G(R)||N_α| = {via_alpha}"
                );
                classes_checked += 1;
            }
        }
    }
    Ok(format!(
        "200 basis pairs agree; {pairs_checked} (R, x) pairs; {classes_checked} twisted classes"
    ))
}

pub fn oracle_equivalence(groups: &[&str]) -> Outcome {
    let mut detail = Vec::new();
    for &spec in groups {
        let ring = ring(spec);
        ensure!(ring.group().order() <= 8, "{spec} has order above 8");
        let searched: Vec<Vec<i64>> = units_of(&ring)
            .map_err(err)?
            .iter()
            .map(|u| u.element.coeffs().to_vec())
            .collect();
        let naive = naive_units(&ring);
        ensure!(
            searched == naive,
            "{spec}: search found {}, naive found {}",
            searched.len(),
            naive.len()
        );
        detail.push(format!("{spec}:{}", naive.len()));
    }
    Ok(detail.join(" "))
}

/// Checks every property suite: exhaustive ones directly, random ones with
/// a deterministic proptest runner.
pub fn property_suites(cases: u32) -> Outcome {
    let mut names = Vec::new();
    for (name, check) in [
        (
            "group axioms and lattice",
            group_core_exhaustive as fn() -> Result<(), String>,
        ),
        ("burnside exhaustive", burnside_exhaustive),
        ("mark divisibility on basis", divisibility_on_basis),
        ("unit invariants", unit_invariants),
    ] {
        check().map_err(|e| format!("{name}: {e}"))?;
        names.push(name);
    }
    run(cases, "burnside marks homomorphism", burnside_pair(), |(g, x, y)| {
        prop_burnside_marks(g, &x, &y)
    })?;
    run(cases, "duality contravariance", element_pair(), |(g, h, k, a, b)| {
        prop_duality(g, h, k, a, b)
    })?;
    run(
        cases,
        "tensor associativity",
        element_triple(),
        |(g, h, k, l, a, b, c)| prop_associativity(g, h, k, l, a, b, c),
    )?;
    run(cases, "mark divisibility", single_element(), |(g, h, a)| {
        prop_divisibility(g, h, a)
    })?;
    run(cases, "maximality", single_element(), |(g, h, a)| {
        prop_maximality(g, h, a)
    })?;
    run(
        cases,
        "mark formula equals Mackey",
        element_pair(),
        |(g, h, k, a, b)| prop_mark_formula(g, h, k, a, b),
    )?;
    run(cases, "mark injectivity", single_element(), |(g, h, a)| {
        prop_injective(g, h, a)
    })?;
    Ok(format!(
        "{} exhaustive suites, 7 random suites × {cases} cases",
        names.len()
    ))
}

fn run<S: Strategy>(
    cases: u32,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), String>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(config.rng_algorithm));
    runner
        .run(&strategy, |v| test(v).map_err(TestCaseError::fail))
        .map_err(|e| format!("{name}: {e}"))
}

// ---------------------------------------------------------------------------
// strategies

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, len)
}

pub fn burnside_pair() -> impl Strategy<Value = (&'static str, Vec<i64>, Vec<i64>)> {
    select(SMALL_GROUPS.to_vec()).prop_flat_map(|g| {
        let n = ring(g).burnside().len();
        (Just(g), coeffs(n), coeffs(n))
    })
}

pub fn single_element() -> impl Strategy<Value = (&'static str, &'static str, Vec<i64>)> {
    (select(BISET_GROUPS.to_vec()), select(BISET_GROUPS.to_vec()))
        .prop_flat_map(|(g, h)| (Just(g), Just(h), coeffs(table(g, h).len())))
}

pub type Pair = (&'static str, &'static str, &'static str, Vec<i64>, Vec<i64>);

pub fn element_pair() -> impl Strategy<Value = Pair> {
    let groups = || select(BISET_GROUPS.to_vec());
    (groups(), groups(), groups()).prop_flat_map(|(g, h, k)| {
        (
            Just(g),
            Just(h),
            Just(k),
            coeffs(table(g, h).len()),
            coeffs(table(h, k).len()),
        )
    })
}

pub type Triple = (
    &'static str,
    &'static str,
    &'static str,
    &'static str,
    Vec<i64>,
    Vec<i64>,
    Vec<i64>,
);

pub fn element_triple() -> impl Strategy<Value = Triple> {
    let groups = || select(BISET_GROUPS.to_vec());
    (groups(), groups(), groups(), groups()).prop_flat_map(|(g, h, k, l)| {
        (
            Just(g),
            Just(h),
            Just(k),
            Just(l),
            coeffs(table(g, h).len()),
            coeffs(table(h, k).len()),
            coeffs(table(k, l).len()),
        )
    })
}

// ---------------------------------------------------------------------------
// random-element properties

fn element(g: &str, h: &str, coeffs: Vec<i64>) -> BisetElement {
    BisetElement::new(table(g, h), coeffs).unwrap()
}

/// `a°` for `a ∈ B^Δ(G, H)`.
fn dual(g: &str, h: &str, a: &BisetElement) -> BisetElement {
    let (from, to) = (table(g, h), table(h, g));
    a.relabel(&to, &from.dual_map(&to).unwrap())
}

pub fn prop_burnside_marks(g: &str, x: &[i64], y: &[i64]) -> Result<(), String> {
    let r = ring(g);
    let tom = r.burnside();
    let x = BurnsideElement { coeffs: x.to_vec() };
    let y = BurnsideElement { coeffs: y.to_vec() };
    let (mx, my) = (tom.marks(&x).values, tom.marks(&y).values);
    let product: Vec<i64> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
    let sum: Vec<i64> = mx.iter().zip(&my).map(|(a, b)| a + b).collect();
    ensure!(
        tom.marks(&tom.multiply(&x, &y)).values == product,
        "{g}: marks(x·y) is not the pointwise product"
    );
    ensure!(tom.marks(&(&x + &y)).values == sum, "{g}: marks(x+y) is not the sum");
    Ok(())
}

pub fn prop_duality(g: &str, h: &str, k: &str, a: Vec<i64>, b: Vec<i64>) -> Result<(), String> {
    let (a, b) = (element(g, h, a), element(h, k, b));
    let lhs = dual(g, k, &product(g, h, k).multiply(&a, &b).map_err(err)?);
    let rhs = product(k, h, g)
        .multiply(&dual(h, k, &b), &dual(g, h, &a))
        .map_err(err)?;
    ensure!(
        lhs == rhs,
        "({g},{h},{k}): (a·b)° = {} but b°·a° = {}",
        lhs.to_json(),
        rhs.to_json()
    );
    // marks are preserved by duality
    let back = dual(g, h, &a);
    let t = table(g, h);
    for (i, c) in t.classes().iter().enumerate() {
        let m = back.mark(&c.diagonal.dual()).map_err(err)?;
        ensure!(m == a.mark_at(i), "({g},{h}): Φ_L(a) ≠ Φ_L°(a°) at class {i}");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn prop_associativity(
    g: &str,
    h: &str,
    k: &str,
    l: &str,
    a: Vec<i64>,
    b: Vec<i64>,
    c: Vec<i64>,
) -> Result<(), String> {
    let (a, b, c) = (element(g, h, a), element(h, k, b), element(k, l, c));
    let ab_c = product(g, k, l)
        .multiply(&product(g, h, k).multiply(&a, &b).map_err(err)?, &c)
        .map_err(err)?;
    let a_bc = product(g, h, l)
        .multiply(&a, &product(h, k, l).multiply(&b, &c).map_err(err)?)
        .map_err(err)?;
    ensure!(ab_c == a_bc, "({g},{h},{k},{l}): (a·b)·c ≠ a·(b·c)");
    Ok(())
}

fn check_divisible(g: &str, h: &str, a: &BisetElement) -> Result<(), String> {
    let t = table(g, h);
    for (i, m) in a.marks().into_iter().enumerate() {
        let c = t.class(i);
        let (cg, ch) = (c.left_centralizer as i64, c.right_centralizer as i64);
        ensure!(
            m % cg == 0 && m % ch == 0,
            "({g},{h}) class {i}: mark {m} vs |C_G(R)| {cg}, |C_H(S)| {ch}"
        );
    }
    Ok(())
}

pub fn prop_divisibility(g: &str, h: &str, a: Vec<i64>) -> Result<(), String> {
    check_divisible(g, h, &element(g, h, a))
}

fn maximal(g: &str, h: &str, support: &[usize]) -> Vec<usize> {
    let t = table(g, h);
    support
        .iter()
        .copied()
        .filter(|&k| !support.iter().any(|&j| j != k && t.is_below(k, j)))
        .collect()
}

pub fn prop_maximality(g: &str, h: &str, a: Vec<i64>) -> Result<(), String> {
    let a = element(g, h, a);
    let by_coeff: Vec<usize> = a.support().collect();
    let by_mark: Vec<usize> = a
        .marks()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(k, _)| k)
        .collect();
    let (x, y) = (maximal(g, h, &by_coeff), maximal(g, h, &by_mark));
    ensure!(x == y, "({g},{h}): maximal by coefficient {x:?}, by mark {y:?}");
    Ok(())
}

pub fn prop_mark_formula(g: &str, h: &str, k: &str, a: Vec<i64>, b: Vec<i64>) -> Result<(), String> {
    let (a, b) = (element(g, h, a), element(h, k, b));
    let p = product(g, h, k);
    let mackey = p.multiply(&a, &b).map_err(err)?.marks();
    let formula = p.tensor_marks(&a, &b).map_err(err)?;
    ensure!(mackey == formula, "({g},{h},{k}): {mackey:?} vs {formula:?}");
    Ok(())
}

pub fn prop_injective(g: &str, h: &str, a: Vec<i64>) -> Result<(), String> {
    let t = table(g, h);
    let marks = t.marks_of(&a);
    ensure!(
        t.coeffs_from_marks(&marks).map_err(err)? == a,
        "({g},{h}): marks do not invert"
    );
    let zero = a.iter().all(|&c| c == 0);
    ensure!(
        zero == marks.iter().all(|&m| m == 0),
        "({g},{h}): nonzero element with zero marks"
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// exhaustive properties

pub fn group_core_exhaustive() -> Result<(), String> {
    for spec in SMALL_GROUPS.iter().copied().chain(["A4", "S4", "D12", "C3xS3"]) {
        let ctx = context(spec);
        let g = ctx.group();
        ensure!(g.verify_axioms(), "{spec}: group axioms fail");
        let lattice = ctx.lattice();
        for r in 0..lattice.len() {
            let c = lattice.class(r);
            ensure!(
                c.normalizer.order() * c.size() == g.order(),
                "{spec}: |N|·|class| ≠ |G| for class {r}"
            );
        }
        for r in 0..lattice.len() {
            for s in 0..lattice.len() {
                let (a, b) = (lattice.representative(r), lattice.representative(s));
                let there = isomorphisms(g, a, g, b).len();
                let back = isomorphisms(g, b, g, a).len();
                ensure!(
                    there == back,
                    "{spec}: |Iso(R#{r}, R#{s})| = {there} but reverse {back}"
                );
            }
        }
    }
    Ok(())
}

pub fn burnside_exhaustive() -> Result<(), String> {
    for spec in SMALL_GROUPS.iter().copied().chain(["A4", "S4", "C9", "C15"]) {
        let ctx = context(spec);
        let r = ring(spec);
        let tom = r.burnside();
        let lattice = ctx.lattice();
        for u in 0..tom.len() {
            for s in 0..tom.len() {
                if tom.mark(u, s) != 0 {
                    ensure!(lattice.is_below(u, s), "{spec}: mark at ({u},{s}) outside containment");
                }
            }
        }
        let units = tom.unit_group();
        for u in &units {
            ensure!(tom.multiply(u, u) == tom.one(), "{spec}: {u:?} squared is not 1");
        }
        ensure!(units.len().is_power_of_two(), "{spec}: {} units", units.len());
        if ctx.order() % 2 == 1 {
            ensure!(units.len() == 2, "{spec}: odd order with {} units", units.len());
        }
    }
    Ok(())
}

pub fn divisibility_on_basis() -> Result<(), String> {
    for g in BISET_GROUPS {
        for h in BISET_GROUPS {
            let t = table(g, h);
            for i in 0..t.len() {
                check_divisible(g, h, &BisetElement::basis(t.clone(), i))?;
            }
        }
    }
    Ok(())
}

/// Mark spectrum, two-sidedness, normality of `ι(B^×)`, `π∘η = id` and
/// uniformity transfer, over the complete unit set of each group.
pub fn unit_invariants() -> Result<(), String> {
    for spec in UNIT_GROUPS {
        let ring = ring(spec);
        let table = ring.table();
        let pair = BisetPair::square(ring.clone());
        let units = units_of(&ring).map_err(err)?;
        let out = ring.group().out();

        for u in &units {
            for (k, m) in u.element.marks().into_iter().enumerate() {
                let c = table.class(k).left_centralizer as i64;
                ensure!(m == 0 || m.abs() == c, "{spec}: mark {m} at class {k}, |C_G(R)| = {c}");
            }
            ensure!(verify_two_sided(&pair, &u.element).map_err(err)?, "{spec}: γ°·γ ≠ [G]");
            let inverse = ring.dual(&u.element);
            ensure!(
                ring.mul(&u.element, &inverse).map_err(err)? == ring.identity(),
                "{spec}: dual is not inverse"
            );
        }

        let burnside = ring.burnside().unit_group();
        for b in &burnside {
            let iu = ring.iota(b);
            for u in &units {
                let conj = ring
                    .mul(&ring.mul(&u.element, &iu).map_err(err)?, &ring.dual(&u.element))
                    .map_err(err)?;
                ensure!(ring.iota_preimage(&conj).is_some(), "{spec}: γ·ι(u)·γ° leaves ι(B(G))");
            }
        }

        for c in 0..out.order() {
            let (class, sign) = principal_iso(&pair, &ring.eta(c)).map_err(err)?;
            ensure!(
                ring.outer_class(class) == Some(c) && sign == 1,
                "{spec}: π(η({c})) ≠ {c}"
            );
        }

        for u in &units {
            for c in 0..out.order() {
                let moved = ring.mul(&u.element, &ring.eta(c)).map_err(err)?;
                let before = ring.uniform_class(&u.element).is_some();
                let after = ring.uniform_class(&moved).is_some();
                ensure!(before == after, "{spec}: uniformity changes under η({c})");
            }
        }
    }
    Ok(())
}
