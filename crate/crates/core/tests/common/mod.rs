//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

pub mod criteria;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use bifree::biset::{DoubleBurnsideRing, TensorProduct, TwistedClassTable, TwistedDiagonal};
use bifree::group::{build_group, FiniteGroup, GroupContext};

pub const CAP: usize = 48;

/// Every group of order at most 8 in the catalog.
pub const SMALL_GROUPS: [&str; 14] = [
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D8", "Q8",
];

fn cache<T: Clone>(store: &'static OnceLock<Mutex<HashMap<String, T>>>, key: String, make: impl FnOnce() -> T) -> T {
    let map = store.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = make();
    map.lock().unwrap().entry(key).or_insert(v).clone()
}

pub fn context(spec: &str) -> Arc<GroupContext> {
    static STORE: OnceLock<Mutex<HashMap<String, Arc<GroupContext>>>> = OnceLock::new();
    cache(&STORE, spec.to_string(), || {
        GroupContext::new(build_group(spec, CAP).unwrap())
    })
}

pub fn ring(spec: &str) -> Arc<DoubleBurnsideRing> {
    static STORE: OnceLock<Mutex<HashMap<String, Arc<DoubleBurnsideRing>>>> = OnceLock::new();
    cache(&STORE, spec.to_string(), || {
        Arc::new(DoubleBurnsideRing::new(context(spec)))
    })
}

/// Class table of `B^Δ(G, H)`; the ring's own table when `G = H`.
pub fn table(g: &str, h: &str) -> Arc<TwistedClassTable> {
    if g == h {
        return ring(g).table().clone();
    }
    static STORE: OnceLock<Mutex<HashMap<String, Arc<TwistedClassTable>>>> = OnceLock::new();
    cache(&STORE, format!("{g}|{h}"), || {
        Arc::new(TwistedClassTable::new(context(g), context(h)))
    })
}

pub fn product(g: &str, h: &str, k: &str) -> Arc<TensorProduct> {
    static STORE: OnceLock<Mutex<HashMap<String, Arc<TensorProduct>>>> = OnceLock::new();
    cache(&STORE, format!("{g}|{h}|{k}"), || {
        Arc::new(TensorProduct::new(table(g, h), table(h, k), table(g, k)).unwrap())
    })
}

/// `|{(x, y) ∈ G×H : ^{(x,y)}Δ = Δ}|` by conjugating every pair.
pub fn brute_normalizer_count(g: &FiniteGroup, h: &FiniteGroup, delta: &TwistedDiagonal) -> usize {
    let pairs: HashSet<(usize, usize)> = delta.pairs().collect();
    let mut count = 0;
    for x in g.elements() {
        for y in h.elements() {
            if pairs
                .iter()
                .all(|&(a, b)| pairs.contains(&(g.conj(x, a), h.conj(y, b))))
            {
                count += 1;
            }
        }
    }
    count
}

/// `|{(x, y) ∈ G×H : L ≤ ^{(x,y)}M}| / |M|`, the mark of `[(G×H)/M]` at `L`.
pub fn brute_mark(g: &FiniteGroup, h: &FiniteGroup, l: &TwistedDiagonal, m: &TwistedDiagonal) -> i64 {
    let mut count = 0;
    for x in g.elements() {
        for y in h.elements() {
            let conj: HashSet<(usize, usize)> = m.pairs().map(|(a, b)| (g.conj(x, a), h.conj(y, b))).collect();
            if l.pairs().all(|p| conj.contains(&p)) {
                count += 1;
            }
        }
    }
    (count / m.order()) as i64
}

/// Orthogonal units of `B^Δ(G, G)` by a bounded search over coefficient
/// vectors, with no use of the constrained branch structure.
///
/// Coefficients are chosen from the highest class index down, each in
/// `[-|G|, |G|]`. Two necessary conditions cut the search:
/// * every mark has magnitude at most `|C_G(R)|`;
/// * once every class of order `≥ o` is fixed, the coefficients of
///   `γ ·_G γ°` on classes of order `≥ o` are already final (a Mackey
///   summand `L * ^{(h,1)}M` is never larger than `L` or `M`) and must
///   match `[G]`.
///
/// Inside the top level the coefficient of `[G]` in `γ ·_G γ°` is the sum
/// of the squares of the coefficients on full classes, which bounds that
/// sum by 1.
pub fn naive_units(ring: &DoubleBurnsideRing) -> Vec<Vec<i64>> {
    let table = ring.table();
    let n = table.len();
    let orders: Vec<usize> = (0..n).map(|k| table.class(k).order()).collect();
    let top = *orders.last().unwrap();
    let mut search = Naive {
        table,
        tensor: ring.tensor(),
        dual: ring.dual_map(),
        identity: ring.identity().coeffs().to_vec(),
        orders,
        top,
        bound: table.left().order() as i64,
        coeffs: vec![0; n],
        found: Vec::new(),
    };
    search.descend(n, 0);
    search.found.sort();
    search.found
}

struct Naive<'a> {
    table: &'a TwistedClassTable,
    tensor: &'a TensorProduct,
    dual: &'a [usize],
    identity: Vec<i64>,
    orders: Vec<usize>,
    top: usize,
    bound: i64,
    coeffs: Vec<i64>,
    found: Vec<Vec<i64>>,
}

impl Naive<'_> {
    /// Classes `j..n` are assigned; `squares` is the sum of squares over
    /// assigned full classes.
    fn descend(&mut self, j: usize, squares: i64) {
        if j < self.coeffs.len() && (j == 0 || self.orders[j - 1] < self.orders[j]) && !self.level_matches(j) {
            return;
        }
        if j == 0 {
            self.found.push(self.coeffs.clone());
            return;
        }
        let k = j - 1;
        let class = self.table.class(k);
        let centralizer = class.left_centralizer as i64;
        let rest: i64 = (j..self.coeffs.len())
            .map(|t| self.table.mark(k, t) * self.coeffs[t])
            .sum();
        let diag = self.table.mark(k, k);
        // |rest + diag·a| ≤ |C_G(R)|
        let lo = (-centralizer - rest).div_euclid(diag) + i64::from((-centralizer - rest).rem_euclid(diag) != 0);
        let hi = (centralizer - rest).div_euclid(diag);
        let full = self.orders[k] == self.top;
        for a in lo.max(-self.bound)..=hi.min(self.bound) {
            if full && squares + a * a > 1 {
                continue;
            }
            self.coeffs[k] = a;
            self.descend(k, if full { squares + a * a } else { squares });
        }
        self.coeffs[k] = 0;
    }

    /// Coefficients of `γ ·_G γ°` on classes `j..n` agree with `[G]`, using
    /// only the coefficients already fixed.
    fn level_matches(&self, j: usize) -> bool {
        let n = self.coeffs.len();
        let mut acc = vec![0i64; n];
        for i in j..n {
            if self.coeffs[i] == 0 {
                continue;
            }
            for k in j..n {
                if self.coeffs[k] == 0 {
                    continue;
                }
                for &(t, c) in self.tensor.basis_product(i, self.dual[k]) {
                    if t >= j {
                        acc[t] += self.coeffs[i] * self.coeffs[k] * c;
                    }
                }
            }
        }
        (j..n).all(|t| acc[t] == self.identity[t])
    }
}
