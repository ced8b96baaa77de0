//! Randomized law checking across all carriers, plus the instance-level
//! invariants that have independent oracles: Minkowski sums against an
//! all-pairs expansion, ideal sums against a root-multiset gcd, and the
//! term-set semiring against a direct multiplicity-tracking expansion.

use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;

use cis::instances::{Cofinite, Ideal, Point, Polygon, QPoly, TermSet, Tropical, Universe};
use cis::rational::rational_frac;
use cis::term::TermExponent;
use cis::{Instance, Value};

fn rat(n: i64, d: i64) -> BigRational {
    rational_frac(n, d)
}

fn tropical_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        1 => Just(Value::Tropical(Tropical::NegInf)),
        6 => (-20i64..20, 1i64..4).prop_map(|(n, d)| Value::Tropical(Tropical::Finite(rat(n, d)))),
    ]
}

fn boolean_value() -> impl Strategy<Value = Value> {
    any::<bool>().prop_map(Value::Boolean)
}

fn powerset_value() -> impl Strategy<Value = Value> {
    (0u64..32).prop_map(Value::PowerSet)
}

fn cofinite_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        1 => Just(Value::Cofinite(Cofinite::Empty)),
        5 => proptest::collection::btree_set(-4i64..4, 0..4)
            .prop_map(|pts| Value::Cofinite(Cofinite::excluding(pts.into_iter().map(|p| rat(p, 1))))),
    ]
}

fn point() -> impl Strategy<Value = Point> {
    ((-4i64..4, 1i64..3), (-4i64..4, 1i64..3)).prop_map(|((a, b), (c, d))| (rat(a, b), rat(c, d)))
}

fn polygon_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        1 => Just(Value::Polygon(Polygon::Empty)),
        6 => proptest::collection::vec(point(), 1..5)
            .prop_map(|pts| Value::Polygon(Polygon::from_points(&pts))),
    ]
}

fn ideal_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        1 => Just(Value::Ideal(Ideal::Zero)),
        6 => proptest::collection::vec(-3i64..3, 0..3).prop_map(|roots| {
            let poly = roots
                .iter()
                .fold(QPoly::one(), |acc, &r| acc.mul(&QPoly::linear(rat(-r, 1))));
            Value::Ideal(Ideal::principal(poly))
        }),
    ]
}

fn term_exponent() -> impl Strategy<Value = TermExponent> {
    (
        proptest::collection::vec(0u32..3, 2),
        proptest::collection::vec(0u32..3, 2),
    )
        .prop_map(|(mu, nu)| TermExponent::new(mu, nu))
}

fn termset_value() -> impl Strategy<Value = Value> {
    proptest::collection::btree_set(term_exponent(), 0..4)
        .prop_map(|terms| Value::TermSet(TermSet::from_terms(terms).unwrap()))
}

fn sequence_value() -> impl Strategy<Value = Value> {
    proptest::collection::vec(boolean_value(), 6).prop_map(Value::Sequence)
}

/// The nine defining laws, checked directly on values.
fn assert_axioms(instance: &Instance, a: &Value, b: &Value, c: &Value) {
    let zero = instance.zero();
    let one = instance.one();
    let add = |x: &Value, y: &Value| x.add(y).unwrap();
    let mul = |x: &Value, y: &Value| x.mul(y).unwrap();

    assert_eq!(add(a, b), add(b, a), "add commutative");
    assert_eq!(add(&add(a, b), c), add(a, &add(b, c)), "add associative");
    assert_eq!(add(a, &zero), *a, "add identity");
    assert_eq!(add(a, a), *a, "add idempotent");
    assert_eq!(mul(a, b), mul(b, a), "mul commutative");
    assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)), "mul associative");
    assert_eq!(mul(a, &one), *a, "mul identity");
    assert_eq!(mul(a, &zero), zero, "mul annihilation");
    assert_eq!(
        mul(&add(a, b), c),
        add(&mul(a, c), &mul(b, c)),
        "distributivity"
    );
}

macro_rules! axiom_props {
    ($name:ident, $strategy:expr, $instance:expr) => {
        proptest! {
            #[test]
            fn $name((a, b, c) in ($strategy, $strategy, $strategy)) {
                let instance = $instance;
                assert_axioms(&instance, &a, &b, &c);
            }
        }
    };
}

axiom_props!(tropical_axioms, tropical_value(), Instance::tropical());
axiom_props!(boolean_axioms, boolean_value(), Instance::boolean());
axiom_props!(
    powerset_axioms,
    powerset_value(),
    Instance::power_set(Universe::int_range(1, 5).unwrap())
);
axiom_props!(cofinite_axioms, cofinite_value(), Instance::cofinite());
axiom_props!(polygon_axioms, polygon_value(), Instance::polygon());
axiom_props!(ideal_axioms, ideal_value(), Instance::Ideal);
axiom_props!(
    termset_axioms,
    termset_value(),
    Instance::term_set(2, 2).unwrap()
);
axiom_props!(
    sequence_axioms,
    sequence_value(),
    Instance::sequences(Instance::boolean(), 6).unwrap()
);

proptest! {
    /// Text forms are canonical: parse inverts format.
    #[test]
    fn tropical_text_round_trip(v in tropical_value()) {
        let inst = Instance::tropical();
        prop_assert_eq!(inst.parse_value(&inst.format_value(&v)).unwrap(), v);
    }

    #[test]
    fn polygon_text_round_trip(v in polygon_value()) {
        let inst = Instance::polygon();
        prop_assert_eq!(inst.parse_value(&inst.format_value(&v)).unwrap(), v);
    }

    #[test]
    fn ideal_text_round_trip(v in ideal_value()) {
        let inst = Instance::Ideal;
        prop_assert_eq!(inst.parse_value(&inst.format_value(&v)).unwrap(), v);
    }

    #[test]
    fn termset_text_round_trip(v in termset_value()) {
        let inst = Instance::term_set(2, 2).unwrap();
        prop_assert_eq!(inst.parse_value(&inst.format_value(&v)).unwrap(), v);
    }

    /// The hull of pairwise vertex sums equals the hull of pairwise sums
    /// of all original points, hulled or not.
    #[test]
    fn minkowski_matches_all_pairs_oracle(
        a in proptest::collection::vec(point(), 1..5),
        b in proptest::collection::vec(point(), 1..5),
    ) {
        let pa = Polygon::from_points(&a);
        let pb = Polygon::from_points(&b);
        let mut sums = Vec::new();
        for p in &a {
            for q in &b {
                sums.push((&p.0 + &q.0, &p.1 + &q.1));
            }
        }
        prop_assert_eq!(pa.minkowski_sum(&pb), Polygon::from_points(&sums));
    }

    /// Ideal sum against a root-multiset oracle: for split generators the
    /// gcd keeps each root with its minimum multiplicity.
    #[test]
    fn ideal_add_matches_root_multiset_gcd(
        a in proptest::collection::vec(-2i64..3, 0..4),
        b in proptest::collection::vec(-2i64..3, 0..4),
    ) {
        let build = |roots: &[i64]| {
            roots.iter().fold(QPoly::one(), |acc, &r| acc.mul(&QPoly::linear(rat(-r, 1))))
        };
        let common: Vec<i64> = {
            let mut out = Vec::new();
            let mut pool = b.clone();
            for &r in &a {
                if let Some(pos) = pool.iter().position(|&x| x == r) {
                    pool.remove(pos);
                    out.push(r);
                }
            }
            out
        };
        let lhs = Ideal::principal(build(&a)).add(&Ideal::principal(build(&b)));
        prop_assert_eq!(lhs, Ideal::principal(build(&common)));
    }

    /// Resultant equals Sylvester permanent on random tropical roots.
    #[test]
    fn theorem_on_random_tropical_roots(
        alphas in proptest::collection::vec(tropical_value(), 1..4),
        betas in proptest::collection::vec(tropical_value(), 1..4),
    ) {
        let inst = Instance::tropical();
        let roots = cis::resultant::RootVectors::new(alphas, betas).unwrap();
        let verdict = cis::resultant::verify_main_theorem(&inst, &roots).unwrap();
        prop_assert!(verdict.equal(), "R = {:?}, S = {:?}", verdict.resultant, verdict.sylvester);
    }
}

/// Sequence shorthand laws over the boolean inner carrier.
#[test]
fn sequence_shorthand_laws() {
    let len = 16;
    let inst = Instance::sequences(Instance::boolean(), len).unwrap();
    let s = |k: i64| inst.parse_value(&format!("s{k}")).unwrap();
    for i in 0..len as i64 {
        for j in 0..len as i64 {
            assert_eq!(s(i).add(&s(j)).unwrap(), s(i.max(j)), "s{i} + s{j}");
            if i + j < len as i64 {
                assert_eq!(s(i).mul(&s(j)).unwrap(), s(i + j), "s{i} * s{j}");
            }
        }
    }
}

/// Small expression trees evaluated in the term-set semiring match a
/// direct expansion that tracks multiplicities and then discards them.
#[derive(Debug, Clone)]
enum Expr {
    Leaf(usize),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

fn expr_strategy(leaves: usize) -> impl Strategy<Value = Expr> {
    let leaf = (0..leaves).prop_map(Expr::Leaf);
    leaf.prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

type Expansion = BTreeMap<TermExponent, u64>;

fn expand(expr: &Expr, leaves: &[TermSet]) -> Expansion {
    match expr {
        Expr::Leaf(i) => leaves[*i].terms().iter().map(|t| (t.clone(), 1)).collect(),
        Expr::Add(a, b) => {
            let mut out = expand(a, leaves);
            for (t, k) in expand(b, leaves) {
                *out.entry(t).or_insert(0) += k;
            }
            out
        }
        Expr::Mul(a, b) => {
            let ea = expand(a, leaves);
            let eb = expand(b, leaves);
            let mut out = Expansion::new();
            for (ta, ka) in &ea {
                for (tb, kb) in &eb {
                    *out.entry(ta.combine(tb).unwrap()).or_insert(0) += ka * kb;
                }
            }
            out
        }
    }
}

fn evaluate(expr: &Expr, leaves: &[TermSet]) -> TermSet {
    match expr {
        Expr::Leaf(i) => leaves[*i].clone(),
        Expr::Add(a, b) => evaluate(a, leaves).add(&evaluate(b, leaves)).unwrap(),
        Expr::Mul(a, b) => evaluate(a, leaves).mul(&evaluate(b, leaves)).unwrap(),
    }
}

proptest! {
    #[test]
    fn termset_is_free_at_the_term_level(expr in expr_strategy(5)) {
        let leaves = vec![
            TermSet::one(2, 2),
            TermSet::alpha(1, 2, 2),
            TermSet::alpha(2, 2, 2),
            TermSet::beta(1, 2, 2),
            TermSet::beta(2, 2, 2),
        ];
        let expanded = expand(&expr, &leaves);
        let evaluated = evaluate(&expr, &leaves);
        let support: Vec<&TermExponent> = expanded.keys().collect();
        let got: Vec<&TermExponent> = evaluated.terms().iter().collect();
        prop_assert_eq!(support, got);
    }
}
