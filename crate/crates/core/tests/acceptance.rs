//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_core::automaton::VertexType;
use thompson_core::decide::{is_generating, maximality_verdict, Maximality, QuotientStatus, DEFAULT_CAP};
use thompson_core::element::{GeneratorWord, Generators, TreeDiagram};
use thompson_core::jones::{a_suf, a_sum, jones_generators, sum_p, verify_jones_core, JonesParameter};
use thompson_core::rewriting::{
    associated_pair, is_core_automaton, CoreCheck, SemigroupPresentation, Verdict, DEFAULT_BUDGET,
};
use thompson_core::words::Word;
use thompson_core::{build_core, TreeAutomaton};

const SEED: u64 = 0x5eed_f00d;
const TUPLE_SAMPLES: usize = 500;
const TUPLE_WORD_LEN: usize = 12;
const JONES_SAMPLES: usize = 200;
const CLOSURE_SETS: usize = 5;
const CLOSURE_WORD_LEN: usize = 8;
const CLOSURE_PRODUCT_LEN: usize = 6;
const PARITY_ELEMENTS: usize = 100;
const PARITY_POINTS: usize = 100;
const WORD_PROBLEM_SAMPLES: usize = 50;
const MAXIMAL_EXAMPLE: [&str; 3] = ["x0", "x1 x1 X3 X2 X1", "x1 x2 x2 X3 X1 X1"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prime(p: u32) -> JonesParameter {
    JonesParameter::new(p).unwrap()
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream)
}

fn core_of(words: &[&str]) -> TreeAutomaton {
    build_core(&evaluate_words(words)).unwrap()
}

fn core_of_f_shape() -> Outcome {
    let c = core_of(&["x0", "x1"]);
    ensure(c.vertex_count() == 4, || format!("{} vertices", c.vertex_count()))?;
    ensure(c.type_census() == [1, 1, 1, 1], || {
        format!("census {:?}", c.type_census())
    })?;
    let m = c.vertices_of_type(VertexType::Middle);
    ensure(m.len() == 1 && c.children(m[0]) == Some([m[0], m[0]]), || {
        "middle vertex lacks its two self-loops".into()
    })?;
    Ok("4 vertices, census root/left/right/middle = 1/1/1/1, middle has both loops".into())
}

fn generating_set_independence() -> Outcome {
    let sets: [&[&str]; 3] = [&["x0", "x1"], &["x0", "x1", "x2"], &["x1", "x0 x1 X0"]];
    let reference = core_of(sets[0]);
    let mut differing = Vec::new();
    for set in &sets[1..] {
        let c = core_of(set);
        if c.canonical_form() != reference.canonical_form() {
            differing.push(format!(
                "{{{}}} has {} vertices, leaf count {}",
                set.join(", "),
                c.vertex_count(),
                c.leaves().count()
            ));
        }
    }
    ensure(differing.is_empty(), || {
        format!(
            "core of {{x0, x1}} has {} vertices, but {}",
            reference.vertex_count(),
            differing.join("; ")
        )
    })?;
    Ok("all three cores have the same canonical form".into())
}

fn presentation_relators() -> Outcome {
    // [x0 x1^-1, x1^(x0^k)] for k = 1, 2, with a^b = b^-1 a b and [a, b] = a^-1 b^-1 a b.
    let relators = [
        "x1 X0 X0 X1 x0 x0 X1 X0 x1 x0",
        "x1 X0 X0 X0 X1 x0 x0 x0 X1 X0 X0 x1 x0 x0",
    ];
    let mut gens = Generators::new();
    for r in relators {
        let d = r.parse::<GeneratorWord>().unwrap().evaluate(&mut gens);
        ensure(d.is_identity(), || format!("{} reduces to {} carets", r, d.len() - 1))?;
    }
    let x0 = gens.get(0).clone();
    let x1 = gens.get(1).clone();
    let a = x0.multiply(&x1.invert());
    for k in 1..=2 {
        let c = a.commutator(&x1.conjugate_by(&x0.pow(k)));
        ensure(c.is_identity(), || format!("commutator with k = {} is not trivial", k))?;
    }
    Ok("both relators reduce to the identity diagram".into())
}

/// `f(t) / t` for `t = 2^-k` below the first breakpoint.
fn oracle_slope_at_zero(f: &TreeDiagram, k: u32) -> i64 {
    let t = Dyadic { num: 1, exp: k };
    let ft = pl_oracle(f, t);
    assert_eq!(ft.num.count_ones(), 1);
    ft.num.trailing_zeros() as i64 - ft.exp as i64 + k as i64
}

/// `(1 - f(t)) / (1 - t)` for `t = 1 - 2^-k` above the last breakpoint.
fn oracle_slope_at_one(f: &TreeDiagram, k: u32) -> i64 {
    let t = Dyadic {
        num: (1i128 << k) - 1,
        exp: k,
    };
    let ft = pl_oracle(f, t);
    let gap = (1i128 << ft.exp) - ft.num;
    assert_eq!(gap.count_ones(), 1);
    gap.trailing_zeros() as i64 - ft.exp as i64 + k as i64
}

fn tuple_sum_identity() -> Outcome {
    let mut rng = rng(4);
    let mut gens = Generators::new();
    for _ in 0..TUPLE_SAMPLES {
        let w = random_generator_word(&mut rng, 4, TUPLE_WORD_LEN);
        let f = w.evaluate(&mut gens);
        let depth = f
            .domain()
            .branches()
            .iter()
            .chain(f.range().branches())
            .map(Word::len)
            .max()
            .unwrap() as u32
            + 2;
        let expected = (-oracle_slope_at_one(&f, depth), -oracle_slope_at_zero(&f, depth));
        let sum = f.tuple_sequence().iter().fold((0, 0), |s, t| (s.0 + t.0, s.1 + t.1));
        ensure(sum == expected, || {
            format!("{}: sum {:?}, slopes give {:?}", w, sum, expected)
        })?;
    }
    Ok(format!("{} random words agree with oracle slopes", TUPLE_SAMPLES))
}

fn generation_decision() -> Outcome {
    let cases: [(&[&str], bool); 3] = [(&["x0", "x1"], true), (&["x0"], false), (&MAXIMAL_EXAMPLE, false)];
    for (words, expected) in cases {
        let got = is_generating(&evaluate_words(words)).unwrap();
        ensure(got == expected, || {
            format!("{:?}: expected {}, got {}", words, expected, got)
        })?;
    }
    Ok("{x0,x1} yes, {x0} no, maximal example no".into())
}

fn jones_core_census() -> Outcome {
    for p in [2u32, 3, 5] {
        let r = verify_jones_core(prime(p));
        let n = p as usize;
        let expected_total = n * n + n + 2;
        ensure(r.vertex_count == expected_total, || {
            format!("p = {}: {} vertices, expected {}", p, r.vertex_count, expected_total)
        })?;
        ensure(r.census == [1, 1, n, n * n], || {
            format!("p = {}: census {:?}", p, r.census)
        })?;
        ensure(r.is_consistent(), || format!("p = {}: {:?}", p, r.mismatches()))?;
    }
    Ok("p = 2, 3, 5 give 8, 14, 32 vertices with census (1, 1, p, p^2)".into())
}

fn jones_acceptance() -> Outcome {
    let mut rng = rng(7);
    let mut gens = Generators::new();
    let mut accepted = 0;
    for p in [2u32, 3, 5].map(prime) {
        let (sum, suf) = (a_sum(p), a_suf(p));
        for g in jones_generators(p) {
            ensure(sum.accepts(&g) && suf.accepts(&g), || {
                format!("p = {}: generator rejected", p.get())
            })?;
        }
        let jones = jones_generators(p);
        for i in 0..JONES_SAMPLES {
            // Half plain random words, half random Jones products, so both answers occur.
            let d = if i % 2 == 0 {
                random_generator_word(&mut rng, 5, 10).evaluate(&mut gens)
            } else {
                (0..rng.gen_range(1..6)).fold(TreeDiagram::identity(), |acc, _| {
                    let g = &jones[rng.gen_range(0..jones.len())];
                    acc.multiply(&if rng.gen() { g.invert() } else { g.clone() })
                })
            };
            ensure(d.is_reduced(), || "sample not reduced".into())?;
            let (a, b) = (sum.accepts(&d), suf.accepts(&d));
            ensure(a == b, || {
                format!("p = {}: a_sum says {}, a_suf says {}", p.get(), a, b)
            })?;
            accepted += usize::from(a);
        }
    }
    Ok(format!(
        "{} diagrams per prime agree ({} accepted in total); all generators accepted",
        JONES_SAMPLES, accepted
    ))
}

fn not_core_counterexample() -> Outcome {
    let a = TreeAutomaton::from_edges(
        "r",
        &[
            ("r", 0, "f"),
            ("r", 1, "g"),
            ("f", 0, "f"),
            ("f", 1, "h"),
            ("g", 0, "h"),
            ("g", 1, "g"),
            ("h", 0, "h"),
            ("h", 1, "k"),
        ],
    )
    .unwrap();
    let pres = SemigroupPresentation::of_automaton(&a);
    let relations: Vec<String> = pres
        .relations()
        .iter()
        .map(|&(x, [b, c])| format!("{}={}{}", pres.name(x), pres.name(b), pres.name(c)))
        .collect();
    ensure(relations == ["r=fg", "f=fh", "g=hg", "h=hk"], || {
        format!("relations {:?}", relations)
    })?;
    let Verdict::No(w) = is_core_automaton(&a, DEFAULT_BUDGET) else {
        return Err("verdict is not No".into());
    };
    ensure(
        a.read_path(&w.u).is_some() && a.read_path(&w.u) == a.read_path(&w.v),
        || format!("witness {} / {} does not end at a common vertex", w.u, w.v),
    )?;
    let (pu, qu) = associated_pair(&a, &w.u).unwrap();
    let (pv, qv) = associated_pair(&a, &w.v).unwrap();
    let separated = match w.check {
        CoreCheck::LeftWords(_) => pres.words_equal(&pu, &pv, DEFAULT_BUDGET).is_no(),
        CoreCheck::RightWords(_) => pres.words_equal(&qu, &qv, DEFAULT_BUDGET).is_no(),
        _ => false,
    };
    ensure(separated, || format!("witness {:?} is not a separating pair", w))?;
    Ok(format!("No, witness ({}, {}) via {}", w.u, w.v, w.check.name()))
}

fn maximality_reproduction() -> Outcome {
    let r = maximality_verdict(&evaluate_words(&MAXIMAL_EXAMPLE), DEFAULT_BUDGET, DEFAULT_CAP)
        .map_err(|e| format!("{:?}", e))?;
    ensure(r.verdict == Maximality::MaximalInfiniteIndex, || {
        format!("verdict {:?}", r.verdict)
    })?;
    let mut refuted = 0;
    for e in &r.census {
        match &e.status {
            QuotientStatus::Core | QuotientStatus::CoreOfF => {}
            QuotientStatus::Tested(Verdict::No(_)) => refuted += 1,
            QuotientStatus::Tested(v) => {
                return Err(format!(
                    "quotient with {} vertices: {}",
                    e.automaton.vertex_count(),
                    v.label()
                ))
            }
        }
    }
    ensure(r.census.iter().any(|e| e.status == QuotientStatus::CoreOfF), || {
        "C(F) missing from census".into()
    })?;
    Ok(format!(
        "maximal of infinite index; {} quotients, {} refuted",
        r.census.len(),
        refuted
    ))
}

fn closure_soundness() -> Outcome {
    let mut rng = rng(10);
    let mut total = 0;
    for _ in 0..CLOSURE_SETS {
        let mut gens = Generators::new();
        let n = rng.gen_range(1..=3);
        let words: Vec<GeneratorWord> = (0..n)
            .map(|_| random_generator_word(&mut rng, 4, CLOSURE_WORD_LEN))
            .collect();
        let diagrams: Vec<TreeDiagram> = words.iter().map(|w| w.evaluate(&mut gens)).collect();
        let core = build_core(&diagrams).unwrap();
        let letters: Vec<TreeDiagram> = diagrams
            .iter()
            .cloned()
            .chain(diagrams.iter().map(|d| d.invert()))
            .collect();
        let mut seen: BTreeSet<Vec<(Word, Word)>> = BTreeSet::new();
        let mut frontier = vec![TreeDiagram::identity()];
        for _ in 0..CLOSURE_PRODUCT_LEN {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &letters {
                    let h = f.multiply(g);
                    if seen.insert(h.pair_list()) {
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        for pairs in &seen {
            let h = TreeDiagram::from_pairs(pairs.clone()).unwrap();
            ensure(core.accepts(&h), || {
                format!("product rejected for generators {:?}", words)
            })?;
        }
        total += seen.len();
    }
    Ok(format!(
        "{} distinct products over {} generator sets accepted",
        total, CLOSURE_SETS
    ))
}

fn parity_orbits() -> Outcome {
    let p = prime(2);
    let jones = jones_generators(p);
    let automaton = a_sum(p);
    let mut rng = rng(11);
    for _ in 0..PARITY_ELEMENTS {
        let f = (0..rng.gen_range(1..8)).fold(TreeDiagram::identity(), |acc, _| {
            let g = &jones[rng.gen_range(0..jones.len())];
            acc.multiply(&if rng.gen() { g.invert() } else { g.clone() })
        });
        ensure(automaton.accepts(&f), || "Jones product rejected by a_sum(2)".into())?;
        for _ in 0..PARITY_POINTS {
            let a = random_dyadic(&mut rng, 12);
            let image = pl_oracle(&f, Dyadic::of_fraction(&a));
            let ones = image.num.count_ones() as usize % 2;
            ensure(ones == sum_p(a.word(), p), || format!("parity of {} changes", a))?;
        }
    }
    Ok(format!(
        "{} elements x {} points preserve sum_2",
        PARITY_ELEMENTS, PARITY_POINTS
    ))
}

fn word_problem_sanity() -> Outcome {
    let mut rng = rng(12);
    let mut unknown = 0;
    for p in [2u32, 3].map(prime) {
        let n = p.get() as usize;
        let sum = a_sum(p);
        let pres = SemigroupPresentation::of_automaton(&sum);
        for _ in 0..WORD_PROBLEM_SAMPLES {
            let first = rng.gen_range(0..n);
            let mut w1 = vec![first];
            let mut w2 = vec![first];
            w1.extend((0..rng.gen_range(0..5)).map(|_| rng.gen_range(0..n)));
            w2.extend((0..rng.gen_range(0..5)).map(|_| rng.gen_range(0..n)));
            match pres.words_equal(&w1, &w2, DEFAULT_BUDGET) {
                Verdict::Yes(t) => ensure(pres.replay(&w1, &t) == Some(w2.clone()), || "bad trace".into())?,
                Verdict::No(s) => return Err(format!("P^sum({}): {:?} vs {:?} separated by {:?}", n, w1, w2, s)),
                Verdict::Unknown { .. } => unknown += 1,
            }
        }
        let suf = a_suf(p);
        let pres = SemigroupPresentation::of_automaton(&suf);
        let b0 = suf.vertex_named("b0").unwrap();
        for _ in 0..WORD_PROBLEM_SAMPLES {
            let w: Vec<usize> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..n)).collect();
            let at = rng.gen_range(0..=w.len());
            let mut longer = w[..at].to_vec();
            longer.extend(std::iter::repeat_n(b0, n));
            longer.extend_from_slice(&w[at..]);
            match pres.words_equal(&longer, &w, DEFAULT_BUDGET) {
                Verdict::Yes(_) => {}
                Verdict::No(s) => return Err(format!("P^suf({}): insertion into {:?} separated by {:?}", n, w, s)),
                Verdict::Unknown { .. } => unknown += 1,
            }
        }
    }
    ensure(unknown == 0, || format!("{} comparisons ran out of budget", unknown))?;
    Ok(format!(
        "left-zero and cyclic laws hold on {} samples per law and prime",
        WORD_PROBLEM_SAMPLES
    ))
}

const CRITERIA: [Criterion; 12] = [
    ("core of F", core_of_f_shape),
    ("generating-set independence", generating_set_independence),
    ("presentation relators", presentation_relators),
    ("tuple-sum identity", tuple_sum_identity),
    ("generation decision", generation_decision),
    ("Jones core census", jones_core_census),
    ("Jones acceptance cross-check", jones_acceptance),
    ("NotCore counterexample", not_core_counterexample),
    ("maximality reproduction", maximality_reproduction),
    ("closure soundness", closure_soundness),
    ("parity orbit property", parity_orbits),
    ("word-problem sanity", word_problem_sanity),
];

fn main() -> ExitCode {
    panic::set_hook(Box::new(|_| {}));
    let mut passed = 0;
    for (i, (name, check)) in CRITERIA.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {}", msg))
        });
        match outcome {
            Ok(detail) => {
                passed += 1;
                println!("PASS {:>2} {}: {}", i + 1, name, detail);
            }
            Err(detail) => println!("FAIL {:>2} {}: {}", i + 1, name, detail),
        }
    }
    println!("{}/{} acceptance criteria passed", passed, CRITERIA.len());
    if passed == CRITERIA.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
