#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use thompson_core::element::{GeneratorWord, Generators, Letter, TreeDiagram};
use thompson_core::words::{DyadicFraction, Word};

/// Generator words over `x0 .. x{max_index}` of length at most `max_len`.
pub fn arb_generator_word(max_index: usize, max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    proptest::collection::vec((0..=max_index, any::<bool>()), 0..=max_len).prop_map(|letters| {
        GeneratorWord(
            letters
                .into_iter()
                .map(|(index, inverse)| Letter { index, inverse })
                .collect(),
        )
    })
}

pub fn arb_element(max_len: usize) -> impl Strategy<Value = TreeDiagram> {
    arb_generator_word(3, max_len).prop_map(|w| w.evaluate(&mut Generators::new()))
}

/// Dyadic fractions `.u` with `u` of length at most `max_len`.
pub fn arb_dyadic(max_len: usize) -> impl Strategy<Value = DyadicFraction> {
    proptest::collection::vec(0u8..2, 0..max_len).prop_map(|mut digits| {
        digits.push(1);
        DyadicFraction::from_word(&Word::from_digits(&digits)).unwrap()
    })
}

pub fn random_generator_word<R: Rng>(rng: &mut R, max_index: usize, max_len: usize) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    GeneratorWord(
        (0..len)
            .map(|_| Letter {
                index: rng.gen_range(0..=max_index),
                inverse: rng.gen(),
            })
            .collect(),
    )
}

pub fn random_dyadic<R: Rng>(rng: &mut R, max_len: usize) -> DyadicFraction {
    let len = rng.gen_range(0..max_len);
    let mut digits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
    digits.push(1);
    DyadicFraction::from_word(&Word::from_digits(&digits)).unwrap()
}

pub fn evaluate_words(words: &[&str]) -> Vec<TreeDiagram> {
    let mut gens = Generators::new();
    words
        .iter()
        .map(|w| w.parse::<GeneratorWord>().unwrap().evaluate(&mut gens))
        .collect()
}

/// Exact rational `num / 2^exp`, kept with a common exponent for comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub num: i128,
    pub exp: u32,
}

impl Dyadic {
    pub fn of_word(w: &Word) -> Dyadic {
        let mut num = 0i128;
        for &d in w.digits() {
            num = 2 * num + d as i128;
        }
        Dyadic {
            num,
            exp: w.len() as u32,
        }
    }

    pub fn of_fraction(a: &DyadicFraction) -> Dyadic {
        let (num, exp) = a.to_ratio();
        Dyadic { num: num as i128, exp }
    }

    fn at(self, exp: u32) -> i128 {
        self.num << (exp - self.exp)
    }

    pub fn cmp_value(self, other: Dyadic) -> std::cmp::Ordering {
        let e = self.exp.max(other.exp);
        self.at(e).cmp(&other.at(e))
    }
}

/// Independent piecewise-linear evaluation: on `[u, u + 2^-|u|)` the map is
/// `t ↦ v + (t − u) · 2^(|u| − |v|)`.
pub fn pl_oracle(f: &TreeDiagram, t: Dyadic) -> Dyadic {
    for (u, v) in f.pairs() {
        let lo = Dyadic::of_word(u);
        let hi_num = lo.num + 1;
        let e = t.exp.max(lo.exp);
        let (tn, lon, hin) = (t.num << (e - t.exp), lo.num << (e - lo.exp), hi_num << (e - lo.exp));
        if tn >= lon && tn < hin {
            // offset = (t - u) scaled by 2^(|u| - |v|), exponent e - |u| + |v|
            let offset = tn - lon;
            let v0 = Dyadic::of_word(v);
            let oe = e - u.len() as u32 + v.len() as u32;
            let common = oe.max(v0.exp);
            let num = (v0.num << (common - v0.exp)) + (offset << (common - oe));
            return normalize(Dyadic { num, exp: common });
        }
    }
    panic!("point outside [0,1)")
}

pub fn normalize(mut d: Dyadic) -> Dyadic {
    while d.exp > 0 && d.num % 2 == 0 {
        d.num /= 2;
        d.exp -= 1;
    }
    d
}
