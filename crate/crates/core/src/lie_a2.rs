//! Finite-dimensional `sl(3)` data in the fundamental-weight basis.
//!
//! Weight coordinates `(a, b)` mean `aω_1 + bω_2`, so `a` and `b` are the
//! `h_1`- and `h_2`-eigenvalues. Simple roots are `α_1 = (2,-1)` and
//! `α_2 = (-1,2)`; `ρ = (1,1)`.

use std::collections::{BTreeMap, VecDeque};

use num_rational::Rational64;

use crate::error::{Error, Result};

/// Weight coordinates in the fundamental-weight basis, not necessarily dominant.
pub type Coords = (i64, i64);

pub const RHO: Coords = (1, 1);
pub const ALPHA_1: Coords = (2, -1);
pub const ALPHA_2: Coords = (-1, 2);
pub const POSITIVE_ROOTS: [Coords; 3] = [ALPHA_1, ALPHA_2, (1, 1)];

/// Dominant integral weight `mω_1 + nω_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub m: u32,
    pub n: u32,
}

impl Weight {
    pub const fn new(m: u32, n: u32) -> Self {
        Weight { m, n }
    }

    pub fn coords(self) -> Coords {
        (i64::from(self.m), i64::from(self.n))
    }

    pub fn in_root_lattice(self) -> bool {
        self.m % 3 == self.n % 3
    }
}

fn add(a: Coords, b: Coords) -> Coords {
    (a.0 + b.0, a.1 + b.1)
}

fn sub(a: Coords, b: Coords) -> Coords {
    (a.0 - b.0, a.1 - b.1)
}

/// `3·(λ, μ)`; the Gram matrix on fundamental weights is `((2,1),(1,2))/3`.
fn pairing_times_three(a: Coords, b: Coords) -> i64 {
    2 * a.0 * b.0 + a.0 * b.1 + a.1 * b.0 + 2 * a.1 * b.1
}

/// Invariant form normalized by `(α_i, α_i) = 2`.
pub fn pairing(a: Coords, b: Coords) -> Rational64 {
    Rational64::new(pairing_times_three(a, b), 3)
}

/// A Weyl group element as an integer matrix on fundamental-weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub matrix: [[i64; 2]; 2],
    pub length: u8,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        matrix: [[1, 0], [0, 1]],
        length: 0,
    };
    /// `s_1(a, b) = (-a, a + b)`.
    pub const S1: WeylElement = WeylElement {
        matrix: [[-1, 0], [1, 1]],
        length: 1,
    };
    /// `s_2(a, b) = (a + b, -b)`.
    pub const S2: WeylElement = WeylElement {
        matrix: [[1, 1], [0, -1]],
        length: 1,
    };

    pub fn apply(&self, v: Coords) -> Coords {
        let [[a, b], [c, d]] = self.matrix;
        (a * v.0 + b * v.1, c * v.0 + d * v.1)
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other` as a matrix; the length is not tracked here.
    fn compose_matrix(&self, other: &WeylElement) -> [[i64; 2]; 2] {
        let [[a, b], [c, d]] = self.matrix;
        let [[e, f], [g, h]] = other.matrix;
        [
            [a * e + b * g, a * f + b * h],
            [c * e + d * g, c * f + d * h],
        ]
    }
}

/// All six elements of `W(A_2)`, ordered by length.
///
/// Generated breadth-first from the simple reflections, so every element's
/// length is the length of its first (shortest) word.
pub fn weyl_group() -> Vec<WeylElement> {
    let mut seen = vec![WeylElement::IDENTITY];
    let mut queue = VecDeque::from([WeylElement::IDENTITY]);
    while let Some(w) = queue.pop_front() {
        for s in [WeylElement::S1, WeylElement::S2] {
            let matrix = s.compose_matrix(&w);
            if seen.iter().all(|u| u.matrix != matrix) {
                let next = WeylElement {
                    matrix,
                    length: w.length + 1,
                };
                seen.push(next);
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Weight multiplicities of a finite-dimensional `sl(3)` module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharPolynomial {
    mults: BTreeMap<Coords, u64>,
}

impl CharPolynomial {
    pub fn mult(&self, mu: Coords) -> u64 {
        self.mults.get(&mu).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (Coords, u64)> + '_ {
        self.mults.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn is_weyl_invariant(&self) -> bool {
        let group = weyl_group();
        self.mults
            .iter()
            .all(|(mu, k)| group.iter().all(|w| self.mult(w.apply(*mu)) == *k))
    }
}

/// Divides `f` by `1 - e^{-α}`, failing if the quotient is not a Laurent polynomial.
fn divide_by_root_factor(
    f: &BTreeMap<Coords, i64>,
    alpha: Coords,
) -> Result<BTreeMap<Coords, i64>> {
    // Long division from the top of each α-string. `(μ, α)` strictly
    // increases along +α, so ordering by it processes every string top-down.
    let height = |mu: Coords| pairing_times_three(mu, alpha);
    let mut rest: BTreeMap<(i64, Coords), i64> = f
        .iter()
        .filter(|(_, c)| **c != 0)
        .map(|(mu, c)| ((height(*mu), *mu), *c))
        .collect();
    let floor = rest.keys().next().map(|k| k.0);
    let mut quotient = BTreeMap::new();
    while let Some(((h, mu), c)) = rest.pop_last() {
        if floor.is_some_and(|lowest| h <= lowest) {
            return Err(Error::InexactDivision);
        }
        quotient.insert(mu, c);
        let below = sub(mu, alpha);
        let key = (height(below), below);
        let slot = rest.entry(key).or_insert(0);
        *slot += c;
        if *slot == 0 {
            rest.remove(&key);
        }
    }
    Ok(quotient)
}

/// Weyl character formula: `Σ_w ε(w) e^{w(λ+ρ)}` divided exactly by
/// `e^ρ ∏_{α>0} (1 - e^{-α})`.
pub fn weyl_character(lambda: Weight) -> Result<CharPolynomial> {
    let shifted = add(lambda.coords(), RHO);
    let mut numerator: BTreeMap<Coords, i64> = BTreeMap::new();
    for w in weyl_group() {
        *numerator.entry(sub(w.apply(shifted), RHO)).or_insert(0) += w.sign();
    }
    let mut quotient = numerator;
    for alpha in POSITIVE_ROOTS {
        quotient = divide_by_root_factor(&quotient, alpha)?;
    }
    let mut mults = BTreeMap::new();
    for (mu, c) in quotient {
        let c = u64::try_from(c).map_err(|_| Error::InexactDivision)?;
        if c > 0 {
            mults.insert(mu, c);
        }
    }
    Ok(CharPolynomial { mults })
}

/// Weyl dimension formula `(m+1)(n+1)(m+n+2)/2`.
pub fn dim(lambda: Weight) -> u64 {
    let (m, n) = (u64::from(lambda.m), u64::from(lambda.n));
    (m + 1) * (n + 1) * (m + n + 2) / 2
}

/// Multiplicity of the zero weight; zero off the root lattice.
pub fn weight_zero_mult(lambda: Weight) -> u64 {
    weyl_character(lambda)
        .expect("Weyl numerator of a dominant weight is divisible")
        .mult((0, 0))
}

/// Dimension of the invariants of `gl(2) = span{E_1, F_1, h_1} + C h_2`.
///
/// The centre of this `gl(2)` is spanned by `h_1 + 2h_2`, which kills `α_1`.
/// Inside its zero eigenspace, trivial `sl(2)(α_1)` summands are counted as
/// `mult(string weight 0) - mult(string weight 2)`. On coordinates `(a, b)`
/// the centre acts by `a + 2b` and the string weight is `a`, so the two
/// weights read are `(0, 0)` and `(2, -1) = α_1`.
pub fn gl2_invariant_dim(lambda: Weight) -> u64 {
    let ch = weyl_character(lambda).expect("Weyl numerator of a dominant weight is divisible");
    let in_centre_kernel = |mu: &Coords| mu.0 + 2 * mu.1 == 0;
    let at_string_weight = |a: i64| -> u64 {
        ch.weights()
            .filter(|(mu, _)| in_centre_kernel(mu) && mu.0 == a)
            .map(|(_, k)| k)
            .sum()
    };
    let zero = at_string_weight(0);
    let two = at_string_weight(2);
    zero.checked_sub(two)
        .expect("sl(2) string multiplicities are unimodal")
}
