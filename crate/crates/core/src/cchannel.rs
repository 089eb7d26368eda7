//! Noisy classical channels and their information measures.
//!
//! Two channel families are modeled: a binary symmetric channel that
//! delivers its input bit intact with probability z (1-bit channel), and a
//! joint 2-bit channel described by the probabilities of the four flip
//! patterns (both intact / first flipped / second flipped / both flipped).
//! Communication is quantified in bits as the mutual information between
//! input and output under uniform inputs, which for these symmetric
//! channels is also the capacity.

use rand::Rng;

use crate::error::{Error, Result};
use crate::stream::uniform01;

/// Tolerance on the sum of the four 2-bit pattern probabilities.
///
/// Constructors reject anything worse instead of renormalizing.
pub const PROBABILITY_SUM_TOL: f64 = 1e-9;

/// Binary entropy H(p) = -p log2(p) - (1-p) log2(1-p), in bits.
///
/// Uses the 0 log 0 = 0 convention, so H(0) = H(1) = 0.
pub fn shannon_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(plogp(p) + plogp(1.0 - p))
}

fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.log2()
    } else {
        0.0
    }
}

// ---------------------------------------------------------------------------
// 1-bit binary symmetric channel
// ---------------------------------------------------------------------------

/// A binary symmetric channel that transmits its input intact with
/// probability `intact` in [1/2, 1] and flipped otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneBitChannel {
    intact: f64,
}

impl OneBitChannel {
    pub fn new(intact: f64) -> Result<Self> {
        if !(0.5..=1.0).contains(&intact) {
            return Err(Error::OutOfRange {
                name: "intact probability",
                value: intact,
                min: 0.5,
                max: 1.0,
            });
        }
        Ok(Self { intact })
    }

    /// Probability that the bit arrives unflipped.
    pub fn intact_probability(&self) -> f64 {
        self.intact
    }

    /// Capacity 1 - H(intact) in bits; 0 at pure noise, 1 when noiseless.
    pub fn capacity(&self) -> f64 {
        1.0 - shannon_entropy(self.intact).expect("intact probability is in [1/2, 1]")
    }

    /// Transmits one bit, flipping it with probability 1 - intact.
    pub fn sample<R: Rng + ?Sized>(&self, input: bool, rng: &mut R) -> bool {
        if uniform01(rng) < self.intact {
            input
        } else {
            !input
        }
    }
}

// ---------------------------------------------------------------------------
// Joint 2-bit channel
// ---------------------------------------------------------------------------

/// An ordered pair of classical bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitPair {
    pub a: bool,
    pub b: bool,
}

impl BitPair {
    pub fn new(a: bool, b: bool) -> Self {
        Self { a, b }
    }
}

/// Which of the four flip patterns a 2-bit transmission suffered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlipPattern {
    /// Both bits intact.
    Intact,
    /// First bit flipped.
    FlipFirst,
    /// Second bit flipped.
    FlipSecond,
    /// Both bits flipped.
    FlipBoth,
}

impl FlipPattern {
    pub const ALL: [FlipPattern; 4] = [
        FlipPattern::Intact,
        FlipPattern::FlipFirst,
        FlipPattern::FlipSecond,
        FlipPattern::FlipBoth,
    ];

    /// Applies the pattern to a bit pair.
    pub fn apply(self, input: BitPair) -> BitPair {
        match self {
            FlipPattern::Intact => input,
            FlipPattern::FlipFirst => BitPair::new(!input.a, input.b),
            FlipPattern::FlipSecond => BitPair::new(input.a, !input.b),
            FlipPattern::FlipBoth => BitPair::new(!input.a, !input.b),
        }
    }
}

/// A joint 2-bit channel with pattern probabilities
/// (intact, flip first, flip second, flip both) summing to one.
///
/// The flip pattern is independent of the transmitted pair, so the channel
/// is symmetric and uniform inputs achieve its capacity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBitChannel {
    probs: [f64; 4],
}

impl TwoBitChannel {
    pub fn new(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<Self> {
        let names = ["p1", "p2", "p3", "p4"];
        let probs = [p1, p2, p3, p4];
        for (name, p) in names.iter().zip(probs) {
            if p < 0.0 || !p.is_finite() {
                return Err(Error::NegativeProbability { name, value: p });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { probs })
    }

    /// Pattern probabilities in the fixed order
    /// (intact, flip first, flip second, flip both).
    pub fn probabilities(&self) -> [f64; 4] {
        self.probs
    }

    /// Probability that both bits arrive intact.
    pub fn intact(&self) -> f64 {
        self.probs[0]
    }

    /// Mutual information between input and output under uniform 2-bit
    /// inputs: I = 2 + sum_i p_i log2(p_i), in bits.
    pub fn mutual_information(&self) -> f64 {
        let pattern_entropy: f64 = self.probs.iter().map(|&p| plogp(p)).sum();
        2.0 - pattern_entropy
    }

    /// Draws a flip pattern with probabilities (p1, p2, p3, p4).
    pub fn sample_pattern<R: Rng + ?Sized>(&self, rng: &mut R) -> FlipPattern {
        let u = uniform01(rng);
        let mut cumulative = 0.0;
        for (pattern, p) in FlipPattern::ALL.iter().zip(self.probs) {
            cumulative += p;
            if u < cumulative {
                return *pattern;
            }
        }
        FlipPattern::FlipBoth
    }

    /// Transmits a bit pair through the channel.
    pub fn sample<R: Rng + ?Sized>(&self, input: BitPair, rng: &mut R) -> BitPair {
        self.sample_pattern(rng).apply(input)
    }
}

/// The joint channel formed by sending the first bit through `first` and
/// the second bit through `second`, independently.
///
/// The mutual information of the product equals the sum of the two 1-bit
/// capacities.
pub fn product_channel(first: &OneBitChannel, second: &OneBitChannel) -> TwoBitChannel {
    let a = first.intact_probability();
    let b = second.intact_probability();
    TwoBitChannel {
        probs: [a * b, (1.0 - a) * b, a * (1.0 - b), (1.0 - a) * (1.0 - b)],
    }
}
