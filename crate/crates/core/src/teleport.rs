//! Teleportation output maps, exact fidelities, classical baselines, and a
//! stochastic end-to-end protocol simulator.
//!
//! The deterministic side of the protocol is the Pauli channel
//!
//!   rho' = p1 rho + p2 X rho X + p3 Z rho Z + p4 Y rho Y
//!
//! induced on Bob's qubit when Alice's 2-bit measurement record crosses a
//! noisy classical channel: a flip of the first bit leaves a residual X
//! error, a flip of the second a Z error, and a double flip a Y error.
//! Averaged over uniformly random pure inputs the fidelity is (1 + 2 p1)/3,
//! and (3 - alpha + 4 alpha p1)/6 when the entangled resource is a Werner
//! state of parameter alpha.

use rayon::prelude::*;

use crate::cchannel::{BitPair, TwoBitChannel};
use crate::error::{Error, Result};
use crate::qstate::{pure_state, trace_fidelity, DensityMatrix, PauliAxis};
use crate::stream::{substream, uniform01, RandomStream};

/// Samples processed per independent random sub-stream in Monte Carlo
/// drivers. Fixed so that results do not depend on scheduling.
const CHUNK_SAMPLES: usize = 4096;

/// Fidelity above which a run certifies the use of entanglement.
pub const CLASSICAL_FIDELITY_LIMIT: f64 = 2.0 / 3.0;

// ---------------------------------------------------------------------------
// Scenario description
// ---------------------------------------------------------------------------

/// The shared entangled resource of a teleportation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Resource {
    /// A perfect singlet pair.
    PureSinglet,
    /// A Werner state of the given parameter in [0, 1].
    Werner(f64),
}

/// One teleportation configuration: the entangled resource plus the noisy
/// 2-bit classical channel carrying Alice's measurement record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeleportScenario {
    resource: Resource,
    channel: TwoBitChannel,
}

impl TeleportScenario {
    pub fn new(resource: Resource, channel: TwoBitChannel) -> Result<Self> {
        if let Resource::Werner(alpha) = resource {
            if !(0.0..=1.0).contains(&alpha) {
                return Err(Error::OutOfRange {
                    name: "alpha",
                    value: alpha,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        Ok(Self { resource, channel })
    }

    pub fn resource(&self) -> Resource {
        self.resource
    }

    pub fn channel(&self) -> &TwoBitChannel {
        &self.channel
    }

    /// Closed-form fidelity of this scenario.
    pub fn exact_fidelity(&self) -> f64 {
        match self.resource {
            Resource::PureSinglet => fidelity_exact(&self.channel),
            Resource::Werner(alpha) => fidelity_exact_werner(alpha, &self.channel)
                .expect("alpha validated at construction"),
        }
    }
}

/// Monte Carlo fidelity estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

// ---------------------------------------------------------------------------
// Deterministic maps and closed forms
// ---------------------------------------------------------------------------

/// Bob's output state: p1 rho + p2 X rho X + p3 Z rho Z + p4 Y rho Y.
///
/// On the Bloch sphere the components contract as
/// n_x' = (p1 + p2 - p3 - p4) n_x, n_y' = (p1 - p2 - p3 + p4) n_y,
/// n_z' = (p1 - p2 + p3 - p4) n_z.
pub fn output_state(rho_in: &DensityMatrix, channel: &TwoBitChannel) -> DensityMatrix {
    let [p1, p2, p3, p4] = channel.probabilities();
    let branches = [
        (p1, rho_in.pauli_conjugate(PauliAxis::I)),
        (p2, rho_in.pauli_conjugate(PauliAxis::X)),
        (p3, rho_in.pauli_conjugate(PauliAxis::Z)),
        (p4, rho_in.pauli_conjugate(PauliAxis::Y)),
    ];
    // Channel probabilities may sit up to 1e-9 away from an exact unit
    // sum; normalizing keeps the output trace at 1 to rounding.
    let total = p1 + p2 + p3 + p4;
    let mut entries = [[num_complex::Complex64::new(0.0, 0.0); 2]; 2];
    for (weight, branch) in &branches {
        for i in 0..2 {
            for j in 0..2 {
                entries[i][j] += (*weight / total) * branch.entries()[i][j];
            }
        }
    }
    DensityMatrix::new(entries).expect("convex combination of valid states")
}

/// Exact fidelity (1 + 2 p1)/3 of teleportation over the given channel
/// with a singlet resource.
pub fn fidelity_exact(channel: &TwoBitChannel) -> f64 {
    (1.0 + 2.0 * channel.intact()) / 3.0
}

/// Exact fidelity (3 - alpha + 4 alpha p1)/6 with a Werner(alpha) resource.
///
/// Reduces to (1 + 2 p1)/3 at alpha = 1 and to the blind-guess value 1/2
/// at alpha = 0.
pub fn fidelity_exact_werner(alpha: f64, channel: &TwoBitChannel) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok((3.0 - alpha + 4.0 * alpha * channel.intact()) / 6.0)
}

/// Numerical sphere average of Tr[rho . output_state(rho)] on a grid
/// uniform in (cos(theta), phi): Simpson weights along cos(theta), equal
/// weights along phi.
///
/// Independent of the closed form; converges to [`fidelity_exact`] as the
/// grid grows (the integrand is a low-order polynomial on the sphere, so a
/// modest grid is already exact to rounding).
pub fn fidelity_quadrature_oracle(channel: &TwoBitChannel, grid_n: usize) -> f64 {
    assert!(grid_n >= 8, "quadrature grid must have at least 8 points");
    let intervals = grid_n + grid_n % 2;
    let h = 2.0 / intervals as f64;

    let mut integral = 0.0;
    for j in 0..=intervals {
        let u = (-1.0 + j as f64 * h).clamp(-1.0, 1.0);
        let theta = u.acos();
        let simpson = if j == 0 || j == intervals {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };

        let mut azimuthal_mean = 0.0;
        for m in 0..grid_n {
            let phi = (m as f64 + 0.5) * std::f64::consts::TAU / grid_n as f64;
            let rho = pure_state(theta, phi).expect("grid angles are in range");
            let out = output_state(&rho, channel);
            azimuthal_mean += trace_fidelity(&rho, &out).expect("input state is pure");
        }
        azimuthal_mean /= grid_n as f64;

        integral += simpson * azimuthal_mean;
    }
    // Simpson sum approximates the integral over u in [-1, 1]; the sphere
    // average divides by the measure 2.
    integral * h / 3.0 / 2.0
}

// ---------------------------------------------------------------------------
// Bell-outcome encoding
// ---------------------------------------------------------------------------

/// Pauli error left on Bob's qubit before correction, for Bell outcome k
/// in the fixed ordering (psi-, psi+, phi-, phi+) with a singlet resource.
/// Identical to the correction table since every Pauli is an involution.
fn outcome_pauli(outcome: usize) -> PauliAxis {
    [PauliAxis::I, PauliAxis::Z, PauliAxis::X, PauliAxis::Y][outcome]
}

/// Encoding of a Bell outcome as the transmitted bit pair: the first bit
/// selects the phi family, the second the "+" phase.
///
/// This is the assignment under which a flip of the first bit alone leaves
/// a residual X error, the second bit alone a Z error, and both a Y error.
fn encode_outcome(outcome: usize) -> BitPair {
    BitPair::new(outcome >= 2, outcome % 2 == 1)
}

fn correction_for(received: BitPair) -> PauliAxis {
    let index = 2 * usize::from(received.a) + usize::from(received.b);
    outcome_pauli(index)
}

/// Product of two Pauli operators with the global phase dropped.
fn pauli_product_axis(a: PauliAxis, b: PauliAxis) -> PauliAxis {
    use PauliAxis::*;
    match (a, b) {
        (I, other) | (other, I) => other,
        (X, X) | (Y, Y) | (Z, Z) => I,
        (X, Y) | (Y, X) => Z,
        (Y, Z) | (Z, Y) => X,
        (Z, X) | (X, Z) => Y,
    }
}

/// Detailed result of one protocol run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolOutcome {
    /// Net Pauli error on Bob's qubit after his correction.
    pub residual: PauliAxis,
    /// Overlap score Tr(rho_in rho_out) of the run.
    pub score: f64,
}

/// One end-to-end protocol run, reporting both the score and the residual
/// Pauli error branch.
///
/// The Bell outcome is drawn uniformly: with either the singlet or a Werner
/// resource, Alice's reduced state is maximally mixed, so all four outcomes
/// have probability 1/4 for every input.
pub fn simulate_protocol_outcome(
    theta: f64,
    phi: f64,
    scenario: &TeleportScenario,
    rng: &mut RandomStream,
) -> Result<ProtocolOutcome> {
    let rho_in = pure_state(theta, phi)?;

    let outcome = (uniform01(rng) * 4.0) as usize;
    let sent = encode_outcome(outcome);
    let received = scenario.channel().sample(sent, rng);

    let pre_correction_error = outcome_pauli(outcome);
    let correction = correction_for(received);
    let residual = pauli_product_axis(correction, pre_correction_error);

    let conditional = rho_in.pauli_conjugate(residual);
    let rho_out = match scenario.resource() {
        Resource::PureSinglet => conditional,
        // Linearity in the resource: the white-noise part of the Werner
        // state teleports to the maximally mixed state.
        Resource::Werner(alpha) => mix_with_identity(&conditional, alpha),
    };

    let score = trace_fidelity(&rho_in, &rho_out)?;
    Ok(ProtocolOutcome { residual, score })
}

/// One end-to-end protocol run; returns the overlap score of that run.
pub fn simulate_protocol(
    theta: f64,
    phi: f64,
    scenario: &TeleportScenario,
    rng: &mut RandomStream,
) -> Result<f64> {
    simulate_protocol_outcome(theta, phi, scenario, rng).map(|outcome| outcome.score)
}

fn mix_with_identity(rho: &DensityMatrix, weight: f64) -> DensityMatrix {
    let mixed = DensityMatrix::maximally_mixed();
    let mut entries = *rho.entries();
    for i in 0..2 {
        for j in 0..2 {
            entries[i][j] = weight * entries[i][j] + (1.0 - weight) * mixed.entries()[i][j];
        }
    }
    DensityMatrix::new(entries).expect("convex combination of valid states")
}

// ---------------------------------------------------------------------------
// Monte Carlo drivers
// ---------------------------------------------------------------------------

/// Averages a scoring function over Haar-uniform pure inputs
/// (cos(theta) uniform on [-1, 1], phi uniform on [0, 2 pi)).
///
/// Samples are split into fixed-size chunks; chunk k draws from the
/// independent sub-stream k of the master seed and partial sums are reduced
/// in chunk order, so the estimate is reproducible bit-for-bit no matter
/// how chunks are scheduled across threads.
fn monte_carlo_over_haar<F>(samples: usize, seed: u64, score: F) -> FidelityEstimate
where
    F: Fn(f64, f64, &mut RandomStream) -> f64 + Sync,
{
    assert!(samples >= 100, "need at least 100 Monte Carlo samples");
    let chunks = samples.div_ceil(CHUNK_SAMPLES);
    let partials: Vec<(f64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = substream(seed, chunk as u64);
            let start = chunk * CHUNK_SAMPLES;
            let count = CHUNK_SAMPLES.min(samples - start);
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..count {
                let cos_theta = 2.0 * uniform01(&mut rng) - 1.0;
                let theta = cos_theta.acos();
                let phi = std::f64::consts::TAU * uniform01(&mut rng);
                let s = score(theta, phi, &mut rng);
                sum += s;
                sum_sq += s * s;
            }
            (sum, sum_sq)
        })
        .collect();

    let (sum, sum_sq) = partials
        .iter()
        .fold((0.0, 0.0), |(s, q), (ps, pq)| (s + ps, q + pq));
    let n = samples as f64;
    let mean = sum / n;
    let variance = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
    FidelityEstimate {
        mean,
        std_error: (variance / n).sqrt(),
        samples,
    }
}

/// Monte Carlo estimate of the teleportation fidelity of a scenario.
///
/// Reproducible for a fixed seed; the mean agrees with the closed form
/// within a few standard errors.
pub fn fidelity_monte_carlo(
    scenario: &TeleportScenario,
    samples: usize,
    seed: u64,
) -> FidelityEstimate {
    monte_carlo_over_haar(samples, seed, |theta, phi, rng| {
        simulate_protocol(theta, phi, scenario, rng).expect("Haar angles are in range")
    })
}

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

/// Fidelity of guessing a fixed state with no communication at all: 1/2.
pub fn classical_guess_fidelity() -> f64 {
    0.5
}

/// Monte Carlo check of the blind-guess baseline: Bob always hands out
/// `guess`, the score is averaged over Haar-random inputs.
pub fn classical_guess_monte_carlo(
    guess: &DensityMatrix,
    samples: usize,
    seed: u64,
) -> FidelityEstimate {
    monte_carlo_over_haar(samples, seed, |theta, phi, _rng| {
        let rho_in = pure_state(theta, phi).expect("Haar angles are in range");
        trace_fidelity(&rho_in, guess).expect("input state is pure")
    })
}

/// Best fidelity achievable with classical communication only: 2/3,
/// attained by the measure-along-z-and-prepare strategy.
pub fn popescu_classical_fidelity() -> f64 {
    2.0 / 3.0
}

/// Success probability of the measure-and-prepare strategy for a fixed
/// input colatitude: cos^4(theta/2) + sin^4(theta/2).
pub fn popescu_success_probability(theta: f64) -> f64 {
    let c = (theta / 2.0).cos().powi(2);
    let s = (theta / 2.0).sin().powi(2);
    c * c + s * s
}

/// Monte Carlo simulation of the measure-and-prepare strategy: Alice
/// measures along z and sends the outcome, Bob prepares the corresponding
/// basis state. Averages to 2/3.
pub fn popescu_monte_carlo(samples: usize, seed: u64) -> FidelityEstimate {
    monte_carlo_over_haar(samples, seed, |theta, phi, rng| {
        let rho_in = pure_state(theta, phi).expect("Haar angles are in range");
        let p_up = (1.0 + theta.cos()) / 2.0;
        let prepared = if uniform01(rng) < p_up {
            DensityMatrix::ket_zero()
        } else {
            DensityMatrix::ket_one()
        };
        trace_fidelity(&rho_in, &prepared).expect("input state is pure")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cchannel::{product_channel, FlipPattern, OneBitChannel};
    use crate::stream::master;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn boundary_channel() -> TwoBitChannel {
        let sixth = 1.0 / 6.0;
        TwoBitChannel::new(0.5, sixth, sixth, sixth).unwrap()
    }

    #[test]
    fn output_state_identity_channel() {
        let rho = pure_state(1.0, 2.0).unwrap();
        let channel = TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap();
        let out = output_state(&rho, &channel);
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(
                    out.entries()[i][j].re,
                    rho.entries()[i][j].re,
                    epsilon = 1e-15
                );
                assert_abs_diff_eq!(
                    out.entries()[i][j].im,
                    rho.entries()[i][j].im,
                    epsilon = 1e-15
                );
            }
        }
    }

    #[test]
    fn output_state_full_noise_contracts_to_mixed() {
        let rho = pure_state(0.7, 0.3).unwrap();
        let channel = TwoBitChannel::new(0.25, 0.25, 0.25, 0.25).unwrap();
        let out = output_state(&rho, &channel);
        assert_abs_diff_eq!(out.bloch_vector().norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn output_state_boundary_channel_shrinks_bloch_vector() {
        // Isotropic shrink by 2f - 1 = 1/3 at p1 = 1/2, p2 = p3 = p4 = 1/6.
        let out = output_state(&DensityMatrix::ket_zero(), &boundary_channel());
        let n = out.bloch_vector();
        assert_abs_diff_eq!(n.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n.y, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n.z, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out.entries()[0][0].re, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out.entries()[1][1].re, 1.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn output_state_tolerates_channel_sum_slack() {
        // Probabilities may miss an exact unit sum by up to 1e-9 and the
        // output must still satisfy the tighter matrix invariants.
        let sixth = 1.0 / 6.0;
        let channel = TwoBitChannel::new(0.5, sixth, sixth, sixth - 5e-10).unwrap();
        let out = output_state(&DensityMatrix::ket_zero(), &channel);
        assert!(DensityMatrix::new(*out.entries()).is_ok());
    }

    #[test]
    fn output_state_bloch_contraction_coefficients() {
        let channel = TwoBitChannel::new(0.6, 0.2, 0.15, 0.05).unwrap();
        let [p1, p2, p3, p4] = channel.probabilities();
        let rho = pure_state(1.1, 0.9).unwrap();
        let n = rho.bloch_vector();
        let out = output_state(&rho, &channel).bloch_vector();
        assert_abs_diff_eq!(out.x, (p1 + p2 - p3 - p4) * n.x, epsilon = 1e-12);
        assert_abs_diff_eq!(out.y, (p1 - p2 - p3 + p4) * n.y, epsilon = 1e-12);
        assert_abs_diff_eq!(out.z, (p1 - p2 + p3 - p4) * n.z, epsilon = 1e-12);
    }

    #[test]
    fn fidelity_exact_examples() {
        assert_abs_diff_eq!(
            fidelity_exact(&TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap()),
            1.0
        );
        assert_abs_diff_eq!(fidelity_exact(&boundary_channel()), 2.0 / 3.0);

        let eta = OneBitChannel::new(0.9).unwrap();
        let product = product_channel(&eta, &eta);
        assert_abs_diff_eq!(fidelity_exact(&product), 0.873333333333333, epsilon = 1e-12);
    }

    #[test]
    fn fidelity_exact_is_monotone_in_intact_probability() {
        let mut previous = 0.0;
        for i in 0..=100 {
            let p1 = i as f64 / 100.0;
            let rest = (1.0 - p1) / 3.0;
            let f = fidelity_exact(&TwoBitChannel::new(p1, rest, rest, rest).unwrap());
            assert!(f > previous || i == 0);
            previous = f;
        }
    }

    #[test]
    fn fidelity_werner_examples() {
        let perfect = TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(fidelity_exact_werner(1.0, &perfect).unwrap(), 1.0);
        assert_abs_diff_eq!(
            fidelity_exact_werner(0.0, &boundary_channel()).unwrap(),
            0.5
        );
        // Separability boundary: alpha = 1/3 with a perfect channel gives 2/3.
        assert_abs_diff_eq!(
            fidelity_exact_werner(1.0 / 3.0, &perfect).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-15
        );
        assert!(fidelity_exact_werner(-0.1, &perfect).is_err());
        assert!(fidelity_exact_werner(1.1, &perfect).is_err());
    }

    #[test]
    fn fidelity_werner_reduces_to_singlet_form() {
        for i in 0..20 {
            let p1 = 0.25 + 0.75 * i as f64 / 19.0;
            let rest = (1.0 - p1) / 3.0;
            let channel = TwoBitChannel::new(p1, rest, rest, rest).unwrap();
            assert_abs_diff_eq!(
                fidelity_exact_werner(1.0, &channel).unwrap(),
                fidelity_exact(&channel),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn fidelity_werner_is_monotone_in_alpha_and_intact() {
        // 100 x 100 grid over (alpha, p1); strictly increasing along both
        // axes (p1 > 1/4 keeps the Werner term's coefficient positive).
        let channel_at = |p1: f64| {
            let rest = (1.0 - p1) / 3.0;
            TwoBitChannel::new(p1, rest, rest, rest).unwrap()
        };
        let grid: Vec<f64> = (0..100).map(|i| i as f64 / 99.0).collect();
        for (ai, &alpha) in grid.iter().enumerate() {
            for (pi, &step) in grid.iter().enumerate() {
                let p1 = 0.26 + (1.0 - 0.26) * step;
                let here = fidelity_exact_werner(alpha, &channel_at(p1)).unwrap();
                if ai > 0 {
                    let prev_alpha = grid[ai - 1];
                    assert!(here > fidelity_exact_werner(prev_alpha, &channel_at(p1)).unwrap());
                }
                if pi > 0 && alpha > 0.0 {
                    let prev_p1 = 0.26 + (1.0 - 0.26) * grid[pi - 1];
                    assert!(here > fidelity_exact_werner(alpha, &channel_at(prev_p1)).unwrap());
                }
            }
        }
    }

    #[test]
    fn quadrature_oracle_examples() {
        let perfect = TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(
            fidelity_quadrature_oracle(&perfect, 64),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            fidelity_quadrature_oracle(&boundary_channel(), 200),
            2.0 / 3.0,
            epsilon = 1e-6
        );
        let product = product_channel(
            &OneBitChannel::new(0.8).unwrap(),
            &OneBitChannel::new(0.7).unwrap(),
        );
        assert_abs_diff_eq!(
            fidelity_quadrature_oracle(&product, 200),
            (1.0 + 2.0 * 0.56) / 3.0,
            epsilon = 1e-6
        );
    }

    #[test]
    fn encoding_flip_to_residual_error_table() {
        // Whatever the outcome, a first-bit flip must leave an X error, a
        // second-bit flip a Z error, and a double flip a Y error.
        for outcome in 0..4 {
            let sent = encode_outcome(outcome);
            let cases = [
                (FlipPattern::Intact, PauliAxis::I),
                (FlipPattern::FlipFirst, PauliAxis::X),
                (FlipPattern::FlipSecond, PauliAxis::Z),
                (FlipPattern::FlipBoth, PauliAxis::Y),
            ];
            for (pattern, expected) in cases {
                let received = pattern.apply(sent);
                let residual = pauli_product_axis(correction_for(received), outcome_pauli(outcome));
                assert_eq!(residual, expected, "outcome {outcome}, {pattern:?}");
            }
        }
    }

    #[test]
    fn bell_outcomes_are_uniform_for_any_input() {
        // The sampled uniform distribution matches the exact projector
        // probabilities Tr[B_k (rho (x) 1/2)] for random inputs.
        use crate::qstate::{bell_state, tensor_product};
        let mut rng = master(3);
        for _ in 0..100 {
            let theta = uniform01(&mut rng) * PI;
            let phi = uniform01(&mut rng) * std::f64::consts::TAU * 0.999_999;
            let rho = pure_state(theta, phi).unwrap();
            let joint = tensor_product(&rho, &DensityMatrix::maximally_mixed());
            for k in 0..4 {
                let p = bell_state(k).unwrap().overlap(&joint);
                assert_abs_diff_eq!(p, 0.25, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn simulate_protocol_noiseless_scores_one() {
        let scenario = TeleportScenario::new(
            Resource::PureSinglet,
            TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap(),
        )
        .unwrap();
        let mut rng = master(4);
        for _ in 0..200 {
            let score = simulate_protocol(0.4, 5.0, &scenario, &mut rng).unwrap();
            assert_abs_diff_eq!(score, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn simulate_protocol_boundary_channel_matches_closed_form() {
        let scenario = TeleportScenario::new(Resource::PureSinglet, boundary_channel()).unwrap();
        let estimate = fidelity_monte_carlo(&scenario, 1_000_000, 5);
        let deviation = (estimate.mean - 2.0 / 3.0).abs();
        assert!(
            deviation <= 3.0 * estimate.std_error,
            "mean {} deviates by {} (3 sigma = {})",
            estimate.mean,
            deviation,
            3.0 * estimate.std_error
        );
    }

    #[test]
    fn simulate_protocol_werner_noiseless() {
        // F = (1 + alpha)/2 with a perfect classical channel. The score is
        // the same on every run, so the standard error collapses to zero
        // and only rounding noise remains.
        let scenario = TeleportScenario::new(
            Resource::Werner(0.6),
            TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap(),
        )
        .unwrap();
        let estimate = fidelity_monte_carlo(&scenario, 1_000_000, 6);
        let deviation = (estimate.mean - 0.8).abs();
        assert!(deviation <= 3.0 * estimate.std_error + 1e-12);
    }

    #[test]
    fn monte_carlo_noiseless_has_zero_error() {
        let scenario = TeleportScenario::new(
            Resource::PureSinglet,
            TwoBitChannel::new(1.0, 0.0, 0.0, 0.0).unwrap(),
        )
        .unwrap();
        let estimate = fidelity_monte_carlo(&scenario, 10_000, 0);
        assert_abs_diff_eq!(estimate.mean, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(estimate.std_error, 0.0, epsilon = 1e-9);
        assert_eq!(estimate.samples, 10_000);
    }

    #[test]
    fn monte_carlo_werner_scenario_matches_closed_form() {
        let tenth = 0.1 / 3.0;
        let channel = TwoBitChannel::new(0.9, tenth, tenth, tenth).unwrap();
        let scenario = TeleportScenario::new(Resource::Werner(0.5), channel).unwrap();
        let estimate = fidelity_monte_carlo(&scenario, 1_000_000, 7);
        let analytic = (3.0 - 0.5 + 1.8) / 6.0;
        assert_abs_diff_eq!(analytic, 0.716666666666667, epsilon = 1e-12);
        assert!((estimate.mean - analytic).abs() <= 4.0 * estimate.std_error);
    }

    #[test]
    fn monte_carlo_is_reproducible_and_scheduler_independent() {
        let scenario = TeleportScenario::new(Resource::PureSinglet, boundary_channel()).unwrap();
        let first = fidelity_monte_carlo(&scenario, 50_000, 42);
        let second = fidelity_monte_carlo(&scenario, 50_000, 42);
        assert_eq!(first, second);

        // Serial re-evaluation over the same chunk layout (per-chunk
        // partial sums, reduced in chunk order) must agree bit for bit
        // with the parallel driver.
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        let samples = 50_000usize;
        let chunks = samples.div_ceil(CHUNK_SAMPLES);
        for chunk in 0..chunks {
            let mut rng = substream(42, chunk as u64);
            let count = CHUNK_SAMPLES.min(samples - chunk * CHUNK_SAMPLES);
            let mut chunk_sum = 0.0;
            let mut chunk_sum_sq = 0.0;
            for _ in 0..count {
                let cos_theta = 2.0 * uniform01(&mut rng) - 1.0;
                let phi = std::f64::consts::TAU * uniform01(&mut rng);
                let s = simulate_protocol(cos_theta.acos(), phi, &scenario, &mut rng).unwrap();
                chunk_sum += s;
                chunk_sum_sq += s * s;
            }
            sum += chunk_sum;
            sum_sq += chunk_sum_sq;
        }
        let mean = sum / samples as f64;
        assert_eq!(first.mean, mean);
        let variance = ((sum_sq - samples as f64 * mean * mean) / (samples as f64 - 1.0)).max(0.0);
        assert_eq!(first.std_error, (variance / samples as f64).sqrt());
    }

    #[test]
    fn classical_guess_baseline() {
        assert_abs_diff_eq!(classical_guess_fidelity(), 0.5);
        let up = classical_guess_monte_carlo(&DensityMatrix::ket_zero(), 1_000_000, 8);
        assert!((up.mean - 0.5).abs() <= 4.0 * up.std_error);
        let down = classical_guess_monte_carlo(&DensityMatrix::ket_one(), 1_000_000, 9);
        assert!((down.mean - 0.5).abs() <= 4.0 * down.std_error);
    }

    #[test]
    fn popescu_baseline() {
        assert_abs_diff_eq!(popescu_classical_fidelity(), 2.0 / 3.0);
        assert_abs_diff_eq!(popescu_success_probability(0.0), 1.0);
        assert_abs_diff_eq!(popescu_success_probability(FRAC_PI_2), 0.5, epsilon = 1e-15);
        let estimate = popescu_monte_carlo(1_000_000, 10);
        assert!((estimate.mean - 2.0 / 3.0).abs() <= 4.0 * estimate.std_error);
    }

    #[test]
    fn scenario_rejects_invalid_alpha() {
        assert!(TeleportScenario::new(Resource::Werner(1.5), boundary_channel()).is_err());
    }
}
