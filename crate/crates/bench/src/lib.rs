//! Shared fixtures for the criterion benchmarks.

use qteleport::cchannel::TwoBitChannel;
use qteleport::teleport::{Resource, TeleportScenario};

/// The channel at the non-classicality boundary, (1/2, 1/6, 1/6, 1/6).
pub fn boundary_channel() -> TwoBitChannel {
    let sixth = 1.0 / 6.0;
    TwoBitChannel::new(0.5, sixth, sixth, sixth).expect("boundary channel is valid")
}

/// A singlet-resource scenario over the boundary channel.
pub fn boundary_scenario() -> TeleportScenario {
    TeleportScenario::new(Resource::PureSinglet, boundary_channel())
        .expect("scenario parameters are valid")
}
