#ifndef SCLSIM_CHANNEL_HPP
#define SCLSIM_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sclsim/bits.hpp"
#include "sclsim/protocol.hpp"
#include "sclsim/rng.hpp"

namespace sclsim {

inline constexpr std::uint64_t kMicrosecondsPerHour = 3'600'000'000ull;

/// Parameterized black-channel hop: an error process, not a radio model.
/// Times are integer microseconds; event rates are per hour of simulated
/// time and drive Poisson arrival processes.
struct ChannelModel {
    std::string label = "hop";
    double bep = 0.0;            // per-bit flip probability (BSC)
    double loss_prob = 0.0;      // per frame
    double dup_prob = 0.0;       // per frame
    double reorder_prob = 0.0;   // per frame: swap arrival with the next frame
    std::uint64_t delay_base_us = 5000;   // IOLW-class latency bound by default
    std::uint64_t delay_jitter_us = 0;    // uniform in [0, jitter]
    double insertion_rate_per_hour = 0.0;
    double masquerade_rate_per_hour = 0.0;
    double misroute_rate_per_hour = 0.0;
    /// Optional total-outage window [from, to): every frame inside is dropped.
    std::optional<std::uint64_t> blackout_from_us;
    std::optional<std::uint64_t> blackout_to_us;

    void validate() const;
};

struct Delivery {
    std::uint64_t arrival_us = 0;
    BitString frame;
    FrameLabels labels;
};

struct TransmitResult {
    std::vector<Delivery> deliveries;
    /// Ground truth of a frame the hop swallowed, so deletion injections
    /// stay countable.
    std::optional<FrameLabels> lost;
};

/// Per-hop accounting; every frame that enters a hop leaves through exactly
/// one of the outcome counters (duplicates enter as fresh frames).
struct HopLedger {
    std::uint64_t entered = 0;
    std::uint64_t delivered = 0;
    std::uint64_t lost = 0;
    std::uint64_t duplicates_created = 0;
    std::uint64_t held = 0;  // sitting in the reorder buffer
};

/// Runtime state of one hop: the model plus its private random stream and
/// the one-slot reorder buffer.
class Hop {
public:
    Hop(const ChannelModel& model, Rng rng);

    /// Pushes one frame through the error process. May return zero, one or
    /// two deliveries for this frame, plus a previously held frame whose
    /// arrival time was swapped with this one.
    TransmitResult transmit(const BitString& frame, const FrameLabels& labels,
                            std::uint64_t now_us);

    /// Releases a held reorder frame, if any (end of traffic).
    std::vector<Delivery> flush();

    const ChannelModel& model() const noexcept { return model_; }
    const HopLedger& ledger() const noexcept { return ledger_; }

    /// Copy of the last frame that traversed this hop (replay source for the
    /// insertion injector); empty before any traffic.
    const std::optional<Delivery>& last_seen() const noexcept { return last_seen_; }

    Rng& rng() noexcept { return rng_; }

private:
    Delivery corrupt_and_delay(const BitString& frame, FrameLabels labels,
                               std::uint64_t now_us);

    ChannelModel model_;
    Rng rng_;
    std::optional<Delivery> held_;
    std::optional<Delivery> last_seen_;
    HopLedger ledger_;
};

/// Ordered chain of hops forming the end-to-end black channel. Rejects an
/// empty chain. Traversal is event-driven (the simulator feeds each hop's
/// deliveries into the next); delays add and ground-truth labels union.
class ChannelChain {
public:
    ChannelChain(const std::vector<ChannelModel>& models, std::uint64_t master_seed,
                 std::uint64_t stream_base);

    std::size_t size() const noexcept { return hops_.size(); }
    Hop& hop(std::size_t i) { return hops_[i]; }
    const Hop& hop(std::size_t i) const { return hops_[i]; }

    /// Sum of base latencies across hops (the no-fault end-to-end delay).
    std::uint64_t base_latency_us() const;

private:
    std::vector<Hop> hops_;
};

/// Exponential inter-arrival sampler for the hourly-rate injectors.
/// Returns the next arrival strictly after `now_us`, or nullopt if the rate
/// is zero.
std::optional<std::uint64_t> next_poisson_arrival(double rate_per_hour, std::uint64_t now_us,
                                                  Rng& rng);

} // namespace sclsim

#endif
