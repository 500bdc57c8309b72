#include "sclsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sclsim {

void ChannelModel::validate() const {
    auto chk_prob = [](double v, const char* what) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    };
    chk_prob(loss_prob, "loss_prob");
    chk_prob(dup_prob, "dup_prob");
    chk_prob(reorder_prob, "reorder_prob");
    if (!(bep >= 0.0 && bep <= 0.5))
        throw std::invalid_argument("bep must lie in [0, 0.5]");
    auto chk_rate = [](double v, const char* what) {
        if (!(v >= 0.0) || std::isinf(v))
            throw std::invalid_argument(std::string(what) + " must be a finite rate >= 0");
    };
    chk_rate(insertion_rate_per_hour, "insertion_rate_per_hour");
    chk_rate(masquerade_rate_per_hour, "masquerade_rate_per_hour");
    chk_rate(misroute_rate_per_hour, "misroute_rate_per_hour");
    if (blackout_from_us.has_value() != blackout_to_us.has_value())
        throw std::invalid_argument("blackout window needs both from and to");
    if (blackout_from_us && *blackout_from_us >= *blackout_to_us)
        throw std::invalid_argument("blackout window must satisfy from < to");
}

Hop::Hop(const ChannelModel& model, Rng rng) : model_(model), rng_(rng) {
    model_.validate();
}

Delivery Hop::corrupt_and_delay(const BitString& frame, FrameLabels labels,
                                std::uint64_t now_us) {
    Delivery d;
    d.frame = frame;
    if (model_.bep > 0.0) {
        bool flipped = false;
        for (std::size_t i = 0; i < d.frame.size(); ++i) {
            if (rng_.bernoulli(model_.bep)) {
                d.frame.flip_bit(i);
                flipped = true;
            }
        }
        if (flipped) labels.add(ErrorClass::corruption);
    }
    std::uint64_t delay = model_.delay_base_us;
    if (model_.delay_jitter_us > 0) delay += rng_.bounded(model_.delay_jitter_us + 1);
    d.arrival_us = now_us + delay;
    d.labels = labels;
    return d;
}

std::vector<Delivery> Hop::transmit(const BitString& frame, const FrameLabels& labels,
                                    std::uint64_t now_us) {
    ++ledger_.entered;
    std::vector<Delivery> out;

    const bool blacked_out = model_.blackout_from_us && now_us >= *model_.blackout_from_us &&
                             now_us < *model_.blackout_to_us;
    if (blacked_out || (model_.loss_prob > 0.0 && rng_.bernoulli(model_.loss_prob))) {
        ++ledger_.lost;
        return out;
    }

    Delivery primary = corrupt_and_delay(frame, labels, now_us);
    last_seen_ = primary;

    if (model_.dup_prob > 0.0 && rng_.bernoulli(model_.dup_prob)) {
        FrameLabels dup_labels = labels;
        dup_labels.add(ErrorClass::repetition);
        Delivery copy = corrupt_and_delay(frame, dup_labels, now_us);
        ++ledger_.duplicates_created;
        ++ledger_.delivered;
        out.push_back(std::move(copy));
    }

    if (held_) {
        // Adjacent-frame swap: the held frame takes this frame's arrival
        // instant and vice versa, clamped so nothing arrives in the past.
        std::swap(held_->arrival_us, primary.arrival_us);
        primary.arrival_us = std::max(primary.arrival_us, now_us);
        held_->labels.add(ErrorClass::incorrect_sequence);
        primary.labels.add(ErrorClass::incorrect_sequence);
        ++ledger_.delivered;
        --ledger_.held;
        out.push_back(std::move(*held_));
        held_.reset();
    }

    if (model_.reorder_prob > 0.0 && rng_.bernoulli(model_.reorder_prob)) {
        held_ = std::move(primary);
        ++ledger_.held;
    } else {
        ++ledger_.delivered;
        out.push_back(std::move(primary));
    }
    return out;
}

std::vector<Delivery> Hop::flush() {
    std::vector<Delivery> out;
    if (held_) {
        ++ledger_.delivered;
        --ledger_.held;
        out.push_back(std::move(*held_));
        held_.reset();
    }
    return out;
}

ChannelChain::ChannelChain(const std::vector<ChannelModel>& models, std::uint64_t master_seed,
                           std::uint64_t stream_base) {
    if (models.empty()) throw std::invalid_argument("channel chain needs at least one hop");
    hops_.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i)
        hops_.emplace_back(models[i], Rng::derive(master_seed, stream_base + i));
}

std::uint64_t ChannelChain::base_latency_us() const {
    std::uint64_t total = 0;
    for (const auto& h : hops_) total += h.model().delay_base_us;
    return total;
}

std::optional<std::uint64_t> next_poisson_arrival(double rate_per_hour, std::uint64_t now_us,
                                                  Rng& rng) {
    if (!(rate_per_hour > 0.0)) return std::nullopt;
    const double mean_us = static_cast<double>(kMicrosecondsPerHour) / rate_per_hour;
    const double gap = rng.exp1() * mean_us;
    // Round up so arrivals advance by at least one tick.
    std::uint64_t step = static_cast<std::uint64_t>(gap);
    if (step == 0) step = 1;
    return now_us + step;
}

} // namespace sclsim
