#include "sclsim/roaming.hpp"

#include <stdexcept>

namespace sclsim {

const char* roaming_event_name(RoamingEvent::Kind k) {
    switch (k) {
        case RoamingEvent::Kind::disconnect: return "disconnect";
        case RoamingEvent::Kind::commissioning_started: return "commissioning_started";
        case RoamingEvent::Kind::connect: return "connect";
        case RoamingEvent::Kind::safe_state: return "safe_state";
        case RoamingEvent::Kind::reset: return "reset";
        case RoamingEvent::Kind::reset_rejected: return "reset_rejected";
        case RoamingEvent::Kind::handover_rejected: return "handover_rejected";
    }
    return "?";
}

void RoamingConfig::validate() const {
    if (cells.empty()) throw std::invalid_argument("roaming config needs at least one cell");
    std::set<std::string> ids;
    for (const auto& c : cells)
        if (!ids.insert(c.id).second)
            throw std::invalid_argument("duplicate cell id: " + c.id);
    for (const auto& [from, to] : allowed_transitions)
        if (!ids.count(to))
            throw std::invalid_argument("allowed transition references unknown cell: " + to);
}

bool RoamingConfig::is_cell(const std::string& id) const { return find_cell(id) != nullptr; }

const CellConfig* RoamingConfig::find_cell(const std::string& id) const {
    for (const auto& c : cells)
        if (c.id == id) return &c;
    return nullptr;
}

RoamingState::RoamingState(const RoamingConfig& config, std::string initial_location,
                           std::optional<std::string> initial_connection, std::uint64_t now_us)
    : config_(config), connection_(std::move(initial_connection)),
      location_(std::move(initial_location)) {
    config_.validate();
    if (connection_ && !config_.is_cell(*connection_))
        throw std::invalid_argument("initial connection references unknown cell");
    for (const auto& c : config_.cells) cell_modes_[c.id] = CellMode::operational;
    enforce_accidental_entry(now_us);
}

void RoamingState::push(std::uint64_t t, RoamingEvent::Kind k, const std::string& cell) {
    log_.push_back(RoamingEvent{t, k, cell});
}

void RoamingState::enforce_accidental_entry(std::uint64_t now_us) {
    if (!config_.is_cell(location_)) return;
    if (connection_ == location_) return;
    if (cell_modes_[location_] != CellMode::safe_state) {
        cell_modes_[location_] = CellMode::safe_state;
        push(now_us, RoamingEvent::Kind::safe_state, location_);
    }
}

void RoamingState::request_handover(const std::string& target_cell, std::uint64_t now_us) {
    if (!config_.is_cell(target_cell))
        throw std::invalid_argument("unknown cell: " + target_cell);
    if (connection_ && *connection_ == target_cell) return;  // no-op
    if (!config_.allowed_transitions.count({location_, target_cell})) {
        push(now_us, RoamingEvent::Kind::handover_rejected, target_cell);
        throw std::logic_error("transition from " + location_ + " to " + target_cell +
                               " is not allowed");
    }
    if (connection_) {
        push(now_us, RoamingEvent::Kind::disconnect, *connection_);
        connection_.reset();
    }
    pending_ = Pending{target_cell, now_us + config_.commissioning_delay_us};
    push(now_us, RoamingEvent::Kind::commissioning_started, target_cell);
    enforce_accidental_entry(now_us);
    if (config_.commissioning_delay_us == 0) tick(now_us);
}

void RoamingState::tick(std::uint64_t now_us) {
    if (!pending_ || now_us < pending_->ready_us) return;
    const std::uint64_t t = pending_->ready_us;
    connection_ = pending_->target;
    pending_.reset();
    push(t, RoamingEvent::Kind::connect, *connection_);
    enforce_accidental_entry(t);
}

void RoamingState::move_device(const std::string& new_location, std::uint64_t now_us) {
    location_ = new_location;
    enforce_accidental_entry(now_us);
}

void RoamingState::cell_reset(const std::string& cell, std::uint64_t now_us) {
    if (!config_.is_cell(cell)) throw std::invalid_argument("unknown cell: " + cell);
    if (cell_modes_[cell] != CellMode::safe_state) {
        push(now_us, RoamingEvent::Kind::reset_rejected, cell);
        return;
    }
    cell_modes_[cell] = CellMode::operational;
    push(now_us, RoamingEvent::Kind::reset, cell);
    enforce_accidental_entry(now_us);
}

CellMode RoamingState::cell_mode(const std::string& cell) const {
    auto it = cell_modes_.find(cell);
    if (it == cell_modes_.end()) throw std::invalid_argument("unknown cell: " + cell);
    return it->second;
}

bool RoamingState::invariants_hold() const {
    // At most one connection is structural (a single optional); check the
    // accidental-entry rule and pending/connection exclusivity instead.
    if (pending_ && connection_) return false;
    if (config_.is_cell(location_) && connection_ != location_) {
        auto it = cell_modes_.find(location_);
        if (it == cell_modes_.end() || it->second != CellMode::safe_state) return false;
    }
    return true;
}

} // namespace sclsim
