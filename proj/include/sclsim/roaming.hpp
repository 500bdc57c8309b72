#ifndef SCLSIM_ROAMING_HPP
#define SCLSIM_ROAMING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sclsim {

/// One safety cell: a wireless master a device may lock into.
struct CellConfig {
    std::string id;
    std::uint64_t a_code = 0;
};

struct RoamingConfig {
    std::vector<CellConfig> cells;
    std::string device_id = "device";
    std::uint64_t commissioning_delay_us = 0;
    /// Directed (from location, to cell) pairs a handover may follow.
    std::set<std::pair<std::string, std::string>> allowed_transitions;
    unsigned cell_capacity = 120;  // informational; IOLW cell size bound

    void validate() const;
    bool is_cell(const std::string& id) const;
    const CellConfig* find_cell(const std::string& id) const;
};

enum class CellMode { operational, safe_state };

struct RoamingEvent {
    std::uint64_t time_us = 0;
    enum class Kind {
        disconnect,
        commissioning_started,
        connect,
        safe_state,          // accidental entry forced the cell down
        reset,
        reset_rejected,      // reset of an operational cell: warning no-op
        handover_rejected,
    } kind;
    std::string cell;
};

const char* roaming_event_name(RoamingEvent::Kind k);

/// Roaming discipline for a single device across predefined cells:
/// at most one master connection at any instant, disconnect strictly before
/// connect, commissioning gates every entry, and a safety cell entered by a
/// device not connected to it drops into the safe state.
class RoamingState {
public:
    RoamingState(const RoamingConfig& config, std::string initial_location,
                 std::optional<std::string> initial_connection, std::uint64_t now_us);

    /// Starts a handover: disconnect immediately, connect at
    /// now + commissioning delay (apply via tick()). A handover to the
    /// currently connected cell is a no-op. Throws std::invalid_argument for
    /// an unknown cell and std::logic_error for a disallowed transition.
    void request_handover(const std::string& target_cell, std::uint64_t now_us);

    /// Completes a pending commissioning whose ready time has come.
    void tick(std::uint64_t now_us);

    /// Physical movement; unconstrained, but entering a safety cell without
    /// being connected to it forces that cell into the safe state.
    void move_device(const std::string& new_location, std::uint64_t now_us);

    /// Commissioned recovery of a safe-stated cell. Resetting an operational
    /// cell is a warning no-op. If the device still sits in the cell without
    /// a connection to it, the accidental-entry rule retriggers immediately.
    void cell_reset(const std::string& cell, std::uint64_t now_us);

    const std::optional<std::string>& connection() const noexcept { return connection_; }
    const std::string& location() const noexcept { return location_; }
    CellMode cell_mode(const std::string& cell) const;
    bool handover_pending() const noexcept { return pending_.has_value(); }
    std::optional<std::uint64_t> pending_ready_us() const {
        return pending_ ? std::optional(pending_->ready_us) : std::nullopt;
    }
    const std::vector<RoamingEvent>& log() const noexcept { return log_; }

    /// Accidental-entry rule as a checkable state invariant.
    bool invariants_hold() const;

private:
    void enforce_accidental_entry(std::uint64_t now_us);
    void push(std::uint64_t t, RoamingEvent::Kind k, const std::string& cell);

    RoamingConfig config_;
    std::optional<std::string> connection_;
    std::string location_;
    struct Pending {
        std::string target;
        std::uint64_t ready_us;
    };
    std::optional<Pending> pending_;
    std::map<std::string, CellMode> cell_modes_;
    std::vector<RoamingEvent> log_;
};

} // namespace sclsim

#endif
