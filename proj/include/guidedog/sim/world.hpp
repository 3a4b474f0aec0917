#pragma once

#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "guidedog/geometry.hpp"

namespace guidedog::sim {

class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The closed set of object labels a fiducial can carry.
enum class Label { chair, person, donut, apple, refrigerator, oven, microwave };

const char* to_string(Label label);
std::optional<Label> label_from_string(std::string_view name);

struct Fiducial {
    int id = 0;  // unique within a world, >= 1
    Label label = Label::chair;
    Vec2 position;
};

struct RobotState {
    Vec2 position;
    double heading = 0.0;  // radians in [-pi, pi)
    double speed = 1.0;    // m/s, constant
};

enum class EventKind { moved, spoke, nudged, waited, safety_violation };

const char* to_string(EventKind kind);

struct WorldEvent {
    double time = 0.0;  // simulated seconds
    EventKind kind = EventKind::moved;
    std::string detail;
};

struct ActionResult {
    bool ok = true;
    double elapsed = 0.0;  // simulated seconds
    std::string message;
};

/// Tunable constants. Units are meters and seconds throughout.
struct SimConfig {
    double speed = 1.0;                 // walking speed
    double person_safety_radius = 0.5;  // standoff kept from person fiducials while walking
    double contact_standoff = 0.3;      // final separation after a nudge
    double nudge_speed_factor = 0.5;    // approach speed fraction during a nudge
    double utterance_seconds = 1.0;     // simulated time per say()
    double headless_wait_delay = 2.0;   // auto-delivery delay for wait_for_user
    double max_wait = 300.0;            // wait_for_user gives up after this long
};

struct Bounds {
    double min_x = -10.0, min_y = -10.0, max_x = 10.0, max_y = 10.0;
    bool contains(Vec2 p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
};

struct WorldLayout {
    int context_id = 0;
    Bounds bounds;
    Vec2 robot_start;
    double robot_heading = 0.0;
    std::vector<Fiducial> fiducials;
};

/// Cross-context channel delivering the user's ready signal to a blocked
/// wait_for_user. deliver() is safe to call from any thread.
class UserSignal {
public:
    void deliver();
    /// Blocks until a delivery arrives or max_wait wall seconds pass.
    bool wait(double max_wait_s);

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    int pending_ = 0;
};

enum class SignalState { pending, delivered };

/// Deterministic 2D room with one robot and a static fiducial scene.
/// Single-threaded per instance; distinct instances are independent.
class World {
public:
    explicit World(WorldLayout layout, SimConfig config = {});

    /// Builds the canonical world for one of the seven trial contexts.
    static World spawn(int context_id, SimConfig config = {});

    const Bounds& bounds() const { return bounds_; }
    const RobotState& robot() const { return robot_; }
    double sim_clock() const { return sim_clock_; }
    const std::vector<WorldEvent>& events() const { return events_; }
    SignalState user_signal() const { return signal_state_; }
    const SimConfig& config() const { return config_; }

    /// All fiducials, ordered by id. Visibility is total in this simulation.
    const std::vector<Fiducial>& visible_fiducials() const { return fiducials_; }

    const Fiducial* find_fiducial(int id) const;
    std::vector<Fiducial> fiducials_with(Label label) const;

    /// Fiducial of the given label minimizing distance to the robot;
    /// ties broken by lowest id. Empty when no such label is present.
    std::optional<Fiducial> nearest(Label label) const;

    /// Walks straight toward target, stopping outside person safety discs.
    /// Crossing strictly inside a disc en route records a safety_violation
    /// and clears ok (the move still happens; the simulator is permissive).
    ActionResult walk_to(Vec2 target);

    /// Approaches the fiducial to contact standoff at reduced speed. The
    /// safety radius of the target is deliberately overridden.
    ActionResult nudge(int fiducial_id);

    /// Records a spoken utterance. Rejects empty text.
    ActionResult say(const std::string& text);

    /// Blocks for the user's ready signal (interactive) or auto-delivers
    /// after the configured simulated delay (headless). ok=false on timeout.
    ActionResult wait_for_user(const std::string& prompt_text);

    /// Interactive mode: attach the channel the harness delivers through.
    void attach_user_signal(std::shared_ptr<UserSignal> signal) { signal_ = std::move(signal); }
    /// Called with the prompt text when an interactive wait begins.
    void on_wait_prompt(std::function<void(const std::string&)> fn) { wait_prompt_ = std::move(fn); }

    void set_max_wait(double seconds) { config_.max_wait = seconds; }

    /// Deterministic one-line-per-item scene summary fed to the agents.
    std::string digest() const;

    /// Event trace as line-delimited records: time<TAB>kind<TAB>detail.
    std::string trace_text() const;

private:
    void append_event(EventKind kind, std::string detail);
    ActionResult move_along(Vec2 target, double speed, const Fiducial* standoff_exempt);

    SimConfig config_;
    Bounds bounds_;
    RobotState robot_;
    std::vector<Fiducial> fiducials_;  // sorted by id
    double sim_clock_ = 0.0;
    std::vector<WorldEvent> events_;
    SignalState signal_state_ = SignalState::pending;
    std::shared_ptr<UserSignal> signal_;
    std::function<void(const std::string&)> wait_prompt_;
};

/// The fixed per-trial layout constants (context ids 1..7).
WorldLayout builtin_layout(int context_id);

/// Structured-text layout files: one `context`/`bounds`/`robot` line plus one
/// `fiducial id label x y` line per object. '#' starts a comment.
WorldLayout parse_layout(std::string_view text);
std::string serialize_layout(const WorldLayout& layout);
WorldLayout load_layout_file(const std::string& path);

}  // namespace guidedog::sim
