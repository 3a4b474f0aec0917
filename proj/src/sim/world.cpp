#include "guidedog/sim/world.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace guidedog::sim {

namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string point_str(Vec2 p) { return "(" + fixed(p.x, 2) + ", " + fixed(p.y, 2) + ")"; }

constexpr double kEps = 1e-9;

}  // namespace

const char* to_string(Label label) {
    switch (label) {
        case Label::chair: return "chair";
        case Label::person: return "person";
        case Label::donut: return "donut";
        case Label::apple: return "apple";
        case Label::refrigerator: return "refrigerator";
        case Label::oven: return "oven";
        case Label::microwave: return "microwave";
    }
    return "?";
}

std::optional<Label> label_from_string(std::string_view name) {
    static constexpr Label all[] = {Label::chair,        Label::person, Label::donut, Label::apple,
                                    Label::refrigerator, Label::oven,   Label::microwave};
    for (Label l : all)
        if (name == to_string(l)) return l;
    return std::nullopt;
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::moved: return "moved";
        case EventKind::spoke: return "spoke";
        case EventKind::nudged: return "nudged";
        case EventKind::waited: return "waited";
        case EventKind::safety_violation: return "safety_violation";
    }
    return "?";
}

void UserSignal::deliver() {
    {
        std::lock_guard lock(mutex_);
        ++pending_;
    }
    cv_.notify_all();
}

bool UserSignal::wait(double max_wait_s) {
    std::unique_lock lock(mutex_);
    const bool got = cv_.wait_for(lock, std::chrono::duration<double>(max_wait_s),
                                  [&] { return pending_ > 0; });
    if (got) --pending_;
    return got;
}

World::World(WorldLayout layout, SimConfig config)
    : config_(config), bounds_(layout.bounds) {
    robot_.position = layout.robot_start;
    robot_.heading = normalize_angle(layout.robot_heading);
    robot_.speed = config_.speed;
    if (!bounds_.contains(robot_.position)) throw SimError("robot start outside world bounds");
    fiducials_ = std::move(layout.fiducials);
    std::sort(fiducials_.begin(), fiducials_.end(),
              [](const Fiducial& a, const Fiducial& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < fiducials_.size(); ++i)
        if (fiducials_[i].id == fiducials_[i + 1].id)
            throw SimError("duplicate fiducial id " + std::to_string(fiducials_[i].id));
    for (const Fiducial& f : fiducials_)
        if (f.id < 1) throw SimError("fiducial ids must be >= 1");
}

World World::spawn(int context_id, SimConfig config) {
    return World(builtin_layout(context_id), config);
}

const Fiducial* World::find_fiducial(int id) const {
    for (const Fiducial& f : fiducials_)
        if (f.id == id) return &f;
    return nullptr;
}

std::vector<Fiducial> World::fiducials_with(Label label) const {
    std::vector<Fiducial> out;
    for (const Fiducial& f : fiducials_)
        if (f.label == label) out.push_back(f);
    return out;
}

std::optional<Fiducial> World::nearest(Label label) const {
    const Fiducial* best = nullptr;
    double best_d = 0.0;
    for (const Fiducial& f : fiducials_) {
        if (f.label != label) continue;
        const double d = distance(robot_.position, f.position);
        if (!best || d < best_d) {  // scan is id-ordered, so ties keep the lowest id
            best = &f;
            best_d = d;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

void World::append_event(EventKind kind, std::string detail) {
    events_.push_back({sim_clock_, kind, std::move(detail)});
}

ActionResult World::move_along(Vec2 target, double speed, const Fiducial* standoff_exempt) {
    // Clamp the endpoint outside person safety discs (unless exempt).
    Vec2 end = target;
    const double r = config_.person_safety_radius;
    const Fiducial* blocking = nullptr;
    for (const Fiducial& f : fiducials_) {
        if (f.label != Label::person) continue;
        if (standoff_exempt && f.id == standoff_exempt->id) continue;
        const double d = distance(target, f.position);
        if (d < r - kEps && (!blocking || d < distance(target, blocking->position)))
            blocking = &f;
    }
    if (blocking) {
        const Vec2 dir = unit_or(target - blocking->position,
                                 unit_or(robot_.position - blocking->position, {1.0, 0.0}));
        end = blocking->position + r * dir;
    }

    const Vec2 start = robot_.position;
    bool violation = false;
    std::string violated_by;
    for (const Fiducial& f : fiducials_) {
        if (f.label != Label::person) continue;
        if (standoff_exempt && f.id == standoff_exempt->id) continue;
        if (segment_point_distance(start, end, f.position) < r - kEps) {
            violation = true;
            violated_by = "fiducial " + std::to_string(f.id);
            break;
        }
    }

    const double len = distance(start, end);
    const double elapsed = len / speed;
    sim_clock_ += elapsed;
    robot_.position = end;
    if (len > kEps) robot_.heading = normalize_angle(std::atan2(end.y - start.y, end.x - start.x));

    ActionResult result;
    result.elapsed = elapsed;
    result.ok = !violation;
    result.message = "moved to " + point_str(end);
    if (standoff_exempt == nullptr) append_event(EventKind::moved, "walked to " + point_str(end));
    if (violation) {
        append_event(EventKind::safety_violation,
                     "path passed within " + fixed(r, 2) + " m of person " + violated_by);
        result.message += " with safety violation";
    }
    return result;
}

ActionResult World::walk_to(Vec2 target) {
    if (!bounds_.contains(target))
        throw SimError("walk_to: target " + point_str(target) + " out of bounds");
    return move_along(target, config_.speed, nullptr);
}

ActionResult World::nudge(int fiducial_id) {
    const Fiducial* f = find_fiducial(fiducial_id);
    if (!f) throw SimError("nudge: unknown fiducial id " + std::to_string(fiducial_id));

    const Vec2 approach = unit_or(robot_.position - f->position, {1.0, 0.0});
    const Vec2 end = f->position + config_.contact_standoff * approach;
    ActionResult moved = move_along(end, config_.speed * config_.nudge_speed_factor, f);
    append_event(EventKind::nudged, "nudged fiducial " + std::to_string(f->id) + " (" +
                                        to_string(f->label) + ") at " + point_str(f->position));
    ActionResult result;
    result.ok = true;  // the nudge itself succeeds; any violation is already on the trace
    result.elapsed = moved.elapsed;
    result.message = "nudged fiducial " + std::to_string(f->id);
    return result;
}

ActionResult World::say(const std::string& text) {
    if (text.empty()) throw SimError("say: empty utterance");
    sim_clock_ += config_.utterance_seconds;
    append_event(EventKind::spoke, text);
    return {true, config_.utterance_seconds, "said: " + text};
}

ActionResult World::wait_for_user(const std::string& prompt_text) {
    if (signal_) {
        if (wait_prompt_) wait_prompt_(prompt_text);
        signal_state_ = SignalState::pending;
        const auto t0 = std::chrono::steady_clock::now();
        const bool got = signal_->wait(config_.max_wait);
        const double waited = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        sim_clock_ += waited;
        if (got) {
            signal_state_ = SignalState::delivered;
            append_event(EventKind::waited, "waited " + fixed(waited, 2) + " s for user");
            return {true, waited, "user ready"};
        }
        append_event(EventKind::waited, "timed out after " + fixed(waited, 2) + " s");
        return {false, waited, "wait_for_user timed out"};
    }

    // Headless: the signal auto-delivers after the configured simulated delay.
    const bool ok = config_.headless_wait_delay <= config_.max_wait;
    const double waited = ok ? config_.headless_wait_delay : config_.max_wait;
    sim_clock_ += waited;
    if (ok) {
        signal_state_ = SignalState::delivered;
        append_event(EventKind::waited, "waited " + fixed(waited, 2) + " s for user");
        return {true, waited, "user ready"};
    }
    append_event(EventKind::waited, "timed out after " + fixed(waited, 2) + " s");
    return {false, waited, "wait_for_user timed out"};
}

std::string World::digest() const {
    std::ostringstream out;
    out << "room x [" << fixed(bounds_.min_x, 2) << ", " << fixed(bounds_.max_x, 2) << "] y ["
        << fixed(bounds_.min_y, 2) << ", " << fixed(bounds_.max_y, 2) << "]\n";
    out << "robot at " << point_str(robot_.position) << " heading " << fixed(robot_.heading, 2)
        << "\n";
    for (const Fiducial& f : fiducials_)
        out << "fiducial " << f.id << ": " << to_string(f.label) << " at " << point_str(f.position)
            << "\n";
    return out.str();
}

std::string World::trace_text() const {
    std::ostringstream out;
    for (const WorldEvent& e : events_)
        out << fixed(e.time, 6) << "\t" << to_string(e.kind) << "\t" << e.detail << "\n";
    return out.str();
}

WorldLayout builtin_layout(int context_id) {
    WorldLayout layout;
    layout.context_id = context_id;
    layout.bounds = Bounds{-10.0, -10.0, 10.0, 10.0};
    layout.robot_start = {0.0, 0.0};
    layout.robot_heading = 0.0;
    switch (context_id) {
        case 1:  // two chairs in view, one closer
            layout.fiducials = {{1, Label::chair, {3.0, 1.0}}, {2, Label::chair, {6.0, -2.0}}};
            break;
        case 2:  // two chairs in view
            layout.fiducials = {{1, Label::chair, {2.0, 2.0}}, {2, Label::chair, {-5.0, 4.0}}};
            break;
        case 3:  // a refrigerator, donut and apple
            layout.fiducials = {{1, Label::refrigerator, {5.0, 2.0}},
                                {2, Label::donut, {2.0, -1.0}},
                                {3, Label::apple, {3.0, 3.0}}};
            break;
        case 4:  // a refrigerator and microwave
            layout.fiducials = {{1, Label::refrigerator, {4.0, 2.0}},
                                {2, Label::microwave, {-3.0, 4.0}}};
            break;
        case 5:  // other people in view
            layout.fiducials = {{1, Label::person, {4.0, 0.0}},
                                {2, Label::person, {-2.0, 5.0}},
                                {3, Label::person, {6.0, 6.0}}};
            break;
        case 6:  // other people in view, one clearly nearest
            layout.fiducials = {{1, Label::person, {3.0, 2.0}}, {2, Label::person, {-5.0, 1.0}}};
            break;
        case 7:  // oven with someone next to it, microwave with nobody around
            layout.fiducials = {{1, Label::oven, {5.0, 1.0}},
                                {2, Label::person, {5.3, 1.0}},
                                {3, Label::microwave, {-4.0, 3.0}}};
            break;
        default:
            throw SimError("unknown context id " + std::to_string(context_id));
    }
    return layout;
}

WorldLayout parse_layout(std::string_view text) {
    WorldLayout layout;
    bool saw_bounds = false, saw_robot = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        const auto fail = [&](const std::string& why) {
            throw SimError("layout line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "context") {
            if (!(fields >> layout.context_id)) fail("expected context id");
        } else if (tag == "bounds") {
            Bounds& b = layout.bounds;
            if (!(fields >> b.min_x >> b.min_y >> b.max_x >> b.max_y)) fail("expected 4 numbers");
            saw_bounds = true;
        } else if (tag == "robot") {
            if (!(fields >> layout.robot_start.x >> layout.robot_start.y >> layout.robot_heading))
                fail("expected x y heading");
            saw_robot = true;
        } else if (tag == "fiducial") {
            Fiducial f;
            std::string label;
            if (!(fields >> f.id >> label >> f.position.x >> f.position.y))
                fail("expected id label x y");
            const auto parsed = label_from_string(label);
            if (!parsed) fail("unknown label '" + label + "'");
            f.label = *parsed;
            layout.fiducials.push_back(f);
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (!saw_bounds) throw SimError("layout: missing bounds line");
    if (!saw_robot) throw SimError("layout: missing robot line");
    return layout;
}

std::string serialize_layout(const WorldLayout& layout) {
    std::ostringstream out;
    out << "context " << layout.context_id << "\n";
    out << "bounds " << fixed(layout.bounds.min_x, 3) << " " << fixed(layout.bounds.min_y, 3)
        << " " << fixed(layout.bounds.max_x, 3) << " " << fixed(layout.bounds.max_y, 3) << "\n";
    out << "robot " << fixed(layout.robot_start.x, 3) << " " << fixed(layout.robot_start.y, 3)
        << " " << fixed(layout.robot_heading, 3) << "\n";
    for (const Fiducial& f : layout.fiducials)
        out << "fiducial " << f.id << " " << to_string(f.label) << " " << fixed(f.position.x, 3)
            << " " << fixed(f.position.y, 3) << "\n";
    return out.str();
}

WorldLayout load_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SimError("cannot open layout file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_layout(buf.str());
}

}  // namespace guidedog::sim
