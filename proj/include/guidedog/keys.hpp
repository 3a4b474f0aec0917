#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace guidedog {

/// One of the three agent-team architectures under comparison.
enum class ConfigId { A, B, C };

inline const char* to_string(ConfigId c) {
    switch (c) {
        case ConfigId::A: return "A";
        case ConfigId::B: return "B";
        case ConfigId::C: return "C";
    }
    return "?";
}

inline std::optional<ConfigId> config_from_string(std::string_view s) {
    if (s == "A") return ConfigId::A;
    if (s == "B") return ConfigId::B;
    if (s == "C") return ConfigId::C;
    return std::nullopt;
}

/// Identifies one attempt of one matrix cell.
struct CellKey {
    ConfigId config = ConfigId::A;
    int trial = 1;        // 1..7
    int repetition = 1;   // 1..3
    int attempt = 0;      // 0 = pre-generated code

    friend bool operator==(const CellKey&, const CellKey&) = default;
    friend bool operator<(const CellKey& a, const CellKey& b) {
        return std::tie(a.config, a.trial, a.repetition, a.attempt) <
               std::tie(b.config, b.trial, b.repetition, b.attempt);
    }

    std::string label() const {
        return std::string(to_string(config)) + "-t" + std::to_string(trial) + "-r" +
               std::to_string(repetition) + "-a" + std::to_string(attempt);
    }
};

}  // namespace guidedog
