#pragma once

#include <ostream>
#include <string>

namespace projcad {

/// Progress reporting sink. Messages with a level above `info` are dropped.
/// 1: per-level summaries, 2: per-cell lifting events, 3: projection dumps.
struct Diagnostics {
    std::ostream* out = nullptr;
    int info = 0;

    bool enabled(int level) const { return out != nullptr && level <= info; }
    void log(int level, const std::string& message) const {
        if (enabled(level)) {
            *out << message << '\n';
        }
    }
};

}  // namespace projcad
