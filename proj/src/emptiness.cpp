#include "hollowcheck/emptiness.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hollowcheck {

std::string_view to_string(Mode m) { return m == Mode::Algorithm ? "algorithm" : "theorem"; }

std::string_view to_string(TestOrder o) { return o == TestOrder::Default ? "default" : "paper"; }

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Canonical: return "canonical";
        case Family::Kernel: return "kernel";
        case Family::B1Perp: return "b1_perp";
        case Family::Rb2Perp: return "rb2_perp";
        case Family::Pair: return "pair";
    }
    return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::Empty ? "EMPTY" : "NOT-PROVEN-EMPTY"; }

std::size_t parallelism_cap() {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("HOLLOWCHECK_THREADS");
    if (!env || !*env) return hw;
    std::size_t cap = 0;
    auto [end, ec] = std::from_chars(env, env + std::strlen(env), cap);
    if (ec != std::errc{} || *end != '\0' || cap == 0) return hw;
    return std::min(hw, cap);
}

}  // namespace hollowcheck
