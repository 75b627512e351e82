#include "hollowcheck/standardize.hpp"

namespace hollowcheck {

std::string_view to_string(RawForm form) {
    switch (form) {
        case RawForm::Ineq: return "ineq";
        case RawForm::IneqNonneg: return "ineq-nonneg";
        case RawForm::EqNonneg: return "eq-nonneg";
    }
    return "?";
}

std::optional<RawForm> parse_form(std::string_view text) {
    if (text == "ineq") return RawForm::Ineq;
    if (text == "ineq-nonneg") return RawForm::IneqNonneg;
    if (text == "eq-nonneg") return RawForm::EqNonneg;
    return std::nullopt;
}

std::string_view to_string(Embedding e) {
    switch (e) {
        case Embedding::None: return "none";
        case Embedding::Nonneg: return "nonneg";
        case Embedding::EqNonneg: return "eq-nonneg";
        case Embedding::SignSplit: return "sign-split";
    }
    return "?";
}

std::string AssumptionReport::describe() const {
    if (ok()) return "ok";
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += "; ";
        out += s;
    };
    if (!no_zero_rows()) {
        std::string rows;
        for (auto r : zero_rows) rows += (rows.empty() ? "" : ",") + std::to_string(r);
        append("assumption A: null row(s) " + rows);
    }
    if (!tall()) append("assumption B: m = " + std::to_string(m) + " is not > n = " + std::to_string(n));
    if (!full_column_rank())
        append("assumption B: rank " + std::to_string(rank) + " < n = " + std::to_string(n));
    return out;
}

}  // namespace hollowcheck
