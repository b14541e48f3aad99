#include "gtrib/params.hpp"

#include <sstream>

namespace gtrib {

sequence_params make_params(exact_int v0, exact_int v1, exact_int v2,
                            exact_int r, exact_int s, exact_int t) {
    return {std::move(v0), std::move(v1), std::move(v2),
            std::move(r), std::move(s), std::move(t)};
}

sequence_params tribonacci() { return make_params(0, 0, 1, 1, 1, 1); }

sequence_params padovan() { return make_params(0, 1, 0, 0, 1, 1); }

sequence_params narayana(const exact_int& k) {
    return make_params(0, 0, 1, k, 0, 1);
}

sequence_params fundamental(const exact_int& r, const exact_int& s,
                            const exact_int& t) {
    return make_params(0, 0, 1, r, s, t);
}

std::optional<sequence_params> preset_by_name(std::string_view name) {
    if (name == "tribonacci") return tribonacci();
    if (name == "padovan") return padovan();
    constexpr std::string_view prefix = "narayana:";
    if (name.substr(0, prefix.size()) == prefix) {
        std::string k(name.substr(prefix.size()));
        try {
            return narayana(exact_int(k));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string to_string(const sequence_params& p) {
    std::ostringstream os;
    os << "(" << p.v0 << "," << p.v1 << "," << p.v2 << "; " << p.r << ","
       << p.s << "," << p.t << ")";
    return os.str();
}

}  // namespace gtrib
