#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gtrib/exact.hpp"

namespace gtrib {

/// The six parameters (V0, V1, V2; r, s, t) of a generalized Tribonacci
/// sequence V_n = r*V_{n-1} + s*V_{n-2} + t*V_{n-3}. All six are arbitrary
/// exact integers; operations that need t != 0 or a positive cubic
/// discriminant state that precondition themselves.
struct sequence_params {
    exact_int v0, v1, v2;  // initial terms
    exact_int r, s, t;     // recurrence coefficients

    bool operator==(const sequence_params&) const = default;
};

sequence_params make_params(exact_int v0, exact_int v1, exact_int v2,
                            exact_int r, exact_int s, exact_int t);

// Classic members of the family.
sequence_params tribonacci();                     // (0,0,1; 1,1,1)
sequence_params padovan();                        // (0,1,0; 0,1,1)
sequence_params narayana(const exact_int& k);     // (0,0,1; k,0,1)

/// The fundamental instance (0,0,1; r,s,t) whose terms are the U_n that
/// every V_n decomposes over.
sequence_params fundamental(const exact_int& r, const exact_int& s,
                            const exact_int& t);

/// Parses "tribonacci", "padovan" or "narayana:<k>".
std::optional<sequence_params> preset_by_name(std::string_view name);

/// "(v0,v1,v2; r,s,t)" for reports and error messages.
std::string to_string(const sequence_params& p);

}  // namespace gtrib
