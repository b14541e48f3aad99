#include "gtrib/report_io.hpp"

namespace gtrib {

json params_to_json(const sequence_params& p) {
    json j;
    j["v0"] = p.v0.get_str();
    j["v1"] = p.v1.get_str();
    j["v2"] = p.v2.get_str();
    j["r"] = p.r.get_str();
    j["s"] = p.s.get_str();
    j["t"] = p.t.get_str();
    return j;
}

json report_to_json(const check_report& rep) {
    json j;
    j["identity"] = std::string(to_string(rep.id));
    j["params"] = params_to_json(rep.params);
    j["range"] = json::array({rep.range.lo, rep.range.hi});
    j["status"] = rep.pass ? "pass" : "fail";
    j["worst_residual"] = rep.worst_residual;
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back(json{{"n", f.n}, {"detail", f.detail}});
    j["failures"] = std::move(fails);
    j["notes"] = rep.notes;
    return j;
}

json reports_to_json(const std::vector<check_report>& reports) {
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(report_to_json(rep));
    return arr;
}

}  // namespace gtrib
