#include "lrc/json_io.hpp"

namespace lrc {

ordered_json field_to_json(const Field& f) {
    return ordered_json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

const Field& field_from_json(const nlohmann::json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    if (j.contains("modulus")) {
        std::vector<int> mod = j.at("modulus").get<std::vector<int>>();
        return field_of(p, m, mod);
    }
    return field_of(p, m);
}

ordered_json code_to_json(const CodeSpec& code) {
    ordered_json j;
    j["field"] = field_to_json(code.field());
    j["kind"] = code.kind() == CodeKind::single_root ? "single" : "pair";
    j["eta"] = code.eta();
    j["s"] = code.s();
    j["lambda0"] = code.lambda0();
    j["i"] = code.i();
    if (code.kind() == CodeKind::pair_root) j["j"] = code.j();
    return j;
}

CodeSpec code_from_json(const nlohmann::json& j) {
    const Field& f = field_from_json(j.at("field"));
    std::string kind = j.at("kind").get<std::string>();
    int s = j.at("s").get<int>();
    int lambda0 = j.at("lambda0").get<int>();
    int i = j.at("i").get<int>();
    if (kind == "single")
        return CodeSpec::single(f, j.value("eta", 1), s, lambda0, i);
    if (kind == "pair") return CodeSpec::pair(f, s, lambda0, i, j.at("j").get<int>());
    fail(errc::invalid_params, "unknown code kind: " + kind);
}

ordered_json profile_to_json(const LrcProfile& p) {
    return ordered_json{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"d_dual", p.d_dual}, {"r", p.r}};
}

ordered_json class_to_json(const ClassLabel& c) {
    ordered_json j{{"class", c.id}};
    if (!c.param_name.empty()) j[c.param_name] = c.param;
    return j;
}

ordered_json report_to_json(const OptimalityReport& r) {
    ordered_json j = profile_to_json(r.profile);
    j["d_bound"] = r.d_bound;
    j["optimal"] = r.optimal;
    ordered_json cls = ordered_json::array();
    for (const auto& c : r.classes) cls.push_back(class_to_json(c));
    j["classes"] = cls;
    return j;
}

ordered_json poly_to_json(const Polynomial& p) {
    return ordered_json{{"field", field_to_json(p.field())}, {"coeffs", p.coeffs()}};
}

ordered_json matrix_to_json(const std::vector<std::vector<int>>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) j.push_back(row);
    return j;
}

}  // namespace lrc
