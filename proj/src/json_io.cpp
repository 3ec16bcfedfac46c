#include "fk/json_io.hpp"

namespace fk {

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j;
    j["vars"] = p.vars();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["e"] = e;
        t["c"] = to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly p = LaurentPoly::constant(0).embedded(vars);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("e").get<std::vector<std::int64_t>>();
        if (e.size() != vars.size()) fail("BadFormat", "exponent vector length mismatch");
        Rational c = rational_from_string(t.at("c").get<std::string>());
        LaurentPoly mono = LaurentPoly::constant(c);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (e[i] != 0) mono *= LaurentPoly::monomial(vars[i], e[i]);
        p += mono;
    }
    return p;
}

nlohmann::json to_json(const RationalFunction& rf) {
    nlohmann::json j;
    j["num"] = to_json(rf.num());
    j["den"] = to_json(rf.den());
    return j;
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
    return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace fk
