#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "yf/characters.hpp"
#include "yf/harmonic.hpp"
#include "yf/lattice.hpp"
#include "yf/ncpoly.hpp"
#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/stochastic.hpp"
#include "yf/value.hpp"
#include "yf/words.hpp"

namespace yf {
namespace io {

inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

inline json value_json(const Value& v) {
    if (v.is_exact()) return rational_to_string(v.lo);
    json j;
    j["lo"] = decimal_string(v.lo, 15, RoundDir::down);
    j["hi"] = decimal_string(v.hi, 15, RoundDir::up);
    return j;
}

inline json level_json(int n) {
    json j;
    j["schema_version"] = schema_version;
    j["n"] = n;
    json words = json::array();
    json dims;
    for (const auto& w : lattice::level(n)) {
        words.push_back(w.display());
        dims[w.display()] = dim_product(w).str();
    }
    j["count"] = words.size();
    j["words"] = words;
    j["dims"] = dims;
    return j;
}

inline json ncpoly_json(const ncpoly::NcPoly& f) {
    json j;
    j["schema_version"] = schema_version;
    auto deg = f.degree();
    if (deg)
        j["degree"] = *deg;
    else
        j["degree"] = nullptr;
    json terms;
    for (const auto& [w, c] : f.terms()) terms[w.display()] = rational_to_string(c);
    j["terms"] = terms;
    return j;
}

inline json report_json(const Report& rep) {
    json j;
    j["suite"] = rep.suite;
    j["checks"] = rep.checks;
    j["ok"] = rep.ok();
    json fails = json::array();
    for (const auto& f : rep.failures) fails.push_back(f);
    j["failures"] = fails;
    return j;
}

inline json char_matrix_json(const characters::CharMatrix& cm) {
    json j;
    j["schema_version"] = schema_version;
    j["n"] = cm.n;
    json order = json::array();
    for (const auto& w : cm.order) order.push_back(w.display());
    j["order"] = order;
    json rows;
    for (std::size_t i = 0; i < cm.order.size(); ++i) {
        json row = json::array();
        for (const auto& x : cm.rows[i]) row.push_back(rational_to_string(x));
        rows[cm.order[i].display()] = row;
    }
    j["rows"] = rows;
    return j;
}

inline std::string char_matrix_csv(const characters::CharMatrix& cm) {
    std::ostringstream os;
    os << "u";
    for (const auto& w : cm.order) os << "," << w.display();
    os << "\n";
    for (std::size_t i = 0; i < cm.order.size(); ++i) {
        os << cm.order[i].display();
        for (const auto& x : cm.rows[i]) os << "," << rational_to_string(x);
        os << "\n";
    }
    return os.str();
}

inline json harmonic_values_json(const harmonic::HarmonicFn& phi, int n) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = [&] {
        switch (phi.kind()) {
            case harmonic::Kind::plancherel: return "plancherel";
            case harmonic::Kind::type1: return "type1";
            case harmonic::Kind::summable: return "summable";
            case harmonic::Kind::contracted: return "contracted";
            case harmonic::Kind::mixture: return "mixture";
        }
        return "?";
    }();
    j["params"] = phi.describe();
    j["level"] = n;
    const auto& lv = lattice::level(n);
    auto vals = phi.eval_level(n);
    json values;
    json central;
    bool exact = true;
    for (const auto& v : vals) exact = exact && v.is_exact();
    for (std::size_t i = 0; i < lv.size(); ++i) {
        values[lv[i].display()] = value_json(vals[i]);
        if (exact)
            central[lv[i].display()] =
                rational_to_string(Rational(dim_product(lv[i])) * vals[i].lo);
    }
    j["values"] = values;
    if (exact) j["central_measure"] = central;
    return j;
}

inline std::string empirical_csv(const stochastic::EmpiricalDist& emp,
                                 const lattice::LevelFn& exact) {
    std::ostringstream os;
    os << "word,count,frequency,exact_probability,abs_error\n";
    const auto& lv = lattice::level(exact.level);
    for (std::size_t i = 0; i < lv.size(); ++i) {
        const Rational freq = emp.frequency(lv[i]);
        const Rational err0 = freq - exact.values[i];
        const Rational err = err0 < 0 ? -err0 : err0;
        auto it = emp.counts.find(lv[i]);
        os << lv[i].display() << "," << (it == emp.counts.end() ? 0 : it->second) << ","
           << decimal_string(freq, 9) << "," << decimal_string(exact.values[i], 9) << ","
           << decimal_string(err, 9) << "\n";
    }
    return os.str();
}

}  // namespace io
}  // namespace yf
