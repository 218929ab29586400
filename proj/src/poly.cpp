#include "toric/poly.hpp"

#include <sstream>

#include <json.hpp>

namespace toric {

Rat SparsePoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluate: dimension mismatch");
    // Per-variable power cache; supports are small at desk scale.
    std::vector<std::vector<Rat>> pows(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) pows[static_cast<std::size_t>(i)] = {Rat(1)};
    auto pw = [&](int var, int e) -> const Rat& {
        auto& v = pows[static_cast<std::size_t>(var)];
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * point[static_cast<std::size_t>(var)]);
        return v[static_cast<std::size_t>(e)];
    };
    Rat acc(0);
    for (const auto& [ev, c] : terms_) {
        Rat t(c);
        for (int i = 0; i < nvars_; ++i)
            if (ev[i] != 0) t *= pw(i, ev[i]);
        acc += t;
    }
    return acc;
}

Int SparsePoly::evaluate_int(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluate: dimension mismatch");
    std::vector<std::vector<Int>> pows(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) pows[static_cast<std::size_t>(i)] = {Int(1)};
    auto pw = [&](int var, int e) -> const Int& {
        auto& v = pows[static_cast<std::size_t>(var)];
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * point[static_cast<std::size_t>(var)]);
        return v[static_cast<std::size_t>(e)];
    };
    Int acc(0);
    for (const auto& [ev, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i)
            if (ev[i] != 0) t *= pw(i, ev[i]);
        acc += t;
    }
    return acc;
}

SparsePoly SparsePoly::partial_derivative(int var_index) const {
    if (var_index < 0 || var_index >= nvars_) throw input_error("partial_derivative: index out of range");
    SparsePoly r(nvars_);
    for (const auto& [ev, c] : terms_) {
        int e = ev[var_index];
        if (e == 0) continue;
        ExponentVector d = ev;
        d[var_index] = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

SparsePoly SparsePoly::substitute_drop(int var, const Int& value) const {
    if (var < 0 || var >= nvars_) throw input_error("substitute_drop: index out of range");
    if (nvars_ == 1) throw input_error("substitute_drop: cannot drop the last variable");
    SparsePoly r(nvars_ - 1);
    for (const auto& [ev, c] : terms_) {
        Int scaled = c;
        for (int j = 0; j < ev[var]; ++j) scaled *= value;
        if (scaled == 0) continue;
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(nvars_ - 1));
        for (int i = 0; i < nvars_; ++i)
            if (i != var) rest.push_back(ev[i]);
        r.add_term(ExponentVector(std::move(rest)), scaled);
    }
    return r;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ev, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool printed = false;
        if (a != 1 || ev.total_degree() == 0) {
            os << a.get_str();
            printed = true;
        }
        for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            if (ev[i] == 0) continue;
            if (printed) os << "*";
            os << names[static_cast<std::size_t>(i)];
            if (ev[i] > 1) os << "^" << ev[i];
            printed = true;
        }
    }
    return os.str();
}

long bit_size(const SparsePoly& f) {
    long total = 0;
    for (const auto& [ev, c] : f.terms()) {
        total += int_bit_size(c);
        for (int x : ev.e) total += int_bit_size(Int(x));
    }
    return total;
}

long bit_size(const PolySystem& F) {
    long total = 0;
    for (const auto& p : F.polys) total += bit_size(p);
    return total;
}

PolySystem parse_system_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("polys"))
        throw input_error("system JSON must have fields 'n' and 'polys'");
    int n = j.at("n").get<int>();
    if (n < 1) throw input_error("system needs n >= 1");
    std::vector<SparsePoly> polys;
    for (const auto& jp : j.at("polys")) {
        SparsePoly p(n);
        for (const auto& jt : jp) {
            if (!jt.is_array() || jt.size() != 2) throw input_error("term must be [coeff, [exponents]]");
            Int c;
            if (jt[0].is_string())
                c = Int(jt[0].get<std::string>());
            else if (jt[0].is_number_integer())
                c = Int(jt[0].get<long long>());
            else
                throw input_error("coefficient must be a decimal string or integer");
            std::vector<int> ev = jt[1].get<std::vector<int>>();
            if (static_cast<int>(ev.size()) != n) throw input_error("exponent vector length != n");
            p.add_term(ExponentVector(std::move(ev)), c);
        }
        polys.push_back(std::move(p));
    }
    return PolySystem(std::move(polys));
}

std::string system_to_json(const PolySystem& F) {
    nlohmann::json j;
    j["n"] = F.n();
    nlohmann::json jpolys = nlohmann::json::array();
    for (const auto& p : F.polys) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& [ev, c] : p.terms()) jp.push_back({c.get_str(), ev.e});
        jpolys.push_back(jp);
    }
    j["polys"] = jpolys;
    return j.dump();
}

}  // namespace toric
