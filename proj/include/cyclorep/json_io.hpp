#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cyclorep/criteria.hpp"
#include "cyclorep/horo.hpp"
#include "cyclorep/linalg.hpp"

namespace cyclorep {

using json = nlohmann::json;

inline json to_json(const CycloNum& z) {
    json a = json::array();
    for (const auto& c : z.coeffs()) a.push_back(rational_to_string(c));
    return a;
}

inline CycloNum cyclo_from_json(int d, const json& j) {
    const Field& f = Field::get(d);
    if (!j.is_array() || static_cast<int>(j.size()) != f.phi())
        fail(ErrorKind::ParseError, "element of K_" + std::to_string(d) + " needs " + std::to_string(f.phi()) + " coefficients");
    Poly p;
    for (const auto& c : j) {
        if (!c.is_string()) fail(ErrorKind::ParseError, "coefficients must be strings");
        p.push_back(parse_rational(c.get<std::string>()));
    }
    return CycloNum(f, std::move(p));
}

inline json to_json(const CycloVec& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(to_json(z));
    return a;
}

inline json to_json(const CycloMatrix& m) {
    json e = json::array();
    for (const auto& z : m.entries()) e.push_back(to_json(z));
    return {{"d", m.d()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

inline CycloMatrix matrix_from_json(const json& j) {
    try {
        const int d = j.at("d").get<int>();
        const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
        const json& e = j.at("entries");
        if (!e.is_array() || e.size() != rows * cols) fail(ErrorKind::ParseError, "entries must hold rows*cols elements");
        CycloMatrix m = CycloMatrix::zero(d, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) m(i, c) = cyclo_from_json(d, e[i * cols + c]);
        return m;
    } catch (const json::exception& ex) {
        fail(ErrorKind::ParseError, ex.what());
    }
}

inline json rationals_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_string(x));
    return a;
}

inline json to_json(const ZariskiResult& r) {
    json per_k = json::array();
    for (const auto& d : r.per_k) {
        const char* clause = d.good.clause == GoodClause::SumRange ? "a" : d.good.clause == GoodClause::Triple ? "b" : nullptr;
        json rec = {{"k", d.k}, {"mu", rationals_to_json(d.mu)}, {"good", d.good.good}, {"clause", clause ? json(clause) : json(nullptr)}};
        if (!d.good.triple.empty()) rec["triple"] = d.good.triple;
        per_k.push_back(rec);
    }
    json witness = json::array();
    if (r.verdict == Verdict::Maximal)
        for (const auto& d : r.per_k) witness.push_back(d.k);
    json diag = {{"per_k", per_k}, {"dim", r.dim}, {"dimension_condition", r.dimension_ok}};
    diag["coprime_pair"] = r.coprime_pair ? json({r.coprime_pair->first, r.coprime_pair->second}) : json(nullptr);
    return {{"verdict", verdict_name(r.verdict)}, {"witness", witness}, {"diagnostics", diag}};
}

inline json to_json(const ArithmeticityResult& r) {
    json tried = json::array();
    for (const auto& s : r.tried)
        tried.push_back({{"subset", s.subset}, {"cond_i", true}, {"cond_ii", s.cond_ii}, {"cond_iii", s.cond_iii}});
    json diag = {{"rank_condition", r.rank_condition}, {"field_condition", r.field_condition}, {"subsets", tried}};
    return {{"verdict", verdict_name(r.verdict)}, {"witness", r.witness}, {"diagnostics", diag}};
}

}  // namespace cyclorep
