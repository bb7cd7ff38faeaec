#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclorep/rep.hpp"

namespace cyclorep {

inline int dimension_formula(const RepContext& ctx) { return ctx.n - 1 - ctx.eps0; }

/// (r_q, s_q) from the floor-of-fractional-parts formula.
inline std::pair<int, int> signature_formula(const RepContext& ctx) {
    Rational r = 0, s = 0;
    for (int x : ctx.kappa) {
        r += frac_of(make_rational(static_cast<long long>(ctx.k) * x, ctx.d));
        s += frac_of(make_rational(static_cast<long long>(ctx.d - ctx.k) * x, ctx.d));
    }
    return {static_cast<int>(floor_of(r).get_si()) - ctx.eps0, static_cast<int>(floor_of(s).get_si()) - ctx.eps0};
}

enum class GoodClause { None, SumRange, Triple };

struct Goodness {
    bool good = false;
    GoodClause clause = GoodClause::None;
    std::vector<int> triple;  // (i, j, l), 1-based, when clause is Triple
};

inline Goodness goodness(const std::vector<Rational>& mu) {
    for (const auto& x : mu)
        if (!(x > 0 && x < 1)) fail(ErrorKind::OutOfRange, "weights must lie in (0, 1)");
    const int n = static_cast<int>(mu.size());
    Rational sum = 0;
    for (const auto& x : mu) sum += x;
    if (sum > 1 && sum < n - 1) return {true, GoodClause::SumRange, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (root_order(mu[i] + mu[j]) <= 5) continue;
            for (int l = 0; l < n; ++l) {
                if (l == i || l == j) continue;
                if (root_order(mu[i] + mu[l]) > 2 || root_order(mu[j] + mu[l]) > 2)
                    return {true, GoodClause::Triple, {i + 1, j + 1, l + 1}};
            }
        }
    return {};
}

inline bool is_good(const std::vector<Rational>& mu) { return goodness(mu).good; }

enum class Verdict { Maximal, Arithmetic, Unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Maximal: return "maximal";
        case Verdict::Arithmetic: return "arithmetic";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

struct ZariskiDiag {
    int k;
    std::vector<Rational> mu;
    Goodness good;
};

struct ZariskiResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<ZariskiDiag> per_k;
    int dim = 0;                      // n - 1 - eps0
    bool dimension_ok = false;        // dim >= 3, or dim = 2 with a coprime pair sum
    std::optional<std::pair<int, int>> coprime_pair;
};

inline ZariskiResult zariski_verdict(int d, const std::vector<long long>& kappa) {
    const RepContext ctx = make_context(d, kappa, 1);
    ZariskiResult out;
    bool all_good = true;
    for (int k = 1; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        ZariskiDiag diag{k, {}, {}};
        for (int x : ctx.kappa) diag.mu.push_back(frac_of(make_rational(static_cast<long long>(k) * x, d)));
        diag.good = goodness(diag.mu);
        all_good = all_good && diag.good.good;
        out.per_k.push_back(std::move(diag));
    }
    out.dim = ctx.n - 1 - ctx.eps0;
    for (int i = 0; i < ctx.n && !out.coprime_pair; ++i)
        for (int j = i + 1; j < ctx.n; ++j)
            if (std::gcd(ctx.kappa[i] + ctx.kappa[j], d) == 1) {
                out.coprime_pair = std::make_pair(i + 1, j + 1);
                break;
            }
    out.dimension_ok = out.dim >= 3 || (out.dim == 2 && out.coprime_pair.has_value());
    out.verdict = all_good && out.dimension_ok ? Verdict::Maximal : Verdict::Unknown;
    return out;
}

struct SubsetDiag {
    std::vector<int> subset;  // 1-based
    bool cond_ii = true;
    bool cond_iii = true;
};

struct ArithmeticityResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<int> witness;       // 1-based indices
    bool rank_condition = false;    // n + 1 - eps0 >= 5
    bool field_condition = false;   // d not in {3,4,6}, or 2 < sum/d < n-2
    std::vector<SubsetDiag> tried;  // subsets satisfying (i), in search order up to the witness
};

/// Proper subsets searched in lexicographic order of their sorted index tuples.
inline ArithmeticityResult arithmeticity_verdict(int d, const std::vector<long long>& kappa) {
    const RepContext ctx = make_context(d, kappa, 1);
    const int n = ctx.n;
    ArithmeticityResult out;
    out.rank_condition = n + 1 - ctx.eps0 >= 5;
    Rational ratio = make_rational(ctx.khat[n], d);
    out.field_condition = (d != 3 && d != 4 && d != 6) || (ratio > 2 && ratio < n - 2);
    if (!out.rank_condition || !out.field_condition) return out;

    auto gcd_of = [&](const std::vector<bool>& in, bool member) {
        int g = d;
        for (int i = 0; i < n; ++i)
            if (in[i] == member) g = std::gcd(g, ctx.kappa[i]);
        return g;
    };

    std::vector<int> cur;
    std::vector<bool> in(n, false);
    long long sum = 0;
    bool done = false;
    auto visit = [&](auto&& self, int start) -> void {
        for (int i = start; i < n && !done; ++i) {
            cur.push_back(i);
            in[i] = true;
            sum += ctx.kappa[i];
            const int size = static_cast<int>(cur.size());
            if (size < n && sum % d == 0) {
                SubsetDiag sd;
                for (int x : cur) sd.subset.push_back(x + 1);
                sd.cond_ii = size < 3 || gcd_of(in, true) == 1;
                sd.cond_iii = size > n - 2 - ctx.eps0 || gcd_of(in, false) == 1;
                out.tried.push_back(sd);
                if (sd.cond_ii && sd.cond_iii) {
                    out.witness = sd.subset;
                    out.verdict = Verdict::Arithmetic;
                    done = true;
                }
            }
            if (!done) self(self, i + 1);
            cur.pop_back();
            in[i] = false;
            sum -= ctx.kappa[i];
        }
    };
    visit(visit, 0);
    return out;
}

/// Good index of the constructive scan: 1 < s_r - floor(s_{r-2}) < 2 with s_{r-2}, s_r not integers.
inline int find_good_r(const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 3) fail(ErrorKind::PreconditionFailed, "need n >= 3");
    std::vector<Rational> s(n + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        if (!(x[i - 1] > 0 && x[i - 1] < 1)) fail(ErrorKind::PreconditionFailed, "entries must lie in (0, 1)");
        s[i] = s[i - 1] + x[i - 1];
    }
    if (!(s[n] > 1 && s[n] < n - 1)) fail(ErrorKind::PreconditionFailed, "sum must lie in (1, n-1)");
    if (s[2] <= 1) {
        for (int r = 3; r <= n; ++r)
            if (s[r] > 1) return r;
    } else {
        for (int r = 3; r <= n; ++r)
            if (s[r] < r - 1) return r;
    }
    fail(ErrorKind::PreconditionFailed, "scan found no index");
}

}  // namespace cyclorep
