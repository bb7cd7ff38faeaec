#pragma once

#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cyclorep/linalg.hpp"

namespace cyclorep {

/// Parameters (d, kappa, k) of one eigen-representation and the data derived from them.
struct RepContext {
    int d = 0;
    int n = 0;
    std::vector<int> kappa;      // normalized into [1, d-1]
    int k = 1;                   // q = zeta^k
    int eps0 = 0;
    std::vector<long long> khat;  // khat[r] = k_1 + ... + k_r, khat[0] = 0
    CycloNum q, qbar, mu;
    CycloMatrix gram;            // J(g_a, g_b) for 1 <= a, b <= n-1

    /// k_i with 1-based index.
    int kap(int i) const { return kappa.at(i - 1); }
    /// q^s for any integer s.
    CycloNum q_pow(long long s) const { return CycloNum::zeta_pow(d, static_cast<long long>(k) * s); }
    /// Size of the compact-support space.
    int dim() const { return n - 1; }
};

/// J(x, y) = x^T G conj(y): linear in x, conjugate-linear in y.
inline CycloNum form_j(const RepContext& ctx, const CycloVec& x, const CycloVec& y) {
    return dot(x, ctx.gram * conj(y));
}

inline RepContext make_context(int d, const std::vector<long long>& kappa_raw, long long k) {
    if (d < 3) fail(ErrorKind::InvalidParameter, "d must be >= 3");
    if (kappa_raw.size() < 3) fail(ErrorKind::InvalidParameter, "need n >= 3 exponents");
    RepContext c;
    c.d = d;
    c.n = static_cast<int>(kappa_raw.size());
    for (long long x : kappa_raw) {
        long long r = ((x % d) + d) % d;
        if (r == 0) fail(ErrorKind::ExponentDivisible, "exponent " + std::to_string(x) + " is divisible by d");
        c.kappa.push_back(static_cast<int>(r));
    }
    long long km = ((k % d) + d) % d;
    if (std::gcd<long long>(km, d) != 1) fail(ErrorKind::NotPrimitive, "gcd(k, d) != 1");
    c.k = static_cast<int>(km);
    int g = d;
    for (int x : c.kappa) g = std::gcd(g, x);
    if (g != 1) fail(ErrorKind::DisconnectedCover, "gcd(kappa, d) = " + std::to_string(g));

    c.khat.assign(c.n + 1, 0);
    for (int i = 1; i <= c.n; ++i) c.khat[i] = c.khat[i - 1] + c.kappa[i - 1];
    c.eps0 = c.khat[c.n] % d == 0 ? 1 : 0;

    const CycloNum one = CycloNum::one(d);
    c.q = c.q_pow(1);
    c.qbar = c.q_pow(-1);
    c.mu = (one - c.q) * (one - c.qbar);

    const int s = c.n - 1;
    c.gram = CycloMatrix::zero(d, s, s);
    for (int i = 1; i <= s; ++i) {
        CycloNum a = one - c.q_pow(c.kap(i)), b = one - c.q_pow(c.kap(i + 1));
        c.gram(i - 1, i - 1) = c.mu * (one - c.q_pow(c.kap(i) + c.kap(i + 1))) / (a * b);
        if (i < s) {
            CycloNum off = -c.mu / b;
            c.gram(i - 1, i) = off;
            c.gram(i, i - 1) = -off.conj();
        }
    }
    return c;
}

inline RepContext make_context(int d, const std::vector<int>& kappa_raw, long long k) {
    return make_context(d, std::vector<long long>(kappa_raw.begin(), kappa_raw.end()), k);
}

// ---------------------------------------------------------------- words

enum class LetterKind { A, T, FT };

struct Letter {
    LetterKind kind;
    int a;
    int b;  // unused for T
    int exp = 1;

    std::string to_string() const {
        std::string s;
        switch (kind) {
            case LetterKind::A: s = "A(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
            case LetterKind::T: s = "T(" + std::to_string(a) + ")"; break;
            case LetterKind::FT: s = "FT(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
        }
        return exp == 1 ? s : s + "^-1";
    }
    friend bool operator==(const Letter&, const Letter&) = default;
};

struct BraidWord {
    std::vector<Letter> letters;

    std::string to_string() const {
        std::string s;
        for (const auto& l : letters) s += (s.empty() ? "" : " ") + l.to_string();
        return s;
    }

    BraidWord inverse() const {
        BraidWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            Letter l = *it;
            l.exp = -l.exp;
            w.letters.push_back(l);
        }
        return w;
    }

    friend BraidWord operator*(const BraidWord& x, const BraidWord& y) {
        BraidWord w = x;
        w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
        return w;
    }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord letter_word(Letter l) { return BraidWord{{l}}; }
inline BraidWord word_a(int i, int j, int exp = 1) { return letter_word({LetterKind::A, i, j, exp}); }
inline BraidWord word_t(int r, int exp = 1) { return letter_word({LetterKind::T, r, 0, exp}); }
inline BraidWord word_ft(int s, int r, int exp = 1) { return letter_word({LetterKind::FT, s, r, exp}); }

/// [a, b] = a b a^-1 b^-1.
inline BraidWord commutator(const BraidWord& a, const BraidWord& b) {
    return a * b * a.inverse() * b.inverse();
}

/// Whitespace-separated "A(i,j)", "T(r)", "FT(s,r)", each optionally followed by "^-1".
inline BraidWord parse_word(const std::string& text) {
    static const std::regex re(R"(^(A|T|FT)\((\d+)(?:,(\d+))?\)(\^(-1|1|\+1))?$)");
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::smatch m;
        if (!std::regex_match(tok, m, re)) fail(ErrorKind::ParseError, "bad letter '" + tok + "'");
        Letter l{};
        std::string name = m[1];
        l.a = std::stoi(m[2]);
        bool two = m[3].matched;
        if (name == "T") {
            if (two) fail(ErrorKind::ParseError, "T takes one index: '" + tok + "'");
            l.kind = LetterKind::T;
        } else {
            if (!two) fail(ErrorKind::ParseError, name + " takes two indices: '" + tok + "'");
            l.kind = name == "A" ? LetterKind::A : LetterKind::FT;
            l.b = std::stoi(m[3]);
        }
        l.exp = m[5].matched && m[5] == "-1" ? -1 : 1;
        w.letters.push_back(l);
    }
    return w;
}

/// Full twist of the points s..r as a product of A-letters.
inline BraidWord block_twist_word(int s, int r, int n) {
    if (!(1 <= s && s < r && r <= n)) fail(ErrorKind::IndexOutOfRange, "block twist (s, r) out of range");
    BraidWord w;
    for (int j = s + 1; j <= r; ++j)
        for (int i = s; i < j; ++i) w.letters.push_back({LetterKind::A, i, j, 1});
    return w;
}

// ---------------------------------------------------------------- matrices

/// The vector g*_{ij} = g_i + sum_{l=i+1}^{j-1} qbar^{k_{i+1}+...+k_l} g_l.
inline CycloVec g_star(const RepContext& ctx, int i, int j) {
    CycloVec g = zero_vec(ctx.d, ctx.n - 1);
    g[i - 1] = CycloNum::one(ctx.d);
    for (int l = i + 1; l <= j - 1; ++l) g[l - 1] = ctx.q_pow(-(ctx.khat[l] - ctx.khat[i]));
    return g;
}

/// Matrix of the twist alpha_{ij}: x -> x - c_ij J(x, g*) g*.
inline CycloMatrix rep_generator(const RepContext& ctx, int i, int j) {
    if (!(1 <= i && i < j && j <= ctx.n)) fail(ErrorKind::IndexOutOfRange, "generator (i, j) out of range");
    const CycloNum one = CycloNum::one(ctx.d);
    const CycloVec gs = g_star(ctx, i, j);
    const CycloVec h = ctx.gram * conj(gs);  // J(e_b, g*) = h_b
    const CycloNum c = (one - ctx.q_pow(ctx.kap(i))) * (one - ctx.q_pow(ctx.kap(j))) / ctx.mu;
    const int s = ctx.n - 1;
    CycloMatrix m = CycloMatrix::identity(ctx.d, s);
    for (int a = 0; a < s; ++a) {
        if (gs[a].is_zero()) continue;
        CycloNum ca = c * gs[a];
        for (int b = 0; b < s; ++b)
            if (!h[b].is_zero()) m(a, b) -= ca * h[b];
    }
    return m;
}

/// Twist around a curve enclosing the first r points.
inline CycloMatrix rep_prefix_twist(const RepContext& ctx, int r) {
    if (!(2 <= r && r <= ctx.n - 1)) fail(ErrorKind::IndexOutOfRange, "prefix twist needs 2 <= r <= n-1");
    const CycloNum one = CycloNum::one(ctx.d);
    const CycloNum qr = ctx.q_pow(ctx.khat[r]);
    CycloMatrix m = CycloMatrix::identity(ctx.d, ctx.n - 1);
    for (int i = 1; i < r; ++i) {
        m(i - 1, i - 1) = qr;
        m(i - 1, r - 1) = qr * (ctx.q_pow(-ctx.khat[i]) - one);
    }
    return m;
}

inline CycloMatrix letter_matrix(const RepContext& ctx, const Letter& l);

/// Letters act left to right: rho(x_1 ... x_L) = rho(x_L) ... rho(x_1).
inline CycloMatrix rep_word(const RepContext& ctx, const BraidWord& w) {
    CycloMatrix m = CycloMatrix::identity(ctx.d, ctx.n - 1);
    for (const auto& l : w.letters) m = letter_matrix(ctx, l) * m;
    return m;
}

inline CycloMatrix letter_matrix(const RepContext& ctx, const Letter& l) {
    CycloMatrix m;
    switch (l.kind) {
        case LetterKind::A: m = rep_generator(ctx, l.a, l.b); break;
        case LetterKind::T: m = rep_prefix_twist(ctx, l.a); break;
        case LetterKind::FT: m = rep_word(ctx, block_twist_word(l.a, l.b, ctx.n)); break;
    }
    return l.exp == 1 ? m : inverse(m);
}

/// M^T G conj(M) = G, i.e. J(Mx, My) = J(x, y).
inline bool preserves_form(const RepContext& ctx, const CycloMatrix& m) {
    return m.transpose() * ctx.gram * m.conj() == ctx.gram;
}

inline CycloMatrix galois_transport(const CycloMatrix& m, long long t) { return m.galois(t); }

// ---------------------------------------------------------------- radical and quotient

inline CycloVec radical_vector(const RepContext& ctx) {
    if (ctx.eps0 != 1) fail(ErrorKind::NotDegenerate, "radical exists only when d divides k_1+...+k_n");
    CycloVec w = zero_vec(ctx.d, ctx.n - 1);
    for (int i = 1; i <= ctx.n - 1; ++i) w[i - 1] = ctx.q_pow(-ctx.khat[i]) - CycloNum::one(ctx.d);
    return w;
}

/// Image of a compact-support coordinate vector in the quotient basis g_1..g_{n-2}.
inline CycloVec quotient_project(const RepContext& ctx, const CycloVec& x) {
    if (ctx.eps0 != 1) fail(ErrorKind::NotDegenerate, "quotient needs eps0 = 1");
    const int s = ctx.n - 2;
    const CycloNum one = CycloNum::one(ctx.d);
    const CycloNum den = ctx.q_pow(-ctx.khat[ctx.n - 1]) - one;
    CycloVec y(x.begin(), x.begin() + s);
    if (!x[s].is_zero()) {
        CycloNum t = x[s] / den;
        for (int i = 1; i <= s; ++i) y[i - 1] -= t * (ctx.q_pow(-ctx.khat[i]) - one);
    }
    return y;
}

inline CycloMatrix quotient_rep(const RepContext& ctx, const CycloMatrix& m) {
    const CycloVec w = radical_vector(ctx);
    if (m * w != w) fail(ErrorKind::RadicalNotFixed, "operator does not fix the radical vector");
    const int s = ctx.n - 2;
    CycloMatrix out = CycloMatrix::zero(ctx.d, s, s);
    for (int j = 0; j < s; ++j) {
        CycloVec col = quotient_project(ctx, m.column(j));
        for (int i = 0; i < s; ++i) out(i, j) = col[i];
    }
    return out;
}

/// J-Gram on g_1..g_{n-2} in the quotient.
inline CycloMatrix quotient_gram(const RepContext& ctx) {
    if (ctx.eps0 != 1) fail(ErrorKind::NotDegenerate, "quotient needs eps0 = 1");
    return ctx.gram.block(0, 0, ctx.n - 2, ctx.n - 2);
}

/// Operator on the cohomology space: the quotient when eps0 = 1, else unchanged.
inline CycloMatrix effective_rep(const RepContext& ctx, const CycloMatrix& m) {
    return ctx.eps0 == 1 ? quotient_rep(ctx, m) : m;
}

inline CycloMatrix effective_gram(const RepContext& ctx) {
    return ctx.eps0 == 1 ? quotient_gram(ctx) : ctx.gram;
}

/// rho(A(n-1,n)) = q^{k_{n-1}+k_n} rho(T(n-2)) on the quotient.
inline bool scalar_relation_check(const RepContext& ctx) {
    if (ctx.eps0 != 1) fail(ErrorKind::NotDegenerate, "scalar relation needs eps0 = 1");
    const int n = ctx.n;
    CycloMatrix lhs = quotient_rep(ctx, rep_generator(ctx, n - 1, n));
    CycloMatrix t = n >= 4 ? quotient_rep(ctx, rep_prefix_twist(ctx, n - 2)) : CycloMatrix::identity(ctx.d, n - 2);
    return lhs == ctx.q_pow(ctx.kap(n - 1) + ctx.kap(n)) * t;
}

// ---------------------------------------------------------------- lantern block

struct LanternBlock {
    int r = 0;
    CycloMatrix a, b, c;           // 2x2 in the basis below
    std::vector<CycloVec> basis;   // (g''_{r-2}, g_{r-1}) in compact-support coordinates
    CycloVec eigvec;               // coordinates in the basis
    CycloNum eigval;
};

/// Matrix of m restricted to span(basis); fails if the span is not invariant.
inline CycloMatrix restrict_to(const CycloMatrix& m, const std::vector<CycloVec>& basis) {
    const int d = m.d();
    CycloMatrix p = CycloMatrix::from_columns(d, m.rows(), basis);
    CycloMatrix out = CycloMatrix::zero(d, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = solve(p, m * basis[j]);
        if (!c) fail(ErrorKind::DegenerateBlock, "subspace is not invariant");
        for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = (*c)[i];
    }
    return out;
}

inline LanternBlock lantern_block(const RepContext& ctx, int r) {
    if (!(3 <= r && r <= ctx.n)) fail(ErrorKind::IndexOutOfRange, "lantern block needs 3 <= r <= n");
    if (ctx.khat[r - 2] % ctx.d == 0 || ctx.khat[r] % ctx.d == 0)
        fail(ErrorKind::DegenerateBlock, "q^{khat_{r-2}} or q^{khat_r} equals 1");
    const int d = ctx.d, s = ctx.n - 1;

    // g'' = g_{r-2} minus its J-projection onto span(g_1..g_{r-3}).
    CycloVec gpp = unit_vec(d, s, r - 3);
    if (r - 3 >= 1) {
        const int m = r - 3;
        CycloMatrix sub_t = ctx.gram.block(0, 0, m, m).transpose();
        CycloVec rhs(m, CycloNum::zero(d));
        for (int b = 0; b < m; ++b) rhs[b] = ctx.gram(r - 3, b);
        if (rank(sub_t) < static_cast<std::size_t>(m)) fail(ErrorKind::DegenerateBlock, "J restricted to V_{r-2} is degenerate");
        CycloVec y = *solve(sub_t, rhs);
        for (int a = 0; a < m; ++a) gpp[a] -= y[a];
    }
    LanternBlock lb;
    lb.r = r;
    lb.basis = {gpp, unit_vec(d, s, r - 2)};
    lb.a = restrict_to(rep_prefix_twist(ctx, r - 1), lb.basis);
    lb.b = restrict_to(rep_generator(ctx, r - 1, r), lb.basis);
    lb.c = ctx.q_pow(ctx.khat[r]) * inverse(lb.b) * inverse(lb.a);
    lb.eigvec = {CycloNum::one(d), ctx.q_pow(-ctx.kap(r - 1))};
    lb.eigval = ctx.q_pow(ctx.khat[r - 2] + ctx.kap(r));
    return lb;
}

}  // namespace cyclorep
