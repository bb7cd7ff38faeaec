#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclorep/rep.hpp"

namespace cyclorep {

/// Flag 0 < L < L + W < V for an eps0 = 1 context with d | khat_m.
struct FlagContext {
    RepContext ctx;
    int m = 0;
    CycloVec w;                    // quotient coordinates
    std::vector<CycloVec> basis;   // (w, g_1..g_{m-2}, g_{m+2}..g_{n-1}, g_m)
    CycloMatrix p, p_inv;          // columns of p are the flag basis
    CycloMatrix gram;              // J-Gram in the flag basis
    CycloMatrix gw;                // middle block of gram
    CycloMatrix gw_t_inv;          // (G_W^T)^{-1}
    CycloNum mu;

    int size() const { return ctx.n - 2; }
    int middle() const { return ctx.n - 4; }
    /// Middle coordinates [0, lower) belong to V_{m-1}, the rest to W_{m+1}.
    int lower() const { return m - 2; }
};

inline FlagContext make_flag(const RepContext& ctx, int m) {
    if (ctx.eps0 != 1) fail(ErrorKind::NotDegenerate, "flag needs eps0 = 1");
    if (!(2 <= m && m <= ctx.n - 2)) fail(ErrorKind::BadM, "m must satisfy 2 <= m <= n-2");
    if (ctx.khat[m] % ctx.d != 0) fail(ErrorKind::BadM, "d does not divide k_1+...+k_m");
    const int d = ctx.d, s = ctx.n - 2;
    FlagContext fc;
    fc.ctx = ctx;
    fc.m = m;
    fc.mu = ctx.mu;
    fc.w = zero_vec(d, s);
    for (int i = 1; i <= m - 1; ++i) fc.w[i - 1] = ctx.q_pow(-ctx.khat[i]) - CycloNum::one(d);

    auto g = [&](int i) { return quotient_project(ctx, unit_vec(d, ctx.n - 1, i - 1)); };
    fc.basis.push_back(fc.w);
    for (int i = 1; i <= m - 2; ++i) fc.basis.push_back(g(i));
    for (int i = m + 2; i <= ctx.n - 1; ++i) fc.basis.push_back(g(i));
    fc.basis.push_back(g(m));

    fc.p = CycloMatrix::from_columns(d, s, fc.basis);
    if (rank(fc.p) != static_cast<std::size_t>(s)) fail(ErrorKind::ConstraintViolation, "flag basis is not a basis");
    fc.p_inv = inverse(fc.p);
    fc.gram = fc.p.transpose() * quotient_gram(ctx) * fc.p.conj();

    const int mid = s - 2;
    if (fc.gram(s - 1, 0) != -fc.mu) fail(ErrorKind::ConstraintViolation, "J(g_m, w) != -mu");
    for (int j = 0; j <= mid; ++j)
        if (!fc.gram(0, j).is_zero()) fail(ErrorKind::ConstraintViolation, "w is not orthogonal to w + middle");
    fc.gw = fc.gram.block(1, 1, mid, mid);
    if (rank(fc.gw) != static_cast<std::size_t>(mid)) fail(ErrorKind::ConstraintViolation, "G_W is degenerate");
    fc.gw_t_inv = mid > 0 ? inverse(fc.gw.transpose()) : CycloMatrix::zero(d, 0, 0);
    return fc;
}

/// Matrix of a quotient-space operator in the flag basis.
inline CycloMatrix to_flag(const FlagContext& fc, const CycloMatrix& m) { return fc.p_inv * m * fc.p; }

/// Quotient operator of a braid word.
inline CycloMatrix flag_rep(const FlagContext& fc, const BraidWord& w) {
    return quotient_rep(fc.ctx, rep_word(fc.ctx, w));
}

inline bool in_parabolic(const FlagContext& fc, const CycloMatrix& m) {
    const CycloMatrix a = to_flag(fc, m);
    const int s = fc.size();
    for (int i = 1; i < s; ++i)
        if (!a(i, 0).is_zero()) return false;
    for (int j = 0; j < s - 1; ++j)
        if (!a(s - 1, j).is_zero()) return false;
    return true;
}

struct UnipotentParts {
    CycloVec x;   // first row, middle block
    CycloVec xp;  // last column, middle block
    CycloNum a;   // corner
};

/// Blocks of a flag-basis matrix of the form (1 x a; 0 I x'; 0 0 1), if it has that form.
inline std::optional<UnipotentParts> unipotent_parts(const FlagContext& fc, const CycloMatrix& m) {
    if (!in_parabolic(fc, m)) return std::nullopt;
    const CycloMatrix a = to_flag(fc, m);
    const int s = fc.size();
    const CycloNum one = CycloNum::one(fc.ctx.d);
    if (a(0, 0) != one || a(s - 1, s - 1) != one) return std::nullopt;
    for (int i = 1; i < s - 1; ++i)
        for (int j = 1; j < s - 1; ++j)
            if (a(i, j) != (i == j ? one : CycloNum::zero(fc.ctx.d))) return std::nullopt;
    UnipotentParts u;
    for (int j = 1; j < s - 1; ++j) u.x.push_back(a(0, j));
    for (int i = 1; i < s - 1; ++i) u.xp.push_back(a(i, s - 1));
    u.a = a(0, s - 1);
    return u;
}

/// x^T (G_W^T)^{-1} conj(y).
inline CycloNum flag_pairing(const FlagContext& fc, const CycloVec& x, const CycloVec& y) {
    if (x.size() != static_cast<std::size_t>(fc.middle()) || y.size() != x.size())
        fail(ErrorKind::ShapeMismatch, "middle vectors must have length n-4");
    if (x.empty()) return CycloNum::zero(fc.ctx.d);
    return dot(x, fc.gw_t_inv * conj(y));
}

inline bool in_unipotent(const FlagContext& fc, const CycloMatrix& m) {
    auto u = unipotent_parts(fc, m);
    if (!u) return false;
    CycloVec expect = fc.middle() > 0 ? fc.gw_t_inv * conj(u->x) : CycloVec{};
    for (auto& e : expect) e *= fc.mu;
    if (expect != u->xp) fail(ErrorKind::ConstraintViolation, "x' != mu (G_W^T)^{-1} conj(x)");
    if (u->a - u->a.conj() != fc.mu * flag_pairing(fc, u->x, u->x))
        fail(ErrorKind::ConstraintViolation, "a - conj(a) != mu x^T (G_W^T)^{-1} conj(x)");
    return true;
}

inline CycloVec chi(const FlagContext& fc, const CycloMatrix& m) {
    if (!in_unipotent(fc, m)) fail(ErrorKind::NotUnipotentElement, "operator is not in U");
    return unipotent_parts(fc, m)->x;
}

/// The linear map x -> lambda x C^{-1} induced by a parabolic A, as a matrix acting on rows.
inline CycloMatrix conj_action_matrix(const FlagContext& fc, const CycloMatrix& a) {
    if (!in_parabolic(fc, a)) fail(ErrorKind::NotParabolicElement, "operator does not preserve the flag");
    const CycloMatrix f = to_flag(fc, a);
    const int mid = fc.middle();
    if (mid == 0) return CycloMatrix::zero(fc.ctx.d, 0, 0);
    return f(0, 0) * inverse(f.block(1, 1, mid, mid));
}

inline CycloVec conj_action(const FlagContext& fc, const CycloMatrix& a, const CycloVec& x) {
    return row_times(x, conj_action_matrix(fc, a));
}

/// Commutator pairing mu (u + conj(u)), u = x^T (G_W^T)^{-1} conj(y).
inline CycloNum omega(const FlagContext& fc, const CycloVec& x, const CycloVec& y) {
    CycloNum u = flag_pairing(fc, x, y);
    return fc.mu * (u + u.conj());
}

/// tau = [A(m-1,m), T(m-1)].
inline BraidWord witness_tau(const FlagContext& fc) {
    if (fc.m < 3) fail(ErrorKind::BadM, "witness tau needs m >= 3");
    return commutator(word_a(fc.m - 1, fc.m), word_t(fc.m - 1));
}

/// tau' = [A(m+1,m+2), FT(m+2,n)].
inline BraidWord witness_tau_prime(const FlagContext& fc) {
    if (fc.ctx.n - fc.m < 3) fail(ErrorKind::BadM, "witness tau' needs n-m >= 3");
    return commutator(word_a(fc.m + 1, fc.m + 2), word_ft(fc.m + 2, fc.ctx.n));
}

enum class OrbitPart { Lower, Upper };

/// Generators A(i,j) of PB_m (Lower) or PB_{m+1,n} (Upper).
inline std::vector<std::pair<int, int>> part_generators(const FlagContext& fc, OrbitPart part) {
    int lo = part == OrbitPart::Lower ? 1 : fc.m + 1;
    int hi = part == OrbitPart::Lower ? fc.m : fc.ctx.n;
    std::vector<std::pair<int, int>> g;
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) g.emplace_back(i, j);
    return g;
}

inline BraidWord part_witness(const FlagContext& fc, OrbitPart part) {
    return part == OrbitPart::Lower ? witness_tau(fc) : witness_tau_prime(fc);
}

struct Orbit {
    std::vector<CycloVec> vectors;  // full middle vectors in discovery order
    std::size_t rank = 0;           // Q-rank restricted to the part's block
    std::size_t bound = 0;          // phi(d) times the block size
};

/// Breadth-first conj_action orbit of the witness chi under words of length <= maxlen.
/// Stops early once the rank reaches its bound.
inline Orbit orbit(const FlagContext& fc, OrbitPart part, int maxlen, bool stop_at_bound = true) {
    const int lo = part == OrbitPart::Lower ? 0 : fc.lower();
    const int len = part == OrbitPart::Lower ? fc.lower() : fc.middle() - fc.lower();
    Orbit out;
    out.bound = static_cast<std::size_t>(euler_phi(fc.ctx.d) * len);

    std::vector<CycloMatrix> acts;
    for (auto [i, j] : part_generators(fc, part)) {
        CycloMatrix g = quotient_rep(fc.ctx, rep_generator(fc.ctx, i, j));
        CycloMatrix a = conj_action_matrix(fc, g);
        acts.push_back(a);
        acts.push_back(inverse(a));
    }

    std::map<std::vector<Rational>, bool> seen;
    QSpan span;
    auto visit = [&](const CycloVec& v) {
        auto key = realify(v);
        if (!seen.emplace(key, true).second) return false;
        out.vectors.push_back(v);
        span.add(realify(CycloVec(v.begin() + lo, v.begin() + lo + len)));
        return true;
    };

    std::vector<CycloVec> frontier;
    CycloVec nu = chi(fc, flag_rep(fc, part_witness(fc, part)));
    visit(nu);
    frontier.push_back(nu);
    for (int depth = 0; depth < maxlen && !frontier.empty(); ++depth) {
        if (stop_at_bound && span.rank() >= out.bound) break;
        std::vector<CycloVec> next;
        for (const auto& v : frontier)
            for (const auto& a : acts) {
                CycloVec u = row_times(v, a);
                if (visit(u)) next.push_back(std::move(u));
            }
        frontier = std::move(next);
    }
    out.rank = span.rank();
    return out;
}

inline std::size_t orbit_rank(const FlagContext& fc, OrbitPart part, int maxlen = 6) {
    return orbit(fc, part, maxlen).rank;
}

/// t coprime to d whose zeta^{t k} lies in the upper half plane under the fixed embedding.
inline std::vector<int> upper_half_representatives(int d, int k) {
    std::vector<int> out;
    for (int t = 1; t < d; ++t) {
        if (std::gcd(t, d) != 1) continue;
        int r = (t * k) % d;
        if (2 * r > d) out.push_back(t);
    }
    return out;
}

/// Coordinates of target in the Q-span of basis (realified), or nullopt.
inline std::optional<std::vector<Rational>> solve_over_q(const std::vector<CycloVec>& basis, const CycloVec& target) {
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> real;
    for (const auto& b : basis) real.push_back(realify(b));
    std::vector<Rational> rhs = realify(target);
    const std::size_t rows = rhs.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = real[j][i];
        a[i][cols] = rhs[i];
    }
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c <= cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        piv.push_back(c);
        ++row;
    }
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
    return x;
}

struct LatticeReport {
    std::size_t pair_i = 0, pair_j = 0;  // indices into the combined orbit list
    CycloNum a_q;                       // omega of the pair
    std::vector<Integer> scale;         // N_s with N_s lambda_s nu_i in the lattice
    std::vector<int> reps;              // upper-half Galois representatives
    std::vector<CycloVec> kappa;        // kappa_s = (sigma_t(N_s lambda_s a_q))_t
    std::size_t rank = 0;               // rank over K_d of the kappa matrix
    std::size_t ell = 0;
};

inline LatticeReport n_lattice_vectors(const FlagContext& fc, int maxlen = 6) {
    const int d = fc.ctx.d;
    std::vector<CycloVec> pool = orbit(fc, OrbitPart::Lower, maxlen).vectors;
    for (auto& v : orbit(fc, OrbitPart::Upper, maxlen).vectors) pool.push_back(std::move(v));

    LatticeReport rep;
    bool found = false;
    for (std::size_t i = 0; i < pool.size() && !found; ++i)
        for (std::size_t j = i + 1; j < pool.size() && !found; ++j) {
            CycloNum w = omega(fc, pool[i], pool[j]);
            if (!w.is_zero()) {
                rep.pair_i = i;
                rep.pair_j = j;
                rep.a_q = w;
                found = true;
            }
        }
    if (!found) fail(ErrorKind::NoNonzeroPairing, "all sampled omega values vanish");

    // Q-basis of the lattice generated by the orbit vectors.
    std::vector<CycloVec> qbasis;
    QSpan span;
    for (const auto& v : pool)
        if (span.add(realify(v))) qbasis.push_back(v);

    rep.ell = static_cast<std::size_t>(euler_phi(fc.ctx.d) / 2);
    rep.reps = upper_half_representatives(d, fc.ctx.k);
    CycloMatrix kap = CycloMatrix::zero(d, rep.ell, rep.reps.size());
    for (std::size_t s = 0; s < rep.ell; ++s) {
        CycloNum lambda = CycloNum::zeta_pow(d, static_cast<long long>(s)) + CycloNum::zeta_pow(d, -static_cast<long long>(s));
        CycloVec target = pool[rep.pair_i];
        for (auto& x : target) x *= lambda;
        auto coords = solve_over_q(qbasis, target);
        if (!coords) fail(ErrorKind::ConstraintViolation, "lambda_s nu is outside the Q-span of the orbit");
        Integer n = 1;
        for (const auto& c : *coords) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), c.get_den_mpz_t());
        rep.scale.push_back(n);
        CycloNum val = lambda * rep.a_q * Rational(n);
        CycloVec row;
        for (std::size_t t = 0; t < rep.reps.size(); ++t) {
            kap(s, t) = val.galois(rep.reps[t]);
            row.push_back(kap(s, t));
        }
        rep.kappa.push_back(std::move(row));
    }
    rep.rank = rank(kap);
    return rep;
}

}  // namespace cyclorep
