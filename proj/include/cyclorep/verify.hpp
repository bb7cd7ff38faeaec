#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cyclorep/criteria.hpp"
#include "cyclorep/horo.hpp"

namespace cyclorep {

struct SuiteReport {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& statement, const std::string& where) {
        ++checks;
        if (!ok) failures.push_back(statement + " [" + where + "]");
    }
    bool passed() const { return failures.empty(); }
};

inline std::string describe(const RepContext& c) {
    std::string s = "d=" + std::to_string(c.d) + " kappa=(";
    for (int i = 0; i < c.n; ++i) s += (i ? "," : "") + std::to_string(c.kappa[i]);
    return s + ") k=" + std::to_string(c.k);
}

/// Uniform exponents in [1, d-1] with gcd(kappa, d) = 1, and k coprime to d.
inline RepContext random_context(std::mt19937_64& rng, int dmin, int dmax, int nmin, int nmax) {
    std::uniform_int_distribution<int> dd(dmin, dmax), nn(nmin, nmax);
    const int d = dd(rng), n = nn(rng);
    std::uniform_int_distribution<int> kk(1, d - 1);
    std::vector<long long> kappa;
    for (;;) {
        kappa.clear();
        int g = d;
        for (int i = 0; i < n; ++i) {
            kappa.push_back(kk(rng));
            g = std::gcd(g, static_cast<int>(kappa.back()));
        }
        if (g == 1) break;
    }
    int k;
    do k = kk(rng);
    while (std::gcd(k, d) != 1);
    return make_context(d, kappa, k);
}

inline std::vector<int> coprime_residues(int d) {
    std::vector<int> out;
    for (int t = 1; t < d; ++t)
        if (std::gcd(t, d) == 1) out.push_back(t);
    return out;
}

/// Random word of the given length in A(i,j)^{+-1}.
inline BraidWord random_word(std::mt19937_64& rng, int n, int length) {
    std::uniform_int_distribution<int> pt(1, n);
    BraidWord w;
    for (int l = 0; l < length; ++l) {
        int i = pt(rng), j = pt(rng);
        while (j == i) j = pt(rng);
        if (i > j) std::swap(i, j);
        w.letters.push_back({LetterKind::A, i, j, (rng() & 1) ? 1 : -1});
    }
    return w;
}

// ---------------------------------------------------------------- per-context checks

inline void check_forms(const RepContext& c, std::mt19937_64& rng, SuiteReport& rep) {
    const std::string at = describe(c);
    const int s = c.n - 1;
    rep.expect(conj_transpose(c.gram) == -c.gram, "Gram matrix is anti-Hermitian", at);
    bool tri = true;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            if (std::abs(a - b) > 1 && !c.gram(a, b).is_zero()) tri = false;
    rep.expect(tri, "<g_i,g_j> = 0 if |i-j| > 1", at);
    rep.expect(c.mu.is_real() && c.mu.embed().real() > 0, "mu = (1-q)(1-qbar) is real and positive", at);
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j)
            rep.expect(preserves_form(c, rep_generator(c, i, j)), "alpha_ij preserves the form",
                       at + " A(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int r = 2; r <= c.n - 1; ++r)
        rep.expect(preserves_form(c, rep_prefix_twist(c, r)), "prefix Dehn twist preserves the form",
                   at + " T(" + std::to_string(r) + ")");
    BraidWord w = random_word(rng, c.n, 4);
    rep.expect(preserves_form(c, rep_word(c, w)), "braid words preserve the form", at + " " + w.to_string());

    auto [rq, sq] = signature_formula(c);
    rep.expect(rq + sq == dimension_formula(c), "r_q + s_q = n - 1 - eps0", at);
    try {
        Inertia in = inertia(effective_gram(c));
        rep.expect(in.pos == rq && in.neg == sq && in.zero == 0, "signature (r_q, s_q) of the Hermitian form", at);
    } catch (const Error& e) {
        rep.expect(false, std::string("signature (r_q, s_q) of the Hermitian form: ") + e.what(), at);
    }
}

inline void check_relations(const RepContext& c, std::mt19937_64& rng, SuiteReport& rep) {
    const std::string at = describe(c);
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
            const std::string g = at + " A(" + std::to_string(i) + "," + std::to_string(j) + ")";
            CycloMatrix m = rep_generator(c, i, j);
            rep.expect(determinant(m) == c.q_pow(c.kap(i) + c.kap(j)), "det rho(alpha_ij) = q^{k_i+k_j}", g);
            if ((c.kap(i) + c.kap(j)) % c.d == 0) {
                rep.expect(is_unipotent(m), "rho(alpha_ij) unipotent when q^{k_i+k_j} = 1", g);
            } else {
                auto ord = multiplicative_order(m, c.d);
                rep.expect(ord && *ord == order_of_power(c.d, static_cast<long long>(c.k) * (c.kap(i) + c.kap(j))),
                           "rho(alpha_ij) has the order of q^{k_i+k_j}", g);
            }
        }
    for (int r = 2; r <= c.n - 1; ++r) {
        const std::string g = at + " r=" + std::to_string(r);
        CycloMatrix t = rep_prefix_twist(c, r);
        rep.expect(rep_word(c, block_twist_word(1, r, c.n)) == t, "full twist word equals the prefix Dehn twist", g);
        CycloNum tr = CycloNum::zero(c.d);
        for (int a = 0; a < c.n - 1; ++a) tr += t(a, a);
        rep.expect(tr == Rational(r - 1) * c.q_pow(c.khat[r]) + CycloNum::rational(c.d, c.n - r),
                   "trace of the twist is (r-1) q^{khat_r} + (n-r)", g);
        // g_n = -(g_1 + ... + g_{n-1}) maps to g_n + sum_{l<r} (1 - q^{k_{l+1}+...+k_r}) g_l.
        CycloVec gn(c.n - 1, CycloNum::rational(c.d, -1));
        CycloVec expect = gn;
        for (int l = 1; l < r; ++l) expect[l - 1] += CycloNum::one(c.d) - c.q_pow(c.khat[r] - c.khat[l]);
        rep.expect(t * gn == expect, "twist image of g_n", g);
    }
    // Disjoint and nested generators commute.
    std::uniform_int_distribution<int> pt(1, c.n);
    for (int trial = 0; trial < 4 && c.n >= 4; ++trial) {
        std::vector<int> idx(4);
        do {
            for (auto& x : idx) x = pt(rng);
            std::sort(idx.begin(), idx.end());
        } while (std::adjacent_find(idx.begin(), idx.end()) != idx.end());
        BraidWord dis = commutator(word_a(idx[0], idx[1]), word_a(idx[2], idx[3]));
        BraidWord nest = commutator(word_a(idx[0], idx[3]), word_a(idx[1], idx[2]));
        const auto id = CycloMatrix::identity(c.d, c.n - 1);
        rep.expect(rep_word(c, dis) == id, "disjoint pure braid generators commute", at + " " + dis.to_string());
        rep.expect(rep_word(c, nest) == id, "nested pure braid generators commute", at + " " + nest.to_string());
    }
    rep.expect(rep_word(c, BraidWord{}) == CycloMatrix::identity(c.d, c.n - 1), "empty word acts trivially", at);

    if (c.eps0 == 1) {
        CycloVec w = radical_vector(c);
        rep.expect(is_zero(c.gram * conj(w)), "w_n spans the radical", at);
        bool fixed = true;
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j) fixed = fixed && rep_generator(c, i, j) * w == w;
        for (int r = 2; r <= c.n - 1; ++r) fixed = fixed && rep_prefix_twist(c, r) * w == w;
        rep.expect(fixed, "every generator fixes w_n", at);
        rep.expect(rank(quotient_gram(c)) == static_cast<std::size_t>(c.n - 2), "quotient form is non-degenerate", at);
        rep.expect(scalar_relation_check(c), "rho(alpha_{n-1,n}) = q^{k_{n-1}+k_n} rho(T_{1,n-2}) on the quotient", at);
        BraidWord a = random_word(rng, c.n, 2), b = random_word(rng, c.n, 2);
        rep.expect(quotient_rep(c, rep_word(c, a * b)) == quotient_rep(c, rep_word(c, b)) * quotient_rep(c, rep_word(c, a)),
                   "quotient is multiplicative", at);
    } else {
        rep.expect(rank(c.gram) == static_cast<std::size_t>(c.n - 1), "form is non-degenerate when eps0 = 0", at);
    }
}

inline bool lantern_admissible(const RepContext& c, int r) {
    return 3 <= r && r <= c.n && c.khat[r - 2] % c.d != 0 && c.khat[r] % c.d != 0;
}

inline void check_lantern(const RepContext& c, int r, SuiteReport& rep) {
    const std::string at = describe(c) + " r=" + std::to_string(r);
    const int d = c.d;
    const CycloNum one = CycloNum::one(d);
    LanternBlock lb = lantern_block(c, r);
    CycloMatrix a = CycloMatrix::zero(d, 2, 2), b = CycloMatrix::zero(d, 2, 2);
    a(0, 0) = c.q_pow(c.khat[r - 2] + c.kap(r - 1));
    a(0, 1) = c.q_pow(c.kap(r - 1)) - c.q_pow(c.khat[r - 2] + c.kap(r - 1));
    a(1, 1) = one;
    b(0, 0) = one;
    b(1, 0) = one - c.q_pow(c.kap(r));
    b(1, 1) = c.q_pow(c.kap(r - 1) + c.kap(r));
    rep.expect(lb.a == a, "lantern block matrix A", at);
    rep.expect(lb.b == b, "lantern block matrix B", at);
    rep.expect(lb.a * lb.b * lb.c == CycloMatrix::scalar(c.q_pow(c.khat[r]), 2), "A B C = q^{khat_r} Id", at);
    CycloVec v{one, c.q_pow(-c.kap(r - 1))};
    CycloNum lam = c.q_pow(c.khat[r - 2] + c.kap(r));
    rep.expect(lb.c * v == CycloVec{lam * v[0], lam * v[1]}, "eigenpair of C", at);
    bool orth = true;
    for (int b = 1; b <= r - 3; ++b) orth = orth && form_j(c, lb.basis[0], unit_vec(d, c.n - 1, b - 1)).is_zero();
    rep.expect(orth, "g'' is J-orthogonal to g_1..g_{r-3}", at);
}

inline void check_galois(const RepContext& c, SuiteReport& rep) {
    for (int t : coprime_residues(c.d)) {
        RepContext ct = make_context(c.d, std::vector<int>(c.kappa), static_cast<long long>(c.k) * t);
        const std::string at = describe(c) + " t=" + std::to_string(t);
        rep.expect(galois_transport(c.gram, t) == ct.gram, "Gram matrix transports under sigma_t", at);
        bool ok = true;
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j)
                ok = ok && galois_transport(rep_generator(c, i, j), t) == rep_generator(ct, i, j);
        for (int r = 2; r <= c.n - 1; ++r) ok = ok && galois_transport(rep_prefix_twist(c, r), t) == rep_prefix_twist(ct, r);
        rep.expect(ok, "rho_{sigma(q)} = sigma(rho_q) on generators", at);
    }
}

/// Random element of the parabolic subgroup generated by PB_m and PB_{m+1,n}.
inline CycloMatrix random_parabolic(const FlagContext& fc, std::mt19937_64& rng, int length, BraidWord* word = nullptr) {
    auto lo = part_generators(fc, OrbitPart::Lower), up = part_generators(fc, OrbitPart::Upper);
    std::vector<std::pair<int, int>> gens = lo;
    gens.insert(gens.end(), up.begin(), up.end());
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    BraidWord w;
    for (int l = 0; l < length; ++l) {
        auto [i, j] = gens[pick(rng)];
        w.letters.push_back({LetterKind::A, i, j, (rng() & 1) ? 1 : -1});
    }
    if (word) *word = w;
    return flag_rep(fc, w);
}

inline void check_horo(const FlagContext& fc, std::mt19937_64& rng, SuiteReport& rep, int maxlen = 6, int conj_samples = 10) {
    const RepContext& c = fc.ctx;
    const std::string at = describe(c) + " m=" + std::to_string(fc.m);
    const int d = c.d, m = fc.m;
    rep.expect(fc.gram(fc.size() - 1, 0) == -fc.mu, "J(g_m, w) = -mu", at);

    const bool has_tau = m >= 3, has_tau_p = c.n - m >= 3;
    std::vector<CycloMatrix> unis;
    if (has_tau) {
        CycloMatrix t = flag_rep(fc, witness_tau(fc));
        bool unip = false;
        try { unip = in_unipotent(fc, t); } catch (const Error&) {}
        rep.expect(unip, "rho(tau) lies in U", at);
        if (unip) {
            unis.push_back(t);
            CycloVec x = chi(fc, t);
            rep.expect(!is_zero(x), "chi(rho(tau)) is nonzero", at);
            bool lower_only = true;
            for (int i = fc.lower(); i < fc.middle(); ++i) lower_only = lower_only && x[i].is_zero();
            rep.expect(lower_only, "chi(rho(tau)) lies in V_{m-1}", at);
        }
        bool images = t * fc.w == fc.w;
        for (int i = 1; i <= c.n - 2; ++i) {
            CycloVec g = unit_vec(d, c.n - 2, i - 1);
            CycloVec expect = g;
            if (i == m - 2) {
                CycloNum f = c.q_pow(-c.kap(m)) - CycloNum::one(d);
                for (int a = 0; a < c.n - 2; ++a) expect[a] += f * fc.w[a];
            } else if (!(i <= m - 3 || i >= m + 2)) {
                continue;
            }
            images = images && t * g == expect;
        }
        rep.expect(images, "rho(tau)(g_{m-2}) = g_{m-2} + (qbar^{k_m} - 1) w and fixes the other listed g_i", at);
    }
    if (has_tau_p) {
        CycloMatrix t = flag_rep(fc, witness_tau_prime(fc));
        bool unip = false;
        try { unip = in_unipotent(fc, t); } catch (const Error&) {}
        rep.expect(unip, "rho(tau') lies in U", at);
        if (unip) {
            unis.push_back(t);
            CycloVec x = chi(fc, t);
            rep.expect(!is_zero(x), "chi(rho(tau')) is nonzero", at);
            bool upper_only = true;
            for (int i = 0; i < fc.lower(); ++i) upper_only = upper_only && x[i].is_zero();
            rep.expect(upper_only, "chi(rho(tau')) lies in W_{m+1}", at);
        }
    }
    if (unis.empty()) return;

    // Conjugation formula against direct conjugation.
    for (int s = 0; s < conj_samples; ++s) {
        BraidWord w;
        CycloMatrix a = random_parabolic(fc, rng, 3, &w);
        const CycloMatrix& u = unis[s % unis.size()];
        CycloMatrix conj_u = a * u * inverse(a);
        bool ok = in_parabolic(fc, a) && in_unipotent(fc, conj_u) && chi(fc, conj_u) == conj_action(fc, a, chi(fc, u));
        rep.expect(ok, "chi(A M A^-1) = lambda chi(M) C^-1", at + " A=" + w.to_string());
        unis.push_back(conj_u);
    }
    // Additivity and commutator corner.
    for (std::size_t i = 0; i + 1 < unis.size() && i < 6; ++i) {
        const CycloMatrix &u = unis[i], &v = unis[i + 1];
        CycloVec x = chi(fc, u), y = chi(fc, v), xy = chi(fc, u * v);
        CycloVec sum = x;
        for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += y[a];
        rep.expect(xy == sum, "chi is additive on U", at);
        CycloMatrix com = u * v * inverse(u) * inverse(v);
        auto parts = unipotent_parts(fc, com);
        rep.expect(parts && is_zero(parts->x) && parts->a == omega(fc, x, y),
                   "commutator lies in N with corner omega(chi, chi')", at);
        CycloNum om = omega(fc, x, y);
        rep.expect(om.is_real(), "omega takes values in L_d", at);
        rep.expect(om == -omega(fc, y, x), "omega is antisymmetric", at);
        for (int t : coprime_residues(d)) {
            FlagContext ft = make_flag(make_context(d, std::vector<int>(c.kappa), static_cast<long long>(c.k) * t), m);
            CycloVec xt, yt;
            for (const auto& z : x) xt.push_back(z.galois(t));
            for (const auto& z : y) yt.push_back(z.galois(t));
            rep.expect(omega(ft, xt, yt) == om.galois(t), "omega is Galois equivariant", at + " t=" + std::to_string(t));
        }
    }
    if (has_tau && has_tau_p) {
        std::size_t lo = orbit_rank(fc, OrbitPart::Lower, maxlen), up = orbit_rank(fc, OrbitPart::Upper, maxlen);
        rep.expect(lo + up == static_cast<std::size_t>(euler_phi(d) * (c.n - 4)), "orbit spans reach phi(d)(n-4)", at);
        try {
            LatticeReport lr = n_lattice_vectors(fc, maxlen);
            bool real = true;
            for (const auto& row : lr.kappa)
                for (const auto& z : row) real = real && z.is_real();
            rep.expect(real, "lattice vectors are real", at);
            rep.expect(lr.rank == lr.ell, "kappa_1..kappa_l form a basis of R^l", at);
        } catch (const Error& e) {
            rep.expect(false, std::string("kappa_1..kappa_l form a basis of R^l: ") + e.name(), at);
        }
    }
}

/// Exhaustive post-condition oracle for find_good_r.
inline bool good_r_ok(const std::vector<Rational>& x, int r) {
    const int n = static_cast<int>(x.size());
    if (r < 3 || r > n) return false;
    Rational s_r = 0, s_r2 = 0;
    for (int i = 0; i < r; ++i) s_r += x[i];
    for (int i = 0; i < r - 2; ++i) s_r2 += x[i];
    auto integral = [](const Rational& v) { return v.get_den() == 1; };
    if (integral(s_r) || integral(s_r2)) return false;
    Rational diff = s_r - Rational(floor_of(s_r2));
    return diff > 1 && diff < 2;
}

// ---------------------------------------------------------------- suites

/// Random eps0 = 1 context of length n with d | khat_m, m >= 3, n - m >= 3.
inline FlagContext random_flag(std::mt19937_64& rng) {
    static const int ds[] = {5, 7, 8, 9, 10};
    for (;;) {
        const int d = ds[rng() % 5];
        const int n = 6 + static_cast<int>(rng() % 2);
        const int m = 3 + static_cast<int>(rng() % (n - 5));
        std::uniform_int_distribution<int> kk(1, d - 1);
        std::vector<long long> kap;
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            if (i == m - 1 || i == n - 1) {
                long long r = ((-sum) % d + d) % d;
                if (r == 0) break;
                kap.push_back(r);
            } else {
                kap.push_back(kk(rng));
            }
            sum += kap.back();
        }
        if (static_cast<int>(kap.size()) != n) continue;
        int g = d;
        for (auto x : kap) g = std::gcd(g, static_cast<int>(x));
        if (g != 1) continue;
        auto ks = coprime_residues(d);
        try {
            return make_flag(make_context(d, kap, ks[rng() % ks.size()]), m);
        } catch (const Error&) {
            continue;
        }
    }
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"forms", "relations", "lantern", "galois", "horo", "criteria"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed);
    SuiteReport rep;
    rep.name = name;
    if (name == "forms") {
        for (int i = 0; i < size; ++i) check_forms(random_context(rng, 3, 10, 3, 6), rng, rep);
    } else if (name == "relations") {
        for (int i = 0; i < size; ++i) check_relations(random_context(rng, 3, 10, 3, 6), rng, rep);
    } else if (name == "lantern") {
        check_lantern(make_context(5, std::vector<int>{1, 1, 1, 2}, 1), 3, rep);
        int done = 0;
        while (done < size) {
            RepContext c = random_context(rng, 3, 10, 3, 6);
            int r = 3 + static_cast<int>(rng() % (c.n - 2));
            if (!lantern_admissible(c, r)) continue;
            check_lantern(c, r, rep);
            ++done;
        }
    } else if (name == "galois") {
        for (int i = 0; i < size; ++i) check_galois(random_context(rng, 3, 10, 3, 6), rep);
    } else if (name == "horo") {
        check_horo(make_flag(make_context(5, std::vector<int>{1, 1, 3, 2, 2, 1}, 1), 3), rng, rep);
        for (int i = 0; i < std::max(1, size / 10); ++i) check_horo(random_flag(rng), rng, rep);
    } else if (name == "criteria") {
        auto unknown = [&](int d, std::vector<long long> k) {
            rep.expect(arithmeticity_verdict(d, k).verdict == Verdict::Unknown, "non-arithmetic examples give no witness",
                       "d=" + std::to_string(d));
        };
        unknown(12, {7, 5, 4, 4, 4});
        unknown(12, {7, 6, 5, 3, 3});
        unknown(12, {7, 5, 3, 3, 3, 3});
        auto ar = arithmeticity_verdict(5, {1, 1, 3, 2, 2, 1});
        rep.expect(ar.verdict == Verdict::Arithmetic && ar.witness == std::vector<int>{1, 2, 3}, "arithmeticity witness", "d=5");
        rep.expect(zariski_verdict(7, {1, 1, 1, 1, 1, 1}).verdict == Verdict::Maximal, "Zariski density criterion", "d=7");
        for (int i = 0; i < size * 25; ++i) {
            const int n = 3 + static_cast<int>(rng() % 6);
            const int den = 2 + static_cast<int>(rng() % 30);
            std::vector<Rational> x;
            for (int j = 0; j < n; ++j) x.push_back(make_rational(1 + static_cast<long long>(rng() % (den - 1)), den));
            std::vector<Rational> comp;
            for (auto it = x.rbegin(); it != x.rend(); ++it) comp.push_back(1 - *it);
            rep.expect(is_good(x) == is_good(comp), "mu is good iff its reversed complement is", "");
            Rational sum = std::accumulate(x.begin(), x.end(), Rational(0));
            if (sum > 1 && sum < n - 1) rep.expect(good_r_ok(x, find_good_r(x)), "good index r", "");
        }
        for (int i = 0; i < size; ++i) {
            RepContext c = random_context(rng, 3, 12, 3, 7);
            std::vector<long long> k(c.kappa.begin(), c.kappa.end()), p = k, lifted = k;
            std::shuffle(p.begin(), p.end(), rng);
            for (auto& x : lifted) x += c.d * static_cast<long long>(rng() % 3);
            auto base = arithmeticity_verdict(c.d, k).verdict;
            rep.expect(base == arithmeticity_verdict(c.d, p).verdict, "arithmeticity verdict is permutation invariant", describe(c));
            rep.expect(base == arithmeticity_verdict(c.d, lifted).verdict, "arithmeticity verdict depends on kappa mod d", describe(c));
            rep.expect(zariski_verdict(c.d, k).verdict == zariski_verdict(c.d, p).verdict, "density verdict is permutation invariant", describe(c));
        }
    } else {
        fail(ErrorKind::InvalidParameter, "unknown suite '" + name + "'");
    }
    return rep;
}

}  // namespace cyclorep
