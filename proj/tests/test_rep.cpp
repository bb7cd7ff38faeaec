#include <gtest/gtest.h>

#include "cyclorep/criteria.hpp"
#include "cyclorep/verify.hpp"

using namespace cyclorep;

namespace {

CycloNum z(int d, int s = 1) { return CycloNum::zeta_pow(d, s); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidParameter;
}

RepContext ctx(int d, std::vector<int> kappa, int k = 1) { return make_context(d, kappa, k); }

/// Seeded sample of contexts on the desk-scale grid.
std::vector<RepContext> grid_sample(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<RepContext> out;
    for (int i = 0; i < count; ++i) out.push_back(random_context(rng, 3, 10, 3, 6));
    return out;
}

/// Independent reflection oracle: x -> x - c J(x, g*) g* applied to each basis vector.
CycloMatrix reflection_oracle(const RepContext& c, int i, int j) {
    const int s = c.n - 1, d = c.d;
    const CycloNum one = CycloNum::one(d);
    CycloVec gs = zero_vec(d, s);
    gs[i - 1] = one;
    long long e = 0;
    for (int l = i + 1; l <= j - 1; ++l) {
        e += c.kap(l);
        gs[l - 1] = c.q_pow(-e);
    }
    CycloNum coef = (one - c.q_pow(c.kap(i))) * (one - c.q_pow(c.kap(j))) / c.mu;
    CycloMatrix m = CycloMatrix::zero(d, s, s);
    for (int col = 0; col < s; ++col) {
        CycloNum jx = CycloNum::zero(d);
        for (int b = 0; b < s; ++b) jx += c.gram(col, b) * gs[b].conj();
        for (int row = 0; row < s; ++row) m(row, col) = (row == col ? one : CycloNum::zero(d)) - coef * jx * gs[row];
    }
    return m;
}

}  // namespace

// ---------------------------------------------------------------- contexts

TEST(Context, AllOnesGramEntries) {
    for (int d = 3; d <= 10; ++d)
        for (int n = 3; n <= 6; ++n)
            for (int k : coprime_residues(d)) {
                RepContext c = ctx(d, std::vector<int>(n, 1), k);
                for (int i = 0; i < n - 1; ++i) {
                    EXPECT_EQ(c.gram(i, i), c.q - c.qbar);
                    if (i + 1 < n - 1) {
                        EXPECT_EQ(c.gram(i, i + 1), c.qbar - CycloNum::one(d));
                        EXPECT_EQ(c.gram(i + 1, i), CycloNum::one(d) - c.q);
                    }
                }
            }
}

TEST(Context, ReducesExponents) {
    RepContext c = make_context(3, std::vector<long long>{4, 1, 1}, 1);
    EXPECT_EQ(c.kappa, (std::vector<int>{1, 1, 1}));
    RepContext neg = make_context(7, std::vector<long long>{-1, 8, 3}, 1);
    EXPECT_EQ(neg.kappa, (std::vector<int>{6, 1, 3}));
}

TEST(Context, DetectsEps0) {
    EXPECT_EQ(ctx(12, {7, 5, 4, 4, 4}).eps0, 1);
    EXPECT_EQ(ctx(5, {1, 1, 1, 1, 1}).eps0, 1);
    EXPECT_EQ(ctx(5, {1, 1, 1, 1}).eps0, 0);
    EXPECT_EQ(ctx(12, {7, 5, 4, 4, 4}).khat, (std::vector<long long>{0, 7, 12, 16, 20, 24}));
}

TEST(Context, ValidationErrors) {
    EXPECT_EQ(kind_of([] { ctx(3, {3, 1, 1}); }), ErrorKind::ExponentDivisible);
    EXPECT_EQ(kind_of([] { ctx(6, {1, 1, 1}, 2); }), ErrorKind::NotPrimitive);
    EXPECT_EQ(kind_of([] { ctx(6, {2, 4, 2}); }), ErrorKind::DisconnectedCover);
    EXPECT_EQ(kind_of([] { ctx(2, {1, 1, 1}); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { ctx(5, {1, 1}); }), ErrorKind::InvalidParameter);
    EXPECT_NO_THROW(ctx(6, {2, 3, 4}));
}

TEST(ContextProperty, GramInvariants) {
    for (const auto& c : grid_sample(21, 60)) {
        const int s = c.n - 1;
        EXPECT_EQ(conj_transpose(c.gram), -c.gram) << describe(c);
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (std::abs(a - b) > 1) EXPECT_TRUE(c.gram(a, b).is_zero());
        EXPECT_TRUE(c.mu.is_real());
        EXPECT_GT(c.mu.embed().real(), 0);
    }
}

// ---------------------------------------------------------------- generators

TEST(Generators, AdjacentGStarIsG) {
    RepContext c = ctx(7, {1, 2, 3, 4, 5});
    for (int i = 1; i < c.n; ++i) EXPECT_EQ(g_star(c, i, i + 1), unit_vec(7, c.n - 1, i - 1));
}

TEST(Generators, MatchReflectionOracle) {
    for (const auto& c : grid_sample(22, 30))
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j) EXPECT_EQ(rep_generator(c, i, j), reflection_oracle(c, i, j)) << describe(c);
}

TEST(Generators, DeterminantAndOrder) {
    for (const auto& c : grid_sample(23, 40))
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j) {
                CycloMatrix m = rep_generator(c, i, j);
                EXPECT_EQ(determinant(m), c.q_pow(c.kap(i) + c.kap(j)));
                if ((c.kap(i) + c.kap(j)) % c.d == 0) {
                    EXPECT_TRUE(is_unipotent(m));
                    EXPECT_NE(m, CycloMatrix::identity(c.d, c.n - 1));
                } else {
                    EXPECT_EQ(multiplicative_order(m, c.d), order_of_power(c.d, c.k * (c.kap(i) + c.kap(j))));
                }
            }
}

TEST(Generators, UnipotentExample) {
    RepContext c = ctx(5, {2, 3, 1});
    EXPECT_TRUE(is_unipotent(rep_generator(c, 1, 2)));
    EXPECT_FALSE(is_unipotent(rep_generator(c, 1, 3)));
}

TEST(Generators, FixOrthogonalComplement) {
    for (const auto& c : grid_sample(24, 20)) {
        if (c.eps0 == 1) continue;
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j) {
                CycloVec gs = g_star(c, i, j);
                CycloMatrix m = rep_generator(c, i, j);
                // Complement of g*: kernel of x -> J(x, g*) = x^T G conj(g*).
                CycloMatrix row = CycloMatrix::zero(c.d, 1, c.n - 1);
                CycloVec gc = c.gram * conj(gs);
                for (int a = 0; a < c.n - 1; ++a) row(0, a) = gc[a];
                for (const auto& x : kernel_basis(row)) EXPECT_EQ(m * x, x);
            }
    }
}

TEST(Generators, IndexErrors) {
    RepContext c = ctx(5, {1, 1, 1, 1, 1});
    EXPECT_EQ(kind_of([&] { rep_generator(c, 2, 2); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { rep_generator(c, 0, 3); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { rep_generator(c, 1, 6); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { rep_prefix_twist(c, 5); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { rep_prefix_twist(c, 1); }), ErrorKind::IndexOutOfRange);
}

TEST(PrefixTwist, RestrictionTraceAndLastImage) {
    for (const auto& c : grid_sample(25, 40))
        for (int r = 2; r <= c.n - 1; ++r) {
            CycloMatrix t = rep_prefix_twist(c, r);
            const CycloNum qr = c.q_pow(c.khat[r]);
            for (int i = 1; i < r; ++i) {
                CycloVec g = unit_vec(c.d, c.n - 1, i - 1), expect = g;
                for (auto& x : expect) x *= qr;
                EXPECT_EQ(t * g, expect);
            }
            for (int i = r + 1; i <= c.n - 1; ++i) {
                CycloVec g = unit_vec(c.d, c.n - 1, i - 1);
                EXPECT_EQ(t * g, g);
            }
            CycloNum tr = CycloNum::zero(c.d);
            for (int a = 0; a < c.n - 1; ++a) tr += t(a, a);
            EXPECT_EQ(tr, Rational(r - 1) * qr + CycloNum::rational(c.d, c.n - r));
            CycloVec gn(c.n - 1, CycloNum::rational(c.d, -1)), expect = gn;
            for (int l = 1; l < r; ++l) expect[l - 1] += CycloNum::one(c.d) - c.q_pow(c.khat[r] - c.khat[l]);
            EXPECT_EQ(t * gn, expect);
            EXPECT_TRUE(preserves_form(c, t));
            if (c.khat[r] % c.d == 0) EXPECT_TRUE(is_unipotent(t));
            else EXPECT_EQ(multiplicative_order(t, c.d), order_of_power(c.d, c.k * c.khat[r]));
        }
}

// ---------------------------------------------------------------- words

TEST(Words, BlockTwistWordShape) {
    EXPECT_EQ(block_twist_word(1, 2, 4).to_string(), "A(1,2)");
    EXPECT_EQ(block_twist_word(1, 3, 4).to_string(), "A(1,2) A(1,3) A(2,3)");
    EXPECT_EQ(block_twist_word(2, 4, 4).to_string(), "A(2,3) A(2,4) A(3,4)");
    EXPECT_EQ(kind_of([] { block_twist_word(3, 3, 4); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([] { block_twist_word(1, 5, 4); }), ErrorKind::IndexOutOfRange);
}

TEST(Words, FullTwistMatchesPrefixTwist) {
    RepContext c = ctx(5, {1, 1, 2, 1});
    for (int r = 2; r <= c.n - 1; ++r) EXPECT_EQ(rep_word(c, block_twist_word(1, r, c.n)), rep_prefix_twist(c, r));
    for (const auto& g : grid_sample(26, 40))
        for (int r = 2; r <= g.n - 1; ++r) EXPECT_EQ(rep_word(g, word_ft(1, r)), rep_word(g, word_t(r))) << describe(g);
}

TEST(Words, EmptyAndCancellingWords) {
    RepContext c = ctx(7, {1, 2, 3, 4});
    const CycloMatrix id = CycloMatrix::identity(7, 3);
    EXPECT_EQ(rep_word(c, BraidWord{}), id);
    EXPECT_EQ(rep_word(c, word_a(1, 2) * word_a(1, 2, -1)), id);
    EXPECT_EQ(rep_word(c, word_t(3, -1) * word_t(3)), id);
    EXPECT_EQ(rep_word(c, commutator(word_a(1, 2), word_a(3, 4))), id);
}

TEST(Words, ParseAndPrint) {
    BraidWord w = parse_word("A(1,2) A(2,4)^-1  T(3) FT(2,4)^-1");
    ASSERT_EQ(w.letters.size(), 4u);
    EXPECT_EQ(w.letters[1].exp, -1);
    EXPECT_EQ(w.letters[2].kind, LetterKind::T);
    EXPECT_EQ(w.to_string(), "A(1,2) A(2,4)^-1 T(3) FT(2,4)^-1");
    EXPECT_TRUE(parse_word("").letters.empty());
    EXPECT_EQ(kind_of([] { parse_word("B(1,2)"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_word("A(1,2"); }), ErrorKind::ParseError);
    EXPECT_EQ(w.inverse().to_string(), "FT(2,4) T(3)^-1 A(2,4) A(1,2)^-1");
}

TEST(Words, RangeCheckedOnEvaluation) {
    RepContext c = ctx(5, {1, 1, 1, 1});
    EXPECT_EQ(kind_of([&] { rep_word(c, parse_word("A(1,5)")); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { rep_word(c, parse_word("T(4)")); }), ErrorKind::IndexOutOfRange);
}

TEST(WordsProperty, AntiHomomorphismAndInverse) {
    std::mt19937_64 rng(27);
    for (const auto& c : grid_sample(27, 30)) {
        BraidWord a = random_word(rng, c.n, 3), b = random_word(rng, c.n, 3);
        CycloMatrix ma = rep_word(c, a), mb = rep_word(c, b);
        EXPECT_EQ(rep_word(c, a * b), mb * ma);
        EXPECT_EQ(rep_word(c, a.inverse()), inverse(ma));
        EXPECT_TRUE(preserves_form(c, ma));
    }
}

TEST(WordsProperty, PureBraidCommutations) {
    std::mt19937_64 rng(28);
    const auto contexts = grid_sample(28, 40);
    for (const auto& c : contexts) {
        if (c.n < 4) continue;
        const CycloMatrix id = CycloMatrix::identity(c.d, c.n - 1);
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j)
                for (int k = 1; k <= c.n; ++k)
                    for (int l = k + 1; l <= c.n; ++l) {
                        bool disjoint = j < k, nested = i < k && l < j;
                        if (!disjoint && !nested) continue;
                        EXPECT_EQ(rep_word(c, commutator(word_a(i, j), word_a(k, l))), id) << describe(c);
                    }
    }
}

// ---------------------------------------------------------------- radical and quotient

TEST(Radical, SmallExamples) {
    RepContext c = ctx(3, {1, 1, 1});
    CycloVec w = radical_vector(c);
    EXPECT_EQ(w, (CycloVec{z(3, -1) - CycloNum::one(3), z(3, -2) - CycloNum::one(3)}));
    for (int i = 0; i < 2; ++i) EXPECT_TRUE(form_j(c, unit_vec(3, 2, i), w).is_zero());

    RepContext c4 = ctx(4, {1, 1, 1, 1});
    CycloVec w4 = radical_vector(c4);
    EXPECT_EQ(rep_generator(c4, 1, 2) * w4, w4);
    EXPECT_EQ(kind_of([] { radical_vector(ctx(5, {1, 1, 1})); }), ErrorKind::NotDegenerate);
}

TEST(Radical, FixedByEveryGenerator) {
    int seen = 0;
    for (const auto& c : grid_sample(29, 200)) {
        if (c.eps0 != 1) continue;
        ++seen;
        CycloVec w = radical_vector(c);
        EXPECT_TRUE(is_zero(c.gram * conj(w)));
        for (int i = 1; i <= c.n; ++i)
            for (int j = i + 1; j <= c.n; ++j) EXPECT_EQ(rep_generator(c, i, j) * w, w);
        for (int r = 2; r <= c.n - 1; ++r) EXPECT_EQ(rep_prefix_twist(c, r) * w, w);
        EXPECT_EQ(rank(quotient_gram(c)), static_cast<std::size_t>(c.n - 2));
        EXPECT_EQ(dimension_formula(c), c.n - 2);
    }
    EXPECT_GT(seen, 10);
}

TEST(Quotient, Examples) {
    RepContext c = ctx(5, {1, 1, 1, 1, 1});
    EXPECT_EQ(quotient_rep(c, CycloMatrix::identity(5, 4)), CycloMatrix::identity(5, 3));
    EXPECT_EQ(rank(quotient_gram(c)), 3u);
    EXPECT_EQ(quotient_gram(c).rows(), static_cast<std::size_t>(dimension_formula(c)));
    CycloMatrix bad = CycloMatrix::identity(5, 4);
    bad(0, 0) = z(5);
    EXPECT_EQ(kind_of([&] { quotient_rep(c, bad); }), ErrorKind::RadicalNotFixed);
}

TEST(Quotient, ProductsAndFormDescend) {
    std::mt19937_64 rng(30);
    for (const auto& c : grid_sample(30, 200)) {
        if (c.eps0 != 1) continue;
        BraidWord a = random_word(rng, c.n, 2), b = random_word(rng, c.n, 2);
        CycloMatrix qa = quotient_rep(c, rep_word(c, a)), qb = quotient_rep(c, rep_word(c, b));
        EXPECT_EQ(quotient_rep(c, rep_word(c, a) * rep_word(c, b)), qa * qb);
        CycloMatrix g = quotient_gram(c);
        EXPECT_EQ(qa.transpose() * g * qa.conj(), g);
    }
}

TEST(ScalarRelation, Examples) {
    EXPECT_TRUE(scalar_relation_check(ctx(5, {1, 1, 1, 1, 1})));
    EXPECT_TRUE(scalar_relation_check(ctx(4, {1, 1, 1, 1})));
    EXPECT_TRUE(scalar_relation_check(ctx(3, {1, 1, 1})));
    EXPECT_EQ(kind_of([] { scalar_relation_check(ctx(5, {1, 1, 1, 1})); }), ErrorKind::NotDegenerate);
    for (const auto& c : grid_sample(31, 200))
        if (c.eps0 == 1) EXPECT_TRUE(scalar_relation_check(c)) << describe(c);
}

// ---------------------------------------------------------------- lantern

TEST(Lantern, PrintedBlocksForFiveOneOneOneTwo) {
    RepContext c = ctx(5, {1, 1, 1, 2});
    for (int r = 3; r <= 4; ++r) {
        if (!lantern_admissible(c, r)) continue;
        LanternBlock lb = lantern_block(c, r);
        const CycloNum one = CycloNum::one(5);
        CycloMatrix a = CycloMatrix::zero(5, 2, 2), b = CycloMatrix::zero(5, 2, 2);
        a(0, 0) = c.q_pow(c.khat[r - 1]);
        a(0, 1) = c.q_pow(c.kap(r - 1)) - c.q_pow(c.khat[r - 1]);
        a(1, 1) = one;
        b(0, 0) = one;
        b(1, 0) = one - c.q_pow(c.kap(r));
        b(1, 1) = c.q_pow(c.kap(r - 1) + c.kap(r));
        EXPECT_EQ(lb.a, a);
        EXPECT_EQ(lb.b, b);
        EXPECT_EQ(lb.a * lb.b * lb.c, CycloMatrix::scalar(c.q_pow(c.khat[r]), 2));
        CycloVec v{one, c.q_pow(-c.kap(r - 1))};
        CycloNum lam = c.q_pow(c.khat[r - 2] + c.kap(r));
        EXPECT_EQ(lb.c * v, (CycloVec{lam * v[0], lam * v[1]}));
    }
}

TEST(Lantern, RandomAdmissibleBlocks) {
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 25) {
        RepContext c = random_context(rng, 3, 10, 3, 6);
        int r = 3 + static_cast<int>(rng() % (c.n - 2));
        if (!lantern_admissible(c, r)) continue;
        SuiteReport rep;
        check_lantern(c, r, rep);
        EXPECT_TRUE(rep.passed()) << (rep.failures.empty() ? "" : rep.failures.front());
        ++done;
    }
}

TEST(Lantern, Errors) {
    RepContext c = ctx(5, {1, 4, 1, 2});
    EXPECT_EQ(kind_of([&] { lantern_block(c, 4); }), ErrorKind::DegenerateBlock);
    EXPECT_EQ(kind_of([&] { lantern_block(c, 2); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { lantern_block(c, 5); }), ErrorKind::IndexOutOfRange);
}

// ---------------------------------------------------------------- galois

TEST(Galois, TransportExamples) {
    RepContext c = ctx(5, {1, 1, 2, 1});
    CycloMatrix g = rep_generator(c, 1, 3);
    EXPECT_EQ(galois_transport(g, 1), g);
    for (int t = 1; t < 5; ++t) {
        RepContext ct = ctx(5, {1, 1, 2, 1}, t);
        EXPECT_EQ(galois_transport(c.gram, t), ct.gram);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) EXPECT_EQ(galois_transport(rep_generator(c, i, j), t), rep_generator(ct, i, j));
    }
    EXPECT_EQ(kind_of([] { galois_transport(CycloMatrix::identity(6, 2), 3); }), ErrorKind::NotCoprime);
}

TEST(Galois, WordsTransport) {
    std::mt19937_64 rng(33);
    for (const auto& c : grid_sample(33, 20))
        for (int t : coprime_residues(c.d)) {
            RepContext ct = make_context(c.d, std::vector<int>(c.kappa), static_cast<long long>(c.k) * t);
            BraidWord w = random_word(rng, c.n, 3);
            if (c.n >= 3) w = w * word_t(c.n - 1);
            EXPECT_EQ(galois_transport(rep_word(c, w), t), rep_word(ct, w));
        }
}

// ---------------------------------------------------------------- dimension bookkeeping

TEST(Dimension, OperatorAndQuotientSizes) {
    for (const auto& c : grid_sample(34, 60)) {
        EXPECT_EQ(rep_generator(c, 1, 2).rows(), static_cast<std::size_t>(c.n - 1));
        EXPECT_EQ(effective_gram(c).rows(), static_cast<std::size_t>(dimension_formula(c)));
        EXPECT_EQ(effective_rep(c, rep_generator(c, 1, 2)).rows(), static_cast<std::size_t>(c.n - 1 - c.eps0));
    }
}
