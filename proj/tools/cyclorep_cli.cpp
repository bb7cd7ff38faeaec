// Command-line front end: gram, rep, density, arithmeticity, horo, verify.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclorep/json_io.hpp"
#include "cyclorep/verify.hpp"

using namespace cyclorep;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::vector<long long> parse_kappa(const std::string& s) {
    std::vector<long long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad exponent list '" + s + "'");
        }
    }
    return out;
}

void print_matrix(std::ostream& os, const CycloMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& z : m.entries()) {
        cells.push_back(z.to_string());
        width = std::max(width, cells.back().size());
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[i * m.cols() + j];
            os << (j ? " | " : " ") << c << std::string(width - c.size(), ' ');
        }
        os << " ]\n";
    }
}

struct Common {
    int d = 0;
    std::string kappa;
    long long k = 1;
    bool json = false;
};

void add_common(CLI::App* sub, Common& c, bool with_k) {
    sub->add_option("--d", c.d, "cyclic order d")->required();
    sub->add_option("--kappa", c.kappa, "comma-separated exponents k_1,...,k_n")->required();
    if (with_k) sub->add_option("--k", c.k, "q = zeta_d^k");
    sub->add_flag("--json", c.json, "JSON output");
}

std::string kappa_string(const RepContext& c) {
    std::string s;
    for (int i = 0; i < c.n; ++i) s += (i ? "," : "") + std::to_string(c.kappa[i]);
    return s;
}

int cmd_gram(const Common& o) {
    RepContext c = make_context(o.d, parse_kappa(o.kappa), o.k);
    auto [rq, sq] = signature_formula(c);
    if (o.json) {
        json j = {{"d", c.d}, {"kappa", c.kappa}, {"k", c.k}, {"eps0", c.eps0}, {"mu", to_json(c.mu)},
                  {"gram", to_json(c.gram)}, {"dimension", dimension_formula(c)}, {"signature", {rq, sq}}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "d=" << c.d << " kappa=(" << kappa_string(c) << ") k=" << c.k << "\n";
    std::cout << "eps0: " << c.eps0 << "\n";
    std::cout << "mu: " << c.mu.to_string() << "\n";
    std::cout << "J-Gram on g_1..g_" << c.n - 1 << " (z = zeta_" << c.d << "):\n";
    print_matrix(std::cout, c.gram);
    std::cout << "dimension: " << dimension_formula(c) << "\n";
    std::cout << "signature: (" << rq << ", " << sq << ")\n";
    return kOk;
}

int cmd_rep(const Common& o, const std::string& word_text, bool quotient) {
    RepContext c = make_context(o.d, parse_kappa(o.kappa), o.k);
    BraidWord w = parse_word(word_text);
    CycloMatrix m = rep_word(c, w);
    if (quotient) m = quotient_rep(c, m);
    CycloNum det = determinant(m);
    if (o.json) {
        json j = {{"word", w.to_string()}, {"quotient", quotient}, {"matrix", to_json(m)}, {"det", to_json(det)}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "word: " << (w.letters.empty() ? "(empty)" : w.to_string()) << (quotient ? "  [quotient]" : "") << "\n";
    print_matrix(std::cout, m);
    std::cout << "det: " << det.to_string() << "\n";
    return kOk;
}

int cmd_density(const Common& o) {
    ZariskiResult r = zariski_verdict(o.d, parse_kappa(o.kappa));
    if (o.json) {
        std::cout << to_json(r).dump(2) << "\n";
        return kOk;
    }
    std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
    std::cout << "n-1-eps0 = " << r.dim << (r.dimension_ok ? " (dimension condition holds)" : " (dimension condition fails)") << "\n";
    for (const auto& d : r.per_k) {
        std::cout << "  k=" << d.k << " good=" << (d.good.good ? "yes" : "no");
        if (d.good.clause == GoodClause::SumRange) std::cout << " (sum in (1, n-1))";
        if (d.good.clause == GoodClause::Triple)
            std::cout << " (triple " << d.good.triple[0] << "," << d.good.triple[1] << "," << d.good.triple[2] << ")";
        std::cout << "\n";
    }
    return kOk;
}

int cmd_arith(const Common& o) {
    ArithmeticityResult r = arithmeticity_verdict(o.d, parse_kappa(o.kappa));
    if (o.json) {
        std::cout << to_json(r).dump(2) << "\n";
        return kOk;
    }
    std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
    if (!r.witness.empty()) {
        std::cout << "witness I = {";
        for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? "," : "") << r.witness[i];
        std::cout << "}\n";
    }
    std::cout << "n+1-eps0 >= 5: " << (r.rank_condition ? "yes" : "no") << "\n";
    std::cout << "field condition: " << (r.field_condition ? "yes" : "no") << "\n";
    std::cout << "subsets with d | sum: " << r.tried.size() << "\n";
    return kOk;
}

int cmd_horo(const Common& o, int m, int maxlen) {
    RepContext c = make_context(o.d, parse_kappa(o.kappa), o.k);
    FlagContext fc = make_flag(c, m);
    std::mt19937_64 rng(1);
    SuiteReport rep;
    rep.name = "horo";
    json j = {{"d", c.d}, {"kappa", c.kappa}, {"k", c.k}, {"m", m}, {"maxlen", maxlen}};
    json ranks = json::object();
    auto part = [&](OrbitPart p, const char* key) {
        BraidWord w = part_witness(fc, p);
        json rec = {{"word", w.to_string()}};
        try {
            rec["chi"] = to_json(chi(fc, flag_rep(fc, w)));
        } catch (const Error& e) {
            rec["error"] = e.name();
        }
        ranks[key] = orbit_rank(fc, p, maxlen);
        j[std::string("witness_") + key] = rec;
    };
    if (m >= 3) part(OrbitPart::Lower, "lower");
    if (c.n - m >= 3) part(OrbitPart::Upper, "upper");
    j["orbit_rank"] = ranks;
    j["orbit_rank_bound"] = euler_phi(c.d) * (c.n - 4);

    check_horo(fc, rng, rep, maxlen);
    if (m >= 3 && c.n - m >= 3) {
        try {
            LatticeReport lr = n_lattice_vectors(fc, maxlen);
            json kap = json::array();
            for (const auto& row : lr.kappa) kap.push_back(to_json(row));
            j["lattice"] = {{"a_q", to_json(lr.a_q)}, {"scale", json::array()}, {"reps", lr.reps},
                            {"kappa", kap}, {"rank", lr.rank}, {"ell", lr.ell}};
            for (const auto& s : lr.scale) j["lattice"]["scale"].push_back(s.get_str());
        } catch (const Error& e) {
            j["lattice"] = {{"error", e.name()}};
        }
    }
    j["checks"] = rep.checks;
    j["failures"] = rep.failures;
    j["passed"] = rep.passed();
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "flag: d=" << c.d << " kappa=(" << kappa_string(c) << ") k=" << c.k << " m=" << m << "\n";
        for (const char* key : {"lower", "upper"})
            if (ranks.contains(key))
                std::cout << "orbit rank (" << key << "): " << ranks[key].get<int>() << "\n";
        std::cout << "bound phi(d)(n-4): " << j["orbit_rank_bound"].get<int>() << "\n";
        if (j.contains("lattice") && j["lattice"].contains("rank"))
            std::cout << "lattice rank: " << j["lattice"]["rank"].get<int>() << " of " << j["lattice"]["ell"].get<int>() << "\n";
        std::cout << "checks: " << rep.checks << ", failures: " << rep.failures.size() << "\n";
        for (const auto& f : rep.failures) std::cout << "  FAIL " << f << "\n";
    }
    return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int size, bool as_json) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) names = {suite};
    else fail(ErrorKind::InvalidParameter, "unknown suite '" + suite + "'");
    bool ok = true;
    json out = json::array();
    for (const auto& name : names) {
        SuiteReport r = run_suite(name, seed, size);
        ok = ok && r.passed();
        if (as_json) {
            out.push_back({{"suite", name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}});
        } else {
            std::cout << name << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
            for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
        }
    }
    if (as_json) std::cout << json({{"seed", seed}, {"size", size}, {"suites", out}, {"passed", ok}}).dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact braid-group representations from cyclic covers of the sphere"};
    app.require_subcommand(1);

    Common gram_o, rep_o, dens_o, arith_o, horo_o;
    auto* gram = app.add_subcommand("gram", "J-Gram matrix, eps0, dimension and signature");
    add_common(gram, gram_o, true);

    auto* rep = app.add_subcommand("rep", "matrix of a braid word");
    add_common(rep, rep_o, true);
    std::string word;
    bool quotient = false;
    rep->add_option("--word", word, "e.g. \"A(1,2) T(3)^-1 FT(1,3)\"");
    rep->add_flag("--quotient", quotient, "act on the quotient by the radical (eps0 = 1)");

    auto* dens = app.add_subcommand("density", "Zariski-density criterion");
    add_common(dens, dens_o, false);
    auto* arith = app.add_subcommand("arithmeticity", "arithmeticity criterion");
    add_common(arith, arith_o, false);

    auto* horo = app.add_subcommand("horo", "horospherical report for a flag index m");
    add_common(horo, horo_o, true);
    int m = 0, maxlen = 6;
    horo->add_option("--m", m, "flag index with d | k_1+...+k_m")->required();
    horo->add_option("--maxlen", maxlen, "orbit word length bound")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    std::uint64_t seed = 1;
    int size = 20;
    bool verify_json = false;
    verify->add_option("--suite", suite, "forms|relations|lantern|galois|horo|criteria|all");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--size", size, "samples per suite")->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "error: UsageError\n";
        return kUsage;
    }

    try {
        if (*gram) return cmd_gram(gram_o);
        if (*rep) return cmd_rep(rep_o, word, quotient);
        if (*dens) return cmd_density(dens_o);
        if (*arith) return cmd_arith(arith_o);
        if (*horo) return cmd_horo(horo_o, m, maxlen);
        if (*verify) return cmd_verify(suite, seed, size, verify_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json({{"error", e.name()}, {"message", e.what()}}).dump() << "\n";
        return kUsage;
    }
    return kUsage;
}
