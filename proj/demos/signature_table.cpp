// Prints eps0, dimension, signature formula and numeric inertia for every k of one (d, kappa).
#include <iostream>

#include "cyclorep/criteria.hpp"

int main(int argc, char** argv) {
    using namespace cyclorep;
    int d = 5;
    std::vector<long long> kappa{1, 1, 1, 1, 1};
    if (argc > 2) {
        d = std::stoi(argv[1]);
        kappa.clear();
        for (int i = 2; i < argc; ++i) kappa.push_back(std::stoll(argv[i]));
    }
    for (int k = 1; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        RepContext c = make_context(d, kappa, k);
        auto [r, s] = signature_formula(c);
        Inertia in = inertia(effective_gram(c));
        std::cout << "k=" << k << " eps0=" << c.eps0 << " dim=" << dimension_formula(c) << " formula=(" << r << "," << s
                  << ") inertia=(" << in.pos << "," << in.neg << "," << in.zero << ")\n";
    }
}
