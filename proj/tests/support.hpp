#pragma once

#include <random>
#include <string>
#include <vector>

#include "hbforge/polynomial.hpp"

namespace testing_support {

using namespace hbforge;

inline RingPtr ring_xyz(CoeffField f = CoeffField()) { return PolyRing::standard({"x", "y", "z"}, f); }

inline Polynomial P(const std::string& s, const RingPtr& r) { return Polynomial::parse(s, r); }

inline std::vector<Polynomial> Ps(const std::vector<std::string>& ss, const RingPtr& r) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(Polynomial::parse(s, r));
    return out;
}

// Random polynomial with up to `terms` terms of degree <= maxdeg.
inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int maxdeg,
                              bool homogeneous = false, int small_coeffs = 0) {
    std::vector<Term> out;
    const CoeffField& f = r->field();
    int hdeg = static_cast<int>(rng() % (maxdeg + 1));
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        int budget = homogeneous ? hdeg : static_cast<int>(rng() % (maxdeg + 1));
        for (std::size_t v = 0; v + 1 < r->nvars() && budget > 0; ++v) {
            int e = static_cast<int>(rng() % (budget + 1));
            m.e[v] = static_cast<Exponent>(e);
            budget -= e;
        }
        if (homogeneous) m.e[r->nvars() - 1] = static_cast<Exponent>(budget);
        m.refresh();
        std::int64_t c = small_coeffs ? static_cast<std::int64_t>(rng() % (2 * small_coeffs + 1)) - small_coeffs
                                      : static_cast<std::int64_t>(rng() % 1000000);
        out.push_back(Term{m, f.from_int(c)});
    }
    return Polynomial::from_terms(r, std::move(out));
}

inline Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int maxe) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v) m.e[v] = static_cast<Exponent>(rng() % (maxe + 1));
    m.refresh();
    return m;
}

}  // namespace testing_support
