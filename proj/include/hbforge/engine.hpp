#pragma once

#include <cstddef>
#include <vector>

#include "hbforge/polynomial.hpp"

namespace hbforge {

struct Budget {
    int max_degree = 40;
    std::size_t max_basis = 20000;
};

namespace engine {

// Element of a free module R^rank: terms carry their component in Monomial::comp.
using Vec = std::vector<Term>;

enum class ModuleOrder { pot, top };

// Term order and degree data for one free module.
struct Context {
    const PolyRing* ring;
    ModuleOrder order = ModuleOrder::top;
    std::vector<int> shifts;  // degree of each basis vector

    Context(const PolyRing& r, std::size_t rank, ModuleOrder o = ModuleOrder::top,
            std::vector<int> s = {})
        : ring(&r), order(o), shifts(s.empty() ? std::vector<int>(rank, 0) : std::move(s)) {}

    std::size_t rank() const { return shifts.size(); }
    int compare(const Monomial& a, const Monomial& b) const {
        if (order == ModuleOrder::pot) {
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
            return ring->compare(a, b);
        }
        if (int c = ring->compare(a, b)) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
    int degree(const Monomial& m) const { return ring->weight(m) + shifts[m.comp]; }
};

struct Options {
    Budget budget;
    bool track_cofactors = false;
    // Homogeneous input only: record which inputs are minimal generators.
    bool minimal = false;
    // Skip the final interreduction (minimal mode callers only need the flags).
    bool interreduce = true;
};

struct Result {
    std::vector<Vec> basis;                // reduced, sorted ascending by lead term
    std::vector<Vec> cofactors;            // per basis element, over R^{#gens}
    std::vector<std::size_t> minimal_inputs;  // input indices (minimal mode)
};

Vec canonical(const Context& ctx, Vec v);
Vec axpy(const Context& ctx, const Vec& a, const Scalar& c, const Monomial& m, const Vec& b);
// a - (lc(a)/lc(b)) * (lm(a)/lm(b)) * b, and the same step on cofactors.
Result buchberger(const Context& ctx, const std::vector<Vec>& gens, const Options& opt);
// Full reduction against a set of elements (first divisor wins).
Vec reduce(const Context& ctx, Vec p, const std::vector<Vec>& by);
Vec spoly(const Context& ctx, const Vec& f, const Vec& g);
// True when every S-pair of the basis reduces to zero.
bool spair_check(const Context& ctx, const std::vector<Vec>& basis);
Vec make_monic(const Context& ctx, Vec v);

}  // namespace engine
}  // namespace hbforge
