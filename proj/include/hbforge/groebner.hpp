#pragma once

#include <optional>
#include <vector>

#include "hbforge/engine.hpp"
#include "hbforge/matrix.hpp"

namespace hbforge {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division; at each step the first divisor whose lead monomial
// divides the current lead term is used.
DivisionResult divide_track(const Polynomial& p, const std::vector<Polynomial>& divisors);

struct GbOptions {
    Budget budget;
    bool track_cofactors = false;
};

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators, std::vector<Polynomial> basis,
                  std::optional<PolyMatrix> cofactors);

    const RingPtr& ring_ptr() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    // Row k expresses basis()[k] in terms of generators().
    const std::optional<PolyMatrix>& cofactors() const { return cofactors_; }

    Polynomial normal_form(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    bool is_unit() const;
    std::vector<Monomial> lead_monomials() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> basis_;
    std::optional<PolyMatrix> cofactors_;
    std::vector<engine::Vec> vecs_;
};

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const GbOptions& opt = {});
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Generators of the elimination ideal, as polynomials of `gens`' ring that
// avoid the dropped variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& drop,
                                  const Budget& budget = {});
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::string>& drop,
                                  const Budget& budget = {});

// Every S-polynomial of the basis reduces to zero.
bool spair_check(const GroebnerBasis& gb);

// Minimal homogeneous generators of the ideal (subset of gens, in input order).
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens, const Budget& budget = {});

namespace engine {
Vec to_vec(const Polynomial& p, std::uint16_t comp = 0);
Polynomial to_poly(const RingPtr& ring, const Vec& v);
}  // namespace engine

}  // namespace hbforge
