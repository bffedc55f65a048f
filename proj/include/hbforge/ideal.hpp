#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hbforge/groebner.hpp"

namespace hbforge {

// Ideal of a polynomial ring. Generators are stored nonzero, normalized and
// distinct; the Groebner basis is computed on first use and shared by copies.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, const std::vector<Polynomial>& generators, Budget budget = {});
    static Ideal unit(RingPtr ring, Budget budget = {});
    static Ideal zero(RingPtr ring, Budget budget = {});
    static Ideal parse(const std::vector<std::string>& generators, RingPtr ring, Budget budget = {});

    const RingPtr& ring_ptr() const { return ring_; }
    const PolyRing& ring() const { return *ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const Budget& budget() const { return budget_; }
    std::size_t size() const { return gens_.size(); }

    const GroebnerBasis& gb() const;
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_homogeneous() const;

    bool contains(const Polynomial& p) const;
    bool contains(const Ideal& other) const;
    Polynomial normal_form(const Polynomial& p) const;
    Ideal map_to(const RingPtr& target) const;
    // Same ideal with minimal homogeneous generators.
    Ideal minimalized() const;

    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    struct Cache;
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    Budget budget_;
    std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int exponent);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
Ideal quotient(const Ideal& a, const Polynomial& f);
Ideal quotient(const Ideal& a, const Ideal& b);

struct Saturation {
    Ideal ideal;
    int steps = 0;  // number of strict enlargements before stabilizing
};
Saturation saturate(const Ideal& a, const Ideal& b);

struct DimHeight {
    int dim = 0;  // -1 for the unit ideal
    int height = 0;
};
DimHeight dimension_height(const Ideal& a);

struct HilbertData {
    int nvars = 0;
    int dim = 0;
    int height = 0;
    std::vector<long long> numerator;  // B(t), coefficient of t^k at index k
    long long multiplicity = 0;
    std::optional<int> regularity;
    // Value of the Hilbert function of R/I at degree t.
    long long hfun(int t) const;
    std::string numerator_string() const;
};
// Hilbert series data of R/I for a homogeneous ideal in the standard grading.
HilbertData hilbert(const Ideal& a);
// Numerator of the Hilbert series of R/M for a monomial ideal M in nvars variables.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

struct GradedPiece {
    std::size_t dim = 0;
    std::vector<Polynomial> basis;
};
// Degree-t part of a homogeneous ideal by linear algebra on {m*g}.
GradedPiece graded_piece(const Ideal& a, int t);
// All monomials of standard degree t, in decreasing order for the ring's order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int t);

}  // namespace hbforge
