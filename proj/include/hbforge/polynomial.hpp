#pragma once

#include <string>
#include <vector>

#include "hbforge/ring.hpp"

namespace hbforge {

struct Term {
    Monomial m;
    Scalar c;
};

struct MultiDegree {
    enum class State { zero, homogeneous, inhomogeneous };
    State state = State::zero;
    std::vector<int> value;

    bool homogeneous() const { return state == State::homogeneous; }
    std::string to_string() const;
};

// Sparse polynomial; terms strictly decreasing in the ring order, no zero
// coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial from_int(RingPtr ring, std::int64_t v);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);
    static Polynomial parse(const std::string& text, RingPtr ring);

    const RingPtr& ring_ptr() const { return ring_; }
    const PolyRing& ring() const { return *ring_; }
    const CoeffField& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
    const Term& lead() const { return terms_.front(); }
    const Monomial& lead_monomial() const { return terms_.front().m; }
    const Scalar& lead_coeff() const { return terms_.front().c; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(long e) const;
    Polynomial derivative(std::size_t var) const;
    // Monic over GF(p); content-free with positive lead over QQ.
    Polynomial normalized() const;

    MultiDegree multidegree() const;
    bool is_homogeneous() const;
    // Max engine weight; -1 for zero.
    int degree() const;
    // Max exponent sum; -1 for zero.
    int standard_degree() const;
    bool is_standard_homogeneous() const;
    bool involves(std::size_t var) const;

    // Image under x_i -> images[i] in the ring of the images.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
    // Same-named variables in another ring.
    Polynomial map_to(const RingPtr& target) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Canonical merge a + c * m * b of term lists in the given ring (used by kernels).
std::vector<Term> axpy_terms(const PolyRing& ring, const std::vector<Term>& a, const Scalar& c,
                             const Monomial& m, const std::vector<Term>& b);
std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

}  // namespace hbforge
