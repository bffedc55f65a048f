#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hbforge/field.hpp"
#include "hbforge/monomial.hpp"

namespace hbforge {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// One or two nonnegative weight vectors, one entry per variable.
using Grading = std::vector<std::vector<int>>;

class PolyRing {
public:
    // Empty grading means standard (all weights 1).
    static RingPtr make(std::vector<std::string> variables, CoeffField field,
                        MonomialOrder order = MonomialOrder::grevlex(), Grading grading = {});
    // Standard graded ring from "x,y,z" style names.
    static RingPtr standard(const std::vector<std::string>& variables,
                            CoeffField field = CoeffField());

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    // Index of a variable, or -1.
    int index_of(const std::string& name) const;
    const CoeffField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const Grading& grading() const { return grading_; }
    bool standard_graded() const { return standard_; }

    // Sum over the grading vectors; the engine's notion of degree.
    int weight(const Monomial& m) const {
        if (standard_) return static_cast<int>(m.deg);
        int w = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) w += total_weight_[i] * m.e[i];
        return w;
    }
    int variable_weight(std::size_t i) const { return total_weight_[i]; }
    std::vector<int> multidegree(const Monomial& m) const;

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, names_.size()); }

    std::string describe() const;
    bool same_as(const PolyRing& o) const;

private:
    PolyRing() = default;
    std::vector<std::string> names_;
    CoeffField field_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    Grading grading_;
    std::vector<int> total_weight_;
    bool standard_ = true;
};

void require_same_ring(const PolyRing& a, const PolyRing& b);

}  // namespace hbforge
