#include "hbforge/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hbforge/errors.hpp"

namespace hbforge {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

RingPtr PolyRing::make(std::vector<std::string> variables, CoeffField field, MonomialOrder order,
                       Grading grading) {
    const std::size_t n = variables.size();
    if (n > kMaxVariables) throw Error("too many variables (max " + std::to_string(kMaxVariables) + ")");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!valid_name(v)) throw Error("bad variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
    }
    if (order.kind() == MonomialOrder::Kind::block) {
        std::vector<int> hits(n, 0);
        for (const auto& blk : order.blocks())
            for (auto i : blk) {
                if (i >= n) throw Error("order references undeclared variable");
                ++hits[i];
            }
        for (int h : hits)
            if (h != 1) throw Error("block order must partition the variables");
    }
    if (grading.empty()) grading.push_back(std::vector<int>(n, 1));
    if (grading.size() > 2) throw Error("at most two grading vectors");
    std::vector<int> total(n, 0);
    bool standard = grading.size() == 1;
    for (const auto& w : grading) {
        if (w.size() != n) throw Error("weight vector length mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] < 0) throw Error("negative weight");
            total[i] += w[i];
            if (w[i] != 1) standard = false;
        }
    }
    auto ring = std::shared_ptr<PolyRing>(new PolyRing());
    ring->names_ = std::move(variables);
    ring->field_ = field;
    ring->order_ = std::move(order);
    ring->grading_ = std::move(grading);
    ring->total_weight_ = std::move(total);
    ring->standard_ = standard;
    return ring;
}

RingPtr PolyRing::standard(const std::vector<std::string>& variables, CoeffField field) {
    return make(variables, field);
}

int PolyRing::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::vector<int> PolyRing::multidegree(const Monomial& m) const {
    std::vector<int> d(grading_.size(), 0);
    for (std::size_t k = 0; k < grading_.size(); ++k)
        for (std::size_t i = 0; i < names_.size(); ++i) d[k] += grading_[k][i] * m.e[i];
    return d;
}

std::string PolyRing::describe() const {
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) s += ",";
        s += names_[i];
    }
    return s + "] " + order_.describe(names_);
}

bool PolyRing::same_as(const PolyRing& o) const {
    return this == &o || (names_ == o.names_ && field_ == o.field_ && order_ == o.order_ &&
                          grading_ == o.grading_);
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
    if (!a.same_as(b)) throw Error("ring mismatch: " + a.describe() + " vs " + b.describe());
}

}  // namespace hbforge
