#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hbforge {

inline constexpr std::size_t kMaxVariables = 24;
using Exponent = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 32767;

// Exponent vector with cached degree and support mask. `comp` is the free-module
// component and is 0 for ring elements.
struct Monomial {
    std::array<Exponent, kMaxVariables> e{};
    std::uint32_t deg = 0;
    std::uint32_t mask = 0;
    std::uint16_t comp = 0;

    void refresh() {
        deg = 0;
        mask = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            deg += e[i];
            if (e[i]) mask |= 1u << i;
        }
    }

    bool operator==(const Monomial& o) const { return comp == o.comp && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    static Monomial one(std::uint16_t comp = 0) {
        Monomial m;
        m.comp = comp;
        return m;
    }
    static Monomial variable(std::size_t i, std::uint32_t power = 1);
};

// Product; throws on exponent overflow. Component taken from the second factor
// when the first is a ring monomial.
Monomial mono_mul(const Monomial& a, const Monomial& b);
// True when a divides b (same component).
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.comp != b.comp || (a.mask & ~b.mask) || a.deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}
// b / a, assuming a divides b; the result is a ring monomial.
Monomial mono_div(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
// Ring-level coprimality of supports.
inline bool mono_coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask) == 0; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.comp;
        for (auto x : m.e) h = h * 1000003u ^ x;
        return h;
    }
};

class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
    // Blocks of variable indices; grevlex inside each block.
    static MonomialOrder block(std::vector<std::vector<std::size_t>> blocks) {
        return MonomialOrder(Kind::block, std::move(blocks));
    }
    // "grevlex", "lex" or "block:x,y,z|t1,t2".
    static MonomialOrder parse(const std::string& text, const std::vector<std::string>& names);

    Kind kind() const { return kind_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::string describe(const std::vector<std::string>& names) const;

    // Sign of a - b over the first nvars exponents (components ignored).
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && blocks_ == o.blocks_; }

private:
    MonomialOrder(Kind k, std::vector<std::vector<std::size_t>> b) : kind_(k), blocks_(std::move(b)) {}
    Kind kind_;
    std::vector<std::vector<std::size_t>> blocks_;
};

}  // namespace hbforge
