#include "hbforge/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "hbforge/errors.hpp"

namespace hbforge {

Monomial Monomial::variable(std::size_t i, std::uint32_t power) {
    if (i >= kMaxVariables) throw Error("variable index out of range");
    if (power > kMaxExponent) throw Error("exponent overflow");
    Monomial m;
    m.e[i] = static_cast<Exponent>(power);
    m.refresh();
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    bool overflow = false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
        overflow |= s > kMaxExponent;
        r.e[i] = static_cast<Exponent>(s);
    }
    if (overflow) throw Error("exponent overflow");
    r.deg = a.deg + b.deg;
    r.mask = a.mask | b.mask;
    r.comp = a.comp ? a.comp : b.comp;
    return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = static_cast<Exponent>(b.e[i] - a.e[i]);
    r.refresh();
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.refresh();
    r.comp = a.comp;
    return r;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

// Grevlex restricted to a variable block.
int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
    std::uint32_t da = 0, db = 0;
    for (auto v : vars) {
        da += a.e[v];
        db += b.e[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
    return 0;
}

}  // namespace

MonomialOrder MonomialOrder::parse(const std::string& text, const std::vector<std::string>& names) {
    if (text == "grevlex") return grevlex();
    if (text == "lex") return lex();
    if (text.rfind("block:", 0) != 0) throw Error("unknown monomial order '" + text + "'");
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& part : split(text.substr(6), '|')) {
        std::vector<std::size_t> block;
        for (const auto& name : split(part, ',')) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw Error("order references undeclared variable '" + name + "'");
            block.push_back(static_cast<std::size_t>(it - names.begin()));
        }
        if (block.empty()) throw Error("empty block in order '" + text + "'");
        blocks.push_back(std::move(block));
    }
    return block(std::move(blocks));
}

std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
    if (kind_ == Kind::grevlex) return "grevlex";
    if (kind_ == Kind::lex) return "lex";
    std::string s = "block:";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) s += ',';
            s += names[blocks_[b][i]];
        }
    }
    return s;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    switch (kind_) {
    case Kind::grevlex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        for (std::size_t i = nvars; i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    case Kind::lex:
        for (std::size_t i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    case Kind::block:
        for (const auto& blk : blocks_)
            if (int c = grevlex_on(a, b, blk)) return c;
        return 0;
    }
    return 0;
}

}  // namespace hbforge
