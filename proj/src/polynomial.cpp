#include "hbforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "hbforge/errors.hpp"

namespace hbforge {

namespace {

void combine_sorted(const CoeffField& f, std::vector<Term>& terms) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term t = terms[i];
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].m == t.m) {
            t.c = f.add(t.c, terms[j].c);
            ++j;
        }
        if (!f.is_zero(t.c)) terms[out++] = std::move(t);
        i = j;
    }
    terms.resize(out);
}

void sort_terms(const PolyRing& ring, std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.m, b.m) > 0; });
}

}  // namespace

std::string MultiDegree::to_string() const {
    if (state == State::zero) return "-inf";
    if (state == State::inhomogeneous) return "inhomogeneous";
    std::string s = "(";
    for (std::size_t i = 0; i < value.size(); ++i) s += (i ? "," : "") + std::to_string(value[i]);
    return s + ")";
}

std::vector<Term> axpy_terms(const PolyRing& ring, const std::vector<Term>& a, const Scalar& c,
                             const Monomial& m, const std::vector<Term>& b) {
    const CoeffField& f = ring.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Term tb;
    bool have_b = false;
    auto load_b = [&]() {
        if (j < b.size()) {
            tb.m = mono_mul(m, b[j].m);
            tb.c = f.mul(c, b[j].c);
            have_b = true;
        } else {
            have_b = false;
        }
    };
    load_b();
    while (i < a.size() || have_b) {
        int cmp;
        if (i == a.size()) cmp = -1;
        else if (!have_b) cmp = 1;
        else cmp = ring.compare(a[i].m, tb.m);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(tb);
            ++j;
            load_b();
        } else {
            Scalar s = f.add(a[i].c, tb.c);
            if (!f.is_zero(s)) out.push_back(Term{a[i].m, s});
            ++i;
            ++j;
            load_b();
        }
    }
    return out;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    sort_terms(*ring, terms);
    combine_sorted(ring->field(), terms);
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    return monomial(std::move(ring), Monomial::one(), c);
}

Polynomial Polynomial::from_int(RingPtr ring, std::int64_t v) {
    Scalar c = ring->field().from_int(v);
    return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw Error("variable index out of range");
    Scalar one = ring->field().one();
    return monomial(std::move(ring), Monomial::variable(i), one);
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    int i = ring->index_of(name);
    if (i < 0) throw Error("unknown variable '" + name + "'");
    return variable(std::move(ring), static_cast<std::size_t>(i));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back(Term{m, c});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    return from_sorted_terms(ring_, axpy_terms(*ring_, terms_, field().one(), Monomial::one(), o.terms_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    return from_sorted_terms(ring_,
                             axpy_terms(*ring_, terms_, field().from_int(-1), Monomial::one(), o.terms_));
}

Polynomial Polynomial::operator-() const { return scaled(field().from_int(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    const Polynomial& small = size() <= o.size() ? *this : o;
    const Polynomial& big = size() <= o.size() ? o : *this;
    if (small.size() == 1) return big.mul_term(small.lead().m, small.lead().c);
    std::vector<Term> all;
    all.reserve(size() * o.size());
    const CoeffField& f = field();
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) all.push_back(Term{mono_mul(a.m, b.m), f.mul(a.c, b.c)});
    return from_terms(ring_, std::move(all));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const CoeffField& f = field();
    if (f.is_zero(c)) return Polynomial(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = f.mul(t.c, c);
    return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
    const CoeffField& f = field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.m, f.mul(t.c, f.from_int(t.m.e[var]))};
        if (f.is_zero(d.c)) continue;
        --d.m.e[var];
        d.m.refresh();
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    const CoeffField& f = field();
    if (f.is_zero(c)) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{mono_mul(m, t.m), f.mul(t.c, c)});
    // Multiplying by a monomial preserves the term order.
    return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw Error("negative exponent");
    Polynomial result = from_int(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::normalized() const {
    if (is_zero()) return *this;
    const CoeffField& f = field();
    if (f.is_prime()) return scaled(f.inv(lead_coeff()));
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        const mpq_class& q = *t.c.rational();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    mpq_class factor(l, g);
    factor.canonicalize();
    if (f.sign(lead_coeff()) < 0) factor = -factor;
    return scaled(f.from_mpq(factor));
}

MultiDegree Polynomial::multidegree() const {
    MultiDegree d;
    if (is_zero()) return d;
    d.state = MultiDegree::State::homogeneous;
    d.value = ring_->multidegree(terms_.front().m);
    for (const auto& t : terms_)
        if (ring_->multidegree(t.m) != d.value) {
            d.state = MultiDegree::State::inhomogeneous;
            d.value.clear();
            break;
        }
    return d;
}

bool Polynomial::is_homogeneous() const { return multidegree().state != MultiDegree::State::inhomogeneous; }

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->weight(t.m));
    return d;
}

int Polynomial::standard_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
}

bool Polynomial::is_standard_homogeneous() const {
    for (const auto& t : terms_)
        if (t.m.deg != terms_.front().m.deg) return false;
    return true;
}

bool Polynomial::involves(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.m.e[var]) return true;
    return false;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars()) throw Error("substitution needs one image per variable");
    std::vector<std::map<int, Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t v, int e) -> const Polynomial& {
        auto it = powers[v].find(e);
        if (it != powers[v].end()) return it->second;
        return powers[v].emplace(e, images[v].pow(e)).first->second;
    };
    const CoeffField& tf = target->field();
    if (tf != field()) throw Error("substitution across fields");
    Polynomial result(target);
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        Polynomial prod = constant(target, t.c);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (t.m.e[v]) prod = prod * power_of(v, t.m.e[v]);
        acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    }
    return from_terms(target, std::move(acc));
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
    if (target->field() != field()) throw Error("ring map across fields");
    std::vector<int> where(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) where[i] = target->index_of(ring_->name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (where[i] < 0) throw Error("variable '" + ring_->name(i) + "' missing in target ring");
            m.e[where[i]] = t.m.e[i];
        }
        m.refresh();
        out.push_back(Term{m, t.c});
    }
    return from_terms(target, std::move(out));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    const CoeffField& f = field();
    if (point.size() != ring_->nvars()) throw Error("evaluation point has wrong length");
    Scalar sum = f.zero();
    for (const auto& t : terms_) {
        Scalar v = t.c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
        sum = f.add(sum, v);
    }
    return sum;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size()) return false;
    const CoeffField& f = field();
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || !f.equal(terms_[i].c, o.terms_[i].c)) return false;
    return true;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    const CoeffField& f = field();
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        bool negative = f.sign(t.c) < 0;
        Scalar mag = negative ? f.neg(t.c) : t.c;
        if (k == 0) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        bool unit = f.is_one(mag);
        if (t.m.deg == 0) {
            s += f.format(mag);
        } else {
            if (!unit) s += f.format(mag) + "*";
            s += monomial_to_string(*ring_, t.m);
        }
    }
    return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw Error("parse error at " + std::to_string(pos_) + " in '" + text_ + "': " + why);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Polynomial expression() {
        Polynomial acc(ring_);
        bool first = true;
        for (;;) {
            bool minus = false;
            if (accept('+')) {
            } else if (accept('-')) {
                minus = true;
            } else if (!first) {
                break;
            }
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial p = power();
        while (accept('*')) p = p * power();
        return p;
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            std::string e = digits();
            if (e.empty() || e.size() > 6) fail("malformed exponent");
            long v = std::stol(e);
            if (v > static_cast<long>(kMaxExponent)) fail("malformed exponent");
            base = base.pow(v);
        }
        return base;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expression();
            if (!accept(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (accept('/')) {
                std::string den = digits();
                if (den.empty()) fail("malformed rational");
                num += "/" + den;
            }
            return Polynomial::constant(ring_, ring_->field().parse_scalar(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = ring_->index_of(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, RingPtr ring) {
    return Parser(text, std::move(ring)).run();
}

}  // namespace hbforge
