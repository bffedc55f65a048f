#include "hbforge/field.hpp"

#include <cctype>

#include "hbforge/errors.hpp"

namespace hbforge {

namespace {

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

CoeffField CoeffField::prime_field(std::uint64_t p) {
    if (p >= (1ULL << 31)) throw Error("modulus " + std::to_string(p) + " does not fit a machine word");
    if (!is_prime_number(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    CoeffField f;
    f.kind_ = Kind::prime;
    f.modulus_ = static_cast<std::uint32_t>(p);
    return f;
}

CoeffField CoeffField::rationals() {
    CoeffField f;
    f.kind_ = Kind::rationals;
    f.modulus_ = 0;
    return f;
}

CoeffField CoeffField::parse(const std::string& text) {
    if (text == "Q" || text == "QQ") return rationals();
    if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')')
        return parse(text.substr(3, text.size() - 4));
    if (!all_digits(text)) throw Error("bad field '" + text + "'");
    return prime_field(std::stoull(text));
}

std::string CoeffField::name() const {
    return kind_ == Kind::prime ? "GF(" + std::to_string(modulus_) + ")" : "QQ";
}

Scalar CoeffField::make_rational(mpq_class q) const {
    Scalar s;
    if (q != 0) s.rational_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar CoeffField::from_int(std::int64_t v) const {
    if (kind_ == Kind::prime) {
        std::int64_t r = v % static_cast<std::int64_t>(modulus_);
        if (r < 0) r += modulus_;
        return make_residue(static_cast<std::uint32_t>(r));
    }
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return make_rational(mpq_class(z));
}

Scalar CoeffField::from_mpq(const mpq_class& q) const {
    if (kind_ == Kind::rationals) return make_rational(q);
    mpz_class p(modulus_);
    mpz_class den = q.get_den() % p;
    if (den == 0) throw Error("coefficient not in field " + name());
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    Scalar n = make_residue(static_cast<std::uint32_t>(num.get_ui()));
    if (den < 0) den += p;
    Scalar d = make_residue(static_cast<std::uint32_t>(den.get_ui()));
    return div(n, d);
}

Scalar CoeffField::parse_scalar(const std::string& text) const {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        neg = num[0] == '-';
        num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed coefficient '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error("zero denominator in '" + text + "'");
    mpq_class q(neg ? mpz_class(-n) : n, d);
    q.canonicalize();
    return from_mpq(q);
}

bool CoeffField::is_one(const Scalar& a) const {
    if (kind_ == Kind::prime) return a.residue_ == 1;
    return a.rational_ && *a.rational_ == 1;
}

bool CoeffField::equal(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) return a.residue_ == b.residue_;
    if (!a.rational_ || !b.rational_) return a.rational_ == b.rational_;
    return *a.rational_ == *b.rational_;
}

int CoeffField::sign(const Scalar& a) const {
    if (kind_ == Kind::prime) {
        if (a.residue_ == 0) return 0;
        return a.residue_ <= modulus_ / 2 ? 1 : -1;
    }
    return a.rational_ ? sgn(*a.rational_) : 0;
}

Scalar CoeffField::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        std::uint32_t s = a.residue_ + b.residue_;
        if (s >= modulus_) s -= modulus_;
        return make_residue(s);
    }
    if (!a.rational_) return b;
    if (!b.rational_) return a;
    return make_rational(*a.rational_ + *b.rational_);
}

Scalar CoeffField::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        std::uint32_t s = a.residue_ >= b.residue_ ? a.residue_ - b.residue_
                                                   : a.residue_ + modulus_ - b.residue_;
        return make_residue(s);
    }
    if (!b.rational_) return a;
    if (!a.rational_) return neg(b);
    return make_rational(*a.rational_ - *b.rational_);
}

Scalar CoeffField::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime)
        return make_residue(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.residue_) * b.residue_ % modulus_));
    if (!a.rational_ || !b.rational_) return Scalar();
    return make_rational(*a.rational_ * *b.rational_);
}

Scalar CoeffField::neg(const Scalar& a) const {
    if (kind_ == Kind::prime) return make_residue(a.residue_ == 0 ? 0 : modulus_ - a.residue_);
    if (!a.rational_) return a;
    return make_rational(-*a.rational_);
}

Scalar CoeffField::pow(const Scalar& a, std::uint64_t e) const {
    Scalar result = one();
    Scalar base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Scalar CoeffField::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error("division by zero");
    if (kind_ == Kind::prime) {
        // Extended Euclid on 64-bit signed values.
        std::int64_t t = 0, nt = 1, r = modulus_, nr = a.residue_;
        while (nr) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += modulus_;
        return make_residue(static_cast<std::uint32_t>(t));
    }
    return make_rational(1 / *a.rational_);
}

std::string CoeffField::format(const Scalar& a) const {
    if (kind_ == Kind::prime) {
        if (a.residue_ > modulus_ / 2) return "-" + std::to_string(modulus_ - a.residue_);
        return std::to_string(a.residue_);
    }
    return a.rational_ ? a.rational_->get_str() : "0";
}

std::int64_t CoeffField::to_int(const Scalar& a) const {
    if (kind_ == Kind::prime) return a.residue_;
    if (!a.rational_) return 0;
    if (a.rational_->get_den() != 1 || !a.rational_->get_num().fits_slong_p())
        throw Error("rational " + a.rational_->get_str() + " is not a machine integer");
    return a.rational_->get_num().get_si();
}

}  // namespace hbforge
