#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hbforge {

// Field element. Prime-field elements live in `residue`; rational elements
// point to an immutable canonical mpq (null means zero).
class Scalar {
public:
    Scalar() = default;

    std::uint32_t residue() const { return residue_; }
    const mpq_class* rational() const { return rational_.get(); }

private:
    friend class CoeffField;
    std::uint32_t residue_ = 0;
    std::shared_ptr<const mpq_class> rational_;
};

class CoeffField {
public:
    enum class Kind { prime, rationals };

    static constexpr std::uint32_t kDefaultPrime = 32003;

    CoeffField() = default;
    static CoeffField prime_field(std::uint64_t p);
    static CoeffField rationals();
    // "Q", "QQ" or a decimal prime.
    static CoeffField parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint32_t modulus() const { return modulus_; }
    std::string name() const;

    Scalar zero() const { return Scalar(); }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t v) const;
    Scalar from_mpq(const mpq_class& q) const;
    // Decimal integer or a/b; throws when the value is not in the field.
    Scalar parse_scalar(const std::string& text) const;

    bool is_zero(const Scalar& a) const {
        return kind_ == Kind::prime ? a.residue_ == 0 : a.rational_ == nullptr;
    }
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;
    // Sign of the representative: balanced residue for prime fields.
    int sign(const Scalar& a) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, std::uint64_t e) const;

    std::string format(const Scalar& a) const;
    // Integer value of a prime-field element in [0, p) or of an integral rational.
    std::int64_t to_int(const Scalar& a) const;

    bool operator==(const CoeffField& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const CoeffField& o) const { return !(*this == o); }

private:
    Scalar make_residue(std::uint32_t v) const {
        Scalar s;
        s.residue_ = v;
        return s;
    }
    Scalar make_rational(mpq_class q) const;

    Kind kind_ = Kind::prime;
    std::uint32_t modulus_ = kDefaultPrime;
};

}  // namespace hbforge
