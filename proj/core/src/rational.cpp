#include "fps/rational.hpp"

#include "fps/errors.hpp"

#include <cctype>
#include <ostream>

namespace fps {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(Integer num, Integer den) {
    if (den.is_zero()) throw MalformedInputError("rational with zero denominator");
    // Division of cpp_rational values normalizes sign and reduces by the gcd.
    q_ = mp::cpp_rational(std::move(num));
    q_ /= mp::cpp_rational(std::move(den));
}

Integer Rational::numerator() const { return mp::numerator(q_); }

Integer Rational::denominator() const { return mp::denominator(q_); }

std::string Rational::str() const {
    std::string s = numerator().str();
    const Integer den = denominator();
    if (den != 1) s += "/" + den.str();
    return s;
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { throw MalformedInputError("malformed rational \"" + std::string(text) + "\""); };
    const auto digits = [&](std::string_view part) {
        if (part.empty()) bad();
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        return Integer(std::string(part));
    };

    std::string_view num_part = text;
    std::string_view den_part;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }

    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    Integer num = digits(num_part);
    if (negative) num = -num;
    Integer den = den_part.data() == nullptr ? Integer(1) : digits(den_part);
    if (den.is_zero()) bad();
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertibleError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fps
