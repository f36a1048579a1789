#include "rdt/rational.hpp"

#include <cctype>
#include <ostream>

#include "rdt/error.hpp"

namespace rdt {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s)) throw DomainError("malformed rational '" + s + "'");
        return Rational(Integer(s));
    }
    const std::string p = s.substr(0, slash);
    const std::string q = s.substr(slash + 1);
    if (!valid_int_token(p) || !valid_int_token(q))
        throw DomainError("malformed rational '" + s + "'");
    Integer den(q);
    if (sgn(den) == 0) throw DomainError("malformed rational '" + s + "': zero denominator");
    return Rational(Integer(p), den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer isqrt_floor(const Rational& x) {
    if (x.is_negative()) throw DomainError("isqrt of negative value");
    Integer fl = x.floor();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

}  // namespace rdt
