#include "semitoric/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace semitoric {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool integer_literal(const std::string& s) {
    if (!s.empty() && s[0] == '-') return all_digits(s.substr(1));
    return all_digits(s);
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational denominator must be nonzero");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!integer_literal(text))
            throw std::invalid_argument("malformed rational \"" + text + "\"");
        return Rational(mpq_class(mpz_class(text)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!integer_literal(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    mpz_class p(num), q(den);
    if (q == 0) throw std::invalid_argument("rational \"" + text + "\" has zero denominator");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("rational \"" + text + "\" is not in lowest terms");
    mpq_class r(p);
    r /= mpq_class(q);
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::overflow_error("rational " + str() + " is not an integer");
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("rational " + str() + " out of int64 range");
    return static_cast<std::int64_t>(n.get_si());
}

std::int64_t Rational::floor_int64() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("floor of " + str() + " out of int64 range");
    return static_cast<std::int64_t>(f.get_si());
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace semitoric
