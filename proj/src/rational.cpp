#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace fairdiv {

Rational::Rational(long num, long den) {
    if (den == 0) raise(ErrorKind::InvalidArgument, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) raise(ErrorKind::InvalidArgument, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::mod1() const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(v_ - fl));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat(std::string_view text) {
    auto r = Rational::parse(text);
    if (!r) raise(ErrorKind::Parse, "bad rational literal: " + std::string(text));
    return *r;
}

} // namespace fairdiv
