#include "fibalg/golden.hpp"

#include <ostream>
#include <stdexcept>

namespace fibalg {

namespace {

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer isqrt(const Integer& n)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Sign of a + b·√5.
int sign_sqrt5(const Integer& a, const Integer& b)
{
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sa >= 0 && sb >= 0)
        return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0)
        return -1;
    // Opposite signs: compare a² with 5b².
    const Integer lhs = a * a;
    const Integer rhs = 5 * b * b;
    if (sa > 0)
        return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

}  // namespace

GoldenRational::GoldenRational(Integer p, Integer q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d))
{
    if (d_ == 0)
        throw std::domain_error("GoldenRational: zero denominator");
    canonicalize();
}

GoldenRational::GoldenRational(const Rational& r) : p_(r.get_num()), q_(0), d_(r.get_den())
{
    canonicalize();
}

void GoldenRational::canonicalize()
{
    if (d_ < 0) {
        p_ = -p_;
        q_ = -q_;
        d_ = -d_;
    }
    if (p_ == 0 && q_ == 0) {
        d_ = 1;
        return;
    }
    const Integer g = gcd(gcd(p_, q_), d_);
    if (g != 1) {
        p_ /= g;
        q_ /= g;
        d_ /= g;
    }
}

Rational GoldenRational::rational_part() const
{
    Rational r(p_, d_);
    r.canonicalize();
    return r;
}

Rational GoldenRational::tau_part() const
{
    Rational r(q_, d_);
    r.canonicalize();
    return r;
}

Rational GoldenRational::norm() const
{
    Rational r(p_ * p_ + p_ * q_ - q_ * q_, d_ * d_);
    r.canonicalize();
    return r;
}

GoldenRational GoldenRational::operator-() const
{
    GoldenRational r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

GoldenRational& GoldenRational::operator+=(const GoldenRational& rhs)
{
    if (d_ == rhs.d_) {
        p_ += rhs.p_;
        q_ += rhs.q_;
    } else {
        p_ = p_ * rhs.d_ + rhs.p_ * d_;
        q_ = q_ * rhs.d_ + rhs.q_ * d_;
        d_ *= rhs.d_;
    }
    canonicalize();
    return *this;
}

GoldenRational& GoldenRational::operator-=(const GoldenRational& rhs)
{
    return *this += -rhs;
}

GoldenRational& GoldenRational::operator*=(const GoldenRational& rhs)
{
    // τ² = τ + 1
    Integer p = p_ * rhs.p_ + q_ * rhs.q_;
    Integer q = p_ * rhs.q_ + q_ * rhs.p_ + q_ * rhs.q_;
    p_ = std::move(p);
    q_ = std::move(q);
    d_ *= rhs.d_;
    canonicalize();
    return *this;
}

GoldenRational& GoldenRational::operator/=(const GoldenRational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("GoldenRational: division by zero");
    // 1/b = d·(p + q − qτ) / (p² + pq − q²)
    const Integer n = rhs.p_ * rhs.p_ + rhs.p_ * rhs.q_ - rhs.q_ * rhs.q_;
    *this *= GoldenRational(rhs.d_ * (rhs.p_ + rhs.q_), -rhs.d_ * rhs.q_, n);
    return *this;
}

std::strong_ordering operator<=>(const GoldenRational& a, const GoldenRational& b)
{
    return compare(a, b);
}

GoldenRational star(const GoldenRational& x)
{
    return GoldenRational(x.p() + x.q(), -x.q(), x.d());
}

int sign(const GoldenRational& x)
{
    // (p + qτ)/d = ((2p + q) + q√5) / 2d with d > 0
    return sign_sqrt5(2 * x.p() + x.q(), x.q());
}

std::strong_ordering compare(const GoldenRational& a, const GoldenRational& b)
{
    const int s = sign(a - b);
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Integer floor(const GoldenRational& x)
{
    const Integer a = 2 * x.p() + x.q();
    const Integer& b = x.q();
    const Integer two_d = 2 * x.d();

    // s = ⌊b√5⌋
    const Integer b2x5 = 5 * b * b;
    Integer s = isqrt(b2x5);
    if (b < 0) {
        s = -s;
        if (s * s != b2x5)
            s -= 1;
    }

    // x lies in [(a+s)/2d, (a+s+1)/2d), so the floor is k or k + 1.
    Integer k = floor_div(a + s, two_d);
    if (compare(GoldenRational(Integer(k + 1)), x) != std::strong_ordering::greater)
        k += 1;
    return k;
}

Integer ceil(const GoldenRational& x)
{
    return -floor(-x);
}

GoldenRational abs(const GoldenRational& x)
{
    return sign(x) < 0 ? -x : x;
}

std::string to_string(const GoldenRational& x, Notation notation)
{
    const char* tau = notation == Notation::Unicode ? "τ" : "t";
    const Integer& p = x.p();
    const Integer& q = x.q();

    std::string num;
    auto tau_term = [&](const Integer& c) {
        if (c == 1)
            return std::string(tau);
        if (c == -1)
            return "-" + std::string(tau);
        return c.get_str() + tau;
    };
    const bool compound = p != 0 && q != 0;
    if (q == 0) {
        num = p.get_str();
    } else if (p == 0) {
        num = tau_term(q);
    } else {
        num = p.get_str();
        num += q > 0 ? "+" : "-";
        num += tau_term(abs(q));
    }
    if (x.d() == 1)
        return num;
    if (compound)
        return "(" + num + ")/" + x.d().get_str();
    return num + "/" + x.d().get_str();
}

std::ostream& operator<<(std::ostream& os, const GoldenRational& x)
{
    return os << to_string(x);
}

namespace {

// Maps "τ" to 't' and the Unicode minus to '-', and drops whitespace.
std::string normalize_input(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x84) {
            out += 't';
            ++i;
        } else if (c == 0xE2 && i + 2 < text.size() &&
                   static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                   static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else if (c != ' ' && c != '\t') {
            out += static_cast<char>(c);
        }
    }
    return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void bad_input(std::string_view text)
{
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
}

// Sum of signed terms "k" or "kt"; the whole string must be consumed.
GoldenRational parse_terms(const std::string& s, std::string_view original)
{
    if (s.empty())
        bad_input(original);
    Integer p = 0, q = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+' || s[i] == '-') {
            sgn = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            bad_input(original);
        }
        const std::size_t start = i;
        while (i < s.size() && is_digit(s[i]))
            ++i;
        const std::string digits = s.substr(start, i - start);
        const bool has_tau = i < s.size() && s[i] == 't';
        if (has_tau)
            ++i;
        if (digits.empty() && !has_tau)
            bad_input(original);
        const Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        if (has_tau)
            q += sgn * coeff;
        else
            p += sgn * coeff;
        first = false;
    }
    return GoldenRational(p, q);
}

}  // namespace

GoldenRational parse_golden(std::string_view text)
{
    const std::string s = normalize_input(text);
    std::string body = s;
    Integer den = 1;
    if (const auto slash = s.rfind('/'); slash != std::string::npos) {
        const std::string dpart = s.substr(slash + 1);
        if (dpart.empty())
            bad_input(text);
        for (char c : dpart)
            if (!is_digit(c))
                bad_input(text);
        den = Integer(dpart);
        if (den == 0)
            bad_input(text);
        body = s.substr(0, slash);
    }
    bool negate = false;
    if (!body.empty() && body.front() == '-' && body.size() > 1 && body[1] == '(') {
        negate = true;
        body.erase(0, 1);
    }
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            bad_input(text);
        body = body.substr(1, body.size() - 2);
    }
    GoldenRational value = parse_terms(body, text);
    if (negate)
        value = -value;
    return value / GoldenRational(den);
}

Rational parse_rational(std::string_view text)
{
    const GoldenRational g = parse_golden(text);
    const std::string s = normalize_input(text);
    if (!g.is_rational() || s.find('t') != std::string::npos || s.find('(') != std::string::npos)
        throw std::invalid_argument("expected an exact rational, got '" + std::string(text) + "'");
    return g.rational_part();
}

}  // namespace fibalg
