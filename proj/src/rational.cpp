#include "ltc/rational.hpp"

#include "ltc/error.hpp"

namespace ltc {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::TrivialIdempotent: return "TrivialIdempotent";
    case ErrorKind::AnnihilatorConditionsFail: return "AnnihilatorConditionsFail";
    case ErrorKind::OffDiagonalCenter: return "OffDiagonalCenter";
    case ErrorKind::NonUniqueEta: return "NonUniqueEta";
    case ErrorKind::NotGMA: return "NotGMA";
    case ErrorKind::NotLTC: return "NotLTC";
    case ErrorKind::NotLTD: return "NotLTD";
    case ErrorKind::NotGLTD: return "NotGLTD";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
    case ErrorKind::HashMismatch: return "HashMismatch";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) {
    Rational c = q;  // values built with the two-argument constructor may not be in lowest terms
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::InvalidDocument, "not a rational: \"" + s + "\""); };
    if (s.empty() || s.find_first_of(" \t\n") != std::string::npos) throw bad();
    auto slash = s.find('/');
    auto digits = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(s, true)) throw bad();
    } else {
        if (!digits(std::string_view(s).substr(0, slash), true) ||
            !digits(std::string_view(s).substr(slash + 1), false))
            throw bad();
    }
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw Error(ErrorKind::InvalidDocument, "zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

static void check_same(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    r += b;
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    r -= b;
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.size());
    if (sgn(s) == 0) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r[i] = s * v[i];
    return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += b[i];
    return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] -= b[i];
    return a;
}

void axpy(Vector& a, const Rational& s, std::span<const Rational> b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "axpy length mismatch");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += s * b[i];
}

}  // namespace ltc
