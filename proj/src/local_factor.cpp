#include <sstream>

#include "quartic/padic.hpp"

namespace quartic {

Poly poly_trim(Poly a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a.push_back(Rat(0));
    return a;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}

Poly poly_scale(const Poly& a, const Rat& c) {
    Poly r = a;
    for (Rat& x : r) x *= c;
    return poly_trim(r);
}

LocalFactor LocalFactor::constant(const Rat& c) { return {Poly{c}, Poly{Rat(1)}}; }

LocalFactor LocalFactor::poly(Poly p) { return {poly_trim(std::move(p)), Poly{Rat(1)}}; }

LocalFactor LocalFactor::geometric(const Rat& c, int k, i64 p, int sigma) {
    Poly num(k + 1, Rat(0));
    num[k] = c;
    return {num, Poly{Rat(1), Rat(-sigma, p)}};
}

LocalFactor LocalFactor::operator+(const LocalFactor& o) const {
    if (den == o.den) return {poly_add(num, o.num), den};
    return {poly_add(poly_mul(num, o.den), poly_mul(o.num, den)), poly_mul(den, o.den)};
}

LocalFactor LocalFactor::operator-(const LocalFactor& o) const { return *this + o * Rat(-1); }

LocalFactor LocalFactor::operator*(const LocalFactor& o) const {
    return {poly_mul(num, o.num), poly_mul(den, o.den)};
}

LocalFactor LocalFactor::operator*(const Rat& c) const { return {poly_scale(num, c), den}; }

std::vector<Rat> LocalFactor::series(int n) const {
    if (den[0] == 0) throw ComputationError("series of a factor with a pole at t = 0");
    std::vector<Rat> c(n, Rat(0));
    for (int k = 0; k < n; ++k) {
        Rat acc = k < int(num.size()) ? num[k] : Rat(0);
        for (int j = 1; j <= k && j < int(den.size()); ++j) acc -= den[j] * c[k - j];
        c[k] = acc / den[0];
    }
    return c;
}

namespace {

template <class T, class F>
T horner(const Poly& a, const T& t, F conv) {
    T r = conv(Rat(0));
    for (size_t i = a.size(); i-- > 0;) r = r * t + conv(a[i]);
    return r;
}

}  // namespace

Rat LocalFactor::eval(const Rat& t) const {
    auto id = [](const Rat& x) { return x; };
    Rat d = horner<Rat>(den, t, id);
    if (d == 0) throw ComputationError("pole of local factor");
    return horner<Rat>(num, t, id) / d;
}

Interval LocalFactor::eval(const Interval& t) const {
    auto conv = [](const Rat& x) { return from_rat(x); };
    Interval d = horner<Interval>(den, t, conv);
    if (boost::numeric::zero_in(d)) throw ComputationError("pole of local factor");
    return horner<Interval>(num, t, conv) / d;
}

bool LocalFactor::operator==(const LocalFactor& o) const {
    return poly_mul(num, o.den) == poly_mul(o.num, den);
}

namespace {

std::string poly_str(const Poly& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 && a.size() > 1) continue;
        Rat c = a[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        first = false;
        if (i == 0 || c != 1) os << to_string(c);
        if (i > 0) os << (c != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string LocalFactor::str() const {
    if (den.size() == 1 && den[0] == 1) return poly_str(num);
    return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
}

}  // namespace quartic
