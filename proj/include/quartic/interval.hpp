#pragma once

#include <boost/numeric/interval.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "quartic/arith.hpp"

namespace quartic {

namespace ivl = boost::numeric::interval_lib;

// outward-rounded arithmetic for + - * / sqrt; transcendental functions below
// are evaluated in round-to-nearest and widened by a few ulps
using Interval = boost::numeric::interval<
    double, ivl::policies<ivl::save_state<ivl::rounded_arith_std<double>>, ivl::checking_base<double>>>;

inline double ulp_down(double x, int n = 1) {
    for (int i = 0; i < n; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}
inline double ulp_up(double x, int n = 1) {
    for (int i = 0; i < n; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

inline Interval widen(double x, int n = 2) { return Interval(ulp_down(x, n), ulp_up(x, n)); }

inline Interval hull_with(const Interval& a, double r) {
    return Interval(ulp_down(a.lower() - r), ulp_up(a.upper() + r));
}

inline Interval from_rat(const Rat& r) {
    return widen(r.convert_to<double>(), 2);
}

inline Interval iexp(const Interval& x) {
    return Interval(ulp_down(std::exp(x.lower()), 2), ulp_up(std::exp(x.upper()), 2));
}

inline Interval ilog(const Interval& x) {
    return Interval(ulp_down(std::log(x.lower()), 2), ulp_up(std::log(x.upper()), 2));
}

// b^e for b > 0
inline Interval rpow_i(const Interval& b, const Interval& e) {
    Interval l = ilog(b) * e;
    return iexp(l);
}

inline Interval rpow_i(double b, double e) { return rpow_i(Interval(b), Interval(e)); }

inline double mid(const Interval& x) { return 0.5 * (x.lower() + x.upper()); }
inline double rad(const Interval& x) { return 0.5 * (x.upper() - x.lower()); }

inline bool contains(const Interval& outer, const Interval& inner) {
    return outer.lower() <= inner.lower() && inner.upper() <= outer.upper();
}

}  // namespace quartic
