#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "circlekit/errors.hpp"

namespace circlekit {

namespace mp = boost::multiprecision;

// Expression templates are off so that `auto` locals hold values, not
// lazily-evaluated trees.
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "f64";
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

template <class T>
T from_double(double v) {
    if constexpr (is_exact_v<T>) {
        // Every finite double is a dyadic rational; the conversion is exact.
        return Rational(v);
    } else {
        return v;
    }
}

inline double abs_value(double v) { return std::fabs(v); }
inline Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const Rational& v) { return v.sign(); }

// Exact square root of a non-negative rational whose numerator and
// denominator are both perfect squares.
inline Rational sqrt_exact(const Rational& v) {
    if (v < 0) fail(ErrorKind::IrrationalValue, "square root of a negative value");
    BigInt num = mp::numerator(v);
    BigInt den = mp::denominator(v);
    BigInt rn = mp::sqrt(num);
    BigInt rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den)
        fail(ErrorKind::IrrationalValue, "square root of " + v.str() + " is not rational");
    return Rational(rn, rd);
}

// Round-off can push a mathematically non-negative square slightly below
// zero; the float root clamps it.
inline double root(double v) { return std::sqrt(std::max(v, 0.0)); }
inline Rational root(const Rational& v) { return sqrt_exact(v); }

inline std::string to_string_exact(const Rational& v) { return v.str(); }

// Integer power for either backend.
template <class T>
T ipow(T base, int e) {
    if (e < 0) return T(1) / ipow(base, -e);
    T out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

enum class Dim { Ratio, Length, Area };

// `scale` is the characteristic length of the scene. On the exact backend
// every comparison is exact and the fields are ignored.
struct ToleranceContext {
    double absolute = 1e-12;
    double relative = 1e-9;
    double scale = 1.0;

    double effective() const { return std::max(absolute, relative * scale); }

    double threshold(Dim d) const {
        const double s = scale > 0 ? scale : 1.0;
        switch (d) {
            case Dim::Ratio: return effective() / s;
            case Dim::Length: return effective();
            case Dim::Area: return effective() * s;
        }
        return effective();
    }

    ToleranceContext with_scale(double s) const {
        ToleranceContext t = *this;
        t.scale = s;
        return t;
    }
};

template <class T>
bool negligible(const T& v, const ToleranceContext& tol, Dim d) {
    if constexpr (is_exact_v<T>) {
        return v == 0;
    } else {
        return std::fabs(v) <= tol.threshold(d);
    }
}

}  // namespace circlekit
