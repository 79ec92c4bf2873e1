#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <array>
#include <string>

#include "quartic/arith.hpp"

namespace quartic {

template <class T>
using Mat3 = Eigen::Matrix<T, 3, 3>;
template <class T>
using Mat2 = Eigen::Matrix<T, 2, 2>;
template <class T>
using Vec3 = Eigen::Matrix<T, 3, 1>;

// Explicit loops: Eigen's product expressions do not instantiate with Boost
// multiprecision scalars (Eigen 3.4 / Boost 1.74).
template <class T, int N>
Eigen::Matrix<T, N, N> mul(const Eigen::Matrix<T, N, N>& a, const Eigen::Matrix<T, N, N>& b) {
    Eigen::Matrix<T, N, N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            T s = 0;
            for (int k = 0; k < N; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

// s a + t b
template <class T, int N>
Eigen::Matrix<T, N, N> lincomb(const T& s, const Eigen::Matrix<T, N, N>& a, const T& t,
                               const Eigen::Matrix<T, N, N>& b) {
    Eigen::Matrix<T, N, N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = s * a(i, j) + t * b(i, j);
    return r;
}

// tr(a b)
template <class T, int N>
T trace_mul(const Eigen::Matrix<T, N, N>& a, const Eigen::Matrix<T, N, N>& b) {
    T s = 0;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) s += a(i, k) * b(k, i);
    return s;
}

// a x^3 + b x^2 y + c x y^2 + d y^3
template <class T>
struct BinaryCubic {
    T a{}, b{}, c{}, d{};

    T operator()(const T& x, const T& y) const {
        return a * x * x * x + b * x * x * y + c * x * y * y + d * y * y * y;
    }
    bool operator==(const BinaryCubic& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

template <class T>
T disc(const BinaryCubic<T>& f) {
    const T &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
           18 * a * b * c * d;
}

// f((x,y) M) = f(m00 x + m10 y, m01 x + m11 y), expanded
template <class T>
BinaryCubic<T> substitute(const BinaryCubic<T>& f, const Mat2<T>& m) {
    // linear forms L1 = p x + q y, L2 = r x + s y; expand a L1^3 + b L1^2 L2 + c L1 L2^2 + d L2^3
    const T p = m(0, 0), q = m(1, 0), r = m(0, 1), s = m(1, 1);
    BinaryCubic<T> g;
    auto add = [&](const T& k, const T& u1, const T& v1, const T& u2, const T& v2, const T& u3,
                   const T& v3) {
        // k (u1 x + v1 y)(u2 x + v2 y)(u3 x + v3 y)
        g.a += k * u1 * u2 * u3;
        g.b += k * (v1 * u2 * u3 + u1 * v2 * u3 + u1 * u2 * v3);
        g.c += k * (u1 * v2 * v3 + v1 * u2 * v3 + v1 * v2 * u3);
        g.d += k * v1 * v2 * v3;
    };
    add(f.a, p, q, p, q, p, q);
    add(f.b, p, q, p, q, r, s);
    add(f.c, p, q, r, s, r, s);
    add(f.d, r, s, r, s, r, s);
    return g;
}

// twisted action g.f(x,y) = f((x,y)g)/det g; requires det g = +-1
template <class T>
BinaryCubic<T> act(const Mat2<T>& g, const BinaryCubic<T>& f) {
    T det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (det != 1 && det != -1) throw ComputationError("GL2 element must have determinant +-1");
    BinaryCubic<T> h = substitute(f, g);
    if (det == -1) h = {-h.a, -h.b, -h.c, -h.d};
    return h;
}

template <class T>
Mat3<T> adjugate(const Mat3<T>& m) {
    Mat3<T> r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

template <class T>
T det3(const Mat3<T>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class T>
T det2(const Mat2<T>& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

// Pair of integral ternary quadratic forms. A and B hold doubled Gram matrices:
// diagonal 2*a_ii, off-diagonal a_ij, so every stored entry is an integer.
template <class T>
struct FormPair {
    Mat3<T> A = Mat3<T>::Zero();
    Mat3<T> B = Mat3<T>::Zero();

    static FormPair from_coords(const std::array<T, 12>& c) {
        FormPair x;
        auto fill = [](Mat3<T>& m, const T* v) {
            m(0, 0) = 2 * v[0];
            m(0, 1) = m(1, 0) = v[1];
            m(0, 2) = m(2, 0) = v[2];
            m(1, 1) = 2 * v[3];
            m(1, 2) = m(2, 1) = v[4];
            m(2, 2) = 2 * v[5];
        };
        fill(x.A, c.data());
        fill(x.B, c.data() + 6);
        return x;
    }

    std::array<T, 12> coords() const {
        auto take = [](const Mat3<T>& m, T* v) {
            v[0] = m(0, 0) / 2;
            v[1] = m(0, 1);
            v[2] = m(0, 2);
            v[3] = m(1, 1) / 2;
            v[4] = m(1, 2);
            v[5] = m(2, 2) / 2;
        };
        std::array<T, 12> c;
        take(A, c.data());
        take(B, c.data() + 6);
        return c;
    }

    bool operator==(const FormPair& o) const { return A == o.A && B == o.B; }

    template <class U>
    FormPair<U> cast() const {
        FormPair<U> y;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                y.A(i, j) = U(A(i, j));
                y.B(i, j) = U(B(i, j));
            }
        return y;
    }
};

template <class T>
struct GroupElement {
    Mat2<T> g2 = Mat2<T>::Identity();
    Mat3<T> g3 = Mat3<T>::Identity();
};

// Res(A,B) = 4 det(Ax - By) = det(M x - N y) / 2 with M, N the doubled Gram matrices.
template <class T>
BinaryCubic<T> resolvent(const FormPair<T>& x) {
    const Mat3<T>& M = x.A;
    const Mat3<T>& N = x.B;
    T c3 = det3(M);
    T c2 = -trace_mul(adjugate(M), N);
    T c1 = trace_mul(M, adjugate(N));
    T c0 = -det3(N);
    return {T(c3 / 2), T(c2 / 2), T(c1 / 2), T(c0 / 2)};
}

template <class T>
T disc_pair(const FormPair<T>& x) {
    return disc(resolvent(x));
}

// (g2, g3).(A,B): conjugate by g3, then mix the pair by g2. No determinant check.
template <class T>
FormPair<T> transform(const GroupElement<T>& g, const FormPair<T>& x) {
    const Mat3<T> gt = g.g3.transpose();
    Mat3<T> Ah = mul(mul(g.g3, x.A), gt);
    Mat3<T> Bh = mul(mul(g.g3, x.B), gt);
    FormPair<T> y;
    y.A = lincomb(g.g2(0, 0), Ah, g.g2(0, 1), Bh);
    y.B = lincomb(g.g2(1, 0), Ah, g.g2(1, 1), Bh);
    return y;
}

template <class T>
FormPair<T> act(const GroupElement<T>& g, const FormPair<T>& x) {
    T d = det2(g.g2) * det3(g.g3);
    if (d != 1 && d != -1) throw ComputationError("group element must satisfy det(g2)det(g3) = +-1");
    return transform(g, x);
}

template <class T>
GroupElement<T> compose(const GroupElement<T>& g, const GroupElement<T>& h) {
    return {mul(g.g2, h.g2), mul(g.g3, h.g3)};
}

template <class T>
T dual_pairing(const FormPair<T>& x, const FormPair<T>& y) {
    auto cx = x.coords();
    auto cy = y.coords();
    T s = 0;
    for (int i = 0; i < 12; ++i) s += cx[i] * cy[i];
    return s;
}

// Action on the dual lattice, whose coordinates are plain symmetric matrix entries:
// Y -> g3 Y g3^t then mixed by g2. Used with g^{-T} so that [g.x, g^{-T}.y] = [x, y].
template <class T>
FormPair<T> act_dual(const GroupElement<T>& g, const FormPair<T>& y) {
    auto c = y.coords();
    auto plain = [](const T* v) {
        Mat3<T> m;
        m << v[0], v[1], v[2], v[1], v[3], v[4], v[2], v[4], v[5];
        return m;
    };
    const Mat3<T> gt = g.g3.transpose();
    Mat3<T> Y1 = mul(mul(g.g3, plain(c.data())), gt);
    Mat3<T> Y2 = mul(mul(g.g3, plain(c.data() + 6)), gt);
    Mat3<T> Z1 = lincomb(g.g2(0, 0), Y1, g.g2(0, 1), Y2);
    Mat3<T> Z2 = lincomb(g.g2(1, 0), Y1, g.g2(1, 1), Y2);
    std::array<T, 12> out{Z1(0, 0), Z1(0, 1), Z1(0, 2), Z1(1, 1), Z1(1, 2), Z1(2, 2),
                          Z2(0, 0), Z2(0, 1), Z2(0, 2), Z2(1, 1), Z2(1, 2), Z2(2, 2)};
    return FormPair<T>::from_coords(out);
}

using Pair = FormPair<Int>;
using Pair64 = FormPair<i64>;
using Cubic = BinaryCubic<Int>;

std::string serialize(const Pair& x);
Pair parse_pair(const std::string& text);
std::string serialize(const Cubic& f);

// 12-coordinate fast path used by the enumeration code
using Coords = std::array<i64, 12>;
BinaryCubic<i64> resolvent_fast(const Coords& c);
i128 disc_fast(const BinaryCubic<i64>& f);

}  // namespace quartic
