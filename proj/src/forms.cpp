#include "quartic/forms.hpp"

#include <sstream>

namespace quartic {

std::string serialize(const Pair& x) {
    auto c = x.coords();
    std::string s;
    for (int i = 0; i < 12; ++i) {
        if (i) s += ',';
        s += c[i].str();
    }
    return s;
}

Pair parse_pair(const std::string& text) {
    std::array<Int, 12> c;
    std::stringstream ss(text);
    std::string tok;
    int n = 0;
    while (std::getline(ss, tok, ',')) {
        if (n >= 12) throw std::invalid_argument("form pair needs exactly 12 integers");
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) throw std::invalid_argument("empty coordinate");
        try {
            c[n++] = Int(tok.substr(b, e - b + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + tok + "'");
        }
    }
    if (n != 12) throw std::invalid_argument("form pair needs exactly 12 integers");
    return Pair::from_coords(c);
}

std::string serialize(const Cubic& f) {
    return f.a.str() + "," + f.b.str() + "," + f.c.str() + "," + f.d.str();
}

BinaryCubic<i64> resolvent_fast(const Coords& c) {
    // doubled Gram entries
    const i64 m00 = 2 * c[0], m01 = c[1], m02 = c[2], m11 = 2 * c[3], m12 = c[4], m22 = 2 * c[5];
    const i64 n00 = 2 * c[6], n01 = c[7], n02 = c[8], n11 = 2 * c[9], n12 = c[10], n22 = 2 * c[11];
    // adj(M)
    const i64 a00 = m11 * m22 - m12 * m12, a01 = m02 * m12 - m01 * m22, a02 = m01 * m12 - m02 * m11;
    const i64 a11 = m00 * m22 - m02 * m02, a12 = m02 * m01 - m00 * m12, a22 = m00 * m11 - m01 * m01;
    const i64 b00 = n11 * n22 - n12 * n12, b01 = n02 * n12 - n01 * n22, b02 = n01 * n12 - n02 * n11;
    const i64 b11 = n00 * n22 - n02 * n02, b12 = n02 * n01 - n00 * n12, b22 = n00 * n11 - n01 * n01;
    const i64 detM = m00 * a00 + m01 * a01 + m02 * a02;
    const i64 detN = n00 * b00 + n01 * b01 + n02 * b02;
    const i64 trAN = a00 * n00 + a11 * n11 + a22 * n22 + 2 * (a01 * n01 + a02 * n02 + a12 * n12);
    const i64 trMB = b00 * m00 + b11 * m11 + b22 * m22 + 2 * (b01 * m01 + b02 * m02 + b12 * m12);
    return {detM / 2, -trAN / 2, trMB / 2, -detN / 2};
}

i128 disc_fast(const BinaryCubic<i64>& f) {
    const i128 a = f.a, b = f.b, c = f.c, d = f.d;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

}  // namespace quartic
