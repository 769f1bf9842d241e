#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace sigbranch {

using Int = mpz_class;
using Rat = mpq_class;

// Small integer vectors: weights in fundamental coordinates, exponent
// vectors, simple-root coordinates.
using IVec = std::vector<long>;
using QVec = std::vector<Rat>;

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec& operator+=(IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline IVec& operator-=(IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline IVec operator*(long c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool all_nonneg(const IVec& a) {
    for (long x : a)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const IVec& a) {
    for (long x : a)
        if (x != 0) return false;
    return true;
}

inline long sum(const IVec& a) {
    long s = 0;
    for (long x : a) s += x;
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool qvec_is_zero(const QVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

// Exact conversion Rat -> long, throws if not integral or out of range.
long rat_to_long(const Rat& r);

std::string ivec_to_string(const IVec& v, char sep = ',');
IVec parse_ivec(const std::string& s);

}  // namespace sigbranch
