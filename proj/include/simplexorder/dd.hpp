#pragma once

// Compensated double-double arithmetic (~31 significant digits) for the
// alternating sums whose terms dwarf their totals.

namespace simplexorder::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    return {s, (a - (s - t)) + (b - t)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    // Dekker split; no FMA requirement
    constexpr double split = 134217729.0; // 2^27 + 1
    const double p = a * b;
    const double ca = split * a;
    const double ah = ca - (ca - a), al = a - ah;
    const double cb = split * b;
    const double bh = cb - (cb - b), bl = b - bh;
    const double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
    const double q1 = a.hi / b;
    const DD p = two_prod(q1, b);
    const double r = ((a.hi - p.hi) - p.lo) + a.lo;
    return quick_two_sum(q1, r / b);
}

inline DD dd_pow(DD base, unsigned exp) {
    DD r{1.0, 0.0};
    while (exp) {
        if (exp & 1)
            r = dd_mul(r, base);
        base = dd_mul(base, base);
        exp >>= 1;
    }
    return r;
}

} // namespace simplexorder::detail
