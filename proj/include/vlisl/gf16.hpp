#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

// GF(2^4) arithmetic over the primitive polynomial p(X) = X^4 + X + 1 with
// generator alpha = 2. Elements are 0..15; addition is XOR; multiplication
// goes through compile-time log/antilog tables.

namespace vlisl::gf16 {

using Elem = std::uint8_t;

inline constexpr unsigned field_size = 16;
inline constexpr unsigned group_order = 15; // multiplicative order of alpha
inline constexpr unsigned primitive_poly = 0x13; // X^4 + X + 1

namespace detail {
constexpr std::array<Elem, group_order> make_exp() {
    std::array<Elem, group_order> t{};
    unsigned x = 1;
    for (unsigned i = 0; i < group_order; ++i) {
        t[i] = Elem(x);
        x <<= 1;
        if (x & 0x10) x ^= primitive_poly;
    }
    return t;
}
constexpr std::array<Elem, field_size> make_log() {
    std::array<Elem, field_size> t{};
    const auto e = make_exp();
    for (unsigned i = 0; i < group_order; ++i) t[e[i]] = Elem(i);
    return t;
}
} // namespace detail

// exp_table[i] = alpha^i for i in [0, 15); log_table[alpha^i] = i.
inline constexpr std::array<Elem, group_order> exp_table = detail::make_exp();
inline constexpr std::array<Elem, field_size> log_table = detail::make_log();

constexpr Elem alpha_pow(int i) {
    int r = i % int(group_order);
    if (r < 0) r += group_order;
    return exp_table[unsigned(r)];
}

constexpr Elem add(Elem a, Elem b) { return Elem(a ^ b); } // also subtraction

constexpr Elem mul(Elem a, Elem b) {
    if (a == 0 || b == 0) return 0;
    return exp_table[(unsigned(log_table[a]) + unsigned(log_table[b])) %
                     group_order];
}

constexpr Elem inv(Elem a) {
    if (a == 0) throw std::domain_error("gf16::inv: zero has no inverse");
    return exp_table[(group_order - unsigned(log_table[a])) % group_order];
}

constexpr Elem div(Elem a, Elem b) {
    if (b == 0) throw std::domain_error("gf16::div: division by zero");
    if (a == 0) return 0;
    return exp_table[(unsigned(log_table[a]) + group_order -
                      unsigned(log_table[b])) %
                     group_order];
}

constexpr Elem pow(Elem a, unsigned e) {
    if (a == 0) return e == 0 ? Elem(1) : Elem(0);
    return exp_table[(unsigned(log_table[a]) * e) % group_order];
}

} // namespace vlisl::gf16
