#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "vlisl/gf16.hpp"

// Systematic Reed-Solomon codes over GF(16) with block length n = 15 and
// generator g(X) = prod_{i=1..n-k} (X + alpha^i). Codewords are arrays of
// field symbols with message symbols first (message[0] is the highest-degree
// codeword coefficient) followed by the parity remainder.
//
// Decoding is classic bounded-distance: syndromes, Berlekamp-Massey,
// Chien search, Forney. Up to t = (n-k)/2 symbol errors are corrected;
// uncorrectable patterns yield an empty optional (decode failure is a value).

namespace vlisl::rs {

template <unsigned K>
class RsCode {
    static_assert(K >= 1 && K < 15, "RS(15,k) requires 1 <= k < 15");

  public:
    static constexpr unsigned n = 15;
    static constexpr unsigned k = K;
    static constexpr unsigned parity = n - k;
    static constexpr unsigned t = parity / 2;
    static constexpr unsigned bits_per_symbol = 4;

    using Word = std::array<gf16::Elem, n>;
    using Message = std::array<gf16::Elem, k>;

    // Generator coefficients, degree-descending: generator()[0] X^(n-k) + ...
    static constexpr std::array<gf16::Elem, parity + 1> generator() {
        std::array<gf16::Elem, parity + 1> g{};
        g[0] = 1;
        for (unsigned i = 1; i <= parity; ++i) {
            // multiply the degree-(i-1) product by (X + alpha^i), in place
            const gf16::Elem root = gf16::alpha_pow(int(i));
            for (unsigned j = i; j > 0; --j)
                g[j] = gf16::add(g[j], gf16::mul(root, g[j - 1]));
        }
        return g;
    }

    static constexpr Word encode(const Message& msg) {
        constexpr auto g = generator();
        Word cw{};
        for (unsigned i = 0; i < k; ++i) cw[i] = msg[i];
        // long division of msg(X) X^(n-k) by g(X); remainder becomes parity
        std::array<gf16::Elem, parity> rem{};
        for (unsigned i = 0; i < k; ++i) {
            const gf16::Elem coef = gf16::add(msg[i], rem[0]);
            for (unsigned j = 0; j + 1 < parity; ++j)
                rem[j] = gf16::add(rem[j + 1], gf16::mul(coef, g[j + 1]));
            rem[parity - 1] = gf16::mul(coef, g[parity]);
        }
        for (unsigned j = 0; j < parity; ++j) cw[k + j] = rem[j];
        return cw;
    }

    struct Decoded {
        Message message;
        unsigned corrected; // symbol errors repaired (0..t)
    };

    static std::optional<Decoded> decode(const Word& received) {
        // Syndromes S_j = r(alpha^j), j = 1..parity, with r[0] the
        // highest-degree coefficient.
        std::array<gf16::Elem, parity> synd{};
        bool clean = true;
        for (unsigned j = 0; j < parity; ++j) {
            const gf16::Elem x = gf16::alpha_pow(int(j + 1));
            gf16::Elem acc = 0;
            for (unsigned i = 0; i < n; ++i)
                acc = gf16::add(gf16::mul(acc, x), received[i]);
            synd[j] = acc;
            clean = clean && acc == 0;
        }
        if (clean) return Decoded{message_part(received), 0};

        // Berlekamp-Massey: error locator Lambda(x), ascending coefficients.
        std::array<gf16::Elem, parity + 1> lambda{}, prev{}, scratch{};
        lambda[0] = 1;
        prev[0] = 1;
        unsigned errors = 0, shift = 1;
        gf16::Elem prev_disc = 1;
        for (unsigned step = 0; step < parity; ++step) {
            gf16::Elem disc = synd[step];
            for (unsigned i = 1; i <= errors; ++i)
                disc = gf16::add(disc,
                                 gf16::mul(lambda[i], synd[step - i]));
            if (disc == 0) {
                ++shift;
            } else if (2 * errors <= step) {
                scratch = lambda;
                const gf16::Elem factor = gf16::div(disc, prev_disc);
                for (unsigned i = 0; i + shift <= parity; ++i)
                    lambda[i + shift] = gf16::add(
                        lambda[i + shift], gf16::mul(factor, prev[i]));
                errors = step + 1 - errors;
                prev = scratch;
                prev_disc = disc;
                shift = 1;
            } else {
                const gf16::Elem factor = gf16::div(disc, prev_disc);
                for (unsigned i = 0; i + shift <= parity; ++i)
                    lambda[i + shift] = gf16::add(
                        lambda[i + shift], gf16::mul(factor, prev[i]));
                ++shift;
            }
        }
        if (errors > t) return std::nullopt;

        // Chien search over all positions: index i holds coefficient of
        // X^(n-1-i); its locator is alpha^(n-1-i).
        std::array<unsigned, t> pos{};
        std::array<gf16::Elem, t> loc{};
        unsigned found = 0;
        for (unsigned b = 0; b < n; ++b) {
            const gf16::Elem x = gf16::alpha_pow(-int(b)); // candidate root
            gf16::Elem acc = 0;
            for (unsigned i = errors + 1; i-- > 0;)
                acc = gf16::add(gf16::mul(acc, x), lambda[i]);
            if (acc == 0) {
                if (found == errors) return std::nullopt; // excess roots
                pos[found] = n - 1 - b;
                loc[found] = gf16::alpha_pow(int(b));
                ++found;
            }
        }
        if (found != errors) return std::nullopt;

        // Forney: Omega(x) = S(x) Lambda(x) mod x^parity,
        // e = Omega(Xi^-1) / Lambda'(Xi^-1).
        std::array<gf16::Elem, parity> omega{};
        for (unsigned i = 0; i < parity; ++i) {
            gf16::Elem acc = 0;
            for (unsigned j = 0; j <= i && j <= errors; ++j)
                acc = gf16::add(acc, gf16::mul(lambda[j], synd[i - j]));
            omega[i] = acc;
        }
        Word corrected = received;
        for (unsigned e = 0; e < found; ++e) {
            const gf16::Elem xinv = gf16::inv(loc[e]);
            gf16::Elem num = 0;
            for (unsigned i = parity; i-- > 0;)
                num = gf16::add(gf16::mul(num, xinv), omega[i]);
            gf16::Elem den = 0; // formal derivative keeps odd-power terms
            for (unsigned i = 1; i <= errors; i += 2)
                den = gf16::add(den,
                                gf16::mul(lambda[i], gf16::pow(xinv, i - 1)));
            if (den == 0) return std::nullopt;
            corrected[pos[e]] =
                gf16::add(corrected[pos[e]], gf16::div(num, den));
        }

        // Re-check syndromes of the corrected word; a mismatch means the
        // pattern was uncorrectable.
        for (unsigned j = 0; j < parity; ++j) {
            const gf16::Elem x = gf16::alpha_pow(int(j + 1));
            gf16::Elem acc = 0;
            for (unsigned i = 0; i < n; ++i)
                acc = gf16::add(gf16::mul(acc, x), corrected[i]);
            if (acc != 0) return std::nullopt;
        }
        return Decoded{message_part(corrected), found};
    }

  private:
    static constexpr Message message_part(const Word& w) {
        Message m{};
        for (unsigned i = 0; i < k; ++i) m[i] = w[i];
        return m;
    }
};

using Rs15_11 = RsCode<11>; // t = 2
using Rs15_13 = RsCode<13>; // t = 1

} // namespace vlisl::rs
