#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "vlisl/reed_solomon.hpp"
#include "vlisl/rng.hpp"

// Gray-mapped 16-QAM over AWGN, used to exercise the Reed-Solomon codes: one
// GF(16) symbol per QAM symbol (I from the high two bits, Q from the low two,
// Gray-labelled per axis), unit average symbol energy. Monte Carlo runs are
// partitioned into fixed blocks, one counter-RNG stream per block, so results
// are byte-identical for a given seed regardless of thread count.

namespace vlisl::qam16 {

// Per-axis amplitude scale: levels {+-1, +-3} / sqrt(10) average to E_s = 1.
inline constexpr double axis_scale = 0.31622776601683794; // 1/sqrt(10)

// 2-bit Gray label -> level multiple: 00 01 11 10 <-> -3 -1 +1 +3.
inline constexpr std::array<double, 4> gray_level{-3.0, -1.0, +3.0, +1.0};

struct Point {
    double i, q;
};

inline Point modulate(std::uint8_t symbol) {
    return {gray_level[(symbol >> 2) & 3] * axis_scale,
            gray_level[symbol & 3] * axis_scale};
}

namespace detail {
inline std::uint8_t demap_axis(double x) {
    // Decision thresholds at 0 and +-2/sqrt(10); labels are the Gray codes
    // of the quantized levels.
    const double t = 2.0 * axis_scale;
    if (x < 0.0) return x < -t ? 0b00 : 0b01;
    return x >= t ? 0b10 : 0b11;
}
} // namespace detail

inline std::uint8_t demodulate(Point p) {
    return std::uint8_t((detail::demap_axis(p.i) << 2) |
                        detail::demap_axis(p.q));
}

// Analytic Gray-coded 16-QAM bit error approximation for sanity checks:
//   BER ~= 3/4 Q( sqrt(0.8 Eb/N0) )
inline double analytic_ber(double ebno_db) {
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double arg = std::sqrt(0.8 * ebno) / std::sqrt(2.0);
    return 0.75 * 0.5 * std::erfc(arg);
}

struct BerEstimate {
    double ber;
    double ci_low;  // Wilson 95 % interval
    double ci_high;
    std::uint64_t bit_errors;
    std::uint64_t bits;
};

inline BerEstimate wilson_interval(std::uint64_t errors, std::uint64_t bits) {
    if (bits == 0) throw std::domain_error("wilson_interval: zero bits");
    const double z = 1.959963984540054; // 95 %
    const double n = double(bits);
    const double p = double(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // The interval endpoints are exact at the extremes; do not let the
    // sqrt round-off leak a spurious 1e-19 bound past them.
    const double lo = errors == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = errors == bits ? 1.0 : std::min(1.0, center + half);
    return {p, lo, hi, errors, bits};
}

namespace detail {

struct Tally {
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
};

// Run per-block work across threads; block -> stream mapping is fixed, so
// scheduling cannot affect the aggregate integer counts.
template <typename BlockFn>
Tally run_blocks(std::uint64_t n_blocks, int threads, BlockFn&& fn) {
    if (threads < 1) throw std::domain_error("run_blocks: threads < 1");
    if (threads == 1 || n_blocks < 2) {
        Tally t;
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            const Tally r = fn(b);
            t.errors += r.errors;
            t.bits += r.bits;
        }
        return t;
    }
    std::vector<Tally> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            Tally t;
            for (std::uint64_t b = std::uint64_t(w); b < n_blocks;
                 b += std::uint64_t(threads)) {
                const Tally r = fn(b);
                t.errors += r.errors;
                t.bits += r.bits;
            }
            partial[std::size_t(w)] = t;
        });
    }
    for (auto& th : pool) th.join();
    Tally t;
    for (const auto& p : partial) {
        t.errors += p.errors;
        t.bits += p.bits;
    }
    return t;
}

// Streams are addressed (series, ebno point, block) so no two Monte Carlo
// draws in a curve reuse random numbers.
inline std::uint64_t stream_id(std::uint64_t series, std::uint64_t point,
                               std::uint64_t block) {
    return (series << 56) | (point << 40) | block;
}

inline constexpr std::uint64_t symbols_per_block = 4096;

} // namespace detail

// Uncoded round trip: random 16-QAM symbols through AWGN at the given
// information-bit Eb/N0. Pre: n_bits >= 4.
inline BerEstimate roundtrip_ber(double ebno_db, std::uint64_t n_bits,
                                 std::uint64_t seed, int threads = 1,
                                 std::uint64_t point_index = 0) {
    if (n_bits < 4) throw std::domain_error("roundtrip_ber: n_bits < 4");
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double n0 = 1.0 / (4.0 * ebno); // E_s = 1, 4 bits/symbol
    const double sigma = std::sqrt(0.5 * n0);
    const std::uint64_t n_symbols = (n_bits + 3) / 4;
    const std::uint64_t n_blocks =
        (n_symbols + detail::symbols_per_block - 1) / detail::symbols_per_block;

    const auto tally = detail::run_blocks(
        n_blocks, threads, [&](std::uint64_t block) {
            rng::CounterRng gen(seed, detail::stream_id(0, point_index, block));
            const std::uint64_t first = block * detail::symbols_per_block;
            const std::uint64_t count =
                std::min(detail::symbols_per_block, n_symbols - first);
            detail::Tally t;
            for (std::uint64_t s = 0; s < count; ++s) {
                const std::uint8_t tx = gen.next_nibble();
                Point p = modulate(tx);
                p.i += sigma * gen.next_gaussian();
                p.q += sigma * gen.next_gaussian();
                t.errors += std::uint64_t(std::popcount(
                    unsigned(tx ^ demodulate(p))));
            }
            t.bits = count * 4;
            return t;
        });
    return wilson_interval(tally.errors, tally.bits);
}

// Reed-Solomon coded round trip: each codeword symbol rides one QAM symbol;
// the constellation keeps E_s = 1 and the noise is set from the
// information-bit Eb/N0 (channel-symbol energy scaled by the code rate k/n).
// Decode failures fall back to the received systematic symbols.
// Pre: n_info_bits >= 4k.
template <unsigned K>
inline BerEstimate coded_ber(double ebno_db, std::uint64_t n_info_bits,
                             std::uint64_t seed, int threads = 1,
                             std::uint64_t point_index = 0) {
    using Code = rs::RsCode<K>;
    constexpr std::uint64_t info_bits_per_block = 4ull * Code::k;
    if (n_info_bits < info_bits_per_block)
        throw std::domain_error("coded_ber: fewer bits than one codeword");
    const double rate = double(Code::k) / double(Code::n);
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double n0 = 1.0 / (4.0 * rate * ebno);
    const double sigma = std::sqrt(0.5 * n0);
    const std::uint64_t n_blocks =
        (n_info_bits + info_bits_per_block - 1) / info_bits_per_block;

    const auto tally = detail::run_blocks(
        n_blocks, threads, [&](std::uint64_t block) {
            rng::CounterRng gen(seed, detail::stream_id(K, point_index, block));
            typename Code::Message msg{};
            for (auto& m : msg) m = gen.next_nibble();
            const typename Code::Word cw = Code::encode(msg);
            typename Code::Word rx{};
            for (unsigned i = 0; i < Code::n; ++i) {
                Point p = modulate(cw[i]);
                p.i += sigma * gen.next_gaussian();
                p.q += sigma * gen.next_gaussian();
                rx[i] = demodulate(p);
            }
            detail::Tally t;
            t.bits = info_bits_per_block;
            const auto decoded = Code::decode(rx);
            for (unsigned i = 0; i < Code::k; ++i) {
                const std::uint8_t got =
                    decoded ? decoded->message[i] : rx[i];
                t.errors +=
                    std::uint64_t(std::popcount(unsigned(got ^ msg[i])));
            }
            return t;
        });
    return wilson_interval(tally.errors, tally.bits);
}

// One point of the comparison curve for the CLI/table writers.
struct CurvePoint {
    double ebno_db;
    const char* scheme; // "uncoded-16qam", "rs(15,11)", "rs(15,13)"
    BerEstimate est;
};

inline std::vector<CurvePoint> comparison_curve(
    const std::vector<double>& ebno_db_points, std::uint64_t n_info_bits,
    std::uint64_t seed, int threads = 1) {
    std::vector<CurvePoint> out;
    out.reserve(ebno_db_points.size() * 3);
    for (std::size_t p = 0; p < ebno_db_points.size(); ++p) {
        const double e = ebno_db_points[p];
        out.push_back({e, "uncoded-16qam",
                       roundtrip_ber(e, n_info_bits, seed, threads, p)});
        out.push_back({e, "rs(15,11)",
                       coded_ber<11>(e, n_info_bits, seed, threads, p)});
        out.push_back({e, "rs(15,13)",
                       coded_ber<13>(e, n_info_bits, seed, threads, p)});
    }
    return out;
}

} // namespace vlisl::qam16
