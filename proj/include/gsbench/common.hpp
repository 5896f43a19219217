// Copyright 2026 The gsbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gsbench {

using Vertex = std::uint32_t;

namespace detail {

template <typename... Ts>
std::string cat(Ts&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

}  // namespace detail

// Precondition violations and malformed inputs are reported by throwing
// std::invalid_argument with the offending item in the message.
template <typename... Ts>
[[noreturn]] void fail(Ts&&... parts) {
    throw std::invalid_argument(detail::cat(std::forward<Ts>(parts)...));
}

template <typename... Ts>
void require(bool condition, Ts&&... parts) {
    if (!condition) {
        fail(std::forward<Ts>(parts)...);
    }
}

// ---------------------------------------------------------------------------
// Bit-packed outcome strings.
//
// Convention used throughout: character k of an outcome string is the bit of
// qubit k, so qubit 0 is the leftmost character. Packed words store qubit k
// at word k/64, bit k%64.
// ---------------------------------------------------------------------------

inline std::size_t words_for_bits(std::size_t bits) {
    return (bits + 63) / 64;
}

inline bool get_bit(const std::uint64_t* words, std::size_t k) {
    return (words[k >> 6] >> (k & 63)) & 1u;
}

inline void set_bit(std::uint64_t* words, std::size_t k, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (k & 63);
    if (value) {
        words[k >> 6] |= mask;
    } else {
        words[k >> 6] &= ~mask;
    }
}

inline void flip_bit(std::uint64_t* words, std::size_t k) {
    words[k >> 6] ^= std::uint64_t{1} << (k & 63);
}

inline bool parity_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words; ++w) {
        acc ^= a[w] & b[w];
    }
    return std::popcount(acc) & 1u;
}

inline std::string bits_to_string(const std::uint64_t* words, std::size_t bits) {
    std::string s(bits, '0');
    for (std::size_t k = 0; k < bits; ++k) {
        if (get_bit(words, k)) {
            s[k] = '1';
        }
    }
    return s;
}

inline void string_to_bits(const std::string& s, std::uint64_t* words) {
    for (std::size_t w = 0; w < words_for_bits(s.size()); ++w) {
        words[w] = 0;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '1') {
            set_bit(words, k, true);
        } else if (s[k] != '0') {
            fail("outcome string contains non-binary character '", s[k], "' at position ", k);
        }
    }
}

// Dense array index of an outcome string: qubit 0 is the most significant
// bit, so the array enumerates strings in lexicographic order.
inline std::size_t string_to_index(const std::string& s) {
    std::size_t idx = 0;
    for (char c : s) {
        idx = (idx << 1) | static_cast<std::size_t>(c == '1');
    }
    return idx;
}

inline std::string index_to_string(std::size_t idx, std::size_t bits) {
    std::string s(bits, '0');
    for (std::size_t k = 0; k < bits; ++k) {
        if ((idx >> (bits - 1 - k)) & 1u) {
            s[k] = '1';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Counter-based random streams.
//
// Every independent stream is derived by hashing a seed with a list of
// labels (e.g. setting index and shot index), so results are reproducible
// regardless of how work is scheduled across threads.
// ---------------------------------------------------------------------------

class StreamRng {
  public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    explicit StreamRng(std::uint64_t seed) : state_(mix(seed + kGolden)) {}

    static StreamRng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
        std::uint64_t h = seed;
        for (std::uint64_t label : labels) {
            h = mix(h + kGolden + mix(label + kGolden));
        }
        return StreamRng(h);
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) {
            return false;
        }
        if (p >= 1.0) {
            return true;
        }
        return next_double() < p;
    }

    // Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        // Rejection from the top keeps the draw unbiased.
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    void fill_bits(std::uint64_t* words, std::size_t bits) {
        std::size_t full = bits / 64;
        for (std::size_t w = 0; w < full; ++w) {
            words[w] = next_u64();
        }
        if (bits % 64) {
            words[full] = next_u64() & ((std::uint64_t{1} << (bits % 64)) - 1);
        }
    }

  private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Deterministic fork/join helper.
// ---------------------------------------------------------------------------

inline unsigned default_thread_count() {
    if (const char* env = std::getenv("GSBENCH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [0, n) into contiguous chunks, one per worker. The callback receives
// (begin, end, worker index); workers own disjoint output slots so results do
// not depend on scheduling.
inline void parallel_chunks(std::size_t n,
                            unsigned threads,
                            const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
    if (threads == 0) {
        threads = default_thread_count();
    }
    if (n == 0) {
        return;
    }
    if (threads <= 1 || n == 1) {
        fn(0, n, 0);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t begin = static_cast<std::size_t>(t) * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
    }
    for (auto& th : pool) {
        th.join();
    }
}

}  // namespace gsbench
