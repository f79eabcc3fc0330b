#pragma once

// Search configuration and a deterministic chunked parallel map.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hopfcoh/errors.hpp"

namespace hopfcoh {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// kDefaultBudget, or the value of HOPFCOH_BUDGET when it parses as a
/// positive integer.
inline std::uint64_t defaultBudget() {
    if (const char* env = std::getenv("HOPFCOH_BUDGET")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudget;
}

struct SearchConfig {
    std::uint64_t budget = defaultBudget(); // cap on candidates per search
    unsigned threads = 1;
};

/// Throws EnumerationOverBudget when `candidates` exceeds the budget.
inline void requireBudget(std::uint64_t candidates, const SearchConfig& cfg, const std::string& what) {
    if (candidates > cfg.budget)
        throw EnumerationOverBudget(what + " needs " + std::to_string(candidates) +
                                    " candidates, budget is " + std::to_string(cfg.budget));
}

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturatingPow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

/// Splits [0, count) into contiguous chunks, runs chunk(lo, hi, out) on
/// each, and concatenates the outputs in chunk order, so the result does
/// not depend on the thread count.
template <class T, class Chunk>
std::vector<T> parallelChunks(std::uint64_t count, unsigned threads, Chunk&& chunk) {
    unsigned workers = std::max(1u, threads);
    if (count < 2 * static_cast<std::uint64_t>(workers)) workers = 1;
    if (workers == 1) {
        std::vector<T> out;
        chunk(std::uint64_t{0}, count, out);
        return out;
    }
    std::vector<std::vector<T>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t step = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::uint64_t lo = std::min(count, w * step), hi = std::min(count, lo + step);
                chunk(lo, hi, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p) out.push_back(std::move(x));
    return out;
}

/// Evaluates fn(i) for i in [0, count) and keeps the engaged results in
/// increasing i, whatever the thread count.
template <class T, class Fn>
std::vector<T> parallelCollect(std::uint64_t count, unsigned threads, Fn&& fn) {
    return parallelChunks<T>(count, threads, [&](std::uint64_t lo, std::uint64_t hi, std::vector<T>& out) {
        for (std::uint64_t i = lo; i < hi; ++i)
            if (std::optional<T> r = fn(i)) out.push_back(std::move(*r));
    });
}

} // namespace hopfcoh
