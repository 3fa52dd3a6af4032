#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace qeuler {

struct EnumerationOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned jobs = 0;
    /// Restrict to permutations whose last entry is 1.
    bool ending_in_one = false;
};

inline unsigned resolve_jobs(unsigned jobs)
{
    if (jobs != 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Visits every permutation of {1..n} (or every one ending in 1), split into
/// work units by a fixed two-entry prefix. Each unit gets a private State from
/// `make_state`; the returned vector is in unit order, so merging it is
/// independent of scheduling.
template <class State, class MakeState, class Visit>
std::vector<State> enumerate_permutations(int n, EnumerationOptions options, MakeState make_state, Visit visit)
{
    // Entries that are free to move.
    std::vector<int> pool(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(pool.begin(), pool.end(), 1);
    if (options.ending_in_one && n >= 1)
        pool.erase(pool.begin());

    const int free_count = static_cast<int>(pool.size());
    const int prefix_len = std::min(2, free_count);

    std::vector<std::vector<int>> prefixes;
    if (prefix_len == 0) {
        prefixes.emplace_back();
    } else if (prefix_len == 1) {
        for (int a : pool)
            prefixes.push_back({a});
    } else {
        for (int a : pool)
            for (int b : pool)
                if (a != b)
                    prefixes.push_back({a, b});
    }

    std::vector<State> results;
    results.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i)
        results.push_back(make_state());

    auto run_unit = [&](std::size_t unit) {
        const auto& prefix = prefixes[unit];
        std::vector<int> word(prefix);
        for (int v : pool)
            if (std::find(prefix.begin(), prefix.end(), v) == prefix.end())
                word.push_back(v);
        if (options.ending_in_one && n >= 1)
            word.push_back(1);
        const auto tail_begin = word.begin() + prefix_len;
        const auto tail_end = word.end() - ((options.ending_in_one && n >= 1) ? 1 : 0);
        State& state = results[unit];
        do {
            visit(state, std::span<const int>(word));
        } while (std::next_permutation(tail_begin, tail_end));
    };

    const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), static_cast<unsigned>(prefixes.size()));
    if (jobs <= 1) {
        for (std::size_t unit = 0; unit < prefixes.size(); ++unit)
            run_unit(unit);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&] {
                try {
                    for (std::size_t unit = next++; unit < prefixes.size(); unit = next++)
                        run_unit(unit);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
    return results;
}

} // namespace qeuler
