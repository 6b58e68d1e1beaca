// Copyright 2026 The nlw authors
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

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace nlw {

/// Rounds to the given number of significant decimal digits.
///
/// All floating-point values in serialized output pass through this with
/// the default of 12 digits, so reports are stable across platforms.
inline double round_sig(double v, int digits = 12) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return std::stod(os.str());
}

inline std::string format_sig(double v, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

/// Runs fn(0), ..., fn(total-1) on up to `jobs` threads.
///
/// Callers index into pre-sized result vectors so output order never
/// depends on scheduling. The first exception thrown by any worker is
/// rethrown after all workers have joined.
template <typename Fn>
void parallel_for(std::size_t total, unsigned jobs, Fn &&fn) {
    if (jobs <= 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, total));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next.fetch_add(1); i < total;
                     i = next.fetch_add(1)) {
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) th.join();
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace nlw
