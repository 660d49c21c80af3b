// SPDX-License-Identifier: Apache-2.0
//
// simris - channel simulator for RIS-assisted mmWave links
// Copyright (C) 2026 simris contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SIMRIS_PARALLEL_HPP
#define SIMRIS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace simris
{
    inline unsigned resolve_threads(unsigned threads, std::size_t work_items)
    {
        unsigned t = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
        return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work_items, 1)));
    }

    // Calls fn(i) for i in [0, count). Indices are claimed dynamically, so fn
    // must only write to per-index state. The first exception is rethrown.
    template <class Fn>
    void parallel_for(std::size_t count, unsigned threads, Fn &&fn)
    {
        const unsigned workers = resolve_threads(threads, count);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&]
        {
            for (;;)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        };

        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(body);
        body();
        pool.clear();
        if (error)
            std::rethrow_exception(error);
    }

    // Neumaier compensated sum; the result depends only on the input order.
    class CompensatedSum
    {
    public:
        void add(double v)
        {
            const double t = sum_ + v;
            if (std::abs(sum_) >= std::abs(v))
                comp_ += (sum_ - t) + v;
            else
                comp_ += (v - t) + sum_;
            sum_ = t;
        }
        double value() const { return sum_ + comp_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
    };
}

#endif
