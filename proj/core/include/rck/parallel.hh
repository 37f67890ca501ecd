/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_PARALLEL_HH
#define RCK_GUARD_CORE_PARALLEL_HH 1

#include <cstddef>
#include <functional>

namespace rck
{
    /**
     * Calls body(i) for every i in [0, count), using up to `workers`
     * threads that pull indices in increasing order. With one worker this
     * runs inline. The first exception thrown by any body is rethrown after
     * all threads finish.
     */
    void parallel_for(std::size_t count, int workers, const std::function<void (std::size_t)> & body);

    /// Default worker count: RCK_WORKERS if set and positive, else hardware concurrency.
    auto default_workers() -> int;
}

#endif
