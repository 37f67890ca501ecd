/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/parallel.hh>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

using std::atomic;
using std::exception_ptr;
using std::mutex;
using std::size_t;
using std::thread;
using std::vector;

namespace rck
{
    void parallel_for(size_t count, int workers, const std::function<void (size_t)> & body)
    {
        if (workers <= 1 || count <= 1) {
            for (size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        atomic<size_t> next{ 0 };
        mutex error_mutex;
        exception_ptr error;

        auto run = [&] {
            while (true) {
                size_t i = next++;
                if (i >= count)
                    return;
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard<mutex> guard{ error_mutex };
                    if (! error)
                        error = std::current_exception();
                    next = count;
                }
            }
        };

        vector<thread> threads;
        for (int w = 0, w_end = int(std::min<size_t>(workers, count)) ; w < w_end ; ++w)
            threads.emplace_back(run);
        for (auto & t : threads)
            t.join();

        if (error)
            std::rethrow_exception(error);
    }

    auto default_workers() -> int
    {
        if (auto env = std::getenv("RCK_WORKERS")) {
            try {
                int n = std::stoi(env);
                if (n > 0)
                    return n;
            }
            catch (const std::exception &) {
            }
        }
        return std::max(1u, thread::hardware_concurrency());
    }
}
