#include "fracspline/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace fracspline {

unsigned thread_limit()
{
    if (const char* env = std::getenv("FRACSPLINE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(thread_limit(), count / 256 + 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(count, (w + 1) * chunk);
                for (std::size_t i = w * chunk; i < end; ++i)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace fracspline
