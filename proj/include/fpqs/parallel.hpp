#pragma once
// Indexed parallel map.  Each index writes its own slot, so results never depend on
// the worker count; reductions happen afterwards in index order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fpqs {

namespace detail {
inline std::atomic<int>& thread_setting() {
    static std::atomic<int> n{0};
    return n;
}
// nested maps run serially inside a worker
inline thread_local bool in_worker = false;
}  // namespace detail

// 0 means "use hardware concurrency".
inline void set_thread_count(int n) { detail::thread_setting().store(std::max(0, n)); }

inline int thread_count() {
    int n = detail::thread_setting().load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& fn) {
    std::vector<R> out(n);
    const int workers = int(std::min<std::size_t>(std::size_t(thread_count()), n));
    if (workers <= 1 || detail::in_worker) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;
    auto work = [&] {
        const bool was = detail::in_worker;
        detail::in_worker = true;
        struct Reset {
            bool v;
            ~Reset() { detail::in_worker = v; }
        } reset{was};
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mtx);
                if (!err) err = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace fpqs
