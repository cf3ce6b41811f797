#include "caf/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace caf {

namespace {

int resolve_worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CAF_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1 && cap < 1024) n = std::min(n, static_cast<int>(cap));
    }
    return n;
}

// Persistent pool; the calling thread participates. One parallel_for at a
// time; a nested call degrades to a serial loop. Each run owns its task
// state via shared_ptr so a late-waking worker can never touch a newer run.
class Pool {
  public:
    static Pool& instance() {
        static Pool pool;
        return pool;
    }

    void run(int64_t nblocks, const std::function<void(int64_t)>& block_fn) {
        if (active_.test_and_set()) {
            for (int64_t b = 0; b < nblocks; ++b) block_fn(b);
            return;
        }
        auto task = std::make_shared<Task>();
        task->fn = block_fn;
        task->total = nblocks;
        task->remaining.store(nblocks, std::memory_order_relaxed);
        {
            std::lock_guard<std::mutex> lk(mu_);
            current_ = task;
            ++generation_;
        }
        cv_.notify_all();
        process(*task);
        {
            std::unique_lock<std::mutex> lk(task->done_mu);
            task->done_cv.wait(lk, [&] { return task->remaining.load(std::memory_order_acquire) == 0; });
        }
        {
            std::lock_guard<std::mutex> lk(mu_);
            if (current_ == task) current_.reset();
        }
        active_.clear();
    }

  private:
    struct Task {
        std::function<void(int64_t)> fn;
        std::atomic<int64_t> next{0};
        std::atomic<int64_t> remaining{0};
        int64_t total = 0;
        std::mutex done_mu;
        std::condition_variable done_cv;
    };

    Pool() {
        active_.clear();
        int n = resolve_worker_count();
        for (int i = 0; i + 1 < n; ++i) workers_.emplace_back([this] { worker_loop(); });
    }

    ~Pool() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : workers_) t.join();
    }

    void worker_loop() {
        uint64_t seen = 0;
        for (;;) {
            std::shared_ptr<Task> task;
            {
                std::unique_lock<std::mutex> lk(mu_);
                cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                task = current_;
            }
            if (task) process(*task);
        }
    }

    static void process(Task& t) {
        for (;;) {
            int64_t b = t.next.fetch_add(1, std::memory_order_relaxed);
            if (b >= t.total) break;
            t.fn(b);
            if (t.remaining.fetch_sub(1, std::memory_order_acq_rel) == 1) {
                std::lock_guard<std::mutex> lk(t.done_mu);
                t.done_cv.notify_all();
            }
        }
    }

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::shared_ptr<Task> current_;
    uint64_t generation_ = 0;
    bool stop_ = false;
    std::atomic_flag active_;
};

}  // namespace

int worker_count() {
    static int n = resolve_worker_count();
    return n;
}

void parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn) {
    if (n <= 0) return;
    if (grain < 1) grain = 1;
    const int64_t nblocks = (n + grain - 1) / grain;
    auto block_fn = [&](int64_t b) {
        int64_t begin = b * grain;
        int64_t end = std::min(n, begin + grain);
        fn(begin, end);
    };
    if (worker_count() <= 1 || nblocks <= 1) {
        for (int64_t b = 0; b < nblocks; ++b) block_fn(b);
        return;
    }
    Pool::instance().run(nblocks, block_fn);
}

}  // namespace caf
