#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <stdexcept>

namespace ncc {

/// Raised from inside parsing/analysis when the wall-clock budget is spent
/// or the run was cancelled from outside.
class Cancelled : public std::runtime_error {
public:
    Cancelled() : std::runtime_error("analysis cancelled: time budget exhausted") {}
};

/// Cooperative wall-clock budget. Hot loops call poll(); it only reads the
/// clock every few hundred calls.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;  // unlimited
    explicit Deadline(clock::duration budget)
        : at_(clock::now() + budget), limited_(true), flag_(std::make_shared<std::atomic<bool>>(false)) {}

    static Deadline unlimited() { return {}; }

    [[nodiscard]] bool limited() const { return limited_; }
    [[nodiscard]] clock::time_point at() const { return at_; }

    [[nodiscard]] bool expired() const {
        if (!limited_) return false;
        if (flag_->load(std::memory_order_relaxed)) return true;
        return clock::now() >= at_;
    }

    /// Requests cancellation from another thread.
    void cancel() const {
        if (flag_) flag_->store(true, std::memory_order_relaxed);
    }

    void poll() const {
        if (!limited_) return;
        if (++ticks_ % 256 == 0 && expired()) throw Cancelled();
    }

    void check() const {
        if (expired()) throw Cancelled();
    }

private:
    clock::time_point at_{};
    bool limited_ = false;
    std::shared_ptr<std::atomic<bool>> flag_;
    mutable unsigned ticks_ = 0;
};

}  // namespace ncc
