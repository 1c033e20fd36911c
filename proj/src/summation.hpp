#pragma once

namespace qkr::detail {

// Kahan compensated accumulator; deterministic for a fixed visit order.
class KahanSum {
public:
    void add(double v) {
        double y = v - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace qkr::detail
