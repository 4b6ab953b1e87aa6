#ifndef HH_METRIC_HPP
#define HH_METRIC_HPP

#include <ostream>
#include <stdexcept>

namespace hh {

// A nonnegative integer value or INFINITE. INFINITE stands for the vacuous
// cases only: no path, no cycle, no odd cycle. It is a distinct variant,
// not a sentinel integer, so formula comparisons are exact.
class Metric {
 public:
  static Metric infinite() { return Metric(true, 0); }
  static Metric finite(long long v) {
    if (v < 0) throw std::invalid_argument("Metric: negative value");
    return Metric(false, v);
  }

  bool is_infinite() const { return inf_; }
  long long value() const {
    if (inf_) throw std::logic_error("Metric: value() on INFINITE");
    return v_;
  }

  friend bool operator==(const Metric& a, const Metric& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Metric& a, const Metric& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Metric& m) {
    if (m.inf_) return os << "INFINITE";
    return os << m.v_;
  }

 private:
  Metric(bool inf, long long v) : inf_(inf), v_(v) {}
  bool inf_;
  long long v_;
};

}  // namespace hh

#endif
