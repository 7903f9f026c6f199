#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dimerk {

/// A runtime self-check disagreed with itself: an interpolant missed an
/// out-of-sample point, a fitted series missed its residual point, or a cache
/// held two different values for one key.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingCoefficientError : public std::invalid_argument {
 public:
  explicit MissingCoefficientError(std::vector<std::string> hashes)
      : std::invalid_argument(format(hashes)), hashes_(std::move(hashes)) {}

  const std::vector<std::string>& hashes() const noexcept { return hashes_; }

 private:
  static std::string format(const std::vector<std::string>& hashes) {
    std::string msg = "coefficient table does not cover topologies:";
    for (const auto& h : hashes) msg += " " + h;
    return msg;
  }

  std::vector<std::string> hashes_;
};

}  // namespace dimerk
