#pragma once

#include <stdexcept>
#include <string>

namespace rankvar {

/// Which structural invariant an input violated.
enum class violation {
  wrong_length,
  duplicate_entry,
  entry_out_of_range,
  missing_ascent,
  duplicate_left_endpoint,
  duplicate_right_endpoint,
  reversed_interval,
  endpoint_out_of_range,
  empty_rank_set,
  bad_shape,
};

inline const char* to_string(violation v) {
  switch (v) {
    case violation::wrong_length: return "wrong_length";
    case violation::duplicate_entry: return "duplicate_entry";
    case violation::entry_out_of_range: return "entry_out_of_range";
    case violation::missing_ascent: return "missing_ascent";
    case violation::duplicate_left_endpoint: return "duplicate_left_endpoint";
    case violation::duplicate_right_endpoint: return "duplicate_right_endpoint";
    case violation::reversed_interval: return "reversed_interval";
    case violation::endpoint_out_of_range: return "endpoint_out_of_range";
    case violation::empty_rank_set: return "empty_rank_set";
    case violation::bad_shape: return "bad_shape";
  }
  return "unknown";
}

/// Raised when constructing a value whose invariants do not hold.
class validation_error : public std::invalid_argument {
 public:
  validation_error(violation kind, const std::string& what)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  violation kind() const noexcept { return kind_; }

 private:
  violation kind_;
};

/// Raised when an operation's precondition fails on otherwise valid values
/// (shape mismatch, empty Richardson variety, index out of range).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an input exceeds a hard enumeration guard.
class capability_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by polynomial fitting when the samples cannot pin the degree.
class insufficient_samples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankvar
