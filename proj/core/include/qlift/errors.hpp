#ifndef QLIFT_ERRORS_HPP
#define QLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlift {

// Incompatible inputs: mismatched quadratic fields, mismatched discriminant
// groups, unknown names, malformed text.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A coefficient was requested at or beyond the truncation of a series.
// Never silently answered with zero.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation of a rational function at a zero of its denominator.
class pole_error : public std::runtime_error {
 public:
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// A lift could not be written as Delta3 * A(j3)/B(j3): some residual
// coefficient did not vanish.  Carries the first failing exponent.
class identification_error : public std::runtime_error {
 public:
  identification_error(const std::string& what, long failing_exponent_num,
                       long failing_exponent_den)
      : std::runtime_error(what),
        exponent_num(failing_exponent_num),
        exponent_den(failing_exponent_den) {}
  long exponent_num;
  long exponent_den;
};

// No integer polynomial within tolerance and height bound fits a float value.
class recognition_error : public std::runtime_error {
 public:
  explicit recognition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlift

#endif  // QLIFT_ERRORS_HPP
