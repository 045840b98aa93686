#ifndef DISCRIM_ERRORS_H_
#define DISCRIM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace discrim {

// A step or search bound was reached before an answer was found.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The sequence repeats a term among the first n, so no discriminator exists.
class NotAdmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input too large for the configured cost guard.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace discrim

#endif  // DISCRIM_ERRORS_H_
