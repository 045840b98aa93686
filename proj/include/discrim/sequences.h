#ifndef DISCRIM_SEQUENCES_H_
#define DISCRIM_SEQUENCES_H_

#include <string>
#include <string_view>
#include <vector>

#include "discrim/numtheory.h"

namespace discrim {

enum class SequenceKind { kSalajan, kLinearRecurrence, kPolynomial };

// v_n = c1 * v_{n-1} + c2 * v_{n-2}, with v_1 and v_2 given.
struct LinearRecurrence {
  i64 c1 = 0;
  i64 c2 = 0;
  i64 v1 = 0;
  i64 v2 = 0;

  bool operator==(const LinearRecurrence&) const = default;
};

// Immutable description of an integer sequence indexed from j = 1.
//
// Canonical text forms:
//   salajan
//   linrec:c1,c2,v1,v2
//   poly:a0,a1,...        (v_j = a0 + a1 j + a2 j^2 + ...)
class SequenceSpec {
 public:
  static SequenceSpec salajan();
  static SequenceSpec linear_recurrence(i64 c1, i64 c2, i64 v1, i64 v2);
  static SequenceSpec polynomial(std::vector<i64> coefficients);

  // Strict parser; throws SpecParseError with a diagnostic.
  static SequenceSpec parse(std::string_view text);

  SequenceKind kind() const { return kind_; }
  bool is_recurrence() const { return kind_ != SequenceKind::kPolynomial; }
  bool is_salajan() const { return kind_ == SequenceKind::kSalajan; }

  // Salajan is reported as linrec:2,3,2,1.
  const LinearRecurrence& recurrence() const;
  const std::vector<i64>& coefficients() const;

  std::string to_string() const;

  bool operator==(const SequenceSpec&) const = default;

 private:
  SequenceSpec() = default;

  SequenceKind kind_ = SequenceKind::kSalajan;
  LinearRecurrence recurrence_{2, 3, 2, 1};
  std::vector<i64> coefficients_;
};

// Emits v_1 mod m, v_2 mod m, ... with constant work per step.
class ResidueStream {
 public:
  ResidueStream(const SequenceSpec& spec, u64 modulus);

  u64 next();
  // Index of the term the next call to next() returns.
  u64 cursor() const { return cursor_; }
  u64 modulus() const { return modulus_; }

 private:
  SequenceSpec spec_;
  u64 modulus_;
  u64 cursor_ = 1;
  // Recurrence state: current = v_cursor, following = v_{cursor+1}.
  u64 current_ = 0;
  u64 following_ = 0;
  u64 c1_ = 0;
  u64 c2_ = 0;
  std::vector<u64> reduced_coefficients_;
};

// u_j mod m in O(log j): computes 3^j - 5(-1)^j modulo 4m and divides by 4
// exactly. Supports m <= 2^62.
u64 salajan_term_mod(u64 j, u64 m);

std::vector<u64> stream_residues(const SequenceSpec& spec, u64 m, u64 count);

}  // namespace discrim

#endif  // DISCRIM_SEQUENCES_H_
