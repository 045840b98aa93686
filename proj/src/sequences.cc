#include "discrim/sequences.h"

#include <charconv>
#include <stdexcept>

#include "discrim/errors.h"

namespace discrim {
namespace {

std::vector<i64> parse_integer_list(std::string_view body, std::string_view text) {
  std::vector<i64> values;
  if (body.empty()) {
    throw SpecParseError("sequence spec '" + std::string(text) + "': empty parameter list");
  }
  size_t pos = 0;
  while (true) {
    const size_t comma = body.find(',', pos);
    const std::string_view field =
        body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (field.empty()) {
      throw SpecParseError("sequence spec '" + std::string(text) + "': empty field");
    }
    i64 value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw SpecParseError("sequence spec '" + std::string(text) + "': '" +
                           std::string(field) + "' does not fit in 64 bits");
    }
    if (ec != std::errc() || end != field.data() + field.size()) {
      throw SpecParseError("sequence spec '" + std::string(text) + "': '" +
                           std::string(field) + "' is not an integer");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

SequenceSpec SequenceSpec::salajan() { return SequenceSpec(); }

SequenceSpec SequenceSpec::linear_recurrence(i64 c1, i64 c2, i64 v1, i64 v2) {
  SequenceSpec spec;
  spec.kind_ = SequenceKind::kLinearRecurrence;
  spec.recurrence_ = {c1, c2, v1, v2};
  return spec;
}

SequenceSpec SequenceSpec::polynomial(std::vector<i64> coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("polynomial sequence needs at least one coefficient");
  }
  SequenceSpec spec;
  spec.kind_ = SequenceKind::kPolynomial;
  spec.recurrence_ = {};
  spec.coefficients_ = std::move(coefficients);
  return spec;
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
  if (text == "salajan") return salajan();
  if (text.starts_with("linrec:")) {
    const auto values = parse_integer_list(text.substr(7), text);
    if (values.size() != 4) {
      throw SpecParseError("sequence spec '" + std::string(text) +
                           "': linrec needs exactly 4 integers c1,c2,v1,v2");
    }
    return linear_recurrence(values[0], values[1], values[2], values[3]);
  }
  if (text.starts_with("poly:")) {
    return polynomial(parse_integer_list(text.substr(5), text));
  }
  throw SpecParseError("sequence spec '" + std::string(text) +
                       "': expected 'salajan', 'linrec:c1,c2,v1,v2' or 'poly:a0,a1,...'");
}

const LinearRecurrence& SequenceSpec::recurrence() const {
  if (!is_recurrence()) throw std::logic_error("polynomial sequence has no recurrence");
  return recurrence_;
}

const std::vector<i64>& SequenceSpec::coefficients() const {
  if (kind_ != SequenceKind::kPolynomial) {
    throw std::logic_error("recurrence sequence has no polynomial coefficients");
  }
  return coefficients_;
}

std::string SequenceSpec::to_string() const {
  switch (kind_) {
    case SequenceKind::kSalajan:
      return "salajan";
    case SequenceKind::kLinearRecurrence:
      return "linrec:" + std::to_string(recurrence_.c1) + "," + std::to_string(recurrence_.c2) +
             "," + std::to_string(recurrence_.v1) + "," + std::to_string(recurrence_.v2);
    case SequenceKind::kPolynomial: {
      std::string out = "poly:";
      for (size_t i = 0; i < coefficients_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(coefficients_[i]);
      }
      return out;
    }
  }
  return {};
}

ResidueStream::ResidueStream(const SequenceSpec& spec, u64 modulus)
    : spec_(spec), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("ResidueStream: modulus must be >= 1");
  if (spec_.is_recurrence()) {
    const LinearRecurrence& rec = spec_.recurrence();
    c1_ = reduce(rec.c1, modulus);
    c2_ = reduce(rec.c2, modulus);
    current_ = reduce(rec.v1, modulus);
    following_ = reduce(rec.v2, modulus);
  } else {
    for (i64 a : spec_.coefficients()) reduced_coefficients_.push_back(reduce(a, modulus));
  }
}

u64 ResidueStream::next() {
  u64 value = 0;
  if (spec_.is_recurrence()) {
    value = current_;
    const u64 after = static_cast<u64>(
        (static_cast<u128>(c1_) * following_ + static_cast<u128>(c2_) * current_) % modulus_);
    current_ = following_;
    following_ = after;
  } else {
    const u64 j = cursor_ % modulus_;
    for (auto it = reduced_coefficients_.rbegin(); it != reduced_coefficients_.rend(); ++it) {
      value = (mulmod(value, j, modulus_) + *it) % modulus_;
    }
  }
  ++cursor_;
  return value;
}

u64 salajan_term_mod(u64 j, u64 m) {
  if (j == 0) throw std::invalid_argument("salajan_term_mod: index starts at 1");
  if (m == 0) throw std::invalid_argument("salajan_term_mod: modulus must be >= 1");
  if (m > (u64{1} << 62)) throw std::invalid_argument("salajan_term_mod: modulus above 2^62");
  if (m == 1) return 0;
  const u64 big = 4 * m;
  const u64 power = modpow(3, j, big);
  // 3^j - 5(-1)^j is divisible by 4; working mod 4m keeps that exact.
  const u64 t = (j % 2 == 0) ? reduce(static_cast<i128>(power) - 5, big)
                             : reduce(static_cast<i128>(power) + 5, big);
  return (t / 4) % m;
}

std::vector<u64> stream_residues(const SequenceSpec& spec, u64 m, u64 count) {
  ResidueStream stream(spec, m);
  std::vector<u64> out;
  out.reserve(count);
  for (u64 i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace discrim
