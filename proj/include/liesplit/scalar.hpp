#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liesplit {

/// Exact rational scalar. Always canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Raised for malformed user input (documents, labels, coefficients).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or an integer. Anything else (decimals, exponents, empty
/// strings, zero denominators) is rejected.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational string");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false;
  bool digits_before = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      (slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !slash) {
      slash = true;
    } else {
      throw InputError("not an exact rational: \"" + s + "\"");
    }
  }
  if (!digits_before || (slash && !digits_after))
    throw InputError("not an exact rational: \"" + s + "\"");
  if (s[0] == '+') s.erase(0, 1);
  Scalar q;
  if (q.set_str(s, 10) != 0) throw InputError("not an exact rational: \"" + s + "\"");
  if (q.get_den() == 0) throw InputError("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

/// (-1)^k as a scalar.
inline Scalar sign_power(int k) { return (k & 1) ? Scalar(-1) : Scalar(1); }

}  // namespace liesplit
