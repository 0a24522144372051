#include "orientlat/rational.hpp"

#include <algorithm>
#include <cctype>

#include "orientlat/errors.hpp"

namespace orientlat {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw InputError("'" + std::string(text) + "' is not an exact rational of the form p/q");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("'" + std::string(text) + "' has a zero denominator");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::int64_t to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) {
    throw InputError("integer " + z.get_str() + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace orientlat
