#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vac {

/// Exact rational scalar. Every computation in the library is over Q;
/// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
	if (d == 0)
		throw std::invalid_argument("rat: zero denominator");
	Rat r(n, d);
	r.canonicalize();
	return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
	if (s.empty())
		throw std::invalid_argument("parse_rat: empty string");
	Rat r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
	r.canonicalize();
	return r;
}

inline long to_long(const Rat& r) {
	if (!is_integer(r) || !r.get_num().fits_slong_p())
		throw std::domain_error("to_long: not a small integer");
	return r.get_num().get_si();
}

} // namespace vac
