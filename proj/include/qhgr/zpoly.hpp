#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qhgr {

class Poly;

/// Integer polynomial, low degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

/// Irreducibility over Q is decided for degrees up to this bound.
inline constexpr int kRationalIrreducibilityDegreeCap = 64;

/// Clears denominators of a polynomial over Q and removes the content;
/// the leading coefficient is made positive.
ZPoly primitive_integer_poly(const Poly& f);

/// Exact quotient g / h over Z, or nullopt when h does not divide g.
std::optional<ZPoly> exact_divide(const ZPoly& g, const ZPoly& h);

/// A factor of g over Z of degree strictly between 0 and deg g, or nullopt
/// when g is irreducible over Q. Uses factor-degree screening modulo several
/// primes, Hensel lifting and subset recombination. Throws MathError above
/// the degree cap.
std::optional<ZPoly> find_rational_factor(const ZPoly& g);

}  // namespace qhgr
