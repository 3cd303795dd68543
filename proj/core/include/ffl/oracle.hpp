#pragma once

#include <cstdint>
#include <vector>

#include "ffl/field.hpp"
#include "ffl/lfunction.hpp"

namespace ffl {

/// Point counts N_1..N_g of y^2 = D(x) and S_n = N_n - q^n - 1.
struct PowerSums {
  std::vector<BigInt> N;  // N[0] is N_1
  std::vector<BigInt> S;
};

/// #C(F_{q^n}) for y^2 = D(x), deg D odd: sum over x in F_{q^n} of
/// (1 + chi(D(x))) plus the single point at infinity.
BigInt count_points(const Poly& D, const ExtField& field);
BigInt count_points(const Poly& D, unsigned n, const PolyRing& ring);

/// Points with x in the subfield F_{q^m} of field (m | field.degree()):
/// x is kept when x^{q^m} = x and D(x) is a square in F_{q^m}, tested as
/// D(x)^{(q^m-1)/2} = 1 inside the big field.
BigInt count_points_in_subfield(const Poly& D, const ExtField& field, unsigned m);

PowerSums power_sums(const Poly& D, const PolyRing& ring);

/// P_C(u) rebuilt from point counts: a_1..a_g by Newton's identities on the
/// power sums p_n = -S_n of the inverse roots, a_{g+1}..a_{2g} from the
/// functional equation. Runs in exact rationals and throws std::logic_error
/// if any Newton step leaves the integers. D square-free monic, deg D odd >= 3.
LPolynomial zeta_numerator(const Poly& D, const PolyRing& ring);

/// zeta_numerator(D) coefficients == l_polynomial(D) coefficients.
bool oracle_compare(const Poly& D, const PolyRing& ring);
bool oracle_compare(const Poly& D, const LPolynomial& from_characters, const PolyRing& ring);

}  // namespace ffl
