#pragma once

#include "ffl/irreducible.hpp"
#include "ffl/poly.hpp"

namespace ffl {

/// A residue/Jacobi symbol value, always -1, 0 or +1.
using SymbolValue = int;

/// (f / P) = f^{(|P|-1)/2} mod P for monic irreducible P. Throws
/// std::domain_error if P is not monic of positive degree, or if the power
/// is not +-1 mod P (P reducible).
SymbolValue residue_symbol_prime(const Poly& f, const Poly& P, const PolyRing& ring);

/// (alpha / Q) = legendre(alpha)^{deg Q} for a scalar alpha.
SymbolValue scalar_symbol(Coeff alpha, unsigned deg_Q, const FieldSpec& field);

/// Jacobi symbol (f / Q) for monic Q by reciprocity-driven Euclidean
/// reduction; never factors. Each remainder r is split as c * r~ with r~
/// monic, contributing (c / Q) by the scalar rule. Throws std::domain_error
/// for non-monic or zero Q.
SymbolValue jacobi(const Poly& f, const Poly& Q, const PolyRing& ring);

/// Same symbol via factorization of Q and prime symbols. Reference path.
SymbolValue jacobi_by_factorization(const Poly& f, const Poly& Q, const IrreducibleTable& table);

/// Raw-buffer kernel behind jacobi(): f and Q are coefficient spans
/// (constant first, trimmed), Q monic.
SymbolValue jacobi_kernel(std::span<const Coeff> f, std::span<const Coeff> Q, const FieldSpec& field);

/// Whether (A/B) = (B/A) (-1)^{((q-1)/2) deg A deg B} holds for this pair.
/// A, B monic, nonzero and coprime (std::domain_error otherwise). The two
/// symbols are evaluated through the factorization path so the check does
/// not lean on the reciprocity law it is testing.
bool reciprocity_check(const Poly& A, const Poly& B, const IrreducibleTable& table);

/// chi_D(f) = (D / f), f monic.
inline SymbolValue chi(const Poly& D, const Poly& f, const PolyRing& ring) { return jacobi(D, f, ring); }

}  // namespace ffl
