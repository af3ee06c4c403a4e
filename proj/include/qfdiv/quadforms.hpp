#ifndef QFDIV_QUADFORMS_HPP
#define QFDIV_QUADFORMS_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfdiv/intarith.hpp"

namespace qfdiv {

/// Positive definite binary quadratic form a x^2 + b xy + c y^2.
/// Ideal classes of an imaginary quadratic field are handled exclusively
/// through reduced forms of its fundamental discriminant.
struct QuadForm
{
    Int a = 1;
    Int b = 1;
    Int c = 1;

    Int discriminant() const;
    bool is_primitive() const;
    bool is_reduced() const;

    /// Class of the conjugate ideal: (a, -b, c), reduced.
    QuadForm inverse() const;

    auto operator<=>(QuadForm const&) const = default;
};

std::string to_string(QuadForm const& f);

/// Thrown by prime_form when the prime stays inert.
class InertPrime : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class DiscriminantMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

bool is_fundamental_discriminant(Int D);

/// D = d if d = 1 mod 4, else 4d. Requires d < 0 square-free.
Int fundamental_discriminant(Int d);

/// The identity class (1, D mod 2, (D mod 2 - D) / 4).
QuadForm principal_form(Int D);

bool is_principal(QuadForm const& f);

/// Unique reduced representative of the class of f. Rejects imprimitive
/// forms and forms that are not positive definite.
QuadForm reduce(QuadForm f);

/// Dirichlet composition followed by reduction.
QuadForm compose(QuadForm const& f, QuadForm const& g);

/// f^k for k >= 0 by square-and-multiply.
QuadForm power(QuadForm const& f, Int k);

struct ClassGroup
{
    Int discriminant;
    std::vector<QuadForm> forms; // sorted by (a, b, c)

    Int class_number() const { return static_cast<Int>(forms.size()); }
};

/// Enumerates every reduced primitive form of discriminant D.
ClassGroup class_group(Int D);

/// Counts reduced primitive forms without materialising them.
Int class_number(Int D);

/// Reduced class of (p, b, (b^2 - D) / 4p) with the least b in [0, 2p)
/// satisfying b^2 = D mod 4p. Throws InertPrime when no such b exists.
QuadForm prime_form(Int D, Int p);

/// Least k >= 1 with f^k principal.
Int form_order(QuadForm const& f);

} // namespace qfdiv

#endif // QFDIV_QUADFORMS_HPP
