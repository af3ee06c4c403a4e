#ifndef QFDIV_INTARITH_HPP
#define QFDIV_INTARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfdiv {

/// Machine integer used by the field and form code. Every operation that
/// could leave its range goes through the checked helpers below and throws
/// std::overflow_error instead of wrapping.
using Int = std::int64_t;

/// Unbounded integer for sequence values and power expansions.
using BigInt = boost::multiprecision::cpp_int;

Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);
Int checked_pow(Int base, unsigned exponent);

/// Floor division and nonnegative remainder for a positive modulus.
Int floor_div(Int x, Int m);
Int mod_floor(Int x, Int m);

Int gcd(Int x, Int y);

/// Returns (g, u, v) with u*x + v*y = g = gcd(x, y) >= 0.
struct ExtGcd
{
    Int g;
    Int u;
    Int v;
};
ExtGcd ext_gcd(Int x, Int y);

/// Deterministic for every 64-bit input (Miller-Rabin with a fixed base set).
bool is_prime(Int n);

struct PrimePower
{
    Int prime;
    int exponent;

    bool operator==(PrimePower const&) const = default;
};

struct Factorization
{
    Int value;
    int sign;
    std::vector<PrimePower> factors; // ascending by prime

    /// Multiplies the factors back together (checked).
    Int recompose() const;
};

/// Trial division up to 10^6, then Brent-Pollard rho on the cofactor.
/// Throws std::invalid_argument for 0.
Factorization factorize(Int n);

struct SquarefreeDecomposition
{
    Int m; // > 0
    Int d; // square-free, same sign as the input

    bool operator==(SquarefreeDecomposition const&) const = default;
};

/// v = m^2 * d with d square-free. Throws std::invalid_argument for 0.
SquarefreeDecomposition squarefree_part(Int v);

bool is_squarefree(Int v);

struct NthRoot
{
    Int root;
    bool exact;

    bool operator==(NthRoot const&) const = default;
};

/// floor(v^(1/k)) and whether it is exact. Requires v >= 0, k >= 1.
NthRoot integer_nth_root(Int v, unsigned k);

bool is_perfect_square(Int v);
bool is_perfect_square(BigInt const& v);

/// If v is a positive power p^r with r >= 1, returns r; otherwise 0.
int exact_log(BigInt v, Int p);

/// Odd primes in [3, bound], ascending.
std::vector<Int> odd_primes_up_to(Int bound);

} // namespace qfdiv

#endif // QFDIV_INTARITH_HPP
