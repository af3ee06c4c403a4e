#ifndef QFDIV_DIOKIT_HPP
#define QFDIV_DIOKIT_HPP

#include <optional>
#include <vector>

#include "qfdiv/fieldcase.hpp"
#include "qfdiv/intarith.hpp"

namespace qfdiv {

// ---------------------------------------------------------------------------
// Fibonacci and Lucas sequences

BigInt fibonacci(int k);
BigInt lucas(int k);

struct Triple
{
    BigInt D1;
    BigInt D2;
    BigInt p;

    bool operator==(Triple const&) const = default;
};

/// (F_{k-2e}, L_{k+e}, F_k) for 2 <= k <= k_max, e in {+1, -1}, k - 2e >= 0.
/// Ordered by k, then e = +1 before e = -1.
std::vector<Triple> f_triples(int k_max);

// ---------------------------------------------------------------------------
// D1 x^2 + D2 = lambda^2 p^y
//
// lambda ranges over {1, sqrt 2, 2} and is always carried as lambda^2.

bool is_valid_lambda_sq(Int lambda_sq);

bool in_E(Int lambda_sq, Int D1, Int D2, Int p);
bool in_F(Int D1, Int D2, Int p);
bool in_G(Int lambda_sq, Int D1, Int D2, Int p);

enum class SearchStatus
{
    Found,
    ProvenAbsent,
    NotFoundWithinBounds
};

char const* to_string(SearchStatus s);

struct HMembership
{
    SearchStatus status = SearchStatus::ProvenAbsent;
    Int r = 0; // witness, valid when Found
    Int s = 0;

    bool member() const { return status == SearchStatus::Found; }
};

inline constexpr Int kDefaultHRMax = 40;
inline constexpr Int kDefaultHSMax = 1'000'000;

/// Membership in the family where D1 s^2 + D2 = lambda^2 p^r and
/// 3 D1 s^2 - D2 = +-lambda^2. The second equation pins s^2, so the search
/// is exact; a witness outside (r_max, s_max) is reported as
/// NotFoundWithinBounds rather than as absence.
HMembership in_H(Int lambda_sq, Int D1, Int D2, Int p, Int r_max = kDefaultHRMax, Int s_max = kDefaultHSMax);

struct BSInstance
{
    Int lambda_sq = 1;
    Int D1 = 1;
    Int D2 = 1;
    Int p = 3;
    Int y_max = 40;
};

/// Throws std::invalid_argument when the instance is malformed.
void validate(BSInstance const& inst);

struct BSSolution
{
    BigInt x;
    Int y;

    bool operator==(BSSolution const&) const = default;
};

struct BSSolutionSet
{
    std::vector<BSSolution> solutions; // ascending y
    bool in_E = false;
    bool in_F = false;
    bool in_G = false;
    HMembership in_H;

    bool any_exception() const { return in_E || in_F || in_G || in_H.member(); }
};

BSSolutionSet count_bs_solutions(BSInstance const& inst);

enum class Consistency
{
    Ok,
    Violation
};

char const* to_string(Consistency c);

/// Ok when there is at most one solution or the instance is exceptional.
Consistency bs_consistency(BSSolutionSet const& set);

struct BSSweepEntry
{
    BSInstance instance;
    BSSolutionSet result;
};

struct BSSweep
{
    Int instances = 0;
    std::vector<BSSweepEntry> multi; // instances with >= 2 solutions

    Int unexplained() const;
};

/// lambda^2 in {1, 2, 4}, coprime 1 <= D1 <= d1_max, 1 <= D2 <= d2_max,
/// primes p <= p_max (odd unless lambda^2 = 4).
BSSweep bs_sweep(Int d1_max, Int d2_max, Int p_max, Int y_max);

// ---------------------------------------------------------------------------
// Square scans

struct LucasSquare
{
    int k;
    BigInt value;

    bool operator==(LucasSquare const&) const = default;
};

/// Indices k <= k_max with L_k a perfect square.
std::vector<LucasSquare> cohn_scan(int k_max);

struct RepunitSquare
{
    Int x;
    Int n;
    BigInt y;

    bool operator==(RepunitSquare const&) const = default;
};

/// (x^n - 1)/(x - 1) = y^2 for 2 <= x <= x_max and odd 3 <= n <= n_max.
std::vector<RepunitSquare> ljunggren_scan(Int x_max, Int n_max);

// ---------------------------------------------------------------------------
// Elements of quadratic orders

/// x + y sqrt(d) with exact coordinates.
struct QuadraticElement
{
    BigInt x;
    BigInt y;

    bool operator==(QuadraticElement const&) const = default;
};

QuadraticElement multiply(QuadraticElement const& u, QuadraticElement const& w, Int d);
QuadraticElement power(QuadraticElement const& u, Int d, Int k);

/// ((a + b sqrt d) / 2)^ell if it lies in Z[sqrt d], otherwise nullopt.
/// Requires d = 5 mod 8, d not a square, a and b odd.
std::optional<QuadraticElement> half_power_in_order(Int d, Int a, Int b, Int ell);

bool prop1_member(Int d, Int a, Int b, Int ell);

struct HalfPowerTally
{
    Int ell = 0;
    Int total = 0;
    Int members = 0;
};

/// Runs prop1_member over d = 5 mod 8 in [d_min, d_max] (non-squares),
/// odd a, b with |a|, |b| <= ab_max, for each ell.
std::vector<HalfPowerTally> prop1_sweep(Int d_min, Int d_max, Int ab_max, std::vector<Int> const& ells);

/// A candidate ell-th root of alpha: a + b sqrt d, or (a + b sqrt d)/2
/// when halved.
struct RootCandidate
{
    Int a = 0;
    Int b = 0;
    bool halved = false;

    bool operator==(RootCandidate const&) const = default;
};

/// beta^ell with the halving undone; nullopt if a halved power is not integral.
std::optional<QuadraticElement> root_power(RootCandidate const& beta, Int d, Int ell);

/// Exhaustive search for beta in the ring of integers with beta^ell = alpha
/// where alpha = q + m sqrt(d). N(beta) = p^(n/ell) bounds |b|, so the search
/// is complete. Throws std::invalid_argument unless ell is a prime dividing n.
std::optional<RootCandidate> prop2_find_root(FieldCase const& fc, Int ell);

/// Prime divisors of n, ascending.
std::vector<Int> prime_divisors(Int n);

} // namespace qfdiv

#endif // QFDIV_DIOKIT_HPP
