#ifndef QFDIV_FIELDCASE_HPP
#define QFDIV_FIELDCASE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfdiv/intarith.hpp"

namespace qfdiv {

/// One field Q(sqrt(q^2 - p^n)) together with the data needed to reason
/// about alpha = q + m sqrt(d), whose norm is p^n.
struct FieldCase
{
    Int n = 0;
    Int p = 0;
    Int q = 0; // 1 for the q^2 = 1 family
    Int v = 0; // q^2 - p^n < 0
    Int m = 0;
    Int d = 0; // square-free, v = m^2 d
    Int D = 0; // fundamental discriminant of Q(sqrt(d))
};

/// Thrown when q^2 >= p^n.
class SizeViolation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// p, q distinct odd primes, n odd >= 3.
FieldCase build_case(Int p, Int q, Int n);

/// The same construction with q = 1, i.e. Q(sqrt(1 - p^n)).
FieldCase build_unit_case(Int p, Int n);

enum class Verdict
{
    Pass,
    Fail
};

char const* to_string(Verdict v);

struct ConditionReport
{
    bool size_ok = false;
    bool star_fail = false;    // q = +-1 mod |d|
    bool cube_path = false;    // d = 1 mod 4 and 3 | n
    bool pcube_fail_a = false; // p^(n/3) = (2q + 1) / 3
    bool pcube_fail_b = false; // p^(n/3) = (q^2 + 2) / 3
    Verdict verdict = Verdict::Fail;
    std::string marker;        // "", "*" or "**"
};

/// q = +-1 (mod |d|); always true for |d| <= 2.
bool congruent_to_plus_minus_one(Int q, Int d);

ConditionReport check_conditions(FieldCase const& fc);

struct VerificationResult
{
    Int h = 0;
    bool divisible = false;
    std::optional<Int> order_p;
    std::optional<bool> order_matches;
};

/// Class number and, for passing cases, the order of the prime form above p.
/// A passing case with d >= -3 or an inert p is an internal inconsistency
/// and raises std::logic_error.
VerificationResult verify(FieldCase const& fc, ConditionReport const& report);

/// Class number of Q(sqrt(1 - p^n)) and whether n divides it.
std::pair<FieldCase, VerificationResult> unit_case(Int p, Int n);

struct UnitCaseRow
{
    FieldCase field;
    VerificationResult result;
};

/// Every odd prime p and odd n >= 3 with p^n <= bound, sorted by (p, n).
std::vector<UnitCaseRow> unit_case_sweep(Int bound);

struct StarFailure
{
    Int p;
    Int v;
    Int m;
    Int d;
};

struct StarFailureScan
{
    Int q = 0;
    Int n = 0;
    Int p_max = 0;
    Int cases = 0;                    // odd primes p != q with q^2 < p^n
    std::vector<StarFailure> failing; // ascending p
    Int distinct_d = 0;

    /// Every failing |d| is at most q + 1.
    bool bound_holds() const;
};

/// Star-condition scan over odd primes p <= p_max for fixed q and n.
/// Requires n odd, n >= 5, 3 does not divide n.
StarFailureScan star_failure_scan(Int q, Int n, Int p_max);

} // namespace qfdiv

#endif // QFDIV_FIELDCASE_HPP
