#include "qfdiv/fieldcase.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "qfdiv/quadforms.hpp"

namespace qfdiv {

namespace {

void require_odd_exponent(Int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("n must be an odd integer >= 3, got " + std::to_string(n));
}

void require_odd_prime(Int x, char const* name)
{
    if (x < 3 || !is_prime(x))
        throw std::invalid_argument(std::string(name) + " must be an odd prime, got " + std::to_string(x));
}

FieldCase finish_case(Int p, Int q, Int n)
{
    Int pn = checked_pow(p, static_cast<unsigned>(n));
    Int q2 = checked_mul(q, q);
    if (q2 >= pn)
        throw SizeViolation("size violation: q^2 >= p^n (" + std::to_string(q2) + " >= " + std::to_string(pn) + ")");
    FieldCase fc;
    fc.n = n;
    fc.p = p;
    fc.q = q;
    fc.v = q2 - pn;
    auto [m, d] = squarefree_part(fc.v);
    fc.m = m;
    fc.d = d;
    fc.D = fundamental_discriminant(d);
    return fc;
}

} // namespace

FieldCase build_case(Int p, Int q, Int n)
{
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    if (p == q)
        throw std::invalid_argument("p and q must be distinct");
    require_odd_exponent(n);
    return finish_case(p, q, n);
}

FieldCase build_unit_case(Int p, Int n)
{
    require_odd_prime(p, "p");
    require_odd_exponent(n);
    return finish_case(p, 1, n);
}

char const* to_string(Verdict v)
{
    return v == Verdict::Pass ? "PASS" : "FAIL";
}

bool congruent_to_plus_minus_one(Int q, Int d)
{
    Int mod = d < 0 ? -d : d;
    if (mod <= 2)
        return true;
    Int r = mod_floor(q, mod);
    return r == 1 || r == mod - 1;
}

ConditionReport check_conditions(FieldCase const& fc)
{
    ConditionReport r;
    r.size_ok = fc.v < 0;
    r.star_fail = congruent_to_plus_minus_one(fc.q, fc.d);
    r.cube_path = mod_floor(fc.d, 4) == 1 && fc.n % 3 == 0;
    if (r.cube_path) {
        Int pk = checked_pow(fc.p, static_cast<unsigned>(fc.n / 3));
        Int lhs = checked_mul(3, pk);
        r.pcube_fail_a = lhs == checked_add(checked_mul(2, fc.q), 1);
        r.pcube_fail_b = lhs == checked_add(checked_mul(fc.q, fc.q), 2);
    }
    bool pcube_fail = r.pcube_fail_a || r.pcube_fail_b;
    r.verdict = (r.size_ok && !r.star_fail && !(r.cube_path && pcube_fail)) ? Verdict::Pass : Verdict::Fail;
    if (r.star_fail)
        r.marker = "*";
    else if (pcube_fail)
        r.marker = "**";
    return r;
}

VerificationResult verify(FieldCase const& fc, ConditionReport const& report)
{
    VerificationResult out;
    out.h = class_number(fc.D);
    out.divisible = out.h % fc.n == 0;
    if (report.verdict != Verdict::Pass)
        return out;

    // Units of the maximal order are only +-1 once d < -3.
    if (fc.d >= -3)
        throw std::logic_error("verify: passing case with d >= -3 (p=" + std::to_string(fc.p) +
                               ", q=" + std::to_string(fc.q) + ")");
    try {
        out.order_p = form_order(prime_form(fc.D, fc.p));
    } catch (InertPrime const& e) {
        throw std::logic_error(std::string("verify: p divides the norm of alpha but ") + e.what());
    }
    out.order_matches = *out.order_p == fc.n;
    return out;
}

std::pair<FieldCase, VerificationResult> unit_case(Int p, Int n)
{
    FieldCase fc = build_unit_case(p, n);
    VerificationResult r;
    r.h = class_number(fc.D);
    r.divisible = r.h % n == 0;
    return {fc, r};
}

std::vector<UnitCaseRow> unit_case_sweep(Int bound)
{
    std::vector<std::pair<Int, Int>> pairs;
    Int p_limit = integer_nth_root(bound, 3).root;
    for (Int p : odd_primes_up_to(p_limit)) {
        Int pn = checked_mul(p, checked_mul(p, p));
        for (Int n = 3; pn <= bound; n += 2) {
            pairs.emplace_back(p, n);
            if (pn > bound / (p * p))
                break;
            pn *= p * p;
        }
    }

    // Each case is independent; results are collected in (p, n) order.
    std::vector<std::future<UnitCaseRow>> jobs;
    jobs.reserve(pairs.size());
    for (auto [p, n] : pairs) {
        jobs.push_back(std::async(std::launch::async, [p = p, n = n] {
            auto [fc, r] = unit_case(p, n);
            return UnitCaseRow{fc, r};
        }));
    }
    std::vector<UnitCaseRow> out;
    out.reserve(jobs.size());
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

bool StarFailureScan::bound_holds() const
{
    return std::all_of(failing.begin(), failing.end(), [&](StarFailure const& f) { return -f.d <= q + 1; });
}

StarFailureScan star_failure_scan(Int q, Int n, Int p_max)
{
    require_odd_prime(q, "q");
    require_odd_exponent(n);
    if (n < 5 || n % 3 == 0)
        throw std::invalid_argument("star_failure_scan: n must be odd, at least 5, and not divisible by 3");

    StarFailureScan out;
    out.q = q;
    out.n = n;
    out.p_max = p_max;
    std::set<Int> ds;
    for (Int p : odd_primes_up_to(p_max)) {
        if (p == q)
            continue;
        FieldCase fc;
        try {
            fc = build_case(p, q, n);
        } catch (SizeViolation const&) {
            continue;
        }
        ++out.cases;
        ds.insert(fc.d);
        if (congruent_to_plus_minus_one(fc.q, fc.d))
            out.failing.push_back({fc.p, fc.v, fc.m, fc.d});
    }
    out.distinct_d = static_cast<Int>(ds.size());
    return out;
}

} // namespace qfdiv
