#include "qfdiv/diokit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qfdiv {

namespace {

// lambda^2 p^y for the integer encodings of lambda^2
BigInt pow_big(Int base, Int e)
{
    BigInt r = 1;
    for (Int i = 0; i < e; ++i)
        r *= base;
    return r;
}

BigInt isqrt_big(BigInt const& v)
{
    return boost::multiprecision::sqrt(v);
}

bool prime_allowed(Int lambda_sq, Int p)
{
    if (!is_prime(p))
        return false;
    return lambda_sq == 4 || p % 2 == 1;
}

} // namespace

BigInt fibonacci(int k)
{
    if (k < 0)
        throw std::invalid_argument("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt lucas(int k)
{
    if (k < 0)
        throw std::invalid_argument("lucas: negative index");
    BigInt a = 2, b = 1;
    for (int i = 0; i < k; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<Triple> f_triples(int k_max)
{
    if (k_max < 2)
        throw std::invalid_argument("f_triples: k_max must be at least 2");
    std::vector<BigInt> fib(static_cast<std::size_t>(k_max) + 3);
    std::vector<BigInt> luc(static_cast<std::size_t>(k_max) + 2);
    for (int i = 0; i < k_max + 3; ++i)
        fib[static_cast<std::size_t>(i)] = fibonacci(i);
    for (int i = 0; i < k_max + 2; ++i)
        luc[static_cast<std::size_t>(i)] = lucas(i);

    std::vector<Triple> out;
    for (int k = 2; k <= k_max; ++k) {
        for (int e : {1, -1}) {
            int first = k - 2 * e;
            if (first < 0)
                continue;
            auto at = [](std::vector<BigInt> const& v, int i) { return v[static_cast<std::size_t>(i)]; };
            out.push_back({at(fib, first), at(luc, k + e), at(fib, k)});
        }
    }
    return out;
}

bool is_valid_lambda_sq(Int lambda_sq)
{
    return lambda_sq == 1 || lambda_sq == 2 || lambda_sq == 4;
}

bool in_E(Int lambda_sq, Int D1, Int D2, Int p)
{
    static constexpr std::array<std::array<Int, 4>, 7> kSet = {{
        {4, 13, 3, 2},
        {2, 7, 11, 3},
        {1, 2, 1, 3},
        {4, 7, 1, 2},
        {2, 1, 1, 5},
        {2, 1, 1, 13},
        {4, 1, 3, 7},
    }};
    std::array<Int, 4> key{lambda_sq, D1, D2, p};
    return std::find(kSet.begin(), kSet.end(), key) != kSet.end();
}

bool in_F(Int D1, Int D2, Int p)
{
    // F_k = p bounds k; the sequence is generated only that far.
    std::vector<BigInt> fib{0, 1, 1, 2};
    std::vector<BigInt> luc{2, 1, 3, 4};
    for (int k = 2; fib[static_cast<std::size_t>(k)] <= p; ++k) {
        while (fib.size() < static_cast<std::size_t>(k) + 3) {
            fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
            luc.push_back(luc[luc.size() - 1] + luc[luc.size() - 2]);
        }
        if (fib[static_cast<std::size_t>(k)] != p)
            continue;
        for (int e : {1, -1}) {
            int first = k - 2 * e;
            if (first < 0)
                continue;
            if (fib[static_cast<std::size_t>(first)] == D1 && luc[static_cast<std::size_t>(k + e)] == D2)
                return true;
        }
    }
    return false;
}

bool in_G(Int lambda_sq, Int D1, Int D2, Int p)
{
    if (!is_valid_lambda_sq(lambda_sq) || !prime_allowed(lambda_sq, p))
        return false;
    if (D1 != 1 || D2 < 3 || (D2 + 1) % 4 != 0)
        return false;
    return exact_log(BigInt((D2 + 1) / 4), p) >= 1;
}

char const* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::ProvenAbsent:
        return "proven-absent";
    case SearchStatus::NotFoundWithinBounds:
        return "not-found-within-bounds";
    }
    return "?";
}

HMembership in_H(Int lambda_sq, Int D1, Int D2, Int p, Int r_max, Int s_max)
{
    HMembership out;
    if (!is_valid_lambda_sq(lambda_sq) || !prime_allowed(lambda_sq, p) || D1 < 1 || D2 < 1)
        return out;
    if (gcd(D1, D2) != 1 || gcd(D1, p) != 1 || gcd(D2, p) != 1)
        return out;

    // 3 D1 s^2 = D2 + sign * lambda^2 determines s.
    for (Int sign : {1, -1}) {
        Int num = D2 + sign * lambda_sq;
        Int den = 3 * D1;
        if (num <= 0 || num % den != 0)
            continue;
        Int s2 = num / den;
        NthRoot s = integer_nth_root(s2, 2);
        if (!s.exact)
            continue;
        BigInt total = BigInt(D1) * s2 + D2;
        if (total % lambda_sq != 0)
            continue;
        int r = exact_log(total / lambda_sq, p);
        if (r < 1)
            continue;
        if (r <= r_max && s.root <= s_max)
            return {SearchStatus::Found, r, s.root};
        out.status = SearchStatus::NotFoundWithinBounds;
    }
    return out;
}

void validate(BSInstance const& inst)
{
    if (!is_valid_lambda_sq(inst.lambda_sq))
        throw std::invalid_argument("lambda^2 must be 1, 2 or 4");
    if (inst.D1 < 1 || inst.D2 < 1)
        throw std::invalid_argument("D1 and D2 must be positive");
    if (gcd(inst.D1, inst.D2) != 1)
        throw std::invalid_argument("D1 and D2 must be coprime");
    if (!is_prime(inst.p))
        throw std::invalid_argument("p must be prime");
    if (inst.p == 2 && inst.lambda_sq != 4)
        throw std::invalid_argument("p = 2 is only allowed with lambda^2 = 4");
    if (inst.y_max < 1)
        throw std::invalid_argument("y_max must be positive");
}

BSSolutionSet count_bs_solutions(BSInstance const& inst)
{
    validate(inst);
    BSSolutionSet out;
    BigInt rhs = inst.lambda_sq;
    for (Int y = 1; y <= inst.y_max; ++y) {
        rhs *= inst.p;
        BigInt t = rhs - inst.D2;
        if (t <= 0 || t % inst.D1 != 0)
            continue;
        BigInt x2 = t / inst.D1;
        BigInt x = isqrt_big(x2);
        if (x * x == x2)
            out.solutions.push_back({x, y});
    }
    out.in_E = in_E(inst.lambda_sq, inst.D1, inst.D2, inst.p);
    out.in_F = in_F(inst.D1, inst.D2, inst.p);
    out.in_G = in_G(inst.lambda_sq, inst.D1, inst.D2, inst.p);
    out.in_H = in_H(inst.lambda_sq, inst.D1, inst.D2, inst.p);
    return out;
}

char const* to_string(Consistency c)
{
    return c == Consistency::Ok ? "OK" : "VIOLATION";
}

Consistency bs_consistency(BSSolutionSet const& set)
{
    if (set.solutions.size() <= 1 || set.any_exception())
        return Consistency::Ok;
    return Consistency::Violation;
}

Int BSSweep::unexplained() const
{
    return static_cast<Int>(std::count_if(multi.begin(), multi.end(),
                                          [](BSSweepEntry const& e) { return !e.result.any_exception(); }));
}

BSSweep bs_sweep(Int d1_max, Int d2_max, Int p_max, Int y_max)
{
    std::vector<Int> primes;
    for (Int p = 2; p <= p_max; ++p)
        if (is_prime(p))
            primes.push_back(p);

    BSSweep out;
    for (Int lambda_sq : {1, 2, 4}) {
        for (Int D1 = 1; D1 <= d1_max; ++D1) {
            for (Int D2 = 1; D2 <= d2_max; ++D2) {
                if (gcd(D1, D2) != 1)
                    continue;
                for (Int p : primes) {
                    if (!prime_allowed(lambda_sq, p))
                        continue;
                    BSInstance inst{lambda_sq, D1, D2, p, y_max};
                    BSSolutionSet set = count_bs_solutions(inst);
                    ++out.instances;
                    if (set.solutions.size() >= 2)
                        out.multi.push_back({inst, std::move(set)});
                }
            }
        }
    }
    return out;
}

std::vector<LucasSquare> cohn_scan(int k_max)
{
    std::vector<LucasSquare> out;
    BigInt a = 2, b = 1;
    for (int k = 0; k <= k_max; ++k) {
        if (is_perfect_square(a))
            out.push_back({k, a});
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return out;
}

std::vector<RepunitSquare> ljunggren_scan(Int x_max, Int n_max)
{
    std::vector<RepunitSquare> out;
    for (Int x = 2; x <= x_max; ++x) {
        // 1 + x + ... + x^(n-1), advanced two terms per odd n
        BigInt xp = BigInt(x) * x;
        BigInt sum = 1 + BigInt(x) + xp;
        for (Int n = 3; n <= n_max; n += 2) {
            BigInt y = isqrt_big(sum);
            if (y * y == sum)
                out.push_back({x, n, y});
            xp *= x;
            sum += xp;
            xp *= x;
            sum += xp;
        }
    }
    return out;
}

QuadraticElement multiply(QuadraticElement const& u, QuadraticElement const& w, Int d)
{
    return {u.x * w.x + u.y * w.y * d, u.x * w.y + u.y * w.x};
}

QuadraticElement power(QuadraticElement const& u, Int d, Int k)
{
    if (k < 0)
        throw std::invalid_argument("power: negative exponent");
    QuadraticElement result{1, 0};
    QuadraticElement base = u;
    while (k > 0) {
        if (k & 1)
            result = multiply(result, base, d);
        base = multiply(base, base, d);
        k >>= 1;
    }
    return result;
}

std::optional<QuadraticElement> half_power_in_order(Int d, Int a, Int b, Int ell)
{
    if (mod_floor(d, 8) != 5)
        throw std::invalid_argument("half_power_in_order: d must be 5 mod 8");
    if (is_perfect_square(d))
        throw std::invalid_argument("half_power_in_order: d must not be a square");
    if (a % 2 == 0 || b % 2 == 0)
        throw std::invalid_argument("half_power_in_order: a and b must be odd");
    if (ell < 1)
        throw std::invalid_argument("half_power_in_order: ell must be positive");

    QuadraticElement num = power({a, b}, d, ell);
    BigInt den = pow_big(2, ell);
    if (num.x % den != 0 || num.y % den != 0)
        return std::nullopt;
    return QuadraticElement{num.x / den, num.y / den};
}

bool prop1_member(Int d, Int a, Int b, Int ell)
{
    return half_power_in_order(d, a, b, ell).has_value();
}

std::vector<HalfPowerTally> prop1_sweep(Int d_min, Int d_max, Int ab_max, std::vector<Int> const& ells)
{
    std::vector<HalfPowerTally> out;
    for (Int ell : ells) {
        HalfPowerTally t{ell, 0, 0};
        for (Int d = d_min; d <= d_max; ++d) {
            if (mod_floor(d, 8) != 5 || is_perfect_square(d))
                continue;
            for (Int a = -ab_max; a <= ab_max; ++a) {
                if (a % 2 == 0)
                    continue;
                for (Int b = -ab_max; b <= ab_max; ++b) {
                    if (b % 2 == 0)
                        continue;
                    ++t.total;
                    if (prop1_member(d, a, b, ell))
                        ++t.members;
                }
            }
        }
        out.push_back(t);
    }
    return out;
}

std::optional<QuadraticElement> root_power(RootCandidate const& beta, Int d, Int ell)
{
    QuadraticElement num = power({beta.a, beta.b}, d, ell);
    if (!beta.halved)
        return num;
    BigInt den = pow_big(2, ell);
    if (num.x % den != 0 || num.y % den != 0)
        return std::nullopt;
    return QuadraticElement{num.x / den, num.y / den};
}

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    for (auto const& pp : factorize(n).factors)
        out.push_back(pp.prime);
    return out;
}

std::optional<RootCandidate> prop2_find_root(FieldCase const& fc, Int ell)
{
    if (ell < 2 || !is_prime(ell) || fc.n % ell != 0)
        throw std::invalid_argument("prop2_find_root: ell = " + std::to_string(ell) +
                                    " is not a prime divisor of n = " + std::to_string(fc.n));
    if (fc.d >= 0)
        throw std::invalid_argument("prop2_find_root: d must be negative");

    Int norm = checked_pow(fc.p, static_cast<unsigned>(fc.n / ell));
    Int abs_d = -fc.d;
    QuadraticElement alpha{fc.q, fc.m};

    // Integral shape: a^2 - b^2 d = N(beta).
    {
        Int b_max = integer_nth_root(norm / abs_d, 2).root;
        for (Int b = -b_max; b <= b_max; ++b) {
            Int a2 = checked_sub(norm, checked_mul(checked_mul(b, b), abs_d));
            NthRoot r = integer_nth_root(a2, 2);
            if (!r.exact)
                continue;
            for (Int a : {-r.root, r.root}) {
                RootCandidate c{a, b, false};
                if (root_power(c, fc.d, ell) == alpha)
                    return c;
                if (r.root == 0)
                    break;
            }
        }
    }

    // Half-integral shape: a^2 - b^2 d = 4 N(beta), a and b odd. Only
    // admissible in the maximal order when d = 1 mod 4.
    bool half_allowed = mod_floor(fc.d, 4) == 1;
    Int four_norm = checked_mul(4, norm);
    Int b_max = integer_nth_root(four_norm / abs_d, 2).root;
    for (Int b = -b_max; b <= b_max; ++b) {
        if (b % 2 == 0)
            continue;
        Int a2 = checked_sub(four_norm, checked_mul(checked_mul(b, b), abs_d));
        NthRoot r = integer_nth_root(a2, 2);
        if (!r.exact || r.root % 2 == 0)
            continue;
        for (Int a : {-r.root, r.root}) {
            RootCandidate c{a, b, true};
            if (half_allowed && root_power(c, fc.d, ell) == alpha)
                return c;
        }
    }
    return std::nullopt;
}

} // namespace qfdiv
