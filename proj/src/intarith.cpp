#include "qfdiv/intarith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qfdiv {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

constexpr Int kTrialBound = 1'000'000;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s)
{
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

// Brent's variant; n must be odd, composite and not a prime power of a
// small prime (those are removed by trial division first).
u64 pollard_brent(u64 n)
{
    u64 c = 1;
    while (true) {
        u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
        u64 r = 1;
        const u64 batch = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
        ++c;
    }
}

void split_large(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime(static_cast<Int>(n))) {
        out.push_back(n);
        return;
    }
    u64 f = pollard_brent(n);
    split_large(f, out);
    split_large(n / f, out);
}

} // namespace

Int checked_add(Int x, Int y)
{
    Int r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int x, Int y)
{
    Int r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int x, Int y)
{
    Int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int base, unsigned exponent)
{
    Int r = 1;
    for (unsigned i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

Int floor_div(Int x, Int m)
{
    Int q = x / m;
    if ((x % m != 0) && ((x < 0) != (m < 0)))
        --q;
    return q;
}

Int mod_floor(Int x, Int m)
{
    Int r = x % m;
    return r < 0 ? r + m : r;
}

Int gcd(Int x, Int y)
{
    return std::gcd(x, y);
}

ExtGcd ext_gcd(Int x, Int y)
{
    Int old_r = x, r = y;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (static_cast<u64>(n) % p == 0)
            return static_cast<u64>(n) == p;
    }
    u64 un = static_cast<u64>(n);
    u64 d = un - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        if (miller_rabin_witness(un, a, d, s))
            return false;
    }
    return true;
}

Int Factorization::recompose() const
{
    Int r = sign;
    for (auto const& pp : factors)
        r = checked_mul(r, checked_pow(pp.prime, static_cast<unsigned>(pp.exponent)));
    return r;
}

Factorization factorize(Int n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    if (n == std::numeric_limits<Int>::min())
        throw std::overflow_error("factorize: magnitude out of range");

    Factorization out{n, n < 0 ? -1 : 1, {}};
    u64 rest = static_cast<u64>(n < 0 ? -n : n);

    auto take = [&](u64 p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e)
            out.factors.push_back({static_cast<Int>(p), e});
    };

    take(2);
    for (u64 p = 3; p <= static_cast<u64>(kTrialBound) && p * p <= rest; p += 2)
        take(p);

    if (rest > 1) {
        std::vector<u64> big;
        if (rest <= static_cast<u64>(kTrialBound) * kTrialBound)
            big.push_back(rest); // no factor below the trial bound, so prime
        else
            split_large(rest, big);
        std::sort(big.begin(), big.end());
        for (std::size_t i = 0; i < big.size();) {
            std::size_t j = i;
            while (j < big.size() && big[j] == big[i])
                ++j;
            out.factors.push_back({static_cast<Int>(big[i]), static_cast<int>(j - i)});
            i = j;
        }
    }
    return out;
}

SquarefreeDecomposition squarefree_part(Int v)
{
    if (v == 0)
        throw std::invalid_argument("squarefree_part: zero has no square-free part");
    Factorization f = factorize(v);
    Int m = 1;
    Int d = f.sign;
    for (auto const& pp : f.factors) {
        m = checked_mul(m, checked_pow(pp.prime, static_cast<unsigned>(pp.exponent / 2)));
        if (pp.exponent % 2)
            d = checked_mul(d, pp.prime);
    }
    return {m, d};
}

bool is_squarefree(Int v)
{
    if (v == 0)
        return false;
    return squarefree_part(v).m == 1;
}

namespace {

// Compares r^k against v without overflow: -1, 0, +1.
int compare_power(Int r, unsigned k, Int v)
{
    i128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > v)
            return 1;
    }
    return acc == v ? 0 : -1;
}

} // namespace

NthRoot integer_nth_root(Int v, unsigned k)
{
    if (v < 0 || k == 0)
        throw std::invalid_argument("integer_nth_root: need v >= 0 and k >= 1");
    if (v < 2 || k == 1)
        return {v, true};
    auto r = static_cast<Int>(std::llround(std::pow(static_cast<double>(v), 1.0 / k)));
    while (r > 0 && compare_power(r, k, v) > 0)
        --r;
    while (compare_power(r + 1, k, v) <= 0)
        ++r;
    return {r, compare_power(r, k, v) == 0};
}

bool is_perfect_square(Int v)
{
    if (v < 0)
        return false;
    return integer_nth_root(v, 2).exact;
}

bool is_perfect_square(BigInt const& v)
{
    if (v < 0)
        return false;
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v;
}

int exact_log(BigInt v, Int p)
{
    if (v <= 1 || p < 2)
        return 0;
    int r = 0;
    while (v > 1) {
        if (v % p != 0)
            return 0;
        v /= p;
        ++r;
    }
    return r;
}

std::vector<Int> odd_primes_up_to(Int bound)
{
    std::vector<Int> out;
    if (bound < 3)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (Int i = 3; i <= bound; i += 2) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (Int j = i * i; j <= bound; j += 2 * i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

} // namespace qfdiv
