#include "qfdiv/quadforms.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qfdiv {

Int QuadForm::discriminant() const
{
    return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
}

bool QuadForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

bool QuadForm::is_reduced() const
{
    Int abs_b = b < 0 ? -b : b;
    if (!(abs_b <= a && a <= c))
        return false;
    if ((abs_b == a || a == c) && b < 0)
        return false;
    return true;
}

QuadForm QuadForm::inverse() const
{
    return reduce({a, -b, c});
}

std::string to_string(QuadForm const& f)
{
    std::ostringstream os;
    os << '(' << f.a << ", " << f.b << ", " << f.c << ')';
    return os.str();
}

bool is_fundamental_discriminant(Int D)
{
    if (D >= 0)
        return false;
    Int r = mod_floor(D, 4);
    if (r == 1)
        return is_squarefree(D);
    if (r != 0)
        return false;
    Int d = D / 4;
    Int rd = mod_floor(d, 4);
    return (rd == 2 || rd == 3) && is_squarefree(d);
}

Int fundamental_discriminant(Int d)
{
    if (d >= 0)
        throw std::invalid_argument("fundamental_discriminant: d must be negative");
    if (!is_squarefree(d))
        throw std::invalid_argument("fundamental_discriminant: d must be square-free");
    return mod_floor(d, 4) == 1 ? d : checked_mul(4, d);
}

QuadForm principal_form(Int D)
{
    Int b = mod_floor(D, 2);
    return {1, b, (b - D) / 4};
}

bool is_principal(QuadForm const& f)
{
    return f.a == 1;
}

namespace {

// Brings b into (-a, a] keeping the class.
void normalize(QuadForm& f, Int D)
{
    if (-f.a < f.b && f.b <= f.a)
        return;
    Int two_a = checked_mul(2, f.a);
    Int r = floor_div(checked_sub(f.a, f.b), two_a);
    f.b = checked_add(f.b, checked_mul(r, two_a));
    f.c = checked_sub(checked_mul(f.b, f.b), D) / checked_mul(4, f.a);
}

} // namespace

QuadForm reduce(QuadForm f)
{
    if (f.a <= 0 || f.c <= 0)
        throw std::invalid_argument("reduce: form is not positive definite " + to_string(f));
    Int D = f.discriminant();
    if (D >= 0)
        throw std::invalid_argument("reduce: discriminant must be negative " + to_string(f));
    if (!f.is_primitive())
        throw std::invalid_argument("reduce: form is not primitive " + to_string(f));

    normalize(f, D);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f, D);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm compose(QuadForm const& f, QuadForm const& g)
{
    Int D = f.discriminant();
    if (g.discriminant() != D)
        throw DiscriminantMismatch("compose: discriminants differ: " + to_string(f) + " vs " + to_string(g));

    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);

    // b1 and b2 share parity with D, so s is an integer.
    Int s = checked_add(f1.b, f2.b) / 2;
    Int n = f2.b - s;

    Int y1 = 0, d = f1.a;
    if (f2.a % f1.a != 0) {
        ExtGcd e = ext_gcd(f2.a, f1.a);
        y1 = e.u;
        d = e.g;
    }

    Int x2 = 0, y2 = -1, d1 = d;
    if (s % d != 0) {
        ExtGcd e = ext_gcd(s, d);
        x2 = e.u;
        y2 = -e.v;
        d1 = e.g;
    }

    Int v1 = f1.a / d1;
    Int v2 = f2.a / d1;
    Int t = checked_sub(checked_mul(checked_mul(mod_floor(y1, v1), mod_floor(y2, v1)) % v1, mod_floor(n, v1)),
                        checked_mul(mod_floor(x2, v1), mod_floor(f2.c, v1)));
    Int r = mod_floor(t, v1);

    QuadForm h;
    h.a = checked_mul(v1, v2);
    h.b = checked_add(f2.b, checked_mul(2, checked_mul(v2, r)));
    Int num = checked_sub(checked_mul(h.b, h.b), D);
    Int den = checked_mul(4, h.a);
    if (num % den != 0)
        throw std::logic_error("compose: non-integral third coefficient for " + to_string(f) + " * " + to_string(g));
    h.c = num / den;
    return reduce(h);
}

QuadForm power(QuadForm const& f, Int k)
{
    if (k < 0)
        return power(f.inverse(), -k);
    QuadForm result = principal_form(f.discriminant());
    QuadForm base = reduce(f);
    while (k > 0) {
        if (k & 1)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

namespace {

void require_fundamental(Int D, char const* who)
{
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(D) +
                                    " is not a negative fundamental discriminant");
}

// Calls visit(a, b, c) for each reduced primitive form with b >= 0.
template <typename Visit>
void for_each_nonnegative_reduced(Int D, Visit&& visit)
{
    Int absD = -D;
    for (Int a = 1; 3 * a * a <= absD; ++a) {
        Int four_a = 4 * a;
        for (Int b = absD % 2; b <= a; b += 2) {
            Int num = b * b + absD;
            if (num % four_a != 0)
                continue;
            Int c = num / four_a;
            if (c < a)
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            visit(a, b, c);
        }
    }
}

} // namespace

ClassGroup class_group(Int D)
{
    require_fundamental(D, "class_group");
    ClassGroup out{D, {}};
    for_each_nonnegative_reduced(D, [&](Int a, Int b, Int c) {
        out.forms.push_back({a, b, c});
        if (b != 0 && b != a && a != c)
            out.forms.push_back({a, -b, c});
    });
    std::sort(out.forms.begin(), out.forms.end());
    return out;
}

Int class_number(Int D)
{
    require_fundamental(D, "class_number");
    Int h = 0;
    for_each_nonnegative_reduced(D, [&](Int a, Int b, Int c) {
        h += (b != 0 && b != a && a != c) ? 2 : 1;
    });
    return h;
}

QuadForm prime_form(Int D, Int p)
{
    require_fundamental(D, "prime_form");
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("prime_form: p must be an odd prime");
    Int four_p = checked_mul(4, p);
    for (Int b = 0; b < 2 * p; ++b) {
        if (mod_floor(checked_sub(checked_mul(b, b), D), four_p) == 0)
            return reduce({p, b, (b * b - D) / four_p});
    }
    throw InertPrime("prime_form: " + std::to_string(p) + " is inert in discriminant " + std::to_string(D));
}

Int form_order(QuadForm const& f)
{
    QuadForm base = reduce(f);
    Int D = base.discriminant();
    QuadForm acc = base;
    Int k = 1;
    // The class group has fewer than |D| elements.
    while (!is_principal(acc)) {
        if (k > -D)
            throw std::logic_error("form_order: no finite order found for " + to_string(f));
        acc = compose(acc, base);
        ++k;
    }
    return k;
}

} // namespace qfdiv
