#include "qfdiv/tabulate.hpp"

namespace qfdiv {

namespace {

constexpr PaperPair kTableN3[] = {
    {3, 5, nullptr},
    {5, 3, nullptr},
    {5, 7, nullptr},
    {7, 3, nullptr},
    {7, 5, nullptr},
    {7, 11, nullptr},
    {7, 13, nullptr},
    {7, 17, nullptr},
    {11, 3, nullptr},
    {11, 5, nullptr},
    {11, 7, nullptr},
    {11, 13, nullptr},
    {11, 17, nullptr},
    {11, 19, nullptr},
    {11, 23, nullptr},
    {11, 29, nullptr},
    {11, 31, nullptr},
    {11, 37, "printed as -38; actually q^2 > p^n"},
    {13, 3, nullptr},
    {13, 5, nullptr},
    {13, 7, nullptr},
    {13, 11, nullptr},
    {13, 17, nullptr},
    {13, 19, nullptr},
    {13, 23, nullptr},
    {13, 29, nullptr},
    {13, 31, nullptr},
    {13, 37, nullptr},
    {13, 41, nullptr},
    {13, 43, nullptr},
    {13, 47, "printed as -12; actually q^2 > p^n"},
    {17, 3, nullptr},
    {17, 5, nullptr},
    {17, 7, nullptr},
    {17, 11, nullptr},
    {17, 13, nullptr},
    {17, 19, nullptr},
    {17, 23, nullptr},
    {17, 29, nullptr},
    {17, 31, nullptr},
    {17, 37, nullptr},
    {17, 41, nullptr},
    {17, 43, nullptr},
    {17, 47, "printed as 2704; sign dropped"},
    {17, 53, nullptr},
    {17, 59, nullptr},
    {17, 61, nullptr},
    {17, 67, nullptr},
    {19, 3, nullptr},
    {19, 5, nullptr},
    {19, 7, nullptr},
    {19, 11, nullptr},
    {19, 13, nullptr},
    {19, 17, nullptr},
    {19, 23, nullptr},
    {19, 29, nullptr},
    {19, 31, nullptr},
    {19, 37, nullptr},
    {19, 41, nullptr},
    {19, 43, nullptr},
    {19, 47, nullptr},
    {19, 53, nullptr},
    {19, 59, nullptr},
    {19, 61, nullptr},
    {19, 67, nullptr},
    {19, 71, nullptr},
    {19, 73, nullptr},
    {19, 79, nullptr},
};

constexpr PaperPair kTableN5[] = {
    {3, 5, nullptr},
    {3, 7, nullptr},
    {3, 11, nullptr},
    {3, 13, nullptr},
    {5, 3, nullptr},
    {5, 7, nullptr},
    {5, 11, nullptr},
    {5, 13, nullptr},
    {5, 17, nullptr},
    {5, 19, nullptr},
    {5, 23, nullptr},
    {5, 29, nullptr},
    {5, 31, "printed h = 5; the class number is 10"},
    {5, 37, nullptr},
    {5, 41, nullptr},
    {5, 43, nullptr},
    {5, 47, nullptr},
    {5, 53, nullptr},
    {7, 3, nullptr},
    {7, 5, nullptr},
    {7, 11, nullptr},
    {7, 13, nullptr},
    {7, 17, nullptr},
    {7, 19, nullptr},
    {7, 23, nullptr},
    {7, 29, nullptr},
    {7, 31, nullptr},
    {7, 37, nullptr},
    {7, 41, nullptr},
    {7, 43, nullptr},
    {7, 47, nullptr},
    {7, 53, nullptr},
    {7, 59, nullptr},
    {7, 61, nullptr},
    {7, 67, nullptr},
    {7, 71, nullptr},
    {7, 73, nullptr},
    {7, 79, nullptr},
    {7, 83, nullptr},
    {7, 89, nullptr},
    {7, 97, nullptr},
    {7, 101, nullptr},
    {7, 103, nullptr},
    {7, 107, nullptr},
    {7, 109, "printed h = 40; the class number is 60"},
    {7, 113, "printed h = 60; the class number is 40"},
    {7, 127, nullptr},
};

} // namespace

std::span<PaperPair const> paper_pairs(Int n)
{
    if (n == 3)
        return kTableN3;
    if (n == 5)
        return kTableN5;
    return {};
}

} // namespace qfdiv
