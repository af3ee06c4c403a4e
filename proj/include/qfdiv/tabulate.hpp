#ifndef QFDIV_TABULATE_HPP
#define QFDIV_TABULATE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfdiv/fieldcase.hpp"

namespace qfdiv {

struct TableRow
{
    Int p = 0;
    Int q = 0;
    Int n = 0;
    Int v = 0;
    Int m = 0;
    Int d = 0;
    Int h = 0;
    std::string marker;
    std::optional<Int> order_p;
    Verdict verdict = Verdict::Fail;

    bool operator==(TableRow const&) const = default;
};

enum class QPolicy
{
    AllValid,  // every odd prime q != p with q^2 < p^n
    PaperRange // only the (p, q) pairs printed in the published tables
};

/// A (p, q) pair as printed in the published tables. `note` is non-null
/// for rows whose printed values are known to be misprinted.
struct PaperPair
{
    Int p;
    Int q;
    char const* note;
};

/// Published pairs for n = 3 and n = 5 (empty for any other n), sorted by (p, q).
std::span<PaperPair const> paper_pairs(Int n);

TableRow make_row(Int p, Int q, Int n);

/// Rows sorted by (p, q). PaperRange silently drops printed pairs with
/// q^2 >= p^n and throws std::invalid_argument for n without a printed table.
std::vector<TableRow> generate_table(Int n, Int p_max, QPolicy policy);

inline constexpr char const* kCsvHeader = "p,q,n,v,m,d,h,marker,order_p,verdict";

std::string render_csv(std::vector<TableRow> const& rows);
std::string render_json(std::vector<TableRow> const& rows);

} // namespace qfdiv

#endif // QFDIV_TABULATE_HPP
