#include "qfdiv/tabulate.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace qfdiv {

TableRow make_row(Int p, Int q, Int n)
{
    FieldCase fc = build_case(p, q, n);
    ConditionReport rep = check_conditions(fc);
    VerificationResult ver = verify(fc, rep);

    TableRow row;
    row.p = p;
    row.q = q;
    row.n = n;
    row.v = fc.v;
    row.m = fc.m;
    row.d = fc.d;
    row.h = ver.h;
    row.marker = rep.marker;
    row.order_p = ver.order_p;
    row.verdict = rep.verdict;
    return row;
}

std::vector<TableRow> generate_table(Int n, Int p_max, QPolicy policy)
{
    std::vector<std::pair<Int, Int>> pairs;
    if (policy == QPolicy::PaperRange) {
        auto printed = paper_pairs(n);
        if (printed.empty())
            throw std::invalid_argument("no published table for n = " + std::to_string(n));
        for (PaperPair const& pp : printed) {
            if (pp.p > p_max)
                continue;
            Int pn = checked_pow(pp.p, static_cast<unsigned>(n));
            if (checked_mul(pp.q, pp.q) >= pn)
                continue;
            pairs.emplace_back(pp.p, pp.q);
        }
    } else {
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("n must be an odd integer >= 3");
        for (Int p : odd_primes_up_to(p_max)) {
            Int pn = checked_pow(p, static_cast<unsigned>(n));
            Int q_limit = integer_nth_root(pn - 1, 2).root;
            for (Int q : odd_primes_up_to(q_limit))
                if (q != p)
                    pairs.emplace_back(p, q);
        }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<TableRow> rows;
    rows.reserve(pairs.size());
    for (auto [p, q] : pairs)
        rows.push_back(make_row(p, q, n));
    return rows;
}

std::string render_csv(std::vector<TableRow> const& rows)
{
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (TableRow const& r : rows) {
        os << r.p << ',' << r.q << ',' << r.n << ',' << r.v << ',' << r.m << ',' << r.d << ',' << r.h << ','
           << r.marker << ',';
        if (r.order_p)
            os << *r.order_p;
        os << ',' << to_string(r.verdict) << '\n';
    }
    return os.str();
}

std::string render_json(std::vector<TableRow> const& rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (TableRow const& r : rows) {
        nlohmann::ordered_json o;
        o["p"] = r.p;
        o["q"] = r.q;
        o["n"] = r.n;
        o["v"] = r.v;
        o["m"] = r.m;
        o["d"] = r.d;
        o["h"] = r.h;
        o["marker"] = r.marker;
        o["order_p"] = r.order_p ? nlohmann::ordered_json(*r.order_p) : nlohmann::ordered_json(nullptr);
        o["verdict"] = to_string(r.verdict);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + '\n';
}

} // namespace qfdiv
