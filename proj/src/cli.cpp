#include "qfdiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfdiv/diokit.hpp"
#include "qfdiv/fieldcase.hpp"
#include "qfdiv/quadforms.hpp"
#include "qfdiv/tabulate.hpp"

namespace qfdiv::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string big(BigInt const& v)
{
    return v.str();
}

// Indented "key: value" rendering of a JSON document.
void render_human(Json const& j, std::ostream& out, int indent = 0)
{
    std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](Json const& v) {
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    };
    if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                out << pad << k << ":\n";
                render_human(v, out, indent + 2);
            } else {
                std::string text = v.is_structured() ? v.dump() : scalar(v);
                out << pad << k << ':' << (text.empty() ? "" : " ") << text << '\n';
            }
        }
    } else if (j.is_array()) {
        for (auto const& v : j) {
            if (v.is_object()) {
                std::string line;
                for (auto const& [k, x] : v.items())
                    line += (line.empty() ? "" : "  ") + k + "=" + (x.is_string() ? x.get<std::string>() : x.dump());
                out << pad << "- " << line << '\n';
            } else {
                out << pad << "- " << scalar(v) << '\n';
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

struct Common
{
    std::string format = "json";
    int verbosity = 0;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats)
{
    c.format = formats.front();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("-v,--verbose", c.verbosity, "Diagnostics on stderr (repeatable, up to 2)");
}

void emit(Json const& doc, Common const& c, std::ostream& out)
{
    if (c.format == "human")
        render_human(doc, out);
    else
        out << doc.dump(2) << '\n';
}

int verdict_code(bool consistent)
{
    return consistent ? kConsistent : kTheoremViolation;
}

Json case_json(FieldCase const& fc)
{
    return Json{{"p", fc.p}, {"q", fc.q}, {"n", fc.n}, {"v", fc.v}, {"m", fc.m}, {"d", fc.d}, {"D", fc.D}};
}

Json report_json(ConditionReport const& r)
{
    return Json{{"size_ok", r.size_ok},         {"star_fail", r.star_fail},       {"cube_path", r.cube_path},
                {"pcube_fail_a", r.pcube_fail_a}, {"pcube_fail_b", r.pcube_fail_b}, {"verdict", to_string(r.verdict)},
                {"marker", r.marker}};
}

Json optional_json(std::optional<Int> const& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json solutions_json(std::vector<BSSolution> const& sols)
{
    Json arr = Json::array();
    for (auto const& s : sols)
        arr.push_back(Json{{"x", big(s.x)}, {"y", s.y}});
    return arr;
}

Json h_json(HMembership const& h)
{
    Json j{{"status", to_string(h.status)}};
    if (h.member()) {
        j["r"] = h.r;
        j["s"] = h.s;
    }
    return j;
}

Json bs_json(BSInstance const& inst, BSSolutionSet const& set)
{
    return Json{{"lambda_sq", inst.lambda_sq},
                {"D1", inst.D1},
                {"D2", inst.D2},
                {"p", inst.p},
                {"y_max", inst.y_max},
                {"solutions", solutions_json(set.solutions)},
                {"in_E", set.in_E},
                {"in_F", set.in_F},
                {"in_G", set.in_G},
                {"in_H", h_json(set.in_H)},
                {"consistency", to_string(bs_consistency(set))}};
}

std::vector<Int> parse_int_list(std::string const& text)
{
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int v = std::stoll(item, &used);
        if (used != item.size())
            throw std::invalid_argument("not an integer list: " + text);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

} // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Class-number divisibility checks for Q(sqrt(q^2 - p^n))", "qfdiv"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::function<int()> action;

    // check
    Common check_c;
    Int check_p = 0, check_q = 0, check_n = 0;
    auto* check = app.add_subcommand("check", "Hypotheses, class number and prime-form order for one field");
    check->add_option("--p", check_p)->required();
    check->add_option("--q", check_q)->required();
    check->add_option("--n", check_n)->required();
    add_common(check, check_c, {"json", "human"});
    check->callback([&] {
        action = [&] {
            FieldCase fc = build_case(check_p, check_q, check_n);
            ConditionReport rep = check_conditions(fc);
            VerificationResult ver = verify(fc, rep);
            bool consistent = rep.verdict != Verdict::Pass || (ver.divisible && ver.order_matches.value_or(false));
            Json doc = case_json(fc);
            doc["conditions"] = report_json(rep);
            doc["result"] = Json{{"h", ver.h},
                                 {"divisible", ver.divisible},
                                 {"order_p", optional_json(ver.order_p)},
                                 {"order_matches", ver.order_matches ? Json(*ver.order_matches) : Json(nullptr)}};
            doc["consistent"] = consistent;
            emit(doc, check_c, out);
            return verdict_code(consistent);
        };
    });

    // table
    Common table_c;
    Int table_n = 0, table_pmax = 0;
    std::string table_range = "all";
    std::string table_out;
    auto* table = app.add_subcommand("table", "Sweep (p, q) for fixed n");
    table->add_option("--n", table_n)->required();
    table->add_option("--pmax", table_pmax)->required();
    table->add_option("--range", table_range)->check(CLI::IsMember({"all", "paper"}));
    table->add_option("--out", table_out, "Write to this file instead of stdout");
    add_common(table, table_c, {"csv", "json", "human"});
    table->callback([&] {
        action = [&] {
            auto rows = generate_table(table_n, table_pmax, table_range == "paper" ? QPolicy::PaperRange : QPolicy::AllValid);
            bool consistent = std::all_of(rows.begin(), rows.end(), [](TableRow const& r) {
                return r.verdict != Verdict::Pass || (r.h % r.n == 0 && r.order_p == r.n);
            });
            std::string text;
            if (table_c.format == "csv") {
                text = render_csv(rows);
            } else if (table_c.format == "json") {
                text = render_json(rows);
            } else {
                std::ostringstream os;
                os << std::setw(5) << "p" << std::setw(6) << "q" << std::setw(10) << "q^2-p^n" << std::setw(8) << "d"
                   << std::setw(6) << "h" << "  mark  ord  verdict\n";
                for (auto const& r : rows)
                    os << std::setw(5) << r.p << std::setw(6) << r.q << std::setw(10) << r.v << std::setw(8) << r.d
                       << std::setw(6) << r.h << "  " << std::setw(4) << std::left << r.marker << std::right
                       << std::setw(5) << (r.order_p ? std::to_string(*r.order_p) : "-") << "  "
                       << to_string(r.verdict) << '\n';
                text = os.str();
            }
            if (table_out.empty()) {
                out << text;
            } else {
                std::ofstream f(table_out, std::ios::binary);
                if (!f)
                    throw std::invalid_argument("cannot open " + table_out + " for writing");
                f << text;
            }
            if (table_c.verbosity > 0)
                err << "table: " << rows.size() << " rows\n";
            return verdict_code(consistent);
        };
    });

    // order
    Common order_c;
    Int order_p = 0, order_q = 0, order_n = 0;
    auto* order = app.add_subcommand("order", "Order of the prime form above p");
    order->add_option("--p", order_p)->required();
    order->add_option("--q", order_q)->required();
    order->add_option("--n", order_n)->required();
    add_common(order, order_c, {"json", "human"});
    order->callback([&] {
        action = [&] {
            FieldCase fc = build_case(order_p, order_q, order_n);
            ConditionReport rep = check_conditions(fc);
            QuadForm f;
            try {
                f = prime_form(fc.D, fc.p);
            } catch (InertPrime const& e) {
                throw std::logic_error(std::string("p divides the norm of alpha but ") + e.what());
            }
            Int k = form_order(f);
            bool consistent = rep.verdict != Verdict::Pass || k == fc.n;
            Json doc = case_json(fc);
            doc["prime_form"] = Json::array({f.a, f.b, f.c});
            doc["order"] = k;
            doc["verdict"] = to_string(rep.verdict);
            doc["consistent"] = consistent;
            emit(doc, order_c, out);
            return verdict_code(consistent);
        };
    });

    // prop2
    Common prop2_c;
    Int prop2_p = 0, prop2_q = 0, prop2_n = 0, prop2_ell = 0;
    auto* prop2 = app.add_subcommand("prop2", "Search for an ell-th root of q + m sqrt(d)");
    prop2->add_option("--p", prop2_p)->required();
    prop2->add_option("--q", prop2_q)->required();
    prop2->add_option("--n", prop2_n)->required();
    prop2->add_option("--ell", prop2_ell, "Restrict to one prime divisor of n");
    add_common(prop2, prop2_c, {"json", "human"});
    prop2->callback([&] {
        action = [&] {
            FieldCase fc = build_case(prop2_p, prop2_q, prop2_n);
            ConditionReport rep = check_conditions(fc);
            std::vector<Int> ells = prop2_ell ? std::vector<Int>{prop2_ell} : prime_divisors(fc.n);
            Json roots = Json::array();
            bool consistent = true;
            for (Int ell : ells) {
                auto root = prop2_find_root(fc, ell);
                Json entry{{"ell", ell}};
                if (root) {
                    auto pw = root_power(*root, fc.d, ell);
                    bool closes = pw && pw->x == fc.q && pw->y == fc.m;
                    entry["root"] = Json{{"a", root->a},
                                         {"b", root->b},
                                         {"halved", root->halved},
                                         {"power", Json::array({big(pw->x), big(pw->y)})}};
                    if (!closes || rep.verdict == Verdict::Pass)
                        consistent = false;
                } else {
                    entry["root"] = nullptr;
                }
                roots.push_back(std::move(entry));
            }
            Json doc = case_json(fc);
            doc["verdict"] = to_string(rep.verdict);
            doc["marker"] = rep.marker;
            doc["roots"] = std::move(roots);
            doc["consistent"] = consistent;
            emit(doc, prop2_c, out);
            return verdict_code(consistent);
        };
    });

    // prop1
    Common prop1_c;
    Int prop1_dmin = -1000, prop1_dmax = -3, prop1_abmax = 9;
    std::string prop1_ells = "3,5,7,11";
    auto* prop1 = app.add_subcommand("prop1", "Integrality of ((a + b sqrt d)/2)^ell for d = 5 mod 8");
    prop1->add_option("--dmin", prop1_dmin)->required();
    prop1->add_option("--dmax", prop1_dmax)->required();
    prop1->add_option("--abmax", prop1_abmax)->required();
    prop1->add_option("--ells", prop1_ells, "Comma-separated odd primes");
    add_common(prop1, prop1_c, {"json", "human"});
    prop1->callback([&] {
        action = [&] {
            auto ells = parse_int_list(prop1_ells);
            for (Int ell : ells)
                if (ell < 3 || !is_prime(ell))
                    throw std::invalid_argument("--ells must list odd primes");
            auto tallies = prop1_sweep(prop1_dmin, prop1_dmax, prop1_abmax, ells);
            bool consistent = true;
            Json arr = Json::array();
            for (auto const& t : tallies) {
                bool expected = t.ell == 3 ? t.members == t.total : t.members == 0;
                consistent = consistent && expected;
                arr.push_back(Json{{"ell", t.ell}, {"total", t.total}, {"members", t.members}});
            }
            Json doc{{"d_min", prop1_dmin}, {"d_max", prop1_dmax}, {"ab_max", prop1_abmax}, {"tallies", arr},
                     {"consistent", consistent}};
            emit(doc, prop1_c, out);
            return verdict_code(consistent);
        };
    });

    // bs
    Common bs_c;
    BSInstance bs_inst;
    auto* bs = app.add_subcommand("bs", "Solutions of D1 x^2 + D2 = lambda^2 p^y");
    bs->add_option("--lambda2", bs_inst.lambda_sq)->required();
    bs->add_option("--d1", bs_inst.D1)->required();
    bs->add_option("--d2", bs_inst.D2)->required();
    bs->add_option("--p", bs_inst.p)->required();
    bs->add_option("--ymax", bs_inst.y_max)->required();
    add_common(bs, bs_c, {"json", "human"});
    bs->callback([&] {
        action = [&] {
            BSSolutionSet set = count_bs_solutions(bs_inst);
            emit(bs_json(bs_inst, set), bs_c, out);
            return verdict_code(bs_consistency(set) == Consistency::Ok);
        };
    });

    // bs-sweep
    Common sweep_c;
    Int sweep_d1 = 0, sweep_d2 = 0, sweep_p = 0, sweep_y = 0;
    auto* sweep = app.add_subcommand("bs-sweep", "Every instance with two or more solutions in a box");
    sweep->add_option("--d1max", sweep_d1)->required();
    sweep->add_option("--d2max", sweep_d2)->required();
    sweep->add_option("--pmax", sweep_p)->required();
    sweep->add_option("--ymax", sweep_y)->required();
    add_common(sweep, sweep_c, {"json", "human"});
    sweep->callback([&] {
        action = [&] {
            BSSweep s = bs_sweep(sweep_d1, sweep_d2, sweep_p, sweep_y);
            Json multi = Json::array();
            for (auto const& e : s.multi) {
                Json j = bs_json(e.instance, e.result);
                j["explained"] = e.result.any_exception();
                multi.push_back(std::move(j));
            }
            Int unexplained = s.unexplained();
            Json doc{{"d1_max", sweep_d1}, {"d2_max", sweep_d2},       {"p_max", sweep_p},
                     {"y_max", sweep_y},   {"instances", s.instances}, {"multi", multi},
                     {"unexplained", unexplained}, {"consistent", unexplained == 0}};
            emit(doc, sweep_c, out);
            if (sweep_c.verbosity > 0)
                err << "bs-sweep: " << s.instances << " instances, " << s.multi.size() << " with >= 2 solutions, "
                    << unexplained << " unexplained\n";
            return verdict_code(unexplained == 0);
        };
    });

    // cohn
    Common cohn_c;
    int cohn_k = 0;
    auto* cohn = app.add_subcommand("cohn", "Perfect squares among Lucas numbers L_0..L_kmax");
    cohn->add_option("--kmax", cohn_k)->required()->check(CLI::NonNegativeNumber);
    add_common(cohn, cohn_c, {"json", "human"});
    cohn->callback([&] {
        action = [&] {
            auto squares = cohn_scan(cohn_k);
            std::vector<LucasSquare> expected;
            for (auto const& e : {LucasSquare{1, 1}, LucasSquare{3, 4}})
                if (e.k <= cohn_k)
                    expected.push_back(e);
            Json arr = Json::array();
            for (auto const& s : squares)
                arr.push_back(Json{{"k", s.k}, {"value", big(s.value)}});
            bool consistent = squares == expected;
            emit(Json{{"k_max", cohn_k}, {"squares", arr}, {"consistent", consistent}}, cohn_c, out);
            return verdict_code(consistent);
        };
    });

    // ljunggren
    Common lj_c;
    Int lj_x = 0, lj_n = 0;
    auto* lj = app.add_subcommand("ljunggren", "Squares of the form (x^n - 1)/(x - 1), n odd");
    lj->add_option("--xmax", lj_x)->required();
    lj->add_option("--nmax", lj_n)->required();
    add_common(lj, lj_c, {"json", "human"});
    lj->callback([&] {
        action = [&] {
            if (lj_x < 2 || lj_n < 3)
                throw std::invalid_argument("need --xmax >= 2 and --nmax >= 3");
            auto sols = ljunggren_scan(lj_x, lj_n);
            std::vector<RepunitSquare> expected;
            if (lj_x >= 3 && lj_n >= 5)
                expected.push_back({3, 5, 11});
            Json arr = Json::array();
            for (auto const& s : sols)
                arr.push_back(Json{{"x", s.x}, {"n", s.n}, {"y", big(s.y)}});
            bool consistent = sols == expected;
            emit(Json{{"x_max", lj_x}, {"n_max", lj_n}, {"solutions", arr}, {"consistent", consistent}}, lj_c, out);
            return verdict_code(consistent);
        };
    });

    // theorem4
    Common t4_c;
    Int t4_bound = 0;
    auto* t4 = app.add_subcommand("theorem4", "Divisibility of h(Q(sqrt(1 - p^n))) by n for p^n <= pnmax");
    t4->add_option("--pnmax", t4_bound)->required();
    add_common(t4, t4_c, {"json", "human"});
    t4->callback([&] {
        action = [&] {
            auto rows = unit_case_sweep(t4_bound);
            Json cases = Json::array();
            Json exceptions = Json::array();
            std::set<std::pair<Int, Int>> non_divisible;
            for (auto const& r : rows) {
                cases.push_back(Json{{"p", r.field.p},
                                     {"n", r.field.n},
                                     {"v", r.field.v},
                                     {"d", r.field.d},
                                     {"h", r.result.h},
                                     {"divisible", r.result.divisible}});
                if (!r.result.divisible) {
                    non_divisible.insert({r.field.p, r.field.n});
                    exceptions.push_back(Json::array({r.field.p, r.field.n}));
                }
            }
            std::set<std::pair<Int, Int>> expected;
            if (t4_bound >= 243)
                expected.insert({3, 5});
            bool consistent = non_divisible == expected;
            emit(Json{{"pn_max", t4_bound}, {"cases", cases}, {"non_divisible", exceptions}, {"consistent", consistent}},
                 t4_c, out);
            if (t4_c.verbosity > 0)
                err << "theorem4: " << rows.size() << " cases\n";
            return verdict_code(consistent);
        };
    });

    // scan-t2
    Common t2_c;
    Int t2_q = 0, t2_n = 0, t2_pmax = 0;
    auto* t2 = app.add_subcommand("scan-t2", "Primes p for which q = +-1 mod |d|");
    t2->add_option("--q", t2_q)->required();
    t2->add_option("--n", t2_n)->required();
    t2->add_option("--pmax", t2_pmax)->required();
    add_common(t2, t2_c, {"json", "human"});
    t2->callback([&] {
        action = [&] {
            StarFailureScan s = star_failure_scan(t2_q, t2_n, t2_pmax);
            Json failing = Json::array();
            for (auto const& f : s.failing)
                failing.push_back(Json{{"p", f.p}, {"v", f.v}, {"m", f.m}, {"d", f.d}});
            bool consistent = s.bound_holds();
            emit(Json{{"q", s.q},
                      {"n", s.n},
                      {"p_max", s.p_max},
                      {"cases", s.cases},
                      {"distinct_d", s.distinct_d},
                      {"failing", failing},
                      {"bound_holds", consistent},
                      {"consistent", consistent}},
                 t2_c, out);
            return verdict_code(consistent);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (CLI::Success const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        err << "qfdiv: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        return action();
    } catch (std::invalid_argument const& e) {
        err << "qfdiv: " << e.what() << '\n';
        return kUsageError;
    } catch (std::out_of_range const& e) {
        err << "qfdiv: " << e.what() << '\n';
        return kUsageError;
    } catch (std::overflow_error const& e) {
        err << "qfdiv: " << e.what() << '\n';
        return kUsageError;
    } catch (std::logic_error const& e) {
        err << "qfdiv: internal inconsistency: " << e.what() << '\n';
        return kTheoremViolation;
    }
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    std::vector<char const*> argv;
    argv.push_back("qfdiv");
    for (auto const& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qfdiv::cli
